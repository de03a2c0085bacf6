#include "rado/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <mutex>
#include <numbers>
#include <optional>
#include <set>

#include "rado/numeric.hpp"

namespace rado {

namespace {

std::mutex& fftw_plan_mutex() {
    static std::mutex m;
    return m;
}

std::vector<std::complex<double>> run_fftw(const std::vector<std::complex<double>>& f, int sign) {
    if (f.empty()) throw DimensionMismatch("empty transform input");
    std::vector<std::complex<double>> in = f, out(f.size());
    fftw_plan plan;
    {
        // plan creation/destruction is not thread-safe in FFTW
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(f.size()),
                                reinterpret_cast<fftw_complex*>(in.data()),
                                reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

} // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& f) {
    std::vector<std::complex<double>> out = run_fftw(f, FFTW_FORWARD);
    const double scale = 1.0 / static_cast<double>(f.size());
    for (auto& v : out) v *= scale;
    return out;
}

std::vector<std::complex<double>> inverse_dft(const std::vector<std::complex<double>>& g) {
    return run_fftw(g, FFTW_BACKWARD);
}

BohrSet::BohrSet(std::int64_t n, std::vector<std::int64_t> freqs, double delta)
    : modulus(n), frequencies(std::move(freqs)), width(delta) {
    if (n < 1) throw InputError("modulus must be >= 1");
    // widths beyond 2 are allowed and make the set all of Z/NZ, since
    // |<x,l>-1| <= 2 always
    if (!(delta > 0.0)) throw InputError("width must be positive");
    for (auto& f : frequencies) {
        f %= n;
        if (f < 0) f += n;
    }
    std::sort(frequencies.begin(), frequencies.end());
    frequencies.erase(std::unique(frequencies.begin(), frequencies.end()), frequencies.end());
}

namespace {

/// |<x,lambda> - 1| = 2 |sin(pi x lambda / N)|, evaluated on the reduced
/// residue for accuracy.
double character_distance(std::int64_t x, std::int64_t lambda, std::int64_t n) {
    std::uint64_t r = mulmod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(lambda),
                             static_cast<std::uint64_t>(n));
    std::uint64_t m = std::min(r, static_cast<std::uint64_t>(n) - r);
    return 2.0 * std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
}

std::vector<std::int64_t> members_with_width(std::int64_t n, const std::vector<std::int64_t>& freqs,
                                             double delta, std::uint64_t budget) {
    if (static_cast<std::uint64_t>(n) > budget) throw BudgetExceeded("Bohr enumeration too large");
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < n; ++x) {
        bool in = true;
        for (std::int64_t l : freqs)
            if (!(character_distance(x, l, n) < delta)) {
                in = false;
                break;
            }
        if (in) out.push_back(x);
    }
    return out;
}

} // namespace

std::vector<std::int64_t> bohr_members(const BohrSet& b, std::uint64_t budget) {
    return members_with_width(b.modulus, b.frequencies, b.width, budget);
}

BohrBoundsReport bohr_bounds_check(std::int64_t n, const std::vector<std::int64_t>& freqs,
                                   double delta, std::uint64_t budget) {
    BohrSet base(n, freqs, delta);
    BohrBoundsReport rep;
    rep.size_delta = bohr_members(base, budget).size();
    rep.size_double = members_with_width(n, base.frequencies, 2.0 * delta, budget).size();
    const auto d = static_cast<double>(base.frequencies.size());
    rep.lower_bound = std::pow(delta / (2.0 * std::numbers::pi), d);
    rep.lower_ok = static_cast<double>(rep.size_delta) / static_cast<double>(n) >= rep.lower_bound;
    rep.doubling_ratio = static_cast<double>(rep.size_double) / static_cast<double>(rep.size_delta);
    return rep;
}

RegularPairResult regular_pair(std::int64_t n, const std::vector<std::int64_t>& freqs, double delta,
                               double eta, std::uint64_t budget) {
    if (!(eta > 0.0) || eta > 1.0) throw InputError("eta must lie in (0, 1]");
    BohrSet base(n, freqs, delta);
    const std::size_t d = std::max<std::size_t>(base.frequencies.size(), 1);

    const double c_grow = std::log(16.0);
    const int k = static_cast<int>(std::ceil(c_grow / std::log1p(eta)));
    const double delta_prime = delta / (2.0 * k * static_cast<double>(d));

    std::vector<std::int64_t> prime_members =
        members_with_width(n, base.frequencies, delta_prime, budget);

    const int steps = k * static_cast<int>(d);
    for (int i = 0; i < steps; ++i) {
        const double delta_i = delta / 2 + i * delta_prime;
        std::vector<std::int64_t> star = members_with_width(n, base.frequencies, delta_i, budget);
        std::vector<std::int64_t> grown =
            members_with_width(n, base.frequencies, delta_i + delta_prime, budget);
        if (static_cast<double>(grown.size()) >
            (1.0 + eta) * static_cast<double>(star.size()) + 1e-9)
            continue;

        // direct verification: B(delta') subset of B(delta_star), and the
        // sumset inequality itself
        if (!std::includes(star.begin(), star.end(), prime_members.begin(), prime_members.end()))
            continue;
        if (static_cast<std::uint64_t>(star.size()) * prime_members.size() > budget * 100)
            throw BudgetExceeded("sumset verification too large");
        std::vector<char> hit(static_cast<std::size_t>(n), 0);
        for (std::int64_t s : star)
            for (std::int64_t p : prime_members)
                hit[static_cast<std::size_t>((s + p) % n)] = 1;
        std::uint64_t sumset = 0;
        for (char h : hit) sumset += h;
        if (static_cast<double>(sumset) > (1.0 + eta) * static_cast<double>(star.size()) + 1e-9)
            continue;

        RegularPairResult res;
        res.delta_star = delta_i;
        res.delta_prime = delta_prime;
        res.size_star = star.size();
        res.size_prime = prime_members.size();
        res.sumset_size = sumset;
        res.scan_index = i;
        return res;
    }
    throw ScanExhausted("no regular width found; doubling bound violated?");
}

namespace {

std::vector<std::uint64_t> autocorr_brute(const std::vector<std::int64_t>& cls, std::int64_t n) {
    std::vector<std::uint64_t> cnt(static_cast<std::size_t>(n), 0);
    for (std::int64_t y : cls)
        for (std::int64_t z : cls) {
            std::int64_t t = y - z;
            if (t < 0) t += n;
            ++cnt[static_cast<std::size_t>(t)];
        }
    return cnt;
}

/// Autocorrelation via the transform; empty optional when rounding
/// drifted past the 0.25 guard.
std::optional<std::vector<std::uint64_t>> autocorr_fft(const std::vector<std::int64_t>& cls,
                                                       std::int64_t n) {
    std::vector<std::complex<double>> ind(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t x : cls) ind[static_cast<std::size_t>(x)] = 1.0;
    std::vector<std::complex<double>> u = dft(ind);
    for (auto& v : u) v = std::norm(v);
    std::vector<std::complex<double>> c = inverse_dft(u);
    std::vector<std::uint64_t> cnt(static_cast<std::size_t>(n), 0);
    for (std::size_t t = 0; t < c.size(); ++t) {
        double real = c[t].real() * static_cast<double>(n);
        double rounded = std::round(real);
        if (std::abs(real - rounded) >= 0.25 || rounded < -0.5) return std::nullopt;
        cnt[t] = static_cast<std::uint64_t>(rounded);
    }
    return cnt;
}

std::uint64_t fold_count(const std::vector<std::int64_t>& cls, const std::vector<std::uint64_t>& corr,
                         std::int64_t a, std::int64_t n) {
    std::uint64_t total = 0;
    for (std::int64_t x : cls)
        total += corr[static_cast<std::size_t>(
            mulmod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(x),
                   static_cast<std::uint64_t>(n)))];
    return total;
}

} // namespace

TripleCountReport count_monochromatic_triples(const std::vector<int>& colouring, std::int64_t a,
                                              int threads) {
    const std::int64_t n = static_cast<std::int64_t>(colouring.size());
    if (n < 1) throw DimensionMismatch("colouring must cover Z/NZ");
    std::int64_t ared = a % n;
    if (ared < 0) ared += n;
    if (gcd_u64(static_cast<std::uint64_t>(ared), static_cast<std::uint64_t>(n)) != 1)
        throw NotCoprime("gcd(a, N) must be 1");

    int r = 0;
    for (int c : colouring) {
        if (c < 0) throw InputError("negative colour index");
        r = std::max(r, c + 1);
    }
    std::vector<std::vector<std::int64_t>> classes(static_cast<std::size_t>(r));
    for (std::int64_t x = 0; x < n; ++x)
        classes[static_cast<std::size_t>(colouring[static_cast<std::size_t>(x)])].push_back(x);

    struct ClassCount {
        std::uint64_t brute = 0;
        std::optional<std::uint64_t> conv;
    };
    auto count_class = [&](const std::vector<std::int64_t>& cls) {
        ClassCount cc;
        cc.brute = fold_count(cls, autocorr_brute(cls, n), ared, n);
        if (auto corr = autocorr_fft(cls, n)) cc.conv = fold_count(cls, *corr, ared, n);
        return cc;
    };

    std::vector<ClassCount> counts(classes.size());
    if (threads > 1 && classes.size() > 1) {
        std::vector<std::future<ClassCount>> futs;
        futs.reserve(classes.size());
        for (const auto& cls : classes)
            futs.push_back(std::async(std::launch::async, count_class, std::cref(cls)));
        for (std::size_t j = 0; j < futs.size(); ++j) counts[j] = futs[j].get();
    } else {
        for (std::size_t j = 0; j < classes.size(); ++j) counts[j] = count_class(classes[j]);
    }

    TripleCountReport rep;
    bool all_conv = true;
    for (const auto& cc : counts) {
        rep.per_class_brute.push_back(cc.brute);
        if (cc.conv) {
            rep.per_class_convolution.push_back(*cc.conv);
            if (*cc.conv != cc.brute)
                throw Error("internal: convolution and direct counts disagree");
        } else {
            all_conv = false;
        }
    }
    if (!all_conv) rep.per_class_convolution.clear();
    rep.method = all_conv ? "convolution" : "brute";
    rep.per_class = rep.per_class_brute;
    rep.total = 0;
    for (std::uint64_t c : rep.per_class) rep.total += c;
    return rep;
}

Spectrum large_spectrum(const std::vector<std::int64_t>& s, const std::vector<std::int64_t>& b0,
                        std::int64_t n, double eps) {
    if (n < 1) throw InputError("modulus must be >= 1");
    if (b0.empty()) throw EmptyBase("base set B0 is empty");
    if (!(eps > 0.0)) throw InputError("eps must be positive");

    std::set<std::int64_t> base, inter;
    for (std::int64_t x : b0) {
        if (x < 0 || x >= n) throw InputError("base residue out of range");
        base.insert(x);
    }
    for (std::int64_t x : s) {
        if (x < 0 || x >= n) throw InputError("set residue out of range");
        if (base.count(x)) inter.insert(x);
    }

    Spectrum out;
    out.eps = eps;
    out.base_size = base.size();
    out.density = static_cast<double>(inter.size()) / static_cast<double>(base.size());

    // (1_S d mu_B0)^(g) = (1/|B0|) sum_{x in S n B0} e^{-2 pi i x g / N}
    std::vector<std::complex<double>> f(static_cast<std::size_t>(n), 0.0);
    const double w = static_cast<double>(n) / static_cast<double>(base.size());
    for (std::int64_t x : inter) f[static_cast<std::size_t>(x)] = w;
    std::vector<std::complex<double>> coef = dft(f);

    const double threshold = eps * out.density;
    for (std::int64_t g = 0; g < n; ++g) {
        double mag = std::abs(coef[static_cast<std::size_t>(g)]);
        // tolerate transform rounding at the threshold boundary
        if (mag >= threshold * (1.0 - 1e-9) - 1e-12) out.frequencies.push_back(g);
    }
    out.parseval_bound = out.density > 0 ? 4.0 / (eps * eps * out.density) : -1.0;
    return out;
}

} // namespace rado
