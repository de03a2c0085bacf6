#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rado/errors.hpp"

namespace rado {

/// Discrete Fourier analysis on Z/NZ with the probability-measure
/// normalization
///
///   f^(g) = (1/N) * sum_x f(x) e^{-2 pi i x g / N},
///
/// so that constants transform to point masses and Parseval reads
/// sum_g |f^(g)|^2 = (1/N) sum_x |f(x)|^2. The dual group is identified
/// with Z/NZ through the pairing <x,g> = e^{2 pi i x g / N}.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& f);

/// Inversion: g |-> sum_g g(gamma) e^{+2 pi i x gamma / N} (unnormalized),
/// so inverse_dft(dft(f)) == f.
std::vector<std::complex<double>> inverse_dft(const std::vector<std::complex<double>>& g);

/// Bohr set B(Lambda, delta) = { x : |<x,lambda> - 1| < delta for all
/// lambda in Lambda }. Contains 0, is symmetric, and shrinks as Lambda
/// grows or delta falls.
struct BohrSet {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> frequencies; // residues mod modulus
    double width = 1.0;                    // positive; > 2 means the whole group

    BohrSet(std::int64_t n, std::vector<std::int64_t> freqs, double delta);
};

/// Exact member list under the strict inequality of the definition.
/// |e^{i theta} - 1| can equal delta exactly on rational angles; such
/// boundary points are excluded, matching the strict '<'.
std::vector<std::int64_t> bohr_members(const BohrSet& b, std::uint64_t budget = 10000000);

struct BohrBoundsReport {
    bool lower_ok = false;      // mu(B(L,delta)) >= (delta/2pi)^d
    double doubling_ratio = 0;  // mu(B(L,2delta)) / mu(B(L,delta))
    double lower_bound = 0;     // (delta/2pi)^d
    std::uint64_t size_delta = 0;
    std::uint64_t size_double = 0;
};

/// Measures the two explicit estimates behind the Bohr-set size lemma:
/// the (delta/2pi)^d lower bound and the 16^d doubling bound. The caller
/// asserts doubling_ratio <= 16^d; this function only reports it.
BohrBoundsReport bohr_bounds_check(std::int64_t n, const std::vector<std::int64_t>& freqs,
                                   double delta, std::uint64_t budget = 10000000);

struct RegularPairResult {
    double delta_star = 0;
    double delta_prime = 0;
    std::uint64_t size_star = 0;
    std::uint64_t size_prime = 0;
    std::uint64_t sumset_size = 0;
    int scan_index = 0; // which delta_i was accepted
};

/// Regular pair of widths, following the averaging proof: with C = log 16
/// (the explicit doubling constant), k is the least integer with
/// exp(C/k) <= 1 + eta, delta' = delta/(2kd), and delta_i = delta/2 +
/// i*delta' is scanned for the first width whose (1+eta)-growth and
/// direct sumset check
///
///   mu(B(L,delta_i) + B(L,delta')) <= (1+eta) mu(B(L,delta_i))
///
/// both pass. The pigeonhole argument guarantees a hit; running out of
/// scan indices raises ScanExhausted (an internal-consistency failure).
RegularPairResult regular_pair(std::int64_t n, const std::vector<std::int64_t>& freqs,
                               double delta, double eta, std::uint64_t budget = 10000000);

/// Counts of monochromatic triples (x,y,z) in each colour class with
/// a*x = y - z mod N. Every class is counted twice: by the O(N^2)
/// difference table and through the FFT autocorrelation with
/// nearest-integer rounding (asserted error < 0.25, with fallback to the
/// direct table on violation). Both are reported and must agree.
struct TripleCountReport {
    std::vector<std::uint64_t> per_class;             // agreed counts
    std::vector<std::uint64_t> per_class_brute;
    std::vector<std::uint64_t> per_class_convolution; // empty on fallback
    std::uint64_t total = 0;
    std::string method; // "convolution" or "brute"
};

/// colouring[x] is the colour of residue x, 0-based and contiguous;
/// the whole of Z/NZ must be coloured (0 included). Requires
/// gcd(a, N) = 1 so that x -> a*x is an automorphism. `threads` > 1
/// spreads classes over that many workers; results are identical for
/// any thread count.
TripleCountReport count_monochromatic_triples(const std::vector<int>& colouring, std::int64_t a,
                                              int threads = 1);

/// Large spectrum of S against the uniform measure on B0:
/// Delta = { g : |(1_S d mu_B0)^(g)| >= eps * mu_B0(S) }, with S first
/// intersected with B0. The trivial character is always present when the
/// intersection is nonempty and eps <= 1. |Delta| is reported next to the
/// Parseval-style estimate 4 eps^-2 / mu_B0(S); that bound constrains an
/// orthogonal subfamily rather than the full threshold set, so it is
/// reported, not asserted.
struct Spectrum {
    double eps = 0;
    std::uint64_t base_size = 0;
    double density = 0; // mu_B0(S n B0)
    std::vector<std::int64_t> frequencies;
    double parseval_bound = 0; // 4 / (eps^2 * density); -1 when density is 0
};

Spectrum large_spectrum(const std::vector<std::int64_t>& s, const std::vector<std::int64_t>& b0,
                        std::int64_t n, double eps);

} // namespace rado
