#include "rado/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "rado/numeric.hpp"

namespace rado {

Domain Domain::interval(std::int64_t n) {
    if (n < 1) throw InputError("interval bound must be >= 1");
    return Domain{Kind::Interval, n};
}

Domain Domain::modular_star(std::int64_t m) {
    if (m < 2) throw InputError("modulus must be >= 2");
    return Domain{Kind::ModularStar, m};
}

std::string Domain::to_string() const {
    return kind == Kind::Interval ? "interval:" + std::to_string(bound)
                                  : "modstar:" + std::to_string(bound);
}

ConstraintSystem::ConstraintSystem(std::vector<std::vector<std::int64_t>> rows, Domain d)
    : a(std::move(rows)), domain(d) {
    if (a.empty() || a.front().empty()) throw InputError("constraint matrix must be nonempty");
    const std::size_t m = a.front().size();
    if (m > 16) throw InputError("constraint matrices are limited to 16 columns");
    for (const auto& row : a) {
        if (row.size() != m) throw DimensionMismatch("ragged constraint matrix");
        for (std::int64_t v : row)
            // keeps partial sums inside int64 for any in-budget ground set
            if (v > 1000000000 || v < -1000000000)
                throw InputError("coefficients are limited to |a_ij| <= 10^9");
    }
    for (std::size_t c = 0; c < m; ++c) {
        bool nonzero = false;
        for (const auto& row : a) nonzero = nonzero || row[c] != 0;
        if (!nonzero) throw InputError("all-zero column " + std::to_string(c) + " in constraint matrix");
    }
}

std::string Colouring::to_certificate() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < colours.size(); ++i) {
        if (i) os << ',';
        os << colours[i];
    }
    return os.str();
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

/// Streams every solution tuple in lexicographic order. fn must return
/// true to continue enumeration.
template <typename Fn>
void for_each_solution(const ConstraintSystem& sys, std::uint64_t budget, Fn&& fn) {
    const std::size_t m = sys.num_vars();
    const std::size_t n = sys.a.size();
    const std::int64_t g = sys.domain.size();
    const bool modular = sys.domain.kind == Domain::Kind::ModularStar;
    const std::int64_t mod = modular ? sys.domain.bound : 0;

    // pick a row whose last coefficient can be inverted, so the last
    // coordinate is solved instead of enumerated
    std::size_t solve_row = n;
    std::int64_t solve_coeff = 0;
    for (std::size_t r = 0; r < n; ++r) {
        std::int64_t c = sys.a[r][m - 1];
        if (modular) {
            std::int64_t cr = mod_reduce(c, mod);
            if (cr != 0 && gcd_u64(static_cast<std::uint64_t>(cr), static_cast<std::uint64_t>(mod)) == 1) {
                solve_row = r;
                solve_coeff = cr;
                break;
            }
        } else if (c != 0) {
            solve_row = r;
            solve_coeff = c;
            break;
        }
    }

    std::uint64_t steps = 1;
    const std::size_t enumerated = solve_row < n ? m - 1 : m;
    for (std::size_t i = 0; i < enumerated; ++i) {
        if (steps > budget / static_cast<std::uint64_t>(g) + 1)
            throw BudgetExceeded("solution enumeration too large");
        steps *= static_cast<std::uint64_t>(g);
    }
    if (steps > budget) throw BudgetExceeded("solution enumeration too large");

    std::vector<std::int64_t> x(m, 1);
    std::vector<std::int64_t> partial(n, 0); // sum over the first `depth` coords
    bool stop = false;

    auto check_full = [&](std::int64_t last) {
        for (std::size_t r = 0; r < n; ++r) {
            std::int64_t s = partial[r] + sys.a[r][m - 1] * last;
            if (modular ? mod_reduce(s, mod) != 0 : s != 0) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (stop) return;
        if (depth == m - 1 && solve_row < n) {
            std::int64_t rhs = partial[solve_row];
            std::int64_t last;
            if (modular) {
                std::int64_t target = mod_reduce(-rhs, mod);
                last = static_cast<std::int64_t>(
                    mulmod(static_cast<std::uint64_t>(target),
                           invmod(static_cast<std::uint64_t>(solve_coeff), static_cast<std::uint64_t>(mod)),
                           static_cast<std::uint64_t>(mod)));
                if (last == 0) return; // 0 is not in the ground set
            } else {
                if (rhs % solve_coeff != 0) return;
                last = -rhs / solve_coeff;
                if (last < 1 || last > g) return;
            }
            if (check_full(last)) {
                x[m - 1] = last;
                if (!fn(const_cast<const std::vector<std::int64_t>&>(x))) stop = true;
            }
            return;
        }
        if (depth == m) {
            // reached only when no row could be solved; partial covers all coords
            for (std::size_t r = 0; r < n; ++r)
                if (modular ? mod_reduce(partial[r], mod) != 0 : partial[r] != 0) return;
            if (!fn(const_cast<const std::vector<std::int64_t>&>(x))) stop = true;
            return;
        }
        for (std::int64_t v = 1; v <= g && !stop; ++v) {
            x[depth] = v;
            for (std::size_t r = 0; r < n; ++r) partial[r] += sys.a[r][depth] * v;
            self(self, depth + 1);
            for (std::size_t r = 0; r < n; ++r) partial[r] -= sys.a[r][depth] * v;
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<std::vector<std::int64_t>> enumerate_solutions(const ConstraintSystem& sys,
                                                           std::uint64_t budget) {
    std::vector<std::vector<std::int64_t>> out;
    for_each_solution(sys, budget, [&](const std::vector<std::int64_t>& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

std::uint64_t count_monochromatic(const ConstraintSystem& sys, const Colouring& col,
                                  std::uint64_t budget) {
    if (col.colours.size() != static_cast<std::size_t>(sys.domain.size()))
        throw DimensionMismatch("colouring does not cover the ground set");
    std::uint64_t bad = 0;
    for_each_solution(sys, budget, [&](const std::vector<std::int64_t>& x) {
        int c = col.colours[static_cast<std::size_t>(x[0] - 1)];
        bool mono = true;
        for (std::int64_t e : x)
            if (col.colours[static_cast<std::size_t>(e - 1)] != c) {
                mono = false;
                break;
            }
        if (mono) ++bad;
        return true;
    });
    return bad;
}

SearchOutcome valid_colouring_exists(const ConstraintSystem& sys, int r, const SearchLimits& limits) {
    if (r < 1) throw InputError("number of colours must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };

    const std::size_t g = static_cast<std::size_t>(sys.domain.size());
    SearchStats stats;

    // supports of all solution tuples, grouped by their largest element
    std::vector<std::vector<std::vector<std::int64_t>>> by_max(g + 1);
    bool forced_unsat = false;
    for_each_solution(sys, limits.enumeration_budget, [&](const std::vector<std::int64_t>& x) {
        std::vector<std::int64_t> support = x;
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        if (support.size() == 1) forced_unsat = true; // x=y=...: monochromatic under any colouring
        by_max[static_cast<std::size_t>(support.back())].push_back(std::move(support));
        return true;
    });
    for (auto& bucket : by_max) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }

    SearchOutcome out;
    if (forced_unsat) {
        out.status = SearchOutcome::Status::Unsat;
        out.stats = stats;
        out.stats.wall_ms = elapsed_ms();
        return out;
    }

    std::vector<int> colour(g, -1);
    bool timed_out = false;

    auto deadline_hit = [&] {
        if (limits.timeout_seconds > 0 && (stats.nodes & 1023) == 0 &&
            elapsed_ms() > limits.timeout_seconds * 1000.0)
            return true;
        return stats.nodes > limits.max_nodes;
    };

    auto rec = [&](auto&& self, std::size_t idx, int max_used) -> bool {
        if (idx == g) return true;
        const int limit = std::min(r - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            ++stats.nodes;
            if (deadline_hit()) {
                timed_out = true;
                return false;
            }
            bool conflict = false;
            for (const auto& support : by_max[idx + 1]) {
                ++stats.propagations;
                bool mono = true;
                for (std::size_t i = 0; i + 1 < support.size(); ++i)
                    if (colour[static_cast<std::size_t>(support[i] - 1)] != c) {
                        mono = false;
                        break;
                    }
                if (mono) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            colour[idx] = c;
            if (self(self, idx + 1, std::max(max_used, c))) return true;
            colour[idx] = -1;
            if (timed_out) return false;
        }
        return false;
    };

    bool found = rec(rec, 0, -1);
    out.stats = stats;
    out.stats.wall_ms = elapsed_ms();
    if (timed_out) {
        out.status = SearchOutcome::Status::Timeout;
        return out;
    }
    if (!found) {
        out.status = SearchOutcome::Status::Unsat;
        return out;
    }
    Colouring cert{sys.domain, r, colour};
    if (count_monochromatic(sys, cert, limits.enumeration_budget) != 0)
        throw Error("internal: certificate failed re-verification");
    out.status = SearchOutcome::Status::Sat;
    out.certificate = std::move(cert);
    return out;
}

RadoNumberResult rado_number(const std::vector<std::vector<std::int64_t>>& a, int r,
                             const SearchLimits& limits, std::int64_t n_cap) {
    RadoNumberResult res;
    for (std::int64_t n = 1; n <= n_cap; ++n) {
        ConstraintSystem sys(a, Domain::interval(n));
        SearchOutcome outcome = valid_colouring_exists(sys, r, limits);
        if (outcome.status == SearchOutcome::Status::Timeout)
            throw SearchTimeout("search budget exhausted at N=" + std::to_string(n));
        if (outcome.status == SearchOutcome::Status::Unsat) {
            res.value = n - 1;
            res.unsat_stats = outcome.stats;
            return res;
        }
        res.value = n;
        res.certificate = std::move(outcome.certificate);
        res.sat_stats = outcome.stats;
    }
    throw BudgetExceeded("no Unsat found up to N=" + std::to_string(n_cap) +
                         "; the system may be unconditionally colourable");
}

ModularSchurResult modular_schur_number(std::int64_t a, int r, const ModularSchurOptions& opts,
                                        const SearchLimits& limits) {
    if (a < 1) throw InputError("coefficient a must be >= 1");
    ModularSchurResult res;
    res.search_cap = opts.max_n ? *opts.max_n
                                : rado_number({{a, 1, -1}}, r, limits).value;
    for (std::int64_t n = 1; n <= res.search_cap; ++n) {
        if (opts.require_coprime &&
            gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(n + 1)) != 1)
            continue;
        ConstraintSystem sys({{a, 1, -1}}, Domain::modular_star(n + 1));
        SearchOutcome outcome = valid_colouring_exists(sys, r, limits);
        res.total_stats.nodes += outcome.stats.nodes;
        res.total_stats.propagations += outcome.stats.propagations;
        res.total_stats.wall_ms += outcome.stats.wall_ms;
        if (outcome.status == SearchOutcome::Status::Timeout)
            throw SearchTimeout("search budget exhausted at N=" + std::to_string(n));
        if (outcome.status == SearchOutcome::Status::Sat) {
            res.value = n;
            res.certificate = std::move(outcome.certificate);
            res.sat_values.push_back(n);
        }
    }
    return res;
}

std::string export_cnf(const ConstraintSystem& sys, int r, std::uint64_t budget) {
    if (r < 1) throw InputError("number of colours must be >= 1");
    const std::int64_t g = sys.domain.size();

    std::set<std::vector<std::int64_t>> supports;
    for_each_solution(sys, budget, [&](const std::vector<std::int64_t>& x) {
        std::vector<std::int64_t> s = x;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        supports.insert(std::move(s));
        return true;
    });

    auto var = [&](std::int64_t e, int c) { return (e - 1) * r + c + 1; };
    const std::uint64_t nvars = static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(r);
    const std::uint64_t nclauses = static_cast<std::uint64_t>(g) +
                                   static_cast<std::uint64_t>(g) * r * (r - 1) / 2 +
                                   supports.size() * static_cast<std::uint64_t>(r);

    std::ostringstream os;
    os << "c monochromatic-solution avoidance instance\n";
    os << "c domain " << sys.domain.to_string() << " colours " << r << "\n";
    for (const auto& row : sys.a) {
        os << "c matrix-row";
        for (std::int64_t v : row) os << ' ' << v;
        os << "\n";
    }
    os << "c var(e,c) = (e-1)*r + c + 1 for element e in 1.." << g << ", colour c in 0.." << r - 1
       << "\n";
    os << "p cnf " << nvars << ' ' << nclauses << "\n";
    for (std::int64_t e = 1; e <= g; ++e) {
        for (int c = 0; c < r; ++c) os << var(e, c) << ' ';
        os << "0\n";
    }
    for (std::int64_t e = 1; e <= g; ++e)
        for (int c = 0; c < r; ++c)
            for (int c2 = c + 1; c2 < r; ++c2) os << -var(e, c) << ' ' << -var(e, c2) << " 0\n";
    for (const auto& s : supports)
        for (int c = 0; c < r; ++c) {
            for (std::int64_t e : s) os << -var(e, c) << ' ';
            os << "0\n";
        }
    return os.str();
}

} // namespace rado
