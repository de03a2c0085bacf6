// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion carries its runtime cap; exceeding the cap fails it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dpll.hpp"
#include "rado/columns.hpp"
#include "rado/deuber.hpp"
#include "rado/fourier.hpp"
#include "rado/numeric.hpp"
#include "rado/search.hpp"

using namespace rado;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

Matrix row_matrix(const std::vector<std::int64_t>& entries, const Field& f) {
    return Matrix::from_ints(1, entries.size(), entries, f);
}

// ---- criterion 1: columns condition golden set -----------------------------

void criterion1(Check& c) {
    c.require(check_columns_condition(row_matrix({1, 1, -1}, Field::rationals())).has_value(),
              "(1 1 -1) over Q");
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        c.require(check_columns_condition(row_matrix({1, 1, -1}, Field::mod(p))).has_value(),
                  "(1 1 -1) over F" + std::to_string(p));
        auto sp = static_cast<std::int64_t>(p);
        c.require(check_columns_condition(row_matrix({1, sp, -sp}, Field::rationals())).has_value(),
                  "(1 p -p) over Q, p=" + std::to_string(p));
        c.require(!check_columns_condition(row_matrix({1, sp, -sp}, Field::mod(p))).has_value(),
                  "(1 p -p) must fail over F" + std::to_string(p));
    }
    for (std::size_t k : {2, 3, 4, 5}) {
        auto wq = check_columns_condition(brauer_matrix(k, Field::rationals()));
        c.require(wq && verify_partition(brauer_matrix(k, Field::rationals()), *wq),
                  "brauer(" + std::to_string(k) + ") over Q");
        for (std::uint64_t p : {2, 3, 5, 7, 11}) {
            auto wp = check_columns_condition(brauer_matrix(k, Field::mod(p)));
            c.require(wp && verify_partition(brauer_matrix(k, Field::mod(p)), *wp),
                      "brauer(" + std::to_string(k) + ") over F" + std::to_string(p));
        }
    }
}

// ---- criterion 2: Schur / Rado values ---------------------------------------

void criterion2(Check& c) {
    c.require(rado_number({{1, 1, -1}}, 2).value == 4, "f(2) = 4");
    for (std::int64_t a : {1, 2, 3}) {
        auto t0 = std::chrono::steady_clock::now();
        RadoNumberResult res = rado_number({{a, 1, -1}}, 2);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.require(res.value == a * a + 3 * a,
                  "f_" + std::to_string(a) + "(2) = " + std::to_string(a * a + 3 * a) + " (got " +
                      std::to_string(res.value) + ")");
        if (a == 3) c.require(secs < 10.0, "a=3 runtime under 10 s");
    }
    auto t0 = std::chrono::steady_clock::now();
    RadoNumberResult f3 = rado_number({{1, 1, -1}}, 3);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(f3.value == 13, "f(3) = 13 (got " + std::to_string(f3.value) + ")");
    c.require(secs < 300.0, "r=3 runtime under 5 min");
    c.require(f3.certificate.has_value() &&
                  count_monochromatic(ConstraintSystem({{1, 1, -1}}, Domain::interval(13)),
                                      *f3.certificate) == 0,
              "f(3) certificate verifies");
    // independent route: the exported CNF of the N=14 instance is refuted
    // by a solver that shares nothing with the backtracker
    ConstraintSystem refuted({{1, 1, -1}}, Domain::interval(14));
    c.require(!testdpll::dimacs_satisfiable(export_cnf(refuted, 3)),
              "CNF route refutes N=14, r=3");
}

// ---- criterion 3: modular Schur --------------------------------------------

void criterion3(Check& c) {
    c.require(modular_schur_number(1, 2).value == 4, "h(2) = 4");

    ModularSchurResult h22 = modular_schur_number(2, 2);
    c.require(h22.value < 10, "h_2(2) < 10");

    // independent exhaustive refutation of all 2^10 colourings at N=10
    ConstraintSystem sys({{2, 1, -1}}, Domain::modular_star(11));
    auto tuples = enumerate_solutions(sys);
    int valid = 0;
    for (int mask = 0; mask < 1024; ++mask) {
        bool good = true;
        for (const auto& t : tuples) {
            int c0 = mask >> (t[0] - 1) & 1;
            if (c0 == (mask >> (t[1] - 1) & 1) && c0 == (mask >> (t[2] - 1) & 1)) {
                good = false;
                break;
            }
        }
        if (good) ++valid;
    }
    c.require(valid == 0, "all 1024 colourings at N=10 refuted (found " + std::to_string(valid) + ")");

    for (const auto& t : std::vector<std::vector<std::int64_t>>{
             {1, 1, 3}, {3, 3, 9}, {4, 1, 9}, {1, 10, 1}, {3, 4, 10}})
        c.require(std::find(tuples.begin(), tuples.end(), t) != tuples.end(),
                  "footnote triple missing");
}

// ---- criterion 4: counting identities ---------------------------------------

void criterion4(Check& c) {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 500; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 2047);
        int r = 1 + static_cast<int>(rng() % 8);
        std::int64_t a;
        do {
            a = 1 + static_cast<std::int64_t>(rng() % (n - 1));
        } while (gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(n)) != 1);
        std::vector<int> colouring(static_cast<std::size_t>(n));
        for (auto& col : colouring) col = static_cast<int>(rng() % static_cast<std::uint64_t>(r));
        TripleCountReport rep = count_monochromatic_triples(colouring, a);
        if (rep.method != "convolution" || rep.per_class_brute != rep.per_class_convolution) {
            c.require(false, "instance " + std::to_string(trial) + " (N=" + std::to_string(n) +
                                 ") disagreed");
            return;
        }
    }
    std::vector<int> singletons{0, 1, 2, 3, 4, 5, 6};
    c.require(count_monochromatic_triples(singletons, 3).total == 1,
              "all-singleton colouring of Z/7Z with a=3 has total 1");
}

// ---- criterion 5: Bohr suite -------------------------------------------------

void criterion5(Check& c) {
    std::mt19937_64 rng(424242);
    const std::int64_t mods[3] = {101, 1000, 4096};
    const double deltas[3] = {0.1, 0.5, 1.0};
    for (int trial = 0; trial < 100; ++trial) {
        std::int64_t n = mods[rng() % 3];
        double delta = deltas[rng() % 3];
        std::size_t d = 1 + rng() % 3;
        std::vector<std::int64_t> freqs;
        for (std::size_t i = 0; i < d; ++i)
            freqs.push_back(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n - 1)));
        BohrBoundsReport rep = bohr_bounds_check(n, freqs, delta);
        std::size_t dim = BohrSet(n, freqs, delta).frequencies.size();
        if (!rep.lower_ok) {
            c.require(false, "lower bound failed at N=" + std::to_string(n));
            return;
        }
        if (rep.doubling_ratio > std::pow(16.0, static_cast<double>(dim))) {
            c.require(false, "doubling bound failed at N=" + std::to_string(n));
            return;
        }
    }
    for (double eta : {0.1, 0.5}) {
        for (std::int64_t n : {101, 1000, 4096}) {
            std::vector<std::int64_t> freqs{3 % n, (n / 3) % n};
            RegularPairResult rp = regular_pair(n, freqs, 1.0, eta);
            // independent sumset verification from raw member lists
            auto star = bohr_members(BohrSet(n, freqs, rp.delta_star));
            auto prime = bohr_members(BohrSet(n, freqs, rp.delta_prime));
            std::vector<char> hit(static_cast<std::size_t>(n), 0);
            for (std::int64_t s : star)
                for (std::int64_t p : prime) hit[static_cast<std::size_t>((s + p) % n)] = 1;
            std::uint64_t sum = 0;
            for (char h : hit) sum += h;
            c.require(static_cast<double>(sum) <= (1.0 + eta) * static_cast<double>(star.size()) + 1e-9,
                      "sumset inequality at N=" + std::to_string(n) + ", eta=" + std::to_string(eta));
            c.require(std::includes(star.begin(), star.end(), prime.begin(), prime.end()),
                      "B(delta') inside B(delta*)");
        }
    }
}

// ---- criterion 6: Deuber chain ----------------------------------------------

void criterion6(Check& c) {
    {
        Matrix a = row_matrix({1, 1, -1}, Field::rationals());
        auto partition = check_columns_condition(a);
        c.require(partition.has_value(), "Schur matrix satisfies the condition");
        DeuberWitness w = deuber_witness(a, *partition);
        c.require(w.coefficient_set.size() <= (a.rows() + 1) * w.d * w.d, "|F| <= (k+1)d^2 over Q");
        std::vector<Scalar> chain = w.coefficient_set;
        chain.push_back(Scalar::zero(a.field()));
        chain.push_back(Scalar::one(a.field()));
        std::mt19937_64 rng(606);
        std::uniform_int_distribution<std::int64_t> num(-40, 40);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Scalar> t{Scalar::rational(make_rational(num(rng), 1 + (rng() % 9))),
                                  Scalar::rational(make_rational(num(rng), 1 + (rng() % 9)))};
            for (const Scalar& s : a.apply(w.lift(t)))
                c.require(s.is_zero(), "lift solves Ax=0 over Q");
            auto sset = s_set({chain, t});
            for (const Scalar& coord : w.kernel_vector(t))
                c.require(std::find(sset.begin(), sset.end(), coord) != sset.end(),
                          "coordinate in S(d, F u {0,1}; t) over Q");
            if (!c.ok) return;
        }
    }
    {
        Matrix a = brauer_matrix(3, Field::mod(7));
        auto partition = check_columns_condition(a);
        c.require(partition.has_value(), "brauer(3) satisfies the condition over F7");
        DeuberWitness w = deuber_witness(a, *partition);
        c.require(w.coefficient_set.size() <= (a.rows() + 1) * w.d * w.d, "|F| <= (k+1)d^2 over F7");
        std::vector<Scalar> chain = w.coefficient_set;
        chain.push_back(Scalar::zero(a.field()));
        chain.push_back(Scalar::one(a.field()));
        for (std::int64_t t1 = 0; t1 < 7; ++t1)
            for (std::int64_t t2 = 0; t2 < 7; ++t2) {
                std::vector<Scalar> t{Scalar::mod(t1, 7), Scalar::mod(t2, 7)};
                for (const Scalar& s : a.apply(w.lift(t)))
                    c.require(s.is_zero(), "lift solves Ax=0 over F7");
                auto sset = s_set({chain, t});
                for (const Scalar& coord : w.kernel_vector(t))
                    c.require(std::find(sset.begin(), sset.end(), coord) != sset.end(),
                              "coordinate in S over F7");
                if (!c.ok) return;
            }
    }
}

// ---- criterion 7: Hales-Jewett toy ------------------------------------------

void criterion7(Check& c) {
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> colouring(4);
        for (int i = 0; i < 4; ++i) colouring[static_cast<std::size_t>(i)] = mask >> i & 1;
        auto line = hj_line_search(2, 2, colouring);
        if (!line) {
            c.require(false, "no line for colouring mask " + std::to_string(mask));
            return;
        }
        c.require(!line->variable_coords.empty(), "W nonempty");
        for (std::size_t idx : line->word_indices)
            c.require(colouring[idx] == line->colour, "line monochromatic");
    }
}

// ---- criterion 8: stated desk-scale limits -----------------------------------

void criterion8(Check& c) {
    // Nothing to compute: f(5)=160 / h(5), the O_{n,r}(1) bound of the
    // n-row theorem, and the exp((2r)^{O(1)}) constant have no runnable
    // check at desk scale. The CNF export (criterion 2/3 machinery) is the
    // supported route to the large SAT computations. This criterion only
    // asserts that the limitation is what we expect it to be: the
    // ingredients are covered by criteria 1-7.
    c.require(true, "");
    c.detail << "not reproducible at desk scale by design: f(5)/h(5), O_{n,r}(1), exp((2r)^{O(1)})";
}

struct Criterion {
    int number;
    std::string name;
    double time_cap_s;
    std::function<void(Check&)> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "columns condition golden set", 1.0, criterion1},
        {2, "Schur and Rado numbers", 310.0, criterion2},
        {3, "modular Schur numbers and footnote refutation", 10.0, criterion3},
        {4, "counting identities (500 random instances)", 60.0, criterion4},
        {5, "Bohr size bounds and regular pairs", 120.0, criterion5},
        {6, "Deuber chain for Schur and Brauer matrices", 5.0, criterion6},
        {7, "Hales-Jewett toy: all 16 colourings", 1.0, criterion7},
        {8, "desk-scale limits stated", 1.0, criterion8},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= cr.time_cap_s)
            check.require(false, "runtime " + std::to_string(secs) + " s over cap");
        std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", check.ok ? "PASS" : "FAIL", cr.number,
                    cr.name.c_str(), secs, check.detail.str().empty() ? "" : " -- ",
                    check.detail.str().c_str());
        if (!check.ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
