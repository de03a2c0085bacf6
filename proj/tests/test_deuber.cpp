#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rado/deuber.hpp"

using namespace rado;

namespace {

std::vector<Scalar> mods(std::initializer_list<std::int64_t> vs, std::uint64_t p) {
    std::vector<Scalar> out;
    for (auto v : vs) out.push_back(Scalar::mod(v, p));
    return out;
}

std::vector<Scalar> rats(std::initializer_list<std::int64_t> vs) {
    std::vector<Scalar> out;
    for (auto v : vs) out.push_back(Scalar::from_int(v, Field::rationals()));
    return out;
}

bool contains(const std::vector<Scalar>& set, const Scalar& v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

/// Test-side oracle: re-derive every claimed S-set element from the
/// defining sum by brute force over f-vectors.
bool sset_element_witnessed(const SSetSpec& spec, const Scalar& v) {
    const std::size_t m = spec.t.size();
    std::vector<Scalar> coeffs = spec.coeffs;
    std::sort(coeffs.begin(), coeffs.end());
    coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t tail = m - 1 - j;
        std::vector<std::size_t> odo(tail, 0);
        if (coeffs.empty() && tail > 0) continue;
        while (true) {
            Scalar sum = spec.t[j];
            for (std::size_t i = 0; i < tail; ++i) sum += coeffs[odo[i]] * spec.t[j + 1 + i];
            if (sum == v) return true;
            std::size_t i = tail;
            while (i > 0 && odo[i - 1] + 1 == coeffs.size()) odo[--i] = 0;
            if (i == 0) break;
            ++odo[i - 1];
        }
    }
    return false;
}

} // namespace

TEST_CASE("s_set: singleton for m=1") {
    auto out = s_set({mods({0, 1, 3}, 11), mods({5}, 11)});
    CHECK(out == mods({5}, 11));
}

TEST_CASE("s_set: direct expansion for m=2, F={0,1}, t=(1,2) over F_7") {
    auto out = s_set({mods({0, 1}, 7), mods({1, 2}, 7)});
    CHECK(out == mods({1, 2, 3}, 7));
}

TEST_CASE("s_set: with 0 in F every t_j appears") {
    SSetSpec spec{mods({0, 2, 5}, 13), mods({3, 7, 11}, 13)};
    auto out = s_set(spec);
    for (const Scalar& tj : spec.t) CHECK(contains(out, tj));
}

TEST_CASE("s_set size bound and element re-verification") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t p = 11;
        std::size_t m = 1 + rng() % 3;
        std::size_t fs = 1 + rng() % 3;
        std::vector<Scalar> coeffs, t;
        for (std::size_t i = 0; i < fs; ++i) coeffs.push_back(Scalar::mod(static_cast<std::int64_t>(rng() % p), p));
        for (std::size_t i = 0; i < m; ++i) t.push_back(Scalar::mod(static_cast<std::int64_t>(rng() % p), p));
        SSetSpec spec{coeffs, t};
        auto out = s_set(spec);
        std::set<std::uint64_t> dedup;
        for (const auto& c : coeffs) dedup.insert(c.residue());
        std::size_t bound = m;
        for (std::size_t i = 0; i + 1 < m; ++i) bound *= dedup.size();
        CHECK(out.size() <= bound);
        for (const Scalar& v : out) CHECK(sset_element_witnessed(spec, v));
    }
}

TEST_CASE("s_set budget") {
    std::vector<Scalar> big;
    for (int i = 0; i < 50; ++i) big.push_back(Scalar::mod(i, 101));
    std::vector<Scalar> t;
    for (int i = 0; i < 6; ++i) t.push_back(Scalar::mod(i + 1, 101));
    CHECK_THROWS_AS(s_set({big, t}, 1000), BudgetExceeded);
}

TEST_CASE("F-independence respects its budget") {
    std::vector<Scalar> coeffs, t;
    for (int i = 0; i < 10; ++i) coeffs.push_back(Scalar::mod(i, 101));
    for (int i = 0; i < 9; ++i) t.push_back(Scalar::mod(i + 1, 101));
    CHECK_THROWS_AS(is_f_independent(t, coeffs, 1000), BudgetExceeded);
}

TEST_CASE("F-independence: worked examples") {
    CHECK(is_f_independent(mods({1}, 5), mods({0, 1}, 5)));
    CHECK_FALSE(is_f_independent(mods({1, 1}, 2), mods({0, 1}, 2)));
    // 1*1 + 2*3 = 7 = 0 mod 7
    CHECK_FALSE(is_f_independent(mods({1, 3}, 7), mods({0, 1, 2}, 7)));
}

TEST_CASE("F-independence without 0 in F demands no vanishing combination at all") {
    // f=(1,1): 2+3 = 5 = 0 mod 5, so not independent even though f has no zero entries
    CHECK_FALSE(is_f_independent(mods({2, 3}, 5), mods({1}, 5)));
    CHECK(is_f_independent(mods({1, 3}, 5), mods({1}, 5)));
}

TEST_CASE("random tuples are F-independent with the expected frequency") {
    const std::uint64_t p = 2147483647; // prime
    std::vector<Scalar> coeffs = mods({0, 1, 2}, p);
    std::mt19937_64 rng(2024);
    const int trials = 1000;
    int independent = 0;
    for (int i = 0; i < trials; ++i) {
        std::vector<Scalar> t;
        for (int j = 0; j < 4; ++j) t.push_back(Scalar::mod(static_cast<std::int64_t>(rng() % p), p));
        if (is_f_independent(t, coeffs)) ++independent;
    }
    const double bound = 81.0 / static_cast<double>(p); // |F|^|I| / p
    CHECK(static_cast<double>(independent) / trials >= 1.0 - bound);
}

TEST_CASE("deuber witness for the Schur matrix over Q") {
    Matrix a = Matrix::from_ints(1, 3, {1, 1, -1}, Field::rationals());
    auto partition = check_columns_condition(a);
    REQUIRE(partition.has_value());
    DeuberWitness w = deuber_witness(a, *partition);
    CHECK(w.d == 2);
    CHECK(w.coefficient_set == rats({-1, 0}));
    CHECK(w.coefficient_set.size() <= (a.rows() + 1) * w.d * w.d);

    std::vector<Scalar> chain_coeffs = w.coefficient_set;
    chain_coeffs.push_back(Scalar::from_int(0, Field::rationals()));
    chain_coeffs.push_back(Scalar::from_int(1, Field::rationals()));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> num(-30, 30);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Scalar> t{Scalar::rational(make_rational(num(rng), 1 + (rng() % 7))),
                              Scalar::rational(make_rational(num(rng), 1 + (rng() % 7)))};
        // reduced * (W t) = 0
        for (const Scalar& s : w.reduced.apply(w.kernel_vector(t))) CHECK(s.is_zero());
        // the lift solves the original system
        for (const Scalar& s : a.apply(w.lift(t))) CHECK(s.is_zero());
        // every kernel coordinate lies in S(d, F u {0,1}; t)
        auto sset = s_set({chain_coeffs, t});
        for (const Scalar& coord : w.kernel_vector(t)) CHECK(contains(sset, coord));
    }
}

TEST_CASE("deuber witness for brauer(3) over F_7, exhaustive over 49 generators") {
    Matrix a = brauer_matrix(3, Field::mod(7));
    auto partition = check_columns_condition(a);
    REQUIRE(partition.has_value());
    DeuberWitness w = deuber_witness(a, *partition);
    CHECK(w.d == 2);
    CHECK(w.coefficient_set.size() <= (a.rows() + 1) * w.d * w.d);

    std::vector<Scalar> chain_coeffs = w.coefficient_set;
    chain_coeffs.push_back(Scalar::mod(0, 7));
    chain_coeffs.push_back(Scalar::mod(1, 7));

    for (std::int64_t t1 = 0; t1 < 7; ++t1)
        for (std::int64_t t2 = 0; t2 < 7; ++t2) {
            std::vector<Scalar> t{Scalar::mod(t1, 7), Scalar::mod(t2, 7)};
            for (const Scalar& s : a.apply(w.lift(t))) CHECK(s.is_zero());
            auto sset = s_set({chain_coeffs, t});
            for (const Scalar& coord : w.kernel_vector(t)) CHECK(contains(sset, coord));
        }
}

TEST_CASE("deuber witness rejects invalid partitions") {
    Matrix a = Matrix::from_ints(1, 3, {1, 1, -1}, Field::rationals());
    CHECK_THROWS_AS(deuber_witness(a, ColumnPartition{{{0}, {1}, {2}}}), InvalidWitness);
    CHECK_THROWS_AS(deuber_witness(a, ColumnPartition{{{0, 2}}}), InvalidWitness);
}

TEST_CASE("deuber witness for the zero matrix") {
    Matrix a = Matrix::from_ints(2, 2, {0, 0, 0, 0}, Field::mod(5));
    auto partition = check_columns_condition(a);
    REQUIRE(partition.has_value());
    DeuberWitness w = deuber_witness(a, *partition);
    CHECK(w.d == 1);
    CHECK(w.coefficient_set.empty());
    std::vector<Scalar> t{Scalar::mod(3, 5)};
    CHECK(w.lift(t) == mods({3, 3}, 5));
}

TEST_CASE("deuber witness identities on random satisfying matrices") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::int64_t> entry(-3, 3);
    const Field fields[3] = {Field::rationals(), Field::mod(5), Field::mod(11)};
    int built = 0;
    for (int trial = 0; trial < 600 && built < 80; ++trial) {
        std::size_t n = 1 + rng() % 3, m = 2 + rng() % 5;
        std::vector<std::int64_t> entries(n * m);
        for (auto& e : entries) e = entry(rng);
        Field f = fields[trial % 3];
        Matrix a = Matrix::from_ints(n, m, entries, f);
        auto partition = check_columns_condition(a);
        if (!partition) continue;
        ++built;
        DeuberWitness w = deuber_witness(a, *partition);
        CHECK(w.d <= a.rows() + 1); // trailing non-growing run may add one part
        std::vector<Scalar> chain_coeffs = w.coefficient_set;
        chain_coeffs.push_back(Scalar::zero(f));
        chain_coeffs.push_back(Scalar::one(f));
        for (int inner = 0; inner < 5; ++inner) {
            std::vector<Scalar> t;
            for (std::size_t i = 0; i < w.d; ++i) t.push_back(Scalar::from_int(entry(rng), f));
            for (const Scalar& s : a.apply(w.lift(t))) CHECK(s.is_zero());
            auto sset = s_set({chain_coeffs, t});
            for (const Scalar& coord : w.kernel_vector(t)) CHECK(contains(sset, coord));
        }
    }
    CHECK(built >= 40);
}

namespace {

/// Brute-force line oracle: every combinatorial line of words^dims.
std::vector<std::vector<std::size_t>> all_lines(int k, std::size_t dims) {
    std::vector<std::vector<std::size_t>> lines;
    std::vector<int> word(dims, 0);
    for (std::uint32_t wmask = 1; wmask < (1u << dims); ++wmask) {
        std::vector<std::size_t> fixed;
        for (std::size_t i = 0; i < dims; ++i)
            if (!(wmask >> i & 1)) fixed.push_back(i);
        std::vector<int> z(fixed.size(), 0);
        while (true) {
            std::vector<std::size_t> line;
            for (int a = 0; a < k; ++a) {
                for (std::size_t i = 0; i < dims; ++i) word[i] = (wmask >> i & 1) ? a : 0;
                for (std::size_t i = 0; i < fixed.size(); ++i) word[fixed[i]] = z[i];
                line.push_back(hj_word_index(word, k));
            }
            lines.push_back(line);
            std::size_t i = fixed.size();
            while (i > 0 && z[i - 1] + 1 == k) z[--i] = 0;
            if (i == 0) break;
            ++z[i - 1];
        }
    }
    return lines;
}

} // namespace

TEST_CASE("hj: constant colouring returns the first-coordinate line") {
    std::vector<int> constant(4, 0);
    auto line = hj_line_search(2, 2, constant);
    REQUIRE(line.has_value());
    CHECK(line->variable_coords == std::vector<std::size_t>{0});
    CHECK(line->colour == 0);
}

TEST_CASE("hj: k=2, one coordinate, distinct colours has no line") {
    CHECK_FALSE(hj_line_search(2, 1, {0, 1}).has_value());
}

TEST_CASE("hj: every 2-colouring of the 4 words of {0,1}^2 has a line") {
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> colouring(4);
        for (int i = 0; i < 4; ++i) colouring[static_cast<std::size_t>(i)] = mask >> i & 1;
        auto line = hj_line_search(2, 2, colouring);
        REQUIRE(line.has_value());
        CHECK_FALSE(line->variable_coords.empty());
        for (std::size_t idx : line->word_indices)
            CHECK(colouring[idx] == line->colour);
    }
}

TEST_CASE("hj: found lines are monochromatic, None means no line exists") {
    std::mt19937_64 rng(13);
    auto lines22 = all_lines(2, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> colouring(8);
        for (auto& c : colouring) c = static_cast<int>(rng() % 2);
        auto found = hj_line_search(2, 3, colouring);
        bool exists = false;
        for (const auto& line : lines22) {
            bool mono = true;
            for (std::size_t idx : line)
                if (colouring[idx] != colouring[line[0]]) mono = false;
            exists = exists || mono;
        }
        CHECK(found.has_value() == exists);
        if (found) {
            CHECK_FALSE(found->variable_coords.empty());
            for (std::size_t idx : found->word_indices) CHECK(colouring[idx] == found->colour);
        }
    }
}

TEST_CASE("hj input validation") {
    CHECK_THROWS_AS(hj_line_search(2, 2, {0, 1, 0}), DimensionMismatch);
    CHECK_THROWS_AS(hj_line_search(30, 20, {}, 1000000), BudgetExceeded);
}
