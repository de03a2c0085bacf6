#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rado/errors.hpp"

namespace rado {

/// Ground set of a colouring problem: {1..N} with integer arithmetic, or
/// the nonzero residues {1..M-1} with arithmetic mod M.
struct Domain {
    enum class Kind { Interval, ModularStar };
    Kind kind = Kind::Interval;
    std::int64_t bound = 1; // N for Interval, M for ModularStar

    static Domain interval(std::int64_t n);
    static Domain modular_star(std::int64_t m);

    /// Number of ground elements; the ground set is always {1..size()}.
    std::int64_t size() const { return kind == Kind::Interval ? bound : bound - 1; }
    std::string to_string() const;
};

/// An integer coefficient matrix together with the ground set over which
/// solutions of Ax = 0 are sought. All-zero columns are rejected: the
/// corresponding variable would be unconstrained.
struct ConstraintSystem {
    std::vector<std::vector<std::int64_t>> a; // n rows, m columns
    Domain domain;

    ConstraintSystem(std::vector<std::vector<std::int64_t>> rows, Domain d);
    std::size_t num_vars() const { return a.front().size(); }
};

/// Total colouring of a ground set; colours[e-1] is the colour of element e.
struct Colouring {
    Domain domain;
    int num_colours = 1;
    std::vector<int> colours;

    std::string to_certificate() const; // comma-separated, elements 1..size
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    double wall_ms = 0.0;
};

struct SearchOutcome {
    enum class Status { Sat, Unsat, Timeout };
    Status status = Status::Unsat;
    std::optional<Colouring> certificate; // present iff Sat
    SearchStats stats;
};

struct SearchLimits {
    std::uint64_t max_nodes = UINT64_MAX; // node budget for the backtracker
    double timeout_seconds = 0;           // 0 = unlimited
    std::uint64_t enumeration_budget = 100000000;
};

/// All tuples x in ground^m with Ax = 0 (exactly over Z, or mod M), in
/// lexicographic order without duplicates. The last coordinate is solved
/// rather than enumerated whenever a row makes that possible.
std::vector<std::vector<std::int64_t>> enumerate_solutions(const ConstraintSystem& sys,
                                                           std::uint64_t budget = 100000000);

/// Number of monochromatic solution tuples under the colouring; 0 means
/// the colouring is a valid certificate.
std::uint64_t count_monochromatic(const ConstraintSystem& sys, const Colouring& col,
                                  std::uint64_t budget = 100000000);

/// Backtracking decision procedure: is there an r-colouring of the ground
/// set with no monochromatic solution tuple? Elements are assigned in
/// ascending order; a colour is forbidden for the current element when
/// some solution tuple peaking at it is already monochromatic in that
/// colour below; colour symmetry is broken by allowing colour c only if
/// c <= 1 + max colour used so far. Sat certificates are re-verified
/// against a fresh enumeration before being returned; an exhausted budget
/// yields Timeout, never a wrong answer.
SearchOutcome valid_colouring_exists(const ConstraintSystem& sys, int r,
                                     const SearchLimits& limits = {});

struct RadoNumberResult {
    std::int64_t value = 0;                // the Rado number; 0 if no N admits a colouring
    std::optional<Colouring> certificate;  // valid colouring of [value]
    SearchStats sat_stats;                 // search at N = value
    SearchStats unsat_stats;               // refutation at N = value + 1
};

/// Largest N such that some r-colouring of {1..N} avoids monochromatic
/// solutions of Ax = 0; climbs N until the first Unsat (validity is
/// monotone on intervals). A Timeout at any N aborts with SearchTimeout,
/// never a wrong value. Systems that are never refuted (the matrix need
/// not be partition regular) hit n_cap and raise BudgetExceeded.
struct SearchTimeout : Error {
    using Error::Error;
};
RadoNumberResult rado_number(const std::vector<std::vector<std::int64_t>>& a, int r,
                             const SearchLimits& limits = {}, std::int64_t n_cap = 1000000);

struct ModularSchurOptions {
    bool require_coprime = false;          // restrict to N with gcd(a, N+1) = 1
    std::optional<std::int64_t> max_n;     // search cap; default is f_a(r)
};

struct ModularSchurResult {
    std::int64_t value = 0;                // h_a(r); 0 if no N works
    std::optional<Colouring> certificate;
    std::int64_t search_cap = 0;
    std::vector<std::int64_t> sat_values;  // every N in range that was Sat
    SearchStats total_stats;               // summed over all decided N
};

/// h_a(r): the largest N such that some r-colouring of {1..N} has no
/// monochromatic solution to ax + y = z mod N+1. Each N in 1..cap is
/// decided independently (validity is not monotone across moduli); the
/// default cap is f_a(r), justified by restriction: a modular certificate
/// for [N] is an integer certificate for [N].
ModularSchurResult modular_schur_number(std::int64_t a, int r,
                                        const ModularSchurOptions& opts = {},
                                        const SearchLimits& limits = {});

/// DIMACS CNF encoding of the colouring problem: variables v_{e,c} with
/// number (e-1)*r + c + 1, at-least-one and pairwise at-most-one clauses
/// per element, and for every solution support {x_1..x_s} (duplicate
/// coordinates collapsed, duplicate supports emitted once) and colour c
/// the clause ~v_{x_1,c} | ... | ~v_{x_s,c}. Satisfiable iff
/// valid_colouring_exists is Sat.
std::string export_cnf(const ConstraintSystem& sys, int r, std::uint64_t budget = 100000000);

} // namespace rado
