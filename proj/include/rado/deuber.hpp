#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rado/columns.hpp"
#include "rado/matrix.hpp"

namespace rado {

/// Parameters of the generalized Deuber set
///   S(m,F;t) = union over j of { t_j + f_{j+1} t_{j+1} + ... + f_m t_m :
///                                f_i in F }.
struct SSetSpec {
    std::vector<Scalar> coeffs; // F, one common field
    std::vector<Scalar> t;      // length m, same field
};

/// Expands S(m,F;t) by direct enumeration, deduplicated and sorted.
/// Throws BudgetExceeded when more than `budget` elements would be
/// generated (sum over j of |F|^(m-j)).
std::vector<Scalar> s_set(const SSetSpec& spec, std::uint64_t budget = 1000000);

/// True iff the only f in F^I with sum f_i t_i = 0 is the all-zero tuple.
/// When 0 is not in F this demands that no combination vanishes at all.
/// Exhaustive over F^I; |F|^|I| must stay within `budget`.
bool is_f_independent(const std::vector<Scalar>& t, const std::vector<Scalar>& coeffs,
                      std::uint64_t budget = 10000000);

/// Kernel data extracted from a columns-condition witness. W is a q x d
/// block matrix with all-ones diagonal blocks; every x = W t satisfies
/// reduced * x = 0, and pushing x through lift_position gives a solution
/// of the original system whose coordinates all lie in S(d, F u {0,1}; t).
struct DeuberWitness {
    std::size_t d = 0;
    std::vector<Scalar> coefficient_set; // F: entries of the alpha blocks, deduplicated
    Matrix w;                            // q x d
    Matrix reduced;                      // the q-column reduced matrix with reduced * w = 0
    ColumnPartition merged_partition;    // partition of the original columns actually used
    std::vector<std::size_t> lift_position; // original column -> row index of w

    /// Solution of the original system obtained from x = W t.
    std::vector<Scalar> lift(const std::vector<Scalar>& t) const;
    /// x = W t itself (length q).
    std::vector<Scalar> kernel_vector(const std::vector<Scalar>& t) const;
};

/// Runs the reduction behind the witness: merges adjacent parts that do
/// not grow the span (keeping a trailing non-growing run as one extra
/// part, so d can reach rows+1), picks a column basis per merged part,
/// replaces the residual columns of each part by their sum (adding a zero
/// column when there are none), and solves for the alpha blocks of W by
/// reduced-row-echelon back-substitution with free variables set to zero.
/// The partition must verify; all witness identities are checked before
/// returning.
DeuberWitness deuber_witness(const Matrix& a, const ColumnPartition& partition);

/// A combinatorial line in words^dims over the alphabet {0..k-1}:
/// the k words that take a constant value on the coordinates in
/// variable_coords and equal z_template elsewhere.
struct HjLine {
    std::vector<std::size_t> variable_coords; // nonempty, sorted
    std::vector<int> z_template;              // length dims; entries on variable coords are 0
    int colour = 0;
    std::vector<std::size_t> word_indices;    // the k line words as lexicographic indices
};

/// Word (w_0,...,w_{dims-1}) -> its rank in lexicographic order, w_0 most
/// significant.
std::size_t hj_word_index(const std::vector<int>& word, int k);

/// Finds a monochromatic combinatorial line, or nullopt if none exists.
/// colouring[i] is the colour of the word with lexicographic index i.
/// Deterministic: variable sets are scanned in ascending bitmask order
/// (coordinate 0 = lowest bit) and templates lexicographically, and the
/// first monochromatic line wins. k^dims must stay within `budget`.
std::optional<HjLine> hj_line_search(int k, std::size_t dims, const std::vector<int>& colouring,
                                     std::uint64_t budget = 1000000);

} // namespace rado
