#pragma once

#include <optional>
#include <vector>

#include "rado/matrix.hpp"

namespace rado {

/// Ordered partition P_1,...,P_d of the column indices of a matrix,
/// witnessing the columns condition: for every j the sum of the columns in
/// P_j lies in the span of all columns in P_1,...,P_{j-1} (the empty span
/// being {0}).
struct ColumnPartition {
    std::vector<std::vector<std::size_t>> parts; // each sorted ascending

    std::size_t size() const { return parts.size(); }
    bool operator==(const ColumnPartition&) const = default;
};

/// Checks that `p` is structurally a partition of the columns of `a` and
/// satisfies the witness property, verified through span_member.
bool verify_partition(const Matrix& a, const ColumnPartition& p);

/// Decides the columns condition over Q or a prime field by exhaustive
/// search over ordered set partitions, with spans memoized per column
/// subset. Candidate parts are tried in ascending bitmask order, so the
/// returned witness is deterministic. Columns beyond the exhaustive
/// budget (m > 10) are rejected unless the matrix has a single row, in
/// which case the subset-sum shortcut applies.
std::optional<ColumnPartition> check_columns_condition(const Matrix& a);

/// Single-row criterion: a 1 x m row satisfies the columns condition iff
/// all entries are zero, or some nonempty subset of the nonzero entries
/// sums to zero. The witness puts that subset plus all zero entries in
/// P_1 and the remaining columns in singleton parts. Runs in
/// O(2^{#nonzero}); at most 20 nonzero entries are accepted.
std::optional<ColumnPartition> single_row_condition(const std::vector<Scalar>& a);

/// The (k-1) x (k+1) matrix whose kernel contains every Brauer tuple
/// (x, x+c, ..., x+(k-1)c, c): row i has -1 in column 0, +1 in column i,
/// and -i in the last column.
Matrix brauer_matrix(std::size_t k, const Field& f);

/// Integer entries of brauer_matrix, row-major; used by the CLI to emit
/// matrix files.
std::vector<std::int64_t> brauer_entries(std::size_t k);

} // namespace rado
