#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "rado/scalar.hpp"

namespace rado {

/// Dense matrix of Scalars over one common field. Everything in scope is
/// tiny (rows, cols <= ~10), so no attempt is made at sparse storage.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Field& f);

    /// Row-major integer entries embedded into the field.
    static Matrix from_ints(std::size_t rows, std::size_t cols,
                            const std::vector<std::int64_t>& entries, const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    Scalar& at(std::size_t r, std::size_t c);

    std::vector<Scalar> column(std::size_t c) const;
    std::vector<Scalar> row(std::size_t r) const;

    /// Matrix * column vector.
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

    bool operator==(const Matrix& o) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
    Matrix reduced;
};

/// Reduced row-echelon form over Q or a prime field. Composite moduli are
/// rejected: Gaussian elimination needs inverses.
RrefResult rref(const Matrix& m);

/// True iff v lies in the linear span of the basis vectors. The empty
/// basis spans exactly {0}.
bool span_member(const std::vector<Scalar>& v,
                 const std::vector<std::vector<Scalar>>& basis, const Field& f);

/// Incremental echelon basis of a growing span; used by the partition
/// search so each candidate check is a single back-reduction.
class EchelonSpan {
public:
    EchelonSpan(std::size_t dim, const Field& f);

    /// Adds v to the span. Returns true if the rank grew.
    bool add(const std::vector<Scalar>& v);
    bool contains(const std::vector<Scalar>& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    std::size_t dim_;
    Field field_;
    std::vector<std::vector<Scalar>> rows_; // echelon rows, pivot normalized to 1
    std::vector<std::size_t> pivots_;
};

/// Sum of the selected columns of m (column indices need not be sorted).
std::vector<Scalar> column_sum(const Matrix& m, const std::vector<std::size_t>& cols);

} // namespace rado
