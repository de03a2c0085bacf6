#include "rado/matrix.hpp"

#include <ostream>
#include <sstream>

namespace rado {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

Matrix Matrix::from_ints(std::size_t rows, std::size_t cols,
                         const std::vector<std::int64_t>& entries, const Field& f) {
    if (entries.size() != rows * cols)
        throw DimensionMismatch("entry count does not match matrix shape");
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < entries.size(); ++i) m.a_[i] = Scalar::from_int(entries[i], f);
    return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    return a_.at(r * cols_ + c);
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
    return a_.at(r * cols_ + c);
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    std::vector<Scalar> v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw DimensionMismatch("vector length != column count");
    std::vector<Scalar> y(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
    return y;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    return os << m.to_string();
}

namespace {

void require_field(const Field& f) {
    if (f.is_mod() && !f.is_field())
        throw CompositeModulus("modulus " + std::to_string(f.modulus) + " is not prime");
}

} // namespace

RrefResult rref(const Matrix& m) {
    require_field(m.field());
    Matrix red = m;
    const std::size_t nr = red.rows(), nc = red.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t sel = row;
        while (sel < nr && red.at(sel, col).is_zero()) ++sel;
        if (sel == nr) continue;
        for (std::size_t c = 0; c < nc; ++c) std::swap(red.at(row, c), red.at(sel, c));
        Scalar inv = red.at(row, col).inverse();
        for (std::size_t c = col; c < nc; ++c) red.at(row, c) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || red.at(r, col).is_zero()) continue;
            Scalar factor = red.at(r, col);
            for (std::size_t c = col; c < nc; ++c) red.at(r, c) -= factor * red.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{pivots.size(), std::move(pivots), std::move(red)};
}

EchelonSpan::EchelonSpan(std::size_t dim, const Field& f) : dim_(dim), field_(f) {
    require_field(f);
}

std::vector<Scalar> EchelonSpan::reduce(std::vector<Scalar> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& coeff = v[pivots_[i]];
        if (coeff.is_zero()) continue;
        Scalar factor = coeff; // pivot entries are normalized to 1
        for (std::size_t c = pivots_[i]; c < dim_; ++c) v[c] -= factor * rows_[i][c];
    }
    return v;
}

bool EchelonSpan::add(const std::vector<Scalar>& v) {
    if (v.size() != dim_) throw DimensionMismatch("vector length != span dimension");
    std::vector<Scalar> r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return false;
    Scalar inv = r[p].inverse();
    for (std::size_t c = p; c < dim_; ++c) r[c] *= inv;
    // keep rows sorted by pivot so reduce() stays a single sweep
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

bool EchelonSpan::contains(const std::vector<Scalar>& v) const {
    if (v.size() != dim_) throw DimensionMismatch("vector length != span dimension");
    std::vector<Scalar> r = reduce(v);
    for (const Scalar& s : r)
        if (!s.is_zero()) return false;
    return true;
}

bool span_member(const std::vector<Scalar>& v,
                 const std::vector<std::vector<Scalar>>& basis, const Field& f) {
    EchelonSpan span(v.size(), f);
    for (const auto& b : basis) {
        if (b.size() != v.size()) throw DimensionMismatch("basis vector length != query length");
        for (const auto& s : b)
            if (s.field() != f) throw FieldMismatch("basis vector over wrong field");
        span.add(b);
    }
    for (const auto& s : v)
        if (s.field() != f) throw FieldMismatch("query vector over wrong field");
    return span.contains(v);
}

std::vector<Scalar> column_sum(const Matrix& m, const std::vector<std::size_t>& cols) {
    std::vector<Scalar> s(m.rows(), Scalar::zero(m.field()));
    for (std::size_t c : cols)
        for (std::size_t r = 0; r < m.rows(); ++r) s[r] += m.at(r, c);
    return s;
}

} // namespace rado
