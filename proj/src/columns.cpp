#include "rado/columns.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace rado {

namespace {

constexpr std::size_t kMaxExhaustiveColumns = 10;
constexpr std::size_t kMaxSingleRowNonzeros = 20;

std::vector<std::size_t> mask_to_indices(std::uint32_t mask) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) v.push_back(i);
    return v;
}

struct PartitionSearch {
    const Matrix& a;
    std::uint32_t full;
    std::vector<std::vector<Scalar>> subset_sum; // indexed by column mask
    std::unordered_map<std::uint32_t, EchelonSpan> spans;
    std::vector<bool> failed;

    explicit PartitionSearch(const Matrix& m) : a(m) {
        const std::size_t cols = a.cols();
        full = static_cast<std::uint32_t>((1u << cols) - 1);
        subset_sum.resize(full + 1, std::vector<Scalar>(a.rows(), Scalar::zero(a.field())));
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::uint32_t low = mask & (~mask + 1);
            std::size_t col = static_cast<std::size_t>(std::countr_zero(low));
            subset_sum[mask] = subset_sum[mask ^ low];
            for (std::size_t r = 0; r < a.rows(); ++r) subset_sum[mask][r] += a.at(r, col);
        }
        failed.assign(full + 1, false);
    }

    const EchelonSpan& span_of(std::uint32_t mask) {
        auto it = spans.find(mask);
        if (it != spans.end()) return it->second;
        EchelonSpan s(a.rows(), a.field());
        for (std::size_t col : mask_to_indices(mask)) s.add(a.column(col));
        return spans.emplace(mask, std::move(s)).first->second;
    }

    bool solve(std::uint32_t used, std::vector<std::vector<std::size_t>>& out) {
        if (used == full) return true;
        if (failed[used]) return false;
        std::uint32_t comp = full & ~used;
        const EchelonSpan& span = span_of(used);
        // submasks of comp in increasing numeric order
        for (std::uint32_t s = (0 - comp) & comp; s != 0; s = (s - comp) & comp) {
            if (span.contains(subset_sum[s])) {
                out.push_back(mask_to_indices(s));
                if (solve(used | s, out)) return true;
                out.pop_back();
            }
        }
        failed[used] = true;
        return false;
    }
};

std::optional<ColumnPartition> exhaustive_partition(const Matrix& a) {
    PartitionSearch search(a);
    std::vector<std::vector<std::size_t>> parts;
    if (!search.solve(0, parts)) return std::nullopt;
    ColumnPartition p{std::move(parts)};
    if (!verify_partition(a, p)) throw Error("internal: partition search produced an invalid witness");
    return p;
}

} // namespace

bool verify_partition(const Matrix& a, const ColumnPartition& p) {
    std::vector<bool> seen(a.cols(), false);
    std::size_t covered = 0;
    for (const auto& part : p.parts) {
        if (part.empty()) return false;
        for (std::size_t c : part) {
            if (c >= a.cols() || seen[c]) return false;
            seen[c] = true;
            ++covered;
        }
    }
    if (covered != a.cols()) return false;

    std::vector<std::vector<Scalar>> earlier;
    for (const auto& part : p.parts) {
        if (!span_member(column_sum(a, part), earlier, a.field())) return false;
        for (std::size_t c : part) earlier.push_back(a.column(c));
    }
    return true;
}

std::optional<ColumnPartition> check_columns_condition(const Matrix& a) {
    if (a.field().is_mod() && !a.field().is_field())
        throw CompositeModulus("columns condition requires a field");
    if (a.cols() > kMaxExhaustiveColumns) {
        if (a.rows() == 1) return single_row_condition(a.row(0));
        throw TooManyColumns("exhaustive partition search is limited to " +
                             std::to_string(kMaxExhaustiveColumns) + " columns");
    }
    return exhaustive_partition(a);
}

std::optional<ColumnPartition> single_row_condition(const std::vector<Scalar>& a) {
    if (a.empty()) throw DimensionMismatch("empty row");
    const Field f = a.front().field();
    for (const Scalar& s : a)
        if (s.field() != f) throw FieldMismatch("row entries over different fields");
    if (f.is_mod() && !f.is_field()) throw CompositeModulus("columns condition requires a field");

    std::vector<std::size_t> zeros, nonzeros;
    for (std::size_t i = 0; i < a.size(); ++i) (a[i].is_zero() ? zeros : nonzeros).push_back(i);

    if (nonzeros.empty()) {
        ColumnPartition p;
        p.parts.push_back(zeros);
        return p;
    }
    if (nonzeros.size() > kMaxSingleRowNonzeros)
        throw TooManyColumns("single-row subset enumeration is limited to " +
                             std::to_string(kMaxSingleRowNonzeros) + " nonzero entries");

    const std::uint32_t lim = 1u << nonzeros.size();
    for (std::uint32_t mask = 1; mask < lim; ++mask) {
        Scalar sum = Scalar::zero(f);
        for (std::size_t b = 0; b < nonzeros.size(); ++b)
            if (mask >> b & 1) sum += a[nonzeros[b]];
        if (!sum.is_zero()) continue;

        std::vector<std::size_t> first = zeros;
        std::vector<std::size_t> rest;
        for (std::size_t b = 0; b < nonzeros.size(); ++b)
            (mask >> b & 1 ? first : rest).push_back(nonzeros[b]);
        std::sort(first.begin(), first.end());

        ColumnPartition p;
        p.parts.push_back(std::move(first));
        for (std::size_t c : rest) p.parts.push_back({c});
        return p;
    }
    return std::nullopt;
}

std::vector<std::int64_t> brauer_entries(std::size_t k) {
    if (k < 2) throw InputError("brauer matrix needs k >= 2");
    const std::size_t rows = k - 1, cols = k + 1;
    std::vector<std::int64_t> e(rows * cols, 0);
    for (std::size_t i = 1; i <= rows; ++i) {
        e[(i - 1) * cols + 0] = -1;
        e[(i - 1) * cols + i] = 1;
        e[(i - 1) * cols + (cols - 1)] = -static_cast<std::int64_t>(i);
    }
    return e;
}

Matrix brauer_matrix(std::size_t k, const Field& f) {
    return Matrix::from_ints(k - 1, k + 1, brauer_entries(k), f);
}

} // namespace rado
