#include "rado/deuber.hpp"

#include <algorithm>

namespace rado {

namespace {

Field common_field(const std::vector<Scalar>& v, const char* what) {
    if (v.empty()) throw DimensionMismatch(std::string(what) + " must be nonempty");
    Field f = v.front().field();
    for (const Scalar& s : v)
        if (s.field() != f) throw FieldMismatch(std::string(what) + " mixes fields");
    return f;
}

std::vector<Scalar> dedup_sorted(std::vector<Scalar> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Iterate over coeffs^n, calling fn with each tuple. Returns false if fn
/// ever returns false.
template <typename Fn>
bool for_each_tuple(const std::vector<Scalar>& coeffs, std::size_t n, Fn&& fn) {
    std::vector<std::size_t> odo(n, 0);
    if (coeffs.empty()) return n == 0 ? fn(odo) : true;
    while (true) {
        if (!fn(odo)) return false;
        std::size_t i = n;
        while (i > 0 && odo[i - 1] + 1 == coeffs.size()) odo[--i] = 0;
        if (i == 0) return true;
        ++odo[i - 1];
    }
}

} // namespace

std::vector<Scalar> s_set(const SSetSpec& spec, std::uint64_t budget) {
    const Field f = common_field(spec.t, "t");
    std::vector<Scalar> coeffs = dedup_sorted(spec.coeffs);
    for (const Scalar& s : coeffs)
        if (s.field() != f) throw FieldMismatch("F and t over different fields");

    const std::size_t m = spec.t.size();
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t block = 1;
        for (std::size_t i = j + 1; i < m; ++i) {
            block *= coeffs.size();
            if (block > budget) throw BudgetExceeded("s_set enumeration too large");
            if (block == 0) break; // empty F kills every longer tail
        }
        total += block;
        if (total > budget) throw BudgetExceeded("s_set enumeration too large");
    }

    std::vector<Scalar> out;
    for (std::size_t j = 0; j < m; ++j) {
        for_each_tuple(coeffs, m - 1 - j, [&](const std::vector<std::size_t>& odo) {
            Scalar v = spec.t[j];
            for (std::size_t i = 0; i < odo.size(); ++i) v += coeffs[odo[i]] * spec.t[j + 1 + i];
            out.push_back(v);
            return true;
        });
    }
    return dedup_sorted(std::move(out));
}

bool is_f_independent(const std::vector<Scalar>& t, const std::vector<Scalar>& coeffs,
                      std::uint64_t budget) {
    const Field f = common_field(t, "t");
    std::vector<Scalar> cs = dedup_sorted(coeffs);
    for (const Scalar& s : cs)
        if (s.field() != f) throw FieldMismatch("F and t over different fields");
    if (cs.empty()) return true; // no combinations at all

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        count *= cs.size();
        if (count > budget) throw BudgetExceeded("F-independence check too large");
    }

    bool independent = true;
    for_each_tuple(cs, t.size(), [&](const std::vector<std::size_t>& odo) {
        Scalar sum = Scalar::zero(f);
        bool all_zero = true;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (cs[odo[i]].is_zero()) continue;
            all_zero = false;
            sum += cs[odo[i]] * t[i];
        }
        if (!all_zero && sum.is_zero()) {
            independent = false;
            return false;
        }
        return true;
    });
    return independent;
}

std::vector<Scalar> DeuberWitness::kernel_vector(const std::vector<Scalar>& t) const {
    return w.apply(t);
}

std::vector<Scalar> DeuberWitness::lift(const std::vector<Scalar>& t) const {
    std::vector<Scalar> x = w.apply(t);
    std::vector<Scalar> lifted;
    lifted.reserve(lift_position.size());
    for (std::size_t pos : lift_position) lifted.push_back(x[pos]);
    return lifted;
}

namespace {

/// Solve M alpha = b, free variables zero; the system is consistent by the
/// columns condition.
std::vector<Scalar> solve_with_free_zero(const Matrix& m, const std::vector<Scalar>& b) {
    Matrix aug(m.rows(), m.cols() + 1, m.field());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    std::vector<Scalar> alpha(m.cols(), Scalar::zero(m.field()));
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
        std::size_t p = rr.pivot_columns[i];
        if (p == m.cols()) throw Error("internal: inconsistent alpha system");
        alpha[p] = rr.reduced.at(i, m.cols());
    }
    return alpha;
}

} // namespace

DeuberWitness deuber_witness(const Matrix& a, const ColumnPartition& partition) {
    if (!verify_partition(a, partition)) throw InvalidWitness("partition fails verification");
    const Field f = a.field();
    const std::size_t n = a.rows();

    // Merge parts that do not grow the span. A trailing run of such parts
    // has nowhere to merge forward, so it stays as one final part.
    std::vector<std::vector<std::size_t>> merged;
    {
        EchelonSpan span(n, f);
        std::vector<std::size_t> run;
        for (const auto& part : partition.parts) {
            run.insert(run.end(), part.begin(), part.end());
            bool grew = false;
            for (std::size_t c : part) grew = span.add(a.column(c)) || grew;
            if (grew) {
                std::sort(run.begin(), run.end());
                merged.push_back(std::move(run));
                run.clear();
            }
        }
        if (!run.empty()) {
            std::sort(run.begin(), run.end());
            merged.push_back(std::move(run));
        }
    }
    ColumnPartition merged_partition{merged};
    if (!verify_partition(a, merged_partition))
        throw Error("internal: merged partition lost the columns condition");

    const std::size_t d = merged.size();

    // Per merged part: basis columns (greedy by column index) and the sum
    // of the residual columns, which becomes one extra column (zero when
    // the part has no residuals).
    std::vector<std::vector<Scalar>> reduced_cols;
    std::vector<std::size_t> block_offset, block_size;
    std::vector<std::size_t> lift_position(a.cols(), 0);
    for (const auto& part : merged) {
        EchelonSpan part_span(n, f);
        std::vector<std::size_t> basis, residual;
        for (std::size_t c : part) (part_span.add(a.column(c)) ? basis : residual).push_back(c);

        block_offset.push_back(reduced_cols.size());
        for (std::size_t c : basis) {
            lift_position[c] = reduced_cols.size();
            reduced_cols.push_back(a.column(c));
        }
        std::vector<Scalar> rsum = column_sum(a, residual);
        for (std::size_t c : residual) lift_position[c] = reduced_cols.size();
        reduced_cols.push_back(std::move(rsum));
        block_size.push_back(basis.size() + 1);
    }
    const std::size_t q = reduced_cols.size();
    Matrix reduced(n, q, f);
    for (std::size_t c = 0; c < q; ++c)
        for (std::size_t r = 0; r < n; ++r) reduced.at(r, c) = reduced_cols[c][r];

    // W column by column: ones on the diagonal block, solved alpha entries
    // above, zero below.
    Matrix w(q, d, f);
    std::vector<Scalar> alpha_entries;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < block_size[j]; ++i)
            w.at(block_offset[j] + i, j) = Scalar::one(f);
        if (j == 0) continue;

        const std::size_t prior = block_offset[j];
        Matrix m(n, prior, f);
        for (std::size_t c = 0; c < prior; ++c)
            for (std::size_t r = 0; r < n; ++r) m.at(r, c) = reduced.at(r, c);
        std::vector<Scalar> b(n, Scalar::zero(f));
        for (std::size_t i = 0; i < block_size[j]; ++i)
            for (std::size_t r = 0; r < n; ++r) b[r] -= reduced.at(r, block_offset[j] + i);

        std::vector<Scalar> alpha = solve_with_free_zero(m, b);
        for (std::size_t c = 0; c < prior; ++c) {
            w.at(c, j) = alpha[c];
            alpha_entries.push_back(alpha[c]);
        }
    }

    DeuberWitness witness{d, dedup_sorted(std::move(alpha_entries)), std::move(w),
                          std::move(reduced), std::move(merged_partition), std::move(lift_position)};

    // reduced * W = 0, column by column
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Scalar> wcol = witness.w.column(j);
        for (const Scalar& s : witness.reduced.apply(wcol))
            if (!s.is_zero()) throw Error("internal: reduced * W != 0");
    }
    const std::size_t k = n;
    if (witness.coefficient_set.size() > (k + 1) * d * d)
        throw Error("internal: coefficient set exceeds (k+1)d^2");
    return witness;
}

std::size_t hj_word_index(const std::vector<int>& word, int k) {
    std::size_t idx = 0;
    for (int v : word) idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(v);
    return idx;
}

std::optional<HjLine> hj_line_search(int k, std::size_t dims, const std::vector<int>& colouring,
                                     std::uint64_t budget) {
    if (k < 1 || dims == 0) throw InputError("hj_line_search needs k >= 1 and dims >= 1");
    if (dims > 25) throw BudgetExceeded("too many coordinates"); // 2^dims variable sets
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < dims; ++i) {
        words *= static_cast<std::uint64_t>(k);
        if (words > budget) throw BudgetExceeded("word space too large");
    }
    if (colouring.size() != words) throw DimensionMismatch("colouring size != k^dims");

    std::vector<int> word(dims, 0);
    for (std::uint32_t wmask = 1; wmask < (1u << dims); ++wmask) {
        std::vector<std::size_t> var, fixed;
        for (std::size_t i = 0; i < dims; ++i)
            (wmask >> i & 1 ? var : fixed).push_back(i);

        std::vector<int> z(fixed.size(), 0);
        while (true) {
            int colour = 0;
            bool mono = true;
            std::vector<std::size_t> line;
            for (int aval = 0; aval < k; ++aval) {
                for (std::size_t i : var) word[i] = aval;
                for (std::size_t i = 0; i < fixed.size(); ++i) word[fixed[i]] = z[i];
                std::size_t idx = hj_word_index(word, k);
                line.push_back(idx);
                if (aval == 0)
                    colour = colouring[idx];
                else if (colouring[idx] != colour) {
                    mono = false;
                    break;
                }
            }
            if (mono) {
                HjLine out;
                out.variable_coords = var;
                out.z_template.assign(dims, 0);
                for (std::size_t i = 0; i < fixed.size(); ++i) out.z_template[fixed[i]] = z[i];
                out.colour = colour;
                out.word_indices = std::move(line);
                return out;
            }
            // next template, first fixed coordinate most significant
            std::size_t i = fixed.size();
            while (i > 0 && z[i - 1] + 1 == k) z[--i] = 0;
            if (i == 0) break;
            ++z[i - 1];
        }
    }
    return std::nullopt;
}

} // namespace rado
