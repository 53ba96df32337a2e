#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "skewsign/errors.hpp"
#include "skewsign/field.hpp"

namespace skewsign {

/// Dense exact matrix over one field. Immutable in practice: every operation
/// returns a new matrix. Element access is 0-based; see IndexSet for the
/// 1-based index sets used in witnesses and file formats.
template <ScalarType F>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
        : rows_(rows), cols_(cols), field_(f), data_(rows * cols, from_integer<F>(0, f)) {}

    /// Build from integer literals embedded into the field. Convenient for
    /// fixtures: Matrix<Fp>::from_rows(FieldSpec::gf(3), {{0, -1}, {1, 0}}).
    static Matrix from_rows(const FieldSpec& f,
                            std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix out(r, c, f);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw DimensionMismatchError("ragged row in matrix literal");
            std::size_t j = 0;
            for (long long v : row) out(i, j++) = from_integer<F>(v, f);
            ++i;
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const FieldSpec& field() const { return field_; }

    const F& operator()(std::size_t i, std::size_t j) const {
        check_bounds(i, j);
        return data_[i * cols_ + j];
    }

    F& operator()(std::size_t i, std::size_t j) {
        check_bounds(i, j);
        return data_[i * cols_ + j];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
               a.data_ == b.data_;
    }

private:
    void check_bounds(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) {
            throw IndexOutOfRangeError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                       ") outside " + std::to_string(rows_) + "x" +
                                       std::to_string(cols_) + " matrix");
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    FieldSpec field_;
    std::vector<F> data_;
};

/// Set of 1-based row/column indices, kept strictly increasing. This is the
/// currency of witnesses and principal submatrices; 1-based to match the
/// file formats and printed output.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(std::vector<std::size_t> one_based) : idx_(std::move(one_based)) {
        std::sort(idx_.begin(), idx_.end());
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (idx_[k] == 0) throw IndexOutOfRangeError("index sets are 1-based; got 0");
            if (k > 0 && idx_[k] == idx_[k - 1]) {
                throw InvalidParamsError("duplicate index " + std::to_string(idx_[k]) +
                                         " in index set");
            }
        }
    }

    static IndexSet full(std::size_t n) {
        std::vector<std::size_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
        return IndexSet(std::move(v));
    }

    static IndexSet of_zero_based(const std::vector<std::size_t>& zero_based) {
        std::vector<std::size_t> v;
        v.reserve(zero_based.size());
        for (std::size_t i : zero_based) v.push_back(i + 1);
        return IndexSet(std::move(v));
    }

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }

    const std::vector<std::size_t>& indices() const { return idx_; }

    std::vector<std::size_t> zero_based() const {
        std::vector<std::size_t> v;
        v.reserve(idx_.size());
        for (std::size_t i : idx_) v.push_back(i - 1);
        return v;
    }

    std::size_t max_index() const { return idx_.empty() ? 0 : idx_.back(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> idx_;
};

namespace detail {

/// In-place row echelon reduction of a rows x cols grid; returns the rank.
/// Pivot choice: first nonzero entry scanning columns left to right. No
/// magnitude pivoting, the arithmetic is exact.
template <ScalarType F>
std::size_t row_echelon(std::vector<F>& a, std::size_t rows, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a[i * cols + c].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(a[pivot * cols + j], a[r * cols + j]);
            }
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i * cols + c].is_zero()) continue;
            F factor = a[i * cols + c] / a[r * cols + c];
            for (std::size_t j = c; j < cols; ++j) {
                a[i * cols + j] = a[i * cols + j] - factor * a[r * cols + j];
            }
        }
        ++r;
    }
    return r;
}

template <ScalarType F>
std::vector<F> flatten(const Matrix<F>& m) {
    std::vector<F> a;
    a.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
    }
    return a;
}

/// Rectangular submatrix on arbitrary (0-based) row and column selections.
template <ScalarType F>
Matrix<F> submatrix(const Matrix<F>& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    Matrix<F> out(rows.size(), cols.size(), m.field());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    }
    return out;
}

/// Solves A X = B for square A via Gauss-Jordan; nullopt when A is singular.
template <ScalarType F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    std::size_t n = a.rows();
    if (!a.is_square() || b.rows() != n) throw DimensionMismatchError("solve: bad shapes");
    std::size_t width = n + b.cols();
    std::vector<F> g;
    g.reserve(n * width);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g.push_back(a(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) g.push_back(b(i, j));
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i) {
            if (!g[i * width + c].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) return std::nullopt;
        if (pivot != c) {
            for (std::size_t j = 0; j < width; ++j) std::swap(g[pivot * width + j], g[c * width + j]);
        }
        F inv_pivot = g[c * width + c].inverse();
        for (std::size_t j = c; j < width; ++j) g[c * width + j] = g[c * width + j] * inv_pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || g[i * width + c].is_zero()) continue;
            F factor = g[i * width + c];
            for (std::size_t j = c; j < width; ++j) {
                g[i * width + j] = g[i * width + j] - factor * g[c * width + j];
            }
        }
    }
    Matrix<F> x(n, b.cols(), a.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = g[i * width + n + j];
    }
    return x;
}

} // namespace detail

/// Exact rank by Gaussian elimination; 0 for an empty matrix.
template <ScalarType F>
std::size_t rank(const Matrix<F>& m) {
    auto a = detail::flatten(m);
    return detail::row_echelon(a, m.rows(), m.cols());
}

template <ScalarType F>
Matrix<F> transpose(const Matrix<F>& m) {
    Matrix<F> out(m.cols(), m.rows(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    }
    return out;
}

template <ScalarType F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.field() != b.field()) throw FieldMismatchError("multiply: different fields");
    if (a.cols() != b.rows()) throw DimensionMismatchError("multiply: inner dimensions differ");
    Matrix<F> out(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) = out(i, j) + a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

template <ScalarType F>
Matrix<F> subtract(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.field() != b.field()) throw FieldMismatchError("subtract: different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("subtract: shapes differ");
    }
    Matrix<F> out(a.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    }
    return out;
}

/// The principal submatrix induced by I: keep exactly the rows and columns
/// with (1-based) indices in I, in their original order.
template <ScalarType F>
Matrix<F> principal_submatrix(const Matrix<F>& m, const IndexSet& idx) {
    if (!m.is_square()) throw DimensionMismatchError("principal submatrix of non-square matrix");
    if (idx.max_index() > m.rows()) {
        throw IndexOutOfRangeError("index " + std::to_string(idx.max_index()) +
                                   " exceeds matrix size " + std::to_string(m.rows()));
    }
    auto zb = idx.zero_based();
    return detail::submatrix(m, zb, zb);
}

/// Schur complement of M on the principal block induced by I. The block is
/// permuted to the leading position internally; the remaining rows/columns
/// keep their relative order. Requires the block to be invertible.
template <ScalarType F>
Matrix<F> schur_complement(const Matrix<F>& m, const IndexSet& block) {
    if (!m.is_square()) throw DimensionMismatchError("schur complement of non-square matrix");
    std::size_t n = m.rows();
    if (block.max_index() > n) {
        throw IndexOutOfRangeError("block index exceeds matrix size " + std::to_string(n));
    }
    auto in_block = std::vector<bool>(n, false);
    for (std::size_t i : block.zero_based()) in_block[i] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_block[i]) rest.push_back(i);
    }
    auto blk = block.zero_based();
    Matrix<F> a1 = detail::submatrix(m, blk, blk);
    Matrix<F> a2 = detail::submatrix(m, blk, rest);
    Matrix<F> a3 = detail::submatrix(m, rest, blk);
    Matrix<F> a4 = detail::submatrix(m, rest, rest);
    auto x = detail::solve(a1, a2); // A1^{-1} A2
    if (!x) throw SingularBlockError("principal block is singular");
    return subtract(a4, multiply(a3, *x));
}

struct GuttmanReport {
    std::size_t rank_full = 0;
    std::size_t rank_block = 0;
    std::size_t rank_schur = 0;
    bool holds = false;
};

/// Checks the rank additivity r(A) = r(A1) + r(A/A1) on the given block.
/// holds must come out true on every input with an invertible block; it is
/// exposed as a self-test hook.
template <ScalarType F>
GuttmanReport guttman_check(const Matrix<F>& m, const IndexSet& block) {
    GuttmanReport rep;
    rep.rank_full = rank(m);
    rep.rank_block = rank(principal_submatrix(m, block));
    rep.rank_schur = rank(schur_complement(m, block));
    rep.holds = rep.rank_full == rep.rank_block + rep.rank_schur;
    return rep;
}

template <ScalarType F>
Matrix<F> scale_row(const Matrix<F>& m, std::size_t i, const F& s) {
    if (s.is_zero()) throw ZeroScalarError("row scaling by zero");
    if (i >= m.rows()) throw IndexOutOfRangeError("row " + std::to_string(i) + " out of range");
    Matrix<F> out = m;
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * s;
    return out;
}

template <ScalarType F>
Matrix<F> scale_col(const Matrix<F>& m, std::size_t j, const F& s) {
    if (s.is_zero()) throw ZeroScalarError("column scaling by zero");
    if (j >= m.cols()) throw IndexOutOfRangeError("column " + std::to_string(j) + " out of range");
    Matrix<F> out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, j) * s;
    return out;
}

/// Simultaneous row/column reordering: out(i, j) = m(perm[i], perm[j]).
/// perm is 0-based and must be a permutation of 0..n-1.
template <ScalarType F>
Matrix<F> permute_simultaneous(const Matrix<F>& m, const std::vector<std::size_t>& perm) {
    if (!m.is_square()) throw DimensionMismatchError("simultaneous permutation of non-square matrix");
    std::size_t n = m.rows();
    if (perm.size() != n) throw InvalidPermutationError("permutation length differs from matrix size");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) throw InvalidPermutationError("not a permutation of 0..n-1");
        seen[p] = true;
    }
    Matrix<F> out(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = m(perm[i], perm[j]);
    }
    return out;
}

/// True iff M(i,j) = -M(j,i) for all i, j and every diagonal entry is zero.
/// The diagonal condition is checked explicitly; it is only redundant away
/// from characteristic two.
template <ScalarType F>
bool is_skew_symmetric(const Matrix<F>& m) {
    if (!m.is_square()) throw DimensionMismatchError("skew-symmetry of non-square matrix");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (!(m(i, j) == -m(j, i))) return false;
        }
    }
    return true;
}

} // namespace skewsign
