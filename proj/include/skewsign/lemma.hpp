#pragma once

#include <cstddef>
#include <string>

#include "skewsign/errors.hpp"
#include "skewsign/field.hpp"
#include "skewsign/matrix.hpp"

namespace skewsign {

/// Parameters of the banded family: an n x n matrix (n >= 3) with corner pair
/// (-c, c) at positions (1,2)/(2,1), band pairs (-1, +1) two steps off the
/// diagonal, and the (b, a) pair in the trailing corner. The rank-parity law
/// (rank even iff a = -b) holds when a, b, c are signs; the family itself is
/// also used with arbitrary nonzero a, b, c.
template <ScalarType F>
struct LemmaParams {
    std::size_t n;
    F a;
    F b;
    F c;
};

namespace detail {

template <ScalarType F>
bool is_sign(const F& x, const FieldSpec& f) {
    return x == from_integer<F>(1, f) || x == from_integer<F>(-1, f);
}

} // namespace detail

template <ScalarType F>
void validate_lemma_params(const LemmaParams<F>& p) {
    if (p.n < 3) throw InvalidParamsError("family is defined for n >= 3");
    if (p.a.field() != p.b.field() || p.a.field() != p.c.field()) {
        throw FieldMismatchError("a, b, c must come from one field");
    }
    if (p.a.is_zero() || p.b.is_zero() || p.c.is_zero()) {
        throw InvalidParamsError("a, b, c must be nonzero");
    }
}

template <ScalarType F>
Matrix<F> build_lemma_matrix(const LemmaParams<F>& p) {
    validate_lemma_params(p);
    const FieldSpec f = p.a.field();
    std::size_t n = p.n;
    Matrix<F> m(n, n, f);
    m(0, 1) = -p.c;
    m(1, 0) = p.c;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        m(i, i + 2) = from_integer<F>(-1, f);
        m(i + 2, i) = from_integer<F>(1, f);
    }
    m(n - 2, n - 1) = p.b;
    m(n - 1, n - 2) = p.a;
    return m;
}

/// Predicted rank-parity of the family member: true iff the rank is even,
/// which happens exactly when a = -b (then the matrix is skew-symmetric).
/// Only defined for a, b, c in {1, -1}.
template <ScalarType F>
bool lemma_parity_predicate(const LemmaParams<F>& p) {
    validate_lemma_params(p);
    const FieldSpec f = p.a.field();
    if (!detail::is_sign(p.a, f) || !detail::is_sign(p.b, f) || !detail::is_sign(p.c, f)) {
        throw InvalidParamsError("parity law requires a, b, c in {1, -1}");
    }
    return p.a == -p.b;
}

namespace detail {

/// Reads (a, b, c) back off a family matrix; throws if the matrix does not
/// match build_lemma_matrix for those values.
template <ScalarType F>
LemmaParams<F> read_lemma_params(const Matrix<F>& m, const char* what) {
    if (!m.is_square() || m.rows() < 3) {
        throw InvalidParamsError(std::string(what) + ": expected a square matrix with n >= 3");
    }
    std::size_t n = m.rows();
    LemmaParams<F> p{n, m(n - 1, n - 2), m(n - 2, n - 1), -m(0, 1)};
    if (p.a.is_zero() || p.b.is_zero() || p.c.is_zero() || !(build_lemma_matrix(p) == m)) {
        throw InvalidParamsError(std::string(what) + ": matrix is not in the banded family");
    }
    return p;
}

} // namespace detail

/// One step of the family's reduction: the Schur complement on the leading
/// {1,2} block of a family matrix with n >= 5 is again a family matrix of
/// size n-2 with the same a, b and with c replaced by -1/c. Verified
/// structurally; a mismatch means a bug and raises StructureViolationError.
template <ScalarType F>
Matrix<F> schur_reduce_step(const Matrix<F>& m) {
    LemmaParams<F> p = detail::read_lemma_params(m, "schur_reduce_step");
    if (p.n < 5) throw InvalidParamsError("schur_reduce_step needs n >= 5");
    Matrix<F> reduced = schur_complement(m, IndexSet({1, 2}));
    LemmaParams<F> expect{p.n - 2, p.a, p.b, -reduced(0, 1)};
    if (expect.c.is_zero() || !(build_lemma_matrix(expect) == reduced) || !(expect.a == p.a) ||
        !(expect.b == p.b)) {
        throw StructureViolationError("reduction left the banded family");
    }
    return reduced;
}

} // namespace skewsign
