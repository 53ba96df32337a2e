#pragma once

#include <cstddef>

#include "skewsign/errors.hpp"
#include "skewsign/evenrank.hpp"
#include "skewsign/field.hpp"
#include "skewsign/lemma.hpp"
#include "skewsign/matrix.hpp"
#include "skewsign/recognizer.hpp"

// Executable counterexample families. remark1_* builds the 4 x 4 family
// member with c = 1 and arbitrary nonzero a, b: for a = -1 and b outside
// {0, 1, -1} every principal submatrix has even rank, yet no nonzero
// row/column scalings make the whole matrix skew-symmetric (every strict
// principal submatrix scales fine). remark2_matrix is the fixture showing
// that rows/columns must be reordered before sign normalization.

namespace skewsign {

template <ScalarType F>
struct Remark1Report {
    FieldSpec field;
    F a;
    F b;
    bool all_principal_even;
    bool whole_scalable;
    bool strict_submatrices_scalable;
};

template <ScalarType F>
Matrix<F> remark1_matrix(const FieldSpec& f, const F& a, const F& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroParamError("a and b must be nonzero");
    if (a.field() != f || b.field() != f) {
        throw FieldMismatchError("a, b must live in the requested field");
    }
    return build_lemma_matrix(LemmaParams<F>{4, a, b, from_integer<F>(1, f)});
}

template <ScalarType F>
Remark1Report<F> remark1_validate(const FieldSpec& f, const F& a, const F& b) {
    Matrix<F> m = remark1_matrix(f, a, b);
    bool all_even = check_all_principal_even(m).all_even;
    bool whole = recognize_general_scaling(m).accepted;
    bool strict = true;
    std::size_t n = m.rows();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> zb;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) zb.push_back(i);
        }
        Matrix<F> sub = principal_submatrix(m, IndexSet::of_zero_based(zb));
        if (!recognize_general_scaling(sub).accepted) {
            strict = false;
            break;
        }
    }
    return Remark1Report<F>{f, a, b, all_even, whole, strict};
}

/// The reorder-before-scaling fixture. Not skew-symmetric as written, but
/// negating column 1 and row 3 (or what the recognizer finds) makes it so.
template <ScalarType F>
Matrix<F> remark2_matrix(const FieldSpec& f) {
    return Matrix<F>::from_rows(f, {{0, 0, -1, 0},
                                    {0, 0, 0, -1},
                                    {1, 0, 0, 1},
                                    {0, 1, 1, 0}});
}

/// Over GF(3) every matrix has entries in {0, 1, -1}, so the recognizer
/// applies unrestricted; returns whether it agrees with the even-rank oracle.
/// Must always come back true.
inline bool gf3_corollary_check(const Matrix<Fp>& m) {
    if (m.field() != FieldSpec::gf(3)) throw InputError("corollary check requires a GF(3) matrix");
    bool accepted = recognize_sign(m).accepted;
    bool all_even = check_all_principal_even(m).all_even;
    return accepted == all_even;
}

} // namespace skewsign
