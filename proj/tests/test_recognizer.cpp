#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace skewsign;
using testutil::Rng;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec G2 = FieldSpec::gf(2);
const FieldSpec G3 = FieldSpec::gf(3);
const FieldSpec G5 = FieldSpec::gf(5);

template <ScalarType F>
SupportGraph graph_of(const Matrix<F>& m) {
    auto pre = precheck(m);
    REQUIRE(std::holds_alternative<SupportGraph>(pre));
    return std::get<SupportGraph>(pre);
}

/// The matrix from the witness-extraction walkthrough: normalized band
/// structure, an extra antisymmetric pair at (3,4)/(4,3), and the violating
/// corner (5,4). The first off-band entry c_1 is nonzero, so the witness
/// truncates to three indices.
Matrix<Rational> crafted_c1_matrix() {
    return Matrix<Rational>::from_rows(Q, {{0, -1, -1, 0, 0},
                                           {1, 0, 0, -1, 0},
                                           {1, 0, 0, -1, -1},
                                           {0, 1, 1, 0, 1},
                                           {0, 0, 1, 1, 0}});
}

} // namespace

TEST_CASE("precheck finds diagonal and support witnesses") {
    auto one = Matrix<Rational>::from_rows(Q, {{1}});
    auto pre1 = precheck(one);
    REQUIRE(std::holds_alternative<OddWitness>(pre1));
    CHECK(std::get<OddWitness>(pre1).indices == IndexSet({1}));
    CHECK(std::get<OddWitness>(pre1).observed_rank == 1);

    auto asym = Matrix<Rational>::from_rows(Q, {{0, 1}, {0, 0}});
    auto pre2 = precheck(asym);
    REQUIRE(std::holds_alternative<OddWitness>(pre2));
    CHECK(std::get<OddWitness>(pre2).indices == IndexSet({1, 2}));
    CHECK(std::get<OddWitness>(pre2).observed_rank == 1);

    auto g = graph_of(remark2_matrix<Rational>(Q));
    CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("precheck rejects entries outside {0,1,-1}") {
    auto bad = Matrix<Rational>::from_rows(Q, {{0, 2}, {-2, 0}});
    CHECK_THROWS_AS(precheck(bad), InputError);
    auto bad5 = Matrix<Fp>::from_rows(G5, {{0, 2}, {3, 0}});
    CHECK_THROWS_AS(precheck(bad5), InputError);

    // every GF(3) element is 0, 1 or -1, and every GF(2) element too
    Rng rng(71);
    auto any3 = testutil::random_field_matrix<Fp>(rng, 4, 4, G3);
    CHECK_NOTHROW(precheck(any3));
    auto any2 = testutil::random_field_matrix<Fp>(rng, 4, 4, G2);
    CHECK_NOTHROW(precheck(any2));
}

TEST_CASE("m_ordering on the reorder fixture") {
    auto ord = m_ordering(graph_of(remark2_matrix<Rational>(Q)));
    CHECK(ord.perm == std::vector<std::size_t>{0, 2, 3, 1});       // 1-based (1,3,4,2)
    CHECK(ord.m_values == std::vector<std::size_t>{1, 0, 1, 2});   // 1-based (2,1,2,3)
    CHECK(ord.component_roots() == std::vector<std::size_t>{0});
    CHECK(mordering_monotone(ord));
}

TEST_CASE("m_ordering of a zero matrix is the identity with sentinel m-values") {
    Matrix<Rational> zero(4, 4, Q);
    auto ord = m_ordering(graph_of(zero));
    CHECK(ord.perm == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(ord.m_values == std::vector<std::size_t>(4, 4));
    CHECK(ord.component_roots() == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(mordering_monotone(ord));
}

TEST_CASE("an already-banded matrix keeps its order") {
    auto m = build_lemma_matrix(LemmaParams<Rational>{5, Rational(1), Rational(1), Rational(1)});
    auto ord = m_ordering(graph_of(m));
    CHECK(ord.perm == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(ord.m_values == std::vector<std::size_t>{1, 0, 0, 1, 2}); // 1-based (2,1,1,2,3)
    CHECK(mordering_monotone(ord));
}

TEST_CASE("m_ordering invariants hold on random support graphs") {
    Rng rng(72);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng.below(9);
        Matrix<Rational> m(n, n, Q);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rng.below(3) == 0) {
                    m(i, j) = Rational(1);
                    m(j, i) = Rational(rng.below(2) ? 1 : -1);
                }
            }
        }
        auto ord = m_ordering(graph_of(m));
        CHECK(mordering_monotone(ord));

        // m-values must equal the column definition on the reordered matrix
        auto reordered = permute_simultaneous(m, ord.perm);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t expect = n;
            for (std::size_t row = 0; row < n; ++row) {
                if (!reordered(row, col).is_zero()) {
                    expect = row;
                    break;
                }
            }
            CHECK(ord.m_values[col] == expect);
        }

        // zero rows sit at the end, in original order
        std::vector<std::size_t> zero_rows;
        for (std::size_t pos = 0; pos < n; ++pos) {
            if (ord.m_values[pos] == n) zero_rows.push_back(ord.perm[pos]);
        }
        CHECK(std::is_sorted(zero_rows.begin(), zero_rows.end()));
    }
}

TEST_CASE("sign normalization of the reorder fixture flips two columns") {
    auto m = remark2_matrix<Rational>(Q);
    auto ord = m_ordering(graph_of(m));
    auto norm = sign_normalize(permute_simultaneous(m, ord.perm), ord);
    CHECK(norm.row_signs == std::vector<int>{1, 1, 1, 1});
    CHECK(norm.col_signs == std::vector<int>{1, 1, -1, -1});
    CHECK(norm.matrix == Matrix<Rational>::from_rows(Q, {{0, -1, 0, 0},
                                                         {1, 0, -1, 0},
                                                         {0, 1, 0, -1},
                                                         {0, 0, 1, 0}}));
    CHECK(is_skew_symmetric(norm.matrix));
}

TEST_CASE("inputs already in normalized orientation need no flips") {
    // skew members of the band family carry +1 at every (i, m(i)) already
    for (std::size_t n = 3; n <= 8; ++n) {
        auto m = build_lemma_matrix(LemmaParams<Rational>{n, Rational(1), Rational(-1), Rational(1)});
        REQUIRE(is_skew_symmetric(m));
        auto ord = m_ordering(graph_of(m));
        auto norm = sign_normalize(permute_simultaneous(m, ord.perm), ord);
        CHECK(norm.row_signs == std::vector<int>(n, 1));
        CHECK(norm.col_signs == std::vector<int>(n, 1));
        CHECK(norm.matrix == permute_simultaneous(m, ord.perm));
    }
}

TEST_CASE("skew inputs are accepted even when flips occur") {
    // M(2, m(2)) = -1 here, so position 2 gets a row and a column flip; the
    // certificate still verifies and the final matrix is skew
    auto m = Matrix<Rational>::from_rows(Q, {{0, 1}, {-1, 0}});
    auto rec = recognize_sign(m);
    REQUIRE(rec.accepted);
    CHECK(is_skew_symmetric(apply_certificate(m, *rec.certificate)));

    Rng rng(73);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = rng.below(8);
        auto skew = testutil::random_pm01_skew_matrix<Rational>(rng, n, Q);
        auto r = recognize_sign(skew);
        REQUIRE(r.accepted);
        CHECK(is_skew_symmetric(apply_certificate(skew, *r.certificate)));
    }
}

TEST_CASE("nothing flips in characteristic two") {
    Rng rng(74);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng.below(6);
        Matrix<Fp> m(n, n, G2);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rng.below(2)) {
                    m(i, j) = Fp(1, G2);
                    m(j, i) = Fp(1, G2);
                }
            }
        }
        auto ord = m_ordering(graph_of(m));
        auto norm = sign_normalize(permute_simultaneous(m, ord.perm), ord);
        CHECK(norm.row_signs == std::vector<int>(n, 1));
        CHECK(norm.col_signs == std::vector<int>(n, 1));
        CHECK(is_skew_symmetric(norm.matrix)); // symmetric support + zero diagonal suffice
    }
}

TEST_CASE("normalization postcondition: +1 at (i, m(i)) and -1 at (m(i), i)") {
    Rng rng(75);
    const Rational one(1), minus_one(-1);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.below(8);
        auto skew = testutil::random_pm01_skew_matrix<Rational>(rng, n, Q);
        auto m = testutil::random_sign_scaling(rng, skew);
        auto ord = m_ordering(graph_of(m));
        auto norm = sign_normalize(permute_simultaneous(m, ord.perm), ord);
        for (std::size_t i = 0; i < n; ++i) {
            if (ord.is_root[i] || ord.m_values[i] >= n) continue;
            CHECK(norm.matrix(i, ord.m_values[i]) == one);
            CHECK(norm.matrix(ord.m_values[i], i) == minus_one);
        }
    }
}

TEST_CASE("recognize_sign accepts the reorder fixture") {
    auto m = remark2_matrix<Rational>(Q);
    auto rec = recognize_sign(m);
    REQUIRE(rec.accepted);
    CHECK(rec.certificate->row_signs == std::vector<int>{1, 1, 1, 1});
    CHECK(rec.certificate->col_signs == std::vector<int>{1, -1, 1, -1}); // columns 2 and 4
    CHECK(is_skew_symmetric(apply_certificate(m, *rec.certificate)));

    // the classic fix, negate column 1 and row 3, is also a valid certificate
    SignCertificate classic{{1, 1, -1, 1}, {-1, 1, 1, 1}};
    CHECK(is_skew_symmetric(apply_certificate(m, classic)));
}

TEST_CASE("recognize_sign rejects the odd family member with a verified witness") {
    auto m = build_lemma_matrix(LemmaParams<Rational>{4, Rational(1), Rational(1), Rational(1)});
    auto rec = recognize_sign(m);
    REQUIRE_FALSE(rec.accepted);
    CHECK(rec.witness->indices == IndexSet({1, 2, 3, 4}));
    CHECK(rec.witness->observed_rank == 3);
    CHECK(verify_witness(m, *rec.witness));
    // cross-check with the independent oracle
    CHECK_FALSE(testutil::brute_force_sign_scalable(m));
}

TEST_CASE("recognize_sign accepts the zero matrix with all signs +1") {
    Matrix<Rational> zero(5, 5, Q);
    auto rec = recognize_sign(zero);
    REQUIRE(rec.accepted);
    CHECK(rec.certificate->row_signs == std::vector<int>(5, 1));
    CHECK(rec.certificate->col_signs == std::vector<int>(5, 1));

    Matrix<Rational> empty(0, 0, Q);
    CHECK(recognize_sign(empty).accepted);
}

TEST_CASE("witness extraction walks the m-iterate sequence") {
    // 3 x 3 odd member: violation at positions (3,2), sequence 3,2,1,1
    auto m3 = build_lemma_matrix(LemmaParams<Rational>{3, Rational(1), Rational(1), Rational(1)});
    auto ord3 = m_ordering(graph_of(m3));
    CHECK(extract_witness(m3, ord3, 2, 1) == IndexSet({1, 2, 3}));

    // 6 x 6 odd member: all off-band entries vanish, whole prefix is the witness
    auto m6 = build_lemma_matrix(LemmaParams<Rational>{6, Rational(1), Rational(1), Rational(1)});
    auto ord6 = m_ordering(graph_of(m6));
    CHECK(ord6.perm == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(extract_witness(m6, ord6, 5, 4) == IndexSet({1, 2, 3, 4, 5, 6}));
    auto verdict6 = check_all_principal_even(m6);
    REQUIRE_FALSE(verdict6.all_even);
    CHECK(rank(m6) == 5);

    // nonzero c_1 truncates the witness to {s1, s2, s3}
    auto mc = crafted_c1_matrix();
    auto ordc = m_ordering(graph_of(mc));
    CHECK(ordc.perm == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(extract_witness(mc, ordc, 4, 3) == IndexSet({3, 4, 5}));
    CHECK(rank(principal_submatrix(mc, IndexSet({3, 4, 5}))) == 3);

    auto rec = recognize_sign(mc);
    REQUIRE_FALSE(rec.accepted);
    CHECK(rec.witness->indices == IndexSet({3, 4, 5}));
    CHECK(rec.witness->observed_rank == 3);
}

TEST_CASE("extract_witness rejects non-violations") {
    auto m = build_lemma_matrix(LemmaParams<Rational>{3, Rational(1), Rational(1), Rational(1)});
    auto ord = m_ordering(graph_of(m));
    CHECK_THROWS_AS(extract_witness(m, ord, 1, 0), NotAViolationError); // antisymmetric pair
    CHECK_THROWS_AS(extract_witness(m, ord, 0, 2), NotAViolationError); // k <= l
}

TEST_CASE("sign certificates apply rows first, then columns") {
    auto m = remark2_matrix<Rational>(Q);
    SignCertificate identity{{1, 1, 1, 1}, {1, 1, 1, 1}};
    CHECK(apply_certificate(m, identity) == m);
    CHECK_THROWS_AS(apply_certificate(m, SignCertificate{{1, 1}, {1, 1}}),
                    DimensionMismatchError);
    CHECK_THROWS_AS(apply_certificate(m, SignCertificate{{0, 1, 1, 1}, {1, 1, 1, 1}}),
                    ZeroScalarError);
    CHECK_THROWS_AS(apply_certificate(m, SignCertificate{{2, 1, 1, 1}, {1, 1, 1, 1}}),
                    InvalidParamsError);
}

TEST_CASE("accepted certificates always verify") {
    Rng rng(76);
    int accepted = 0;
    while (accepted < 100) {
        std::size_t n = 1 + rng.below(7);
        auto m = testutil::random_sign_scaling(
            rng, testutil::random_pm01_skew_matrix<Rational>(rng, n, Q));
        auto rec = recognize_sign(m);
        REQUIRE(rec.accepted); // sign scalings of a skew matrix stay recognizable
        CHECK(is_skew_symmetric(apply_certificate(m, *rec.certificate)));
        ++accepted;
    }
}

TEST_CASE("rejections carry sound witnesses") {
    Rng rng(77);
    int rejected = 0;
    while (rejected < 100) {
        std::size_t n = 2 + rng.below(6);
        auto m = testutil::random_pm01_matrix<Rational>(rng, n, Q);
        auto rec = recognize_sign(m);
        if (rec.accepted) continue;
        CHECK(verify_witness(m, *rec.witness));
        ++rejected;
    }
}

TEST_CASE("verdict equivalence with the even-rank oracle, small sizes") {
    Rng rng(78);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 1 + rng.below(4);
        auto mq = testutil::random_pm01_matrix<Rational>(rng, n, Q);
        CHECK(recognize_sign(mq).accepted == check_all_principal_even(mq).all_even);
        auto m3 = testutil::random_pm01_matrix<Fp>(rng, n, G3);
        CHECK(recognize_sign(m3).accepted == check_all_principal_even(m3).all_even);
    }
}

TEST_CASE("verdict equivalence with the brute-force sign search, small sizes") {
    Rng rng(79);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + rng.below(4);
        auto mq = testutil::random_pm01_matrix<Rational>(rng, n, Q);
        CHECK(recognize_sign(mq).accepted == testutil::brute_force_sign_scalable(mq));
    }
}

TEST_CASE("verdicts agree over GF(2) with the even-rank oracle") {
    Rng rng(80);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.below(5);
        auto m = testutil::random_field_matrix<Fp>(rng, n, n, G2);
        CHECK(recognize_sign(m).accepted == check_all_principal_even(m).all_even);
    }
}

TEST_CASE("verdicts are invariant under sign scalings") {
    Rng rng(81);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + rng.below(6);
        auto m = testutil::random_pm01_matrix<Rational>(rng, n, Q);
        bool verdict = recognize_sign(m).accepted;
        auto scaled = testutil::random_sign_scaling(rng, m);
        CHECK(recognize_sign(scaled).accepted == verdict);
    }
}

TEST_CASE("recognizer output is deterministic") {
    Rng rng(82);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng.below(6);
        auto m = testutil::random_pm01_matrix<Rational>(rng, n, Q);
        auto r1 = recognize_sign(m);
        auto r2 = recognize_sign(m);
        CHECK(r1.accepted == r2.accepted);
        if (r1.accepted) {
            CHECK(r1.certificate->row_signs == r2.certificate->row_signs);
            CHECK(r1.certificate->col_signs == r2.certificate->col_signs);
        } else {
            CHECK(r1.witness->indices == r2.witness->indices);
        }
    }
}

TEST_CASE("general scaling rejects the 4 x 4 counterexample on its cycle") {
    auto m = remark1_matrix<Fp>(G5, Fp(-1, G5), Fp(2, G5));
    auto rec = recognize_general_scaling(m);
    REQUIRE_FALSE(rec.accepted);
    REQUIRE(rec.reject.has_value());
    // the inconsistent cycle is 1-2-4-3 however it is rooted
    std::vector<std::size_t> cycle = rec.reject->cycle;
    std::sort(cycle.begin(), cycle.end());
    CHECK(cycle == std::vector<std::size_t>{1, 2, 3, 4});

    // every strict principal submatrix scales fine
    for (std::size_t mask = 1; mask < 15; ++mask) {
        std::vector<std::size_t> zb;
        for (std::size_t i = 0; i < 4; ++i) {
            if (mask & (std::size_t{1} << i)) zb.push_back(i);
        }
        auto sub = principal_submatrix(m, IndexSet::of_zero_based(zb));
        CHECK(recognize_general_scaling(sub).accepted);
    }
}

TEST_CASE("general scaling accepts skew matrices with all-one scalars") {
    Rng rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = rng.below(7);
        auto m = testutil::random_skew_matrix<Rational>(rng, n, Q);
        auto rec = recognize_general_scaling(m);
        REQUIRE(rec.accepted);
        CHECK(rec.certificate->row_scalars == std::vector<Rational>(n, Rational(1)));
        CHECK(rec.certificate->col_scalars == std::vector<Rational>(n, Rational(1)));
    }
}

TEST_CASE("general scaling reports the failed necessary check") {
    auto diag = Matrix<Rational>::from_rows(Q, {{0, 1}, {-1, 5}});
    auto r1 = recognize_general_scaling(diag);
    REQUIRE_FALSE(r1.accepted);
    CHECK(r1.reject->reason.find("diagonal") != std::string::npos);

    auto asym = Matrix<Rational>::from_rows(Q, {{0, 7}, {0, 0}});
    auto r2 = recognize_general_scaling(asym);
    REQUIRE_FALSE(r2.accepted);
    CHECK(r2.reject->reason.find("support") != std::string::npos);
}

TEST_CASE("general scaling certificates rescale arbitrary-entry matrices") {
    // scaled version of a skew matrix with entries far outside {0,1,-1}
    auto skew = Matrix<Rational>::from_rows(Q, {{0, 2, 0}, {-2, 0, 5}, {0, -5, 0}});
    auto scaled = scale_row(scale_col(skew, 1, Rational(3)), 2, Rational(-7, 2));
    auto rec = recognize_general_scaling(scaled);
    REQUIRE(rec.accepted);
    CHECK(is_skew_symmetric(apply_certificate(scaled, *rec.certificate)));
}

TEST_CASE("general scaling agrees with sign scaling on {0,1,-1} inputs") {
    Rng rng(84);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 1 + rng.below(6);
        auto mq = testutil::random_pm01_matrix<Rational>(rng, n, Q);
        CHECK(recognize_general_scaling(mq).accepted == recognize_sign(mq).accepted);
        auto m5 = testutil::random_pm01_matrix<Fp>(rng, n, G5);
        CHECK(recognize_general_scaling(m5).accepted == recognize_sign(m5).accepted);
        auto m3 = testutil::random_pm01_matrix<Fp>(rng, n, G3);
        CHECK(recognize_general_scaling(m3).accepted == recognize_sign(m3).accepted);
    }
}
