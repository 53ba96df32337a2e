#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewsign/errors.hpp"
#include "skewsign/matrix.hpp"

namespace skewsign {

/// Refutation of the all-principal-submatrices-even-rank property: an index
/// set whose induced principal submatrix has odd rank. Re-checkable with
/// verify_witness.
struct OddWitness {
    IndexSet indices;
    std::size_t observed_rank = 0;

    friend bool operator==(const OddWitness&, const OddWitness&) = default;
};

struct CheckMode {
    enum class Kind { exhaustive, sampled };

    Kind kind = Kind::exhaustive;
    std::size_t max_n = 24;      // exhaustive guard, ~16.7M subsets
    std::size_t trials = 0;      // sampled only
    std::uint64_t seed = 0;      // sampled only

    static CheckMode exhaustive(std::size_t max_n = 24) {
        CheckMode m;
        m.kind = Kind::exhaustive;
        m.max_n = max_n;
        return m;
    }

    static CheckMode sampled(std::size_t trials, std::uint64_t seed) {
        CheckMode m;
        m.kind = Kind::sampled;
        m.trials = trials;
        m.seed = seed;
        return m;
    }
};

/// Outcome of the even-rank scan. all_even in exhaustive mode means every one
/// of the 2^n - 1 nonempty index sets was checked; in sampled mode it only
/// covers the drawn subsets.
struct EvenRankVerdict {
    bool all_even = false;
    std::optional<OddWitness> witness;
    CheckMode mode;
    std::size_t subsets_checked = 0;
};

template <ScalarType F>
bool verify_witness(const Matrix<F>& m, const OddWitness& w) {
    if (w.indices.empty()) return false;
    std::size_t r = rank(principal_submatrix(m, w.indices));
    return r % 2 == 1 && r == w.observed_rank;
}

namespace detail {

/// Advances a k-combination (0-based, increasing) to its lexicographic
/// successor within 0..n-1; returns false when exhausted.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] + (k - i) < n) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

template <ScalarType F>
std::optional<OddWitness> odd_witness_at(const Matrix<F>& m, const std::vector<std::size_t>& zb) {
    IndexSet idx = IndexSet::of_zero_based(zb);
    std::size_t r = rank(principal_submatrix(m, idx));
    if (r % 2 == 1) return OddWitness{idx, r};
    return std::nullopt;
}

} // namespace detail

/// Decides whether every nonempty principal submatrix of M has even rank.
///
/// Exhaustive mode enumerates index sets by increasing cardinality and
/// lexicographically within a cardinality, returning the first odd-rank
/// witness found; that makes the witness deterministic and of minimal
/// cardinality. Guarded by mode.max_n (TooLargeError beyond it).
///
/// Sampled mode draws mode.trials nonempty subsets uniformly from a seeded
/// generator; an all_even answer is then only evidence, not proof.
template <ScalarType F>
EvenRankVerdict check_all_principal_even(const Matrix<F>& m,
                                         const CheckMode& mode = CheckMode::exhaustive()) {
    if (!m.is_square()) throw InputError("even-rank check requires a square matrix");
    std::size_t n = m.rows();
    EvenRankVerdict verdict;
    verdict.mode = mode;

    if (mode.kind == CheckMode::Kind::exhaustive) {
        if (n > mode.max_n) {
            throw TooLargeError("exhaustive check limited to n <= " + std::to_string(mode.max_n) +
                                "; use sampled mode for n = " + std::to_string(n));
        }
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<std::size_t> comb(k);
            for (std::size_t i = 0; i < k; ++i) comb[i] = i;
            do {
                ++verdict.subsets_checked;
                if (auto w = detail::odd_witness_at(m, comb)) {
                    verdict.all_even = false;
                    verdict.witness = *w;
                    return verdict;
                }
            } while (detail::next_combination(comb, n));
        }
        verdict.all_even = true;
        return verdict;
    }

    std::mt19937_64 gen(mode.seed);
    for (std::size_t t = 0; t < mode.trials && n > 0; ++t) {
        std::vector<std::size_t> zb;
        while (zb.empty()) {
            zb.clear();
            for (std::size_t i = 0; i < n; ++i) {
                if (gen() & 1u) zb.push_back(i);
            }
        }
        ++verdict.subsets_checked;
        if (auto w = detail::odd_witness_at(m, zb)) {
            verdict.all_even = false;
            verdict.witness = *w;
            return verdict;
        }
    }
    verdict.all_even = true;
    return verdict;
}

} // namespace skewsign
