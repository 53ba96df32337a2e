#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewsign/errors.hpp"
#include "skewsign/evenrank.hpp"
#include "skewsign/field.hpp"
#include "skewsign/matrix.hpp"

// Decides whether a square matrix with entries in {0, 1, -1} can be made
// skew-symmetric by negating some rows and columns. The decision is
// constructive in both directions: acceptance comes with a sign certificate,
// rejection with an index set whose principal submatrix has odd rank. The
// pipeline is precheck -> m_ordering -> sign_normalize -> skew test, with
// extract_witness tracing the refutation when the skew test fails.

namespace skewsign {

/// Undirected graph on 0..n-1 with an edge wherever the matrix has a nonzero
/// off-diagonal entry. Only built once support symmetry is confirmed, so an
/// edge means both M(i,j) and M(j,i) are nonzero.
struct SupportGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // i < j, sorted
    std::vector<std::vector<std::size_t>> adjacency;        // sorted neighbor lists

    void add_edge(std::size_t i, std::size_t j) {
        edges.emplace_back(i, j);
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
    }

    std::size_t degree(std::size_t v) const { return adjacency[v].size(); }
};

/// A simultaneous reordering together with the m-values it realizes.
///
/// perm maps new position -> original index (0-based). m_values[i] is the
/// smallest position with a nonzero entry in column i of the reordered
/// matrix, or n for a zero column. is_root marks the first position of each
/// support-graph component (isolated vertices included); within a component,
/// non-root positions satisfy m(i) < i and m is nondecreasing.
struct MOrdering {
    std::size_t n = 0;
    std::vector<std::size_t> perm;
    std::vector<std::size_t> m_values;
    std::vector<bool> is_root;

    std::size_t zero_column_sentinel() const { return n; }

    std::vector<std::size_t> component_roots() const {
        std::vector<std::size_t> roots;
        for (std::size_t i = 0; i < n; ++i) {
            if (is_root[i]) roots.push_back(i);
        }
        return roots;
    }
};

/// Sign certificate in original index order: scaling row i by row_signs[i]
/// and column j by col_signs[j] turns the original matrix skew-symmetric.
struct SignCertificate {
    std::vector<int> row_signs;
    std::vector<int> col_signs;

    friend bool operator==(const SignCertificate&, const SignCertificate&) = default;
};

struct SignRecognition {
    bool accepted = false;
    std::optional<SignCertificate> certificate; // on accept
    std::optional<OddWitness> witness;          // on reject
};

/// General-scaling certificate: arbitrary nonzero field scalars per row and
/// column, original order.
template <ScalarType F>
struct ScalingCertificate {
    std::vector<F> row_scalars;
    std::vector<F> col_scalars;
};

struct ScalingReject {
    std::string reason;
    std::vector<std::size_t> cycle; // 1-based vertices when a cycle is inconsistent
};

template <ScalarType F>
struct ScalingRecognition {
    bool accepted = false;
    std::optional<ScalingCertificate<F>> certificate;
    std::optional<ScalingReject> reject;
};

namespace detail {

template <ScalarType F>
void require_square(const Matrix<F>& m, const char* what) {
    if (!m.is_square()) throw InputError(std::string(what) + " requires a square matrix");
}

template <ScalarType F>
int sign_entry(const Matrix<F>& m, std::size_t i, std::size_t j) {
    const FieldSpec& f = m.field();
    const F& x = m(i, j);
    if (x.is_zero()) return 0;
    if (x == from_integer<F>(1, f)) return 1;
    if (x == from_integer<F>(-1, f)) return -1;
    throw InputError("entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") = " +
                     x.to_string() + " is outside {0, 1, -1} in " + f.to_string());
}

template <ScalarType F>
OddWitness checked_witness(const Matrix<F>& m, std::vector<std::size_t> zero_based) {
    IndexSet idx = IndexSet::of_zero_based(zero_based);
    std::size_t r = rank(principal_submatrix(m, idx));
    if (r % 2 == 0) throw InternalCheckError("extracted witness has even rank");
    return OddWitness{idx, r};
}

} // namespace detail

/// Necessary-condition scan: zero diagonal and symmetric support. Returns the
/// support graph on success, or an immediate odd witness of size 1 (nonzero
/// diagonal entry) or 2 (asymmetric support pair). Entries outside {0, 1, -1}
/// as field elements raise InputError; note every GF(3) and GF(2) element
/// qualifies.
template <ScalarType F>
std::variant<SupportGraph, OddWitness> precheck(const Matrix<F>& m) {
    detail::require_square(m, "precheck");
    std::size_t n = m.rows();
    std::vector<int> signs(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) signs[i * n + j] = detail::sign_entry(m, i, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (signs[i * n + i] != 0) return detail::checked_witness(m, {i});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((signs[i * n + j] != 0) != (signs[j * n + i] != 0)) {
                return detail::checked_witness(m, {i, j});
            }
        }
    }
    SupportGraph g;
    g.n = n;
    g.adjacency.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (signs[i * n + j] != 0) g.add_edge(i, j);
        }
    }
    return g;
}

/// Builds a simultaneous reordering satisfying the per-component monotonicity
/// condition on m-values.
///
/// Greedy, per connected component: open the component holding the lowest
/// unplaced original index with that index as root; then repeatedly place the
/// component vertex whose smallest already-placed-neighbor position is
/// minimal, ties broken by smallest original index. A placed vertex's
/// smallest-placed-neighbor position never changes afterwards (later
/// placements sit at larger positions), and the greedy always takes the
/// minimal available key, so the realized m-values are nondecreasing within
/// the component. Zero rows/columns are placed last in original index order.
inline MOrdering m_ordering(const SupportGraph& g) {
    std::size_t n = g.n;
    const std::size_t unplaced = n; // sentinel in pos_of

    MOrdering ord;
    ord.n = n;
    ord.perm.reserve(n);
    ord.is_root.assign(n, false);

    std::vector<std::size_t> pos_of(n, unplaced);
    auto place = [&](std::size_t v, bool root) {
        pos_of[v] = ord.perm.size();
        ord.is_root[ord.perm.size()] = root;
        ord.perm.push_back(v);
    };

    std::vector<bool> in_open_component(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (pos_of[root] != unplaced || g.degree(root) == 0) continue;

        // collect the component of `root`
        std::vector<std::size_t> component;
        std::deque<std::size_t> queue{root};
        in_open_component[root] = true;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            component.push_back(u);
            for (std::size_t v : g.adjacency[u]) {
                if (!in_open_component[v]) {
                    in_open_component[v] = true;
                    queue.push_back(v);
                }
            }
        }

        place(root, true);
        std::size_t remaining = component.size() - 1;
        while (remaining > 0) {
            std::size_t best = n, best_key = n;
            for (std::size_t v : component) {
                if (pos_of[v] != unplaced) continue;
                std::size_t key = n;
                for (std::size_t w : g.adjacency[v]) {
                    if (pos_of[w] != unplaced && pos_of[w] < key) key = pos_of[w];
                }
                if (key < best_key || (key == best_key && v < best)) {
                    best = v;
                    best_key = key;
                }
            }
            place(best, false);
            --remaining;
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (pos_of[v] == unplaced) place(v, true); // zero row/column
    }

    ord.m_values.assign(n, n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t w : g.adjacency[ord.perm[pos]]) {
            if (pos_of[w] < ord.m_values[pos]) ord.m_values[pos] = pos_of[w];
        }
    }
    return ord;
}

/// Validates the reordering contract: every root points forward (or to the
/// zero-column sentinel) and within each component run the non-root positions
/// have m(i) < i with m nondecreasing.
inline bool mordering_monotone(const MOrdering& ord) {
    std::size_t n = ord.n;
    std::size_t last_m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (ord.is_root[i]) {
            if (ord.m_values[i] <= i) return false;
            last_m = 0;
        } else {
            if (ord.m_values[i] >= i) return false;
            if (ord.m_values[i] < last_m) return false;
            last_m = ord.m_values[i];
        }
    }
    return true;
}

template <ScalarType F>
struct NormalizeResult {
    Matrix<F> matrix;
    std::vector<int> row_signs; // per position of the reordered matrix
    std::vector<int> col_signs;
};

/// Sign normalization in the reordered frame. Processes non-root positions i
/// in increasing order: negate row i when the current entry at (i, m(i)) is
/// not 1, negate column i when the current entry at (m(i), i) is not -1.
/// Afterwards every non-root position with a nonzero row has entry +1 at
/// (i, m(i)) and -1 at (m(i), i). Earlier pairs are untouched because
/// m(i') < i' < i. In characteristic two nothing ever flips.
template <ScalarType F>
NormalizeResult<F> sign_normalize(const Matrix<F>& reordered, const MOrdering& ord) {
    detail::require_square(reordered, "sign_normalize");
    std::size_t n = reordered.rows();
    if (ord.n != n) throw DimensionMismatchError("ordering does not match matrix size");
    const FieldSpec& f = reordered.field();
    const F one = from_integer<F>(1, f);
    const F minus_one = from_integer<F>(-1, f);

    NormalizeResult<F> out{reordered, std::vector<int>(n, 1), std::vector<int>(n, 1)};
    for (std::size_t i = 0; i < n; ++i) {
        if (ord.is_root[i] || ord.m_values[i] >= n) continue;
        std::size_t mi = ord.m_values[i];
        if (!(out.matrix(i, mi) == one)) {
            out.row_signs[i] = -1;
            for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = -out.matrix(i, j);
        }
        if (!(out.matrix(mi, i) == minus_one)) {
            out.col_signs[i] = -1;
            for (std::size_t r = 0; r < n; ++r) out.matrix(r, i) = -out.matrix(r, i);
        }
    }
    return out;
}

/// Traces the refutation for the lexicographically minimal violating pair
/// (k, l), k > l, of a normalized matrix: follow the alternating m-iterate
/// sequence S = k, l, m(k), m(l), m^2(k), ... and take its largest strictly
/// decreasing prefix s_1 > ... > s_q. The first-off-diagonal entries
/// c_t = M(s_{t+1}, s_{t+2}) decide the cut: the returned positions are
/// {s_1..s_q} when all c_t vanish, else {s_1..s_{t+2}} for the smallest t
/// with c_t nonzero. Either way the induced principal submatrix lands in the
/// banded family with a != -b, hence has odd rank.
///
/// Returns 1-based positions of the *reordered* matrix.
template <ScalarType F>
IndexSet extract_witness(const Matrix<F>& normalized, const MOrdering& ord, std::size_t k,
                         std::size_t l) {
    detail::require_square(normalized, "extract_witness");
    std::size_t n = normalized.rows();
    if (k >= n || l >= k) throw NotAViolationError("need positions k > l inside the matrix");
    if (normalized(k, l).is_zero() || normalized(k, l) == -normalized(l, k)) {
        throw NotAViolationError("pair (" + std::to_string(k + 1) + ", " + std::to_string(l + 1) +
                                 ") is not a violation");
    }

    std::vector<std::size_t> seq{k, l};
    while (true) {
        std::size_t nxt = ord.m_values[seq[seq.size() - 2]];
        if (nxt >= n || nxt >= seq.back()) break;
        seq.push_back(nxt);
    }
    std::size_t q = seq.size();
    if (q < 3) {
        throw NotAViolationError("violation with l = m(k); normalization should exclude this");
    }

    std::size_t cut = q;
    for (std::size_t t = 1; t + 3 <= q; ++t) {
        if (!normalized(seq[t], seq[t + 1]).is_zero()) {
            cut = t + 2;
            break;
        }
    }
    seq.resize(cut);
    return IndexSet::of_zero_based(seq);
}

/// Row-then-column application of a sign certificate.
template <ScalarType F>
Matrix<F> apply_certificate(const Matrix<F>& m, const SignCertificate& cert) {
    if (cert.row_signs.size() != m.rows() || cert.col_signs.size() != m.cols()) {
        throw DimensionMismatchError("certificate length does not match matrix");
    }
    const F minus_one = from_integer<F>(-1, m.field());
    Matrix<F> out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (cert.row_signs[i] == 0) throw ZeroScalarError("zero row sign");
        if (cert.row_signs[i] != 1 && cert.row_signs[i] != -1) {
            throw InvalidParamsError("sign certificate entries must be +1 or -1");
        }
        if (cert.row_signs[i] == -1) out = scale_row(out, i, minus_one);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (cert.col_signs[j] == 0) throw ZeroScalarError("zero column sign");
        if (cert.col_signs[j] != 1 && cert.col_signs[j] != -1) {
            throw InvalidParamsError("sign certificate entries must be +1 or -1");
        }
        if (cert.col_signs[j] == -1) out = scale_col(out, j, minus_one);
    }
    return out;
}

template <ScalarType F>
Matrix<F> apply_certificate(const Matrix<F>& m, const ScalingCertificate<F>& cert) {
    if (cert.row_scalars.size() != m.rows() || cert.col_scalars.size() != m.cols()) {
        throw DimensionMismatchError("certificate length does not match matrix");
    }
    Matrix<F> out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) out = scale_row(out, i, cert.row_scalars[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) out = scale_col(out, j, cert.col_scalars[j]);
    return out;
}

/// Decides sign-scaling skew-symmetrizability of a {0, 1, -1} matrix.
/// Accepts with a SignCertificate or rejects with an odd-rank witness, both
/// stated in original indices and re-verified before being returned.
template <ScalarType F>
SignRecognition recognize_sign(const Matrix<F>& m) {
    detail::require_square(m, "recognize_sign");
    std::size_t n = m.rows();
    SignRecognition result;

    auto pre = precheck(m);
    if (auto* w = std::get_if<OddWitness>(&pre)) {
        result.accepted = false;
        result.witness = *w;
        return result;
    }

    MOrdering ord = m_ordering(std::get<SupportGraph>(pre));
    if (!mordering_monotone(ord)) throw InternalCheckError("reordering violates monotonicity");
    Matrix<F> reordered = permute_simultaneous(m, ord.perm);
    NormalizeResult<F> norm = sign_normalize(reordered, ord);

    if (is_skew_symmetric(norm.matrix)) {
        SignCertificate cert{std::vector<int>(n, 1), std::vector<int>(n, 1)};
        for (std::size_t pos = 0; pos < n; ++pos) {
            cert.row_signs[ord.perm[pos]] = norm.row_signs[pos];
            cert.col_signs[ord.perm[pos]] = norm.col_signs[pos];
        }
        if (!is_skew_symmetric(apply_certificate(m, cert))) {
            throw InternalCheckError("certificate failed its self-check");
        }
        result.accepted = true;
        result.certificate = cert;
        return result;
    }

    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t l = 0; l < k; ++l) {
            if (norm.matrix(k, l) == -norm.matrix(l, k)) continue;
            IndexSet positions = extract_witness(norm.matrix, ord, k, l);
            std::vector<std::size_t> original;
            for (std::size_t pos : positions.zero_based()) original.push_back(ord.perm[pos]);
            OddWitness witness = detail::checked_witness(m, original);
            if (!verify_witness(m, witness)) {
                throw InternalCheckError("witness failed its self-check");
            }
            result.accepted = false;
            result.witness = witness;
            return result;
        }
    }
    throw InternalCheckError("matrix neither skew nor violating after normalization");
}

/// Decides skew-symmetrizability under arbitrary nonzero row/column scalings,
/// for any square matrix over any field. After the necessary checks (zero
/// diagonal, symmetric support) the question reduces to consistency of the
/// edge ratios rho(i,j) = -M(j,i)/M(i,j): scalars exist iff t_i = rho(i,j) t_j
/// admits a solution, which spanning-tree propagation decides; every non-tree
/// edge is checked and the first inconsistent fundamental cycle is reported.
template <ScalarType F>
ScalingRecognition<F> recognize_general_scaling(const Matrix<F>& m) {
    detail::require_square(m, "recognize_general_scaling");
    std::size_t n = m.rows();
    const FieldSpec& f = m.field();
    const F one = from_integer<F>(1, f);
    ScalingRecognition<F> result;

    for (std::size_t i = 0; i < n; ++i) {
        if (!m(i, i).is_zero()) {
            result.reject = ScalingReject{"nonzero diagonal entry at index " + std::to_string(i + 1), {}};
            return result;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m(i, j).is_zero() != m(j, i).is_zero()) {
                result.reject = ScalingReject{"asymmetric support at (" + std::to_string(i + 1) +
                                                  ", " + std::to_string(j + 1) + ")",
                                              {}};
                return result;
            }
        }
    }

    auto rho = [&](std::size_t i, std::size_t j) { return -m(j, i) / m(i, j); };

    std::vector<std::optional<F>> t(n);
    std::vector<std::size_t> parent(n, n);
    for (std::size_t root = 0; root < n; ++root) {
        if (t[root].has_value()) continue;
        t[root] = one;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || m(u, v).is_zero()) continue;
                if (!t[v].has_value()) {
                    t[v] = *t[u] / rho(u, v);
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u] && !(*t[u] == rho(u, v) * *t[v])) {
                    // fundamental cycle of edge (u, v): u -> ... -> lca <- ... <- v
                    auto path_to_root = [&](std::size_t x) {
                        std::vector<std::size_t> path{x};
                        while (parent[path.back()] != n) path.push_back(parent[path.back()]);
                        return path;
                    };
                    std::vector<std::size_t> pu = path_to_root(u), pv = path_to_root(v);
                    while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    std::vector<std::size_t> cycle;
                    for (std::size_t x : pu) cycle.push_back(x + 1);
                    for (std::size_t idx = pv.size() - 1; idx-- > 0;) cycle.push_back(pv[idx] + 1);
                    std::string text;
                    for (std::size_t x : cycle) text += " " + std::to_string(x);
                    result.reject = ScalingReject{"inconsistent cycle:" + text, cycle};
                    return result;
                }
            }
        }
    }

    ScalingCertificate<F> cert{std::vector<F>(n, one), std::vector<F>(n, one)};
    for (std::size_t i = 0; i < n; ++i) cert.row_scalars[i] = *t[i];
    if (!is_skew_symmetric(apply_certificate(m, cert))) {
        throw InternalCheckError("scaling certificate failed its self-check");
    }
    result.accepted = true;
    result.certificate = cert;
    return result;
}

} // namespace skewsign
