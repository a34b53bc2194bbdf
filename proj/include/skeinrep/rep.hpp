#pragma once

#include <cstdlib>
#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skeinrep/dimension.hpp"
#include "skeinrep/matrix.hpp"
#include "skeinrep/projector.hpp"
#include "skeinrep/skein.hpp"

namespace skeinrep {

// Gram matrix of the invariant pairing on W(n*1,c): mirror gluing with one
// JW_c inserted where the clasps meet (the n single strands are sewn
// directly, their color-1 projectors being trivial).
inline Matrix<Scalar> gram_matrix(int n, int c, const ParameterSpec& spec) {
    const auto& basis = enumerate_basis(n, c);
    const TLElement& jw = jones_wenzl(c, spec);
    Scalar delta = loop_value(spec);
    size_t dim = basis.size();
    Matrix<Scalar> g(dim, dim);
    int m = n + c;
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i; j < dim; ++j) {
            Scalar entry(0);
            for (const auto& [t, tc] : jw) {
                // block a: basis[i]; block b: basis[j] followed by t
                std::vector<int> bblock = basis[j].pairing();
                bblock.reserve(static_cast<size_t>(m + 2 * c));
                for (int p = 0; p < 2 * c; ++p) bblock.push_back(t.partner(p) + m);
                std::vector<std::pair<int, int>> sews;
                for (int p = 0; p < n; ++p) sews.emplace_back(p, m + p);
                for (int q = 0; q < c; ++q) {
                    sews.emplace_back(n + q, m + m + (c - 1 - q));   // A clasp ~ T left
                    sews.emplace_back(m + m + c + q, m + n + q);     // T right ~ B clasp
                }
                GlueOutcome out = glue_pairings(basis[i].pairing(), bblock, sews);
                entry += tc * delta.pow(out.loops);
            }
            g(i, j) = entry;
            g(j, i) = std::move(entry);
        }
    }
    return g;
}

// A built (possibly reduced) Jones representation of B_n on X(n*1, c, t).
struct RepresentationHandle {
    ParameterSpec spec;
    int n = 0, c = 0;
    Normalization norm = Normalization::Bracket;
    std::vector<PlanarMatching> ambient_basis;
    bool reduced = false;
    std::vector<size_t> pivots;       // ambient indices spanning the quotient
    Matrix<Scalar> projection;        // dim x ambient quotient map
    std::vector<Matrix<Scalar>> gens; // tau_1 .. tau_{n-1} on the (reduced) space
    std::vector<Matrix<Scalar>> gen_invs;
    Matrix<Scalar> gram;              // Gram on the (reduced) basis
    Matrix<Scalar> gram_ambient;

    size_t dim() const { return pivots.size(); }

    const Matrix<Scalar>& generator(int i) const {
        if (i == 0 || std::abs(i) >= n) throw std::domain_error("generator index out of range");
        return i > 0 ? gens[static_cast<size_t>(i - 1)] : gen_invs[static_cast<size_t>(-i - 1)];
    }

    Matrix<Scalar> word_matrix(const std::vector<int>& word) const {
        Matrix<Scalar> m = Matrix<Scalar>::identity(dim());
        for (int letter : word) m = m * generator(letter);
        return m;
    }

    // Permutation of the ambient basis induced by the vertical flip; the flip
    // conjugates tau_i to tau_{n-i}.
    std::vector<size_t> flip_permutation() const {
        std::vector<size_t> perm(ambient_basis.size());
        for (size_t i = 0; i < ambient_basis.size(); ++i) {
            PlanarMatching f = ambient_basis[i].flipped();
            auto it = std::lower_bound(ambient_basis.begin(), ambient_basis.end(), f);
            if (it == ambient_basis.end() || !(*it == f)) throw std::logic_error("flip left the basis");
            perm[i] = static_cast<size_t>(it - ambient_basis.begin());
        }
        return perm;
    }
};

// Assembles generator matrices, the Gram form, and (at roots of unity) the
// quotient by the Gram kernel.
inline RepresentationHandle build(int n, int c, const ParameterSpec& spec,
                                  Normalization norm = Normalization::Bracket) {
    if (n < 0 || c < 0 || (n + c) % 2 != 0) throw std::domain_error("build: parity violation");
    if (spec.exact && spec.r > 0 && c > spec.r - 2)
        throw std::domain_error("build: inadmissible color (c > r-2)");
    RepresentationHandle h;
    h.spec = spec;
    h.n = n;
    h.c = c;
    h.norm = norm;
    h.ambient_basis = enumerate_basis(n, c);
    size_t adim = h.ambient_basis.size();
    h.gram_ambient = gram_matrix(n, c, spec);

    std::vector<Matrix<Scalar>> amb_gens, amb_invs;
    for (int i = 1; i < n; ++i) {
        amb_gens.push_back(matrix_of_word(spec, n, c, {i}, norm));
        amb_invs.push_back(matrix_of_word(spec, n, c, {-i}, norm));
    }
    if (norm == Normalization::Rescaled) {
        // change to the parity-scaled basis: odd matchings carry t^{1/2}
        Matrix<Scalar> d(adim, adim), dinv(adim, adim);
        for (size_t j = 0; j < adim; ++j) {
            long p = h.ambient_basis[j].bicolor_parity();
            d(j, j) = Scalar::s_pow(spec, 2 * p);
            dinv(j, j) = Scalar::s_pow(spec, -2 * p);
        }
        for (auto& m : amb_gens) m = dinv * m * d;
        for (auto& m : amb_invs) m = dinv * m * d;
    }

    Matrix<Scalar> gr = h.gram_ambient;
    auto piv = gr.rref();
    if (piv.size() == adim) {
        h.reduced = false;
        h.pivots.resize(adim);
        for (size_t i = 0; i < adim; ++i) h.pivots[i] = i;
        h.projection = Matrix<Scalar>::identity(adim);
        h.gens = std::move(amb_gens);
        h.gen_invs = std::move(amb_invs);
        h.gram = h.gram_ambient;
        return h;
    }
    // Quotient by the Gram kernel: pivots index the quotient basis, and the
    // reduced row echelon form expresses each free coordinate through them.
    h.reduced = true;
    h.pivots = piv;
    size_t dim = piv.size();
    h.projection = Matrix<Scalar>(dim, adim);
    std::vector<bool> is_pivot(adim, false);
    for (size_t i = 0; i < dim; ++i) {
        h.projection(i, piv[i]) = Scalar(1);
        is_pivot[piv[i]] = true;
    }
    for (size_t f = 0; f < adim; ++f) {
        if (is_pivot[f]) continue;
        for (size_t i = 0; i < dim; ++i) h.projection(i, f) = gr(i, f);
    }
    auto kernel = h.gram_ambient.kernel_basis();
    auto project = [&](const Matrix<Scalar>& m) {
        Matrix<Scalar> sel(adim, dim);
        for (size_t j = 0; j < dim; ++j) sel(piv[j], j) = Scalar(1);
        Matrix<Scalar> red = h.projection * m * sel;
        // well-definedness: the operator must preserve the kernel
        for (const auto& kv : kernel) {
            std::vector<Scalar> img(adim, Scalar(0));
            for (size_t i = 0; i < adim; ++i)
                for (size_t j = 0; j < adim; ++j)
                    if (!kv[j].is_zero()) img[i] += m(i, j) * kv[j];
            for (size_t i = 0; i < dim; ++i) {
                Scalar acc(0);
                for (size_t j = 0; j < adim; ++j) acc += h.projection(i, j) * img[j];
                if (!acc.is_zero()) throw std::logic_error("build: Gram kernel not invariant");
            }
        }
        return red;
    };
    for (auto& m : amb_gens) h.gens.push_back(project(m));
    for (auto& m : amb_invs) h.gen_invs.push_back(project(m));
    h.gram = Matrix<Scalar>(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) h.gram(i, j) = h.gram_ambient(piv[i], piv[j]);
    if (spec.exact && spec.r > 0) {
        long long expect = dimension(n, c, spec.r);
        if (static_cast<long long>(dim) != expect)
            throw std::logic_error("build: reduced dimension disagrees with the recurrence");
    }
    return h;
}

// Checks M_i(s^{-1})^T G M_i(s) = G exactly for every generator; at |t| = 1
// this is invariance of the Hermitian form.
inline bool invariance_check(const RepresentationHandle& h) {
    for (const auto& m : h.gens) {
        Matrix<Scalar> barT = m.map([](const Scalar& x) { return x.bar(); }).transpose();
        if (!(barT * h.gram * m == h.gram)) return false;
    }
    return true;
}

// Full twist on the first k strands (or last k when from_top is false) as a
// braid word: (sigma_1 ... sigma_{k-1})^k, shifted for the last strands.
inline std::vector<int> full_twist_word(int n, int k, bool first_strands = true) {
    if (k < 1 || k > n) throw std::domain_error("full_twist_word: bad strand count");
    std::vector<int> w;
    int base = first_strands ? 0 : n - k;
    for (int rep = 0; rep < k; ++rep)
        for (int i = 1; i < k; ++i) w.push_back(base + i);
    return w;
}

struct FullTwistSplit {
    // colors[i], eigenvalue[i], eigenbasis[i] (columns in the handle's basis)
    std::vector<long> colors;
    std::vector<Scalar> eigenvalues;
    std::vector<std::vector<std::vector<Scalar>>> bases;
    std::vector<size_t> dims;
};

// Splits X(n*1,c) under B_{n-1} via the full twist on n-1 strands.  In the
// bracket normalization Delta^2_k acts on the color-a summand by
// t^{(a(a+2) - 3k)/4}; the sign (-1)^{a+k} is +1 because a and k always have
// equal parity here.  The rescaled normalization adds s^{k(k-1)} per word.
inline FullTwistSplit full_twist_split(const RepresentationHandle& h, bool first_strands = true) {
    int k = h.n - 1;
    if (h.dim() == 0) throw std::domain_error("full_twist_split: zero space");
    Matrix<Scalar> m = h.word_matrix(full_twist_word(h.n, k, first_strands));
    long r = (h.spec.exact && h.spec.r > 0) ? h.spec.r : r_infinity;
    FullTwistSplit out;
    for (long a : {h.c - 1, h.c + 1}) {
        if (a < 0) continue;
        if (r != r_infinity && a > r - 2) continue;
        long long d = dimension(h.n - 1, a, r);
        if (d == 0) continue;
        Scalar lambda = Scalar::s_pow(h.spec, a * (a + 2) - 3 * k);
        if (h.norm == Normalization::Rescaled) lambda *= Scalar::s_pow(h.spec, k * (k - 1));
        Matrix<Scalar> shifted = m;
        for (size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
        auto kernel = shifted.kernel_basis();
        if (static_cast<long long>(kernel.size()) != d)
            throw std::logic_error("full_twist_split: eigenspace dimension disagrees with d(n-1,a,r)");
        out.colors.push_back(a);
        out.eigenvalues.push_back(lambda);
        out.bases.push_back(std::move(kernel));
        out.dims.push_back(static_cast<size_t>(d));
    }
    size_t total = 0;
    for (size_t d : out.dims) total += d;
    if (total != h.dim()) throw std::logic_error("full_twist_split: eigenspaces do not fill the space");
    return out;
}

// ---------------------------------------------------------------------------
// The change-of-basis identity between the two splittings of X(c,1,c,1).

// Skein vectors in the square with boundary, counterclockwise: bottom
// 0..c-1 (left to right), right c, top c+1..2c (right to left), left 2c+1.
using SquareVector = std::map<PlanarMatching, Scalar>;

namespace detail {

inline void square_add(SquareVector& v, const PlanarMatching& m, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = v.emplace(m, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) v.erase(it);
    }
}

// Channel vector along one diagonal cut. group1/group2 list the boundary
// points of the two contiguous groups in ccw order; chords pair group1[i]
// with group2[g2sz-1-i] after both groups lose `capped` leading points.
inline SquareVector channel_vector(int c, long a, const std::vector<int>& group1,
                                   const std::vector<int>& group2, const ParameterSpec& spec) {
    int total = 2 * c + 2;
    std::vector<int> g1 = group1, g2 = group2;
    std::vector<std::pair<int, int>> caps;
    if (a == c - 1) {
        caps.emplace_back(g1[0], g1[1]);
        caps.emplace_back(g2[0], g2[1]);
        g1.erase(g1.begin(), g1.begin() + 2);
        g2.erase(g2.begin(), g2.begin() + 2);
    } else if (a != c + 1) {
        throw std::domain_error("channel_vector: channel must be c-1 or c+1");
    }
    size_t width = g1.size();
    const TLElement& jw = jones_wenzl(a, spec);
    SquareVector out;
    for (const auto& [t, tc] : jw) {
        std::vector<int> pair(static_cast<size_t>(total), -1);
        for (auto [x, y] : caps) {
            pair[static_cast<size_t>(x)] = y;
            pair[static_cast<size_t>(y)] = x;
        }
        // chord i runs g1[i] -> T.left_i; T.right at height j exits chord
        // width-1-j on the group2 side, i.e. boundary g2[width-1-(width-1-j)]..
        auto boundary_of_tport = [&](int tp) {
            if (tp < static_cast<int>(width)) return g1[static_cast<size_t>(tp)];
            int j = tp - static_cast<int>(width);            // right index, bottom to top
            int chord = static_cast<int>(width) - 1 - j;     // cut position of that height
            return g2[static_cast<size_t>(static_cast<int>(width) - 1 - chord)];
        };
        for (int tp = 0; tp < 2 * static_cast<int>(width); ++tp) {
            int q = t.partner(tp);
            int bp = boundary_of_tport(tp), bq = boundary_of_tport(q);
            pair[static_cast<size_t>(bp)] = bq;
            pair[static_cast<size_t>(bq)] = bp;
        }
        square_add(out, PlanarMatching(total, 0, std::move(pair)), tc);
    }
    return out;
}

// Composes JW_c onto a contiguous run of boundary points (listed in ccw
// order), multiplying loop factors in.
inline SquareVector dress_with_projector(const SquareVector& v, const std::vector<int>& points,
                                         const ParameterSpec& spec) {
    int c = static_cast<int>(points.size());
    const TLElement& jw = jones_wenzl(c, spec);
    Scalar delta = loop_value(spec);
    SquareVector out;
    for (const auto& [m, coeff] : v) {
        int total = m.total_points();
        for (const auto& [u, uc] : jw) {
            std::vector<std::pair<int, int>> sews;
            for (int l = 0; l < c; ++l) sews.emplace_back(points[static_cast<size_t>(l)], total + l);
            GlueOutcome g = glue_pairings(m.pairing(), u.pairing(), sews);
            // U.right height j lands back on boundary slot points[c-1-j]
            auto to_boundary = [&](int port) -> int {
                if (port < total) return port;
                int j = port - total - c;
                return points[static_cast<size_t>(c - 1 - j)];
            };
            std::vector<int> pair(static_cast<size_t>(total), -1);
            for (int p = 0; p < total + 2 * c; ++p) {
                int q = g.boundary_pair[static_cast<size_t>(p)];
                if (q < 0) continue;
                int bp = to_boundary(p), bq = to_boundary(q);
                pair[static_cast<size_t>(bp)] = bq;
                pair[static_cast<size_t>(bq)] = bp;
            }
            Scalar k = coeff * uc;
            if (g.loops) k *= delta.pow(g.loops);
            square_add(out, PlanarMatching(total, 0, std::move(pair)), k);
        }
    }
    return out;
}

inline SquareVector square_scaled(const SquareVector& v, const Scalar& k) {
    SquareVector out;
    for (const auto& [m, c] : v) {
        Scalar x = c * k;
        if (!x.is_zero()) out.emplace(m, x);
    }
    return out;
}

inline SquareVector square_sum(const SquareVector& a, const SquareVector& b) {
    SquareVector out = a;
    for (const auto& [m, c] : b) square_add(out, m, c);
    return out;
}

}  // namespace detail

struct CobData {
    bool identities_hold = false;
    Matrix<Scalar> matrix;  // rows: v2 and v1 in the (w1, w2) basis
};

// Verifies the explicit change-of-basis identities between the two diagonal
// splittings of X(c,1,c,1):
//   v1 = ([c][c+2]/[c+1]^2) w1 + (1/[c+1]) w2
//   v2 = -(1/[c+1]) w1 + w2
// with v1, w2 the (c+1)-channels and v2, w1 the (c-1)-channels.
inline CobData cob_identity_check(int c, const ParameterSpec& spec) {
    if (c < 1) throw std::domain_error("cob_identity_check: c < 1");
    if (spec.exact && spec.r > 0 && c + 2 > spec.r - 1)
        throw std::domain_error("cob_identity_check: inadmissible color");
    std::vector<int> bottom, top_rl, vcut1, vcut2, wcut1, wcut2;
    for (int i = 0; i < c; ++i) bottom.push_back(i);
    for (int i = 0; i < c; ++i) top_rl.push_back(c + 1 + i);  // right to left
    // v-cut groups {left, bottom} | {right, top}
    vcut1.push_back(2 * c + 1);
    for (int i = 0; i < c; ++i) vcut1.push_back(i);
    vcut2.push_back(c);
    for (int i = 0; i < c; ++i) vcut2.push_back(c + 1 + i);
    // w-cut groups {bottom, right} | {top, left}; caps must sit at the single
    // strand, so list each group starting from it.
    wcut1.push_back(c);
    for (int i = c - 1; i >= 0; --i) wcut1.push_back(i);
    wcut2.push_back(2 * c + 1);
    for (int i = 2 * c; i >= c + 1; --i) wcut2.push_back(i);

    auto dress = [&](SquareVector v) {
        v = detail::dress_with_projector(v, bottom, spec);
        v = detail::dress_with_projector(v, top_rl, spec);
        return v;
    };
    SquareVector v1 = dress(detail::channel_vector(c, c + 1, vcut1, vcut2, spec));
    SquareVector v2 = dress(detail::channel_vector(c, c - 1, vcut1, vcut2, spec));
    SquareVector w1 = dress(detail::channel_vector(c, c - 1, wcut1, wcut2, spec));
    SquareVector w2 = dress(detail::channel_vector(c, c + 1, wcut1, wcut2, spec));

    Scalar qc = quantum_integer(c, spec), qc1 = quantum_integer(c + 1, spec), qc2 = quantum_integer(c + 2, spec);
    Scalar a11 = -(Scalar(1) / qc1), a12 = Scalar(1);
    Scalar a21 = qc * qc2 / (qc1 * qc1), a22 = Scalar(1) / qc1;
    CobData out;
    out.matrix = Matrix<Scalar>(2, 2);
    out.matrix(0, 0) = a11;
    out.matrix(0, 1) = a12;
    out.matrix(1, 0) = a21;
    out.matrix(1, 1) = a22;
    SquareVector rhs2 = detail::square_sum(detail::square_scaled(w1, a11), detail::square_scaled(w2, a12));
    SquareVector rhs1 = detail::square_sum(detail::square_scaled(w1, a21), detail::square_scaled(w2, a22));
    out.identities_hold = (v1 == rhs1) && (v2 == rhs2);
    return out;
}

}  // namespace skeinrep
