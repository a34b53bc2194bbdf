#pragma once

#include <functional>
#include <cstdlib>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skeinrep/matching.hpp"
#include "skeinrep/matrix.hpp"
#include "skeinrep/scalar.hpp"

namespace skeinrep {

enum class Normalization { Bracket, Rescaled };
enum class Handedness { Right, Left };

// Formal linear combination of clasp-admissible matchings of W(n*1, c).
struct SkeinVector {
    ParameterSpec spec;
    int n = 0, c = 0;
    std::map<PlanarMatching, Scalar> terms;

    void add(const PlanarMatching& m, const Scalar& coeff) {
        if (coeff.is_zero()) return;
        auto [it, fresh] = terms.emplace(m, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const SkeinVector& a, const SkeinVector& b) {
        return a.n == b.n && a.c == b.c && a.terms == b.terms;
    }
};

inline SkeinVector skein_basis_vector(const ParameterSpec& spec, const PlanarMatching& m) {
    SkeinVector v{spec, m.left_points(), m.clasp_points(), {}};
    v.add(m, Scalar(1));
    return v;
}

// Cap-cup e_h (0-based strand pair h, h+1) applied to one matching.
// Returns the image matching, a loop count, and whether the term dies on a
// clasp turnback.
struct EActionResult {
    PlanarMatching m;
    int loops = 0;
    bool dead = false;
};

inline EActionResult e_action(const PlanarMatching& m, int h) {
    int n = m.left_points();
    if (h < 0 || h + 1 >= n) throw std::domain_error("e_action: strand index out of range");
    int a = m.partner(h), b = m.partner(h + 1);
    if (a == h + 1) return {m, 1, false};
    std::vector<int> p = m.pairing();
    p[static_cast<size_t>(h)] = h + 1;
    p[static_cast<size_t>(h + 1)] = h;
    p[static_cast<size_t>(a)] = b;
    p[static_cast<size_t>(b)] = a;
    PlanarMatching out(n, m.clasp_points(), std::move(p));
    bool dead = a >= n && b >= n;
    return {out, 0, dead};
}

// One braid generator applied to a skein: a right-handed crossing resolves as
// -t^{1/4} (identity) - t^{-1/4} (e_i); left-handed swaps the exponents; the
// rescaled normalization multiplies the result by t^{1/4}.
inline SkeinVector apply_crossing(const SkeinVector& v, int strand, Handedness hand,
                                  Normalization norm = Normalization::Bracket) {
    if (strand < 1 || strand >= v.n) throw std::domain_error("apply_crossing: strand index out of range");
    const ParameterSpec& sp = v.spec;
    long sign = hand == Handedness::Right ? 1 : -1;
    Scalar id_coeff = -Scalar::s_pow(sp, sign);
    Scalar e_coeff = -Scalar::s_pow(sp, -sign);
    Scalar delta = loop_value(sp);
    SkeinVector out{sp, v.n, v.c, {}};
    for (const auto& [m, coeff] : v.terms) {
        out.add(m, coeff * id_coeff);
        EActionResult r = e_action(m, strand - 1);
        if (r.dead) continue;
        Scalar c2 = coeff * e_coeff;
        if (r.loops) c2 *= delta;
        out.add(r.m, c2);
    }
    if (norm == Normalization::Rescaled) {
        Scalar s = Scalar::s_pow(sp, 1);
        for (auto& [m, coeff] : out.terms) coeff *= s;
    }
    return out;
}

// Braid word text format: whitespace-separated nonzero integers, sign =
// handedness; `[A,B]` expands to the commutator A B A^-1 B^-1.
inline std::vector<int> parse_braid_word(const std::string& text) {
    struct Tok {
        char kind;  // 'i' integer, '[', ',', ']'
        int value;
    };
    std::vector<Tok> toks;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (ch == '[' || ch == ',' || ch == ']') {
            toks.push_back({ch, 0});
            ++i;
        } else {
            bool neg = false;
            if (ch == '-' || ch == '+') {
                neg = ch == '-';
                ++i;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("braid word: expected integer");
            long val = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) val = val * 10 + (text[i++] - '0');
            if (val == 0) throw std::invalid_argument("braid word: zero letter");
            toks.push_back({'i', static_cast<int>(neg ? -val : val)});
        }
    }
    size_t pos = 0;
    std::function<std::vector<int>()> parse_seq = [&]() -> std::vector<int> {
        std::vector<int> word;
        while (pos < toks.size() && toks[pos].kind != ',' && toks[pos].kind != ']') {
            if (toks[pos].kind == 'i') {
                word.push_back(toks[pos++].value);
                continue;
            }
            ++pos;  // '['
            std::vector<int> a = parse_seq();
            if (pos >= toks.size() || toks[pos].kind != ',') throw std::invalid_argument("braid word: expected , in commutator");
            ++pos;
            std::vector<int> b = parse_seq();
            if (pos >= toks.size() || toks[pos].kind != ']') throw std::invalid_argument("braid word: expected ] in commutator");
            ++pos;
            word.insert(word.end(), a.begin(), a.end());
            word.insert(word.end(), b.begin(), b.end());
            for (auto it = a.rbegin(); it != a.rend(); ++it) word.push_back(-*it);
            for (auto it = b.rbegin(); it != b.rend(); ++it) word.push_back(-*it);
        }
        return word;
    };
    std::vector<int> out = parse_seq();
    if (pos != toks.size()) throw std::invalid_argument("braid word: trailing tokens");
    return out;
}

inline std::vector<int> inverse_word(const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

inline SkeinVector apply_word(const SkeinVector& v, const std::vector<int>& word,
                              Normalization norm = Normalization::Bracket) {
    // The group element w = g_1 g_2 ... g_m acts as g_1(g_2(...(g_m(v)))).
    SkeinVector cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int letter = *it;
        cur = apply_crossing(cur, std::abs(letter), letter > 0 ? Handedness::Right : Handedness::Left, norm);
    }
    return cur;
}

inline Matrix<Scalar> matrix_of_word(const ParameterSpec& spec, int n, int c, const std::vector<int>& word,
                                     Normalization norm = Normalization::Bracket) {
    const auto& basis = enumerate_basis(n, c);
    Matrix<Scalar> out(basis.size(), basis.size());
    std::map<PlanarMatching, size_t> index;
    for (size_t j = 0; j < basis.size(); ++j) index[basis[j]] = j;
    for (size_t j = 0; j < basis.size(); ++j) {
        SkeinVector img = apply_word(skein_basis_vector(spec, basis[j]), word, norm);
        for (const auto& [m, coeff] : img.terms) {
            auto it = index.find(m);
            if (it == index.end()) throw std::logic_error("matrix_of_word: image left the basis");
            out(it->second, j) = coeff;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed diagrams and the Temperley-Lieb algebra on k strands.

struct ClosedDiagram {
    int loops = 0;
};

inline Scalar evaluate_closed(const ClosedDiagram& d, const ParameterSpec& p) {
    if (d.loops < 0) throw std::domain_error("evaluate_closed: negative loop count");
    return loop_value(p).pow(d.loops);
}

// Elements of TL_k as linear combinations of (k,k) diagrams.
using TLElement = std::map<PlanarMatching, Scalar>;

inline PlanarMatching tl_identity_diagram(int k) {
    std::vector<int> p(static_cast<size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
        p[static_cast<size_t>(i)] = 2 * k - 1 - i;
        p[static_cast<size_t>(2 * k - 1 - i)] = i;
    }
    return PlanarMatching(k, k, std::move(p));
}

// e_h caps strands h, h+1 (0-based) on both sides.
inline PlanarMatching tl_e_diagram(int k, int h) {
    if (h < 0 || h + 1 >= k) throw std::domain_error("tl_e_diagram: index out of range");
    std::vector<int> p(static_cast<size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
        p[static_cast<size_t>(i)] = 2 * k - 1 - i;
        p[static_cast<size_t>(2 * k - 1 - i)] = i;
    }
    auto link = [&](int a, int b) {
        p[static_cast<size_t>(a)] = b;
        p[static_cast<size_t>(b)] = a;
    };
    link(h, h + 1);
    link(2 * k - 1 - h, 2 * k - 2 - h);
    return PlanarMatching(k, k, std::move(p));
}

// Concatenation A then B (A's clasp side sewn to B's left side).
inline std::pair<PlanarMatching, int> tl_compose_diagrams(const PlanarMatching& a, const PlanarMatching& b) {
    int k = a.clasp_points();
    if (b.left_points() != k) throw std::logic_error("tl_compose_diagrams: size mismatch");
    int na = a.total_points();
    std::vector<std::pair<int, int>> sews;
    sews.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) sews.emplace_back(a.left_points() + j, na + (k - 1 - j));
    GlueOutcome g = glue_pairings(a.pairing(), b.pairing(), sews);
    int nl = a.left_points(), nr = b.clasp_points();
    auto out_index = [&](int port) {
        if (port < nl) return port;
        return nl + (port - (na + b.left_points()));
    };
    std::vector<int> p(static_cast<size_t>(nl + nr), -1);
    for (int port = 0; port < nl; ++port) p[static_cast<size_t>(out_index(port))] = out_index(g.boundary_pair[static_cast<size_t>(port)]);
    for (int j = 0; j < nr; ++j) {
        int port = na + b.left_points() + j;
        p[static_cast<size_t>(out_index(port))] = out_index(g.boundary_pair[static_cast<size_t>(port)]);
    }
    return {PlanarMatching(nl, nr, std::move(p)), g.loops};
}

inline TLElement tl_scaled(const TLElement& a, const Scalar& k) {
    TLElement out;
    for (const auto& [m, c] : a) {
        Scalar v = c * k;
        if (!v.is_zero()) out.emplace(m, v);
    }
    return out;
}

inline void tl_add_in(TLElement& a, const PlanarMatching& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = a.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

inline TLElement tl_add(const TLElement& a, const TLElement& b) {
    TLElement out = a;
    for (const auto& [m, c] : b) tl_add_in(out, m, c);
    return out;
}

inline TLElement tl_multiply(const ParameterSpec& spec, const TLElement& a, const TLElement& b) {
    Scalar delta = loop_value(spec);
    TLElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto [m, loops] = tl_compose_diagrams(ma, mb);
            Scalar c = ca * cb;
            if (loops) c *= delta.pow(loops);
            tl_add_in(out, m, c);
        }
    return out;
}

inline TLElement tl_identity(int k) {
    TLElement e;
    e.emplace(tl_identity_diagram(k), Scalar(1));
    return e;
}

inline TLElement tl_e(int k, int h) {
    TLElement e;
    e.emplace(tl_e_diagram(k, h), Scalar(1));
    return e;
}

// Markov closure: sew left i to right point at the same height, count loops.
inline Scalar tl_closure_value(const ParameterSpec& spec, const TLElement& t, int k) {
    Scalar delta = loop_value(spec);
    Scalar out(0);
    for (const auto& [m, c] : t) {
        std::vector<std::pair<int, int>> sews;
        for (int i = 0; i < k; ++i) sews.emplace_back(i, k + (k - 1 - i));
        GlueOutcome g = glue_pairings(m.pairing(), {}, sews);
        out += c * delta.pow(g.loops);
    }
    return out;
}

// Braid word as an element of TL_k under the bracket normalization.
inline TLElement word_to_tl(const ParameterSpec& spec, const std::vector<int>& word, int k) {
    TLElement cur = tl_identity(k);
    for (int letter : word) {
        int h = std::abs(letter) - 1;
        if (h + 1 >= k) throw std::domain_error("word_to_tl: strand index out of range");
        long sign = letter > 0 ? 1 : -1;
        TLElement idpart = tl_scaled(cur, -Scalar::s_pow(spec, sign));
        TLElement epart = tl_scaled(tl_multiply(spec, cur, tl_e(k, h)), -Scalar::s_pow(spec, -sign));
        cur = tl_add(idpart, epart);
    }
    return cur;
}

// Kauffman bracket of a braid closure via the skein engine, normalized so the
// empty diagram has value 1.
inline Scalar closure_bracket(const ParameterSpec& spec, const std::vector<int>& word, int k) {
    return tl_closure_value(spec, word_to_tl(spec, word, k), k);
}

// ---------------------------------------------------------------------------
// Planar diagram codes and the brute-force state-sum oracle.

// Crossing with edge labels listed counterclockwise; the over-strand occupies
// positions 1 and 3 (PD convention: position 0 is the incoming under-edge).
struct PDCrossing {
    std::array<int, 4> e{};
};

struct PDCode {
    std::vector<PDCrossing> crossings;
    int extra_loops = 0;  // crossingless unknot components
};

// Sum over all smoothings: the A-smoothing (coefficient -t^{1/4}) joins each
// over-end to its clockwise neighbour, the B-smoothing (-t^{-1/4}) to its
// counterclockwise neighbour.
inline Scalar bracket_state_sum(const ParameterSpec& spec, const PDCode& pd) {
    std::map<int, int> edge_count;
    for (const auto& x : pd.crossings)
        for (int e : x.e) ++edge_count[e];
    for (const auto& [e, cnt] : edge_count)
        if (cnt != 2) throw std::domain_error("bracket_state_sum: edge " + std::to_string(e) + " does not appear exactly twice");
    size_t k = pd.crossings.size();
    Scalar delta = loop_value(spec);
    Scalar acoeff = -Scalar::s_pow(spec, 1), bcoeff = -Scalar::s_pow(spec, -1);
    Scalar total(0);
    std::map<int, int> edge_id;
    for (const auto& [e, cnt] : edge_count) {
        int id = static_cast<int>(edge_id.size());
        edge_id[e] = id;
    }
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        std::vector<int> parent(edge_id.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) { return parent[static_cast<size_t>(v)] == v ? v : parent[static_cast<size_t>(v)] = find(parent[static_cast<size_t>(v)]); };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[static_cast<size_t>(a)] = b;
            return a != b;
        };
        int merges = 0;
        Scalar coeff(1);
        for (size_t i = 0; i < k; ++i) {
            const auto& x = pd.crossings[i];
            bool a_type = (mask >> i) & 1;
            coeff *= a_type ? acoeff : bcoeff;
            int p0 = edge_id[x.e[0]], p1 = edge_id[x.e[1]], p2 = edge_id[x.e[2]], p3 = edge_id[x.e[3]];
            if (a_type) {
                merges += unite(p1, p0) ? 1 : 0;
                merges += unite(p3, p2) ? 1 : 0;
            } else {
                merges += unite(p1, p2) ? 1 : 0;
                merges += unite(p3, p0) ? 1 : 0;
            }
        }
        int loops = static_cast<int>(edge_id.size()) - merges;
        total += coeff * delta.pow(loops);
    }
    return total * delta.pow(pd.extra_loops);
}

// PD code of the closure of a braid word on k strands. Positive letters put
// strand j over strand j+1.
inline PDCode braid_closure_pd(const std::vector<int>& word, int k) {
    PDCode pd;
    std::vector<int> cur(static_cast<size_t>(k)), first(static_cast<size_t>(k));
    int next_edge = 0;
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = first[static_cast<size_t>(i)] = next_edge++;
    std::vector<bool> touched(static_cast<size_t>(k), false);
    for (int letter : word) {
        int j = std::abs(letter) - 1;
        if (j + 1 >= k) throw std::domain_error("braid_closure_pd: strand index out of range");
        int u = cur[static_cast<size_t>(j)], v = cur[static_cast<size_t>(j + 1)];
        int w = next_edge++, z = next_edge++;
        // corners around the crossing: NW=u in (pos j), SW=v in (pos j+1),
        // NE=w out (pos j), SE=z out (pos j+1); ccw from SW: v, z, w, u.
        PDCrossing x;
        if (letter > 0) {
            x.e = {v, z, w, u};  // strand j over (NW-SE), over-pair at slots 1,3
        } else {
            x.e = {u, v, z, w};  // strand j+1 over (SW-NE)
        }
        pd.crossings.push_back(x);
        cur[static_cast<size_t>(j)] = w;
        cur[static_cast<size_t>(j + 1)] = z;
        touched[static_cast<size_t>(j)] = touched[static_cast<size_t>(j + 1)] = true;
    }
    // Close up: identify the final edge of each strand with its initial edge.
    std::map<int, int> rename;
    std::function<int(int)> resolve = [&](int e) {
        auto it = rename.find(e);
        return it == rename.end() ? e : resolve(it->second);
    };
    for (int i = 0; i < k; ++i) {
        if (!touched[static_cast<size_t>(i)]) {
            ++pd.extra_loops;  // a strand with no crossings closes to an unknot
            continue;
        }
        int a = resolve(cur[static_cast<size_t>(i)]), b = resolve(first[static_cast<size_t>(i)]);
        if (a != b) rename[a] = b;
    }
    for (auto& x : pd.crossings)
        for (auto& e : x.e) e = resolve(e);
    return pd;
}

}  // namespace skeinrep
