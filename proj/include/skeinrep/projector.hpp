#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "skeinrep/skein.hpp"

namespace skeinrep {

using ProjectorExpansion = TLElement;

namespace detail {

inline TLElement embed_with_bottom_strand(const TLElement& t, int c) {
    // TL_{c-1} -> TL_c, tensoring with one strand at the bottom.
    TLElement out;
    for (const auto& [m, coeff] : t) {
        int k = c - 1;
        std::vector<int> p(static_cast<size_t>(2 * c), -1);
        auto remap = [&](int port) {
            return port < k ? port : c + (port - k) + 1;  // old right j -> new right j+1
        };
        for (int i = 0; i < 2 * k; ++i) p[static_cast<size_t>(remap(i))] = remap(m.partner(i));
        p[static_cast<size_t>(c - 1)] = c;  // the new bottom strand
        p[static_cast<size_t>(c)] = c - 1;
        out.emplace(PlanarMatching(c, c, std::move(p)), coeff);
    }
    return out;
}

inline TLElement jones_wenzl_recursive(long c, const ParameterSpec& spec) {
    if (c == 0) {
        TLElement e;
        e.emplace(PlanarMatching(0, 0, {}), Scalar(1));
        return e;
    }
    if (c == 1) return tl_identity(1);
    TLElement prev = jones_wenzl_recursive(c - 1, spec);
    TLElement p = embed_with_bottom_strand(prev, static_cast<int>(c));
    Scalar ratio = quantum_integer(c - 1, spec) / quantum_integer(c, spec);
    TLElement pe = tl_multiply(spec, p, tl_e(static_cast<int>(c), static_cast<int>(c) - 2));
    TLElement pep = tl_multiply(spec, pe, p);
    return tl_add(p, tl_scaled(pep, ratio));
}

}  // namespace detail

// Exact specialization of a generic scalar at the parameter's recorded root,
// with an explicit nonvanishing check on the denominator.
inline Scalar specialize(const Scalar& x, const ParameterSpec& p) {
    if (x.is_rational_const()) return x;
    if (x.is_field_elem()) throw std::logic_error("specialize: scalar already specialized");
    const RatFunc& f = x.ratfunc();
    Scalar den = Scalar::embed_laurent(p, f.den);
    if (den.is_zero()) throw std::domain_error("specialize: denominator vanishes at this parameter");
    return Scalar::embed_laurent(p, f.num) / den;
}

// Jones-Wenzl projector of color c as an exact expansion in (c,c) diagrams.
// At a root of unity of order r the projector exists only for c <= r-1; the
// expansion is computed generically and specialized, falling back to the
// in-field recursion if a reduced denominator vanishes.
inline const TLElement& jones_wenzl(long c, const ParameterSpec& spec) {
    static std::map<std::pair<long, std::string>, TLElement> cache;
    static std::mutex mu;
    if (c < 0) throw std::domain_error("jones_wenzl: negative color");
    if (spec.kind == ParamKind::RootOfUnity || spec.kind == ParamKind::UnitCircle) {
        if (spec.exact && spec.r > 0 && c > spec.r - 1)
            throw std::domain_error("jones_wenzl: inadmissible color c=" + std::to_string(c) +
                                    " at a root of unity of order " + std::to_string(spec.r) +
                                    " ([" + std::to_string(spec.r) + "] = 0 appears in a denominator)");
    }
    if (!spec.is_generic())
        for (long k = 2; k <= c; ++k)
            if (quantum_integer(k, spec).is_zero())
                throw std::domain_error("jones_wenzl: [" + std::to_string(k) + "] vanishes at this parameter");
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(c, spec.label);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TLElement result;
    if (spec.is_generic()) {
        result = detail::jones_wenzl_recursive(c, spec);
    } else {
        auto git = cache.find(std::make_pair(c, std::string("generic")));
        if (git == cache.end())
            git = cache.emplace(std::make_pair(c, std::string("generic")),
                                detail::jones_wenzl_recursive(c, ParameterSpec::generic()))
                      .first;
        try {
            for (const auto& [m, coeff] : git->second) {
                Scalar v = specialize(coeff, spec);
                if (!v.is_zero()) result.emplace(m, v);
            }
        } catch (const std::domain_error&) {
            result = detail::jones_wenzl_recursive(c, spec);
        }
    }
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

// Composes the clasp side of every matching with JW_c, renormalizing into the
// matching basis; terms acquiring a clasp turnback die.
inline SkeinVector clasp_compose(const SkeinVector& v) {
    const TLElement& jw = jones_wenzl(v.c, v.spec);
    Scalar delta = loop_value(v.spec);
    SkeinVector out{v.spec, v.n, v.c, {}};
    for (const auto& [m, coeff] : v.terms) {
        for (const auto& [t, tc] : jw) {
            auto [glued, loops] = tl_compose_diagrams(m, t);
            if (glued.has_clasp_turnback()) continue;
            Scalar k = coeff * tc;
            if (loops) k *= delta.pow(loops);
            out.add(glued, k);
        }
    }
    return out;
}

}  // namespace skeinrep
