#include <catch2/catch_amalgamated.hpp>

#include "skeinrep/projector.hpp"

using namespace skeinrep;

namespace {

bool tl_equal(const TLElement& a, const TLElement& b) { return a == b; }

}  // namespace

TEST_CASE("small Jones-Wenzl expansions") {
    ParameterSpec g = ParameterSpec::generic();
    const TLElement& p1 = jones_wenzl(1, g);
    CHECK(tl_equal(p1, tl_identity(1)));
    // JW_2 = id + (1/[2]) e_1, one unrolling of the recursion by hand
    const TLElement& p2 = jones_wenzl(2, g);
    TLElement expect = tl_add(tl_identity(2), tl_scaled(tl_e(2, 0), Scalar(1) / quantum_integer(2, g)));
    CHECK(tl_equal(p2, expect));
}

TEST_CASE("idempotence and annihilation up to color 6, generic") {
    ParameterSpec g = ParameterSpec::generic();
    for (long c = 1; c <= 6; ++c) {
        const TLElement& p = jones_wenzl(c, g);
        CHECK(tl_equal(tl_multiply(g, p, p), p));
        for (int i = 0; i + 1 < c; ++i) {
            CHECK(tl_multiply(g, tl_e(static_cast<int>(c), i), p).empty());
            CHECK(tl_multiply(g, p, tl_e(static_cast<int>(c), i)).empty());
        }
        // the coefficient of the identity diagram is 1
        auto it = p.find(tl_identity_diagram(static_cast<int>(c)));
        REQUIRE(it != p.end());
        CHECK(it->second == Scalar(1));
    }
}

TEST_CASE("idempotence at roots of unity for admissible colors") {
    for (long r : {5L, 7L}) {
        ParameterSpec p = ParameterSpec::root_of_unity(r);
        for (long c = 1; c <= r - 2; ++c) {
            const TLElement& jw = jones_wenzl(c, p);
            CHECK(tl_equal(tl_multiply(p, jw, jw), jw));
        }
    }
}

TEST_CASE("inadmissible color raises") {
    ParameterSpec r5 = ParameterSpec::root_of_unity(5);
    CHECK_THROWS_AS(jones_wenzl(5, r5), std::domain_error);
    CHECK_NOTHROW(jones_wenzl(4, r5));
}

TEST_CASE("clasp composition") {
    ParameterSpec g = ParameterSpec::generic();
    // c = 1: identity map on the (3,1) basis
    for (const auto& m : enumerate_basis(3, 1)) {
        SkeinVector v = skein_basis_vector(g, m);
        CHECK(clasp_compose(v) == v);
    }
    // c = 0: identity
    for (const auto& m : enumerate_basis(4, 0)) {
        SkeinVector v = skein_basis_vector(g, m);
        CHECK(clasp_compose(v) == v);
    }
    // a clasp turnback pre-composed with the projector dies, c <= 4
    for (int c = 2; c <= 4; ++c) {
        const TLElement& jw = jones_wenzl(c, g);
        TLElement e = tl_e(c, 0);
        CHECK(tl_multiply(g, e, jw).empty());
    }
    // clasp_compose is idempotent on W(4*1,2)
    for (const auto& m : enumerate_basis(4, 2)) {
        SkeinVector once = clasp_compose(skein_basis_vector(g, m));
        CHECK(clasp_compose(once) == once);
    }
}

TEST_CASE("projector expansion sizes match TL dimensions") {
    // the expansion of JW_c touches every (c,c) diagram with nonzero
    // coefficient for generic t
    ParameterSpec g = ParameterSpec::generic();
    CHECK(jones_wenzl(3, g).size() == enumerate_tl_diagrams(3).size());
    CHECK(jones_wenzl(4, g).size() == enumerate_tl_diagrams(4).size());
}
