#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skeinrep/laurent.hpp"
#include "skeinrep/numberfield.hpp"
#include "skeinrep/scalar.hpp"

using namespace skeinrep;

TEST_CASE("quantum integers") {
    ParameterSpec g = ParameterSpec::generic();
    CHECK(quantum_integer(1, g) == Scalar(1));
    // [2] = s^2 + s^-2
    Laurent two = Laurent::s_pow(2) + Laurent::s_pow(-2);
    CHECK(quantum_integer(2, g) == Scalar(two));
    // [3] = s^4 + 1 + s^-4, computed by expanding the defining quotient:
    // (t^{3/2} - t^{-3/2}) / (t^{1/2} - t^{-1/2}) = t + 1 + t^{-1}
    Laurent three = Laurent::s_pow(4) + Laurent::one() + Laurent::s_pow(-4);
    CHECK(quantum_integer(3, g) == Scalar(three));
    CHECK(quantum_integer(0, g).is_zero());
    CHECK(quantum_integer(-4, g) == -quantum_integer(4, g));
}

TEST_CASE("quantum integer product rule [n][2] = [n+1] + [n-1]") {
    ParameterSpec g = ParameterSpec::generic();
    Scalar two = quantum_integer(2, g);
    for (long n = -20; n <= 20; ++n) {
        CHECK(quantum_integer(n, g) * two == quantum_integer(n + 1, g) + quantum_integer(n - 1, g));
    }
}

TEST_CASE("bar involution on random Laurent polynomials") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5), expo(-6, 6);
    ParameterSpec g = ParameterSpec::generic();
    for (int trial = 0; trial < 30; ++trial) {
        Laurent a, b;
        for (int k = 0; k < 5; ++k) {
            a += Laurent(expo(rng), Rational(coef(rng)));
            b += Laurent(expo(rng), Rational(coef(rng)));
        }
        Scalar x(a), y(b);
        CHECK(x.bar().bar() == x);
        CHECK((x * y).bar() == x.bar() * y.bar());
        CHECK((x + y).bar() == x.bar() + y.bar());
    }
}

TEST_CASE("scalar printing and parsing round-trip") {
    ParameterSpec g = ParameterSpec::generic();
    Scalar delta = loop_value(g);
    CHECK(delta.str() == "-s^2 - s^-2");
    CHECK(Scalar::parse(g, delta.str()) == delta);
    Scalar q = quantum_integer(3, g) / quantum_integer(2, g);
    CHECK(Scalar::parse(g, q.str()) == q);
    CHECK(Laurent::parse("3/2*s^4 + 1 - s^-1").coeff(4) == Rational(3, 2));
}

TEST_CASE("rational function arithmetic") {
    ParameterSpec g = ParameterSpec::generic();
    Scalar a = quantum_integer(5, g) / quantum_integer(3, g);
    Scalar b = quantum_integer(3, g) / quantum_integer(5, g);
    CHECK(a * b == Scalar(1));
    CHECK(a.inverse() == b);
    CHECK((a - a).is_zero());
}

TEST_CASE("numeric evaluation") {
    ParameterSpec g = ParameterSpec::generic();
    // [2] at t = 4 (s = sqrt 2) evaluates to 2 + 1/2
    Cplx s0 = std::sqrt(Cplx(2.0L));
    CHECK(std::abs(quantum_integer(2, g).eval(s0) - Cplx(2.5L)) < 1e-15L);
    // delta at t = 1 via the recorded rational fourth root s = 1
    ParameterSpec one = ParameterSpec::rational_value(Rational(1));
    CHECK(std::abs(loop_value(one).eval(one) - Cplx(-2.0L)) < 1e-15L);
    // [5] vanishes at a primitive 5th root of t
    ParameterSpec r5 = ParameterSpec::root_of_unity(5);
    CHECK(quantum_integer(5, r5).is_zero());
    CHECK(std::abs(quantum_integer(5, ParameterSpec::generic()).eval(r5.s_value)) < 1e-15L);
}

TEST_CASE("root of unity specialization: [r] = 0 and [c] != 0 below") {
    for (long r : {3L, 4L, 5L, 7L, 10L}) {
        ParameterSpec p = ParameterSpec::root_of_unity(r);
        CHECK(quantum_integer(r, p).is_zero());
        for (long c = 1; c < r; ++c) CHECK(!quantum_integer(c, p).is_zero());
    }
}

TEST_CASE("recorded fourth root has order 4r") {
    for (long r : {3L, 5L, 10L, 4L, 8L}) {
        ParameterSpec p = ParameterSpec::root_of_unity(r);
        CHECK(p.field->cyclotomic_order == 4 * r);
        // s^4 is a primitive r-th root: [r](s) = 0 exactly, checked above;
        // numerically t = s^4 matches exp(2 pi i / r).
        Cplx t = std::pow(p.s_value, Cplx(4.0L));
        long double ang = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(r);
        CHECK(std::abs(t - Cplx(std::cos(ang), std::sin(ang))) < 1e-15L);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == QPoly(std::vector<Rational>{-1, 1}));
    CHECK(cyclotomic_poly(2) == QPoly(std::vector<Rational>{1, 1}));
    CHECK(cyclotomic_poly(4) == QPoly(std::vector<Rational>{1, 0, 1}));
    CHECK(cyclotomic_poly(5) == QPoly(std::vector<Rational>{1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(12).degree() == 4);
    CHECK(euler_phi(40) == 16);
}

TEST_CASE("min poly of 2cos(2pi/n)") {
    // 2cos(2pi/5) = (sqrt5 - 1)/2 satisfies y^2 + y - 1
    CHECK(min_poly_2cos(5) == QPoly(std::vector<Rational>{-1, 1, 1}));
    // 2cos(2pi/7): y^3 + y^2 - 2y - 1
    CHECK(min_poly_2cos(7) == QPoly(std::vector<Rational>{-1, -2, 1, 1}));
    CHECK(min_poly_2cos(6) == QPoly(std::vector<Rational>{-1, 1}));
}

TEST_CASE("number field arithmetic and bar") {
    FieldPtr f = NumberField::cyclotomic(40);
    NFElem s = NFElem::gen(f);
    NFElem one(f, Rational(1));
    CHECK(s * s.inverse() == one);
    // bar is complex conjugation on a cyclotomic field
    NFElem x = s * s + NFElem(f, Rational(3)) * s.inverse();
    Cplx xv = x.eval(), xb = x.bar().eval();
    CHECK(std::abs(xv - std::conj(xb)) < 1e-15L);
    CHECK(x.bar().bar() == x);
}

TEST_CASE("rational value parameter picks an exact fourth root") {
    ParameterSpec p16 = ParameterSpec::rational_value(Rational(16));
    CHECK(p16.field->modulus == QPoly(std::vector<Rational>{-2, 1}));  // s = 2
    ParameterSpec p2 = ParameterSpec::rational_value(Rational(4));
    CHECK(p2.field->modulus == QPoly(std::vector<Rational>{-2, 0, 1}));  // s^2 = 2
    ParameterSpec pm4 = ParameterSpec::rational_value(Rational(-4));
    // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2); principal root 1 + i
    CHECK(pm4.field->modulus == QPoly(std::vector<Rational>{2, -2, 1}));
    Scalar t = Scalar::t_pow(pm4, 1);
    CHECK(t == Scalar::embed_laurent(pm4, Laurent(Rational(-4))));
    ParameterSpec p3 = ParameterSpec::rational_value(Rational(3));
    CHECK(p3.field->modulus.degree() == 4);
    CHECK(Scalar::t_pow(p3, 1) == Scalar::embed_laurent(p3, Laurent(Rational(3))));
}
