#pragma once

#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "skeinrep/laurent.hpp"
#include "skeinrep/numberfield.hpp"
#include "skeinrep/poly.hpp"
#include "skeinrep/rational.hpp"

namespace skeinrep {

enum class ParamKind { Generic, RootOfUnity, RationalValue, UnitCircle, NumericComplex };

// How the quantum parameter t (and the working fourth root s) is specialized.
// Exact kinds carry a number field for s together with the recorded embedding.
struct ParameterSpec {
    ParamKind kind = ParamKind::Generic;
    long r = 0;       // order of t for RootOfUnity / exact UnitCircle
    long t_num = 1;   // t = exp(2 pi i t_num / r) when r > 0
    long s_num = 1;   // s = exp(2 pi i s_num / (4r)); records the fourth-root choice
    bool principal = true;
    Rational t_rat;
    FieldPtr field;   // field of s for exact non-generic kinds
    Cplx s_value{1.0L, 0.0L};
    bool exact = true;
    std::string label = "generic";

    bool is_generic() const { return kind == ParamKind::Generic; }

    static ParameterSpec generic() { return ParameterSpec{}; }

    // t = exp(2 pi i k / r); s is the recorded primitive 4r-th root with s^4 = t.
    static ParameterSpec root_of_unity(long r, long k = 1) {
        if (r < 1) throw std::domain_error("root_of_unity: r < 1");
        k = ((k % r) + r) % r;
        if (std::gcd(k == 0 ? r : k, r) != 1) throw std::domain_error("root_of_unity: t not primitive of order r");
        long j = k;
        while (std::gcd(j, 4 * r) != 1) j += r;
        ParameterSpec p;
        p.kind = ParamKind::RootOfUnity;
        p.r = r;
        p.t_num = k;
        p.s_num = j;
        p.principal = (k == 1);
        p.field = NumberField::cyclotomic(4 * r, j);
        p.s_value = p.field->root;
        p.label = "rootofunity:" + std::to_string(r) + ":" + std::to_string(k);
        return p;
    }

    // t = exp(i pi a / b), an exact point on the unit circle. Rational multiples
    // of pi are roots of unity; the spec keeps the UnitCircle tag.
    static ParameterSpec unit_circle(long a, long b) {
        if (b < 1) throw std::domain_error("unit_circle: b < 1");
        long two_b = 2 * b;
        long aa = ((a % two_b) + two_b) % two_b;
        long g = std::gcd(aa == 0 ? two_b : aa, two_b);
        ParameterSpec p = root_of_unity(two_b / g, (aa / g) % (two_b / g) == 0 ? 1 : aa / g);
        p.kind = ParamKind::UnitCircle;
        p.label = "unitcircle:" + std::to_string(a) + "pi/" + std::to_string(b);
        return p;
    }

    static ParameterSpec unit_circle_numeric(long double theta) {
        ParameterSpec p;
        p.kind = ParamKind::UnitCircle;
        p.exact = false;
        p.s_value = Cplx(std::cos(theta / 4), std::sin(theta / 4));
        p.label = "unitcircle:numeric";
        return p;
    }

    static ParameterSpec numeric_complex(Cplx t) {
        ParameterSpec p;
        p.kind = ParamKind::NumericComplex;
        p.exact = false;
        p.s_value = std::pow(t, Cplx(0.25L));
        p.label = "numericcomplex";
        return p;
    }

    // Exact rational t != 0; the modulus of the recorded fourth root is a
    // rational factor of x^4 - t.
    static ParameterSpec rational_value(const Rational& t) {
        if (t == 0) throw std::domain_error("rational_value: t = 0");
        ParameterSpec p;
        p.kind = ParamKind::RationalValue;
        p.t_rat = t;
        QPoly modulus;
        Cplx root;
        auto nth_rational_root = [](const Rational& v, int nth) -> std::optional<Rational> {
            if (v == 0) return Rational(0);
            if (v < 0) return std::nullopt;
            auto int_root = [&](const BigInt& z) -> std::optional<BigInt> {
                if (z == 0) return BigInt(0);
                BigInt lo = 0, hi = z + 1;
                while (lo + 1 < hi) {
                    BigInt mid = (lo + hi) / 2;
                    BigInt pw = 1;
                    for (int i = 0; i < nth; ++i) pw *= mid;
                    if (pw <= z) lo = mid; else hi = mid;
                }
                BigInt pw = 1;
                for (int i = 0; i < nth; ++i) pw *= lo;
                if (pw == z) return lo;
                return std::nullopt;
            };
            auto np = int_root(boost::multiprecision::numerator(v));
            auto dp = int_root(boost::multiprecision::denominator(v));
            if (np && dp) return Rational(*np, *dp);
            return std::nullopt;
        };
        long double td = static_cast<long double>(t);
        if (auto q = nth_rational_root(t, 4)) {
            modulus = QPoly::x() - QPoly(*q);
            root = Cplx(static_cast<long double>(*q), 0.0L);
        } else if (t > 0) {
            if (auto q = nth_rational_root(t, 2)) {
                // s^2 = sqrt(t) rational
                modulus = QPoly(std::vector<Rational>{-*q, Rational(0), Rational(1)});
                root = Cplx(std::sqrt(static_cast<long double>(*q)), 0.0L);
            } else {
                modulus = QPoly(std::vector<Rational>{-t, Rational(0), Rational(0), Rational(0), Rational(1)});
                root = Cplx(std::pow(td, 0.25L), 0.0L);
            }
        } else {
            // t < 0: x^4 - t = x^4 + |t| factors over Q exactly when |t| = 4 a^4,
            // as (x^2 - 2ax + 2a^2)(x^2 + 2ax + 2a^2); the principal root is a(1+i).
            std::optional<Rational> a4 = nth_rational_root(Rational(-t) / 4, 4);
            if (a4) {
                Rational a = *a4;
                modulus = QPoly(std::vector<Rational>{a * a * 2, -(a * 2), Rational(1)});
                long double af = static_cast<long double>(a);
                root = Cplx(af, af);
            } else {
                modulus = QPoly(std::vector<Rational>{-t, Rational(0), Rational(0), Rational(0), Rational(1)});
                long double m = std::pow(-td, 0.25L);
                root = Cplx(m * std::cos(std::numbers::pi_v<long double> / 4), m * std::sin(std::numbers::pi_v<long double> / 4));
            }
        }
        p.field = NumberField::with_modulus(modulus, root, "srat:" + to_string(t));
        p.s_value = root;
        p.label = "rational:" + to_string(t);
        return p;
    }

    // Internal: s specialized to a root of an arbitrary monic rational polynomial.
    static ParameterSpec algebraic_s(QPoly modulus, Cplx root, const std::string& name) {
        ParameterSpec p;
        p.kind = ParamKind::RationalValue;
        p.field = NumberField::with_modulus(std::move(modulus), root, "salg:" + name);
        p.s_value = root;
        p.label = "algebraic:" + name;
        return p;
    }

    bool has_field() const { return static_cast<bool>(field); }
};

// Exact rational function in s: num / den with den a monic polynomial in s
// having nonzero constant term and no common factor with num.
struct RatFunc {
    Laurent num;
    Laurent den = Laurent::one();
};

// Scalar of the coefficient ring: a context-free rational constant, a rational
// function of s (Generic parameter), or a number-field element (specialized s).
class QuantumScalar {
  public:
    QuantumScalar() : v_(Rational(0)) {}
    QuantumScalar(int v) : v_(Rational(v)) {}
    QuantumScalar(const Rational& v) : v_(v) {}
    explicit QuantumScalar(const Laurent& p) { *this = from_ratfunc(p, Laurent::one()); }
    QuantumScalar(const NFElem& e) : v_(e) {}

    static QuantumScalar from_ratfunc(Laurent num, Laurent den) {
        if (den.is_zero()) throw std::domain_error("QuantumScalar: zero denominator");
        RatFunc f;
        normalize(num, den, f);
        QuantumScalar q;
        q.v_ = std::move(f);
        return q;
    }

    static QuantumScalar s_pow(const ParameterSpec& p, long k) {
        if (p.is_generic()) return QuantumScalar(Laurent::s_pow(k));
        require_exact(p);
        return QuantumScalar(NFElem::gen_pow(p.field, k));
    }
    static QuantumScalar t_pow(const ParameterSpec& p, long k) { return s_pow(p, 4 * k); }

    static QuantumScalar embed_laurent(const ParameterSpec& p, const Laurent& lp) {
        if (p.is_generic()) return QuantumScalar(lp);
        require_exact(p);
        if (lp.is_zero()) return QuantumScalar(NFElem(p.field, Rational(0)));
        NFElem acc(p.field, Rational(0));
        NFElem s = NFElem::gen(p.field);
        for (long e = lp.hi(); e >= lp.lo(); --e) acc = acc * s + NFElem(p.field, lp.coeff(e));
        return QuantumScalar(acc * NFElem::gen_pow(p.field, lp.lo()));
    }

    bool is_rational_const() const { return std::holds_alternative<Rational>(v_); }
    bool is_ratfunc() const { return std::holds_alternative<RatFunc>(v_); }
    bool is_field_elem() const { return std::holds_alternative<NFElem>(v_); }

    bool is_zero() const {
        if (auto* r = std::get_if<Rational>(&v_)) return *r == 0;
        if (auto* f = std::get_if<RatFunc>(&v_)) return f->num.is_zero();
        return std::get<NFElem>(v_).is_zero();
    }

    const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }
    const NFElem& field_elem() const { return std::get<NFElem>(v_); }
    const Rational& rational_const() const { return std::get<Rational>(v_); }

    friend QuantumScalar operator+(const QuantumScalar& a, const QuantumScalar& b) {
        return combine(a, b, [](auto&& x, auto&& y) { return x + y; },
                       [](const RatFunc& x, const RatFunc& y) {
                           return from_ratfunc(x.num * y.den + y.num * x.den, x.den * y.den);
                       });
    }
    friend QuantumScalar operator-(const QuantumScalar& a, const QuantumScalar& b) { return a + (-b); }
    friend QuantumScalar operator*(const QuantumScalar& a, const QuantumScalar& b) {
        return combine(a, b, [](auto&& x, auto&& y) { return x * y; },
                       [](const RatFunc& x, const RatFunc& y) {
                           return from_ratfunc(x.num * y.num, x.den * y.den);
                       });
    }
    QuantumScalar operator-() const {
        if (auto* r = std::get_if<Rational>(&v_)) return QuantumScalar(Rational(-*r));
        if (auto* f = std::get_if<RatFunc>(&v_)) {
            QuantumScalar q;
            q.v_ = RatFunc{-f->num, f->den};
            return q;
        }
        return QuantumScalar(-std::get<NFElem>(v_));
    }

    QuantumScalar inverse() const {
        if (is_zero()) throw std::domain_error("QuantumScalar: division by zero");
        if (auto* r = std::get_if<Rational>(&v_)) return QuantumScalar(Rational(1) / *r);
        if (auto* f = std::get_if<RatFunc>(&v_)) return from_ratfunc(f->den, f->num);
        return QuantumScalar(std::get<NFElem>(v_).inverse());
    }
    friend QuantumScalar operator/(const QuantumScalar& a, const QuantumScalar& b) { return a * b.inverse(); }

    QuantumScalar& operator+=(const QuantumScalar& o) { return *this = *this + o; }
    QuantumScalar& operator-=(const QuantumScalar& o) { return *this = *this - o; }
    QuantumScalar& operator*=(const QuantumScalar& o) { return *this = *this * o; }

    friend bool operator==(const QuantumScalar& a, const QuantumScalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const QuantumScalar& a, const QuantumScalar& b) { return !(a == b); }

    QuantumScalar bar() const {
        if (std::holds_alternative<Rational>(v_)) return *this;
        if (auto* f = std::get_if<RatFunc>(&v_)) return from_ratfunc(f->num.bar(), f->den.bar());
        return QuantumScalar(std::get<NFElem>(v_).bar());
    }

    QuantumScalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QuantumScalar acc(1), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    Cplx eval(const Cplx& s) const {
        if (auto* r = std::get_if<Rational>(&v_)) return to_cplx(*r);
        if (auto* f = std::get_if<RatFunc>(&v_)) return f->num.eval(s) / f->den.eval(s);
        return std::get<NFElem>(v_).eval();
    }
    Cplx eval(const ParameterSpec& p) const { return eval(p.s_value); }

    // Exact Laurent form; requires trivial denominator.
    Laurent as_laurent() const {
        if (auto* r = std::get_if<Rational>(&v_)) return Laurent(*r);
        if (auto* f = std::get_if<RatFunc>(&v_)) {
            if (f->den != Laurent::one()) throw std::domain_error("QuantumScalar: not a Laurent polynomial");
            return f->num;
        }
        throw std::domain_error("QuantumScalar: field element has no Laurent form");
    }

    std::string str() const {
        if (auto* r = std::get_if<Rational>(&v_)) return to_string(*r);
        if (auto* f = std::get_if<RatFunc>(&v_)) {
            if (f->den == Laurent::one()) return f->num.str();
            return "(" + f->num.str() + ")/(" + f->den.str() + ")";
        }
        return std::get<NFElem>(v_).str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QuantumScalar& q) { return os << q.str(); }

    // Parses the printed grammar in the given parameter context.
    static QuantumScalar parse(const ParameterSpec& p, const std::string& text) {
        auto pos = text.find(")/(");
        if (!text.empty() && text.front() == '(' && pos != std::string::npos && text.back() == ')') {
            Laurent num = Laurent::parse(text.substr(1, pos - 1));
            Laurent den = Laurent::parse(text.substr(pos + 3, text.size() - pos - 4));
            QuantumScalar n = embed_laurent(p, num), d = embed_laurent(p, den);
            return n / d;
        }
        return embed_laurent(p, Laurent::parse(text));
    }

  private:
    static void require_exact(const ParameterSpec& p) {
        if (!p.has_field()) throw std::domain_error("parameter spec has no exact field for s");
    }

    static void normalize(Laurent num, Laurent den, RatFunc& out) {
        if (num.is_zero()) {
            out.num = Laurent::zero();
            out.den = Laurent::one();
            return;
        }
        // Push all s-powers of the denominator into the numerator.
        long dl = den.lo();
        den = den * Laurent::s_pow(-dl);
        num = num * Laurent::s_pow(-dl);
        long nl = num.lo();
        Laurent nu = num * Laurent::s_pow(-nl);
        QPoly np = laurent_to_poly(nu), dp = laurent_to_poly(den);
        QPoly g = qpoly_gcd(np, dp);
        if (g.degree() > 0) {
            np = np / g;
            dp = dp / g;
        }
        Rational lead = dp.coeff(static_cast<size_t>(dp.degree()));
        np = np.scaled(Rational(1) / lead);
        dp = dp.scaled(Rational(1) / lead);
        out.num = poly_to_laurent(np) * Laurent::s_pow(nl);
        out.den = poly_to_laurent(dp);
        // Both endpoints of the denominator nonzero: strip any s factor.
        if (!out.den.is_zero() && out.den.lo() > 0) {
            out.num = out.num * Laurent::s_pow(-out.den.lo());
            out.den = out.den * Laurent::s_pow(-out.den.lo());
        }
    }

    static QPoly laurent_to_poly(const Laurent& p) {
        if (p.is_zero()) return QPoly();
        if (p.lo() < 0) throw std::logic_error("laurent_to_poly: negative exponent");
        std::vector<Rational> c(static_cast<size_t>(p.hi()) + 1, Rational(0));
        for (long e = p.lo(); e <= p.hi(); ++e) c[static_cast<size_t>(e)] = p.coeff(e);
        return QPoly(std::move(c));
    }
    static Laurent poly_to_laurent(const QPoly& p) {
        Laurent out;
        for (long i = 0; i <= p.degree(); ++i) out += Laurent(i, p.coeff(static_cast<size_t>(i)));
        return out;
    }

    template <class FGen, class FRat>
    static QuantumScalar combine(const QuantumScalar& a, const QuantumScalar& b, FGen&& f, FRat&& fr) {
        if (a.is_rational_const() && b.is_rational_const())
            return QuantumScalar(Rational(f(a.rational_const(), b.rational_const())));
        if (a.is_field_elem() || b.is_field_elem()) {
            if (a.is_ratfunc() || b.is_ratfunc())
                throw std::logic_error("QuantumScalar: mixed generic and specialized scalars");
            NFElem x = a.is_field_elem() ? a.field_elem() : NFElem(nullptr, QPoly(a.rational_const()));
            NFElem y = b.is_field_elem() ? b.field_elem() : NFElem(nullptr, QPoly(b.rational_const()));
            return QuantumScalar(f(x, y));
        }
        RatFunc x = a.is_ratfunc() ? a.ratfunc() : RatFunc{Laurent(a.rational_const()), Laurent::one()};
        RatFunc y = b.is_ratfunc() ? b.ratfunc() : RatFunc{Laurent(b.rational_const()), Laurent::one()};
        return fr(x, y);
    }

    std::variant<Rational, RatFunc, NFElem> v_;
};

using Scalar = QuantumScalar;

// [n] = (t^{n/2} - t^{-n/2}) / (t^{1/2} - t^{-1/2}) as an exact Laurent polynomial in s.
inline Laurent quantum_integer_laurent(long n) {
    if (n == 0) return Laurent::zero();
    if (n < 0) return -quantum_integer_laurent(-n);
    Laurent out;
    for (long i = 0; i < n; ++i) out += Laurent::s_pow(2 * (n - 1 - 2 * i));
    return out;
}

inline Scalar quantum_integer(long n, const ParameterSpec& p) {
    return Scalar::embed_laurent(p, quantum_integer_laurent(n));
}

// Circle value: delta = -t^{1/2} - t^{-1/2} = -[2].
inline Scalar loop_value(const ParameterSpec& p) { return -quantum_integer(2, p); }

}  // namespace skeinrep
