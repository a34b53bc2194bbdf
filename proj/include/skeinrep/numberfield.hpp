#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skeinrep/laurent.hpp"
#include "skeinrep/poly.hpp"
#include "skeinrep/rational.hpp"

namespace skeinrep {

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Cyclotomic polynomial, memoized: x^m - 1 divided by the proper cyclotomic factors.
inline const QPoly& cyclotomic_poly(long m) {
    static std::map<long, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw std::domain_error("cyclotomic_poly: m < 1");
    std::function<const QPoly&(long)> get = [&](long k) -> const QPoly& {
        auto j = cache.find(k);
        if (j != cache.end()) return j->second;
        QPoly num = QPoly::monomial(static_cast<size_t>(k), Rational(1)) - QPoly(Rational(1));
        for (long d = 1; d < k; ++d)
            if (k % d == 0) num = num / get(d);
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(m);
}

// Rewrites a bar-symmetric Laurent polynomial whose exponents are multiples of
// `step` as a polynomial in u = s^step + s^-step, via x^k + x^-k = C_k(u),
// C_0 = 2, C_1 = u, C_k = u C_{k-1} - C_{k-2}.
inline QPoly symmetric_laurent_in_u(const Laurent& p, long step) {
    if (p.is_zero()) return QPoly();
    if (p != p.bar()) throw std::domain_error("symmetric_laurent_in_u: not bar-symmetric");
    long top = p.hi();
    if (top % step != 0 || p.lo() % step != 0)
        throw std::domain_error("symmetric_laurent_in_u: exponents not multiples of step");
    std::vector<QPoly> cheb;
    long kmax = top / step;
    cheb.reserve(static_cast<size_t>(kmax) + 1);
    cheb.push_back(QPoly(Rational(2)));
    if (kmax >= 1) cheb.push_back(QPoly::x());
    for (long k = 2; k <= kmax; ++k) cheb.push_back(QPoly::x() * cheb[static_cast<size_t>(k - 1)] - cheb[static_cast<size_t>(k - 2)]);
    QPoly out;
    for (long k = 1; k <= kmax; ++k) {
        Rational a = p.coeff(k * step);
        if (p.coeff(-k * step) != a) throw std::domain_error("symmetric_laurent_in_u: asymmetric");
        if (a != 0) out += cheb[static_cast<size_t>(k)].scaled(a);
    }
    out += QPoly(p.coeff(0));
    return out;
}

// Minimal polynomial of 2 cos(2 pi / n) over Q.
inline QPoly min_poly_2cos(long n) {
    if (n <= 0) throw std::domain_error("min_poly_2cos: n < 1");
    if (n == 1) return QPoly::x() - QPoly(Rational(2));
    if (n == 2) return QPoly::x() + QPoly(Rational(2));
    const QPoly& phi = cyclotomic_poly(n);
    Laurent lp;
    long d = phi.degree() / 2;
    for (long i = 0; i <= phi.degree(); ++i) lp += Laurent(i - d, phi.coeff(static_cast<size_t>(i)));
    return symmetric_laurent_in_u(lp, 1).monic();
}

struct NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[x]/(modulus) with a recorded complex embedding of the generator.
struct NumberField {
    QPoly modulus;  // monic
    Cplx root;
    std::string label;
    long cyclotomic_order = 0;  // m when modulus = Phi_m and root is a primitive m-th root

    long degree() const { return modulus.degree(); }

    static FieldPtr cyclotomic(long m, long k = 1) {
        auto f = std::make_shared<NumberField>();
        f->modulus = cyclotomic_poly(m).monic();
        long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(m);
        f->root = Cplx(std::cos(ang), std::sin(ang));
        f->label = "cyclo:" + std::to_string(m) + ":" + std::to_string(k);
        f->cyclotomic_order = m;
        return f;
    }

    static FieldPtr with_modulus(QPoly modulus, Cplx root, std::string label) {
        auto f = std::make_shared<NumberField>();
        f->modulus = modulus.monic();
        f->root = root;
        f->label = std::move(label);
        return f;
    }
};

inline std::pair<QPoly, std::pair<QPoly, QPoly>> qpoly_egcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0(Rational(1)), s1;
    QPoly t0, t1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    return {r0, {s0, t0}};
}

class NFElem {
  public:
    NFElem() = default;
    explicit NFElem(int v) : rep_(QPoly(Rational(v))) {}
    NFElem(FieldPtr field, QPoly rep) : field_(std::move(field)), rep_(std::move(rep)) { reduce(); }
    NFElem(FieldPtr field, const Rational& c) : field_(std::move(field)), rep_(QPoly(c)) {}

    static NFElem gen(const FieldPtr& f) { return NFElem(f, QPoly::x()); }
    static NFElem gen_pow(const FieldPtr& f, long k) {
        if (k >= 0) return NFElem(f, QPoly::monomial(static_cast<size_t>(k), Rational(1)));
        NFElem inv = gen(f).inverse();
        NFElem acc(f, Rational(1));
        for (long i = 0; i < -k; ++i) acc = acc * inv;
        return acc;
    }

    const FieldPtr& field() const { return field_; }
    const QPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("NFElem: not rational");
        return rep_.coeff(0);
    }

    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        FieldPtr f = merge(a, b);
        return NFElem(f, a.rep_ + b.rep_);
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) {
        FieldPtr f = merge(a, b);
        return NFElem(f, a.rep_ - b.rep_);
    }
    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        FieldPtr f = merge(a, b);
        return NFElem(f, a.rep_ * b.rep_);
    }
    NFElem operator-() const { return NFElem(field_, -rep_); }

    NFElem inverse() const {
        if (is_zero()) throw std::domain_error("NFElem: division by zero");
        if (!field_) return NFElem(nullptr, QPoly(Rational(1) / rep_.coeff(0)));
        auto [g, uv] = qpoly_egcd(rep_, field_->modulus);
        if (g.degree() != 0)
            throw std::domain_error("NFElem: modulus not irreducible at this element");
        return NFElem(field_, uv.first.scaled(Rational(1) / g.coeff(0)));
    }
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

    friend bool operator==(const NFElem& a, const NFElem& b) {
        merge(a, b);
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    // Galois map generated by s -> s^{-1}; complex conjugation for cyclotomic roots.
    NFElem bar() const {
        if (!field_) return *this;
        NFElem sinv = NFElem::gen(field_).inverse();
        NFElem acc(field_, Rational(0));
        for (size_t i = rep_.coeffs().size(); i-- > 0;)
            acc = acc * sinv + NFElem(field_, rep_.coeff(i));
        return acc;
    }

    Cplx eval() const {
        if (!field_) return rep_.is_zero() ? Cplx(0) : to_cplx(rep_.coeff(0));
        Cplx acc(0);
        for (size_t i = rep_.coeffs().size(); i-- > 0;) acc = acc * field_->root + to_cplx(rep_.coeff(i));
        return acc;
    }

    std::string str() const {
        if (rep_.is_zero()) return "0";
        return rep_.str([](const Rational& r) { return to_string(r); }, "s");
    }

  private:
    // A field-less element stands for a rational constant; it adopts the
    // other operand's field on contact.
    static FieldPtr merge(const NFElem& a, const NFElem& b) {
        if (a.field_ && b.field_ && a.field_ != b.field_ && a.field_->label != b.field_->label)
            throw std::logic_error("NFElem: mixed number fields");
        if ((!a.field_ && a.rep_.degree() > 0) || (!b.field_ && b.rep_.degree() > 0))
            throw std::logic_error("NFElem: non-constant element without a field");
        return a.field_ ? a.field_ : b.field_;
    }
    void reduce() {
        if (field_ && rep_.degree() >= field_->modulus.degree()) rep_ = rep_ % field_->modulus;
    }

    FieldPtr field_;
    QPoly rep_;
};

}  // namespace skeinrep
