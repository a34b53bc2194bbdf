#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skeinrep/rational.hpp"

namespace skeinrep {

// Dense univariate polynomial over a field K, coefficients ascending.
// K must support +, -, *, /, ==, and value-initialize to zero.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }
    explicit Poly(const K& c) : c_{c} { trim(); }

    static Poly x() { return Poly(std::vector<K>{K(), unit()}); }
    static Poly monomial(size_t deg, const K& c) {
        std::vector<K> v(deg + 1, K());
        v[deg] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(); }
    const K& leading() const {
        if (is_zero()) throw std::domain_error("Poly::leading of zero");
        return c_.back();
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& a : r.c_) a = K() - a;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        if (is_zero() || o.is_zero()) return *this = Poly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, K());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == K()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        c_ = std::move(r);
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const K& k) const {
        Poly r(*this);
        for (auto& a : r.c_) a = a * k;
        r.trim();
        return r;
    }

    // Quotient and remainder; K must be a field.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("Poly::divmod by zero");
        Poly r(*this);
        if (r.degree() < d.degree()) return {Poly(), r};
        std::vector<K> q(static_cast<size_t>(r.degree() - d.degree()) + 1, K());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            K f = r.c_.back() / d.c_.back();
            size_t shift = static_cast<size_t>(r.degree() - d.degree());
            q[shift] = f;
            for (size_t i = 0; i < d.c_.size(); ++i)
                r.c_[shift + i] = r.c_[shift + i] - f * d.c_[i];
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }

    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    bool divides(const Poly& other) const { return other.divmod(*this).second.is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = unit() / c_.back();
        return scaled(inv);
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1, K());
        for (size_t i = 1; i < c_.size(); ++i) {
            K m = K();
            for (size_t j = 0; j < i; ++j) m = m + c_[i];  // i * c_[i] without an int->K conversion
            r[i - 1] = m;
        }
        return Poly(std::move(r));
    }

    template <class V>
    V eval(const V& x) const {
        V acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + value_of(c_[i]);
        return acc;

    }

    // Horner evaluation with coefficients mapped into another domain.
    template <class V, class F>
    V eval_mapped(const V& x, F&& embed) const {
        V acc = embed(K());
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
        return acc;
    }

    std::string str(const std::function<std::string(const K&)>& f, const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == K()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << f(c_[i]) << ")";
            if (i >= 1) {
                os << "*" << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    static K unit() {
        // K(1) works for every scalar used here (Rational, QuantumScalar, NFElem-free types).
        return K(1);
    }
    template <class V>
    static V value_of(const K& c) {
        return V(c);
    }

    void trim() {
        while (!c_.empty() && c_.back() == K()) c_.pop_back();
    }

    std::vector<K> c_;
};

using QPoly = Poly<Rational>;

// Primitive integer-coefficient gcd keeps intermediate growth at bay.
inline QPoly qpoly_gcd(QPoly a, QPoly b) {
    auto primitive = [](const QPoly& p) -> std::vector<BigInt> {
        BigInt lcm = 1;
        for (const auto& c : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
        std::vector<BigInt> v;
        v.reserve(p.coeffs().size());
        BigInt g = 0;
        for (const auto& c : p.coeffs()) {
            BigInt z = boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c));
            v.push_back(z);
            g = boost::multiprecision::gcd(g, z);
        }
        if (g != 0)
            for (auto& z : v) z /= g;
        return v;
    };
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<BigInt> u = primitive(a), v = primitive(b);
    auto deg = [](const std::vector<BigInt>& p) { return static_cast<long>(p.size()) - 1; };
    auto trimz = [](std::vector<BigInt>& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
    auto content = [](const std::vector<BigInt>& p) {
        BigInt g = 0;
        for (const auto& z : p) g = boost::multiprecision::gcd(g, z);
        return g;
    };
    while (!v.empty()) {
        // pseudo-remainder of u by v
        std::vector<BigInt> r = u;
        BigInt lead = v.back();
        while (deg(r) >= deg(v) && !r.empty()) {
            BigInt f = r.back();
            size_t shift = static_cast<size_t>(deg(r) - deg(v));
            for (auto& z : r) z *= lead;
            for (size_t i = 0; i < v.size(); ++i) r[shift + i] -= f * v[i];
            trimz(r);
        }
        BigInt cont = content(r);
        if (cont != 0)
            for (auto& z : r) z /= cont;
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(u.size());
    for (const auto& z : u) out.emplace_back(z);
    return QPoly(std::move(out)).monic();
}

inline QPoly qpoly_squarefree_part(const QPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    QPoly g = qpoly_gcd(p, p.derivative());
    return (p / g).monic();
}

}  // namespace skeinrep
