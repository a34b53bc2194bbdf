#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeinrep/rational.hpp"

namespace skeinrep {

// Laurent polynomial in the formal variable s = t^{1/4}, rational coefficients.
// Canonical form: empty coefficient vector for zero, otherwise the first and
// last stored coefficients are nonzero.
class Laurent {
  public:
    Laurent() = default;
    explicit Laurent(const Rational& c) {
        if (c != 0) {
            lo_ = 0;
            coeff_ = {c};
        }
    }
    Laurent(long exponent, const Rational& c) {
        if (c != 0) {
            lo_ = exponent;
            coeff_ = {c};
        }
    }

    static Laurent s_pow(long k) { return Laurent(k, Rational(1)); }
    static Laurent t_pow(long k) { return Laurent(4 * k, Rational(1)); }
    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(Rational(1)); }

    bool is_zero() const { return coeff_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(coeff_.size()) - 1; }

    Rational coeff(long exponent) const {
        if (is_zero() || exponent < lo_ || exponent > hi()) return Rational(0);
        return coeff_[static_cast<size_t>(exponent - lo_)];
    }

    const std::vector<Rational>& coeffs() const { return coeff_; }

    Laurent operator-() const {
        Laurent r(*this);
        for (auto& c : r.coeff_) c = -c;
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        long nlo = std::min(lo_, o.lo_);
        long nhi = std::max(hi(), o.hi());
        std::vector<Rational> c(static_cast<size_t>(nhi - nlo + 1), Rational(0));
        for (long e = lo_; e <= hi(); ++e) c[static_cast<size_t>(e - nlo)] = coeff(e);
        for (long e = o.lo_; e <= o.hi(); ++e) c[static_cast<size_t>(e - nlo)] += o.coeff(e);
        lo_ = nlo;
        coeff_ = std::move(c);
        trim();
        return *this;
    }

    Laurent& operator-=(const Laurent& o) { return *this += -o; }

    Laurent& operator*=(const Laurent& o) {
        if (is_zero() || o.is_zero()) return *this = Laurent();
        std::vector<Rational> c(coeff_.size() + o.coeff_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeff_.size(); ++i) {
            if (coeff_[i] == 0) continue;
            for (size_t j = 0; j < o.coeff_.size(); ++j) c[i + j] += coeff_[i] * o.coeff_[j];
        }
        lo_ += o.lo_;
        coeff_ = std::move(c);
        trim();
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.lo_ == b.lo_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Lexicographic order; only used to keep containers deterministic.
    friend bool operator<(const Laurent& a, const Laurent& b) {
        if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
        return a.coeff_ < b.coeff_;
    }

    // The bar involution s -> s^{-1}.
    Laurent bar() const {
        Laurent r(*this);
        std::reverse(r.coeff_.begin(), r.coeff_.end());
        r.lo_ = -hi();
        return r;
    }

    Laurent pow(long e) const {
        if (e < 0) throw std::domain_error("Laurent::pow: negative exponent");
        Laurent acc = one(), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    Cplx eval(const Cplx& s) const {
        if (is_zero()) return Cplx(0);
        Cplx acc(0);
        for (size_t i = coeff_.size(); i-- > 0;) acc = acc * s + to_cplx(coeff_[i]);
        return acc * std::pow(s, Cplx(static_cast<long double>(lo_)));
    }

    // True when every exponent is divisible by 4, i.e. the value lies in Q[t, t^-1].
    bool is_t_polynomial() const {
        for (long e = lo_; e <= hi(); ++e)
            if (coeff(e) != 0 && ((e % 4) + 4) % 4 != 0) return false;
        return true;
    }

    bool is_symmetric() const { return *this == bar(); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long e = hi(); e >= lo_; --e) {
            Rational c = coeff(e);
            if (c == 0) continue;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (e == 0) {
                os << to_string(a);
            } else {
                if (a != 1) os << to_string(a) << "*";
                os << "s";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

    // Parses the grammar produced by str(): terms like `-s^2 - s^-2`, `3/2*s^4 + 1`.
    static Laurent parse(const std::string& text) {
        Laurent out;
        size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
        skip_ws();
        if (i == text.size()) throw std::invalid_argument("Laurent::parse: empty input");
        bool first = true;
        while (true) {
            skip_ws();
            if (i == text.size()) break;
            int sign = 1;
            if (text[i] == '+' || text[i] == '-') {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
                skip_ws();
            } else if (!first) {
                throw std::invalid_argument("Laurent::parse: expected + or - between terms");
            }
            first = false;
            std::string num;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) num += text[i++];
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            Rational c = num.empty() ? Rational(1) : parse_rational(num);
            long e = 0;
            if (i < text.size() && text[i] == 's') {
                ++i;
                e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    std::string es;
                    if (i < text.size() && (text[i] == '-' || text[i] == '+')) es += text[i++];
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) es += text[i++];
                    if (es.empty()) throw std::invalid_argument("Laurent::parse: bad exponent");
                    e = std::atol(es.c_str());
                }
            } else if (num.empty()) {
                throw std::invalid_argument("Laurent::parse: bare sign");
            }
            if (sign < 0) c = -c;
            out += Laurent(e, c);
        }
        return out;
    }

  private:
    void trim() {
        size_t b = 0, e = coeff_.size();
        while (b < e && coeff_[b] == 0) ++b;
        while (e > b && coeff_[e - 1] == 0) --e;
        if (b == e) {
            coeff_.clear();
            lo_ = 0;
            return;
        }
        lo_ += static_cast<long>(b);
        coeff_ = std::vector<Rational>(coeff_.begin() + static_cast<long>(b), coeff_.begin() + static_cast<long>(e));
    }

    long lo_ = 0;
    std::vector<Rational> coeff_;
};

}  // namespace skeinrep
