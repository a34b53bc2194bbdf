#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace skeinrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rational_pow: 0^negative");
        return Rational(0);
    }
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) { return Rational(s); }

// long double keeps 64 mantissa bits on x86-64, the precision target for
// numeric certification.
using Cplx = std::complex<long double>;

inline Cplx to_cplx(const Rational& r) {
    return Cplx(static_cast<long double>(r), 0.0L);
}

}  // namespace skeinrep
