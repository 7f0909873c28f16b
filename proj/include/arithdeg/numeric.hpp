/*
   Copyright 2026 the arithdeg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ARITHDEG_NUMERIC_HPP
#define ARITHDEG_NUMERIC_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "arithdeg/errors.hpp"

namespace arithdeg {

/// Arbitrary-precision integer.
using Int = mpz_class;
/// Arbitrary-precision rational, always kept in canonical form by GMP.
using Rat = mpq_class;

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Rat abs(const Rat& a) {
    Rat r;
    mpq_abs(r.get_mpq_t(), a.get_mpq_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Number of bits in |a|; 0 for a = 0.
inline std::size_t bit_length(const Int& a) {
    if (sign(a) == 0) return 0;
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

/// Exact division; throws if b does not divide a.
inline Int div_exact(const Int& a, const Int& b) {
    if (sign(b) == 0) throw InternalError("division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sign(r) != 0) throw InternalError("inexact integer division");
    return q;
}

inline Int numerator(const Rat& q) { return Int(q.get_num()); }
inline Int denominator(const Rat& q) { return Int(q.get_den()); }

/// floor(q) as an integer.
inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
    return r;
}

/// Fractional part q - floor(q), in [0, 1).
inline Rat frac_rat(const Rat& q) {
    Rat r = q - Rat(floor_rat(q));
    r.canonicalize();
    return r;
}

/// ln|z| without overflow for huge integers (z != 0).
inline double log_abs(const Int& z) {
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(exp2) * M_LN2;
}

/// ln|q| without overflow for huge rationals (q != 0).
inline double log_abs(const Rat& q) { return log_abs(numerator(q)) - log_abs(denominator(q)); }

/// Parses "3/5", "-12", "0.25" or "1e-9" into an exact rational.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rat q;
        if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
            throw ParseError("bad rational literal '" + text + "'");
        if (sign(Int(q.get_den())) == 0) throw ParseError("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    // Decimal / scientific form: mantissa [. digits] [e exp]
    std::string mant = text;
    long expo = 0;
    const auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = text.substr(0, epos);
        try {
            expo = std::stol(text.substr(epos + 1));
        } catch (const std::exception&) {
            throw ParseError("bad exponent in '" + text + "'");
        }
    }
    std::string digits = mant;
    const auto dot = mant.find('.');
    long frac_digits = 0;
    if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        frac_digits = static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad rational literal '" + text + "'");
    Int num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
        throw ParseError("bad rational literal '" + text + "'");
    Rat q(num);
    long net = expo - frac_digits;
    Int p10 = pow_int(Int(10), static_cast<unsigned long>(net < 0 ? -net : net));
    if (net >= 0)
        q *= Rat(p10);
    else
        q /= Rat(p10);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).get_str();
    return numerator(q).get_str() + "/" + denominator(q).get_str();
}

}  // namespace arithdeg

#endif  // ARITHDEG_NUMERIC_HPP
