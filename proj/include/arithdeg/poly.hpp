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

#ifndef ARITHDEG_POLY_HPP
#define ARITHDEG_POLY_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arithdeg/errors.hpp"
#include "arithdeg/numeric.hpp"

namespace arithdeg {

/**
 * Univariate polynomial with arbitrary-precision integer coefficients.
 *
 * Coefficients are stored lowest degree first; the zero polynomial is the
 * empty coefficient vector and has degree -1. All arithmetic is exact.
 */
class IntPoly {
  public:
    IntPoly() = default;

    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int v) {
        IntPoly p;
        if (sign(v) != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static IntPoly one() { return constant(Int(1)); }
    /// The polynomial t.
    static IntPoly t() { return IntPoly({0, 1}); }
    /// c * t^k.
    static IntPoly monomial(Int c, std::size_t k) {
        IntPoly p;
        if (sign(c) != 0) {
            p.c_.assign(k + 1, Int(0));
            p.c_[k] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Int& coeff(std::size_t i) const {
        static const Int kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<Int>& coeffs() const { return c_; }

    const Int& leading() const {
        if (c_.empty()) throw ZeroPolynomialError();
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    /// Constant term; 0 for the zero polynomial.
    const Int& constant_term() const { return coeff(0); }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (Int& v : r.c_) v = -v;
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        IntPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sign(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly& operator*=(const Int& s) {
        if (sign(s) == 0) {
            c_.clear();
            return *this;
        }
        for (Int& v : c_) v *= s;
        return *this;
    }
    friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
    friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }

    /// Multiplies by t^k.
    IntPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        IntPoly r;
        r.c_.assign(c_.size() + k, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        IntPoly r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Int(static_cast<long>(i)) * c_[i];
        r.normalize();
        return r;
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += Rat(c_[i]);
        }
        return acc;
    }

    /// Content: gcd of coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const Int& v : c_) {
            g = gcd(g, v);
            if (g == 1) break;
        }
        return g;
    }

    /// Divides out the content and makes the leading coefficient positive.
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        Int g = content();
        if (sign(leading()) < 0) g = -g;
        IntPoly r = *this;
        for (Int& v : r.c_) v = div_exact(v, g);
        return r;
    }

    /// Division by a monic divisor over Z: returns (quotient, remainder).
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& d) const {
        if (!d.is_monic()) throw NotMonicError("divmod_monic divisor");
        IntPoly rem = *this;
        IntPoly quo;
        const int dd = d.degree();
        if (rem.degree() >= dd) quo.c_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Int(0));
        while (rem.degree() >= dd) {
            const std::size_t k = static_cast<std::size_t>(rem.degree() - dd);
            Int q = rem.c_.back();
            quo.c_[k] = q;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[k + i] -= q * d.c_[i];
            rem.normalize();
        }
        quo.normalize();
        return {std::move(quo), std::move(rem)};
    }

    /**
     * Exact division over Z: returns the quotient iff d divides *this in
     * Z[t], otherwise nullopt. d must be nonzero.
     */
    std::optional<IntPoly> divide_exact(const IntPoly& d) const {
        if (d.is_zero()) throw ZeroPolynomialError();
        if (is_zero()) return IntPoly();
        if (degree() < d.degree()) return std::nullopt;
        IntPoly rem = *this;
        IntPoly quo;
        const int dd = d.degree();
        quo.c_.assign(static_cast<std::size_t>(degree() - dd) + 1, Int(0));
        const Int& lc = d.leading();
        while (rem.degree() >= dd) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.c_.back().get_mpz_t(), lc.get_mpz_t());
            if (sign(r) != 0) return std::nullopt;
            const std::size_t k = static_cast<std::size_t>(rem.degree() - dd);
            quo.c_[k] = q;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[k + i] -= q * d.c_[i];
            rem.normalize();
        }
        if (!rem.is_zero()) return std::nullopt;
        quo.normalize();
        return quo;
    }

    bool divides(const IntPoly& f) const { return f.divide_exact(*this).has_value(); }

    /// Pseudo-remainder: lc(d)^(deg f - deg d + 1) * f mod d, computed over Z.
    IntPoly pseudo_rem(const IntPoly& d) const {
        if (d.is_zero()) throw ZeroPolynomialError();
        IntPoly rem = *this;
        const int dd = d.degree();
        const Int& lc = d.leading();
        while (rem.degree() >= dd) {
            const std::size_t k = static_cast<std::size_t>(rem.degree() - dd);
            Int top = rem.c_.back();
            for (Int& v : rem.c_) v *= lc;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[k + i] -= top * d.c_[i];
            rem.normalize();
        }
        return rem;
    }

    /// Number of trailing zero coefficients, i.e. the exponent of the factor t.
    std::size_t t_valuation() const {
        std::size_t k = 0;
        while (k < c_.size() && sign(c_[k]) == 0) ++k;
        return c_.empty() ? 0 : k;
    }

    /// Divides out t^k (requires the low k coefficients to vanish).
    IntPoly drop_t(std::size_t k) const {
        if (k == 0) return *this;
        if (t_valuation() < k) throw InternalError("drop_t on nonzero low coefficients");
        IntPoly r;
        r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
        return r;
    }

    /// t^deg * p(1/t); reverses the coefficients.
    IntPoly reciprocal() const {
        IntPoly r = *this;
        std::reverse(r.c_.begin(), r.c_.end());
        r.normalize();
        return r;
    }

    /// Deterministic ordering: by degree, then by coefficients from the
    /// constant term up. Used to fix factor order in reports.
    static bool order_less(const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    /// Renders e.g. "t^3 - 5*t^2 + 7*t - 2"; "0" for the zero polynomial.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Int& a = c_[i];
            if (sign(a) == 0) continue;
            Int mag = arithdeg::abs(a);
            if (first) {
                if (sign(a) < 0) os << "-";
                first = false;
            } else {
                os << (sign(a) < 0 ? " - " : " + ");
            }
            const bool unit = (mag == 1);
            if (i == 0) {
                os << mag.get_str();
            } else {
                if (!unit) os << mag.get_str() << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    /**
     * Parses either a comma-separated coefficient list with the constant
     * term first ("1,0,0,0,-1" = 1 - t^4) or a conventional expression in t
     * ("t^2-3t+1", '*' optional).
     */
    static IntPoly parse(const std::string& text);

  private:
    void normalize() {
        while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

inline IntPoly IntPoly::parse(const std::string& text) {
    const bool has_var = text.find('t') != std::string::npos;
    if (!has_var && text.find(',') != std::string::npos) {
        std::vector<Int> coeffs;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            // trim
            std::size_t b = item.find_first_not_of(" \t");
            std::size_t e = item.find_last_not_of(" \t");
            if (b == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
            item = item.substr(b, e - b + 1);
            Int v;
            if (mpz_set_str(v.get_mpz_t(), item.c_str(), 10) != 0)
                throw ParseError("bad coefficient '" + item + "'");
            coeffs.push_back(std::move(v));
        }
        return IntPoly(std::move(coeffs));
    }
    if (!has_var) {
        Int v;
        std::string trimmed;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty() || mpz_set_str(v.get_mpz_t(), trimmed.c_str(), 10) != 0)
            throw ParseError("bad polynomial literal '" + text + "'");
        return IntPoly::constant(v);
    }
    // term grammar: [+|-] [digits] [* ] [t [^ digits]]
    std::vector<Int> coeffs;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        int sgn = 1;
        skip_ws();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sgn = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
        }
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        Int coef = digits.empty() ? Int(1) : Int(digits.c_str());
        std::size_t expo = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            expo = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string ed;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
                if (ed.empty()) throw ParseError("missing exponent in '" + text + "'");
                expo = std::stoul(ed);
            }
        } else if (digits.empty()) {
            throw ParseError("expected a term at position " + std::to_string(i) + " in '" + text + "'");
        }
        if (coeffs.size() <= expo) coeffs.resize(expo + 1, Int(0));
        coeffs[expo] += sgn < 0 ? Int(-coef) : coef;
        any = true;
        skip_ws();
    }
    if (!any) throw ParseError("empty polynomial expression");
    return IntPoly(std::move(coeffs));
}

/**
 * Gcd over Z[t] via the primitive polynomial remainder sequence. The result
 * is primitive with positive leading coefficient (content is discarded);
 * gcd(0, 0) = 0.
 */
inline IntPoly poly_gcd_primitive(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = a.pseudo_rem(b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace arithdeg

#endif  // ARITHDEG_POLY_HPP
