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

#ifndef ARITHDEG_ERRORS_HPP
#define ARITHDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arithdeg {

/// Base class for all arithdeg exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomialError : Error {
    ZeroPolynomialError() : Error("operation undefined for the zero polynomial") {}
};

struct ConstantPolynomialError : Error {
    ConstantPolynomialError() : Error("operation requires degree >= 1") {}
};

struct BothZeroError : Error {
    BothZeroError() : Error("gcd/lcm of two zero polynomials is undefined") {}
};

struct NotMonicError : Error {
    explicit NotMonicError(const std::string& ctx) : Error("polynomial is not monic: " + ctx) {}
};

struct NotIrreducibleError : Error {
    explicit NotIrreducibleError(const std::string& ctx)
        : Error("polynomial violates the irreducibility contract: " + ctx) {}
};

struct NotSurjectiveError : Error {
    NotSurjectiveError() : Error("endomorphism is not surjective (t divides the minimal polynomial)") {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& ctx) : Error("dimension mismatch: " + ctx) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(std::size_t budget)
        : Error("cycle-detection budget of " + std::to_string(budget) + " steps exceeded") {}
};

struct CyclotomicFactorError : Error {
    explicit CyclotomicFactorError(const std::string& factor)
        : Error("minimal polynomial has a cyclotomic factor: " + factor) {}
};

struct NonInvertibleError : Error {
    explicit NonInvertibleError(const std::string& ctx) : Error("matrix is not invertible: " + ctx) {}
};

struct PointNotOnCurveError : Error {
    explicit PointNotOnCurveError(const std::string& ctx) : Error("point is not on the curve: " + ctx) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error("schema error: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("internal error: " + what) {}
};

}  // namespace arithdeg

#endif  // ARITHDEG_ERRORS_HPP
