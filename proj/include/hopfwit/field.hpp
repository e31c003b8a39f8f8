#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace hopfwit {

// Exact scalar domains: Q, GF(p), GF(p)(u), and simple extensions k[x]/(m).
// Every value is kept in a unique canonical form (reduced fractions, monic
// denominators, residues in [0,p), extension coefficients of fixed length),
// so operator== is value equality.

enum class FieldKind { Rationals, PrimeField, RationalFunctions, SimpleExtension };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Scalar;

// dense polynomial over GF(p); coeff[i] belongs to [0,p), no trailing zeros
using ZpPoly = std::vector<unsigned long>;

struct RatFuncValue {
    ZpPoly num; // coprime to den
    ZpPoly den; // monic, nonzero
    bool operator==(const RatFuncValue&) const = default;
};

struct ExtValue {
    std::vector<Scalar> coeffs; // length = extension degree, over the base field
    bool operator==(const ExtValue&) const;
};

class Scalar {
public:
    Scalar() = default; // empty slot; any arithmetic on it throws

    const FieldPtr& field() const { return field_; }
    bool valid() const { return field_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar&) const;
    Scalar operator-(const Scalar&) const;
    Scalar operator*(const Scalar&) const;
    Scalar operator/(const Scalar&) const; // DivisionByZero on zero divisor
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inv() const; // DivisionByZero on 0 and on zero divisors
    Scalar pow(long e) const;

    bool operator==(const Scalar&) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    unsigned long residue() const { return std::get<unsigned long>(v_); }
    const RatFuncValue& ratfunc() const { return std::get<RatFuncValue>(v_); }
    const ExtValue& ext() const { return std::get<ExtValue>(v_); }

private:
    friend class Field;
    Scalar(FieldPtr f, mpq_class q) : field_(std::move(f)), v_(std::move(q)) {}
    Scalar(FieldPtr f, unsigned long r) : field_(std::move(f)), v_(r) {}
    Scalar(FieldPtr f, RatFuncValue v) : field_(std::move(f)), v_(std::move(v)) {}
    Scalar(FieldPtr f, ExtValue v) : field_(std::move(f)), v_(std::move(v)) {}

    FieldPtr field_;
    std::variant<std::monostate, mpq_class, unsigned long, RatFuncValue, ExtValue> v_;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime_field(unsigned long p); // NonPrimeModulus
    static FieldPtr rational_functions(unsigned long p, std::string var);
    // minpoly = full coefficient list c0..cn over base, cn must be 1, n >= 1
    static FieldPtr simple_extension(FieldPtr base, std::vector<Scalar> minpoly);

    FieldKind kind() const { return kind_; }
    unsigned long characteristic() const;
    unsigned long modulus() const { return p_; } // PrimeField / RationalFunctions
    const std::string& variable() const { return var_; }
    const FieldPtr& base() const { return base_; }
    const std::vector<Scalar>& minpoly() const { return minpoly_; }
    size_t degree() const { return minpoly_.size() - 1; } // SimpleExtension only

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long n) const;
    Scalar from_fraction(long num, long den) const;
    // RationalFunctions: the variable; SimpleExtension: the class of X
    Scalar generator() const;
    Scalar make_ext(std::vector<Scalar> coeffs) const; // over base, length <= degree
    Scalar make_ratfunc(ZpPoly num, ZpPoly den) const;

    Scalar parse(std::string_view text) const; // ParseError on bad input

    bool same(const Field& other) const;
    bool same(const FieldPtr& other) const { return other && same(*other); }

    nlohmann::json to_json() const;
    static FieldPtr from_json(const nlohmann::json& j);
    std::string str() const; // short human-readable name

private:
    Field() = default;
    FieldKind kind_ = FieldKind::Rationals;
    unsigned long p_ = 0;
    std::string var_;
    FieldPtr base_;
    std::vector<Scalar> minpoly_;

    friend class Scalar;
};

// Dense univariate polynomial helpers over an arbitrary Field.  Coefficient i
// is the coefficient of X^i; the zero polynomial is the empty vector.
namespace polyring {

using Poly = std::vector<Scalar>;

Poly trim(Poly p);
int degree(const Poly& p); // -1 for zero
bool is_zero(const Poly& p);
Poly add(const Poly& a, const Poly& b, const FieldPtr& f);
Poly sub(const Poly& a, const Poly& b, const FieldPtr& f);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b, const FieldPtr& f);
Poly scale(const Poly& a, const Scalar& c);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const FieldPtr& f);
Poly gcd_monic(Poly a, Poly b, const FieldPtr& f);
// returns (g, u, v) with u*a + v*b = g, g monic (or zero)
std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, const FieldPtr& f);
Poly derivative(const Poly& a, const FieldPtr& f);
Scalar eval(const Poly& a, const Scalar& x);

} // namespace polyring

bool is_prime(unsigned long n);

} // namespace hopfwit
