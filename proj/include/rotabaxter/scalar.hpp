#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "rotabaxter/errors.hpp"

namespace rb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, Prime };

// The coefficient field of a session: the rationals, or a prime field F_p.
struct Field {
    FieldKind kind = FieldKind::Rational;
    std::uint32_t prime = 0;  // 0 in the rational case

    static Field rationals() { return Field{FieldKind::Rational, 0}; }
    static Field fp(std::uint32_t p);

    bool operator==(const Field&) const = default;
    std::string describe() const;
};

// Exact field element. Rational values keep a canonical numerator/denominator
// (positive denominator, gcd 1 -- cpp_rational maintains this); prime-field
// values are residues in [0, p). Mixing fields is a contract error.
class Scalar {
public:
    Scalar() = default;  // zero over the rationals

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long long n);
    static Scalar rational(long long num, long long den);
    static Scalar make(const Field& f, const BigInt& num, const BigInt& den);

    // Accepts "p/q" or an integer string; residues are reduced mod p, and a
    // "p/q" in a prime field means p * q^{-1}.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // ContractError on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "n" for integers, "p/q" otherwise; plain residue digits over F_p.
    std::string str() const;

private:
    Field field_ = Field::rationals();
    BigRational value_ = 0;

    Scalar(const Field& f, BigRational v) : field_(f), value_(std::move(v)) {}
    void check_same_field(const Scalar& o) const;
    static BigRational reduce_mod(const Field& f, const BigRational& v);
};

}  // namespace rb
