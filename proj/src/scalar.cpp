#include "rotabaxter/scalar.hpp"

namespace rb {
namespace {

bool is_probable_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt mod_pos(const BigInt& a, const BigInt& p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    return r;
}

// Extended Euclid; `a` must be a unit mod p.
BigInt mod_inverse(const BigInt& a, const BigInt& p) {
    BigInt old_r = mod_pos(a, p), r = p;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw ContractError("not invertible mod " + p.str() + ": " + a.str());
    return mod_pos(old_s, p);
}

}  // namespace

Field Field::fp(std::uint32_t p) {
    if (!is_probable_prime(p)) throw ContractError("field modulus must be prime, got " + std::to_string(p));
    return Field{FieldKind::Prime, p};
}

std::string Field::describe() const {
    return kind == FieldKind::Rational ? "rational" : "fp:" + std::to_string(prime);
}

BigRational Scalar::reduce_mod(const Field& f, const BigRational& v) {
    BigInt p = f.prime;
    BigInt num = mod_pos(boost::multiprecision::numerator(v), p);
    BigInt den = mod_pos(boost::multiprecision::denominator(v), p);
    if (den == 0) throw ContractError("denominator divisible by field characteristic");
    if (den != 1) num = mod_pos(num * mod_inverse(den, p), p);
    return BigRational(num);
}

Scalar Scalar::from_int(const Field& f, long long n) {
    BigRational v(n);
    if (f.kind == FieldKind::Prime) v = reduce_mod(f, v);
    return Scalar(f, std::move(v));
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw ContractError("zero denominator");
    return Scalar(Field::rationals(), BigRational(num, den));
}

Scalar Scalar::make(const Field& f, const BigInt& num, const BigInt& den) {
    if (den == 0) throw ContractError("zero denominator");
    BigRational v = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
    if (f.kind == FieldKind::Prime) v = reduce_mod(f, v);
    return Scalar(f, std::move(v));
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make(f, BigInt(text), 1);
        return make(f, BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error& e) {
        throw ParseError("bad scalar literal '" + text + "'");
    }
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw ContractError("scalar field mismatch: " + field_.describe() + " vs " + o.field_.describe());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    BigRational v = value_ + o.value_;
    if (field_.kind == FieldKind::Prime) v = reduce_mod(field_, v);
    return Scalar(field_, std::move(v));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    BigRational v = value_ - o.value_;
    if (field_.kind == FieldKind::Prime) v = reduce_mod(field_, v);
    return Scalar(field_, std::move(v));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    BigRational v = value_ * o.value_;
    if (field_.kind == FieldKind::Prime) v = reduce_mod(field_, v);
    return Scalar(field_, std::move(v));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(field_, -value_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw ContractError("division by zero");
    if (field_.kind == FieldKind::Prime)
        return Scalar(field_, BigRational(mod_inverse(numerator(), BigInt(field_.prime))));
    return Scalar(field_, 1 / value_);
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return value_ == o.value_;
}

std::string Scalar::str() const {
    if (denominator() == 1) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

}  // namespace rb
