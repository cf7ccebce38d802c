#ifndef SUPERPOISSON_SCALAR_HPP
#define SUPERPOISSON_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

#include "superpoisson/errors.hpp"

namespace poisson {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical reduced form: denominator > 0,
/// gcd(|numerator|, denominator) = 1. Immutable value type; every
/// operation is exact.
class Scalar {
public:
    Scalar() : value_(0) {}
    Scalar(int n) : value_(n) {}
    Scalar(long long n) : value_(BigInt(n)) {}
    explicit Scalar(BigInt n) : value_(std::move(n)) {}

    // num/den, normalized. den == 0 raises ArithmeticError.
    Scalar(const BigInt& num, const BigInt& den);

    // Accepts "p" or "p/q" with optional sign on either integer.
    // Raises ParseError on malformed text or zero denominator.
    static Scalar parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    Scalar abs() const;

    // Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    friend Scalar operator-(const Scalar& x);
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y); // ArithmeticError on y == 0

    Scalar& operator+=(const Scalar& y);
    Scalar& operator-=(const Scalar& y);
    Scalar& operator*=(const Scalar& y);
    Scalar& operator/=(const Scalar& y);

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.value_ == y.value_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return x.value_ != y.value_; }
    friend bool operator<(const Scalar& x, const Scalar& y) { return x.value_ < y.value_; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return x.value_ > y.value_; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return x.value_ <= y.value_; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return x.value_ >= y.value_; }

private:
    using Rational = boost::multiprecision::cpp_rational;
    explicit Scalar(Rational v) : value_(std::move(v)) {}
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

} // namespace poisson

#endif
