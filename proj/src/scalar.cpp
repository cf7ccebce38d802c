#include "superpoisson/scalar.hpp"

#include <cctype>
#include <ostream>

namespace poisson {

namespace {

bool valid_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Scalar::Scalar(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw ArithmeticError("division by zero: rational with zero denominator");
    value_ = Rational(num, den); // cpp_rational normalizes sign and gcd
}

Scalar Scalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!valid_integer_literal(num_part))
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    BigInt num{std::string(num_part)};
    if (slash == std::string_view::npos)
        return Scalar(num);
    std::string_view den_part = text.substr(slash + 1);
    if (!valid_integer_literal(den_part))
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    BigInt den{std::string(den_part)};
    if (den == 0)
        throw ParseError("malformed rational literal '" + std::string(text) + "': zero denominator");
    return Scalar(num, den);
}

Scalar Scalar::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::string Scalar::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

Scalar operator-(const Scalar& x) { return Scalar(Scalar::Rational(-x.value_)); }
Scalar operator+(const Scalar& x, const Scalar& y) { return Scalar(Scalar::Rational(x.value_ + y.value_)); }
Scalar operator-(const Scalar& x, const Scalar& y) { return Scalar(Scalar::Rational(x.value_ - y.value_)); }
Scalar operator*(const Scalar& x, const Scalar& y) { return Scalar(Scalar::Rational(x.value_ * y.value_)); }

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero())
        throw ArithmeticError("division by zero");
    return Scalar(Scalar::Rational(x.value_ / y.value_));
}

Scalar& Scalar::operator+=(const Scalar& y) { value_ += y.value_; return *this; }
Scalar& Scalar::operator-=(const Scalar& y) { value_ -= y.value_; return *this; }
Scalar& Scalar::operator*=(const Scalar& y) { value_ *= y.value_; return *this; }

Scalar& Scalar::operator/=(const Scalar& y) {
    if (y.is_zero())
        throw ArithmeticError("division by zero");
    value_ /= y.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
    return os << x.str();
}

} // namespace poisson
