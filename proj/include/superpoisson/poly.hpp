#ifndef SUPERPOISSON_POLY_HPP
#define SUPERPOISSON_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "superpoisson/scalar.hpp"

namespace poisson {

/// Sparse multivariate polynomial over Scalar with a fixed, ordered list of
/// named indeterminates. Canonical form: no stored term has a zero
/// coefficient; the zero polynomial has an empty term map. Arithmetic
/// between polynomials requires identical variable lists.
class Poly {
public:
    using Exponents = std::vector<unsigned>; // one entry per variable, in order

    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(std::vector<std::string> vars, Scalar value);
    static Poly variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned total_degree() const;
    bool uses(const std::string& var) const;

    friend Poly operator-(const Poly& p);
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Scalar& s);
    friend Poly operator*(const Scalar& s, const Poly& p) { return p * s; }

    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly& operator*=(const Poly& q);

    friend bool operator==(const Poly& p, const Poly& q) {
        return p.vars_ == q.vars_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }
    // Total order usable as a set key (variables, then term map).
    friend bool operator<(const Poly& p, const Poly& q);

    /// Exact evaluation; the assignment must cover every variable that
    /// occurs in some term (missing one raises InputError).
    Scalar eval(const std::map<std::string, Scalar>& assignment) const;

    /// Replaces every occurring variable by its image polynomial; all
    /// images must share one variable list, which becomes the result's.
    Poly substitute(const std::map<std::string, Poly>& images) const;

    /// Integer-primitive associate: coefficients cleared of denominators,
    /// divided by their gcd, sign fixed so the leading monomial (graded
    /// lexicographic display order) has a positive coefficient.
    Poly normalized() const;

    std::string str() const;

private:
    void insert_term(const Exponents& e, const Scalar& c);

    std::vector<std::string> vars_;
    std::map<Exponents, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

inline Poly ring_one(const Poly& zero_shape) {
    return Poly::constant(zero_shape.variables(), Scalar(1));
}

} // namespace poisson

#endif
