#include "superpoisson/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace poisson {

namespace {

unsigned degree_of_exponents(const Poly::Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e)
        d += x;
    return d;
}

// Display order: higher total degree first, ties broken by exponent vector
// descending (so a*b prints before b^2 in the ring a < b < c < d).
bool display_before(const Poly::Exponents& a, const Poly::Exponents& b) {
    const unsigned da = degree_of_exponents(a), db = degree_of_exponents(b);
    if (da != db)
        return da > db;
    return a > b;
}

Scalar pow_scalar(const Scalar& base, unsigned e) {
    Scalar r(1);
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return r;
}

Poly pow_poly(const Poly& base, unsigned e) {
    Poly r = Poly::constant(base.variables(), Scalar(1));
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return r;
}

void require_same_ring(const Poly& p, const Poly& q) {
    if (p.variables() != q.variables())
        throw InputError("polynomial rings differ");
}

} // namespace

Poly Poly::constant(std::vector<std::string> vars, Scalar value) {
    Poly p(std::move(vars));
    if (!value.is_zero())
        p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(value));
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, const std::string& name) {
    Poly p(std::move(vars));
    const auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end())
        throw InputError("unknown polynomial variable '" + name + "'");
    Exponents e(p.vars_.size(), 0);
    e[static_cast<size_t>(it - p.vars_.begin())] = 1;
    p.terms_.emplace(std::move(e), Scalar(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of_exponents(terms_.begin()->first) == 0);
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, degree_of_exponents(e));
    return d;
}

bool Poly::uses(const std::string& var) const {
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        return false;
    const size_t idx = static_cast<size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_)
        if (e[idx] != 0)
            return true;
    return false;
}

void Poly::insert_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

Poly operator-(const Poly& p) {
    Poly r(p.vars_);
    for (const auto& [e, c] : p.terms_)
        r.terms_.emplace(e, -c);
    return r;
}

Poly operator+(const Poly& p, const Poly& q) {
    Poly r = p;
    r += q;
    return r;
}

Poly operator-(const Poly& p, const Poly& q) {
    Poly r = p;
    r -= q;
    return r;
}

Poly operator*(const Poly& p, const Poly& q) {
    require_same_ring(p, q);
    Poly r(p.vars_);
    for (const auto& [e1, c1] : p.terms_) {
        for (const auto& [e2, c2] : q.terms_) {
            Poly::Exponents e(e1.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = e1[i] + e2[i];
            r.insert_term(e, c1 * c2);
        }
    }
    return r;
}

Poly operator*(const Poly& p, const Scalar& s) {
    Poly r(p.vars_);
    if (s.is_zero())
        return r;
    for (const auto& [e, c] : p.terms_)
        r.terms_.emplace(e, c * s);
    return r;
}

Poly& Poly::operator+=(const Poly& q) {
    require_same_ring(*this, q);
    for (const auto& [e, c] : q.terms_)
        insert_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    require_same_ring(*this, q);
    for (const auto& [e, c] : q.terms_)
        insert_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& q) {
    *this = *this * q;
    return *this;
}

bool operator<(const Poly& p, const Poly& q) {
    if (p.vars_ != q.vars_)
        return p.vars_ < q.vars_;
    return std::lexicographical_compare(
        p.terms_.begin(), p.terms_.end(), q.terms_.begin(), q.terms_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first < b.first;
            return a.second < b.second;
        });
}

Scalar Poly::eval(const std::map<std::string, Scalar>& assignment) const {
    Scalar result(0);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0)
                continue;
            const auto it = assignment.find(vars_[i]);
            if (it == assignment.end())
                throw InputError("poly_eval: no value for variable '" + vars_[i] + "'");
            term *= pow_scalar(it->second, e[i]);
        }
        result += term;
    }
    return result;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images) const {
    if (images.empty()) {
        if (!is_constant())
            throw InputError("substitute: empty image map for non-constant polynomial");
        return *this;
    }
    const std::vector<std::string>& target = images.begin()->second.variables();
    for (const auto& [name, img] : images)
        if (img.variables() != target)
            throw InputError("substitute: image polynomials live in different rings");

    Poly result(target);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0)
                continue;
            const auto it = images.find(vars_[i]);
            if (it == images.end())
                throw InputError("substitute: no image for variable '" + vars_[i] + "'");
            term *= pow_poly(it->second, e[i]);
        }
        result += term;
    }
    return result;
}

Poly Poly::normalized() const {
    if (terms_.empty())
        return *this;
    BigInt den_lcm = 1;
    for (const auto& [e, c] : terms_)
        den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
    BigInt num_gcd = 0;
    for (const auto& [e, c] : terms_)
        num_gcd = boost::multiprecision::gcd(num_gcd, BigInt(c.numerator() * (den_lcm / c.denominator())));
    Scalar factor(den_lcm, num_gcd);

    // leading monomial in display order decides the overall sign
    const auto lead = std::min_element(
        terms_.begin(), terms_.end(),
        [](const auto& a, const auto& b) { return display_before(a.first, b.first); });
    if ((lead->second * factor).sign() < 0)
        factor = -factor;

    Poly r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c * factor);
    return r;
}

std::string Poly::str() const {
    if (terms_.empty())
        return "0";
    std::vector<const std::pair<const Exponents, Scalar>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return display_before(a->first, b->first); });

    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        const Scalar mag = c.abs();
        if (first) {
            if (c.sign() < 0)
                os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string monoms;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!monoms.empty())
                monoms += '*';
            monoms += vars_[i];
            if (e[i] > 1)
                monoms += '^' + std::to_string(e[i]);
        }
        if (monoms.empty()) {
            os << mag.str();
        } else {
            if (mag != Scalar(1))
                os << mag.str() << '*';
            os << monoms;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

} // namespace poisson
