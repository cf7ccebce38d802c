#ifndef SUPERPOISSON_POWERS_HPP
#define SUPERPOISSON_POWERS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superpoisson/presentation.hpp"

namespace poisson {

/// Table of products y^i y^j. A power y^n is well defined when every
/// decomposition y^p y^{n-p} yields one common value; otherwise all
/// distinct candidate values are kept and everything depending on the
/// entry is ambiguous too.
struct PowerTable {
    Element<Scalar> element;
    int max_n = 0;
    // all distinct products of candidate values of y^i and y^j
    std::map<std::pair<int, int>, std::vector<Element<Scalar>>> products;
    // candidates for y^n; unambiguous iff exactly one candidate
    std::map<int, std::vector<Element<Scalar>>> powers;

    bool unambiguous(int n) const;
    const Element<Scalar>& power(int n) const; // requires unambiguous(n)
    int first_ambiguous() const;               // 0 when none

    std::string to_text(const SuperAlgebra<Scalar>& A) const;
};

/// Builds products y^i y^j for i + j <= max_n and the derived powers.
/// max_n must be at least 2.
PowerTable build_power_table(const SuperAlgebra<Scalar>& A, const Element<Scalar>& y, int max_n);

struct AmbiguityVerdict {
    bool ok = true;
    int first_ambiguous_n = 0;
    std::vector<Element<Scalar>> candidates;
};

/// Requires a verified super-Poisson algebra and an odd-supported element
/// (InputError naming the violated precondition otherwise); asserts the
/// powers up to max_n are unambiguous and reports the first that is not.
AmbiguityVerdict check_odd_power_associativity(const SuperAlgebra<Scalar>& A,
                                               const Element<Scalar>& y, int max_n);

struct RemarkStep {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct RemarkReport {
    std::vector<RemarkStep> steps;
    bool all_pass() const;
    std::string to_text() const;
};

/// Checks the displayed intermediate identities for an odd element of a
/// verified super-Poisson algebra: the symmetric half of y*y vanishes,
/// y*y equals the bracket half, the third power is decomposition
/// independent, y2*y2 - y*y3 equals the iterated bracket and vanishes, and
/// the fourth power agrees along all decompositions.
RemarkReport verify_remark_steps(const SuperAlgebra<Scalar>& A, const Element<Scalar>& y);

} // namespace poisson

#endif
