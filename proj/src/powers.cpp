#include "superpoisson/powers.hpp"

#include <algorithm>
#include <sstream>

namespace poisson {

namespace {

bool odd_supported(const SuperAlgebra<Scalar>& A, const Element<Scalar>& y) {
    require_sized_for(A, y);
    for (int i = 0; i < A.basis().dim_even; ++i)
        if (!y.coeffs[static_cast<size_t>(i)].is_zero())
            return false;
    return true;
}

void insert_candidate(std::vector<Element<Scalar>>& set, Element<Scalar> value) {
    const auto it = std::lower_bound(set.begin(), set.end(), value);
    if (it == set.end() || !(*it == value))
        set.insert(it, std::move(value));
}

} // namespace

bool PowerTable::unambiguous(int n) const {
    const auto it = powers.find(n);
    return it != powers.end() && it->second.size() == 1;
}

const Element<Scalar>& PowerTable::power(int n) const {
    const auto it = powers.find(n);
    if (it == powers.end() || it->second.size() != 1)
        throw InputError("power " + std::to_string(n) + " is ambiguous or absent");
    return it->second.front();
}

int PowerTable::first_ambiguous() const {
    for (const auto& [n, candidates] : powers)
        if (candidates.size() != 1)
            return n;
    return 0;
}

std::string PowerTable::to_text(const SuperAlgebra<Scalar>& A) const {
    std::ostringstream os;
    os << "power table for y = " << element_str(A, element) << " (max n = " << max_n << ")\n";
    for (int n = 2; n <= max_n; ++n) {
        os << "y^" << n << ":";
        const auto& candidates = powers.at(n);
        if (candidates.size() == 1) {
            os << " " << element_str(A, candidates.front()) << "\n";
        } else {
            os << " AMBIGUOUS {";
            for (size_t i = 0; i < candidates.size(); ++i)
                os << (i ? ", " : "") << element_str(A, candidates[i]);
            os << "}\n";
        }
        for (int p = 1; p <= n - 1; ++p) {
            const auto& vals = products.at({p, n - p});
            os << "  y^" << p << "*y^" << (n - p) << " =";
            for (size_t i = 0; i < vals.size(); ++i)
                os << (i ? " | " : " ") << element_str(A, vals[i]);
            os << "\n";
        }
    }
    return os.str();
}

PowerTable build_power_table(const SuperAlgebra<Scalar>& A, const Element<Scalar>& y,
                             int max_n) {
    require_sized_for(A, y);
    if (max_n < 2)
        throw InputError("power table needs max_n >= 2");
    PowerTable table;
    table.element = y;
    table.max_n = max_n;
    table.powers[1] = {y};
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Element<Scalar>> candidates;
        for (int p = 1; p <= n - 1; ++p) {
            std::vector<Element<Scalar>> entry;
            for (const auto& u : table.powers.at(p))
                for (const auto& w : table.powers.at(n - p))
                    insert_candidate(entry, multiply(A, u, w));
            for (const auto& val : entry)
                insert_candidate(candidates, val);
            table.products[{p, n - p}] = std::move(entry);
        }
        table.powers[n] = std::move(candidates);
    }
    return table;
}

AmbiguityVerdict check_odd_power_associativity(const SuperAlgebra<Scalar>& A,
                                               const Element<Scalar>& y, int max_n) {
    if (!check_super_poisson(A).holds)
        throw InputError("precondition failed: the algebra does not satisfy the "
                         "super-Poisson identity");
    if (!odd_supported(A, y))
        throw InputError("precondition failed: the element is not homogeneous odd");
    const PowerTable table = build_power_table(A, y, max_n);
    AmbiguityVerdict verdict;
    const int first = table.first_ambiguous();
    if (first != 0) {
        verdict.ok = false;
        verdict.first_ambiguous_n = first;
        verdict.candidates = table.powers.at(first);
    }
    return verdict;
}

bool RemarkReport::all_pass() const {
    for (const auto& s : steps)
        if (!s.pass)
            return false;
    return true;
}

std::string RemarkReport::to_text() const {
    std::ostringstream os;
    for (const auto& s : steps) {
        os << s.name << ": " << (s.pass ? "PASS" : "FAIL");
        if (!s.detail.empty())
            os << "  (" << s.detail << ")";
        os << '\n';
    }
    return os.str();
}

RemarkReport verify_remark_steps(const SuperAlgebra<Scalar>& A, const Element<Scalar>& y) {
    if (!check_super_poisson(A).holds)
        throw InputError("precondition failed: the algebra does not satisfy the "
                         "super-Poisson identity");
    if (!odd_supported(A, y))
        throw InputError("precondition failed: the element is not homogeneous odd");

    const PoissonPair pair = split(A);
    RemarkReport report;
    const auto push = [&](std::string name, bool pass, std::string detail = "") {
        report.steps.push_back(RemarkStep{std::move(name), pass, std::move(detail)});
    };

    const auto dot_yy = multiply(pair.dot, y, y);
    push("dot(y,y) = 0", dot_yy.is_zero(), "dot(y,y) = " + element_str(A, dot_yy));

    const auto yy = multiply(A, y, y);
    const auto br_yy = multiply(pair.bracket, y, y);
    push("y*y = bracket(y,y)", yy == br_yy);

    const auto y3_left = multiply(A, y, yy);   // y y^2
    const auto y3_right = multiply(A, yy, y);  // y^2 y
    push("y*y2 = y2*y", y3_left == y3_right);

    const auto y4_22 = multiply(A, yy, yy);
    const auto y4_13 = multiply(A, y, y3_left);
    const auto y4_31 = multiply(A, y3_left, y);
    const auto iterated = multiply(pair.bracket, br_yy, br_yy);
    push("y2*y2 - y*y3 = bracket(bracket(y,y),bracket(y,y))", y4_22 - y4_13 == iterated);
    push("y2*y2 - y*y3 = 0", (y4_22 - y4_13).is_zero());
    push("y4 agrees along all decompositions", y4_22 == y4_13 && y4_13 == y4_31);

    return report;
}

} // namespace poisson
