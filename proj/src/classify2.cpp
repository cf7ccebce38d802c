#include "superpoisson/classify2.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace poisson::classify2 {

const std::vector<std::string>& table_vars() {
    static const std::vector<std::string> vars{"a", "b", "c", "d"};
    return vars;
}

SuperAlgebra<Poly> param_algebra() {
    const auto& vars = table_vars();
    const GradedBasis basis{1, 1};
    std::vector<StructEntry<Poly>> entries{
        {0, 0, 0, Poly::variable(vars, "a")},
        {0, 1, 1, Poly::variable(vars, "b")},
        {1, 0, 1, Poly::variable(vars, "c")},
        {1, 1, 0, Poly::variable(vars, "d")},
    };
    return SuperAlgebra<Poly>(basis, entries, Poly(vars));
}

SuperAlgebra<Scalar> instance(const Scalar& a, const Scalar& b, const Scalar& c,
                              const Scalar& d) {
    const GradedBasis basis{1, 1};
    std::vector<StructEntry<Scalar>> entries;
    if (!a.is_zero())
        entries.push_back({0, 0, 0, a});
    if (!b.is_zero())
        entries.push_back({0, 1, 1, b});
    if (!c.is_zero())
        entries.push_back({1, 0, 1, c});
    if (!d.is_zero())
        entries.push_back({1, 1, 0, d});
    return SuperAlgebra<Scalar>(basis, entries);
}

bool ConstraintSystem::vanishes_at(const Point& p) const {
    const auto& vars = table_vars();
    std::map<std::string, Scalar> assignment;
    for (size_t i = 0; i < vars.size(); ++i)
        assignment.emplace(vars[i], p[i]);
    for (const Poly& poly : polys)
        if (!poly.eval(assignment).is_zero())
            return false;
    return true;
}

bool ConstraintSystem::vanishes_symbolically(const std::map<std::string, Poly>& images) const {
    for (const Poly& poly : polys)
        if (!poly.substitute(images).is_zero())
            return false;
    return true;
}

std::string ConstraintSystem::str() const {
    std::ostringstream os;
    for (const Poly& p : polys)
        os << "  " << p.str() << " = 0\n";
    return os.str();
}

ConstraintSystem derive_constraints() {
    const auto A = param_algebra();
    ConstraintSystem system;
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            for (int k = 0; k < A.dim(); ++k) {
                const auto residual = eval_super_poisson(A, A.basis_element(i),
                                                         A.basis_element(j), A.basis_element(k));
                for (const Poly& coord : residual.coeffs)
                    if (!coord.is_zero())
                        system.polys.insert(coord.normalized());
            }
    return system;
}

namespace {

Poly pconst(const Scalar& v) { return Poly::constant(table_vars(), v); }
Poly pvar(const std::string& n) { return Poly::variable(table_vars(), n); }

} // namespace

std::vector<Family> solve_families() {
    const Poly zero = pconst(Scalar(0));
    std::vector<Family> fams;
    fams.push_back(Family{"F1", "a", {{"a", pvar("a")}, {"b", zero}, {"c", zero}, {"d", zero}}});
    fams.push_back(
        Family{"F2", "a", {{"a", pvar("a")}, {"b", pvar("a")}, {"c", pvar("a")}, {"d", zero}}});
    fams.push_back(
        Family{"F3", "b", {{"a", zero}, {"b", pvar("b")}, {"c", -pvar("b")}, {"d", zero}}});
    fams.push_back(Family{"F4", "d", {{"a", zero}, {"b", zero}, {"c", zero}, {"d", pvar("d")}}});
    return fams;
}

Point Family::point(const Scalar& value) const {
    const auto& vars = table_vars();
    std::map<std::string, Scalar> assignment{{free_param, value}};
    Point p;
    for (size_t i = 0; i < vars.size(); ++i) {
        const Poly& image = substitution.at(vars[i]);
        p[i] = image.is_zero() ? Scalar(0) : image.eval(assignment);
    }
    return p;
}

SuperAlgebra<Scalar> Family::specialize(const Scalar& value) const {
    const Point p = point(value);
    return instance(p[0], p[1], p[2], p[3]);
}

std::string Family::table_str() const {
    static const char* products[4] = {"e0e0", "e0e1", "e1e0", "e1e1"};
    static const char* targets[4] = {"e0", "e1", "e1", "e0"};
    const auto& vars = table_vars();
    std::ostringstream os;
    os << name << ":";
    bool any = false;
    for (size_t i = 0; i < vars.size(); ++i) {
        const Poly& image = substitution.at(vars[i]);
        if (image.is_zero())
            continue;
        os << (any ? ", " : " ") << products[i] << " = " << image.str() << "*" << targets[i];
        any = true;
    }
    if (!any)
        os << " zero algebra";
    return os.str();
}

namespace {

template <class Pred>
std::vector<Point> scan_grid(const std::vector<Scalar>& grid, const Pred& pred, Exec exec) {
    const long g = static_cast<long>(grid.size());
    const long total = g * g * g * g;
    const auto point_at = [&](long t) {
        return Point{grid[static_cast<size_t>(t / (g * g * g))],
                     grid[static_cast<size_t>((t / (g * g)) % g)],
                     grid[static_cast<size_t>((t / g) % g)], grid[static_cast<size_t>(t % g)]};
    };
    std::vector<Point> hits;
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        std::vector<std::vector<std::pair<long, Point>>> local(
            static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel
        {
            auto& mine = local[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (long t = 0; t < total; ++t) {
                Point p = point_at(t);
                if (pred(p))
                    mine.emplace_back(t, std::move(p));
            }
        }
        std::vector<std::pair<long, Point>> merged;
        for (auto& chunk : local)
            for (auto& hit : chunk)
                merged.push_back(std::move(hit));
        std::sort(merged.begin(), merged.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        hits.reserve(merged.size());
        for (auto& [t, p] : merged)
            hits.push_back(std::move(p));
        return hits;
    }
#else
    (void)exec;
#endif
    for (long t = 0; t < total; ++t) {
        Point p = point_at(t);
        if (pred(p))
            hits.push_back(std::move(p));
    }
    return hits;
}

// Sorted by point value and deduplicated, so downstream set algebra works
// for any input grid.
template <class Pred>
std::vector<Point> scan_grid_sorted(const std::vector<Scalar>& grid, const Pred& pred,
                                    Exec exec) {
    std::vector<Point> hits = scan_grid(grid, pred, exec);
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
}

} // namespace

std::vector<Point> grid_oracle(const std::vector<Scalar>& grid, Exec exec) {
    return scan_grid_sorted(
        grid,
        [](const Point& p) {
            return check_super_poisson(instance(p[0], p[1], p[2], p[3]), Exec::serial).holds;
        },
        exec);
}

std::vector<Point> grid_zero_set(const ConstraintSystem& system, const std::vector<Scalar>& grid,
                                 Exec exec) {
    return scan_grid_sorted(grid, [&](const Point& p) { return system.vanishes_at(p); }, exec);
}

ConstraintSystem reference_system() {
    // Branch one: d = 0 with the two printed cubics; branch two: a = b = c = 0.
    // The union of the two zero sets is the zero set of all pairwise products.
    const Poly a = pvar("a"), b = pvar("b"), c = pvar("c"), d = pvar("d");
    const Scalar three(3);
    const std::vector<Poly> branch1{
        d,
        (a - b) * b * three + a * b - Scalar(2) * b * c + c * c,
        (a - c) * c * three + a * b - Scalar(2) * b * c + c * c,
    };
    const std::vector<Poly> branch2{a, b, c};
    ConstraintSystem system;
    for (const Poly& p : branch1)
        for (const Poly& q : branch2)
            system.polys.insert((p * q).normalized());
    return system;
}

CompareResult compare_systems(const ConstraintSystem& derived, const ConstraintSystem& reference,
                              const std::vector<Scalar>& grid, Exec exec) {
    CompareResult result;
    const auto first = grid_zero_set(derived, grid, exec);
    const auto second = grid_zero_set(reference, grid, exec);
    std::set_difference(first.begin(), first.end(), second.begin(), second.end(),
                        std::back_inserter(result.only_in_first));
    std::set_difference(second.begin(), second.end(), first.begin(), first.end(),
                        std::back_inserter(result.only_in_second));
    result.equivalent = result.only_in_first.empty() && result.only_in_second.empty();
    for (const Family& fam : solve_families()) {
        result.family_in_first.emplace_back(fam.name,
                                            derived.vanishes_symbolically(fam.substitution));
        result.family_in_second.emplace_back(fam.name,
                                             reference.vanishes_symbolically(fam.substitution));
    }
    return result;
}

std::string point_str(const Point& p) {
    std::ostringstream os;
    os << '(' << p[0].str() << ',' << p[1].str() << ',' << p[2].str() << ',' << p[3].str() << ')';
    return os.str();
}

std::vector<Scalar> integer_grid(int lo, int hi) {
    if (lo > hi)
        throw InputError("empty grid: min > max");
    std::vector<Scalar> g;
    for (int v = lo; v <= hi; ++v)
        g.push_back(Scalar(v));
    return g;
}

} // namespace poisson::classify2
