#ifndef SUPERPOISSON_CLASSIFY2_HPP
#define SUPERPOISSON_CLASSIFY2_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "superpoisson/identities.hpp"
#include "superpoisson/poly.hpp"

namespace poisson::classify2 {

/// Structure-constant indeterminates of the (1|1)-dimensional table
/// e0e0 = a e0, e0e1 = b e1, e1e0 = c e1, e1e1 = d e0.
const std::vector<std::string>& table_vars();

/// The parametrized table over Poly scalars.
SuperAlgebra<Poly> param_algebra();

/// Concrete instance of the table.
SuperAlgebra<Scalar> instance(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

/// Point of the parameter space (a, b, c, d).
using Point = std::array<Scalar, 4>;

/// Deduplicated set of polynomials in {a,b,c,d} whose common vanishing is
/// the property being described; generators stored in integer-primitive
/// normalized form.
struct ConstraintSystem {
    std::set<Poly> polys;

    bool vanishes_at(const Point& p) const;
    /// All polynomials become identically zero under the substitution.
    bool vanishes_symbolically(const std::map<std::string, Poly>& images) const;
    std::string str() const;
};

/// Coefficient polynomials of the fused identity evaluated symbolically on
/// all 8 basis triples of the parametrized table.
ConstraintSystem derive_constraints();

/// One-parameter solution family of the table.
struct Family {
    std::string name;        // F1..F4
    std::string free_param;  // which of a,b,c,d stays free
    std::map<std::string, Poly> substitution; // table var -> polynomial in the free param

    SuperAlgebra<Scalar> specialize(const Scalar& value) const;
    Point point(const Scalar& value) const;
    std::string table_str() const;
};

/// The four solution families over the grading-corrected table.
std::vector<Family> solve_families();

/// Brute-force oracle: every (a,b,c,d) in grid^4 whose concrete table
/// satisfies the fused identity on all basis triples. Sorted.
std::vector<Point> grid_oracle(const std::vector<Scalar>& grid, Exec exec = Exec::parallel);

/// Zero set of a constraint system on the same grid (independent of the
/// oracle's route through the identity checker). Sorted.
std::vector<Point> grid_zero_set(const ConstraintSystem& system, const std::vector<Scalar>& grid,
                                 Exec exec = Exec::parallel);

/// The two-branch reference presentation of the solution set, encoded as a
/// single system via pairwise branch products (a point vanishes iff it
/// lies on one of the branches).
ConstraintSystem reference_system();

struct CompareResult {
    bool equivalent = false;
    std::vector<Point> only_in_first;   // vanish for `derived` only
    std::vector<Point> only_in_second;  // vanish for `reference` only
    std::vector<std::pair<std::string, bool>> family_in_first;
    std::vector<std::pair<std::string, bool>> family_in_second;
};

/// Locus comparison on grid^4 plus symbolic family-containment checks.
CompareResult compare_systems(const ConstraintSystem& derived, const ConstraintSystem& reference,
                              const std::vector<Scalar>& grid, Exec exec = Exec::parallel);

std::string point_str(const Point& p);

/// Integer grid {lo..hi} as Scalars.
std::vector<Scalar> integer_grid(int lo, int hi);

} // namespace poisson::classify2

#endif
