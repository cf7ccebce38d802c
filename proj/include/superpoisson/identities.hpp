#ifndef SUPERPOISSON_IDENTITIES_HPP
#define SUPERPOISSON_IDENTITIES_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "superpoisson/algebra.hpp"

namespace poisson {

/// Execution policy for the all-triples kernels. `parallel` uses OpenMP
/// when compiled in; results are merged in deterministic triple order
/// either way. `serial` is the reference path kept for testing.
enum class Exec { serial, parallel };

/// Which reading of the mixed-nesting terms in the associativity residual
/// to use: `mixed` is the x(zy) / z(xy) form (default), `left` replaces
/// them by (xz)y / (zx)y.
enum class AssocVariant { mixed, left };

struct Witness {
    int i = 0, j = 0, k = -1; // k == -1 for two-argument identities
    Element<Scalar> residual;
};

struct IdentityReport {
    std::string identity_name;
    bool holds = true;
    long total_failures = 0;
    long cases_checked = 0;
    std::vector<Witness> witnesses; // at most kWitnessCap, ordered by (i,j,k)

    static constexpr int kWitnessCap = 16;
};

namespace detail {

template <class R>
std::array<int, 3> koszul_of_triple(const SuperAlgebra<R>& A, const Element<R>& x,
                                    const Element<R>& y, const Element<R>& z) {
    const auto dx = degree_of(A, x), dy = degree_of(A, y), dz = degree_of(A, z);
    if (!dx || !dy || !dz)
        throw InputError("identity evaluation requires homogeneous elements");
    return {koszul(*dx, *dy), koszul(*dx, *dz), koszul(*dy, *dz)}; // kxy, kxz, kyz
}

template <class R>
Element<R> lw(const SuperAlgebra<R>& A, const Element<R>& a, const Element<R>& b,
              const Element<R>& c) {
    return multiply(A, multiply(A, a, b), c); // (ab)c
}

template <class R>
Element<R> rw(const SuperAlgebra<R>& A, const Element<R>& a, const Element<R>& b,
              const Element<R>& c) {
    return multiply(A, a, multiply(A, b, c)); // a(bc)
}

} // namespace detail

/// Left side of the fused characterization: 3(xy)z - 3x(yz)
/// + (-1)^{|x||y|}(yx)z - (-1)^{|y||z|}(xz)y
/// - (-1)^{|x||y|+|x||z|}(yz)x + (-1)^{|x||z|+|y||z|}(zx)y.
template <class R>
Element<R> eval_super_poisson(const SuperAlgebra<R>& A, const Element<R>& x, const Element<R>& y,
                              const Element<R>& z) {
    using namespace detail;
    const auto [kxy, kxz, kyz] = koszul_of_triple(A, x, y, z);
    Element<R> r = lw(A, x, y, z) * Scalar(3);
    r.add_scaled(rw(A, x, y, z), Scalar(-3));
    r.add_scaled(lw(A, y, x, z), Scalar(kxy));
    r.add_scaled(lw(A, x, z, y), Scalar(-kyz));
    r.add_scaled(lw(A, y, z, x), Scalar(-kxy * kxz));
    r.add_scaled(lw(A, z, x, y), Scalar(kxz * kyz));
    return r;
}

/// Associativity residual of the symmetrized half-product, written on the
/// fused product: A(x,y,z) - (-1)^{|x||y|+|x||z|+|y||z|}A(z,y,x)
/// + (-1)^{|x||y|}(yx)z - (-1)^{|y||z|}x(zy)
/// - (-1)^{|x||y|+|x||z|}(yz)x + (-1)^{|x||z|+|y||z|}z(xy).
template <class R>
Element<R> eval_v1(const SuperAlgebra<R>& A, const Element<R>& x, const Element<R>& y,
                   const Element<R>& z, AssocVariant variant = AssocVariant::mixed) {
    using namespace detail;
    const auto [kxy, kxz, kyz] = koszul_of_triple(A, x, y, z);
    Element<R> r = associator(A, x, y, z);
    r.add_scaled(associator(A, z, y, x), Scalar(-kxy * kxz * kyz));
    r.add_scaled(lw(A, y, x, z), Scalar(kxy));
    if (variant == AssocVariant::mixed) {
        r.add_scaled(rw(A, x, z, y), Scalar(-kyz));
        r.add_scaled(lw(A, y, z, x), Scalar(-kxy * kxz));
        r.add_scaled(rw(A, z, x, y), Scalar(kxz * kyz));
    } else {
        r.add_scaled(lw(A, x, z, y), Scalar(-kyz));
        r.add_scaled(lw(A, y, z, x), Scalar(-kxy * kxz));
        r.add_scaled(lw(A, z, x, y), Scalar(kxz * kyz));
    }
    return r;
}

/// Graded Jacobi residual of the antisymmetrized half-product, as a signed
/// sum of six associators of the fused product.
template <class R>
Element<R> eval_v2(const SuperAlgebra<R>& A, const Element<R>& x, const Element<R>& y,
                   const Element<R>& z) {
    using namespace detail;
    const auto [kxy, kxz, kyz] = koszul_of_triple(A, x, y, z);
    Element<R> r = associator(A, x, y, z) * Scalar(kxz);
    r.add_scaled(associator(A, y, x, z), Scalar(-kxy * kxz));
    r.add_scaled(associator(A, z, y, x), Scalar(-kxy * kyz));
    r.add_scaled(associator(A, x, z, y), Scalar(-kxz * kyz));
    r.add_scaled(associator(A, y, z, x), Scalar(kxy));
    r.add_scaled(associator(A, z, x, y), Scalar(kyz));
    return r;
}

/// Graded Leibniz residual, as a signed sum of six associators of the
/// fused product.
template <class R>
Element<R> eval_v3(const SuperAlgebra<R>& A, const Element<R>& x, const Element<R>& y,
                   const Element<R>& z) {
    using namespace detail;
    const auto [kxy, kxz, kyz] = koszul_of_triple(A, x, y, z);
    Element<R> r = associator(A, x, y, z);
    r.add_scaled(associator(A, y, x, z), Scalar(-kxy));
    r.add_scaled(associator(A, z, y, x), Scalar(kxy * kxz * kyz));
    r.add_scaled(associator(A, x, z, y), Scalar(kyz));
    r.add_scaled(associator(A, y, z, x), Scalar(kxy * kxz));
    r.add_scaled(associator(A, z, x, y), Scalar(-kxz * kyz));
    return r;
}

/// Flexibility residual A(x,y,z) + (-1)^{|x||z|+|x||y|+|y||z|}A(z,y,x).
template <class R>
Element<R> eval_flex(const SuperAlgebra<R>& A, const Element<R>& x, const Element<R>& y,
                     const Element<R>& z) {
    const auto [kxy, kxz, kyz] = detail::koszul_of_triple(A, x, y, z);
    Element<R> r = associator(A, x, y, z);
    r.add_scaled(associator(A, z, y, x), Scalar(kxy * kxz * kyz));
    return r;
}

/// Ungraded residual 3A(x,y,z) - (xz)y - (yz)x + (yx)z + (zx)y.
template <class R>
Element<R> eval_ungraded_poisson(const SuperAlgebra<R>& A, const Element<R>& x,
                                 const Element<R>& y, const Element<R>& z) {
    using namespace detail;
    Element<R> r = associator(A, x, y, z) * Scalar(3);
    r.add_scaled(lw(A, x, z, y), Scalar(-1));
    r.add_scaled(lw(A, y, z, x), Scalar(-1));
    r.add_scaled(lw(A, y, x, z), Scalar(1));
    r.add_scaled(lw(A, z, x, y), Scalar(1));
    return r;
}

using TripleResidual =
    std::function<Element<Scalar>(const SuperAlgebra<Scalar>&, int, int, int)>;
using PairResidual = std::function<Element<Scalar>(const SuperAlgebra<Scalar>&, int, int)>;

/// Evaluates a residual on every ordered basis triple and aggregates the
/// failures into a report (witnesses capped, deterministic order).
IdentityReport check_over_triples(const SuperAlgebra<Scalar>& A, std::string name,
                                  const TripleResidual& residual, Exec exec = Exec::parallel);

/// Same over ordered basis pairs.
IdentityReport check_over_pairs(const SuperAlgebra<Scalar>& A, std::string name,
                                const PairResidual& residual, Exec exec = Exec::parallel);

/// Fused characterization over all basis triples.
IdentityReport check_super_poisson(const SuperAlgebra<Scalar>& A, Exec exec = Exec::parallel);

/// Flexibility over all basis triples.
IdentityReport check_super_flexible(const SuperAlgebra<Scalar>& A, Exec exec = Exec::parallel);

/// Ungraded specialization; requires dim_odd == 0.
IdentityReport check_even_specialization(const SuperAlgebra<Scalar>& A, Exec exec = Exec::parallel);

std::string report_str(const SuperAlgebra<Scalar>& A, const IdentityReport& r);

} // namespace poisson

#endif
