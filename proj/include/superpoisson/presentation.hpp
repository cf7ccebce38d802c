#ifndef SUPERPOISSON_PRESENTATION_HPP
#define SUPERPOISSON_PRESENTATION_HPP

#include "superpoisson/identities.hpp"

namespace poisson {

/// The two-product presentation: a (intended) super-commutative associative
/// product and a (intended) super Lie bracket over one shared basis.
struct PoissonPair {
    SuperAlgebra<Scalar> dot;
    SuperAlgebra<Scalar> bracket;
};

/// Single fused product xy = x.y + {x,y}: structure constants are the sum
/// of the pair's. Raises InputError on basis mismatch.
SuperAlgebra<Scalar> fuse(const PoissonPair& pair);

/// Half-sum / half-difference split per basis pair (i,j) with the Koszul
/// sign of their degrees; fuse(split(A)) == A always.
PoissonPair split(const SuperAlgebra<Scalar>& A);

struct PairReport {
    IdentityReport dot_super_commutative;
    IdentityReport dot_associative;
    IdentityReport bracket_super_anticommutative;
    IdentityReport super_jacobi;
    IdentityReport super_leibniz;

    bool all_hold() const {
        return dot_super_commutative.holds && dot_associative.holds &&
               bracket_super_anticommutative.holds && super_jacobi.holds && super_leibniz.holds;
    }
    std::vector<const IdentityReport*> reports() const {
        return {&dot_super_commutative, &dot_associative, &bracket_super_anticommutative,
                &super_jacobi, &super_leibniz};
    }
};

/// Checks the five axioms of the two-product presentation on all basis
/// pairs/triples.
PairReport verify_poisson_pair(const PoissonPair& pair, Exec exec = Exec::parallel);

} // namespace poisson

#endif
