#include "superpoisson/presentation.hpp"

namespace poisson {

namespace {

void require_shared_basis(const PoissonPair& pair) {
    if (!(pair.dot.basis() == pair.bracket.basis()))
        throw InputError("pair products live on different graded bases");
}

} // namespace

SuperAlgebra<Scalar> fuse(const PoissonPair& pair) {
    require_shared_basis(pair);
    const int n = pair.dot.dim();
    std::vector<StructEntry<Scalar>> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar v = pair.dot.c(i, j, k) + pair.bracket.c(i, j, k);
                if (!v.is_zero())
                    entries.push_back({i, j, k, v});
            }
    return SuperAlgebra<Scalar>(pair.dot.basis(), entries);
}

PoissonPair split(const SuperAlgebra<Scalar>& A) {
    const int n = A.dim();
    const Scalar half(1, 2);
    std::vector<StructEntry<Scalar>> dot, bracket;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Scalar kappa = koszul_sign(A.basis().degree(i), A.basis().degree(j));
            for (int k = 0; k < n; ++k) {
                const Scalar sym = (A.c(i, j, k) + kappa * A.c(j, i, k)) * half;
                const Scalar skew = (A.c(i, j, k) - kappa * A.c(j, i, k)) * half;
                if (!sym.is_zero())
                    dot.push_back({i, j, k, sym});
                if (!skew.is_zero())
                    bracket.push_back({i, j, k, skew});
            }
        }
    return PoissonPair{SuperAlgebra<Scalar>(A.basis(), dot),
                       SuperAlgebra<Scalar>(A.basis(), bracket)};
}

PairReport verify_poisson_pair(const PoissonPair& pair, Exec exec) {
    require_shared_basis(pair);
    const SuperAlgebra<Scalar>& dot = pair.dot;
    const SuperAlgebra<Scalar>& br = pair.bracket;

    PairReport rep;
    rep.dot_super_commutative = check_over_pairs(
        dot, "dot super-commutativity",
        [](const SuperAlgebra<Scalar>& D, int i, int j) {
            const Scalar kappa = koszul_sign(D.basis().degree(i), D.basis().degree(j));
            Element<Scalar> r = multiply(D, D.basis_element(i), D.basis_element(j));
            r.add_scaled(multiply(D, D.basis_element(j), D.basis_element(i)), -kappa);
            return r;
        },
        exec);

    rep.dot_associative = check_over_triples(
        dot, "dot associativity",
        [](const SuperAlgebra<Scalar>& D, int i, int j, int k) {
            return associator(D, D.basis_element(i), D.basis_element(j), D.basis_element(k));
        },
        exec);

    rep.bracket_super_anticommutative = check_over_pairs(
        br, "bracket super-anticommutativity",
        [](const SuperAlgebra<Scalar>& B, int i, int j) {
            const Scalar kappa = koszul_sign(B.basis().degree(i), B.basis().degree(j));
            Element<Scalar> r = multiply(B, B.basis_element(i), B.basis_element(j));
            r.add_scaled(multiply(B, B.basis_element(j), B.basis_element(i)), kappa);
            return r;
        },
        exec);

    // (-1)^{|z||x|}{x,{y,z}} + (-1)^{|x||y|}{y,{z,x}} + (-1)^{|y||z|}{z,{x,y}} = 0
    rep.super_jacobi = check_over_triples(
        br, "super Jacobi",
        [](const SuperAlgebra<Scalar>& B, int i, int j, int k) {
            const Degree di = B.basis().degree(i), dj = B.basis().degree(j),
                         dk = B.basis().degree(k);
            const auto x = B.basis_element(i), y = B.basis_element(j), z = B.basis_element(k);
            Element<Scalar> r = multiply(B, x, multiply(B, y, z)) * koszul_sign(dk, di);
            r.add_scaled(multiply(B, y, multiply(B, z, x)), koszul_sign(di, dj));
            r.add_scaled(multiply(B, z, multiply(B, x, y)), koszul_sign(dj, dk));
            return r;
        },
        exec);

    // {x, y.z} - {x,y}.z - (-1)^{|x||y|} y.{x,z} = 0; needs both tables, so
    // the loop runs on the shared basis through `dot` and captures `br`.
    rep.super_leibniz = check_over_triples(
        dot, "super Leibniz",
        [&br](const SuperAlgebra<Scalar>& D, int i, int j, int k) {
            const Scalar kxy = koszul_sign(D.basis().degree(i), D.basis().degree(j));
            const auto x = D.basis_element(i), y = D.basis_element(j), z = D.basis_element(k);
            Element<Scalar> r = multiply(br, x, multiply(D, y, z));
            r.add_scaled(multiply(D, multiply(br, x, y), z), Scalar(-1));
            r.add_scaled(multiply(D, y, multiply(br, x, z)), -kxy);
            return r;
        },
        exec);

    return rep;
}

} // namespace poisson
