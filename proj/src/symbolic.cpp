#include "superpoisson/symbolic.hpp"

#include <random>
#include <sstream>

namespace poisson::symb {

namespace {

constexpr Leaf X = Leaf::x, Y = Leaf::y, Z = Leaf::z;

char leaf_char(Leaf v) {
    switch (v) {
    case Leaf::x: return 'x';
    case Leaf::y: return 'y';
    default: return 'z';
    }
}

Word L(Leaf a, Leaf b, Leaf c) { return Word{true, {a, b, c}}; }
Word Rt(Leaf a, Leaf b, Leaf c) { return Word{false, {a, b, c}}; }

// Koszul factor (-1)^{|a||b|} for two distinct formal variables.
SignFn kos(Leaf a, Leaf b) {
    SignFn s;
    const int lo = std::min(static_cast<int>(a), static_cast<int>(b));
    const int hi = std::max(static_cast<int>(a), static_cast<int>(b));
    if (lo == 0 && hi == 1)
        s.xy = true;
    else if (lo == 0 && hi == 2)
        s.xz = true;
    else
        s.yz = true;
    return s;
}

SignFn scaled(Scalar q) { return SignFn{std::move(q)}; }

} // namespace

std::string Word::str() const {
    std::string s;
    if (left_nested) {
        s += '(';
        s += leaf_char(leaves[0]);
        s += leaf_char(leaves[1]);
        s += ')';
        s += leaf_char(leaves[2]);
    } else {
        s += leaf_char(leaves[0]);
        s += '(';
        s += leaf_char(leaves[1]);
        s += leaf_char(leaves[2]);
        s += ')';
    }
    return s;
}

Scalar SignFn::value(int assignment) const {
    int exponent = 0;
    const int dx = leaf_degree(assignment, Leaf::x);
    const int dy = leaf_degree(assignment, Leaf::y);
    const int dz = leaf_degree(assignment, Leaf::z);
    if (xy)
        exponent += dx * dy;
    if (xz)
        exponent += dx * dz;
    if (yz)
        exponent += dy * dz;
    return (exponent % 2) ? -scale : scale;
}

FormalSum FormalSum::word(Word w, const SignFn& coeff) {
    FormalSum f;
    for (int a = 0; a < kAssignments; ++a) {
        const Scalar c = coeff.value(a);
        if (!c.is_zero())
            f.tables_[static_cast<size_t>(a)].emplace(w, c);
    }
    return f;
}

FormalSum FormalSum::assoc(Leaf a, Leaf b, Leaf c, const SignFn& coeff) {
    FormalSum f = word(L(a, b, c), coeff);
    f.add(word(Rt(a, b, c), -coeff));
    return f;
}

FormalSum& FormalSum::add_at(int assignment, const Word& w, const Scalar& coeff) {
    if (coeff.is_zero())
        return *this;
    auto& t = tables_[static_cast<size_t>(assignment)];
    auto it = t.find(w);
    if (it == t.end()) {
        t.emplace(w, coeff);
        return *this;
    }
    it->second += coeff;
    if (it->second.is_zero())
        t.erase(it);
    return *this;
}

FormalSum& FormalSum::add(const FormalSum& other, const SignFn& coeff) {
    for (int a = 0; a < kAssignments; ++a) {
        const Scalar s = coeff.value(a);
        if (s.is_zero())
            continue;
        auto& mine = tables_[static_cast<size_t>(a)];
        for (const auto& [w, c] : other.tables_[static_cast<size_t>(a)]) {
            auto it = mine.find(w);
            if (it == mine.end()) {
                mine.emplace(w, c * s);
                continue;
            }
            it->second += c * s;
            if (it->second.is_zero())
                mine.erase(it);
        }
    }
    return *this;
}

bool FormalSum::empty() const {
    for (int a = 0; a < kAssignments; ++a)
        if (!empty_at(a))
            return false;
    return true;
}

std::string FormalSum::str(int assignment) const {
    const auto& t = table(assignment);
    if (t.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t) {
        if (first) {
            if (c.sign() < 0)
                os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Scalar mag = c.abs();
        if (mag != Scalar(1))
            os << mag.str() << '*';
        os << w.str();
    }
    return os.str();
}

FormalSum build_identity(IdentityId id, AssocVariant variant) {
    FormalSum f;
    const SignFn kxy = kos(X, Y), kxz = kos(X, Z), kyz = kos(Y, Z);
    const SignFn k3 = kxy * kxz * kyz;
    switch (id) {
    case IdentityId::assoc_residual:
        f.add(FormalSum::assoc(X, Y, Z, scaled(1)));
        f.add(FormalSum::assoc(Z, Y, X, -k3));
        f.add(FormalSum::word(L(Y, X, Z), kxy));
        if (variant == AssocVariant::mixed) {
            f.add(FormalSum::word(Rt(X, Z, Y), -kyz));
            f.add(FormalSum::word(L(Y, Z, X), -(kxy * kxz)));
            f.add(FormalSum::word(Rt(Z, X, Y), kxz * kyz));
        } else {
            f.add(FormalSum::word(L(X, Z, Y), -kyz));
            f.add(FormalSum::word(L(Y, Z, X), -(kxy * kxz)));
            f.add(FormalSum::word(L(Z, X, Y), kxz * kyz));
        }
        return f;

    case IdentityId::jacobi_residual:
        f.add(FormalSum::assoc(X, Y, Z, kxz));
        f.add(FormalSum::assoc(Y, X, Z, -(kxy * kxz)));
        f.add(FormalSum::assoc(Z, Y, X, -(kxy * kyz)));
        f.add(FormalSum::assoc(X, Z, Y, -(kxz * kyz)));
        f.add(FormalSum::assoc(Y, Z, X, kxy));
        f.add(FormalSum::assoc(Z, X, Y, kyz));
        return f;

    case IdentityId::leibniz_residual:
        f.add(FormalSum::assoc(X, Y, Z, scaled(1)));
        f.add(FormalSum::assoc(Y, X, Z, -kxy));
        f.add(FormalSum::assoc(Z, Y, X, k3));
        f.add(FormalSum::assoc(X, Z, Y, kyz));
        f.add(FormalSum::assoc(Y, Z, X, kxy * kxz));
        f.add(FormalSum::assoc(Z, X, Y, -(kxz * kyz)));
        return f;

    case IdentityId::combined_residual: {
        const SignFn third = scaled(Scalar(1, 3));
        f.add(FormalSum::assoc(X, Y, Z, scaled(1)));
        f.add(FormalSum::word(L(Y, X, Z), third * kxy));
        f.add(FormalSum::word(L(X, Z, Y), -(third * kyz)));
        f.add(FormalSum::word(L(Y, Z, X), -(third * kxy * kxz)));
        f.add(FormalSum::word(L(Z, X, Y), third * kxz * kyz));
        return f;
    }

    case IdentityId::flex_cancellation: {
        // Both flexibility associators rewritten through the fused identity:
        // 3A(a,b,c) -> -k_ab (ba)c + k_bc (ac)b + k_ab k_ac (bc)a - k_ac k_bc (ca)b.
        const auto group = [&](Leaf a, Leaf b, Leaf c, const SignFn& s) {
            FormalSum g;
            g.add(FormalSum::word(L(b, a, c), -(s * kos(a, b))));
            g.add(FormalSum::word(L(a, c, b), s * kos(b, c)));
            g.add(FormalSum::word(L(b, c, a), s * kos(a, b) * kos(a, c)));
            g.add(FormalSum::word(L(c, a, b), -(s * kos(a, c) * kos(b, c))));
            return g;
        };
        f.add(group(X, Y, Z, scaled(1)));
        f.add(group(Z, Y, X, k3));
        return f;
    }

    case IdentityId::fused_poisson:
        f.add(FormalSum::assoc(X, Y, Z, scaled(3)));
        f.add(FormalSum::word(L(Y, X, Z), kxy));
        f.add(FormalSum::word(L(X, Z, Y), -kyz));
        f.add(FormalSum::word(L(Y, Z, X), -(kxy * kxz)));
        f.add(FormalSum::word(L(Z, X, Y), kxz * kyz));
        return f;

    case IdentityId::ungraded_poisson:
        f.add(FormalSum::assoc(X, Y, Z, scaled(3)));
        f.add(FormalSum::word(L(X, Z, Y), scaled(-1)));
        f.add(FormalSum::word(L(Y, Z, X), scaled(-1)));
        f.add(FormalSum::word(L(Y, X, Z), scaled(1)));
        f.add(FormalSum::word(L(Z, X, Y), scaled(1)));
        return f;
    }
    throw InputError("unknown identity id");
}

FormalSum substitute(const FormalSum& f, const std::array<Leaf, 3>& rho) {
    // Result represents f(rho[x], rho[y], rho[z]); the source table for the
    // assignment (|x|,|y|,|z|) is the one indexed by the degrees the slots
    // receive, i.e. (|rho[x]|, |rho[y]|, |rho[z]|).
    FormalSum g;
    for (int a = 0; a < kAssignments; ++a) {
        const int src = (leaf_degree(a, rho[0]) << 2) | (leaf_degree(a, rho[1]) << 1) |
                        leaf_degree(a, rho[2]);
        for (const auto& [w, c] : f.table(src)) {
            Word relabeled = w;
            for (auto& leaf : relabeled.leaves)
                leaf = rho[static_cast<size_t>(leaf)];
            g.add_at(a, relabeled, c);
        }
    }
    return g;
}

FormalSum linear_combine(const std::vector<std::pair<SignFn, FormalSum>>& parts) {
    FormalSum out;
    for (const auto& [coeff, f] : parts)
        out.add(f, coeff);
    return out;
}

Element<Scalar> eval_on(const SuperAlgebra<Scalar>& A, const FormalSum& f,
                        const Element<Scalar>& x, const Element<Scalar>& y,
                        const Element<Scalar>& z) {
    const auto dx = degree_of(A, x), dy = degree_of(A, y), dz = degree_of(A, z);
    if (!dx || !dy || !dz)
        throw InputError("formal sums evaluate on homogeneous elements only");
    const int assignment = (static_cast<int>(*dx) << 2) | (static_cast<int>(*dy) << 1) |
                           static_cast<int>(*dz);
    const std::array<const Element<Scalar>*, 3> args{&x, &y, &z};
    Element<Scalar> out = A.zero_element();
    for (const auto& [w, c] : f.table(assignment)) {
        const Element<Scalar>& a = *args[static_cast<size_t>(w.leaves[0])];
        const Element<Scalar>& b = *args[static_cast<size_t>(w.leaves[1])];
        const Element<Scalar>& d = *args[static_cast<size_t>(w.leaves[2])];
        out.add_scaled(w.left_nested ? multiply(A, multiply(A, a, b), d)
                                     : multiply(A, a, multiply(A, b, d)),
                       c);
    }
    return out;
}

namespace {

// Random graded algebra + homogeneous probes used to confirm failing
// residuals by concrete evaluation.
SuperAlgebra<Scalar> random_graded_algebra(std::mt19937_64& rng, int de, int d_odd) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    const GradedBasis basis{de, d_odd};
    std::vector<StructEntry<Scalar>> entries;
    for (int i = 0; i < basis.dim(); ++i)
        for (int j = 0; j < basis.dim(); ++j)
            for (int k = 0; k < basis.dim(); ++k) {
                if (basis.degree(i) + basis.degree(j) != basis.degree(k))
                    continue;
                const int v = coeff(rng);
                if (v != 0)
                    entries.push_back({i, j, k, Scalar(v)});
            }
    return SuperAlgebra<Scalar>(basis, entries);
}

Element<Scalar> random_homogeneous(std::mt19937_64& rng, const SuperAlgebra<Scalar>& A,
                                   Degree degree) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Element<Scalar> e = A.zero_element();
        bool nonzero = false;
        for (int i = 0; i < A.dim(); ++i) {
            if (A.basis().degree(i) != degree)
                continue;
            const int v = coeff(rng);
            if (v != 0) {
                e.coeffs[static_cast<size_t>(i)] = Scalar(v);
                nonzero = true;
            }
        }
        if (nonzero)
            return e;
    }
    return A.zero_element(); // block has dimension 0
}

bool confirm_residual(const FormalSum& residual, int assignment, std::mt19937_64& rng) {
    for (int probe = 0; probe < 24; ++probe) {
        const auto A = random_graded_algebra(rng, 2, 2);
        const auto x = random_homogeneous(
            rng, A, static_cast<Degree>(leaf_degree(assignment, Leaf::x)));
        const auto y = random_homogeneous(
            rng, A, static_cast<Degree>(leaf_degree(assignment, Leaf::y)));
        const auto z = random_homogeneous(
            rng, A, static_cast<Degree>(leaf_degree(assignment, Leaf::z)));
        if (!eval_on(A, residual, x, y, z).is_zero())
            return true;
    }
    return false;
}

void record(ProofReport& report, const std::string& check, const FormalSum& residual,
            std::mt19937_64& rng) {
    for (int a = 0; a < kAssignments; ++a) {
        ProofEntry e;
        e.check = check;
        e.assignment = a;
        e.residual_terms = residual.term_count(a);
        e.pass = (e.residual_terms == 0);
        if (!e.pass) {
            e.residual = residual.str(a);
            e.confirmed = confirm_residual(residual, a, rng);
        }
        report.entries.push_back(std::move(e));
    }
}

} // namespace

bool ProofReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass)
            return false;
    return true;
}

std::string ProofReport::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.check << "  xyz=" << ((e.assignment >> 2) & 1) << ((e.assignment >> 1) & 1)
           << (e.assignment & 1) << "  " << (e.pass ? "PASS" : "FAIL")
           << "  residual_terms=" << e.residual_terms;
        if (!e.pass)
            os << "  confirmed=" << (e.confirmed ? "yes" : "no") << "  residual: " << e.residual;
        os << '\n';
    }
    return os.str();
}

ProofReport prove_all(AssocVariant variant, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ProofReport report;
    report.variant = variant;

    const FormalSum v1 = build_identity(IdentityId::assoc_residual, variant);
    const FormalSum v2 = build_identity(IdentityId::jacobi_residual);
    const FormalSum v3 = build_identity(IdentityId::leibniz_residual);
    const FormalSum v = build_identity(IdentityId::combined_residual);
    const SignFn kxy = kos(X, Y), kxz = kos(X, Z), kyz = kos(Y, Z);
    const SignFn k3 = kxy * kxz * kyz;

    const auto at = [](Leaf a, Leaf b, Leaf c) { return std::array<Leaf, 3>{a, b, c}; };

    // (a) the 1/6 combination reproduces the combined residual
    {
        FormalSum combo = linear_combine({{scaled(2), v1},
                                          {kxz, v2},
                                          {scaled(1), v3},
                                          {scaled(2) * kxz * kyz, substitute(v3, at(Z, X, Y))}});
        combo.add(v, scaled(-6));
        FormalSum residual;
        residual.add(combo, scaled(Scalar(1, 6)));
        record(report, "combination", residual, rng);
    }

    // (b) the converse expressions rebuild each residual from the combined one
    {
        FormalSum claim = linear_combine({{scaled(1), v},
                                          {-k3, substitute(v, at(Z, Y, X))},
                                          {kyz, substitute(v, at(X, Z, Y))},
                                          {-(kxz * kyz), substitute(v, at(Z, X, Y))}});
        claim.add(v1, scaled(-1));
        record(report, "converse_assoc", claim, rng);
    }
    {
        FormalSum claim = linear_combine({{kxz, v},
                                          {-(kxy * kxz), substitute(v, at(Y, X, Z))},
                                          {-(kxy * kyz), substitute(v, at(Z, Y, X))},
                                          {-(kxz * kyz), substitute(v, at(X, Z, Y))},
                                          {kxy, substitute(v, at(Y, Z, X))},
                                          {kyz, substitute(v, at(Z, X, Y))}});
        claim.add(v2, scaled(-1));
        record(report, "converse_jacobi", claim, rng);
    }
    {
        FormalSum claim = linear_combine({{scaled(1), v},
                                          {-kxy, substitute(v, at(Y, X, Z))},
                                          {k3, substitute(v, at(Z, Y, X))},
                                          {kyz, substitute(v, at(X, Z, Y))},
                                          {kxy * kxz, substitute(v, at(Y, Z, X))},
                                          {-(kxz * kyz), substitute(v, at(Z, X, Y))}});
        claim.add(v3, scaled(-1));
        record(report, "converse_leibniz", claim, rng);
    }

    // (c) flexibility cancellation: the sum must canonicalize to nothing
    record(report, "flex_cancellation", build_identity(IdentityId::flex_cancellation), rng);

    // (d) degree-blind reduction: the ungraded identity coincides with the
    // all-even table of the fused one (tablewise, for each assignment slot)
    {
        const FormalSum eq2 = build_identity(IdentityId::fused_poisson);
        const FormalSum eq1 = build_identity(IdentityId::ungraded_poisson);
        for (int a = 0; a < kAssignments; ++a) {
            ProofEntry e;
            e.check = "even_reduction";
            e.assignment = a;
            FormalSum diff;
            for (const auto& [w, c] : eq1.table(a))
                diff.add_at(a, w, c);
            for (const auto& [w, c] : eq2.table(0))
                diff.add_at(a, w, -c);
            e.residual_terms = diff.term_count(a);
            e.pass = (e.residual_terms == 0);
            if (!e.pass)
                e.residual = diff.str(a);
            report.entries.push_back(std::move(e));
        }
    }

    return report;
}

} // namespace poisson::symb
