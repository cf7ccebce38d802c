#ifndef SUPERPOISSON_SYMBOLIC_HPP
#define SUPERPOISSON_SYMBOLIC_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superpoisson/identities.hpp"

namespace poisson::symb {

/// Formal leaf of a multilinear degree-3 word.
enum class Leaf : int { x = 0, y = 1, z = 2 };

/// One of the 12 multilinear words in x, y, z: a leaf permutation under
/// either parenthesization (ab)c or a(bc).
struct Word {
    bool left_nested = true; // (ab)c when true, a(bc) when false
    std::array<Leaf, 3> leaves{Leaf::x, Leaf::y, Leaf::z};

    auto operator<=>(const Word&) const = default;
    std::string str() const;
};

/// Degree assignments (|x|,|y|,|z|) in {0,1}^3 are indexed by the binary
/// number |x|<<2 | |y|<<1 | |z|.
inline constexpr int kAssignments = 8;

inline int leaf_degree(int assignment, Leaf v) {
    return (assignment >> (2 - static_cast<int>(v))) & 1;
}

/// Coefficient valid for every degree assignment:
/// scale * (-1)^(xy.|x||y| + xz.|x||z| + yz.|y||z|).
struct SignFn {
    Scalar scale{1};
    bool xy = false, xz = false, yz = false;

    Scalar value(int assignment) const;

    friend SignFn operator*(const SignFn& a, const SignFn& b) {
        return SignFn{a.scale * b.scale, a.xy != b.xy, a.xz != b.xz, a.yz != b.yz};
    }
    friend SignFn operator-(const SignFn& a) { return SignFn{-a.scale, a.xy, a.xz, a.yz}; }
};

/// Sum of multilinear words with one rational coefficient table per degree
/// assignment; canonical form drops zero coefficients, so equality is
/// tablewise map equality.
class FormalSum {
public:
    FormalSum() = default;

    static FormalSum word(Word w, const SignFn& coeff);
    static FormalSum assoc(Leaf a, Leaf b, Leaf c, const SignFn& coeff); // (ab)c - a(bc)

    FormalSum& add(const FormalSum& other, const SignFn& coeff = SignFn{});

    /// Adds one term to a single assignment's table.
    FormalSum& add_at(int assignment, const Word& w, const Scalar& coeff);

    const std::map<Word, Scalar>& table(int assignment) const {
        return tables_[static_cast<size_t>(assignment)];
    }
    bool empty_at(int assignment) const { return table(assignment).empty(); }
    bool empty() const;
    size_t term_count(int assignment) const { return table(assignment).size(); }

    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.tables_ == b.tables_;
    }

    std::string str(int assignment) const;

private:
    std::array<std::map<Word, Scalar>, kAssignments> tables_;
};

/// The named identities of the fused-product theory.
enum class IdentityId {
    assoc_residual,   // v1: associativity of the symmetrized product
    jacobi_residual,  // v2: graded Jacobi for the antisymmetrized product
    leibniz_residual, // v3: graded Leibniz tying the two halves
    combined_residual, // v: associator plus the 1/3-weighted word block
    flex_cancellation, // B: the flexibility sum after substituting the identity
    fused_poisson,     // the characterizing identity (equals 3*v)
    ungraded_poisson   // the degree-blind specialization
};

FormalSum build_identity(IdentityId id, AssocVariant variant = AssocVariant::mixed);

/// f(rho[x], rho[y], rho[z]): relabels word leaves and permutes the
/// coefficient tables so coefficients stay expressed in the degrees of the
/// original variables.
FormalSum substitute(const FormalSum& f, const std::array<Leaf, 3>& rho);

FormalSum linear_combine(const std::vector<std::pair<SignFn, FormalSum>>& parts);

/// Evaluates the sum on homogeneous elements of a concrete algebra: picks
/// the coefficient table matching the elements' degrees and composes the
/// words through `multiply`.
Element<Scalar> eval_on(const SuperAlgebra<Scalar>& A, const FormalSum& f,
                        const Element<Scalar>& x, const Element<Scalar>& y,
                        const Element<Scalar>& z);

struct ProofEntry {
    std::string check;
    int assignment = 0; // -1 for hold-everywhere summary lines (unused now)
    bool pass = true;
    size_t residual_terms = 0;
    bool confirmed = false;   // failing residual reproduced on concrete algebras
    std::string residual;     // printed form of the residual, empty when pass
};

struct ProofReport {
    AssocVariant variant = AssocVariant::mixed;
    std::vector<ProofEntry> entries;

    bool all_pass() const;
    std::string to_text() const;
};

/// Runs the whole machine-proof suite: the 1/6 combination, the three
/// converse expressions, the flexibility cancellation and the all-even
/// reduction, each across the 8 degree assignments. Failing residuals are
/// re-evaluated on random concrete graded algebras before being reported.
ProofReport prove_all(AssocVariant variant = AssocVariant::mixed, std::uint64_t seed = 20260301);

} // namespace poisson::symb

#endif
