#ifndef SUPERPOISSON_ALGEBRA_HPP
#define SUPERPOISSON_ALGEBRA_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superpoisson/errors.hpp"
#include "superpoisson/scalar.hpp"

namespace poisson {

/// Z2 degree of a homogeneous vector.
enum class Degree : int { even = 0, odd = 1 };

inline Degree operator+(Degree a, Degree b) {
    return static_cast<Degree>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// (-1)^{|a||b|} as a machine integer.
inline int koszul(Degree a, Degree b) {
    return (a == Degree::odd && b == Degree::odd) ? -1 : 1;
}

/// (-1)^{|a||b|}: -1 exactly when both degrees are odd.
inline Scalar koszul_sign(Degree a, Degree b) {
    return Scalar(koszul(a, b));
}

/// Multiplicative unit of the coefficient ring, shaped like the given zero.
inline Scalar ring_one(const Scalar&) { return Scalar(1); }

/// Basis of a Z2-graded space: indices 0..dim_even-1 are even,
/// dim_even..dim_even+dim_odd-1 are odd.
struct GradedBasis {
    int dim_even = 0;
    int dim_odd = 0;

    int dim() const { return dim_even + dim_odd; }

    Degree degree(int i) const {
        if (i < 0 || i >= dim())
            throw InputError("basis index " + std::to_string(i) + " out of range [0, " +
                             std::to_string(dim()) + ")");
        return i < dim_even ? Degree::even : Degree::odd;
    }

    bool operator==(const GradedBasis&) const = default;
};

/// Coefficient vector in a fixed graded basis.
template <class R>
struct Element {
    std::vector<R> coeffs;

    bool is_zero() const {
        for (const R& c : coeffs)
            if (!c.is_zero())
                return false;
        return true;
    }

    Element& add_scaled(const Element& other, const Scalar& factor) {
        for (size_t i = 0; i < coeffs.size(); ++i)
            coeffs[i] += other.coeffs[i] * factor;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a.add_scaled(b, Scalar(1)); }
    friend Element operator-(Element a, const Element& b) { return a.add_scaled(b, Scalar(-1)); }
    friend Element operator*(Element a, const Scalar& s) {
        for (R& c : a.coeffs)
            c = c * s;
        return a;
    }
    friend bool operator==(const Element& a, const Element& b) { return a.coeffs == b.coeffs; }
    friend bool operator<(const Element& a, const Element& b) { return a.coeffs < b.coeffs; }
};

template <class R>
struct StructEntry {
    int i, j, k;
    R value;
};

/// Finite-dimensional Z2-graded algebra given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k over R (Scalar, or Poly in
/// classification mode). Immutable after construction; grading
/// compatibility is enforced at construction time.
template <class R>
class SuperAlgebra {
public:
    SuperAlgebra(GradedBasis basis, const std::vector<StructEntry<R>>& entries, R zero = R())
        : basis_(basis), zero_(std::move(zero)),
          c_(static_cast<size_t>(basis.dim()) * basis.dim() * basis.dim(), zero_) {
        if (basis_.dim() < 1)
            throw InputError("a graded basis needs at least one vector");
        if (basis_.dim_even < 0 || basis_.dim_odd < 0)
            throw InputError("negative basis dimension");
        for (const auto& e : entries) {
            basis_.degree(e.i); // range checks
            basis_.degree(e.j);
            basis_.degree(e.k);
            at(e.i, e.j, e.k) += e.value;
        }
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                for (int k = 0; k < dim(); ++k)
                    if (!c(i, j, k).is_zero() &&
                        basis_.degree(i) + basis_.degree(j) != basis_.degree(k)) {
                        std::ostringstream os;
                        os << "structure constant (" << i << "," << j << "," << k
                           << ") violates the grading: |e" << i << "|+|e" << j
                           << "| != |e" << k << "| (mod 2)";
                        throw GradingError(os.str());
                    }
    }

    const GradedBasis& basis() const { return basis_; }
    int dim() const { return basis_.dim(); }
    const R& ring_zero() const { return zero_; }

    const R& c(int i, int j, int k) const {
        return c_[(static_cast<size_t>(i) * dim() + j) * dim() + k];
    }

    Element<R> zero_element() const {
        return Element<R>{std::vector<R>(static_cast<size_t>(dim()), zero_)};
    }

    Element<R> basis_element(int i) const {
        basis_.degree(i);
        Element<R> e = zero_element();
        e.coeffs[static_cast<size_t>(i)] = ring_one(zero_);
        return e;
    }

    friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
        return a.basis_ == b.basis_ && a.c_ == b.c_;
    }

private:
    R& at(int i, int j, int k) {
        return c_[(static_cast<size_t>(i) * dim() + j) * dim() + k];
    }

    GradedBasis basis_;
    R zero_;
    std::vector<R> c_;
};

/// Builds the algebra from a sparse constant list; duplicate (i,j,k)
/// entries accumulate. Grading violations raise GradingError naming the
/// offending triple.
template <class R>
SuperAlgebra<R> make_superalgebra(GradedBasis basis, const std::vector<StructEntry<R>>& entries,
                                  R zero = R()) {
    return SuperAlgebra<R>(basis, entries, std::move(zero));
}

template <class R>
void require_sized_for(const SuperAlgebra<R>& A, const Element<R>& x) {
    if (static_cast<int>(x.coeffs.size()) != A.dim())
        throw InputError("element has " + std::to_string(x.coeffs.size()) +
                         " coefficients, algebra dimension is " + std::to_string(A.dim()));
}

/// Bilinear product: agrees with the structure constants on basis vectors.
template <class R>
Element<R> multiply(const SuperAlgebra<R>& A, const Element<R>& x, const Element<R>& y) {
    require_sized_for(A, x);
    require_sized_for(A, y);
    Element<R> out = A.zero_element();
    for (int i = 0; i < A.dim(); ++i) {
        if (x.coeffs[static_cast<size_t>(i)].is_zero())
            continue;
        for (int j = 0; j < A.dim(); ++j) {
            if (y.coeffs[static_cast<size_t>(j)].is_zero())
                continue;
            const R xy = x.coeffs[static_cast<size_t>(i)] * y.coeffs[static_cast<size_t>(j)];
            for (int k = 0; k < A.dim(); ++k) {
                const R& cijk = A.c(i, j, k);
                if (!cijk.is_zero())
                    out.coeffs[static_cast<size_t>(k)] += xy * cijk;
            }
        }
    }
    return out;
}

/// A(x,y,z) = (xy)z - x(yz).
template <class R>
Element<R> associator(const SuperAlgebra<R>& A, const Element<R>& x, const Element<R>& y,
                      const Element<R>& z) {
    Element<R> out = multiply(A, multiply(A, x, y), z);
    out.add_scaled(multiply(A, x, multiply(A, y, z)), Scalar(-1));
    return out;
}

/// Degree of a homogeneous element; nullopt when the support meets both
/// blocks. The zero element reports even by convention.
template <class R>
std::optional<Degree> degree_of(const SuperAlgebra<R>& A, const Element<R>& x) {
    require_sized_for(A, x);
    bool even = false, odd = false;
    for (int i = 0; i < A.dim(); ++i) {
        if (x.coeffs[static_cast<size_t>(i)].is_zero())
            continue;
        (A.basis().degree(i) == Degree::even ? even : odd) = true;
    }
    if (even && odd)
        return std::nullopt;
    return odd ? Degree::odd : Degree::even;
}

std::string element_str(const SuperAlgebra<Scalar>& A, const Element<Scalar>& x);

} // namespace poisson

#endif
