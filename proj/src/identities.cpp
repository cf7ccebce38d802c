#include "superpoisson/identities.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace poisson {

std::string element_str(const SuperAlgebra<Scalar>& A, const Element<Scalar>& x) {
    require_sized_for(A, x);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < A.dim(); ++i) {
        const Scalar& c = x.coeffs[static_cast<size_t>(i)];
        if (c.is_zero())
            continue;
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
        os << 'e' << i;
    }
    if (first)
        return "0";
    return os.str();
}

namespace {

// Shared kernel: run `residual(t)` for t in [0, total), collect failing
// cases. OpenMP path gathers per-thread and merges; order is fixed by
// sorting on the flattened index, so both paths agree byte for byte.
template <class Fn>
std::vector<std::pair<long, Element<Scalar>>> scan_cases(long total, const Fn& residual,
                                                         Exec exec) {
    std::vector<std::pair<long, Element<Scalar>>> failures;
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        std::vector<std::vector<std::pair<long, Element<Scalar>>>> local(
            static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel
        {
            auto& mine = local[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (long t = 0; t < total; ++t) {
                Element<Scalar> r = residual(t);
                if (!r.is_zero())
                    mine.emplace_back(t, std::move(r));
            }
        }
        for (auto& chunk : local)
            for (auto& f : chunk)
                failures.push_back(std::move(f));
        std::sort(failures.begin(), failures.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return failures;
    }
#else
    (void)exec;
#endif
    for (long t = 0; t < total; ++t) {
        Element<Scalar> r = residual(t);
        if (!r.is_zero())
            failures.emplace_back(t, std::move(r));
    }
    return failures;
}

} // namespace

IdentityReport check_over_triples(const SuperAlgebra<Scalar>& A, std::string name,
                                  const TripleResidual& residual, Exec exec) {
    const long n = A.dim();
    const long total = n * n * n;
    auto failures = scan_cases(
        total,
        [&](long t) {
            const int i = static_cast<int>(t / (n * n));
            const int j = static_cast<int>((t / n) % n);
            const int k = static_cast<int>(t % n);
            return residual(A, i, j, k);
        },
        exec);

    IdentityReport rep;
    rep.identity_name = std::move(name);
    rep.cases_checked = total;
    rep.total_failures = static_cast<long>(failures.size());
    rep.holds = failures.empty();
    for (size_t w = 0; w < failures.size() && w < IdentityReport::kWitnessCap; ++w) {
        const long t = failures[w].first;
        rep.witnesses.push_back(Witness{static_cast<int>(t / (n * n)),
                                        static_cast<int>((t / n) % n),
                                        static_cast<int>(t % n), std::move(failures[w].second)});
    }
    return rep;
}

IdentityReport check_over_pairs(const SuperAlgebra<Scalar>& A, std::string name,
                                const PairResidual& residual, Exec exec) {
    const long n = A.dim();
    auto failures = scan_cases(
        n * n,
        [&](long t) {
            return residual(A, static_cast<int>(t / n), static_cast<int>(t % n));
        },
        exec);

    IdentityReport rep;
    rep.identity_name = std::move(name);
    rep.cases_checked = n * n;
    rep.total_failures = static_cast<long>(failures.size());
    rep.holds = failures.empty();
    for (size_t w = 0; w < failures.size() && w < IdentityReport::kWitnessCap; ++w) {
        const long t = failures[w].first;
        rep.witnesses.push_back(Witness{static_cast<int>(t / n), static_cast<int>(t % n), -1,
                                        std::move(failures[w].second)});
    }
    return rep;
}

IdentityReport check_super_poisson(const SuperAlgebra<Scalar>& A, Exec exec) {
    return check_over_triples(
        A, "super-Poisson identity",
        [](const SuperAlgebra<Scalar>& alg, int i, int j, int k) {
            return eval_super_poisson(alg, alg.basis_element(i), alg.basis_element(j),
                                      alg.basis_element(k));
        },
        exec);
}

IdentityReport check_super_flexible(const SuperAlgebra<Scalar>& A, Exec exec) {
    return check_over_triples(
        A, "super-flexibility",
        [](const SuperAlgebra<Scalar>& alg, int i, int j, int k) {
            return eval_flex(alg, alg.basis_element(i), alg.basis_element(j),
                             alg.basis_element(k));
        },
        exec);
}

IdentityReport check_even_specialization(const SuperAlgebra<Scalar>& A, Exec exec) {
    if (A.basis().dim_odd != 0)
        throw InputError("even specialization requires dim_odd = 0, got " +
                         std::to_string(A.basis().dim_odd));
    return check_over_triples(
        A, "ungraded Poisson identity",
        [](const SuperAlgebra<Scalar>& alg, int i, int j, int k) {
            return eval_ungraded_poisson(alg, alg.basis_element(i), alg.basis_element(j),
                                         alg.basis_element(k));
        },
        exec);
}

std::string report_str(const SuperAlgebra<Scalar>& A, const IdentityReport& r) {
    std::ostringstream os;
    os << r.identity_name << ": ";
    if (r.holds) {
        os << "PASS (" << r.cases_checked << " cases)";
        return os.str();
    }
    os << "FAIL (" << r.total_failures << " of " << r.cases_checked << " cases)";
    for (const auto& w : r.witnesses) {
        os << "\n  witness (e" << w.i << ",e" << w.j;
        if (w.k >= 0)
            os << ",e" << w.k;
        os << "): residual = " << element_str(A, w.residual);
    }
    if (r.total_failures > static_cast<long>(r.witnesses.size()))
        os << "\n  ... " << (r.total_failures - static_cast<long>(r.witnesses.size()))
           << " more witnesses suppressed";
    return os.str();
}

} // namespace poisson
