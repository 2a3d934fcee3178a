#ifndef SPARSEREC_RIP_HPP
#define SPARSEREC_RIP_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "sparserec/core.hpp"
#include "sparserec/projection.hpp"
#include "sparserec/thresholding.hpp"

namespace sparserec {

struct RicEstimate {
    int order = 0;
    double delta = 0.0;
    std::uint64_t supports_enumerated = 0;
    IndexSet argmax_support;
};

namespace detail {

inline std::uint64_t binomial(int n, int q) {
    if (q < 0 || q > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= q; ++i) r = r * static_cast<std::uint64_t>(n - q + i) / i;
    return r;
}

// Advance S to the next q-subset of {0..n-1} in lexicographic order.
inline bool next_combination(IndexSet& S, int n) {
    const int q = static_cast<int>(S.size());
    for (int i = q - 1; i >= 0; --i) {
        if (S[i] < n - q + i) {
            ++S[i];
            for (int j = i + 1; j < q; ++j) S[j] = S[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Exact delta_q(A) by full lexicographic enumeration of all C(n,q) supports.
/// Ties keep the lexicographically first attaining support.
inline RicEstimate ric_exact(const Matrix& A, int q, std::uint64_t budget = 1000000) {
    if (q < 1 || q > A.cols) throw std::invalid_argument("ric_exact: order out of range");
    const std::uint64_t total = detail::binomial(A.cols, q);
    if (total > budget)
        throw std::invalid_argument(
            "ric_exact: C(n,q) exceeds the enumeration budget; reduce n or q");
    RicEstimate est;
    est.order = q;
    IndexSet S(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) S[i] = i;
    bool more = true;
    while (more) {
        const auto [lmin, lmax] = gram_eigen_extremes(A, S);
        const double d = std::max(lmax - 1.0, 1.0 - lmin);
        ++est.supports_enumerated;
        if (est.argmax_support.empty() || d > est.delta) {
            est.delta = std::max(0.0, d);
            est.argmax_support = S;
        }
        more = detail::next_combination(S, A.cols);
    }
    return est;
}

struct SlackReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool holds = false;  // slack >= -tol
    double tol = 1e-10;
};

namespace detail {
inline SlackReport make_report(double lhs, double rhs, double tol = 1e-10) {
    SlackReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.tol = tol;
    r.holds = r.slack >= -tol;
    return r;
}
}  // namespace detail

/// |u^T A^T A v| <= delta_{s+t} ||u|| ||v|| for disjointly supported u, v.
inline SlackReport check_rip_inequality_i(const Matrix& A, const Vector& u, const Vector& v,
                                          double delta) {
    if (!set_intersection(support(u), support(v)).empty())
        throw std::invalid_argument("check_rip_inequality_i: supports overlap");
    const double lhs = std::fabs(dot(matvec(A, u), matvec(A, v)));
    const double rhs = delta * norm2(u) * norm2(v);
    return detail::make_report(lhs, rhs);
}

/// ||[(I - A^T A) v]_S|| <= delta_t ||v|| with |S u supp(v)| <= t.
inline SlackReport check_rip_inequality_ii(const Matrix& A, const Vector& v, const IndexSet& S,
                                           double delta) {
    validate_index_set(S, A.cols);
    const Vector w = sub(v, matvec_t(A, matvec(A, v)));
    const double lhs = norm2(restrict_to(w, S));
    const double rhs = delta * norm2(v);
    return detail::make_report(lhs, rhs);
}

/// ||(A^T A u)_Lambda|| <= delta_t ||u|| with Lambda disjoint from supp(u).
inline SlackReport check_rip_inequality_iii(const Matrix& A, const Vector& u,
                                            const IndexSet& Lambda, double delta) {
    validate_index_set(Lambda, A.cols);
    if (!set_intersection(support(u), Lambda).empty())
        throw std::invalid_argument("check_rip_inequality_iii: Lambda meets supp(u)");
    const Vector w = matvec_t(A, matvec(A, u));
    const double lhs = norm2(restrict_to(w, Lambda));
    const double rhs = delta * norm2(u);
    return detail::make_report(lhs, rhs);
}

/// Minimum Gaussian measurement count
///   m >= C* (delta*)^-2 (k (1 + ln(n/k)) + ln(2/xi)).
/// The log term is read as ln(2/xi); the literal printed form is unusable
/// for xi < 1/2.
inline long gaussian_measurement_count(int k, int n, double delta_star, double xi,
                                       double c_star) {
    if (k < 1 || k > n) throw std::invalid_argument("gaussian_measurement_count: bad k");
    if (!(delta_star > 0.0 && delta_star < 1.0))
        throw std::invalid_argument("gaussian_measurement_count: delta* must be in (0,1)");
    if (!(xi > 0.0 && xi < 1.0))
        throw std::invalid_argument("gaussian_measurement_count: xi must be in (0,1)");
    if (!(c_star > 0.0))
        throw std::invalid_argument("gaussian_measurement_count: C* must be positive");
    const double bound = c_star / (delta_star * delta_star) *
                         (k * (1.0 + std::log(static_cast<double>(n) / k)) + std::log(2.0 / xi));
    return static_cast<long>(std::ceil(bound));
}

}  // namespace sparserec

#endif
