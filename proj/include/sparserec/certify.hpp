#ifndef SPARSEREC_CERTIFY_HPP
#define SPARSEREC_CERTIFY_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sparserec/algorithms.hpp"
#include "sparserec/core.hpp"
#include "sparserec/projection.hpp"
#include "sparserec/thresholding.hpp"

namespace sparserec {

/// The golden constant eta = (sqrt(5)+1)/2; defined once, used everywhere.
inline double golden_eta() { return (std::sqrt(5.0) + 1.0) / 2.0; }

/// delta_3k threshold for IHT contraction: (sqrt(5)-1)/2.
inline double iht_threshold() { return (std::sqrt(5.0) - 1.0) / 2.0; }

/// delta_4k threshold for CoSaMP contraction: sqrt(2/(sqrt(13+4 sqrt5)+3)).
inline double cosamp_threshold() {
    return std::sqrt(2.0 / (std::sqrt(13.0 + 4.0 * std::sqrt(5.0)) + 3.0));
}

/// delta_3k bound for IHT geometric rate 0.5: (sqrt(5)-1)/4.
inline double iht_rate_half_threshold() { return (std::sqrt(5.0) - 1.0) / 4.0; }

/// delta_4k bound for CoSaMP geometric rate 0.5.
inline double cosamp_rate_half_threshold() {
    return std::sqrt(2.0 / (std::sqrt(81.0 + 16.0 * (std::sqrt(5.0) + 1.0)) + 9.0));
}

struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;   // rhs - lhs
    bool holds = false;   // slack >= -tol
    bool vacuous = false; // hypothesis not satisfied; no claim made
    double tol = 0.0;
    std::string context;
};

namespace detail {

inline BoundCheck make_check(double lhs, double rhs, std::string context) {
    BoundCheck c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = rhs - lhs;
    c.tol = 1e-10 * (1.0 + std::fabs(rhs));
    c.holds = c.slack >= -c.tol;
    c.context = std::move(context);
    return c;
}

}  // namespace detail

/// nu' = A x_{S-bar} + nu with S = L_k(x).
inline Vector effective_noise(const Matrix& A, const Vector& x, const Vector& nu, int k) {
    const IndexSet S = top_k_indices(x, k);
    const Vector tail = sub(x, restrict_to(x, S));
    return add(matvec(A, tail), nu);
}

struct ContractionFactor {
    double rho = 0.0;
    bool contract_ok = false;  // rho < 1
};

/// rho = eta * delta_3k; contracts iff delta_3k < (sqrt5-1)/2.
inline ContractionFactor iht_contraction_factor(double delta_3k) {
    if (!(delta_3k >= 0.0 && delta_3k < 1.0))
        throw std::invalid_argument("iht_contraction_factor: delta must be in [0,1)");
    ContractionFactor f;
    f.rho = golden_eta() * delta_3k;
    f.contract_ok = f.rho < 1.0;
    return f;
}

struct CosampConstants {
    double rho = 0.0;
    double C = 0.0;
    bool contract_ok = false;
};

/// rho = delta sqrt((2+(sqrt5+1)delta^2)/(1-delta^2)),
/// C   = sqrt((2+(sqrt5+1)delta^2)/(1-delta^2)) + (sqrt5+1)/(2(1-delta)).
inline CosampConstants cosamp_constants(double delta_4k) {
    if (!(delta_4k >= 0.0 && delta_4k < 1.0))
        throw std::invalid_argument("cosamp_constants: delta must be in [0,1)");
    const double d2 = delta_4k * delta_4k;
    const double root = std::sqrt((2.0 + 2.0 * golden_eta() * d2) / (1.0 - d2));
    CosampConstants c;
    c.rho = delta_4k * root;
    c.C = root + golden_eta() / (1.0 - delta_4k);
    c.contract_ok = c.rho < 1.0;
    return c;
}

/// rho^p e0 + (sqrt5+1)/(2(1-rho)) * ||A^T nu'||.
inline double iht_error_envelope(int p, double delta_3k, double e0, double noise_term) {
    if (p < 0 || e0 < 0.0 || noise_term < 0.0)
        throw std::invalid_argument("iht_error_envelope: bad arguments");
    const auto f = iht_contraction_factor(delta_3k);
    if (!f.contract_ok) throw std::invalid_argument("iht_error_envelope: rho >= 1");
    return std::pow(f.rho, p) * e0 + golden_eta() / (1.0 - f.rho) * noise_term;
}

/// rho^p e0 + C/(1-rho) * ||A^T nu'||.
inline double cosamp_error_envelope(int p, double delta_4k, double e0, double noise_term) {
    if (p < 0 || e0 < 0.0 || noise_term < 0.0)
        throw std::invalid_argument("cosamp_error_envelope: bad arguments");
    const auto c = cosamp_constants(delta_4k);
    if (!c.contract_ok) throw std::invalid_argument("cosamp_error_envelope: rho >= 1");
    return std::pow(c.rho, p) * e0 + c.C / (1.0 - c.rho) * noise_term;
}

/// ||(x - H_k(z))_{S\S*}|| <= ||(x-z)_{S\S*}|| + ||(x-z)_{S*\S}||
/// with S = supp(x), S* = supp(H_k(z)).
inline BoundCheck verify_lemma_2_1(const Vector& x, const Vector& z, int k) {
    if (static_cast<int>(support(x).size()) > k)
        throw std::invalid_argument("verify_lemma_2_1: x is not k-sparse");
    const Vector hz = hard_threshold(z, k);
    const IndexSet S = support(x);
    const IndexSet Sstar = support(hz);
    const IndexSet SmS = set_difference(S, Sstar);
    const IndexSet SsmS = set_difference(Sstar, S);
    const double lhs = norm2(restrict_to(sub(x, hz), SmS));
    const double rhs =
        norm2(restrict_to(sub(x, z), SmS)) + norm2(restrict_to(sub(x, z), SsmS));
    return detail::make_check(lhs, rhs, "lemma 2.1");
}

struct RatioCheck {
    BoundCheck check;
    double ratio = 0.0;  // lhs/rhs, 0 when rhs == 0
};

/// ||x - H_k(z)|| <= eta ||(x-z)_{S u S*}||.
inline RatioCheck verify_lemma_2_2(const Vector& x, const Vector& z, int k) {
    if (static_cast<int>(support(x).size()) > k)
        throw std::invalid_argument("verify_lemma_2_2: x is not k-sparse");
    const Vector hz = hard_threshold(z, k);
    const IndexSet SU = set_union(support(x), support(hz));
    const double lhs = norm2(sub(x, hz));
    const double rhs = golden_eta() * norm2(restrict_to(sub(x, z), SU));
    RatioCheck r;
    r.check = detail::make_check(lhs, rhs, "lemma 2.2");
    r.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    return r;
}

/// g(r) = (2(1+r)+r^2)/(1+r^2); maximized at r = (sqrt5-1)/2 with value eta^2.
inline double g_of_r(double r) {
    return (2.0 * (1.0 + r) + r * r) / (1.0 + r * r);
}

/// g(alpha, eps) = (1+(alpha+eps)^2)/(1+alpha^2), the squared tightness ratio.
inline double g_of_alpha_eps(double alpha, double eps) {
    const double a = alpha + eps;
    return (1.0 + a * a) / (1.0 + alpha * alpha);
}

/// Stationary point of g(alpha, eps) in alpha: (sqrt(4+eps^2)-eps)/2.
inline double alpha_star(double eps) {
    return (std::sqrt(4.0 + eps * eps) - eps) / 2.0;
}

struct TightnessInstance {
    Vector x;
    Vector z;
    double predicted_ratio = 0.0;  // g(alpha, eps), a ratio of squared norms
};

/// The worst-case pair for the hard-thresholding bound:
///   z = (1 x k, eps x tau, 1/2 x rest),  x = (0 x tau, 1 x (k-tau), (alpha+eps) x tau, 0...).
inline TightnessInstance tightness_instance(int n, int k, int tau, double alpha, double eps) {
    if (!(tau > 0 && tau < k)) throw std::invalid_argument("tightness_instance: need 0 < tau < k");
    if (n <= k + tau) throw std::invalid_argument("tightness_instance: need n > k + tau");
    if (!(alpha >= 0.0)) throw std::invalid_argument("tightness_instance: alpha must be >= 0");
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("tightness_instance: eps must be in (0,1]");
    TightnessInstance t;
    t.z.assign(static_cast<std::size_t>(n), 0.5);
    for (int i = 0; i < k; ++i) t.z[i] = 1.0;
    for (int i = k; i < k + tau; ++i) t.z[i] = eps;
    t.x.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = tau; i < k; ++i) t.x[i] = 1.0;
    for (int i = k; i < k + tau; ++i) t.x[i] = alpha + eps;
    t.predicted_ratio = g_of_alpha_eps(alpha, eps);
    return t;
}

/// Measured squared ratio ||x - H_k(z)||^2 / ||(x-z)_{S u S*}||^2.
inline double measured_tightness_ratio(const TightnessInstance& t, int k) {
    const Vector hz = hard_threshold(t.z, k);
    const IndexSet SU = set_union(support(t.x), support(hz));
    const double num = norm2(sub(t.x, hz));
    const double den = norm2(restrict_to(sub(t.x, t.z), SU));
    return (num * num) / (den * den);
}

/// If 0 <= t - a3 <= a1 sqrt(t^2 + a2^2) with a1 < 1, then
/// t <= a1/sqrt(1-a1^2) a2 + a3/(1-a1). Marked vacuous when the hypothesis fails.
inline BoundCheck verify_lemma_3_1(double a1, double a2, double a3, double t) {
    if (!(a1 >= 0.0 && a1 < 1.0))
        throw std::invalid_argument("verify_lemma_3_1: alpha1 must be in [0,1)");
    if (a2 < 0.0 || a3 < 0.0)
        throw std::invalid_argument("verify_lemma_3_1: alpha2, alpha3 must be >= 0");
    const double bound = a1 / std::sqrt(1.0 - a1 * a1) * a2 + a3 / (1.0 - a1);
    BoundCheck c = detail::make_check(t, bound, "lemma 3.1");
    const double hyp = a1 * std::sqrt(t * t + a2 * a2);
    const double htol = 1e-12 * (1.0 + std::fabs(hyp));
    if (!(t - a3 >= -htol && t - a3 <= hyp + htol)) {
        c.vacuous = true;
        c.holds = false;
    }
    return c;
}

/// Projection error bounds (B01)/(B02) for the restricted least-squares
/// solution x* on Lambda, with Gamma between Lambda and the gradient zero set
/// and delta = exact delta_{|Gamma|+k}.
inline std::pair<BoundCheck, BoundCheck> verify_lemma_3_2(const Matrix& A, const Vector& x,
                                                          const Vector& nu, int k,
                                                          const IndexSet& Lambda,
                                                          const IndexSet& Gamma, double delta) {
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::invalid_argument("verify_lemma_3_2: delta must be in [0,1)");
    const Vector y = add(matvec(A, x), nu);
    const ProjectionResult proj = least_squares_on_support(A, y, Lambda);
    if (!is_subset(Lambda, Gamma))
        throw std::invalid_argument("verify_lemma_3_2: Lambda must be inside Gamma");
    if (!is_subset(Gamma, proj.zero_set))
        throw std::invalid_argument("verify_lemma_3_2: Gamma must be inside the gradient zero set");
    const Vector xS = restrict_to(x, top_k_indices(x, k));
    const Vector diff = sub(xS, proj.solution);
    const IndexSet Gbar = complement(Gamma, A.cols);
    const double on_gamma = norm2(restrict_to(diff, Gamma));
    const double off_gamma = norm2(restrict_to(diff, Gbar));
    const double noise_term = norm2(matvec_t(A, effective_noise(A, x, nu, k)));
    const double root = std::sqrt(1.0 - delta * delta);
    const BoundCheck b01 = detail::make_check(
        on_gamma, delta * off_gamma / root + noise_term / (1.0 - delta), "lemma 3.2 (B01)");
    const BoundCheck b02 = detail::make_check(
        norm2(diff), off_gamma / root + noise_term / (1.0 - delta), "lemma 3.2 (B02)");
    return {b01, b02};
}

struct Lemma33Witness {
    double omega = 0.0;       // ||[A^T(y-Ax^p)]_{(S u S^p)\T}||
    double omega_star = 0.0;  // ||[(x_S-x^p)-A^T(y-Ax^p)]_{(S u S^p) delta T}||
    double omega_hat = 0.0;   // ||[A^T(y-Ax^p)]_{T\(S u S^p)}||
    double w_norm = 0.0;      // ||(x_S-x^p)_{(S u S^p)\T} - [A^T(y-Ax^p)]_{(S u S^p)\T}||
    IndexSet capture_set;     // T
    bool full_capture = false;  // S u S^p inside T; witness identities not applicable
};

/// ||(x^p - x_S)_{T-bar}|| <= sqrt(2)(delta_{2k+beta} ||x^p - x_S|| + ||A^T nu'||)
/// with T = L_beta(A^T(y - A x^p)), beta >= 2k.
inline std::pair<BoundCheck, Lemma33Witness> verify_lemma_3_3(const Matrix& A, const Vector& x,
                                                              const Vector& nu, int k,
                                                              const Vector& x_p, int beta,
                                                              double delta) {
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::invalid_argument("verify_lemma_3_3: delta must be in [0,1)");
    if (beta < 2 * k) throw std::invalid_argument("verify_lemma_3_3: beta must be >= 2k");
    const Vector y = add(matvec(A, x), nu);
    const Vector xS = restrict_to(x, top_k_indices(x, k));
    const Vector grad = matvec_t(A, sub(y, matvec(A, x_p)));
    const IndexSet T = top_k_indices(grad, beta);
    const IndexSet SU = set_union(support(xS), support(x_p));
    const Vector err = sub(x_p, xS);
    const double lhs = norm2(restrict_to(err, complement(T, A.cols)));
    const double noise_term = norm2(matvec_t(A, effective_noise(A, x, nu, k)));
    const double rhs = std::sqrt(2.0) * (delta * norm2(err) + noise_term);
    BoundCheck check = detail::make_check(lhs, rhs, "lemma 3.3 (EELL)");

    Lemma33Witness w;
    w.capture_set = T;
    w.full_capture = is_subset(SU, T);
    const IndexSet in_not_T = set_difference(SU, T);
    const IndexSet T_not_in = set_difference(T, SU);
    const IndexSet sym = set_symmetric_difference(SU, T);
    w.omega = norm2(restrict_to(grad, in_not_T));
    w.omega_hat = norm2(restrict_to(grad, T_not_in));
    w.omega_star = norm2(restrict_to(sub(sub(xS, x_p), grad), sym));
    w.w_norm = norm2(sub(restrict_to(sub(xS, x_p), in_not_T), restrict_to(grad, in_not_T)));
    return {check, w};
}

/// Per-iteration certification of a recovery trace against the one-step
/// contraction and the cumulative error envelope. Two checks per iteration;
/// all checks are flagged vacuous when delta is above the threshold.
inline std::vector<BoundCheck> check_trace_against_theorem(const RecoveryTrace& trace,
                                                           const Matrix& A, const Vector& x,
                                                           const Vector& nu, int k,
                                                           Algorithm which, double delta) {
    std::vector<BoundCheck> checks;
    const Vector xS = restrict_to(x, top_k_indices(x, k));
    const double noise_term = norm2(matvec_t(A, effective_noise(A, x, nu, k)));
    const double e0 = norm2(sub(xS, trace.iterates.front()));

    double rho = 0.0, step_noise_coeff = 0.0;
    bool ok = false;
    if (which == Algorithm::IHT) {
        const auto f = iht_contraction_factor(delta);
        rho = f.rho;
        step_noise_coeff = golden_eta();
        ok = f.contract_ok;
    } else {
        const auto c = cosamp_constants(delta);
        rho = c.rho;
        step_noise_coeff = c.C;
        ok = c.contract_ok;
    }

    // step tolerance is looser than the generic 1e-10: iterates pass through
    // a least-squares solve whose rounding scales with the conditioning
    const double step_tol = 1e-8;
    for (int p = 0; p + 1 < static_cast<int>(trace.iterates.size()); ++p) {
        const double ep = norm2(sub(xS, trace.iterates[p]));
        const double ep1 = norm2(sub(xS, trace.iterates[p + 1]));
        BoundCheck step;
        step.lhs = ep1;
        step.rhs = rho * ep + step_noise_coeff * noise_term;
        step.slack = step.rhs - step.lhs;
        step.tol = step_tol * (1.0 + std::fabs(step.rhs));
        step.holds = step.slack >= -step.tol;
        step.context = (which == Algorithm::IHT ? "iht step p=" : "cosamp step p=") +
                       std::to_string(p);
        if (!ok) { step.vacuous = true; step.holds = false; }
        checks.push_back(step);

        BoundCheck env;
        env.lhs = ep1;
        env.rhs = ok ? (which == Algorithm::IHT
                            ? iht_error_envelope(p + 1, delta, e0, noise_term)
                            : cosamp_error_envelope(p + 1, delta, e0, noise_term))
                     : 0.0;
        env.slack = env.rhs - env.lhs;
        env.tol = step_tol * (1.0 + std::fabs(env.rhs));
        env.holds = env.slack >= -env.tol;
        env.context = (which == Algorithm::IHT ? "iht envelope p=" : "cosamp envelope p=") +
                      std::to_string(p + 1);
        if (!ok) { env.vacuous = true; env.holds = false; }
        checks.push_back(env);
    }
    if (checks.empty()) {
        // zero-iteration trace: the envelope at p = 0 is e0 <= e0
        BoundCheck c = detail::make_check(e0, e0, "envelope p=0");
        if (!ok) { c.vacuous = true; c.holds = false; }
        checks.push_back(c);
    }
    return checks;
}

}  // namespace sparserec

#endif
