#ifndef SPARSEREC_ALGORITHMS_HPP
#define SPARSEREC_ALGORITHMS_HPP

#include <stdexcept>
#include <tuple>
#include <vector>

#include "sparserec/core.hpp"
#include "sparserec/projection.hpp"
#include "sparserec/thresholding.hpp"

namespace sparserec {

enum class Algorithm { IHT, CoSaMP };

enum class StopReason { max_iter, residual, change };

struct StoppingRule {
    int max_iterations = 1000;
    double residual_tol = 0.0;  // on ||y - A x^p||
    double change_tol = 0.0;    // on ||x^{p+1} - x^p||; 0 disables

    /// Default rule scaled to the measurements: residual_tol = 1e-12 ||y||.
    static StoppingRule for_measurements(const Vector& y, int max_iter = 1000) {
        StoppingRule r;
        r.max_iterations = max_iter;
        r.residual_tol = 1e-12 * norm2(y);
        return r;
    }
};

struct RecoveryTrace {
    std::vector<Vector> iterates;            // x^0, x^1, ...
    std::vector<IndexSet> supports;          // supp(x^p)
    std::vector<double> residual_norms;      // ||y - A x^p||
    std::vector<IndexSet> merged_supports;   // CoSaMP U^{p+1}; empty for IHT
    std::vector<Vector> interim_solutions;   // CoSaMP z^{p+1}
    std::vector<bool> degenerate_steps;      // CoSaMP rank-deficient A_U flags
    StopReason stop_reason = StopReason::max_iter;

    int iterations() const { return static_cast<int>(iterates.size()) - 1; }
};

/// One IHT step: H_k(x^p + A^T (y - A x^p)).
inline Vector iht_step(const Matrix& A, const Vector& y, const Vector& x_p, int k) {
    const Vector u = add(x_p, matvec_t(A, sub(y, matvec(A, x_p))));
    return hard_threshold(u, k);
}

struct CosampStep {
    IndexSet merged;     // U^{p+1}
    Vector interim;      // z^{p+1}
    Vector next;         // x^{p+1}
    bool degenerate = false;
};

/// One CoSaMP step:
///   U = supp(x^p) u L_2k(A^T(y - A x^p)),  z = argmin ||y - Az|| on U,
///   x^{p+1} = H_k(z).
inline CosampStep cosamp_step(const Matrix& A, const Vector& y, const Vector& x_p, int k) {
    const Vector grad = matvec_t(A, sub(y, matvec(A, x_p)));
    CosampStep st;
    st.merged = set_union(support(x_p), top_k_indices(grad, 2 * k));
    const ProjectionResult proj = least_squares_on_support(A, y, st.merged);
    st.interim = proj.solution;
    st.degenerate = proj.degenerate;
    st.next = hard_threshold(st.interim, k);
    return st;
}

inline RecoveryTrace run(Algorithm alg, const Matrix& A, const Vector& y, int k,
                         const Vector& x0, const StoppingRule& rule) {
    if (rule.max_iterations < 1)
        throw std::invalid_argument("run: max_iterations must be >= 1");
    if (static_cast<int>(support(x0).size()) > k)
        throw std::invalid_argument("run: x0 is not k-sparse");
    RecoveryTrace tr;
    tr.iterates.push_back(x0);
    tr.supports.push_back(support(x0));
    tr.residual_norms.push_back(norm2(sub(y, matvec(A, x0))));
    tr.stop_reason = StopReason::max_iter;

    Vector x = x0;
    for (int p = 0; p < rule.max_iterations; ++p) {
        if (tr.residual_norms.back() <= rule.residual_tol) {
            tr.stop_reason = StopReason::residual;
            break;
        }
        Vector x_next;
        if (alg == Algorithm::IHT) {
            x_next = iht_step(A, y, x, k);
        } else {
            CosampStep st = cosamp_step(A, y, x, k);
            x_next = st.next;
            tr.merged_supports.push_back(std::move(st.merged));
            tr.interim_solutions.push_back(std::move(st.interim));
            tr.degenerate_steps.push_back(st.degenerate);
        }
        tr.iterates.push_back(x_next);
        tr.supports.push_back(support(x_next));
        tr.residual_norms.push_back(norm2(sub(y, matvec(A, x_next))));
        const double change = norm2(sub(x_next, x));
        x = std::move(x_next);
        if (rule.change_tol > 0.0 && change <= rule.change_tol) {
            tr.stop_reason = StopReason::change;
            break;
        }
        if (tr.residual_norms.back() <= rule.residual_tol) {
            tr.stop_reason = StopReason::residual;
            break;
        }
    }
    return tr;
}

inline Vector run_zero_init(Algorithm alg, const Matrix& A, const Vector& y, int k,
                            const StoppingRule& rule) {
    const Vector x0(static_cast<std::size_t>(A.cols), 0.0);
    return run(alg, A, y, k, x0, rule).iterates.back();
}

}  // namespace sparserec

#endif
