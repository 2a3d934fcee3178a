#ifndef SPARSEREC_PROJECTION_HPP
#define SPARSEREC_PROJECTION_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sparserec/core.hpp"
#include "sparserec/thresholding.hpp"

namespace sparserec {

namespace detail {

/// Columns of A indexed by S, packed as an m x |S| matrix.
inline Matrix submatrix_cols(const Matrix& A, const IndexSet& S) {
    validate_index_set(S, A.cols);
    if (S.empty()) throw std::invalid_argument("submatrix_cols: empty index set");
    Matrix B(A.rows, static_cast<int>(S.size()));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j) B.at(i, j) = A.at(i, S[j]);
    return B;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Optionally accumulates eigenvectors (columns of V).
inline std::vector<double> jacobi_eigenvalues(Matrix M, Matrix* V = nullptr) {
    const int n = M.rows;
    if (n != M.cols) throw std::invalid_argument("jacobi: matrix not square");
    if (V) *V = identity(n);
    double off_scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) off_scale = std::max(off_scale, std::fabs(M.at(i, j)));
    const double tol = 1e-14 * std::max(1.0, off_scale);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(M.at(p, q)));
        if (off <= tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = M.at(p, q);
                if (std::fabs(apq) <= tol) continue;
                const double theta = (M.at(q, q) - M.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double mip = M.at(i, p), miq = M.at(i, q);
                    M.at(i, p) = c * mip - s * miq;
                    M.at(i, q) = s * mip + c * miq;
                }
                for (int i = 0; i < n; ++i) {
                    const double mpi = M.at(p, i), mqi = M.at(q, i);
                    M.at(p, i) = c * mpi - s * mqi;
                    M.at(q, i) = s * mpi + c * mqi;
                }
                if (V) {
                    for (int i = 0; i < n; ++i) {
                        const double vip = V->at(i, p), viq = V->at(i, q);
                        V->at(i, p) = c * vip - s * viq;
                        V->at(i, q) = s * vip + c * viq;
                    }
                }
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[i] = M.at(i, i);
    return ev;
}

/// In-place Householder QR of tall B (m >= n not required); returns the
/// diagonal of R. Also applies the same reflections to rhs.
inline std::vector<double> householder_qr(Matrix& B, Vector& rhs) {
    const int m = B.rows, n = B.cols;
    const int steps = std::min(m, n);
    std::vector<double> rdiag(static_cast<std::size_t>(steps), 0.0);
    for (int j = 0; j < steps; ++j) {
        double nrm = 0.0;
        for (int i = j; i < m; ++i) nrm += B.at(i, j) * B.at(i, j);
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) { rdiag[j] = 0.0; continue; }
        if (B.at(j, j) < 0) nrm = -nrm;
        for (int i = j; i < m; ++i) B.at(i, j) /= nrm;
        B.at(j, j) += 1.0;
        for (int col = j + 1; col < n; ++col) {
            double s = 0.0;
            for (int i = j; i < m; ++i) s += B.at(i, j) * B.at(i, col);
            s /= B.at(j, j);
            for (int i = j; i < m; ++i) B.at(i, col) -= s * B.at(i, j);
        }
        double s = 0.0;
        for (int i = j; i < m; ++i) s += B.at(i, j) * rhs[i];
        s /= B.at(j, j);
        for (int i = j; i < m; ++i) rhs[i] -= s * B.at(i, j);
        rdiag[j] = -nrm;
    }
    return rdiag;
}

}  // namespace detail

struct ProjectionResult {
    Vector solution;   // supp(solution) subset of Lambda
    Vector residual;   // y - A * solution
    Vector gradient;   // A^T * residual
    IndexSet zero_set; // indices with |gradient_i| <= zero_tol
    double zero_tol = 0.0;
    bool degenerate = false;  // A_Lambda rank deficient; minimum-norm solution used
};

/// Minimize ||y - A z||_2 over supp(z) subset of Lambda.
/// Full-rank A_Lambda: Householder QR. Rank-deficient: minimum-norm solution
/// via eigendecomposition of the Gram matrix, with the degeneracy flagged.
inline ProjectionResult least_squares_on_support(const Matrix& A, const Vector& y,
                                                 const IndexSet& Lambda) {
    if (static_cast<int>(y.size()) != A.rows)
        throw std::invalid_argument("least_squares_on_support: dimension mismatch");
    if (Lambda.empty())
        throw std::invalid_argument("least_squares_on_support: empty support");
    validate_index_set(Lambda, A.cols);

    const int p = static_cast<int>(Lambda.size());
    Matrix B = detail::submatrix_cols(A, Lambda);

    double col_scale = 0.0;
    for (double v : B.data) col_scale = std::max(col_scale, std::fabs(v));
    const double rank_tol = 1e-12 * std::max(1.0, col_scale) * std::max(A.rows, p);

    ProjectionResult res;
    Vector w(static_cast<std::size_t>(p), 0.0);

    Matrix Bqr = B;
    Vector qty = y;
    const auto rdiag = detail::householder_qr(Bqr, qty);
    bool full_rank = p <= A.rows;
    for (double d : rdiag)
        if (std::fabs(d) <= rank_tol) full_rank = false;

    if (full_rank) {
        for (int j = p - 1; j >= 0; --j) {
            double s = qty[j];
            for (int col = j + 1; col < p; ++col) s -= Bqr.at(j, col) * w[col];
            w[j] = s / rdiag[j];
        }
    } else {
        // Minimum-norm least squares: w = V pinv(D) V^T B^T y with
        // B^T B = V D V^T from the symmetric Jacobi eigensolver.
        res.degenerate = true;
        Matrix G(p, p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                double s = 0.0;
                for (int r = 0; r < A.rows; ++r) s += B.at(r, i) * B.at(r, j);
                G.at(i, j) = s;
            }
        Matrix V;
        const auto ev = detail::jacobi_eigenvalues(G, &V);
        double emax = 0.0;
        for (double e : ev) emax = std::max(emax, std::fabs(e));
        const double cut = 1e-12 * std::max(1.0, emax) * p;
        Vector bty(static_cast<std::size_t>(p), 0.0);
        for (int i = 0; i < p; ++i) {
            double s = 0.0;
            for (int r = 0; r < A.rows; ++r) s += B.at(r, i) * y[r];
            bty[i] = s;
        }
        for (int e = 0; e < p; ++e) {
            if (std::fabs(ev[e]) <= cut) continue;
            double c = 0.0;
            for (int i = 0; i < p; ++i) c += V.at(i, e) * bty[i];
            c /= ev[e];
            for (int i = 0; i < p; ++i) w[i] += c * V.at(i, e);
        }
    }

    res.solution.assign(static_cast<std::size_t>(A.cols), 0.0);
    for (int j = 0; j < p; ++j) res.solution[Lambda[j]] = w[j];
    res.residual = sub(y, matvec(A, res.solution));
    res.gradient = matvec_t(A, res.residual);
    res.zero_tol = 1e-8 * (1.0 + norm2(matvec_t(A, y)));
    for (int i = 0; i < A.cols; ++i)
        if (std::fabs(res.gradient[i]) <= res.zero_tol) res.zero_set.push_back(i);
    return res;
}

/// Extreme eigenvalues of A_S^T A_S.
inline std::pair<double, double> gram_eigen_extremes(const Matrix& A, const IndexSet& S) {
    if (S.empty()) throw std::invalid_argument("gram_eigen_extremes: empty index set");
    const int p = static_cast<int>(S.size());
    Matrix B = detail::submatrix_cols(A, S);
    Matrix G(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            double s = 0.0;
            for (int r = 0; r < A.rows; ++r) s += B.at(r, i) * B.at(r, j);
            G.at(i, j) = s;
        }
    auto ev = detail::jacobi_eigenvalues(G);
    const auto [mn, mx] = std::minmax_element(ev.begin(), ev.end());
    return {std::max(0.0, *mn), *mx};
}

}  // namespace sparserec

#endif
