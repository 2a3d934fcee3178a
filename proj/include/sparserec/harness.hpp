#ifndef SPARSEREC_HARNESS_HPP
#define SPARSEREC_HARNESS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sparserec/algorithms.hpp"
#include "sparserec/core.hpp"
#include "sparserec/random.hpp"
#include "sparserec/thresholding.hpp"

namespace sparserec {

enum class Ensemble { gaussian, orthogonal_subset };

/// Gaussian matrix with i.i.d. N(0, 1/m) entries, row-major generation order.
inline Matrix gen_gaussian_matrix(int m, int n, std::uint64_t seed) {
    if (m < 1 || n < 1) throw std::invalid_argument("gen_gaussian_matrix: bad dimensions");
    Rng rng(seed);
    Matrix A(m, n);
    const double sigma = 1.0 / std::sqrt(static_cast<double>(m));
    for (auto& v : A.data) v = sigma * rng.next_normal();
    return A;
}

namespace detail {

/// Orthonormalize the rows of M in place by modified Gram-Schmidt with one
/// re-orthogonalization pass.
inline void orthonormalize_rows(Matrix& M) {
    const int n = M.rows;
    for (int i = 0; i < n; ++i) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < i; ++j) {
                double d = 0.0;
                for (int c = 0; c < M.cols; ++c) d += M.at(i, c) * M.at(j, c);
                for (int c = 0; c < M.cols; ++c) M.at(i, c) -= d * M.at(j, c);
            }
        }
        double nrm = 0.0;
        for (int c = 0; c < M.cols; ++c) nrm += M.at(i, c) * M.at(i, c);
        nrm = std::sqrt(nrm);
        for (int c = 0; c < M.cols; ++c) M.at(i, c) /= nrm;
    }
}

}  // namespace detail

/// m rows of a seeded random n x n orthogonal matrix. The dropped n-m rows
/// are the ones whose mass is most evenly spread (smallest top-half energy),
/// which keeps the restricted isometry constants of the kept rows small.
inline Matrix gen_orthogonal_subset_matrix(int m, int n, std::uint64_t seed) {
    if (m < 1 || n < m) throw std::invalid_argument("gen_orthogonal_subset_matrix: need 1 <= m <= n");
    Rng rng(seed);
    Matrix Q(n, n);
    for (auto& v : Q.data) v = rng.next_normal();
    detail::orthonormalize_rows(Q);
    if (m == n) return Q;
    // evenness score per row: energy of the ceil(n/2) largest squared entries
    std::vector<std::pair<double, int>> score(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < n; ++i) {
        std::vector<double> sq(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) sq[c] = Q.at(i, c) * Q.at(i, c);
        std::sort(sq.begin(), sq.end(), std::greater<>());
        score[i] = {std::accumulate(sq.begin(), sq.begin() + half, 0.0), i};
    }
    std::sort(score.begin(), score.end());  // ascending: most even rows first
    std::vector<int> keep;
    for (int i = n - m; i < n; ++i) keep.push_back(score[i].second);
    std::sort(keep.begin(), keep.end());
    Matrix A(m, n);
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < n; ++c) A.at(i, c) = Q.at(keep[i], c);
    return A;
}

/// Exactly k nonzeros on a uniform random support, standard normal values.
inline Vector gen_sparse_signal(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("gen_sparse_signal: bad dimensions");
    Rng rng(seed);
    // partial Fisher-Yates for the support
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
    }
    Vector x(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < k; ++i) x[idx[i]] = rng.next_normal();
    return x;
}

inline Vector gen_noise(int m, double sigma, std::uint64_t seed) {
    if (m < 1 || sigma < 0.0) throw std::invalid_argument("gen_noise: bad arguments");
    Rng rng(seed);
    Vector nu(static_cast<std::size_t>(m), 0.0);
    if (sigma > 0.0)
        for (auto& v : nu) v = sigma * rng.next_normal();
    return nu;
}

struct ExperimentConfig {
    int n = 0, m = 0, k = 0;
    Ensemble ensemble = Ensemble::gaussian;
    double noise_sigma = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::IHT;
    StoppingRule stopping;
    double success_tol = 1e-6;
};

struct PhaseGrid {
    std::vector<int> m_values;
    std::vector<int> k_values;
    std::vector<double> success_rate;     // row-major over (m, k)
    std::vector<double> mean_iterations;

    double& rate_at(std::size_t mi, std::size_t ki) {
        return success_rate[mi * k_values.size() + ki];
    }
    double& iters_at(std::size_t mi, std::size_t ki) {
        return mean_iterations[mi * k_values.size() + ki];
    }
};

/// Thread cap from SPARSEREC_THREADS (0 or unset = hardware concurrency).
inline unsigned thread_cap() {
    unsigned cap = 0;
    if (const char* env = std::getenv("SPARSEREC_THREADS")) cap = std::strtoul(env, nullptr, 10);
    if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
    return cap;
}

namespace detail {

struct CellResult {
    double rate;
    double mean_iters;
};

inline CellResult run_cell(const ExperimentConfig& base, int m, int k, std::uint64_t cell_id) {
    int successes = 0;
    double iter_sum = 0.0;
    for (int t = 0; t < base.trials; ++t) {
        const std::uint64_t s = mix_seed(base.seed, cell_id, static_cast<std::uint64_t>(t));
        const Matrix A = base.ensemble == Ensemble::gaussian
                             ? gen_gaussian_matrix(m, base.n, mix_seed(s, 1))
                             : gen_orthogonal_subset_matrix(m, base.n, mix_seed(s, 1));
        const Vector x = gen_sparse_signal(base.n, k, mix_seed(s, 2));
        const Vector nu = gen_noise(m, base.noise_sigma, mix_seed(s, 3));
        const Vector y = add(matvec(A, x), nu);
        StoppingRule rule = base.stopping;
        if (rule.residual_tol == 0.0) rule.residual_tol = 1e-12 * norm2(y);
        const Vector x0(static_cast<std::size_t>(base.n), 0.0);
        const RecoveryTrace tr = run(base.algorithm, A, y, k, x0, rule);
        const Vector xS = restrict_to(x, top_k_indices(x, k));
        const double err = norm2(sub(tr.iterates.back(), xS));
        if (err / std::max(norm2(xS), 1.0) <= base.success_tol) ++successes;
        iter_sum += tr.iterations();
    }
    return {static_cast<double>(successes) / base.trials, iter_sum / base.trials};
}

}  // namespace detail

/// Success-rate surface over an (m, k) grid. Each trial derives its seed from
/// (base seed, cell, trial index), so the result is schedule-independent.
inline PhaseGrid phase_transition(const ExperimentConfig& base, const std::vector<int>& m_values,
                                  const std::vector<int>& k_values) {
    if (base.trials < 1) throw std::invalid_argument("phase_transition: trials must be >= 1");
    PhaseGrid grid;
    grid.m_values = m_values;
    grid.k_values = k_values;
    const std::size_t cells = m_values.size() * k_values.size();
    grid.success_rate.assign(cells, 0.0);
    grid.mean_iterations.assign(cells, 0.0);

    const unsigned cap = thread_cap();
    std::vector<std::future<detail::CellResult>> futs(cells);
    std::size_t launched = 0, collected = 0;
    while (collected < cells) {
        while (launched < cells && launched - collected < cap) {
            const std::size_t mi = launched / k_values.size();
            const std::size_t ki = launched % k_values.size();
            futs[launched] = std::async(std::launch::async, detail::run_cell, base,
                                        m_values[mi], k_values[ki],
                                        static_cast<std::uint64_t>(launched));
            ++launched;
        }
        const auto r = futs[collected].get();
        grid.success_rate[collected] = r.rate;
        grid.mean_iterations[collected] = r.mean_iters;
        ++collected;
    }
    return grid;
}

}  // namespace sparserec

#endif
