#include "catch_amalgamated.hpp"

#include "sparserec/algorithms.hpp"
#include "sparserec/certify.hpp"
#include "sparserec/harness.hpp"
#include "sparserec/random.hpp"
#include "sparserec/rip.hpp"

using namespace sparserec;

TEST_CASE("iht: orthogonal one-step recovery") {
    Matrix Q = gen_orthogonal_subset_matrix(8, 8, 3);
    Vector x = gen_sparse_signal(8, 2, 4);
    const Vector y = matvec(Q, x);
    const Vector x1 = iht_step(Q, y, Vector(8, 0.0), 2);
    CHECK(norm2(sub(x1, x)) <= 1e-12 * (1.0 + norm2(x)));
}

TEST_CASE("iht: noiseless fixed point") {
    Matrix A = gen_orthogonal_subset_matrix(10, 12, 5);
    Vector x = gen_sparse_signal(12, 3, 6);
    const Vector y = matvec(A, x);
    const Vector x1 = iht_step(A, y, x, 3);
    CHECK(x1 == x);
}

TEST_CASE("cosamp: noiseless fixed point") {
    Matrix A = gen_orthogonal_subset_matrix(10, 12, 7);
    Vector x = gen_sparse_signal(12, 2, 8);
    const Vector y = matvec(A, x);
    const auto st = cosamp_step(A, y, x, 2);
    CHECK(norm2(sub(st.next, x)) <= 1e-10 * (1.0 + norm2(x)));
    CHECK(is_subset(support(x), st.merged));
}

TEST_CASE("cosamp: orthogonal one-step recovery") {
    Matrix Q = gen_orthogonal_subset_matrix(9, 9, 9);
    Vector x = gen_sparse_signal(9, 2, 10);
    const Vector y = matvec(Q, x);
    const auto st = cosamp_step(Q, y, Vector(9, 0.0), 2);
    CHECK(is_subset(support(x), st.merged));
    CHECK(norm2(sub(st.next, x)) <= 1e-10 * (1.0 + norm2(x)));
}

TEST_CASE("run: loop contract") {
    Matrix A = gen_orthogonal_subset_matrix(7, 8, 11);
    Vector x = gen_sparse_signal(8, 1, 12);
    const Vector y = matvec(A, x);
    StoppingRule rule;
    rule.max_iterations = 0;
    CHECK_THROWS_AS(run(Algorithm::IHT, A, y, 1, Vector(8, 0.0), rule),
                    std::invalid_argument);
    rule.max_iterations = 1;
    const auto tr = run(Algorithm::IHT, A, y, 1, Vector(8, 0.0), rule);
    CHECK(tr.iterates.size() == 2);
    CHECK_THROWS_AS(run(Algorithm::IHT, A, y, 1, x.size() == 8 ? Vector{1, 1, 1, 0, 0, 0, 0, 0} : Vector{},
                        rule),
                    std::invalid_argument);
}

TEST_CASE("run: orthogonal noiseless stops by residual quickly") {
    Matrix Q = gen_orthogonal_subset_matrix(8, 8, 13);
    Vector x = gen_sparse_signal(8, 2, 14);
    const Vector y = matvec(Q, x);
    const auto tr = run(Algorithm::IHT, Q, y, 2, Vector(8, 0.0),
                        StoppingRule::for_measurements(y, 100));
    CHECK(tr.stop_reason == StopReason::residual);
    CHECK(tr.iterations() <= 2);
}

TEST_CASE("cosamp trace structural invariants") {
    Rng seeds(15);
    for (int t = 0; t < 20; ++t) {
        Matrix A = gen_orthogonal_subset_matrix(14, 16, seeds.next_u64());
        const int k = 2;
        Vector x = gen_sparse_signal(16, k, seeds.next_u64());
        const Vector y = matvec(A, x);
        const auto tr = run(Algorithm::CoSaMP, A, y, k, Vector(16, 0.0),
                            StoppingRule::for_measurements(y, 10));
        for (std::size_t p = 0; p < tr.merged_supports.size(); ++p) {
            const auto& U = tr.merged_supports[p];
            CHECK(static_cast<int>(U.size()) <= 3 * k);
            CHECK(is_subset(tr.supports[p], U));      // supp(x^p) in U^{p+1}
            CHECK(is_subset(tr.supports[p + 1], U));  // supp(x^{p+1}) in U^{p+1}
            // gradient of the interim solution vanishes on U
            const Vector g = matvec_t(A, sub(y, matvec(A, tr.interim_solutions[p])));
            const double tol = 1e-8 * (1.0 + norm2(matvec_t(A, y)));
            for (int i : U) CHECK(std::fabs(g[i]) <= tol);
        }
        for (const auto& it : tr.iterates)
            CHECK(static_cast<int>(support(it).size()) <= k);
    }
}

TEST_CASE("both algorithms recover on certified random instances") {
    Rng seeds(16);
    int done = 0;
    std::uint64_t s = 1000;
    while (done < 20) {
        ++s;
        Matrix A = gen_orthogonal_subset_matrix(15, 16, s);
        if (ric_exact(A, 3).delta >= iht_threshold()) continue;
        if (ric_exact(A, 4).delta >= cosamp_threshold()) continue;
        ++done;
        Vector x = gen_sparse_signal(16, 1, seeds.next_u64());
        const Vector y = matvec(A, x);
        for (auto alg : {Algorithm::IHT, Algorithm::CoSaMP}) {
            const auto tr = run(alg, A, y, 1, Vector(16, 0.0),
                                StoppingRule::for_measurements(y, 50));
            CHECK(norm2(sub(tr.iterates.back(), x)) <= 1e-8);
        }
    }
}
