#include "catch_amalgamated.hpp"

#include "sparserec/certify.hpp"
#include "sparserec/random.hpp"
#include "sparserec/thresholding.hpp"

using namespace sparserec;

TEST_CASE("top_k_indices ordering and tie rule") {
    CHECK(top_k_indices({3.0, -5.0, 2.0}, 2) == IndexSet{0, 1});
    CHECK(top_k_indices({1.0, -1.0, 1.0}, 2) == IndexSet{0, 1});
    CHECK(top_k_indices({1.0, 2.0}, 0).empty());
    CHECK_THROWS_AS(top_k_indices({1.0}, 2), std::invalid_argument);

    // k ones, then tau epsilons, then halves: the k ones win
    Vector z{1.0, 1.0, 1.0, 0.3, 0.3, 0.5, 0.5};
    CHECK(top_k_indices(z, 3) == IndexSet{0, 1, 2});
}

TEST_CASE("hard_threshold basics") {
    CHECK(hard_threshold({0.5, -2.0, 1.0}, 1) == Vector{0.0, -2.0, 0.0});
    Vector sparse{0.0, 7.0, 0.0, -1.0};
    CHECK(hard_threshold(sparse, 2) == sparse);
    // ties at eps = 1 resolve toward the smaller index
    Vector z{1.0, 1.0, 1.0, 1.0, 0.5};
    CHECK(hard_threshold(z, 3) == Vector{1.0, 1.0, 1.0, 0.0, 0.0});
}

TEST_CASE("restrict_to") {
    Vector v{1.0, 2.0, 3.0};
    CHECK(restrict_to(v, {0, 1, 2}) == v);
    CHECK(restrict_to(v, {}) == Vector{0.0, 0.0, 0.0});
    CHECK(restrict_to(v, {0, 2}) == Vector{1.0, 0.0, 3.0});
    CHECK_THROWS_AS(restrict_to(v, IndexSet{3}), std::invalid_argument);
}

TEST_CASE("index set algebra") {
    CHECK(set_difference({1, 2, 3}, {2}) == IndexSet{1, 3});
    CHECK(set_symmetric_difference({1, 2}, {1, 2}).empty());
    CHECK(set_symmetric_difference({0, 1}, {1, 2}) == IndexSet{0, 2});
    CHECK(set_union({0, 2}, {1, 2}) == IndexSet{0, 1, 2});
    CHECK(set_intersection({0, 2}, {1, 2}) == IndexSet{2});
    CHECK(support({0.0, 1e-12, -2.0}) == IndexSet{1, 2});
    CHECK(support({0.0, 1e-12, -2.0}, 1e-9) == IndexSet{2});
}

TEST_CASE("best_k_term_error matches exhaustive support enumeration") {
    CHECK(best_k_term_error({3.0, 2.0, 1.0}, 2) == 1.0);
    CHECK(best_k_term_error({0.0, 5.0, 0.0}, 1) == 0.0);

    Rng rng(41);
    const int n = 8, k = 3;
    for (int t = 0; t < 50; ++t) {
        Vector z(n);
        for (auto& e : z) e = rng.next_normal();
        double best = std::numeric_limits<double>::infinity();
        IndexSet S{0, 1, 2};
        do {
            best = std::min(best, norm2(sub(z, restrict_to(z, S))));
        } while ([&] {
            for (int i = k - 1; i >= 0; --i)
                if (S[i] < n - k + i) {
                    ++S[i];
                    for (int j = i + 1; j < k; ++j) S[j] = S[j - 1] + 1;
                    return true;
                }
            return false;
        }());
        CHECK(std::fabs(best_k_term_error(z, k) - best) <= 1e-13 * (1.0 + best));
    }
}

TEST_CASE("H_k is idempotent") {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng.next_below(20));
        const int k = static_cast<int>(rng.next_below(n + 1));
        Vector z(n);
        for (auto& e : z) e = rng.next_normal();
        const Vector h = hard_threshold(z, k);
        CHECK(hard_threshold(h, k) == h);
    }
}

TEST_CASE("H_k commutes with permutations when magnitudes are distinct") {
    Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng.next_below(14));
        const int k = 1 + static_cast<int>(rng.next_below(n));
        Vector z(n);
        for (auto& e : z) e = rng.next_normal();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.next_below(i + 1)]);
        Vector pz(n);
        for (int i = 0; i < n; ++i) pz[perm[i]] = z[i];
        const Vector h = hard_threshold(z, k);
        Vector ph(n);
        for (int i = 0; i < n; ++i) ph[perm[i]] = h[i];
        CHECK(hard_threshold(pz, k) == ph);
    }
}

TEST_CASE("lemma 2.1 and 2.2 inequalities on random pairs") {
    Rng rng(7);
    for (int t = 0; t < 2000; ++t) {
        const int n = 4 + static_cast<int>(rng.next_below(61));
        const int k = 1 + static_cast<int>(rng.next_below(n));
        Vector x(n, 0.0);
        for (int i = 0; i < k; ++i) x[rng.next_below(n)] = rng.next_normal();
        Vector z(n);
        for (auto& e : z) e = rng.next_normal();
        CHECK(verify_lemma_2_1(x, z, k).holds);
        const auto r = verify_lemma_2_2(x, z, k);
        CHECK(r.check.holds);
        CHECK(r.ratio <= 1.0 + 1e-12);
    }
}
