#include "catch_amalgamated.hpp"

#include "sparserec/harness.hpp"
#include "sparserec/projection.hpp"
#include "sparserec/random.hpp"
#include "sparserec/thresholding.hpp"

using namespace sparserec;

namespace {

Matrix random_matrix(Rng& rng, int m, int n) {
    Matrix A(m, n);
    for (auto& v : A.data) v = rng.next_normal();
    return A;
}

}  // namespace

TEST_CASE("identity projection returns the measurements") {
    const int n = 5;
    Matrix I = identity(n);
    Rng rng(1);
    Vector y(n);
    for (auto& e : y) e = rng.next_normal();
    IndexSet full{0, 1, 2, 3, 4};
    const auto r = least_squares_on_support(I, y, full);
    for (int i = 0; i < n; ++i) CHECK(r.solution[i] == Catch::Approx(y[i]).margin(1e-14));
    CHECK(norm2(r.residual) <= 1e-14);
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("consistent system is solved exactly") {
    Rng rng(2);
    Matrix A = random_matrix(rng, 6, 10);
    IndexSet Lambda{1, 4, 7};
    Vector x(10, 0.0);
    for (int i : Lambda) x[i] = rng.next_normal();
    const Vector y = matvec(A, x);
    const auto r = least_squares_on_support(A, y, Lambda);
    CHECK(norm2(sub(r.solution, x)) <= 1e-10 * (1.0 + norm2(x)));
}

TEST_CASE("matches the normal-equations oracle on a random instance") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        Matrix A = random_matrix(rng, 6, 10);
        IndexSet Lambda{2, 5, 8};
        Vector y(6);
        for (auto& e : y) e = rng.next_normal();
        const auto r = least_squares_on_support(A, y, Lambda);

        // oracle: solve (B^T B) w = B^T y by explicit 3x3 inversion
        Matrix B = detail::submatrix_cols(A, Lambda);
        double G[3][3] = {}, rhs[3] = {};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j)
                for (int row = 0; row < 6; ++row) G[i][j] += B.at(row, i) * B.at(row, j);
            for (int row = 0; row < 6; ++row) rhs[i] += B.at(row, i) * y[row];
        }
        const double det = G[0][0] * (G[1][1] * G[2][2] - G[1][2] * G[2][1]) -
                           G[0][1] * (G[1][0] * G[2][2] - G[1][2] * G[2][0]) +
                           G[0][2] * (G[1][0] * G[2][1] - G[1][1] * G[2][0]);
        double inv[3][3];
        inv[0][0] = (G[1][1] * G[2][2] - G[1][2] * G[2][1]) / det;
        inv[0][1] = (G[0][2] * G[2][1] - G[0][1] * G[2][2]) / det;
        inv[0][2] = (G[0][1] * G[1][2] - G[0][2] * G[1][1]) / det;
        inv[1][0] = (G[1][2] * G[2][0] - G[1][0] * G[2][2]) / det;
        inv[1][1] = (G[0][0] * G[2][2] - G[0][2] * G[2][0]) / det;
        inv[1][2] = (G[0][2] * G[1][0] - G[0][0] * G[1][2]) / det;
        inv[2][0] = (G[1][0] * G[2][1] - G[1][1] * G[2][0]) / det;
        inv[2][1] = (G[0][1] * G[2][0] - G[0][0] * G[2][1]) / det;
        inv[2][2] = (G[0][0] * G[1][1] - G[0][1] * G[1][0]) / det;
        for (int i = 0; i < 3; ++i) {
            double w = 0.0;
            for (int j = 0; j < 3; ++j) w += inv[i][j] * rhs[j];
            CHECK(std::fabs(r.solution[Lambda[i]] - w) <= 1e-10 * (1.0 + std::fabs(w)));
        }
    }
}

TEST_CASE("residual gradient vanishes on the fitted support") {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        Matrix A = random_matrix(rng, 8, 12);
        IndexSet Lambda{0, 3, 9, 11};
        Vector y(8);
        for (auto& e : y) e = rng.next_normal();
        const auto r = least_squares_on_support(A, y, Lambda);
        const double scale = 1e-8 * (1.0 + norm2(matvec_t(A, y)));
        for (int i : Lambda) CHECK(std::fabs(r.gradient[i]) <= scale);
        CHECK(is_subset(Lambda, r.zero_set));
    }
}

TEST_CASE("projection is idempotent on its own fit") {
    Rng rng(5);
    Matrix A = random_matrix(rng, 8, 12);
    IndexSet Lambda{1, 4, 6};
    Vector y(8);
    for (auto& e : y) e = rng.next_normal();
    const auto r1 = least_squares_on_support(A, y, Lambda);
    const auto r2 = least_squares_on_support(A, matvec(A, r1.solution), Lambda);
    CHECK(norm2(sub(r2.solution, r1.solution)) <= 1e-10 * (1.0 + norm2(r1.solution)));
}

TEST_CASE("rank-deficient support is flagged and min-norm solved") {
    Matrix A(3, 4);
    // columns 0 and 2 identical
    for (int i = 0; i < 3; ++i) {
        A.at(i, 0) = i + 1.0;
        A.at(i, 2) = i + 1.0;
        A.at(i, 1) = (i == 0) ? 1.0 : 0.0;
        A.at(i, 3) = (i == 2) ? 1.0 : 0.0;
    }
    Vector y{1.0, 2.0, 3.0};
    const auto r = least_squares_on_support(A, y, IndexSet{0, 2});
    CHECK(r.degenerate);
    // min-norm splits the weight evenly over the duplicate columns
    CHECK(r.solution[0] == Catch::Approx(r.solution[2]).margin(1e-10));
    CHECK(norm2(r.residual) <= 1e-10);
}

TEST_CASE("empty support is rejected") {
    Matrix A = identity(3);
    CHECK_THROWS_AS(least_squares_on_support(A, Vector{1, 2, 3}, IndexSet{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(gram_eigen_extremes(A, IndexSet{}), std::invalid_argument);
}

TEST_CASE("gram extremes: orthonormal columns") {
    Matrix I = identity(4);
    const auto [lo, hi] = gram_eigen_extremes(I, IndexSet{0, 2, 3});
    CHECK(lo == Catch::Approx(1.0).margin(1e-12));
    CHECK(hi == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("gram extremes: duplicate unit columns give (0, 2)") {
    Matrix A(2, 2);
    A.at(0, 0) = 1.0;
    A.at(0, 1) = 1.0;
    const auto [lo, hi] = gram_eigen_extremes(A, IndexSet{0, 1});
    CHECK(lo == Catch::Approx(0.0).margin(1e-12));
    CHECK(hi == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("gram extremes bound Rayleigh quotients") {
    Rng rng(6);
    Matrix A = random_matrix(rng, 8, 12);
    IndexSet S{1, 5, 8, 10};
    const auto [lo, hi] = gram_eigen_extremes(A, S);
    double seen_lo = hi, seen_hi = lo;
    for (int t = 0; t < 10000; ++t) {
        Vector u(12, 0.0);
        for (int i : S) u[i] = rng.next_normal();
        const double q = std::pow(norm2(matvec(A, u)) / norm2(u), 2);
        CHECK(q >= lo - 1e-10);
        CHECK(q <= hi + 1e-10);
        seen_lo = std::min(seen_lo, q);
        seen_hi = std::max(seen_hi, q);
    }
    CHECK(hi - lo >= 0.0);
    // sampling should come reasonably close to the extremes
    CHECK(seen_hi >= lo);
    CHECK(seen_lo <= hi);
}
