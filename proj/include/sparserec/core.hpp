#ifndef SPARSEREC_CORE_HPP
#define SPARSEREC_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparserec {

/// Dense real vector. All entries are expected to be finite.
using Vector = std::vector<double>;

/// Sorted set of 0-based indices, no duplicates.
using IndexSet = std::vector<int>;

/// Dense m x n real matrix, row-major storage.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int m, int n) : rows(m), cols(n), data(static_cast<std::size_t>(m) * n, 0.0) {
        if (m < 1 || n < 1) throw std::invalid_argument("Matrix: dimensions must be positive");
    }

    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

inline bool all_finite(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

inline bool all_finite(const Matrix& A) { return all_finite(A.data); }

inline void check_finite(const Vector& v, const char* what) {
    if (!all_finite(v)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

inline double norm2(const Vector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vector scale(const Vector& a, double c) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

/// y = A v
inline Vector matvec(const Matrix& A, const Vector& v) {
    if (static_cast<int>(v.size()) != A.cols)
        throw std::invalid_argument("matvec: dimension mismatch");
    Vector y(static_cast<std::size_t>(A.rows), 0.0);
    for (int i = 0; i < A.rows; ++i) {
        double s = 0.0;
        const double* row = A.data.data() + static_cast<std::size_t>(i) * A.cols;
        for (int j = 0; j < A.cols; ++j) s += row[j] * v[j];
        y[i] = s;
    }
    return y;
}

/// y = A^T w
inline Vector matvec_t(const Matrix& A, const Vector& w) {
    if (static_cast<int>(w.size()) != A.rows)
        throw std::invalid_argument("matvec_t: dimension mismatch");
    Vector y(static_cast<std::size_t>(A.cols), 0.0);
    for (int i = 0; i < A.rows; ++i) {
        const double* row = A.data.data() + static_cast<std::size_t>(i) * A.cols;
        const double wi = w[i];
        for (int j = 0; j < A.cols; ++j) y[j] += row[j] * wi;
    }
    return y;
}

inline Matrix identity(int n) {
    Matrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1.0;
    return I;
}

inline void validate_index_set(const IndexSet& S, int dim) {
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 0 || S[i] >= dim) throw std::invalid_argument("index set: index out of range");
        if (i > 0 && S[i] <= S[i - 1]) throw std::invalid_argument("index set: not strictly increasing");
    }
}

/// Measurement setup y = A x + nu with sparsity estimate k.
/// The effective noise is nu' = A x_{S-bar} + nu where S holds the k
/// largest-magnitude entries of x.
struct MeasurementModel {
    Matrix matrix;
    Vector signal;   // dim n
    Vector noise;    // dim m
    int sparsity = 0;
};

}  // namespace sparserec

#endif
