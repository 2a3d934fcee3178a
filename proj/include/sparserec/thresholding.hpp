#ifndef SPARSEREC_THRESHOLDING_HPP
#define SPARSEREC_THRESHOLDING_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sparserec/core.hpp"

namespace sparserec {

/// Indices of the k largest-magnitude entries of z, sorted ascending.
/// Ties break toward the smaller index, so the operator is a deterministic
/// function of its input.
inline IndexSet top_k_indices(const Vector& z, int k) {
    const int n = static_cast<int>(z.size());
    if (k < 0 || k > n) throw std::invalid_argument("top_k_indices: k out of range");
    IndexSet order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&z](int a, int b) {
        return std::fabs(z[a]) > std::fabs(z[b]);
    });
    order.resize(static_cast<std::size_t>(k));
    std::sort(order.begin(), order.end());
    return order;
}

/// Keep the entries of v indexed by S, zero the rest.
inline Vector restrict_to(const Vector& v, const IndexSet& S) {
    validate_index_set(S, static_cast<int>(v.size()));
    Vector r(v.size(), 0.0);
    for (int i : S) r[i] = v[i];
    return r;
}

/// H_k(z): retain the k largest-magnitude entries, zero the rest.
inline Vector hard_threshold(const Vector& z, int k) {
    return restrict_to(z, top_k_indices(z, k));
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet set_symmetric_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet complement(const IndexSet& S, int n) {
    IndexSet full(static_cast<std::size_t>(n));
    std::iota(full.begin(), full.end(), 0);
    return set_difference(full, S);
}

/// supp(v) with |v_i| > tol (strict); default tol = 0 is the exact definition.
inline IndexSet support(const Vector& v, double tol = 0.0) {
    if (tol < 0.0) throw std::invalid_argument("support: tol must be nonnegative");
    IndexSet r;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (std::fabs(v[i]) > tol) r.push_back(i);
    return r;
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// || z - H_k(z) ||_2, the minimum of ||z - d||_2 over k-sparse d.
inline double best_k_term_error(const Vector& z, int k) {
    return norm2(sub(z, hard_threshold(z, k)));
}

}  // namespace sparserec

#endif
