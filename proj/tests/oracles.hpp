#pragma once

// Independent reference computations used to cross-check the library.

#include "blanchfield/catalog.hpp"
#include "blanchfield/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

// Sum over permutations; only for small n.
template <typename Scalar>
Scalar leibniz_determinant(const blanchfield::MatrixX<Scalar>& m) {
    const auto n = static_cast<int>(m.rows());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Scalar term(1);
        for (int i = 0; i < n; ++i) term = term * m(i, perm[i]);
        if (inversions % 2)
            total = total - term;
        else
            total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline blanchfield::IntegerMatrix random_integer_matrix(blanchfield::Rng& rng, Eigen::Index rows, Eigen::Index cols,
                                                        int bound) {
    blanchfield::IntegerMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    return m;
}

inline blanchfield::LaurentMatrix random_laurent_matrix(blanchfield::Rng& rng, Eigen::Index n) {
    blanchfield::LaurentMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = blanchfield::random_laurent(rng);
    return m;
}

}  // namespace oracle
