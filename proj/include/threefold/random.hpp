#pragma once

/// Seeded samplers for vectors and matrices over R, C and H.

#include <cstddef>
#include <array>
#include <random>

#include "threefold/hilbert.hpp"

namespace threefold {

template <Scalar K>
K random_scalar(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::array<double, real_dimension(scalar_traits<K>::algebra)> c{};
    for (auto& x : c) x = gauss(rng);
    return from_coefficients<K>(c);
}

template <Scalar K>
KVector<K> random_vector(std::size_t n, std::mt19937_64& rng) {
    KVector<K> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar<K>(rng);
    return v;
}

template <Scalar K>
KMatrix<K> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    KMatrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar<K>(rng);
    return m;
}

/// (X - X^dagger) / 2 for a Gaussian X.
template <Scalar K>
KMatrix<K> random_skew_adjoint(std::size_t n, std::mt19937_64& rng) {
    const auto x = random_matrix<K>(n, n, rng);
    return (x - adjoint(x)) * 0.5;
}

/// (X + X^dagger) / 2 for a Gaussian X.
template <Scalar K>
KMatrix<K> random_self_adjoint(std::size_t n, std::mt19937_64& rng) {
    const auto x = random_matrix<K>(n, n, rng);
    return (x + adjoint(x)) * 0.5;
}

}  // namespace threefold
