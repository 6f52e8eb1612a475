#pragma once

/**
 * @file hilbert.hpp
 * @brief Finite-dimensional Hilbert spaces over R, C and H.
 *
 * Vectors are right K-modules: scalars act on the right, (v x)_i = v_i x.
 * Matrices act on the left, (T v)_i = sum_j T_ij v_j, so every matrix is
 * K-linear for the right action even when K = H is noncommutative.
 * The inner product is <v, w> = sum_i conj(v_i) w_i, linear in the second
 * slot.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "threefold/division_algebras.hpp"
#include "threefold/errors.hpp"

namespace threefold {

inline constexpr double kDefaultTol = 1e-10;

template <HilbertScalar K>
class KVector {
public:
    using scalar_type = K;

    KVector() = default;
    explicit KVector(std::size_t n) : entries_(n, K(0.0)) {}
    KVector(std::initializer_list<K> xs) : entries_(xs) {}
    explicit KVector(std::vector<K> xs) : entries_(std::move(xs)) {}

    static KVector basis(std::size_t n, std::size_t k) {
        KVector v(n);
        v[k] = K(1.0);
        return v;
    }

    static constexpr ScalarSystem system() { return ScalarSystem(scalar_traits<K>::algebra); }
    std::size_t size() const noexcept { return entries_.size(); }
    const K& operator[](std::size_t i) const { return entries_[i]; }
    K& operator[](std::size_t i) { return entries_[i]; }
    std::span<const K> entries() const noexcept { return entries_; }

    KVector operator+(const KVector& o) const {
        check_same(o);
        KVector r(*this);
        for (std::size_t i = 0; i < size(); ++i) r.entries_[i] += o.entries_[i];
        return r;
    }
    KVector operator-(const KVector& o) const {
        check_same(o);
        KVector r(*this);
        for (std::size_t i = 0; i < size(); ++i) r.entries_[i] -= o.entries_[i];
        return r;
    }
    KVector operator-() const {
        KVector r(*this);
        for (auto& x : r.entries_) x = -x;
        return r;
    }

    /// Right scalar action v -> v x.
    KVector operator*(const K& x) const {
        KVector r(*this);
        for (auto& e : r.entries_) e = e * x;
        return r;
    }

    bool operator==(const KVector&) const = default;

private:
    void check_same(const KVector& o) const {
        if (o.size() != size()) throw ShapeError("vector dimension mismatch");
    }

    std::vector<K> entries_;
};

template <HilbertScalar K>
class KMatrix {
public:
    using scalar_type = K;

    KMatrix() = default;
    KMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0.0)) {}
    KMatrix(std::initializer_list<std::initializer_list<K>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static KMatrix identity(std::size_t n) {
        KMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1.0);
        return m;
    }

    /// Diagonal matrix with every diagonal entry x (acting by left multiplication).
    static KMatrix scalar(std::size_t n, const K& x) {
        KMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = x;
        return m;
    }

    static constexpr ScalarSystem system() { return ScalarSystem(scalar_traits<K>::algebra); }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::span<const K> data() const noexcept { return data_; }

    KMatrix operator+(const KMatrix& o) const {
        check_same(o);
        KMatrix r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    KMatrix operator-(const KMatrix& o) const {
        check_same(o);
        KMatrix r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }
    KMatrix operator-() const {
        KMatrix r(*this);
        for (auto& x : r.data_) x = -x;
        return r;
    }
    KMatrix operator*(double s) const {
        KMatrix r(*this);
        for (auto& x : r.data_) x = x * s;
        return r;
    }
    friend KMatrix operator*(double s, const KMatrix& m) { return m * s; }

    KMatrix operator*(const KMatrix& o) const {
        if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
        KMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    KVector<K> operator*(const KVector<K>& v) const {
        if (cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
        KVector<K> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            K acc(0.0);
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }

    bool operator==(const KMatrix&) const = default;

private:
    void check_same(const KMatrix& o) const {
        if (o.rows_ != rows_ || o.cols_ != cols_) throw ShapeError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

using RVector = KVector<double>;
using CVector = KVector<Complex>;
using HVector = KVector<Quaternion>;
using RMatrix = KMatrix<double>;
using CMatrix = KMatrix<Complex>;
using HMatrix = KMatrix<Quaternion>;

// ---------------------------------------------------------------------------
// Inner products and norms
// ---------------------------------------------------------------------------

template <HilbertScalar K>
K inner(const KVector<K>& v, const KVector<K>& w) {
    if (v.size() != w.size()) throw ShapeError("inner product of vectors with different dimensions");
    K acc(0.0);
    for (std::size_t i = 0; i < v.size(); ++i) acc += conjugate(v[i]) * w[i];
    return acc;
}

template <HilbertScalar K>
double norm(const KVector<K>& v) {
    double s = 0.0;
    for (const auto& x : v.entries()) s += abs_sq(x);
    return std::sqrt(s);
}

/// Frobenius norm.
template <HilbertScalar K>
double norm(const KMatrix<K>& m) {
    double s = 0.0;
    for (const auto& x : m.data()) s += abs_sq(x);
    return std::sqrt(s);
}

template <HilbertScalar K>
double distance(const KMatrix<K>& a, const KMatrix<K>& b) {
    return norm(a - b);
}

template <HilbertScalar K>
double distance(const KVector<K>& a, const KVector<K>& b) {
    return norm(a - b);
}

// ---------------------------------------------------------------------------
// Adjoints and operator predicates
// ---------------------------------------------------------------------------

template <HilbertScalar K>
KMatrix<K> adjoint(const KMatrix<K>& t) {
    KMatrix<K> r(t.cols(), t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) r(j, i) = conjugate(t(i, j));
    return r;
}

template <HilbertScalar K>
KMatrix<K> transpose(const KMatrix<K>& t) {
    KMatrix<K> r(t.cols(), t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) r(j, i) = t(i, j);
    return r;
}

/// Entrywise conjugate.
template <HilbertScalar K>
KMatrix<K> conj(const KMatrix<K>& t) {
    KMatrix<K> r(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) r(i, j) = conjugate(t(i, j));
    return r;
}

template <HilbertScalar K>
KVector<K> conj(const KVector<K>& v) {
    KVector<K> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = conjugate(v[i]);
    return r;
}

template <HilbertScalar K>
bool is_self_adjoint(const KMatrix<K>& t, double tol = kDefaultTol) {
    return t.is_square() && distance(t, adjoint(t)) <= tol;
}

template <HilbertScalar K>
bool is_skew_adjoint(const KMatrix<K>& t, double tol = kDefaultTol) {
    return t.is_square() && norm(t + adjoint(t)) <= tol;
}

template <HilbertScalar K>
bool is_unitary(const KMatrix<K>& t, double tol = kDefaultTol) {
    if (!t.is_square()) return false;
    const auto id = KMatrix<K>::identity(t.rows());
    return distance(t * adjoint(t), id) <= tol && distance(adjoint(t) * t, id) <= tol;
}

// ---------------------------------------------------------------------------
// Gram-Schmidt
// ---------------------------------------------------------------------------

/// Orthonormalizes `vs` in order. Projection coefficients multiply on the
/// right, e_k <e_k, v>, which is the form that stays valid over H.
/// Throws RankDeficient if some vector lies (within tol) in the span of the
/// previous ones.
template <HilbertScalar K>
std::vector<KVector<K>> gram_schmidt(std::span<const KVector<K>> vs, double tol = 1e-12) {
    std::vector<KVector<K>> out;
    out.reserve(vs.size());
    for (std::size_t n = 0; n < vs.size(); ++n) {
        KVector<K> v = vs[n];
        const double scale = std::max(norm(vs[n]), 1.0);
        // two passes keep the result orthogonal to rounding level
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& e : out) v = v - e * inner(e, v);
        const double nv = norm(v);
        if (nv <= tol * scale)
            throw RankDeficient("gram_schmidt: vector " + std::to_string(n) + " is linearly dependent");
        out.push_back(v * K(1.0 / nv));
    }
    return out;
}

template <HilbertScalar K>
std::vector<KVector<K>> gram_schmidt(const std::vector<KVector<K>>& vs, double tol = 1e-12) {
    return gram_schmidt(std::span<const KVector<K>>(vs), tol);
}

// ---------------------------------------------------------------------------
// Complex spectral tools
// ---------------------------------------------------------------------------

struct Eigensystem {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // columns are eigenvectors
};

/// Spectral decomposition of a complex self-adjoint matrix.
/// Throws PreconditionError if `a` is not self-adjoint within
/// tol * max(1, |a|).
Eigensystem eigh_complex(const CMatrix& a, double tol = 1e-9);

/// Dimension of the kernel of `a`: the number of singular values at or
/// below rel_tol * max(1, largest singular value).
std::size_t null_space_dimension(const CMatrix& a, double rel_tol = 1e-9);

/// Orthonormal basis of the kernel of `a`, as columns.
CMatrix null_space(const CMatrix& a, double rel_tol = 1e-9);

/// Singular values in descending order.
std::vector<double> singular_values(const CMatrix& a);

CMatrix to_complex(const RMatrix& m);
CVector to_complex(const RVector& v);

/// Kronecker product.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Columns of `m` as vectors.
CVector column(const CMatrix& m, std::size_t j);

}  // namespace threefold
