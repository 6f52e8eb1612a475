#pragma once

/**
 * @file division_algebras.hpp
 * @brief Scalars for the four normed division algebras R, C, H, O.
 *
 * Reals and complex numbers are plain `double` and `std::complex<double>`.
 * Quaternions and octonions are small value types defined here. All four
 * share a set of free functions (conjugate, abs_sq, magnitude, inverse)
 * so the linear-algebra templates can be written once.
 *
 * Octonion units follow the cyclic convention e_i e_{i+1} = e_{i+3}
 * (indices 1..7, mod 7). The quaternion subalgebra span{1, e1, e2, e4}
 * is identified with H via i = e1, j = e2, k = e4.
 */

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <type_traits>

#include "threefold/errors.hpp"

namespace threefold {

using Complex = std::complex<double>;

enum class Algebra { R, C, H, O };

constexpr int real_dimension(Algebra a) noexcept {
    switch (a) {
        case Algebra::R: return 1;
        case Algebra::C: return 2;
        case Algebra::H: return 4;
        case Algebra::O: return 8;
    }
    return 0;
}

const char* algebra_name(Algebra a) noexcept;

/// One of the three associative algebras usable as Hilbert-space scalars.
struct ScalarSystem {
    Algebra tag;

    constexpr explicit ScalarSystem(Algebra a) : tag(a) {
        if (a == Algebra::O) throw Unsupported("octonions are not an associative scalar system");
    }
    constexpr int real_dimension() const noexcept { return threefold::real_dimension(tag); }
    constexpr bool operator==(const ScalarSystem&) const = default;
};

// ---------------------------------------------------------------------------
// Quaternion
// ---------------------------------------------------------------------------

/// a + b i + c j + d k with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double re) : a(re) {}  // NOLINT: reals embed implicitly
    constexpr Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }
    constexpr Quaternion operator+(const Quaternion& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    constexpr Quaternion operator-(const Quaternion& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    constexpr Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    constexpr Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }

    constexpr Quaternion operator*(const Quaternion& o) const {
        return {a * o.a - b * o.b - c * o.c - d * o.d,
                a * o.b + b * o.a + c * o.d - d * o.c,
                a * o.c - b * o.d + c * o.a + d * o.b,
                a * o.d + b * o.c - c * o.b + d * o.a};
    }
    constexpr Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    constexpr Quaternion operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    constexpr Quaternion operator/(double s) const { return {a / s, b / s, c / s, d / s}; }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

    constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
    constexpr double norm_sq() const { return a * a + b * b + c * c + d * d; }
    double norm() const { return std::sqrt(norm_sq()); }
    Quaternion inv() const;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Co(a + bi + cj + dk) = a + bi.
constexpr Complex complex_part(const Quaternion& q) { return {q.a, q.b}; }

/// The embedding C -> H with i -> i.
constexpr Quaternion embed(const Complex& z) { return {z.real(), z.imag(), 0.0, 0.0}; }

// ---------------------------------------------------------------------------
// Octonion
// ---------------------------------------------------------------------------

namespace detail {

struct UnitProduct {
    int sign;
    int index;
};

// Fano lines {i, i+1, i+3} (mod 7, labels 1..7); along each line
// e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b.
constexpr std::array<std::array<UnitProduct, 8>, 8> make_octonion_table() {
    std::array<std::array<UnitProduct, 8>, 8> t{};
    for (int p = 0; p < 8; ++p) {
        t[0][p] = {1, p};
        t[p][0] = {1, p};
    }
    for (int p = 1; p < 8; ++p) t[p][p] = {-1, 0};
    auto wrap = [](int x) { return (x - 1) % 7 + 1; };
    for (int s = 1; s <= 7; ++s) {
        const int a = s, b = wrap(s + 1), c = wrap(s + 3);
        const int line[3] = {a, b, c};
        for (int r = 0; r < 3; ++r) {
            const int x = line[r], y = line[(r + 1) % 3], z = line[(r + 2) % 3];
            t[x][y] = {1, z};
            t[y][x] = {-1, z};
        }
    }
    return t;
}

inline constexpr auto kOctonionTable = make_octonion_table();

}  // namespace detail

/// a0 + a1 e1 + ... + a7 e7.
struct Octonion {
    std::array<double, 8> e{};

    constexpr Octonion() = default;
    constexpr Octonion(double re) { e[0] = re; }  // NOLINT: reals embed implicitly
    constexpr explicit Octonion(const std::array<double, 8>& coeffs) : e(coeffs) {}

    static constexpr Octonion unit(int index) {
        Octonion o;
        o.e[static_cast<std::size_t>(index)] = 1.0;
        return o;
    }

    constexpr double operator[](std::size_t k) const { return e[k]; }
    constexpr double& operator[](std::size_t k) { return e[k]; }
    constexpr bool operator==(const Octonion&) const = default;

    constexpr Octonion operator-() const {
        Octonion r;
        for (std::size_t k = 0; k < 8; ++k) r.e[k] = -e[k];
        return r;
    }
    constexpr Octonion operator+(const Octonion& o) const {
        Octonion r;
        for (std::size_t k = 0; k < 8; ++k) r.e[k] = e[k] + o.e[k];
        return r;
    }
    constexpr Octonion operator-(const Octonion& o) const {
        Octonion r;
        for (std::size_t k = 0; k < 8; ++k) r.e[k] = e[k] - o.e[k];
        return r;
    }
    constexpr Octonion& operator+=(const Octonion& o) { return *this = *this + o; }
    constexpr Octonion& operator-=(const Octonion& o) { return *this = *this - o; }

    constexpr Octonion operator*(const Octonion& o) const {
        Octonion r;
        for (std::size_t p = 0; p < 8; ++p) {
            if (e[p] == 0.0) continue;
            for (std::size_t q = 0; q < 8; ++q) {
                const auto u = detail::kOctonionTable[p][q];
                r.e[static_cast<std::size_t>(u.index)] += u.sign * e[p] * o.e[q];
            }
        }
        return r;
    }
    constexpr Octonion operator*(double s) const {
        Octonion r;
        for (std::size_t k = 0; k < 8; ++k) r.e[k] = e[k] * s;
        return r;
    }
    constexpr Octonion operator/(double s) const { return *this * (1.0 / s); }
    friend constexpr Octonion operator*(double s, const Octonion& o) { return o * s; }

    constexpr Octonion conj() const {
        Octonion r = -*this;
        r.e[0] = e[0];
        return r;
    }
    constexpr double norm_sq() const {
        double s = 0.0;
        for (double x : e) s += x * x;
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }
    Octonion inv() const;
};

std::ostream& operator<<(std::ostream& os, const Octonion& o);

/// Quaternion -> octonion along i = e1, j = e2, k = e4.
constexpr Octonion embed_octonion(const Quaternion& q) {
    Octonion o;
    o.e[0] = q.a;
    o.e[1] = q.b;
    o.e[2] = q.c;
    o.e[4] = q.d;
    return o;
}

// ---------------------------------------------------------------------------
// Uniform scalar interface
// ---------------------------------------------------------------------------

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr Algebra algebra = Algebra::R;
};
template <>
struct scalar_traits<Complex> {
    static constexpr Algebra algebra = Algebra::C;
};
template <>
struct scalar_traits<Quaternion> {
    static constexpr Algebra algebra = Algebra::H;
};
template <>
struct scalar_traits<Octonion> {
    static constexpr Algebra algebra = Algebra::O;
};

template <class K>
concept Scalar = requires { scalar_traits<K>::algebra; };

/// Scalars over which matrices act as linear operators (associative ones).
template <class K>
concept HilbertScalar = Scalar<K> && (scalar_traits<K>::algebra != Algebra::O);

constexpr double conjugate(double x) { return x; }
inline Complex conjugate(const Complex& z) { return std::conj(z); }
constexpr Quaternion conjugate(const Quaternion& q) { return q.conj(); }
constexpr Octonion conjugate(const Octonion& o) { return o.conj(); }

constexpr double abs_sq(double x) { return x * x; }
inline double abs_sq(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
constexpr double abs_sq(const Quaternion& q) { return q.norm_sq(); }
constexpr double abs_sq(const Octonion& o) { return o.norm_sq(); }

template <Scalar K>
double magnitude(const K& x) {
    return std::sqrt(abs_sq(x));
}

constexpr double real_part(double x) { return x; }
inline double real_part(const Complex& z) { return z.real(); }
constexpr double real_part(const Quaternion& q) { return q.a; }
constexpr double real_part(const Octonion& o) { return o.e[0]; }

/// conj(x) / |x|^2; throws DivisionByZero for x == 0.
double inverse(double x);
Complex inverse(const Complex& z);
Quaternion inverse(const Quaternion& q);
Octonion inverse(const Octonion& o);

/// Real coefficient vector of a scalar (length = real dimension).
template <Scalar K>
constexpr std::array<double, real_dimension(scalar_traits<K>::algebra)> coefficients(const K& x) {
    if constexpr (std::is_same_v<K, double>) {
        return {x};
    } else if constexpr (std::is_same_v<K, Complex>) {
        return {x.real(), x.imag()};
    } else if constexpr (std::is_same_v<K, Quaternion>) {
        return {x.a, x.b, x.c, x.d};
    } else {
        return x.e;
    }
}

template <Scalar K>
constexpr K from_coefficients(const std::array<double, real_dimension(scalar_traits<K>::algebra)>& c) {
    if constexpr (std::is_same_v<K, double>) {
        return c[0];
    } else if constexpr (std::is_same_v<K, Complex>) {
        return {c[0], c[1]};
    } else if constexpr (std::is_same_v<K, Quaternion>) {
        return {c[0], c[1], c[2], c[3]};
    } else {
        return Octonion(c);
    }
}

}  // namespace threefold
