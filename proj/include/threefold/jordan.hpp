#pragma once

/**
 * @file jordan.hpp
 * @brief Simple formally real Jordan algebras, their trace form, states
 *        and positive cones.
 *
 * Supported algebras: h_n(R), h_n(C), h_n(H) (self-adjoint matrices with
 * a o b = (ab + ba)/2), h_n(O) for n <= 3, and spin factors R^n (+) R with
 * (x, t) o (x', t') = (t x' + t' x, x.x' + t t').
 *
 * Every element is stored as a real coordinate vector in a fixed basis:
 * for matrix algebras the n real diagonal entries first, then the strict
 * upper triangle row by row, each entry contributing dim_R(K)
 * coefficients; for spin factors (x_1, ..., x_n, t). Self-adjointness
 * therefore holds by construction.
 *
 * All matrix algebras multiply through octonion arithmetic; R, C and H sit
 * inside O as span{1}, span{1, e1} and span{1, e1, e2, e4}.
 */

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "threefold/division_algebras.hpp"
#include "threefold/hilbert.hpp"

namespace threefold {

class JordanKind {
public:
    enum class Family { HermitianMatrix, SpinFactor };

    /// h_n(K). Octonionic matrices are limited to n <= 3.
    static JordanKind hermitian(Algebra a, std::size_t n);
    /// h_3(O).
    static JordanKind exceptional() { return hermitian(Algebra::O, 3); }
    /// R^n (+) R.
    static JordanKind spin_factor(std::size_t n);
    /// Parses "hR:n", "hC:n", "hH:n", "hO:n" or "spin:n"; throws PreconditionError.
    static JordanKind parse(std::string_view spec);

    Family family() const noexcept { return family_; }
    Algebra algebra() const noexcept { return algebra_; }
    /// Matrix size, or n for R^n (+) R.
    std::size_t n() const noexcept { return n_; }
    bool is_spin_factor() const noexcept { return family_ == Family::SpinFactor; }
    bool is_exceptional() const noexcept { return family_ == Family::HermitianMatrix && algebra_ == Algebra::O; }

    /// Dimension as a real vector space.
    std::size_t dimension() const noexcept;
    /// Number of elements in a Jordan frame (matrix size; 2 for spin factors with n >= 1).
    std::size_t rank() const noexcept;
    std::string name() const;

    bool operator==(const JordanKind&) const = default;

private:
    JordanKind(Family f, Algebra a, std::size_t n) : family_(f), algebra_(a), n_(n) {}
    Family family_;
    Algebra algebra_;
    std::size_t n_;
};

class JordanElement {
public:
    JordanElement(JordanKind kind, std::vector<double> coords);

    static JordanElement zero(const JordanKind& kind);
    static JordanElement unit(const JordanKind& kind);
    /// The k-th coordinate basis vector.
    static JordanElement basis(const JordanKind& kind, std::size_t k);
    /// From a full row-major n x n octonion matrix; throws PreconditionError
    /// unless it is self-adjoint with entries in the kind's algebra.
    static JordanElement from_matrix(const JordanKind& kind, const std::vector<Octonion>& full, double tol = 1e-12);
    static JordanElement from_complex(const JordanKind& kind, const CMatrix& m, double tol = 1e-12);
    static JordanElement spin(std::vector<double> x, double t);

    const JordanKind& kind() const noexcept { return kind_; }
    std::span<const double> coords() const noexcept { return coords_; }

    /// Matrix entry (i, j) for matrix kinds.
    Octonion entry(std::size_t i, std::size_t j) const;
    std::vector<Octonion> full_matrix() const;
    /// For h_n(R) and h_n(C).
    CMatrix to_complex_matrix() const;
    /// For h_n(R), h_n(C) and h_n(H).
    HMatrix to_quaternion_matrix() const;

    std::vector<double> spin_vector() const;
    double spin_time() const;

    JordanElement operator+(const JordanElement& o) const;
    JordanElement operator-(const JordanElement& o) const;
    JordanElement operator-() const;
    JordanElement operator*(double s) const;
    friend JordanElement operator*(double s, const JordanElement& a) { return a * s; }
    bool operator==(const JordanElement&) const = default;

private:
    JordanKind kind_;
    std::vector<double> coords_;
};

/// Euclidean norm of the coordinate vector.
double norm(const JordanElement& a);

JordanElement jordan_product(const JordanElement& a, const JordanElement& b);

/// |(a^2 o b) o a - a^2 o (b o a)|.
double check_jordan_identity(const JordanElement& a, const JordanElement& b);
/// |(a o a) o (a o a) - a o (a o (a o a))|.
double power_associativity_residual(const JordanElement& a);

/// Matrix of b -> a o b in the coordinate basis.
RMatrix left_multiplication(const JordanElement& a);
/// tr(a) = trace of b -> a o b.
double trace(const JordanElement& a);
/// <a, b> = tr(a o b).
double trace_inner(const JordanElement& a, const JordanElement& b);
/// trace(a) * rank / dimension: the matrix trace for matrix kinds, 2t on a
/// spin factor. Used to normalize states.
double reduced_trace(const JordanElement& a);

/// Eigenvalues in ascending order (quaternionic ones deduplicated from the
/// complex adjunct; t -+ |x| for spin factors). Throws Unsupported for
/// octonionic matrices.
std::vector<double> eigenvalues(const JordanElement& a);

/// Strict positivity (a in the open cone). Spin factors use t > 0 and
/// t^2 - x.x > 0. Throws Unsupported for octonionic matrices.
bool is_positive(const JordanElement& a);
/// a in the closed cone, up to tol.
bool is_nonnegative(const JordanElement& a, double tol = 1e-10);

/// min over samples of trace_inner(a, b).
double dual_cone_margin(const JordanElement& a, std::span<const JordanElement> samples);

/// A density element rho >= 0 with reduced_trace(rho) = 1, evaluated as
/// <a> = reduced_trace(rho o a).
class JordanState {
public:
    /// Throws PreconditionError for a non-state and Unsupported when
    /// positivity cannot be decided (octonionic, not a multiple of 1).
    static JordanState create(JordanElement rho, double tol = 1e-10);
    const JordanElement& density() const noexcept { return rho_; }

private:
    explicit JordanState(JordanElement rho) : rho_(std::move(rho)) {}
    JordanElement rho_;
};

double state_eval(const JordanState& state, const JordanElement& a);

/// The normalized unit.
JordanState max_ignorance(const JordanKind& kind);

/// [[t + x0, conj(z)], [z, t - x0]] in h_2(K) <-> ((x0, z), t) in R^{1 + dim K} (+) R.
class H2SpinIsomorphism {
public:
    explicit H2SpinIsomorphism(Algebra a);
    const JordanKind& source() const noexcept { return source_; }
    const JordanKind& target() const noexcept { return target_; }
    JordanElement operator()(const JordanElement& a) const;
    JordanElement inverse(const JordanElement& b) const;

private:
    Algebra algebra_;
    JordanKind source_;
    JordanKind target_;
};

H2SpinIsomorphism h2_spin_isomorphism(Algebra a);

/// Coordinates drawn from N(0, 1).
JordanElement random_element(const JordanKind& kind, std::mt19937_64& rng);
/// 1 + s (a o a) with s in (0, 1]: strictly inside the cone.
JordanElement random_positive(const JordanKind& kind, std::mt19937_64& rng);

}  // namespace threefold
