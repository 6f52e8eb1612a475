#include "threefold/structures.hpp"

#include <cmath>
#include <string>

namespace threefold {

namespace {

RMatrix block_diagonal(const RMatrix& block, std::size_t copies) {
    const std::size_t b = block.rows();
    RMatrix out(b * copies, b * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) out(c * b + i, c * b + j) = block(i, j);
    return out;
}

CMatrix block_diagonal(const CMatrix& block, std::size_t copies) {
    const std::size_t b = block.rows();
    CMatrix out(b * copies, b * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) out(c * b + i, c * b + j) = block(i, j);
    return out;
}

// q = z1 + j z2 with z1 = Co(q), z2 = Co(-j q).
std::pair<Complex, Complex> split(const Quaternion& q) {
    return {complex_part(q), complex_part(-Quaternion::j() * q)};
}

Quaternion join(const Complex& z1, const Complex& z2) { return embed(z1) + Quaternion::j() * embed(z2); }

}  // namespace

// ---------------------------------------------------------------------------
// AntilinearMap
// ---------------------------------------------------------------------------

AntilinearMap::AntilinearMap(CMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw ShapeError("antilinear map needs a square matrix");
}

AntilinearMap AntilinearMap::conjugation(std::size_t n) { return AntilinearMap(CMatrix::identity(n)); }

CVector AntilinearMap::operator()(const CVector& v) const { return m_ * conj(v); }

CMatrix AntilinearMap::compose(const AntilinearMap& other) const { return m_ * conj(other.m_); }

double AntilinearMap::antiunitarity_defect() const {
    return distance(adjoint(m_) * m_, CMatrix::identity(dim()));
}

double AntilinearMap::commutator_norm(const CMatrix& t) const { return norm(m_ * conj(t) - t * m_); }

double AntilinearMap::anticommutator_norm(const CMatrix& t) const { return norm(m_ * conj(t) + t * m_); }

RMatrix AntilinearMap::realify() const {
    RMatrix flip = RMatrix::identity(2 * dim());
    for (std::size_t i = 0; i < dim(); ++i) flip(2 * i + 1, 2 * i + 1) = -1.0;
    return underlying_real(m_) * flip;
}

int square_sign(const AntilinearMap& j, double tol) {
    const CMatrix sq = j.square();
    const CMatrix id = CMatrix::identity(j.dim());
    if (distance(sq, id) <= tol) return 1;
    if (distance(sq, -id) <= tol) return -1;
    throw InternalInconsistency("J^2 is not +1 or -1");
}

AntilinearMap tensor_antilinear(const AntilinearMap& j, const AntilinearMap& jp) {
    return AntilinearMap(kron(j.matrix(), jp.matrix()));
}

RealStructure RealStructure::create(AntilinearMap j, double tol) {
    if (!j.is_antiunitary(tol)) throw PreconditionError("real structure must be antiunitary");
    if (distance(j.square(), CMatrix::identity(j.dim())) > tol) throw PreconditionError("real structure needs J^2 = +1");
    return RealStructure(std::move(j));
}

QuaternionicStructure QuaternionicStructure::create(AntilinearMap j, double tol) {
    if (j.dim() % 2 != 0) throw PreconditionError("quaternionic structure needs an even complex dimension");
    if (!j.is_antiunitary(tol)) throw PreconditionError("quaternionic structure must be antiunitary");
    if (distance(j.square(), -CMatrix::identity(j.dim())) > tol)
        throw PreconditionError("quaternionic structure needs J^2 = -1");
    return QuaternionicStructure(std::move(j));
}

RealPairStructure RealPairStructure::create(RMatrix j, RMatrix k, double tol) {
    if (!j.is_square() || j.rows() != k.rows() || !k.is_square()) throw ShapeError("J and K must be square and equal-sized");
    if (j.rows() % 4 != 0) throw PreconditionError("real dimension must be a multiple of 4");
    const RMatrix id = RMatrix::identity(j.rows());
    if (!is_unitary(j, tol) || !is_unitary(k, tol)) throw PreconditionError("J and K must be orthogonal");
    if (distance(j * j, -id) > tol || distance(k * k, -id) > tol) throw PreconditionError("need J^2 = K^2 = -1");
    if (norm(j * k + k * j) > tol) throw PreconditionError("need JK = -KJ");
    return RealPairStructure(std::move(j), std::move(k));
}

std::size_t real_form_dimension(const RealStructure& s, double tol) {
    const RMatrix fixed = s.j().realify() - RMatrix::identity(2 * s.dim());
    return null_space_dimension(to_complex(fixed), tol);
}

std::array<RMatrix, 3> quaternionic_action(const QuaternionicStructure& s) {
    const RMatrix i = underlying_real(CMatrix::scalar(s.dim(), Complex(0.0, 1.0)));
    const RMatrix j = s.j().realify();
    return {i, j, i * j};
}

// ---------------------------------------------------------------------------
// R -> C
// ---------------------------------------------------------------------------

ComplexifiedSpace complexify(std::size_t real_dim) {
    return {real_dim, RealStructure::create(AntilinearMap::conjugation(real_dim))};
}

CMatrix complexify(const RMatrix& t) { return to_complex(t); }

CVector complexify(const RVector& u, const RVector& v) {
    if (u.size() != v.size()) throw ShapeError("complexify: real and imaginary parts differ in size");
    CVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = Complex(u[i], v[i]);
    return out;
}

// ---------------------------------------------------------------------------
// C -> R
// ---------------------------------------------------------------------------

RealifiedSpace underlying_real(std::size_t complex_dim) {
    return {2 * complex_dim, underlying_real(CMatrix::scalar(complex_dim, Complex(0.0, 1.0)))};
}

RMatrix underlying_real(const CMatrix& t) {
    RMatrix out(2 * t.rows(), 2 * t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            const Complex z = t(i, j);
            out(2 * i, 2 * j) = z.real();
            out(2 * i, 2 * j + 1) = -z.imag();
            out(2 * i + 1, 2 * j) = z.imag();
            out(2 * i + 1, 2 * j + 1) = z.real();
        }
    return out;
}

RVector underlying_real(const CVector& v) {
    RVector out(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[2 * i] = v[i].real();
        out[2 * i + 1] = v[i].imag();
    }
    return out;
}

// ---------------------------------------------------------------------------
// H -> C
// ---------------------------------------------------------------------------

UnderlyingComplexSpace underlying_complex(std::size_t quaternionic_dim) {
    // right multiplication by j: (z1 + j z2) j = -conj(z2) + j conj(z1)
    const CMatrix block{{0.0, -1.0}, {1.0, 0.0}};
    return {2 * quaternionic_dim,
            QuaternionicStructure::create(AntilinearMap(block_diagonal(block, quaternionic_dim)))};
}

CMatrix underlying_complex(const HMatrix& t) {
    CMatrix out(2 * t.rows(), 2 * t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            const auto [u1, u2] = split(t(i, j));
            out(2 * i, 2 * j) = u1;
            out(2 * i, 2 * j + 1) = -std::conj(u2);
            out(2 * i + 1, 2 * j) = u2;
            out(2 * i + 1, 2 * j + 1) = std::conj(u1);
        }
    return out;
}

CVector underlying_complex(const HVector& v) {
    CVector out(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto [z1, z2] = split(v[i]);
        out[2 * i] = z1;
        out[2 * i + 1] = z2;
    }
    return out;
}

HMatrix from_underlying_complex(const CMatrix& t) {
    if (t.rows() % 2 != 0 || t.cols() % 2 != 0) throw ShapeError("complex adjunct must have even dimensions");
    HMatrix out(t.rows() / 2, t.cols() / 2);
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = join(t(2 * i, 2 * j), t(2 * i + 1, 2 * j));
    return out;
}

HVector from_underlying_complex(const CVector& v) {
    if (v.size() % 2 != 0) throw ShapeError("complex vector must have even dimension");
    HVector out(v.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = join(v[2 * i], v[2 * i + 1]);
    return out;
}

// ---------------------------------------------------------------------------
// C -> H
// ---------------------------------------------------------------------------

QuaternifiedSpace quaternify(std::size_t complex_dim) {
    return {complex_dim, HMatrix::scalar(complex_dim, Quaternion::i())};
}

HMatrix quaternify(const CMatrix& t) {
    HMatrix out(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) out(i, j) = embed(t(i, j));
    return out;
}

std::size_t quaternify_roundtrip_dimension(const QuaternifiedSpace& s, double tol) {
    // v -> J v - v i as a real-linear map on R^{4n}
    const RMatrix map = underlying_real_quat(s.structure) - block_diagonal(right_multiplication_matrix(Quaternion::i()), s.dim);
    const std::size_t real_dim = null_space_dimension(to_complex(map), tol);
    return real_dim / 2;
}

// ---------------------------------------------------------------------------
// H -> R and R -> H
// ---------------------------------------------------------------------------

RMatrix left_multiplication_matrix(const Quaternion& x) {
    RMatrix m(4, 4);
    const Quaternion basis[4] = {Quaternion(1.0), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (std::size_t c = 0; c < 4; ++c) {
        const auto col = coefficients(x * basis[c]);
        for (std::size_t r = 0; r < 4; ++r) m(r, c) = col[r];
    }
    return m;
}

RMatrix right_multiplication_matrix(const Quaternion& x) {
    RMatrix m(4, 4);
    const Quaternion basis[4] = {Quaternion(1.0), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (std::size_t c = 0; c < 4; ++c) {
        const auto col = coefficients(basis[c] * x);
        for (std::size_t r = 0; r < 4; ++r) m(r, c) = col[r];
    }
    return m;
}

RealOfQuaternionicSpace underlying_real_quat(std::size_t quaternionic_dim) {
    return {4 * quaternionic_dim,
            RealPairStructure::create(block_diagonal(right_multiplication_matrix(Quaternion::j()), quaternionic_dim),
                                      block_diagonal(right_multiplication_matrix(Quaternion::k()), quaternionic_dim))};
}

RMatrix underlying_real_quat(const HMatrix& t) {
    RMatrix out(4 * t.rows(), 4 * t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            const RMatrix block = left_multiplication_matrix(t(i, j));
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c) out(4 * i + r, 4 * j + c) = block(r, c);
        }
    return out;
}

RVector underlying_real_quat(const HVector& v) {
    RVector out(4 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto c = coefficients(v[i]);
        for (std::size_t r = 0; r < 4; ++r) out[4 * i + r] = c[r];
    }
    return out;
}

QuaternifiedRealSpace quaternify_real(std::size_t real_dim) {
    return {real_dim, HMatrix::scalar(real_dim, Quaternion::j()), HMatrix::scalar(real_dim, Quaternion::k())};
}

HMatrix quaternify_real(const RMatrix& t) {
    HMatrix out(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) out(i, j) = Quaternion(t(i, j));
    return out;
}

RMatrix quat_to_realified_complex_basis(std::size_t quaternionic_dim) {
    // (a, b, c, d) -> (Re z1, Im z1, Re z2, Im z2) = (a, b, c, -d)
    RMatrix p = RMatrix::identity(4 * quaternionic_dim);
    for (std::size_t i = 0; i < quaternionic_dim; ++i) p(4 * i + 3, 4 * i + 3) = -1.0;
    return p;
}

// ---------------------------------------------------------------------------
// Kinds
// ---------------------------------------------------------------------------

const char* kind_name(RepKind k) noexcept {
    switch (k) {
        case RepKind::Real: return "real";
        case RepKind::Complex: return "complex";
        case RepKind::Quaternionic: return "quaternionic";
    }
    return "?";
}

int kind_sign(RepKind k) noexcept {
    switch (k) {
        case RepKind::Real: return 1;
        case RepKind::Complex: return 0;
        case RepKind::Quaternionic: return -1;
    }
    return 0;
}

RepKind kind_from_sign(int s) {
    if (s == 1) return RepKind::Real;
    if (s == 0) return RepKind::Complex;
    if (s == -1) return RepKind::Quaternionic;
    throw PreconditionError("kind sign must be -1, 0 or 1, got " + std::to_string(s));
}

RepKind classify_tensor(RepKind a, RepKind b) noexcept {
    return kind_from_sign(kind_sign(a) * kind_sign(b));
}

}  // namespace threefold
