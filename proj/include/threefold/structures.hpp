#pragma once

/**
 * @file structures.hpp
 * @brief Conversions between real, complex and quaternionic Hilbert spaces,
 *        and the structure maps that remember where a space came from.
 *
 * Six conversions are provided, each at the level of spaces (a dimension
 * plus the structure maps) and of morphisms (matrices):
 *
 *   underlying_real       C^n -> R^{2n}   J = multiplication by i, J^2 = -1
 *   underlying_complex    H^n -> C^{2n}   J = right multiplication by j (antiunitary), J^2 = -1
 *   underlying_real_quat  H^n -> R^{4n}   J, K = right multiplication by j, k
 *   complexify            R^n -> C^n      J = complex conjugation, J^2 = +1
 *   quaternify            C^n -> H^n      J = left multiplication by i, J^2 = -1
 *   quaternify_real       R^n -> H^n      J, K = left multiplication by j, k
 *
 * Coordinate conventions:
 *  - realification interleaves (re_1, im_1, re_2, im_2, ...);
 *  - a quaternion coordinate q is split as q = z1 + j z2 with
 *    z1 = Co(q), z2 = Co(-j q), and C^{2n} interleaves (z1_1, z2_1, ...).
 *    Under this split left multiplication by t = u1 + j u2 has the block
 *    [[u1, -conj(u2)], [u2, conj(u1)]].
 */

#include <array>
#include <cstddef>

#include "threefold/hilbert.hpp"

namespace threefold {

// ---------------------------------------------------------------------------
// Antilinear maps
// ---------------------------------------------------------------------------

/// v -> M conj(v) on C^n.
class AntilinearMap {
public:
    explicit AntilinearMap(CMatrix m);

    /// Complex conjugation on C^n.
    static AntilinearMap conjugation(std::size_t n);

    const CMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.rows(); }

    CVector operator()(const CVector& v) const;

    /// The linear map (this o other), i.e. M conj(M').
    CMatrix compose(const AntilinearMap& other) const;
    /// J^2 = M conj(M), a linear map.
    CMatrix square() const { return compose(*this); }

    /// |M^dagger M - 1|; zero iff <Jv, Jw> = <w, v> for all v, w.
    double antiunitarity_defect() const;
    bool is_antiunitary(double tol = kDefaultTol) const { return antiunitarity_defect() <= tol; }

    /// |J T - T J| for a linear T.
    double commutator_norm(const CMatrix& t) const;
    /// |J T + T J| for a linear T.
    double anticommutator_norm(const CMatrix& t) const;

    /// The real-linear matrix of J on R^{2n} (interleaved re/im).
    RMatrix realify() const;

    AntilinearMap operator*(double s) const { return AntilinearMap(m_ * s); }

private:
    CMatrix m_;
};

/// Sign s with |J^2 - s| <= tol; throws InternalInconsistency otherwise.
int square_sign(const AntilinearMap& j, double tol = kDefaultTol);

/// J (x) J' acting on C^n (x) C^n' (Kronecker matrix). Its square is J^2 (x) J'^2.
AntilinearMap tensor_antilinear(const AntilinearMap& j, const AntilinearMap& jp);

/// Antiunitary J with J^2 = +1.
class RealStructure {
public:
    static RealStructure create(AntilinearMap j, double tol = kDefaultTol);
    const AntilinearMap& j() const noexcept { return j_; }
    std::size_t dim() const noexcept { return j_.dim(); }

private:
    explicit RealStructure(AntilinearMap j) : j_(std::move(j)) {}
    AntilinearMap j_;
};

/// Antiunitary J with J^2 = -1 (so the dimension is even).
class QuaternionicStructure {
public:
    static QuaternionicStructure create(AntilinearMap j, double tol = kDefaultTol);
    const AntilinearMap& j() const noexcept { return j_; }
    std::size_t dim() const noexcept { return j_.dim(); }

private:
    explicit QuaternionicStructure(AntilinearMap j) : j_(std::move(j)) {}
    AntilinearMap j_;
};

/// Real orthogonal J, K with J^2 = K^2 = -1 and JK = -KJ.
class RealPairStructure {
public:
    static RealPairStructure create(RMatrix j, RMatrix k, double tol = kDefaultTol);
    const RMatrix& j() const noexcept { return j_; }
    const RMatrix& k() const noexcept { return k_; }
    /// I = JK.
    RMatrix i() const { return j_ * k_; }
    std::size_t dim() const noexcept { return j_.rows(); }

private:
    RealPairStructure(RMatrix j, RMatrix k) : j_(std::move(j)), k_(std::move(k)) {}
    RMatrix j_, k_;
};

/// Real dimension of the fixed-point set {x : Jx = x}.
std::size_t real_form_dimension(const RealStructure& s, double tol = 1e-9);

/// The real 2n x 2n matrices of i, J and K = IJ generated by a quaternionic structure.
std::array<RMatrix, 3> quaternionic_action(const QuaternionicStructure& s);

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

struct ComplexifiedSpace {
    std::size_t dim;  // complex dimension
    RealStructure structure;
};

struct RealifiedSpace {
    std::size_t dim;  // real dimension
    RMatrix complex_structure;  // J, unitary, J^2 = -1
};

struct UnderlyingComplexSpace {
    std::size_t dim;  // complex dimension
    QuaternionicStructure structure;
};

struct QuaternifiedSpace {
    std::size_t dim;  // quaternionic dimension
    HMatrix structure;  // J, unitary, J^2 = -1
};

struct RealOfQuaternionicSpace {
    std::size_t dim;  // real dimension
    RealPairStructure structure;
};

struct QuaternifiedRealSpace {
    std::size_t dim;  // quaternionic dimension
    HMatrix j, k;
};

ComplexifiedSpace complexify(std::size_t real_dim);
CMatrix complexify(const RMatrix& t);
/// u + v i for real vectors u, v.
CVector complexify(const RVector& u, const RVector& v);

RealifiedSpace underlying_real(std::size_t complex_dim);
RMatrix underlying_real(const CMatrix& t);
RVector underlying_real(const CVector& v);

UnderlyingComplexSpace underlying_complex(std::size_t quaternionic_dim);
/// The complex adjunct of a quaternionic matrix.
CMatrix underlying_complex(const HMatrix& t);
CVector underlying_complex(const HVector& v);
/// Inverse of underlying_complex on matrices commuting with the structure map.
HMatrix from_underlying_complex(const CMatrix& t);
HVector from_underlying_complex(const CVector& v);

QuaternifiedSpace quaternify(std::size_t complex_dim);
HMatrix quaternify(const CMatrix& t);
/// Complex dimension of {v : J v = v i}, the space recovered from (H^n, J).
std::size_t quaternify_roundtrip_dimension(const QuaternifiedSpace& s, double tol = 1e-9);

RealOfQuaternionicSpace underlying_real_quat(std::size_t quaternionic_dim);
RMatrix underlying_real_quat(const HMatrix& t);
RVector underlying_real_quat(const HVector& v);

QuaternifiedRealSpace quaternify_real(std::size_t real_dim);
HMatrix quaternify_real(const RMatrix& t);

/// Diagonal sign matrix P with P underlying_real_quat(T) = underlying_real(underlying_complex(T)) P.
RMatrix quat_to_realified_complex_basis(std::size_t quaternionic_dim);

/// Real 4x4 matrix of q -> x q (left) or q -> q x (right) on the basis (1, i, j, k).
RMatrix left_multiplication_matrix(const Quaternion& x);
RMatrix right_multiplication_matrix(const Quaternion& x);

// ---------------------------------------------------------------------------
// Kinds and the tensor rule
// ---------------------------------------------------------------------------

enum class RepKind { Real, Complex, Quaternionic };

const char* kind_name(RepKind k) noexcept;

/// +1, 0, -1 for real, complex, quaternionic.
int kind_sign(RepKind k) noexcept;
RepKind kind_from_sign(int s);

/// Kind of a tensor product: multiplies the signs.
RepKind classify_tensor(RepKind a, RepKind b) noexcept;

}  // namespace threefold
