#pragma once

/**
 * @file representations.hpp
 * @brief Real / complex / quaternionic classification of unitary
 *        representations.
 *
 * Two independent routes decide the kind of an irreducible representation:
 *
 *  1. the Frobenius-Schur indicator, the Haar average of tr rho(g^2)
 *     (+1 real, 0 complex, -1 quaternionic);
 *  2. the invariant bilinear form g(v, w) = v^T G w: none exists for a
 *     complex irrep, otherwise it is symmetric or antisymmetric and
 *     g(v, w) = <J v, w> defines an antiunitary J with J^2 = +1 or -1
 *     commuting with the group.
 *
 * `classify` runs both and refuses to answer when they disagree.
 *
 * Finite groups average over elements (uniform Haar measure). SU(2) is
 * handled through its Lie algebra: a representation is given by the
 * skew-adjoint images of the quaternion units i, j, k, and invariance under
 * the connected group is the same as infinitesimal invariance.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "threefold/hilbert.hpp"
#include "threefold/structures.hpp"

namespace threefold {

// ---------------------------------------------------------------------------
// Finite groups
// ---------------------------------------------------------------------------

class FiniteGroup {
public:
    /// Validates closure, associativity, identity and inverses; throws
    /// ValidationError on the first violation.
    static FiniteGroup from_table(std::vector<std::vector<int>> mult);
    static FiniteGroup cyclic(std::size_t n);

    std::size_t order() const noexcept { return table_.size(); }
    int multiply(int g, int h) const { return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
    int identity() const noexcept { return identity_; }
    int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
    const std::vector<std::vector<int>>& table() const noexcept { return table_; }

private:
    FiniteGroup() = default;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

/// One d x d complex matrix per group element, in element order.
struct FiniteGroupRep {
    FiniteGroup group;
    std::size_t dim = 0;
    std::vector<CMatrix> matrices;
    std::string name;

    const CMatrix& operator()(int g) const { return matrices[static_cast<std::size_t>(g)]; }
};

struct RepValidation {
    double max_unitarity_defect = 0.0;
    double max_homomorphism_defect = 0.0;
    std::string problem;  // empty when valid
    bool ok() const noexcept { return problem.empty(); }
};

/// Shape, unitarity and homomorphism checks.
RepValidation validate(const FiniteGroupRep& rep, double tol = 1e-10);

FiniteGroupRep direct_sum(const FiniteGroupRep& a, const FiniteGroupRep& b);
/// g -> U rho(g) U^dagger.
FiniteGroupRep conjugated(const FiniteGroupRep& rep, const CMatrix& u);
/// The dual representation g -> conj(rho(g)).
FiniteGroupRep dual(const FiniteGroupRep& rep);

/// (1/|G|) sum_g tr rho(g g). Throws PreconditionError for an invalid rep.
double fs_indicator_finite(const FiniteGroupRep& rep);

/// dim { T : T rho(g) = rho(g) T for all g }.
std::size_t commutant_dimension(const FiniteGroupRep& rep);
/// dim { T : T rho(g) = conj(rho(g)) T for all g }, i.e. Hom(H, H*).
std::size_t intertwiner_dimension_to_dual(const FiniteGroupRep& rep);

// ---------------------------------------------------------------------------
// Invariant forms and structure maps
// ---------------------------------------------------------------------------

enum class FormSymmetry { Symmetric, Antisymmetric };

const char* symmetry_name(FormSymmetry s) noexcept;

struct InvariantBilinearForm {
    CMatrix matrix;  // g(v, w) = v^T G w, normalized to |G|_F = 1
    FormSymmetry symmetry;
    // Largest invariant form obtained from symmetric (resp. antisymmetric)
    // seeds. Exactly one of the two is nonzero for a self-dual irrep.
    double symmetric_class_norm = 0.0;
    double antisymmetric_class_norm = 0.0;

    double losing_class_norm() const noexcept {
        return symmetry == FormSymmetry::Symmetric ? antisymmetric_class_norm : symmetric_class_norm;
    }
};

/// Averages seed forms b(rho(g) v, rho(g) w) over the group, trying the d^2
/// elementary seeds in turn. Returns nullopt when every seed averages to
/// zero. Throws PreconditionError for a reducible or invalid rep.
std::optional<InvariantBilinearForm> invariant_bilinear_form(const FiniteGroupRep& rep);

/// Antiunitary J with g(v, w) = <J v, w> up to a positive factor, rescaled
/// so J^2 = +1 (symmetric form) or -1 (antisymmetric form). `action` lists
/// the operators J must commute with (group elements or Lie generators).
/// Throws DegenerateForm for a degenerate form and InternalInconsistency if
/// any of the checks on J fail.
AntilinearMap structure_map(const InvariantBilinearForm& form, std::span<const CMatrix> action, double tol = 1e-9);

struct Classification {
    RepKind kind = RepKind::Complex;
    double fs_indicator = 0.0;
    std::size_t commutant_dim = 0;
    std::optional<InvariantBilinearForm> form;
    std::optional<AntilinearMap> j;
    int j_square_sign = 0;  // 0 when there is no J
};

/// Both routes; throws InternalInconsistency if they disagree and
/// PreconditionError for reducible input.
Classification classify(const FiniteGroupRep& rep);

// ---------------------------------------------------------------------------
// SU(2)
// ---------------------------------------------------------------------------

/// A nonnegative half-integer, stored as 2j.
class Spin {
public:
    constexpr explicit Spin(int twice) : twice_(twice) {
        if (twice < 0) throw PreconditionError("spin must be nonnegative");
    }
    /// Throws PreconditionError unless 2j is a nonnegative integer.
    static Spin from_double(double j);

    constexpr int twice() const noexcept { return twice_; }
    constexpr double value() const noexcept { return twice_ / 2.0; }
    constexpr std::size_t dim() const noexcept { return static_cast<std::size_t>(twice_) + 1; }
    constexpr bool is_half_integer() const noexcept { return twice_ % 2 == 1; }
    constexpr bool operator==(const Spin&) const = default;

private:
    int twice_;
};

/// Unit quaternion a + bi + cj + dk -> a s0 - i b s1 - i c s2 - i d s3.
CMatrix su2_fundamental(const Quaternion& unit);

/// A unitary SU(2) representation, stored as the skew-adjoint images of
/// the Lie algebra elements corresponding to i, j, k.
struct Su2Rep {
    std::array<CMatrix, 3> generators;
    std::size_t dim() const noexcept { return generators[0].rows(); }
};

/// The spin-j representation on the (2j)-th symmetric power of C^2, in the
/// orthonormal monomial basis.
Su2Rep su2_spin_rep(Spin j);
/// rho_j(q) for a unit quaternion q.
CMatrix su2_spin_matrix(Spin j, const Quaternion& unit);

Su2Rep tensor(const Su2Rep& a, const Su2Rep& b);

/// Splits a representation along the eigenspaces of the Casimir operator.
/// Each component carries its spin; components are irreducible when the
/// multiplicity is one (always true for a tensor product of two irreps).
struct Su2Component {
    Spin spin;
    Su2Rep rep;
};
std::vector<Su2Component> isotypic_components(const Su2Rep& rep);

/// chi_j(theta) for the element with eigenvalues e^{+-i theta}, by the
/// recurrence chi_{j+1/2} = chi_{1/2} chi_j - chi_{j-1/2}.
double su2_character(Spin j, double theta);

/// (2/pi) int_0^pi chi_j(2 theta) sin^2 theta d theta by composite Simpson
/// on `nodes` points (rounded up to odd).
double fs_indicator_su2(Spin j, int nodes = 2001);
/// Same integral with the character read off the weights of the rep.
double fs_indicator_su2(const Su2Rep& rep, int nodes = 2001);

std::size_t commutant_dimension(const Su2Rep& rep);
std::size_t intertwiner_dimension_to_dual(const Su2Rep& rep);
/// Solves the infinitesimal invariance equations G X + X^T G = 0.
std::optional<InvariantBilinearForm> invariant_bilinear_form(const Su2Rep& rep);
Classification classify(const Su2Rep& rep, int nodes = 2001);

struct TimeReversalReport {
    Spin spin{0};
    RepKind kind = RepKind::Real;
    double fs_indicator = 0.0;
    int j_square_sign = 0;
    double max_anticommutator = 0.0;       // max_k |J A_k + A_k J|
    double max_expectation_defect = 0.0;   // |<Jv, A Jv> + <v, A v>| over samples
    double rotation_phase_defect = 0.0;    // |rho(-1) - (-1)^{2j}|
    bool pass = false;
};

/// A_k = -i X_k are the angular-momentum operators; checks J A = -A J, the
/// sign of J^2 against the parity of 2j, and the 2 pi rotation phase.
TimeReversalReport time_reversal_check(Spin j, std::uint64_t seed = 0, double tol = 1e-8);

}  // namespace threefold
