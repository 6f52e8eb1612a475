#pragma once

/**
 * @file spectra.hpp
 * @brief One-parameter unitary groups, skew-adjoint generators and the
 *        spectral symmetry forced by an antiunitary structure map.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "threefold/hilbert.hpp"
#include "threefold/structures.hpp"

namespace threefold {

/// exp(t S) by scaling and squaring with a Taylor kernel. Quaternionic
/// matrices are exponentiated through their complex adjunct.
CMatrix exp_group(const CMatrix& s, double t = 1.0);
RMatrix exp_group(const RMatrix& s, double t = 1.0);
HMatrix exp_group(const HMatrix& s, double t = 1.0);

/// t -> exp(t S) for a skew-adjoint generator S.
template <HilbertScalar K>
class OneParamGroup {
public:
    explicit OneParamGroup(KMatrix<K> generator, double tol = kDefaultTol) : generator_(std::move(generator)) {
        if (!is_skew_adjoint(generator_, tol * std::max(1.0, norm(generator_))))
            throw PreconditionError("one-parameter unitary group needs a skew-adjoint generator");
    }

    const KMatrix<K>& generator() const noexcept { return generator_; }
    KMatrix<K> operator()(double t) const { return exp_group(generator_, t); }

private:
    KMatrix<K> generator_;
};

/// A = -i S, so that S = i A with A self-adjoint. Only complex generators
/// have such a split.
CMatrix split_iA(const CMatrix& s, double tol = kDefaultTol);
[[noreturn]] CMatrix split_iA(const RMatrix& s, double tol = kDefaultTol);
[[noreturn]] CMatrix split_iA(const HMatrix& s, double tol = kDefaultTol);

struct ObstructionReport {
    bool found = false;
    HVector witness;       // v with A(v j) != A(v) j
    double defect = 0.0;   // |A(v j) - A(v) j|
    double threshold = 0.0;  // 0.1 |S|_F |v|
};

/// For quaternionic skew-adjoint S, A(v) := S(v) i is not H-linear unless
/// S = 0. Searches basis vectors, then seeded random vectors, for a v
/// whose defect exceeds 0.1 |S|_F |v|.
ObstructionReport quaternionic_obstruction_witness(const HMatrix& s, std::uint64_t seed = 0, int random_trials = 64);

struct SpectrumReport {
    std::vector<double> eigenvalues;     // of A = -i S, ascending
    double max_pairing_defect = 0.0;     // max_k |lambda_k + lambda_{n-1-k}|
    double max_eigenvector_defect = 0.0; // max |A (J v) + c (J v)| over eigenpairs
    bool symmetric = false;              // both defects within tolerance
};

/// Checks that the spectrum of A = -i S is symmetric about zero and that
/// J maps each c-eigenvector to a (-c)-eigenvector. Requires S skew-adjoint
/// and S J = J S.
SpectrumReport symmetric_spectrum_check(const CMatrix& s, const AntilinearMap& j, double tol = 1e-8);

}  // namespace threefold
