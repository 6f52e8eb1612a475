#include "threefold/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace threefold {

namespace {

double one_norm(const CMatrix& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

}  // namespace

CMatrix exp_group(const CMatrix& s, double t) {
    if (!s.is_square()) throw ShapeError("exp_group: generator must be square");
    const std::size_t n = s.rows();
    CMatrix a = s * t;
    int squarings = 0;
    const double nrm = one_norm(a);
    if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
    a = a * std::ldexp(1.0, -squarings);

    // |a| <= 1/2, so 1/k! * 2^-k drops below 1e-17 by k = 18.
    CMatrix result = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    for (int k = 1; k <= 30; ++k) {
        term = term * a * (1.0 / k);
        result = result + term;
        if (norm(term) < 1e-18 * norm(result)) break;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

RMatrix exp_group(const RMatrix& s, double t) {
    const CMatrix e = exp_group(to_complex(s), t);
    RMatrix out(e.rows(), e.cols());
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) out(i, j) = e(i, j).real();
    return out;
}

HMatrix exp_group(const HMatrix& s, double t) {
    return from_underlying_complex(exp_group(underlying_complex(s), t));
}

CMatrix split_iA(const CMatrix& s, double tol) {
    if (!is_skew_adjoint(s, tol * std::max(1.0, norm(s))))
        throw PreconditionError("split_iA: generator is not skew-adjoint");
    CMatrix a(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) a(i, j) = Complex(0.0, -1.0) * s(i, j);
    return a;
}

CMatrix split_iA(const RMatrix&, double) {
    throw Unsupported("split_iA: a real Hilbert space has no number i to write S = iA");
}

CMatrix split_iA(const HMatrix&, double) {
    throw Unsupported("split_iA: S(v) i is not quaternion-linear; route through the underlying complex space");
}

ObstructionReport quaternionic_obstruction_witness(const HMatrix& s, std::uint64_t seed, int random_trials) {
    if (!s.is_square()) throw ShapeError("obstruction witness: S must be square");
    ObstructionReport report;
    const double s_norm = norm(s);
    if (s_norm == 0.0) return report;  // A = 0 is linear

    const auto a_of = [&](const HVector& v) { return (s * v) * Quaternion::i(); };
    const auto consider = [&](const HVector& v) {
        const double defect = norm(a_of(v * Quaternion::j()) - a_of(v) * Quaternion::j());
        const double threshold = 0.1 * s_norm * norm(v);
        if (defect > threshold && (!report.found || defect / threshold > report.defect / report.threshold)) {
            report = {true, v, defect, threshold};
        }
    };

    const std::size_t n = s.cols();
    for (std::size_t k = 0; k < n; ++k) consider(HVector::basis(n, k));
    if (report.found) return report;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < random_trials && !report.found; ++trial) {
        HVector v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = Quaternion(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
        consider(v);
    }
    return report;
}

SpectrumReport symmetric_spectrum_check(const CMatrix& s, const AntilinearMap& j, double tol) {
    if (!s.is_square() || s.rows() != j.dim()) throw ShapeError("spectrum check: S and J dimensions differ");
    const double scale = std::max(1.0, norm(s));
    if (!is_skew_adjoint(s, 1e-10 * scale)) throw PreconditionError("spectrum check: S is not skew-adjoint");
    if (j.commutator_norm(s) > 1e-9 * scale) throw PreconditionError("spectrum check: S J != J S");

    const CMatrix a = split_iA(s);
    const Eigensystem es = eigh_complex(a);
    SpectrumReport report;
    report.eigenvalues = es.values;
    const std::size_t n = es.values.size();
    for (std::size_t k = 0; k < n; ++k)
        report.max_pairing_defect = std::max(report.max_pairing_defect, std::abs(es.values[k] + es.values[n - 1 - k]));
    for (std::size_t k = 0; k < n; ++k) {
        const CVector jv = j(column(es.vectors, k));
        const CVector residual = a * jv + jv * Complex(es.values[k]);
        report.max_eigenvector_defect = std::max(report.max_eigenvector_defect, norm(residual));
    }
    report.symmetric = report.max_pairing_defect <= tol && report.max_eigenvector_defect <= tol;
    return report;
}

}  // namespace threefold
