#include "threefold/hilbert.hpp"

#include <Eigen/Dense>

namespace threefold {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    return e;
}

CMatrix from_eigen(const Eigen::MatrixXcd& e) {
    CMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
    return m;
}

}  // namespace

Eigensystem eigh_complex(const CMatrix& a, double tol) {
    if (!a.is_square()) throw PreconditionError("eigh_complex: matrix is not square");
    const double scale = std::max(1.0, norm(a));
    if (distance(a, adjoint(a)) > tol * scale)
        throw PreconditionError("eigh_complex: matrix is not self-adjoint");
    if (a.rows() == 0) return {};
    // Symmetrize so the solver sees an exactly Hermitian input.
    const Eigen::MatrixXcd e = to_eigen(a);
    const Eigen::MatrixXcd h = 0.5 * (e + e.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) throw InternalInconsistency("eigh_complex: solver did not converge");
    Eigensystem out;
    out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    out.vectors = from_eigen(solver.eigenvectors());
    return out;
}

std::vector<double> singular_values(const CMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

CMatrix null_space(const CMatrix& a, double rel_tol) {
    const std::size_t n = a.cols();
    if (n == 0) return CMatrix(0, 0);
    if (a.rows() == 0) return CMatrix::identity(n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a), Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cut = rel_tol * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) > cut) ++rank;
    const Eigen::MatrixXcd& v = svd.matrixV();
    CMatrix basis(n, n - rank);
    for (std::size_t c = rank; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            basis(r, c - rank) = v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    return basis;
}

std::size_t null_space_dimension(const CMatrix& a, double rel_tol) { return null_space(a, rel_tol).cols(); }

CMatrix to_complex(const RMatrix& m) {
    CMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

CVector to_complex(const RVector& v) {
    CVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

CVector column(const CMatrix& m, std::size_t j) {
    CVector v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

}  // namespace threefold
