#include "threefold/representations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace threefold {

namespace {

constexpr double kIndicatorTol = 1e-6;  // distance from the nearest of -1, 0, 1
constexpr double kSeedVanishes = 1e-8;
constexpr double kSymmetryThreshold = 1e-8;

// Sum of f(lo) .. f(hi - 1) by recursive halving; the reduction order is
// fixed by the range so results are reproducible.
template <class T, class F>
T pairwise_sum(std::size_t lo, std::size_t hi, const F& f) {
    if (hi - lo == 1) return f(lo);
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum<T>(lo, mid, f) + pairwise_sum<T>(mid, hi, f);
}

// Rows of the linear system T a_k = b_k T for unknown vec(T) (column-major):
// (a_k^T (x) 1 - 1 (x) b_k) vec(T) = 0.
CMatrix intertwiner_system(std::span<const CMatrix> as, std::span<const CMatrix> bs) {
    const std::size_t d = as.empty() ? 0 : as[0].rows();
    const std::size_t d2 = d * d;
    CMatrix sys(as.size() * d2, d2);
    const CMatrix id = CMatrix::identity(d);
    for (std::size_t k = 0; k < as.size(); ++k) {
        const CMatrix block = kron(transpose(as[k]), id) - kron(id, bs[k]);
        for (std::size_t r = 0; r < d2; ++r)
            for (std::size_t c = 0; c < d2; ++c) sys(k * d2 + r, c) = block(r, c);
    }
    return sys;
}

std::size_t intertwiner_dimension(std::span<const CMatrix> as, std::span<const CMatrix> bs) {
    if (as.empty()) return 0;
    return null_space_dimension(intertwiner_system(as, bs), 1e-8);
}

CMatrix unvec(const CMatrix& basis, std::size_t col, std::size_t d) {
    CMatrix t(d, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) t(r, c) = basis(c * d + r, col);
    return t;
}

std::vector<CMatrix> conj_all(std::span<const CMatrix> ms) {
    std::vector<CMatrix> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(conj(m));
    return out;
}

FormSymmetry decide_symmetry(const CMatrix& g) {
    const double n = norm(g);
    const double anti_part = norm(g - transpose(g));
    const double sym_part = norm(g + transpose(g));
    const bool symmetric = anti_part <= kSymmetryThreshold * n;
    const bool antisymmetric = sym_part <= kSymmetryThreshold * n;
    if (symmetric == antisymmetric) {
        std::ostringstream msg;
        msg << "invariant form is neither cleanly symmetric nor antisymmetric (|G - G^T| = " << anti_part
            << ", |G + G^T| = " << sym_part << ")";
        throw InternalInconsistency(msg.str());
    }
    return symmetric ? FormSymmetry::Symmetric : FormSymmetry::Antisymmetric;
}

RepKind kind_from_indicator(double fs) {
    const double nearest = std::round(fs);
    if (std::abs(fs - nearest) > kIndicatorTol || std::abs(nearest) > 1.0) {
        std::ostringstream msg;
        msg << "Frobenius-Schur indicator " << fs << " is not -1, 0 or 1";
        throw InternalInconsistency(msg.str());
    }
    return kind_from_sign(static_cast<int>(nearest));
}

Classification finish_classification(double fs, std::size_t commutant, std::optional<InvariantBilinearForm> form,
                                     std::span<const CMatrix> action) {
    Classification out;
    out.fs_indicator = fs;
    out.commutant_dim = commutant;
    const RepKind by_indicator = kind_from_indicator(fs);
    RepKind by_structure = RepKind::Complex;
    if (form) {
        out.j = structure_map(*form, action);
        out.j_square_sign = square_sign(*out.j, 1e-9);
        by_structure = out.j_square_sign > 0 ? RepKind::Real : RepKind::Quaternionic;
    }
    out.form = std::move(form);
    if (by_indicator != by_structure) {
        std::ostringstream msg;
        msg << "indicator route says " << kind_name(by_indicator) << " but structure-map route says "
            << kind_name(by_structure);
        throw InternalInconsistency(msg.str());
    }
    out.kind = by_indicator;
    return out;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Coefficients (by power of y) of (alpha x + beta y)^m.
std::vector<Complex> linear_power(Complex alpha, Complex beta, int m) {
    std::vector<Complex> out(static_cast<std::size_t>(m) + 1);
    for (int l = 0; l <= m; ++l)
        out[static_cast<std::size_t>(l)] = binomial(m, l) * std::pow(alpha, m - l) * std::pow(beta, l);
    return out;
}

std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Rescales P_lk (monomial basis) to the orthonormal basis sqrt(C(n,k)) x^{n-k} y^k.
CMatrix to_orthonormal_basis(const CMatrix& p, int n) {
    CMatrix out(p.rows(), p.cols());
    for (std::size_t l = 0; l < p.rows(); ++l)
        for (std::size_t k = 0; k < p.cols(); ++k)
            out(l, k) = p(l, k) * std::sqrt(binomial(n, static_cast<int>(k)) / binomial(n, static_cast<int>(l)));
    return out;
}

CMatrix symmetric_power_generator(const CMatrix& x, int n) {
    // d/dt of (x + t(X00 x + X10 y))^{n-k} (y + t(X01 x + X11 y))^k at t = 0
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    CMatrix p(d, d);
    for (int k = 0; k <= n; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        p(kk, kk) = static_cast<double>(n - k) * x(0, 0) + static_cast<double>(k) * x(1, 1);
        if (k < n) p(kk + 1, kk) = static_cast<double>(n - k) * x(1, 0);
        if (k > 0) p(kk - 1, kk) = static_cast<double>(k) * x(0, 1);
    }
    return to_orthonormal_basis(p, n);
}

double simpson_indicator(const auto& character, int nodes) {
    if (nodes < 3) throw PreconditionError("quadrature needs at least 3 nodes");
    if (nodes % 2 == 0) ++nodes;
    const double pi = std::numbers::pi;
    const double h = pi / (nodes - 1);
    double sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double theta = k * h;
        const double s = std::sin(theta);
        const double w = (k == 0 || k == nodes - 1) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        sum += w * character(2.0 * theta) * s * s;
    }
    return (2.0 / pi) * sum * h / 3.0;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup
// ---------------------------------------------------------------------------

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mult) {
    const std::size_t n = mult.size();
    if (n == 0) throw ValidationError("group table is empty");
    for (std::size_t g = 0; g < n; ++g) {
        if (mult[g].size() != n) throw ValidationError("group table row " + std::to_string(g) + " has the wrong length");
        for (int h : mult[g])
            if (h < 0 || static_cast<std::size_t>(h) >= n)
                throw ValidationError("group table is not closed: entry " + std::to_string(h) + " in row " +
                                      std::to_string(g));
    }
    int identity = -1;
    for (std::size_t e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g)
            ok = mult[e][g] == static_cast<int>(g) && mult[g][e] == static_cast<int>(g);
        if (ok) identity = static_cast<int>(e);
    }
    if (identity < 0) throw ValidationError("group table has no identity element");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto ab = static_cast<std::size_t>(mult[a][b]);
                const auto bc = static_cast<std::size_t>(mult[b][c]);
                if (mult[ab][c] != mult[a][bc])
                    throw ValidationError("group table is not associative at (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ", " + std::to_string(c) + ")");
            }
    std::vector<int> inverse(n, -1);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h)
            if (mult[g][h] == identity && mult[h][g] == identity) {
                inverse[g] = static_cast<int>(h);
                break;
            }
        if (inverse[g] < 0) throw ValidationError("element " + std::to_string(g) + " has no inverse");
    }
    FiniteGroup out;
    out.table_ = std::move(mult);
    out.inverse_ = std::move(inverse);
    out.identity_ = identity;
    return out;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<int>((a + b) % n);
    return from_table(std::move(t));
}

// ---------------------------------------------------------------------------
// Finite representations
// ---------------------------------------------------------------------------

RepValidation validate(const FiniteGroupRep& rep, double tol) {
    RepValidation v;
    const std::size_t n = rep.group.order();
    if (rep.matrices.size() != n) {
        v.problem = "expected " + std::to_string(n) + " matrices, got " + std::to_string(rep.matrices.size());
        return v;
    }
    for (const auto& m : rep.matrices)
        if (m.rows() != rep.dim || m.cols() != rep.dim) {
            v.problem = "matrix shape does not match dim " + std::to_string(rep.dim);
            return v;
        }
    const CMatrix id = CMatrix::identity(rep.dim);
    for (const auto& m : rep.matrices)
        v.max_unitarity_defect = std::max(v.max_unitarity_defect, distance(m * adjoint(m), id));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            const auto gh = static_cast<std::size_t>(rep.group.multiply(static_cast<int>(g), static_cast<int>(h)));
            v.max_homomorphism_defect =
                std::max(v.max_homomorphism_defect, distance(rep.matrices[g] * rep.matrices[h], rep.matrices[gh]));
        }
    if (v.max_unitarity_defect > tol) v.problem = "matrices are not unitary";
    else if (v.max_homomorphism_defect > tol) v.problem = "matrices do not respect the group law";
    return v;
}

namespace {

void require_valid(const FiniteGroupRep& rep) {
    const auto v = validate(rep);
    if (!v.ok()) throw PreconditionError("invalid representation '" + rep.name + "': " + v.problem);
}

}  // namespace

FiniteGroupRep direct_sum(const FiniteGroupRep& a, const FiniteGroupRep& b) {
    if (a.group.table() != b.group.table()) throw ShapeError("direct sum of representations of different groups");
    FiniteGroupRep out{a.group, a.dim + b.dim, {}, a.name + "+" + b.name};
    for (std::size_t g = 0; g < a.matrices.size(); ++g) {
        CMatrix m(out.dim, out.dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) m(i, j) = a.matrices[g](i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.matrices[g](i, j);
        out.matrices.push_back(std::move(m));
    }
    return out;
}

FiniteGroupRep conjugated(const FiniteGroupRep& rep, const CMatrix& u) {
    FiniteGroupRep out{rep.group, rep.dim, {}, rep.name};
    const CMatrix ud = adjoint(u);
    for (const auto& m : rep.matrices) out.matrices.push_back(u * m * ud);
    return out;
}

FiniteGroupRep dual(const FiniteGroupRep& rep) {
    return {rep.group, rep.dim, conj_all(rep.matrices), rep.name + "*"};
}

double fs_indicator_finite(const FiniteGroupRep& rep) {
    require_valid(rep);
    const std::size_t n = rep.group.order();
    const Complex total = pairwise_sum<Complex>(0, n, [&](std::size_t g) {
        const CMatrix& sq = rep(rep.group.multiply(static_cast<int>(g), static_cast<int>(g)));
        Complex tr = 0.0;
        for (std::size_t i = 0; i < rep.dim; ++i) tr += sq(i, i);
        return tr;
    });
    return total.real() / static_cast<double>(n);
}

std::size_t commutant_dimension(const FiniteGroupRep& rep) {
    require_valid(rep);
    return intertwiner_dimension(rep.matrices, rep.matrices);
}

std::size_t intertwiner_dimension_to_dual(const FiniteGroupRep& rep) {
    require_valid(rep);
    const auto duals = conj_all(rep.matrices);
    return intertwiner_dimension(rep.matrices, duals);
}

const char* symmetry_name(FormSymmetry s) noexcept {
    return s == FormSymmetry::Symmetric ? "symmetric" : "antisymmetric";
}

std::optional<InvariantBilinearForm> invariant_bilinear_form(const FiniteGroupRep& rep) {
    require_valid(rep);
    if (intertwiner_dimension(rep.matrices, rep.matrices) != 1)
        throw PreconditionError("invariant_bilinear_form needs an irreducible representation");
    const std::size_t d = rep.dim;
    const std::size_t n = rep.group.order();
    const auto average = [&](const CMatrix& seed) {
        return pairwise_sum<CMatrix>(0, n, [&](std::size_t g) {
                   return transpose(rep.matrices[g]) * seed * rep.matrices[g];
               }) *
               (1.0 / static_cast<double>(n));
    };

    std::optional<CMatrix> chosen;
    double sym_norm = 0.0, anti_norm = 0.0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            CMatrix seed(d, d);
            seed(a, b) = 1.0;
            const CMatrix avg = average(seed);
            // averaging commutes with transposition, so these are the
            // averages of the symmetric and antisymmetric seed parts
            sym_norm = std::max(sym_norm, norm(avg + transpose(avg)) / 2.0);
            anti_norm = std::max(anti_norm, norm(avg - transpose(avg)) / 2.0);
            if (!chosen && norm(avg) > kSeedVanishes) chosen = avg;
        }
    if (!chosen) return std::nullopt;
    const CMatrix g = *chosen * (1.0 / norm(*chosen));
    return InvariantBilinearForm{g, decide_symmetry(g), sym_norm, anti_norm};
}

AntilinearMap structure_map(const InvariantBilinearForm& form, std::span<const CMatrix> action, double tol) {
    const CMatrix& g = form.matrix;
    const std::size_t d = g.rows();
    const auto sv = singular_values(g);
    if (sv.empty() || sv.back() <= 1e-8 * sv.front()) throw DegenerateForm("invariant bilinear form is degenerate");

    // g(v, w) = v^T G w = <J v, w> = (M conj(v))^dagger w  =>  M = G^dagger
    AntilinearMap j(adjoint(g));
    const CMatrix sq = j.square();
    Complex c = 0.0;
    for (std::size_t i = 0; i < d; ++i) c += sq(i, i);
    c /= static_cast<double>(d);
    if (distance(sq, CMatrix::scalar(d, c)) > tol * std::abs(c) || std::abs(c.imag()) > tol * std::abs(c))
        throw InternalInconsistency("J^2 is not a real multiple of the identity");
    const int expected = form.symmetry == FormSymmetry::Symmetric ? 1 : -1;
    if (c.real() * expected <= 0.0) throw InternalInconsistency("sign of J^2 does not match the form's symmetry");

    j = j * (1.0 / std::sqrt(std::abs(c.real())));
    for (const auto& m : action)
        if (j.commutator_norm(m) > tol) throw InternalInconsistency("structure map does not commute with the action");
    if (!j.is_antiunitary(tol)) throw InternalInconsistency("rescaled structure map is not antiunitary");
    if (distance(j.square(), CMatrix::scalar(d, Complex(expected))) > tol)
        throw InternalInconsistency("rescaled structure map does not square to +-1");
    return j;
}

Classification classify(const FiniteGroupRep& rep) {
    require_valid(rep);
    const std::size_t commutant = commutant_dimension(rep);
    if (commutant != 1)
        throw PreconditionError("classify needs an irreducible representation (commutant dimension " +
                                std::to_string(commutant) + ")");
    return finish_classification(fs_indicator_finite(rep), commutant, invariant_bilinear_form(rep), rep.matrices);
}

// ---------------------------------------------------------------------------
// SU(2)
// ---------------------------------------------------------------------------

Spin Spin::from_double(double j) {
    const double twice = 2.0 * j;
    const double rounded = std::round(twice);
    if (!(j >= 0.0) || std::abs(twice - rounded) > 1e-12) {
        std::ostringstream msg;
        msg << "spin " << j << " is not a nonnegative half-integer";
        throw PreconditionError(msg.str());
    }
    return Spin(static_cast<int>(rounded));
}

CMatrix su2_fundamental(const Quaternion& q) {
    const Complex i(0.0, 1.0);
    // a s0 - i b s1 - i c s2 - i d s3
    return CMatrix{{q.a - i * q.d, -i * q.b - q.c}, {-i * q.b + q.c, q.a + i * q.d}};
}

Su2Rep su2_spin_rep(Spin j) {
    const int n = j.twice();
    const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    Su2Rep rep;
    for (std::size_t k = 0; k < 3; ++k) {
        // su2_fundamental is real-linear, so a pure imaginary unit maps to
        // its own Lie algebra element
        rep.generators[k] = symmetric_power_generator(su2_fundamental(units[k]), n);
    }
    return rep;
}

CMatrix su2_spin_matrix(Spin j, const Quaternion& unit) {
    const int n = j.twice();
    const CMatrix u = su2_fundamental(unit);
    const std::size_t d = j.dim();
    CMatrix p(d, d);
    for (int k = 0; k <= n; ++k) {
        // U x = U00 x + U10 y, U y = U01 x + U11 y
        const auto col = poly_mul(linear_power(u(0, 0), u(1, 0), n - k), linear_power(u(0, 1), u(1, 1), k));
        for (std::size_t l = 0; l < d; ++l) p(l, static_cast<std::size_t>(k)) = col[l];
    }
    return to_orthonormal_basis(p, n);
}

Su2Rep tensor(const Su2Rep& a, const Su2Rep& b) {
    Su2Rep out;
    const CMatrix ia = CMatrix::identity(a.dim());
    const CMatrix ib = CMatrix::identity(b.dim());
    for (std::size_t k = 0; k < 3; ++k) out.generators[k] = kron(a.generators[k], ib) + kron(ia, b.generators[k]);
    return out;
}

std::vector<Su2Component> isotypic_components(const Su2Rep& rep) {
    const std::size_t d = rep.dim();
    CMatrix casimir(d, d);
    for (const auto& x : rep.generators) casimir = casimir + x * x;
    // -C/4 = J(J+1) on the spin-J isotypic part
    const Eigensystem es = eigh_complex(casimir * -0.25);
    std::vector<Su2Component> out;
    std::size_t start = 0;
    while (start < d) {
        std::size_t end = start + 1;
        while (end < d && std::abs(es.values[end] - es.values[start]) < 1e-6) ++end;
        const double lambda = es.values[start];
        const Spin spin = Spin::from_double(std::round(-1.0 + std::sqrt(1.0 + 4.0 * lambda)) / 2.0);
        CMatrix v(d, end - start);
        for (std::size_t c = start; c < end; ++c)
            for (std::size_t r = 0; r < d; ++r) v(r, c - start) = es.vectors(r, c);
        Su2Rep sub;
        for (std::size_t k = 0; k < 3; ++k) sub.generators[k] = adjoint(v) * rep.generators[k] * v;
        out.push_back({spin, std::move(sub)});
        start = end;
    }
    return out;
}

double su2_character(Spin j, double theta) {
    const double chi_half = 2.0 * std::cos(theta);
    double prev = 0.0;  // chi_{-1/2}
    double cur = 1.0;   // chi_0
    for (int t = 0; t < j.twice(); ++t) {
        const double next = chi_half * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double fs_indicator_su2(Spin j, int nodes) {
    return simpson_indicator([j](double theta) { return su2_character(j, theta); }, nodes);
}

double fs_indicator_su2(const Su2Rep& rep, int nodes) {
    // exp(theta X_k) has eigenvalues exp(-i mu theta) for the weights mu of i X_k
    const CMatrix& h = rep.generators[2];
    CMatrix ih(h.rows(), h.cols());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) ih(r, c) = Complex(0.0, 1.0) * h(r, c);
    const std::vector<double> weights = eigh_complex(ih).values;
    return simpson_indicator(
        [&weights](double theta) {
            double s = 0.0;
            for (double mu : weights) s += std::cos(mu * theta);
            return s;
        },
        nodes);
}

std::size_t commutant_dimension(const Su2Rep& rep) {
    return intertwiner_dimension(rep.generators, rep.generators);
}

std::size_t intertwiner_dimension_to_dual(const Su2Rep& rep) {
    const auto duals = conj_all(rep.generators);
    return intertwiner_dimension(rep.generators, duals);
}

std::optional<InvariantBilinearForm> invariant_bilinear_form(const Su2Rep& rep) {
    if (commutant_dimension(rep) != 1)
        throw PreconditionError("invariant_bilinear_form needs an irreducible representation");
    // G X + X^T G = 0  <=>  G X = (-X^T) G
    std::vector<CMatrix> minus_t;
    for (const auto& x : rep.generators) minus_t.push_back(-transpose(x));
    const CMatrix basis = null_space(intertwiner_system(rep.generators, minus_t), 1e-8);
    if (basis.cols() == 0) return std::nullopt;
    if (basis.cols() > 1) throw PreconditionError("invariant forms are not unique; representation is reducible");
    CMatrix g = unvec(basis, 0, rep.dim());
    g = g * (1.0 / norm(g));
    return InvariantBilinearForm{g, decide_symmetry(g), norm(g + transpose(g)) / 2.0, norm(g - transpose(g)) / 2.0};
}

Classification classify(const Su2Rep& rep, int nodes) {
    const std::size_t commutant = commutant_dimension(rep);
    if (commutant != 1)
        throw PreconditionError("classify needs an irreducible representation (commutant dimension " +
                                std::to_string(commutant) + ")");
    return finish_classification(fs_indicator_su2(rep, nodes), commutant, invariant_bilinear_form(rep),
                                 rep.generators);
}

TimeReversalReport time_reversal_check(Spin j, std::uint64_t seed, double tol) {
    TimeReversalReport report;
    report.spin = j;
    const Su2Rep rep = su2_spin_rep(j);
    const Classification cls = classify(rep);
    report.kind = cls.kind;
    report.fs_indicator = cls.fs_indicator;
    report.j_square_sign = cls.j_square_sign;
    const AntilinearMap& jmap = *cls.j;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (const auto& x : rep.generators) {
        CMatrix a(x.rows(), x.cols());
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c) a(r, c) = Complex(0.0, -1.0) * x(r, c);
        report.max_anticommutator = std::max(report.max_anticommutator, jmap.anticommutator_norm(a));
        for (int trial = 0; trial < 8; ++trial) {
            CVector v(rep.dim());
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = Complex(gauss(rng), gauss(rng));
            v = v * Complex(1.0 / norm(v));
            const CVector jv = jmap(v);
            const Complex lhs = inner(jv, a * jv);
            const Complex rhs = inner(v, a * v);
            report.max_expectation_defect = std::max(report.max_expectation_defect, std::abs(lhs + rhs));
        }
    }

    const double phase = j.is_half_integer() ? -1.0 : 1.0;
    report.rotation_phase_defect =
        distance(su2_spin_matrix(j, Quaternion(-1.0)), CMatrix::scalar(j.dim(), Complex(phase)));

    const int expected_sign = j.is_half_integer() ? -1 : 1;
    report.pass = report.j_square_sign == expected_sign && report.max_anticommutator < tol &&
                  report.max_expectation_defect < tol && report.rotation_phase_defect < tol;
    return report;
}

}  // namespace threefold
