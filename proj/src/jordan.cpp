#include "threefold/jordan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "threefold/structures.hpp"

namespace threefold {

namespace {

// Octonion slots used by each algebra's real coefficients.
std::span<const std::size_t> octonion_slots(Algebra a) {
    static constexpr std::size_t r[] = {0};
    static constexpr std::size_t c[] = {0, 1};
    static constexpr std::size_t h[] = {0, 1, 2, 4};
    static constexpr std::size_t o[] = {0, 1, 2, 3, 4, 5, 6, 7};
    switch (a) {
        case Algebra::R: return r;
        case Algebra::C: return c;
        case Algebra::H: return h;
        case Algebra::O: return o;
    }
    return r;
}

std::size_t entry_dim(Algebra a) { return static_cast<std::size_t>(real_dimension(a)); }

// Offset of the upper-triangle entry (i, j), i < j, in the coordinate vector.
std::size_t offdiag_offset(std::size_t n, std::size_t i, std::size_t j, Algebra a) {
    // pairs before row i: sum_{r < i} (n - 1 - r)
    const std::size_t before = i * (n - 1) - i * (i - 1) / 2;
    return n + (before + (j - i - 1)) * entry_dim(a);
}

void require_same_kind(const JordanElement& a, const JordanElement& b) {
    if (!(a.kind() == b.kind())) throw ShapeError("Jordan elements from different algebras");
}

void require_matrix(const JordanKind& k) {
    if (k.is_spin_factor()) throw ShapeError("operation needs a matrix Jordan algebra");
}

double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

std::size_t parse_size(std::string_view s) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw PreconditionError("bad size '" + std::string(s) + "' in algebra spec");
    return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// JordanKind
// ---------------------------------------------------------------------------

JordanKind JordanKind::hermitian(Algebra a, std::size_t n) {
    if (n == 0) throw PreconditionError("matrix Jordan algebra needs n >= 1");
    if (a == Algebra::O && n > 3) throw PreconditionError("octonionic self-adjoint matrices are Jordan only up to 3 x 3");
    return {Family::HermitianMatrix, a, n};
}

JordanKind JordanKind::spin_factor(std::size_t n) { return {Family::SpinFactor, Algebra::R, n}; }

JordanKind JordanKind::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw PreconditionError("algebra spec must look like hC:2 or spin:3");
    const std::string_view head = spec.substr(0, colon);
    const std::size_t n = parse_size(spec.substr(colon + 1));
    if (head == "spin") return spin_factor(n);
    if (head == "hR") return hermitian(Algebra::R, n);
    if (head == "hC") return hermitian(Algebra::C, n);
    if (head == "hH") return hermitian(Algebra::H, n);
    if (head == "hO") return hermitian(Algebra::O, n);
    throw PreconditionError("unknown algebra '" + std::string(head) + "'");
}

std::size_t JordanKind::dimension() const noexcept {
    if (is_spin_factor()) return n_ + 1;
    return n_ + n_ * (n_ - 1) / 2 * entry_dim(algebra_);
}

std::size_t JordanKind::rank() const noexcept {
    if (is_spin_factor()) return n_ == 0 ? 1 : 2;
    return n_;
}

std::string JordanKind::name() const {
    if (is_spin_factor()) return "spin:" + std::to_string(n_);
    return std::string("h") + algebra_name(algebra_) + ":" + std::to_string(n_);
}

// ---------------------------------------------------------------------------
// JordanElement
// ---------------------------------------------------------------------------

JordanElement::JordanElement(JordanKind kind, std::vector<double> coords) : kind_(kind), coords_(std::move(coords)) {
    if (coords_.size() != kind_.dimension())
        throw ShapeError("expected " + std::to_string(kind_.dimension()) + " coordinates for " + kind_.name());
}

JordanElement JordanElement::zero(const JordanKind& kind) {
    return {kind, std::vector<double>(kind.dimension(), 0.0)};
}

JordanElement JordanElement::unit(const JordanKind& kind) {
    std::vector<double> c(kind.dimension(), 0.0);
    if (kind.is_spin_factor()) {
        c.back() = 1.0;
    } else {
        for (std::size_t i = 0; i < kind.n(); ++i) c[i] = 1.0;
    }
    return {kind, std::move(c)};
}

JordanElement JordanElement::basis(const JordanKind& kind, std::size_t k) {
    std::vector<double> c(kind.dimension(), 0.0);
    c.at(k) = 1.0;
    return {kind, std::move(c)};
}

JordanElement JordanElement::from_matrix(const JordanKind& kind, const std::vector<Octonion>& full, double tol) {
    require_matrix(kind);
    const std::size_t n = kind.n();
    if (full.size() != n * n) throw ShapeError("from_matrix: expected an n x n matrix");
    const auto slots = octonion_slots(kind.algebra());
    const auto at = [&](std::size_t i, std::size_t j) -> const Octonion& { return full[i * n + j]; };
    std::vector<double> c(kind.dimension(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Octonion& x = at(i, j);
            if ((x - conjugate(at(j, i))).norm() > tol) throw PreconditionError("from_matrix: matrix is not self-adjoint");
            double covered = 0.0;
            for (std::size_t s : slots) covered += x[s] * x[s];
            if (x.norm_sq() - covered > tol * tol) throw PreconditionError("from_matrix: entry outside the algebra");
            if (i == j) {
                c[i] = x[0];
            } else {
                const std::size_t off = offdiag_offset(n, i, j, kind.algebra());
                for (std::size_t s = 0; s < slots.size(); ++s) c[off + s] = x[slots[s]];
            }
        }
    }
    return {kind, std::move(c)};
}

JordanElement JordanElement::from_complex(const JordanKind& kind, const CMatrix& m, double tol) {
    std::vector<Octonion> full;
    full.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Octonion o;
            o[0] = m(i, j).real();
            o[1] = m(i, j).imag();
            full.push_back(o);
        }
    return from_matrix(kind, full, tol);
}

JordanElement JordanElement::spin(std::vector<double> x, double t) {
    const JordanKind kind = JordanKind::spin_factor(x.size());
    x.push_back(t);
    return {kind, std::move(x)};
}

Octonion JordanElement::entry(std::size_t i, std::size_t j) const {
    require_matrix(kind_);
    if (i == j) return Octonion(coords_[i]);
    const bool upper = i < j;
    const std::size_t off = offdiag_offset(kind_.n(), std::min(i, j), std::max(i, j), kind_.algebra());
    const auto slots = octonion_slots(kind_.algebra());
    Octonion x;
    for (std::size_t s = 0; s < slots.size(); ++s) x[slots[s]] = coords_[off + s];
    return upper ? x : conjugate(x);
}

std::vector<Octonion> JordanElement::full_matrix() const {
    const std::size_t n = kind_.n();
    std::vector<Octonion> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = entry(i, j);
    return out;
}

CMatrix JordanElement::to_complex_matrix() const {
    require_matrix(kind_);
    if (kind_.algebra() != Algebra::R && kind_.algebra() != Algebra::C)
        throw Unsupported("to_complex_matrix needs h_n(R) or h_n(C)");
    const std::size_t n = kind_.n();
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Octonion x = entry(i, j);
            m(i, j) = Complex(x[0], x[1]);
        }
    return m;
}

HMatrix JordanElement::to_quaternion_matrix() const {
    require_matrix(kind_);
    if (kind_.algebra() == Algebra::O) throw Unsupported("to_quaternion_matrix: octonionic entries");
    const std::size_t n = kind_.n();
    HMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Octonion x = entry(i, j);
            m(i, j) = Quaternion(x[0], x[1], x[2], x[4]);
        }
    return m;
}

std::vector<double> JordanElement::spin_vector() const {
    if (!kind_.is_spin_factor()) throw ShapeError("spin_vector on a matrix algebra");
    return {coords_.begin(), coords_.end() - 1};
}

double JordanElement::spin_time() const {
    if (!kind_.is_spin_factor()) throw ShapeError("spin_time on a matrix algebra");
    return coords_.back();
}

JordanElement JordanElement::operator+(const JordanElement& o) const {
    require_same_kind(*this, o);
    JordanElement r(*this);
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

JordanElement JordanElement::operator-(const JordanElement& o) const {
    require_same_kind(*this, o);
    JordanElement r(*this);
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
}

JordanElement JordanElement::operator-() const { return *this * -1.0; }

JordanElement JordanElement::operator*(double s) const {
    JordanElement r(*this);
    for (auto& x : r.coords_) x *= s;
    return r;
}

double norm(const JordanElement& a) { return std::sqrt(dot(a.coords(), a.coords())); }

// ---------------------------------------------------------------------------
// Product, identities, trace
// ---------------------------------------------------------------------------

JordanElement jordan_product(const JordanElement& a, const JordanElement& b) {
    require_same_kind(a, b);
    const JordanKind& kind = a.kind();
    if (kind.is_spin_factor()) {
        const std::size_t n = kind.n();
        const auto x = a.coords(), y = b.coords();
        const double t = x[n], s = y[n];
        std::vector<double> c(n + 1);
        for (std::size_t i = 0; i < n; ++i) c[i] = t * y[i] + s * x[i];
        c[n] = dot(x.first(n), y.first(n)) + t * s;
        return {kind, std::move(c)};
    }
    const std::size_t n = kind.n();
    const auto fa = a.full_matrix(), fb = b.full_matrix();
    const auto sym_entry = [&](std::size_t i, std::size_t j) {
        Octonion acc;
        for (std::size_t k = 0; k < n; ++k) acc += fa[i * n + k] * fb[k * n + j] + fb[i * n + k] * fa[k * n + j];
        return acc * 0.5;
    };
    const auto slots = octonion_slots(kind.algebra());
    std::vector<double> c(kind.dimension(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = sym_entry(i, i)[0];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Octonion x = sym_entry(i, j);
            const std::size_t off = offdiag_offset(n, i, j, kind.algebra());
            for (std::size_t s = 0; s < slots.size(); ++s) c[off + s] = x[slots[s]];
        }
    }
    return {kind, std::move(c)};
}

double check_jordan_identity(const JordanElement& a, const JordanElement& b) {
    const JordanElement a2 = jordan_product(a, a);
    return norm(jordan_product(jordan_product(a2, b), a) - jordan_product(a2, jordan_product(b, a)));
}

double power_associativity_residual(const JordanElement& a) {
    const JordanElement a2 = jordan_product(a, a);
    return norm(jordan_product(a2, a2) - jordan_product(a, jordan_product(a, a2)));
}

RMatrix left_multiplication(const JordanElement& a) {
    const std::size_t d = a.kind().dimension();
    RMatrix l(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const JordanElement col = jordan_product(a, JordanElement::basis(a.kind(), k));
        for (std::size_t r = 0; r < d; ++r) l(r, k) = col.coords()[r];
    }
    return l;
}

double trace(const JordanElement& a) {
    const std::size_t d = a.kind().dimension();
    double t = 0.0;
    for (std::size_t k = 0; k < d; ++k) t += jordan_product(a, JordanElement::basis(a.kind(), k)).coords()[k];
    return t;
}

double trace_inner(const JordanElement& a, const JordanElement& b) { return trace(jordan_product(a, b)); }

double reduced_trace(const JordanElement& a) {
    const JordanKind& k = a.kind();
    return trace(a) * static_cast<double>(k.rank()) / static_cast<double>(k.dimension());
}

// ---------------------------------------------------------------------------
// Order structure
// ---------------------------------------------------------------------------

std::vector<double> eigenvalues(const JordanElement& a) {
    const JordanKind& kind = a.kind();
    if (kind.is_spin_factor()) {
        const double t = a.spin_time();
        if (kind.n() == 0) return {t};
        const auto x = a.spin_vector();
        const double r = std::sqrt(dot(x, x));
        return {t - r, t + r};
    }
    switch (kind.algebra()) {
        case Algebra::R:
        case Algebra::C: return eigh_complex(a.to_complex_matrix()).values;
        case Algebra::H: {
            const auto doubled = eigh_complex(underlying_complex(a.to_quaternion_matrix())).values;
            std::vector<double> out;
            const double scale = std::max(1.0, norm(a));
            for (std::size_t k = 0; k + 1 < doubled.size(); k += 2) {
                if (std::abs(doubled[k] - doubled[k + 1]) > 1e-8 * scale)
                    throw InternalInconsistency("quaternionic eigenvalues did not come in pairs");
                out.push_back(0.5 * (doubled[k] + doubled[k + 1]));
            }
            return out;
        }
        case Algebra::O: break;
    }
    throw Unsupported("no eigenvalue routine for octonionic matrices");
}

bool is_positive(const JordanElement& a) {
    if (a.kind().is_exceptional()) throw Unsupported("positivity is not implemented for octonionic matrices");
    if (a.kind().is_spin_factor()) {
        const double t = a.spin_time();
        const auto x = a.spin_vector();
        return t > 0.0 && t * t - dot(x, x) > 0.0;
    }
    return eigenvalues(a).front() > 0.0;
}

bool is_nonnegative(const JordanElement& a, double tol) {
    if (a.kind().is_exceptional()) throw Unsupported("positivity is not implemented for octonionic matrices");
    return eigenvalues(a).front() >= -tol;
}

double dual_cone_margin(const JordanElement& a, std::span<const JordanElement> samples) {
    if (samples.empty()) throw PreconditionError("dual_cone_margin needs at least one sample");
    double best = trace_inner(a, samples.front());
    for (const auto& b : samples.subspan(1)) best = std::min(best, trace_inner(a, b));
    return best;
}

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

JordanState JordanState::create(JordanElement rho, double tol) {
    if (std::abs(reduced_trace(rho) - 1.0) > tol) throw PreconditionError("state must have unit trace");
    if (rho.kind().is_exceptional()) {
        const JordanElement one = JordanElement::unit(rho.kind());
        const double c = rho.coords()[0];
        if (c <= 0.0 || norm(rho - one * c) > tol)
            throw Unsupported("cannot decide positivity of an octonionic state other than a multiple of 1");
    } else if (!is_nonnegative(rho, tol)) {
        throw PreconditionError("state must be nonnegative");
    }
    return JordanState(std::move(rho));
}

double state_eval(const JordanState& state, const JordanElement& a) {
    return reduced_trace(jordan_product(state.density(), a));
}

JordanState max_ignorance(const JordanKind& kind) {
    const JordanElement one = JordanElement::unit(kind);
    return JordanState::create(one * (1.0 / reduced_trace(one)));
}

// ---------------------------------------------------------------------------
// h_2(K) and spin factors
// ---------------------------------------------------------------------------

H2SpinIsomorphism::H2SpinIsomorphism(Algebra a)
    : algebra_(a),
      source_(JordanKind::hermitian(a, 2)),
      target_(JordanKind::spin_factor(1 + static_cast<std::size_t>(real_dimension(a)))) {}

JordanElement H2SpinIsomorphism::operator()(const JordanElement& a) const {
    if (!(a.kind() == source_)) throw ShapeError("h2_spin_isomorphism: element is not in " + source_.name());
    const auto c = a.coords();
    const std::size_t d = entry_dim(algebra_);
    // coords: (d0, d1, u) with u the (0, 1) entry; z = conj(u)
    std::vector<double> x(1 + d);
    x[0] = 0.5 * (c[0] - c[1]);
    for (std::size_t s = 0; s < d; ++s) x[1 + s] = s == 0 ? c[2] : -c[2 + s];
    return JordanElement::spin(std::move(x), 0.5 * (c[0] + c[1]));
}

JordanElement H2SpinIsomorphism::inverse(const JordanElement& b) const {
    if (!(b.kind() == target_)) throw ShapeError("h2_spin_isomorphism: element is not in " + target_.name());
    const auto c = b.coords();
    const std::size_t d = entry_dim(algebra_);
    const double t = c.back();
    std::vector<double> out(2 + d);
    out[0] = t + c[0];
    out[1] = t - c[0];
    for (std::size_t s = 0; s < d; ++s) out[2 + s] = s == 0 ? c[1] : -c[1 + s];
    return {source_, std::move(out)};
}

H2SpinIsomorphism h2_spin_isomorphism(Algebra a) { return H2SpinIsomorphism(a); }

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

JordanElement random_element(const JordanKind& kind, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<double> c(kind.dimension());
    for (auto& x : c) x = gauss(rng);
    return {kind, std::move(c)};
}

JordanElement random_positive(const JordanKind& kind, std::mt19937_64& rng) {
    const JordanElement a = random_element(kind, rng);
    std::uniform_real_distribution<double> scale(0.0, 1.0);
    const double s = 1.0 - scale(rng);  // (0, 1]
    return JordanElement::unit(kind) + jordan_product(a, a) * s;
}

}  // namespace threefold
