#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cli.hpp"
#include "oracles.hpp"
#include "threefold/random.hpp"
#include "threefold/representations.hpp"
#include "threefold/spectra.hpp"

using namespace threefold;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

const FiniteGroupRep& find_rep(const cli::GroupFile& f, const std::string& name) {
    for (const auto& r : f.reps)
        if (r.name == name) return r;
    throw std::runtime_error("no rep " + name);
}

// Haar-random unitary from the QR of a Gaussian matrix (Gram-Schmidt on columns).
CMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
    std::vector<CVector> cols;
    for (std::size_t k = 0; k < n; ++k) cols.push_back(random_vector<Complex>(n, rng));
    const auto es = gram_schmidt(cols);
    CMatrix u(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) u(r, c) = es[c][r];
    return u;
}

Complex trace_of(const CMatrix& m) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

CMatrix to_cmatrix(const oracle::Mat& m) {
    CMatrix out(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
    return out;
}

}  // namespace

TEST_SUITE("representations") {

TEST_CASE("group tables") {
    CHECK(FiniteGroup::cyclic(5).order() == 5);
    CHECK(FiniteGroup::cyclic(5).inverse(2) == 3);
    // not closed
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 2}}), ValidationError);
    // no identity
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), ValidationError);
    // a Latin square that is not associative
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    ValidationError);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), ValidationError);
}

TEST_CASE("FS indicator of every fixture rep equals the brute-force sum") {
    for (const char* name : {"z3", "z5", "s3", "q8", "d4"}) {
        const auto raw = oracle::read_fixture(fixture(name));
        const auto file = cli::load_group_file(fixture(name));
        REQUIRE(raw.reps.size() == file.reps.size());
        for (std::size_t k = 0; k < raw.reps.size(); ++k) {
            INFO(name << "/" << raw.reps[k].name);
            CHECK(std::abs(fs_indicator_finite(file.reps[k]) - oracle::fs_bruteforce(raw.reps[k])) < 1e-12);
            // Schur: irreducible iff the character has norm 1 iff the commutant is C
            const bool irreducible = std::abs(oracle::character_norm(raw.reps[k]) - 1.0) < 1e-9;
            CHECK((commutant_dimension(file.reps[k]) == 1) == irreducible);
        }
    }
}

TEST_CASE("fixture classifications") {
    const auto q8 = cli::load_group_file(fixture("q8"));
    const auto s3 = cli::load_group_file(fixture("s3"));
    const auto z3 = cli::load_group_file(fixture("z3"));

    const auto spinor = classify(find_rep(q8, "spinor"));
    CHECK(spinor.kind == RepKind::Quaternionic);
    CHECK(std::abs(spinor.fs_indicator + 1.0) < 1e-10);
    CHECK(spinor.j_square_sign == -1);
    CHECK(spinor.form->symmetry == FormSymmetry::Antisymmetric);

    const auto standard = classify(find_rep(s3, "standard"));
    CHECK(standard.kind == RepKind::Real);
    CHECK(std::abs(standard.fs_indicator - 1.0) < 1e-10);
    CHECK(standard.j_square_sign == 1);

    const auto chi = classify(find_rep(z3, "chi1"));
    CHECK(chi.kind == RepKind::Complex);
    CHECK(std::abs(chi.fs_indicator) < 1e-10);
    CHECK_FALSE(chi.form.has_value());
    CHECK_FALSE(chi.j.has_value());
    CHECK(intertwiner_dimension_to_dual(find_rep(z3, "chi1")) == 0);
    CHECK(intertwiner_dimension_to_dual(find_rep(q8, "spinor")) == 1);
}

TEST_CASE("structure maps satisfy the contract") {
    for (const char* name : {"z3", "z5", "s3", "q8", "d4"}) {
        const auto file = cli::load_group_file(fixture(name));
        for (const auto& rep : file.reps) {
            if (commutant_dimension(rep) != 1) continue;
            INFO(name << "/" << rep.name);
            const auto c = classify(rep);
            if (!c.j) continue;
            const AntilinearMap& j = *c.j;
            CHECK(j.antiunitarity_defect() < 1e-9);
            for (const auto& m : rep.matrices) CHECK(j.commutator_norm(m) < 1e-9);
            const double sign = c.form->symmetry == FormSymmetry::Symmetric ? 1.0 : -1.0;
            CHECK(distance(j.square(), CMatrix::identity(rep.dim) * sign) < 1e-9);
            CHECK(c.form->losing_class_norm() < 1e-10);
        }
    }
}

TEST_CASE("classification is invariant under unitary change of basis") {
    std::mt19937_64 rng(30);
    const auto q8 = cli::load_group_file(fixture("q8"));
    const auto s3 = cli::load_group_file(fixture("s3"));
    for (const auto* rep : {&find_rep(q8, "spinor"), &find_rep(s3, "standard")}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto moved = conjugated(*rep, random_unitary(rep->dim, rng));
            CHECK(validate(moved).ok());
            const auto a = classify(*rep), b = classify(moved);
            CHECK(a.kind == b.kind);
            CHECK(std::abs(a.fs_indicator - b.fs_indicator) < 1e-10);
            CHECK(a.j_square_sign == b.j_square_sign);
        }
    }
}

TEST_CASE("FS indicator is additive and reducible input is refused") {
    const auto d4 = cli::load_group_file(fixture("d4"));
    const auto& standard = find_rep(d4, "standard");
    const auto& det = find_rep(d4, "det");
    const auto sum = direct_sum(standard, det);
    CHECK(std::abs(fs_indicator_finite(sum) - fs_indicator_finite(standard) - fs_indicator_finite(det)) < 1e-12);
    CHECK(std::abs(fs_indicator_finite(find_rep(d4, "standard+det")) - 2.0) < 1e-12);
    CHECK(commutant_dimension(sum) == 2);
    CHECK_THROWS_AS(classify(sum), PreconditionError);
    CHECK_THROWS_AS(invariant_bilinear_form(sum), PreconditionError);

    const auto z3 = cli::load_group_file(fixture("z3"));
    const auto& chi = find_rep(z3, "chi1");
    // chi + conj(chi) is real as a whole: indicator 0 + 0, but self-dual
    const auto both = direct_sum(chi, dual(chi));
    CHECK(std::abs(fs_indicator_finite(both)) < 1e-12);
    CHECK(intertwiner_dimension_to_dual(both) == 2);
}

TEST_CASE("invalid representations") {
    const auto z3 = cli::load_group_file(fixture("z3"));
    FiniteGroupRep bad = find_rep(z3, "chi1");
    bad.matrices[1] = bad.matrices[1] * 2.0;
    CHECK_FALSE(validate(bad).ok());
    CHECK_THROWS_AS(fs_indicator_finite(bad), PreconditionError);
    CHECK_THROWS_AS(classify(bad), PreconditionError);

    FiniteGroupRep wrong_law = find_rep(z3, "chi1");
    std::swap(wrong_law.matrices[1], wrong_law.matrices[0]);
    CHECK(validate(wrong_law).problem == "matrices do not respect the group law");

    FiniteGroupRep short_rep = find_rep(z3, "chi1");
    short_rep.matrices.pop_back();
    CHECK_FALSE(validate(short_rep).ok());
}

TEST_CASE("structure_map refuses a degenerate form") {
    const InvariantBilinearForm form{CMatrix{{1.0, 0.0}, {0.0, 0.0}}, FormSymmetry::Symmetric, 1.0, 0.0};
    const std::vector<CMatrix> action{CMatrix::identity(2)};
    CHECK_THROWS_AS(structure_map(form, action), DegenerateForm);
}

// ---------------------------------------------------------------------------
// SU(2)
// ---------------------------------------------------------------------------

TEST_CASE("spin bookkeeping") {
    CHECK(Spin::from_double(1.5).twice() == 3);
    CHECK(Spin::from_double(1.5).dim() == 4);
    CHECK(Spin::from_double(2).is_half_integer() == false);
    CHECK_THROWS_AS(Spin::from_double(0.3), PreconditionError);
    CHECK_THROWS_AS(Spin::from_double(-1), PreconditionError);
}

TEST_CASE("characters follow the Weyl formula") {
    for (int t = 0; t <= 10; ++t)
        for (double theta : {0.0, 0.3, 1.0, 2.2, std::numbers::pi / 2, 3.0, std::numbers::pi})
            CHECK(su2_character(Spin(t), theta) == doctest::Approx(oracle::weyl_character(t, theta)).epsilon(1e-12));
}

TEST_CASE("FS indicator of spin j against the exact integral") {
    for (int t = 0; t <= 10; ++t) {
        const double exact = oracle::su2_indicator_exact(t);
        CHECK(exact == (t % 2 == 0 ? 1.0 : -1.0));
        CHECK(std::abs(fs_indicator_su2(Spin(t)) - exact) < 1e-6);
        CHECK(std::abs(fs_indicator_su2(su2_spin_rep(Spin(t))) - exact) < 1e-6);
    }
    // even node counts are rounded up, so both give the same rule
    CHECK(fs_indicator_su2(Spin(3), 100) == fs_indicator_su2(Spin(3), 101));
}

TEST_CASE("spin-j generators match the angular momentum operators") {
    for (int t = 0; t <= 8; ++t) {
        const Spin j(t);
        const Su2Rep rep = su2_spin_rep(j);
        const auto ref = oracle::angular_momentum(t);
        const double jj = j.value() * (j.value() + 1.0);
        // sum X_k^2 = -4 j(j+1)
        CMatrix casimir(j.dim(), j.dim());
        for (const auto& x : rep.generators) {
            CHECK(is_skew_adjoint(x));
            casimir = casimir + x * x;
        }
        CHECK(distance(casimir, CMatrix::identity(j.dim()) * (-4.0 * jj)) < 1e-10 * (1 + jj));
        // the oracle's J_z has the same spectrum as i X_3 / 2
        CMatrix h(j.dim(), j.dim());
        for (std::size_t r = 0; r < j.dim(); ++r)
            for (std::size_t c = 0; c < j.dim(); ++c) h(r, c) = Complex(0.0, 0.5) * rep.generators[2](r, c);
        const auto mine = eigh_complex(h).values;
        const auto theirs = eigh_complex(to_cmatrix(ref[2])).values;
        for (std::size_t k = 0; k < mine.size(); ++k) CHECK(std::abs(std::abs(mine[k]) - std::abs(theirs[k])) < 1e-10);
        // oracle commutation [J_x, J_y] = i J_z has a scaled analogue [X_1, X_2] = +-2 X_3
        const CMatrix comm = rep.generators[0] * rep.generators[1] - rep.generators[1] * rep.generators[0];
        CHECK(std::min(distance(comm, rep.generators[2] * 2.0), distance(comm, rep.generators[2] * -2.0)) < 1e-10 * (1 + jj));
    }
}

TEST_CASE("spin-j matrices form a unitary representation") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> g;
    const auto unit = [&] {
        Quaternion q(g(rng), g(rng), g(rng), g(rng));
        return q * (1.0 / q.norm());
    };
    for (int t = 0; t <= 6; ++t) {
        const Spin j(t);
        const Quaternion p = unit(), q = unit();
        const CMatrix rp = su2_spin_matrix(j, p), rq = su2_spin_matrix(j, q);
        CHECK(is_unitary(rp, 1e-10));
        CHECK(distance(su2_spin_matrix(j, p * q), rp * rq) < 1e-10);
        // the one-parameter subgroup cos(s) + i sin(s) is generated by X_1
        const double s = 0.37;
        const Quaternion along_i(std::cos(s), std::sin(s), 0.0, 0.0);
        oracle::Mat x(j.dim(), std::vector<oracle::cplx>(j.dim()));
        for (std::size_t r = 0; r < j.dim(); ++r)
            for (std::size_t c = 0; c < j.dim(); ++c) x[r][c] = s * su2_spin_rep(j).generators[0](r, c);
        CHECK(distance(su2_spin_matrix(j, along_i), to_cmatrix(oracle::expm_series(x))) < 1e-10);
        // the character of the group element matches
        CHECK(std::abs(trace_of(su2_spin_matrix(j, along_i)).real() - su2_character(j, s)) < 1e-10);
    }
}

TEST_CASE("the three-fold table for SU(2)") {
    for (int t = 0; t <= 10; ++t) {
        const auto c = classify(su2_spin_rep(Spin(t)));
        CHECK(c.kind == (t % 2 == 0 ? RepKind::Real : RepKind::Quaternionic));
        CHECK(c.j_square_sign == (t % 2 == 0 ? 1 : -1));
        CHECK(c.commutant_dim == 1);
        CHECK(c.form->losing_class_norm() < 1e-10);
    }
}

TEST_CASE("tensor products of spin representations follow the sign rule") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            const auto expected = classify_tensor(a % 2 ? RepKind::Quaternionic : RepKind::Real,
                                                  b % 2 ? RepKind::Quaternionic : RepKind::Real);
            const auto parts = isotypic_components(tensor(su2_spin_rep(Spin(a)), su2_spin_rep(Spin(b))));
            // Clebsch-Gordan: |j - j'|, ..., j + j'
            CHECK(parts.size() == static_cast<std::size_t>(std::min(a, b) + 1));
            for (const auto& p : parts) {
                CHECK(p.rep.dim() == p.spin.dim());
                CHECK(classify(p.rep).kind == expected);
            }
        }
    // n-th tensor power of spin 1/2 alternates
    Su2Rep power = su2_spin_rep(Spin(1));
    for (int n = 2; n <= 4; ++n) {
        power = tensor(power, su2_spin_rep(Spin(1)));
        for (const auto& p : isotypic_components(power)) {
            if (p.rep.dim() != p.spin.dim()) continue;  // multiplicity > 1
            CHECK(classify(p.rep).kind == (n % 2 == 0 ? RepKind::Real : RepKind::Quaternionic));
        }
    }
}

TEST_CASE("time reversal") {
    for (int t = 0; t <= 10; ++t) {
        const auto r = time_reversal_check(Spin(t), 7);
        INFO("2j = " << t);
        CHECK(r.pass);
        CHECK(r.j_square_sign == (t % 2 == 0 ? 1 : -1));
        CHECK(r.max_anticommutator < 1e-8);
        CHECK(r.rotation_phase_defect < 1e-10);
    }
}

}  // TEST_SUITE
