#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "threefold/hilbert.hpp"
#include "threefold/random.hpp"

using namespace threefold;

TEST_SUITE("hilbert") {

TEST_CASE_TEMPLATE("inner product axioms", K, double, Complex, Quaternion) {
    std::mt19937_64 rng(10);
    for (int n = 0; n < 50; ++n) {
        const auto v = random_vector<K>(4, rng), w = random_vector<K>(4, rng), u = random_vector<K>(4, rng);
        const K x = random_scalar<K>(rng);
        // conjugate symmetry
        CHECK(magnitude(inner(v, w) - conjugate(inner(w, v))) < 1e-12);
        // linear in the second slot for the right action, conjugate-linear in the first
        CHECK(magnitude(inner(v, w * x + u) - (inner(v, w) * x + inner(v, u))) < 1e-11);
        CHECK(magnitude(inner(v * x, w) - conjugate(x) * inner(v, w)) < 1e-11);
        CHECK(real_part(inner(v, v)) > 0.0);
        CHECK(std::abs(real_part(inner(v, v)) - norm(v) * norm(v)) < 1e-11);
    }
}

TEST_CASE_TEMPLATE("adjoint is characterized by <v, T w> = <T^dagger v, w>", K, double, Complex, Quaternion) {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 30; ++n) {
        const auto t = random_matrix<K>(3, 4, rng);
        const auto v = random_vector<K>(3, rng);
        const auto w = random_vector<K>(4, rng);
        CHECK(magnitude(inner(v, t * w) - inner(adjoint(t) * v, w)) < 1e-11);
        CHECK(adjoint(adjoint(t)) == t);
    }
}

TEST_CASE_TEMPLATE("self-adjoint, skew-adjoint and unitary predicates", K, double, Complex, Quaternion) {
    std::mt19937_64 rng(12);
    const auto h = random_self_adjoint<K>(4, rng);
    const auto s = random_skew_adjoint<K>(4, rng);
    CHECK(is_self_adjoint(h));
    CHECK_FALSE(is_skew_adjoint(h));
    CHECK(is_skew_adjoint(s));
    CHECK_FALSE(is_self_adjoint(s));
    CHECK(is_unitary(KMatrix<K>::identity(4)));
    CHECK_FALSE(is_unitary(h));
    CHECK_FALSE(is_self_adjoint(random_matrix<K>(2, 3, rng)));
}

TEST_CASE_TEMPLATE("gram_schmidt", K, double, Complex, Quaternion) {
    std::mt19937_64 rng(13);
    std::vector<KVector<K>> vs;
    for (int n = 0; n < 5; ++n) vs.push_back(random_vector<K>(5, rng));
    const auto es = gram_schmidt(vs);
    REQUIRE(es.size() == 5);
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = 0; b < es.size(); ++b) {
            const double expect = a == b ? 1.0 : 0.0;
            CHECK(magnitude(inner(es[a], es[b]) - K(expect)) < 1e-12);
        }
    vs.push_back(vs[0] * random_scalar<K>(rng) + vs[1]);
    CHECK_THROWS_AS(gram_schmidt(vs), RankDeficient);
}

TEST_CASE("quaternionic scalars act on the right") {
    const HVector v{Quaternion::i()};
    const Quaternion j = Quaternion::j();
    // v j = i j = k, while j v would be -k
    CHECK((v * j)[0] == Quaternion::k());
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(inner(CVector(2), CVector(3)), ShapeError);
    CHECK_THROWS_AS(CMatrix(2, 3) * CMatrix(2, 3), ShapeError);
    CHECK_THROWS_AS(CMatrix(2, 2) + CMatrix(3, 3), ShapeError);
}

TEST_CASE("eigh_complex") {
    SUBCASE("2 x 2 against the closed form") {
        std::mt19937_64 rng(14);
        for (int n = 0; n < 50; ++n) {
            const auto h = random_self_adjoint<Complex>(2, rng);
            const auto es = eigh_complex(h);
            const auto expect = oracle::eig2(h(0, 0).real(), h(0, 1), h(1, 1).real());
            CHECK(es.values[0] == doctest::Approx(expect[0]).epsilon(1e-12));
            CHECK(es.values[1] == doctest::Approx(expect[1]).epsilon(1e-12));
        }
    }
    SUBCASE("reconstruction and orthonormality") {
        std::mt19937_64 rng(15);
        for (std::size_t d = 1; d <= 8; ++d) {
            const auto h = random_self_adjoint<Complex>(d, rng);
            const auto es = eigh_complex(h);
            CHECK(std::is_sorted(es.values.begin(), es.values.end()));
            CHECK(is_unitary(es.vectors, 1e-10));
            CMatrix diag(d, d);
            for (std::size_t k = 0; k < d; ++k) diag(k, k) = es.values[k];
            CHECK(distance(es.vectors * diag * adjoint(es.vectors), h) < 1e-10 * std::max(1.0, norm(h)));
        }
    }
    SUBCASE("Pauli matrix") {
        const CMatrix s2{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
        const auto es = eigh_complex(s2);
        CHECK(es.values[0] == doctest::Approx(-1.0));
        CHECK(es.values[1] == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(eigh_complex(CMatrix{{0.0, 1.0}, {0.0, 0.0}}), PreconditionError);
}

TEST_CASE("null space") {
    std::mt19937_64 rng(16);
    // rank 2 matrix in 4 dimensions
    const auto a = random_matrix<Complex>(4, 2, rng);
    const auto b = random_matrix<Complex>(2, 4, rng);
    const CMatrix m = a * b;
    CHECK(null_space_dimension(m) == 2);
    const CMatrix basis = null_space(m);
    CHECK(norm(m * basis) < 1e-10);
    CHECK(distance(adjoint(basis) * basis, CMatrix::identity(2)) < 1e-12);
    CHECK(null_space_dimension(CMatrix::identity(3)) == 0);
    CHECK(null_space_dimension(CMatrix(3, 3)) == 3);
}

TEST_CASE("singular values and kron") {
    const CMatrix d{{3.0, 0.0}, {0.0, -2.0}};
    const auto s = singular_values(d);
    CHECK(s[0] == doctest::Approx(3.0));
    CHECK(s[1] == doctest::Approx(2.0));
    const CMatrix k = kron(d, CMatrix::identity(2));
    CHECK(k.rows() == 4);
    CHECK(k(2, 2) == Complex(-2.0));
    CHECK(k(0, 1) == Complex(0.0));
}

}  // TEST_SUITE
