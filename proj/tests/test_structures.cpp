#include <doctest.h>

#include <random>

#include "threefold/random.hpp"
#include "threefold/structures.hpp"

using namespace threefold;

namespace {

const Complex I(0.0, 1.0);

double real_commutator(const RMatrix& a, const RMatrix& b) { return norm(a * b - b * a); }

}  // namespace

TEST_SUITE("structures") {

TEST_CASE("antilinear maps") {
    std::mt19937_64 rng(20);
    const AntilinearMap j(random_matrix<Complex>(3, 3, rng));
    const AntilinearMap jp(random_matrix<Complex>(3, 3, rng));
    const auto v = random_vector<Complex>(3, rng), w = random_vector<Complex>(3, rng);
    const Complex x(0.3, -1.2), y(-2.0, 0.7);
    CHECK(distance(j(v * x + w * y), j(v) * std::conj(x) + j(w) * std::conj(y)) < 1e-12);
    // composition is linear: (J o J') v = M conj(M') v
    CHECK(distance(j.compose(jp) * v, j(jp(v))) < 1e-12);
    CHECK(AntilinearMap::conjugation(4).is_antiunitary());
    CHECK_FALSE(j.is_antiunitary());
}

TEST_CASE("complexification") {
    const auto space = complexify(3);
    CHECK(space.dim == 3);
    const auto& j = space.structure.j();
    CHECK(square_sign(j) == 1);

    std::mt19937_64 rng(21);
    const auto u = random_vector<double>(3, rng), v = random_vector<double>(3, rng);
    // J(u + v i) = u - v i
    CHECK(distance(j(complexify(u, v)), complexify(u, -v)) == 0.0);

    const double th = 0.7;
    const RMatrix rot{{std::cos(th), -std::sin(th)}, {std::sin(th), std::cos(th)}};
    CHECK(complexify(2).structure.j().commutator_norm(complexify(rot)) < 1e-12);
    CHECK(real_form_dimension(space.structure) == 3);

    CHECK(complexify(1).structure.j().matrix() == CMatrix{{1.0}});
}

TEST_CASE("underlying real space of a complex space") {
    const auto one = underlying_real(1);
    CHECK(one.dim == 2);
    CHECK(one.complex_structure == RMatrix{{0.0, -1.0}, {1.0, 0.0}});
    // multiplication by i pushes forward to J itself
    CHECK(underlying_real(CMatrix{{I}}) == one.complex_structure);

    const auto space = underlying_real(4);
    CHECK(space.dim == 8);
    CHECK(distance(space.complex_structure * space.complex_structure, RMatrix::identity(8) * -1.0) == 0.0);
    CHECK(is_unitary(space.complex_structure));

    std::mt19937_64 rng(22);
    const auto t = random_matrix<Complex>(4, 4, rng);
    const auto v = random_vector<Complex>(4, rng);
    CHECK(real_commutator(underlying_real(t), space.complex_structure) < 1e-12);
    CHECK(distance(underlying_real(t * v), underlying_real(t) * underlying_real(v)) < 1e-12);
    // the real inner product is the real part of the complex one
    const auto w = random_vector<Complex>(4, rng);
    CHECK(std::abs(inner(underlying_real(v), underlying_real(w)) - inner(v, w).real()) < 1e-12);
}

TEST_CASE("underlying complex space of a quaternionic space") {
    const auto one = underlying_complex(1);
    CHECK(one.dim == 2);
    const auto& j = one.structure.j();
    CHECK(square_sign(j) == -1);
    const CVector z{Complex(1.0, 2.0), Complex(-0.5, 3.0)};
    // J(z1, z2) = (-conj z2, conj z1)
    CHECK(distance(j(z), CVector{-std::conj(z[1]), std::conj(z[0])}) == 0.0);

    std::mt19937_64 rng(23);
    const std::size_t n = 3;
    const auto space = underlying_complex(n);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = random_vector<Quaternion>(n, rng), w = random_vector<Quaternion>(n, rng);
        // J is the image of right multiplication by j
        CHECK(distance(underlying_complex(v * Quaternion::j()), space.structure.j()(underlying_complex(v))) < 1e-12);
        // the complex inner product is the complex part of the quaternionic one
        CHECK(std::abs(inner(underlying_complex(v), underlying_complex(w)) - complex_part(inner(v, w))) < 1e-12);
        const auto t = random_matrix<Quaternion>(n, n, rng);
        CHECK(distance(underlying_complex(t * v), underlying_complex(t) * underlying_complex(v)) < 1e-11);
        CHECK(space.structure.j().commutator_norm(underlying_complex(t)) < 1e-12);
        CHECK(distance(from_underlying_complex(underlying_complex(t)), t) < 1e-14);
        CHECK(distance(from_underlying_complex(underlying_complex(v)), v) < 1e-14);
    }

    const auto ijk = quaternionic_action(space.structure);
    const RMatrix minus_one = RMatrix::identity(2 * 2 * n) * -1.0;
    for (const auto& m : ijk) CHECK(distance(m * m, minus_one) < 1e-12);
    CHECK(distance(ijk[0] * ijk[1], ijk[2]) < 1e-12);
    CHECK(distance(ijk[0] * ijk[1], ijk[1] * ijk[0] * -1.0) < 1e-12);
}

TEST_CASE("quaternification of a complex space") {
    const auto one = quaternify(1);
    CHECK(one.dim == 1);
    CHECK(one.structure(0, 0) == Quaternion::i());
    const auto space = quaternify(3);
    CHECK(space.structure * space.structure == HMatrix::identity(3) * -1.0);
    CHECK(is_unitary(space.structure));
    CHECK(quaternify_roundtrip_dimension(space) == 3);

    std::mt19937_64 rng(24);
    const auto t = random_matrix<Complex>(3, 3, rng);
    CHECK(norm(quaternify(t) * space.structure - space.structure * quaternify(t)) < 1e-12);
}

TEST_CASE("underlying real space of a quaternionic space") {
    const auto one = underlying_real_quat(1);
    CHECK(one.dim == 4);
    CHECK(one.structure.j() == right_multiplication_matrix(Quaternion::j()));
    CHECK(one.structure.k() == right_multiplication_matrix(Quaternion::k()));
    const RMatrix& j = one.structure.j();
    const RMatrix& k = one.structure.k();
    CHECK(j * k == (k * j) * -1.0);
    CHECK((j * k) * (j * k) == RMatrix::identity(4) * -1.0);

    std::mt19937_64 rng(25);
    const auto space = underlying_real_quat(3);
    CHECK(space.dim == 12);
    const auto v = random_vector<Quaternion>(3, rng);
    CHECK(distance(underlying_real_quat(v * Quaternion::j()), space.structure.j() * underlying_real_quat(v)) < 1e-12);
    CHECK(distance(underlying_real_quat(v * Quaternion::k()), space.structure.k() * underlying_real_quat(v)) < 1e-12);

    const auto t = random_matrix<Quaternion>(3, 3, rng);
    const RMatrix p = quat_to_realified_complex_basis(3);
    CHECK(distance(p * underlying_real_quat(t), underlying_real(underlying_complex(t)) * p) < 1e-12);
    CHECK(is_unitary(p));
}

TEST_CASE("quaternification of a real space") {
    const auto space = quaternify_real(2);
    CHECK(space.dim == 2);
    CHECK(space.j * space.j == HMatrix::identity(2) * -1.0);
    CHECK(space.k * space.k == HMatrix::identity(2) * -1.0);
    CHECK(space.j * space.k == (space.k * space.j) * -1.0);
    std::mt19937_64 rng(26);
    const auto t = random_matrix<double>(2, 2, rng);
    CHECK(norm(quaternify_real(t) * space.j - space.j * quaternify_real(t)) == 0.0);
}

TEST_CASE("multiplication matrices") {
    std::mt19937_64 rng(27);
    const auto x = random_scalar<Quaternion>(rng), q = random_scalar<Quaternion>(rng);
    const RVector qv{q.a, q.b, q.c, q.d};
    const auto xq = x * q, qx = q * x;
    CHECK(distance(left_multiplication_matrix(x) * qv, RVector{xq.a, xq.b, xq.c, xq.d}) < 1e-12);
    CHECK(distance(right_multiplication_matrix(x) * qv, RVector{qx.a, qx.b, qx.c, qx.d}) < 1e-12);
}

TEST_CASE("structure validation") {
    CHECK_THROWS_AS(RealStructure::create(underlying_complex(1).structure.j()), PreconditionError);
    CHECK_THROWS_AS(QuaternionicStructure::create(AntilinearMap::conjugation(2)), PreconditionError);
    CHECK_THROWS_AS(QuaternionicStructure::create(AntilinearMap::conjugation(3)), PreconditionError);
    CHECK_THROWS_AS(RealStructure::create(AntilinearMap::conjugation(2) * 2.0), PreconditionError);
    CHECK_THROWS_AS(RealPairStructure::create(RMatrix::identity(4), RMatrix::identity(4)), PreconditionError);
}

TEST_CASE("tensor products of structure maps") {
    const AntilinearMap real = AntilinearMap::conjugation(2);
    const AntilinearMap quat = underlying_complex(1).structure.j();
    const AntilinearMap maps[] = {real, quat};
    for (const auto& a : maps)
        for (const auto& b : maps) {
            const AntilinearMap t = tensor_antilinear(a, b);
            const int expected = square_sign(a) * square_sign(b);
            // exact: the Kronecker product of +-1 matrices
            CHECK(t.square() == CMatrix::identity(4) * static_cast<double>(expected));
            CHECK(t.is_antiunitary());
        }
}

TEST_CASE("kind multiplication table") {
    using enum RepKind;
    CHECK(classify_tensor(Real, Real) == Real);
    CHECK(classify_tensor(Real, Quaternionic) == Quaternionic);
    CHECK(classify_tensor(Quaternionic, Real) == Quaternionic);
    CHECK(classify_tensor(Quaternionic, Quaternionic) == Real);
    for (const RepKind k : {Real, Complex, Quaternionic}) {
        CHECK(classify_tensor(Complex, k) == Complex);
        CHECK(classify_tensor(k, Complex) == Complex);
    }
    CHECK(kind_from_sign(-1) == Quaternionic);
    CHECK_THROWS(kind_from_sign(2));
}

}  // TEST_SUITE
