#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library; matrices are plain nested vectors.

#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace oracle {

using cplx = std::complex<double>;
using Mat = std::vector<std::vector<cplx>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<cplx>(n)); }

inline Mat matmul(const Mat& a, const Mat& b) {
    Mat c(a.size(), std::vector<cplx>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline cplx trace(const Mat& a) {
    cplx t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// ---------------------------------------------------------------------------
// Fixture files, read straight from JSON
// ---------------------------------------------------------------------------

struct RawRep {
    std::string name;
    std::vector<Mat> matrices;
};

struct RawGroup {
    std::vector<std::vector<int>> mult;
    std::vector<RawRep> reps;
};

inline RawGroup read_fixture(const std::string& path) {
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    RawGroup g;
    g.mult = doc["mult"].get<std::vector<std::vector<int>>>();
    for (const auto& r : doc["reps"]) {
        RawRep rep{r["name"].get<std::string>(), {}};
        for (const auto& m : r["matrices"]) {
            Mat mat;
            for (const auto& row : m) {
                std::vector<cplx> out;
                for (const auto& x : row) out.emplace_back(x[0].get<double>(), x[1].get<double>());
                mat.push_back(out);
            }
            rep.matrices.push_back(mat);
        }
        g.reps.push_back(rep);
    }
    return g;
}

/// (1/|G|) sum_g tr(rho(g) rho(g)), one term at a time.
inline double fs_bruteforce(const RawRep& rep) {
    cplx sum = 0;
    for (const auto& m : rep.matrices) sum += trace(matmul(m, m));
    return sum.real() / static_cast<double>(rep.matrices.size());
}

/// (1/|G|) sum_g |tr rho(g)|^2; equals 1 exactly for irreducibles.
inline double character_norm(const RawRep& rep) {
    double sum = 0;
    for (const auto& m : rep.matrices) sum += std::norm(trace(m));
    return sum / static_cast<double>(rep.matrices.size());
}

// ---------------------------------------------------------------------------
// SU(2)
// ---------------------------------------------------------------------------

/// sin((2j+1) theta) / sin(theta), the Weyl character formula.
inline double weyl_character(int twice_j, double theta) {
    const double s = std::sin(theta);
    if (std::abs(s) < 1e-12) {
        // limit at theta = 0 or pi
        const double sign = std::cos(theta) > 0 ? 1.0 : ((twice_j % 2 == 0) ? 1.0 : -1.0);
        return sign * (twice_j + 1);
    }
    return std::sin((twice_j + 1) * theta) / s;
}

/// Exact indicator: chi_j(2 theta) = sum_m cos(4 m theta) and
/// (2/pi) int_0^pi cos(k theta) sin^2(theta) = [k = 0] - [|k| = 2] / 2.
inline double su2_indicator_exact(int twice_j) {
    double fs = 0.0;
    for (int twice_m = -twice_j; twice_m <= twice_j; twice_m += 2) {
        const int k = 2 * twice_m;  // 4m
        if (k == 0) fs += 1.0;
        if (k == 2 || k == -2) fs -= 0.5;
    }
    return fs;
}

/// Angular momentum J_z and J_+ in the |j, m> basis, m = j, j-1, ..., -j.
inline std::array<Mat, 3> angular_momentum(int twice_j) {
    const std::size_t d = static_cast<std::size_t>(twice_j) + 1;
    const double j = twice_j / 2.0;
    Mat jz = zeros(d), jx = zeros(d), jy = zeros(d);
    for (std::size_t a = 0; a < d; ++a) {
        const double m = j - static_cast<double>(a);
        jz[a][a] = m;
        if (a + 1 < d) {
            // <m | J+ | m - 1>
            const double c = std::sqrt(j * (j + 1) - m * (m - 1));
            jx[a][a + 1] = c / 2.0;
            jx[a + 1][a] = c / 2.0;
            jy[a][a + 1] = cplx(0, -c / 2.0);
            jy[a + 1][a] = cplx(0, c / 2.0);
        }
    }
    return {jx, jy, jz};
}

// ---------------------------------------------------------------------------
// Division algebras
// ---------------------------------------------------------------------------

/// Hamilton product on (a, b, c, d) = a + bi + cj + dk.
inline std::array<double, 4> hamilton(const std::array<double, 4>& p, const std::array<double, 4>& q) {
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

/// Octonion product from the seven Fano lines (a, b, c): e_a e_b = e_c and
/// cyclic, reversed order gives the negative.
inline std::array<double, 8> fano_product(const std::array<double, 8>& x, const std::array<double, 8>& y) {
    static const int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    // unit products: sign and index for e_a e_b
    int idx[8][8];
    double sgn[8][8];
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            if (a == 0) { idx[a][b] = b; sgn[a][b] = 1; }
            else if (b == 0) { idx[a][b] = a; sgn[a][b] = 1; }
            else if (a == b) { idx[a][b] = 0; sgn[a][b] = -1; }
        }
    for (const auto& l : lines)
        for (int r = 0; r < 3; ++r) {
            const int a = l[r], b = l[(r + 1) % 3], c = l[(r + 2) % 3];
            idx[a][b] = c; sgn[a][b] = 1;
            idx[b][a] = c; sgn[b][a] = -1;
        }
    std::array<double, 8> out{};
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) out[static_cast<std::size_t>(idx[a][b])] += sgn[a][b] * x[a] * y[b];
    return out;
}

// ---------------------------------------------------------------------------
// Linear algebra
// ---------------------------------------------------------------------------

/// exp(S) by the plain Taylor series; accurate for |S| of order 1.
inline Mat expm_series(const Mat& s, int terms = 60) {
    const std::size_t n = s.size();
    Mat result = zeros(n), term = zeros(n);
    for (std::size_t i = 0; i < n; ++i) result[i][i] = term[i][i] = 1.0;
    for (int k = 1; k < terms; ++k) {
        term = matmul(term, s);
        for (auto& row : term)
            for (auto& x : row) x /= static_cast<double>(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
    }
    return result;
}

/// Eigenvalues of a 2 x 2 self-adjoint matrix [[a, z], [conj z, d]].
inline std::array<double, 2> eig2(double a, cplx z, double d) {
    const double mean = (a + d) / 2, r = std::sqrt((a - d) * (a - d) / 4 + std::norm(z));
    return {mean - r, mean + r};
}

/// (AB + BA) / 2 for complex matrices.
inline Mat jordan_product(const Mat& a, const Mat& b) {
    const Mat ab = matmul(a, b), ba = matmul(b, a);
    Mat c = ab;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) c[i][j] = (ab[i][j] + ba[i][j]) / 2.0;
    return c;
}

}  // namespace oracle
