#include "threefold/division_algebras.hpp"

#include <ostream>

namespace threefold {

static_assert(detail::kOctonionTable[1][2].index == 4 && detail::kOctonionTable[1][2].sign == 1);
static_assert(detail::kOctonionTable[2][1].index == 4 && detail::kOctonionTable[2][1].sign == -1);
static_assert(detail::kOctonionTable[7][1].index == 3 && detail::kOctonionTable[7][1].sign == 1);

const char* algebra_name(Algebra a) noexcept {
    switch (a) {
        case Algebra::R: return "R";
        case Algebra::C: return "C";
        case Algebra::H: return "H";
        case Algebra::O: return "O";
    }
    return "?";
}

Quaternion Quaternion::inv() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw DivisionByZero("inverse of the zero quaternion");
    return conj() / n2;
}

Octonion Octonion::inv() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw DivisionByZero("inverse of the zero octonion");
    return conj() / n2;
}

double inverse(double x) {
    if (x == 0.0) throw DivisionByZero("inverse of zero");
    return 1.0 / x;
}

Complex inverse(const Complex& z) {
    const double n2 = abs_sq(z);
    if (n2 == 0.0) throw DivisionByZero("inverse of the zero complex number");
    return std::conj(z) / n2;
}

Quaternion inverse(const Quaternion& q) { return q.inv(); }
Octonion inverse(const Octonion& o) { return o.inv(); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.a << " + " << q.b << "i + " << q.c << "j + " << q.d << "k)";
}

std::ostream& operator<<(std::ostream& os, const Octonion& o) {
    os << '(' << o.e[0];
    for (std::size_t k = 1; k < 8; ++k) os << " + " << o.e[k] << "e" << k;
    return os << ')';
}

}  // namespace threefold
