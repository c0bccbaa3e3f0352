#include "octoramsey/octonion.hpp"

#include <sstream>

namespace octoramsey {

BigOctonion BigOctonion::unit(int index) {
    BigOctonion out;
    out.coeffs[static_cast<std::size_t>(index)] = 1;
    return out;
}

BigOctonion BigOctonion::from(SignedUnit u) {
    BigOctonion out;
    out.coeffs[static_cast<std::size_t>(u.index)] = u.sign;
    return out;
}

BigOctonion operator+(const BigOctonion& a, const BigOctonion& b) {
    BigOctonion out;
    for (std::size_t i = 0; i < 8; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
}

BigOctonion operator-(const BigOctonion& a, const BigOctonion& b) {
    BigOctonion out;
    for (std::size_t i = 0; i < 8; ++i) out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return out;
}

BigOctonion oct_mul(const BigOctonion& a, const BigOctonion& b) {
    BigOctonion out;
    for (int i = 0; i < 8; ++i) {
        if (a.coeffs[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (b.coeffs[static_cast<std::size_t>(j)].is_zero()) continue;
            const SignedUnit p = unit_mul(SignedUnit{+1, i}, SignedUnit{+1, j});
            BigInt term = a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
            if (p.sign < 0)
                out.coeffs[static_cast<std::size_t>(p.index)] -= term;
            else
                out.coeffs[static_cast<std::size_t>(p.index)] += term;
        }
    }
    return out;
}

std::string to_string(const BigOctonion& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < 8; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        os << a.coeffs[i] << "*e" << i;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace octoramsey
