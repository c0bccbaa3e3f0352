#pragma once

#include <array>
#include <string>

#include "octoramsey/bigint.hpp"
#include "octoramsey/units.hpp"

namespace octoramsey {

/// Octonion with exact integer coefficients, coefficient of e_i at slot i.
struct BigOctonion {
    std::array<BigInt, 8> coeffs{};

    static BigOctonion zero() { return {}; }
    static BigOctonion unit(int index);
    static BigOctonion from(SignedUnit u);

    friend bool operator==(const BigOctonion&, const BigOctonion&) = default;
};

BigOctonion operator+(const BigOctonion& a, const BigOctonion& b);
BigOctonion operator-(const BigOctonion& a, const BigOctonion& b);

/// Full bilinear expansion; every cross term is routed through unit_mul.
BigOctonion oct_mul(const BigOctonion& a, const BigOctonion& b);

inline BigOctonion operator*(const BigOctonion& a, const BigOctonion& b) {
    return oct_mul(a, b);
}

/// Signed sum in ascending index order, zero coefficients omitted,
/// e.g. "-1*e0 + -6*e3"; the zero octonion renders as "0".
std::string to_string(const BigOctonion& a);

}  // namespace octoramsey
