#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "octoramsey/errors.hpp"

namespace octoramsey {

/// A signed basis octonion: one of +-e0 .. +-e7. e0 is the multiplicative
/// identity; the basis products are stored as literal table data below.
struct SignedUnit {
    int sign = +1;   // +1 or -1
    int index = 0;   // 0..7
};

constexpr SignedUnit operator-(SignedUnit u) { return {-u.sign, u.index}; }
constexpr bool operator==(SignedUnit a, SignedUnit b) {
    return a.sign == b.sign && a.index == b.index;
}
constexpr bool operator!=(SignedUnit a, SignedUnit b) { return !(a == b); }

namespace detail {

// Basis products e_i * e_j, split into sign and index planes.
inline constexpr std::int8_t kProductSign[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
};

inline constexpr std::uint8_t kProductIndex[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};

}  // namespace detail

/// Product of two signed basis octonions, exact.
constexpr SignedUnit unit_mul(SignedUnit a, SignedUnit b) {
    return {a.sign * b.sign * detail::kProductSign[a.index][b.index],
            detail::kProductIndex[a.index][b.index]};
}

constexpr int unit_product_sign(int i, int j) { return detail::kProductSign[i][j]; }
constexpr int unit_product_index(int i, int j) { return detail::kProductIndex[i][j]; }

enum class Associator { Associates, Anti };

/// Whether e_i(e_j e_k) equals (e_i e_j)e_k or its negative. The two
/// products always land on the same basis element, so exactly one holds.
constexpr Associator associator_class(int i, int j, int k) {
    const SignedUnit lhs = unit_mul(SignedUnit{+1, i}, unit_mul(SignedUnit{+1, j}, SignedUnit{+1, k}));
    const SignedUnit rhs = unit_mul(unit_mul(SignedUnit{+1, i}, SignedUnit{+1, j}), SignedUnit{+1, k});
    return lhs.sign == rhs.sign ? Associator::Associates : Associator::Anti;
}

/// Text form: "e4" or "-e4".
std::string to_string(SignedUnit u);

/// Parses the text form above. Throws SyntaxError on anything else.
SignedUnit signed_unit_from_string(std::string_view text);

}  // namespace octoramsey
