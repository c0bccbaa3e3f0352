#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "octoramsey/bigint.hpp"
#include "octoramsey/errors.hpp"

namespace octoramsey {

/// Nonadjacent-form digits, least significant first: q_j in {-1,0,1} with
/// q_j * q_{j+1} = 0, and no zero at the most significant end. Zero is the
/// empty sequence. This representation of an integer is unique.
struct NafDigits {
    std::vector<std::int8_t> digits;

    friend bool operator==(const NafDigits&, const NafDigits&) = default;
};

NafDigits naf_encode(BigInt a);

/// Sum of q_j * 2^j. Throws InvalidDigits on a digit outside {-1,0,1} or on
/// two adjacent nonzero digits.
BigInt naf_decode(const NafDigits& d);

/// Most-significant-first text over {1, 0, T} with T = -1; zero -> "0".
std::string to_string(const NafDigits& d);
NafDigits naf_from_string(std::string_view text);

/// Counts of non-trivial rewrites performed while canonicalizing a signed
/// power-of-two sum: `merges` for repeated input exponents, `carries` for
/// every carry propagated by the sweep.
struct NormalizeStats {
    std::uint64_t merges = 0;
    std::uint64_t carries = 0;
};

/// Canonical signed sum of distinct powers of two: a map from exponent to
/// sign with no two stored exponents within distance 1 of each other. By
/// NAF uniqueness, map equality coincides with value equality.
class SparseDyadic {
public:
    SparseDyadic() = default;  // zero

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<BigInt, int>& terms() const noexcept { return terms_; }

    /// Materializes the value. Throws Error when an exponent is too large
    /// to hold as a plain integer.
    BigInt to_integer() const;

    /// Terms "+2^E" / "-2^E" in descending E, space separated; zero -> "0".
    std::string to_string() const;

    friend bool operator==(const SparseDyadic&, const SparseDyadic&) = default;

private:
    friend SparseDyadic sd_from_terms(std::span<const std::pair<BigInt, int>>, NormalizeStats*);
    std::map<BigInt, int> terms_;
};

/// Canonicalizes sum(sign * 2^E) over the input terms. Duplicate and
/// adjacent exponents are permitted; merges, cancellations and adjacency
/// rewrites are resolved, and counted into `stats` when given.
SparseDyadic sd_from_terms(std::span<const std::pair<BigInt, int>> terms,
                           NormalizeStats* stats = nullptr);

/// Sound and complete for value equality, by NAF uniqueness.
inline bool sd_equal(const SparseDyadic& a, const SparseDyadic& b) { return a == b; }

}  // namespace octoramsey
