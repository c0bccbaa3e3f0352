#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "octoramsey/term.hpp"

namespace octoramsey {

/// Value of a ground term computed through its right-associative form:
/// the bracketing is peeled off recursively while a running sign records
/// each reassociation step. Agrees exactly with eval_units; the two share
/// only the basis product table, not the evaluation route.
SignedUnit right_assoc_normalize(const Term& t);

/// For an orderly term with N variable leaves: all 8^N unit assignments,
/// bucketed by the basis element the term evaluates to. buckets[j] holds
/// (alpha, sign) pairs with alpha in lexicographic order, meaning the term
/// under alpha evaluates to sign * e_j. The eight key sets partition
/// {0..7}^N; key sets depend only on the underlying variable string.
struct LambdaSets {
    std::array<std::vector<std::pair<std::vector<std::uint8_t>, int>>, 8> buckets;
    std::size_t arity = 0;
};

LambdaSets lambda_sets(const Term& t);

/// Golden-file form: one line per entry, `e<j> <alpha comma-list> <+|->`,
/// lexicographically sorted.
std::string to_lines(const LambdaSets& ls);

/// For distinct orderly terms over the same variable string, constructs an
/// assignment into {e0..e7} under which the two terms evaluate to +-e4 with
/// opposite signs. Throws EqualTerms / NotSameSkeleton on bad input.
Assignment distinguish(const Term& t, const Term& u);

}  // namespace octoramsey
