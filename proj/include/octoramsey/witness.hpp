#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "octoramsey/naf.hpp"
#include "octoramsey/octonion.hpp"
#include "octoramsey/signs.hpp"
#include "octoramsey/term.hpp"

namespace octoramsey {

/// Largest n for which the witness-sequence element is materialized as a
/// plain integer octonion; slot 7 of n=1 is already a 65536-bit number.
/// The symbolic representation below has no such cap.
inline constexpr std::uint32_t kBigintIndexCap = 1;

/// Default leaf cap for the 8^N symbolic enumeration.
inline constexpr std::size_t kDefaultLeafCap = 6;

/// Element n of the witness sequence: coefficient 2^(2^(8n+1+i)) at slot i.
/// Throws CapExceeded for n > kBigintIndexCap.
BigOctonion bad_term(std::uint32_t n);

/// Octonion whose eight coefficients are canonical signed power-of-two
/// sums; the exact value of an orderly term under the witness assignment.
struct SymbolicOctonion {
    std::array<SparseDyadic, 8> coeffs;

    friend bool operator==(const SymbolicOctonion&, const SymbolicOctonion&) = default;
};

/// Eight lines "e<j>: <coefficient>".
std::string to_lines(const SymbolicOctonion& v);

/// Exact value of an orderly term under x_n -> (witness element n): for
/// each unit assignment alpha the term contributes sign * 2^E_alpha to the
/// coefficient of the basis element it evaluates to, with
/// E_alpha = sum_i 2^(8 n_i + 1 + alpha_i). Throws NotOrderly, CapExceeded.
SymbolicOctonion symbolic_eval(const Term& t, std::size_t leaf_cap = kDefaultLeafCap,
                               NormalizeStats* stats = nullptr);

/// Exponent E_alpha above, for the term's variable indices and one alpha.
BigInt alpha_exponent(std::span<const std::uint32_t> indices,
                      std::span<const std::uint8_t> alpha);

/// Direct big-integer evaluation after substituting materialized witness
/// elements; the independent oracle for symbolic_eval. Requires all
/// variable indices <= kBigintIndexCap.
BigOctonion bigint_eval(const Term& t);

enum class ClaimVerdict { Distinct, Equal };
enum class ClaimCase { SameString, DifferentVars };

struct WitnessReport {
    Term left;
    Term right;
    ClaimVerdict verdict;
    int slot = -1;  // separating coefficient slot when Distinct
    ClaimCase kase = ClaimCase::SameString;

    /// `CLAIM <t> VS <t'> -> DISTINCT slot=e<j> case=<...>` (one line).
    std::string line() const;
};

/// Compares (t1(t2t3)) against ((t1t2)t3) for a shared chain t1 < t2 < t3
/// under the precedence order. The two bracketings always share their
/// variable string, so a Distinct verdict must separate at slot 4.
/// Throws PrecedenceViolated, NotOrderly, CapExceeded.
WitnessReport claim_check(const Term& t1, const Term& t2, const Term& t3,
                          std::size_t leaf_cap = kDefaultLeafCap);

/// Generalized form over two independent chains: (a(bc)) is built from the
/// first chain, ((ab)c) from the second. When the two composites coincide
/// as terms their values are equal; callers that sweep the claim skip
/// those pairs.
WitnessReport claim_check_pair(const std::array<Term, 3>& right_nested_chain,
                               const std::array<Term, 3>& left_nested_chain,
                               std::size_t leaf_cap = kDefaultLeafCap);

/// Every chain (t1, t2, t3) of orderly terms, pairwise increasing under
/// the precedence order, with variable indices < index_bound and total
/// leaf count <= leaf_cap. Deterministic order.
std::vector<std::array<Term, 3>> enumerate_chains(std::uint32_t index_bound,
                                                  std::size_t leaf_cap);

/// Values of all right-nested chain products within the bounds; the
/// bounded realization of the distinguished value set.
std::vector<SymbolicOctonion> bounded_x_values(std::uint32_t index_bound,
                                               std::size_t leaf_cap);

/// Membership in the bounded value set above. Bounded only: a `false`
/// says no witness exists within these bounds.
bool in_x(const SymbolicOctonion& v, std::uint32_t index_bound, std::size_t leaf_cap);

/// All values of bracketed products over nonempty subsequences of the
/// chain, using at most `depth` of its terms. Order: subsequence bitmask
/// ascending, bracketing enumeration order within a subsequence.
std::vector<SymbolicOctonion> fr_prefix(std::span<const Term> chain, std::size_t depth,
                                        std::size_t leaf_cap = kDefaultLeafCap);

/// Shared-chain claim sweep over enumerate_chains; runs in parallel,
/// reports in enumeration order.
std::vector<WitnessReport> claim_sweep(std::uint32_t index_bound, std::size_t leaf_cap);

struct PairSweepResult {
    std::vector<WitnessReport> reports;
    std::size_t skipped_identical = 0;  // coincident composite terms
};

/// Independent-chain sweep (both readings of the claim): every ordered
/// pair of chains, left composite right-nested vs right composite
/// left-nested, skipping pairs whose composites are the same term.
PairSweepResult claim_pair_sweep(std::uint32_t index_bound, std::size_t leaf_cap);

}  // namespace octoramsey
