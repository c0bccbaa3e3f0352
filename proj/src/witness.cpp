#include "octoramsey/witness.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "octoramsey/parallel.hpp"

namespace octoramsey {

namespace {

void require_chain(const Term& t1, const Term& t2, const Term& t3) {
    for (const Term* t : {&t1, &t2, &t3})
        if (!is_orderly(*t)) throw NotOrderly("chain terms must be orderly");
    if (!precedes(t1, t2) || !precedes(t2, t3))
        throw PrecedenceViolated("chain must be strictly increasing");
}

WitnessReport compare_claim(Term left, Term right, std::size_t leaf_cap) {
    const SymbolicOctonion a = symbolic_eval(left, leaf_cap);
    const SymbolicOctonion b = symbolic_eval(right, leaf_cap);
    WitnessReport report{std::move(left), std::move(right), ClaimVerdict::Equal, -1,
                         ClaimCase::SameString};
    report.kase = (var_indices(report.left) == var_indices(report.right))
                      ? ClaimCase::SameString
                      : ClaimCase::DifferentVars;
    if (a == b) return report;
    report.verdict = ClaimVerdict::Distinct;
    const int preferred = (report.kase == ClaimCase::SameString) ? 4 : 0;
    if (a.coeffs[static_cast<std::size_t>(preferred)] != b.coeffs[static_cast<std::size_t>(preferred)]) {
        report.slot = preferred;
    } else {
        for (int j = 0; j < 8; ++j)
            if (a.coeffs[static_cast<std::size_t>(j)] != b.coeffs[static_cast<std::size_t>(j)]) {
                report.slot = j;
                break;
            }
    }
    return report;
}

// Splits of `count` leaves into three nonempty consecutive blocks, in
// lexicographic order of (first, second) block sizes.
std::vector<std::array<std::size_t, 3>> block_splits(std::size_t count) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t a = 1; a + 2 <= count; ++a)
        for (std::size_t b = 1; a + b + 1 <= count; ++b)
            out.push_back({a, b, count - a - b});
    return out;
}

// Strictly increasing index tuples of the given length drawn from
// [0, bound), in lexicographic order.
void index_tuples(std::uint32_t bound, std::size_t length,
                  std::vector<std::vector<std::uint32_t>>& out) {
    std::vector<std::uint32_t> cur;
    cur.reserve(length);
    auto rec = [&](auto&& self, std::uint32_t next) -> void {
        if (cur.size() == length) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t i = next; i < bound; ++i) {
            if (bound - i < length - cur.size()) break;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

BigOctonion bad_term(std::uint32_t n) {
    if (n > kBigintIndexCap)
        throw CapExceeded("witness element " + std::to_string(n) +
                          " is too large to materialize (cap " +
                          std::to_string(kBigintIndexCap) + ")");
    BigOctonion out;
    for (unsigned i = 0; i < 8; ++i) {
        const unsigned exp_of_exp = 8 * n + 1 + i;
        out.coeffs[i] = BigInt(1) << (1u << exp_of_exp);
    }
    return out;
}

std::string to_lines(const SymbolicOctonion& v) {
    std::ostringstream os;
    for (std::size_t j = 0; j < 8; ++j)
        os << 'e' << j << ": " << v.coeffs[j].to_string() << '\n';
    return os.str();
}

BigInt alpha_exponent(std::span<const std::uint32_t> indices,
                      std::span<const std::uint8_t> alpha) {
    BigInt e = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const BigInt shift = BigInt(8) * indices[i] + 1 + alpha[i];
        e += BigInt(1) << static_cast<unsigned>(shift);
    }
    return e;
}

SymbolicOctonion symbolic_eval(const Term& t, std::size_t leaf_cap, NormalizeStats* stats) {
    if (t.leaf_count() > leaf_cap)
        throw CapExceeded("term has " + std::to_string(t.leaf_count()) +
                          " leaves, cap is " + std::to_string(leaf_cap));
    const LambdaSets ls = lambda_sets(t);  // checks orderliness
    const auto indices = var_indices(t);

    SymbolicOctonion out;
    std::vector<std::pair<BigInt, int>> terms;
    for (std::size_t j = 0; j < 8; ++j) {
        terms.clear();
        terms.reserve(ls.buckets[j].size());
        for (const auto& [alpha, sign] : ls.buckets[j])
            terms.emplace_back(alpha_exponent(indices, alpha), sign);
        out.coeffs[j] = sd_from_terms(terms, stats);
    }
    return out;
}

BigOctonion bigint_eval(const Term& t) {
    if (!is_orderly(t)) throw NotOrderly("big-integer evaluation needs an orderly term");
    auto rec = [&](auto&& self, const Term& node) -> BigOctonion {
        if (node.is_pair())
            return oct_mul(self(self, node.left()), self(self, node.right()));
        return bad_term(node.var_index());
    };
    return rec(rec, t);
}

std::string WitnessReport::line() const {
    std::ostringstream os;
    os << "CLAIM " << render(left) << " VS " << render(right) << " -> ";
    if (verdict == ClaimVerdict::Distinct)
        os << "DISTINCT slot=e" << slot;
    else
        os << "EQUAL";
    os << " case="
       << (kase == ClaimCase::SameString ? "SAME_STRING" : "DIFFERENT_VARS");
    return os.str();
}

WitnessReport claim_check(const Term& t1, const Term& t2, const Term& t3,
                          std::size_t leaf_cap) {
    require_chain(t1, t2, t3);
    Term right_nested = Term::pair(t1, Term::pair(t2, t3));
    Term left_nested = Term::pair(Term::pair(t1, t2), t3);
    return compare_claim(std::move(right_nested), std::move(left_nested), leaf_cap);
}

WitnessReport claim_check_pair(const std::array<Term, 3>& right_nested_chain,
                               const std::array<Term, 3>& left_nested_chain,
                               std::size_t leaf_cap) {
    require_chain(right_nested_chain[0], right_nested_chain[1], right_nested_chain[2]);
    require_chain(left_nested_chain[0], left_nested_chain[1], left_nested_chain[2]);
    Term right_nested = Term::pair(right_nested_chain[0],
                                   Term::pair(right_nested_chain[1], right_nested_chain[2]));
    Term left_nested = Term::pair(Term::pair(left_nested_chain[0], left_nested_chain[1]),
                                  left_nested_chain[2]);
    return compare_claim(std::move(right_nested), std::move(left_nested), leaf_cap);
}

std::vector<std::array<Term, 3>> enumerate_chains(std::uint32_t index_bound,
                                                  std::size_t leaf_cap) {
    std::vector<std::array<Term, 3>> chains;
    for (std::size_t total = 3; total <= leaf_cap; ++total) {
        if (total > index_bound) break;  // needs `total` distinct indices
        std::vector<std::vector<std::uint32_t>> tuples;
        index_tuples(index_bound, total, tuples);
        const auto splits = block_splits(total);
        for (const auto& tuple : tuples) {
            for (const auto& split : splits) {
                std::array<std::vector<std::uint32_t>, 3> parts;
                std::size_t at = 0;
                for (std::size_t p = 0; p < 3; ++p) {
                    parts[p].assign(tuple.begin() + static_cast<std::ptrdiff_t>(at),
                                    tuple.begin() + static_cast<std::ptrdiff_t>(at + split[p]));
                    at += split[p];
                }
                const auto b1 = enumerate_orderly(parts[0]);
                const auto b2 = enumerate_orderly(parts[1]);
                const auto b3 = enumerate_orderly(parts[2]);
                for (const Term& s1 : b1)
                    for (const Term& s2 : b2)
                        for (const Term& s3 : b3) chains.push_back({s1, s2, s3});
            }
        }
    }
    return chains;
}

std::vector<SymbolicOctonion> bounded_x_values(std::uint32_t index_bound,
                                               std::size_t leaf_cap) {
    if (index_bound == 0 || leaf_cap == 0) throw Error("bounds must be positive");
    const auto chains = enumerate_chains(index_bound, leaf_cap);
    std::vector<SymbolicOctonion> values(chains.size());
    parallel_for(chains.size(), [&](std::size_t i) {
        const auto& c = chains[i];
        values[i] = symbolic_eval(Term::pair(c[0], Term::pair(c[1], c[2])), leaf_cap);
    });
    return values;
}

bool in_x(const SymbolicOctonion& v, std::uint32_t index_bound, std::size_t leaf_cap) {
    const auto xs = bounded_x_values(index_bound, leaf_cap);
    return std::find(xs.begin(), xs.end(), v) != xs.end();
}

std::vector<SymbolicOctonion> fr_prefix(std::span<const Term> chain, std::size_t depth,
                                        std::size_t leaf_cap) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!is_orderly(chain[i])) throw NotOrderly("chain terms must be orderly");
        if (i + 1 < chain.size() && !precedes(chain[i], chain[i + 1]))
            throw PrecedenceViolated("chain must be strictly increasing");
    }
    std::vector<SymbolicOctonion> out;
    const std::size_t n = chain.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Term> blocks;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) blocks.push_back(chain[i]);
        if (blocks.size() > depth) continue;
        for (const Term& t : enumerate_bracketings(blocks))
            out.push_back(symbolic_eval(t, leaf_cap));
    }
    return out;
}

std::vector<WitnessReport> claim_sweep(std::uint32_t index_bound, std::size_t leaf_cap) {
    const auto chains = enumerate_chains(index_bound, leaf_cap);
    std::vector<std::optional<WitnessReport>> slots(chains.size());
    parallel_for(chains.size(), [&](std::size_t i) {
        const auto& c = chains[i];
        slots[i] = claim_check(c[0], c[1], c[2], leaf_cap);
    });
    std::vector<WitnessReport> reports;
    reports.reserve(chains.size());
    for (auto& slot : slots) reports.push_back(std::move(*slot));
    return reports;
}

PairSweepResult claim_pair_sweep(std::uint32_t index_bound, std::size_t leaf_cap) {
    const auto chains = enumerate_chains(index_bound, leaf_cap);
    const std::size_t n = chains.size();

    // Composites and their values, computed once per chain.
    std::vector<Term> right_nested, left_nested;
    right_nested.reserve(n);
    left_nested.reserve(n);
    for (const auto& c : chains) {
        right_nested.push_back(Term::pair(c[0], Term::pair(c[1], c[2])));
        left_nested.push_back(Term::pair(Term::pair(c[0], c[1]), c[2]));
    }
    std::vector<SymbolicOctonion> right_values(n), left_values(n);
    parallel_for(n, [&](std::size_t i) {
        right_values[i] = symbolic_eval(right_nested[i], leaf_cap);
        left_values[i] = symbolic_eval(left_nested[i], leaf_cap);
    });

    PairSweepResult result;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (right_nested[i] == left_nested[j]) {
                ++result.skipped_identical;
                continue;
            }
            WitnessReport report{right_nested[i], left_nested[j], ClaimVerdict::Equal, -1,
                                 ClaimCase::SameString};
            report.kase = (var_indices(right_nested[i]) == var_indices(left_nested[j]))
                              ? ClaimCase::SameString
                              : ClaimCase::DifferentVars;
            const SymbolicOctonion& a = right_values[i];
            const SymbolicOctonion& b = left_values[j];
            if (!(a == b)) {
                report.verdict = ClaimVerdict::Distinct;
                const int preferred = (report.kase == ClaimCase::SameString) ? 4 : 0;
                if (a.coeffs[static_cast<std::size_t>(preferred)] !=
                    b.coeffs[static_cast<std::size_t>(preferred)]) {
                    report.slot = preferred;
                } else {
                    for (int s = 0; s < 8; ++s)
                        if (a.coeffs[static_cast<std::size_t>(s)] !=
                            b.coeffs[static_cast<std::size_t>(s)]) {
                            report.slot = s;
                            break;
                        }
                }
            }
            result.reports.push_back(std::move(report));
        }
    }
    return result;
}

}  // namespace octoramsey
