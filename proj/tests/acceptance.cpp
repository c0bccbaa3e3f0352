// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// exact comparisons throughout. Exit code 0 only when every criterion
// holds within its stated time budget.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "octoramsey/loops.hpp"
#include "octoramsey/naf.hpp"
#include "octoramsey/octonion.hpp"
#include "octoramsey/parallel.hpp"
#include "octoramsey/signs.hpp"
#include "octoramsey/term.hpp"
#include "octoramsey/units.hpp"
#include "octoramsey/witness.hpp"

using namespace octoramsey;

namespace {

struct Failure {
    std::mutex mutex;
    std::atomic<std::uint64_t> count{0};
    std::string first;

    void record(const std::string& what) {
        count.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(mutex);
        if (first.empty()) first = what;
    }
    bool ok() const { return count.load() == 0; }
};

std::vector<std::uint32_t> first_indices(std::size_t n) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

// ---------------------------------------------------------------- 1
// Unit product table: 64 products against an independent transcription,
// anticommutativity on the 42 distinct nonzero pairs, squares.
bool criterion_table(std::string& detail) {
    static const std::array<std::array<const char*, 8>, 8> table_text = {{
        {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"},
        {"e1", "-e0", "e3", "-e2", "e5", "-e4", "-e7", "e6"},
        {"e2", "-e3", "-e0", "e1", "e6", "e7", "-e4", "-e5"},
        {"e3", "e2", "-e1", "-e0", "e7", "-e6", "e5", "-e4"},
        {"e4", "-e5", "-e6", "-e7", "-e0", "e1", "e2", "e3"},
        {"e5", "e4", "-e7", "e6", "-e1", "-e0", "-e3", "e2"},
        {"e6", "e7", "e4", "-e5", "-e2", "e3", "-e0", "-e1"},
        {"e7", "-e6", "e5", "e4", "-e3", "-e2", "e1", "-e0"},
    }};
    std::size_t pairs = 0;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (unit_mul({+1, i}, {+1, j}) != signed_unit_from_string(table_text[i][j])) {
                detail = "product e" + std::to_string(i) + " e" + std::to_string(j);
                return false;
            }
            if (i != 0 && j != 0 && i != j) {
                ++pairs;
                if (unit_mul({+1, i}, {+1, j}) != -unit_mul({+1, j}, {+1, i})) {
                    detail = "anticommutativity at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                    return false;
                }
            }
        }
        const SignedUnit sq = unit_mul({+1, i}, {+1, i});
        if (sq != (i == 0 ? SignedUnit{+1, 0} : SignedUnit{-1, 0})) {
            detail = "square of e" + std::to_string(i);
            return false;
        }
    }
    if (pairs != 42) {
        detail = "expected 42 distinct nonzero pairs, saw " + std::to_string(pairs);
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- 2
// Every bracketing of every unit string of length <= 6 evaluates, up to
// sign, to the right-associative value, and the reassociation route
// agrees exactly with direct evaluation.
bool criterion_reassociation(std::string& detail) {
    Failure failure;
    for (std::size_t len = 1; len <= 6; ++len) {
        std::vector<Term> placeholder(len, Term::unit(0));
        const std::vector<Term> shapes = enumerate_bracketings(placeholder);

        std::size_t combos = 1;
        for (std::size_t i = 0; i < len; ++i) combos *= 8;

        parallel_for(combos, [&](std::size_t code) {
            std::array<int, 6> units{};
            std::size_t rest = code;
            for (std::size_t i = 0; i < len; ++i) {
                units[i] = static_cast<int>(rest % 8);
                rest /= 8;
            }
            SignedUnit reference{+1, units[len - 1]};
            for (std::size_t i = len - 1; i-- > 0;)
                reference = unit_mul(SignedUnit{+1, units[i]}, reference);

            std::size_t cursor = 0;
            auto build = [&](auto&& self, const Term& shape) -> Term {
                if (shape.is_pair()) {
                    Term l = self(self, shape.left());
                    Term r = self(self, shape.right());
                    return Term::pair(std::move(l), std::move(r));
                }
                return Term::unit(units[cursor++]);
            };
            for (const Term& shape : shapes) {
                cursor = 0;
                const Term ground = build(build, shape);
                const SignedUnit direct = eval_units(ground);
                if (direct.index != reference.index) {
                    failure.record("sign-class mismatch on " + render(ground));
                    continue;
                }
                if (right_assoc_normalize(ground) != direct)
                    failure.record("reassociation mismatch on " + render(ground));
            }
        });
    }
    if (!failure.ok()) detail = failure.first;
    return failure.ok();
}

// ---------------------------------------------------------------- 3
// Every pair of distinct bracketings on N <= 5 leaves separates at +-e4
// under the constructed assignment, and brute force confirms a
// separating assignment exists.
bool criterion_separating_assignments(std::string& detail) {
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto terms = enumerate_orderly(first_indices(n));
        for (std::size_t a = 0; a < terms.size(); ++a) {
            for (std::size_t b = 0; b < terms.size(); ++b) {
                if (a == b) continue;
                const Assignment mu = distinguish(terms[a], terms[b]);
                const SignedUnit va = eval_assigned(terms[a], mu);
                const SignedUnit vb = eval_assigned(terms[b], mu);
                if (va.index != 4 || vb != -va) {
                    detail = "constructed assignment fails on " + render(terms[a]) +
                             " vs " + render(terms[b]);
                    return false;
                }
                if (a < b) {
                    bool any = false;
                    std::vector<int> alpha(n, 0);
                    for (;;) {
                        Assignment nu;
                        for (std::size_t i = 0; i < n; ++i)
                            nu[static_cast<std::uint32_t>(i)] = SignedUnit{+1, alpha[i]};
                        const SignedUnit xa = eval_assigned(terms[a], nu);
                        const SignedUnit xb = eval_assigned(terms[b], nu);
                        if (xa.index == xb.index && xa.sign != xb.sign) {
                            any = true;
                            break;
                        }
                        std::size_t i = n;
                        while (i > 0 && alpha[i - 1] == 7) alpha[--i] = 0;
                        if (i == 0) break;
                        ++alpha[i - 1];
                    }
                    if (!any) {
                        detail = "no separating assignment for " + render(terms[a]) +
                                 " vs " + render(terms[b]);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- 4
// Nonadjacent form: exhaustive roundtrip for |a| <= 10^6 and injective
// decoding of every canonical digit string of width <= 12.
bool criterion_naf(std::string& detail) {
    for (long long a = -1000000; a <= 1000000; ++a) {
        if (naf_decode(naf_encode(BigInt(a))) != a) {
            detail = "roundtrip failed at " + std::to_string(a);
            return false;
        }
    }
    std::set<BigInt> seen;
    std::vector<int> digits;
    bool injective = true;
    auto rec = [&](auto&& self, std::size_t width) -> void {
        if (!injective) return;
        if (digits.size() == width) {
            if (width > 0 && digits.back() == 0) return;
            BigInt value = 0, power = 1;
            for (int d : digits) {
                value += d * power;
                power *= 2;
            }
            if (!seen.insert(value).second) injective = false;
            return;
        }
        for (int d : {-1, 0, 1}) {
            if (d != 0 && !digits.empty() && digits.back() != 0) continue;
            digits.push_back(d);
            self(self, width);
            digits.pop_back();
        }
    };
    for (std::size_t width = 0; width <= 12 && injective; ++width) {
        digits.clear();
        rec(rec, width);
    }
    if (!injective) detail = "two canonical digit strings share a value";
    return injective;
}

// ---------------------------------------------------------------- 5
// Exponent gaps: over all variable sets within bounds the assignment
// exponents are pairwise distinct with difference >= 2 (independent
// 64-bit route), and the symbolic coefficients of every orderly term in
// bounds are built with zero merges and zero carries.
bool criterion_observation(std::string& detail) {
    std::vector<std::uint64_t> values;
    std::vector<std::uint32_t> tuple;
    auto rec = [&](auto&& self, std::uint32_t next) -> void {
        if (!tuple.empty()) {
            std::vector<std::uint8_t> alpha(tuple.size(), 0);
            for (;;) {
                std::uint64_t e = 0;
                for (std::size_t i = 0; i < tuple.size(); ++i)
                    e += std::uint64_t{1} << (8 * tuple[i] + 1 + alpha[i]);
                values.push_back(e);
                std::size_t i = alpha.size();
                while (i > 0 && alpha[i - 1] == 7) alpha[--i] = 0;
                if (i == 0) break;
                ++alpha[i - 1];
            }
        }
        if (tuple.size() == 5) return;
        for (std::uint32_t i = next; i < 7; ++i) {
            tuple.push_back(i);
            self(self, i + 1);
            tuple.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(values.begin(), values.end());
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] - values[i - 1] < 2) {
            detail = "exponent gap below 2 at value " + std::to_string(values[i]);
            return false;
        }
    }

    // the library exponent agrees with the independent route
    {
        const std::vector<std::uint32_t> idx{0, 2, 6};
        const std::vector<std::uint8_t> alpha{7, 0, 3};
        const std::uint64_t expect = (std::uint64_t{1} << 8) + (std::uint64_t{1} << 17) +
                                     (std::uint64_t{1} << 52);
        if (alpha_exponent(idx, alpha) != expect) {
            detail = "alpha_exponent disagrees with the direct route";
            return false;
        }
    }

    auto subsets_fail = [&](std::string& why) {
        std::vector<std::uint32_t> vars;
        auto walk = [&](auto&& self, std::uint32_t next) -> bool {
            if (!vars.empty()) {
                for (const Term& t : enumerate_orderly(vars)) {
                    NormalizeStats stats;
                    symbolic_eval(t, kDefaultLeafCap, &stats);
                    if (stats.merges != 0 || stats.carries != 0) {
                        why = "rewrites on " + render(t);
                        return true;
                    }
                }
            }
            if (vars.size() == 5) return false;
            for (std::uint32_t i = next; i < 7; ++i) {
                vars.push_back(i);
                if (self(self, i + 1)) return true;
                vars.pop_back();
            }
            return false;
        };
        return walk(walk, 0);
    };
    std::string why;
    if (subsets_fail(why)) {
        detail = why;
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- 6
// The separation claim at desk scale: every shared chain within bounds
// gives DISTINCT at slot e4; every non-coincident independent pair is
// DISTINCT with slot e4 (same string) or slot e0 (different variables).
bool criterion_claim(std::string& detail) {
    const auto reports = claim_sweep(7, 5);
    if (reports.size() != 329) {
        detail = "expected 329 chains, saw " + std::to_string(reports.size());
        return false;
    }
    for (const auto& r : reports) {
        if (r.verdict != ClaimVerdict::Distinct || r.kase != ClaimCase::SameString ||
            r.slot != 4) {
            detail = r.line();
            return false;
        }
    }
    const PairSweepResult pair_result = claim_pair_sweep(7, 5);
    for (const auto& r : pair_result.reports) {
        if (r.verdict != ClaimVerdict::Distinct) {
            detail = r.line();
            return false;
        }
        const int required = (r.kase == ClaimCase::SameString) ? 4 : 0;
        if (r.slot != required) {
            detail = r.line();
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- 7
// The symbolic evaluator against the big-integer oracle on every orderly
// term with indices <= 1 (65536-bit coefficients at the top slot).
bool criterion_oracle(std::string& detail) {
    const std::vector<const char*> texts{"x0", "x1", "(x0x1)"};
    for (const char* text : texts) {
        const Term t = parse(text);
        const SymbolicOctonion sym = symbolic_eval(t);
        const BigOctonion big = bigint_eval(t);
        for (std::size_t j = 0; j < 8; ++j) {
            if (sym.coeffs[j].to_integer() != big.coeffs[j]) {
                detail = std::string("slot e") + std::to_string(j) + " of " + text;
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- 8
// Every reduction prefix within bounds straddles the bounded value set:
// at least one member and one non-member among its products.
bool criterion_witness_split(std::string& detail) {
    const auto xs = bounded_x_values(7, 5);
    auto member = [&](const SymbolicOctonion& v) {
        return std::find(xs.begin(), xs.end(), v) != xs.end();
    };
    // spot ties with the public membership call
    if (!in_x(symbolic_eval(parse("(x0(x1x2))")), 7, 5) ||
        in_x(symbolic_eval(parse("((x0x1)x2)")), 7, 5)) {
        detail = "bounded membership spot check failed";
        return false;
    }
    const auto chains = enumerate_chains(7, 5);
    Failure failure;
    parallel_for(chains.size(), [&](std::size_t i) {
        const std::vector<Term> chain{chains[i][0], chains[i][1], chains[i][2]};
        bool has_member = false, has_nonmember = false;
        for (const auto& v : fr_prefix(chain, 3)) {
            if (member(v))
                has_member = true;
            else
                has_nonmember = true;
        }
        if (!has_member || !has_nonmember)
            failure.record("chain " + render(chain[0]) + " " + render(chain[1]) + " " +
                           render(chain[2]));
    });
    if (!failure.ok()) detail = failure.first;
    return failure.ok();
}

// ---------------------------------------------------------------- 9
// The positive results: doubled groups are Moufang and associative
// exactly for abelian inputs; the sign loop is Moufang and
// nonassociative; identity-reduction certificates verify by direct
// multiplication.
bool criterion_moufang(std::string& detail) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const LoopTable m = m_g2(cyclic_group(n));
        if (!validate_loop(m).valid() || !is_moufang(m) || !is_associative(m)) {
            detail = "doubled cyclic group of order " + std::to_string(n);
            return false;
        }
    }
    const LoopTable m12 = m_g2(symmetric_s3());
    if (m12.order() != 12 || !validate_loop(m12).valid() || !is_moufang(m12) ||
        is_associative(m12)) {
        detail = "doubled symmetric group";
        return false;
    }
    const LoopTable o = octonion_sign_loop();
    if (!validate_loop(o).valid() || !is_moufang(o) || is_associative(o)) {
        detail = "sign loop";
        return false;
    }

    const std::vector<PeriodicSequence> sequences = {
        {{}, {0}},
        {{}, {1}},
        {{3, 3}, {9, 14, 2}},
        {{}, {15, 7}},
    };
    for (const auto& loop : {o, m12}) {
        for (const auto& s : sequences) {
            bool in_range = true;
            for (std::size_t v : s.cycle) in_range = in_range && v < loop.order();
            for (std::size_t v : s.prefix) in_range = in_range && v < loop.order();
            if (!in_range) continue;
            const ReductionCertificate cert = ramsey_reduce(loop, s);
            for (const auto& block : cert.blocks) {
                if (block.size() != cert.order) {
                    detail = "block size mismatch";
                    return false;
                }
                std::size_t product = s.at(block[0]);
                for (std::size_t i = 1; i < block.size(); ++i)
                    product = loop.mul(product, s.at(block[i]));
                if (product != loop.identity()) {
                    detail = "block does not evaluate to the identity";
                    return false;
                }
            }
        }
    }
    return true;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "unit product table fidelity", 1.0, criterion_table},
        {2, "bracketings agree up to sign with the right-associative form", 60.0,
         criterion_reassociation},
        {3, "distinguishing assignments separate at +-e4", 60.0, criterion_separating_assignments},
        {4, "nonadjacent form roundtrip and uniqueness", 10.0, criterion_naf},
        {5, "exponent gaps and carry-free coefficients", 60.0, criterion_observation},
        {6, "separation claim sweep", 300.0, criterion_claim},
        {7, "symbolic evaluator matches the big-integer oracle", 60.0, criterion_oracle},
        {8, "reduction prefixes straddle the bounded value set", 300.0,
         criterion_witness_split},
        {9, "finite Moufang loop suite", 10.0, criterion_moufang},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.budget_seconds) {
            ok = false;
            detail = "exceeded time budget of " + std::to_string(c.budget_seconds) + "s";
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.title, seconds, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
