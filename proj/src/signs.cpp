#include "octoramsey/signs.hpp"

#include <algorithm>
#include <sstream>

namespace octoramsey {

namespace {

using Node = Term::Node;
using Kind = Term::Kind;

// Value of the right-associative bracketing of units[lo..hi).
SignedUnit fold_right(const std::vector<int>& units, std::size_t lo, std::size_t hi) {
    SignedUnit v{+1, units[hi - 1]};
    for (std::size_t i = hi - 1; i-- > lo;)
        v = unit_mul(SignedUnit{+1, units[i]}, v);
    return v;
}

// Sign of (s1 s2) relative to the right-associative form of the
// concatenated string, where s1 = units[lo..mid) and s2 = units[mid..hi)
// are themselves right-associative. Each step moves the head of s1 out
// front, paying the associator sign of the three factor values.
int concat_sign(const std::vector<int>& units, std::size_t lo, std::size_t mid,
                std::size_t hi) {
    if (mid - lo == 1) return +1;
    const SignedUnit v2 = fold_right(units, mid, hi);
    int sign = +1;
    for (; mid - lo > 1; ++lo) {
        const SignedUnit v1 = fold_right(units, lo + 1, mid);
        if (associator_class(units[lo], v1.index, v2.index) == Associator::Anti)
            sign = -sign;
    }
    return sign;
}

// Appends the leaf string of n to `units` and returns the sign of n's value
// relative to the right-associative form of that string.
int normalize_sign(const Node* n, std::vector<int>& units) {
    switch (n->kind) {
        case Kind::Var:
            throw NotGround("term contains variable x" + std::to_string(n->index));
        case Kind::Unit:
            units.push_back(static_cast<int>(n->index));
            return +1;
        case Kind::Pair: {
            const std::size_t lo = units.size();
            const int s1 = normalize_sign(n->left.get(), units);
            const std::size_t mid = units.size();
            const int s2 = normalize_sign(n->right.get(), units);
            const std::size_t hi = units.size();
            return s1 * s2 * concat_sign(units, lo, mid, hi);
        }
    }
    throw Error("corrupt term node");
}

// Left-to-right leaf walker used by the assignment enumeration.
void collect_leaf_order(const Node* n, std::vector<const Node*>& leaves) {
    if (n->kind == Kind::Pair) {
        collect_leaf_order(n->left.get(), leaves);
        collect_leaf_order(n->right.get(), leaves);
    } else {
        leaves.push_back(n);
    }
}

// Evaluates the term shape with leaf i replaced by e_{alpha[i]}.
SignedUnit eval_with_alpha(const Node* n, const std::vector<std::uint8_t>& alpha,
                           std::size_t& cursor) {
    if (n->kind == Kind::Pair) {
        const SignedUnit l = eval_with_alpha(n->left.get(), alpha, cursor);
        const SignedUnit r = eval_with_alpha(n->right.get(), alpha, cursor);
        return unit_mul(l, r);
    }
    return SignedUnit{+1, static_cast<int>(alpha[cursor++])};
}

// The inductive construction behind distinguish(); t != u share the
// variable string vars. Writes a binding for every variable of the string.
void build_distinguisher(const Term& t, const Term& u,
                         const std::vector<std::uint32_t>& vars, Assignment& mu) {
    const std::size_t n = vars.size();
    if (n == 3) {
        mu[vars[0]] = SignedUnit{+1, 5};
        mu[vars[1]] = SignedUnit{+1, 6};
        mu[vars[2]] = SignedUnit{+1, 7};
        return;
    }

    const Term t1 = t.left(), t2 = t.right();
    const Term u1 = u.left(), u2 = u.right();
    const std::size_t a = t1.leaf_count();
    const std::size_t b = u1.leaf_count();

    if (a == b) {
        if (t1 == u1) {
            // Right subterms differ over the shared remaining string.
            std::vector<std::uint32_t> tail(vars.begin() + static_cast<std::ptrdiff_t>(a),
                                            vars.end());
            build_distinguisher(t2, u2, tail, mu);
            for (std::size_t i = 0; i < a; ++i) mu[vars[i]] = SignedUnit{+1, 0};
        } else {
            std::vector<std::uint32_t> head(vars.begin(),
                                            vars.begin() + static_cast<std::ptrdiff_t>(a));
            build_distinguisher(t1, u1, head, mu);
            for (std::size_t i = a; i < n; ++i) mu[vars[i]] = SignedUnit{+1, 0};
        }
        return;
    }

    // The split strings are prefixes of the same string, so the shorter is
    // a prefix of the longer. Pick the least position present in exactly
    // one left part; it lies strictly between the endpoints.
    const std::size_t k = std::min(a, b);  // 0-based position of that variable
    for (std::size_t i = 0; i < n; ++i) mu[vars[i]] = SignedUnit{+1, 0};
    mu[vars[0]] = SignedUnit{+1, 5};
    mu[vars[k]] = SignedUnit{+1, 6};
    mu[vars[n - 1]] = SignedUnit{+1, 7};
}

}  // namespace

SignedUnit right_assoc_normalize(const Term& t) {
    std::vector<int> units;
    units.reserve(t.leaf_count());
    const int sign = normalize_sign(t.node(), units);
    SignedUnit v = fold_right(units, 0, units.size());
    v.sign *= sign;
    return v;
}

LambdaSets lambda_sets(const Term& t) {
    if (!is_orderly(t)) throw NotOrderly("lambda sets need an orderly term");
    std::vector<const Node*> leaves;
    collect_leaf_order(t.node(), leaves);
    const std::size_t n = leaves.size();

    LambdaSets out;
    out.arity = n;
    std::vector<std::uint8_t> alpha(n, 0);
    for (;;) {
        std::size_t cursor = 0;
        const SignedUnit v = eval_with_alpha(t.node(), alpha, cursor);
        out.buckets[static_cast<std::size_t>(v.index)].emplace_back(alpha, v.sign);
        // lexicographic odometer
        std::size_t i = n;
        while (i > 0 && alpha[i - 1] == 7) alpha[--i] = 0;
        if (i == 0) break;
        ++alpha[i - 1];
    }
    return out;
}

std::string to_lines(const LambdaSets& ls) {
    std::ostringstream os;
    for (std::size_t j = 0; j < 8; ++j) {
        for (const auto& [alpha, sign] : ls.buckets[j]) {
            os << 'e' << j << ' ';
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                if (i) os << ',';
                os << static_cast<int>(alpha[i]);
            }
            os << ' ' << (sign > 0 ? '+' : '-') << '\n';
        }
    }
    return os.str();
}

Assignment distinguish(const Term& t, const Term& u) {
    if (!is_orderly(t) || !is_orderly(u))
        throw NotSameSkeleton("both terms must be orderly");
    const auto vt = var_indices(t);
    const auto vu = var_indices(u);
    if (vt != vu) throw NotSameSkeleton("terms have different variable strings");
    if (t == u) throw EqualTerms("terms are equal");

    Assignment mu;
    build_distinguisher(t, u, vt, mu);
    return mu;
}

}  // namespace octoramsey
