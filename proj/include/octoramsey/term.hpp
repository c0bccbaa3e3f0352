#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octoramsey/errors.hpp"
#include "octoramsey/units.hpp"

namespace octoramsey {

/// Partial map from variable index to a signed unit value.
using Assignment = std::map<std::uint32_t, SignedUnit>;

/// Fully bracketed binary product expression: a leaf is a variable x_n or
/// a unit octonion e_j, every internal node has exactly two children.
/// Immutable; subtrees are shared, copies are cheap.
class Term {
public:
    static Term var(std::uint32_t index);
    static Term unit(int index);  // 0..7
    static Term pair(Term left, Term right);

    bool is_var() const noexcept;
    bool is_unit() const noexcept;
    bool is_pair() const noexcept;
    bool is_leaf() const noexcept { return !is_pair(); }

    std::uint32_t var_index() const;  // requires is_var
    int unit_index() const;           // requires is_unit
    Term left() const;                // requires is_pair
    Term right() const;               // requires is_pair

    std::size_t leaf_count() const noexcept;

    /// Structural equality.
    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

    enum class Kind : std::uint8_t { Var, Unit, Pair };

    struct Node {
        Kind kind;
        std::uint32_t index;  // variable or unit index; unused for Pair
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        std::uint32_t leaves;
    };

    const Node* node() const noexcept { return node_.get(); }

private:
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Grammar: term := atom | "(" term term ")"; atom := "x"digits | "e"[0-7].
/// Whitespace between tokens is permitted. Throws SyntaxError with the byte
/// offset of the first offending character.
Term parse(std::string_view text);

/// Canonical text: fully bracketed, no whitespace; parse(render(t)) == t.
std::string render(const Term& t);

/// Bottom-up product of a ground (unit-leaf-only) term. Throws NotGround.
SignedUnit eval_units(const Term& t);

/// Evaluates after replacing each variable by its assigned value.
/// Throws UnboundVariable for a variable missing from the assignment.
SignedUnit eval_assigned(const Term& t, const Assignment& mu);

/// Replaces variable leaves by unit leaves. Only positive assignments can
/// be represented as a term; a negative sign in `mu` raises Error.
Term substitute(const Term& t, const Assignment& mu);

/// Leaf variable indices in left-to-right order. Throws NotVariableTerm if
/// any leaf is a unit.
std::vector<std::uint32_t> var_indices(const Term& t);

/// True when the variable indices strictly increase from left to right.
bool is_orderly(const Term& t);

/// t precedes u when every variable index of t is below every index of u.
bool precedes(const Term& t, const Term& u);

/// All bracketings over the given leaves, in order. Emission is ordered by
/// recursive split position, left subtree size ascending; this order is
/// part of the interface and stable.
std::vector<Term> enumerate_bracketings(std::span<const Term> leaves);

/// All orderly terms with the given strictly increasing variable indices:
/// Catalan(N-1) bracketings in the enumeration order above.
std::vector<Term> enumerate_orderly(std::span<const std::uint32_t> indices);

}  // namespace octoramsey
