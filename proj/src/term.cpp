#include "octoramsey/term.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

namespace octoramsey {

namespace {

using Node = Term::Node;
using Kind = Term::Kind;

SignedUnit eval_node(const Node* n) {
    switch (n->kind) {
        case Kind::Var:
            throw NotGround("term contains variable x" + std::to_string(n->index));
        case Kind::Unit:
            return SignedUnit{+1, static_cast<int>(n->index)};
        case Kind::Pair:
            return unit_mul(eval_node(n->left.get()), eval_node(n->right.get()));
    }
    throw Error("corrupt term node");
}

SignedUnit eval_assigned_node(const Node* n, const Assignment& mu) {
    switch (n->kind) {
        case Kind::Var: {
            auto it = mu.find(n->index);
            if (it == mu.end()) throw UnboundVariable(n->index);
            return it->second;
        }
        case Kind::Unit:
            return SignedUnit{+1, static_cast<int>(n->index)};
        case Kind::Pair:
            return unit_mul(eval_assigned_node(n->left.get(), mu),
                            eval_assigned_node(n->right.get(), mu));
    }
    throw Error("corrupt term node");
}

void render_node(const Node* n, std::string& out) {
    switch (n->kind) {
        case Kind::Var:
            out.push_back('x');
            out += std::to_string(n->index);
            return;
        case Kind::Unit:
            out.push_back('e');
            out.push_back(static_cast<char>('0' + n->index));
            return;
        case Kind::Pair:
            out.push_back('(');
            render_node(n->left.get(), out);
            render_node(n->right.get(), out);
            out.push_back(')');
            return;
    }
}

void collect_vars(const Node* n, std::vector<std::uint32_t>& out) {
    switch (n->kind) {
        case Kind::Var:
            out.push_back(n->index);
            return;
        case Kind::Unit:
            throw NotVariableTerm("term contains unit leaf e" + std::to_string(n->index));
        case Kind::Pair:
            collect_vars(n->left.get(), out);
            collect_vars(n->right.get(), out);
            return;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Term run() {
        Term t = term();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("trailing input after term", pos_);
        return t;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    Term term() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            Term lhs = term();
            Term rhs = term();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw SyntaxError("unbalanced bracket", open);
            ++pos_;
            return Term::pair(std::move(lhs), std::move(rhs));
        }
        return atom();
    }

    Term atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("expected atom", pos_);
        const char c = text_[pos_];
        if (c == 'e') {
            ++pos_;
            if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '7')
                throw SyntaxError("unit index must be a single digit 0..7", pos_);
            const int idx = text_[pos_] - '0';
            ++pos_;
            return Term::unit(idx);
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("variable needs a numeric index", pos_);
            std::uint64_t value = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                if (value > std::numeric_limits<std::uint32_t>::max())
                    throw SyntaxError("variable index too large", pos_);
                ++pos_;
            }
            return Term::var(static_cast<std::uint32_t>(value));
        }
        throw SyntaxError("expected atom or '('", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool node_equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    if (a->kind != Kind::Pair) return a->index == b->index;
    return node_equal(a->left.get(), b->left.get()) &&
           node_equal(a->right.get(), b->right.get());
}

Term substitute_node(const Node* n, const Assignment& mu) {
    switch (n->kind) {
        case Kind::Var: {
            auto it = mu.find(n->index);
            if (it == mu.end()) throw UnboundVariable(n->index);
            if (it->second.sign < 0)
                throw Error("cannot substitute a negative unit into a term");
            return Term::unit(it->second.index);
        }
        case Kind::Unit:
            return Term::unit(static_cast<int>(n->index));
        case Kind::Pair:
            return Term::pair(substitute_node(n->left.get(), mu),
                              substitute_node(n->right.get(), mu));
    }
    throw Error("corrupt term node");
}

// All bracketings of leaves[lo..hi); memoized so that subtrees are shared.
std::vector<Term> bracketings(std::span<const Term> leaves, std::size_t lo, std::size_t hi,
                              std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>>& memo) {
    if (hi - lo == 1) return {leaves[lo]};
    auto key = std::make_pair(lo, hi);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Term> out;
    for (std::size_t split = lo + 1; split < hi; ++split) {
        const auto ls = bracketings(leaves, lo, split, memo);
        const auto rs = bracketings(leaves, split, hi, memo);
        for (const Term& l : ls)
            for (const Term& r : rs) out.push_back(Term::pair(l, r));
    }
    memo.emplace(key, out);
    return out;
}

}  // namespace

Term Term::var(std::uint32_t index) {
    return Term(std::make_shared<const Node>(Node{Kind::Var, index, nullptr, nullptr, 1}));
}

Term Term::unit(int index) {
    if (index < 0 || index > 7) throw Error("unit index must be 0..7");
    return Term(std::make_shared<const Node>(
        Node{Kind::Unit, static_cast<std::uint32_t>(index), nullptr, nullptr, 1}));
}

Term Term::pair(Term left, Term right) {
    const std::uint32_t leaves = left.node_->leaves + right.node_->leaves;
    return Term(std::make_shared<const Node>(
        Node{Kind::Pair, 0, std::move(left.node_), std::move(right.node_), leaves}));
}

bool Term::is_var() const noexcept { return node_->kind == Kind::Var; }
bool Term::is_unit() const noexcept { return node_->kind == Kind::Unit; }
bool Term::is_pair() const noexcept { return node_->kind == Kind::Pair; }

std::uint32_t Term::var_index() const {
    if (!is_var()) throw Error("not a variable leaf");
    return node_->index;
}

int Term::unit_index() const {
    if (!is_unit()) throw Error("not a unit leaf");
    return static_cast<int>(node_->index);
}

Term Term::left() const {
    if (!is_pair()) throw Error("leaf has no subterms");
    return Term(node_->left);
}

Term Term::right() const {
    if (!is_pair()) throw Error("leaf has no subterms");
    return Term(node_->right);
}

std::size_t Term::leaf_count() const noexcept { return node_->leaves; }

bool operator==(const Term& a, const Term& b) { return node_equal(a.node(), b.node()); }

Term parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Term& t) {
    std::string out;
    out.reserve(3 * t.leaf_count());
    render_node(t.node(), out);
    return out;
}

SignedUnit eval_units(const Term& t) { return eval_node(t.node()); }

SignedUnit eval_assigned(const Term& t, const Assignment& mu) {
    return eval_assigned_node(t.node(), mu);
}

Term substitute(const Term& t, const Assignment& mu) {
    return substitute_node(t.node(), mu);
}

std::vector<std::uint32_t> var_indices(const Term& t) {
    std::vector<std::uint32_t> out;
    out.reserve(t.leaf_count());
    collect_vars(t.node(), out);
    return out;
}

bool is_orderly(const Term& t) {
    const auto idx = var_indices(t);
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] >= idx[i]) return false;
    return true;
}

bool precedes(const Term& t, const Term& u) {
    const auto a = var_indices(t);
    const auto b = var_indices(u);
    return *std::max_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
}

std::vector<Term> enumerate_bracketings(std::span<const Term> leaves) {
    if (leaves.empty()) throw EmptyIndexList("no leaves to bracket");
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> memo;
    return bracketings(leaves, 0, leaves.size(), memo);
}

std::vector<Term> enumerate_orderly(std::span<const std::uint32_t> indices) {
    if (indices.empty()) throw EmptyIndexList("index list is empty");
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i - 1] >= indices[i])
            throw NonIncreasingIndices("indices must strictly increase");
    std::vector<Term> leaves;
    leaves.reserve(indices.size());
    for (std::uint32_t n : indices) leaves.push_back(Term::var(n));
    return enumerate_bracketings(leaves);
}

}  // namespace octoramsey
