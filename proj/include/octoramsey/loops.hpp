#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "octoramsey/errors.hpp"

namespace octoramsey {

/// Finite binary system given by its Cayley table, with a designated
/// identity. Elements are indices 0..n-1; names are optional.
class LoopTable {
public:
    /// Validates dimensions and index ranges; throws MalformedTable.
    LoopTable(std::size_t order, std::size_t identity,
              std::vector<std::size_t> table, std::vector<std::string> names = {});

    std::size_t order() const noexcept { return order_; }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const {
        return table_[a * order_ + b];
    }
    bool has_names() const noexcept { return !names_.empty(); }
    const std::string& name(std::size_t i) const { return names_[i]; }

    /// Index of the element with the given name; names only.
    std::size_t index_of(std::string_view name) const;

private:
    std::size_t order_;
    std::size_t identity_;
    std::vector<std::size_t> table_;
    std::vector<std::string> names_;
};

struct LoopReport {
    bool latin = false;        // every row and column is a permutation
    bool identity_ok = false;  // identity row/column act as the identity
    bool valid() const { return latin && identity_ok; }
    std::string detail;  // first violation, empty when valid
};

LoopReport validate_loop(const LoopTable& L);

/// Throws MalformedTable unless validate_loop passes.
void require_valid(const LoopTable& L);

/// z(x(zy)) == ((zx)z)y over all triples.
bool is_moufang(const LoopTable& L);

/// All four classical Moufang identity variants hold or fail together on
/// honest Moufang loops; checked as a property on the test tables.
bool moufang_variants_agree(const LoopTable& L);

bool is_associative(const LoopTable& L);

/// Doubles a group G into the loop on G u Gu:
///   g*h = gh, (gu)*h = (g h^-1)u, g*(hu) = (hg)u, (gu)*(hu) = h^-1 g.
/// Indices 0..n-1 are G in input order, n..2n-1 are Gu with g at i mapped
/// to gu at i+n; names become "g" and "g·u". Throws NotAGroup.
LoopTable m_g2(const LoopTable& G);

/// Least k >= 1 with the left-nested k-th power of g equal to the
/// identity. Requires a Moufang table (NotMoufang); additionally checks
/// that all bracketings of the m-th power agree for m <= min(k, 8) and
/// throws BracketingDisagreement if they ever differ.
std::size_t element_order(const LoopTable& L, std::size_t g);

/// Infinite sequence described by a finite prefix and a repeating cycle.
struct PeriodicSequence {
    std::vector<std::size_t> prefix;
    std::vector<std::size_t> cycle;  // nonempty

    std::size_t at(std::size_t i) const {
        if (i < prefix.size()) return prefix[i];
        return cycle[(i - prefix.size()) % cycle.size()];
    }
};

/// Certificate that the sequence reduces to the constant-identity
/// sequence: an element g occurring in the cycle, its order k, and blocks
/// of k consecutive occurrence positions whose left-nested products are
/// all the identity.
struct ReductionCertificate {
    std::size_t element = 0;
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> blocks;
};

ReductionCertificate ramsey_reduce(const LoopTable& L, const PeriodicSequence& s,
                                   std::size_t block_count = 3);

/// Certificate that a sequence over a doubled loop reduces to one over the
/// embedded group: either an infinite subsequence of group elements, or a
/// pairing of consecutive coset elements whose products land in the group.
struct GroupReductionCertificate {
    enum class Kind { Subsequence, Pairing };
    Kind kind = Kind::Subsequence;
    std::vector<std::size_t> positions;            // Subsequence: first few positions
    std::vector<std::array<std::size_t, 3>> pairs; // Pairing: (pos_a, pos_b, product)
};

GroupReductionCertificate mg2_reduce_to_group(const LoopTable& L,
                                              const PeriodicSequence& s,
                                              std::size_t item_count = 4);

// Built-in tables.
LoopTable cyclic_group(std::size_t n);
LoopTable symmetric_s3();
LoopTable octonion_sign_loop();  // order 16: +-e0 .. +-e7
/// "z<n>", "s3" or "octo16"; throws Error on unknown names.
LoopTable builtin_loop(std::string_view name);

/// Table file format: line 1 order, line 2 identity index, then n rows of
/// n indices, optionally a final "# names: ..." line.
LoopTable parse_loop_table(std::istream& in);
std::string format_loop_table(const LoopTable& L);

}  // namespace octoramsey
