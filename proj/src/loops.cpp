#include "octoramsey/loops.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <sstream>

#include "octoramsey/units.hpp"

namespace octoramsey {

namespace {

std::vector<std::size_t> group_inverses(const LoopTable& G) {
    std::vector<std::size_t> inv(G.order());
    for (std::size_t g = 0; g < G.order(); ++g) {
        bool found = false;
        for (std::size_t h = 0; h < G.order(); ++h) {
            if (G.mul(g, h) == G.identity()) {
                inv[g] = h;
                found = true;
                break;
            }
        }
        if (!found) throw NotAGroup("element " + std::to_string(g) + " has no inverse");
    }
    return inv;
}

// Evaluates every bracketing of m copies of g and collects the distinct
// results.
std::vector<std::size_t> power_values(const LoopTable& L, std::size_t g, std::size_t m) {
    // All bracketings over positions [lo, hi) of the constant-g string.
    auto rec = [&](auto&& self, std::size_t count) -> std::vector<std::size_t> {
        if (count == 1) return {g};
        std::vector<std::size_t> out;
        for (std::size_t split = 1; split < count; ++split) {
            const auto ls = self(self, split);
            const auto rs = self(self, count - split);
            for (std::size_t l : ls)
                for (std::size_t r : rs) out.push_back(L.mul(l, r));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    return rec(rec, m);
}

bool is_mg2_shaped(const LoopTable& L, std::string& why) {
    if (L.order() % 2 != 0) {
        why = "order is odd";
        return false;
    }
    const std::size_t n = L.order() / 2;
    if (L.identity() >= n) {
        why = "identity lies in the coset half";
        return false;
    }
    for (std::size_t a = 0; a < L.order(); ++a) {
        for (std::size_t b = 0; b < L.order(); ++b) {
            const bool coset = (a >= n) ^ (b >= n);
            const bool lands_in_coset = L.mul(a, b) >= n;
            if (coset != lands_in_coset) {
                why = "products do not respect the two-coset grading";
                return false;
            }
        }
    }
    // The first half must be a group.
    std::vector<std::size_t> sub(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) sub[a * n + b] = L.mul(a, b);
    LoopTable G(n, L.identity(), std::move(sub));
    if (!validate_loop(G).valid() || !is_associative(G)) {
        why = "embedded half is not a group";
        return false;
    }
    return true;
}

}  // namespace

LoopTable::LoopTable(std::size_t order, std::size_t identity,
                     std::vector<std::size_t> table, std::vector<std::string> names)
    : order_(order), identity_(identity), table_(std::move(table)), names_(std::move(names)) {
    if (order_ == 0) throw MalformedTable("order must be positive");
    if (identity_ >= order_) throw MalformedTable("identity index out of range");
    if (table_.size() != order_ * order_)
        throw MalformedTable("table must have order*order entries");
    for (std::size_t v : table_)
        if (v >= order_) throw MalformedTable("table entry out of range");
    if (!names_.empty() && names_.size() != order_)
        throw MalformedTable("names must cover every element");
}

std::size_t LoopTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw MalformedTable("unknown element name: " + std::string(name));
}

LoopReport validate_loop(const LoopTable& L) {
    LoopReport report;
    const std::size_t n = L.order();
    report.latin = true;
    for (std::size_t a = 0; a < n && report.latin; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (std::size_t b = 0; b < n; ++b) {
            if (row[L.mul(a, b)]) {
                report.latin = false;
                report.detail = "row " + std::to_string(a) + " repeats an entry";
                break;
            }
            row[L.mul(a, b)] = true;
            if (col[L.mul(b, a)]) {
                report.latin = false;
                report.detail = "column " + std::to_string(a) + " repeats an entry";
                break;
            }
            col[L.mul(b, a)] = true;
        }
    }
    report.identity_ok = true;
    for (std::size_t a = 0; a < n; ++a) {
        if (L.mul(L.identity(), a) != a || L.mul(a, L.identity()) != a) {
            report.identity_ok = false;
            if (report.detail.empty())
                report.detail = "identity fails on element " + std::to_string(a);
            break;
        }
    }
    return report;
}

void require_valid(const LoopTable& L) {
    const LoopReport report = validate_loop(L);
    if (!report.valid()) throw MalformedTable(report.detail);
}

bool is_moufang(const LoopTable& L) {
    const std::size_t n = L.order();
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (L.mul(z, L.mul(x, L.mul(z, y))) != L.mul(L.mul(L.mul(z, x), z), y))
                    return false;
    return true;
}

bool moufang_variants_agree(const LoopTable& L) {
    const std::size_t n = L.order();
    bool v1 = true, v2 = true, v3 = true, v4 = true;
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                v1 = v1 && L.mul(z, L.mul(x, L.mul(z, y))) == L.mul(L.mul(L.mul(z, x), z), y);
                v2 = v2 && L.mul(x, L.mul(z, L.mul(y, z))) == L.mul(L.mul(L.mul(x, z), y), z);
                v3 = v3 && L.mul(L.mul(z, x), L.mul(y, z)) == L.mul(L.mul(z, L.mul(x, y)), z);
                v4 = v4 && L.mul(L.mul(z, x), L.mul(y, z)) == L.mul(z, L.mul(L.mul(x, y), z));
            }
    return v1 == v2 && v2 == v3 && v3 == v4;
}

bool is_associative(const LoopTable& L) {
    const std::size_t n = L.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (L.mul(a, L.mul(b, c)) != L.mul(L.mul(a, b), c)) return false;
    return true;
}

LoopTable m_g2(const LoopTable& G) {
    if (!validate_loop(G).valid()) throw NotAGroup("input table is not a loop");
    if (!is_associative(G)) throw NotAGroup("input table is not associative");
    const std::vector<std::size_t> inv = group_inverses(G);

    const std::size_t n = G.order();
    const std::size_t m = 2 * n;
    std::vector<std::size_t> table(m * m);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            table[a * m + b] = G.mul(a, b);                     // g h
            table[(a + n) * m + b] = G.mul(a, inv[b]) + n;      // (gu) h   = (g h^-1)u
            table[a * m + (b + n)] = G.mul(b, a) + n;           // g (hu)   = (hg)u
            table[(a + n) * m + (b + n)] = G.mul(inv[b], a);    // (gu)(hu) = h^-1 g
        }
    }

    std::vector<std::string> names;
    names.reserve(m);
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(G.has_names() ? G.name(i) : std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) names.push_back(names[i] + "·u");

    return LoopTable(m, G.identity(), std::move(table), std::move(names));
}

std::size_t element_order(const LoopTable& L, std::size_t g) {
    if (g >= L.order()) throw MalformedTable("element index out of range");
    if (!is_moufang(L)) throw NotMoufang("table fails the Moufang identity");

    std::size_t k = 1;
    std::size_t p = g;
    while (p != L.identity()) {
        p = L.mul(p, g);
        ++k;
        if (k > L.order())
            throw Error("power chain exceeded the loop order without hitting the identity");
    }
    for (std::size_t m = 2; m <= std::min<std::size_t>(k, 8); ++m)
        if (power_values(L, g, m).size() != 1)
            throw BracketingDisagreement("powers of element " + std::to_string(g) +
                                         " disagree across bracketings at exponent " +
                                         std::to_string(m));
    return k;
}

ReductionCertificate ramsey_reduce(const LoopTable& L, const PeriodicSequence& s,
                                   std::size_t block_count) {
    if (s.cycle.empty()) throw MalformedTable("cycle must be nonempty");
    for (std::size_t v : s.prefix)
        if (v >= L.order()) throw MalformedTable("sequence element out of range");
    for (std::size_t v : s.cycle)
        if (v >= L.order()) throw MalformedTable("sequence element out of range");
    if (!is_moufang(L)) throw NotMoufang("table fails the Moufang identity");

    ReductionCertificate cert;
    cert.element = *std::min_element(s.cycle.begin(), s.cycle.end());
    cert.order = element_order(L, cert.element);

    std::vector<std::size_t> block;
    for (std::size_t i = 0; cert.blocks.size() < block_count; ++i) {
        if (s.at(i) != cert.element) continue;
        block.push_back(i);
        if (block.size() == cert.order) {
            cert.blocks.push_back(block);
            block.clear();
        }
    }
    return cert;
}

GroupReductionCertificate mg2_reduce_to_group(const LoopTable& L,
                                              const PeriodicSequence& s,
                                              std::size_t item_count) {
    std::string why;
    if (!is_mg2_shaped(L, why)) throw NotMG2Shaped("not a doubled group table: " + why);
    if (s.cycle.empty()) throw MalformedTable("cycle must be nonempty");
    for (std::size_t v : s.prefix)
        if (v >= L.order()) throw MalformedTable("sequence element out of range");
    for (std::size_t v : s.cycle)
        if (v >= L.order()) throw MalformedTable("sequence element out of range");

    const std::size_t n = L.order() / 2;
    GroupReductionCertificate cert;
    const bool cycle_hits_group =
        std::any_of(s.cycle.begin(), s.cycle.end(), [n](std::size_t v) { return v < n; });

    if (cycle_hits_group) {
        cert.kind = GroupReductionCertificate::Kind::Subsequence;
        for (std::size_t i = 0; cert.positions.size() < item_count; ++i)
            if (s.at(i) < n) cert.positions.push_back(i);
        return cert;
    }

    // Entire cycle lies in the coset: pair consecutive coset elements past
    // the prefix; each product lands in the group by the grading.
    cert.kind = GroupReductionCertificate::Kind::Pairing;
    std::size_t i = s.prefix.size();
    while (cert.pairs.size() < item_count) {
        while (s.at(i) < n) ++i;  // skip stray group elements (none in the cycle)
        std::size_t a = i++;
        while (s.at(i) < n) ++i;
        std::size_t b = i++;
        const std::size_t product = L.mul(s.at(a), s.at(b));
        cert.pairs.push_back({a, b, product});
    }
    return cert;
}

LoopTable cyclic_group(std::size_t n) {
    if (n == 0) throw MalformedTable("cyclic group order must be positive");
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return LoopTable(n, 0, std::move(table), std::move(names));
}

LoopTable symmetric_s3() {
    // Permutations of {0,1,2} in lexicographic one-line order.
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                      {0, 2, 1},
                                                      {1, 0, 2},
                                                      {1, 2, 0},
                                                      {2, 0, 1},
                                                      {2, 1, 0}}};
    auto find = [&](const std::array<int, 3>& p) -> std::size_t {
        for (std::size_t i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        throw Error("permutation lookup failed");
    };
    std::vector<std::size_t> table(36);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[static_cast<std::size_t>(x)] =
                perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
            table[a * 6 + b] = find(c);
        }
    std::vector<std::string> names = {"e", "(23)", "(12)", "(123)", "(132)", "(13)"};
    return LoopTable(6, 0, std::move(table), std::move(names));
}

LoopTable octonion_sign_loop() {
    // Indices 0..7 are +e_j, 8..15 are -e_j.
    auto encode = [](SignedUnit u) -> std::size_t {
        return static_cast<std::size_t>(u.index) + (u.sign < 0 ? 8u : 0u);
    };
    auto decode = [](std::size_t i) -> SignedUnit {
        return {i >= 8 ? -1 : +1, static_cast<int>(i % 8)};
    };
    std::vector<std::size_t> table(256);
    for (std::size_t a = 0; a < 16; ++a)
        for (std::size_t b = 0; b < 16; ++b)
            table[a * 16 + b] = encode(unit_mul(decode(a), decode(b)));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < 16; ++i) names.push_back(to_string(decode(i)));
    return LoopTable(16, 0, std::move(table), std::move(names));
}

LoopTable builtin_loop(std::string_view name) {
    if (name == "s3") return symmetric_s3();
    if (name == "octo16") return octonion_sign_loop();
    if (name.size() >= 2 && name[0] == 'z') {
        std::size_t n = 0;
        for (char c : name.substr(1)) {
            if (c < '0' || c > '9') throw Error("unknown loop name: " + std::string(name));
            n = n * 10 + static_cast<std::size_t>(c - '0');
        }
        return cyclic_group(n);
    }
    throw Error("unknown loop name: " + std::string(name));
}

LoopTable parse_loop_table(std::istream& in) {
    std::size_t order = 0;
    if (!(in >> order)) throw MalformedTable("missing order");
    std::size_t identity = 0;
    if (!(in >> identity)) throw MalformedTable("missing identity index");
    if (order == 0) throw MalformedTable("order must be positive");
    std::vector<std::size_t> table;
    table.reserve(order * order);
    for (std::size_t i = 0; i < order * order; ++i) {
        long long v = 0;
        if (!(in >> v)) throw MalformedTable("table truncated");
        if (v < 0) throw MalformedTable("table entry out of range");
        table.push_back(static_cast<std::size_t>(v));
    }
    std::vector<std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash == std::string::npos) continue;
        std::istringstream rest(line.substr(hash + 1));
        std::string tag;
        rest >> tag;
        if (tag != "names:") continue;
        std::string token;
        while (rest >> token) names.push_back(token);
    }
    return LoopTable(order, identity, std::move(table), std::move(names));
}

std::string format_loop_table(const LoopTable& L) {
    std::ostringstream os;
    os << L.order() << '\n' << L.identity() << '\n';
    for (std::size_t a = 0; a < L.order(); ++a) {
        for (std::size_t b = 0; b < L.order(); ++b) {
            if (b) os << ' ';
            os << L.mul(a, b);
        }
        os << '\n';
    }
    if (L.has_names()) {
        os << "# names:";
        for (std::size_t i = 0; i < L.order(); ++i) os << ' ' << L.name(i);
        os << '\n';
    }
    return os.str();
}

}  // namespace octoramsey
