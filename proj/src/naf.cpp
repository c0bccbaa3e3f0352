#include "octoramsey/naf.hpp"

#include <sstream>

namespace octoramsey {

namespace {

// Residue of a modulo 4 in {0,1,2,3}.
int mod4(const BigInt& a) {
    int r = static_cast<int>(a % 4);
    return r < 0 ? r + 4 : r;
}

}  // namespace

NafDigits naf_encode(BigInt a) {
    NafDigits out;
    while (!a.is_zero()) {
        const int m = mod4(a);
        if (m % 2 == 0) {
            out.digits.push_back(0);
        } else {
            const std::int8_t d = (m == 1) ? 1 : -1;
            out.digits.push_back(d);
            a -= d;
        }
        a /= 2;
    }
    return out;
}

BigInt naf_decode(const NafDigits& d) {
    BigInt value = 0;
    BigInt power = 1;
    for (std::size_t j = 0; j < d.digits.size(); ++j) {
        const int q = d.digits[j];
        if (q < -1 || q > 1)
            throw InvalidDigits("digit out of range at position " + std::to_string(j));
        if (j + 1 < d.digits.size() && q != 0 && d.digits[j + 1] != 0)
            throw InvalidDigits("adjacent nonzero digits at position " + std::to_string(j));
        if (q != 0) value += q * power;
        power <<= 1;
    }
    return value;
}

std::string to_string(const NafDigits& d) {
    if (d.digits.empty()) return "0";
    std::string out;
    out.reserve(d.digits.size());
    for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it)
        out.push_back(*it == 0 ? '0' : (*it == 1 ? '1' : 'T'));
    return out;
}

NafDigits naf_from_string(std::string_view text) {
    if (text == "0") return {};
    NafDigits out;
    out.digits.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
        switch (*it) {
            case '0': out.digits.push_back(0); break;
            case '1': out.digits.push_back(1); break;
            case 'T': out.digits.push_back(-1); break;
            default: throw InvalidDigits("unknown digit character");
        }
    }
    // Reject junk early; adjacency is validated here as well.
    naf_decode(out);
    if (!out.digits.empty() && out.digits.back() == 0)
        throw InvalidDigits("most significant digit must be nonzero");
    return out;
}

BigInt SparseDyadic::to_integer() const {
    BigInt value = 0;
    for (const auto& [exp, sign] : terms_) {
        if (exp < 0 || exp > (1u << 26))
            throw Error("exponent too large to materialize: " + exp.str());
        BigInt power = BigInt(1) << static_cast<unsigned>(exp);
        value += sign * power;
    }
    return value;
}

std::string SparseDyadic::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << ' ';
        os << (it->second > 0 ? '+' : '-') << "2^" << it->first;
        first = false;
    }
    return os.str();
}

SparseDyadic sd_from_terms(std::span<const std::pair<BigInt, int>> terms,
                           NormalizeStats* stats) {
    // Accumulate raw coefficients per exponent.
    std::map<BigInt, long long> acc;
    for (const auto& [exp, sign] : terms) {
        auto [it, inserted] = acc.emplace(exp, sign);
        if (!inserted) {
            it->second += sign;
            if (stats) ++stats->merges;
        }
    }

    // Sweep from the least exponent upward, emitting NAF digits. Each
    // position is finalized exactly once: carries only ever move up.
    SparseDyadic out;
    while (!acc.empty()) {
        auto it = acc.begin();
        const BigInt exp = it->first;
        const long long c = it->second;
        acc.erase(it);
        if (c == 0) continue;
        if (c % 2 == 0) {
            acc[exp + 1] += c / 2;
            if (stats) ++stats->carries;
            continue;
        }
        auto next = acc.find(exp + 1);
        const long long c1 = (next == acc.end()) ? 0 : next->second;
        long long m = (c + 2 * c1) % 4;
        if (m < 0) m += 4;
        const int digit = (m == 1) ? 1 : -1;
        out.terms_.emplace_hint(out.terms_.end(), exp, digit);
        const long long carry = (c - digit) / 2;
        if (carry != 0) {
            acc[exp + 1] += carry;
            if (stats) ++stats->carries;
        }
    }
    return out;
}

}  // namespace octoramsey
