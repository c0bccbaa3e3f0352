#include "octoramsey/units.hpp"

namespace octoramsey {

std::string to_string(SignedUnit u) {
    std::string out;
    if (u.sign < 0) out.push_back('-');
    out.push_back('e');
    out.push_back(static_cast<char>('0' + u.index));
    return out;
}

SignedUnit signed_unit_from_string(std::string_view text) {
    std::size_t pos = 0;
    int sign = +1;
    if (pos < text.size() && text[pos] == '-') {
        sign = -1;
        ++pos;
    }
    if (pos >= text.size() || text[pos] != 'e')
        throw SyntaxError("expected unit octonion", pos);
    ++pos;
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '7')
        throw SyntaxError("unit index must be 0..7", pos);
    const int index = text[pos] - '0';
    ++pos;
    if (pos != text.size()) throw SyntaxError("trailing characters after unit", pos);
    return {sign, index};
}

}  // namespace octoramsey
