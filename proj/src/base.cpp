#include "slwin/base.hpp"

#include <algorithm>

namespace slwin {

std::string bits_to_string(const BitString& bits) {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits) s.push_back(b ? '1' : '0');
    return s;
}

BitString bits_from_string(const std::string& s) {
    BitString bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c == '0')
            bits.push_back(false);
        else if (c == '1')
            bits.push_back(true);
        else
            throw Error("bit string may contain only '0' and '1'");
    }
    return bits;
}

BitString length_lex_code(uint64_t index) {
    // The (i+1)-th positive integer in binary with the leading 1 removed
    // enumerates {0,1}* in length-lexicographic order.
    uint64_t v = index + 1;
    BitString bits;
    while (v > 1) {
        bits.push_back(v & 1);
        v >>= 1;
    }
    std::reverse(bits.begin(), bits.end());
    return bits;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

}  // namespace slwin
