#include "ddf/arith.hpp"

#include <cctype>

namespace ddf {

Rat parse_exact_number(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty number");

    bool negative = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
    }

    auto digits = [&](std::size_t& pos) {
        std::string d;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) d += s[pos++];
        return d;
    };

    std::string intpart = digits(i);
    Int num, den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::string denpart = digits(i);
        if (intpart.empty() || denpart.empty() || i != s.size())
            throw std::invalid_argument("malformed rational \"" + text + "\"");
        num = Int(intpart);
        den = Int(denpart);
        if (den == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    } else if (i < s.size() && s[i] == '.') {
        ++i;
        std::string frac = digits(i);
        if ((intpart.empty() && frac.empty()) || i != s.size())
            throw std::invalid_argument("malformed decimal \"" + text + "\"");
        num = Int(intpart.empty() ? "0" : intpart);
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else {
        if (intpart.empty() || i != s.size())
            throw std::invalid_argument("malformed number \"" + text + "\"");
        num = Int(intpart);
    }
    Rat r(num, den);
    return negative ? -r : r;
}

}  // namespace ddf
