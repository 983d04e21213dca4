#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ddf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative " + std::to_string(n));
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;  // exact at every step
    }
    return b;
}

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

// Quotient that must be exact; throws otherwise.
inline Int exact_div(const Int& num, const Int& den) {
    if (den == 0 || num % den != 0)
        throw std::logic_error("non-exact division " + num.str() + "/" + den.str());
    return num / den;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
}

// "num/den" with den==1 collapsed to a plain integer string.
inline std::string rat_str(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "3", "-3", "3/4", "0.25" exactly (no floating point involved).
Rat parse_exact_number(const std::string& text);

}  // namespace ddf
