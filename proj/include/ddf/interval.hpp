#pragma once

#include <functional>
#include <string>

#include "ddf/arith.hpp"

namespace ddf {

// Rational-endpoint enclosure of a real value.
struct Interval {
    Rat lo, hi;

    Interval() = default;
    Interval(Rat lo, Rat hi);
    static Interval point(const Rat& r) { return {r, r}; }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& r) const { return lo <= r && r <= hi; }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator*(const Rat& c) const;        // c may be negative
    Interval mul_positive(const Interval& o) const;  // both operands >= 0
    Interval divide_into(const Rat& c) const;        // c / *this, all positive

    std::string to_string() const;
};

inline constexpr unsigned kDefaultPrecisionBits = 128;

// Enclosures with width <= 2^-bits (relative to the scale of the value).
Interval sqrt_enclosure(const Rat& x, unsigned bits = kDefaultPrecisionBits);
Interval exp_enclosure(const Rat& x, unsigned bits = kDefaultPrecisionBits);   // x >= 0
Interval exp_enclosure(const Interval& x, unsigned bits = kDefaultPrecisionBits);
// (1 + sqrt(2))^n, from the exact integer pair a + b*sqrt(2).
Interval silver_ratio_power(int n, unsigned bits = kDefaultPrecisionBits);
std::pair<Int, Int> silver_ratio_pair(int n);  // (a, b) with (1+sqrt 2)^n = a + b*sqrt 2
// v^(1/m) for integer v >= 0, m >= 1.
Interval root_enclosure(const Int& v, int m, unsigned bits = kDefaultPrecisionBits);

// Exact integer, exact rational, or enclosure of an irrational expression.
struct BoundValue {
    enum class Kind { ExactInt, ExactRat, Enclosure };
    Kind kind = Kind::ExactInt;
    Int int_value;
    Rat rat_value;
    Interval range;
    unsigned precision_bits = 0;

    static BoundValue exact(Int v);
    static BoundValue exact(Rat v);
    static BoundValue enclosure(Interval v, unsigned bits);

    Rat lo() const;
    Rat hi() const;
    std::string to_string() const;
};

enum class Order { Less, Greater, Indeterminate };

std::string order_name(Order o);

// Decided only when the value's range excludes the target.
Order compare(const BoundValue& value, const Rat& target);

// Re-evaluates the enclosure at doubling precision until the comparison is
// decided or max_bits is reached.
Order compare_widening(const std::function<Interval(unsigned)>& make, const Rat& target,
                       unsigned start_bits = kDefaultPrecisionBits,
                       unsigned max_bits = 4096);

}  // namespace ddf
