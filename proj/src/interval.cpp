#include "ddf/interval.hpp"

#include <stdexcept>

namespace ddf {

namespace mp = boost::multiprecision;

Interval::Interval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::logic_error("interval endpoints out of order");
}

Interval Interval::operator*(const Rat& c) const {
    if (c >= 0) return {lo * c, hi * c};
    return {hi * c, lo * c};
}

Interval Interval::mul_positive(const Interval& o) const {
    if (lo < 0 || o.lo < 0) throw std::logic_error("mul_positive needs nonnegative operands");
    return {lo * o.lo, hi * o.hi};
}

Interval Interval::divide_into(const Rat& c) const {
    if (c < 0 || lo <= 0) throw std::logic_error("divide_into needs positive interval");
    return {c / hi, c / lo};
}

std::string Interval::to_string() const {
    return "[" + rat_str(lo) + ", " + rat_str(hi) + "]";
}

Interval sqrt_enclosure(const Rat& x, unsigned bits) {
    if (x < 0) throw std::invalid_argument("sqrt of negative value");
    if (x == 0) return Interval::point(0);
    // sqrt(p/q) = sqrt(p*q)/q; scale by 4^bits and take the integer sqrt.
    Int p = mp::numerator(x), q = mp::denominator(x);
    Int scaled = p * q << (2 * bits);
    Int s = mp::sqrt(scaled);  // floor sqrt
    Rat denom = Rat(q << bits);
    Interval out{Rat(s) / denom, Rat(s + 1) / denom};
    return out;
}

Interval exp_enclosure(const Rat& x, unsigned bits) {
    if (x < 0) throw std::invalid_argument("exp enclosure implemented for x >= 0");
    // Partial Taylor sum is a lower bound; the tail after N terms is below
    // 2 * x^(N+1)/(N+1)! once x/(N+2) <= 1/2.
    Rat term = 1, sum = 1;
    Rat eps(Int(1), Int(1) << bits);
    int i = 1;
    while (true) {
        term = term * x / i;
        sum += term;
        ++i;
        if (x * 2 <= i && term * 2 <= eps) break;
        if (i > 100000) throw std::logic_error("exp series failed to converge");
    }
    Rat tail = term * x / i * 2;
    return {sum, sum + tail};
}

Interval exp_enclosure(const Interval& x, unsigned bits) {
    return {exp_enclosure(x.lo, bits).lo, exp_enclosure(x.hi, bits).hi};
}

std::pair<Int, Int> silver_ratio_pair(int n) {
    if (n < 0) throw std::invalid_argument("nonnegative exponent required");
    Int a = 1, b = 0;  // (1+sqrt2)^0
    for (int i = 0; i < n; ++i) {
        Int a2 = a + 2 * b;
        Int b2 = a + b;
        a = a2;
        b = b2;
    }
    return {a, b};
}

Interval silver_ratio_power(int n, unsigned bits) {
    auto [a, b] = silver_ratio_pair(n);
    Interval s2 = sqrt_enclosure(2, bits);
    return {Rat(a) + s2.lo * b, Rat(a) + s2.hi * b};
}

Interval root_enclosure(const Int& v, int m, unsigned bits) {
    if (v < 0 || m < 1) throw std::invalid_argument("root_enclosure needs v >= 0, m >= 1");
    if (m == 1) return Interval::point(Rat(v));
    if (v == 0) return Interval::point(0);
    Int scaled = v << (static_cast<unsigned>(m) * bits);
    // floor m-th root by binary search
    Int lo = 0, hi = Int(1) << (static_cast<unsigned>(mp::msb(scaled)) / m + 2);
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (pow_int(mid, static_cast<unsigned>(m)) <= scaled)
            lo = mid;
        else
            hi = mid;
    }
    Rat denom = Rat(Int(1) << bits);
    return {Rat(lo) / denom, Rat(lo + 1) / denom};
}

BoundValue BoundValue::exact(Int v) {
    BoundValue b;
    b.kind = Kind::ExactInt;
    b.int_value = std::move(v);
    return b;
}

BoundValue BoundValue::exact(Rat v) {
    BoundValue b;
    b.kind = Kind::ExactRat;
    b.rat_value = std::move(v);
    return b;
}

BoundValue BoundValue::enclosure(Interval v, unsigned bits) {
    BoundValue b;
    b.kind = Kind::Enclosure;
    b.range = std::move(v);
    b.precision_bits = bits;
    return b;
}

Rat BoundValue::lo() const {
    switch (kind) {
        case Kind::ExactInt: return Rat(int_value);
        case Kind::ExactRat: return rat_value;
        case Kind::Enclosure: return range.lo;
    }
    return {};
}

Rat BoundValue::hi() const {
    switch (kind) {
        case Kind::ExactInt: return Rat(int_value);
        case Kind::ExactRat: return rat_value;
        case Kind::Enclosure: return range.hi;
    }
    return {};
}

std::string BoundValue::to_string() const {
    switch (kind) {
        case Kind::ExactInt: return int_value.str();
        case Kind::ExactRat: return rat_str(rat_value);
        case Kind::Enclosure: return range.to_string();
    }
    return {};
}

std::string order_name(Order o) {
    switch (o) {
        case Order::Less: return "less";
        case Order::Greater: return "greater";
        case Order::Indeterminate: return "indeterminate";
    }
    return "?";
}

Order compare(const BoundValue& value, const Rat& target) {
    if (value.hi() < target) return Order::Less;
    if (value.lo() > target) return Order::Greater;
    if (value.kind != BoundValue::Kind::Enclosure && value.lo() == target)
        return Order::Indeterminate;  // exact equality: neither side excludes
    return Order::Indeterminate;
}

Order compare_widening(const std::function<Interval(unsigned)>& make, const Rat& target,
                       unsigned start_bits, unsigned max_bits) {
    for (unsigned bits = start_bits; bits <= max_bits; bits *= 2) {
        Interval v = make(bits);
        if (v.hi < target) return Order::Less;
        if (v.lo > target) return Order::Greater;
    }
    return Order::Indeterminate;
}

}  // namespace ddf
