#include "ddf/bounds.hpp"

#include <stdexcept>
#include <vector>

namespace ddf {

Int fixed_matching_cycle_count(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("even n >= 4 required, got " + std::to_string(n));
    return exact_div(factorial(n / 2) * pow_int(2, static_cast<unsigned>(n / 2)), n);
}

Int fixed_near_matching_cycle_count(int n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("odd n >= 5 required, got " + std::to_string(n));
    int h = n / 2;
    return exact_div(factorial(h) * pow_int(2, static_cast<unsigned>(h)), n - 1);
}

HamiltonFamilyBounds hamilton_family_bounds(int n, unsigned bits) {
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    HamiltonFamilyBounds b;
    int h = n / 2, hc = (n + 1) / 2;
    Rat numerator = Rat(factorial(n - 1), 2 * factorial(h));
    b.lower = BoundValue::enclosure(silver_ratio_power(n, bits).divide_into(numerator), bits);
    b.upper = factorial(n) / (factorial(h) * pow_int(2, static_cast<unsigned>(h)));
    b.upper_weak = factorial(hc) * pow_int(2, static_cast<unsigned>(hc));
    return b;
}

Int incompatibility_sum(int n) {
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    Int total = 0;
    for (int s = (n + 2) / 3; s <= n / 2; ++s)
        total += binomial(s, n - 2 * s) * pow_int(2, static_cast<unsigned>(s)) * factorial(s - 1);
    return total;
}

BoundValue incompatibility_growth_bound(int n, unsigned bits) {
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    Interval v = silver_ratio_power(n, bits) * Rat(factorial(n / 2));
    return BoundValue::enclosure(v, bits);
}

Int triangle_construction_size(int n) {
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    int q = n % 3 == 0 ? n / 3 : n / 3 - 1;
    return exact_div(factorial(3 * q), factorial(q) * pow_int(6, static_cast<unsigned>(q)));
}

TwoRegularFamilyBounds two_regular_family_bounds(int n, unsigned bits) {
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    TwoRegularFamilyBounds b;
    b.lower_is_construction = n % 3 != 0;
    b.lower = triangle_construction_size(n);
    Interval e = exp_enclosure(sqrt_enclosure(n, bits), bits);
    b.upper = BoundValue::enclosure(e * Rat(factorial(n), factorial(n / 3)), bits);
    return b;
}

ShapeBounds shape_bounds(const PartitionShape& shape) {
    shape.require_two_regular(shape.n);
    int n = shape.n;
    int t = static_cast<int>(shape.parts.size());
    ShapeBounds b;
    b.odd_parts = 0;
    Int prod = 1;
    for (int p : shape.parts) {
        b.odd_parts += p % 2;
        prod *= p;
    }
    b.single_edges = (n - 3 * b.odd_parts) / 2;
    b.f_upper = Rat(factorial(n), factorial(t) * pow_int(2, static_cast<unsigned>(t)) * prod);
    b.c_lower = Rat(factorial(b.odd_parts + b.single_edges), n * factorial(t) * prod);
    b.m_upper = Rat(n * factorial(n), factorial(n / 3));
    return b;
}

Int partition_count(int n) {
    if (n < 0) throw std::invalid_argument("n >= 0 required");
    std::vector<Int> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int total = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Int term = 0;
            if (g1 <= m) term += p[m - g1];
            if (g2 <= m) term += p[m - g2];
            if (k % 2 == 1)
                total += term;
            else
                total -= term;
        }
        p[m] = total;
    }
    return p[n];
}

BoundValue partition_count_growth_bound(int n, unsigned bits) {
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    Interval e = exp_enclosure(sqrt_enclosure(n, bits), bits);
    return BoundValue::enclosure(e * Rat(1, n), bits);
}

}  // namespace ddf
