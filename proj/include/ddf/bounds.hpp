#pragma once

#include "ddf/enumerate.hpp"
#include "ddf/interval.hpp"

namespace ddf {

// Hamilton cycles containing a fixed perfect matching: (n/2)! 2^(n/2) / n.
Int fixed_matching_cycle_count(int n);  // even n >= 4

// Hamilton cycles containing a fixed near-matching: floor(n/2)! 2^floor(n/2) / (n-1).
Int fixed_near_matching_cycle_count(int n);  // odd n >= 5

struct HamiltonFamilyBounds {
    BoundValue lower;   // (n-1)! / (2 floor(n/2)! (1+sqrt2)^n), enclosure
    Int upper;          // n! / (floor(n/2)! 2^floor(n/2))
    Int upper_weak;     // ceil(n/2)! 2^ceil(n/2)
};
HamiltonFamilyBounds hamilton_family_bounds(int n, unsigned bits = kDefaultPrecisionBits);

// Literal covering-count sum over s in [ceil(n/3), floor(n/2)]:
//   sum C(s, n-2s) 2^s (s-1)!
Int incompatibility_sum(int n);
// Chained closed form (1+sqrt2)^n floor(n/2)!.
BoundValue incompatibility_growth_bound(int n, unsigned bits = kDefaultPrecisionBits);

struct TwoRegularFamilyBounds {
    Int lower;                    // triangle-construction size
    bool lower_is_construction;   // true when 3 does not divide n
    BoundValue upper;             // e^sqrt(n) n! / floor(n/3)!
};
TwoRegularFamilyBounds two_regular_family_bounds(int n, unsigned bits = kDefaultPrecisionBits);

// Size of the triangle-based construction (all triangle factors when 3 | n,
// else factors on [3q] with a fixed cycle on the top r vertices).
Int triangle_construction_size(int n);

struct ShapeBounds {
    Rat f_upper;   // n! / (t! 2^t prod n_i)
    Rat c_lower;   // (k+l)! / (n t! prod n_i)
    Rat m_upper;   // n * n! / floor(n/3)!
    int odd_parts;      // k
    int single_edges;   // l, with 3k + 2l = n
};
ShapeBounds shape_bounds(const PartitionShape& shape);

// Exact p(n) via the pentagonal-number recurrence.
Int partition_count(int n);
// e^sqrt(n) / n.
BoundValue partition_count_growth_bound(int n, unsigned bits = kDefaultPrecisionBits);

}  // namespace ddf
