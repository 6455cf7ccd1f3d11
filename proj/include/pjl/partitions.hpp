#pragma once

#include "pjl/core_states.hpp"
#include "pjl/numeric.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace pjl {

// Parts in strictly decreasing order.
using Partition = std::vector<int>;

// All partitions of n into exactly t distinct parts, largest first part first.
std::vector<Partition> distinct_partitions(int n, int t);
// Largest t with t(t+1)/2 <= n (0 when n < 1).
int max_parts(int n);

// Exact c_t(n); 0 for n <= 0. Memoized per process. Throws std::logic_error
// if the partition sum is not an integer.
BigInt c(int t, int n);
// Uncached evaluation of the same sum as a rational.
Rational c_rational(int t, int n);

// Seed or read the in-process memo (used by the persistent cache).
void seed_c(int t, int n, const BigInt& value);
std::vector<std::tuple<int, int, BigInt>> memoized_c();

// A cyclic tuple of pairwise disjoint nonempty sets; each set sorted
// ascending. Canonical form is the least rotation.
using SpacingSet = std::vector<int>;
using SpacingCollection = std::vector<SpacingSet>;

void validate_collection(const SpacingCollection& x);
SpacingCollection canonical_rotation(const SpacingCollection& x);
int collection_period(const SpacingCollection& x);

std::vector<SpacingCollection> enumerate_spacing_collections(int t, int n);

// The 2-ball normal prime cycle with the given spacing sets, canonical rotation.
Cycle pattern_of_spacing_collection(const SpacingCollection& x);
SpacingCollection spacings_of_pattern(const Cycle& cycle);

std::string format_collection(const SpacingCollection& x);

}  // namespace pjl
