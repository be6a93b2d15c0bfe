#ifndef PERMCOVER_COUNTING_HPP
#define PERMCOVER_COUNTING_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace permcover {

// All counts in this module are exact; no floating point anywhere.
// n is capped only by memory, not by kMaxN.
using ExactCount = boost::multiprecision::cpp_int;

ExactCount factorial(long long k);
ExactCount binomial(long long n, long long k);

// Maximum cardinality of a minimal inversion-complete subset of S_n:
// floor(n^2 / 4). Requires n >= 2.
ExactCount gamma_I(long long n);

// Maximum cardinality of a minimal pair-complete subset of S_n:
// max(n, floor(n^2 / 4)). Requires n >= 2.
ExactCount gamma_P(long long n);

// Number of maximum-cardinality minimal inversion-complete subsets.
ExactCount count_Q_star(long long n);

// Number of maximum-cardinality minimal pair-complete subsets.
ExactCount count_P_star(long long n);

// |F_{i,c,j}| = (c-1)! (n-c-1)!. Requires 1 <= c < n.
ExactCount family_size(long long n, long long c);

// Number of transversals of the family {F_{i,c,j} : i <= c < j}:
// family_size(n,c) raised to c(n-c).
ExactCount transversal_count(long long n, long long c);

}  // namespace permcover

#endif
