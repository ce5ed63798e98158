#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace shadow {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero invariant factors of an integer matrix, positive and in
/// divisibility order. Pivots are the smallest nonzero entry by absolute
/// value, ties broken by lowest row then column.
std::vector<BigInt> smith_invariants(IntMatrix m);

/// Rank over Z/2 of the matrix with entries reduced mod 2.
int rank_mod2(const IntMatrix& m);

}  // namespace shadow
