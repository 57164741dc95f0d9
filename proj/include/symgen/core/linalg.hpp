#pragma once

#include "symgen/core/rational.hpp"

#include <cstddef>
#include <vector>

namespace symgen {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(IntegerMatrix m);

/// Rank over Q; each row is scaled to integers before elimination.
std::size_t rank(const RationalMatrix& m);

/// Basis of { v : m v = 0 } for a matrix with `columns` columns, in reduced
/// form (each basis vector has a 1 at its own free column).
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, std::size_t columns);

/// Some solution x of m x = rhs, or an empty vector when inconsistent.
std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& rhs, std::size_t columns);

}  // namespace symgen
