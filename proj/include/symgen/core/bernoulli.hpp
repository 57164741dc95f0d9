#pragma once

#include "symgen/core/rational.hpp"

namespace symgen {

/// B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);

}  // namespace symgen
