#pragma once

#include <vector>

#include "triqubit/state.hpp"

namespace triqubit {

/// Sum of product states: sum_m coeff_m |a_m> |b_m> |c_m> with unit local
/// vectors. Covers canonical, symmetric, GHZ, minimal and real six-term
/// decompositions alike.
struct ProductDecomposition {
  struct Term {
    cd coeff;
    Vector2cd a;
    Vector2cd b;
    Vector2cd c;
  };
  std::vector<Term> terms;

  /// Re-sums the terms; throws if the result is not a unit vector.
  PureState3 to_state() const;
};

}  // namespace triqubit
