#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bowling/braid.hpp"
#include "bowling/matrix.hpp"

namespace bowling {

/// Per-position counts, position 1 first. Used both for balls per lane and
/// balls per cable of K lanes.
using Counts = std::vector<int>;

std::string to_string(std::span<const int> counts);

/// The set of count tuples (u_1..u_n) with 0 <= u_i <= bound, enumerated in
/// mixed radix: index(u) = sum u_i (bound+1)^(i-1).
class StateSpace {
 public:
  /// Throws std::invalid_argument if positions < 1, bound < 1, or the
  /// dimension would exceed max_dim.
  StateSpace(int positions, int bound);

  static constexpr std::size_t max_dim = std::size_t{1} << 24;

  int positions() const { return positions_; }
  int bound() const { return bound_; }
  std::size_t dim() const { return dim_; }

  std::size_t index(std::span<const int> counts) const;
  Counts state(std::size_t index) const;

 private:
  int positions_;
  int bound_;
  std::size_t dim_;
};

/// Outcomes of one crossing applied to one state.
using Transitions = std::vector<std::pair<Counts, QPoly>>;

/// rule(i, u) gives the distribution of outcomes when the balls described by u
/// pass through sigma_i.
using CrossingRule = std::function<Transitions(int generator, std::span<const int> counts)>;

/// Pushes every basis state through the word letter by letter and records the
/// resulting distribution as that state's column. The (v, u) entry is the
/// probability that input u produces output v, so the matrix of w1...wm is
/// M(wm)...M(w1).
PolyMatrix transition_matrix(const BraidWord& word, const StateSpace& space, const CrossingRule& rule);

/// Matrix of a formal combination: sum of coefficient * transition_matrix(word).
PolyMatrix combination_matrix(const HeckeElement& x, const StateSpace& space, const CrossingRule& rule);

}  // namespace bowling
