#include "bowling/state_space.hpp"

#include <stdexcept>

namespace bowling {

std::string to_string(std::span<const int> counts) {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out + "]";
}

StateSpace::StateSpace(int positions, int bound) : positions_(positions), bound_(bound), dim_(1) {
  if (positions < 1) throw std::invalid_argument("need at least one position");
  if (bound < 1) throw std::invalid_argument("per-position bound must be at least 1");
  const auto radix = static_cast<std::size_t>(bound) + 1;
  for (int i = 0; i < positions; ++i) {
    if (dim_ > max_dim / radix) {
      throw std::invalid_argument("state space (" + std::to_string(radix) + ")^" +
                                  std::to_string(positions) + " is too large");
    }
    dim_ *= radix;
  }
}

std::size_t StateSpace::index(std::span<const int> counts) const {
  if (counts.size() != static_cast<std::size_t>(positions_)) {
    throw std::out_of_range("state has " + std::to_string(counts.size()) + " entries, expected " +
                            std::to_string(positions_));
  }
  const auto radix = static_cast<std::size_t>(bound_) + 1;
  std::size_t idx = 0;
  for (std::size_t i = counts.size(); i-- > 0;) {
    if (counts[i] < 0 || counts[i] > bound_) {
      throw std::out_of_range("count " + std::to_string(counts[i]) + " outside 0.." + std::to_string(bound_));
    }
    idx = idx * radix + static_cast<std::size_t>(counts[i]);
  }
  return idx;
}

Counts StateSpace::state(std::size_t index) const {
  if (index >= dim_) throw std::out_of_range("state index " + std::to_string(index) + " >= " + std::to_string(dim_));
  const auto radix = static_cast<std::size_t>(bound_) + 1;
  Counts out(static_cast<std::size_t>(positions_));
  for (auto& c : out) {
    c = static_cast<int>(index % radix);
    index /= radix;
  }
  return out;
}

PolyMatrix transition_matrix(const BraidWord& word, const StateSpace& space, const CrossingRule& rule) {
  if (word.strands() != space.positions()) {
    throw std::invalid_argument("word has " + std::to_string(word.strands()) + " strands but states have " +
                                std::to_string(space.positions()) + " positions");
  }
  PolyMatrix m(space.dim());
  for (std::size_t col = 0; col < space.dim(); ++col) {
    PolyMatrix::Column dist{{col, QPoly::constant(1)}};
    for (int g : word.letters()) {
      PolyMatrix::Column next;
      for (const auto& [idx, weight] : dist) {
        for (auto& [out, p] : rule(g, space.state(idx))) {
          auto [it, inserted] = next.try_emplace(space.index(out), weight * p);
          if (!inserted) it->second += weight * p;
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      dist = std::move(next);
    }
    m.set_column(col, std::move(dist));
  }
  return m;
}

PolyMatrix combination_matrix(const HeckeElement& x, const StateSpace& space, const CrossingRule& rule) {
  PolyMatrix total(space.dim());
  for (const auto& [word, coeff] : x.terms()) {
    total += transition_matrix(word, space, rule).scaled(coeff);
  }
  return total;
}

}  // namespace bowling
