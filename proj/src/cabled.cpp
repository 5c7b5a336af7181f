#include "bowling/cabled.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "bowling/multiball.hpp"

namespace bowling {

namespace {

void require_width(int K) {
  if (K < 1) throw std::invalid_argument("cable width K must be at least 1");
}

void require_counts(int K, int a, int b) {
  require_width(K);
  if (a < 0 || a > K || b < 0 || b > K) {
    throw std::invalid_argument("ball counts a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                " must lie in 0.." + std::to_string(K));
  }
}

// Falling probabilities for every (a, b), indexed [a][b][c].
using FallTable = std::vector<std::vector<std::vector<QPoly>>>;

FallTable make_fall_table(int K) {
  const auto size = static_cast<std::size_t>(K) + 1;
  FallTable table(size, std::vector<std::vector<QPoly>>(size, std::vector<QPoly>(size)));
  for (int a = 0; a <= K; ++a)
    for (int b = 0; b <= K; ++b)
      for (int c = 0; c <= K; ++c)
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] =
            falling_probability(K, a, b, c);
  return table;
}

Transitions cabled_transitions(int i, std::span<const int> s, int K, const FallTable& table) {
  if (i < 1 || static_cast<std::size_t>(i) + 1 > s.size()) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(static_cast<long>(s.size()) - 1));
  }
  const auto over = static_cast<std::size_t>(i - 1);
  const int a = s[over];
  const int b = s[over + 1];
  if (a < 0 || a > K || b < 0 || b > K) throw std::invalid_argument("cable count outside 0..K");
  Transitions out;
  for (int c = 0; c <= std::min(a, K - b); ++c) {
    const QPoly& p = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
    if (p.is_zero()) continue;
    Counts next(s.begin(), s.end());
    next[over] = b + c;
    next[over + 1] = a - c;
    out.emplace_back(std::move(next), p);
  }
  return out;
}

std::vector<std::pair<int, int>> micro_crossings(int K, MicroOrder order) {
  std::vector<std::pair<int, int>> seq;  // (upper lane, lower lane)
  seq.reserve(static_cast<std::size_t>(K * K));
  switch (order) {
    case MicroOrder::UpperLaneMajor:
      for (int p = K - 1; p >= 0; --p)
        for (int r = 0; r < K; ++r) seq.emplace_back(p, r);
      break;
    case MicroOrder::LowerLaneMajor:
      for (int r = 0; r < K; ++r)
        for (int p = K - 1; p >= 0; --p) seq.emplace_back(p, r);
      break;
    case MicroOrder::AntiDiagonal:
      // (p, r) sits at distance (K-1-p) + r from the first crossing.
      for (int d = 0; d <= 2 * (K - 1); ++d)
        for (int r = 0; r < K; ++r) {
          int p = K - 1 - (d - r);
          if (p >= 0 && p < K) seq.emplace_back(p, r);
        }
      break;
  }
  return seq;
}

std::string describe(const FallDistribution& d) {
  std::string out = "{";
  for (const auto& [c, p] : d) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(c) + ": " + p.to_string();
  }
  return out + "}";
}

// Compares two distributions key by key, recording the first difference.
void compare_distributions(CheckReport& report, const FallDistribution& actual, const FallDistribution& expected,
                           const std::string& lhs, const std::string& rhs) {
  ++report.comparisons;
  if (actual == expected) return;
  report.fail(Mismatch{lhs, rhs, {}, {}, describe(expected), describe(actual)});
}

std::string cable_rho(const BraidWord& w) { return "rho_K(" + w.to_string() + ")"; }

}  // namespace

Transitions apply_generator_cabled(int i, std::span<const int> s, int K) {
  require_width(K);
  return cabled_transitions(i, s, K, make_fall_table(K));
}

PolyMatrix rho_cabled_matrix(const BraidWord& word, int K) {
  require_width(K);
  const FallTable table = make_fall_table(K);
  return transition_matrix(word, StateSpace(word.strands(), K),
                           [&](int i, std::span<const int> s) { return cabled_transitions(i, s, K, table); });
}

FallDistribution crossing_oracle_lanes(std::span<const int> upper, std::span<const int> lower, MicroOrder order) {
  if (upper.size() != lower.size() || upper.empty() || upper.size() > 16) {
    throw std::invalid_argument("oracle needs two lane vectors of equal width 1..16");
  }
  const int K = static_cast<int>(upper.size());
  auto to_mask = [](std::span<const int> lanes) {
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < lanes.size(); ++j) {
      if (lanes[j] != 0 && lanes[j] != 1) throw std::invalid_argument("lane occupancy must be 0 or 1");
      if (lanes[j]) mask |= 1U << j;
    }
    return mask;
  };
  const std::uint32_t lower0 = to_mask(lower);

  // (upper occupancy, lower occupancy) -> probability
  std::map<std::pair<std::uint32_t, std::uint32_t>, QPoly> dist{{{to_mask(upper), lower0}, QPoly::constant(1)}};
  const QPoly pass = QPoly::q();
  const QPoly fall{1, -1};
  for (auto [p, r] : micro_crossings(K, order)) {
    const std::uint32_t up_bit = 1U << p;
    const std::uint32_t low_bit = 1U << r;
    std::map<std::pair<std::uint32_t, std::uint32_t>, QPoly> next;
    for (const auto& [lanes, w] : dist) {
      auto [up, low] = lanes;
      if ((up & up_bit) && !(low & low_bit)) {
        next[{up & ~up_bit, low | low_bit}] += w * fall;
        next[lanes] += w * pass;
      } else {
        next[lanes] += w;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    dist = std::move(next);
  }

  FallDistribution out;
  const int lower_before = std::popcount(lower0);
  for (const auto& [lanes, w] : dist) {
    out[std::popcount(lanes.second) - lower_before] += w;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

FallDistribution crossing_oracle(int K, int a, int b, MicroOrder order) {
  require_counts(K, a, b);
  if (K > 16) throw std::invalid_argument("oracle supports K <= 16");
  std::vector<int> upper(static_cast<std::size_t>(K), 0), lower(static_cast<std::size_t>(K), 0);
  std::fill_n(upper.begin(), a, 1);
  std::fill_n(lower.begin(), b, 1);
  return crossing_oracle_lanes(upper, lower, order);
}

FallDistribution formula_distribution(int K, int a, int b) {
  require_counts(K, a, b);
  FallDistribution out;
  for (int c = 0; c <= K; ++c) {
    QPoly p = falling_probability(K, a, b, c);
    if (!p.is_zero()) out.emplace(c, std::move(p));
  }
  return out;
}

CheckReport check_cabled_formula(int K) {
  require_width(K);
  CheckReport report("falling formula vs lane oracle K=" + std::to_string(K));
  for (int a = 0; a <= K; ++a) {
    for (int b = 0; b <= K; ++b) {
      const FallDistribution oracle = crossing_oracle(K, a, b);
      for (int c = 0; c <= K; ++c) {
        ++report.comparisons;
        auto it = oracle.find(c);
        QPoly from_oracle = it == oracle.end() ? QPoly{} : it->second;
        QPoly from_formula = falling_probability(K, a, b, c);
        if (from_oracle != from_formula) {
          const std::string args = std::to_string(K) + "," + std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c);
          report.fail(Mismatch{"oracle(" + args + ")", "formula(" + args + ")", {}, {}, from_formula.to_string(),
                               from_oracle.to_string()});
        }
      }
    }
  }
  return report;
}

CheckReport check_oracle_placement_invariance(int K, int a, int b) {
  require_counts(K, a, b);
  if (K > 4) throw std::invalid_argument("placement enumeration is limited to K <= 4");
  CheckReport report("oracle placement invariance K=" + std::to_string(K) + " a=" + std::to_string(a) +
                             " b=" + std::to_string(b));
  const FallDistribution reference = crossing_oracle(K, a, b);

  // Each placement is a 0/1 vector; prev_permutation from the sorted-descending
  // start visits every arrangement once.
  std::vector<int> upper(static_cast<std::size_t>(K), 0);
  std::fill_n(upper.begin(), a, 1);
  std::size_t placements = 0;
  do {
    std::vector<int> lower(static_cast<std::size_t>(K), 0);
    std::fill_n(lower.begin(), b, 1);
    do {
      ++placements;
      compare_distributions(report, crossing_oracle_lanes(upper, lower), reference,
                            "oracle(upper=" + to_string(upper) + ", lower=" + to_string(lower) + ")",
                            "oracle(leftmost placement)");
    } while (std::prev_permutation(lower.begin(), lower.end()));
  } while (std::prev_permutation(upper.begin(), upper.end()));
  report.note = std::to_string(placements) + " placements";
  return report;
}

CheckReport check_micro_order_invariance(int K) {
  require_width(K);
  CheckReport report("oracle micro-crossing order invariance K=" + std::to_string(K));
  for (int a = 0; a <= K; ++a) {
    for (int b = 0; b <= K; ++b) {
      const FallDistribution reference = crossing_oracle(K, a, b, MicroOrder::UpperLaneMajor);
      for (MicroOrder order : all_micro_orders) {
        if (order == MicroOrder::UpperLaneMajor) continue;
        compare_distributions(report, crossing_oracle(K, a, b, order), reference,
                              "oracle order " + std::to_string(static_cast<int>(order)), "upper-lane-major order");
      }
    }
  }
  return report;
}

CheckReport check_cabled_braid_relation(int n, int K) {
  if (n < 3) throw std::invalid_argument("braid relation needs n >= 3");
  CheckReport report("cabled braid relation n=" + std::to_string(n) + " K=" + std::to_string(K));
  StateSpace space(n, K);
  for (int i = 1; i + 1 <= n - 1; ++i) {
    BraidWord lhs(n, {i, i + 1, i});
    BraidWord rhs(n, {i + 1, i, i + 1});
    report.compare(rho_cabled_matrix(lhs, K), rho_cabled_matrix(rhs, K), space, cable_rho(lhs), cable_rho(rhs));
  }
  return report;
}

CheckReport check_cabled_far_commutativity(int n, int K) {
  if (n < 4) throw std::invalid_argument("far commutativity needs n >= 4");
  CheckReport report("cabled far commutativity n=" + std::to_string(n) + " K=" + std::to_string(K));
  StateSpace space(n, K);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      BraidWord lhs(n, {i, j});
      BraidWord rhs(n, {j, i});
      report.compare(rho_cabled_matrix(lhs, K), rho_cabled_matrix(rhs, K), space, cable_rho(lhs), cable_rho(rhs));
    }
  }
  return report;
}

CheckReport check_single_lane_cable(int n, int max_length) {
  if (max_length < 0) throw std::invalid_argument("max_length must be non-negative");
  CheckReport report("rho_1 equals single-ball rho n=" + std::to_string(n) +
                             " length<=" + std::to_string(max_length));
  StateSpace space(n, 1);
  const int generators = n - 1;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 0; len <= max_length; ++len) {
    for (const auto& letters : layer) {
      BraidWord w(n, letters);
      report.compare(rho_cabled_matrix(w, 1), rho_matrix(w, 1), space, "rho_1(" + w.to_string() + ")",
                     "rho(" + w.to_string() + ")");
    }
    if (generators == 0) break;
    std::vector<std::vector<int>> next;
    for (const auto& letters : layer) {
      for (int g = 1; g <= generators; ++g) {
        next.push_back(letters);
        next.back().push_back(g);
      }
    }
    layer = std::move(next);
  }
  return report;
}

}  // namespace bowling
