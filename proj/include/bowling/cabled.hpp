#pragma once

// The cabled representation: every lane becomes a cable of K parallel lanes,
// each lane holding at most one ball, and a ball falls with probability 1-q
// whenever it passes over an empty lane. States record only the number of
// balls per cable.
//
// The lane-level oracle models one cabled crossing directly. Upper lanes are
// numbered 0..K-1 with lane K-1 nearest the under cable; lower lanes 0..K-1
// with lane 0 nearest the over cable. Upper lane p therefore meets lower
// lanes 0, 1, ..., K-1 in turn, and lower lane r meets upper lanes K-1, ..., 0.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "bowling/braid.hpp"
#include "bowling/matrix.hpp"
#include "bowling/report.hpp"
#include "bowling/state_space.hpp"

namespace bowling {

using CableState = Counts;

/// Number of fallen balls -> probability. Zero probabilities are not stored.
using FallDistribution = std::map<int, QPoly>;

/// Outcomes of the cable counts s passing through sigma_i with cable width K:
/// positions (i, i+1) holding (a, b) become (b+c, a-c) with probability
/// falling_probability(K, a, b, c).
Transitions apply_generator_cabled(int i, std::span<const int> s, int K);

/// rho_K(word), dimension (K+1)^n.
PolyMatrix rho_cabled_matrix(const BraidWord& word, int K);

/// Orders in which the K*K lane crossings of one cabled crossing are
/// processed. Each is a linear extension of the geometric order.
enum class MicroOrder {
  UpperLaneMajor,  // upper lane K-1 crosses all lower lanes, then K-2, ...
  LowerLaneMajor,  // lower lane 0 is crossed by all upper lanes, then 1, ...
  AntiDiagonal,    // wavefront: crossings at equal distance from the corner together
};

inline constexpr MicroOrder all_micro_orders[] = {MicroOrder::UpperLaneMajor, MicroOrder::LowerLaneMajor,
                                                  MicroOrder::AntiDiagonal};

/// Lane-level enumeration of one cabled crossing with the given occupied
/// lanes (each vector has K entries, 0 or 1).
FallDistribution crossing_oracle_lanes(std::span<const int> upper, std::span<const int> lower,
                                       MicroOrder order = MicroOrder::UpperLaneMajor);

/// crossing_oracle_lanes with the a leftmost upper lanes and b leftmost
/// lower lanes occupied. Requires 0 <= a, b <= K <= 16.
FallDistribution crossing_oracle(int K, int a, int b, MicroOrder order = MicroOrder::UpperLaneMajor);

/// The formula's distribution for one crossing, for comparison with the oracle.
FallDistribution formula_distribution(int K, int a, int b);

/// Oracle and closed formula agree for every 0 <= a, b <= K and every c.
CheckReport check_cabled_formula(int K);
/// Every placement of a upper and b lower balls gives the same oracle
/// distribution. Requires K <= 4.
CheckReport check_oracle_placement_invariance(int K, int a, int b);
/// Every MicroOrder gives the same oracle distribution for all a, b.
CheckReport check_micro_order_invariance(int K);

/// rho_K(s_i s_j s_i) == rho_K(s_j s_i s_j) for adjacent pairs, n >= 3.
CheckReport check_cabled_braid_relation(int n, int K);
/// rho_K(s_i s_j) == rho_K(s_j s_i) for |i-j| > 1, n >= 4.
CheckReport check_cabled_far_commutativity(int n, int K);
/// rho_1(w) == rho(w) with N = 1 for every word of length <= max_length on n strands.
CheckReport check_single_lane_cable(int n, int max_length);

}  // namespace bowling
