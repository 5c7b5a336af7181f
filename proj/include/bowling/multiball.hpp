#pragma once

// The multi-ball bowling representation of the positive braid monoid.
//
// Conventions: tuple slot i is position i. At sigma_i the lane entering at
// position i is the over lane and leaves at position i+1. With a balls on the
// over lane and b on the under lane, nothing falls when a <= b; when a > b,
// a-b balls fall with probability 1-q. Matrices act on column vectors of input
// distributions and the (v, u) entry is the probability that u bowls to v.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "bowling/braid.hpp"
#include "bowling/matrix.hpp"
#include "bowling/report.hpp"
#include "bowling/state_space.hpp"

namespace bowling {

using BallState = Counts;

std::size_t state_index(std::span<const int> u, int N);
BallState index_state(std::size_t idx, int n, int N);

/// Outcomes of the balls u passing through sigma_i.
Transitions apply_generator(int i, std::span<const int> u);

/// rho(word) with at most N balls per lane. N >= 1.
PolyMatrix rho_matrix(const BraidWord& word, int N);
/// Sum of coefficient * rho(word) over the terms of x.
PolyMatrix rho_element(const HeckeElement& x, int N);

/// rho(s_i s_j s_i) == rho(s_j s_i s_j) for every adjacent pair. Needs n >= 3.
CheckReport check_braid_relation(int n, int N);
/// rho(s_i s_j) == rho(s_j s_i) for every |i-j| > 1. Needs n >= 4.
CheckReport check_far_commutativity(int n, int N);

/// Source of generator matrices for check_hecke; the default is rho(sigma_i).
using GeneratorMatrices = std::function<PolyMatrix(int i)>;

/// (q I + rho(s_i)) (I - rho(s_i)) == 0 for every generator. Needs n >= 2.
CheckReport check_hecke(int n, int N, const GeneratorMatrices& generator = {});

/// rho(x_k) == 0, the factorisation rho(x_k) = rho(half_i) (I - rho(s_i)) for
/// each i in the window, and rho(x_k) rho(s_j) == -q rho(x_k) for each
/// generator s_j of the window.
CheckReport check_specht(int n, int N, int k);

/// At q = x, rho(s_i) x^-1 (rho(s_i) + (x-1) I) == I and the same product in
/// the other order. Throws std::invalid_argument when x == 0.
CheckReport check_inverse(int n, int N, const QScalar& x);

/// Structural properties of rho(word) for one word: every column sums to 1,
/// entries never change the total ball count, q=1 gives the permutation of
/// count tuples, and q=0 gives the deterministic "swap iff a <= b" map.
CheckReport check_word_properties(const BraidWord& word, int N);

/// check_word_properties on `count` random words with n drawn from
/// 1..max_n, N from 1..max_N, and length from 0..max_length.
CheckReport check_random_words(int max_n, int max_N, int count, int max_length, std::uint64_t seed);

}  // namespace bowling
