#include "doctest.h"

#include <stdexcept>

#include "bowling/cabled.hpp"
#include "bowling/multiball.hpp"

using namespace bowling;

namespace {

BraidWord w(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

const QPoly q = QPoly::q();
const QPoly one_minus_q{1, -1};

// Values frozen from an independent symbolic enumeration of the lane model.
const QPoly two_over_empty_c0 = QPoly::monomial(4);
const QPoly two_over_empty_c1{0, 1, 1, -1, -1};  // q(1-q)(1+q)^2
const QPoly two_over_empty_c2{1, -1, -1, 1};     // (1+q)(1-q)^2

}  // namespace

TEST_CASE("apply_generator_cabled") {
  CHECK(apply_generator_cabled(1, Counts{1, 0}, 1) == Transitions{{Counts{0, 1}, q}, {Counts{1, 0}, one_minus_q}});
  CHECK(apply_generator_cabled(1, Counts{2, 0}, 2) == Transitions{{Counts{0, 2}, two_over_empty_c0},
                                                                  {Counts{1, 1}, two_over_empty_c1},
                                                                  {Counts{2, 0}, two_over_empty_c2}});
  CHECK(apply_generator_cabled(1, Counts{1, 2}, 2) == Transitions{{Counts{2, 1}, QPoly{1}}});
  CHECK_THROWS_AS(apply_generator_cabled(2, Counts{1, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(apply_generator_cabled(1, Counts{3, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(apply_generator_cabled(1, Counts{1, 0}, 0), std::invalid_argument);
}

TEST_CASE("rho_cabled_matrix") {
  CHECK(rho_cabled_matrix(w(2, {}), 3) == PolyMatrix::identity(16));
  CHECK(rho_cabled_matrix(w(3, {1, 2, 1}), 2) == rho_cabled_matrix(w(3, {2, 1, 2}), 2));
  CHECK(rho_cabled_matrix(w(3, {1, 2, 1}), 2).dim() == 27);
}

TEST_CASE("single-lane cables reproduce the one-per-lane representation") {
  for (int n = 1; n <= 3; ++n) {
    CheckReport r = check_single_lane_cable(n, 4);
    CHECK(r.passed);
  }
  CHECK(check_single_lane_cable(3, 4).comparisons == 31);
}

TEST_CASE("at q = 1 the cabled matrix permutes cables") {
  RationalMatrix m = evaluate(rho_cabled_matrix(w(3, {1, 2, 1}), 2), 1);
  StateSpace space(3, 2);
  RationalMatrix reversal(space.dim());
  for (std::size_t col = 0; col < space.dim(); ++col) {
    Counts u = space.state(col);
    reversal.add(space.index(Counts{u[2], u[1], u[0]}), col, 1);
  }
  CHECK(m == reversal);
}

TEST_CASE("crossing_oracle examples") {
  CHECK(crossing_oracle(1, 1, 0) == FallDistribution{{0, q}, {1, one_minus_q}});
  CHECK(crossing_oracle(2, 2, 2) == FallDistribution{{0, QPoly{1}}});
  CHECK(crossing_oracle(2, 2, 0) ==
        FallDistribution{{0, two_over_empty_c0}, {1, two_over_empty_c1}, {2, two_over_empty_c2}});
  CHECK(crossing_oracle(2, 0, 0) == FallDistribution{{0, QPoly{1}}});
  CHECK_THROWS_AS(crossing_oracle(2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(crossing_oracle(0, 0, 0), std::invalid_argument);
}

TEST_CASE("oracle values at K = 3, 4") {
  CHECK(crossing_oracle(3, 2, 1).at(1) == QPoly{0, 1, 1, -1, -1});
  CHECK(crossing_oracle(3, 3, 0).at(1) == QPoly{0, 0, 0, 0, 1, 1, 1, -1, -1, -1});
  CHECK(crossing_oracle(3, 3, 0).at(2) == QPoly{0, 1, 1, 0, -2, -2, 0, 1, 1});
  CHECK(crossing_oracle(4, 2, 1).at(1) == QPoly{0, 0, 1, 1, 0, -1, -1});
  CHECK(crossing_oracle(4, 3, 1).at(2) == QPoly{0, 1, 1, 0, -2, -2, 0, 1, 1});
}

TEST_CASE("lane oracle validates its input") {
  std::vector<int> up{1, 0}, low{0, 0, 0}, bad{2, 0};
  CHECK_THROWS_AS(crossing_oracle_lanes(up, low), std::invalid_argument);
  CHECK_THROWS_AS(crossing_oracle_lanes(bad, up), std::invalid_argument);
}

TEST_CASE("formula matches the lane oracle") {
  for (int K = 1; K <= 3; ++K) {
    CheckReport r = check_cabled_formula(K);
    CHECK(r.passed);
    CHECK(r.comparisons == static_cast<std::size_t>((K + 1) * (K + 1) * (K + 1)));
  }
  for (auto [a, b] : std::vector<std::pair<int, int>>{{4, 0}, {3, 1}, {2, 2}, {1, 0}, {4, 3}}) {
    CHECK(crossing_oracle(4, a, b) == formula_distribution(4, a, b));
  }
}

TEST_CASE("oracle distributions sum to one") {
  for (int K = 1; K <= 3; ++K)
    for (int a = 0; a <= K; ++a)
      for (int b = 0; b <= K; ++b) {
        QPoly total;
        for (const auto& [c, p] : crossing_oracle(K, a, b)) {
          CHECK(c <= std::min(a, K - b));
          total += p;
        }
        CHECK(total == QPoly{1});
      }
}

TEST_CASE("degenerate widths") {
  for (int K = 1; K <= 4; ++K) {
    for (int b = 0; b <= K; ++b) CHECK(formula_distribution(K, 0, b) == FallDistribution{{0, QPoly{1}}});
    for (int a = 0; a <= K; ++a) CHECK(formula_distribution(K, a, K) == FallDistribution{{0, QPoly{1}}});
  }
}

TEST_CASE("placement invariance") {
  CheckReport r = check_oracle_placement_invariance(2, 1, 1);
  CHECK(r.passed);
  CHECK(r.note == "4 placements");
  r = check_oracle_placement_invariance(3, 2, 1);
  CHECK(r.passed);
  CHECK(r.note == "9 placements");
  r = check_oracle_placement_invariance(2, 0, 0);
  CHECK(r.passed);
  CHECK(r.note == "1 placements");
  CHECK(crossing_oracle(2, 0, 0) == FallDistribution{{0, QPoly{1}}});
  CHECK(check_oracle_placement_invariance(4, 2, 2).passed);
  CHECK_THROWS_AS(check_oracle_placement_invariance(5, 1, 1), std::invalid_argument);
}

TEST_CASE("micro-crossing order invariance") {
  for (int K = 1; K <= 3; ++K) CHECK(check_micro_order_invariance(K).passed);
}

TEST_CASE("cabled braid relation and far commutativity") {
  for (int K = 1; K <= 3; ++K) CHECK(check_cabled_braid_relation(3, K).passed);
  CHECK(check_cabled_far_commutativity(4, 2).passed);
  CHECK_THROWS_AS(check_cabled_braid_relation(2, 2), std::invalid_argument);
}

TEST_CASE("cabled matrices are stochastic and conserve balls") {
  for (int K = 1; K <= 3; ++K) {
    PolyMatrix m = rho_cabled_matrix(w(3, {1, 2, 2, 1, 2}), K);
    StateSpace space(3, K);
    for (std::size_t col = 0; col < space.dim(); ++col) {
      Counts u = space.state(col);
      QPoly total;
      for (const auto& [row, p] : m.column(col)) {
        total += p;
        Counts v = space.state(row);
        CHECK(v[0] + v[1] + v[2] == u[0] + u[1] + u[2]);
      }
      CHECK(total == QPoly{1});
    }
  }
}
