// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "bowling/cabled.hpp"
#include "bowling/multiball.hpp"
#include "test_support.hpp"

using namespace bowling;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const CheckReport& r) {
    std::string what = r.name;
    if (r.failure) {
      const Mismatch& m = *r.failure;
      what += ": " + m.lhs + " vs " + m.rhs + " at " + to_string(m.output) + " <- " + to_string(m.input) +
              " expected " + m.expected + " got " + m.actual;
    }
    require(r.passed, what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

QPoly entry(const PolyMatrix& m, int N, const Counts& v, const Counts& u) {
  return m.at(state_index(v, N), state_index(u, N));
}

void golden_values(Outcome& o) {
  const QPoly q2 = QPoly::monomial(2), q_minus_q2{0, 1, -1}, one_minus_q{1, -1};
  PolyMatrix m = rho_matrix(BraidWord(3, {1, 2, 1}), 1);
  o.require(entry(m, 1, {0, 0, 1}, {1, 0, 0}) == q2, "one ball exits top lane with q^2");
  o.require(entry(m, 1, {0, 1, 0}, {1, 0, 0}) == q_minus_q2, "one ball exits middle with q - q^2");
  o.require(entry(m, 1, {1, 0, 0}, {1, 0, 0}) == one_minus_q, "one ball exits bottom with 1 - q");
  o.require(m.column(state_index(Counts{1, 0, 0}, 1)).size() == 3, "one ball has three outcomes");
  o.require(entry(m, 1, {0, 1, 1}, {1, 1, 0}) == q2, "two balls: bottom empty with q^2");
  o.require(entry(m, 1, {1, 0, 1}, {1, 1, 0}) == q_minus_q2, "two balls: middle empty with q - q^2");
  o.require(entry(m, 1, {1, 1, 0}, {1, 1, 0}) == one_minus_q, "two balls: top empty with 1 - q");
  o.require(m.column(state_index(Counts{1, 1, 0}, 1)).size() == 3, "two balls have three outcomes");
  PolyMatrix m2 = rho_matrix(BraidWord(3, {1, 2, 1}), 2);
  o.require(entry(m2, 2, {0, 1, 2}, {2, 1, 0}) == QPoly::monomial(3), "N=2 entry (0,1,2) <- (2,1,0) is q^3");
}

void well_definedness(Outcome& o) {
  for (int N : {1, 2, 3}) o.require(check_braid_relation(3, N));
  for (int N : {1, 2}) {
    o.require(check_braid_relation(4, N));
    o.require(check_far_commutativity(4, N));
  }
}

void hecke_relation(Outcome& o) {
  for (int n = 2; n <= 4; ++n)
    for (int N = 1; N <= 2; ++N) o.require(check_hecke(n, N));
  o.require(check_hecke(2, 3));
}

void specht_kernel(Outcome& o) {
  struct Case {
    int n, N, k;
  };
  for (Case c : {Case{3, 1, 1}, Case{4, 1, 1}, Case{4, 1, 2}, Case{4, 2, 1}}) {
    CheckReport r = check_specht(c.n, c.N, c.k);
    o.require(r);
    // one kernel identity, N+1 factorisations, N+1 right multiplications
    o.require(r.comparisons == static_cast<std::size_t>(2 * c.N + 3),
              "specht (" + std::to_string(c.n) + "," + std::to_string(c.N) + "," + std::to_string(c.k) +
                  ") ran " + std::to_string(r.comparisons) + " comparisons");
  }
}

void inverse_formula(Outcome& o) {
  for (const QScalar& x : {QScalar(1) / 2, QScalar(2), QScalar(-1)})
    for (int n = 2; n <= 3; ++n)
      for (int N = 1; N <= 2; ++N) o.require(check_inverse(n, N, x));
}

void cabled_well_definedness(Outcome& o) {
  for (int K : {1, 2, 3}) o.require(check_cabled_braid_relation(3, K));
  for (int n = 1; n <= 3; ++n) o.require(check_single_lane_cable(n, 4));
}

void falling_formula(Outcome& o) {
  for (int K : {1, 2, 3}) {
    o.require(check_cabled_formula(K));
    o.require(check_micro_order_invariance(K));
    for (int a = 0; a <= K; ++a)
      for (int b = 0; b <= K; ++b) o.require(check_oracle_placement_invariance(K, a, b));
  }
}

void property_suites(Outcome& o) {
  CheckReport r = check_random_words(4, 3, 100, 8, 20261016);
  o.require(r);
  o.require(r.comparisons >= 100, "random word suite ran " + std::to_string(r.comparisons) + " comparisons");
}

void combinatorial_identities(Outcome& o) {
  for (int k = 0; k <= 6; ++k)
    o.require(q_factorial(k) == testing::permutation_inversion_sum(k), "[k]! at k=" + std::to_string(k));
  for (int k = 0; k <= 8; ++k)
    for (int r = 0; r <= k; ++r)
      o.require(gauss_binom(k, r) == testing::binary_inversion_sum(k, r),
                "gaussian binomial at (" + std::to_string(k) + "," + std::to_string(r) + ")");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden values for s1 s2 s1", 1, golden_values},
      {2, "braid relation and far commutativity", 10, well_definedness},
      {3, "Hecke quadratic relation", 10, hecke_relation},
      {4, "alternating sums in the kernel", 60, specht_kernel},
      {5, "inverse formula at q in {1/2, 2, -1}", 1, inverse_formula},
      {6, "cabled braid relation and K=1 reduction", 30, cabled_well_definedness},
      {7, "falling probabilities match the lane oracle", 60, falling_formula},
      {8, "stochastic and specialisation properties", 60, property_suites},
      {9, "q-factorial and Gaussian binomial inversion sums", 5, combinatorial_identities},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds >= c.limit_seconds) o.require(false, "exceeded time limit");
    std::printf("%s  criterion %d: %s (%.3fs, limit %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                seconds, c.limit_seconds, o.ok ? "" : " - ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
