#include "bowling/multiball.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace bowling {

namespace {

void require_capacity(int N) {
  if (N < 1) throw std::invalid_argument("ball capacity N must be at least 1");
}

void require_generator(int i, std::size_t n) {
  if (i < 1 || static_cast<std::size_t>(i) + 1 > n) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(static_cast<long>(n) - 1));
  }
}

BraidWord word(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

std::string rho_of(const BraidWord& w) { return "rho(" + (w.empty() ? std::string("e") : w.to_string()) + ")"; }

}  // namespace

std::size_t state_index(std::span<const int> u, int N) {
  return StateSpace(static_cast<int>(u.size()), N).index(u);
}

BallState index_state(std::size_t idx, int n, int N) { return StateSpace(n, N).state(idx); }

Transitions apply_generator(int i, std::span<const int> u) {
  require_generator(i, u.size());
  const auto over = static_cast<std::size_t>(i - 1);
  const int a = u[over];
  const int b = u[over + 1];
  Counts swapped(u.begin(), u.end());
  std::swap(swapped[over], swapped[over + 1]);
  if (a <= b) return {{std::move(swapped), QPoly::constant(1)}};
  // The fall leaves b on the over lane (now at i+1) and a on the under lane
  // (now at i), so the tuple is unchanged.
  return {{std::move(swapped), QPoly::q()}, {Counts(u.begin(), u.end()), QPoly{1, -1}}};
}

PolyMatrix rho_matrix(const BraidWord& w, int N) {
  require_capacity(N);
  return transition_matrix(w, StateSpace(w.strands(), N), apply_generator);
}

PolyMatrix rho_element(const HeckeElement& x, int N) {
  require_capacity(N);
  return combination_matrix(x, StateSpace(x.strands(), N), apply_generator);
}

CheckReport check_braid_relation(int n, int N) {
  if (n < 3) throw std::invalid_argument("braid relation needs n >= 3");
  CheckReport report("braid relation n=" + std::to_string(n) + " N=" + std::to_string(N));
  StateSpace space(n, N);
  for (int i = 1; i + 1 <= n - 1; ++i) {
    auto lhs = word(n, {i, i + 1, i});
    auto rhs = word(n, {i + 1, i, i + 1});
    report.compare(rho_matrix(lhs, N), rho_matrix(rhs, N), space, rho_of(lhs), rho_of(rhs));
  }
  return report;
}

CheckReport check_far_commutativity(int n, int N) {
  if (n < 4) throw std::invalid_argument("far commutativity needs n >= 4");
  CheckReport report("far commutativity n=" + std::to_string(n) + " N=" + std::to_string(N));
  StateSpace space(n, N);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      auto lhs = word(n, {i, j});
      auto rhs = word(n, {j, i});
      report.compare(rho_matrix(lhs, N), rho_matrix(rhs, N), space, rho_of(lhs), rho_of(rhs));
    }
  }
  return report;
}

CheckReport check_hecke(int n, int N, const GeneratorMatrices& generator) {
  if (n < 2) throw std::invalid_argument("quadratic relation needs n >= 2");
  require_capacity(N);
  CheckReport report("quadratic relation n=" + std::to_string(n) + " N=" + std::to_string(N));
  StateSpace space(n, N);
  const auto identity = PolyMatrix::identity(space.dim());
  const auto zero = PolyMatrix(space.dim());
  for (int i = 1; i <= n - 1; ++i) {
    PolyMatrix s = generator ? generator(i) : rho_matrix(word(n, {i}), N);
    PolyMatrix product = (identity.scaled(QPoly::q()) + s) * (identity - s);
    report.compare(product, zero, space, "(qI + rho(" + std::to_string(i) + "))(I - rho(" + std::to_string(i) + "))",
                   "0");
  }
  return report;
}

CheckReport check_specht(int n, int N, int k) {
  const HeckeElement x = specht_element(n, N, k);
  CheckReport report("alternating kernel n=" + std::to_string(n) + " N=" + std::to_string(N) +
                             " k=" + std::to_string(k));
  report.note = std::to_string(x.size()) + " permutation braids";
  StateSpace space(n, N);
  const auto identity = PolyMatrix::identity(space.dim());
  const PolyMatrix rho_x = rho_element(x, N);
  const std::string x_name = "rho(x_" + std::to_string(k) + ")";

  report.compare(rho_x, PolyMatrix(space.dim()), space, x_name, "0");

  for (int i = k; i <= k + N; ++i) {
    PolyMatrix factored = rho_element(specht_half(n, N, k, i), N) * (identity - rho_matrix(word(n, {i}), N));
    report.compare(factored, rho_x, space,
                   "rho(half_" + std::to_string(i) + ")(I - rho(" + std::to_string(i) + "))", x_name);
  }
  for (int j = k; j <= k + N; ++j) {
    PolyMatrix lhs = rho_x * rho_matrix(word(n, {j}), N);
    report.compare(lhs, rho_x.scaled(-QPoly::q()), space, x_name + " rho(" + std::to_string(j) + ")",
                   "-q " + x_name);
  }
  return report;
}

CheckReport check_inverse(int n, int N, const QScalar& x) {
  if (x == 0) throw std::invalid_argument("q = 0 is not invertible");
  if (n < 2) throw std::invalid_argument("inverse check needs n >= 2");
  CheckReport report("inverse formula n=" + std::to_string(n) + " N=" + std::to_string(N) +
                             " q=" + to_string(x));
  StateSpace space(n, N);
  const auto identity = RationalMatrix::identity(space.dim());
  for (int i = 1; i <= n - 1; ++i) {
    RationalMatrix s = evaluate(rho_matrix(word(n, {i}), N), x);
    RationalMatrix inverse = (s + identity.scaled(x - 1)).scaled(1 / x);
    const std::string g = std::to_string(i);
    report.compare(s * inverse, identity, space, "rho(" + g + ") rho(" + g + ")^-1", "I");
    report.compare(inverse * s, identity, space, "rho(" + g + ")^-1 rho(" + g + ")", "I");
  }
  return report;
}

namespace {

// Where the balls end up at q = 0: at each crossing, swap exactly when the
// over lane carries no more than the under lane.
Counts sort_map(const BraidWord& w, Counts u) {
  for (int g : w.letters()) {
    auto i = static_cast<std::size_t>(g - 1);
    if (u[i] <= u[i + 1]) std::swap(u[i], u[i + 1]);
  }
  return u;
}

}  // namespace

CheckReport check_word_properties(const BraidWord& w, int N) {
  CheckReport report("column sums, conservation and q=0,1 for rho(" + w.to_string() + ") n=" +
                             std::to_string(w.strands()) + " N=" + std::to_string(N));
  StateSpace space(w.strands(), N);
  const PolyMatrix m = rho_matrix(w, N);
  const std::string name = "rho(" + w.to_string() + ")";

  // Column sums and ball conservation, one comparison per column.
  for (std::size_t col = 0; col < space.dim(); ++col) {
    ++report.comparisons;
    const Counts u = space.state(col);
    const int total = std::accumulate(u.begin(), u.end(), 0);
    QPoly sum;
    for (const auto& [row, p] : m.column(col)) {
      sum += p;
      const Counts v = space.state(row);
      if (std::accumulate(v.begin(), v.end(), 0) != total) {
        report.fail(Mismatch{name, "ball conservation", u, v, "0", p.to_string()});
      }
    }
    if (!sum.is_one()) report.fail(Mismatch{"column sum of " + name, "1", u, {}, "1", sum.to_string()});
  }

  const Permutation w_perm = permutation_of(w);
  RationalMatrix at_one(space.dim()), at_zero(space.dim());
  for (std::size_t col = 0; col < space.dim(); ++col) {
    const Counts u = space.state(col);
    Counts moved(u.size());
    for (int lane = 1; lane <= w.strands(); ++lane) {
      moved[static_cast<std::size_t>(w_perm(lane) - 1)] = u[static_cast<std::size_t>(lane - 1)];
    }
    at_one.add(space.index(moved), col, 1);
    at_zero.add(space.index(sort_map(w, u)), col, 1);
  }
  report.compare(evaluate(m, 1), at_one, space, name + " at q=1", "lane permutation");
  report.compare(evaluate(m, 0), at_zero, space, name + " at q=0", "sort map");
  return report;
}

CheckReport check_random_words(int max_n, int max_N, int count, int max_length, std::uint64_t seed) {
  if (max_n < 1 || max_N < 1 || count < 0 || max_length < 0) {
    throw std::invalid_argument("random word check needs max_n, max_N >= 1 and non-negative count/length");
  }
  CheckReport report("random word properties (" + std::to_string(count) + " words, n<=" +
                             std::to_string(max_n) + ", N<=" + std::to_string(max_N) +
                             ", length<=" + std::to_string(max_length) + ")");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int t = 0; t < count; ++t) {
    const int n = uniform(1, max_n);
    const int N = uniform(1, max_N);
    std::vector<int> letters;
    if (n >= 2) {
      letters.resize(static_cast<std::size_t>(uniform(0, max_length)));
      for (auto& g : letters) g = uniform(1, n - 1);
    }
    CheckReport one = check_word_properties(BraidWord(n, std::move(letters)), N);
    report.comparisons += one.comparisons;
    if (!one.passed) report.fail(*one.failure);
  }
  return report;
}

}  // namespace bowling
