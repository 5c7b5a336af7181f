#include "bowling/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "CLI11.hpp"

#include "bowling/cabled.hpp"
#include "bowling/json_io.hpp"
#include "bowling/multiball.hpp"

namespace bowling::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t max_matrix_dim = 1U << 16;
constexpr std::size_t max_check_dim = 1U << 12;
constexpr int max_check_cable = 4;
constexpr int max_fall_cable = 64;

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::size_t checked_dim(int n, int bound, std::size_t limit, const std::string& what) {
  require(n >= 1, "--n must be at least 1");
  require(bound >= 1, what + " must be at least 1");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(bound) + 1;
    require(dim <= limit, "state space (" + std::to_string(bound + 1) + ")^" + std::to_string(n) +
                              " exceeds the limit of " + std::to_string(limit) + " states");
  }
  return dim;
}

QScalar parse_q(const std::string& text, const std::string& flag = "--eval-q") {
  try {
    return parse_scalar(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

BraidWord parse_cli_word(const std::string& text, int n) {
  require(n >= 1, "--n must be at least 1");
  try {
    return parse_word(text, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string pretty_matrix(const auto& m, const StateSpace& space, const std::string& header) {
  std::ostringstream os;
  os << header << " dim=" << m.dim() << "\n";
  for (const auto& [row, col, v] : m.entries()) {
    std::string value;
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, QPoly>) {
      value = v.to_string();
    } else {
      value = to_string(v);
    }
    os << to_string(space.state(row)) << " <- " << to_string(space.state(col)) << ": " << value << "\n";
  }
  return os.str();
}

// Writes the finished output in one piece, to the file if one was given.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  require(static_cast<bool>(file), "cannot open " + path + " for writing");
  file << text;
}

struct MatrixArgs {
  std::string word;
  int n = 0;
  int bound = 0;
  std::string eval_q;
  std::string out_path;
  std::string format = "json";
};

std::string render_matrix(const PolyMatrix& m, const MatrixArgs& args, const std::string& bound_key) {
  StateSpace space(args.n, args.bound);
  const std::string header = "n=" + std::to_string(args.n) + " " + bound_key + "=" + std::to_string(args.bound);
  if (!args.eval_q.empty()) {
    RationalMatrix r = evaluate(m, parse_q(args.eval_q));
    if (args.format == "pretty") return pretty_matrix(r, space, header + " q=" + args.eval_q);
    return matrix_to_json(r, args.n, bound_key, args.bound).dump() + "\n";
  }
  if (args.format == "pretty") return pretty_matrix(m, space, header);
  return matrix_to_json(m, args.n, bound_key, args.bound).dump() + "\n";
}

struct CheckArgs {
  std::string suite;
  int n = 3;
  int balls = 2;
  int cable = 2;
  int k = 0;
  std::vector<std::string> q_values{"1/2", "2", "-1"};
  int words = 100;
  int max_length = 8;
  std::uint64_t seed = 20261016;
  std::string format = "pretty";
  bool inject_fault = false;
};

CheckReport skipped(const std::string& name, const std::string& why) {
  CheckReport r(name);
  r.note = "skipped: " + why;
  return r;
}

// Each planned check runs only after every flag has been validated.
using Plan = std::vector<std::function<CheckReport()>>;

void plan_braid(const CheckArgs& a, bool explicit_suite, Plan& plan) {
  if (explicit_suite) require(a.n >= 3, "check braid needs --n >= 3");
  if (a.n >= 3) {
    plan.push_back([=] { return check_braid_relation(a.n, a.balls); });
  } else {
    plan.push_back([=] { return skipped("braid relation", "needs n >= 3"); });
  }
  if (a.n >= 4) plan.push_back([=] { return check_far_commutativity(a.n, a.balls); });
}

void plan_hecke(const CheckArgs& a, bool explicit_suite, Plan& plan) {
  if (explicit_suite) require(a.n >= 2, "check hecke needs --n >= 2");
  if (a.n < 2) {
    plan.push_back([=] { return skipped("quadratic relation", "needs n >= 2"); });
    return;
  }
  GeneratorMatrices generator;
  if (a.inject_fault) {
    generator = [n = a.n, N = a.balls](int i) {
      PolyMatrix m = rho_matrix(BraidWord(n, {i}), N);
      if (i == 1) m.add(0, 0, QPoly::q());
      return m;
    };
  }
  plan.push_back([=] { return check_hecke(a.n, a.balls, generator); });
  for (const auto& text : a.q_values) {
    QScalar x = parse_q(text, "--q");
    require(x != 0, "--q 0 is not invertible");
    plan.push_back([=] { return check_inverse(a.n, a.balls, x); });
  }
}

void plan_specht(const CheckArgs& a, bool explicit_suite, Plan& plan) {
  const int last_k = a.n - a.balls - 1;
  if (a.k != 0) {
    require(a.n >= a.balls + 2, "check specht needs --n >= --max-balls + 2");
    require(a.k >= 1 && a.k <= last_k, "--k must lie in 1.." + std::to_string(last_k));
    plan.push_back([=] { return check_specht(a.n, a.balls, a.k); });
    return;
  }
  if (last_k < 1) {
    require(!explicit_suite, "check specht needs --n >= --max-balls + 2");
    plan.push_back([=] { return skipped("alternating kernel", "needs n >= N+2"); });
    return;
  }
  for (int k = 1; k <= last_k; ++k) plan.push_back([=] { return check_specht(a.n, a.balls, k); });
}

void plan_cabled(const CheckArgs& a, Plan& plan) {
  require(a.cable >= 1 && a.cable <= max_check_cable,
          "--cable must lie in 1.." + std::to_string(max_check_cable) + " for checks");
  checked_dim(a.n, a.cable, max_check_dim, "--cable");
  const int K = a.cable;
  plan.push_back([=] { return check_cabled_formula(K); });
  plan.push_back([=] { return check_micro_order_invariance(K); });
  for (int x = 0; x <= K; ++x)
    for (int y = 0; y <= K; ++y) plan.push_back([=] { return check_oracle_placement_invariance(K, x, y); });
  if (a.n >= 3) plan.push_back([=] { return check_cabled_braid_relation(a.n, K); });
  if (a.n >= 4) plan.push_back([=] { return check_cabled_far_commutativity(a.n, K); });
  if (a.n <= 3) plan.push_back([=] { return check_single_lane_cable(a.n, 4); });
}

void plan_stochastic(const CheckArgs& a, Plan& plan) {
  require(a.words >= 0 && a.words <= 10000, "--words must lie in 0..10000");
  require(a.max_length >= 0 && a.max_length <= 16, "--max-length must lie in 0..16");
  plan.push_back([=] { return check_random_words(a.n, a.balls, a.words, a.max_length, a.seed); });
}

int run_check(const CheckArgs& a, const std::string& path, std::ostream& out) {
  require(a.format == "json" || a.format == "pretty", "--format must be json or pretty");
  checked_dim(a.n, a.balls, max_check_dim, "--max-balls");
  const bool all = a.suite == "all";
  Plan plan;
  if (all || a.suite == "braid") plan_braid(a, !all, plan);
  if (all || a.suite == "hecke") plan_hecke(a, !all, plan);
  if (all || a.suite == "specht") plan_specht(a, !all, plan);
  if (all || a.suite == "cabled") plan_cabled(a, plan);
  if (all || a.suite == "stochastic") plan_stochastic(a, plan);

  std::vector<CheckReport> reports;
  reports.reserve(plan.size());
  for (const auto& step : plan) reports.push_back(step());

  std::string text = a.format == "json" ? reports_to_json(a.suite, reports).dump(2) + "\n" : format_pretty(reports);
  emit(text, path, out);
  return all_passed(reports) ? exit_ok : exit_check_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bowling-ball representations of the positive braid monoid"};
  app.require_subcommand(1);

  MatrixArgs rho_args;
  auto* rho = app.add_subcommand("rho", "Matrix of a braid word in the multi-ball representation");
  rho->add_option("word", rho_args.word, "Whitespace-separated generator indices, e.g. \"1 2 1\"")->required();
  rho->add_option("--n", rho_args.n, "Number of strands")->required();
  rho->add_option("--max-balls", rho_args.bound, "Maximum balls per lane (N)")->required();
  rho->add_option("--eval-q", rho_args.eval_q, "Evaluate entries at this rational q (\"p/q\" or integer)");
  rho->add_option("--out", rho_args.out_path, "Write to this file instead of stdout");
  rho->add_option("--format", rho_args.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  MatrixArgs cab_args;
  auto* cabled = app.add_subcommand("cabled", "Matrix of a braid word in the cabled representation");
  cabled->add_option("word", cab_args.word, "Whitespace-separated generator indices")->required();
  cabled->add_option("--n", cab_args.n, "Number of strands")->required();
  cabled->add_option("--cable", cab_args.bound, "Lanes per cable (K)")->required();
  cabled->add_option("--eval-q", cab_args.eval_q, "Evaluate entries at this rational q");
  cabled->add_option("--out", cab_args.out_path, "Write to this file instead of stdout");
  cabled->add_option("--format", cab_args.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  int fall_K = 0, fall_a = 0, fall_b = 0;
  std::string fall_format = "json", fall_out;
  auto* fall = app.add_subcommand("fall", "Distribution of falling balls at one cabled crossing");
  fall->add_option("--cable", fall_K, "Lanes per cable (K)")->required();
  fall->add_option("--a", fall_a, "Balls on the over cable")->required();
  fall->add_option("--b", fall_b, "Balls on the under cable")->required();
  fall->add_option("--out", fall_out, "Write to this file instead of stdout");
  fall->add_option("--format", fall_format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  CheckArgs check_args;
  std::string check_out;
  auto* check = app.add_subcommand("check", "Verify representation identities exactly");
  check->add_option("suite", check_args.suite, "braid | hecke | specht | cabled | stochastic | all")
      ->required()
      ->check(CLI::IsMember({"braid", "hecke", "specht", "cabled", "stochastic", "all"}));
  check->add_option("--n", check_args.n, "Number of strands (maximum for stochastic)")->capture_default_str();
  check->add_option("--max-balls", check_args.balls, "Maximum balls per lane (maximum for stochastic)")->capture_default_str();
  check->add_option("--cable", check_args.cable, "Lanes per cable for the cabled suite")->capture_default_str();
  check->add_option("--k", check_args.k, "Window start for the specht suite (default: every admissible k)");
  check->add_option("--q", check_args.q_values, "Evaluation points for the inverse check")->capture_default_str();
  check->add_option("--words", check_args.words, "Random words for the stochastic suite")->capture_default_str();
  check->add_option("--max-length", check_args.max_length, "Maximum random word length")->capture_default_str();
  check->add_option("--seed", check_args.seed, "Random seed for the stochastic suite")->capture_default_str();
  check->add_option("--format", check_args.format, "json or pretty")->capture_default_str()->check(CLI::IsMember({"json", "pretty"}));
  check->add_option("--out", check_out, "Write the report to this file");
  // Test-only: perturbs rho(sigma_1) so the quadratic check must fail.
  check->add_flag("--inject-fault", check_args.inject_fault)->group("");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*rho) {
      checked_dim(rho_args.n, rho_args.bound, max_matrix_dim, "--max-balls");
      BraidWord w = parse_cli_word(rho_args.word, rho_args.n);
      if (!rho_args.eval_q.empty()) parse_q(rho_args.eval_q);
      emit(render_matrix(rho_matrix(w, rho_args.bound), rho_args, "N"), rho_args.out_path, out);
      return exit_ok;
    }
    if (*cabled) {
      checked_dim(cab_args.n, cab_args.bound, max_matrix_dim, "--cable");
      BraidWord w = parse_cli_word(cab_args.word, cab_args.n);
      if (!cab_args.eval_q.empty()) parse_q(cab_args.eval_q);
      emit(render_matrix(rho_cabled_matrix(w, cab_args.bound), cab_args, "K"), cab_args.out_path, out);
      return exit_ok;
    }
    if (*fall) {
      require(fall_K >= 1 && fall_K <= max_fall_cable, "--cable must lie in 1.." + std::to_string(max_fall_cable));
      require(fall_a >= 0 && fall_a <= fall_K, "--a must lie in 0..--cable");
      require(fall_b >= 0 && fall_b <= fall_K, "--b must lie in 0..--cable");
      FallDistribution dist = formula_distribution(fall_K, fall_a, fall_b);
      std::string text;
      if (fall_format == "pretty") {
        for (const auto& [c, p] : dist) text += std::to_string(c) + ": " + p.to_string() + "\n";
      } else {
        text = fall_to_json(fall_K, fall_a, fall_b, dist).dump() + "\n";
      }
      emit(text, fall_out, out);
      return exit_ok;
    }
    return run_check(check_args, check_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace bowling::cli
