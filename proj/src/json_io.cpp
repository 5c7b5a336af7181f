#include "bowling/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace bowling {

namespace {

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    QScalar x = parse_scalar(s);
    if (boost::multiprecision::denominator(x) != 1) throw std::invalid_argument("expected an integer, got " + s);
    return boost::multiprecision::numerator(x);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

template <class Scalar>
Json matrix_json(const SparseMatrix<Scalar>& m, int n, const std::string& bound_key, int bound) {
  Json entries = Json::array();
  for (const auto& [row, col, v] : m.entries()) entries.push_back(Json::array({row, col, to_json(v)}));
  return Json{{"n", n}, {bound_key, bound}, {"dim", m.dim()}, {"entries", std::move(entries)}};
}

}  // namespace

Json to_json(const QPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(big_to_json(c));
  return Json{{"coeffs", std::move(coeffs)}};
}

Json to_json(const QScalar& x) {
  return Json{{"num", big_to_json(boost::multiprecision::numerator(x))},
              {"den", big_to_json(boost::multiprecision::denominator(x))}};
}

Json to_json(const BraidWord& w) { return Json{{"n", w.strands()}, {"letters", w.letters()}}; }

QPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("polynomial must be {\"coeffs\": [...]}");
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(big_from_json(c));
  return QPoly(std::move(coeffs));
}

QScalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("rational must be {\"num\": n, \"den\": d}");
  }
  BigInt den = big_from_json(j["den"]);
  if (den == 0) throw std::invalid_argument("zero denominator");
  return QScalar(big_from_json(j["num"])) / QScalar(den);
}

BraidWord word_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("letters")) {
    throw std::invalid_argument("braid word must be {\"n\": n, \"letters\": [...]}");
  }
  return BraidWord(j["n"].get<int>(), j["letters"].get<std::vector<int>>());
}

Json matrix_to_json(const PolyMatrix& m, int n, const std::string& bound_key, int bound) {
  return matrix_json(m, n, bound_key, bound);
}

Json matrix_to_json(const RationalMatrix& m, int n, const std::string& bound_key, int bound) {
  return matrix_json(m, n, bound_key, bound);
}

Json fall_to_json(int K, int a, int b, const FallDistribution& dist) {
  Json d = Json::object();
  for (const auto& [c, p] : dist) d[std::to_string(c)] = to_json(p);
  return Json{{"K", K}, {"a", a}, {"b", b}, {"dist", std::move(d)}};
}

Json reports_to_json(const std::string& suite, const std::vector<CheckReport>& reports) {
  Json checks = Json::array();
  for (const auto& r : reports) {
    Json item{{"name", r.name}, {"passed", r.passed}, {"comparisons", r.comparisons}};
    if (!r.note.empty()) item["note"] = r.note;
    if (r.failure) {
      const Mismatch& m = *r.failure;
      item["failure"] = Json{{"lhs", m.lhs},       {"rhs", m.rhs},           {"input", m.input},
                             {"output", m.output}, {"expected", m.expected}, {"actual", m.actual}};
    }
    checks.push_back(std::move(item));
  }
  return Json{{"suite", suite}, {"passed", all_passed(reports)}, {"checks", std::move(checks)}};
}

}  // namespace bowling
