#include "bowling/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bowling {

QScalar parse_scalar(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> BigInt {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char ch) { return ch >= '0' && ch <= '9'; })) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return QScalar(parse_int(text));
  }
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  return QScalar(num) / QScalar(den);
}

std::string to_string(const QScalar& x) {
  auto den = boost::multiprecision::denominator(x);
  auto num = boost::multiprecision::numerator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::q() { return monomial(1); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& p, const QPoly& r) {
  if (p.is_zero() || r.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs_.size() + r.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
      out[i + j] += p.coeffs_[i] * r.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& r) { return *this = *this * r; }

QPoly operator-(QPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

QPoly QPoly::scaled(const BigInt& k) const {
  if (k == 0) return {};
  QPoly out = *this;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result = constant(1);
  QPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

QScalar QPoly::eval(const QScalar& x) const {
  QScalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + QScalar(*it);
  }
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

QPoly quantum_int(int k) {
  if (k < 0) throw std::invalid_argument("quantum_int: k must be non-negative");
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(k), BigInt{1}));
}

QPoly q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("q_factorial: k must be non-negative");
  QPoly out = QPoly::constant(1);
  for (int i = 2; i <= k; ++i) out *= quantum_int(i);
  return out;
}

QPoly gauss_binom(int k, int r) {
  if (k < 0) throw std::invalid_argument("gauss_binom: k must be non-negative");
  if (r < 0 || r > k) return {};
  // Pascal rule [m choose j] = [m-1 choose j-1] + q^j [m-1 choose j].
  std::vector<QPoly> row{QPoly::constant(1)};
  for (int m = 1; m <= k; ++m) {
    std::vector<QPoly> next(static_cast<std::size_t>(m) + 1);
    next[0] = QPoly::constant(1);
    next[static_cast<std::size_t>(m)] = QPoly::constant(1);
    for (int j = 1; j < m; ++j) {
      auto uj = static_cast<std::size_t>(j);
      next[uj] = row[uj - 1] + QPoly::monomial(uj) * row[uj];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

std::size_t inversions_perm(std::span<const int> w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

std::size_t inversions_binary(std::span<const int> s) {
  std::size_t count = 0;
  std::size_t ones_seen = 0;
  for (int bit : s) {
    if (bit == 1) {
      ++ones_seen;
    } else if (bit == 0) {
      count += ones_seen;
    } else {
      throw std::invalid_argument("inversions_binary: entries must be 0 or 1");
    }
  }
  return count;
}

QPoly falling_probability(int K, int a, int b, int c) {
  if (K < 1 || a < 0 || a > K || b < 0 || b > K || c < 0) {
    throw std::invalid_argument("falling_probability: need K >= 1, 0 <= a,b <= K, c >= 0 (got K=" +
                                std::to_string(K) + ", a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ", c=" + std::to_string(c) + ")");
  }
  const int empty_below = K - b;
  if (c > a || c > empty_below) return {};
  const QPoly one_minus_q{1, -1};
  const auto survivals = static_cast<std::size_t>((a - c) * (empty_below - c));
  return gauss_binom(a, c) * gauss_binom(empty_below, c) * q_factorial(c) *
         one_minus_q.pow(static_cast<unsigned>(c)) * QPoly::monomial(survivals);
}

}  // namespace bowling
