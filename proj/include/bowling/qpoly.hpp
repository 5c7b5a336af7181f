#pragma once

// Exact arithmetic in Z[q] and the q-combinatorial quantities built on it.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bowling {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational evaluation point for q. Always kept in lowest terms with a
/// positive denominator (boost normalises on every operation).
using QScalar = boost::multiprecision::cpp_rational;

/// Parses "p/q" or a plain integer. Throws std::invalid_argument on anything else
/// or a zero denominator.
QScalar parse_scalar(const std::string& text);
std::string to_string(const QScalar& x);

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficient i is the coefficient of q^i. The representation is canonical:
/// no trailing zero coefficients, and the zero polynomial has no coefficients
/// at all, so equality is plain vector equality.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly constant(const BigInt& c);
  static QPoly monomial(std::size_t degree, const BigInt& c = 1);
  /// The indeterminate q itself.
  static QPoly q();

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt{0}; }

  QPoly& operator+=(const QPoly& r);
  QPoly& operator-=(const QPoly& r);
  QPoly& operator*=(const QPoly& r);

  friend QPoly operator+(QPoly p, const QPoly& r) { return p += r; }
  friend QPoly operator-(QPoly p, const QPoly& r) { return p -= r; }
  friend QPoly operator*(const QPoly& p, const QPoly& r);
  friend QPoly operator-(QPoly p);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  QPoly scaled(const BigInt& k) const;
  QPoly pow(unsigned e) const;
  QScalar eval(const QScalar& x) const;

  /// Human-readable form in ascending degree, e.g. "1 - q + 2q^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

inline bool is_zero(const QPoly& p) { return p.is_zero(); }
inline bool is_zero(const QScalar& x) { return x == 0; }

// Free-function spellings of the ring operations.
inline QPoly add(const QPoly& p, const QPoly& r) { return p + r; }
inline QPoly mul(const QPoly& p, const QPoly& r) { return p * r; }
inline QPoly neg(const QPoly& p) { return -p; }
inline QPoly scale(const QPoly& p, const BigInt& k) { return p.scaled(k); }
inline QScalar eval(const QPoly& p, const QScalar& x) { return p.eval(x); }

/// [k] = 1 + q + ... + q^(k-1); [0] = 0.
QPoly quantum_int(int k);
/// [k]! = [k][k-1]...[1]; [0]! = 1.
QPoly q_factorial(int k);
/// Gaussian binomial [k choose r]_q, zero outside 0 <= r <= k.
QPoly gauss_binom(int k, int r);

/// Number of pairs i < j with w[i] > w[j].
std::size_t inversions_perm(std::span<const int> w);
/// Number of pairs i < j with s[i] = 1 and s[j] = 0.
std::size_t inversions_binary(std::span<const int> s);

/// Probability that exactly c balls fall at one crossing of two K-lane cables,
/// a balls on the over cable and b on the under cable:
///
///   [a choose c] [K-b choose c] [c]! (1-q)^c q^((a-c)(K-b-c))
///
/// Zero when c > min(a, K-b). Throws std::invalid_argument unless
/// K >= 1, 0 <= a, b <= K and c >= 0.
QPoly falling_probability(int K, int a, int b, int c);

}  // namespace bowling
