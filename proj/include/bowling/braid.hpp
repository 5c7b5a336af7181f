#pragma once

// Positive braid words, their permutations, permutation braids and the
// alternating sums of permutation braids that lie in the kernel of the
// multi-ball representation.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "bowling/qpoly.hpp"

namespace bowling {

/// A positive braid word on n strands. Letter i stands for sigma_i, the crossing
/// of positions i and i+1. Letters act first to last: the leftmost letter is the
/// first crossing a ball meets.
class BraidWord {
 public:
  /// Identity braid on n strands.
  explicit BraidWord(int strands);
  /// Throws std::invalid_argument if n < 1 or a letter is outside 1..n-1.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Concatenation; `*this` is traversed first.
  BraidWord operator*(const BraidWord& after) const;

  /// Space-separated letters, "" for the identity.
  std::string to_string() const;

  /// Shortlex order (length, then letters); used to key HeckeElement terms.
  std::strong_ordering operator<=>(const BraidWord& o) const;
  bool operator==(const BraidWord& o) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Parses whitespace-separated generator indices, e.g. "1 2 1".
BraidWord parse_word(const std::string& text, int strands);

/// A permutation of {1..n} in one-line notation: images[i-1] = w(i).
class Permutation {
 public:
  static Permutation identity(int n);
  /// Throws std::invalid_argument unless images is a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// (this o inner)(i) = this(inner(i)).
  Permutation compose(const Permutation& inner) const;

  bool operator==(const Permutation&) const = default;
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// Where each lane ends up: the lane entering at position i leaves at w(i).
Permutation permutation_of(const BraidWord& word);
int sign(const Permutation& w);
/// The positive permutation braid of w, as the bubble-sort reduced word.
BraidWord minimal_braid(const Permutation& w);

/// Formal Z[q]-linear combination of positive braid words on a common n.
class HeckeElement {
 public:
  explicit HeckeElement(int strands) : strands_(strands) {}
  static HeckeElement of(const BraidWord& word, const QPoly& coeff = QPoly::constant(1));

  int strands() const { return strands_; }
  const std::map<BraidWord, QPoly>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Adds coeff * word, dropping the term if it cancels.
  void add_term(const BraidWord& word, const QPoly& coeff);

  HeckeElement& operator+=(const HeckeElement& r);
  HeckeElement operator+(const HeckeElement& r) const;
  HeckeElement operator-(const HeckeElement& r) const;
  HeckeElement scaled(const QPoly& c) const;
  /// Bilinear extension of word concatenation; `*this` is traversed first.
  HeckeElement operator*(const HeckeElement& r) const;

  std::string to_string() const;

 private:
  int strands_;
  std::map<BraidWord, QPoly> terms_;
};

/// Sum of sign(w) * minimal_braid(w) over all permutations w of the window
/// {k, ..., k+N+1}, identity outside it. Requires n >= N+2, 1 <= k <= n-N-1.
HeckeElement specht_element(int n, int N, int k);

/// The part of specht_element whose permutations satisfy w(i) < w(i+1), for
/// k <= i <= k+N. Traversing (1 - sigma_i) first and then this element gives
/// back specht_element, so rho(x) = rho(half) (I - rho(sigma_i)).
HeckeElement specht_half(int n, int N, int k, int i);

}  // namespace bowling
