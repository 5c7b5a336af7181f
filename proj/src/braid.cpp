#include "bowling/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bowling {

BraidWord::BraidWord(int strands) : BraidWord(strands, {}) {}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int g : letters_) {
    if (g < 1 || g > strands_ - 1) {
      throw std::invalid_argument("generator index " + std::to_string(g) +
                                  " out of range 1.." + std::to_string(strands_ - 1));
    }
  }
}

BraidWord BraidWord::operator*(const BraidWord& after) const {
  if (after.strands_ != strands_) throw std::invalid_argument("strand count mismatch");
  std::vector<int> letters = letters_;
  letters.insert(letters.end(), after.letters_.begin(), after.letters_.end());
  return BraidWord(strands_, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::strong_ordering BraidWord::operator<=>(const BraidWord& o) const {
  if (auto c = strands_ <=> o.strands_; c != 0) return c;
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  return letters_ <=> o.letters_;
}

BraidWord parse_word(const std::string& text, int strands) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  std::istringstream in(text);
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return c >= '0' && c <= '9'; }) ||
        token.size() > 9) {
      throw std::invalid_argument("malformed generator token '" + token + "'");
    }
    int g = std::stoi(token);
    if (g < 1 || g > strands - 1) {
      throw std::invalid_argument("generator index " + token + " out of range 1.." +
                                  std::to_string(strands - 1));
    }
    letters.push_back(g);
  }
  return BraidWord(strands, std::move(letters));
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(inner(i));
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out + ")";
}

Permutation permutation_of(const BraidWord& word) {
  const auto n = static_cast<std::size_t>(word.strands());
  // lane_at[p] = entry position of the lane currently at position p (0-based).
  std::vector<int> lane_at(n);
  std::iota(lane_at.begin(), lane_at.end(), 1);
  for (int g : word.letters()) {
    std::swap(lane_at[static_cast<std::size_t>(g - 1)], lane_at[static_cast<std::size_t>(g)]);
  }
  std::vector<int> images(n);
  for (std::size_t p = 0; p < n; ++p) images[static_cast<std::size_t>(lane_at[p] - 1)] = static_cast<int>(p) + 1;
  return Permutation(std::move(images));
}

int sign(const Permutation& w) {
  return inversions_perm(w.images()) % 2 == 0 ? 1 : -1;
}

BraidWord minimal_braid(const Permutation& w) {
  // target[p] = final position of the lane now at position p. Sweep left to
  // right, crossing every adjacent pair that is out of order, until sorted.
  std::vector<int> target = w.images();
  std::vector<int> letters;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < target.size(); ++p) {
      if (target[p] > target[p + 1]) {
        std::swap(target[p], target[p + 1]);
        letters.push_back(static_cast<int>(p) + 1);
        swapped = true;
      }
    }
  }
  return BraidWord(w.size(), std::move(letters));
}

HeckeElement HeckeElement::of(const BraidWord& word, const QPoly& coeff) {
  HeckeElement x(word.strands());
  x.add_term(word, coeff);
  return x;
}

void HeckeElement::add_term(const BraidWord& word, const QPoly& coeff) {
  if (word.strands() != strands_) throw std::invalid_argument("strand count mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& r) {
  for (const auto& [word, c] : r.terms_) add_term(word, c);
  return *this;
}

HeckeElement HeckeElement::operator+(const HeckeElement& r) const {
  HeckeElement out = *this;
  return out += r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& r) const {
  return *this + r.scaled(QPoly::constant(-1));
}

HeckeElement HeckeElement::scaled(const QPoly& c) const {
  HeckeElement out(strands_);
  for (const auto& [word, coeff] : terms_) out.add_term(word, coeff * c);
  return out;
}

HeckeElement HeckeElement::operator*(const HeckeElement& r) const {
  HeckeElement out(strands_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : r.terms_) out.add_term(u * v, cu * cv);
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [word, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")[" + word.to_string() + "]";
  }
  return out;
}

namespace {

void check_window(int n, int N, int k) {
  if (N < 1) throw std::invalid_argument("ball capacity N must be at least 1");
  if (n < N + 2) {
    throw std::invalid_argument("alternating element needs n >= N+2 (n=" + std::to_string(n) +
                                ", N=" + std::to_string(N) + ")");
  }
  if (k < 1 || k > n - N - 1) {
    throw std::invalid_argument("window start k=" + std::to_string(k) + " out of range 1.." +
                                std::to_string(n - N - 1));
  }
}

// Visits every permutation of {k..k+N+1} extended by the identity to 1..n.
template <class Visit>
void for_each_window_permutation(int n, int N, int k, Visit&& visit) {
  std::vector<int> window(static_cast<std::size_t>(N) + 2);
  std::iota(window.begin(), window.end(), k);
  do {
    std::vector<int> images = Permutation::identity(n).images();
    std::copy(window.begin(), window.end(), images.begin() + (k - 1));
    visit(Permutation(std::move(images)));
  } while (std::next_permutation(window.begin(), window.end()));
}

}  // namespace

HeckeElement specht_element(int n, int N, int k) {
  check_window(n, N, k);
  HeckeElement x(n);
  for_each_window_permutation(n, N, k, [&](const Permutation& w) {
    x.add_term(minimal_braid(w), QPoly::constant(sign(w)));
  });
  return x;
}

HeckeElement specht_half(int n, int N, int k, int i) {
  check_window(n, N, k);
  if (i < k || i > k + N) {
    throw std::invalid_argument("index i=" + std::to_string(i) + " outside window " +
                                std::to_string(k) + ".." + std::to_string(k + N));
  }
  HeckeElement x(n);
  for_each_window_permutation(n, N, k, [&](const Permutation& w) {
    if (w(i) < w(i + 1)) x.add_term(minimal_braid(w), QPoly::constant(sign(w)));
  });
  return x;
}

}  // namespace bowling
