#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bowling/matrix.hpp"
#include "bowling/state_space.hpp"

namespace bowling {

/// The first entry where two sides of an identity disagree.
struct Mismatch {
  std::string lhs;  // what was computed on each side, e.g. "rho(1 2 1)"
  std::string rhs;
  Counts input;     // column state u
  Counts output;    // row state v
  std::string expected;
  std::string actual;
};

/// Outcome of one named verification.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t comparisons = 0;  // identities compared
  std::optional<Mismatch> failure;
  std::string note;

  /// Records the first mismatch between `actual` (lhs) and `expected` (rhs),
  /// if any, and counts the comparison. Later mismatches are not recorded.
  template <class Scalar>
  void compare(const SparseMatrix<Scalar>& actual, const SparseMatrix<Scalar>& expected,
               const StateSpace& space, const std::string& lhs, const std::string& rhs) {
    ++comparisons;
    auto diff = actual.first_difference(expected);
    if (!diff) return;
    passed = false;
    if (failure) return;
    auto [row, col] = *diff;
    failure = Mismatch{lhs, rhs, space.state(col), space.state(row), render(expected.at(row, col)),
                       render(actual.at(row, col))};
  }

  /// Marks a failure that is not a matrix entry (e.g. a distribution key).
  void fail(Mismatch m) {
    passed = false;
    if (!failure) failure = std::move(m);
  }

 private:
  static std::string render(const QPoly& p) { return p.to_string(); }
  static std::string render(const QScalar& x) { return to_string(x); }
};

bool all_passed(const std::vector<CheckReport>& reports);
/// One line per report plus the failing entry, if any.
std::string format_pretty(const std::vector<CheckReport>& reports);

}  // namespace bowling
