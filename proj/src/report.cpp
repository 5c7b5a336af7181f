#include "bowling/report.hpp"

#include <algorithm>

namespace bowling {

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

std::string format_pretty(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.passed ? "PASS  " : "FAIL  ";
    out += r.name + "  (" + std::to_string(r.comparisons) + " comparisons)";
    if (!r.note.empty()) out += "  " + r.note;
    out += '\n';
    if (r.failure) {
      const Mismatch& m = *r.failure;
      out += "      " + m.lhs + " vs " + m.rhs + "\n";
      if (!m.input.empty() || !m.output.empty()) {
        out += "      entry v=" + to_string(m.output) + " <- u=" + to_string(m.input) + "\n";
      }
      out += "      expected " + m.expected + ", got " + m.actual + "\n";
    }
  }
  return out;
}

}  // namespace bowling
