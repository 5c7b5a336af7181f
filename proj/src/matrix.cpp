#include "bowling/matrix.hpp"

namespace bowling {

RationalMatrix evaluate(const PolyMatrix& m, const QScalar& x) {
  RationalMatrix out(m.dim());
  for (const auto& [row, col, p] : m.entries()) out.add(row, col, p.eval(x));
  return out;
}

}  // namespace bowling
