#include "cprig/trunc_poly.hpp"

namespace cprig {

std::string to_string(const TruncPoly& p) {
  std::string out;
  for (int k = 0; k <= p.m(); ++k) {
    if (is_zero(p[k])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p[k]) + ")";
    if (k == 1) out += "x";
    if (k > 1) out += "x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cprig
