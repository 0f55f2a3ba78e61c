#include "ratiodist/types.hpp"

#include "ratiodist/error.hpp"

namespace ratiodist {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw DomainError("linspace: n must be >= 1");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

}  // namespace ratiodist
