#include "hpdet/chow/series.hpp"

namespace hpdet::chow {

std::vector<mpq_class> todd_log_coefficients(int n) {
  const auto len = static_cast<std::size_t>(n + 1);
  // g(t) = (1 - e^{-t}) / t - 1
  std::vector<mpq_class> g(len, mpq_class(0));
  for (int k = 1; k <= n; ++k) {
    g[static_cast<std::size_t>(k)] = factorial_inverse(k + 1) * mpq_class((k % 2 == 0) ? 1 : -1);
  }
  // log td = -log(1 + g) = sum_j (-1)^j g^j / j
  std::vector<mpq_class> out(len, mpq_class(0));
  std::vector<mpq_class> power(len, mpq_class(0));
  power[0] = 1;
  for (int j = 1; j <= n; ++j) {
    std::vector<mpq_class> next(len, mpq_class(0));
    for (std::size_t a = 0; a < len; ++a) {
      if (power[a] == 0) continue;
      for (std::size_t b = 1; a + b < len; ++b) next[a + b] += power[a] * g[b];
    }
    power = std::move(next);
    const mpq_class scale((j % 2 == 0) ? 1 : -1, j);
    for (std::size_t a = 0; a < len; ++a) out[a] += power[a] * scale;
  }
  return out;
}

}  // namespace hpdet::chow
