#include "autoseq/series.hpp"

#include <limits>

namespace autoseq {

std::size_t checked_power(std::size_t q, std::size_t l) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < l; ++i) {
    if (r > std::numeric_limits<std::size_t>::max() / q) {
      throw std::overflow_error("q^l does not fit in 64 bits");
    }
    r *= q;
  }
  return r;
}

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (i != 0) out += ',';
    out += s[i].to_string();
  }
  return out;
}

}  // namespace autoseq
