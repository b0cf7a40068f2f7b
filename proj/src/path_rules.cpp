#include "dissoc/path_rules.hpp"

#include <stdexcept>
#include <string>

namespace dissoc {

int psi_path(int n) {
  if (n < 1) throw std::invalid_argument("psi_path: n must be positive");
  if (n <= 2) return n;
  return (2 * n + n % 3) / 3;
}

std::vector<int> path_witness(int n, WitnessMode mode) {
  if (n < 1) throw std::invalid_argument("path_witness: n must be positive");
  int residue = n % 3;
  auto require = [&](int want, const char* name) {
    if (residue != want) {
      throw std::invalid_argument(
          std::string("path_witness: mode ") + name + " requires n % 3 == " +
          std::to_string(want) + ", got n = " + std::to_string(n));
    }
  };

  // Greedy left-to-right: take adjacent pairs, skip one vertex between
  // pairs; the anchor offset realizes the requested mode.
  std::vector<int> out;
  switch (mode) {
    case WitnessMode::EXCLUDE_FIRST_LEAF:
      require(0, "EXCLUDE_FIRST_LEAF");
      for (int p = 2; p <= n; ++p) {
        if ((p - 1) % 3 != 0) out.push_back(p);
      }
      break;
    case WitnessMode::ISOLATE_FIRST_LEAF:
      require(1, "ISOLATE_FIRST_LEAF");
      out.push_back(1);
      for (int p = 3; p <= n; ++p) {
        if ((p - 2) % 3 != 0) out.push_back(p);
      }
      break;
    case WitnessMode::UNIQUE:
      require(2, "UNIQUE");
      for (int p = 1; p <= n; ++p) {
        if (p % 3 != 0) out.push_back(p);
      }
      break;
  }
  return out;
}

}  // namespace dissoc
