#pragma once

#include <algorithm>
#include <iterator>
#include <vector>

#include "hda/simplicial_set.hpp"

namespace hda::detail {

inline std::vector<int> common_repeats(const Monotone& a, const Monotone& b) {
  auto ra = repeat_positions(a), rb = repeat_positions(b);
  std::vector<int> out;
  std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(out));
  return out;
}

// Drops the positions j+1 for every common repeat j.
inline Monotone strip(const Monotone& surj, const std::vector<int>& common) {
  std::vector<char> drop(surj.size(), 0);
  for (int j : common) drop[j + 1] = 1;
  Monotone out;
  for (std::size_t k = 0; k < surj.size(); ++k)
    if (!drop[k]) out.push_back(surj[k]);
  return out;
}

// sigma_J : [m] -> [m - |J|] collapsing each j in J onto j+1.
inline Monotone collapse_map(int m, const std::vector<int>& common) {
  Monotone sigma(m + 1);
  int removed = 0;
  for (int k = 0; k <= m; ++k) {
    if (std::binary_search(common.begin(), common.end(), k - 1)) ++removed;
    sigma[k] = k - removed;
  }
  return sigma;
}

}  // namespace hda::detail
