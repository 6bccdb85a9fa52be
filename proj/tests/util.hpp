#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "weft/io.hpp"
#include "weft/partition.hpp"

// Turns labels into a color word for a given matrix.
inline weft::ColorWord word_of(const weft::EnergyMatrix& e,
                               const std::vector<std::string>& labels) {
  weft::ColorWord w;
  for (const auto& l : labels) w.push_back(e.states().index_of(l));
  return w;
}

// Token strings of a partition list, sorted, for order-free set comparison.
inline std::vector<std::string> token_set(
    const weft::EnergyMatrix& e,
    const std::vector<weft::ColoredPartition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(weft::partition_tokens(e, p));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}
