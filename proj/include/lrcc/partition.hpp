#pragma once

#include <cstddef>
#include <vector>

#include "lrcc/errors.hpp"

namespace lrcc {

/// Repair-set partition S_1..S_m with parameters (r, delta). Coordinates
/// are 0-based. The constructions here always use groups of size r+delta-1,
/// but any partition of [n] is accepted.
struct LocalityPartition {
  std::vector<std::vector<std::size_t>> groups;
  std::size_t r = 0;
  std::size_t delta = 0;

  std::size_t n() const {
    std::size_t s = 0;
    for (const auto& g : groups) s += g.size();
    return s;
  }

  // Checks that the groups are disjoint and cover exactly [0, n).
  void validate(std::size_t code_length) const {
    std::vector<char> seen(code_length, 0);
    std::size_t count = 0;
    for (const auto& g : groups)
      for (std::size_t c : g) {
        if (c >= code_length || seen[c])
          fail_usage(Errc::index_out_of_range, "groups must partition the coordinates");
        seen[c] = 1;
        ++count;
      }
    if (count != code_length)
      fail_usage(Errc::index_out_of_range, "groups must cover every coordinate");
    if (delta < 2) fail_usage(Errc::precondition_violated, "delta must be >= 2");
  }

  // Contiguous groups of uniform width.
  static LocalityPartition contiguous(std::size_t m, std::size_t width,
                                      std::size_t r, std::size_t delta) {
    LocalityPartition p;
    p.r = r;
    p.delta = delta;
    p.groups.resize(m);
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t j = 0; j < width; ++j) p.groups[g].push_back(g * width + j);
    return p;
  }

  std::vector<std::size_t> group_of_coordinate(std::size_t n_total) const {
    std::vector<std::size_t> owner(n_total, static_cast<std::size_t>(-1));
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (std::size_t c : groups[g]) owner[c] = g;
    return owner;
  }
};

}  // namespace lrcc
