#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pmatch/persistence_module.hpp"

namespace pmatch {

template <std::size_t N>
using IndexTuple = std::array<Index, N>;

/// E_{axes}(F)(x): the finite difference of F in each listed axis, expanded
/// as a signed sum over the 2^|axes| corners. Axes are 0-based positions in
/// the tuple; F must accept the decremented tuples.
template <std::size_t N, class F>
std::int64_t elder_at(const F& f, const IndexTuple<N>& x, std::span<const std::size_t> axes) {
  std::int64_t total = 0;
  const std::size_t corners = std::size_t{1} << axes.size();
  for (std::size_t mask = 0; mask < corners; ++mask) {
    IndexTuple<N> y = x;
    int parity = 0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (mask >> i & 1) {
        --y[axes[i]];
        parity ^= 1;
      }
    }
    const auto value = static_cast<std::int64_t>(f(y));
    total += parity ? -value : value;
  }
  return total;
}

/// Curried form of elder_at.
template <std::size_t N, class F>
auto elder(F f, std::vector<std::size_t> axes) {
  return [f = std::move(f), axes = std::move(axes)](const IndexTuple<N>& x) {
    return elder_at<N>(f, x, axes);
  };
}

}  // namespace pmatch
