#pragma once

#include "mcshane/mobius.hpp"
#include "mcshane/torus_group.hpp"
#include "mcshane/word.hpp"

#include <cstdint>
#include <vector>

namespace mcshane {

/// Number of reduced words of length exactly n >= 1 (4 * 3^(n-1)).
std::uint64_t sphere_size(int n);
/// Number of nonempty reduced words of length <= radius.
std::uint64_t ball_size(int radius);

namespace detail {

template <class Visit>
bool ball_dfs(const PuncturedTorusGroup& g, std::size_t length, Word& w, std::vector<Mat2d>& stack,
              Visit& visit) {
  const std::size_t depth = w.size();
  if (depth == length) return visit(static_cast<const Word&>(w), static_cast<const Mat2d&>(stack[depth]));
  for (std::uint8_t k = 0; k < 4; ++k) {
    const auto l = static_cast<Letter>(k);
    if (depth > 0 && w.letters().back() == inverse(l)) continue;
    w.push_back(l);
    stack[depth + 1] = stack[depth] * g.generator_approx(l);
    const bool go_on = ball_dfs(g, length, w, stack, visit);
    w.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// Streams every nonempty reduced word of length <= radius exactly once, in
/// shortlex order, with a binary64 image of its matrix. `visit(word, approx)`
/// returns false to stop; the function returns false if stopped early.
/// Exact matrices are recovered on demand with PuncturedTorusGroup::evaluate.
template <class Visit>
bool for_each_in_ball(const PuncturedTorusGroup& g, int radius, Visit&& visit) {
  Word w;
  std::vector<Mat2d> stack(static_cast<std::size_t>(std::max(radius, 0)) + 1);
  for (int len = 1; len <= radius; ++len)
    if (!detail::ball_dfs(g, static_cast<std::size_t>(len), w, stack, visit)) return false;
  return true;
}

struct BallEntry {
  Word word;
  MobiusMap map;
};

/// Materialized ball with exact maps; meant for small radii.
std::vector<BallEntry> ball(const PuncturedTorusGroup& g, int radius);

}  // namespace mcshane
