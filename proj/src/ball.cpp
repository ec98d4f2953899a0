#include "mcshane/ball.hpp"

namespace mcshane {

std::uint64_t sphere_size(int n) {
  if (n <= 0) return 0;
  std::uint64_t s = 4;
  for (int k = 1; k < n; ++k) s *= 3;
  return s;
}

std::uint64_t ball_size(int radius) {
  std::uint64_t total = 0;
  for (int n = 1; n <= radius; ++n) total += sphere_size(n);
  return total;
}

std::vector<BallEntry> ball(const PuncturedTorusGroup& g, int radius) {
  std::vector<BallEntry> out;
  out.reserve(ball_size(radius));
  for_each_in_ball(g, radius, [&](const Word& w, const Mat2d&) {
    out.push_back({w, g.evaluate(w)});
    return true;
  });
  return out;
}

}  // namespace mcshane
