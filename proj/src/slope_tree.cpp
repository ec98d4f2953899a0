#include "mcshane/slope_tree.hpp"

#include <cmath>

namespace mcshane {

Slope::Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw DomainError("slope 0/0");
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  p_ /= g;
  q_ /= g;
}

Slope Slope::from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Slope(parse_integer(text), 1);
  return Slope(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

bool operator<(const Slope& s, const Slope& t) {
  if (s.is_infinite() || t.is_infinite()) return !s.is_infinite() && t.is_infinite();
  return s.p_ * t.q_ < t.p_ * s.q_;
}

std::string Slope::to_string() const { return p_.get_str() + "/" + q_.get_str(); }

Slope farey_partner(const Slope& s1, const Slope& s2, const Slope& opposite) {
  const Slope plus(s1.p() + s2.p(), s1.q() + s2.q());
  const Slope minus(s1.p() - s2.p(), s1.q() - s2.q());
  if (plus == opposite) return minus;
  if (minus == opposite) return plus;
  throw DomainError("slopes " + s1.to_string() + ", " + s2.to_string() + ", " + opposite.to_string() +
                    " do not form a Farey triangle");
}

MarkovTriple MarkovTriple::move(int k) const {
  const int i = (k + 1) % 3;
  const int j = (k + 2) % 3;
  MarkovTriple out = *this;
  out.slopes[k] = farey_partner(slopes[i], slopes[j], slopes[k]);
  out.traces[k] = traces[i] * traces[j] - traces[k];
  return out;
}

Scalar MarkovTriple::relation_residual() const {
  const auto& t = traces;
  return t[0] * t[0] + t[1] * t[1] + t[2] * t[2] - t[0] * t[1] * t[2];
}

MarkovTriple root_triple(const PuncturedTorusGroup& g) {
  return {{Slope(0, 1), Slope(1, 1), Slope(1, 0)}, {g.x(), g.z(), g.y()}};
}

namespace {

bool strictly_less(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a < b;
  const double x = a.to_double();
  const double y = b.to_double();
  return x < y - 1e-12 * (std::abs(x) + std::abs(y));
}

}  // namespace

MarkovTriple reduce_root(MarkovTriple t) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k < 3; ++k) {
      MarkovTriple next = t.move(k);
      if (strictly_less(next.traces[k], t.traces[k])) {
        t = std::move(next);
        changed = true;
      }
    }
  }
  return t;
}

SlopeNode TreeEdge::node() const {
  const Slope s = farey_partner(s1, s2, opposite);
  Scalar t = t1 * t2 - t_opposite;
  if (!strictly_less(t_opposite, t) || strictly_less(t, t1) || strictly_less(t, t2))
    throw InvariantViolation("Vieta step at slope " + s.to_string() + " does not increase the trace");
  return {s, std::move(t), depth};
}

std::array<TreeEdge, 2> TreeEdge::children(const SlopeNode& m) const {
  return {TreeEdge{s1, t1, m.slope, m.trace, s2, t2, depth + 1},
          TreeEdge{m.slope, m.trace, s2, t2, s1, t1, depth + 1}};
}

TreeRoot tree_root(const PuncturedTorusGroup& g) {
  const MarkovTriple t = reduce_root(root_triple(g));
  auto edge = [&](int k) {
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    return TreeEdge{t.slopes[i], t.traces[i], t.slopes[j], t.traces[j], t.slopes[k], t.traces[k], 1};
  };
  return {t, {edge(0), edge(1), edge(2)}};
}

void walk_edge(const TreeEdge& e, int max_depth, const std::function<bool(const SlopeNode&)>& visit) {
  if (e.depth > max_depth) return;
  const SlopeNode n = e.node();
  if (!visit(n)) return;
  for (const TreeEdge& c : e.children(n)) walk_edge(c, max_depth, visit);
}

void walk_slope_tree(const PuncturedTorusGroup& g, int max_depth,
                     const std::function<bool(const SlopeNode&)>& visit) {
  const TreeRoot root = tree_root(g);
  std::array<bool, 3> open{};
  for (int k = 0; k < 3; ++k) open[k] = visit(SlopeNode{root.triple.slopes[k], root.triple.traces[k], 0});
  for (int k = 0; k < 3; ++k) {
    // only descend across an edge whose corners both stay open
    if (open[(k + 1) % 3] && open[(k + 2) % 3]) walk_edge(root.edges[k], max_depth, visit);
  }
}

std::vector<SlopeNode> slope_tree(const PuncturedTorusGroup& g, int max_depth) {
  std::vector<SlopeNode> out;
  walk_slope_tree(g, max_depth, [&](const SlopeNode& n) {
    out.push_back(n);
    return true;
  });
  return out;
}

ChristoffelPair christoffel_pair(const Slope& s) {
  const Word a = Word::letter(Letter::A);
  const Word b = Word::letter(Letter::B);
  if (s == Slope(0, 1)) return {a, b};
  if (s == Slope(1, 0)) return {b, a};

  const Integer p = abs(s.p());
  const Integer& q = s.q();
  // Stern-Brocot descent on p/q > 0
  Integer lp = 0, lq = 1, rp = 1, rq = 0;
  Word lw = a, rw = b;
  for (;;) {
    const Integer mp = lp + rp;
    const Integer mq = lq + rq;
    Word mw = lw * rw;
    if (mp == p && mq == q) {
      ChristoffelPair out{std::move(mw), lw};
      if (s.p() < 0) {
        out.word = out.word.flip_b();
        out.partner = out.partner.flip_b();
      }
      return out;
    }
    if (p * mq < mp * q) {
      rp = mp;
      rq = mq;
      rw = std::move(mw);
    } else {
      lp = mp;
      lq = mq;
      lw = std::move(mw);
    }
  }
}

Word christoffel_word(const Slope& s) { return christoffel_pair(s).word; }

}  // namespace mcshane
