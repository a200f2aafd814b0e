#include "lamlab/lamination.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace lamlab {

std::optional<std::pair<std::size_t, std::size_t>> find_crossing(const std::vector<Chord>& chords) {
  std::vector<std::size_t> order(chords.size());
  std::iota(order.begin(), order.end(), 0);
  // Left endpoint ascending, then longer first so nested chords follow their
  // container.
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const Chord& x = chords[i];
    const Chord& y = chords[j];
    if (auto c = x.a() <=> y.a(); c != 0) return c < 0;
    return y.b() < x.b();
  });

  std::vector<std::size_t> stack;
  for (std::size_t idx : order) {
    const Chord& c = chords[idx];
    if (c.degenerate()) continue;
    while (!stack.empty() && chords[stack.back()].b() <= c.a()) stack.pop_back();
    if (!stack.empty() && chords[stack.back()].b() < c.b()) return std::make_pair(stack.back(), idx);
    stack.push_back(idx);
  }
  return std::nullopt;
}

FiniteLamination::FiniteLamination(std::vector<Chord> chords, std::optional<unsigned> depth, std::string source)
    : depth_(depth), source_(std::move(source)) {
  std::erase_if(chords, [](const Chord& c) { return c.degenerate(); });
  if (!std::is_sorted(chords.begin(), chords.end())) std::sort(chords.begin(), chords.end());
  chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
  if (auto hit = find_crossing(chords)) throw CrossingPairError(chords[hit->first], chords[hit->second]);
  leaves_ = std::move(chords);
}

FiniteLamination FiniteLamination::with_generations(std::vector<std::pair<Chord, unsigned>> chords,
                                                    unsigned depth, std::string source) {
  std::erase_if(chords, [](const auto& c) { return c.first.degenerate(); });
  if (!std::is_sorted(chords.begin(), chords.end())) std::sort(chords.begin(), chords.end());
  chords.erase(std::unique(chords.begin(), chords.end(),
                           [](const auto& x, const auto& y) { return x.first == y.first; }),
               chords.end());
  FiniteLamination out;
  out.depth_ = depth;
  out.source_ = std::move(source);
  out.leaves_.reserve(chords.size());
  out.generations_.reserve(chords.size());
  for (auto& [c, g] : chords) {
    out.leaves_.push_back(std::move(c));
    out.generations_.push_back(g);
  }
  if (auto hit = find_crossing(out.leaves_)) {
    throw CrossingPairError(out.leaves_[hit->first], out.leaves_[hit->second]);
  }
  return out;
}

std::optional<std::size_t> FiniteLamination::index_of(const Chord& c) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), c);
  if (it == leaves_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - leaves_.begin());
}

bool FiniteLamination::contains(const Chord& c) const { return index_of(c).has_value(); }

FiniteLamination FiniteLamination::truncated(unsigned depth) const {
  if (!has_generations()) throw InvalidArgument("lamination carries no generation data");
  FiniteLamination out;
  out.depth_ = depth;
  out.source_ = source_;
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (generations_[i] <= depth) {
      out.leaves_.push_back(leaves_[i]);
      out.generations_.push_back(generations_[i]);
    }
  }
  return out;
}

FiniteLamination forward_closure(const FiniteLamination& lam) {
  std::set<Chord> all(lam.leaves().begin(), lam.leaves().end());
  std::vector<Chord> frontier = lam.leaves();
  bool grew = false;
  while (!frontier.empty()) {
    std::vector<Chord> next;
    for (const Chord& c : frontier) {
      Chord img = image(c);
      if (!img.degenerate() && all.insert(img).second) next.push_back(img);
    }
    grew = grew || !next.empty();
    frontier = std::move(next);
  }
  if (!grew) return lam;
  return FiniteLamination(std::vector<Chord>(all.begin(), all.end()), lam.depth(), lam.source());
}

namespace {

// Leaves grouped by their image chord.
std::map<Chord, std::vector<std::size_t>> preimage_index(const FiniteLamination& lam, unsigned d) {
  std::map<Chord, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < lam.size(); ++i) out[image(lam.leaves()[i], d)].push_back(i);
  return out;
}

bool has_full_sibling_collection(const FiniteLamination& lam, std::size_t leaf,
                                 const std::vector<std::size_t>& siblings, unsigned d) {
  const auto& L = lam.leaves();
  std::vector<std::size_t> chosen{leaf};
  // Depth-first search for d - 1 further pairwise disjoint siblings.
  auto extend = [&](auto& self, std::size_t from) -> bool {
    if (chosen.size() == d) return true;
    for (std::size_t k = from; k < siblings.size(); ++k) {
      const std::size_t cand = siblings[k];
      if (cand == leaf) continue;
      bool ok = std::all_of(chosen.begin(), chosen.end(),
                            [&](std::size_t c) { return chords_disjoint(L[c], L[cand]); });
      if (!ok) continue;
      chosen.push_back(cand);
      if (self(self, k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace

SiblingReport sibling_check(const FiniteLamination& lam, unsigned d) {
  SiblingReport report;
  const auto by_image = preimage_index(lam, d);
  const auto& L = lam.leaves();
  const bool boundary_known = lam.has_generations() && lam.depth().has_value();

  for (std::size_t i = 0; i < L.size(); ++i) {
    const Chord img = image(L[i], d);

    ++report.checked[1];
    if (!img.degenerate() && !lam.contains(img)) report.violations.push_back({1, L[i]});

    if (boundary_known && lam.generation(i) >= *lam.depth()) {
      ++report.skipped[2];
    } else {
      ++report.checked[2];
      if (!by_image.contains(L[i])) report.violations.push_back({2, L[i]});
    }

    if (img.degenerate()) {
      ++report.skipped[3];
    } else {
      ++report.checked[3];
      if (!has_full_sibling_collection(lam, i, by_image.at(img), d)) report.violations.push_back({3, L[i]});
    }
  }
  return report;
}

std::optional<std::pair<Chord, Chord>> first_crossing(const CriticalPortrait& k, const FiniteLamination& lam) {
  for (const Chord* c : {&k.first(), &k.second()}) {
    for (const Chord& leaf : lam.leaves()) {
      if (chords_cross(*c, leaf)) return std::make_pair(*c, leaf);
    }
  }
  return std::nullopt;
}

bool compat(const CriticalPortrait& k, const FiniteLamination& lam) { return !first_crossing(k, lam); }

bool ParameterSet::contains(const Angle& t) const {
  if (full_circle) return true;
  return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return in_arc(t, a); });
}

ParameterSet compatible_intervals(const FiniteLamination& lam) {
  static const Angle third(1, 3);
  ParameterSet out;
  if (lam.empty()) {
    out.full_circle = true;
    return out;
  }

  // Per leaf, the forbidden parameters form open arcs between the points where
  // t or t + 1/3 hits an endpoint; test one interior point of each.
  std::vector<Angle> breaks;
  std::vector<std::pair<Angle, Angle>> forbidden;
  for (const Chord& leaf : lam.leaves()) {
    std::vector<Angle> local{leaf.a(), leaf.b(), leaf.a() - third, leaf.b() - third};
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    for (std::size_t i = 0; i < local.size(); ++i) {
      const Angle& from = local[i];
      const Angle& to = local[(i + 1) % local.size()];
      if (chords_cross(critical_chord(arc_midpoint(Arc::open(from, to))), leaf)) forbidden.emplace_back(from, to);
    }
    breaks.insert(breaks.end(), local.begin(), local.end());
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  // Items: 2i is the point breaks[i], 2i+1 the open arc to the next point.
  const std::size_t m = breaks.size();
  const std::size_t items = 2 * m;
  std::vector<long> diff(items + 1, 0);
  auto index = [&](const Angle& x) {
    return static_cast<std::size_t>(std::lower_bound(breaks.begin(), breaks.end(), x) - breaks.begin());
  };
  for (const auto& [from, to] : forbidden) {
    const std::size_t lo = 2 * index(from) + 1;
    const std::size_t hi = (2 * index(to) + items - 1) % items;  // inclusive
    if (lo <= hi) {
      ++diff[lo];
      --diff[hi + 1];
    } else {
      ++diff[lo];
      --diff[items];
      ++diff[0];
      --diff[hi + 1];
    }
  }
  std::vector<bool> covered(items);
  long run = 0;
  for (std::size_t i = 0; i < items; ++i) {
    run += diff[i];
    covered[i] = run > 0;
  }

  if (std::none_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
    out.full_circle = true;
    return out;
  }
  // Start just after a covered item so no run straddles the origin.
  std::size_t start = 0;
  while (!covered[start]) ++start;
  for (std::size_t step = 1; step <= items; ++step) {
    const std::size_t i = (start + step) % items;
    if (covered[i] || covered[(i + items - 1) % items] == false) continue;
    // i opens a run; it is a point item.
    std::size_t j = i;
    while (!covered[(j + 1) % items]) j = (j + 1) % items;
    out.arcs.push_back(Arc::closed(breaks[i / 2], breaks[j / 2]));
  }
  std::sort(out.arcs.begin(), out.arcs.end(),
            [](const Arc& x, const Arc& y) { return x.start < y.start; });
  return out;
}

Rational chord_distance(const Chord& x, const Chord& y) {
  Rational straight = std::max(circle_distance(x.a(), y.a()), circle_distance(x.b(), y.b()));
  Rational swapped = std::max(circle_distance(x.a(), y.b()), circle_distance(x.b(), y.a()));
  return std::min(straight, swapped);
}

namespace {

// circle_distance(x, y) <= n/m without reducing any fraction.
bool within(const Angle& x, const Angle& y, const BigInt& n, const BigInt& m) {
  const BigInt den = x.den() * y.den();
  BigInt diff = x.num() * y.den() - y.num() * x.den();
  if (diff < 0) diff = -diff;
  if (2 * diff > den) diff = den - diff;
  return diff * m <= n * den;
}

bool chords_within(const Chord& x, const Chord& y, const BigInt& n, const BigInt& m) {
  return (within(x.a(), y.a(), n, m) && within(x.b(), y.b(), n, m)) ||
         (within(x.a(), y.b(), n, m) && within(x.b(), y.a(), n, m));
}

}  // namespace

FiniteLamination perfect_prune(const FiniteLamination& lam, const Rational& eps) {
  if (eps <= 0) throw InvalidArgument("resolution must be positive");
  const auto& L = lam.leaves();

  // Bucket endpoints on a grid of cells at least eps wide, so every neighbour
  // within eps lies in an adjacent cell.
  BigInt cells_big = eps >= 1 ? BigInt(1) : BigInt(denominator(eps) / numerator(eps));
  const BigInt cap(std::uint64_t{1} << 20);
  const std::uint64_t m = static_cast<std::uint64_t>(cells_big > cap ? cap : cells_big);
  auto cell = [&](const Angle& x) { return static_cast<std::uint64_t>(x.num() * m / x.den()); };
  auto key = [&](std::uint64_t i, std::uint64_t j) { return i * m + j; };

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cells(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    cells[i] = {cell(L[i].a()), cell(L[i].b())};
    grid[key(cells[i].first, cells[i].second)].push_back(i);
  }

  const BigInt eps_n = numerator(eps);
  const BigInt eps_m = denominator(eps);
  std::vector<bool> alive(L.size(), true);
  auto has_neighbour = [&](std::size_t i) {
    std::set<std::uint64_t> visited;
    for (auto [ci, cj] : {cells[i], std::make_pair(cells[i].second, cells[i].first)}) {
      // Own cell first: anything there is already within eps.
      for (std::uint64_t di : {m, m - 1, m + 1}) {
        for (std::uint64_t dj : {m, m - 1, m + 1}) {
          const std::uint64_t k = key((ci + di) % m, (cj + dj) % m);
          if (!visited.insert(k).second) continue;
          auto it = grid.find(k);
          if (it == grid.end()) continue;
          for (std::size_t other : it->second) {
            if (other != i && alive[other] && chords_within(L[i], L[other], eps_n, eps_m)) return true;
          }
        }
      }
    }
    return false;
  };

  while (true) {
    std::vector<std::size_t> isolated;
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (alive[i] && !has_neighbour(i)) isolated.push_back(i);
    }
    if (isolated.empty()) break;
    for (std::size_t i : isolated) alive[i] = false;
  }

  std::vector<Chord> kept;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (alive[i]) kept.push_back(L[i]);
  }
  return FiniteLamination(std::move(kept), lam.depth(), lam.source());
}

FiniteLamination chief_approx(const FiniteLamination& lam, const Chord& leaf) {
  if (!lam.contains(leaf)) throw InvalidArgument("leaf " + leaf.str() + " is not in the lamination");
  const auto by_image = preimage_index(lam, 3);
  const auto& L = lam.leaves();

  std::vector<bool> in(L.size(), false);
  std::deque<std::size_t> queue;
  for (Chord x = leaf;;) {
    auto idx = lam.index_of(x);
    if (!idx || in[*idx]) break;
    in[*idx] = true;
    queue.push_back(*idx);
    x = image(x);
  }
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    auto it = by_image.find(L[cur]);
    if (it == by_image.end()) continue;
    for (std::size_t pre : it->second) {
      if (!in[pre]) {
        in[pre] = true;
        queue.push_back(pre);
      }
    }
  }

  std::vector<Chord> kept;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (in[i]) kept.push_back(L[i]);
  }
  return FiniteLamination(std::move(kept), lam.depth(), lam.source());
}

std::optional<Chord> exists_long_leaf(const FiniteLamination& lam, unsigned d) {
  // Lengths as unreduced fractions n/m, compared by cross-multiplication.
  const Chord* best = nullptr;
  BigInt best_n = 0;
  BigInt best_m = 1;
  for (const Chord& c : lam.leaves()) {
    const BigInt m = c.a().den() * c.b().den();
    BigInt n = c.b().num() * c.a().den() - c.a().num() * c.b().den();
    if (2 * n > m) n = m - n;
    if (n * (d + 1) >= m && (!best || n * best_m > best_n * m)) {
      best = &c;
      best_n = std::move(n);
      best_m = m;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

std::string BoundaryWord::str() const {
  std::string out;
  for (const auto& p : pieces) {
    if (!out.empty()) out += " ";
    switch (p.kind) {
      case BoundaryPiece::Kind::FullCircle: out += "circle"; break;
      case BoundaryPiece::Kind::CircleArc: out += "arc(" + p.from.str() + "," + p.to.str() + ")"; break;
      case BoundaryPiece::Kind::Leaf: out += "leaf(" + p.from.str() + "," + p.to.str() + ")"; break;
    }
  }
  return out;
}

std::vector<BoundaryWord> gaps_extract(const FiniteLamination& lam) {
  using Kind = BoundaryPiece::Kind;
  const auto& L = lam.leaves();
  if (L.empty()) {
    BoundaryWord whole;
    whole.pieces.push_back({Kind::FullCircle, Angle(), Angle()});
    return {whole};
  }

  // Nesting forest: the parent of a chord is the innermost chord whose arc
  // (a, b) contains it. Index L.size() stands for the outer region.
  const std::size_t root = L.size();
  std::vector<std::size_t> order(L.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (auto c = L[i].a() <=> L[j].a(); c != 0) return c < 0;
    return L[j].b() < L[i].b();
  });
  std::vector<std::vector<std::size_t>> children(L.size() + 1);
  std::vector<std::size_t> stack;
  for (std::size_t idx : order) {
    while (!stack.empty() && L[stack.back()].b() <= L[idx].a()) stack.pop_back();
    children[stack.empty() ? root : stack.back()].push_back(idx);
    stack.push_back(idx);
  }

  auto arc = [](const Angle& from, const Angle& to, BoundaryWord& w) {
    if (from != to) w.pieces.push_back({Kind::CircleArc, from, to});
  };

  struct Keyed {
    BoundaryWord word;
    Rational span;
  };
  std::vector<Keyed> regions;
  for (std::size_t r = 0; r <= L.size(); ++r) {
    BoundaryWord w;
    const auto& kids = children[r];
    if (r == root) {
      Angle cur = L[kids.front()].a();
      for (std::size_t k : kids) {
        arc(cur, L[k].a(), w);
        w.pieces.push_back({Kind::Leaf, L[k].a(), L[k].b()});
        cur = L[k].b();
      }
      arc(cur, L[kids.front()].a(), w);
      w.smallest = Angle();
      regions.push_back({std::move(w), Rational(1)});
    } else {
      Angle cur = L[r].a();
      for (std::size_t k : kids) {
        arc(cur, L[k].a(), w);
        w.pieces.push_back({Kind::Leaf, L[k].a(), L[k].b()});
        cur = L[k].b();
      }
      arc(cur, L[r].b(), w);
      w.pieces.push_back({Kind::Leaf, L[r].b(), L[r].a()});
      w.smallest = L[r].a();
      regions.push_back({std::move(w), arc_length(L[r].a(), L[r].b())});
    }
  }
  std::sort(regions.begin(), regions.end(), [](const Keyed& x, const Keyed& y) {
    if (auto c = x.word.smallest <=> y.word.smallest; c != 0) return c < 0;
    return x.span > y.span;
  });
  std::vector<BoundaryWord> out;
  out.reserve(regions.size());
  for (auto& k : regions) out.push_back(std::move(k.word));
  return out;
}

}  // namespace lamlab
