#include "lamlab/quad_gap.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "lamlab/errors.hpp"
#include "lamlab/portrait.hpp"

namespace lamlab {

namespace {

constexpr std::uint64_t kMaxGrid = std::uint64_t{1} << 32;

// Membership of k/D in a closed arc, precomputed as integer bounds on k.
class GridArc {
 public:
  GridArc(const Arc& arc, std::uint64_t den) {
    BigInt d(den);
    BigInt lo = (arc.start.num() * d + arc.start.den() - 1) / arc.start.den();
    BigInt hi = (arc.end.num() * d) / arc.end.den();
    lo_ = static_cast<std::uint64_t>(lo);
    hi_ = static_cast<std::uint64_t>(hi);
    wraps_ = arc.end < arc.start;
  }

  bool contains(std::uint64_t k) const {
    return wraps_ ? (k >= lo_ || k <= hi_) : (k >= lo_ && k <= hi_);
  }

 private:
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  bool wraps_ = false;
};

std::uint64_t pow3(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > kMaxGrid) throw InvalidArgument("period/preperiod bounds too large for a grid scan");
    r *= 3;
  }
  return r;
}

}  // namespace

PiApproximation pi_points(const Chord& c, unsigned period_bound, unsigned preperiod_bound) {
  if (period_bound == 0) throw InvalidArgument("period bound must be at least 1");
  const Arc closed_long = critical_arcs(c).long_arc;

  std::set<Angle> found;
  const std::uint64_t tail = pow3(preperiod_bound);
  for (unsigned b = 1; b <= period_bound; ++b) {
    const std::uint64_t cycle = pow3(b) - 1;
    if (cycle > kMaxGrid / tail) throw InvalidArgument("period/preperiod bounds too large for a grid scan");
    const std::uint64_t den = tail * cycle;
    const GridArc arc(closed_long, den);
    const unsigned steps = preperiod_bound + b;  // reaches and covers the cycle
    for (std::uint64_t k = 0; k < den; ++k) {
      std::uint64_t x = k;
      bool inside = true;
      for (unsigned i = 0; i <= steps && inside; ++i) {
        inside = arc.contains(x);
        x = (3 * x) % den;
      }
      if (inside) found.emplace(BigInt(k), BigInt(den));
    }
  }

  PiApproximation out;
  out.chord = c;
  out.period_bound = period_bound;
  out.preperiod_bound = preperiod_bound;
  out.points.assign(found.begin(), found.end());
  return out;
}

Gap::Gap(std::vector<Angle> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InvalidArgument("gap vertices repeat");
  }
  if (vertices_.size() < 2) throw InvalidArgument("a gap needs at least 2 vertices");
}

std::vector<Chord> Gap::edges() const {
  if (vertices_.size() == 2) return {Chord(vertices_[0], vertices_[1])};
  std::vector<Chord> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return out;
}

Gap gap_from_pi(const PiApproximation& pi) {
  if (pi.points.empty()) throw InvalidArgument("empty approximation has no hull");
  Gap g(pi.points);
  g.degree = 2;
  return g;
}

bool is_forward_invariant(const Gap& g) {
  const auto& v = g.vertices();
  return std::all_of(v.begin(), v.end(), [&](const Angle& x) {
    return std::binary_search(v.begin(), v.end(), sigma(x));
  });
}

std::vector<Major> invariant_gap_majors(const Gap& g) {
  if (!is_forward_invariant(g)) throw InvalidArgument("gap is not forward invariant");
  static const Angle third(1, 3);
  static const Angle two_thirds(2, 3);

  const auto& v = g.vertices();
  std::vector<Major> out;
  // Walk the holes: the open arc from each vertex to the next one.
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Angle& from = v[i];
    const Angle& to = v[(i + 1) % v.size()];
    const Arc hole = Arc::closed(from, to);
    std::vector<Chord> witnesses;
    for (const Angle& end : {from, to}) {
      for (const Angle* shift : {&third, &two_thirds}) {
        Angle other = end + *shift;
        if (in_arc(other, hole)) witnesses.emplace_back(end, other);
      }
    }
    if (witnesses.empty()) continue;
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    Chord edge(from, to);
    auto same = std::find_if(out.begin(), out.end(), [&](const Major& m) { return m.edge == edge; });
    if (same == out.end()) {
      out.push_back({edge, std::move(witnesses)});
    } else {
      same->witnesses.insert(same->witnesses.end(), witnesses.begin(), witnesses.end());
      std::sort(same->witnesses.begin(), same->witnesses.end());
    }
  }
  std::sort(out.begin(), out.end(), [](const Major& x, const Major& y) { return x.edge < y.edge; });
  return out;
}

bool is_rotational(const Gap& g) {
  const auto& v = g.vertices();
  const std::size_t n = v.size();
  std::vector<bool> hit(n, false);
  std::optional<std::size_t> shift;
  bool constant = true;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(v.begin(), v.end(), sigma(v[i]));
    if (it == v.end() || *it != sigma(v[i])) throw InvalidArgument("gap is not forward invariant");
    const auto j = static_cast<std::size_t>(it - v.begin());
    if (hit[j]) throw InvalidArgument("sigma_3 does not map the gap's vertices onto themselves");
    hit[j] = true;
    const std::size_t s = (j + n - i) % n;
    if (!shift) shift = s;
    constant = constant && *shift == s;
  }
  return constant;
}

}  // namespace lamlab
