#include "ij/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "ij/errors.hpp"

namespace ij {

namespace {

constexpr Coord kFastLimit = Coord{1} << 62;

bool fits_fast(const Point& p) {
  return p.x > -kFastLimit && p.x < kFastLimit && p.y > -kFastLimit && p.y < kFastLimit;
}

Orientation from_sign(int s) {
  return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::Collinear);
}

Coord narrow(Wide v, const char* what) {
  if (v > Wide{std::numeric_limits<Coord>::max()} ||
      v < Wide{std::numeric_limits<Coord>::min()}) {
    throw ParameterError(std::string(what) + ": coefficient exceeds 64-bit range");
  }
  return static_cast<Coord>(v);
}

// Squared distance as an exact rational.
struct Rational {
  BigInt num;
  BigInt den;
};

int compare(const Rational& lhs, const Rational& rhs) {
  BigInt l = lhs.num * rhs.den;
  BigInt r = rhs.num * lhs.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

Rational squared_distance_to_segment(const Point& a, const Point& b, const Point& p) {
  BigInt dx = BigInt(b.x) - a.x;
  BigInt dy = BigInt(b.y) - a.y;
  BigInt wx = BigInt(p.x) - a.x;
  BigInt wy = BigInt(p.y) - a.y;
  BigInt t = wx * dx + wy * dy;
  BigInt len2 = dx * dx + dy * dy;
  if (len2 == 0 || t <= 0) {
    return {wx * wx + wy * wy, 1};
  }
  if (t >= len2) {
    BigInt ux = BigInt(p.x) - b.x;
    BigInt uy = BigInt(p.y) - b.y;
    return {ux * ux + uy * uy, 1};
  }
  BigInt cr = dx * wy - dy * wx;
  return {cr * cr, len2};
}

Rational squared_distance_to_hull(std::span<const Point> hull, const Point& p) {
  if (hull.size() >= 3 && hull_contains(hull, p, Boundary::Closed)) return {0, 1};
  if (hull.size() == 1) return squared_distance_to_segment(hull[0], hull[0], p);
  Rational best = squared_distance_to_segment(hull[0], hull[1], p);
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Rational d = squared_distance_to_segment(hull[i], hull[(i + 1) % hull.size()], p);
    if (compare(d, best) < 0) best = std::move(d);
  }
  return best;
}

}  // namespace

Orientation orientation_big(const Point& p, const Point& q, const Point& r) {
  BigInt det = (BigInt(q.x) - p.x) * (BigInt(r.y) - p.y) - (BigInt(q.y) - p.y) * (BigInt(r.x) - p.x);
  return from_sign(det.sign());
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  if (!fits_fast(p) || !fits_fast(q) || !fits_fast(r)) return orientation_big(p, q, r);
  Wide det = (Wide{q.x} - p.x) * (Wide{r.y} - p.y) - (Wide{q.y} - p.y) * (Wide{r.x} - p.x);
  return from_sign(det > 0 ? 1 : (det < 0 ? -1 : 0));
}

std::vector<Point> convex_hull(std::span<const Point> pts) {
  if (pts.size() <= 2) return {pts.begin(), pts.end()};
  std::vector<Point> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Point> hull(2 * sorted.size());
  std::size_t m = 0;
  for (const Point& p : sorted) {
    while (m >= 2 && orientation(hull[m - 2], hull[m - 1], p) != Orientation::CCW) --m;
    hull[m++] = p;
  }
  for (std::size_t i = sorted.size() - 1, lower = m + 1; i-- > 0;) {
    const Point& p = sorted[i];
    while (m >= lower && orientation(hull[m - 2], hull[m - 1], p) != Orientation::CCW) --m;
    hull[m++] = p;
  }
  hull.resize(m - 1);
  return hull;
}

bool hull_contains(std::span<const Point> hull, const Point& p, Boundary mode) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return mode == Boundary::Closed && hull[0] == p;
  if (hull.size() == 2) {
    if (mode == Boundary::Open) return false;
    const Point& a = hull[0];
    const Point& b = hull[1];
    return orientation(a, b, p) == Orientation::Collinear && std::min(a.x, b.x) <= p.x &&
           p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    Orientation o = orientation(hull[i], hull[(i + 1) % hull.size()], p);
    if (o == Orientation::CW) return false;
    if (o == Orientation::Collinear && mode == Boundary::Open) return false;
  }
  return true;
}

bool in_general_position(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) return false;
      for (std::size_t k = j + 1; k < n; ++k)
        if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear) return false;
    }
  return true;
}

std::vector<Index> canonical_radial_order(std::span<const Point> pts) {
  if (pts.empty()) return {};
  Index apex = 0;
  for (Index i = 1; i < static_cast<Index>(pts.size()); ++i) {
    const Point& p = pts[static_cast<std::size_t>(i)];
    const Point& best = pts[static_cast<std::size_t>(apex)];
    if (p.y > best.y || (p.y == best.y && p.x > best.x)) apex = i;
  }
  const Point& o = pts[static_cast<std::size_t>(apex)];
  std::vector<Index> rest;
  rest.reserve(pts.size() - 1);
  for (Index i = 0; i < static_cast<Index>(pts.size()); ++i)
    if (i != apex) rest.push_back(i);
  // Every p - o lies in the half-turn [pi, 2pi), so orientation is a strict
  // weak order on directions there.
  std::sort(rest.begin(), rest.end(), [&](Index u, Index v) {
    return orientation(o, pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)]) ==
           Orientation::CCW;
  });
  for (std::size_t i = 1; i < rest.size(); ++i) {
    if (orientation(o, pts[static_cast<std::size_t>(rest[i - 1])],
                    pts[static_cast<std::size_t>(rest[i])]) != Orientation::CCW) {
      std::ostringstream msg;
      msg << "points " << rest[i - 1] << " and " << rest[i] << " are collinear with apex " << apex;
      throw GeneralPositionViolation(msg.str());
    }
  }
  std::vector<Index> order{apex};
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

PointSet::PointSet(std::vector<Point> pts) : points_(std::move(pts)) {
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    std::ostringstream msg;
    msg << "duplicate point (" << dup->x << ", " << dup->y << ")";
    throw ValidationError(msg.str());
  }
  general_position_ = in_general_position(points_);
  if (general_position_) {
    radial_ = canonical_radial_order(points_);
    rank_.assign(points_.size(), 0);
    for (std::size_t pos = 0; pos < radial_.size(); ++pos)
      rank_[static_cast<std::size_t>(radial_[pos])] = static_cast<int>(pos);
  }
}

void PointSet::require_general_position() const {
  if (!general_position_) throw GeneralPositionViolation("point set is not in general position");
}

std::span<const Index> PointSet::radial() const {
  require_general_position();
  return radial_;
}

int PointSet::radial_position(Index i) const {
  require_general_position();
  return rank_[static_cast<std::size_t>(i)];
}

PointSet PointSet::subset(std::span<const Index> indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (Index i : indices) pts.push_back((*this)[i]);
  return PointSet(std::move(pts));
}

Halfplane halfplane_through(const Point& p, const Point& q) {
  // Right of p->q: orientation(p, q, r) <= 0, i.e. det(q-p, r-p) <= 0.
  // det = (q.x-p.x)(r.y-p.y) - (q.y-p.y)(r.x-p.x)
  //     = -(q.y-p.y) r.x + (q.x-p.x) r.y + const.
  Wide a = -(Wide{q.y} - p.y);
  Wide b = Wide{q.x} - p.x;
  Wide c = a * p.x + b * p.y;
  return {narrow(a, "halfplane_through"), narrow(b, "halfplane_through"),
          narrow(c, "halfplane_through")};
}

std::size_t count_inside(const Halfplane& h, std::span<const Point> pts) {
  return static_cast<std::size_t>(
      std::count_if(pts.begin(), pts.end(), [&](const Point& p) { return h.contains(p); }));
}

bool is_ham_sandwich_cut(const HalfplanePair& cut, std::span<const Point> a,
                         std::span<const Point> b) {
  const std::size_t need_a = (a.size() + 1) / 2;
  const std::size_t need_b = (b.size() + 1) / 2;
  for (const Halfplane& side : {cut.first, cut.second}) {
    if (count_inside(side, a) < need_a || count_inside(side, b) < need_b) return false;
  }
  return true;
}

std::vector<HalfplanePair> ham_sandwich_candidates(std::span<const Point> a,
                                                   std::span<const Point> b) {
  std::vector<Point> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<HalfplanePair> out;
  if (all.size() == 1) {
    Halfplane h{0, 1, all[0].y};
    out.push_back({h, h.opposite()});
    return out;
  }
  std::set<std::pair<std::size_t, std::size_t>> seen_lines;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      // Skip lines already produced from an earlier pair on the same line.
      bool duplicate = false;
      for (std::size_t t = 0; t < i && !duplicate; ++t)
        duplicate = orientation(all[i], all[j], all[t]) == Orientation::Collinear;
      for (std::size_t t = i + 1; t < j && !duplicate; ++t)
        duplicate = orientation(all[i], all[j], all[t]) == Orientation::Collinear;
      if (duplicate) continue;
      Halfplane h = halfplane_through(all[i], all[j]);
      HalfplanePair cut{h, h.opposite()};
      if (is_ham_sandwich_cut(cut, a, b)) out.push_back(cut);
    }
  }
  return out;
}

HalfplanePair ham_sandwich_bisect(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) throw ParameterError("ham_sandwich_bisect: empty input");
  auto candidates = ham_sandwich_candidates(a, b);
  if (candidates.empty()) throw VerificationFailure("ham_sandwich_bisect: no qualifying line");
  return candidates.front();
}

Halfplane expand_halfplane(const Halfplane& h, std::span<const Point> pts, std::size_t t) {
  if (t > pts.size()) throw ParameterError("expand_halfplane: t exceeds point count");
  if (count_inside(h, pts) >= t || t == 0) return h;
  std::vector<Wide> values;
  values.reserve(pts.size());
  for (const Point& p : pts) values.push_back(h.value(p));
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(t - 1), values.end());
  return {h.a, h.b, narrow(values[t - 1], "expand_halfplane")};
}

Halfplane perturbed_level(const Halfplane& h, std::span<const Point> pts, std::size_t t) {
  if (t == 0 || t > pts.size()) throw ParameterError("perturbed_level: t out of range");
  // Secondary functional: the normal rotated by a quarter turn.
  auto secondary = [&](const Point& p) { return Wide{-h.b} * p.x + Wide{h.a} * p.y; };
  Wide lo = secondary(pts[0]), hi = lo;
  for (const Point& p : pts) {
    lo = std::min(lo, secondary(p));
    hi = std::max(hi, secondary(p));
  }
  Wide scale = hi - lo + 1;
  Wide a = scale * h.a - h.b;
  Wide b = scale * h.b + h.a;
  Coord na = narrow(a, "perturbed_level");
  Coord nb = narrow(b, "perturbed_level");
  std::vector<Wide> values;
  values.reserve(pts.size());
  for (const Point& p : pts) values.push_back(Wide{na} * p.x + Wide{nb} * p.y);
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(t - 1), values.end());
  return {na, nb, narrow(values[t - 1], "perturbed_level")};
}

Halfplane boundary_variant(const Halfplane& h, std::span<const Point> pts,
                           std::span<const Point> keep) {
  std::vector<Point> on_line;
  for (const Point& p : pts)
    if (h.on_boundary(p)) on_line.push_back(p);
  for (const Point& p : keep)
    if (!h.on_boundary(p)) throw ParameterError("boundary_variant: kept point not on boundary");
  if (on_line.size() > 2) throw GeneralPositionViolation("boundary_variant: more than two points on line");
  if (keep.size() == on_line.size()) return h;
  if (keep.empty()) {
    // Midway between the lattice lines value = c - 1 and value = c.
    Wide a = Wide{2} * h.a, b = Wide{2} * h.b, c = Wide{2} * h.c - 1;
    return {narrow(a, "boundary_variant"), narrow(b, "boundary_variant"),
            narrow(c, "boundary_variant")};
  }
  // Two boundary points, keep one: rotate the line about the kept point so
  // the other one leaves; the scale keeps every off-line sign unchanged.
  const Point pivot = keep[0];
  const Point drop = on_line[0] == pivot ? on_line[1] : on_line[0];
  Wide dx = Wide{drop.x} - pivot.x, dy = Wide{drop.y} - pivot.y;
  Wide bound = 0;
  for (const Point& r : pts) {
    Wide s = dx * (Wide{r.x} - pivot.x) + dy * (Wide{r.y} - pivot.y);
    bound = std::max(bound, s < 0 ? -s : s);
  }
  Wide scale = bound + 1;
  Wide a = scale * h.a + dx;
  Wide b = scale * h.b + dy;
  Wide c = a * pivot.x + b * pivot.y;
  return {narrow(a, "boundary_variant"), narrow(b, "boundary_variant"),
          narrow(c, "boundary_variant")};
}

int compare_distance_to_hull(std::span<const Point> hull, const Point& p, const Point& q) {
  return compare(squared_distance_to_hull(hull, p), squared_distance_to_hull(hull, q));
}

}  // namespace ij
