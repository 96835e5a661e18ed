#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ij {

using Coord = std::int64_t;
using Wide = __int128;
using BigInt = boost::multiprecision::cpp_int;
using Index = int;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

// Sign of det(q - p, r - p). Coordinates below 2^62 in magnitude are handled
// in 128-bit arithmetic; anything larger escalates to cpp_int.
Orientation orientation(const Point& p, const Point& q, const Point& r);

// Same predicate, always evaluated with arbitrary precision.
Orientation orientation_big(const Point& p, const Point& q, const Point& r);

// CCW hull vertices starting at the lexicographically smallest point; collinear
// boundary points are dropped. Inputs of size 1 or 2 come back unchanged.
std::vector<Point> convex_hull(std::span<const Point> pts);

enum class Boundary { Closed, Open };

bool hull_contains(std::span<const Point> hull, const Point& p,
                   Boundary mode = Boundary::Closed);

// Topmost point first (max y, ties by max x), the rest by increasing CCW
// angle around it. Throws GeneralPositionViolation when two non-apex points
// are collinear with the apex.
std::vector<Index> canonical_radial_order(std::span<const Point> pts);

bool in_general_position(std::span<const Point> pts);

// Immutable point set: input order, canonical radial order and a general
// position certificate.
class PointSet {
 public:
  PointSet() = default;
  // Throws ValidationError on duplicate points.
  explicit PointSet(std::vector<Point> pts);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](Index i) const { return points_[static_cast<std::size_t>(i)]; }
  std::span<const Point> points() const noexcept { return points_; }

  bool general_position() const noexcept { return general_position_; }
  void require_general_position() const;

  // Radial permutation; radial()[0] is the apex p0.
  std::span<const Index> radial() const;
  Index apex() const { return radial().front(); }
  // Inverse permutation: position of input index i in the radial order.
  int radial_position(Index i) const;
  Index at_radial(int pos) const { return radial()[static_cast<std::size_t>(pos)]; }

  // Sub-set on the given input indices (kept in the given order).
  PointSet subset(std::span<const Index> indices) const;

 private:
  std::vector<Point> points_;
  std::vector<Index> radial_;
  std::vector<int> rank_;
  bool general_position_ = false;
};

// Closed region a*x + b*y <= c.
struct Halfplane {
  Coord a = 0;
  Coord b = 0;
  Coord c = 0;

  Wide value(const Point& p) const { return Wide{a} * p.x + Wide{b} * p.y; }
  bool contains(const Point& p) const { return value(p) <= c; }
  bool on_boundary(const Point& p) const { return value(p) == c; }
  // The other closed side of the same line.
  Halfplane opposite() const { return {-a, -b, -c}; }

  friend bool operator==(const Halfplane&, const Halfplane&) = default;
};

// Closed side of the line through p and q lying to the right of p->q.
Halfplane halfplane_through(const Point& p, const Point& q);

std::size_t count_inside(const Halfplane& h, std::span<const Point> pts);

// The two closed sides of one line.
struct HalfplanePair {
  Halfplane first;
  Halfplane second;
};

// True iff each closed side holds at least ceil(|A|/2) points of A and
// ceil(|B|/2) points of B.
bool is_ham_sandwich_cut(const HalfplanePair& cut, std::span<const Point> a,
                         std::span<const Point> b);

// All qualifying lines through pairs of distinct points of A u B, in
// lexicographic pair order, each line listed once.
std::vector<HalfplanePair> ham_sandwich_candidates(std::span<const Point> a,
                                                   std::span<const Point> b);

// First qualifying candidate. Every returned cut is re-checked by exact counting.
HalfplanePair ham_sandwich_bisect(std::span<const Point> a, std::span<const Point> b);

// Parallel translation of h's boundary growing h until it holds at least t
// points; equal-offset ties are all included.
Halfplane expand_halfplane(const Halfplane& h, std::span<const Point> pts, std::size_t t);

// Halfplane holding exactly the t smallest points of pts under the order
// (h.value, then the perpendicular functional), obtained by an exact small
// rotation of h's normal. Requires 1 <= t <= |pts|.
Halfplane perturbed_level(const Halfplane& h, std::span<const Point> pts, std::size_t t);

// Keeps every point strictly inside h and, of the points on h's boundary,
// exactly those listed in keep (at most two boundary points are supported,
// which is all general position allows).
Halfplane boundary_variant(const Halfplane& h, std::span<const Point> pts,
                           std::span<const Point> keep);

// Exact comparison of squared distances from p and q to a convex polygon
// (given as CCW hull, possibly a point or segment): returns <0, 0, >0.
int compare_distance_to_hull(std::span<const Point> hull, const Point& p, const Point& q);

}  // namespace ij
