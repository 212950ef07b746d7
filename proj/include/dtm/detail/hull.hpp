#pragma once

// Integer kernels for the maximal transforms of a nonnegative integer profile
// h[0..W-1], given through its prefix sums S[0..W] (S[i] = h[0] + ... + h[i-1]).
// The average of h over positions [p, q] is the slope between the prefix
// points (p, S[p]) and (q + 1, S[q + 1]). All comparisons are done by
// cross-multiplication in Wide.
//
// Int is std::int64_t (with Wide = __int128) when the profile is small enough,
// or mpz_class for both otherwise.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dtm::detail {

template <class Int>
struct Fraction {
  Int num;
  Int den;  // > 0
};

template <class Int, class Wide>
bool frac_less(const Fraction<Int>& a, const Fraction<Int>& b) {
  return Wide(a.num) * Wide(b.den) < Wide(b.num) * Wide(a.den);
}

template <class Int>
struct Point {
  Int x;
  Int y;
};

/// Slope of (p -> q) compared with slope of (r -> s); requires p.x < q.x and r.x < s.x.
template <class Int, class Wide>
int compare_slopes(const Point<Int>& p, const Point<Int>& q, const Point<Int>& r, const Point<Int>& s) {
  const Wide lhs = Wide(q.y - p.y) * Wide(s.x - r.x);
  const Wide rhs = Wide(s.y - r.y) * Wide(q.x - p.x);
  return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
}

/// Cross product of (b - a) and (c - b): positive for a left turn.
template <class Int, class Wide>
Wide turn(const Point<Int>& a, const Point<Int>& b, const Point<Int>& c) {
  return Wide(b.x - a.x) * Wide(c.y - b.y) - Wide(b.y - a.y) * Wide(c.x - b.x);
}

/// Centered maximal values and smallest maximizing radii on every window
/// position. Radii beyond max(p, W-1-p) only add zeros, so the scan stops there.
template <class Int, class Wide>
void centered_kernel(std::span<const Int> prefix, std::vector<Fraction<Int>>& values,
                     std::vector<std::int64_t>& radii) {
  const auto w = static_cast<std::int64_t>(prefix.size()) - 1;
  values.clear();
  radii.clear();
  values.reserve(static_cast<std::size_t>(w));
  radii.reserve(static_cast<std::size_t>(w));
  for (std::int64_t p = 0; p < w; ++p) {
    Fraction<Int> best{prefix[p + 1] - prefix[p], Int(1)};
    std::int64_t best_r = 0;
    const std::int64_t reach = std::max(p, w - 1 - p);
    for (std::int64_t r = 1; r <= reach; ++r) {
      const std::int64_t lo = std::max<std::int64_t>(p - r, 0);
      const std::int64_t hi = std::min<std::int64_t>(p + r, w - 1);
      Fraction<Int> cand{prefix[hi + 1] - prefix[lo], Int(2 * r + 1)};
      if (frac_less<Int, Wide>(best, cand)) {
        best = cand;
        best_r = r;
      }
    }
    values.push_back(best);
    radii.push_back(best_r);
  }
}

/// Lower convex hull over points appended in increasing x, with undo of the
/// most recent append. Appends overwrite in place, so one saved slot per
/// append is enough to roll back.
template <class Int, class Wide>
class RollbackLowerHull {
 public:
  explicit RollbackLowerHull(std::size_t capacity) { pts_.reserve(capacity); }

  void push(const Point<Int>& p) {
    std::size_t k = size_;
    while (k >= 2 && turn<Int, Wide>(pts_[k - 2], pts_[k - 1], p) <= Wide(0)) --k;
    Log entry{k, size_, k < pts_.size() ? pts_[k] : p};
    if (k < pts_.size()) {
      pts_[k] = p;
    } else {
      pts_.push_back(p);
    }
    size_ = k + 1;
    log_.push_back(entry);
  }

  void undo() {
    const Log entry = log_.back();
    log_.pop_back();
    pts_[entry.slot] = entry.saved;
    size_ = entry.size_before;
  }

  std::size_t size() const { return size_; }
  const Point<Int>& operator[](std::size_t i) const { return pts_[i]; }

  /// Index of the vertex maximizing the slope to `anchor`, which lies
  /// strictly right of every vertex. This is the mirror image of
  /// LeftGrowingUpperHull::tangent_from_left: slopes rise then fall.
  std::size_t tangent_from_right(const Point<Int>& anchor) const {
    std::size_t lo = 0;
    std::size_t hi = size_ - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (compare_slopes<Int, Wide>(pts_[mid + 1], anchor, pts_[mid], anchor) > 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

 private:
  struct Log {
    std::size_t slot;
    std::size_t size_before;
    Point<Int> saved;
  };
  std::vector<Point<Int>> pts_;
  std::vector<Log> log_;
  std::size_t size_ = 0;
};

/// Upper convex hull over points prepended in decreasing x. Stored with the
/// leftmost vertex at the back; `at(k)` indexes left to right.
template <class Int, class Wide>
class LeftGrowingUpperHull {
 public:
  explicit LeftGrowingUpperHull(std::size_t capacity) { pts_.reserve(capacity); }

  void push_left(const Point<Int>& p) {
    // keep a clockwise (right) turn at every interior vertex: p, A, B
    while (pts_.size() >= 2 &&
           turn<Int, Wide>(p, pts_[pts_.size() - 1], pts_[pts_.size() - 2]) >= Wide(0)) {
      pts_.pop_back();
    }
    pts_.push_back(p);
  }

  std::size_t size() const { return pts_.size(); }
  const Point<Int>& at(std::size_t k) const { return pts_[pts_.size() - 1 - k]; }

  /// Index (left to right) of the vertex maximizing the slope from `anchor`,
  /// which lies strictly left of every vertex. Slopes from an external point
  /// along a convex chain rise then fall, so binary search on the rising part.
  std::size_t tangent_from_left(const Point<Int>& anchor) const {
    std::size_t lo = 0;
    std::size_t hi = pts_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (compare_slopes<Int, Wide>(anchor, at(mid + 1), anchor, at(mid)) > 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

 private:
  std::vector<Point<Int>> pts_;
};

/// Non-centered maximal values on every window position p: the maximum slope
/// between a left prefix point j in [0, p] and a right prefix point m in
/// [p+1, W]. The optimal segment is a common support line: every left point
/// lies on or above it and every right point on or below it, so its ends are
/// a vertex of the lower hull of the left points and a vertex of the upper
/// hull of the right points. For each right vertex the best left vertex is
/// found by tangent search. The right hull grows as p decreases; the left
/// hull is built forward once and rolled back.
template <class Int, class Wide>
std::vector<Fraction<Int>> noncentered_kernel(std::span<const Int> prefix) {
  const auto w = prefix.size() - 1;
  std::vector<Fraction<Int>> values(w);
  if (w == 0) return values;
  auto point = [&](std::size_t i) { return Point<Int>{Int(static_cast<std::int64_t>(i)), prefix[i]}; };

  RollbackLowerHull<Int, Wide> left(w);
  for (std::size_t j = 0; j < w; ++j) left.push(point(j));
  LeftGrowingUpperHull<Int, Wide> right(w);

  for (std::size_t p = w; p-- > 0;) {
    right.push_left(point(p + 1));
    const Point<Int>* best_a = nullptr;
    const Point<Int>* best_b = nullptr;
    for (std::size_t k = 0; k < right.size(); ++k) {
      const auto& b = right.at(k);
      const auto& a = left[left.tangent_from_right(b)];
      if (best_a == nullptr || compare_slopes<Int, Wide>(*best_a, *best_b, a, b) < 0) {
        best_a = &a;
        best_b = &b;
      }
    }
    values[p] = {best_b->y - best_a->y, best_b->x - best_a->x};
    left.undo();
  }
  return values;
}

/// Right one-sided values: at position p, the maximum over m in [p+1, W] of
///   (S[m] - (S[p] + S[p+1]) / 2) / (m - (p + 1/2)),
/// i.e. the steepest slope from the anchor (p + 1/2, (S[p] + S[p+1]) / 2) to a
/// prefix point on the right. Both axes are doubled to stay in integers. The
/// returned fractions are in doubled units (numerator and denominator both
/// carry the factor 2).
template <class Int, class Wide>
std::vector<Fraction<Int>> right_one_sided_kernel(std::span<const Int> prefix) {
  const auto w = prefix.size() - 1;
  std::vector<Fraction<Int>> values(w);
  LeftGrowingUpperHull<Int, Wide> hull(w);
  for (std::size_t p = w; p-- > 0;) {
    const auto m = static_cast<std::int64_t>(p + 1);
    hull.push_left({Int(2 * m), Int(2) * prefix[p + 1]});
    const Point<Int> anchor{Int(2 * static_cast<std::int64_t>(p) + 1), prefix[p] + prefix[p + 1]};
    const auto& best = hull.at(hull.tangent_from_left(anchor));
    values[p] = {best.y - anchor.y, best.x - anchor.x};
  }
  return values;
}

}  // namespace dtm::detail
