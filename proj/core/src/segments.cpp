#include "lkt3/segments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_set>

namespace lkt3 {

Vec2 PolylineLoop::lifted(long i) const {
  const long n = long(points.size());
  long k = i / n;
  long j = i % n;
  if (j < 0) {
    j += n;
    --k;
  }
  return points[std::size_t(j)] + shift * double(k);
}

bool intersect_segments(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, SegmentHit& hit) {
  const Vec2 d1 = a1 - a0;
  const Vec2 d2 = b1 - b0;
  const double l1 = norm(d1), l2 = norm(d2);
  if (l1 == 0.0 || l2 == 0.0) return false;
  const double den = det(d1, d2);
  const Vec2 w = b0 - a0;
  if (std::abs(den) <= 1e-12 * l1 * l2) {
    // Parallel: only a collinear overlap of positive length counts.
    if (std::abs(det(d1, w)) > 1e-12 * l1 * std::max(1.0, norm(w))) return false;
    const double s0 = dot(w, d1) / (l1 * l1);
    const double s1 = dot(b1 - a0, d1) / (l1 * l1);
    const double lo = std::max(0.0, std::min(s0, s1));
    const double hi = std::min(1.0, std::max(s0, s1));
    if (hi - lo <= 1e-12) return false;
    hit.s = lo;
    hit.u = std::clamp(dot(a0 + d1 * lo - b0, d2) / (l2 * l2), 0.0, 1.0);
    hit.point = a0 + d1 * lo;
    hit.sin_angle = 0.0;
    hit.overlap = true;
    return true;
  }
  const double s = det(w, d2) / den;
  const double u = det(w, d1) / den;
  if (s < 0.0 || s >= 1.0 || u < 0.0 || u >= 1.0) return false;
  hit.s = s;
  hit.u = u;
  hit.point = a0 + d1 * s;
  hit.sin_angle = den / (l1 * l2);
  hit.overlap = false;
  return true;
}

namespace {

struct Box {
  Vec2 lo, hi;
};

Box box_of(Vec2 a, Vec2 b) {
  return {{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
}

// Range of lattice multiples k with lo_a - hi_b <= k * step <= hi_a - lo_b.
void offset_range(double lo_a, double hi_a, double lo_b, double hi_b, double step, long& k0, long& k1) {
  constexpr double eps = 1e-9;
  k0 = long(std::ceil((lo_a - hi_b - eps) / step));
  k1 = long(std::floor((hi_a - lo_b + eps) / step));
}

}  // namespace

std::vector<SegmentHit> self_intersections(const PolylineLoop& loop) {
  const long n = long(loop.size());
  std::vector<SegmentHit> hits;
  if (n < 3) return hits;

  std::vector<Box> boxes(std::size_t(n), Box{});
  double max_len = 0.0;
  for (long i = 0; i < n; ++i) {
    boxes[std::size_t(i)] = box_of(loop.lifted(i), loop.lifted(i + 1));
    max_len = std::max(max_len, norm(loop.lifted(i + 1) - loop.lifted(i)));
  }

  // Fundamental domain of the grid; periodic axes wrap cell indices.
  const bool px = loop.lattice != Lattice::None;
  const bool py = loop.lattice == Lattice::Torus;
  Box dom = boxes[0];
  for (const Box& b : boxes) {
    dom.lo = {std::min(dom.lo.x, b.lo.x), std::min(dom.lo.y, b.lo.y)};
    dom.hi = {std::max(dom.hi.x, b.hi.x), std::max(dom.hi.y, b.hi.y)};
  }
  const double step_x = loop.lattice == Lattice::Torus ? 1.0 : loop.u_period;
  if (px) {
    dom.lo.x = 0.0;
    dom.hi.x = step_x;
  }
  if (py) {
    dom.lo.y = 0.0;
    dom.hi.y = 1.0;
  }
  const double cell = std::max(max_len, 1e-9);
  const long gx = std::clamp(long((dom.hi.x - dom.lo.x) / cell), 1L, 256L);
  const long gy = std::clamp(long((dom.hi.y - dom.lo.y) / cell), 1L, 256L);
  const double cw = (dom.hi.x - dom.lo.x) / double(gx);
  const double ch = std::max(dom.hi.y - dom.lo.y, 1e-12) / double(gy);

  std::vector<std::vector<long>> cells(std::size_t(gx * gy));
  for (long i = 0; i < n; ++i) {
    Box b = boxes[std::size_t(i)];
    if (px) {
      const double k = std::floor(b.lo.x / step_x) * step_x;
      b.lo.x -= k;
      b.hi.x -= k;
    }
    if (py) {
      const double k = std::floor(b.lo.y);
      b.lo.y -= k;
      b.hi.y -= k;
    }
    long x0 = long(std::floor((b.lo.x - dom.lo.x) / cw)), x1 = long(std::floor((b.hi.x - dom.lo.x) / cw));
    long y0 = long(std::floor((b.lo.y - dom.lo.y) / ch)), y1 = long(std::floor((b.hi.y - dom.lo.y) / ch));
    if (px) x1 = std::min(x1, x0 + gx - 1);
    else x0 = std::clamp(x0, 0L, gx - 1), x1 = std::clamp(x1, 0L, gx - 1);
    if (py) y1 = std::min(y1, y0 + gy - 1);
    else y0 = std::clamp(y0, 0L, gy - 1), y1 = std::clamp(y1, 0L, gy - 1);
    for (long cx = x0; cx <= x1; ++cx)
      for (long cy = y0; cy <= y1; ++cy) {
        const long wx = ((cx % gx) + gx) % gx, wy = ((cy % gy) + gy) % gy;
        cells[std::size_t(wx * gy + wy)].push_back(i);
      }
  }

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<long, long>> pairs;
  for (const auto& c : cells)
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        long i = std::min(c[a], c[b]), j = std::max(c[a], c[b]);
        if (i == j) continue;
        if (seen.insert(std::uint64_t(i) * std::uint64_t(n) + std::uint64_t(j)).second) pairs.emplace_back(i, j);
      }
  std::sort(pairs.begin(), pairs.end());

  for (auto [i, j] : pairs) {
    const Box& A = boxes[std::size_t(i)];
    const Box& B = boxes[std::size_t(j)];
    long kx0 = 0, kx1 = 0, ky0 = 0, ky1 = 0;
    if (px) offset_range(A.lo.x, A.hi.x, B.lo.x, B.hi.x, step_x, kx0, kx1);
    if (py) offset_range(A.lo.y, A.hi.y, B.lo.y, B.hi.y, 1.0, ky0, ky1);
    const Vec2 a0 = loop.lifted(i), a1 = loop.lifted(i + 1);
    for (long kx = kx0; kx <= kx1; ++kx)
      for (long ky = ky0; ky <= ky1; ++ky) {
        const Vec2 o{double(kx) * step_x, double(ky)};
        const Vec2 b0 = loop.lifted(j) + o, b1 = loop.lifted(j + 1) + o;
        SegmentHit h;
        if (!intersect_segments(a0, a1, b0, b1, h)) continue;
        // Consecutive segments share a vertex; that contact is not a double point.
        constexpr double guard = 1e-9;
        if (j == i + 1 && norm(b0 - a1) < 1e-12 && h.s > 1.0 - guard && h.u < guard) continue;
        if (i == 0 && j == n - 1 && norm(b1 - a0) < 1e-12 && h.s < guard && h.u > 1.0 - guard) continue;
        h.i = std::size_t(i);
        h.j = std::size_t(j);
        h.offset = o;
        hits.push_back(h);
      }
  }
  std::sort(hits.begin(), hits.end(), [](const SegmentHit& a, const SegmentHit& b) {
    return a.i != b.i ? a.i < b.i : (a.s != b.s ? a.s < b.s : a.j < b.j);
  });
  // A double point at a shared vertex is reported by both segments meeting there.
  const double total = double(n);
  auto close = [total](double a, double b) {
    const double d = std::abs(a - b);
    return std::min(d, total - d) < 1e-7;
  };
  std::vector<SegmentHit> unique;
  for (const SegmentHit& h : hits) {
    const double p = double(h.i) + h.s, q = double(h.j) + h.u;
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const SegmentHit& o) {
      const double op = double(o.i) + o.s, oq = double(o.j) + o.u;
      return (close(op, p) && close(oq, q)) || (close(op, q) && close(oq, p));
    });
    if (!dup) unique.push_back(h);
  }
  return unique;
}

}  // namespace lkt3
