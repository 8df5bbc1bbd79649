#include "feynkit/projection.hpp"

#include "feynkit/mc.hpp"

#include <cmath>
#include <stdexcept>

namespace feynkit {

namespace {

struct Degenerate {};

struct Vec2 {
  double x = 0.0, y = 0.0;
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::hypot(x, y); }
};

double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

LinkDiagram try_project(const PolygonalLink& link, const Vec3& dir) {
  LinkDiagram d;
  d.direction = dir;
  d.e1 = any_orthogonal(dir);
  d.e2 = dir.cross(d.e1).normalized();
  // (e1, e2, dir) right-handed: e1 x e2 = dir.

  const double diam = link.bounding_diameter();
  const double tol_param = 1e-6;
  const double tol_height = 1e-9 * diam;
  const double tol_point = 1e-7 * diam;

  auto project = [&](const Vec3& p) { return Vec2{p.dot(d.e1), p.dot(d.e2)}; };

  struct Hit {
    Vec2 where;
  };
  std::vector<Vec2> hit_points;

  const std::size_t nc = link.component_count();
  for (std::size_t ci = 0; ci < nc; ++ci) {
    const auto& pa = link.component(ci).points;
    const std::size_t na = pa.size();
    for (std::size_t cj = ci; cj < nc; ++cj) {
      const auto& pb = link.component(cj).points;
      const std::size_t nb = pb.size();
      for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = (ci == cj ? i + 1 : 0); j < nb; ++j) {
          if (ci == cj) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == nb - 1);
            if (adjacent) continue;
          }
          const Vec2 a0 = project(pa[i]), a1 = project(pa[(i + 1) % na]);
          const Vec2 b0 = project(pb[j]), b1 = project(pb[(j + 1) % nb]);
          const Vec2 da = a1 - a0, db = b1 - b0;
          const double den = cross2(da, db);
          const double scale = da.norm() * db.norm();
          if (scale <= 0.0) throw Degenerate{};
          if (std::abs(den) < 1e-9 * scale) {
            // Near-parallel in projection: only degenerate if they come close.
            const Vec2 r = b0 - a0;
            if (std::abs(cross2(da, r)) < tol_point * da.norm() &&
                !(std::min(b0.x, b1.x) > std::max(a0.x, a1.x) + tol_point ||
                  std::min(a0.x, a1.x) > std::max(b0.x, b1.x) + tol_point ||
                  std::min(b0.y, b1.y) > std::max(a0.y, a1.y) + tol_point ||
                  std::min(a0.y, a1.y) > std::max(b0.y, b1.y) + tol_point))
              throw Degenerate{};
            continue;
          }
          const Vec2 r = b0 - a0;
          const double s = cross2(r, db) / den;
          const double t = cross2(r, da) / den;
          if (s < -tol_param || s > 1.0 + tol_param || t < -tol_param || t > 1.0 + tol_param)
            continue;
          if (s < tol_param || s > 1.0 - tol_param || t < tol_param || t > 1.0 - tol_param)
            throw Degenerate{};  // crossing at a vertex shadow

          const Vec3 qa = pa[i] + (pa[(i + 1) % na] - pa[i]) * s;
          const Vec3 qb = pb[j] + (pb[(j + 1) % nb] - pb[j]) * t;
          const double ha = qa.dot(dir), hb = qb.dot(dir);
          if (std::abs(ha - hb) < tol_height) throw Degenerate{};

          Crossing c;
          const bool a_over = ha > hb;
          const auto param = [&](std::size_t comp, std::size_t seg, double frac) {
            const auto& pts = link.component(comp).points;
            double before = 0.0;
            for (std::size_t k = 0; k < seg; ++k)
              before += (pts[(k + 1) % pts.size()] - pts[k]).norm();
            const double seglen = (pts[(seg + 1) % pts.size()] - pts[seg]).norm();
            return (before + frac * seglen) / link.length(comp);
          };
          const Vec2 ta = da, tb = db;
          if (a_over) {
            c.over_comp = ci;
            c.under_comp = cj;
            c.over_param = param(ci, i, s);
            c.under_param = param(cj, j, t);
            c.sign = cross2(ta, tb) > 0.0 ? 1 : -1;
          } else {
            c.over_comp = cj;
            c.under_comp = ci;
            c.over_param = param(cj, j, t);
            c.under_param = param(ci, i, s);
            c.sign = cross2(tb, ta) > 0.0 ? 1 : -1;
          }
          const Vec2 where = a0 + da * s;
          for (const auto& h : hit_points)
            if ((h - where).norm() < tol_point) throw Degenerate{};  // triple point
          hit_points.push_back(where);
          d.crossings.push_back(c);
        }
      }
    }
  }
  return d;
}

}  // namespace

LinkDiagram project_link(const PolygonalLink& link, std::uint64_t seed, int retry_budget) {
  Rng rng(Rng::mix(seed, 0x70726f6aULL));
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    Vec3 dir{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    if (dir.norm() < 1e-6) continue;
    dir = dir.normalized();
    try {
      return try_project(link, dir);
    } catch (const Degenerate&) {
      continue;
    }
  }
  throw std::runtime_error("project_link: no generic projection within retry budget");
}

int signed_over_count(const LinkDiagram& diagram, std::size_t over, std::size_t under) {
  int total = 0;
  for (const auto& c : diagram.crossings)
    if (c.over_comp == over && c.under_comp == under) total += c.sign;
  return total;
}

int combinatorial_linking(const PolygonalLink& link, std::size_t i, std::size_t j,
                          std::uint64_t seed) {
  if (i == j) throw std::invalid_argument("combinatorial_linking: need two distinct components");
  PolygonalLink pair({link.component(i), link.component(j)});
  const LinkDiagram d = project_link(pair, seed);
  return signed_over_count(d, 0, 1);
}

double default_pushoff_epsilon(const PolygonalLink& link) {
  return 1e-3 * link.bounding_diameter();
}

PolygonalLink pushoff_pair(const PolygonalLink& link, std::size_t comp, double eps) {
  const auto& c = link.component(comp);
  if (!c.framed()) throw std::invalid_argument("pushoff_pair: component not framed");
  LinkComponent off;
  off.points.resize(c.points.size());
  for (std::size_t k = 0; k < c.points.size(); ++k)
    off.points[k] = c.points[k] + c.framing[k] * eps;
  LinkComponent base;
  base.points = c.points;
  return PolygonalLink({base, off});
}

int writhe_pushoff_selflinking(const PolygonalLink& link, std::size_t comp, std::uint64_t seed) {
  if (!link.component(comp).framed())
    throw std::invalid_argument("writhe_pushoff_selflinking: component not framed");
  double eps = default_pushoff_epsilon(link);
  for (int attempt = 0; attempt < 8; ++attempt, eps *= 0.5) {
    int lk1 = 0, lk2 = 0;
    try {
      lk1 = combinatorial_linking(pushoff_pair(link, comp, eps), 0, 1, seed);
      lk2 = combinatorial_linking(pushoff_pair(link, comp, 0.5 * eps), 0, 1, seed);
    } catch (const std::invalid_argument&) {
      continue;  // push-off hit the embedding tolerance; shrink
    }
    if (lk1 == lk2) return lk1;
  }
  throw std::runtime_error("writhe_pushoff_selflinking: push-off did not stabilize");
}

PolygonalLink normalize_framing_to_zero(const PolygonalLink& link, std::size_t comp,
                                        std::uint64_t seed) {
  PolygonalLink cur = link;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const int s = writhe_pushoff_selflinking(cur, comp, seed);
    if (s == 0) return cur;
    const auto& c = cur.component(comp);
    cur = cur.with_framing(comp, twist_framing(c, c.framing, -s));
  }
  throw std::runtime_error("normalize_framing_to_zero: did not converge");
}

}  // namespace feynkit
