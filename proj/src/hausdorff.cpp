#include "hyperbicomb/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hyperbicomb {

namespace {

bool vec_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

bool point_less(const BasePoint& a, const BasePoint& b) {
  if (a.is_vec()) return vec_less(a.vec(), b.vec());
  const TreePoint& ta = a.tree_pt();
  const TreePoint& tb = b.tree_pt();
  if (ta.edge != tb.edge) return ta.edge < tb.edge;
  return ta.offset < tb.offset;
}

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace

FiniteCompactSet::FiniteCompactSet(const BaseSpace& s, std::vector<BasePoint> pts) {
  if (pts.empty()) throw std::invalid_argument("finite set: must be nonempty");
  for (auto& p : pts) {
    validate_point(s, p);
    if (s.is_tree()) p = BasePoint(s.rtree().canonical(p.tree_pt()));
  }
  std::sort(pts.begin(), pts.end(), point_less);
  for (const BasePoint& p : pts) {
    bool dup = false;
    for (const BasePoint& q : points_) {
      if (distance(s, p, q) <= kPointTol) {
        dup = true;
        break;
      }
    }
    if (!dup) points_.push_back(p);
  }
}

std::vector<Eigen::Vector2d> planar_hull(std::vector<Eigen::Vector2d> pts) {
  if (pts.empty()) throw std::invalid_argument("hull: empty point set");
  std::sort(pts.begin(), pts.end(), [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
                          return a.x() == b.x() && a.y() == b.y();
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n == 1) return pts;

  std::vector<Eigen::Vector2d> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= kPointTol) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= kPointTol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && (hull[0] - hull[1]).norm() <= kPointTol) hull.resize(1);
  return hull;
}

double point_to_segment(Norm n, const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                        const Eigen::Vector2d& b) {
  const Eigen::Vector2d d = b - a;
  const Eigen::Vector2d u = p - a;
  const double dd = d.squaredNorm();
  if (n == Norm::L2) {
    double s = dd > 0.0 ? std::clamp(u.dot(d) / dd, 0.0, 1.0) : 0.0;
    return (u - s * d).norm();
  }
  // The objective s -> ||u - s*d|| is piecewise linear for L1/Linf; its minimum sits at
  // an endpoint or a kink: a coordinate sign change, or (Linf) a coordinate crossing.
  double cands[6] = {0.0, 1.0};
  int nc = 2;
  for (int i = 0; i < 2; ++i)
    if (d(i) != 0.0) cands[nc++] = u(i) / d(i);
  if (n == Norm::Linf) {
    if (d.x() != d.y()) cands[nc++] = (u.x() - u.y()) / (d.x() - d.y());
    if (d.x() != -d.y()) cands[nc++] = (u.x() + u.y()) / (d.x() + d.y());
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < nc; ++i) {
    double s = std::clamp(cands[i], 0.0, 1.0);
    Eigen::VectorXd r = u - s * d;
    best = std::min(best, norm_of(n, r));
  }
  return best;
}

ConvexBody ConvexBody::interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
    throw std::invalid_argument("interval: need finite lo <= hi");
  ConvexBody b;
  b.kind_ = Kind::Interval;
  b.interval_ = {lo, hi};
  return b;
}

ConvexBody ConvexBody::polygon(std::vector<Eigen::Vector2d> vertices) {
  if (vertices.empty()) throw std::invalid_argument("polygon: must have at least one vertex");
  for (const auto& v : vertices)
    if (!v.allFinite()) throw std::invalid_argument("polygon: coordinates must be finite");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if ((vertices[i] - vertices[j]).norm() <= kPointTol)
        throw std::invalid_argument("polygon: duplicate vertices");
  std::vector<Eigen::Vector2d> hull = planar_hull(vertices);
  if (hull.size() != vertices.size())
    throw std::invalid_argument("polygon: vertices must be in strictly convex position");
  return polygon_unchecked(std::move(hull));
}

ConvexBody ConvexBody::polygon_unchecked(std::vector<Eigen::Vector2d> hull) {
  ConvexBody b;
  b.kind_ = Kind::Polygon;
  b.vertices_ = std::move(hull);
  return b;
}

ConvexBody ConvexBody::subtree(const BaseSpace& s, std::vector<EdgeInterval> intervals) {
  if (!s.is_tree()) throw std::invalid_argument("subtree: space is not a tree");
  if (intervals.empty()) throw std::invalid_argument("subtree: must be nonempty");
  const RTree& T = s.rtree();

  // Normalize each interval: order endpoints, snap to edge boundaries, clamp.
  for (EdgeInterval& iv : intervals) {
    if (!T.has_edge(iv.edge)) throw std::invalid_argument("subtree: unknown edge id");
    const double len = T.edge(iv.edge).length;
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      throw std::invalid_argument("subtree: offsets must be finite");
    if (iv.lo > iv.hi) std::swap(iv.lo, iv.hi);
    if (iv.lo < -kPointTol || iv.hi > len + kPointTol)
      throw std::invalid_argument("subtree: offsets outside the edge");
    if (iv.lo <= 1e-13) iv.lo = 0.0;
    if (iv.hi >= len - 1e-13) iv.hi = len;
    iv.lo = std::clamp(iv.lo, 0.0, len);
    iv.hi = std::clamp(iv.hi, iv.lo, len);
  }

  // Merge per edge; two disjoint intervals on one edge cannot be connected in a tree.
  std::map<int, std::vector<EdgeInterval>> by_edge;
  for (const EdgeInterval& iv : intervals) by_edge[iv.edge].push_back(iv);
  std::vector<EdgeInterval> merged;
  for (auto& [eid, ivs] : by_edge) {
    std::sort(ivs.begin(), ivs.end(),
              [](const EdgeInterval& a, const EdgeInterval& b) { return a.lo < b.lo; });
    EdgeInterval cur = ivs.front();
    for (std::size_t i = 1; i < ivs.size(); ++i) {
      if (ivs[i].lo <= cur.hi + kPointTol) {
        cur.hi = std::max(cur.hi, ivs[i].hi);
      } else {
        throw std::invalid_argument("subtree: disconnected intervals on one edge");
      }
    }
    merged.push_back(cur);
  }

  // Drop degenerate intervals whose point is already covered through a shared vertex.
  if (merged.size() > 1) {
    std::vector<EdgeInterval> kept;
    for (const EdgeInterval& iv : merged) {
      if (iv.hi > iv.lo) {
        kept.push_back(iv);
        continue;
      }
      const TreeEdge& e = T.edge(iv.edge);
      int v = iv.lo == 0.0 ? e.tail : (iv.lo == e.length ? e.head : -1);
      bool covered = false;
      if (v >= 0) {
        for (const EdgeInterval& other : merged) {
          if (other.edge == iv.edge || other.hi == other.lo) continue;
          const TreeEdge& oe = T.edge(other.edge);
          if ((other.lo == 0.0 && oe.tail == v) || (other.hi == oe.length && oe.head == v)) {
            covered = true;
            break;
          }
        }
      }
      if (!covered) kept.push_back(iv);
    }
    merged = std::move(kept);
  }

  // Connectivity: intervals touch only through covered edge endpoints.
  std::vector<int> comp(merged.size());
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (comp[i] != i) i = comp[i] = comp[comp[i]];
    return i;
  };
  std::map<int, std::vector<std::size_t>> at_vertex;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const TreeEdge& e = T.edge(merged[i].edge);
    if (merged[i].lo == 0.0) at_vertex[e.tail].push_back(i);
    if (merged[i].hi == e.length) at_vertex[e.head].push_back(i);
  }
  for (const auto& [v, idxs] : at_vertex)
    for (std::size_t i = 1; i < idxs.size(); ++i)
      comp[find(static_cast<int>(idxs[i]))] = find(static_cast<int>(idxs[0]));
  for (std::size_t i = 0; i < merged.size(); ++i)
    if (find(static_cast<int>(i)) != find(0))
      throw std::invalid_argument("subtree: intervals do not form a connected subtree");

  std::sort(merged.begin(), merged.end(),
            [](const EdgeInterval& a, const EdgeInterval& b) { return a.edge < b.edge; });
  ConvexBody b;
  b.kind_ = Kind::Subtree;
  b.intervals_ = std::move(merged);
  return b;
}

ConvexBody ConvexBody::point(const BaseSpace& s, const BasePoint& p) {
  validate_point(s, p);
  if (s.is_line()) return interval(p.vec()(0), p.vec()(0));
  if (s.is_plane()) return polygon_unchecked({Eigen::Vector2d(p.vec()(0), p.vec()(1))});
  if (s.is_tree()) {
    TreePoint tp = s.rtree().canonical(p.tree_pt());
    return subtree(s, {{tp.edge, tp.offset, tp.offset}});
  }
  throw std::invalid_argument("convex bodies are supported on the line, planes, and trees");
}

const Interval& ConvexBody::as_interval() const {
  if (kind_ != Kind::Interval) throw std::invalid_argument("body: not an interval");
  return interval_;
}

const std::vector<Eigen::Vector2d>& ConvexBody::polygon_vertices() const {
  if (kind_ != Kind::Polygon) throw std::invalid_argument("body: not a polygon");
  return vertices_;
}

const std::vector<EdgeInterval>& ConvexBody::subtree_intervals() const {
  if (kind_ != Kind::Subtree) throw std::invalid_argument("body: not a subtree");
  return intervals_;
}

std::vector<BasePoint> ConvexBody::extreme_points(const BaseSpace& s) const {
  std::vector<BasePoint> pts;
  switch (kind_) {
    case Kind::Interval:
      pts.push_back(BasePoint::scalar(interval_.lo));
      if (interval_.hi > interval_.lo) pts.push_back(BasePoint::scalar(interval_.hi));
      break;
    case Kind::Polygon:
      for (const auto& v : vertices_) pts.push_back(BasePoint::planar(v.x(), v.y()));
      break;
    case Kind::Subtree: {
      const RTree& T = s.rtree();
      std::vector<BasePoint> raw;
      for (const EdgeInterval& iv : intervals_) {
        raw.push_back(BasePoint(T.canonical({iv.edge, iv.lo})));
        if (iv.hi > iv.lo) raw.push_back(BasePoint(T.canonical({iv.edge, iv.hi})));
      }
      std::sort(raw.begin(), raw.end(), point_less);
      for (const BasePoint& p : raw) {
        bool dup = false;
        for (const BasePoint& q : pts)
          if (distance(s, p, q) <= kPointTol) {
            dup = true;
            break;
          }
        if (!dup) pts.push_back(p);
      }
      break;
    }
  }
  return pts;
}

namespace {

double dist_point_vertex(const RTree& T, const TreePoint& cp, int vertex_id) {
  const TreeEdge& e = T.edge(cp.edge);
  return std::min(cp.offset + T.vertex_distance(e.tail, vertex_id),
                  e.length - cp.offset + T.vertex_distance(e.head, vertex_id));
}

double dist_point_edge_interval(const RTree& T, const TreePoint& cp, const EdgeInterval& iv) {
  if (cp.edge == iv.edge) {
    double c = std::clamp(cp.offset, iv.lo, iv.hi);
    return std::abs(cp.offset - c);
  }
  const TreeEdge& e = T.edge(iv.edge);
  return std::min(dist_point_vertex(T, cp, e.tail) + iv.lo,
                  dist_point_vertex(T, cp, e.head) + (e.length - iv.hi));
}

double point_to_body(const BaseSpace& s, const BasePoint& x, const ConvexBody& B) {
  switch (B.kind()) {
    case ConvexBody::Kind::Interval: {
      const Interval& iv = B.as_interval();
      double v = x.vec()(0);
      return std::abs(v - std::clamp(v, iv.lo, iv.hi));
    }
    case ConvexBody::Kind::Polygon: {
      const auto& vs = B.polygon_vertices();
      Eigen::Vector2d p(x.vec()(0), x.vec()(1));
      if (vs.size() == 1) {
        Eigen::VectorXd d = p - vs[0];
        return norm_of(s.norm(), d);
      }
      if (vs.size() == 2) return point_to_segment(s.norm(), p, vs[0], vs[1]);
      bool inside = true;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const Eigen::Vector2d& a = vs[i];
        const Eigen::Vector2d& b = vs[(i + 1) % vs.size()];
        if (cross2(a, b, p) < -kPointTol) {
          inside = false;
          break;
        }
      }
      if (inside) return 0.0;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < vs.size(); ++i)
        best = std::min(best, point_to_segment(s.norm(), p, vs[i], vs[(i + 1) % vs.size()]));
      return best;
    }
    case ConvexBody::Kind::Subtree: {
      const RTree& T = s.rtree();
      TreePoint cp = T.canonical(x.tree_pt());
      double best = std::numeric_limits<double>::infinity();
      for (const EdgeInterval& iv : B.subtree_intervals())
        best = std::min(best, dist_point_edge_interval(T, cp, iv));
      return best;
    }
  }
  return 0.0;
}

void validate_body(const BaseSpace& s, const ConvexBody& B) {
  switch (B.kind()) {
    case ConvexBody::Kind::Interval:
      if (!s.is_line()) throw std::invalid_argument("operand: interval bodies live on the line");
      break;
    case ConvexBody::Kind::Polygon:
      if (!s.is_plane()) throw std::invalid_argument("operand: polygon bodies live in a plane");
      break;
    case ConvexBody::Kind::Subtree:
      if (!s.is_tree()) throw std::invalid_argument("operand: subtree bodies live on a tree");
      for (const EdgeInterval& iv : B.subtree_intervals()) {
        if (!s.rtree().has_edge(iv.edge))
          throw std::invalid_argument("operand: subtree edge is not in this tree");
        if (iv.hi > s.rtree().edge(iv.edge).length + kPointTol)
          throw std::invalid_argument("operand: subtree interval exceeds the edge");
      }
      break;
  }
}

}  // namespace

void validate_operand(const BaseSpace& s, const SetOperand& A) {
  if (const auto* f = std::get_if<FiniteCompactSet>(&A)) {
    for (const BasePoint& p : f->points()) validate_point(s, p);
  } else {
    validate_body(s, std::get<ConvexBody>(A));
  }
}

std::vector<BasePoint> witness_points(const BaseSpace& s, const SetOperand& A) {
  if (const auto* f = std::get_if<FiniteCompactSet>(&A)) return f->points();
  return std::get<ConvexBody>(A).extreme_points(s);
}

double point_to_set(const BaseSpace& s, const BasePoint& x, const SetOperand& A) {
  validate_point(s, x);
  if (const auto* f = std::get_if<FiniteCompactSet>(&A)) {
    double best = std::numeric_limits<double>::infinity();
    for (const BasePoint& p : f->points()) best = std::min(best, distance(s, x, p));
    return best;
  }
  return point_to_body(s, x, std::get<ConvexBody>(A));
}

namespace {

double directed_sup(const BaseSpace& s, const SetOperand& from, const SetOperand& to) {
  double worst = 0.0;
  for (const BasePoint& p : witness_points(s, from))
    worst = std::max(worst, point_to_set(s, p, to));
  return worst;
}

}  // namespace

double hausdorff_distance(const BaseSpace& s, const SetOperand& A, const SetOperand& B) {
  validate_operand(s, A);
  validate_operand(s, B);
  return std::max(directed_sup(s, A, B), directed_sup(s, B, A));
}

double hausdorff_infimum_form(const BaseSpace& s, const SetOperand& A, const SetOperand& B) {
  validate_operand(s, A);
  validate_operand(s, B);
  std::vector<BasePoint> ca = witness_points(s, A);
  std::vector<BasePoint> cb = witness_points(s, B);
  double hi = 0.0;
  for (const BasePoint& a : ca)
    for (const BasePoint& b : cb) hi = std::max(hi, distance(s, a, b));
  auto contained = [&](double eps) {
    for (const BasePoint& a : ca)
      if (point_to_set(s, a, B) > eps) return false;
    for (const BasePoint& b : cb)
      if (point_to_set(s, b, A) > eps) return false;
    return true;
  };
  double lo = 0.0;
  if (contained(lo)) return 0.0;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    if (contained(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

bool in_eps_neighborhood(const BaseSpace& s, const BasePoint& x, const SetOperand& A,
                         double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("neighborhood: eps must be >= 0");
  validate_operand(s, A);
  return point_to_set(s, x, A) <= eps + kPointTol;
}

double diameter(const BaseSpace& s, const SetOperand& A) {
  validate_operand(s, A);
  std::vector<BasePoint> pts = witness_points(s, A);
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::max(d, distance(s, pts[i], pts[j]));
  return d;
}

}  // namespace hyperbicomb
