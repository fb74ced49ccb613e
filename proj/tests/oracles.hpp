#pragma once

#include "hyperbicomb/convexity.hpp"
#include "hyperbicomb/rng.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <vector>

namespace hyperbicomb::testing {

// Tree-distance oracle independent of RTree's precomputed tables: Dijkstra over the raw
// edge list, taking the best of the four endpoint routes.
inline double dijkstra_distance(const RTree& t, const TreePoint& p, const TreePoint& q) {
  if (p.edge == q.edge) return std::abs(p.offset - q.offset);
  std::map<int, std::vector<std::pair<int, double>>> adj;
  for (const TreeEdge& e : t.edges()) {
    adj[e.tail].push_back({e.head, e.length});
    adj[e.head].push_back({e.tail, e.length});
  }
  auto from_vertex = [&](int src) {
    std::map<int, double> dist;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[src] = 0.0;
    heap.push({0.0, src});
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d > dist[v] + 1e-15) continue;
      for (auto [u, len] : adj[v]) {
        double nd = d + len;
        auto it = dist.find(u);
        if (it == dist.end() || nd < it->second - 1e-15) {
          dist[u] = nd;
          heap.push({nd, u});
        }
      }
    }
    return dist;
  };
  const TreeEdge& ep = t.edge(p.edge);
  const TreeEdge& eq = t.edge(q.edge);
  double best = std::numeric_limits<double>::infinity();
  for (auto [v1, d1] : {std::pair{ep.tail, p.offset}, std::pair{ep.head, ep.length - p.offset}}) {
    std::map<int, double> dist = from_vertex(v1);
    for (auto [v2, d2] :
         {std::pair{eq.tail, q.offset}, std::pair{eq.head, eq.length - q.offset}})
      best = std::min(best, d1 + dist.at(v2) + d2);
  }
  return best;
}

// Random tree in the same size regime as the property samplers, built independently:
// vertex k attaches to a uniformly earlier vertex.
inline RTree random_tree(Rng& rng) {
  int n_edges = rng.uniform_int(2, 20);
  std::vector<int> vertices;
  std::vector<TreeEdge> edges;
  vertices.push_back(0);
  for (int k = 1; k <= n_edges; ++k) {
    vertices.push_back(k);
    edges.push_back({k - 1, rng.uniform_int(0, k - 1), k, rng.uniform(0.1, 5.0)});
  }
  return RTree(std::move(vertices), std::move(edges));
}

inline BasePoint random_tree_point(Rng& rng, const RTree& t) {
  const TreeEdge& e = t.edges()[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<int>(t.edges().size()) - 1))];
  return BasePoint::on_edge(e.id, rng.uniform(0.0, e.length));
}

// Dense point cloud covering a body. Line and tree bodies are one-dimensional, so the
// cloud covers them entirely; polygons are sampled on the boundary plus the vertex
// centroid fan, which is enough for the hull and distance comparisons used here.
inline std::vector<BasePoint> dense_body_points(const ConvexBody& A, int per_seg) {
  std::vector<BasePoint> out;
  switch (A.kind()) {
    case ConvexBody::Kind::Interval: {
      const Interval& iv = A.as_interval();
      for (int i = 0; i <= per_seg; ++i)
        out.push_back(BasePoint::scalar(iv.lo + (iv.hi - iv.lo) * i / per_seg));
      break;
    }
    case ConvexBody::Kind::Subtree: {
      for (const EdgeInterval& iv : A.subtree_intervals()) {
        if (iv.hi - iv.lo < 1e-15) {
          out.push_back(BasePoint::on_edge(iv.edge, iv.lo));
          continue;
        }
        for (int i = 0; i <= per_seg; ++i)
          out.push_back(BasePoint::on_edge(iv.edge, iv.lo + (iv.hi - iv.lo) * i / per_seg));
      }
      break;
    }
    case ConvexBody::Kind::Polygon: {
      const std::vector<Eigen::Vector2d>& vs = A.polygon_vertices();
      std::size_t n = vs.size();
      if (n == 1) {
        out.push_back(BasePoint(Eigen::VectorXd(vs[0])));
        break;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const Eigen::Vector2d& a = vs[k];
        const Eigen::Vector2d& b = vs[(k + 1) % n];
        for (int i = 0; i < per_seg; ++i) {
          Eigen::Vector2d p = a + (b - a) * (static_cast<double>(i) / per_seg);
          out.push_back(BasePoint(Eigen::VectorXd(p)));
        }
        if (n == 2) break;
      }
      break;
    }
  }
  return out;
}

// Hausdorff distance between a body and a reference cloud, both densified; exact for
// finite-finite pairs, so the only error left is the sampling resolution.
inline double cloud_hausdorff(const BaseSpace& s, const ConvexBody& A,
                              const std::vector<BasePoint>& cloud, int per_seg = 200) {
  FiniteCompactSet mine(s, dense_body_points(A, per_seg));
  FiniteCompactSet ref(s, cloud);
  return hausdorff_distance(s, SetOperand(mine), SetOperand(ref));
}

// Independent union oracle: span of sigma images over dense operand samples. Interval
// endpoints are always sampled, so on 1-dimensional bodies the span fills the sampling
// gaps and reproduces the union exactly.
inline ConvexBody sigma_union_span(const BaseSpace& s, const ConvexBody& A,
                                   const ConvexBody& B, double t, int per_seg = 200) {
  const Sigma sg = Sigma::for_space(s);
  std::vector<BasePoint> images;
  for (const BasePoint& a : dense_body_points(A, per_seg))
    for (const BasePoint& b : dense_body_points(B, per_seg))
      images.push_back(sigma_eval(s, sg, a, b, t));
  return convex_hull(s, FiniteCompactSet(s, std::move(images)));
}

}  // namespace hyperbicomb::testing
