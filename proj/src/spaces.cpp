#include "hyperbicomb/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace hyperbicomb {

namespace {

// Offsets this close to an edge boundary are snapped onto the vertex. Kept below the
// 1e-12 point tolerance so snapping never flips an equality decision.
constexpr double kBoundarySnap = 1e-13;

long long pack_pair(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<long long>(a) << 32) | static_cast<unsigned int>(b);
}

}  // namespace

std::string norm_name(Norm n) {
  switch (n) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::Linf: return "linf";
  }
  return "l2";
}

double norm_of(Norm n, const Eigen::VectorXd& v) {
  switch (n) {
    case Norm::L1: return v.lpNorm<1>();
    case Norm::L2: return v.norm();
    case Norm::Linf: return v.lpNorm<Eigen::Infinity>();
  }
  return v.norm();
}

RTree::RTree(std::vector<int> vertex_ids, std::vector<TreeEdge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
  const int nv = static_cast<int>(vertex_ids_.size());
  const int ne = static_cast<int>(edges_.size());
  if (nv < 2 || ne < 1) throw std::invalid_argument("tree: need at least one edge");
  if (ne != nv - 1) throw std::invalid_argument("tree: edge count must be vertex count - 1");

  for (int i = 0; i < nv; ++i) {
    if (!vidx_.emplace(vertex_ids_[i], i).second)
      throw std::invalid_argument("tree: duplicate vertex id");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const TreeEdge& a, const TreeEdge& b) { return a.id < b.id; });
  incident_.assign(nv, {});
  for (int i = 0; i < ne; ++i) {
    const TreeEdge& e = edges_[i];
    if (!eidx_.emplace(e.id, i).second) throw std::invalid_argument("tree: duplicate edge id");
    if (!(e.length > 0.0) || !std::isfinite(e.length))
      throw std::invalid_argument("tree: edge length must be positive and finite");
    auto ti = vidx_.find(e.tail);
    auto hi = vidx_.find(e.head);
    if (ti == vidx_.end() || hi == vidx_.end())
      throw std::invalid_argument("tree: edge endpoint is not a listed vertex");
    if (ti->second == hi->second) throw std::invalid_argument("tree: self-loop edge");
    if (!pair_edge_.emplace(pack_pair(ti->second, hi->second), e.id).second)
      throw std::invalid_argument("tree: parallel edges between one vertex pair");
    incident_[ti->second].push_back(e.id);
    incident_[hi->second].push_back(e.id);
  }
  for (auto& inc : incident_) std::sort(inc.begin(), inc.end());

  // BFS from every vertex: fills distances and path predecessors, and proves connectivity.
  vdist_.setConstant(nv, nv, std::numeric_limits<double>::infinity());
  pred_.assign(nv, std::vector<int>(nv, -1));
  for (int r = 0; r < nv; ++r) {
    vdist_(r, r) = 0.0;
    std::deque<int> queue{r};
    int seen = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int eid : incident_[v]) {
        const TreeEdge& e = edges_[eindex(eid)];
        int w = vindex(e.tail) == v ? vindex(e.head) : vindex(e.tail);
        if (std::isfinite(vdist_(r, w))) continue;
        vdist_(r, w) = vdist_(r, v) + e.length;
        pred_[r][w] = v;
        ++seen;
        queue.push_back(w);
      }
    }
    if (seen != nv) throw std::invalid_argument("tree: graph is not connected");
  }
}

int RTree::vindex(int vertex_id) const {
  auto it = vidx_.find(vertex_id);
  if (it == vidx_.end()) throw std::invalid_argument("tree: unknown vertex id");
  return it->second;
}

int RTree::eindex(int edge_id) const {
  auto it = eidx_.find(edge_id);
  if (it == eidx_.end()) throw std::invalid_argument("tree: unknown edge id");
  return it->second;
}

bool RTree::has_edge(int edge_id) const { return eidx_.count(edge_id) > 0; }
bool RTree::has_vertex(int vertex_id) const { return vidx_.count(vertex_id) > 0; }

const TreeEdge& RTree::edge(int edge_id) const { return edges_[eindex(edge_id)]; }

const std::vector<int>& RTree::incident_edges(int vertex_id) const {
  return incident_[vindex(vertex_id)];
}

double RTree::vertex_distance(int u, int v) const { return vdist_(vindex(u), vindex(v)); }

std::vector<int> RTree::vertex_path(int u, int v) const {
  const int ui = vindex(u);
  int cur = vindex(v);
  std::vector<int> rev{vertex_ids_[cur]};
  while (cur != ui) {
    cur = pred_[ui][cur];
    rev.push_back(vertex_ids_[cur]);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

int RTree::edge_between(int u, int v) const {
  auto it = pair_edge_.find(pack_pair(vindex(u), vindex(v)));
  if (it == pair_edge_.end()) throw std::invalid_argument("tree: vertices are not adjacent");
  return it->second;
}

double RTree::offset_on_edge(int edge_id, int vertex_id) const {
  const TreeEdge& e = edge(edge_id);
  if (e.tail == vertex_id) return 0.0;
  if (e.head == vertex_id) return e.length;
  throw std::invalid_argument("tree: vertex is not an endpoint of the edge");
}

TreePoint RTree::vertex_point(int vertex_id) const {
  int eid = incident_edges(vertex_id).front();
  return TreePoint{eid, offset_on_edge(eid, vertex_id)};
}

TreePoint RTree::canonical(TreePoint p) const {
  const TreeEdge& e = edge(p.edge);
  if (p.offset <= kBoundarySnap) return vertex_point(e.tail);
  if (p.offset >= e.length - kBoundarySnap) return vertex_point(e.head);
  return p;
}

std::optional<int> RTree::vertex_at(TreePoint p) const {
  const TreeEdge& e = edge(p.edge);
  if (p.offset <= kBoundarySnap) return e.tail;
  if (p.offset >= e.length - kBoundarySnap) return e.head;
  return std::nullopt;
}

BaseSpace BaseSpace::line() {
  BaseSpace s;
  s.kind_ = Kind::Normed;
  s.dim_ = 1;
  s.norm_ = Norm::L2;
  return s;
}

BaseSpace BaseSpace::plane(Norm n) {
  BaseSpace s;
  s.kind_ = Kind::Normed;
  s.dim_ = 2;
  s.norm_ = n;
  return s;
}

BaseSpace BaseSpace::euclidean(int dim) {
  if (dim < 1 || dim > 8) throw std::invalid_argument("euclidean: dim must be in [1, 8]");
  BaseSpace s;
  s.kind_ = Kind::Normed;
  s.dim_ = dim;
  s.norm_ = Norm::L2;
  return s;
}

BaseSpace BaseSpace::tree(RTree t) {
  BaseSpace s;
  s.kind_ = Kind::Tree;
  s.dim_ = 0;
  s.tree_ = std::make_shared<const RTree>(std::move(t));
  return s;
}

const RTree& BaseSpace::rtree() const {
  if (!tree_) throw std::invalid_argument("space is not a tree");
  return *tree_;
}

bool BaseSpace::uniquely_geodesic() const {
  if (kind_ == Kind::Tree) return true;
  return dim_ == 1 || norm_ == Norm::L2;
}

std::string BaseSpace::description() const {
  if (kind_ == Kind::Tree) return "rtree";
  if (dim_ == 1) return "line";
  return "normed dim=" + std::to_string(dim_) + " " + norm_name(norm_);
}

BasePoint BasePoint::scalar(double x) {
  Eigen::VectorXd v(1);
  v << x;
  return BasePoint(v);
}

BasePoint BasePoint::planar(double x, double y) {
  Eigen::VectorXd v(2);
  v << x, y;
  return BasePoint(v);
}

const Eigen::VectorXd& BasePoint::vec() const {
  const auto* v = std::get_if<Eigen::VectorXd>(&value_);
  if (!v) throw std::invalid_argument("point: expected coordinates, found a tree point");
  return *v;
}

const TreePoint& BasePoint::tree_pt() const {
  const auto* t = std::get_if<TreePoint>(&value_);
  if (!t) throw std::invalid_argument("point: expected a tree point, found coordinates");
  return *t;
}

Sigma Sigma::for_space(const BaseSpace& s) {
  return s.is_tree() ? tree_geodesic() : linear();
}

void validate_point(const BaseSpace& s, const BasePoint& p) {
  if (s.is_normed()) {
    const Eigen::VectorXd& v = p.vec();
    if (v.size() != s.dim())
      throw std::invalid_argument("point: dimension mismatch with the space");
    if (!v.allFinite()) throw std::invalid_argument("point: coordinates must be finite");
    return;
  }
  const TreePoint& tp = p.tree_pt();
  const RTree& T = s.rtree();
  if (!T.has_edge(tp.edge))
    throw std::invalid_argument("point: not on any edge of the tree");
  if (!std::isfinite(tp.offset) || tp.offset < -kPointTol ||
      tp.offset > T.edge(tp.edge).length + kPointTol)
    throw std::invalid_argument("point: offset outside the edge");
}

namespace {

double tree_distance(const RTree& T, TreePoint pa, TreePoint pb) {
  TreePoint a = T.canonical(pa);
  TreePoint b = T.canonical(pb);
  // Pin the evaluation order so the metric is bitwise symmetric.
  if (b.edge < a.edge || (b.edge == a.edge && b.offset < a.offset)) std::swap(a, b);
  if (a.edge == b.edge) return std::abs(a.offset - b.offset);
  const TreeEdge& ea = T.edge(a.edge);
  const TreeEdge& eb = T.edge(b.edge);
  const int exits[2] = {ea.tail, ea.head};
  const double exit_cost[2] = {a.offset, ea.length - a.offset};
  const int entries[2] = {eb.tail, eb.head};
  const double entry_cost[2] = {b.offset, eb.length - b.offset};
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double c = exit_cost[i] + T.vertex_distance(exits[i], entries[j]) + entry_cost[j];
      best = std::min(best, c);
    }
  return best;
}

}  // namespace

double distance(const BaseSpace& s, const BasePoint& x, const BasePoint& y) {
  validate_point(s, x);
  validate_point(s, y);
  if (s.is_normed()) return norm_of(s.norm(), x.vec() - y.vec());
  return tree_distance(s.rtree(), x.tree_pt(), y.tree_pt());
}

std::vector<TreeSegment> tree_path(const BaseSpace& s, const BasePoint& x, const BasePoint& y) {
  if (!s.is_tree()) throw std::invalid_argument("tree_path: space is not a tree");
  validate_point(s, x);
  validate_point(s, y);
  const RTree& T = s.rtree();
  TreePoint a = T.canonical(x.tree_pt());
  TreePoint b = T.canonical(y.tree_pt());

  std::vector<TreeSegment> segs;
  if (a.edge == b.edge) {
    if (a.offset != b.offset) segs.push_back({a.edge, a.offset, b.offset});
    return segs;
  }

  const TreeEdge& ea = T.edge(a.edge);
  const TreeEdge& eb = T.edge(b.edge);
  const int exits[2] = {ea.tail, ea.head};
  const double exit_cost[2] = {a.offset, ea.length - a.offset};
  const double exit_off[2] = {0.0, ea.length};
  const int entries[2] = {eb.tail, eb.head};
  const double entry_cost[2] = {b.offset, eb.length - b.offset};
  const double entry_off[2] = {0.0, eb.length};
  double best = std::numeric_limits<double>::infinity();
  int bi = 0, bj = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double c = exit_cost[i] + T.vertex_distance(exits[i], entries[j]) + entry_cost[j];
      if (c < best) {
        best = c;
        bi = i;
        bj = j;
      }
    }

  if (exit_cost[bi] > 0.0) segs.push_back({a.edge, a.offset, exit_off[bi]});
  std::vector<int> vp = T.vertex_path(exits[bi], entries[bj]);
  for (std::size_t k = 0; k + 1 < vp.size(); ++k) {
    int eid = T.edge_between(vp[k], vp[k + 1]);
    segs.push_back({eid, T.offset_on_edge(eid, vp[k]), T.offset_on_edge(eid, vp[k + 1])});
  }
  if (entry_cost[bj] > 0.0) segs.push_back({b.edge, entry_off[bj], b.offset});
  return segs;
}

BasePoint sigma_eval(const BaseSpace& s, const Sigma& sigma, const BasePoint& x,
                     const BasePoint& y, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("sigma: t must be in [0, 1]");
  validate_point(s, x);
  validate_point(s, y);
  if (sigma.kind == Sigma::Kind::Linear) {
    if (!s.is_normed())
      throw std::invalid_argument("sigma: linear interpolation needs a normed space");
    if (t == 0.0) return x;
    if (t == 1.0) return y;
    Eigen::VectorXd r = (1.0 - t) * x.vec() + t * y.vec();
    return BasePoint(std::move(r));
  }
  if (!s.is_tree()) throw std::invalid_argument("sigma: tree geodesic needs a tree space");
  if (t == 0.0) return x;
  if (t == 1.0) return y;
  std::vector<TreeSegment> segs = tree_path(s, x, y);
  if (segs.empty()) return x;
  double total = 0.0;
  for (const TreeSegment& sg : segs) total += sg.length();
  double target = t * total;
  const RTree& T = s.rtree();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const TreeSegment& sg = segs[i];
    double len = sg.length();
    if (target <= len || i + 1 == segs.size()) {
      double local = std::min(target, len);
      double off = sg.from <= sg.to ? sg.from + local : sg.from - local;
      return BasePoint(T.canonical({sg.edge, off}));
    }
    target -= len;
  }
  return y;
}

bool points_equal(const BaseSpace& s, const BasePoint& x, const BasePoint& y) {
  return distance(s, x, y) <= kPointTol;
}

}  // namespace hyperbicomb
