#pragma once

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace hyperbicomb {

// Absolute tolerance for point equality and deduplication, uniform across the library.
inline constexpr double kPointTol = 1e-12;

enum class Norm { L1, L2, Linf };

std::string norm_name(Norm n);
double norm_of(Norm n, const Eigen::VectorXd& v);

// A point on a metric tree: offset in [0, length] along the edge, measured from tail.
struct TreePoint {
  int edge = 0;
  double offset = 0.0;
};

struct TreeEdge {
  int id = 0;
  int tail = 0;
  int head = 0;
  double length = 0.0;
};

// Directed piece of a geodesic lying inside one edge.
struct TreeSegment {
  int edge = 0;
  double from = 0.0;
  double to = 0.0;
  double length() const { return from <= to ? to - from : from - to; }
};

// Metric tree graph: connected, acyclic, positive edge lengths. Vertex and edge ids are
// arbitrary ints. Pairwise vertex distances and path predecessors are precomputed, so
// queries are cheap; trees here are small (tens of edges).
class RTree {
 public:
  RTree(std::vector<int> vertex_ids, std::vector<TreeEdge> edges);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  const std::vector<int>& vertex_ids() const { return vertex_ids_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  bool has_edge(int edge_id) const;
  const TreeEdge& edge(int edge_id) const;
  bool has_vertex(int vertex_id) const;
  // Incident edge ids, ascending.
  const std::vector<int>& incident_edges(int vertex_id) const;

  double vertex_distance(int u, int v) const;
  // Vertex ids along the unique path from u to v, endpoints included.
  std::vector<int> vertex_path(int u, int v) const;
  int edge_between(int u, int v) const;

  // Offset of vertex v on edge e: 0 at tail, length at head.
  double offset_on_edge(int edge_id, int vertex_id) const;

  // Canonical representation of a vertex: smallest incident edge id, boundary offset.
  TreePoint vertex_point(int vertex_id) const;
  // Snaps near-boundary offsets onto the boundary and normalizes vertex representations,
  // making point equality decidable.
  TreePoint canonical(TreePoint p) const;
  // Vertex id if p sits on an edge boundary, after snapping.
  std::optional<int> vertex_at(TreePoint p) const;

 private:
  int vindex(int vertex_id) const;
  int eindex(int edge_id) const;

  std::vector<int> vertex_ids_;
  std::vector<TreeEdge> edges_;
  std::unordered_map<int, int> vidx_;
  std::unordered_map<int, int> eidx_;
  std::vector<std::vector<int>> incident_;
  std::unordered_map<long long, int> pair_edge_;  // packed vertex-index pair -> edge id
  Eigen::MatrixXd vdist_;
  std::vector<std::vector<int>> pred_;  // pred_[r][v]: predecessor of v on the path from r
};

// The base metric spaces: the line, a normed plane (L1/L2/Linf), Euclidean R^n (n <= 8,
// used for finite-set work), and metric trees. Copies are cheap; the tree is shared.
class BaseSpace {
 public:
  enum class Kind { Normed, Tree };

  static BaseSpace line();
  static BaseSpace plane(Norm n);
  static BaseSpace euclidean(int dim);
  static BaseSpace tree(RTree t);

  Kind kind() const { return kind_; }
  bool is_normed() const { return kind_ == Kind::Normed; }
  bool is_tree() const { return kind_ == Kind::Tree; }
  bool is_line() const { return kind_ == Kind::Normed && dim_ == 1; }
  bool is_plane() const { return kind_ == Kind::Normed && dim_ == 2; }
  int dim() const { return dim_; }
  Norm norm() const { return norm_; }
  const RTree& rtree() const;
  // Trees and Euclidean norms admit exactly one geodesic per pair; L1/Linf planes do not.
  bool uniquely_geodesic() const;
  std::string description() const;

 private:
  BaseSpace() = default;
  Kind kind_ = Kind::Normed;
  int dim_ = 1;
  Norm norm_ = Norm::L2;
  std::shared_ptr<const RTree> tree_;
};

class BasePoint {
 public:
  BasePoint() : value_(Eigen::VectorXd::Zero(1)) {}
  explicit BasePoint(Eigen::VectorXd v) : value_(std::move(v)) {}
  explicit BasePoint(TreePoint tp) : value_(tp) {}
  static BasePoint scalar(double x);
  static BasePoint planar(double x, double y);
  static BasePoint on_edge(int edge, double offset) { return BasePoint(TreePoint{edge, offset}); }

  bool is_vec() const { return std::holds_alternative<Eigen::VectorXd>(value_); }
  const Eigen::VectorXd& vec() const;
  const TreePoint& tree_pt() const;

 private:
  std::variant<Eigen::VectorXd, TreePoint> value_;
};

// Descriptor of the base-space bicombing: affine interpolation on normed spaces, the
// unique geodesic on trees.
struct Sigma {
  enum class Kind { Linear, TreeGeodesic };
  Kind kind = Kind::Linear;
  static Sigma linear() { return {Kind::Linear}; }
  static Sigma tree_geodesic() { return {Kind::TreeGeodesic}; }
  static Sigma for_space(const BaseSpace& s);
};

// Throws std::invalid_argument on dimension mismatch, unknown edge, or offset outside
// the edge.
void validate_point(const BaseSpace& s, const BasePoint& p);

double distance(const BaseSpace& s, const BasePoint& x, const BasePoint& y);

// sigma(x, y, t): the point at parameter t on the chosen geodesic. Exact at t = 0 and
// t = 1; elsewhere d(x, result) = t * d(x, y) within 1e-12.
BasePoint sigma_eval(const BaseSpace& s, const Sigma& sigma, const BasePoint& x,
                     const BasePoint& y, double t);

// Segment chain of the unique geodesic from x to y on a tree. Empty when x == y.
std::vector<TreeSegment> tree_path(const BaseSpace& s, const BasePoint& x, const BasePoint& y);

bool points_equal(const BaseSpace& s, const BasePoint& x, const BasePoint& y);

}  // namespace hyperbicomb
