#include "hyperbicomb/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace hyperbicomb {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

double number_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number())
    fail(where + ": missing numeric field \"" + key + "\"");
  return j.at(key).get<double>();
}

int int_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    fail(where + ": missing integer field \"" + key + "\"");
  return j.at(key).get<int>();
}

}  // namespace

json space_to_json(const BaseSpace& s) {
  json j;
  if (s.is_normed()) {
    j["kind"] = "normed";
    j["dim"] = s.dim();
    j["norm"] = norm_name(s.norm());
  } else {
    const RTree& T = s.rtree();
    j["kind"] = "rtree";
    j["vertices"] = T.vertex_ids();
    json edges = json::array();
    for (const TreeEdge& e : T.edges())
      edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"length", e.length}});
    j["edges"] = std::move(edges);
  }
  return j;
}

BaseSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    fail("space: expected an object with a string field \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "normed") {
    int dim = int_field(j, "dim", "space");
    if (!j.contains("norm") || !j.at("norm").is_string())
      fail("space: missing string field \"norm\"");
    const std::string nm = j.at("norm").get<std::string>();
    Norm n;
    if (nm == "l1")
      n = Norm::L1;
    else if (nm == "l2")
      n = Norm::L2;
    else if (nm == "linf")
      n = Norm::Linf;
    else
      fail("space: unknown norm \"" + nm + "\" (expected l1, l2, or linf)");
    if (dim == 1) return BaseSpace::line();
    if (dim == 2) return BaseSpace::plane(n);
    if (n == Norm::L2) return BaseSpace::euclidean(dim);
    fail("space: dim " + std::to_string(dim) + " needs norm l2");
  }
  if (kind == "rtree") {
    if (!j.contains("vertices") || !j.at("vertices").is_array())
      fail("space: rtree needs an array field \"vertices\"");
    if (!j.contains("edges") || !j.at("edges").is_array())
      fail("space: rtree needs an array field \"edges\"");
    std::vector<int> vids;
    for (const json& v : j.at("vertices")) {
      if (!v.is_number_integer()) fail("space: vertex ids must be integers");
      vids.push_back(v.get<int>());
    }
    std::vector<TreeEdge> edges;
    for (const json& e : j.at("edges")) {
      TreeEdge te;
      te.id = int_field(e, "id", "edge");
      te.tail = int_field(e, "tail", "edge");
      te.head = int_field(e, "head", "edge");
      te.length = number_field(e, "length", "edge");
      edges.push_back(te);
    }
    return BaseSpace::tree(RTree(std::move(vids), std::move(edges)));
  }
  fail("space: unknown kind \"" + kind + "\" (expected normed or rtree)");
}

json point_to_json(const BasePoint& p) {
  json j;
  if (p.is_vec()) {
    json coords = json::array();
    for (int i = 0; i < p.vec().size(); ++i) coords.push_back(p.vec()[i]);
    j["vec"] = std::move(coords);
  } else {
    j["edge"] = p.tree_pt().edge;
    j["offset"] = p.tree_pt().offset;
  }
  return j;
}

BasePoint point_from_json(const BaseSpace& s, const json& j) {
  if (!j.is_object()) fail("point: expected an object");
  BasePoint p;
  if (j.contains("vec")) {
    if (!j.at("vec").is_array()) fail("point: \"vec\" must be an array of numbers");
    const json& arr = j.at("vec");
    Eigen::VectorXd v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_number()) fail("point: \"vec\" must be an array of numbers");
      v[static_cast<int>(i)] = arr[i].get<double>();
    }
    p = BasePoint(std::move(v));
  } else if (j.contains("edge")) {
    p = BasePoint::on_edge(int_field(j, "edge", "point"), number_field(j, "offset", "point"));
  } else {
    fail("point: expected \"vec\" or \"edge\"/\"offset\"");
  }
  validate_point(s, p);
  return p;
}

json body_to_json(const ConvexBody& A) {
  json j;
  switch (A.kind()) {
    case ConvexBody::Kind::Interval:
      j["interval"] = {A.as_interval().lo, A.as_interval().hi};
      break;
    case ConvexBody::Kind::Polygon: {
      json verts = json::array();
      for (const Eigen::Vector2d& v : A.polygon_vertices()) verts.push_back({v.x(), v.y()});
      j["polygon"] = std::move(verts);
      break;
    }
    case ConvexBody::Kind::Subtree: {
      json ivs = json::array();
      for (const EdgeInterval& iv : A.subtree_intervals())
        ivs.push_back({{"edge", iv.edge}, {"from", iv.lo}, {"to", iv.hi}});
      j["subtree"] = std::move(ivs);
      break;
    }
  }
  return j;
}

ConvexBody body_from_json(const BaseSpace& s, const json& j) {
  if (!j.is_object()) fail("body: expected an object");
  ConvexBody out = ConvexBody::interval(0.0, 0.0);
  if (j.contains("interval")) {
    const json& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
      fail("body: \"interval\" must be [lo, hi]");
    out = ConvexBody::interval(iv[0].get<double>(), iv[1].get<double>());
  } else if (j.contains("polygon")) {
    const json& pv = j.at("polygon");
    if (!pv.is_array() || pv.empty()) fail("body: \"polygon\" must be a nonempty array");
    std::vector<Eigen::Vector2d> verts;
    for (const json& v : pv) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail("body: polygon vertices must be [x, y] pairs");
      verts.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    out = ConvexBody::polygon(std::move(verts));
  } else if (j.contains("subtree")) {
    const json& ivs = j.at("subtree");
    if (!ivs.is_array() || ivs.empty()) fail("body: \"subtree\" must be a nonempty array");
    std::vector<EdgeInterval> intervals;
    for (const json& iv : ivs) {
      EdgeInterval e;
      e.edge = int_field(iv, "edge", "subtree interval");
      e.lo = number_field(iv, "from", "subtree interval");
      e.hi = number_field(iv, "to", "subtree interval");
      intervals.push_back(e);
    }
    out = ConvexBody::subtree(s, std::move(intervals));
  } else {
    fail("body: expected \"interval\", \"polygon\", or \"subtree\"");
  }
  validate_operand(s, SetOperand(out));
  return out;
}

json finite_set_to_json(const FiniteCompactSet& A) {
  json pts = json::array();
  for (const BasePoint& p : A.points()) pts.push_back(point_to_json(p));
  return json{{"points", std::move(pts)}};
}

FiniteCompactSet finite_set_from_json(const BaseSpace& s, const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
    fail("finite set: expected an object with an array field \"points\"");
  std::vector<BasePoint> pts;
  for (const json& p : j.at("points")) pts.push_back(point_from_json(s, p));
  if (pts.empty()) fail("finite set: \"points\" must be nonempty");
  return FiniteCompactSet(s, std::move(pts));
}

json operand_to_json(const SetOperand& A) {
  if (std::holds_alternative<FiniteCompactSet>(A))
    return finite_set_to_json(std::get<FiniteCompactSet>(A));
  return body_to_json(std::get<ConvexBody>(A));
}

SetOperand operand_from_json(const BaseSpace& s, const json& j) {
  if (j.is_object() && j.contains("points")) return finite_set_from_json(s, j);
  return body_from_json(s, j);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
  return j;
}

}  // namespace hyperbicomb
