#include "packcert/verifier/contact_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace packcert::verifier {

using exactnum::Direction;
using exactnum::Expression;
using exactnum::Status;

ContactGraph::ContactGraph(std::vector<int> vertices, std::vector<Contact> edges,
                           std::vector<std::vector<std::size_t>> rotation)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (rotation_.size() != vertices_.size()) {
    throw GraphError("rotation system must list every vertex");
  }
  std::vector<int> seen(half_edge_count(), 0);
  for (std::size_t i = 0; i < rotation_.size(); ++i) {
    for (std::size_t h : rotation_[i]) {
      if (h >= seen.size() || half_edge(h).from != vertices_[i]) {
        throw GraphError("rotation at vertex " + std::to_string(vertices_[i]) +
                         " lists a foreign half-edge");
      }
      ++seen[h];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    throw GraphError("rotation system must list every half-edge exactly once");
  }
  trace_faces();
  if (euler_characteristic() != 0) {
    throw GraphError("Euler relation violated on the torus: V - E + F = " +
                     std::to_string(euler_characteristic()));
  }
}

namespace {

HalfEdge half_edge_of(const std::vector<Contact>& edges, std::size_t h) {
  const Contact& c = edges[h / 2];
  if (h % 2 == 0) return {c.a, c.b, c.offset, h / 2};
  return {c.b, c.a, -c.offset, h / 2};
}

}  // namespace

HalfEdge ContactGraph::half_edge(std::size_t h) const { return half_edge_of(edges_, h); }

std::size_t ContactGraph::vertex_index(int id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw GraphError("unknown vertex " + std::to_string(id));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t ContactGraph::degree(int vertex) const { return rotation_[vertex_index(vertex)].size(); }

void ContactGraph::trace_faces() {
  // Position of each half-edge in the rotation of its tail.
  std::vector<std::size_t> position(half_edge_count());
  for (const auto& rot : rotation_) {
    for (std::size_t k = 0; k < rot.size(); ++k) position[rot[k]] = k;
  }
  auto next = [&](std::size_t h) {
    const std::size_t twin = h ^ 1U;
    const auto& rot = rotation_[vertex_index(half_edge(twin).from)];
    return rot[(position[twin] + rot.size() - 1) % rot.size()];
  };
  std::vector<bool> used(half_edge_count(), false);
  for (std::size_t start = 0; start < half_edge_count(); ++start) {
    if (used[start]) continue;
    Face face;
    Offset at{};
    std::size_t h = start;
    do {
      used[h] = true;
      HalfEdge he = half_edge(h);
      face.half_edges.push_back(h);
      face.corners.push_back({he.from, at});
      at = at + he.offset;
      h = next(h);
    } while (h != start);
    if (!at.is_zero()) throw GraphError("face boundary wraps around the torus");
    faces_.push_back(std::move(face));
  }
}

namespace {

struct Direction2 {
  Expression x;
  Expression y;
};

Expression cross(const Direction2& a, const Direction2& b) { return a.x * b.y - a.y * b.x; }

// Reference directions chosen to avoid the rational and sqrt(3) slopes that
// lattice packings produce.
std::vector<Direction2> reference_directions() {
  return {
      {Expression(1L), exactnum::sqrt(Expression(2L)) / Expression(10L)},
      {Expression(1L), -exactnum::sqrt(Expression(5L)) / Expression(13L)},
      {exactnum::sqrt(Expression(7L)) / Expression(17L), Expression(1L)},
  };
}

std::vector<std::size_t> sort_around(const PeriodicPacking& p, int vertex,
                                     const std::vector<std::size_t>& out_edges,
                                     const std::vector<Contact>& edges, int max_depth) {
  std::vector<Direction2> dirs;
  for (std::size_t h : out_edges) {
    HalfEdge he = half_edge_of(edges, h);
    dirs.push_back({p.center_x(he.to, he.offset) - p.center_x(he.from),
                    p.center_y(he.to, he.offset) - p.center_y(he.from)});
  }
  const auto& b = p.bindings();
  const std::string where = "rotation ambiguity at vertex " + std::to_string(vertex);

  std::vector<int> half;
  for (const auto& ref : reference_directions()) {
    half.clear();
    for (const auto& d : dirs) {
      auto v = exactnum::certify_compare(cross(ref, d), 0, Direction::Above, b, max_depth);
      if (v.status == Status::Inconclusive) break;
      half.push_back(v.status == Status::Proved ? 0 : 1);
    }
    if (half.size() == dirs.size()) break;
  }
  if (half.size() != dirs.size()) throw GraphError(where);

  const std::size_t n = dirs.size();
  std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (half[i] != half[j]) {
        before[i][j] = half[i] < half[j];
      } else {
        auto v = exactnum::certify_compare(cross(dirs[i], dirs[j]), 0, Direction::Above, b,
                                           max_depth);
        if (v.status == Status::Inconclusive) throw GraphError(where);
        before[i][j] = v.status == Status::Proved;
      }
      before[j][i] = !before[i][j];
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return before[i][j]; });
  std::vector<std::size_t> out;
  for (std::size_t i : order) out.push_back(out_edges[i]);
  return out;
}

}  // namespace

ContactGraph contact_graph(const PeriodicPacking& p, const CertifyOptions& options) {
  exactnum::RefineOptions refine;
  refine.max_depth = options.max_depth;
  std::set<Contact> edge_set;

  for (const auto& c : p.declared_contacts()) {
    auto enc = exactnum::eval(packing::gap_expression(p, c.a, c.b, c.offset), p.bindings(),
                              options.tolerance, refine);
    if (!enc.width_reached || !enc.value.contains_zero()) {
      throw GraphError("declared contact " + std::to_string(c.a) + "-" + std::to_string(c.b) +
                       " is not tangent within tolerance");
    }
    edge_set.insert(c.normalized());
  }

  const auto coarse_env = p.bindings().environment(refine.start_depth);
  for (const auto& pair : packing::enumerate_pairs(p)) {
    Contact c{pair.a, pair.b, pair.offset};
    if (edge_set.count(c.normalized())) continue;
    Expression g = packing::gap_expression(p, pair.a, pair.b, pair.offset);
    try {
      if (exactnum::evaluate(g, coarse_env, refine.start_depth + refine.guard_bits).lo() >
          options.tolerance) {
        continue;
      }
    } catch (const exactnum::EvalError&) {
      // fall through to the refined evaluation
    }
    auto enc = exactnum::eval(g, p.bindings(), options.tolerance, refine);
    if (enc.width_reached && enc.value.contains_zero()) edge_set.insert(c.normalized());
  }

  std::vector<int> vertices;
  for (const auto& d : p.discs()) vertices.push_back(d.id);
  std::vector<Contact> edges(edge_set.begin(), edge_set.end());

  std::vector<std::vector<std::size_t>> rotation(vertices.size());
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    rotation[index[edges[e].a]].push_back(2 * e);
    rotation[index[edges[e].b]].push_back(2 * e + 1);
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    rotation[i] = sort_around(p, vertices[i], rotation[i],
                              edges, options.max_depth);
  }
  return ContactGraph(std::move(vertices), std::move(edges), std::move(rotation));
}

}  // namespace packcert::verifier
