#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "packcert/packing/packing.hpp"

namespace packcert::verifier {

using packing::CertifyOptions;
using packing::Contact;
using packing::Offset;
using packing::PeriodicPacking;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Directed copy of an edge. Half-edge 2e runs a -> b of edge e, half-edge
/// 2e + 1 runs b -> a with the negated offset.
struct HalfEdge {
  int from = 0;
  int to = 0;
  Offset offset;
  std::size_t edge = 0;
};

struct FaceCorner {
  int disc = 0;
  Offset offset;
  friend bool operator==(const FaceCorner&, const FaceCorner&) = default;
};

struct Face {
  std::vector<std::size_t> half_edges;
  /// Boundary discs in traversal order, positioned relative to the first.
  std::vector<FaceCorner> corners;
  std::size_t size() const { return half_edges.size(); }
};

/// Tangency graph on the torus with a rotation system. Faces are traced on
/// construction: leaving a vertex, the walk continues on the edge that
/// follows the arrival edge clockwise.
class ContactGraph {
 public:
  /// `rotation[i]` lists the half-edges leaving vertices[i] in
  /// counter-clockwise order. Throws GraphError if the rotation does not
  /// cover every half-edge exactly once or the Euler relation V - E + F = 0
  /// fails.
  ContactGraph(std::vector<int> vertices, std::vector<Contact> edges,
               std::vector<std::vector<std::size_t>> rotation);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Contact>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<std::size_t>& rotation(std::size_t vertex_index) const {
    return rotation_[vertex_index];
  }
  HalfEdge half_edge(std::size_t h) const;
  std::size_t half_edge_count() const { return 2 * edges_.size(); }
  std::size_t degree(int vertex) const;

  long euler_characteristic() const {
    return static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) +
           static_cast<long>(faces_.size());
  }

 private:
  std::size_t vertex_index(int id) const;
  void trace_faces();

  std::vector<int> vertices_;
  std::vector<Contact> edges_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<Face> faces_;
};

/// Declared contacts plus every candidate pair whose gap encloses zero
/// within the tolerance; rotation from certified angular comparisons.
/// Throws GraphError("rotation ambiguity at vertex N") when two directions
/// cannot be separated, and GraphError for non-tangent declared contacts.
ContactGraph contact_graph(const PeriodicPacking& p, const CertifyOptions& options = {});

}  // namespace packcert::verifier
