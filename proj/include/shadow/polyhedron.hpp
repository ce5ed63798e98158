#pragma once

// Combinatorial simple polyhedra.
//
// A vertex is the cone over the 1-skeleton of a tetrahedron: four half-edges
// 0..3 and six local wings, one per unordered pair {i,j}. An edge end sits on
// half-edge i of a vertex and carries a bijection from the three wing slots of
// the edge onto the three wings {i,j}, j != i. Slot k of an edge is the same
// sheet at both ends. Singular circles carry no vertices; going once around
// the circle sends slot k to slot monodromy[k].

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shadow {

enum class ArcKind : std::uint8_t { Edge = 0, Circle = 1 };

/// One wing arc travelled in a direction (+1 along the intrinsic orientation).
struct ArcState {
  ArcKind kind = ArcKind::Edge;
  int index = 0;
  int slot = 0;
  int dir = 1;

  ArcState reversed() const { return {kind, index, slot, -dir}; }
  bool same_arc(const ArcState& o) const {
    return kind == o.kind && index == o.index && slot == o.slot;
  }
  friend bool operator==(const ArcState&, const ArcState&) = default;
};

/// Total order used for canonical circuit starts: edges before circles,
/// then index, slot, and + before -.
bool state_less(const ArcState& a, const ArcState& b);

struct Attachment {
  int vertex = 0;
  int half_edge = 0;
  /// wings[k] = j means slot k attaches to local wing {half_edge, j}.
  std::array<int, 3> wings{};
};

struct Vertex {
  std::string id;
};

struct Edge {
  std::string id;
  std::array<Attachment, 2> ends;
};

struct Circle {
  std::string id;
  std::array<int, 3> monodromy{0, 1, 2};
};

struct Region {
  std::string id;
  int genus = 0;
  bool orientable = true;
  /// One seed per boundary circuit; its direction fixes the boundary
  /// orientation induced by the region's reference orientation.
  std::vector<ArcState> boundary;

  bool closed() const { return boundary.empty(); }
  bool is_disc() const { return genus == 0 && orientable && boundary.size() == 1; }
  int euler_characteristic() const {
    const int b = static_cast<int>(boundary.size());
    return orientable ? 2 - 2 * genus - b : 2 - genus - b;
  }
};

/// Raw, possibly invalid description of a polyhedron.
struct PolyhedronData {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Circle> circles;
  std::vector<Region> regions;
};

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& code) const;
  std::string str() const;
};

class InvalidPolyhedron : public std::runtime_error {
 public:
  explicit InvalidPolyhedron(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct Circuit {
  /// Spelled from the least traversal state, e.g. "e3.1+".
  std::string id;
  /// Cyclic sequence starting at the least state.
  std::vector<ArcState> arcs;
};

/// Validated, immutable polyhedron with derived circuit data.
class Polyhedron {
 public:
  /// Throws InvalidPolyhedron when validate(data) reports violations.
  explicit Polyhedron(PolyhedronData data);

  const PolyhedronData& data() const { return data_; }
  const std::vector<Vertex>& vertices() const { return data_.vertices; }
  const std::vector<Edge>& edges() const { return data_.edges; }
  const std::vector<Circle>& circles() const { return data_.circles; }
  const std::vector<Region>& regions() const { return data_.regions; }
  int num_vertices() const { return static_cast<int>(data_.vertices.size()); }
  int num_edges() const { return static_cast<int>(data_.edges.size()); }
  int num_circles() const { return static_cast<int>(data_.circles.size()); }
  int num_regions() const { return static_cast<int>(data_.regions.size()); }

  const std::vector<Circuit>& circuits() const { return circuits_; }
  /// Circuit containing the arc and the position of the arc in it.
  int circuit_of(ArcKind kind, int index, int slot) const;
  int position_in_circuit(ArcKind kind, int index, int slot) const;
  /// Direction in which the circuit's canonical traversal runs over the arc.
  int circuit_direction(ArcKind kind, int index, int slot) const;
  /// Region owning a circuit.
  int region_of_circuit(int circuit) const { return circuit_region_[circuit]; }
  int region_of_arc(ArcKind kind, int index, int slot) const {
    return circuit_region_[circuit_of(kind, index, slot)];
  }

  struct BoundaryEntry {
    int circuit = 0;
    /// +1 if the region's seed runs along the circuit's canonical direction.
    int orientation = 1;
  };
  const std::vector<BoundaryEntry>& boundary(int region) const { return region_boundary_[region]; }

  /// Arcs of a region boundary circuit in the region's reference direction.
  std::vector<ArcState> oriented_circuit(int region, int entry) const;

  /// Edge end attached at (vertex, half_edge): {edge, end index}.
  std::pair<int, int> end_at(int vertex, int half_edge) const {
    return half_edge_owner_[vertex][half_edge];
  }

  ArcState next(const ArcState& s) const;

  int find_vertex(const std::string& id) const;
  int find_edge(const std::string& id) const;
  int find_circle(const std::string& id) const;
  int find_region(const std::string& id) const;
  std::string arc_name(const ArcState& s, bool with_dir = true) const;

 private:
  PolyhedronData data_;
  std::vector<std::array<std::pair<int, int>, 4>> half_edge_owner_;
  std::vector<Circuit> circuits_;
  std::vector<std::array<int, 3>> edge_circuit_, edge_pos_, edge_dir_;
  std::vector<std::array<int, 3>> circle_circuit_, circle_pos_, circle_dir_;
  std::vector<int> circuit_region_;
  std::vector<std::vector<BoundaryEntry>> region_boundary_;
};

ValidationReport validate(const PolyhedronData& data);

/// Traced circuits of data whose singular structure is valid; throws
/// std::logic_error if tracing breaks down.
std::vector<Circuit> trace_circuits(const PolyhedronData& data);
inline const std::vector<Circuit>& trace_circuits(const Polyhedron& p) { return p.circuits(); }

int euler_characteristic(const Polyhedron& p);
bool is_standard(const Polyhedron& p);
int shadow_complexity_count(const Polyhedron& p);

/// Connected components of Sing(P): vertex components, then one per circle.
int singular_components(const Polyhedron& p);

}  // namespace shadow
