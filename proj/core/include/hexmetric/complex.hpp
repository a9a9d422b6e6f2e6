#pragma once

// Combinatorial model of an ideally triangulated surface: colored hexagons
// whose y-sides are glued in pairs.
//
// Every hexagon has six cyclic slots 0..5. Even slots are x-sides (they end
// up on the surface boundary as x-arcs), odd slots are y-sides (glued into
// edges). The side opposite slot p is slot (p + 3) % 6, so x-slot p faces the
// edge through y-slot (p + 3) % 6 and is adjacent to the edges through
// y-slots p - 1 and p + 1.
//
// Indexing: x-arc ids are hex * 3 + pos / 2, edge ids follow gluing order,
// 2-cell ids are hexagon ids.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hexmetric {

struct SlotRef {
  int hex = 0;
  int pos = 0;

  [[nodiscard]] constexpr bool is_x() const { return pos % 2 == 0; }
  [[nodiscard]] constexpr bool is_y() const { return pos % 2 == 1; }
  friend constexpr bool operator==(const SlotRef&, const SlotRef&) = default;
  friend constexpr auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

std::string to_string(const SlotRef& s);

/// One identification of two y-slots. With reversed == false the
/// counterclockwise-start vertex of `a` is identified with the
/// counterclockwise-end vertex of `b` (coherent orientations); with
/// reversed == true start is identified with start.
struct Gluing {
  SlotRef a;
  SlotRef b;
  bool reversed = false;
};

struct ComplexSpec {
  int hexagons = 0;
  std::vector<Gluing> gluings;
  std::vector<std::string> labels;  // optional, one per gluing
};

struct BuildOptions {
  bool allow_disconnected = false;
};

struct Edge {
  SlotRef a;
  SlotRef b;
  bool reversed = false;
  std::string label;
};

/// One corner step of a normal curve: it enters 2-cell `hex` through y-slot
/// `in` and leaves through the distinct y-slot `out`.
struct CycleStep {
  int hex = 0;
  int in = 0;
  int out = 0;
  friend constexpr bool operator==(const CycleStep&, const CycleStep&) = default;
};

/// A closed sequence of edges realized by corner steps. edges[i] is the edge
/// crossed when leaving steps[i]; it joins the out-slot of steps[i] to the
/// in-slot of steps[i + 1] (cyclically).
struct EdgeCycle {
  std::vector<CycleStep> steps;
  std::vector<int> edges;

  /// Number of visits to each edge.
  [[nodiscard]] std::vector<int> multiplicities(int edge_count) const;
  /// Each edge visited at most twice.
  [[nodiscard]] bool is_fundamental(int edge_count) const;
  [[nodiscard]] std::size_t size() const { return edges.size(); }
};

/// One boundary component: its x-arcs in traversal order and the edges met
/// between consecutive x-arcs (edges[i] lies between arcs[i] and arcs[i+1]).
struct BoundaryCycle {
  std::vector<int> arcs;
  EdgeCycle cycle;
};

struct FundamentalCycles {
  std::vector<EdgeCycle> cycles;
  bool truncated = false;
};

class HexComplex {
 public:
  /// Validates the gluing description and derives edges, x-arcs and boundary
  /// components. Throws ValidationError.
  static HexComplex build(const ComplexSpec& spec, const BuildOptions& options = {});

  [[nodiscard]] int hexagon_count() const { return n_; }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] int xarc_count() const { return 3 * n_; }
  [[nodiscard]] int euler_characteristic() const { return -n_ / 2; }
  [[nodiscard]] bool connected() const { return connected_; }

  [[nodiscard]] const Edge& edge(int e) const { return edges_.at(e); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] int edge_index(const std::string& label) const;

  /// Edge through a y-slot.
  [[nodiscard]] int edge_of(const SlotRef& y_slot) const;
  /// The other y-slot of the edge through `y_slot`.
  [[nodiscard]] SlotRef partner(const SlotRef& y_slot) const;
  [[nodiscard]] bool reversed_at(const SlotRef& y_slot) const;

  [[nodiscard]] static int xarc_id(const SlotRef& x_slot);
  [[nodiscard]] static SlotRef xarc_slot(int arc);

  /// Opposite side, (pos + 3) % 6. Throws ValidationError for an x-slot.
  [[nodiscard]] static SlotRef opposite_x_slot(const SlotRef& y_slot);
  /// Opposite side, (pos + 3) % 6. Throws ValidationError for a y-slot.
  [[nodiscard]] static SlotRef opposite_y_slot(const SlotRef& x_slot);

  /// The two x-arcs facing edge e: opposite of slot a, then opposite of slot b.
  [[nodiscard]] std::pair<int, int> facing_arcs(int e) const;
  /// Inverse of facing_arcs: the edge an x-arc faces and the side (0 = a, 1 = b).
  [[nodiscard]] std::pair<int, int> facing_edge(int arc) const;
  /// The four x-arcs at positions +-1 of both y-slots of e, with multiplicity.
  [[nodiscard]] std::array<int, 4> adjacent_arcs(int e) const;
  /// The x-arc lying between two distinct y-slots of one hexagon.
  [[nodiscard]] static int corner_arc(int hex, int y_pos1, int y_pos2);

  /// Edges through y-slots 1, 3, 5 of a hexagon (may repeat).
  [[nodiscard]] std::array<int, 3> cell_edges(int hex) const;
  /// x-arc ids at slots 0, 2, 4 of a hexagon.
  [[nodiscard]] static std::array<int, 3> cell_arcs(int hex);

  [[nodiscard]] const std::vector<BoundaryCycle>& boundary_components() const {
    return boundary_;
  }
  /// Boundary component containing an x-arc.
  [[nodiscard]] int boundary_of(int arc) const { return arc_boundary_.at(arc); }

  /// All simple closed normal curves meeting every edge at most twice, up to
  /// rotation and reversal, in a deterministic order. Stops after `limit`
  /// cycles and sets `truncated` if more exist.
  [[nodiscard]] FundamentalCycles enumerate_fundamental_cycles(std::size_t limit) const;

  /// Traces the normal multicurve with the given per-edge intersection numbers.
  /// Returns its components, or nullopt if the numbers violate a per-hexagon
  /// triangle inequality or parity condition.
  [[nodiscard]] std::optional<std::vector<EdgeCycle>> normal_curves(
      const std::vector<int>& intersections) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> slot_edge_;  // hex * 6 + pos -> edge id (y-slots only)
  std::vector<BoundaryCycle> boundary_;
  std::vector<int> arc_boundary_;
  bool connected_ = true;

  void derive_boundary();
};

}  // namespace hexmetric
