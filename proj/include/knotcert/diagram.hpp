#ifndef KNOTCERT_DIAGRAM_HPP
#define KNOTCERT_DIAGRAM_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotcert/codec.hpp"

namespace knotcert {

struct Dart {
  int crossing = -1;
  int slot = -1;
  bool valid() const { return crossing >= 0; }
};

enum class SmoothMode { Zero, Infinity };

// Oriented link diagram with an explicit planar rotation system. Slots at a
// crossing run counterclockwise with the incoming under-strand at slot 0, so
// the over-strand occupies slots 1 and 3 and `over_in` names its incoming one.
// sign is +1 exactly when the over-strand enters at slot 1.
class PlanarDiagram {
 public:
  struct Crossing {
    std::array<int, 4> arc{};  // arc ids, 0-based
    int over_in = 1;           // 1 or 3
    int sign = +1;
  };

  struct Passage {
    int crossing = -1;
    bool over = false;
  };

  PlanarDiagram() = default;  // 0-crossing unknot
  static PlanarDiagram from_pd(const PdCode& pd);
  // raw constructor for internally built diagrams; re-traces orientation,
  // normalizes slots, recomputes faces. `slots[x]` lists arc ids ccw; the
  // under-strand must occupy slots {0,2}. A tail hint pins the direction of
  // the strand component containing that arc.
  static PlanarDiagram from_slots(const std::vector<std::array<int, 4>>& slots,
                                  const std::map<int, Dart>& tail_hints, int free_loops);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return arc_count_; }
  int component_count() const { return static_cast<int>(component_arcs_.size()) + free_loops_; }
  int free_loops() const { return free_loops_; }
  bool is_knot() const { return component_count() == 1; }
  bool graph_connected() const { return graph_connected_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int x) const { return crossings_[x]; }

  int writhe() const;

  Dart arc_head(int a) const { return arc_head_[a]; }  // where the arc enters
  Dart arc_tail(int a) const { return arc_tail_[a]; }  // where the arc leaves
  int successor_arc(int a) const;

  // components of the strand trace (free loops excluded), arcs in walk order
  const std::vector<std::vector<int>>& component_arcs() const { return component_arcs_; }

  // faces of the rotation system
  int face_count() const { return static_cast<int>(face_traversals_.size()); }
  int face_at_corner(int x, int corner) const { return corner_face_[x][corner]; }
  int face_size(int f) const { return static_cast<int>(face_traversals_[f].size()); }
  // boundary traversals of a face: (arc, traversed with its orientation?)
  const std::vector<std::pair<int, bool>>& face_traversals(int f) const {
    return face_traversals_[f];
  }
  int face_color(int f) const { return face_color_[f]; }

  PlanarDiagram mirrored() const;
  PlanarDiagram with_crossing_switched(int x) const;
  PlanarDiagram smoothed(int x, SmoothMode mode) const;

  PdCode to_pd() const;
  std::string canonical_key() const;  // deterministic serialization for memo tables

 private:
  void rebuild(int free_loops, const std::map<int, Dart>& tail_hints = {});

  std::vector<Crossing> crossings_;
  int arc_count_ = 0;
  int free_loops_ = 0;
  bool graph_connected_ = true;
  std::vector<Dart> arc_head_, arc_tail_;
  std::vector<std::vector<int>> component_arcs_;
  std::vector<std::array<int, 4>> corner_face_;
  std::vector<std::vector<std::pair<int, bool>>> face_traversals_;
  std::vector<int> face_color_;
};

PlanarDiagram build_diagram(const PdCode& pd);  // knots only; validates planarity

bool is_alternating(const PlanarDiagram& d);
bool is_positive(const PlanarDiagram& d);
bool is_reduced(const PlanarDiagram& d);

enum class SpecialAlternating { No, AsIs, AsMirror };
SpecialAlternating is_special_alternating(const PlanarDiagram& d);

struct SeifertData {
  int circles = 0;
  int genus_upper_bound = 0;
  bool exact = false;  // exact genus for alternating or positive diagrams
};
SeifertData seifert_data(const PlanarDiagram& d);

struct TaitGraph {
  int color = 0;
  std::vector<int> vertex_faces;  // face ids of that color
  struct Edge {
    int u = 0, v = 0;       // vertex indices
    int crossing = 0;
    int corner_parity = 0;  // 0: corners (0,2) carry the color, 1: corners (1,3)
  };
  std::vector<Edge> edges;
  int vertex_of_face(int face) const;
};
TaitGraph tait_graph(const PlanarDiagram& d, int color);

Integer tait_spanning_trees(const TaitGraph& g);

}  // namespace knotcert

#endif
