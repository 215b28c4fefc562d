#ifndef KNOTCERT_FAMILIES_HPP
#define KNOTCERT_FAMILIES_HPP

#include <vector>

#include "knotcert/diagram.hpp"

namespace knotcert {

// Assemble alternating diagrams from a planar 4-valent map: wire crossing
// slots (ccw), then build() picks the alternating over/under assignment with
// the first passage of the trace running over.
class MapBuilder {
 public:
  int add_crossing();
  void connect(int v1, int s1, int v2, int s2);
  PlanarDiagram build() const;

 private:
  std::vector<std::array<std::pair<int, int>, 4>> conn_;
};

// standard (2,p) torus closure, p >= 2
PlanarDiagram torus_2p_diagram(int p);

// pretzel with the given per-band twist counts (all >= 1), bands >= 2
PlanarDiagram pretzel_diagram(const std::vector<int>& bands);

// alternating 4-plat from a continued-fraction twist vector (entries >= 1,
// alternately horizontal and vertical regions), numerator closure
PlanarDiagram rational_diagram(const std::vector<int>& twists);

// continuant K(a1..am): determinant oracle for rational_diagram inputs
Integer continuant(const std::vector<int>& a);

// the diagram or its mirror, whichever is positive (input must be alternating)
PlanarDiagram positive_variant(const PlanarDiagram& d);

}  // namespace knotcert

#endif
