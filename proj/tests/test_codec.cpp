#include <doctest.h>
#include "knotcert/codec.hpp"
#include "knotcert/diagram.hpp"
using namespace knotcert;

TEST_CASE("trefoil pd parses and canonicalizes") {
  PdCode pd = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK(pd.crossing_count() == 3);
  CHECK(serialize_pd(pd) == "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  PlanarDiagram d = build_diagram(pd);
  CHECK(d.crossing_count() == 3);
  CHECK(d.is_knot());
  CHECK(d.writhe() == 3);
  CHECK(is_alternating(d));
  CHECK(is_positive(d));
  CHECK(is_reduced(d));
  CHECK(d.face_count() == 5);
  PdCode back = d.to_pd();
  CHECK(serialize_pd(back) == serialize_pd(pd));
  GaussCode gc = pd_to_gauss(pd);
  CHECK(serialize_gauss(gc) == "U1+ O2+ U3+ O1+ U2+ O3+");
  PdCode pd2 = gauss_to_pd(gc);
  CHECK(serialize_pd(pd2) == serialize_pd(pd));
}
