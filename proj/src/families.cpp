#include "knotcert/families.hpp"

#include <map>

#include "knotcert/errors.hpp"

namespace knotcert {

int MapBuilder::add_crossing() {
  std::array<std::pair<int, int>, 4> empty;
  empty.fill({-1, -1});
  conn_.push_back(empty);
  return static_cast<int>(conn_.size()) - 1;
}

void MapBuilder::connect(int v1, int s1, int v2, int s2) {
  if (conn_[v1][s1].first >= 0 || conn_[v2][s2].first >= 0)
    fail(Errc::MalformedToken, "map slot wired twice");
  conn_[v1][s1] = {v2, s2};
  conn_[v2][s2] = {v1, s1};
}

PlanarDiagram MapBuilder::build() const {
  const int c = static_cast<int>(conn_.size());
  if (c == 0) return PlanarDiagram();
  for (int v = 0; v < c; ++v)
    for (int s = 0; s < 4; ++s)
      if (conn_[v][s].first < 0) fail(Errc::MalformedToken, "unwired map slot");

  // arc ids per unordered dart pair
  std::map<std::pair<int, int>, int> arc_of_dart;
  int arcs = 0;
  for (int v = 0; v < c; ++v)
    for (int s = 0; s < 4; ++s) {
      auto [w, t] = conn_[v][s];
      if (std::make_pair(v, s) < std::make_pair(w, t)) {
        arc_of_dart[{v, s}] = arcs;
        arc_of_dart[{w, t}] = arcs;
        ++arcs;
      }
    }

  // trace the single strand; a passage enters a slot and leaves the opposite one
  std::vector<int> entry_slot_over(c, -1), entry_slot_under(c, -1);
  std::vector<int> visits(c, 0);
  int v = 0, s = 0;
  std::vector<std::pair<int, int>> exits;  // exit darts in walk order
  for (int step = 0; step < 2 * c; ++step) {
    bool over = step % 2 == 0;  // first passage of the walk runs over
    if (visits[v] >= 2) fail(Errc::NotAKnot, "map trace revisits a crossing");
    ++visits[v];
    if (over) {
      if (entry_slot_over[v] >= 0) fail(Errc::NonPlanarInput, "two over-passages at a crossing");
      entry_slot_over[v] = s;
    } else {
      if (entry_slot_under[v] >= 0) fail(Errc::NonPlanarInput, "two under-passages at a crossing");
      entry_slot_under[v] = s;
    }
    int exit = (s + 2) % 4;
    exits.emplace_back(v, exit);
    auto [nv, ns] = conn_[v][exit];
    v = nv;
    s = ns;
  }
  if (!(v == 0 && s == 0)) fail(Errc::NotAKnot, "map trace is not a single closed strand");

  // rotate each crossing so the under-strand enters at slot 0
  std::vector<std::array<int, 4>> slots(c);
  std::vector<int> rot(c);
  for (int x = 0; x < c; ++x) {
    rot[x] = entry_slot_under[x];
    for (int k = 0; k < 4; ++k) slots[x][k] = arc_of_dart.at({x, (rot[x] + k) % 4});
  }
  std::map<int, Dart> hints;
  for (auto& [vx, sx] : exits) {
    int a = arc_of_dart.at({vx, sx});
    hints[a] = Dart{vx, (sx - rot[vx] + 4) % 4};
  }
  return PlanarDiagram::from_slots(slots, hints, 0);
}

PlanarDiagram torus_2p_diagram(int p) {
  if (p < 2) fail(Errc::MalformedToken, "torus_2p_diagram needs p >= 2");
  // slots ccw: 0=NE, 1=NW, 2=SW, 3=SE
  MapBuilder b;
  for (int i = 0; i < p; ++i) b.add_crossing();
  for (int i = 0; i < p; ++i) {
    int j = (i + 1) % p;
    b.connect(i, 0, j, 1);  // top strand
    b.connect(i, 3, j, 2);  // bottom strand
  }
  return b.build();
}

PlanarDiagram pretzel_diagram(const std::vector<int>& bands) {
  if (bands.size() < 2) fail(Errc::MalformedToken, "pretzel needs at least 2 bands");
  MapBuilder b;
  std::vector<std::vector<int>> ids(bands.size());
  for (size_t j = 0; j < bands.size(); ++j) {
    if (bands[j] < 1) fail(Errc::MalformedToken, "pretzel band size must be >= 1");
    for (int i = 0; i < bands[j]; ++i) ids[j].push_back(b.add_crossing());
    for (int i = 0; i + 1 < bands[j]; ++i) {
      b.connect(ids[j][i], 2, ids[j][i + 1], 1);  // SW -> NW
      b.connect(ids[j][i], 3, ids[j][i + 1], 0);  // SE -> NE
    }
  }
  const int k = static_cast<int>(bands.size());
  for (int j = 0; j < k; ++j) {
    int jn = (j + 1) % k;
    b.connect(ids[j].front(), 0, ids[jn].front(), 1);  // top rail
    b.connect(ids[j].back(), 3, ids[jn].back(), 2);    // bottom rail
  }
  return b.build();
}

PlanarDiagram rational_diagram(const std::vector<int>& twists) {
  if (twists.empty()) fail(Errc::MalformedToken, "rational_diagram needs at least one region");
  for (int t : twists)
    if (t < 1) fail(Errc::MalformedToken, "twist counts must be >= 1");

  MapBuilder b;
  std::pair<int, int> nw, ne, sw, se;  // current tangle boundary darts
  {
    std::vector<int> ids;
    for (int i = 0; i < twists[0]; ++i) ids.push_back(b.add_crossing());
    for (int i = 0; i + 1 < twists[0]; ++i) {
      b.connect(ids[i], 0, ids[i + 1], 1);
      b.connect(ids[i], 3, ids[i + 1], 2);
    }
    nw = {ids.front(), 1};
    sw = {ids.front(), 2};
    ne = {ids.back(), 0};
    se = {ids.back(), 3};
  }
  for (size_t r = 1; r < twists.size(); ++r) {
    bool horizontal = r % 2 == 0;
    for (int i = 0; i < twists[r]; ++i) {
      int x = b.add_crossing();
      if (horizontal) {  // extend to the right, twisting NE/SE
        b.connect(x, 1, ne.first, ne.second);
        b.connect(x, 2, se.first, se.second);
        ne = {x, 0};
        se = {x, 3};
      } else {  // extend at the bottom, twisting SW/SE
        b.connect(x, 1, sw.first, sw.second);
        b.connect(x, 0, se.first, se.second);
        sw = {x, 2};
        se = {x, 3};
      }
    }
  }
  if (twists.size() % 2 == 1) {
    // ends with a horizontal region: plat closure left-to-right
    b.connect(nw.first, nw.second, ne.first, ne.second);
    b.connect(sw.first, sw.second, se.first, se.second);
  } else {
    // ends with a vertical region: close top-to-bottom on each side
    b.connect(nw.first, nw.second, sw.first, sw.second);
    b.connect(ne.first, ne.second, se.first, se.second);
  }
  return b.build();
}

Integer continuant(const std::vector<int>& a) {
  if (a.empty()) return 1;
  Integer km2 = 1, km1 = a[0];
  for (size_t i = 1; i < a.size(); ++i) {
    Integer k = a[i] * km1 + km2;
    km2 = km1;
    km1 = k;
  }
  return km1;
}

PlanarDiagram positive_variant(const PlanarDiagram& d) {
  if (is_positive(d)) return d;
  PlanarDiagram m = d.mirrored();
  if (is_positive(m)) return m;
  fail(Errc::HypothesisViolated, "diagram is positive in neither chirality");
}

}  // namespace knotcert
