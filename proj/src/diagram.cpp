#include "knotcert/diagram.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "knotcert/errors.hpp"

namespace knotcert {

PlanarDiagram PlanarDiagram::from_slots(const std::vector<std::array<int, 4>>& slots,
                                        const std::map<int, Dart>& tail_hints, int free_loops) {
  PlanarDiagram d;
  d.crossings_.resize(slots.size());
  for (size_t x = 0; x < slots.size(); ++x) d.crossings_[x].arc = slots[x];
  d.rebuild(free_loops, tail_hints);
  return d;
}

void PlanarDiagram::rebuild(int free_loops, const std::map<int, Dart>& tail_hints) {
  const int c = crossing_count();
  free_loops_ = free_loops;
  arc_head_.clear();
  arc_tail_.clear();
  component_arcs_.clear();
  corner_face_.assign(c, {});
  face_traversals_.clear();
  face_color_.clear();

  // compress arc ids
  std::map<int, int> remap;
  for (auto& cr : crossings_)
    for (int a : cr.arc) remap.emplace(a, 0);
  int next = 0;
  for (auto& [old_id, new_id] : remap) new_id = next++;
  for (auto& cr : crossings_)
    for (int& a : cr.arc) a = remap[a];
  arc_count_ = next;
  std::map<int, Dart> hints;
  for (auto& [old_id, dart] : tail_hints) {
    auto it = remap.find(old_id);
    if (it != remap.end()) hints[it->second] = dart;
  }
  if (c == 0) {
    graph_connected_ = true;
    return;
  }
  if (arc_count_ != 2 * c) fail(Errc::DisconnectedTrace, "arc/crossing count mismatch");

  // endpoints of each arc
  std::vector<std::vector<Dart>> ends(arc_count_);
  for (int x = 0; x < c; ++x)
    for (int s = 0; s < 4; ++s) ends[crossings_[x].arc[s]].push_back({x, s});
  for (int a = 0; a < arc_count_; ++a)
    if (ends[a].size() != 2) fail(Errc::DisconnectedTrace, "arc with endpoint count != 2");

  // trace strands, assigning directions; a tail hint anchors the direction of
  // the component its arc lies on (surgery uses this to inherit orientation)
  std::vector<Dart> tail(arc_count_, Dart{}), head(arc_count_, Dart{});
  std::vector<bool> visited(arc_count_, false);
  std::vector<std::vector<int>> comps;
  auto other_endpoint = [&](int a, const Dart& d) {
    const auto& e = ends[a];
    if (e[0].crossing == d.crossing && e[0].slot == d.slot) return e[1];
    return e[0];
  };
  auto same_dart = [](const Dart& a, const Dart& b) {
    return a.crossing == b.crossing && a.slot == b.slot;
  };
  for (int a0 = 0; a0 < arc_count_; ++a0) {
    if (visited[a0]) continue;
    std::vector<int> comp;
    int a = a0;
    Dart t = ends[a0][0];
    auto hit = hints.find(a0);
    if (hit != hints.end()) {
      if (!same_dart(hit->second, ends[a0][0]) && !same_dart(hit->second, ends[a0][1]))
        fail(Errc::DisconnectedTrace, "stale orientation hint");
      t = hit->second;
    }
    while (!visited[a]) {
      visited[a] = true;
      comp.push_back(a);
      tail[a] = t;
      Dart h = other_endpoint(a, t);
      head[a] = h;
      int exit_slot = (h.slot + 2) % 4;
      int b = crossings_[h.crossing].arc[exit_slot];
      t = Dart{h.crossing, exit_slot};
      a = b;
    }
    comps.push_back(std::move(comp));
  }

  // normalize: rotate by 2 where the under-in landed on slot 2
  std::vector<int> rot(c, 0);
  for (int x = 0; x < c; ++x) {
    int a0 = crossings_[x].arc[0];
    bool head_here = head[a0].crossing == x && head[a0].slot == 0;
    rot[x] = head_here ? 0 : 2;
    if (rot[x]) {
      auto old = crossings_[x].arc;
      for (int s = 0; s < 4; ++s) crossings_[x].arc[s] = old[(s + 2) % 4];
    }
  }
  auto fix_dart = [&](Dart d) {
    d.slot = (d.slot - rot[d.crossing] + 4) % 4;
    return d;
  };
  arc_head_.resize(arc_count_);
  arc_tail_.resize(arc_count_);
  for (int a = 0; a < arc_count_; ++a) {
    arc_head_[a] = fix_dart(head[a]);
    arc_tail_[a] = fix_dart(tail[a]);
  }
  component_arcs_ = std::move(comps);

  for (int x = 0; x < c; ++x) {
    auto& cr = crossings_[x];
    int a1 = cr.arc[1];
    bool in_at_1 = arc_head_[a1].crossing == x && arc_head_[a1].slot == 1;
    cr.over_in = in_at_1 ? 1 : 3;
    cr.sign = in_at_1 ? +1 : -1;
  }

  // graph connectivity (crossings joined by arcs)
  UnionFind uf(c);
  for (int a = 0; a < arc_count_; ++a) uf.unite(arc_head_[a].crossing, arc_tail_[a].crossing);
  graph_connected_ = uf.groups == 1;

  // faces: orbits of "arrive at (x,s), leave along slot s+1"
  std::vector<std::vector<Dart>> ends2(arc_count_);
  for (int x = 0; x < c; ++x)
    for (int s = 0; s < 4; ++s) ends2[crossings_[x].arc[s]].push_back({x, s});
  auto other2 = [&](int a, int x, int s) {
    const auto& e = ends2[a];
    if (e[0].crossing == x && e[0].slot == s) return e[1];
    return e[0];
  };
  std::vector<int> face_of(4 * c, -1);
  for (int d0 = 0; d0 < 4 * c; ++d0) {
    if (face_of[d0] >= 0) continue;
    int f = static_cast<int>(face_traversals_.size());
    face_traversals_.emplace_back();
    int d = d0;
    while (face_of[d] < 0) {
      face_of[d] = f;
      int x = d / 4, s = d % 4;
      corner_face_[x][s] = f;
      int t = (s + 1) % 4;
      int b = crossings_[x].arc[t];
      bool with_dir = arc_tail_[b].crossing == x && arc_tail_[b].slot == t;
      face_traversals_[f].emplace_back(b, with_dir);
      Dart nd = other2(b, x, t);
      d = 4 * nd.crossing + nd.slot;
    }
  }

  // checkerboard coloring of faces
  face_color_.assign(face_traversals_.size(), -1);
  for (size_t f0 = 0; f0 < face_traversals_.size(); ++f0) {
    if (face_color_[f0] >= 0) continue;
    face_color_[f0] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(f0));
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (int x = 0; x < c; ++x)
        for (int s = 0; s < 4; ++s) {
          if (corner_face_[x][s] != f) continue;
          int g = corner_face_[x][(s + 1) % 4];
          int h = corner_face_[x][(s + 3) % 4];
          for (int adj : {g, h}) {
            if (face_color_[adj] < 0) {
              face_color_[adj] = 1 - face_color_[f];
              q.push(adj);
            } else if (face_color_[adj] == face_color_[f]) {
              fail(Errc::NonPlanarInput, "faces admit no checkerboard coloring");
            }
          }
        }
    }
  }
}

PlanarDiagram PlanarDiagram::from_pd(const PdCode& pd) {
  const int c = pd.crossing_count();
  PlanarDiagram d;
  if (c == 0) {
    d.free_loops_ = 1;
    d.graph_connected_ = true;
    return d;
  }
  PdOrientation orient = resolve_orientation(pd);
  d.crossings_.resize(c);
  std::map<int, Dart> hints;  // the PD convention fixes every arc's direction
  for (int x = 0; x < c; ++x)
    for (int s = 0; s < 4; ++s) {
      int a = pd.crossings[x][s] - 1;
      d.crossings_[x].arc[s] = a;
      int over_out = orient.over_in[x] == 1 ? 3 : 1;
      if (s == 2 || s == over_out) hints[a] = Dart{x, s};
    }
  d.rebuild(0, hints);

  // genus-0 check: F - E + V = 1 + #graph-components
  UnionFind uf(c);
  for (int a = 0; a < d.arc_count_; ++a)
    uf.unite(d.arc_head_[a].crossing, d.arc_tail_[a].crossing);
  int expected_faces = 2 * c - c + 1 + uf.groups;
  if (d.face_count() != expected_faces)
    fail(Errc::NonPlanarInput, "PD code admits no planar embedding (face count " +
                                   std::to_string(d.face_count()) + ", expected " +
                                   std::to_string(expected_faces) + ")");
  return d;
}

PlanarDiagram build_diagram(const PdCode& pd) {
  PlanarDiagram d = PlanarDiagram::from_pd(pd);
  if (!d.is_knot()) fail(Errc::NotAKnot, "diagram has " + std::to_string(d.component_count()) +
                                             " components");
  return d;
}

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const auto& cr : crossings_) w += cr.sign;
  return w;
}

int PlanarDiagram::successor_arc(int a) const {
  Dart h = arc_head_[a];
  return crossings_[h.crossing].arc[(h.slot + 2) % 4];
}

PlanarDiagram PlanarDiagram::mirrored() const {
  if (crossing_count() == 0) return *this;
  std::vector<std::array<int, 4>> slots(crossing_count());
  std::vector<int> rot(crossing_count());
  for (int x = 0; x < crossing_count(); ++x) {
    const auto& cr = crossings_[x];
    rot[x] = cr.over_in;
    for (int s = 0; s < 4; ++s) slots[x][s] = cr.arc[(cr.over_in + s) % 4];
  }
  std::map<int, Dart> hints;
  for (int a = 0; a < arc_count_; ++a) {
    Dart t = arc_tail_[a];
    t.slot = (t.slot - rot[t.crossing] + 4) % 4;
    hints[a] = t;
  }
  return from_slots(slots, hints, free_loops_);
}

PlanarDiagram PlanarDiagram::with_crossing_switched(int x) const {
  std::vector<std::array<int, 4>> slots(crossing_count());
  int rot = crossings_[x].over_in;
  for (int y = 0; y < crossing_count(); ++y) {
    const auto& cr = crossings_[y];
    if (y == x)
      for (int s = 0; s < 4; ++s) slots[y][s] = cr.arc[(rot + s) % 4];
    else
      slots[y] = cr.arc;
  }
  std::map<int, Dart> hints;
  for (int a = 0; a < arc_count_; ++a) {
    Dart t = arc_tail_[a];
    if (t.crossing == x) t.slot = (t.slot - rot + 4) % 4;
    hints[a] = t;
  }
  return from_slots(slots, hints, free_loops_);
}

namespace {

// merges arc chains across a removed crossing, tracking the surviving free
// ends so oriented smoothings can keep the inherited strand directions
struct ArcMerger {
  ArcMerger(const PlanarDiagram& d) : uf(d.arc_count()), tail(d.arc_count()), head(d.arc_count()) {
    for (int a = 0; a < d.arc_count(); ++a) {
      tail[a] = d.arc_tail(a);
      head[a] = d.arc_head(a);
    }
  }
  UnionFind uf;
  std::vector<Dart> tail, head;
  int new_free_loops = 0;

  // connect the free head end of a's chain to the free tail end of b's chain
  void join_oriented(int a, int b) {
    int ra = uf.find(a), rb = uf.find(b);
    if (ra == rb) {
      ++new_free_loops;
      return;
    }
    Dart t = tail[ra], h = head[rb];
    uf.unite(ra, rb);
    int r = uf.find(ra);
    tail[r] = t;
    head[r] = h;
  }
  void join_unoriented(int a, int b) {
    int ra = uf.find(a), rb = uf.find(b);
    if (ra == rb)
      ++new_free_loops;
    else
      uf.unite(ra, rb);
  }
};

bool find_kink(const std::vector<std::array<int, 4>>& slots, int& kx, int& ks) {
  for (size_t x = 0; x < slots.size(); ++x)
    for (int s = 0; s < 4; ++s)
      if (slots[x][s] == slots[x][(s + 1) % 4]) {
        kx = static_cast<int>(x);
        ks = s;
        return true;
      }
  return false;
}

}  // namespace

PlanarDiagram PlanarDiagram::smoothed(int x0, SmoothMode mode) const {
  const int c = crossing_count();
  const auto& cr = crossings_[x0];
  int over_out = cr.over_in == 1 ? 3 : 1;

  ArcMerger merger(*this);
  bool oriented = mode == SmoothMode::Zero;
  if (oriented) {
    // in -> out along each strand: c(D0) = c(D) - 1 and orientations survive
    merger.join_oriented(cr.arc[0], cr.arc[over_out]);
    merger.join_oriented(cr.arc[cr.over_in], cr.arc[2]);
  } else if (cr.over_in == 1) {
    merger.join_unoriented(cr.arc[0], cr.arc[1]);
    merger.join_unoriented(cr.arc[2], cr.arc[3]);
  } else {
    merger.join_unoriented(cr.arc[0], cr.arc[3]);
    merger.join_unoriented(cr.arc[1], cr.arc[2]);
  }

  std::vector<std::array<int, 4>> slots;
  slots.reserve(c > 0 ? c - 1 : 0);
  std::vector<int> old_index;  // original crossing index per surviving row
  for (int x = 0; x < c; ++x) {
    if (x == x0) continue;
    std::array<int, 4> t{};
    for (int s = 0; s < 4; ++s) t[s] = merger.uf.find(crossings_[x].arc[s]);
    slots.push_back(t);
    old_index.push_back(x);
  }
  int loops = free_loops_ + merger.new_free_loops;

  if (mode == SmoothMode::Infinity) {
    // drop Reidemeister-I kinks produced by the resolution
    int kx, ks;
    while (!slots.empty() && find_kink(slots, kx, ks)) {
      auto t = slots[static_cast<size_t>(kx)];
      int keep_a = t[(ks + 2) % 4], keep_b = t[(ks + 3) % 4];
      slots.erase(slots.begin() + kx);
      old_index.erase(old_index.begin() + kx);
      if (keep_a == keep_b) {
        ++loops;
      } else {
        for (auto& u : slots)
          for (int& a : u)
            if (a == keep_a) a = keep_b;
      }
    }
    return from_slots(slots, {}, loops);
  }

  // oriented smoothing: pass the inherited tail darts, reindexed
  std::vector<int> new_of_old(c, -1);
  for (size_t i = 0; i < old_index.size(); ++i) new_of_old[old_index[i]] = static_cast<int>(i);
  std::map<int, Dart> hints;
  for (size_t i = 0; i < slots.size(); ++i)
    for (int s = 0; s < 4; ++s) {
      int rep = slots[i][s];
      Dart t = merger.tail[merger.uf.find(rep)];
      if (t.crossing == x0) continue;  // cannot happen for oriented joins; guard anyway
      t.crossing = new_of_old[t.crossing];
      hints[rep] = t;
    }
  return from_slots(slots, hints, loops);
}

PdCode PlanarDiagram::to_pd() const {
  if (free_loops_ > 0 && crossing_count() > 0)
    fail(Errc::DisconnectedTrace, "cannot serialize a diagram with free loops to PD");
  PdCode pd;
  if (crossing_count() == 0) return pd;
  std::vector<int> label(arc_count_, 0);
  int next = 1;
  for (const auto& comp : component_arcs_)
    for (int a : comp) label[a] = next++;
  for (const auto& cr : crossings_) {
    std::array<int, 4> t{};
    for (int s = 0; s < 4; ++s) t[s] = label[cr.arc[s]];
    pd.crossings.push_back(t);
  }
  return canonicalize_pd(pd);
}

std::string PlanarDiagram::canonical_key() const {
  std::string key = "L" + std::to_string(free_loops_) + ";";
  if (crossing_count() == 0) return key;
  std::vector<int> label(arc_count_, 0);
  int next = 1;
  for (const auto& comp : component_arcs_)
    for (int a : comp) label[a] = next++;
  std::vector<std::string> rows;
  for (const auto& cr : crossings_) {
    std::string r;
    for (int s = 0; s < 4; ++s) r += std::to_string(label[cr.arc[s]]) + (s < 3 ? "," : "");
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  for (auto& r : rows) key += r + ";";
  return key;
}

bool is_alternating(const PlanarDiagram& d) {
  for (int a = 0; a < d.arc_count(); ++a) {
    bool head_over = d.arc_head(a).slot != 0;
    bool tail_over = d.arc_tail(a).slot != 2;
    if (head_over == tail_over) return false;
  }
  return true;
}

bool is_positive(const PlanarDiagram& d) {
  for (const auto& cr : d.crossings())
    if (cr.sign < 0) return false;
  return true;
}

bool is_reduced(const PlanarDiagram& d) {
  for (int x = 0; x < d.crossing_count(); ++x)
    if (d.face_at_corner(x, 0) == d.face_at_corner(x, 2) ||
        d.face_at_corner(x, 1) == d.face_at_corner(x, 3))
      return false;
  return true;
}

SpecialAlternating is_special_alternating(const PlanarDiagram& d) {
  if (!is_alternating(d)) return SpecialAlternating::No;
  if (is_positive(d)) return SpecialAlternating::AsIs;
  if (is_positive(d.mirrored())) return SpecialAlternating::AsMirror;
  return SpecialAlternating::No;
}

SeifertData seifert_data(const PlanarDiagram& d) {
  SeifertData out;
  const int c = d.crossing_count();
  if (c == 0) {
    out.circles = d.free_loops();
    out.genus_upper_bound = 0;
    out.exact = true;
    return out;
  }
  UnionFind uf(d.arc_count());
  for (const auto& cr : d.crossings()) {
    int over_out = cr.over_in == 1 ? 3 : 1;
    uf.unite(cr.arc[0], cr.arc[over_out]);
    uf.unite(cr.arc[cr.over_in], cr.arc[2]);
  }
  out.circles = uf.groups + d.free_loops();
  int twice_genus = c - out.circles + 1;
  if (d.is_knot() && twice_genus % 2 != 0)
    fail(Errc::DisconnectedTrace, "Seifert parity check failed");
  out.genus_upper_bound = twice_genus / 2;
  out.exact = is_alternating(d) || is_positive(d);
  return out;
}

TaitGraph tait_graph(const PlanarDiagram& d, int color) {
  if (!d.graph_connected() && d.crossing_count() > 0)
    fail(Errc::DisconnectedInput, "Tait graph needs a connected diagram");
  TaitGraph g;
  g.color = color;
  std::map<int, int> vertex_of;
  for (int f = 0; f < d.face_count(); ++f)
    if (d.face_color(f) == color) {
      vertex_of[f] = static_cast<int>(g.vertex_faces.size());
      g.vertex_faces.push_back(f);
    }
  if (d.crossing_count() == 0) {
    if (g.vertex_faces.empty()) g.vertex_faces.push_back(0);  // single shaded disk
    return g;
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    int parity = d.face_color(d.face_at_corner(x, 0)) == color ? 0 : 1;
    int f1 = d.face_at_corner(x, parity);
    int f2 = d.face_at_corner(x, parity + 2);
    TaitGraph::Edge e;
    e.u = vertex_of.at(f1);
    e.v = vertex_of.at(f2);
    e.crossing = x;
    e.corner_parity = parity;
    g.edges.push_back(e);
  }
  return g;
}

int TaitGraph::vertex_of_face(int face) const {
  for (size_t i = 0; i < vertex_faces.size(); ++i)
    if (vertex_faces[i] == face) return static_cast<int>(i);
  return -1;
}

Integer tait_spanning_trees(const TaitGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (const auto& e : g.edges) edges.emplace_back(e.u, e.v);
  return spanning_tree_count(static_cast<int>(g.vertex_faces.size()), edges);
}

}  // namespace knotcert
