#include "knotcert/gauss.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "knotcert/errors.hpp"

namespace knotcert {

GaussDiagram gauss_of(const PlanarDiagram& d, int basepoint_arc) {
  if (!d.is_knot()) fail(Errc::NotAKnot, "Gauss diagram needs a knot diagram");
  GaussDiagram g;
  const int c = d.crossing_count();
  if (c == 0) return g;
  const auto& walk = d.component_arcs()[0];
  int offset = 0;
  for (int i = 0; i < 2 * c; ++i)
    if (walk[i] == basepoint_arc) {
      offset = i;
      break;
    }

  std::vector<int> over_pos(c, -1), under_pos(c, -1);
  for (int i = 0; i < 2 * c; ++i) {
    int a = walk[(offset + i) % (2 * c)];
    Dart h = d.arc_head(a);  // passage at position i
    if (h.slot == 0)
      under_pos[h.crossing] = i;
    else
      over_pos[h.crossing] = i;
  }
  for (int x = 0; x < c; ++x)
    g.arrows.push_back({over_pos[x], under_pos[x], d.crossing(x).sign});
  return g;
}

GaussDiagram reversed(const GaussDiagram& g) {
  GaussDiagram out;
  for (const auto& a : g.arrows) out.arrows.push_back({a.head, a.tail, -a.sign});
  return out;
}

namespace {

// structural encoding of a based diagram with k chords on endpoints 0..2k-1:
// partner of each endpoint, head flags, chord index in order of first
// appearance, and per-chord direction/sign requirements
struct PatternCode {
  int k = 0;
  int partner[8] = {};
  bool head[8] = {};
  bool check_head[8] = {};
  int chord_of[8] = {};
  int sign_req[4] = {};  // by first-appearance chord index; 0 = free
};

PatternCode encode_pattern(const WeakGaussDiagram& w) {
  PatternCode pc;
  pc.k = w.size();
  const int m = 2 * pc.k;
  int chord_at[8];
  for (int i = 0; i < m; ++i) chord_at[i] = -1;
  for (int ci = 0; ci < pc.k; ++ci) {
    const auto& ch = w.chords[ci];
    chord_at[ch.a] = ci;
    chord_at[ch.b] = ci;
  }
  int next = 0;
  int order[4] = {-1, -1, -1, -1};
  for (int i = 0; i < m; ++i) {
    int ci = chord_at[i];
    if (ci < 0) fail(Errc::MalformedToken, "pattern endpoints must cover 0..2k-1");
    if (order[ci] < 0) order[ci] = next++;
    const auto& ch = w.chords[ci];
    pc.partner[i] = ch.a == i ? ch.b : ch.a;
    pc.head[i] = ch.directed && ch.b == i;
    pc.check_head[i] = ch.directed;
    pc.chord_of[i] = order[ci];
    pc.sign_req[order[ci]] = ch.sign;
  }
  return pc;
}

struct EndpointRec {
  int pos;
  int local;  // index of the arrow within the subset
  bool head;
};

}  // namespace

long long pairing(const PatternTerm& term, const GaussDiagram& g) {
  PatternCombination combo{term};
  return pairing(combo, g);
}

long long pairing(const PatternCombination& combo, const GaussDiagram& g) {
  const int c = g.size();
  long long total = 0;

  // group terms by chord count so each subset size is enumerated once
  std::vector<int> sizes;
  for (const auto& term : combo) {
    int k = term.pattern.size();
    if (std::find(sizes.begin(), sizes.end(), k) == sizes.end()) sizes.push_back(k);
  }

  for (int k : sizes) {
    if (k < 1 || k > 4) fail(Errc::ResourceLimit, "pattern size out of supported range 1..4");
    if (k > c) continue;
    std::vector<PatternCode> codes;
    std::vector<long long> coeffs;
    for (const auto& term : combo)
      if (term.pattern.size() == k) {
        codes.push_back(encode_pattern(term.pattern));
        coeffs.push_back(term.coefficient);
      }

    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    const int m = 2 * k;
    while (true) {
      EndpointRec e[8];
      int sign_product = 1;
      for (int i = 0; i < k; ++i) {
        const auto& a = g.arrows[idx[i]];
        e[2 * i] = {a.tail, i, false};
        e[2 * i + 1] = {a.head, i, true};
        sign_product *= a.sign;
      }
      std::sort(e, e + m, [](const EndpointRec& x, const EndpointRec& y) { return x.pos < y.pos; });

      int order_of_local[4] = {-1, -1, -1, -1};
      int partner[8];
      int arrow_of_order[4] = {};
      int next = 0;
      int pos_of_local_end[4][2];
      for (int i = 0; i < m; ++i) {
        int l = e[i].local;
        if (order_of_local[l] < 0) {
          order_of_local[l] = next++;
          arrow_of_order[order_of_local[l]] = idx[l];
          pos_of_local_end[l][0] = i;
        } else {
          pos_of_local_end[l][1] = i;
        }
      }
      for (int l = 0; l < k; ++l) {
        partner[pos_of_local_end[l][0]] = pos_of_local_end[l][1];
        partner[pos_of_local_end[l][1]] = pos_of_local_end[l][0];
      }

      for (size_t t = 0; t < codes.size(); ++t) {
        const PatternCode& pc = codes[t];
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
          if (partner[i] != pc.partner[i])
            ok = false;
          else if (pc.check_head[i] && e[i].head != pc.head[i])
            ok = false;
        }
        // matching partner structure aligns first-appearance chord order, so
        // pattern chord o corresponds to the subset arrow arrow_of_order[o]
        for (int o = 0; o < k && ok; ++o) {
          int req = pc.sign_req[o];
          if (req != 0 && g.arrows[arrow_of_order[o]].sign != req) ok = false;
        }
        if (ok) total += coeffs[t] * sign_product;
      }

      // next combination
      int i = k - 1;
      while (i >= 0 && idx[i] == c - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return total;
}

bool doubled_curve_connected(const ChordDiagram& c) {
  const int k = static_cast<int>(c.size());
  if (k == 0) return false;
  const int m = 2 * k;
  std::vector<int> partner(m, -1);
  for (auto& [a, b] : c) {
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<bool> visited(m, false);
  int pos = 0, steps = 0;
  do {
    if (visited[pos]) return false;
    visited[pos] = true;
    ++steps;
    pos = (partner[pos] + 1) % m;
  } while (pos != 0);
  return steps == m;
}

WeakGaussDiagram direct_chords(const ChordDiagram& c) {
  const int k = static_cast<int>(c.size());
  const int m = 2 * k;
  std::vector<int> partner(m, -1), chord_at(m, -1);
  for (int ci = 0; ci < k; ++ci) {
    auto [a, b] = c[ci];
    partner[a] = b;
    partner[b] = a;
    chord_at[a] = ci;
    chord_at[b] = ci;
  }
  WeakGaussDiagram w;
  w.chords.assign(k, PatternChord{});
  std::vector<bool> directed(k, false), visited(m, false);
  int pos = 0, steps = 0;
  do {
    if (visited[pos]) fail(Errc::DisconnectedInput, "doubled curve is not connected");
    visited[pos] = true;
    ++steps;
    int ci = chord_at[pos];
    if (!directed[ci]) {
      directed[ci] = true;
      w.chords[ci] = PatternChord{pos, partner[pos], true, 0};
    }
    pos = (partner[pos] + 1) % m;
  } while (pos != 0);
  if (steps != m) fail(Errc::DisconnectedInput, "doubled curve is not connected");
  return w;
}

namespace {

void enumerate_matchings(int m, std::vector<int>& taken, ChordDiagram& current,
                         std::vector<ChordDiagram>& out) {
  int first = -1;
  for (int i = 0; i < m; ++i)
    if (!taken[i]) {
      first = i;
      break;
    }
  if (first < 0) {
    out.push_back(current);
    return;
  }
  taken[first] = 1;
  for (int j = first + 1; j < m; ++j) {
    if (taken[j]) continue;
    taken[j] = 1;
    current.emplace_back(first, j);
    enumerate_matchings(m, taken, current, out);
    current.pop_back();
    taken[j] = 0;
  }
  taken[first] = 0;
}

bool interlacement_connected(const ChordDiagram& c) {
  const int k = static_cast<int>(c.size());
  if (k == 0) return false;
  UnionFind uf(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      auto [a, b] = c[i];
      if (a > b) std::swap(a, b);
      auto [x, y] = c[j];
      bool x_in = a < x && x < b;
      bool y_in = a < y && y < b;
      if (x_in != y_in) uf.unite(i, j);
    }
  return uf.groups == 1;
}

}  // namespace

std::vector<ChordDiagram> connected_chord_diagrams(int chords, int max_chords) {
  if (chords < 1) fail(Errc::MalformedToken, "chord count must be >= 1");
  if (chords > max_chords)
    fail(Errc::ResourceLimit, "chord diagrams limited to " + std::to_string(max_chords));
  std::vector<ChordDiagram> all;
  std::vector<int> taken(2 * chords, 0);
  ChordDiagram current;
  enumerate_matchings(2 * chords, taken, current, all);
  std::vector<ChordDiagram> out;
  for (auto& c : all)
    if (interlacement_connected(c)) out.push_back(std::move(c));
  return out;
}

const PatternCombination& conway_pattern(int chords) {
  static std::map<int, PatternCombination> cache;
  auto it = cache.find(chords);
  if (it != cache.end()) return it->second;
  PatternCombination combo;
  for (const auto& c : connected_chord_diagrams(chords))
    combo.push_back(PatternTerm{1, direct_chords(c)});
  return cache.emplace(chords, std::move(combo)).first->second;
}

const PatternCombination& a2_pattern() { return conway_pattern(2); }

const PatternCombination& a2_pattern_mirror() {
  static PatternCombination combo = [] {
    PatternCombination out;
    for (const auto& term : a2_pattern()) {
      PatternTerm t = term;
      for (auto& ch : t.pattern.chords)
        if (ch.directed) std::swap(ch.a, ch.b);
      out.push_back(t);
    }
    return out;
  }();
  return combo;
}

const PatternCombination& v3_pattern() {
  static PatternCombination combo = [] {
    PatternCombination out;
    auto arrow = [](int tail, int head) { return PatternChord{tail, head, true, 0}; };
    auto chord = [](int a, int b) { return PatternChord{a, b, false, 0}; };
    // the four unsigned degree-3 terms
    out.push_back({1, {{arrow(2, 5), arrow(3, 0), chord(1, 4)}}});
    out.push_back({1, {{arrow(2, 5), arrow(4, 0), arrow(3, 1)}}});
    out.push_back({1, {{arrow(1, 5), arrow(3, 0), arrow(2, 4)}}});
    out.push_back({1, {{arrow(3, 5), arrow(4, 1), arrow(2, 0)}}});
    // the signed degree-2 terms: (+,+) minus (-,-), arrows reversed relative
    // to the basepoint-tail normal form
    auto signed_arrow = [](int tail, int head, int s) { return PatternChord{tail, head, true, s}; };
    out.push_back({1, {{signed_arrow(1, 3, +1), signed_arrow(2, 0, +1)}}});
    out.push_back({-1, {{signed_arrow(1, 3, -1), signed_arrow(2, 0, -1)}}});
    return out;
  }();
  return combo;
}

std::string patterns_to_json(const PatternCombination& combo) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& term : combo) {
    nlohmann::json t;
    t["coefficient"] = term.coefficient;
    nlohmann::json chords = nlohmann::json::array();
    for (const auto& ch : term.pattern.chords) {
      nlohmann::json c;
      c["positions"] = {ch.a, ch.b};
      c["directed"] = ch.directed;
      c["sign"] = ch.sign;
      chords.push_back(c);
    }
    t["chords"] = chords;
    arr.push_back(t);
  }
  return arr.dump();
}

long long a2n_gauss(const GaussDiagram& g, int n, int max_n) {
  if (n < 1) fail(Errc::MalformedToken, "a2n needs n >= 1");
  if (n > max_n)
    fail(Errc::ResourceLimit, "a_{2n} supported up to n = " + std::to_string(max_n));
  return pairing(conway_pattern(2 * n), g);
}

long long v3_gauss(const GaussDiagram& g) { return pairing(v3_pattern(), g); }

}  // namespace knotcert
