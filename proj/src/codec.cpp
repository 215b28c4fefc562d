#include "knotcert/codec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "knotcert/errors.hpp"

namespace knotcert {

namespace {

struct Occurrence {
  int crossing;
  int slot;
};

std::map<int, std::vector<Occurrence>> label_occurrences(const PdCode& pd) {
  std::map<int, std::vector<Occurrence>> occ;
  for (int x = 0; x < pd.crossing_count(); ++x)
    for (int s = 0; s < 4; ++s) occ[pd.crossings[x][s]].push_back({x, s});
  return occ;
}

void validate_labels(const PdCode& pd) {
  const int c = pd.crossing_count();
  auto occ = label_occurrences(pd);
  if (static_cast<int>(occ.size()) != 2 * c)
    fail(Errc::LabelCountError, "expected " + std::to_string(2 * c) + " distinct arc labels, got " +
                                    std::to_string(occ.size()));
  for (auto& [label, v] : occ) {
    if (label < 1) fail(Errc::LabelCountError, "arc label " + std::to_string(label) + " < 1");
    if (v.size() != 2)
      fail(Errc::LabelCountError, "arc label " + std::to_string(label) + " used " +
                                      std::to_string(v.size()) + " times, expected 2");
  }
}

// compress labels to 1..2c preserving order
PdCode renumber_gaps(PdCode pd) {
  std::set<int> labels;
  for (auto& t : pd.crossings)
    for (int v : t) labels.insert(v);
  std::map<int, int> remap;
  int next = 1;
  for (int v : labels) remap[v] = next++;
  for (auto& t : pd.crossings)
    for (int& v : t) v = remap[v];
  return pd;
}

}  // namespace

PdCode parse_pd(const std::string& text) {
  PdCode pd;
  size_t i = 0;
  const size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < n) {
    size_t token_at = i;
    if (text[i] != 'X')
      fail(Errc::MalformedToken, "expected 'X' at position " + std::to_string(token_at));
    ++i;
    if (i >= n || text[i] != '[')
      fail(Errc::MalformedToken, "expected '[' at position " + std::to_string(i));
    ++i;
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start)
        fail(Errc::MalformedToken, "expected arc label at position " + std::to_string(start));
      tuple[k] = std::stoi(text.substr(start, i - start));
      if (tuple[k] < 1)
        fail(Errc::MalformedToken, "arc label must be >= 1 at position " + std::to_string(start));
      skip_ws();
      if (k < 3) {
        if (i >= n || text[i] != ',')
          fail(Errc::MalformedToken, "expected ',' at position " + std::to_string(i));
        ++i;
      }
    }
    if (i >= n || text[i] != ']')
      fail(Errc::MalformedToken, "expected ']' at position " + std::to_string(i));
    ++i;
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      fail(Errc::MalformedToken, "expected whitespace after tuple at position " + std::to_string(i));
    pd.crossings.push_back(tuple);
    skip_ws();
  }
  pd = renumber_gaps(std::move(pd));
  validate_labels(pd);
  resolve_orientation(pd);  // throws DisconnectedTrace if the trace does not close up
  return pd;
}

PdOrientation resolve_orientation(const PdCode& pd) {
  const int c = pd.crossing_count();
  validate_labels(pd);
  PdOrientation out;
  out.over_in.assign(c, 0);
  out.sign.assign(c, 0);
  auto occ = label_occurrences(pd);

  // role of a slot occurrence: +1 incoming, -1 outgoing, 0 unknown
  auto role = [&](const Occurrence& o) -> int {
    switch (o.slot) {
      case 0: return +1;
      case 2: return -1;
      case 1: return out.over_in[o.crossing] == 0 ? 0 : (out.over_in[o.crossing] == 1 ? +1 : -1);
      default: return out.over_in[o.crossing] == 0 ? 0 : (out.over_in[o.crossing] == 3 ? +1 : -1);
    }
  };

  // propagate "each arc has one incoming and one outgoing end"
  std::vector<int> queue;
  for (int a = 1; a <= 2 * c; ++a) queue.push_back(a);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int a = 1; a <= 2 * c; ++a) {
      auto& v = occ[a];
      int r0 = role(v[0]), r1 = role(v[1]);
      if (r0 != 0 && r1 != 0) {
        if (r0 == r1)
          fail(Errc::DisconnectedTrace, "arc " + std::to_string(a) +
                                            " cannot be oriented consistently");
        continue;
      }
      if (r0 == 0 && r1 == 0) continue;
      const Occurrence& known = r0 != 0 ? v[0] : v[1];
      const Occurrence& open = r0 != 0 ? v[1] : v[0];
      int need = -role(known);
      int oi = (open.slot == 1) ? (need > 0 ? 1 : 3) : (need > 0 ? 3 : 1);
      out.over_in[open.crossing] = oi;
      progress = true;
    }
  }
  // over-only components (cannot occur for knots): default choice
  for (int x = 0; x < c; ++x)
    if (out.over_in[x] == 0) out.over_in[x] = 1;
  for (int a = 1; a <= 2 * c; ++a) {
    auto& v = occ[a];
    if (role(v[0]) == role(v[1]))
      fail(Errc::DisconnectedTrace, "arc " + std::to_string(a) + " does not close up");
  }

  // successor: outgoing arc of the crossing each arc enters
  out.successor.assign(2 * c + 1, 0);
  for (int a = 1; a <= 2 * c; ++a) {
    auto& v = occ[a];
    const Occurrence& in = role(v[0]) > 0 ? v[0] : v[1];
    const auto& t = pd.crossings[in.crossing];
    if (in.slot == 0)
      out.successor[a] = t[2];
    else
      out.successor[a] = t[out.over_in[in.crossing] == 1 ? 3 : 1];
  }

  std::vector<bool> seen(2 * c + 1, false);
  for (int a = 1; a <= 2 * c; ++a) {
    if (seen[a]) continue;
    std::vector<int> comp;
    int cur = a;
    while (!seen[cur]) {
      seen[cur] = true;
      comp.push_back(cur);
      cur = out.successor[cur];
    }
    if (cur != a) fail(Errc::DisconnectedTrace, "arc trace does not return to start");
    out.components.push_back(std::move(comp));
  }

  for (int x = 0; x < c; ++x) out.sign[x] = out.over_in[x] == 1 ? +1 : -1;
  return out;
}

PdCode canonicalize_pd(const PdCode& pd) {
  const int c = pd.crossing_count();
  if (c == 0) return pd;
  PdOrientation orient = resolve_orientation(pd);

  // relabel arcs 1..2c in trace order; components ordered by smallest old label,
  // each starting at its smallest old label
  std::map<int, int> remap;
  int next = 1;
  std::vector<std::vector<int>> comps = orient.components;
  for (auto& comp : comps) {
    auto it = std::min_element(comp.begin(), comp.end());
    std::rotate(comp.begin(), it, comp.end());
  }
  std::sort(comps.begin(), comps.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  for (auto& comp : comps)
    for (int a : comp) remap[a] = next++;

  PdCode out = pd;
  for (auto& t : out.crossings)
    for (int& v : t) v = remap[v];
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const std::array<int, 4>& a, const std::array<int, 4>& b) { return a[0] < b[0]; });
  return out;
}

std::string serialize_pd(const PdCode& pd) {
  PdCode canon = canonicalize_pd(pd);
  std::string out;
  for (int x = 0; x < canon.crossing_count(); ++x) {
    if (x) out += ' ';
    const auto& t = canon.crossings[x];
    out += "X[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
           "," + std::to_string(t[3]) + "]";
  }
  return out;
}

GaussCode pd_to_gauss(const PdCode& pd) {
  const int c = pd.crossing_count();
  GaussCode gc;
  if (c == 0) return gc;
  PdOrientation orient = resolve_orientation(pd);
  if (orient.components.size() != 1)
    fail(Errc::NotAKnot, "diagram has " + std::to_string(orient.components.size()) +
                             " components");
  auto occ = label_occurrences(pd);

  // walk from the arc labeled 1, numbering crossings in first-visit order
  std::vector<int> first_visit(c, 0);
  int next_id = 1;
  int arc = 1;
  for (int step = 0; step < 2 * c; ++step) {
    // incoming occurrence of this arc (a kink arc has one incoming and one
    // outgoing end at the same crossing, so the filter below still picks one)
    const auto& v = occ[arc];
    Occurrence in{-1, -1};
    for (const auto& o : v) {
      if (o.slot == 0 || o.slot == orient.over_in[o.crossing]) {
        in = o;
        break;
      }
    }
    int x = in.crossing;
    if (first_visit[x] == 0) first_visit[x] = next_id++;
    GaussToken tok;
    tok.over = in.slot != 0;
    tok.id = first_visit[x];
    tok.sign = orient.sign[x];
    gc.tokens.push_back(tok);
    arc = orient.successor[arc];
  }
  return gc;
}

PdCode gauss_to_pd(const GaussCode& gc) {
  const int n = static_cast<int>(gc.tokens.size());
  if (n % 2 != 0) fail(Errc::MalformedToken, "odd number of Gauss tokens");
  const int c = n / 2;
  PdCode pd;
  if (c == 0) return pd;

  std::map<int, std::pair<int, int>> pos;  // id -> (over position, under position), 0-based
  std::map<int, std::pair<int, int>> signs;
  for (int p = 0; p < n; ++p) {
    const auto& t = gc.tokens[p];
    auto& pr = pos.emplace(t.id, std::make_pair(-1, -1)).first->second;
    auto& sg = signs.emplace(t.id, std::make_pair(0, 0)).first->second;
    if (t.over) {
      if (pr.first >= 0) fail(Errc::MalformedToken, "crossing " + std::to_string(t.id) + " visited over twice");
      pr.first = p;
      sg.first = t.sign;
    } else {
      if (pr.second >= 0) fail(Errc::MalformedToken, "crossing " + std::to_string(t.id) + " visited under twice");
      pr.second = p;
      sg.second = t.sign;
    }
  }
  if (static_cast<int>(pos.size()) != c)
    fail(Errc::LabelCountError, "expected " + std::to_string(c) + " crossing ids");
  for (auto& [id, pr] : pos) {
    if (pr.first < 0 || pr.second < 0)
      fail(Errc::LabelCountError, "crossing " + std::to_string(id) + " needs one O and one U token");
    auto sg = signs[id];
    if (sg.first != sg.second || sg.first == 0)
      fail(Errc::MalformedToken, "crossing " + std::to_string(id) + " has inconsistent signs");
  }

  // arc p+1 enters walk position p, matching the pd_to_gauss walk from arc 1
  auto entering = [&](int p) { return p + 1; };
  auto leaving = [&](int p) { return (p + 1) % n + 1; };

  for (auto& [id, pr] : pos) {
    int over_pos = pr.first, under_pos = pr.second;
    int sign = signs[id].first;
    std::array<int, 4> t{};
    t[0] = entering(under_pos);
    t[2] = leaving(under_pos);
    int oi = entering(over_pos);
    int oo = leaving(over_pos);
    if (sign > 0) {
      t[1] = oi;
      t[3] = oo;
    } else {
      t[1] = oo;
      t[3] = oi;
    }
    pd.crossings.push_back(t);
  }
  return canonicalize_pd(pd);
}

GaussCode parse_gauss(const std::string& text) {
  GaussCode gc;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
      fail(Errc::MalformedToken, "bad Gauss token '" + tok + "'");
    char last = tok.back();
    if (last != '+' && last != '-') fail(Errc::MalformedToken, "bad Gauss token '" + tok + "'");
    for (size_t i = 1; i + 1 < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        fail(Errc::MalformedToken, "bad Gauss token '" + tok + "'");
    GaussToken g;
    g.over = tok[0] == 'O';
    g.id = std::stoi(tok.substr(1, tok.size() - 2));
    g.sign = last == '+' ? +1 : -1;
    gc.tokens.push_back(g);
  }
  // validate via the same paired checks as gauss_to_pd
  if (!gc.tokens.empty()) gauss_to_pd(gc);
  return gc;
}

std::string serialize_gauss(const GaussCode& gc) {
  std::string out;
  for (size_t i = 0; i < gc.tokens.size(); ++i) {
    if (i) out += ' ';
    const auto& t = gc.tokens[i];
    out += (t.over ? 'O' : 'U');
    out += std::to_string(t.id);
    out += (t.sign > 0 ? '+' : '-');
  }
  return out;
}

namespace {

// face count of a PD candidate via the left-turn walk; no orientation needed
int pd_face_count(const PdCode& pd) {
  const int c = pd.crossing_count();
  auto occ = label_occurrences(pd);
  // dart (x, s): arrival at crossing x via the arc at slot s
  auto dart_id = [&](int x, int s) { return 4 * x + s; };
  std::vector<int> other_end(4 * c, -1);
  for (auto& [label, v] : occ) {
    (void)label;
    other_end[dart_id(v[0].crossing, v[0].slot)] = dart_id(v[1].crossing, v[1].slot);
    other_end[dart_id(v[1].crossing, v[1].slot)] = dart_id(v[0].crossing, v[0].slot);
  }
  std::vector<bool> seen(4 * c, false);
  int faces = 0;
  for (int d0 = 0; d0 < 4 * c; ++d0) {
    if (seen[d0]) continue;
    ++faces;
    int d = d0;
    while (!seen[d]) {
      seen[d] = true;
      int x = d / 4, s = d % 4;
      d = other_end[dart_id(x, (s + 1) % 4)];
    }
  }
  return faces;
}

}  // namespace

PdCode parse_dt(const std::string& text, int max_crossings) {
  std::istringstream in(text);
  std::vector<long> entries;
  long v;
  while (in >> v) entries.push_back(v);
  if (!in.eof()) fail(Errc::MalformedToken, "bad DT entry");
  const int c = static_cast<int>(entries.size());
  if (c == 0) return PdCode{};
  if (c > max_crossings)
    fail(Errc::ResourceLimit, "DT realization supports up to " + std::to_string(max_crossings) +
                                  " crossings");

  std::vector<int> partner_of_odd(c, 0);
  std::vector<bool> even_over(c, false);
  std::set<long> seen_abs;
  for (int i = 0; i < c; ++i) {
    long e = entries[i];
    long a = std::labs(e);
    if (a < 2 || a > 2 * c || a % 2 != 0)
      fail(Errc::MalformedToken, "DT entry " + std::to_string(e) + " out of range");
    if (!seen_abs.insert(a).second)
      fail(Errc::MalformedToken, "DT entry " + std::to_string(a) + " repeated");
    partner_of_odd[i] = static_cast<int>(a);
    even_over[i] = e > 0;
  }

  // passage p (1..2c): odd 2i+1 pairs with partner_of_odd[i]
  auto entering = [&](int p) { return p == 1 ? 2 * c : p - 1; };
  auto leaving = [&](int p) { return p; };

  // search over-in slots; lexicographically first planar assignment wins
  for (unsigned long mask = 0; mask < (1ul << c); ++mask) {
    PdCode pd;
    for (int i = 0; i < c; ++i) {
      int odd_pos = 2 * i + 1;
      int even_pos = partner_of_odd[i];
      int under_pos = even_over[i] ? odd_pos : even_pos;
      int over_pos = even_over[i] ? even_pos : odd_pos;
      std::array<int, 4> t{};
      t[0] = entering(under_pos);
      t[2] = leaving(under_pos);
      int oi = entering(over_pos);
      int oo = leaving(over_pos);
      if (mask & (1ul << i)) {
        t[1] = oo;
        t[3] = oi;
      } else {
        t[1] = oi;
        t[3] = oo;
      }
      pd.crossings.push_back(t);
    }
    if (pd_face_count(pd) == c + 2) return canonicalize_pd(pd);
  }
  fail(Errc::NonPlanarInput, "DT code admits no planar realization");
}

std::string serialize_dt(const PdCode& pd) {
  const int c = pd.crossing_count();
  if (c == 0) return "";
  GaussCode gc = pd_to_gauss(pd);
  // passage p = position p+1; find each crossing's odd/even passage
  std::vector<int> odd_pos(c + 1, 0), even_pos(c + 1, 0);
  std::vector<bool> over_at_even(c + 1, false);
  for (int p = 0; p < 2 * c; ++p) {
    const auto& t = gc.tokens[p];
    int passage = p + 1;
    if (passage % 2 == 1)
      odd_pos[t.id] = passage;
    else {
      even_pos[t.id] = passage;
      over_at_even[t.id] = t.over;
    }
  }
  std::vector<long> out(c, 0);
  for (int id = 1; id <= c; ++id) {
    int i = (odd_pos[id] - 1) / 2;
    out[i] = over_at_even[id] ? even_pos[id] : -even_pos[id];
  }
  std::string s;
  for (int i = 0; i < c; ++i) {
    if (i) s += ' ';
    s += std::to_string(out[i]);
  }
  return s;
}

void read_corpus(std::istream& in, const CorpusRecordFn& on_record, const CorpusErrorFn& on_error) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    try {
      auto j = nlohmann::json::parse(line);
      CorpusRecord rec;
      rec.name = j.at("name").get<std::string>();
      PdCode pd;
      for (const auto& tuple : j.at("pd")) {
        if (tuple.size() != 4) fail(Errc::MalformedJson, "pd tuple arity != 4");
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) t[k] = tuple[k].get<int>();
        pd.crossings.push_back(t);
      }
      validate_labels(pd);
      resolve_orientation(pd);
      rec.pd = pd;
      if (j.contains("expected"))
        for (auto& [k, val] : j["expected"].items()) rec.expected[k] = val.get<long long>();
      if (j.contains("tags"))
        for (auto& [k, val] : j["tags"].items()) rec.tags[k] = val.get<std::string>();
      on_record(std::move(rec));
    } catch (const std::exception& e) {
      if (on_error) on_error(line_number, e.what());
    }
  }
}

std::vector<CorpusRecord> read_corpus_file(const std::string& path, const CorpusErrorFn& on_error) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open corpus file '" + path + "'");
  std::vector<CorpusRecord> out;
  read_corpus(in, [&](CorpusRecord&& r) { out.push_back(std::move(r)); }, on_error);
  return out;
}

std::string corpus_record_to_json(const CorpusRecord& rec) {
  nlohmann::json j;
  j["name"] = rec.name;
  auto pd = nlohmann::json::array();
  for (const auto& t : rec.pd.crossings) pd.push_back({t[0], t[1], t[2], t[3]});
  j["pd"] = pd;
  if (!rec.expected.empty()) {
    nlohmann::json e;
    for (auto& [k, v] : rec.expected) e[k] = v;
    j["expected"] = e;
  }
  if (!rec.tags.empty()) {
    nlohmann::json t;
    for (auto& [k, v] : rec.tags) t[k] = v;
    j["tags"] = t;
  }
  return j.dump();
}

}  // namespace knotcert
