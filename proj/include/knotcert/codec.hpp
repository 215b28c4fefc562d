#ifndef KNOTCERT_CODEC_HPP
#define KNOTCERT_CODEC_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "knotcert/numeric.hpp"

namespace knotcert {

// PD code: one 4-tuple of arc labels per crossing, listed counterclockwise
// starting from the incoming under-strand. Arc labels are 1..2c after
// canonicalization; the parser accepts gaps and renumbers.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  bool operator==(const PdCode& o) const { return crossings == o.crossings; }
};

struct GaussToken {
  bool over = false;
  int id = 0;    // crossing id, 1-based
  int sign = 0;  // +1 / -1
  bool operator==(const GaussToken& o) const {
    return over == o.over && id == o.id && sign == o.sign;
  }
};

struct GaussCode {
  std::vector<GaussToken> tokens;
  int crossing_count() const { return static_cast<int>(tokens.size()) / 2; }
  bool operator==(const GaussCode& o) const { return tokens == o.tokens; }
};

struct CorpusRecord {
  std::string name;
  PdCode pd;
  std::map<std::string, long long> expected;  // optional per-invariant regression values
  std::map<std::string, std::string> tags;    // optional metadata (family, mirror, ...)
};

// Orientation data resolved from a PD code: which over slot is the incoming
// over-strand, the arc successor map, and the component decomposition.
struct PdOrientation {
  std::vector<int> over_in;                   // per crossing, 1 or 3
  std::vector<int> successor;                 // successor[a] for arc a, 1-based (index 0 unused)
  std::vector<std::vector<int>> components;   // arcs of each component in trace order
  std::vector<int> sign;                      // per crossing, +1 / -1
};

// grammar: `X[a,b,c,d]` entries separated by whitespace
PdCode parse_pd(const std::string& text);
std::string serialize_pd(const PdCode& pd);
// Relabel arcs 1..2c along the trace and sort crossings; fixed point of itself.
PdCode canonicalize_pd(const PdCode& pd);

PdOrientation resolve_orientation(const PdCode& pd);

GaussCode pd_to_gauss(const PdCode& pd);
PdCode gauss_to_pd(const GaussCode& gc);
GaussCode parse_gauss(const std::string& text);
std::string serialize_gauss(const GaussCode& gc);

// DT code, even-label sequence convention; knots only. A positive entry means
// the even-numbered passage runs over. Among the planar realizations the
// lexicographically first over-slot assignment is returned, so the result is
// deterministic but fixed only up to mirror image.
PdCode parse_dt(const std::string& text, int max_crossings = 20);
std::string serialize_dt(const PdCode& pd);

using CorpusRecordFn = std::function<void(CorpusRecord&&)>;
using CorpusErrorFn = std::function<void(int line_number, const std::string& message)>;

// JSON-lines corpus; malformed lines are reported and skipped.
void read_corpus(std::istream& in, const CorpusRecordFn& on_record, const CorpusErrorFn& on_error);
std::vector<CorpusRecord> read_corpus_file(const std::string& path,
                                           const CorpusErrorFn& on_error = nullptr);
std::string corpus_record_to_json(const CorpusRecord& rec);

}  // namespace knotcert

#endif
