#ifndef KNOTCERT_GAUSS_HPP
#define KNOTCERT_GAUSS_HPP

#include <string>
#include <utility>
#include <vector>

#include "knotcert/diagram.hpp"

namespace knotcert {

// One signed arrow per crossing, drawn from the over-passage position to the
// under-passage position on the based circle (positions 0..2n-1, basepoint
// just before position 0).
struct GaussArrow {
  int tail = 0;
  int head = 0;
  int sign = +1;
};

struct GaussDiagram {
  std::vector<GaussArrow> arrows;
  int size() const { return static_cast<int>(arrows.size()); }
};

// basepoint sits on the given arc, just before its head passage
GaussDiagram gauss_of(const PlanarDiagram& d, int basepoint_arc = 0);
GaussDiagram reversed(const GaussDiagram& g);  // all arrows and signs reversed

// A chord of a weak Gauss diagram: endpoints a,b in 0..2k-1; when directed,
// a is the tail. sign 0 matches either sign.
struct PatternChord {
  int a = 0;
  int b = 0;
  bool directed = false;
  int sign = 0;
};

struct WeakGaussDiagram {
  std::vector<PatternChord> chords;
  int size() const { return static_cast<int>(chords.size()); }
};

struct PatternTerm {
  long long coefficient = 1;
  WeakGaussDiagram pattern;
};
using PatternCombination = std::vector<PatternTerm>;

// <combination, G>: signed count of matching sub-diagrams, where each matched
// sub-diagram contributes the product of all its arrows' signs.
long long pairing(const PatternCombination& combo, const GaussDiagram& g);
long long pairing(const PatternTerm& term, const GaussDiagram& g);

// chord diagrams on a based circle: perfect matchings of 0..2k-1
using ChordDiagram = std::vector<std::pair<int, int>>;

// all based chord diagrams with `chords` chords whose doubled curve is
// connected (decided via interlacement-graph connectivity)
std::vector<ChordDiagram> connected_chord_diagrams(int chords, int max_chords = 8);

// literal doubled-curve walk; test oracle for the interlacement criterion
bool doubled_curve_connected(const ChordDiagram& c);

// direction assignment by the doubling walk from the basepoint
WeakGaussDiagram direct_chords(const ChordDiagram& c);

// built-in pattern tables
const PatternCombination& a2_pattern();         // crossing pair, tails at the basepoint
const PatternCombination& a2_pattern_mirror();  // same with arrows reversed
const PatternCombination& conway_pattern(int chords);  // sum of A_C over connected C
const PatternCombination& v3_pattern();                // degree-3 formula C_A + C_B

std::string patterns_to_json(const PatternCombination& combo);

// Conway coefficient a_{2n} via the connected-diagram formula; n <= max_n.
long long a2n_gauss(const GaussDiagram& g, int n, int max_n = 2);
// the primitive degree-3 invariant, already scaled: returns 4*v3
long long v3_gauss(const GaussDiagram& g);

}  // namespace knotcert

#endif
