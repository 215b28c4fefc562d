#ifndef KNOTCERT_ERRORS_HPP
#define KNOTCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotcert {

enum class Errc {
  MalformedToken,
  LabelCountError,
  DisconnectedTrace,
  NotAKnot,
  NonPlanarInput,
  ResourceLimit,
  MethodDisagreement,
  NotQuarterInteger,
  ZeroV3,
  HypothesisViolated,
  NotReduced,
  NotAlternating,
  DisconnectedInput,
  DegenerateDenominator,
  LemmaContradiction,
  ViolationFound,
  IoError,
  MalformedJson,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace knotcert

#endif
