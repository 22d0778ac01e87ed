#ifndef BOIJ_VALIDATION_HPP
#define BOIJ_VALIDATION_HPP

#include <string>
#include <vector>

namespace boij {

enum class ViolationKind {
  Shape,        // bad n / vars / window / chi length / out-of-range index
  Positivity,   // stored entry <= 0
  Euler,        // alternating column sum differs from chi(j)
  Tail,         // chi tail sign or leading coefficient
  InteriorRow,  // rows 1..n-1 touching or leaving the window
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int i = 0;
  int j = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  /// One line per violation, `<kind> (i,j): message`.
  std::string str() const;
};

}  // namespace boij

#endif  // BOIJ_VALIDATION_HPP
