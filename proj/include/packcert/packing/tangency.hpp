#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "packcert/packing/packing.hpp"

namespace packcert::packing {

enum class Side { Left, Right, Upper, Lower };

/// A placed disc, possibly translated.
struct Anchor {
  int id = 0;
  Offset offset;
};

/// Places disc `id` of class `radius` tangent to both anchors. Left/Right
/// are taken walking from the first anchor to the second; Upper/Lower pick
/// the candidate with the larger/smaller y.
struct SolveRule {
  int id = 0;
  std::string radius;
  Anchor first;
  Anchor second;
  Side pick = Side::Left;
};

class TangencyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Applies the rules in order (later rules may anchor on earlier results).
/// Centers are closed-form expressions; each solved tangency becomes a
/// declared contact. Throws TangencyError("inconsistent tangency") when the
/// two anchor circles cannot meet, and TangencyError("ambiguous side rule")
/// when Upper/Lower cannot be decided.
PeriodicPacking complete_tangencies(const PeriodicPacking& partial,
                                    const std::vector<SolveRule>& rules,
                                    int max_depth = exactnum::kDefaultMaxDepth);

Side parse_side(const std::string& text);
const char* to_string(Side side);

}  // namespace packcert::packing
