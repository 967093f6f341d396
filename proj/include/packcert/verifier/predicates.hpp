#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packcert/verifier/contact_graph.hpp"

namespace packcert::verifier {

using exactnum::Expression;
using exactnum::Interval;

enum class Answer { Yes, No, Inconclusive };
const char* to_string(Answer a);

struct CompactnessVerdict {
  Answer compact = Answer::Inconclusive;
  /// First non-triangular face, present iff compact == No.
  std::optional<Face> witness;
};

CompactnessVerdict check_compact(const ContactGraph& g);

struct HoleWitness {
  Face face;
  std::string description;
  /// Enclosure of the largest disc known to fit; its lower end is >= the probe.
  Interval radius;
  /// Center of the certified probe disc, for non-triangular holes.
  std::optional<std::pair<Interval, Interval>> center;
};

struct SaturationVerdict {
  Answer saturated = Answer::Inconclusive;
  std::optional<HoleWitness> witness;
  std::vector<Face> inconclusive_faces;
};

/// Radius class of smallest certified value among the classes in use.
Expression smallest_radius(const PeriodicPacking& p, int max_depth = exactnum::kDefaultMaxDepth);

/// A disc of radius `probe` fits into a triangular hole iff the hole's
/// inner Soddy radius is >= probe. Other holes are estimated numerically and
/// either certified insertable or reported as inconclusive.
SaturationVerdict check_saturated(const PeriodicPacking& p, const ContactGraph& g,
                                  const Expression& probe, const CertifyOptions& options = {});

enum class Order { FirstDenser, SecondDenser, Inconclusive };
const char* to_string(Order o);

struct DensityComparison {
  Order order = Order::Inconclusive;
  Interval first;
  Interval second;
  int depth = 0;
};

DensityComparison compare_densities(const PeriodicPacking& first, const PeriodicPacking& second,
                                    int max_depth = exactnum::kDefaultMaxDepth);

}  // namespace packcert::verifier
