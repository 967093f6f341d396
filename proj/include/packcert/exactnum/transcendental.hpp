#pragma once

#include "packcert/exactnum/interval.hpp"

namespace packcert::exactnum {

/// Enclosure of pi with endpoints accurate to about 2^-bits. Below roughly
/// 200 bits this comes from stored decimal bounds; beyond that from a Machin
/// series, memoized per precision.
Interval pi_enclosure(long bits);

/// Enclosure of atan over an interval.
Interval atan_enclosure(const Interval& x, long bits);

/// Enclosure of acos over an interval. The argument is clipped to [-1, 1];
/// throws std::domain_error if it lies entirely outside.
Interval acos_enclosure(const Interval& x, long bits);

}  // namespace packcert::exactnum
