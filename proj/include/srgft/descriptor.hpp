#pragma once

#include "srgft/json_io.hpp"

namespace srgft {

/// Closed form descriptions stored next to a series, e.g.
/// {"kind": "koebe", "u": [1, 0, 0, 0]}. Kinds: koebe {u}, mobius {a, u?},
/// caratheodory {weights, units}, rogosinski {b, p}, convex-extremal,
/// odd-starlike, bloch, identity, polynomial {coeffs}, class-c {h, p} (nested descriptors).
///
/// Exact data are used in exact mode whenever every parameter is rational
/// (and, for rogosinski, |b| is rational); otherwise the function is built
/// in floating point.
SliceFunction function_from_descriptor(const Json& descriptor, Mode mode);

/// Short label such as "koebe(u=i)".
std::string describe(const Json& descriptor);

}  // namespace srgft
