#pragma once

#include "spirallike/representation.hpp"

namespace spirallike {

/// f with f(z)/z = (g(z)/z)^{e^{i lambda} cos lambda} for a starlike g.
/// Throws DomainError if g is not starlike (built at lambda != 0).
SpiralFunction spirallike_of(const SpiralFunction& g, const SpiralAngle& angle);

/// Inverse correspondence: the starlike g with
/// log(g/z) = (e^{-i lambda} / cos lambda) log(f/z).
/// Throws DomainError if f was not built for `angle`.
SpiralFunction starlike_of(const SpiralFunction& f, const SpiralAngle& angle);

}  // namespace spirallike
