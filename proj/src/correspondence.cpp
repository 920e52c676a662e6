#include "spirallike/correspondence.hpp"

#include "spirallike/errors.hpp"

namespace spirallike {

// Functions carry (kernel, lambda) with log(f/z) = mu(lambda) log(kernel/z),
// so both directions only swap the angle and share the kernel.

SpiralFunction spirallike_of(const SpiralFunction& g, const SpiralAngle& angle) {
  if (!g.is_starlike()) {
    throw DomainError("spirallike_of expects a starlike function (lambda = 0)");
  }
  return SpiralFunction(g.kernel(), angle);
}

SpiralFunction starlike_of(const SpiralFunction& f, const SpiralAngle& angle) {
  if (f.angle().lambda() != angle.lambda()) {
    throw DomainError("starlike_of: function was built for a different lambda");
  }
  return SpiralFunction(f.kernel(), SpiralAngle(0.0));
}

}  // namespace spirallike
