#include <cmath>
#include <complex>

#include "doctest.h"
#include "spirallike/errors.hpp"
#include "spirallike/polylog.hpp"

using namespace spirallike;
using namespace spirallike::polylog;

namespace {

struct PolylogCase {
  Complex u;
  Complex li2;
  Complex li3;
};

// Reference values from mpmath at 30 digits (tests/oracles/frozen_values.py).
const PolylogCase kCases[] = {
    {{0.3, 0.2},
     {0.31045297562115705792, 0.23586792101697521547},
     {0.30567236952729767463, 0.21689453383627301247}},
    {{0.6, -0.5},
     {0.56927050872806090729, -0.69137242689184279804},
     {0.59737039065216023628, -0.59020037523977708281}},
    {{-0.9, 0.1},
     {-0.75320048147019173199, 0.071291528102544630488},
     {-0.81931883514807819674, 0.083561703723344962588}},
    {{0.0, 1.0},
     {-0.20561675835602830456, 0.91596559417721901505},
     {-0.11269283467121196426, 0.96894614625936938048}},
    {{0.5, 0.0}, {0.5822405264650125059, 0.0}, {0.53721319360804020094, 0.0}},
};

}  // namespace

TEST_CASE("polylogarithms match high-precision references") {
  for (const PolylogCase& c : kCases) {
    CHECK(std::abs(li2(c.u) - c.li2) < 1e-14);
    CHECK(std::abs(li3(c.u) - c.li3) < 1e-14);
  }
}

TEST_CASE("polylogarithms stay accurate next to u = 1") {
  const Complex log_u(-1e-6, 0.001);
  const Complex u = std::exp(log_u);
  const Complex li2_ref(1.6433566127660275576, 0.0079061854965441062577);
  const Complex li3_ref(1.2020510559218846784, 0.0016441408450478509814);
  CHECK(std::abs(li2(u, log_u) - li2_ref) < 1e-13);
  CHECK(std::abs(li3(u, log_u) - li3_ref) < 1e-13);

  const Complex v = 0.999 * std::polar(1.0, 2.5);
  CHECK(std::abs(li2(v) - Complex(-0.71891589524406236804, 0.433277329555057145)) < 1e-13);
  CHECK(std::abs(li3(v) - Complex(-0.75993651482945307894, 0.50524632460384681066)) < 1e-13);
}

TEST_CASE("special values and domain") {
  CHECK(std::abs(li2(Complex(1.0, 0.0)) - M_PI * M_PI / 6) < 1e-14);
  CHECK(std::abs(li2(Complex(-1.0, 0.0)) + M_PI * M_PI / 12) < 1e-14);
  CHECK(std::abs(li3(Complex(1.0, 0.0)) - 1.2020569031595942854) < 1e-14);
  CHECK(li2(Complex(0.0, 0.0)) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(li2(Complex(1.1, 0.0)), DomainError);
}

TEST_CASE("derivative identity u Li3'(u) = Li2(u) across the switch radius") {
  for (double r : {0.2, 0.49, 0.51, 0.9, 0.999}) {
    for (double phi : {0.3, 1.7, -2.9}) {
      const Complex u = std::polar(r, phi);
      const Complex h = 1e-5 * u;
      const Complex d = (li3(u + h) - li3(u - h)) / (2.0 * h);
      CHECK(std::abs(u * d - li2(u)) < 1e-7);
    }
  }
}

TEST_CASE("branches agree across |u| = 1/2") {
  for (double phi = -3.0; phi <= 3.0; phi += 0.5) {
    const Complex a = std::polar(0.5 - 1e-12, phi);
    const Complex b = std::polar(0.5 + 1e-12, phi);
    CHECK(std::abs(li2(a) - li2(b)) < 1e-11);
    CHECK(std::abs(li3(a) - li3(b)) < 1e-11);
  }
}
