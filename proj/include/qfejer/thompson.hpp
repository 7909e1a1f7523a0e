#pragma once

#include "qfejer/element.hpp"
#include "qfejer/gauge.hpp"

namespace qfejer {

/// The embedded copy of S_1 = U S_2 inside the base-2 system.
inline Element cuntz_s1() {
  SystemDescriptor sys = SystemDescriptor::q2();
  return mul(Element::unitary(sys, 1), Element::isometry(sys, 2));
}

/// Thompson group generator x_0 = S_2^2 S_2^* + S_2 S_1 (S_1 S_2)^* + S_1 (S_1^*)^2.
inline Element thompson_x0() {
  SystemDescriptor sys = SystemDescriptor::q2();
  Element s2 = Element::isometry(sys, 2);
  Element s1 = cuntz_s1();
  return mul(mul(s2, s2), adjoint(s2)) + mul(mul(s2, s1), adjoint(mul(s1, s2))) +
         mul(s1, adjoint(mul(s1, s1)));
}

/// Thompson group generator
/// x_1 = S_2 S_2^* + S_1 S_2^2 (S_1 S_2)^* + S_1 S_2 S_1 (S_1^2 S_2)^* + S_1^2 (S_1^*)^3.
inline Element thompson_x1() {
  SystemDescriptor sys = SystemDescriptor::q2();
  Element s2 = Element::isometry(sys, 2);
  Element s1 = cuntz_s1();
  Element s1s2 = mul(s1, s2);
  Element s1s1 = mul(s1, s1);
  return mul(s2, adjoint(s2)) + mul(mul(s1, mul(s2, s2)), adjoint(s1s2)) +
         mul(mul(s1s2, s1), adjoint(mul(s1s1, s2))) +
         mul(s1s1, adjoint(mul(s1s1, s1)));
}

}  // namespace qfejer
