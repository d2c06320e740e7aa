#pragma once

// Shared desk-scale fixtures: the two-vertex path quiver A2 (one arrow 1->2),
// the two-arrow Kronecker quiver K2, the arrowless two-vertex quiver, and the
// one-loop quiver. X_ind is the unique non-split dim-(1,1) representation of
// A2 (the extension 0 -> S2 -> X -> S1 -> 0 over F_2).

#include "nctop/quiver.hpp"
#include "nctop/rep.hpp"

namespace fixtures {

inline const nctop::Quiver& a2() {
  static nctop::Quiver q = nctop::build_quiver("A2", {"1", "2"}, {{"1", "2", "a"}});
  return q;
}

inline const nctop::Quiver& k2() {
  static nctop::Quiver q =
      nctop::build_quiver("K2", {"1", "2"}, {{"1", "2", "a"}, {"1", "2", "b"}});
  return q;
}

inline const nctop::Quiver& no_arrow2() {
  static nctop::Quiver q = nctop::build_quiver("D2", {"1", "2"}, {});
  return q;
}

inline const nctop::Quiver& one_loop() {
  static nctop::Quiver q = nctop::build_quiver("loop", {"1"}, {{"1", "1", "t"}});
  return q;
}

/// dim (1,1), arrow map [1] over F_2.
inline nctop::Representation x_ind() {
  nctop::Representation m = nctop::zero_representation(a2(), 2, {1, 1});
  m.arrow_maps[0](0, 0) = 1;
  return m;
}

/// dim (1,1), arrow map [0]: the direct sum S1 + S2.
inline nctop::Representation s1_plus_s2() {
  return nctop::zero_representation(a2(), 2, {1, 1});
}

/// Jordan block J_2(lambda) as a one-loop representation over F_p.
inline nctop::Representation jordan2(unsigned lambda, unsigned p = 2) {
  nctop::Representation m = nctop::zero_representation(one_loop(), p, {2});
  m.arrow_maps[0](0, 0) = lambda % p;
  m.arrow_maps[0](1, 1) = lambda % p;
  m.arrow_maps[0](0, 1) = 1;
  return m;
}

inline nctop::SimpleId s1() { return {0}; }  // vertex "1"
inline nctop::SimpleId s2() { return {1}; }  // vertex "2"

}  // namespace fixtures
