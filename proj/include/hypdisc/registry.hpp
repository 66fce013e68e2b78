#pragma once

// Bundled groups and parameterized test maps.

#include <string>
#include <vector>

#include "hypdisc/probe.hpp"

namespace hypdisc {

/// modular, picard, sp-lattice, su-lattice, dense.
std::vector<std::string> example_group_names();
bool is_example_group(const std::string& name);
GroupPresentation example_group(const std::string& name);

/// Test maps written as name:param[:param...]:
///   lox:LAMBDA[:N]            diag(LAMBDA, 1/LAMBDA) in SL(2, C_N)
///   translation:MU[:N]        [[1, MU], [0, 1]]
///   rotation:THETA[:N]        boundary rotation by THETA about 0 and inf (N >= 1) or about i (N = 0)
///   sp-lox:LAMBDA[:N]         diag(LAMBDA, 1/LAMBDA, 1, ...) for J2 in Sp(N,1)
///   heisenberg:S[:ZETA[:N]]   T_{s,zeta} with s = |zeta|^2/2 + S i, zeta = (ZETA, 0, ...)
///   sp-elliptic:T1:T2[:N]     diag(e^{i T1}, e^{i T2}, 1, ...) for J1
std::vector<std::string> example_element_patterns();
Element example_element(const std::string& spec);

/// Rotation-dilation generators of the dense example.
CliffordMatrix dense_dilation();
CliffordMatrix dense_rotation();
/// Test map paired with the dense example: diag(1.5, 1/1.5), beta ~ 0.694.
CliffordMatrix dense_test_map();

/// h_m = K diag(e^{t_m}, e^{-t_m}, 1) K^{-1} in Sp(2,1) with t_m = 8 * 2^{-m}; K fixed, moving the axis
/// away from o and inf, so h_m tends to I through loxodromics.
SpMatrix cao_parker_sequence(int m);
SpMatrix cao_parker_conjugator();

}  // namespace hypdisc
