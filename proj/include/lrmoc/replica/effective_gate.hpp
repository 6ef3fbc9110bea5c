#pragma once

#include <Eigen/Dense>

namespace lrmoc {

/// Two-replica parity-check channel projected onto the per-site
/// {identity, swap} sector of the duplicated space (d = 2).
///
/// Basis convention: e_+ = (|I>> + |S>>)/||.|| maps to sigma^z = +1 and
/// e_- = (|I>> - |S>>)/||.|| to sigma^z = -1; two-site index is 2 a + b.
struct EffectiveGate {
  /// <<s_i s_j| M |t_i t_j>> = W_M(s_i, s_j, t_i, t_j), sector order (I, S).
  Eigen::Matrix4d raw;
  /// Per-site <<a|b>> = d^cyc(a^-1 b).
  Eigen::Matrix2d gram;
  /// Change of basis: columns are e_+ and e_- in the (I, S) sector.
  Eigen::Matrix2d basis;
  /// Projected operator in the orthonormal effective basis.
  Eigen::Matrix4d projected;
  double c = 0.0;
  double j = 0.0;
  /// Frobenius norm of projected - (C + J (ZZ + XX)).
  double residual = 0.0;
};

/// Throws if the residual exceeds 1e-10.
EffectiveGate effective_gate_projection(int d = 2);

}  // namespace lrmoc
