#include "lrmoc/replica/effective_gate.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lrmoc/replica/measurement_weight.hpp"
#include "lrmoc/replica/permutation.hpp"

namespace lrmoc {

namespace {

Eigen::Matrix4d kron(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) {
  Eigen::Matrix4d out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

EffectiveGate effective_gate_projection(int d) {
  if (d != 2) throw std::invalid_argument("effective gate projection is defined for d = 2");
  const std::array<Permutation, 2> sector{Permutation::identity(2), Permutation::transposition(2, 0, 1)};

  EffectiveGate g;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const auto rel = sector[a].inverse() * sector[b];
      g.gram(a, b) = std::pow(static_cast<double>(d), static_cast<double>(rel.cycle_count()));
    }
  }
  for (int si = 0; si < 2; ++si)
    for (int sj = 0; sj < 2; ++sj)
      for (int ti = 0; ti < 2; ++ti)
        for (int tj = 0; tj < 2; ++tj)
          g.raw(2 * si + sj, 2 * ti + tj) =
              static_cast<double>(wm_weight(sector[si], sector[sj], sector[ti], sector[tj], static_cast<std::uint64_t>(d)));

  // e_pm = (I +- S) normalized under the Gram metric.
  const Eigen::Vector2d plus(1.0, 1.0);
  const Eigen::Vector2d minus(1.0, -1.0);
  g.basis.col(0) = plus / std::sqrt(plus.dot(g.gram * plus));
  g.basis.col(1) = minus / std::sqrt(minus.dot(g.gram * minus));

  const Eigen::Matrix4d b2 = kron(g.basis, g.basis);
  g.projected = b2.transpose() * g.raw * b2;

  Eigen::Matrix2d sz;
  sz << 1, 0, 0, -1;
  Eigen::Matrix2d sx;
  sx << 0, 1, 1, 0;
  const Eigen::Matrix4d coupling = kron(sz, sz) + kron(sx, sx);
  g.c = g.projected.trace() / 4.0;
  g.j = (g.projected * coupling).trace() / coupling.squaredNorm();
  const Eigen::Matrix4d fit = g.c * Eigen::Matrix4d::Identity() + g.j * coupling;
  g.residual = (g.projected - fit).norm();
  if (g.residual > 1e-10) {
    throw std::runtime_error("projected gate is not of the form C + J(ZZ + XX); residual " + std::to_string(g.residual));
  }
  return g;
}

}  // namespace lrmoc
