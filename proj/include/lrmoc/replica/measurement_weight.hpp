#pragma once

#include <cstdint>

#include "lrmoc/replica/permutation.hpp"

namespace lrmoc {

/// d^(1 + #orbits <t1 s1, t2 s1, t2 s2>).
std::uint64_t wm_weight(const Permutation& s1, const Permutation& s2, const Permutation& t1,
                        const Permutation& t2, std::uint64_t d);

/// Same weight from the generating set <t1 t2^-1, t2 s1, s1^-1 s2>.
std::uint64_t wm_weight_alt(const Permutation& s1, const Permutation& s2, const Permutation& t1,
                            const Permutation& t2, std::uint64_t d);

/// Literal trace sum_i Tr(K_i^n (chi_s1 x chi_s2) K_i^n (chi_t1 x chi_t2)) over
/// the d^(2n) product basis, with K_i the mod-d parity projectors. n, d <= 3.
std::uint64_t wm_bruteforce(const Permutation& s1, const Permutation& s2, const Permutation& t1,
                            const Permutation& t2, std::uint64_t d);

}  // namespace lrmoc
