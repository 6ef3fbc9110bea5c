#include "lrmoc/replica/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lrmoc {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("permutation images must be a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint8_t> im(n);
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(std::size_t n) {
  std::vector<std::uint8_t> im(n);
  for (std::size_t k = 0; k < n; ++k) im[k] = static_cast<std::uint8_t>((k + 1) % n);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) throw std::out_of_range("transposition index out of range");
  auto p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<std::uint8_t> im(n);
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<std::uint8_t> im(size());
  for (std::size_t k = 0; k < size(); ++k) im[k] = images_[rhs.images_[k]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> im(size());
  for (std::size_t k = 0; k < size(); ++k) im[images_[k]] = static_cast<std::uint8_t>(k);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::size_t Permutation::cycle_count() const {
  std::vector<bool> seen(size(), false);
  std::size_t cycles = 0;
  for (std::size_t k = 0; k < size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (std::size_t x = k; !seen[x]; x = images_[x]) seen[x] = true;
  }
  return cycles;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

std::size_t Permutation::lex_rank() const {
  // Lehmer code.
  std::size_t rank = 0;
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t smaller = 0;
    for (std::size_t m = k + 1; m < n; ++m) {
      if (images_[m] < images_[k]) ++smaller;
    }
    rank += smaller * factorial(n - 1 - k);
  }
  return rank;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(images_[k]);
  }
  return s + "]";
}

namespace {

std::size_t common_degree(std::span<const Permutation> generators) {
  if (generators.empty()) throw std::invalid_argument("orbit count needs at least one generator");
  const std::size_t n = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generators act on different sets");
  }
  return n;
}

}  // namespace

std::size_t orbit_count(std::span<const Permutation> generators) {
  const std::size_t n = common_degree(generators);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue;
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++orbits;
    seen[start] = true;
    queue.assign(1, start);
    while (!queue.empty()) {
      const std::size_t x = queue.back();
      queue.pop_back();
      for (const auto& g : generators) {
        const std::size_t y = g(x);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return orbits;
}

std::vector<Permutation> generated_subgroup(std::span<const Permutation> generators) {
  const std::size_t n = common_degree(generators);
  std::set<Permutation> group{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& h : frontier) {
      for (const auto& g : generators) {
        auto p = g * h;
        if (group.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::size_t orbit_count_by_enumeration(std::span<const Permutation> generators) {
  const auto group = generated_subgroup(generators);
  const std::size_t n = generators.front().size();
  std::set<std::vector<std::size_t>> orbits;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> orbit;
    for (const auto& g : group) orbit.push_back(g(x));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    orbits.insert(std::move(orbit));
  }
  return orbits.size();
}

}  // namespace lrmoc
