#pragma once

#include <random>
#include <vector>

#include "tucker/tucker.hpp"

namespace testing_support {

using tucker::VertexId;

// Octahedral S^n vertex ids: +e_i is i-1, -e_i is i-1+(n+1).
inline VertexId pe(int /*n*/, int i) { return static_cast<VertexId>(i - 1); }
inline VertexId ne(int n, int i) { return static_cast<VertexId>(i - 1 + n + 1); }

// labels(±e_i) = ±i on octahedral S^n.
inline tucker::Labeling canonical_labels(int n) {
  std::vector<int> l(2 * (n + 1));
  for (int i = 1; i <= n + 1; ++i) {
    l[pe(n, i)] = i;
    l[ne(n, i)] = -i;
  }
  return tucker::Labeling(n + 1, l);
}

// labels(±e_i) = ±i for i <= n, and ±n on the last axis.
inline tucker::Labeling tucker_labels(int n) {
  std::vector<int> l(2 * (n + 1));
  for (int i = 1; i <= n + 1; ++i) {
    const int x = std::min(i, n);
    l[pe(n, i)] = x;
    l[ne(n, i)] = -x;
  }
  return tucker::Labeling(n, l);
}

// Random nonzero label multiset with entries in [-max_mag, max_mag].
inline std::vector<int> random_multiset(std::mt19937& rng, std::size_t size, int max_mag) {
  std::uniform_int_distribution<int> mag(1, max_mag);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> out(size);
  for (int& x : out) x = neg(rng) ? -mag(rng) : mag(rng);
  return out;
}

}  // namespace testing_support
