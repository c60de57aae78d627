#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tucker/complex.hpp"
#include "tucker/flag.hpp"

namespace tucker {

/// A symmetric complex together with an aligned flag of hemispheres.
struct Triangulation {
  SymmetricComplex complex;
  HemisphereFlag flag;
};

enum class GeneratorKind { Octahedral, PaperTetra };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Octahedral;
  int n = 2;
  int refinements = 0;
};

/// Octahedral subdivision of S^n.  Vertex i (0 <= i <= n) is +e_{i+1} and
/// vertex i+n+1 is -e_{i+1}.  The flag nests along coordinate order:
/// H_d is the part of {x_{d+1} >= 0, x_j = 0 for j > d+1}, with H_0 = e_1.
inline Triangulation octahedral(int n) {
  if (n < 1) throw std::invalid_argument("octahedral sphere needs n >= 1");
  const auto axes = static_cast<VertexId>(n + 1);
  auto plus = [](VertexId i) { return i; };
  auto minus = [axes](VertexId i) { return i + axes; };

  std::vector<VertexId> antipode(2 * axes);
  std::vector<std::vector<double>> coords(2 * axes, std::vector<double>(axes, 0.0));
  for (VertexId i = 0; i < axes; ++i) {
    antipode[plus(i)] = minus(i);
    antipode[minus(i)] = plus(i);
    coords[plus(i)][i] = 1.0;
    coords[minus(i)][i] = -1.0;
  }

  // One of ±e_i for each axis i < count, selected by the bits of `mask`.
  auto orthant = [&](VertexId count, std::uint64_t mask) {
    std::vector<VertexId> vs;
    for (VertexId i = 0; i < count; ++i) vs.push_back((mask >> i) & 1U ? minus(i) : plus(i));
    return vs;
  };

  std::vector<Simplex> top;
  for (std::uint64_t mask = 0; mask < (1ULL << axes); ++mask)
    top.emplace_back(orthant(axes, mask));

  SymmetricComplex complex(n, std::move(antipode), std::move(top), std::move(coords));

  std::vector<std::vector<Simplex>> levels(axes);
  for (VertexId d = 0; d < axes; ++d)
    for (std::uint64_t mask = 0; mask < (1ULL << d); ++mask) {
      auto vs = orthant(d, mask);
      vs.push_back(plus(d));
      levels[d].emplace_back(std::move(vs));
    }
  HemisphereFlag flag(complex, std::move(levels));
  return {std::move(complex), std::move(flag)};
}

/// The 4-vertex triangulation of S^2 cut out by the plane z = 0 and the
/// half-planes {x = 0, z >= 0} and {y = 0, z <= 0}.  Combinatorially this is
/// the boundary of a tetrahedron, so it does not refine the octahedral
/// subdivision, and both of its "diagonal" edges join antipodal vertices.
///
/// Vertices: 0 = (1,0,0), 1 = (0,1,0), 2 = (-1,0,0), 3 = (0,-1,0).
/// Flag: H_0 = (1,0,0); H_1 = equator arc through (0,1,0); H_2 = the two
/// faces with z >= 0.
inline Triangulation paper_tetra() {
  std::vector<VertexId> antipode{2, 3, 0, 1};
  std::vector<std::vector<double>> coords{{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
  std::vector<Simplex> top{{0, 1, 3}, {1, 2, 3}, {0, 1, 2}, {0, 2, 3}};
  SymmetricComplex complex(2, std::move(antipode), std::move(top), std::move(coords));
  std::vector<std::vector<Simplex>> levels{
      {{0}},
      {{0, 1}, {1, 2}},
      {{0, 1, 3}, {1, 2, 3}},
  };
  HemisphereFlag flag(complex, std::move(levels));
  return {std::move(complex), std::move(flag)};
}

namespace detail {

// Every maximal chain of faces tau_0 ⊂ tau_1 ⊂ ... ⊂ tau_k = sigma, as a list
// of face ids (one per vertex-removal order).
inline void chains_below(const Simplex& sigma, const std::map<Simplex, VertexId>& ids,
                         std::vector<VertexId>& chain, std::vector<std::vector<VertexId>>& out) {
  chain.push_back(ids.at(sigma));
  if (sigma.size() == 1) {
    out.push_back(chain);
  } else {
    for (std::size_t i = 0; i < sigma.size(); ++i) chains_below(sigma.without(i), ids, chain, out);
  }
  chain.pop_back();
}

}  // namespace detail

/// Barycentric subdivision.  New vertex ids follow the lexicographic order of
/// the parent simplices; coordinates, when present, are parent centroids
/// pushed back onto the unit sphere.  Each H_d is replaced by the chains that
/// end in one of its d-simplices.
inline Triangulation barycentric(const SymmetricComplex& complex, const HemisphereFlag& flag) {
  const int n = complex.dim();
  std::vector<Simplex> parents;
  for (int d = 0; d <= n; ++d)
    parents.insert(parents.end(), complex.simplices(d).begin(), complex.simplices(d).end());
  std::sort(parents.begin(), parents.end());
  std::map<Simplex, VertexId> ids;
  for (std::size_t i = 0; i < parents.size(); ++i) ids.emplace(parents[i], static_cast<VertexId>(i));

  std::vector<VertexId> antipode(parents.size());
  for (std::size_t i = 0; i < parents.size(); ++i) {
    antipode[i] = ids.at(complex.antipode(parents[i]));
    if (antipode[i] == i)
      throw std::invalid_argument("cannot subdivide: " + to_string(parents[i]) +
                                  " is its own antipode, its barycenter would be a fixed point");
  }

  std::optional<std::vector<std::vector<double>>> coords;
  if (complex.has_coords()) {
    coords.emplace();
    coords->reserve(parents.size());
    for (const Simplex& p : parents) {
      std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
      for (VertexId v : p)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += complex.coords(v)[i];
      const double norm = std::sqrt(std::inner_product(c.begin(), c.end(), c.begin(), 0.0));
      if (norm == 0.0)
        throw std::invalid_argument("centroid of " + to_string(p) + " is the origin");
      for (double& x : c) x /= norm;
      coords->push_back(std::move(c));
    }
  }

  auto subdivide = [&](const std::vector<Simplex>& simplices) {
    std::vector<std::vector<VertexId>> chains;
    std::vector<VertexId> scratch;
    for (const Simplex& s : simplices) detail::chains_below(s, ids, scratch, chains);
    std::vector<Simplex> out;
    out.reserve(chains.size());
    for (auto& c : chains) out.emplace_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
  };

  SymmetricComplex refined(n, std::move(antipode), subdivide(complex.maximal_simplices()),
                           std::move(coords));
  std::vector<std::vector<Simplex>> levels;
  for (int d = 0; d <= n; ++d) levels.push_back(subdivide(flag.levels()[d]));
  HemisphereFlag refined_flag(refined, std::move(levels));
  return {std::move(refined), std::move(refined_flag)};
}

inline Triangulation barycentric(const Triangulation& t) { return barycentric(t.complex, t.flag); }

inline Triangulation refine(Triangulation t, int times) {
  if (times < 0) throw std::invalid_argument("refinement count must be non-negative");
  for (int i = 0; i < times; ++i) t = barycentric(t);
  return t;
}

inline Triangulation generate(const GeneratorSpec& spec) {
  if (spec.refinements < 0) throw std::invalid_argument("refinement count must be non-negative");
  switch (spec.kind) {
    case GeneratorKind::Octahedral:
      return refine(octahedral(spec.n), spec.refinements);
    case GeneratorKind::PaperTetra:
      if (spec.n != 2) throw std::invalid_argument("paper-tetra is a triangulation of S^2 only");
      return refine(paper_tetra(), spec.refinements);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace tucker
