#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "tucker/generators.hpp"
#include "tucker/labeling.hpp"
#include "tucker/pathfinder.hpp"

namespace tucker {

/// f(x) = A·x with A an m×(n+1) matrix; odd by construction.
struct LinearMap {
  std::vector<std::vector<double>> rows;

  std::size_t outputs() const { return rows.size(); }
  std::size_t inputs() const { return rows.empty() ? 0 : rows.front().size(); }

  std::vector<double> operator()(std::span<const double> x) const {
    std::vector<double> out(rows.size(), 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) out[i] += rows[i][j] * x[j];
    return out;
  }
};

/// Values of an odd map at one vertex of each antipodal pair.
struct SampleTable {
  std::map<VertexId, std::vector<double>> samples;
};

using OddMapSpec = std::variant<LinearMap, SampleTable>;

/// Induced ∞-norm (max absolute row sum): the Lipschitz constant of x ↦ A·x
/// from the ∞-norm to the ∞-norm.
inline double infinity_norm(const LinearMap& a) {
  double best = 0.0;
  for (const auto& row : a.rows) {
    double sum = 0.0;
    for (double x : row) sum += std::abs(x);
    best = std::max(best, sum);
  }
  return best;
}

inline double max_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Longest Euclidean edge of a complex with coordinates.
inline double max_edge_length(const SymmetricComplex& k) {
  double best = 0.0;
  for (const Simplex& e : k.simplices(1)) {
    const auto& a = k.coords(e[0]);
    const auto& b = k.coords(e[1]);
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
    best = std::max(best, std::sqrt(d2));
  }
  return best;
}

struct BorsukWitness {
  VertexId u = 0;
  VertexId w = 0;
  int label_u = 0;
  int label_w = 0;
  std::vector<double> point;    // coordinates of u
  std::vector<double> partner;  // coordinates of w
  std::vector<double> value;    // f(u)
  double residual = 0.0;        // ‖f(u)‖_∞
  std::optional<double> lipschitz;
  /// L·‖u − w‖_∞; residual never exceeds it.
  std::optional<double> bound;
  /// L·(longest edge of the refined complex).
  std::optional<double> mesh_bound;
  double max_edge_length = 0.0;
  int refinements = 0;
  PathTrace trace;
};

/// Approximate zero of an odd map f : S^n -> R^n.
///
/// Refines the triangulation, labels every vertex by the signed index of the
/// largest |f_i| and follows the Tucker path to a complementary edge {u, w}
/// with labels ±i.  Then f_i(u), f_i(w) have opposite signs and each is
/// largest in its vector, so ‖f(u)‖_∞ ≤ |f_i(u) − f_i(w)| ≤ L·‖u − w‖_∞.
/// Of the two endpoints, u is the one with the smaller residual.
///
/// Throws DegenerateSampleError when f vanishes at a sampled vertex.
inline BorsukWitness solve(const Triangulation& base, const OddMapSpec& map, int refinements) {
  if (!base.complex.has_coords()) throw std::invalid_argument("complex has no coordinates");
  const int n = base.complex.dim();
  if (const auto* table = std::get_if<SampleTable>(&map); table && refinements != 0)
    throw std::invalid_argument("sample tables describe the given complex; refinement must be 0");
  if (const auto* lin = std::get_if<LinearMap>(&map)) {
    if (lin->outputs() != static_cast<std::size_t>(n))
      throw std::invalid_argument("map must have n = " + std::to_string(n) + " outputs");
    for (const auto& row : lin->rows) {
      if (row.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("map rows must have n+1 = " + std::to_string(n + 1) + " entries");
      for (double x : row)
        if (!std::isfinite(x)) throw std::invalid_argument("map has a non-finite entry");
    }
  }

  const Triangulation t = refine(base, refinements);
  const SymmetricComplex& k = t.complex;

  std::map<VertexId, std::vector<double>> samples;
  if (const auto* lin = std::get_if<LinearMap>(&map)) {
    for (VertexId v = 0; v < k.vertex_count(); ++v)
      if (v < k.antipode(v)) samples.emplace(v, (*lin)(k.coords(v)));
  } else {
    samples = std::get<SampleTable>(map).samples;
    for (const auto& [v, f] : samples)
      if (f.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("samples must have n = " + std::to_string(n) + " entries");
  }
  const Labeling labels = induced_labeling(k, samples);

  auto value_at = [&](VertexId v) {
    if (auto it = samples.find(v); it != samples.end()) return it->second;
    std::vector<double> f = samples.at(k.antipode(v));
    for (double& x : f) x = -x;
    return f;
  };

  BorsukWitness out;
  out.refinements = refinements;
  out.trace = run(k, t.flag, labels, Mode::Tucker);
  if (out.trace.termination != Termination::ComplementaryEdge || !out.trace.witness.complementary_edge)
    throw StructuralError(std::string("Tucker walk ended with ") + to_string(out.trace.termination));

  auto [a, b] = *out.trace.witness.complementary_edge;
  if (max_norm(value_at(b)) < max_norm(value_at(a))) std::swap(a, b);
  out.u = a;
  out.w = b;
  out.label_u = labels[a];
  out.label_w = labels[b];
  out.point = k.coords(a);
  out.partner = k.coords(b);
  out.value = value_at(a);
  out.residual = max_norm(out.value);
  out.max_edge_length = max_edge_length(k);
  if (const auto* lin = std::get_if<LinearMap>(&map)) {
    const double lip = infinity_norm(*lin);
    std::vector<double> diff(out.point.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = out.point[i] - out.partner[i];
    out.lipschitz = lip;
    out.bound = lip * max_norm(diff);
    out.mesh_bound = lip * out.max_edge_length;
  }
  return out;
}

}  // namespace tucker
