#pragma once

#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tucker/simplex.hpp"

namespace tucker {

/// Abstract simplicial complex of S^n with an explicit antipodal involution on
/// vertices.  Only the maximal n-simplices are given; the closure is derived
/// once at construction and is immutable afterwards.
///
/// The constructor checks shape only (ids in range, top simplices of dimension
/// n, coordinate lengths).  Symmetry and manifold conditions are reported by
/// validate_symmetry().
class SymmetricComplex {
 public:
  SymmetricComplex(int n, std::vector<VertexId> antipode, std::vector<Simplex> maximal,
                   std::optional<std::vector<std::vector<double>>> coords = std::nullopt)
      : n_(n), antipode_(std::move(antipode)), maximal_(std::move(maximal)),
        coords_(std::move(coords)) {
    if (n_ < 1) throw std::invalid_argument("sphere dimension must be at least 1");
    const auto nv = antipode_.size();
    for (std::size_t v = 0; v < nv; ++v)
      if (antipode_[v] >= nv)
        throw std::invalid_argument("antipode of vertex " + std::to_string(v) + " out of range");
    if (maximal_.empty()) throw std::invalid_argument("complex has no maximal simplices");
    for (const Simplex& s : maximal_) {
      if (s.dim() != n_)
        throw std::invalid_argument("maximal simplex " + to_string(s) + " is not " +
                                    std::to_string(n_) + "-dimensional");
      if (s[s.size() - 1] >= nv)
        throw std::invalid_argument("maximal simplex " + to_string(s) + " uses unknown vertex");
    }
    std::sort(maximal_.begin(), maximal_.end());
    if (std::adjacent_find(maximal_.begin(), maximal_.end()) != maximal_.end())
      throw std::invalid_argument("duplicate maximal simplex");
    if (coords_) {
      if (coords_->size() != nv) throw std::invalid_argument("coordinate table size mismatch");
      for (const auto& c : *coords_)
        if (c.size() != static_cast<std::size_t>(n_) + 1)
          throw std::invalid_argument("coordinates must have length n+1");
    }
    build_closure();
  }

  int dim() const { return n_; }
  std::size_t vertex_count() const { return antipode_.size(); }
  VertexId antipode(VertexId v) const { return antipode_.at(v); }
  const std::vector<VertexId>& antipode_table() const { return antipode_; }

  Simplex antipode(const Simplex& sigma) const {
    std::vector<VertexId> out;
    out.reserve(sigma.size());
    for (VertexId v : sigma) out.push_back(antipode(v));
    return Simplex(std::move(out));
  }

  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }

  /// Closure simplices of dimension k, sorted.
  const std::vector<Simplex>& simplices(int k) const { return closure_.at(k); }
  bool contains(const Simplex& s) const { return members_.contains(s); }
  std::size_t closure_size() const { return members_.size(); }

  bool has_coords() const { return coords_.has_value(); }
  const std::vector<double>& coords(VertexId v) const {
    if (!coords_) throw std::logic_error("complex carries no coordinates");
    return coords_->at(v);
  }
  const std::optional<std::vector<std::vector<double>>>& coord_table() const { return coords_; }

  friend bool operator==(const SymmetricComplex& a, const SymmetricComplex& b) {
    return a.n_ == b.n_ && a.antipode_ == b.antipode_ && a.maximal_ == b.maximal_ &&
           a.coords_ == b.coords_;
  }

 private:
  void build_closure() {
    closure_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (int k = 0; k <= n_; ++k) {
      std::set<Simplex> level;
      for (const Simplex& s : maximal_)
        for (Simplex& f : faces(s, k)) level.insert(std::move(f));
      closure_[k].assign(level.begin(), level.end());
      members_.insert(closure_[k].begin(), closure_[k].end());
    }
  }

  int n_;
  std::vector<VertexId> antipode_;
  std::vector<Simplex> maximal_;
  std::optional<std::vector<std::vector<double>>> coords_;
  std::vector<std::vector<Simplex>> closure_;
  SimplexSet members_;
};

inline Simplex antipode_simplex(const SymmetricComplex& k, const Simplex& sigma) {
  return k.antipode(sigma);
}

struct SymmetryReport {
  bool ok = true;
  std::vector<std::string> violations;
  /// Some simplex contains a vertex together with its antipode.
  bool has_antipodal_pair = false;
  /// Some simplex equals its own antipodal image.
  bool has_self_antipodal = false;
  std::vector<Simplex> antipodal_pair_edges;
  std::vector<Simplex> self_antipodal_simplices;
};

inline SymmetryReport validate_symmetry(const SymmetricComplex& k) {
  constexpr double kCoordTol = 1e-9;
  SymmetryReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };

  bool involution = true;
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    if (k.antipode(v) == v) {
      fail("fixed point: vertex " + std::to_string(v) + " is its own antipode");
      involution = false;
    } else if (k.antipode(k.antipode(v)) != v) {
      fail("antipode is not an involution at vertex " + std::to_string(v));
      involution = false;
    }
  }

  if (involution) {
    const SimplexSet top(k.maximal_simplices().begin(), k.maximal_simplices().end());
    for (const Simplex& s : k.maximal_simplices()) {
      Simplex a = k.antipode(s);
      if (!top.contains(a))
        fail("missing antipodal simplex: " + to_string(a) + " (image of " + to_string(s) + ")");
    }
    for (int d = 0; d <= k.dim(); ++d)
      for (const Simplex& s : k.simplices(d))
        if (k.antipode(s) == s) {
          r.has_self_antipodal = true;
          r.self_antipodal_simplices.push_back(s);
        }
    for (const Simplex& e : k.simplices(std::min(1, k.dim())))
      if (e.size() == 2 && k.antipode(e[0]) == e[1]) {
        r.has_antipodal_pair = true;
        r.antipodal_pair_edges.push_back(e);
      }
  }

  SimplexMap<int> incidence;
  for (const Simplex& s : k.maximal_simplices())
    for (Simplex& f : faces(s, k.dim() - 1)) ++incidence[std::move(f)];
  std::vector<Simplex> bad;
  for (const auto& [f, count] : incidence)
    if (count != 2) bad.push_back(f);
  std::sort(bad.begin(), bad.end());
  for (const Simplex& f : bad)
    fail("non-manifold facet " + to_string(f) + ": incident to " + std::to_string(incidence[f]) +
         " maximal simplices");

  if (k.has_coords()) {
    for (VertexId v = 0; v < k.vertex_count(); ++v) {
      const auto& c = k.coords(v);
      double norm2 = 0.0;
      for (double x : c) norm2 += x * x;
      if (std::abs(std::sqrt(norm2) - 1.0) > kCoordTol)
        fail("coordinate mismatch: vertex " + std::to_string(v) + " is not on the unit sphere");
      const auto& ca = k.coords(k.antipode(v));
      for (std::size_t i = 0; i < c.size(); ++i)
        if (std::abs(c[i] + ca[i]) > kCoordTol) {
          fail("coordinate mismatch: vertex " + std::to_string(v) +
               " and its antipode are not opposite points");
          break;
        }
    }
  }
  return r;
}

}  // namespace tucker
