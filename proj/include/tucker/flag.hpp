#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tucker/complex.hpp"
#include "tucker/errors.hpp"

namespace tucker {

/// The minimal hemisphere H_dim (sign +1) or -H_dim (sign -1) containing a simplex.
struct Carrier {
  int dim = 0;
  int sign = 1;
  friend bool operator==(const Carrier&, const Carrier&) = default;
};

/// A flag of hemispheres H_0 ⊂ H_1 ⊂ ... ⊂ H_n aligned with a complex.
///
/// Only the positive hemispheres are given; each -H_d is the vertex-wise
/// antipodal image.  Closure sets and facet→cofacet incidence are
/// precomputed per level and side so that carrier lookup and the path
/// walk only probe hash tables.
class HemisphereFlag {
 public:
  HemisphereFlag(const SymmetricComplex& complex, std::vector<std::vector<Simplex>> levels)
      : n_(complex.dim()), levels_(std::move(levels)) {
    if (levels_.size() != static_cast<std::size_t>(n_) + 1)
      throw std::invalid_argument("flag needs one level per dimension 0.." + std::to_string(n_));
    if (levels_[0].empty()) throw std::invalid_argument("flag level 0 is empty");
    for (int d = 0; d <= n_; ++d) {
      std::sort(levels_[d].begin(), levels_[d].end());
      for (const Simplex& s : levels_[d])
        if (s.dim() != d)
          throw std::invalid_argument("flag level " + std::to_string(d) + " lists " + to_string(s));
    }
    sides_.resize(levels_.size());
    for (int d = 0; d <= n_; ++d) {
      Side& plus = sides_[d][0];
      Side& minus = sides_[d][1];
      plus.members = levels_[d];
      for (const Simplex& s : levels_[d]) minus.members.push_back(complex.antipode(s));
      std::sort(minus.members.begin(), minus.members.end());
      for (Side* side : {&plus, &minus})
        for (const Simplex& s : side->members) {
          for (int k = 0; k <= d; ++k)
            for (Simplex& f : faces(s, k)) side->closure.insert(std::move(f));
          if (d > 0)
            for (Simplex& f : faces(s, d - 1)) side->incidence[std::move(f)].push_back(s);
        }
    }
  }

  int dim() const { return n_; }
  const std::vector<std::vector<Simplex>>& levels() const { return levels_; }

  /// The base point H_0.
  const Simplex& base() const { return levels_[0].front(); }

  /// Top simplices of H_d (sign +1) or -H_d (sign -1), sorted.
  const std::vector<Simplex>& hemisphere(int d, int sign) const { return side(d, sign).members; }

  bool in_closure(const Simplex& s, int d, int sign) const {
    return side(d, sign).closure.contains(s);
  }

  /// Members of the d-level hemisphere on `sign` side having `face` as a facet.
  const std::vector<Simplex>& cofacets_in(const Simplex& face, int d, int sign) const {
    static const std::vector<Simplex> none;
    const auto& inc = side(d, sign).incidence;
    auto it = inc.find(face);
    return it == inc.end() ? none : it->second;
  }

  const SimplexMap<std::vector<Simplex>>& incidence(int d, int sign) const {
    return side(d, sign).incidence;
  }

 private:
  struct Side {
    std::vector<Simplex> members;
    SimplexSet closure;
    SimplexMap<std::vector<Simplex>> incidence;
  };

  const Side& side(int d, int sign) const {
    if (d < 0 || d > n_) throw std::out_of_range("flag level " + std::to_string(d));
    return sides_[d][sign > 0 ? 0 : 1];
  }

  int n_;
  std::vector<std::vector<Simplex>> levels_;
  std::vector<std::array<Side, 2>> sides_;
};

/// Carrier hemisphere of `sigma`.  Throws StructuralError when sigma lies in no
/// hemisphere (misaligned flag) or in both signs at the minimal level (invalid
/// flag).
inline Carrier carrier(const HemisphereFlag& flag, const Simplex& sigma) {
  for (int d = std::max(sigma.dim(), 0); d <= flag.dim(); ++d) {
    const bool pos = flag.in_closure(sigma, d, +1);
    const bool neg = flag.in_closure(sigma, d, -1);
    if (pos && neg)
      throw StructuralError("ambiguous carrier for " + to_string(sigma) + " at level " +
                            std::to_string(d));
    if (pos) return {d, +1};
    if (neg) return {d, -1};
  }
  throw StructuralError("no carrier for " + to_string(sigma));
}

struct FlagViolation {
  int dim;
  std::string what;
};

struct FlagReport {
  bool ok = true;
  std::vector<FlagViolation> violations;
};

/// Checks the flag conditions on a complex that passed validate_symmetry():
///  - H_0 is a single vertex;
///  - every listed d-simplex lies in the complex;
///  - for d >= 1 the faces of H_d met once are exactly H_{d-1} ∪ -H_{d-1} and
///    all other faces are met exactly twice;
///  - H_d ∩ -H_d is H_{d-1} ∪ -H_{d-1} (no shared d-simplex, and no other
///    shared face);
///  - H_n ∪ -H_n is the whole complex.
inline FlagReport validate_flag(const SymmetricComplex& complex, const HemisphereFlag& flag) {
  FlagReport r;
  auto fail = [&](int d, std::string msg) {
    r.ok = false;
    r.violations.push_back({d, std::move(msg)});
  };
  const int n = complex.dim();
  if (flag.dim() != n) {
    fail(0, "flag dimension differs from complex dimension");
    return r;
  }
  const auto& levels = flag.levels();
  if (levels[0].size() != 1) fail(0, "H_0 must be a single vertex");

  for (int d = 0; d <= n; ++d) {
    for (std::size_t i = 0; i < levels[d].size(); ++i) {
      if (!complex.contains(levels[d][i]))
        fail(d, "simplex " + to_string(levels[d][i]) + " is not in the complex");
      if (i > 0 && levels[d][i] == levels[d][i - 1])
        fail(d, "simplex " + to_string(levels[d][i]) + " listed twice");
    }

    const SimplexSet plus(flag.hemisphere(d, +1).begin(), flag.hemisphere(d, +1).end());
    for (const Simplex& s : flag.hemisphere(d, -1))
      if (plus.contains(s)) fail(d, "simplex " + to_string(s) + " lies in both H_d and -H_d");

    if (d == 0) continue;

    SimplexSet expected_boundary;
    for (int sign : {+1, -1})
      for (const Simplex& s : flag.hemisphere(d - 1, sign)) expected_boundary.insert(s);

    SimplexSet boundary;
    for (const auto& [face, cof] : flag.incidence(d, +1)) {
      if (cof.size() == 1)
        boundary.insert(face);
      else if (cof.size() != 2)
        fail(d, "face " + to_string(face) + " is incident to " + std::to_string(cof.size()) +
                    " simplices of H_d");
    }
    std::vector<Simplex> missing, extra;
    for (const Simplex& s : expected_boundary)
      if (!boundary.contains(s)) missing.push_back(s);
    for (const Simplex& s : boundary)
      if (!expected_boundary.contains(s)) extra.push_back(s);
    std::sort(missing.begin(), missing.end());
    std::sort(extra.begin(), extra.end());
    for (const Simplex& s : missing)
      fail(d, "boundary of H_d is missing " + to_string(s) + " from H_{d-1} ∪ -H_{d-1}");
    for (const Simplex& s : extra)
      fail(d, "boundary of H_d contains " + to_string(s) + " outside H_{d-1} ∪ -H_{d-1}");

    // Every simplex shared by both closures must lie on the common boundary.
    for (int k = 0; k < d; ++k)
      for (const Simplex& s : complex.simplices(k))
        if (flag.in_closure(s, d, +1) && flag.in_closure(s, d, -1) &&
            !flag.in_closure(s, d - 1, +1) && !flag.in_closure(s, d - 1, -1))
          fail(d, "simplex " + to_string(s) + " is shared by H_d and -H_d off their boundary");
  }

  SimplexSet cover;
  for (int sign : {+1, -1})
    for (const Simplex& s : flag.hemisphere(n, sign)) cover.insert(s);
  for (const Simplex& s : complex.maximal_simplices())
    if (!cover.contains(s)) fail(n, "maximal simplex " + to_string(s) + " is not in H_n ∪ -H_n");
  return r;
}

}  // namespace tucker
