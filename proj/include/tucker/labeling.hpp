#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tucker/complex.hpp"

namespace tucker {

/// Integer vertex labels in {±1, ..., ±m}, indexed by vertex id.
/// Anti-symmetry is not enforced here; see validate_labeling().
class Labeling {
 public:
  Labeling(int m, std::vector<int> labels) : m_(m), labels_(std::move(labels)) {
    if (m_ < 1) throw std::invalid_argument("label bound m must be at least 1");
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      const int x = labels_[v];
      if (x == 0 || std::abs(x) > m_)
        throw std::invalid_argument("label " + std::to_string(x) + " at vertex " +
                                    std::to_string(v) + " is outside ±1..±" + std::to_string(m_));
    }
  }

  int bound() const { return m_; }
  std::size_t size() const { return labels_.size(); }
  int operator[](VertexId v) const { return labels_.at(v); }
  const std::vector<int>& values() const { return labels_; }

  std::vector<int> of(const Simplex& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(labels_.at(v));
    return out;
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  int m_;
  std::vector<int> labels_;
};

enum class SimplexKind { Alternating, AlmostAlternating, Other };

inline const char* to_string(SimplexKind k) {
  switch (k) {
    case SimplexKind::Alternating: return "alternating";
    case SimplexKind::AlmostAlternating: return "almost-alternating";
    case SimplexKind::Other: return "other";
  }
  return "?";
}

struct SimplexClass {
  SimplexKind kind = SimplexKind::Other;
  /// Set for alternating simplices, and for almost-alternating ones whose
  /// alternating facets all share a sign.
  std::optional<int> sign;
  /// Positions (into the input label list) whose removal leaves an
  /// alternating facet, with the sign of that facet.
  std::vector<std::size_t> alternating_facets;
  std::vector<int> facet_signs;
  bool has_complementary_edge = false;

  friend bool operator==(const SimplexClass&, const SimplexClass&) = default;
};

inline int sign_of(int x) { return x > 0 ? 1 : -1; }

namespace detail {

// Sign of the alternating simplex formed by `labels` minus position `skip`,
// or 0 when it is not alternating.
inline int alternating_sign(std::span<const int> labels, std::size_t skip) {
  std::vector<int> vals;
  vals.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (i != skip) vals.push_back(labels[i]);
  if (vals.empty()) return 0;
  std::sort(vals.begin(), vals.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (std::abs(vals[i]) == std::abs(vals[i - 1]) || sign_of(vals[i]) == sign_of(vals[i - 1]))
      return 0;
  return sign_of(vals.front());
}

}  // namespace detail

/// Labels distinct in magnitude whose signs alternate in order of increasing
/// magnitude.
inline bool is_alternating(std::span<const int> labels) {
  return detail::alternating_sign(labels, labels.size()) != 0;
}

/// Classifies a simplex by its label multiset.  Facets are identified by
/// vertex removal, so a repeated label yields two facets with equal labels.
inline SimplexClass classify(std::span<const int> labels) {
  if (labels.empty()) throw std::invalid_argument("cannot classify an empty simplex");
  for (int x : labels)
    if (x == 0) throw std::invalid_argument("zero label");

  SimplexClass c;
  for (std::size_t i = 0; i < labels.size() && !c.has_complementary_edge; ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] + labels[j] == 0) {
        c.has_complementary_edge = true;
        break;
      }

  if (labels.size() > 1)
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (int s = detail::alternating_sign(labels, i)) {
        c.alternating_facets.push_back(i);
        c.facet_signs.push_back(s);
      }

  if (int s = detail::alternating_sign(labels, labels.size())) {
    c.kind = SimplexKind::Alternating;
    c.sign = s;
  } else if (!c.alternating_facets.empty()) {
    c.kind = SimplexKind::AlmostAlternating;
    const auto& fs = c.facet_signs;
    if (std::all_of(fs.begin(), fs.end(), [&](int s) { return s == fs.front(); }))
      c.sign = fs.front();
  }
  return c;
}

inline SimplexClass classify(std::initializer_list<int> labels) {
  return classify(std::span<const int>(labels.begin(), labels.size()));
}

struct LabelingReport {
  bool ok = true;
  std::vector<VertexId> antisymmetry_violations;
  std::vector<Simplex> complementary_edges;
  std::vector<std::string> messages;
};

inline LabelingReport validate_labeling(const SymmetricComplex& k, const Labeling& l,
                                        bool forbid_complementary) {
  LabelingReport r;
  if (l.size() != k.vertex_count()) {
    r.ok = false;
    r.messages.push_back("labeling has " + std::to_string(l.size()) + " labels for " +
                         std::to_string(k.vertex_count()) + " vertices");
    return r;
  }
  for (VertexId v = 0; v < k.vertex_count(); ++v)
    if (l[k.antipode(v)] != -l[v]) {
      r.ok = false;
      r.antisymmetry_violations.push_back(v);
      r.messages.push_back("anti-symmetry violated at vertex " + std::to_string(v) + " (label " +
                           std::to_string(l[v]) + ", antipode label " +
                           std::to_string(l[k.antipode(v)]) + ")");
    }
  if (forbid_complementary)
    for (const Simplex& e : k.simplices(1))
      if (l[e[0]] + l[e[1]] == 0) {
        r.ok = false;
        r.complementary_edges.push_back(e);
        r.messages.push_back("complementary edge " + to_string(e) + " with labels " +
                             std::to_string(l[e[0]]) + "," + std::to_string(l[e[1]]));
      }
  return r;
}

/// Sampling ran out of restarts before finding a labeling without
/// complementary edges.
class SamplingError : public std::runtime_error {
 public:
  SamplingError(const std::string& what, int attempts)
      : std::runtime_error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

/// Random anti-symmetric labeling.  One representative per antipodal pair (the
/// smaller id) draws uniformly from {±1..±m}; its antipode gets the negation.
///
/// With forbid_complementary the uniform draw is repaired by min-conflicts
/// local search over the edge constraints l(u) + l(w) != 0; each of the
/// `retry_cap` attempts starts from a fresh uniform draw.
inline Labeling random_labeling(const SymmetricComplex& k, int m, std::uint64_t seed,
                                bool forbid_complementary, int retry_cap = 200) {
  if (m < 1) throw std::invalid_argument("label bound m must be at least 1");
  const std::size_t nv = k.vertex_count();
  std::vector<std::size_t> var(nv);
  std::vector<int> orient(nv);
  std::size_t nvars = 0;
  for (VertexId v = 0; v < nv; ++v) {
    if (k.antipode(v) == v)
      throw std::invalid_argument("vertex " + std::to_string(v) + " is its own antipode");
    if (v < k.antipode(v)) {
      var[v] = var[k.antipode(v)] = nvars++;
      orient[v] = 1;
      orient[k.antipode(v)] = -1;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2 * m - 1);
  auto draw = [&] {
    const int i = pick(rng);
    return i < m ? i + 1 : m - 1 - i;
  };
  std::vector<int> x(nvars);
  auto labels = [&] {
    std::vector<int> out(nv);
    for (VertexId v = 0; v < nv; ++v) out[v] = orient[v] * x[var[v]];
    return out;
  };

  if (!forbid_complementary) {
    for (int& xi : x) xi = draw();
    return Labeling(m, labels());
  }

  struct Edge {
    std::size_t a, b;
    int sa, sb;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> touching(nvars);
  for (const Simplex& e : k.simplices(1)) {
    if (k.antipode(e[0]) == e[1])
      throw std::invalid_argument("edge " + to_string(e) +
                                  " joins antipodal vertices; every anti-symmetric labeling makes "
                                  "it complementary");
    edges.push_back({var[e[0]], var[e[1]], orient[e[0]], orient[e[1]]});
    touching[var[e[0]]].push_back(edges.size() - 1);
    touching[var[e[1]]].push_back(edges.size() - 1);
  }
  auto conflicted = [&](const Edge& e) { return e.sa * x[e.a] + e.sb * x[e.b] == 0; };

  const std::size_t max_steps = 200 * nvars + 1000;
  std::bernoulli_distribution noise(0.1);
  std::vector<std::size_t> bad;
  std::vector<int> best;
  for (int attempt = 1; attempt <= retry_cap; ++attempt) {
    for (int& xi : x) xi = draw();
    for (std::size_t step = 0; step <= max_steps; ++step) {
      bad.clear();
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (conflicted(edges[i])) bad.push_back(i);
      if (bad.empty()) return Labeling(m, labels());
      const Edge& e = edges[bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)]];
      const std::size_t v = std::bernoulli_distribution(0.5)(rng) ? e.a : e.b;
      if (noise(rng)) {
        x[v] = draw();
        continue;
      }
      int best_count = -1;
      best.clear();
      for (int cand = -m; cand <= m; ++cand) {
        if (cand == 0) continue;
        x[v] = cand;
        int count = 0;
        for (std::size_t ei : touching[v]) count += conflicted(edges[ei]) ? 1 : 0;
        if (best_count < 0 || count < best_count) {
          best_count = count;
          best.assign(1, cand);
        } else if (count == best_count) {
          best.push_back(cand);
        }
      }
      x[v] = best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng)];
    }
  }
  throw SamplingError("no labeling without complementary edges found after " +
                          std::to_string(retry_cap) + " attempts",
                      retry_cap);
}

/// A map sample was the zero vector, so no label can be induced.
class DegenerateSampleError : public std::runtime_error {
 public:
  explicit DegenerateSampleError(VertexId v)
      : std::runtime_error("map vanishes at vertex " + std::to_string(v) +
                           "; perturb the map"),
        vertex_(v) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

/// Label induced by a map value: s·i where i is the smallest index maximizing
/// |f_i| and s is the sign of f_i.
inline int induced_label(std::span<const double> value) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < value.size(); ++i)
    if (std::abs(value[i]) > std::abs(value[best])) best = i;
  if (value.empty() || value[best] == 0.0) return 0;
  return (value[best] > 0 ? 1 : -1) * static_cast<int>(best + 1);
}

/// Labeling induced by samples of an odd map f : S^n -> R^m.  Each antipodal
/// pair needs a sample at one of its vertices; the other vertex gets the
/// negated label.  When both are sampled the two labels must agree.
inline Labeling induced_labeling(const SymmetricComplex& k,
                                 const std::map<VertexId, std::vector<double>>& samples) {
  std::optional<std::size_t> m;
  for (const auto& [v, f] : samples) {
    if (v >= k.vertex_count())
      throw std::invalid_argument("sample for unknown vertex " + std::to_string(v));
    if (m && *m != f.size()) throw std::invalid_argument("samples have differing lengths");
    m = f.size();
  }
  if (!m || *m == 0) throw std::invalid_argument("no samples given");

  std::vector<int> labels(k.vertex_count(), 0);
  for (const auto& [v, f] : samples) {
    const int label = induced_label(f);
    if (label == 0) throw DegenerateSampleError(v);
    labels[v] = label;
  }
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    const VertexId a = k.antipode(v);
    if (labels[v] != 0 && labels[a] != 0 && labels[a] != -labels[v])
      throw std::invalid_argument("samples at vertices " + std::to_string(v) + " and " +
                                  std::to_string(a) + " are not antipodally consistent");
    if (labels[v] == 0 && labels[a] == 0)
      throw std::invalid_argument("no sample for vertex " + std::to_string(v) +
                                  " or its antipode");
    if (labels[v] == 0) labels[v] = -labels[a];
  }
  return Labeling(static_cast<int>(*m), std::move(labels));
}

}  // namespace tucker
