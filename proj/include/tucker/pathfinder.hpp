#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tucker/complex.hpp"
#include "tucker/errors.hpp"
#include "tucker/flag.hpp"
#include "tucker/labeling.hpp"

namespace tucker {

/// Fan mode: anti-symmetric labels, no complementary edge, m >= n+1; the walk
/// ends at an alternating n-simplex.  Tucker mode: anti-symmetric labels only;
/// almost-alternating simplices with a complementary edge become extra
/// endpoints.
enum class Mode { Fan, Tucker };

inline const char* to_string(Mode m) { return m == Mode::Fan ? "fan" : "tucker"; }

/// Node kinds, for a simplex carried by ±H_d:
///  1. agreeable alternating (d-1)-simplex,
///  2. agreeable almost-alternating d-simplex,
///  3. alternating d-simplex of either sign.
enum class NodeType { AlternatingLower = 1, AlmostAlternating = 2, AlternatingFull = 3 };

struct Node {
  Simplex simplex;
  std::vector<int> labels;  // in simplex vertex order
  Carrier carrier;
  SimplexClass cls;
  NodeType type = NodeType::AlternatingFull;

  /// Sign of the alternating simplex, or of the agreeing facets for type 2.
  int sign() const { return type == NodeType::AlmostAlternating ? carrier.sign : *cls.sign; }

  friend bool operator==(const Node& a, const Node& b) {
    return a.simplex == b.simplex && a.labels == b.labels && a.carrier == b.carrier &&
           a.type == b.type;
  }
};

enum class Termination { AlternatingN, ComplementaryEdge, AntipodalStart };

inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::AlternatingN: return "AlternatingN";
    case Termination::ComplementaryEdge: return "ComplementaryEdge";
    case Termination::AntipodalStart: return "AntipodalStart";
  }
  return "?";
}

struct Witness {
  Simplex simplex;
  std::vector<int> labels;
  /// The zero-sum vertex pair, for ComplementaryEdge terminations.
  std::optional<std::pair<VertexId, VertexId>> complementary_edge;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PathTrace {
  std::vector<Node> nodes;
  Termination termination = Termination::AlternatingN;
  Witness witness;
  /// Set when Tucker mode returned an antipodal-pair edge without walking.
  bool short_circuit = false;

  friend bool operator==(const PathTrace&, const PathTrace&) = default;
};

/// The implicit graph G on a labelled, flagged complex.  Nodes and neighbors
/// are computed on demand; the graph is never materialized.  Holds references
/// to its inputs, which must outlive it.
class PathGraph {
 public:
  PathGraph(const SymmetricComplex& complex, const HemisphereFlag& flag, const Labeling& labeling,
            Mode mode)
      : complex_(&complex), flag_(&flag), labeling_(&labeling), mode_(mode) {}

  Mode mode() const { return mode_; }

  std::optional<Node> node(const Simplex& sigma) const {
    Node v;
    v.carrier = carrier(*flag_, sigma);
    v.labels = labeling_->of(sigma);
    v.cls = classify(v.labels);
    const int d = v.carrier.dim;
    const int s = v.carrier.sign;
    switch (v.cls.kind) {
      case SimplexKind::Alternating:
        if (sigma.dim() == d)
          v.type = NodeType::AlternatingFull;
        else if (sigma.dim() == d - 1 && *v.cls.sign == s)
          v.type = NodeType::AlternatingLower;
        else
          return std::nullopt;
        break;
      case SimplexKind::AlmostAlternating:
        if (sigma.dim() != d || !agreeable_almost(v.cls, s)) return std::nullopt;
        v.type = NodeType::AlmostAlternating;
        break;
      case SimplexKind::Other:
        return std::nullopt;
    }
    v.simplex = sigma;
    return v;
  }

  /// Neighbors in G: one or two nodes, facets before cofacets.
  std::vector<Node> neighbors(const Node& v) const {
    const int d = v.carrier.dim;
    const int s = v.carrier.sign;
    std::vector<Node> out;
    switch (v.type) {
      case NodeType::AlternatingLower: {
        const auto& cof = flag_->cofacets_in(v.simplex, d, s);
        if (cof.size() != 2)
          throw StructuralError("interior face " + to_string(v.simplex) + " has " +
                                std::to_string(cof.size()) + " cofacets in its hemisphere");
        for (const Simplex& c : cof) out.push_back(require_node(c));
        break;
      }
      case NodeType::AlmostAlternating:
        for (std::size_t i = 0; i < v.cls.alternating_facets.size(); ++i)
          if (v.cls.facet_signs[i] == s)
            out.push_back(require_node(v.simplex.without(v.cls.alternating_facets[i])));
        break;
      case NodeType::AlternatingFull: {
        const int sign = *v.cls.sign;
        if (d > 0) {
          // Dropping the largest label keeps the sign, dropping the smallest flips it.
          std::size_t pos = 0;
          for (std::size_t i = 1; i < v.labels.size(); ++i) {
            const bool larger = std::abs(v.labels[i]) > std::abs(v.labels[pos]);
            if (sign == s ? larger : !larger) pos = i;
          }
          out.push_back(require_node(v.simplex.without(pos)));
        }
        if (d < flag_->dim()) {
          const auto& cof = flag_->cofacets_in(v.simplex, d + 1, sign);
          if (cof.size() != 1)
            throw StructuralError("boundary simplex " + to_string(v.simplex) + " has " +
                                  std::to_string(cof.size()) + " cofacets on one side");
          out.push_back(require_node(cof.front()));
        }
        break;
      }
    }
    return out;
  }

  Node start() const { return require_node(flag_->base()); }

 private:
  bool agreeable_almost(const SimplexClass& c, int carrier_sign) const {
    if (!c.has_complementary_edge) return c.sign && *c.sign == carrier_sign;
    if (mode_ == Mode::Fan) return false;
    for (int fs : c.facet_signs)
      if (fs == carrier_sign) return true;
    return false;
  }

  Node require_node(const Simplex& sigma) const {
    auto v = node(sigma);
    if (!v) throw StructuralError("expected " + to_string(sigma) + " to be a node of G");
    return std::move(*v);
  }

  const SymmetricComplex* complex_;
  const HemisphereFlag* flag_;
  const Labeling* labeling_;
  Mode mode_;
};

inline std::optional<Node> is_node(const SymmetricComplex& k, const HemisphereFlag& f,
                                   const Labeling& l, const Simplex& sigma, Mode mode) {
  return PathGraph(k, f, l, mode).node(sigma);
}

inline std::vector<Node> neighbors(const SymmetricComplex& k, const HemisphereFlag& f,
                                   const Labeling& l, const Node& v, Mode mode) {
  return PathGraph(k, f, l, mode).neighbors(v);
}

/// The zero-sum vertex pair inside `sigma`, if any.
inline std::optional<std::pair<VertexId, VertexId>> complementary_pair(const Simplex& sigma,
                                                                       const Labeling& l) {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (l[sigma[i]] + l[sigma[j]] == 0) return std::pair{sigma[i], sigma[j]};
  return std::nullopt;
}

/// Checks everything run() requires and throws on the first failing group:
/// ValidationError for a malformed complex, flag or label table,
/// HypothesisError for a violated mode hypothesis.
inline void check_instance(const SymmetricComplex& k, const HemisphereFlag& f, const Labeling& l,
                           Mode mode) {
  auto sym = validate_symmetry(k);
  if (!sym.ok) throw ValidationError("complex is not a symmetric pseudo-manifold", sym.violations);
  if (l.size() != k.vertex_count())
    throw ValidationError("labeling does not match the complex",
                          {std::to_string(l.size()) + " labels for " +
                           std::to_string(k.vertex_count()) + " vertices"});
  auto fr = validate_flag(k, f);
  if (!fr.ok) {
    std::vector<std::string> details;
    for (const auto& v : fr.violations) details.push_back("d=" + std::to_string(v.dim) + ": " + v.what);
    throw ValidationError("flag of hemispheres is invalid", std::move(details));
  }
  auto lr = validate_labeling(k, l, mode == Mode::Fan);
  if (!lr.ok) throw HypothesisError("labeling violates the " + std::string(to_string(mode)) +
                                    "-mode hypotheses", lr.messages);
  if (mode == Mode::Fan && l.bound() <= k.dim())
    throw HypothesisError("Fan mode needs m >= n+1",
                          {"anti-symmetric labels without complementary edges force m >= n+1; got m=" +
                           std::to_string(l.bound()) + ", n=" + std::to_string(k.dim())});
}

/// Follows the path of G that starts at H_0.
///
/// Fan mode ends at an alternating n-simplex.  Tucker mode ends at an
/// almost-alternating simplex with a complementary edge (or at an alternating
/// n-simplex when m > n); if some simplex already contains an antipodal vertex
/// pair, that edge is returned at once with an empty trace.  Reaching -H_0 is
/// reported as an AntipodalStart termination.  Revisiting a node throws
/// StructuralError.
inline PathTrace run(const SymmetricComplex& k, const HemisphereFlag& f, const Labeling& l,
                     Mode mode) {
  if (mode == Mode::Tucker) {
    auto sym = validate_symmetry(k);
    if (!sym.ok)
      throw ValidationError("complex is not a symmetric pseudo-manifold", sym.violations);
    if (sym.has_antipodal_pair) {
      if (l.size() != k.vertex_count()) throw ValidationError("labeling does not match the complex");
      auto lr = validate_labeling(k, l, false);
      if (!lr.ok) throw HypothesisError("labeling is not anti-symmetric", lr.messages);
      const Simplex& e = sym.antipodal_pair_edges.front();
      PathTrace t;
      t.termination = Termination::ComplementaryEdge;
      t.witness = {e, l.of(e), std::pair{e[0], e[1]}};
      t.short_circuit = true;
      return t;
    }
  }
  check_instance(k, f, l, mode);

  PathGraph g(k, f, l, mode);
  PathTrace t;
  Node cur = g.start();
  std::optional<Simplex> prev;
  SimplexSet visited{cur.simplex};
  t.nodes.push_back(cur);
  while (true) {
    auto nb = g.neighbors(cur);
    if (nb.size() > 2) throw StructuralError("node " + to_string(cur.simplex) + " has degree > 2");
    std::optional<Node> next;
    if (!prev) {
      if (nb.size() != 1) throw StructuralError("H_0 must have degree 1");
      next = nb.front();
    } else {
      auto back = std::find_if(nb.begin(), nb.end(), [&](const Node& n) { return n.simplex == *prev; });
      if (back == nb.end())
        throw StructuralError("adjacency is not symmetric at " + to_string(cur.simplex));
      if (nb.size() == 1) break;
      next = nb[0].simplex == *prev ? nb[1] : nb[0];
    }
    if (!visited.insert(next->simplex).second)
      throw StructuralError("walk revisited " + to_string(next->simplex) + "; instance is invalid");
    prev = cur.simplex;
    cur = std::move(*next);
    t.nodes.push_back(cur);
  }

  t.witness.simplex = cur.simplex;
  t.witness.labels = cur.labels;
  if (cur.simplex == k.antipode(f.base())) {
    t.termination = Termination::AntipodalStart;
  } else if (cur.type == NodeType::AlternatingFull && cur.simplex.dim() == k.dim()) {
    t.termination = Termination::AlternatingN;
  } else if (cur.type == NodeType::AlmostAlternating && cur.cls.has_complementary_edge) {
    t.termination = Termination::ComplementaryEdge;
    t.witness.complementary_edge = complementary_pair(cur.simplex, l);
  } else {
    throw StructuralError("walk stopped at " + to_string(cur.simplex) +
                          ", which is not an endpoint of G");
  }
  return t;
}

inline Node antipodal_node(const SymmetricComplex& k, const Node& v) {
  Node out;
  out.simplex = k.antipode(v.simplex);
  std::map<VertexId, int> label;
  for (std::size_t i = 0; i < v.simplex.size(); ++i) label[k.antipode(v.simplex[i])] = -v.labels[i];
  for (VertexId u : out.simplex) out.labels.push_back(label.at(u));
  out.carrier = {v.carrier.dim, -v.carrier.sign};
  out.cls = classify(out.labels);
  out.type = v.type;
  return out;
}

/// Vertex-wise antipodal image of a trace; a valid trace from -H_0.
inline PathTrace trace_antipode(const SymmetricComplex& k, const PathTrace& t) {
  PathTrace out;
  out.termination = t.termination;
  out.short_circuit = t.short_circuit;
  for (const Node& v : t.nodes) out.nodes.push_back(antipodal_node(k, v));
  out.witness.simplex = k.antipode(t.witness.simplex);
  std::map<VertexId, int> label;
  for (std::size_t i = 0; i < t.witness.simplex.size(); ++i)
    label[k.antipode(t.witness.simplex[i])] = -t.witness.labels[i];
  for (VertexId u : out.witness.simplex) out.witness.labels.push_back(label.at(u));
  if (t.witness.complementary_edge) {
    auto [a, b] = *t.witness.complementary_edge;
    const VertexId x = k.antipode(a), y = k.antipode(b);
    out.witness.complementary_edge = std::pair{std::min(x, y), std::max(x, y)};
  }
  return out;
}

}  // namespace tucker
