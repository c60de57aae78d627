#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tucker/complex.hpp"
#include "tucker/flag.hpp"
#include "tucker/labeling.hpp"
#include "tucker/pathfinder.hpp"

namespace tucker {

struct AlternatingCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const AlternatingCounts&, const AlternatingCounts&) = default;
};

/// One connected component of G.  Paths are oriented from their
/// lexicographically smaller endpoint; `closed` marks a cycle.
struct Component {
  std::vector<Simplex> nodes;
  bool closed = false;
};

struct ClaimCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct OracleReport {
  Mode mode = Mode::Fan;
  AlternatingCounts alternating;
  std::vector<Node> nodes;  // sorted by simplex
  std::vector<std::pair<Simplex, Simplex>> edges;
  std::map<Simplex, std::size_t> degree;
  std::vector<Component> components;
  std::size_t endpoint_count = 0;
  std::vector<Simplex> endpoints;
  std::vector<ClaimCheck> claims;

  bool all_claims_hold() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.passed; });
  }
  const ClaimCheck* claim(const std::string& name) const {
    for (const auto& c : claims)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace oracle_detail {

// Sign of the alternating label set, 0 when not alternating.  Written from the
// {k_0, -k_1, k_2, ...} form directly: magnitudes must be distinct and
// the sign of the i-th smallest magnitude must be (-1)^i times the first.
inline int alternating_sign(const std::vector<int>& labels) {
  if (labels.empty()) return 0;
  std::map<int, int> by_magnitude;
  for (int x : labels)
    if (!by_magnitude.emplace(std::abs(x), x > 0 ? 1 : -1).second) return 0;
  const int first = by_magnitude.begin()->second;
  int expect = first;
  for (const auto& [mag, s] : by_magnitude) {
    if (s != expect) return 0;
    expect = -expect;
  }
  return first;
}

inline std::vector<int> labels_without(const std::vector<int>& labels, std::size_t skip) {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (i != skip) out.push_back(labels[i]);
  return out;
}

// Carrier by scanning hemisphere members for a coface, no closure tables.
inline std::optional<Carrier> scan_carrier(const HemisphereFlag& f, const Simplex& s) {
  for (int d = 0; d <= f.dim(); ++d) {
    bool pos = false, neg = false;
    for (const Simplex& t : f.hemisphere(d, +1)) pos = pos || s.is_face_of(t);
    for (const Simplex& t : f.hemisphere(d, -1)) neg = neg || s.is_face_of(t);
    if (pos && neg) return std::nullopt;
    if (pos) return Carrier{d, +1};
    if (neg) return Carrier{d, -1};
  }
  return std::nullopt;
}

struct Classified {
  bool is_node = false;
  Node node;
  bool carrier_ok = true;
};

inline Classified classify_simplex(const HemisphereFlag& f, const Labeling& l, const Simplex& s,
                                   Mode mode) {
  Classified out;
  auto c = scan_carrier(f, s);
  if (!c) {
    out.carrier_ok = false;
    return out;
  }
  const std::vector<int> labels = l.of(s);
  const int alt = alternating_sign(labels);
  bool zero_sum = false;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) zero_sum = zero_sum || labels[i] + labels[j] == 0;

  std::optional<NodeType> type;
  if (alt != 0) {
    if (s.dim() == c->dim)
      type = NodeType::AlternatingFull;
    else if (s.dim() == c->dim - 1 && alt == c->sign)
      type = NodeType::AlternatingLower;
  } else if (s.dim() == c->dim && s.size() > 1) {
    std::set<int> facet_signs;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (int fs = alternating_sign(labels_without(labels, i))) facet_signs.insert(fs);
    // Agreeable: the facet sign(s) match the carrier.  Without a complementary
    // edge the facets share one sign; with one (Tucker only) any matching facet
    // qualifies.
    const bool agreeable = zero_sum ? (mode == Mode::Tucker && facet_signs.contains(c->sign))
                                    : (facet_signs.size() == 1 && *facet_signs.begin() == c->sign);
    if (agreeable) type = NodeType::AlmostAlternating;
  }
  if (!type) return out;
  out.is_node = true;
  out.node.simplex = s;
  out.node.labels = labels;
  out.node.carrier = *c;
  out.node.cls = classify(labels);
  out.node.type = *type;
  return out;
}

inline std::vector<Simplex> sorted_set(std::vector<Simplex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace oracle_detail

/// Alternating n-simplices counted by sign, over all maximal simplices.
inline AlternatingCounts count_alternating(const SymmetricComplex& k, const Labeling& l) {
  AlternatingCounts c;
  for (const Simplex& s : k.maximal_simplices()) {
    const int sign = oracle_detail::alternating_sign(l.of(s));
    if (sign > 0) ++c.positive;
    if (sign < 0) ++c.negative;
  }
  return c;
}

/// Agreeable almost-alternating simplices containing a complementary edge,
/// counted by the sign of their carrier hemisphere.
inline AlternatingCounts count_tucker_endpoints(const SymmetricComplex& k, const HemisphereFlag& f,
                                                const Labeling& l) {
  AlternatingCounts c;
  for (int d = 1; d <= k.dim(); ++d)
    for (const Simplex& s : k.simplices(d)) {
      auto r = oracle_detail::classify_simplex(f, l, s, Mode::Tucker);
      if (r.is_node && r.node.type == NodeType::AlmostAlternating &&
          r.node.cls.has_complementary_edge)
        ++(r.node.carrier.sign > 0 ? c.positive : c.negative);
    }
  return c;
}

/// Materializes all of G by brute force and checks every degree, parity and
/// pairing claim, plus pointwise agreement with PathGraph::neighbors().
///
/// Adjacency here is tested literally: sigma ⊂ rho as a facet, sigma
/// alternating, the carrier sign of rho equal to the sign of sigma, and rho
/// full-dimensional in its carrier (so that rho is a type 2 or 3 node).
inline OracleReport build_graph(const SymmetricComplex& k, const HemisphereFlag& f,
                                const Labeling& l, Mode mode, unsigned jobs = 1) {
  using namespace oracle_detail;
  OracleReport r;
  r.mode = mode;
  r.alternating = count_alternating(k, l);

  std::vector<Simplex> all;
  for (int d = 0; d <= k.dim(); ++d) all.insert(all.end(), k.simplices(d).begin(), k.simplices(d).end());
  std::sort(all.begin(), all.end());

  std::vector<Classified> cls(all.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) cls[i] = classify_simplex(f, l, all[i], mode);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, 64));
  if (jobs == 1) {
    work(0, all.size());
  } else {
    std::vector<std::future<void>> parts;
    const std::size_t chunk = (all.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < all.size(); b += chunk)
      parts.push_back(std::async(std::launch::async, work, b, std::min(all.size(), b + chunk)));
    for (auto& p : parts) p.get();
  }

  ClaimCheck carriers{"every_simplex_has_carrier", true, ""};
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!cls[i].carrier_ok) {
      carriers.passed = false;
      carriers.detail += to_string(all[i]) + " ";
    }
    if (cls[i].is_node) {
      index.emplace(all[i], r.nodes.size());
      r.nodes.push_back(cls[i].node);
    }
  }
  r.claims.push_back(carriers);

  std::vector<std::vector<std::size_t>> adj(r.nodes.size());
  ClaimCheck edge_nodes{"edges_join_nodes", true, ""};
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const Node& rho = r.nodes[i];
    if (rho.simplex.dim() != rho.carrier.dim || rho.simplex.size() < 2) continue;
    for (std::size_t p = 0; p < rho.simplex.size(); ++p) {
      const Simplex sigma = rho.simplex.without(p);
      const int s = alternating_sign(labels_without(rho.labels, p));
      if (s == 0 || s != rho.carrier.sign) continue;
      auto it = index.find(sigma);
      if (it == index.end()) {
        edge_nodes.passed = false;
        edge_nodes.detail += to_string(sigma) + "<" + to_string(rho.simplex) + " ";
        continue;
      }
      adj[i].push_back(it->second);
      adj[it->second].push_back(i);
      r.edges.emplace_back(sigma, rho.simplex);
    }
  }
  std::sort(r.edges.begin(), r.edges.end());
  r.claims.push_back(edge_nodes);

  ClaimCheck degree{"degree_one_or_two", true, ""};
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const std::size_t deg = adj[i].size();
    r.degree[r.nodes[i].simplex] = deg;
    if (deg == 1) r.endpoints.push_back(r.nodes[i].simplex);
    if (deg < 1 || deg > 2) {
      degree.passed = false;
      degree.detail += to_string(r.nodes[i].simplex) + ":" + std::to_string(deg) + " ";
    }
  }
  r.endpoint_count = r.endpoints.size();
  r.claims.push_back(degree);

  // Pointwise agreement with the on-demand neighbor computation.
  ClaimCheck agree{"neighbors_match_pathfinder", true, ""};
  PathGraph g(k, f, l, mode);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const Node& v = r.nodes[i];
    std::string problem;
    try {
      auto pv = g.node(v.simplex);
      if (!pv || pv->type != v.type || !(pv->carrier == v.carrier)) {
        problem = "node predicate differs";
      } else {
        std::vector<Simplex> mine, theirs;
        for (std::size_t j : adj[i]) mine.push_back(r.nodes[j].simplex);
        for (const Node& n : g.neighbors(*pv)) theirs.push_back(n.simplex);
        if (sorted_set(mine) != sorted_set(theirs)) problem = "neighbor sets differ";
      }
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (!problem.empty()) {
      agree.passed = false;
      agree.detail += to_string(v.simplex) + " (" + problem + ") ";
    }
  }
  for (int d = 0; d <= k.dim(); ++d)
    for (const Simplex& s : k.simplices(d))
      if (!index.contains(s)) {
        try {
          if (g.node(s)) {
            agree.passed = false;
            agree.detail += to_string(s) + " (pathfinder-only node) ";
          }
        } catch (const std::exception&) {
        }
      }
  r.claims.push_back(agree);

  // Path decomposition.
  std::vector<bool> seen(r.nodes.size(), false);
  auto walk_from = [&](std::size_t start) {
    Component c;
    bool all_degree_two = true;
    std::size_t cur = start;
    std::optional<std::size_t> prev;
    while (true) {
      seen[cur] = true;
      c.nodes.push_back(r.nodes[cur].simplex);
      all_degree_two = all_degree_two && adj[cur].size() == 2;
      std::optional<std::size_t> next;
      for (std::size_t j : adj[cur])
        if (j != prev && !seen[j]) {
          next = j;
          break;
        }
      if (!next) break;
      prev = cur;
      cur = *next;
    }
    c.closed = all_degree_two && c.nodes.size() > 2;
    if (!c.closed && c.nodes.back() < c.nodes.front()) std::reverse(c.nodes.begin(), c.nodes.end());
    return c;
  };
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    if (!seen[i] && adj[i].size() <= 1) r.components.push_back(walk_from(i));
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    if (!seen[i]) r.components.push_back(walk_from(i));
  std::sort(r.components.begin(), r.components.end(),
            [](const Component& a, const Component& b) { return a.nodes < b.nodes; });

  const Simplex base = f.base();
  const Simplex anti_base = k.antipode(base);
  if (mode == Mode::Fan) {
    std::vector<Simplex> expected{base, anti_base};
    for (const Simplex& s : k.maximal_simplices())
      if (alternating_sign(l.of(s)) != 0) expected.push_back(s);
    const bool ok = sorted_set(expected) == sorted_set(r.endpoints);
    r.claims.push_back({"degree_one_characterization", ok,
                        ok ? "" : "degree-1 nodes differ from {±H_0} ∪ alternating n-simplices"});
  }
  r.claims.push_back({"endpoints_multiple_of_four", r.endpoint_count % 4 == 0,
                      std::to_string(r.endpoint_count) + " endpoints"});

  {
    std::set<std::vector<Simplex>> comps;
    for (const auto& c : r.components) comps.insert(sorted_set(c.nodes));
    ClaimCheck pairing{"antipodal_pairing", true, ""};
    for (const auto& c : comps) {
      std::vector<Simplex> image;
      for (const Simplex& s : c) image.push_back(k.antipode(s));
      image = sorted_set(std::move(image));
      if (image == c) {
        pairing.passed = false;
        pairing.detail += "self-paired component at " + to_string(c.front()) + " ";
      } else if (!comps.contains(image)) {
        pairing.passed = false;
        pairing.detail += "component at " + to_string(c.front()) + " has no antipodal partner ";
      }
    }
    r.claims.push_back(pairing);
  }

  if (mode == Mode::Fan) {
    r.claims.push_back({"positive_count_odd", r.alternating.positive % 2 == 1,
                        std::to_string(r.alternating.positive) + " positive"});
    r.claims.push_back({"counts_equal", r.alternating.positive == r.alternating.negative,
                        std::to_string(r.alternating.positive) + " vs " +
                            std::to_string(r.alternating.negative)});
  } else if (l.bound() == k.dim()) {
    const auto t = count_tucker_endpoints(k, f, l);
    r.claims.push_back({"tucker_endpoints_odd_equal",
                        t.positive % 2 == 1 && t.positive == t.negative,
                        std::to_string(t.positive) + " positive, " + std::to_string(t.negative) +
                            " negative"});
  }
  return r;
}

/// True iff the trace is one of the report's paths, read from the trace's
/// first node.
inline bool verify_path(const OracleReport& r, const PathTrace& t) {
  if (t.nodes.empty()) return false;
  std::map<Simplex, const Node*> by_simplex;
  for (const Node& n : r.nodes) by_simplex[n.simplex] = &n;
  for (const Node& n : t.nodes) {
    auto it = by_simplex.find(n.simplex);
    if (it == by_simplex.end() || !(*it->second == n)) return false;
  }
  for (const Component& c : r.components) {
    if (c.closed || c.nodes.size() != t.nodes.size()) continue;
    auto matches = [&](auto first) {
      for (std::size_t i = 0; i < t.nodes.size(); ++i, ++first)
        if (*first != t.nodes[i].simplex) return false;
      return true;
    };
    if (c.nodes.front() == t.nodes.front().simplex && matches(c.nodes.begin())) return true;
    if (c.nodes.back() == t.nodes.front().simplex && matches(c.nodes.rbegin())) return true;
  }
  return false;
}

}  // namespace tucker
