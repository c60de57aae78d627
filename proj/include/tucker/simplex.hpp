#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tucker {

using VertexId = std::uint32_t;

/// An abstract simplex: a nonempty, strictly increasing list of vertex ids.
/// Construction sorts its input and rejects duplicates.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<VertexId> vertices)
      : Simplex(std::vector<VertexId>(vertices)) {}
  explicit Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("simplex must have at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw std::invalid_argument("simplex has a repeated vertex");
  }

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  std::span<const VertexId> vertices() const { return vertices_; }

  bool contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool is_face_of(const Simplex& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }
  bool is_facet_of(const Simplex& other) const {
    return size() + 1 == other.size() && is_face_of(other);
  }

  /// The facet obtained by deleting the vertex at position `pos`.
  Simplex without(std::size_t pos) const {
    if (size() < 2) throw std::invalid_argument("a vertex has no facets");
    Simplex out;
    out.vertices_.reserve(size() - 1);
    for (std::size_t i = 0; i < size(); ++i)
      if (i != pos) out.vertices_.push_back(vertices_[i]);
    return out;
  }

  Simplex with(VertexId v) const {
    std::vector<VertexId> vs = vertices_;
    vs.push_back(v);
    return Simplex(std::move(vs));
  }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<VertexId> vertices_;
};

inline std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << '}';
}

inline std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + '}';
}

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = s.size();
    for (VertexId v : s) h ^= std::hash<VertexId>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;
template <typename T>
using SimplexMap = std::unordered_map<Simplex, T, SimplexHash>;

/// All k-dimensional faces of `sigma`, in lexicographic order.
inline std::vector<Simplex> faces(const Simplex& sigma, int k) {
  if (k < 0 || k > sigma.dim())
    throw std::out_of_range("face dimension " + std::to_string(k) + " outside 0.." +
                            std::to_string(sigma.dim()));
  const std::size_t r = static_cast<std::size_t>(k) + 1;
  const std::size_t n = sigma.size();
  std::vector<Simplex> out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<VertexId> buf(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) buf[i] = sigma[idx[i]];
    out.emplace_back(buf);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Members of `pool` that have `sigma` as a facet.
inline std::vector<Simplex> cofacets(const Simplex& sigma, std::span<const Simplex> pool) {
  std::vector<Simplex> out;
  for (const Simplex& tau : pool)
    if (sigma.is_facet_of(tau)) out.push_back(tau);
  return out;
}

}  // namespace tucker
