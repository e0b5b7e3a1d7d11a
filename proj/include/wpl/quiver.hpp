// Copyright 2026 The wpl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite quivers without loops and 2-cycles, their mutation, isomorphism
// testing and a breadth-first search for mutation sequences.
//
// Vertices carry a stable integer id and a label; mutation sequences refer
// to ids. Arrows are stored as a dense multiplicity matrix indexed by vertex
// position.

#ifndef WPL_QUIVER_HPP_
#define WPL_QUIVER_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wpl {

struct Vertex {
  int id = 0;
  std::string label;
  // Layout hint (grid position), if any.
  std::optional<int> row;
  std::optional<int> col;
};

struct Arrow {
  int from = 0;
  int to = 0;
  int mult = 1;

  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  // Parallel arrows may be given either as repeated entries or through mult.
  // Throws PreconditionError for duplicate or unknown ids and
  // InvariantViolation for loops or 2-cycles.
  Quiver(std::vector<Vertex> vertices, const std::vector<Arrow>& arrows);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::vector<int> ids() const;
  bool has_vertex(int id) const;
  // Position of the vertex with this id. Throws PreconditionError.
  std::size_t IndexOf(int id) const;

  // Number of arrows between positions i -> j.
  int m(std::size_t i, std::size_t j) const { return m_[i * size() + j]; }
  int Multiplicity(int from_id, int to_id) const;
  // b[i][j] = m[i][j] - m[j][i], by position.
  std::vector<std::vector<int>> ExchangeMatrix() const;
  // Arrows with positive multiplicity, ordered by (from position, to position).
  std::vector<Arrow> Arrows() const;
  std::size_t ArrowCount() const;

  // Exchange-matrix mutation at the vertex with this id.
  Quiver Mutate(int id) const;
  // Left-to-right composition of Mutate.
  Quiver ApplySequence(const std::vector<int>& ids) const;

  // Same ids and the same arrows between them. Vertex order and labels are
  // ignored.
  bool operator==(const Quiver& other) const;

 private:
  friend Quiver MutateByRewriting(const Quiver& q, int id);

  std::vector<Vertex> vertices_;
  std::vector<int> m_;
};

// Mutation by the graph rewriting rules: for each path j -> i -> k add the
// composite j -> k, reverse the arrows at i, then cancel 2-cycles. Kept as an
// independent implementation to cross-check Quiver::Mutate.
Quiver MutateByRewriting(const Quiver& q, int id);

// (id in the first quiver, id in the second) pairs, ordered by the first.
using VertexMap = std::vector<std::pair<int, int>>;

// An arrow-preserving bijection of vertices, ignoring labels, or nullopt.
// Backtracking over candidates with matching in/out degree profiles.
std::optional<VertexMap> FindIsomorphism(const Quiver& a, const Quiver& b);

// A complete isomorphism invariant: equal iff the quivers are isomorphic.
struct CanonicalKey {
  std::size_t n = 0;
  std::vector<int> matrix;  // exchange matrix in canonical vertex order

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const;
};

// Colour refinement followed by individualisation of each vertex of the
// first non-trivial cell; the key is the least relabelled matrix over all
// leaves of that search tree.
CanonicalKey Canonical(const Quiver& q);

struct SearchResult {
  std::optional<std::vector<int>> sequence;
  std::optional<VertexMap> witness;  // from the end quiver to the target
  std::size_t classes_visited = 0;
};

// Breadth-first search over isomorphism classes of quivers reachable from
// `source`, for a shortest mutation sequence whose result is isomorphic to
// `target`. Children are expanded in ascending vertex id, and an immediate
// repeat of the last vertex is skipped.
SearchResult SearchMutations(const Quiver& source, const Quiver& target,
                             int max_depth);

}  // namespace wpl

#endif  // WPL_QUIVER_HPP_
