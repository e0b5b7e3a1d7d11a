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

#include "wpl/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "wpl/error.hpp"

namespace wpl {

Quiver::Quiver(std::vector<Vertex> vertices, const std::vector<Arrow>& arrows)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices_[i].id == vertices_[j].id) {
        throw PreconditionError("duplicate vertex id " +
                                std::to_string(vertices_[i].id));
      }
    }
  }
  m_.assign(n * n, 0);
  for (const Arrow& a : arrows) {
    if (a.mult < 0) {
      throw PreconditionError("negative arrow multiplicity");
    }
    const std::size_t i = IndexOf(a.from);
    const std::size_t j = IndexOf(a.to);
    if (i == j && a.mult > 0) {
      throw InvariantViolation("loop at vertex " + std::to_string(a.from));
    }
    m_[i * n + j] += a.mult;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(i, j) > 0 && m(j, i) > 0) {
        throw InvariantViolation(
            "2-cycle between vertices " + std::to_string(vertices_[i].id) +
            " and " + std::to_string(vertices_[j].id));
      }
    }
  }
}

std::vector<int> Quiver::ids() const {
  std::vector<int> out;
  out.reserve(size());
  for (const Vertex& v : vertices_) out.push_back(v.id);
  return out;
}

bool Quiver::has_vertex(int id) const {
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [id](const Vertex& v) { return v.id == id; });
}

std::size_t Quiver::IndexOf(int id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  throw PreconditionError("unknown vertex id " + std::to_string(id));
}

int Quiver::Multiplicity(int from_id, int to_id) const {
  return m(IndexOf(from_id), IndexOf(to_id));
}

std::vector<std::vector<int>> Quiver::ExchangeMatrix() const {
  const std::size_t n = size();
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i][j] = m(i, j) - m(j, i);
  }
  return b;
}

std::vector<Arrow> Quiver::Arrows() const {
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (m(i, j) > 0) out.push_back({vertices_[i].id, vertices_[j].id, m(i, j)});
    }
  }
  return out;
}

std::size_t Quiver::ArrowCount() const {
  std::size_t total = 0;
  for (int v : m_) total += static_cast<std::size_t>(v);
  return total;
}

Quiver Quiver::Mutate(int id) const {
  const std::size_t k = IndexOf(id);
  const std::size_t n = size();
  const auto b = ExchangeMatrix();
  Quiver out;
  out.vertices_ = vertices_;
  out.m_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int v;
      if (i == k || j == k) {
        v = -b[i][j];
      } else {
        v = b[i][j] + (std::abs(b[i][k]) * b[k][j] +
                       b[i][k] * std::abs(b[k][j])) / 2;
      }
      if (v > 0) out.m_[i * n + j] = v;
    }
  }
  return out;
}

Quiver Quiver::ApplySequence(const std::vector<int>& ids) const {
  for (int id : ids) IndexOf(id);
  Quiver q = *this;
  for (int id : ids) q = q.Mutate(id);
  return q;
}

bool Quiver::operator==(const Quiver& other) const {
  if (size() != other.size()) return false;
  std::vector<std::size_t> pos(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (!other.has_vertex(vertices_[i].id)) return false;
    pos[i] = other.IndexOf(vertices_[i].id);
  }
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (m(i, j) != other.m(pos[i], pos[j])) return false;
    }
  }
  return true;
}

Quiver MutateByRewriting(const Quiver& q, int id) {
  const std::size_t k = q.IndexOf(id);
  const std::size_t n = q.size();
  std::vector<int> next = q.m_;
  // composites j -> k -> l
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      if (j == k || l == k) continue;
      next[j * n + l] += q.m(j, k) * q.m(k, l);
    }
  }
  // reverse the arrows at k
  for (std::size_t j = 0; j < n; ++j) {
    next[j * n + k] = q.m(k, j);
    next[k * n + j] = q.m(j, k);
  }
  // cancel 2-cycles
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = j + 1; l < n; ++l) {
      const int c = std::min(next[j * n + l], next[l * n + j]);
      next[j * n + l] -= c;
      next[l * n + j] -= c;
    }
  }
  Quiver out;
  out.vertices_ = q.vertices_;
  out.m_ = std::move(next);
  return out;
}

namespace {

struct Profile {
  std::vector<int> out;
  std::vector<int> in;

  auto operator<=>(const Profile&) const = default;
};

Profile ProfileOf(const Quiver& q, std::size_t v) {
  Profile p;
  for (std::size_t u = 0; u < q.size(); ++u) {
    if (q.m(v, u) > 0) p.out.push_back(q.m(v, u));
    if (q.m(u, v) > 0) p.in.push_back(q.m(u, v));
  }
  std::sort(p.out.begin(), p.out.end());
  std::sort(p.in.begin(), p.in.end());
  return p;
}

}  // namespace

std::optional<VertexMap> FindIsomorphism(const Quiver& a, const Quiver& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.ArrowCount() != b.ArrowCount()) return std::nullopt;
  std::vector<Profile> pa(n), pb(n);
  for (std::size_t v = 0; v < n; ++v) {
    pa[v] = ProfileOf(a, v);
    pb[v] = ProfileOf(b, v);
  }
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Order the vertices of `a` so that each one is adjacent to an earlier one
  // whenever possible; this makes the consistency check bite early.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    std::size_t best = n;
    int best_links = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (std::size_t u : order) links += (a.m(u, v) + a.m(v, u)) > 0;
      if (links > best_links) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || pa[v] != pb[w]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t u = order[d];
        ok = a.m(v, u) == b.m(w, image[u]) && a.m(u, v) == b.m(image[u], w);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;

  VertexMap out;
  for (std::size_t v = 0; v < n; ++v) {
    out.emplace_back(a.vertices()[v].id, b.vertices()[image[v]].id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const {
  std::size_t h = std::hash<std::size_t>()(k.n);
  for (int v : k.matrix) {
    h ^= std::hash<int>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

class Canonicaliser {
 public:
  explicit Canonicaliser(const Quiver& q) : n_(q.size()), b_(n_ * n_) {
    const auto b = q.ExchangeMatrix();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) b_[i * n_ + j] = b[i][j];
    }
  }

  CanonicalKey Run() {
    std::vector<int> colour(n_, 0);
    Refine(colour);
    Descend(colour);
    CanonicalKey key;
    key.n = n_;
    key.matrix = std::move(best_);
    return key;
  }

 private:
  // Iterated neighbourhood refinement. Colours are ranks of signatures, so
  // the result depends only on the structure, never on vertex positions.
  void Refine(std::vector<int>& colour) const {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::size_t cells = CountCells(colour);
    while (true) {
      std::vector<Signature> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        sig[v].first = colour[v];
        for (std::size_t u = 0; u < n_; ++u) {
          const int e = b_[v * n_ + u];
          if (e != 0) sig[v].second.emplace_back(colour[u], e);
        }
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      std::vector<Signature> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t v = 0; v < n_; ++v) {
        colour[v] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
            sorted.begin());
      }
      if (sorted.size() == cells) return;
      cells = sorted.size();
    }
  }

  static std::size_t CountCells(const std::vector<int>& colour) {
    std::vector<int> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) -
                                    c.begin());
  }

  void Descend(const std::vector<int>& colour) {
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < n_; ++v) cells[colour[v]].push_back(v);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    if (target == nullptr) {
      Leaf(colour);
      return;
    }
    for (std::size_t v : *target) {
      std::vector<int> next(n_);
      for (std::size_t u = 0; u < n_; ++u) {
        next[u] = 2 * colour[u] + (u == v ? 0 : 1);
      }
      Refine(next);
      Descend(next);
    }
  }

  void Leaf(const std::vector<int>& colour) {
    std::vector<int> m(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        m[static_cast<std::size_t>(colour[i]) * n_ +
          static_cast<std::size_t>(colour[j])] = b_[i * n_ + j];
      }
    }
    if (best_.empty() || m < best_) best_ = std::move(m);
  }

  std::size_t n_;
  std::vector<int> b_;
  std::vector<int> best_;
};

}  // namespace

CanonicalKey Canonical(const Quiver& q) {
  if (q.size() == 0) return {};
  return Canonicaliser(q).Run();
}

SearchResult SearchMutations(const Quiver& source, const Quiver& target,
                             int max_depth) {
  if (max_depth < 0) throw PreconditionError("max depth must be >= 0");
  SearchResult result;
  if (source.size() != target.size()) return result;

  struct Node {
    Quiver q;
    std::size_t parent;
    int via;
    int depth;
  };
  const CanonicalKey goal = Canonical(target);
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  std::vector<Node> nodes;
  auto finish = [&](std::size_t idx) {
    std::vector<int> seq;
    for (std::size_t i = idx; i != 0; i = nodes[i].parent) {
      seq.push_back(nodes[i].via);
    }
    std::reverse(seq.begin(), seq.end());
    result.sequence = std::move(seq);
    result.witness = FindIsomorphism(nodes[idx].q, target);
    result.classes_visited = seen.size();
    if (!result.witness) {
      throw VerificationFailure("canonical keys agree but no isomorphism found");
    }
  };

  const CanonicalKey start = Canonical(source);
  seen.insert(start);
  nodes.push_back({source, 0, 0, 0});
  if (start == goal) {
    finish(0);
    return result;
  }
  std::vector<int> ids = source.ids();
  std::sort(ids.begin(), ids.end());
  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    if (nodes[idx].depth >= max_depth) continue;
    for (int id : ids) {
      if (idx != 0 && id == nodes[idx].via) continue;
      Quiver child = nodes[idx].q.Mutate(id);
      CanonicalKey key = Canonical(child);
      if (!seen.insert(key).second) continue;
      nodes.push_back({std::move(child), idx, id, nodes[idx].depth + 1});
      if (key == goal) {
        finish(nodes.size() - 1);
        return result;
      }
    }
  }
  result.classes_visited = seen.size();
  return result;
}

}  // namespace wpl
