// Copyright 2026 The payplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAYPLAY_GRAPH_HPP_
#define PAYPLAY_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "payplay/errors.hpp"
#include "payplay/profile.hpp"

namespace payplay {

// Simple undirected graph on at most 32 vertices (vertex sets are
// Coalition masks). Edges are stored with u < v, sorted and deduplicated.
class UndirectedGraph {
 public:
  using Edge = std::pair<int, int>;

  UndirectedGraph() = default;
  UndirectedGraph(int num_vertices, std::vector<Edge> edges)
      : n_(num_vertices), adj_(num_vertices, 0) {
    if (num_vertices < 1 || num_vertices > 32) {
      throw InvalidGame("vertex count must be in [1, 32]");
    }
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InvalidGame("edge (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") has an endpoint out of range");
      }
      if (u == v) {
        throw InvalidGame("self-loop at vertex " + std::to_string(u));
      }
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
      adj_[u] |= Coalition::Mask{1} << v;
      adj_[v] |= Coalition::Mask{1} << u;
    }
  }

  static UndirectedGraph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return {n, e};
  }
  static UndirectedGraph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return {n, e};
  }
  static UndirectedGraph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    }
    return {n, e};
  }

  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Coalition neighbors(int v) const { return Coalition(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }

  // Vertices reachable from v inside `allowed` (v itself must be allowed).
  Coalition component_within(int v, Coalition allowed) const {
    Coalition::Mask comp = Coalition::Mask{1} << v;
    Coalition::Mask frontier = comp;
    while (frontier != 0) {
      Coalition::Mask next = 0;
      for (Coalition::Mask f = frontier; f != 0; f &= f - 1) {
        next |= adj_[std::countr_zero(f)];
      }
      next &= allowed.mask() & ~comp;
      comp |= next;
      frontier = next;
    }
    return Coalition(comp);
  }

  // Number of edges with both endpoints in `vertices`.
  int edges_within(Coalition vertices) const {
    int twice = 0;
    for (int v : vertices.members()) {
      twice += std::popcount(adj_[v] & vertices.mask());
    }
    return twice / 2;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Coalition::Mask> adj_;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

// Cut vertices of the subgraph induced on `vertices` (Hopcroft-Tarjan).
inline Coalition articulation_points(const UndirectedGraph& g,
                                     Coalition vertices) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  Coalition cut;
  int timer = 0;
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int v : (g.neighbors(u) & vertices).members()) {
      if (v == parent) continue;
      if (disc[v] >= 0) {
        low[u] = std::min(low[u], disc[v]);
        continue;
      }
      ++children;
      self(self, v, u);
      low[u] = std::min(low[u], low[v]);
      if (parent >= 0 && low[v] >= disc[u]) cut = cut.with(u);
    }
    if (parent < 0 && children > 1) cut = cut.with(u);
  };
  for (int v : vertices.members()) {
    if (disc[v] < 0) dfs(dfs, v, -1);
  }
  return cut;
}

}  // namespace payplay

#endif  // PAYPLAY_GRAPH_HPP_
