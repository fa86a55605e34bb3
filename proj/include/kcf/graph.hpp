#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace kcf {

/// Fixed-capacity bitset over vertex indices 0..size-1.
class vertex_set {
public:
  vertex_set() = default;
  explicit vertex_set(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static vertex_set all(int size);

  int capacity() const { return size_; }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const;
  bool none() const;
  bool any() const { return !none(); }
  /// Smallest member, or -1.
  int first() const;
  /// Smallest member > v, or -1.
  int next(int v) const;

  /// Drops every member <= v.
  void clear_upto(int v);

  vertex_set &operator&=(const vertex_set &o);
  vertex_set &operator|=(const vertex_set &o);
  /// Removes members of `o`.
  vertex_set &subtract(const vertex_set &o);
  bool intersects(const vertex_set &o) const;
  int count_and(const vertex_set &o) const;

  friend vertex_set operator&(vertex_set a, const vertex_set &b) { return a &= b; }
  friend bool operator==(const vertex_set &, const vertex_set &) = default;

  std::vector<int> members() const;

  template <typename F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f(static_cast<int>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph with bitset adjacency rows.
class graph {
public:
  graph() = default;
  explicit graph(int order);

  int order() const { return static_cast<int>(rows_.size()); }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const vertex_set &neighbours(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }
  long edge_count() const;
  double average_degree() const;

  /// Row access for parallel construction; callers keep rows symmetric.
  vertex_set &row(int v) { return rows_[v]; }

  friend bool operator==(const graph &, const graph &) = default;

private:
  std::vector<vertex_set> rows_;
};

bool is_independent(const graph &g, const std::vector<int> &vertices);
bool is_clique(const graph &g, const std::vector<int> &vertices);

/// Greedy sequential colouring of `candidates` in index order; the number of
/// colours bounds the clique number of the induced subgraph.
int greedy_colour_count(const graph &g, const vertex_set &candidates, int stop_at);

} // namespace kcf
