#include "kcf/graph.hpp"


namespace kcf {

vertex_set vertex_set::all(int size) {
  vertex_set s(size);
  for (auto &w : s.words_)
    w = ~std::uint64_t{0};
  if (size % 64)
    s.words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  return s;
}

int vertex_set::count() const {
  int c = 0;
  for (auto w : words_)
    c += std::popcount(w);
  return c;
}

bool vertex_set::none() const {
  for (auto w : words_)
    if (w)
      return false;
  return true;
}

int vertex_set::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w])
      return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

int vertex_set::next(int v) const {
  int start = v + 1;
  if (start >= size_)
    return -1;
  std::size_t w = start >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (word)
      return static_cast<int>(w * 64 + std::countr_zero(word));
    if (++w == words_.size())
      return -1;
    word = words_[w];
  }
}

void vertex_set::clear_upto(int v) {
  if (v < 0)
    return;
  std::size_t full = (v + 1) >> 6;
  for (std::size_t w = 0; w < full && w < words_.size(); ++w)
    words_[w] = 0;
  if (full < words_.size() && ((v + 1) & 63))
    words_[full] &= ~std::uint64_t{0} << ((v + 1) & 63);
}

vertex_set &vertex_set::operator&=(const vertex_set &o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= o.words_[i];
  return *this;
}

vertex_set &vertex_set::operator|=(const vertex_set &o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= o.words_[i];
  return *this;
}

vertex_set &vertex_set::subtract(const vertex_set &o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

bool vertex_set::intersects(const vertex_set &o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i])
      return true;
  return false;
}

int vertex_set::count_and(const vertex_set &o) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

std::vector<int> vertex_set::members() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

graph::graph(int order) : rows_(order, vertex_set(order)) {}

void graph::add_edge(int u, int v) {
  if (u == v)
    return;
  rows_[u].set(v);
  rows_[v].set(u);
}

long graph::edge_count() const {
  long twice = 0;
  for (const auto &r : rows_)
    twice += r.count();
  return twice / 2;
}

double graph::average_degree() const {
  return rows_.empty() ? 0.0 : 2.0 * static_cast<double>(edge_count()) / static_cast<double>(rows_.size());
}

bool is_independent(const graph &g, const std::vector<int> &vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]))
        return false;
  return true;
}

bool is_clique(const graph &g, const std::vector<int> &vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j]))
        return false;
  return true;
}

int greedy_colour_count(const graph &g, const vertex_set &candidates, int stop_at) {
  // Each class is kept as the set of uncoloured candidates it can still absorb.
  vertex_set uncoloured = candidates;
  int colours = 0;
  while (uncoloured.any() && colours < stop_at) {
    ++colours;
    vertex_set open = uncoloured;
    for (int v = open.first(); v >= 0; v = open.next(v)) {
      uncoloured.reset(v);
      open.subtract(g.neighbours(v));
    }
  }
  return colours;
}

} // namespace kcf
