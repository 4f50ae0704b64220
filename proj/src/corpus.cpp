#include "branchwise/corpus.hpp"

#include <algorithm>
#include <limits>

#include "branchwise/error.hpp"

namespace branchwise {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(Errc::OutOfRange, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() > 24) throw Error(Errc::TooLarge, "too many vertices for exhaustive generation");
  std::vector<Graph> out;
  const std::uint32_t limit = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (std::uint32_t{1} << k)) es.push_back(pairs[k]);
    }
    Graph g = Graph::from_edge_list(n, es);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph random_connected_graph(Rng& rng, int n, int pct) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.uniform(0, i))]);
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) {
    es.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.uniform(0, i - 1))]);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(static_cast<std::uint64_t>(pct), 100)) es.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, es);
}

Graph random_graph(Rng& rng, int n, int pct) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(static_cast<std::uint64_t>(pct), 100)) es.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, es);
}

namespace {

void cograph_edges(Rng& rng, std::vector<int> vs, std::vector<Edge>& es) {
  if (vs.size() <= 1) return;
  for (std::size_t i = vs.size() - 1; i > 0; --i) {
    std::swap(vs[i], vs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i)))]);
  }
  const auto cut = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(vs.size()) - 1));
  std::vector<int> left(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<int> right(vs.begin() + static_cast<std::ptrdiff_t>(cut), vs.end());
  if (rng.chance(1, 2)) {
    for (int u : left) {
      for (int v : right) es.emplace_back(u, v);
    }
  }
  cograph_edges(rng, std::move(left), es);
  cograph_edges(rng, std::move(right), es);
}

}  // namespace

Graph random_cograph(Rng& rng, int n) {
  std::vector<int> vs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
  std::vector<Edge> es;
  cograph_edges(rng, vs, es);
  return Graph::from_edge_list(n, es);
}

std::vector<std::int64_t> random_costs(Rng& rng, int n, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < n; ++i) out.push_back(rng.uniform(lo, hi));
  return out;
}

}  // namespace branchwise
