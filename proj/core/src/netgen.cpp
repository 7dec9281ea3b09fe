#include "pseirs/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pseirs/error.hpp"

namespace pseirs::netgen {

namespace {

// Uniform index in [0, bound) by rejection on raw 64-bit draws. Unlike
// std::uniform_int_distribution this gives the same sequence everywhere.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return static_cast<std::size_t>(draw % b);
}

void finalize(Graph& g) {
  for (auto& [u, v] : g.edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
}

}  // namespace

Graph complete_graph(std::size_t n) {
  Graph g;
  g.n = n;
  g.m0 = n;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

Graph generate_ba(std::size_t n, std::size_t m0, std::size_t m, std::uint64_t seed) {
  if (m0 < 1 || m < 1 || m > m0 || n < m0) {
    std::ostringstream os;
    os << "Barabasi-Albert needs m0 >= 1, 1 <= m <= m0, n >= m0; got n=" << n << " m0=" << m0
       << " m=" << m;
    throw Error(ErrorKind::InvalidGraphParams, os.str());
  }
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::InvalidGraphParams, "node count exceeds 32-bit index range");
  }

  Graph g = complete_graph(m0);
  g.n = n;
  g.seed = seed;
  g.m0 = m0;
  g.m = m;
  g.edges.reserve(m0 * (m0 - 1) / 2 + m * (n - m0));

  // Every edge contributes both endpoints, so a uniform draw from this pool
  // picks a node with probability proportional to its degree.
  std::vector<std::uint32_t> pool;
  pool.reserve(2 * g.edges.capacity());
  for (const auto& [u, v] : g.edges) {
    pool.push_back(u);
    pool.push_back(v);
  }

  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> targets;
  for (std::size_t node = m0; node < n; ++node) {
    targets.clear();
    if (pool.empty()) {
      // m0 == 1: the seed node has no edges yet; the only choice is node 0.
      targets.push_back(0);
    }
    while (targets.size() < m) {
      const std::uint32_t pick = pool[uniform_index(rng, pool.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    const auto v = static_cast<std::uint32_t>(node);
    for (const std::uint32_t t : targets) {
      g.edges.emplace_back(t, v);
      pool.push_back(t);
      pool.push_back(v);
    }
  }
  finalize(g);
  return g;
}

std::vector<std::size_t> degrees(const Graph& graph) {
  std::vector<std::size_t> deg(graph.n, 0);
  for (const auto& [u, v] : graph.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

DegreeHistogram degree_histogram(const Graph& graph) {
  DegreeHistogram h;
  h.n = graph.n;
  for (const std::size_t d : degrees(graph)) ++h.counts[d];
  return h;
}

double powerlaw_exponent(const DegreeHistogram& hist, std::size_t k_min) {
  std::vector<std::pair<double, double>> tail;  // (degree, count)
  double total = 0.0;
  for (const auto& [k, c] : hist.counts) {
    if (k >= k_min && k > 0 && c > 0) {
      tail.emplace_back(static_cast<double>(k), static_cast<double>(c));
      total += static_cast<double>(c);
    }
  }
  if (tail.size() < 4) {
    std::ostringstream os;
    os << "power-law fit needs at least 4 distinct degrees >= " << k_min << ", found "
       << tail.size();
    throw Error(ErrorKind::InsufficientTail, os.str());
  }

  // P(K >= k) over the fitted tail, accumulated from the largest degree down.
  std::vector<double> ccdf(tail.size());
  double above = 0.0;
  for (std::size_t j = tail.size(); j-- > 0;) {
    above += tail[j].second;
    ccdf[j] = above / total;
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const auto n = static_cast<double>(tail.size());
  for (std::size_t j = 0; j < tail.size(); ++j) {
    const double x = std::log(tail[j].first);
    const double y = std::log(ccdf[j]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return 1.0 + std::fabs(slope);
}

double mean_degree(const Graph& graph) {
  if (graph.n == 0) throw InvalidParameter("n", 0.0, "n > 0");
  return 2.0 * static_cast<double>(graph.edges.size()) / static_cast<double>(graph.n);
}

double gamma_from_graph(const Graph& graph, double per_contact_prob) {
  if (!(per_contact_prob >= 0.0 && per_contact_prob <= 1.0)) {
    throw InvalidParameter("per_contact_prob", per_contact_prob, "0 <= per_contact_prob <= 1");
  }
  return per_contact_prob * mean_degree(graph);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  for (const auto& [u, v] : graph.edges) out << u << ' ' << v << '\n';
}

std::string to_json(const Graph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : graph.edges) edges.push_back({u, v});
  const nlohmann::json doc = {{"n", graph.n},
                              {"params", {{"m0", graph.m0}, {"m", graph.m}}},
                              {"seed", graph.seed},
                              {"edges", std::move(edges)}};
  return doc.dump() + "\n";
}

}  // namespace pseirs::netgen
