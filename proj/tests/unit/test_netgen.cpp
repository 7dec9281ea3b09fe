#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "pseirs/error.hpp"
#include "pseirs/netgen.hpp"

using namespace pseirs;
using netgen::DegreeHistogram;
using netgen::Graph;

namespace {

bool connected(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(g.n, false);
  std::queue<std::uint32_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
    }
  }
  return count == g.n;
}

DegreeHistogram from_counts(std::size_t k_lo, const std::vector<std::size_t>& counts) {
  DegreeHistogram h;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    h.counts[k_lo + j] = counts[j];
    h.n += counts[j];
  }
  return h;
}

}  // namespace

TEST(GenerateBa, SmallGraphEdgeArithmetic) {
  const auto g = netgen::generate_ba(10, 3, 2, 42);
  EXPECT_EQ(g.edges.size(), 17u);
  const auto deg = netgen::degrees(g);
  EXPECT_EQ(std::accumulate(deg.begin(), deg.end(), std::size_t{0}), 34u);
}

TEST(GenerateBa, NoGrowthLeavesTheSeedClique) {
  const auto g = netgen::generate_ba(5, 5, 2, 1);
  EXPECT_EQ(g.edges.size(), 10u);
  EXPECT_EQ(g.edges, netgen::complete_graph(5).edges);
}

TEST(GenerateBa, FiveThousandNodes) {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    const auto g = netgen::generate_ba(5000, 3, 2, seed);
    EXPECT_EQ(g.edges.size(), 9997u);
    EXPECT_DOUBLE_EQ(netgen::mean_degree(g), 3.9988);
  }
}

TEST(GenerateBa, InvalidParametersAreRejected) {
  for (auto [n, m0, m] : {std::tuple{10, 3, 5}, std::tuple{10, 3, 0}, std::tuple{2, 3, 2},
                          std::tuple{10, 0, 0}}) {
    try {
      (void)netgen::generate_ba(n, m0, m, 1);
      FAIL() << "expected InvalidGraphParams";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidGraphParams);
    }
  }
}

TEST(GenerateBa, PropertySimpleSortedConnected) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = netgen::generate_ba(300, 4, 3, seed);
    std::set<netgen::Edge> unique(g.edges.begin(), g.edges.end());
    EXPECT_EQ(unique.size(), g.edges.size());
    EXPECT_TRUE(std::is_sorted(g.edges.begin(), g.edges.end()));
    for (const auto& [u, v] : g.edges) {
      EXPECT_LT(u, v);
      EXPECT_LT(v, g.n);
    }
    EXPECT_TRUE(connected(g));
    const auto deg = netgen::degrees(g);
    for (std::size_t v = 4; v < g.n; ++v) EXPECT_GE(deg[v], 3u);
  }
}

TEST(GenerateBa, PropertyDeterministicPerSeed) {
  EXPECT_EQ(netgen::generate_ba(2000, 3, 2, 5).edges, netgen::generate_ba(2000, 3, 2, 5).edges);
  EXPECT_NE(netgen::generate_ba(2000, 3, 2, 5).edges, netgen::generate_ba(2000, 3, 2, 6).edges);
}

TEST(DegreeHistogram, CliqueAndStar) {
  const auto k5 = netgen::degree_histogram(netgen::complete_graph(5));
  EXPECT_EQ(k5.counts, (std::map<std::size_t, std::size_t>{{4, 5}}));

  Graph star;
  star.n = 6;
  for (std::uint32_t v = 1; v < 6; ++v) star.edges.emplace_back(0, v);
  const auto h = netgen::degree_histogram(star);
  EXPECT_EQ(h.counts, (std::map<std::size_t, std::size_t>{{1, 5}, {5, 1}}));
}

TEST(DegreeHistogram, PropertyHandshake) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = netgen::generate_ba(1000, 3, 2, seed);
    const auto h = netgen::degree_histogram(g);
    std::size_t sum = 0;
    std::size_t nodes = 0;
    for (const auto& [k, c] : h.counts) {
      sum += k * c;
      nodes += c;
    }
    EXPECT_EQ(sum, 2 * g.edges.size());
    EXPECT_EQ(nodes, g.n);
  }
}

TEST(PowerLaw, BarabasiAlbertExponentInRange) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto g = netgen::generate_ba(5000, 3, 2, seed);
    const double exponent = netgen::powerlaw_exponent(netgen::degree_histogram(g), 2);
    EXPECT_GE(exponent, 2.0);
    EXPECT_LE(exponent, 4.0);
  }
}

TEST(PowerLaw, RegularRingHasNoTail) {
  Graph ring;
  ring.n = 20;
  for (std::uint32_t v = 0; v < 20; ++v) {
    const std::uint32_t w = (v + 1) % 20;
    ring.edges.emplace_back(std::min(v, w), std::max(v, w));
  }
  try {
    (void)netgen::powerlaw_exponent(netgen::degree_histogram(ring), 1);
    FAIL() << "expected InsufficientTail";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientTail);
  }
}

// Counts proportional to k^-3 on a truncated range: the cumulative
// distribution is not a straight line on log-log axes, so the fitted
// exponent is well above 3. Reference value from an independent numpy fit.
TEST(PowerLaw, TruncatedCubicCountsOracle) {
  std::vector<std::size_t> counts;
  for (int k = 2; k <= 64; ++k) counts.push_back(std::llround(1e9 * std::pow(k, -3.0)));
  EXPECT_NEAR(netgen::powerlaw_exponent(from_counts(2, counts), 2), 3.6827224594653964, 1e-9);
}

// Counts whose cumulative distribution is exactly proportional to k^-2.
TEST(PowerLaw, ExactCumulativePowerLawRecoversExponent) {
  std::vector<std::size_t> counts;
  for (int k = 2; k < 64; ++k) {
    counts.push_back(std::llround(1e12 * (std::pow(k, -2.0) - std::pow(k + 1, -2.0))));
  }
  counts.push_back(std::llround(1e12 * std::pow(64, -2.0)));
  EXPECT_NEAR(netgen::powerlaw_exponent(from_counts(2, counts), 2), 3.0, 1e-6);
}

TEST(MeanDegree, Examples) {
  EXPECT_DOUBLE_EQ(netgen::mean_degree(netgen::complete_graph(12)), 11.0);
  EXPECT_DOUBLE_EQ(netgen::mean_degree(netgen::complete_graph(1)), 0.0);
  EXPECT_THROW((void)netgen::mean_degree(Graph{}), InvalidParameter);
}

TEST(GammaFromGraph, Examples) {
  const auto k12 = netgen::complete_graph(12);
  EXPECT_EQ(netgen::gamma_from_graph(k12, 0.0), 0.0);
  EXPECT_NEAR(netgen::gamma_from_graph(k12, 0.028), 0.308, 1e-12);
  EXPECT_NEAR(netgen::gamma_from_graph(netgen::generate_ba(5000, 3, 2, 7), 0.1), 0.39988, 1e-12);
  EXPECT_THROW((void)netgen::gamma_from_graph(k12, 1.5), InvalidParameter);
}

TEST(GraphOutput, EdgeListAndJson) {
  const auto g = netgen::generate_ba(10, 3, 2, 42);
  std::ostringstream edges;
  netgen::write_edge_list(edges, g);
  std::istringstream in(edges.str());
  std::size_t lines = 0;
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  while (in >> u >> v) {
    EXPECT_EQ(g.edges[lines], (netgen::Edge{u, v}));
    ++lines;
  }
  EXPECT_EQ(lines, 17u);

  const auto doc = nlohmann::json::parse(netgen::to_json(g));
  EXPECT_EQ(doc["n"], 10);
  EXPECT_EQ(doc["seed"], 42);
  EXPECT_EQ(doc["params"]["m0"], 3);
  EXPECT_EQ(doc["params"]["m"], 2);
  EXPECT_EQ(doc["edges"].size(), 17u);
}
