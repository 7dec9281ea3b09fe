/**
 * @file netgen.hpp
 * @brief Barabasi-Albert graphs, degree statistics and the contact-rate bridge.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pseirs::netgen {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/** @brief Undirected simple graph; edges stored as (u, v) with u < v, sorted. */
struct Graph {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::uint64_t seed = 0;
  std::size_t m0 = 0;
  std::size_t m = 0;
};

struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;  // degree -> number of nodes
  std::size_t n = 0;
};

/**
 * @brief Preferential-attachment graph grown from a complete graph on m0 nodes.
 *
 * Every later node attaches m edges to distinct existing nodes chosen with
 * probability proportional to degree; a repeated target within one batch is
 * redrawn. The output is a pure function of (n, m0, m, seed).
 *
 * @throws Error(InvalidGraphParams) unless m0 >= 1, 1 <= m <= m0 and n >= m0.
 */
[[nodiscard]] Graph generate_ba(std::size_t n, std::size_t m0, std::size_t m, std::uint64_t seed);

/** @brief Complete graph K_n. */
[[nodiscard]] Graph complete_graph(std::size_t n);

[[nodiscard]] std::vector<std::size_t> degrees(const Graph& graph);
[[nodiscard]] DegreeHistogram degree_histogram(const Graph& graph);

/**
 * @brief Density exponent from a least-squares line through
 *        (ln k, ln P(K >= k)) over distinct degrees k >= k_min.
 *
 * Returns 1 + |slope|.
 *
 * @throws Error(InsufficientTail) with fewer than 4 distinct degrees >= k_min.
 */
[[nodiscard]] double powerlaw_exponent(const DegreeHistogram& hist, std::size_t k_min);

/** @brief 2 |E| / n. */
[[nodiscard]] double mean_degree(const Graph& graph);

/** @brief per_contact_prob * mean_degree(graph). */
[[nodiscard]] double gamma_from_graph(const Graph& graph, double per_contact_prob);

/** @brief One "u v" line per edge in ascending order. */
void write_edge_list(std::ostream& out, const Graph& graph);

/** @brief {"n", "params": {"m0", "m"}, "seed", "edges": [[u, v], ...]}. */
[[nodiscard]] std::string to_json(const Graph& graph);

}  // namespace pseirs::netgen
