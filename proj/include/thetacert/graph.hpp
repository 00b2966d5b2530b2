#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace theta {

using Edge = std::pair<int, int>;

// Thrown when the configuration model exhausts its resample budget.
struct ResampleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed edge-list input; the message carries the line number.
struct EdgeListParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest-cycle report. `length` is empty for acyclic graphs, in which case
// `cycle` is empty too; otherwise `cycle` lists the vertices of one shortest
// cycle in traversal order.
struct GirthReport {
    std::optional<int> length;
    std::vector<int> cycle;
};

// Simple undirected d-regular graph on vertices 0..n-1.
// Immutable after construction; lazy views are cached behind a shared state
// block guarded by std::once_flag, so instances are safe to share across
// threads and cheap to copy.
class RegularGraph {
  public:
    // Validates simplicity (u < v, no duplicates, endpoints in range) and
    // d-regularity; throws std::invalid_argument otherwise.
    RegularGraph(int n, int degree, std::vector<Edge> edges);

    // Infers the degree from the edge multiset, then validates as above.
    static RegularGraph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int degree() const { return degree_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges sorted lexicographically with u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    // Neighbor list of v, sorted ascending. pre: 0 <= v < n.
    const std::vector<int>& neighbors(int v) const;

    // Dense adjacency matrix, materialized on first use and cached.
    const Eigen::MatrixXd& adjacency() const;

    // Exact girth (empty for acyclic graphs), computed on first use and cached.
    const GirthReport& girth() const;

    bool has_edge(int u, int v) const;

  private:
    struct Cache;

    int n_;
    int degree_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbors_;
    std::shared_ptr<Cache> cache_;
};

// Exact girth by breadth-first search from every root with an early-exit
// depth bound; independent of the cached value on the graph.
GirthReport compute_girth(const RegularGraph& g);

// Uniform random d-regular graph via the configuration model conditioned on
// simplicity: dn half-edges are paired by a random shuffle, and the whole
// pairing is rejected unless the resulting graph is simple. Resampling whole
// pairings keeps the distribution uniform over simple d-regular graphs.
// pre: d >= 1, d < n, n*d even, max_resamples >= 1.
// Throws ResampleLimitError when the budget is exhausted (the simple-graph
// probability decays like exp(-(d*d-1)/4), so large d needs other models).
RegularGraph generate_config_model(int n, int degree, std::uint64_t seed,
                                   int max_resamples = 10000);

// Random bipartite d-regular graph on sides {0..n/2-1} and {n/2..n-1}: the
// union of d uniform side-to-side perfect matchings, each resampled until it
// avoids the edges already placed. Simple and bipartite by construction, so
// the girth is at least 4. pre: n even, 1 <= d <= n/2.
RegularGraph generate_bipartite_regular(int n, int degree, std::uint64_t seed);

RegularGraph petersen_graph();
RegularGraph complete_graph(int q);            // K_q, q >= 2
RegularGraph cycle_graph(int q);               // C_q, q >= 3
RegularGraph complete_bipartite_graph(int q);  // K_{q,q}, q >= 1

// Parses "petersen", "complete(q)", "cycle(q)", "complete_bipartite(q)" and
// the shorthands "kQ", "cQ", "kQ,Q" (e.g. "k4", "c5", "k3,3").
RegularGraph named_graph(std::string_view spec);

// Edge-list format: first line "n d", then one "u v" line per edge with
// u < v, 0-indexed, LF line endings. Writing is deterministic (edges sorted),
// so equal graphs produce byte-identical files.
void write_edge_list(const RegularGraph& g, std::ostream& out);
void write_edge_list_file(const RegularGraph& g, const std::string& path);
RegularGraph read_edge_list(std::istream& in,
                            const std::string& source_name = "<stream>");
RegularGraph read_edge_list_file(const std::string& path);

namespace detail {

// Uniform integer in [0, k) by rejection; deterministic across platforms,
// unlike std::uniform_int_distribution.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t k);

// One raw configuration-model pairing (before the simplicity test); may
// contain loops and parallel edges, reported unnormalized.
std::vector<Edge> sample_half_edge_pairing(int n, int degree,
                                           std::mt19937_64& rng);

// True when the pairing has no loop and no repeated edge.
bool pairing_is_simple(const std::vector<Edge>& edges);

}  // namespace detail

}  // namespace theta
