#include "thetacert/graph.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace theta {

struct RegularGraph::Cache {
    std::once_flag adjacency_once;
    std::once_flag girth_once;
    Eigen::MatrixXd adjacency;
    GirthReport girth;
};

RegularGraph::RegularGraph(int n, int degree, std::vector<Edge> edges)
    : n_(n),
      degree_(degree),
      edges_(std::move(edges)),
      cache_(std::make_shared<Cache>()) {
    if (n_ < 1) throw std::invalid_argument("vertex count must be positive");
    if (degree_ < 0 || degree_ >= n_)
        throw std::invalid_argument("degree must satisfy 0 <= d < n");
    if (static_cast<long long>(n_) * degree_ % 2 != 0)
        throw std::invalid_argument("n*d must be even");
    const auto expected =
        static_cast<std::size_t>(static_cast<long long>(n_) * degree_ / 2);
    if (edges_.size() != expected)
        throw std::invalid_argument("edge count " + std::to_string(edges_.size()) +
                                    " does not match n*d/2 = " +
                                    std::to_string(expected));
    for (const auto& [u, v] : edges_) {
        if (u < 0 || v >= n_ || u >= v)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                        std::to_string(v) +
                                        ") must satisfy 0 <= u < v < n");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");

    neighbors_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
    }
    for (int v = 0; v < n_; ++v) {
        if (static_cast<int>(neighbors_[v].size()) != degree_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(neighbors_[v].size()) +
                                        ", expected " + std::to_string(degree_));
        std::sort(neighbors_[v].begin(), neighbors_[v].end());
    }
}

RegularGraph RegularGraph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    const long long twice_m = 2 * static_cast<long long>(edges.size());
    if (twice_m % n != 0)
        throw std::invalid_argument("graph is not regular: 2m not divisible by n");
    return RegularGraph(n, static_cast<int>(twice_m / n), std::move(edges));
}

const std::vector<int>& RegularGraph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    return neighbors_[v];
}

const Eigen::MatrixXd& RegularGraph::adjacency() const {
    std::call_once(cache_->adjacency_once, [this] {
        cache_->adjacency = Eigen::MatrixXd::Zero(n_, n_);
        for (const auto& [u, v] : edges_) {
            cache_->adjacency(u, v) = 1.0;
            cache_->adjacency(v, u) = 1.0;
        }
    });
    return cache_->adjacency;
}

const GirthReport& RegularGraph::girth() const {
    std::call_once(cache_->girth_once, [this] { cache_->girth = compute_girth(*this); });
    return cache_->girth;
}

bool RegularGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range");
    const auto& nb = neighbors_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

// Closes the cycle through non-tree edge (u,v) in the current BFS tree and
// returns its vertices; the shared root-path suffix is stripped so the result
// is a simple cycle even when u and v branch below the root.
std::vector<int> close_cycle(const std::vector<int>& parent, int u, int v) {
    std::vector<int> up, vp;
    for (int x = u; x != -1; x = parent[x]) up.push_back(x);
    for (int x = v; x != -1; x = parent[x]) vp.push_back(x);
    while (up.size() >= 2 && vp.size() >= 2 && up[up.size() - 1] == vp[vp.size() - 1] &&
           up[up.size() - 2] == vp[vp.size() - 2]) {
        up.pop_back();
        vp.pop_back();
    }
    std::vector<int> cycle(up.rbegin(), up.rend());  // meet point .. u
    cycle.insert(cycle.end(), vp.begin(), vp.end() - 1);  // v .. below meet point
    return cycle;
}

}  // namespace

GirthReport compute_girth(const RegularGraph& g) {
    const int n = g.vertex_count();
    int best = INT_MAX;
    std::vector<int> best_cycle;
    std::vector<int> dist(n), parent(n), queue;
    queue.reserve(n);

    for (int root = 0; root < n && best > 3; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            if (2 * dist[u] + 1 >= best) break;  // deeper levels cannot improve
            for (int v : g.neighbors(u)) {
                if (v == parent[u]) continue;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else {
                    auto cycle = close_cycle(parent, u, v);
                    if (static_cast<int>(cycle.size()) < best) {
                        best = static_cast<int>(cycle.size());
                        best_cycle = std::move(cycle);
                    }
                }
            }
        }
    }

    if (best == INT_MAX) return {};
    return {best, std::move(best_cycle)};
}

namespace detail {

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t k) {
    // Reject the low 2^64 mod k values so the remaining range folds evenly.
    const std::uint64_t threshold = (0 - k) % k;
    std::uint64_t x;
    do {
        x = rng();
    } while (x < threshold);
    return x % k;
}

std::vector<Edge> sample_half_edge_pairing(int n, int degree, std::mt19937_64& rng) {
    std::vector<int> points(static_cast<std::size_t>(n) * degree);
    std::iota(points.begin(), points.end(), 0);
    for (std::size_t i = points.size() - 1; i > 0; --i) {
        const auto j = uniform_index(rng, i + 1);
        std::swap(points[i], points[j]);
    }
    std::vector<Edge> edges;
    edges.reserve(points.size() / 2);
    for (std::size_t i = 0; i < points.size(); i += 2)
        edges.emplace_back(points[i] / degree, points[i + 1] / degree);
    return edges;
}

bool pairing_is_simple(const std::vector<Edge>& edges) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        if (a == b) return false;
        const auto lo = static_cast<std::uint64_t>(std::min(a, b));
        const auto hi = static_cast<std::uint64_t>(std::max(a, b));
        if (!seen.insert((lo << 32) | hi).second) return false;
    }
    return true;
}

}  // namespace detail

RegularGraph generate_config_model(int n, int degree, std::uint64_t seed,
                                   int max_resamples) {
    if (n < 2 || degree < 1 || degree >= n)
        throw std::invalid_argument("configuration model needs 1 <= d < n");
    if (static_cast<long long>(n) * degree % 2 != 0)
        throw std::invalid_argument("n*d must be even");
    if (max_resamples < 1) throw std::invalid_argument("max_resamples must be >= 1");

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_resamples; ++attempt) {
        auto edges = detail::sample_half_edge_pairing(n, degree, rng);
        if (!detail::pairing_is_simple(edges)) continue;
        for (auto& [u, v] : edges)
            if (u > v) std::swap(u, v);
        return RegularGraph(n, degree, std::move(edges));
    }
    throw ResampleLimitError("no simple pairing found in " +
                             std::to_string(max_resamples) + " resamples (n=" +
                             std::to_string(n) + ", d=" + std::to_string(degree) + ")");
}

RegularGraph generate_bipartite_regular(int n, int degree, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("bipartite generator needs even n >= 2");
    const int half = n / 2;
    if (degree < 1 || degree > half)
        throw std::invalid_argument("bipartite generator needs 1 <= d <= n/2");

    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> used;
    used.reserve(static_cast<std::size_t>(half) * degree * 2);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(half) * degree);
    std::vector<int> perm(half);

    // Expected resamples per matching stay below e^(d-1); the cap is a
    // safety net, not a tuning knob.
    constexpr int kMatchingAttempts = 1000000;
    for (int matching = 0; matching < degree; ++matching) {
        bool placed = false;
        for (int attempt = 0; attempt < kMatchingAttempts && !placed; ++attempt) {
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = half - 1; i > 0; --i) {
                const auto j = detail::uniform_index(rng, static_cast<std::uint64_t>(i) + 1);
                std::swap(perm[i], perm[j]);
            }
            bool disjoint = true;
            for (int i = 0; i < half && disjoint; ++i)
                disjoint = !used.count((static_cast<std::uint64_t>(i) << 32) | perm[i]);
            if (!disjoint) continue;
            for (int i = 0; i < half; ++i) {
                used.insert((static_cast<std::uint64_t>(i) << 32) | perm[i]);
                edges.emplace_back(i, half + perm[i]);
            }
            placed = true;
        }
        if (!placed)
            throw ResampleLimitError("no edge-disjoint matching found (n=" +
                                     std::to_string(n) + ", d=" + std::to_string(degree) +
                                     ")");
    }
    std::sort(edges.begin(), edges.end());
    return RegularGraph(n, degree, std::move(edges));
}

RegularGraph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        const int j = (i + 1) % 5;
        edges.emplace_back(std::min(i, j), std::max(i, j));  // outer 5-cycle
        const int a = 5 + i, b = 5 + (i + 2) % 5;
        edges.emplace_back(std::min(a, b), std::max(a, b));  // inner pentagram
        edges.emplace_back(i, 5 + i);                        // spoke
    }
    return RegularGraph(10, 3, std::move(edges));
}

RegularGraph complete_graph(int q) {
    if (q < 2) throw std::invalid_argument("complete graph needs q >= 2");
    std::vector<Edge> edges;
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v) edges.emplace_back(u, v);
    return RegularGraph(q, q - 1, std::move(edges));
}

RegularGraph cycle_graph(int q) {
    if (q < 3) throw std::invalid_argument("cycle graph needs q >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < q; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, q - 1);
    return RegularGraph(q, 2, std::move(edges));
}

RegularGraph complete_bipartite_graph(int q) {
    if (q < 1) throw std::invalid_argument("complete bipartite graph needs q >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < q; ++u)
        for (int v = 0; v < q; ++v) edges.emplace_back(u, q + v);
    return RegularGraph(2 * q, q, std::move(edges));
}

namespace {

int parse_positive_int(std::string_view s, const std::string& what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value <= 0)
        throw std::invalid_argument("bad " + what + ": '" + std::string(s) + "'");
    return value;
}

}  // namespace

RegularGraph named_graph(std::string_view spec) {
    std::string name(spec);
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    if (name == "petersen") return petersen_graph();

    const auto open = name.find('(');
    if (open != std::string::npos && name.back() == ')') {
        const std::string family = name.substr(0, open);
        const std::string arg = name.substr(open + 1, name.size() - open - 2);
        const int q = parse_positive_int(arg, "graph size");
        if (family == "complete") return complete_graph(q);
        if (family == "cycle") return cycle_graph(q);
        if (family == "complete_bipartite") return complete_bipartite_graph(q);
        throw std::invalid_argument("unknown graph family '" + family + "'");
    }

    if (name.size() >= 2 && (name[0] == 'k' || name[0] == 'c')) {
        const std::string rest = name.substr(1);
        const auto comma = rest.find(',');
        if (name[0] == 'k' && comma != std::string::npos) {
            const int a = parse_positive_int(rest.substr(0, comma), "graph size");
            const int b = parse_positive_int(rest.substr(comma + 1), "graph size");
            if (a != b)
                throw std::invalid_argument("only balanced complete bipartite graphs "
                                            "are regular: k" +
                                            rest.substr(0, comma) + "," +
                                            rest.substr(comma + 1));
            return complete_bipartite_graph(a);
        }
        const int q = parse_positive_int(rest, "graph size");
        return name[0] == 'k' ? complete_graph(q) : cycle_graph(q);
    }

    throw std::invalid_argument("unknown graph spec '" + std::string(spec) + "'");
}

void write_edge_list(const RegularGraph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.degree() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const RegularGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF on every platform
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_edge_list(g, out);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& msg) {
    throw EdgeListParseError(source + ":" + std::to_string(line) + ": " + msg);
}

// Strict "int int" line: no leading junk, exactly two fields.
bool parse_int_pair(const std::string& line, int& a, int& b) {
    std::istringstream ss(line);
    if (!(ss >> a >> b)) return false;
    std::string leftover;
    return !(ss >> leftover);
}

}  // namespace

RegularGraph read_edge_list(std::istream& in, const std::string& source_name) {
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) parse_fail(source_name, 1, "empty input, expected 'n d'");
    ++line_no;
    int n = 0, d = 0;
    if (!parse_int_pair(line, n, d))
        parse_fail(source_name, line_no, "expected header 'n d', got '" + line + "'");
    if (n < 1 || d < 0 || d >= n)
        parse_fail(source_name, line_no, "header requires 0 <= d < n, n >= 1");
    if (static_cast<long long>(n) * d % 2 != 0)
        parse_fail(source_name, line_no, "n*d must be even");

    const auto expected = static_cast<std::size_t>(static_cast<long long>(n) * d / 2);
    std::vector<Edge> edges;
    edges.reserve(expected);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() && in.eof()) break;  // tolerate one trailing newline
        int u = 0, v = 0;
        if (!parse_int_pair(line, u, v))
            parse_fail(source_name, line_no, "expected edge 'u v', got '" + line + "'");
        if (u < 0 || v >= n || u >= v)
            parse_fail(source_name, line_no,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") must satisfy 0 <= u < v < n");
        edges.push_back({u, v});
    }
    if (edges.size() != expected)
        parse_fail(source_name, line_no + 1,
                   "expected " + std::to_string(expected) + " edges for n=" +
                       std::to_string(n) + " d=" + std::to_string(d) + ", got " +
                       std::to_string(edges.size()));

    try {
        return RegularGraph(n, d, std::move(edges));
    } catch (const std::invalid_argument& err) {
        throw EdgeListParseError(source_name + ": " + err.what());
    }
}

RegularGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw EdgeListParseError("cannot open '" + path + "'");
    return read_edge_list(in, path);
}

}  // namespace theta
