#include "hychroma/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <ostream>
#include <sstream>

#include "hychroma/errors.hpp"
#include "parallel.hpp"

namespace hychroma::verify {

namespace {

constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();

// Two distinct vertices conflict when lo <= distance <= hi. Empty when lo > hi.
struct DistanceRange {
    int lo;
    int hi;

    bool empty() const { return lo > hi; }
    bool contains(int dist) const { return lo <= dist && dist <= hi; }
    std::string describe() const {
        if (empty()) return "no constrained distances";
        if (lo == hi) return "distance = " + std::to_string(lo);
        return "distance in [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
};

DistanceRange clamp_range(int lo, int hi, int n) { return {std::max(lo, 1), std::min(hi, n)}; }

DistanceRange range_for(ColoringMode mode, int d, int n) {
    return mode == ColoringMode::AtMostD ? clamp_range(1, d, n) : clamp_range(d, d, n);
}

DistanceRange range_for(const PartitionMode& mode, int n) {
    return mode.rule == DistanceRule::MinDistanceAtLeast ? clamp_range(1, mode.distance - 1, n)
                                                          : clamp_range(mode.distance, mode.distance, n);
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t neighbor_cost(int n, DistanceRange range) {
    std::uint64_t masks = 0;
    for (int w = range.lo; w <= range.hi; ++w) masks += binomial(n, w);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    return masks > (kMax >> n) ? kMax : masks << n;
}

std::uint64_t pairwise_cost(const std::vector<Block>& blocks) {
    std::uint64_t total = 0;
    for (const auto& b : blocks) total += b.size() * (b.size() - (b.empty() ? 0 : 1)) / 2;
    return total;
}

// All n-bit masks whose weight lies in the range, by weight then value.
std::vector<std::uint64_t> masks_in_range(int n, DistanceRange range) {
    std::vector<std::uint64_t> masks;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (int w = range.lo; w <= range.hi; ++w) {
        std::uint64_t m = low_mask(w);
        while (m < limit) {
            masks.push_back(m);
            const std::uint64_t c = m & -m;
            const std::uint64_t r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return masks;
}

struct ScanResult {
    std::optional<Counterexample> counterexample;
    std::uint64_t pairs = 0;
};

ScanResult scan_neighbors(int n, const std::vector<std::uint32_t>& owner, DistanceRange range) {
    const auto masks = masks_in_range(n, range);
    const std::uint64_t space = std::uint64_t{1} << n;
    std::vector<std::optional<Counterexample>> found(detail::max_chunks());
    std::vector<std::uint64_t> pairs(detail::max_chunks(), 0);
    std::atomic<std::size_t> earliest{std::numeric_limits<std::size_t>::max()};
    detail::parallel_chunks(space, [&](detail::ChunkRange r) {
        std::uint64_t count = 0;
        for (Vertex v = r.begin; v < r.end; ++v) {
            if (earliest.load(std::memory_order_relaxed) < r.index) break;
            const auto own = owner[v];
            for (auto m : masks) {
                const Vertex w = v ^ m;
                ++count;
                if (w > v && owner[w] == own) {
                    found[r.index] = Counterexample{"distance", v, w, std::popcount(m), own, own};
                    std::size_t cur = earliest.load();
                    while (r.index < cur && !earliest.compare_exchange_weak(cur, r.index)) {
                    }
                    pairs[r.index] = count;
                    return;
                }
            }
        }
        pairs[r.index] = count;
    });
    ScanResult out;
    for (auto p : pairs) out.pairs += p;
    for (auto& f : found)
        if (f) {
            out.counterexample = f;
            break;
        }
    return out;
}

ScanResult scan_blocks(const std::vector<Block>& blocks, DistanceRange range) {
    std::vector<std::optional<Counterexample>> found(detail::max_chunks());
    std::vector<std::uint64_t> pairs(detail::max_chunks(), 0);
    std::atomic<std::size_t> earliest{std::numeric_limits<std::size_t>::max()};
    detail::parallel_chunks(
        blocks.size(),
        [&](detail::ChunkRange r) {
            std::uint64_t count = 0;
            for (std::uint64_t b = r.begin; b < r.end; ++b) {
                if (earliest.load(std::memory_order_relaxed) < r.index) break;
                const auto& block = blocks[b];
                for (std::size_t i = 0; i < block.size(); ++i) {
                    for (std::size_t j = i + 1; j < block.size(); ++j) {
                        ++count;
                        const int dist = std::popcount(block[i] ^ block[j]);
                        if (!range.contains(dist)) continue;
                        const auto lo = std::min(block[i], block[j]);
                        const auto hi = std::max(block[i], block[j]);
                        found[r.index] = Counterexample{"distance", lo, hi, dist, b, b};
                        std::size_t cur = earliest.load();
                        while (r.index < cur && !earliest.compare_exchange_weak(cur, r.index)) {
                        }
                        pairs[r.index] = count;
                        return;
                    }
                }
            }
            pairs[r.index] = count;
        },
        1);
    ScanResult out;
    for (auto p : pairs) out.pairs += p;
    for (auto& f : found)
        if (f) {
            out.counterexample = f;
            break;
        }
    return out;
}

void check_length(int n, bool force) {
    if (n < 1 || n > 40) throw UsageError("n must be in 1..40 for verification, got " + std::to_string(n));
    if (n > kVerifyLengthLimit && !force)
        throw GuardError("verification needs n <= " + std::to_string(kVerifyLengthLimit) + ", got n=" +
                         std::to_string(n));
}

// Distance scan over prepared blocks and owner table; fills report fields.
void run_distance_check(VerificationReport& report, const std::vector<std::uint32_t>& owner,
                        const std::vector<Block>& blocks, DistanceRange range, Strategy strategy, bool force) {
    report.constraint = range.describe();
    report.checks.push_back("distance constraint: " + report.constraint);
    const std::uint64_t by_neighbor = neighbor_cost(report.n, range);
    const std::uint64_t by_pairs = pairwise_cost(blocks);
    if (strategy == Strategy::Auto) strategy = by_neighbor <= by_pairs ? Strategy::Neighbor : Strategy::Pairwise;
    report.strategy = strategy;
    const std::uint64_t cost = strategy == Strategy::Neighbor ? by_neighbor : by_pairs;
    if (cost > kPairBudget && !force)
        throw GuardError("verification would need " + std::to_string(cost) + " distance evaluations; budget is " +
                         std::to_string(kPairBudget));
    if (range.empty()) {
        report.passed = true;
        return;
    }
    auto result = strategy == Strategy::Neighbor ? scan_neighbors(report.n, owner, range) : scan_blocks(blocks, range);
    report.pair_count = result.pairs;
    report.counterexample = std::move(result.counterexample);
    report.passed = !report.counterexample.has_value();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Neighbor: return "neighbor";
        case Strategy::Pairwise: return "pairwise";
    }
    return "auto";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "auto") return Strategy::Auto;
    if (name == "neighbor") return Strategy::Neighbor;
    if (name == "pairwise") return Strategy::Pairwise;
    throw UsageError("unknown strategy '" + name + "' (expected auto, neighbor or pairwise)");
}

std::string Counterexample::describe(int n) const {
    auto word = [n](Vertex v) { return gf2::BitVector(n, v).to_string(); };
    std::ostringstream os;
    if (check == "distance") {
        os << "vertices " << word(first) << " and " << word(*second) << " at distance " << distance;
        if (first_block) os << " share block " << *first_block;
    } else if (check == "overlap") {
        os << "vertex " << word(first) << " lies in blocks " << *first_block << " and " << *second_block;
    } else {
        os << "vertex " << word(first) << " is in no block";
    }
    return os.str();
}

VerificationReport verify_coloring(const ColoringCertificate& c, Strategy strategy, bool force) {
    const auto start = std::chrono::steady_clock::now();
    check_length(c.n, force);
    if (c.d < 0) throw UsageError("malformed certificate: d must be >= 0");
    const std::uint64_t space = std::uint64_t{1} << c.n;
    if (c.assignment.size() != space)
        throw UsageError("malformed certificate: expected " + std::to_string(space) + " colors, got " +
                         std::to_string(c.assignment.size()));
    if (c.color_count == 0) throw UsageError("malformed certificate: color count is 0");

    std::vector<Block> classes(c.color_count);
    for (Vertex v = 0; v < space; ++v) {
        const auto color = c.assignment[v];
        if (color >= c.color_count)
            throw UsageError("malformed certificate: vertex " + std::to_string(v) + " has color " +
                             std::to_string(color) + " >= " + std::to_string(c.color_count));
        classes[color].push_back(v);
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].empty()) throw UsageError("malformed certificate: color " + std::to_string(i) + " is unused");

    VerificationReport report;
    report.n = c.n;
    report.checks.push_back("assignment covers all " + std::to_string(space) + " vertices");
    report.checks.push_back("all " + std::to_string(c.color_count) + " colors used");
    run_distance_check(report, c.assignment, classes, range_for(c.mode, c.d, c.n), strategy, force);
    report.wall_ms = elapsed_ms(start);
    return report;
}

VerificationReport verify_partition(const HypercubePartition& p, Strategy strategy, bool force) {
    const auto start = std::chrono::steady_clock::now();
    check_length(p.n, force);
    if (p.mode.distance < 0) throw UsageError("malformed partition: distance must be >= 0");
    const std::uint64_t space = std::uint64_t{1} << p.n;
    VerificationReport report;
    report.n = p.n;
    report.constraint = range_for(p.mode, p.n).describe();

    std::vector<std::uint32_t> owner(space, kUnset);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (p.blocks[b].empty()) throw UsageError("malformed partition: block " + std::to_string(b) + " is empty");
        for (Vertex v : p.blocks[b]) {
            if (v >= space)
                throw UsageError("malformed partition: vertex " + std::to_string(v) + " outside V_" +
                                 std::to_string(p.n));
            if (owner[v] != kUnset) {
                report.checks.push_back("blocks disjoint");
                report.counterexample = Counterexample{"overlap", v, std::nullopt, -1, owner[v], b};
                report.wall_ms = elapsed_ms(start);
                return report;
            }
            owner[v] = static_cast<std::uint32_t>(b);
        }
    }
    report.checks.push_back("blocks disjoint");
    report.checks.push_back("blocks cover V_" + std::to_string(p.n));
    if (auto hole = std::find(owner.begin(), owner.end(), kUnset); hole != owner.end()) {
        report.counterexample = Counterexample{"uncovered", static_cast<Vertex>(hole - owner.begin()), std::nullopt, -1, std::nullopt, std::nullopt};
        report.wall_ms = elapsed_ms(start);
        return report;
    }
    run_distance_check(report, owner, p.blocks, range_for(p.mode, p.n), strategy, force);
    report.wall_ms = elapsed_ms(start);
    return report;
}

bool confirms_violation(const ColoringCertificate& c, const Counterexample& x) {
    if (x.check != "distance" || !x.second) return false;
    const auto space = c.assignment.size();
    if (x.first >= space || *x.second >= space || x.first == *x.second) return false;
    const int dist = std::popcount(x.first ^ *x.second);
    if (dist != x.distance) return false;
    const bool constrained = c.mode == ColoringMode::AtMostD ? dist <= c.d : dist == c.d;
    return constrained && c.assignment[x.first] == c.assignment[*x.second];
}

void write_report(std::ostream& os, const VerificationReport& r, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        os << "n,constraint,strategy,pairs,wall_ms,result,counterexample\n";
        os << r.n << ',' << '"' << r.constraint << '"' << ',' << to_string(r.strategy) << ',' << r.pair_count << ','
           << r.wall_ms << ',' << (r.passed ? "PASS" : "FAIL") << ',';
        if (r.counterexample) os << '"' << r.counterexample->describe(r.n) << '"';
        os << '\n';
        return;
    }
    os << "n: " << r.n << '\n';
    os << "constraint: " << r.constraint << '\n';
    for (const auto& check : r.checks) os << "check: " << check << '\n';
    os << "strategy: " << to_string(r.strategy) << '\n';
    os << "pairs examined: " << r.pair_count << '\n';
    os << "wall time: " << r.wall_ms << " ms\n";
    if (r.counterexample) os << "counterexample: " << r.counterexample->describe(r.n) << '\n';
    os << "result: " << (r.passed ? "PASS" : "FAIL") << '\n';
}

// ---------------------------------------------------------------------------
// Exact solvers on conflict graphs with at most 256 vertices

namespace {

struct VertexSet {
    std::array<std::uint64_t, 4> w{};

    void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
    bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
    int first() const {
        for (int k = 0; k < 4; ++k)
            if (w[static_cast<std::size_t>(k)]) return 64 * k + std::countr_zero(w[static_cast<std::size_t>(k)]);
        return -1;
    }
    int count() const { return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]); }
    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (std::size_t k = 0; k < 4; ++k) r.w[k] = w[k] & o.w[k];
        return r;
    }
    VertexSet without(const VertexSet& o) const {
        VertexSet r;
        for (std::size_t k = 0; k < 4; ++k) r.w[k] = w[k] & ~o.w[k];
        return r;
    }
};

struct Graph {
    int size = 0;
    std::vector<VertexSet> adj;
};

template <typename Conflict>
Graph cube_graph(int n, Conflict&& conflict) {
    Graph g;
    g.size = 1 << n;
    g.adj.resize(static_cast<std::size_t>(g.size));
    for (int u = 0; u < g.size; ++u)
        for (int v = 0; v < g.size; ++v)
            if (u != v && conflict(std::popcount(static_cast<unsigned>(u ^ v)))) g.adj[static_cast<std::size_t>(u)].set(v);
    return g;
}

Graph complement(const Graph& g) {
    Graph c;
    c.size = g.size;
    c.adj.resize(g.adj.size());
    VertexSet all;
    for (int v = 0; v < g.size; ++v) all.set(v);
    for (int v = 0; v < g.size; ++v) {
        c.adj[static_cast<std::size_t>(v)] = all.without(g.adj[static_cast<std::size_t>(v)]);
        c.adj[static_cast<std::size_t>(v)].reset(v);
    }
    return c;
}

// Branch and bound maximum clique with greedy coloring bounds. Vertex 0 is
// always in the clique: every graph here is vertex-transitive under XOR.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<int> run() {
        current_ = {0};
        best_ = current_;
        expand(g_.adj[0]);
        return best_;
    }

private:
    void expand(VertexSet candidates) {
        std::vector<int> order;
        std::vector<int> bound;
        VertexSet uncolored = candidates;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            VertexSet open = uncolored;
            while (!open.empty()) {
                const int v = open.first();
                open.reset(v);
                open = open.without(g_.adj[static_cast<std::size_t>(v)]);
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
            const int v = order[i];
            current_.push_back(v);
            const VertexSet next = candidates & g_.adj[static_cast<std::size_t>(v)];
            if (next.empty()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    const Graph& g_;
    std::vector<int> current_;
    std::vector<int> best_;
};

IndependentSet max_independent_set(const Graph& conflict) {
    auto clique = CliqueSearch(complement(conflict)).run();
    std::sort(clique.begin(), clique.end());
    IndependentSet out;
    out.size = static_cast<int>(clique.size());
    for (int v : clique) out.witness.push_back(static_cast<Vertex>(v));
    return out;
}

// DSATUR branch and bound; stops as soon as the lower bound is met.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int lower) : g_(g), lower_(lower) {
        const auto n = static_cast<std::size_t>(g.size);
        color_.assign(n, -1);
        seen_.assign(n * n, 0);
        saturation_.assign(n, 0);
        for (int v = 0; v < g.size; ++v) degree_.push_back(g.adj[static_cast<std::size_t>(v)].count());
        best_ = g.size + 1;
    }

    int run() {
        search(0, 0);
        return best_;
    }

private:
    int& seen(int v, int c) { return seen_[static_cast<std::size_t>(v * g_.size + c)]; }

    void assign(int v, int c, int delta) {
        color_[static_cast<std::size_t>(v)] = delta > 0 ? c : -1;
        for (int u = 0; u < g_.size; ++u) {
            if (!g_.adj[static_cast<std::size_t>(v)].test(u)) continue;
            int& s = seen(u, c);
            if (delta > 0 && s++ == 0) ++saturation_[static_cast<std::size_t>(u)];
            if (delta < 0 && --s == 0) --saturation_[static_cast<std::size_t>(u)];
        }
    }

    void search(int colored, int used) {
        if (used >= best_ || best_ == lower_) return;
        if (colored == g_.size) {
            best_ = used;
            return;
        }
        int pick = -1;
        for (int v = 0; v < g_.size; ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0) continue;
            if (pick < 0 || saturation_[static_cast<std::size_t>(v)] > saturation_[static_cast<std::size_t>(pick)] ||
                (saturation_[static_cast<std::size_t>(v)] == saturation_[static_cast<std::size_t>(pick)] &&
                 degree_[static_cast<std::size_t>(v)] > degree_[static_cast<std::size_t>(pick)]))
                pick = v;
        }
        for (int c = 0; c <= used; ++c) {
            if (c < used && seen(pick, c) > 0) continue;
            if (c == used && used + 1 >= best_) break;
            assign(pick, c, +1);
            search(colored + 1, std::max(used, c + 1));
            assign(pick, c, -1);
            if (best_ == lower_) return;
        }
    }

    const Graph& g_;
    int lower_;
    int best_;
    std::vector<int> color_;
    std::vector<int> seen_;
    std::vector<int> saturation_;
    std::vector<int> degree_;
};

void check_oracle_args(int n, int d, int limit, const char* what) {
    if (n < 1 || n > limit)
        throw GuardError(std::string(what) + " needs 1 <= n <= " + std::to_string(limit) + ", got n=" +
                         std::to_string(n));
    if (d < 0) throw UsageError(std::string(what) + ": d must be >= 0");
}

}  // namespace

int exact_chi_small(int n, int d, ColoringMode mode) {
    check_oracle_args(n, d, kChromaticOracleLimit, "exact chromatic number");
    const auto range = range_for(mode, d, n);
    const Graph g = cube_graph(n, [&](int dist) { return range.contains(dist); });
    const int alpha = max_independent_set(g).size;
    const int clique = static_cast<int>(CliqueSearch(g).run().size());
    const int lower = std::max(clique, (g.size + alpha - 1) / alpha);
    return ColoringSearch(g, lower).run();
}

IndependentSet exact_A_small(int n, int d) {
    check_oracle_args(n, d, kIndependenceOracleLimit, "exact A(n,d)");
    return max_independent_set(cube_graph(n, [&](int dist) { return dist >= 1 && dist < d; }));
}

IndependentSet exact_Q_small(int n, int d) {
    check_oracle_args(n, d, kIndependenceOracleLimit, "exact Q(n,d)");
    return max_independent_set(cube_graph(n, [&](int dist) { return dist >= 1 && dist == d; }));
}

}  // namespace hychroma::verify
