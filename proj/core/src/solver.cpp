#include "plsrd/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "plsrd/errors.hpp"

namespace plsrd {

namespace {

constexpr int kBruteForceLimit = 16;
constexpr int kEnumerateLimit = 14;

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Brute force: plain odometer over all 3^n labelings in lexicographic order.

bool next_labeling(Labeling& f) {
    for (int i = f.size() - 1; i >= 0; --i) {
        if (f[i] == -1) {
            f[i] = 1;
            return true;
        }
        if (f[i] == 1) {
            f[i] = 2;
            return true;
        }
        f[i] = -1;  // carry
    }
    return false;
}

// ---------------------------------------------------------------------------
// Shared incremental state for the backtracking search and the valid-labeling
// enumerator. Labels use 0 as the undecided sentinel.

struct PartialState {
    const Graph& g;
    std::vector<Label> label;
    std::vector<int> undecided_nbrs;  // undecided neighbors of v
    std::vector<int> closed_sum;      // decided part of the closed neighborhood sum
    std::vector<int> guard_cnt;       // decided strong neighbors
    std::vector<int> weak_cnt;        // decided weak neighbors
    int minus = 0, ones = 0, twos = 0, undecided = 0;
    int partial_weight = 0;

    explicit PartialState(const Graph& graph)
        : g(graph),
          label(graph.order(), 0),
          undecided_nbrs(graph.order()),
          closed_sum(graph.order(), 0),
          guard_cnt(graph.order(), 0),
          weak_cnt(graph.order(), 0),
          undecided(graph.order()) {
        for (int v = 0; v < graph.order(); ++v) undecided_nbrs[v] = graph.degree(v);
    }

    void assign(int v, Label val) {
        label[v] = val;
        --undecided;
        partial_weight += val;
        if (val == -1)
            ++minus;
        else if (val == 1)
            ++ones;
        else
            ++twos;
        closed_sum[v] += val;
        for (int u : g.neighbors(v)) {
            closed_sum[u] += val;
            --undecided_nbrs[u];
            if (val == 2) ++guard_cnt[u];
            if (val == -1) ++weak_cnt[u];
        }
    }

    void unassign(int v) {
        const Label val = label[v];
        label[v] = 0;
        ++undecided;
        partial_weight -= val;
        if (val == -1)
            --minus;
        else if (val == 1)
            --ones;
        else
            --twos;
        closed_sum[v] -= val;
        for (int u : g.neighbors(v)) {
            closed_sum[u] -= val;
            ++undecided_nbrs[u];
            if (val == 2) --guard_cnt[u];
            if (val == -1) --weak_cnt[u];
        }
    }

    // Monotone infeasibility checks around the vertex just assigned: once any
    // of these fires, no completion of the partial labeling is valid.
    bool locally_feasible(int v) const {
        if (!vertex_ok(v)) return false;
        for (int u : g.neighbors(v))
            if (!vertex_ok(u)) return false;
        return true;
    }

    bool vertex_ok(int x) const {
        if (label[x] == -1) {
            if (guard_cnt[x] >= 2) return false;                           // C1 multi
            if (guard_cnt[x] == 0 && undecided_nbrs[x] == 0) return false; // C1 none
        } else if (label[x] == 2 && weak_cnt[x] >= 2) {
            return false;  // C2
        }
        if (label[x] != 0 && undecided_nbrs[x] == 0 && closed_sum[x] < 1)
            return false;  // C3 on a fully decided closed neighborhood
        return true;
    }
};

// ---------------------------------------------------------------------------
// Backtracking branch and bound.

struct Shared {
    std::atomic<int> incumbent_weight;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::mutex found_mutex;
    std::vector<std::pair<int, Labeling>> found;  // strict improvements
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    Clock::time_point deadline = Clock::time_point::max();
    bool has_deadline = false;
};

struct Searcher {
    PartialState state;
    const std::vector<int>& order;
    bool cubic;
    Shared& shared;
    std::uint64_t local_until_check = 0;

    Searcher(const Graph& g, const std::vector<int>& ord, bool is_cubic, Shared& sh)
        : state(g), order(ord), cubic(is_cubic), shared(sh) {}

    bool budget_ok() {
        std::uint64_t seen = shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (seen > shared.node_budget) {
            shared.out_of_budget.store(true, std::memory_order_relaxed);
            return false;
        }
        if (shared.has_deadline && (seen & 0xFFF) == 0 &&
            Clock::now() > shared.deadline) {
            shared.out_of_budget.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    // Admissible optimistic weight of any valid completion: every undecided
    // vertex counts 1, minus 2 per vertex that could still turn weak. The
    // count of additional weak vertices is capped by the strong-side balance
    // (each weak vertex needs its own strong guard) and, on cubic graphs, by
    // the 1-labeled coverage constraint.
    bool bound_allows_improvement() const {
        const int m = state.minus, t = state.twos, o = state.ones, u = state.undecided;
        if (m > t + u) return false;
        int extra = std::min(u, (t + u - m) / 2);
        if (cubic) {
            if (m > 2 * (o + u)) return false;
            extra = std::min(extra, (2 * o + 2 * u - m) / 3);
        }
        const int optimistic = state.partial_weight + u - 2 * extra;
        return optimistic < shared.incumbent_weight.load(std::memory_order_relaxed);
    }

    void record_solution() {
        const int weight = state.partial_weight;
        std::lock_guard lock(shared.found_mutex);
        if (weight < shared.incumbent_weight.load(std::memory_order_relaxed)) {
            shared.incumbent_weight.store(weight, std::memory_order_relaxed);
            shared.found.emplace_back(weight, Labeling(state.label));
        } else if (weight == shared.incumbent_weight.load(std::memory_order_relaxed)) {
            // Concurrent workers can reach the same weight before seeing each
            // other's update; keep both for the canonical pick at the end.
            shared.found.emplace_back(weight, Labeling(state.label));
        }
    }

    void dfs(int depth) {
        if (shared.out_of_budget.load(std::memory_order_relaxed)) return;
        if (depth == state.g.order()) {
            record_solution();
            return;
        }
        const int v = order[depth];
        for (Label val : {Label(1), Label(2), Label(-1)}) {
            if (!budget_ok()) return;
            state.assign(v, val);
            if (state.locally_feasible(v) && bound_allows_improvement()) dfs(depth + 1);
            state.unassign(v);
            if (shared.out_of_budget.load(std::memory_order_relaxed)) return;
        }
    }
};

std::vector<int> branching_order(const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

// Expands the first levels of the search tree into replayable prefixes so a
// worker pool can split the remaining subtrees.
std::vector<std::vector<Label>> make_tasks(const Graph& g, const std::vector<int>& order,
                                           bool cubic, Shared& shared, int target) {
    std::vector<std::vector<Label>> frontier = {{}};
    Searcher probe(g, order, cubic, shared);
    int depth = 0;
    while (static_cast<int>(frontier.size()) < target && depth < g.order()) {
        std::vector<std::vector<Label>> next;
        const int v = order[depth];
        for (const auto& prefix : frontier) {
            for (int i = 0; i < depth; ++i) probe.state.assign(order[i], prefix[i]);
            for (Label val : {Label(1), Label(2), Label(-1)}) {
                probe.state.assign(v, val);
                if (probe.state.locally_feasible(v) && probe.bound_allows_improvement()) {
                    auto extended = prefix;
                    extended.push_back(val);
                    next.push_back(std::move(extended));
                }
                probe.state.unassign(v);
            }
            for (int i = depth - 1; i >= 0; --i) probe.state.unassign(order[i]);
        }
        frontier = std::move(next);
        ++depth;
        if (frontier.empty()) break;
    }
    return frontier;
}

SolveResult run_backtracking(const Graph& g, const SolveOptions& opts) {
    const int n = g.order();
    const bool cubic = g.is_regular(3);
    const std::vector<int> order = branching_order(g);

    Labeling initial = Labeling::all_ones(n);
    if (opts.warm_start) {
        if (!is_valid(g, *opts.warm_start))
            throw InvalidOptions("warm start labeling is not a valid certificate");
        initial = *opts.warm_start;
    }
    const int initial_weight = stats(initial).weight;

    Shared shared;
    shared.incumbent_weight.store(initial_weight);
    if (opts.node_budget) shared.node_budget = *opts.node_budget;
    if (opts.time_budget_seconds) {
        shared.has_deadline = true;
        shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(*opts.time_budget_seconds));
    }

    if (opts.workers <= 1) {
        Searcher searcher(g, order, cubic, shared);
        searcher.dfs(0);
    } else {
        auto tasks = make_tasks(g, order, cubic, shared, 16 * opts.workers);
        std::atomic<size_t> next_task{0};
        auto worker = [&] {
            Searcher searcher(g, order, cubic, shared);
            while (!shared.out_of_budget.load(std::memory_order_relaxed)) {
                size_t id = next_task.fetch_add(1);
                if (id >= tasks.size()) return;
                const auto& prefix = tasks[id];
                bool alive = true;
                int applied = 0;
                for (Label val : prefix) {
                    int v = order[applied];
                    searcher.state.assign(v, val);
                    ++applied;
                    if (!searcher.state.locally_feasible(v) ||
                        !searcher.bound_allows_improvement()) {
                        alive = false;
                        break;
                    }
                }
                if (alive) searcher.dfs(applied);
                for (int i = applied - 1; i >= 0; --i) searcher.state.unassign(order[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < opts.workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SolveResult result;
    result.algorithm = Algorithm::Backtracking;
    result.nodes_explored = std::min<std::uint64_t>(shared.nodes.load(), shared.node_budget);
    result.proven_optimal = !shared.out_of_budget.load();
    result.optimum = shared.incumbent_weight.load();
    // Canonical pick: lexicographically smallest among the found optima; when
    // the search never improved, the initial incumbent is the witness.
    result.witness = initial;
    bool picked = false;
    for (const auto& [weight, labeling] : shared.found) {
        if (weight != result.optimum) continue;
        if (!picked || labeling.lex_less(result.witness)) {
            result.witness = labeling;
            picked = true;
        }
    }
    return result;
}

}  // namespace

SolveResult brute_force(const Graph& g) {
    const int n = g.order();
    if (n > kBruteForceLimit)
        throw TooLarge("brute force is limited to " + std::to_string(kBruteForceLimit) +
                       " vertices");
    SolveResult result;
    result.algorithm = Algorithm::BruteForce;
    Labeling f = Labeling::filled(n, -1);
    int best = std::numeric_limits<int>::max();
    std::uint64_t nodes = 0;
    do {
        ++nodes;
        if (!is_valid(g, f)) continue;
        const int weight = stats(f).weight;
        if (weight < best) {  // first hit in lex order stays the witness
            best = weight;
            result.witness = f;
        }
    } while (next_labeling(f));
    result.optimum = best;
    result.nodes_explored = nodes;
    result.proven_optimal = true;
    return result;
}

SolveResult solve(const Graph& g, const SolveOptions& opts) {
    if (opts.workers < 1) throw InvalidOptions("worker count must be >= 1");
    if (opts.node_budget && *opts.node_budget == 0)
        throw InvalidOptions("node budget must be positive");
    if (opts.time_budget_seconds && *opts.time_budget_seconds <= 0)
        throw InvalidOptions("time budget must be positive");
    if (opts.warm_start && opts.warm_start->size() != g.order())
        throw InvalidOptions("warm start length does not match graph order");
    if (opts.algorithm == Algorithm::BruteForce) return brute_force(g);
    return run_backtracking(g, opts);
}

void for_each_valid(const Graph& g, const std::function<void(const Labeling&)>& fn) {
    const int n = g.order();
    if (n > kEnumerateLimit)
        throw TooLarge("valid-labeling enumeration is limited to " +
                       std::to_string(kEnumerateLimit) + " vertices");
    PartialState state(g);
    Labeling out;
    // Lexicographic value order; only monotone prunes, so every valid
    // labeling is reached.
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.labels = state.label;
            fn(out);
            return;
        }
        for (Label val : {Label(-1), Label(1), Label(2)}) {
            state.assign(v, val);
            if (state.locally_feasible(v)) self(self, v + 1);
            state.unassign(v);
        }
    };
    dfs(dfs, 0);
}

std::vector<Labeling> enumerate_valid(const Graph& g) {
    std::vector<Labeling> out;
    for_each_valid(g, [&](const Labeling& f) { out.push_back(f); });
    return out;
}

}  // namespace plsrd
