#include "qx/search.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <unordered_set>

#include "qx/canonical.hpp"
#include "qx/graph6.hpp"
#include "qx/spectra.hpp"

namespace qx {

namespace {

void check_feasible(const EnumerationSpec& spec) {
    if (spec.n < 1 || spec.n > kMaxVertices)
        throw std::invalid_argument("enumeration order out of range");
    if (spec.allow_large) return;
    if (spec.n > 12)
        throw resource_limit_error(
            "enumeration beyond n = 12 is past desk scale; set allow_large to override");
    if (spec.forbidden.empty() && spec.n > 10)
        throw resource_limit_error(
            "unfiltered enumeration beyond n = 10 is past desk scale; "
            "set allow_large to override");
}

struct Enumerator {
    const EnumerationSpec& spec;
    const std::function<void(const Graph&)>& visitor;
    std::uint64_t visited = 0;
    std::unordered_set<std::string> audit_seen;

    // The pattern filter runs incrementally: a new cycle in parent+vertex
    // must pass through the new vertex. Path queries are rechecked whole.
    bool child_passes(const Graph& child, int fresh) const {
        for (const auto& q : spec.forbidden) {
            if (q.kind == PatternKind::Cycle) {
                if (detail::contains_cycle_through(child, q.length, fresh)) return false;
            } else {
                if (contains_path(child, q.length)) return false;
            }
        }
        return true;
    }

    void emit(const Graph& g, const std::string& encoding) {
        if (spec.connected_only && !is_connected(g)) return;
        ++visited;
        if (spec.audit) {
            if (!audit_seen.insert(encoding).second)
                throw std::logic_error("audit: duplicate isomorphism class visited");
            if (visited % 100 == 0) {
                for (const auto& q : spec.forbidden)
                    if (q.kind == PatternKind::Cycle &&
                        detail::contains_cycle_bruteforce(g, q.length))
                        throw std::logic_error("audit: filter admitted a forbidden cycle");
            }
        }
        visitor(g);
    }

    void expand(const Graph& g, const std::string& encoding) {
        if (g.order() == spec.n) {
            emit(g, encoding);
            return;
        }
        const int m = g.order();
        std::unordered_set<std::string> seen_children;
        for (VertexSet nbrs = 0; nbrs < (VertexSet{1} << m); ++nbrs) {
            Graph child = add_vertex(g, nbrs);
            if (!child_passes(child, m)) continue;
            CanonicalForm cf = canonical_form(child);
            if (!seen_children.insert(cf.encoding).second) continue;
            // canonical-deletion parent test: find the vertex holding the
            // last canonical position and check that removing it recovers g
            int last = 0;
            for (int v = 0; v <= m; ++v)
                if (cf.labeling[v] == m) { last = v; break; }
            if (canonical_g6(remove_vertex(child, last)) != encoding) continue;
            expand(child, cf.encoding);
        }
    }
};

std::uint64_t run_from(const Graph& seed, const EnumerationSpec& spec,
                       const std::function<void(const Graph&)>& visitor) {
    // Children are filtered incrementally, so the seed itself must pass.
    if (!is_forbidden_free(seed, spec.forbidden)) return 0;
    Enumerator e{spec, visitor};
    e.expand(seed, canonical_g6(seed));
    return e.visited;
}

}  // namespace

std::uint64_t enumerate(const EnumerationSpec& spec,
                        const std::function<void(const Graph&)>& visitor) {
    check_feasible(spec);
    return run_from(Graph(1), spec, visitor);
}

namespace {

struct Collector {
    Objective objective;
    double best = -1.0;
    std::vector<std::pair<double, std::string>> ties;  // value + canonical g6

    void offer(const Graph& g) {
        double value = objective == Objective::Q ? q_index(g).value : mu_index(g).value;
        if (value < best - kTieTolerance) return;
        if (value > best) {
            best = value;
            std::erase_if(ties,
                          [&](const auto& t) { return t.first < best - kTieTolerance; });
        }
        ties.emplace_back(value, canonical_g6(g));
    }

    SearchOutcome finish(std::uint64_t examined, double wall) {
        SearchOutcome out;
        out.objective = objective;
        out.max_value = best;
        out.graphs_examined = examined;
        out.wall_seconds = wall;
        out.tie_tolerance = kTieTolerance;
        for (auto& [value, g6] : ties)
            if (value >= best - kTieTolerance) out.maximizers.push_back(std::move(g6));
        std::sort(out.maximizers.begin(), out.maximizers.end());
        out.maximizers.erase(
            std::unique(out.maximizers.begin(), out.maximizers.end()),
            out.maximizers.end());
        return out;
    }
};

}  // namespace

SearchOutcome find_extremal(const EnumerationSpec& spec, Objective objective) {
    auto start = std::chrono::steady_clock::now();
    Collector collector{objective};
    std::uint64_t examined =
        enumerate(spec, [&](const Graph& g) { collector.offer(g); });
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    return collector.finish(examined, wall);
}

std::vector<JobDescriptor> partition_jobs(const EnumerationSpec& spec, int shards,
                                          int seed_order) {
    if (shards < 1) throw std::invalid_argument("shard count must be positive");
    check_feasible(spec);
    if (seed_order < 0) seed_order = std::min(spec.n, shards == 1 ? 1 : 6);
    if (seed_order < 1 || seed_order > spec.n)
        throw std::invalid_argument("seed order must be in [1, n]");

    EnumerationSpec seed_spec = spec;
    seed_spec.n = seed_order;
    seed_spec.connected_only = false;  // emission filter applies at full order only
    seed_spec.audit = false;
    seed_spec.allow_large = true;
    std::vector<std::string> seeds;
    run_from(Graph(1), seed_spec, [&](const Graph& g) {
        seeds.push_back(encode_graph6(g));
    });

    std::vector<JobDescriptor> jobs(static_cast<std::size_t>(shards));
    for (auto& job : jobs) {
        job.spec = spec;
        job.seed_order = seed_order;
    }
    for (std::size_t i = 0; i < seeds.size(); ++i)
        jobs[i % shards].seeds.push_back(std::move(seeds[i]));
    return jobs;
}

std::uint64_t run_job(const JobDescriptor& job,
                      const std::function<void(const Graph&)>& visitor) {
    check_feasible(job.spec);
    std::uint64_t total = 0;
    for (const auto& g6 : job.seeds)
        total += run_from(decode_graph6(g6), job.spec, visitor);
    return total;
}

SearchOutcome find_extremal_sharded(const EnumerationSpec& spec, Objective objective,
                                    int shards) {
    if (shards <= 1) return find_extremal(spec, objective);
    auto start = std::chrono::steady_clock::now();
    auto jobs = partition_jobs(spec, shards);

    std::vector<std::future<std::pair<Collector, std::uint64_t>>> futures;
    futures.reserve(jobs.size());
    for (const auto& job : jobs) {
        futures.push_back(std::async(std::launch::async, [&job, objective] {
            Collector collector{objective};
            std::uint64_t n = run_job(job, [&](const Graph& g) { collector.offer(g); });
            return std::make_pair(std::move(collector), n);
        }));
    }

    // max-with-ties reduction; associative and order-insensitive
    Collector merged{objective};
    std::uint64_t examined = 0;
    for (auto& f : futures) {
        auto [collector, count] = f.get();
        examined += count;
        if (collector.best > merged.best) merged.best = collector.best;
        for (auto& tie : collector.ties) merged.ties.push_back(std::move(tie));
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    return merged.finish(examined, wall);
}

}  // namespace qx
