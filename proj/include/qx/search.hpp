#ifndef QX_SEARCH_HPP
#define QX_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qx/graph.hpp"
#include "qx/patterns.hpp"

namespace qx {

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationSpec {
    int n = 1;
    std::vector<PatternQuery> forbidden;
    bool connected_only = false;
    bool allow_large = false;  // override the desk-scale resource guard
    bool audit = false;        // isomorph hash-set audit + sampled filter recheck
};

enum class Objective { Q, Mu };

struct SearchOutcome {
    Objective objective = Objective::Q;
    double max_value = 0.0;
    std::vector<std::string> maximizers;  // canonical graph6, sorted
    std::uint64_t graphs_examined = 0;
    double wall_seconds = 0.0;
    double tie_tolerance = 0.0;
};

// Maximizers are collected within this absolute tolerance of the maximum;
// tight enough to separate genuinely distinct small-graph values, loose
// enough to catch exact ties.
inline constexpr double kTieTolerance = 1e-9;

// Visit exactly one representative per isomorphism class of order spec.n
// satisfying the filters; returns the number visited. Generation is by
// canonical augmentation: a child survives only if deleting its
// canonically-last vertex recovers the parent's isomorphism class.
std::uint64_t enumerate(const EnumerationSpec& spec,
                        const std::function<void(const Graph&)>& visitor);

SearchOutcome find_extremal(const EnumerationSpec& spec, Objective objective);

// Data-parallel variant; results are identical to the sequential run.
SearchOutcome find_extremal_sharded(const EnumerationSpec& spec,
                                    Objective objective, int shards);

struct JobDescriptor {
    EnumerationSpec spec;
    int seed_order = 1;
    std::vector<std::string> seeds;  // graph6 of order seed_order representatives
};

// Split the search into independent jobs whose subsearches partition the
// isomorph-free space. seed_order -1 picks a depth automatically.
std::vector<JobDescriptor> partition_jobs(const EnumerationSpec& spec, int shards,
                                          int seed_order = -1);

std::uint64_t run_job(const JobDescriptor& job,
                      const std::function<void(const Graph&)>& visitor);

}  // namespace qx

#endif
