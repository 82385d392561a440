#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/bounds.hpp"

namespace hyperspec {

enum class SweepFamily { Random, SingleEdge, CompleteUniform };

std::string_view to_string(SweepFamily f);
std::optional<SweepFamily> parse_sweep_family(std::string_view s);

struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct SweepConfig {
    SweepFamily family = SweepFamily::Random;
    IntRange n{3, 6};
    std::vector<int> k{3};
    /// Random family only. Cells with m outside the connected-feasible window
    /// for (n, k) are skipped.
    IntRange m{1, 12};
    int samples = 1;
    std::uint64_t seed = 0;
    bounds::Tolerances tolerances;
    int workers = 1;
    bool timing = false;
};

/// Throws std::invalid_argument for empty ranges, an empty k set or samples < 1.
void check_config(const SweepConfig& config);

struct SweepInstance {
    int n = 0;
    int k = 0;
    int m = 0;
    int sample = 0;
    std::uint64_t seed = 0;
    std::uint64_t edge_hash = 0;
    std::optional<SpectralSummary> summary;
    std::vector<bounds::BoundEvaluation> evaluations;
    /// Set when generation or evaluation was refused.
    std::string refusal;
    double seconds = 0.0;
};

struct SweepResult {
    SweepConfig config;
    /// Ordered by (n, k, m, sample) regardless of worker count.
    std::vector<SweepInstance> instances;
    double seconds = 0.0;

    int asserted_violations() const;
};

/// Seed of one instance: a SplitMix64 fold of (seed, n, k, m, sample).
std::uint64_t instance_seed(std::uint64_t seed, int n, int k, int m, int sample);

SweepResult run_sweep(const SweepConfig& config);

inline constexpr std::string_view kSweepCsvHeader =
    "instance,family,n,k,m,sample,seed,edge_hash,q_max,q_min,s_q,bound_id,assurance,"
    "applicable,lhs,rhs,slack,holds,equality_expected,equality_observed,consistent";

/// One row per (instance, bound). Byte-identical for a fixed config.
std::string sweep_csv(const SweepResult& r);

/// Per-bound minimum slack, equality hits, violations with reproducer seeds,
/// findings and refusals. Timing is included only when config.timing is set.
std::string sweep_summary_json(const SweepResult& r);

}  // namespace hyperspec
