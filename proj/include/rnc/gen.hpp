#pragma once

#include "rnc/formula.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rnc {

/// splitmix64: fixed, platform-independent 64-bit generator so seeded runs
/// reproduce everywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

enum class GenMode { Hnc, GeneralNc, ConjunctiveHnc };

struct GenConfig {
    std::uint64_t seed = 42;
    unsigned props = 8;
    unsigned depth = 4;
    unsigned arity = 3; // max children per connective
    unsigned chain = 10; // thresholds are multiples of 1/chain
    GenMode mode = GenMode::Hnc;
};

// Deterministic per config. Hnc / ConjunctiveHnc outputs are Horn-NC by
// construction; GeneralNc is unconstrained.
Formula gen_random(const GenConfig& cfg);

struct BenchRow {
    std::size_t n;        // requested literal count
    std::size_t literals; // actual literal count
    double seconds;       // solve wall time
    std::size_t steps;    // calculus steps taken
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::optional<double> exponent; // log-log least-squares slope; >=2 rows
};

// For each size, generates a conjunctive HNC formula with a long unit
// propagation chain of about n literals and times solve on it.
BenchReport bench(const std::vector<std::size_t>& sizes, const GenConfig& cfg);

// The bench input family, exposed for tests.
Formula gen_bench_formula(std::size_t n, const GenConfig& cfg);

} // namespace rnc
