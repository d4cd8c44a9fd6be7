#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kr2/derivation.hpp"

namespace kr2 {

/// SplitMix64: the fixed pseudo-random generator behind `verify`, chosen so
/// transcripts are reproducible across platforms and implementations.
/// state += 0x9E3779B97F4A7C15; z = state;
/// z = (z ^ z>>30) * 0xBF58476D1CE4E5B9; z = (z ^ z>>27) * 0x94D049BB133111EB;
/// return z ^ z>>31.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// uniform value in [0, n)
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
};

/// deterministic sample builders shared by `verify` and the test suites
namespace sample {

Rational rational(SplitMix64& rng, long max_abs_num = 9, long max_den = 4);
Rational nonzero_rational(SplitMix64& rng, long max_abs_num = 9, long max_den = 4);
Scalar scalar(SplitMix64& rng, const CycloContextPtr& ctx = nullptr);

/// sparse polynomial in the given variables, total degree <= max_degree
MultiPoly poly(SplitMix64& rng, std::initializer_list<Var> vars, long max_degree,
               long max_terms = 4);

/// mu drawn from {1, -1, 2, -2, 1/2, -1/2} plus zeta powers when ctx is set
Scalar group_scale(SplitMix64& rng, const CycloContextPtr& ctx = nullptr);

Automorphism automorphism(SplitMix64& rng, const ThreefoldParams& params,
                          const CycloContextPtr& ctx = nullptr, long max_degree = 2);

/// point with x^d + z^a2 != 0 (y solved from the relation)
SurfacePoint big_orbit_point(SplitMix64& rng, const ThreefoldParams& params);
/// point on the cusp locus x^d + z^a2 = 0, x != 0 (torus translate of a base witness)
SurfacePoint cusp_point(SplitMix64& rng, const ThreefoldParams& params);
/// mixed sample across all four orbit families
SurfacePoint point(SplitMix64& rng, const ThreefoldParams& params);

}  // namespace sample

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;  // short failure note, empty when passing
};

struct VerifyOptions {
    ThreefoldParams params;
    CycloContextPtr cyclo;  // optional session extension
    std::uint64_t seed = 0;
};

/// Runs every library invariant deterministically; the result order and, for
/// a fixed seed, every outcome are stable across runs.
std::vector<PropertyResult> run_verify_suite(const VerifyOptions& options);

}  // namespace kr2
