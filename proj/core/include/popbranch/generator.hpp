#pragma once

#include <cstdint>

#include "popbranch/io.hpp"

namespace popbranch {

struct GenParams {
    std::size_t n = 5;
    // Probability of each ordered pair (u, v), u != v, becoming an edge.
    double density = 0.3;
    Weight max_weight = 1;
    // Probability that an in-edge shares the rank of the previous one at its head.
    double tie_prob = 0.0;
    // Resample the heaviest weight until w(s) + w(t) > w(u) holds.
    bool enforce_assumption = false;
    std::uint64_t seed = 0;
};

// Random directed instance. Vertices are "v<k>" and edges "e<k>", zero-padded
// so that id order matches generation order. Output depends only on params:
// all draws come straight from a seeded mt19937_64.
InstanceFile generate_random(const GenParams& params);

}  // namespace popbranch
