#include "popbranch/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace popbranch {

namespace {

// Draws are done by hand: standard distributions are not portable across
// library implementations.
class Draws {
  public:
    explicit Draws(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

  private:
    std::mt19937_64 engine_;
};

std::string padded(char prefix, std::size_t k, std::size_t width) {
    std::string digits = std::to_string(k);
    return prefix + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

}  // namespace

InstanceFile generate_random(const GenParams& params) {
    Draws draws(params.seed);
    const std::size_t n = params.n;
    const Weight max_weight = std::max<Weight>(params.max_weight, 1);
    auto draw_weight = [&] { return 1 + static_cast<Weight>(draws.below(static_cast<std::uint64_t>(max_weight))); };

    std::vector<Weight> weights(n);
    for (Weight& w : weights) w = draw_weight();
    if (params.enforce_assumption) {
        for (;;) {
            WeightAssumption check = check_weight_assumption(weights);
            if (check.holds) break;
            weights[check.violation->u] = draw_weight();
        }
    }

    InstanceFile file;
    const std::size_t vertex_width = std::to_string(n == 0 ? 0 : n - 1).size();
    for (std::size_t v = 0; v < n; ++v) file.vertices.push_back(VertexInput{padded('v', v, vertex_width), weights[v]});

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && draws.unit() < params.density) pairs.emplace_back(u, v);

    // Ranks per head: shuffle the in-edges, then extend ties with tie_prob.
    std::vector<std::vector<std::size_t>> incoming(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) incoming[pairs[i].second].push_back(i);
    std::vector<Rank> rank(pairs.size(), 1);
    for (auto& list : incoming) {
        for (std::size_t i = list.size(); i > 1; --i) std::swap(list[i - 1], list[draws.below(i)]);
        Rank current = 0;
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i == 0 || draws.unit() >= params.tie_prob) ++current;
            rank[list[i]] = current;
        }
    }

    const std::size_t edge_width = std::to_string(pairs.empty() ? 0 : pairs.size() - 1).size();
    for (std::size_t i = 0; i < pairs.size(); ++i)
        file.edges.push_back(EdgeInput{padded('e', i, edge_width), file.vertices[pairs[i].first].id,
                                       file.vertices[pairs[i].second].id, rank[i]});
    return file;
}

}  // namespace popbranch
