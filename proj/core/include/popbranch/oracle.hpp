#pragma once

// Ground truth for popularity, independent of the solver: exhaustive
// enumeration of r-arborescences and a classical min-cost arborescence.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "popbranch/augmented.hpp"

namespace popbranch {

class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(std::size_t cap)
        : std::runtime_error("more than " + std::to_string(cap) + " arborescences"), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

  private:
    std::size_t cap_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;

// Calls `visit` with v -> A(v) for every r-arborescence of D, in
// lexicographic order of in-edge indices. Throws CapExceeded once more than
// `cap` arborescences have been produced.
void for_each_arborescence(const AugmentedDigraph& d, std::size_t cap,
                           const std::function<void(std::span<const EdgeIndex>)>& visit);

std::vector<Arborescence> enumerate_arborescences(const AugmentedDigraph& d,
                                                  std::size_t cap = kDefaultEnumerationCap);

struct MinCostArborescence {
    Arborescence arborescence;
    Weight cost;
};

// Chu-Liu/Edmonds with contraction; costs indexed by edge of D, nonnegative.
MinCostArborescence min_cost_arborescence(const AugmentedDigraph& d, std::span<const Weight> costs);

struct PopularityVerdict {
    bool popular;
    // Some A' with delta_w(A', A) > 0 when not popular.
    std::optional<Arborescence> witness;
    Weight min_cost;
};

// A is popular iff the min-cost arborescence under c_A costs w(V_G).
PopularityVerdict is_popular_exact(const AugmentedDigraph& d, const Arborescence& a);

// All arborescences A with delta_w(A', A) <= 0 for every A', by exhaustive
// comparison. Throws CapExceeded.
std::vector<Arborescence> brute_popular_set(const AugmentedDigraph& d, std::size_t cap = kDefaultEnumerationCap);

}  // namespace popbranch
