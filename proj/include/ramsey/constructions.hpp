#ifndef RAMSEY_CONSTRUCTIONS_HPP
#define RAMSEY_CONSTRUCTIONS_HPP

#include <optional>

#include "ramsey/detectors.hpp"
#include "ramsey/formula.hpp"
#include "ramsey/host.hpp"

namespace ramsey {

struct GoodnessReport {
    int nu_red = 0;
    MatchingWitness red_matching;
    bool stripe_found = false;             // red contains an n-stripe
    std::optional<CycleWitness> blue_cycle;
    bool is_good = false;                  // neither pattern present
};

// good = no n-stripe in red AND no C_L in blue.
GoodnessReport verify_good(const Coloring& coloring, int n, int cycle_len = 7);

// Extremal coloring of K_{j x (m-1)} witnessing the lower bound, where m is the
// formula value. Returns nullopt when m = 1 (empty host, nothing to witness).
// The infinite row (j = 2) yields the all-blue coloring of K_{2 x T} for a
// caller-supplied T. Every returned coloring has passed verify_good; a family
// that fails self-verification throws instead of returning.
std::optional<Coloring> lower_bound_coloring(int j, int n,
                                             std::optional<int> bipartite_t = std::nullopt);

}  // namespace ramsey

#endif
