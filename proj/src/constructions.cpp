#include "ramsey/constructions.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

void add_all_host_edges_within(Coloring& c, uint64_t vertex_mask) {
    int n = c.shape.total_vertices();
    for (int u = 0; u < n; ++u) {
        if (!((vertex_mask >> u) & 1u)) continue;
        for (int v = u + 1; v < n; ++v) {
            if (!((vertex_mask >> v) & 1u)) continue;
            if (!c.shape.same_part(u, v)) c.red.add(u, v);
        }
    }
}

uint64_t part_mask(const PartiteShape& shape, int first_part, int last_part) {
    uint64_t m = 0;
    for (int v = 0; v < shape.total_vertices(); ++v) {
        int p = shape.part_of(v);
        if (p >= first_part && p <= last_part) m |= 1ull << v;
    }
    return m;
}

[[noreturn]] void construction_failure(int j, int n, const std::string& what) {
    throw std::logic_error("lower-bound construction failed self-verification for j=" +
                           std::to_string(j) + " n=" + std::to_string(n) + ": " + what);
}

}  // namespace

GoodnessReport verify_good(const Coloring& coloring, int n, int cycle_len) {
    if (n < 1) throw std::invalid_argument("stripe size must be >= 1");
    GoodnessReport report;
    MatchingResult m = matching_number(coloring.red);
    report.nu_red = m.number;
    report.red_matching = std::move(m.witness);
    report.stripe_found = report.nu_red >= n;
    report.blue_cycle = find_cycle(coloring.blue(), cycle_len);
    report.is_good = !report.stripe_found && !report.blue_cycle.has_value();
    return report;
}

std::optional<Coloring> lower_bound_coloring(int j, int n, std::optional<int> bipartite_t) {
    Evaluation eval = ramsey_value(j, n);

    if (eval.regime == Regime::kInfinite) {
        int t = bipartite_t.value_or(0);
        if (t < 1)
            throw std::invalid_argument("j = 2 has no finite value; supply the host multiplier");
        Coloring c(PartiteShape::uniform(2, t));  // red empty, blue = whole bipartite host
        if (!verify_good(c, n).is_good) construction_failure(j, n, "all-blue bipartite host");
        return c;
    }
    if (eval.value.t == 1) return std::nullopt;

    int t = eval.value.t - 1;
    Coloring c(PartiteShape::uniform(j, t));

    switch (eval.regime) {
        case Regime::kValue2Clique: {
            // red clique on the last j-3 singletons; blue = triangle joined to
            // an independent set, which has no room for 7 cycle vertices
            if (j - 3 > 2 * n - 1) construction_failure(j, n, "clique family out of range");
            uint64_t tail = 0;
            for (int v = 3; v < j; ++v) tail |= 1ull << v;
            add_all_host_edges_within(c, tail);
            break;
        }
        case Regime::kValue2Stars: {
            // full red stars at the first n-1 vertices; blue is a clique on the
            // remaining j-(n-1) <= 6 vertices
            if (j - (n - 1) > 6) construction_failure(j, n, "star family leaves a 7-clique");
            for (int center = 0; center < n - 1; ++center)
                for (int v = 0; v < j; ++v)
                    if (v != center && !c.shape.same_part(center, v)) c.red.add(center, v);
            break;
        }
        case Regime::kValue3Cone: {
            // apex x_1^1 joined to parts 3..j plus everything among parts 3..j;
            // blue is a 3-vertex path joined to an independent set minus one edge
            uint64_t cone = (1ull << 0) | part_mask(c.shape, 2, j - 1);
            add_all_host_edges_within(c, cone);
            break;
        }
        case Regime::kGeneralFormula: {
            // red = complete multipartite on parts 2..j; blue = [X_1, rest] is
            // complete bipartite, hence free of odd cycles entirely
            int red_vertices = (j - 1) * t;
            if (red_vertices > 2 * n - 1)
                construction_failure(j, n, "red side too large for the stripe bound");
            add_all_host_edges_within(c, part_mask(c.shape, 1, j - 1));
            if (!is_bipartite(c.blue())) construction_failure(j, n, "blue side not bipartite");
            break;
        }
        case Regime::kInfinite:
        case Regime::kValue1:
            break;  // unreachable
    }

    GoodnessReport report = verify_good(c, n);
    if (!report.is_good)
        construction_failure(j, n,
                             report.stripe_found ? "red contains the stripe" : "blue contains the cycle");
    return c;
}

}  // namespace ramsey
