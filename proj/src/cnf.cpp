#include "ramsey/cnf.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ramsey/detectors.hpp"

namespace ramsey {

namespace {

// Every cycle of exactly `length` in the host, as edge-index lists. Canonical
// orientation (least vertex first, smaller second vertex) so each cycle
// subgraph appears once.
void enumerate_host_cycles(const PartiteShape& shape, const HostEdgeIndex& index, int length,
                           size_t cap, std::vector<std::vector<int>>& out) {
    int n = shape.total_vertices();
    if (length < 3 || length > n) return;

    std::vector<int> path;
    std::vector<int> clause;
    uint64_t visited = 0;

    auto emit = [&]() {
        clause.clear();
        for (size_t i = 0; i < path.size(); ++i) {
            int u = path[i];
            int v = path[(i + 1) % path.size()];
            clause.push_back(index.index_of(u, v) + 1);  // positive literal: edge is red
        }
        out.push_back(clause);
        if (out.size() > cap) throw std::length_error("cycle clause cap exceeded");
    };

    // pivot = least cycle vertex; direction fixed by path[1] < path.back()
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        visited = 1ull << s;
        auto dfs = [&](auto&& self, int cur, int remaining) -> void {
            if (remaining == 0) {
                if (shape.is_host_edge(cur, s) && path[1] < path.back()) emit();
                return;
            }
            for (int x = s + 1; x < n; ++x) {
                if ((visited >> x) & 1u) continue;
                if (!shape.is_host_edge(cur, x)) continue;
                path.push_back(x);
                visited |= 1ull << x;
                self(self, x, remaining - 1);
                visited &= ~(1ull << x);
                path.pop_back();
            }
        };
        dfs(dfs, s, length - 1);
    }
}

void enumerate_disjoint_edge_sets(const HostEdgeIndex& index, int n_edges, size_t cap,
                                  std::vector<std::vector<int>>& out) {
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, size_t first, uint64_t used) -> void {
        if (static_cast<int>(chosen.size()) == n_edges) {
            std::vector<int> clause;
            clause.reserve(chosen.size());
            for (int e : chosen) clause.push_back(-(e + 1));  // negative literal: one must be blue
            out.push_back(std::move(clause));
            if (out.size() > cap) throw std::length_error("stripe clause cap exceeded");
            return;
        }
        for (size_t i = first; i < index.edges.size(); ++i) {
            auto [u, v] = index.edges[i];
            if ((used >> u) & 1u || (used >> v) & 1u) continue;
            chosen.push_back(static_cast<int>(i));
            self(self, i + 1, used | (1ull << u) | (1ull << v));
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, 0);
}

}  // namespace

CnfInstance build_cnf(const PartiteShape& shape, int n, int cycle_len, size_t clause_cap) {
    if (n < 1) throw std::invalid_argument("stripe size must be >= 1");
    CnfInstance cnf;
    cnf.part_sizes = shape.part_sizes();
    cnf.n = n;
    cnf.cycle_len = cycle_len;

    HostEdgeIndex index(shape);
    cnf.variables = index.edges;
    enumerate_host_cycles(shape, index, cycle_len, clause_cap, cnf.cycle_clauses);
    enumerate_disjoint_edge_sets(index, n, clause_cap, cnf.stripe_clauses);
    return cnf;
}

std::string to_dimacs(const CnfInstance& cnf) {
    std::ostringstream out;
    out << "c good-coloring instance: host parts [";
    for (size_t i = 0; i < cnf.part_sizes.size(); ++i)
        out << (i ? "," : "") << cnf.part_sizes[i];
    out << "], stripe " << cnf.n << ", cycle length " << cnf.cycle_len << "\n";
    out << "c positive literal = host edge colored red\n";
    out << "p cnf " << cnf.variables.size() << " " << cnf.clause_count() << "\n";
    for (const auto& clause : cnf.cycle_clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    for (const auto& clause : cnf.stripe_clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

std::string variable_map_json(const CnfInstance& cnf) {
    nlohmann::json j;
    j["schema"] = "ramsey-varmap/1";
    j["parts"] = cnf.part_sizes;
    j["n"] = cnf.n;
    j["cycle_length"] = cnf.cycle_len;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : cnf.variables) edges.push_back({u, v});
    j["edges"] = edges;  // position i corresponds to DIMACS variable i+1
    return j.dump(2) + "\n";
}

Coloring decode_model(const CnfInstance& cnf, const std::vector<bool>& assignment) {
    if (assignment.size() != cnf.variables.size())
        throw std::invalid_argument("model arity does not match the variable count");
    Coloring coloring{PartiteShape(cnf.part_sizes)};
    for (size_t i = 0; i < assignment.size(); ++i)
        if (assignment[i]) coloring.red.add(cnf.variables[i].first, cnf.variables[i].second);
    return coloring;
}

bool evaluate_cnf(const CnfInstance& cnf, const std::vector<bool>& assignment) {
    auto sat = [&](const std::vector<int>& clause) {
        for (int lit : clause) {
            size_t var = static_cast<size_t>(std::abs(lit)) - 1;
            if (assignment[var] == (lit > 0)) return true;
        }
        return false;
    };
    for (const auto& c : cnf.cycle_clauses)
        if (!sat(c)) return false;
    for (const auto& c : cnf.stripe_clauses)
        if (!sat(c)) return false;
    return true;
}

}  // namespace ramsey
