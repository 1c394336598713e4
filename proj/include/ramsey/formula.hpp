#ifndef RAMSEY_FORMULA_HPP
#define RAMSEY_FORMULA_HPP

#include <optional>
#include <string>
#include <vector>

namespace ramsey {

// m_j(nK_2, C_7): finite host multiplier, or infinite (the bipartite-host row,
// where blue can always be the whole host and odd cycles never appear).
struct RamseyValue {
    bool infinite = false;
    int t = 0;  // meaningful only when !infinite; always >= 1 then

    static RamseyValue finite(int t) { return RamseyValue{false, t}; }
    static RamseyValue inf() { return RamseyValue{true, 0}; }
    bool operator==(const RamseyValue&) const = default;
    std::string str() const { return infinite ? "infinite" : std::to_string(t); }
};

// Which extremal family witnesses the lower bound (also the dispatch key for
// lower_bound_coloring). Exactly one regime applies to each (j, n).
enum class Regime {
    kInfinite,       // j = 2: all-blue bipartite host
    kValue1,         // no witness needed, value 1
    kValue2Clique,   // singleton parts, red clique on the last j-3 vertices
    kValue2Stars,    // singleton parts, red full stars (clique family would hold a stripe)
    kValue3Cone,     // doubled parts, red = apex joined to all but one part
    kGeneralFormula  // red complete multipartite on parts 2..j, blue bipartite
};

std::string regime_name(Regime r);

struct Evaluation {
    RamseyValue value;
    Regime regime;
    // Cells where the published case listing is self-contradictory; resolved by
    // listed-order precedence here, surfaced instead of silently normalized.
    bool contested = false;
};

// Total over j >= 2, n >= 2; throws std::invalid_argument outside the domain.
Evaluation ramsey_value(int j, int n);

struct TableCell {
    int j = 0;
    int n = 0;
    Evaluation eval;
};

struct RegimeTable {
    int j_max = 0;
    int n_max = 0;
    std::vector<TableCell> cells;  // row-major, j ascending then n ascending
    // cells whose regime differs from the regime of a grid neighbor
    std::vector<std::pair<int, int>> regime_boundaries;

    const TableCell& at(int j, int n) const;
};

RegimeTable regime_table(int j_max, int n_max);

}  // namespace ramsey

#endif
