#include "ramsey/formula.hpp"

#include <stdexcept>

namespace ramsey {

namespace {

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

}  // namespace

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::kInfinite: return "infinite";
        case Regime::kValue1: return "value-1";
        case Regime::kValue2Clique: return "value-2-clique";
        case Regime::kValue2Stars: return "value-2-stars";
        case Regime::kValue3Cone: return "value-3-cone";
        case Regime::kGeneralFormula: return "general-formula";
    }
    return "?";
}

Evaluation ramsey_value(int j, int n) {
    if (j < 2 || n < 2) throw std::invalid_argument("domain is j >= 2, n >= 2");

    // Case listing is ordered; the first match wins. The two contested cells
    // carry conflicting published entries and are flagged.
    if (j == 2) {
        // bipartite host: blue = host has no odd cycle, so no value is finite.
        // (n, j) = (3, 2) is also listed with value 3; the bipartite row is
        // analytically forced and takes precedence.
        return {RamseyValue::inf(), Regime::kInfinite, n == 3};
    }
    if (j == 3) {
        if (n == 4) return {RamseyValue::finite(3), Regime::kGeneralFormula, true};
        if (n >= 3) return {RamseyValue::finite(n), Regime::kGeneralFormula, false};
        return {RamseyValue::finite(2), Regime::kGeneralFormula, false};  // n = 2 fallthrough row
    }
    if (j == 4) {
        return {RamseyValue::finite(ceil_div(n + 1, 2)), Regime::kGeneralFormula, false};
    }

    // j >= 5
    if (n == 2) {
        if (j >= 8) return {RamseyValue::finite(1), Regime::kValue1, false};
        // red K_{j-3} would contain a 2-stripe once j-3 >= 4; full stars instead
        Regime r = (j == 7) ? Regime::kValue2Stars : Regime::kValue2Clique;
        return {RamseyValue::finite(2), r, false};
    }
    if (n == 3) {
        if (j >= 9) return {RamseyValue::finite(1), Regime::kValue1, false};
        return {RamseyValue::finite(2), Regime::kValue2Clique, false};
    }
    // n >= 4
    if (j >= 2 * n + 3) return {RamseyValue::finite(1), Regime::kValue1, false};
    if (j >= n + 2 && j <= 2 * n + 2)
        return {RamseyValue::finite(2), Regime::kValue2Clique, false};
    if (n == j - 1 || n == j) return {RamseyValue::finite(3), Regime::kValue3Cone, false};
    // remaining cells all have n > j
    return {RamseyValue::finite(ceil_div(2LL * (n + 1), j)), Regime::kGeneralFormula, false};
}

const TableCell& RegimeTable::at(int j, int n) const {
    if (j < 2 || j > j_max || n < 2 || n > n_max) throw std::invalid_argument("cell out of range");
    size_t cols = static_cast<size_t>(n_max - 1);
    return cells[static_cast<size_t>(j - 2) * cols + static_cast<size_t>(n - 2)];
}

RegimeTable regime_table(int j_max, int n_max) {
    if (j_max < 2 || n_max < 2) throw std::invalid_argument("table bounds must be >= 2");
    RegimeTable out;
    out.j_max = j_max;
    out.n_max = n_max;
    for (int j = 2; j <= j_max; ++j)
        for (int n = 2; n <= n_max; ++n) out.cells.push_back({j, n, ramsey_value(j, n)});

    for (int j = 2; j <= j_max; ++j) {
        for (int n = 2; n <= n_max; ++n) {
            Regime r = out.at(j, n).eval.regime;
            bool boundary = (j < j_max && out.at(j + 1, n).eval.regime != r) ||
                            (n < n_max && out.at(j, n + 1).eval.regime != r);
            if (boundary) out.regime_boundaries.emplace_back(j, n);
        }
    }
    return out;
}

}  // namespace ramsey
