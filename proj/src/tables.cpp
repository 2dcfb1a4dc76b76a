#include "nradii/tables.hpp"

namespace nradii {

TableSpec table_spec(int table) {
    switch (table) {
        case 1: return {1, Normalization::f, RadiusKind::starlike, 1.5};
        case 2: return {2, Normalization::g, RadiusKind::starlike, 1.5};
        case 3: return {3, Normalization::h, RadiusKind::starlike, 1.5};
        case 4: return {4, Normalization::f, RadiusKind::convex, 2.5};
        case 5: return {5, Normalization::g, RadiusKind::convex, 2.5};
        case 6: return {6, Normalization::h, RadiusKind::convex, 2.5};
        default: throw InvalidParameters("table number must be 1..6");
    }
}

const std::array<CoefficientTriple, 9>& table_grid() {
    static const std::array<CoefficientTriple, 9> grid = {{
        {2, 1, 0}, {3, 1, 0}, {4, 1, 0},  // a varies, b = 1, c = 0
        {1, 2, 0}, {1, 3, 0}, {1, 4, 0},  // b varies, a = 1, c = 0
        {1, 2, 2}, {1, 2, 3}, {1, 2, 4},  // c varies, a = 1, b = 2
    }};
    return grid;
}

const std::array<std::array<double, 2>, 9>& printed_table_values(int table) {
    static const std::array<std::array<std::array<double, 2>, 9>, 6> printed = {{
        {{{0.8231, 0.6458}, {0.7689, 0.6045}, {0.7382, 0.5809},
          {1.0917, 0.8481}, {1.1774, 0.9120}, {1.2337, 0.9539},
          {1.3089, 1.0058}, {1.3952, 1.0671}, {1.4708, 1.1203}}},
        {{{0.7188, 0.5483}, {0.6723, 0.5137}, {0.6458, 0.4939},
          {0.9477, 0.7167}, {1.0203, 0.7697}, {1.0678, 0.8044},
          {1.1285, 0.8459}, {1.1995, 0.8957}, {1.2611, 0.9388}}},
        {{{0.8009, 0.5167}, {0.6979, 0.4520}, {0.6426, 0.4171},
          {1.4211, 0.8982}, {1.6575, 1.0410}, {1.8225, 1.1403},
          {2.0638, 1.2737}, {2.3560, 1.4388}, {2.6296, 1.5905}}},
        {{{1.0057, 0.7896}, {0.9810, 0.7709}, {0.9676, 0.7607},
          {1.1515, 0.8992}, {1.2069, 0.9408}, {1.2460, 0.9702},
          {1.2412, 0.9653}, {1.2800, 0.9938}, {1.3155, 1.0197}}},
        {{{0.6839, 0.5219}, {0.6680, 0.5101}, {0.6594, 0.5036},
          {0.7769, 0.5913}, {0.8122, 0.6176}, {0.8371, 0.6361},
          {0.8325, 0.6323}, {0.8563, 0.6498}, {0.8780, 0.6658}}},
        {{{1.4835, 1.0997}, {1.4080, 1.0453}, {1.3681, 1.0165},
          {1.9725, 1.4489}, {2.1779, 1.5946}, {2.3289, 1.7016},
          {2.3191, 1.6906}, {2.4797, 1.8014}, {2.6322, 1.9060}}},
    }};
    if (table < 1 || table > 6)
        throw InvalidParameters("table number must be 1..6");
    return printed[static_cast<std::size_t>(table - 1)];
}

const char* table6_warning() noexcept {
    return "warning: the published reference values for this table are "
           "inconsistent with the defining h-convexity equation; the values "
           "printed here are the roots of that equation (for beta = 0 they "
           "equal the first zero of the (z h')' series and lie inside the "
           "Euler-Rayleigh bracket, e.g. a=2: 1.1386 vs published 1.4835)";
}

std::vector<TableCellResult> generate_table(int table,
                                            const EvaluationPolicy& policy) {
    const TableSpec spec = table_spec(table);
    std::vector<TableCellResult> cells;
    cells.reserve(18);
    for (const CoefficientTriple& k : table_grid()) {
        EvaluationContext ctx(k, spec.nu, policy);
        for (double beta : table_betas) {
            TableCellResult cell;
            cell.coeffs = k;
            cell.nu = spec.nu;
            cell.beta = beta;
            cell.norm = spec.norm;
            cell.kind = spec.kind;
            cell.result =
                solve_radius(ctx, RadiusQuery{spec.norm, spec.kind, beta});
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace nradii
