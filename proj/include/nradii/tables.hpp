#pragma once

#include <array>
#include <vector>

#include "nradii/radii.hpp"

namespace nradii {

/// The six canonical radius tables: a fixed 9-triple grid, two orders beta
/// per triple, one (normalization, kind, nu) per table. Tables 1-3 are the
/// starlikeness radii of f, g, h at nu = 1.5; tables 4-6 the convexity radii
/// at nu = 2.5.
struct TableSpec {
    int number = 0;
    Normalization norm = Normalization::f;
    RadiusKind kind = RadiusKind::starlike;
    double nu = 0.0;
};

TableSpec table_spec(int table);  // 1..6, throws InvalidParameters otherwise

/// Row order: a = 2,3,4 (b=1, c=0); b = 2,3,4 (a=1, c=0); c = 2,3,4 (a=1, b=2).
const std::array<CoefficientTriple, 9>& table_grid();

inline constexpr std::array<double, 2> table_betas{0.0, 0.5};

/// Published reference values for the table, [triple][beta column]. Table 6
/// is known to be inconsistent with its own defining equation; see
/// table6_warning().
const std::array<std::array<double, 2>, 9>& printed_table_values(int table);

/// Warning banner attached to every table-6 emission.
const char* table6_warning() noexcept;

struct TableCellResult {
    CoefficientTriple coeffs;
    double nu = 0.0;
    double beta = 0.0;
    Normalization norm = Normalization::f;
    RadiusKind kind = RadiusKind::starlike;
    RadiusResult result;
};

/// Computes the 18 cells of one table in grid order.
std::vector<TableCellResult> generate_table(int table,
                                            const EvaluationPolicy& policy = {});

}  // namespace nradii
