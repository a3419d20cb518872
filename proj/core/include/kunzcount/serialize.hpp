#pragma once

// Text encodings used by the command line tool and the test suite. All
// output is deterministic: fixed field order, no locale dependence.

#include "kunzcount/counting.hpp"
#include "kunzcount/kunz.hpp"

#include <string>
#include <vector>

namespace kunzcount {

/// Compact JSON array of arrays, e.g. [[1,0,-1],[0,1,-1]].
std::string rows_to_json(const std::vector<std::vector<Int>>& rows);

/// One comma-separated line per row, each terminated by '\n'.
std::string rows_to_csv(const std::vector<std::vector<Int>>& rows);

/// Single-line bracketed matrix with the exact spacing of the reference
/// output: "[ [ 1, 0, 0, -1 ], [ 0, 1, 0, -1 ] ]".
std::string gap_style(const KunzPolytope& polytope);

std::vector<std::vector<Int>> kunz_points_as_rows(const std::vector<KunzCoordinates>& points);

std::string to_json(const CountReport& report);
std::string to_json(const WindowMonotonicityResult& result);

}  // namespace kunzcount
