#pragma once

// Test-only oracles. Everything in this file is deliberately independent of
// the kunzcount library: brute-force bitmaps and exhaustive window searches
// only, so that agreement between the two is meaningful evidence.

#include <cstdint>
#include <vector>

namespace oracle {

using Int = std::int64_t;

// Additive closure of <gens> restricted to [0, bound], as a membership bitmap.
std::vector<char> closure_bitmap(const std::vector<Int>& gens, Int bound);

struct BitmapSemigroup {
  Int multiplicity = 0;
  std::vector<Int> apery;  // Apery set of the multiplicity, apery[0] == 0
  Int frobenius = -1;
  Int genus = 0;
  std::vector<Int> gaps;
  std::vector<Int> minimal_generators;
};

// Full invariant readout of <gens> computed from the closure bitmap alone.
BitmapSemigroup analyze_generators(const std::vector<Int>& gens);

// Exhaustive search over gap candidate sets: every numerical semigroup of
// genus <= max_genus is a window bitmask over [1, 2*max_genus - 1] that is
// closed under addition inside the window. Counts per genus and per
// (genus, multiplicity).
struct GapSearchResult {
  std::vector<Int> per_genus;                        // index: genus
  std::vector<std::vector<Int>> per_genus_mult;      // [genus][multiplicity]
};
GapSearchResult gapset_search(int max_genus);

// Triples 0 < x <= y <= z with x + y + z == n, x >= 2, y >= 3, z >= 4.
Int partition_triples(Int n);

}  // namespace oracle
