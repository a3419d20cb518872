#pragma once

// Counting semigroups by multiplicity and genus. Multiplicities 2, 3 and 4
// have closed forms; the multiplicity 4 count also splits by the residue of
// the Frobenius number mod 4 and equals a restricted partition count via an
// explicit bijection. The closed forms are quasi-polynomials whose rational
// coefficients have denominator dividing 8, so they are evaluated exactly in
// 8-scaled integer arithmetic; a non-integral result is a hard error.

#include "kunzcount/kunz.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace kunzcount {

enum class CountMethod { closed_form, enumeration, partition, residue_sum };

std::string_view to_string(CountMethod method);

struct CountReport {
  Int m;
  Int g;
  CountMethod method;
  Int value;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Lattice-point enumeration count, valid for every multiplicity >= 2.
CountReport count_enumerated(Int m, Int g, int threads = 1);

/// Multiplicity 2: a unique semigroup <2, 2g+1> for each genus g >= 1.
Int count_mult2(Int g);

/// Multiplicity 3: 0 for g < 2, floor(g/3) + 1 otherwise.
Int count_mult3_closed(Int g);

/// Multiplicity 4 semigroups of genus g whose Frobenius number is congruent
/// with r mod 4, r in {1, 2, 3}. Piecewise: small genera are explicit values
/// or low-degree polynomials, the quasi-polynomial regime starts at g = 10,
/// 8 and 7 respectively.
Int count_mult4_residue(Int g, Int r);

/// Multiplicity 4 total; equals the sum of the three residue classes.
Int count_mult4_closed(Int g);

/// Partitions of n into three parts x <= y <= z with x >= 2, y >= 3, z >= 4.
/// partition_count(g + 6) equals count_mult4(g): the bijection sends a
/// multiplicity 4 semigroup of genus g with Kunz coordinates (k_1, k_2, k_3)
/// sorted increasingly to the parts (k + offset) with offsets (1, 2, 3).
Int partition_count_enumerated(Int n);
Int partition_count_closed(Int n);

/// Multiplicity 5 has no closed form here; the count is by enumeration.
Int count_mult5_enumerated(Int g);

/// Window check that f is nondecreasing on [g0, g1]. The period is carried
/// as metadata so a violation can be located inside its quasi-period window
/// (window index floor(g / period)).
struct WindowMonotonicityResult {
  Int period;
  Int start;
  Int end;
  bool ok;
  std::optional<Int> first_violation;  // least g with f(g) > f(g+1)

  std::optional<Int> violation_window() const;
};

WindowMonotonicityResult verify_nondecreasing(const std::function<Int(Int)>& f,
                                              Int g0, Int g1, Int period);

}  // namespace kunzcount
