#pragma once

// Kunz coordinates and the Kunz polytope. A semigroup of multiplicity m with
// Apery set (0, w_1, ..., w_{m-1}) has Kunz coordinates k_i = (w_i - i) / m.
// A vector (k_1, ..., k_{m-1}) arises this way iff
//
//   k_i >= 1                          1 <= i <= m-1
//   k_i + k_j - k_{i+j}     >= 0      1 <= i <= j <= m-1, i + j <= m-1
//   k_i + k_j - k_{i+j-m}   >= -1     1 <= i <= j <= m-1, i + j >  m
//
// (pairs with i + j == m impose nothing). The genus of the semigroup is the
// coordinate sum, so counting semigroups of multiplicity m and genus g means
// counting lattice points of this polyhedron on the hyperplane sum(k) == g.

#include "kunzcount/semigroup.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace kunzcount {

struct KunzCoordinates {
  Int m;                // multiplicity, >= 2
  std::vector<Int> k;   // k_1 .. k_{m-1}

  Int genus() const;    // sum of the coordinates

  friend bool operator==(const KunzCoordinates&, const KunzCoordinates&) = default;
  friend auto operator<=>(const KunzCoordinates&, const KunzCoordinates&) = default;
};

/// An inequality system over x_1 .. x_{m-1}. Each row holds m integers: the
/// first m-1 are coefficients, the last is the constant term, and the row
/// asserts coeffs . x + constant >= 0.
struct KunzPolytope {
  Int m;
  std::vector<std::vector<Int>> rows;
};

/// Thrown when a vector fails the Kunz inequalities; carries the first row of
/// the canonical system it violates.
class NotKunzVectorError : public std::invalid_argument {
 public:
  NotKunzVectorError(const std::string& what, std::vector<Int> violated_row);
  const std::vector<Int>& violated_row() const noexcept { return row_; }

 private:
  std::vector<Int> row_;
};

/// Canonical system: positivity rows for i = 1..m-1, then one row per pair
/// i <= j (skipping i + j == m), in lexicographic (i, j) order.
KunzPolytope kunz_polytope(Int m);

/// Same system but with each i < j pair row emitted twice, matching the
/// output of the symmetric double iteration used elsewhere; byte-for-byte
/// reproducibility of that output is part of the contract.
KunzPolytope kunz_polytope_verbatim(Int m);

/// Subsystem selecting the vectors whose coordinate i_star is the strict
/// maximum of the Kunz vector (ties broken by position: k_{i*} >= k_i for
/// i < i_star, k_{i*} > k_i for i > i_star). Keeps positivity for every
/// coordinate and the pair rows not involving i_star.
KunzPolytope reduced_system(Int m, Int i_star);

bool satisfies(const KunzPolytope& polytope, std::span<const Int> k);
std::optional<std::vector<Int>> first_violation(const KunzPolytope& polytope,
                                                std::span<const Int> k);

KunzCoordinates kunz_coordinates(const NumericalSemigroup& s);
NumericalSemigroup semigroup_from_kunz(const KunzCoordinates& kc);

/// Frobenius number read off the coordinates: max_i (m * k_i + i) - m.
Int kunz_frobenius(const KunzCoordinates& kc);

using PointVisitor = std::function<void(std::span<const Int>)>;

/// Visits every integer point of `polytope` with all coordinates >= 1 and
/// coordinate sum == genus, in lexicographic order. Rows are checked as soon
/// as their last referenced coordinate is assigned, so infeasible prefixes
/// are pruned early.
void for_each_lattice_point(const KunzPolytope& polytope, Int genus,
                            const PointVisitor& visit);

/// Lattice points of kunz_polytope(m) at the given genus, lexicographic.
/// With threads > 1, disjoint ranges of k_1 are processed concurrently and
/// the results are concatenated in order, so the output does not depend on
/// the thread count.
std::vector<KunzCoordinates> enumerate_kunz(Int m, Int g, int threads = 1);
Int count_kunz(Int m, Int g, int threads = 1);

/// Points of reduced_system(4, i_star) at the given genus (i_star in 1..3).
std::vector<KunzCoordinates> enumerate_kunz_case(Int g, Int i_star);
Int count_kunz_case(Int g, Int i_star);

}  // namespace kunzcount
