#pragma once

// Exact arithmetic of numerical semigroups. The canonical representation of a
// semigroup S is the pair (multiplicity m, Apery set of m): apery[i] is the
// least element of S congruent with i modulo m, apery[0] == 0. Every other
// invariant (Frobenius number, conductor, genus, minimal generators) derives
// from it.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace kunzcount {

using Int = std::int64_t;

class NumericalSemigroup {
 public:
  /// The semigroup of all nonnegative integers (m = 1, apery = [0], F = -1).
  static NumericalSemigroup naturals();

  /// Canonical value of <gens>. Requires a nonempty list of positive integers
  /// with gcd 1; the Apery set of the multiplicity is computed by shortest
  /// paths on the residue graph modulo the multiplicity.
  static NumericalSemigroup from_generators(std::vector<Int> gens);

  /// Builds from an explicit Apery set, validating apery[0] == 0, the residue
  /// and lower-bound conditions, and additive closure.
  static NumericalSemigroup from_apery(Int multiplicity, std::vector<Int> apery);

  Int multiplicity() const noexcept { return mult_; }
  std::span<const Int> apery() const noexcept { return apery_; }

  /// n is an element iff n >= 0 and n >= apery[n mod m].
  bool contains(Int n) const noexcept;

  Int frobenius() const noexcept;
  Int conductor() const noexcept { return frobenius() + 1; }
  Int genus() const noexcept;

  /// Sorted minimal generating set; first entry is the multiplicity.
  std::vector<Int> minimal_generators() const;
  Int embedding_dimension() const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;
  friend auto operator<=>(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  NumericalSemigroup(Int m, std::vector<Int> apery);

  Int mult_;
  std::vector<Int> apery_;
};

struct SemigroupInvariants {
  Int frobenius;
  Int conductor;
  Int genus;
  Int embedding_dimension;
  std::vector<Int> minimal_generators;
};

SemigroupInvariants invariants(const NumericalSemigroup& s);

}  // namespace kunzcount
