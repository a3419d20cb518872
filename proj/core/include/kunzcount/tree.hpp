#pragma once

// The tree of numerical semigroups. Children of S are obtained by removing
// one minimal generator larger than the Frobenius number, so a child has
// genus(S) + 1 and its Frobenius number is the removed generator. Rooted at
// the naturals this tree reaches every numerical semigroup exactly once;
// restricting the removable generators to x != multiplicity fixes the
// multiplicity and gives the tree rooted at <m, m+1, ..., 2m-1>.

#include "kunzcount/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kunzcount {

struct TreeNode {
  NumericalSemigroup semigroup;
  Int genus;
  std::optional<Int> removed_generator;  // empty at the root
  std::vector<TreeNode> children;
};

enum class Mult3Class { Leaf, OneChild, TwoChildren };

/// S minus one element x, which must be a minimal generator with
/// x > frobenius(S). Recomputes multiplicity and Apery set.
NumericalSemigroup remove_generator(const NumericalSemigroup& s, Int x);

/// Children in the full tree, ordered by removed generator.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& s);

/// Children that keep multiplicity m (the removed generator is never m).
/// Requires multiplicity(s) == m.
std::vector<NumericalSemigroup> children_in_mult_tree(const NumericalSemigroup& s, Int m);

/// Root of the multiplicity-m tree: <m, m+1, ..., 2m-1>, genus m - 1.
NumericalSemigroup restricted_root(Int m);

/// All semigroups of genus g (with the given multiplicity if m is set),
/// computed by breadth-first descent from the corresponding root. Parent
/// order is preserved, so the result is deterministic for any thread count.
std::vector<NumericalSemigroup> level(Int g, std::optional<Int> m = std::nullopt,
                                      int threads = 1);

/// For multiplicity 3 the child count in the restricted tree is decided by
/// the embedding dimension and the sign of 2*F(S) - 3*g(S): embedding
/// dimension 2 gives a leaf, otherwise a positive sign gives one child and a
/// negative sign two. Equality never happens (F(S) is never divisible by 3);
/// hitting it throws std::domain_error.
Mult3Class classify_mult3(const NumericalSemigroup& s);

/// Tree of all semigroups with genus <= max_genus; with m set, the
/// multiplicity-m tree instead (its root has genus m - 1, which must not
/// exceed max_genus).
TreeNode build_tree(Int max_genus, std::optional<Int> m = std::nullopt);

enum class TreeFormat { dot, json };

/// DOT: node lines in preorder, then edge lines labeled by the removed
/// generator. JSON: recursive objects with generators, genus, frobenius,
/// removed (absent at the root) and children. Both are deterministic.
std::string export_tree(const TreeNode& root, TreeFormat format);

}  // namespace kunzcount
