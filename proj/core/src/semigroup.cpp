#include "kunzcount/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

#include "checked.hpp"

namespace kunzcount {

NumericalSemigroup::NumericalSemigroup(Int m, std::vector<Int> apery)
    : mult_(m), apery_(std::move(apery)) {}

NumericalSemigroup NumericalSemigroup::naturals() {
  return NumericalSemigroup(1, {0});
}

NumericalSemigroup NumericalSemigroup::from_apery(Int multiplicity, std::vector<Int> apery) {
  if (multiplicity < 1) {
    throw std::invalid_argument("from_apery: multiplicity must be positive");
  }
  if (static_cast<Int>(apery.size()) != multiplicity) {
    throw std::invalid_argument("from_apery: expected exactly m entries");
  }
  if (apery[0] != 0) {
    throw std::invalid_argument("from_apery: apery[0] must be 0");
  }
  for (Int i = 1; i < multiplicity; ++i) {
    if (apery[i] < multiplicity || apery[i] % multiplicity != i) {
      throw std::invalid_argument(
          "from_apery: apery[i] must be congruent with i mod m and at least m");
    }
  }
  // Additive closure: w_i + w_j >= w_{(i+j) mod m} for all pairs. Having the
  // least element per residue class makes this equivalent to closure of the
  // whole set.
  for (Int i = 0; i < multiplicity; ++i) {
    for (Int j = i; j < multiplicity; ++j) {
      const Int target = (i + j) % multiplicity;
      if (checked::add(apery[i], apery[j]) < apery[target]) {
        throw std::invalid_argument("from_apery: set is not additively closed");
      }
    }
  }
  return NumericalSemigroup(multiplicity, std::move(apery));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens) {
  if (gens.empty()) {
    throw std::invalid_argument("from_generators: generator list is empty");
  }
  for (Int a : gens) {
    if (a <= 0) {
      throw std::invalid_argument("from_generators: generators must be positive");
    }
  }
  Int d = 0;
  for (Int a : gens) d = std::gcd(d, a);
  if (d != 1) {
    throw std::invalid_argument("from_generators: gcd of the generators must be 1");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const Int m = gens.front();
  if (m == 1) return naturals();

  // apery[i] is the shortest-path distance from residue 0 to residue i in the
  // graph whose edges add one generator. gcd 1 makes every residue reachable.
  constexpr Int kUnset = -1;
  std::vector<Int> dist(static_cast<std::size_t>(m), kUnset);
  using Entry = std::pair<Int, Int>;  // (distance, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [d0, r0] = queue.top();
    queue.pop();
    if (d0 != dist[static_cast<std::size_t>(r0)]) continue;
    for (Int a : gens) {
      const Int d1 = checked::add(d0, a);
      const Int r1 = (r0 + a % m) % m;
      Int& slot = dist[static_cast<std::size_t>(r1)];
      if (slot == kUnset || d1 < slot) {
        slot = d1;
        queue.emplace(d1, r1);
      }
    }
  }
  return NumericalSemigroup(m, std::move(dist));
}

bool NumericalSemigroup::contains(Int n) const noexcept {
  if (n < 0) return false;
  return n >= apery_[static_cast<std::size_t>(n % mult_)];
}

Int NumericalSemigroup::frobenius() const noexcept {
  if (mult_ == 1) return -1;
  Int best = 0;
  for (Int w : apery_) best = std::max(best, w);
  return best - mult_;
}

Int NumericalSemigroup::genus() const noexcept {
  // Residue class i contributes floor(w_i / m) gaps: i, i + m, ..., w_i - m.
  Int g = 0;
  for (Int i = 1; i < mult_; ++i) {
    g += apery_[static_cast<std::size_t>(i)] / mult_;
  }
  return g;
}

std::vector<Int> NumericalSemigroup::minimal_generators() const {
  // Every minimal generator is the multiplicity or an Apery element; a
  // candidate x is redundant iff x - b lies in S for some other candidate b,
  // with x - b > 0.
  std::vector<Int> candidates;
  candidates.reserve(static_cast<std::size_t>(mult_));
  candidates.push_back(mult_);
  for (Int i = 1; i < mult_; ++i) {
    candidates.push_back(apery_[static_cast<std::size_t>(i)]);
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<Int> out;
  for (Int x : candidates) {
    bool decomposable = false;
    for (Int b : candidates) {
      const Int rest = x - b;
      if (rest > 0 && contains(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

Int NumericalSemigroup::embedding_dimension() const {
  return static_cast<Int>(minimal_generators().size());
}

SemigroupInvariants invariants(const NumericalSemigroup& s) {
  SemigroupInvariants inv;
  inv.frobenius = s.frobenius();
  inv.conductor = s.conductor();
  inv.genus = s.genus();
  inv.minimal_generators = s.minimal_generators();
  inv.embedding_dimension = static_cast<Int>(inv.minimal_generators.size());
  return inv;
}

}  // namespace kunzcount
