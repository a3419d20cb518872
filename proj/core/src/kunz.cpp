#include "kunzcount/kunz.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <utility>

#include "checked.hpp"

namespace kunzcount {

namespace {

std::size_t idx(Int i) { return static_cast<std::size_t>(i); }

void require_mult(Int m) {
  if (m < 2) throw std::invalid_argument("Kunz system requires multiplicity >= 2");
}

std::vector<Int> pair_row(Int m, Int i, Int j) {
  // k_i + k_j - k_{(i+j) mod m} >= 0 when i + j < m, >= -1 when i + j > m.
  std::vector<Int> row(idx(m), 0);
  row[idx(i - 1)] += 1;
  row[idx(j - 1)] += 1;
  if (i + j <= m - 1) {
    row[idx(i + j - 1)] -= 1;
  } else {
    row[idx(i + j - m - 1)] -= 1;
    row[idx(m - 1)] = 1;
  }
  return row;
}

KunzPolytope build_polytope(Int m, bool verbatim) {
  require_mult(m);
  KunzPolytope p{m, {}};
  for (Int i = 1; i < m; ++i) {
    std::vector<Int> row(idx(m), 0);
    row[idx(i - 1)] = 1;
    row[idx(m - 1)] = -1;
    p.rows.push_back(std::move(row));
  }
  for (Int i = 1; i < m; ++i) {
    for (Int j = i; j < m; ++j) {
      if (i + j == m) continue;
      p.rows.push_back(pair_row(m, i, j));
      if (verbatim && i < j) p.rows.push_back(p.rows.back());
    }
  }
  return p;
}

}  // namespace

Int KunzCoordinates::genus() const {
  Int g = 0;
  for (Int v : k) g = checked::add(g, v);
  return g;
}

NotKunzVectorError::NotKunzVectorError(const std::string& what, std::vector<Int> violated_row)
    : std::invalid_argument(what), row_(std::move(violated_row)) {}

KunzPolytope kunz_polytope(Int m) { return build_polytope(m, false); }

KunzPolytope kunz_polytope_verbatim(Int m) { return build_polytope(m, true); }

KunzPolytope reduced_system(Int m, Int i_star) {
  require_mult(m);
  if (i_star < 1 || i_star >= m) {
    throw std::invalid_argument("reduced_system: i_star must lie in 1..m-1");
  }
  KunzPolytope p{m, {}};
  for (Int i = 1; i < m; ++i) {
    std::vector<Int> row(idx(m), 0);
    row[idx(i - 1)] = 1;
    row[idx(m - 1)] = -1;
    p.rows.push_back(std::move(row));
  }
  for (Int i = 1; i < m; ++i) {
    if (i == i_star) continue;
    for (Int j = i; j < m; ++j) {
      if (j == i_star || i + j == m) continue;
      p.rows.push_back(pair_row(m, i, j));
    }
  }
  // Maximality of coordinate i_star: ties allowed only to its left.
  for (Int i = 1; i < m; ++i) {
    if (i == i_star) continue;
    std::vector<Int> row(idx(m), 0);
    row[idx(i_star - 1)] = 1;
    row[idx(i - 1)] = -1;
    row[idx(m - 1)] = (i > i_star) ? -1 : 0;
    p.rows.push_back(std::move(row));
  }
  return p;
}

namespace {

Int eval_row(const std::vector<Int>& row, std::span<const Int> k) {
  Int acc = row.back();
  for (std::size_t t = 0; t + 1 < row.size(); ++t) {
    acc = checked::add(acc, checked::mul(row[t], k[t]));
  }
  return acc;
}

void require_point_size(const KunzPolytope& polytope, std::span<const Int> k) {
  if (static_cast<Int>(k.size()) != polytope.m - 1) {
    throw std::invalid_argument("point dimension does not match the system");
  }
}

}  // namespace

bool satisfies(const KunzPolytope& polytope, std::span<const Int> k) {
  require_point_size(polytope, k);
  return std::all_of(polytope.rows.begin(), polytope.rows.end(),
                     [&](const std::vector<Int>& row) { return eval_row(row, k) >= 0; });
}

std::optional<std::vector<Int>> first_violation(const KunzPolytope& polytope,
                                                std::span<const Int> k) {
  require_point_size(polytope, k);
  for (const auto& row : polytope.rows) {
    if (eval_row(row, k) < 0) return row;
  }
  return std::nullopt;
}

KunzCoordinates kunz_coordinates(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  if (m < 2) {
    throw std::invalid_argument("Kunz coordinates are undefined for the naturals");
  }
  KunzCoordinates kc{m, std::vector<Int>(idx(m - 1), 0)};
  for (Int i = 1; i < m; ++i) {
    kc.k[idx(i - 1)] = (s.apery()[idx(i)] - i) / m;
  }
  return kc;
}

NumericalSemigroup semigroup_from_kunz(const KunzCoordinates& kc) {
  require_mult(kc.m);
  if (static_cast<Int>(kc.k.size()) != kc.m - 1) {
    throw std::invalid_argument("Kunz vector must have m - 1 entries");
  }
  const KunzPolytope p = kunz_polytope(kc.m);
  if (auto row = first_violation(p, kc.k)) {
    std::ostringstream what;
    what << "not a Kunz vector: violates row [";
    for (std::size_t t = 0; t < row->size(); ++t) {
      if (t > 0) what << ", ";
      what << (*row)[t];
    }
    what << "]";
    throw NotKunzVectorError(what.str(), std::move(*row));
  }
  std::vector<Int> apery(idx(kc.m), 0);
  for (Int i = 1; i < kc.m; ++i) {
    apery[idx(i)] = checked::add(checked::mul(kc.k[idx(i - 1)], kc.m), i);
  }
  return NumericalSemigroup::from_apery(kc.m, std::move(apery));
}

Int kunz_frobenius(const KunzCoordinates& kc) {
  require_mult(kc.m);
  if (static_cast<Int>(kc.k.size()) != kc.m - 1) {
    throw std::invalid_argument("Kunz vector must have m - 1 entries");
  }
  Int best = 0;
  for (Int i = 1; i < kc.m; ++i) {
    best = std::max(best, checked::add(checked::mul(kc.k[idx(i - 1)], kc.m), i));
  }
  return best - kc.m;
}

namespace {

// Depth-first enumeration over (k_1, ..., k_{m-1}). Each row is evaluated at
// the deepest coordinate it references, so a violated inequality cuts the
// subtree as soon as it is decidable. Coordinates are >= 1 and the running
// sum leaves at least 1 per open coordinate.
class LatticeEnumerator {
 public:
  LatticeEnumerator(const KunzPolytope& polytope, Int genus)
      : nvars_(polytope.m - 1), genus_(genus), point_(idx(nvars_), 0) {
    triggered_.resize(idx(nvars_) + 1);
    for (const auto& row : polytope.rows) {
      Int last = 0;
      for (Int t = 1; t <= nvars_; ++t) {
        if (row[idx(t - 1)] != 0) last = t;
      }
      if (last == 0) {
        constant_feasible_ = constant_feasible_ && row.back() >= 0;
      } else {
        triggered_[idx(last)].push_back(&row);
      }
    }
  }

  void run(Int first_lo, Int first_hi, const PointVisitor& visit) {
    if (!constant_feasible_ || genus_ < nvars_) return;
    visit_ = &visit;
    const Int lo = std::max<Int>(first_lo, 1);
    if (nvars_ == 1) {
      if (genus_ >= lo && genus_ <= first_hi) assign(1, genus_);
    } else {
      const Int hi = std::min(first_hi, genus_ - (nvars_ - 1));
      for (Int v = lo; v <= hi; ++v) assign(1, v);
    }
    visit_ = nullptr;
  }

  void run(const PointVisitor& visit) { run(1, genus_, visit); }

 private:
  void assign(Int t, Int value) {
    point_[idx(t - 1)] = value;
    sum_ += value;
    if (feasible_here(t)) {
      if (t == nvars_) {
        (*visit_)(point_);
      } else {
        descend(t + 1);
      }
    }
    sum_ -= value;
  }

  bool feasible_here(Int t) const {
    for (const auto* row : triggered_[idx(t)]) {
      if (eval_prefix(*row, t) < 0) return false;
    }
    return true;
  }

  Int eval_prefix(const std::vector<Int>& row, Int t) const {
    Int acc = row.back();
    for (Int u = 1; u <= t; ++u) {
      acc += row[idx(u - 1)] * point_[idx(u - 1)];
    }
    return acc;
  }

  void descend(Int t) {
    if (t == nvars_) {
      // The parent bound left at least 1; the last coordinate is forced.
      assign(t, genus_ - sum_);
      return;
    }
    // Remaining coordinates t..nvars_ each need at least 1.
    const Int open = nvars_ - t;
    const Int hi = genus_ - sum_ - open;
    for (Int v = 1; v <= hi; ++v) {
      assign(t, v);
    }
  }

  Int nvars_;
  Int genus_;
  Int sum_ = 0;
  bool constant_feasible_ = true;
  std::vector<Int> point_;
  std::vector<std::vector<const std::vector<Int>*>> triggered_;
  const PointVisitor* visit_ = nullptr;
};

struct FirstRange {
  Int lo;
  Int hi;
};

// Contiguous ranges of k_1 for the worker threads. The lexicographic output
// order is restored by concatenating per-range results in range order.
std::vector<FirstRange> split_first_coordinate(Int nvars, Int genus, int threads) {
  const Int hi = genus - (nvars - 1);
  std::vector<FirstRange> ranges;
  if (hi < 1) return ranges;
  const Int want = std::min<Int>(threads, hi);
  const Int base = hi / want;
  Int extra = hi % want;
  Int lo = 1;
  for (Int t = 0; t < want; ++t) {
    const Int len = base + (extra > 0 ? 1 : 0);
    if (extra > 0) --extra;
    ranges.push_back({lo, lo + len - 1});
    lo += len;
  }
  return ranges;
}

template <typename PerRange>
auto map_ranges(const KunzPolytope& polytope, Int g, int threads, PerRange per_range) {
  using Result = decltype(per_range(FirstRange{1, 1}));
  const Int nvars = polytope.m - 1;
  std::vector<Result> out;
  if (threads <= 1 || nvars <= 1) {
    out.push_back(per_range(FirstRange{1, g}));
    return out;
  }
  const auto ranges = split_first_coordinate(nvars, g, threads);
  std::vector<std::future<Result>> futures;
  futures.reserve(ranges.size());
  for (const auto& r : ranges) {
    futures.push_back(std::async(std::launch::async, per_range, r));
  }
  out.reserve(futures.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

void require_genus(Int g) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
}

}  // namespace

void for_each_lattice_point(const KunzPolytope& polytope, Int genus,
                            const PointVisitor& visit) {
  require_mult(polytope.m);
  require_genus(genus);
  LatticeEnumerator(polytope, genus).run(visit);
}

namespace {

std::vector<KunzCoordinates> enumerate_points(const KunzPolytope& polytope, Int g,
                                              int threads) {
  require_genus(g);
  auto chunks = map_ranges(polytope, g, threads, [&](FirstRange r) {
    std::vector<KunzCoordinates> pts;
    LatticeEnumerator dfs(polytope, g);
    dfs.run(r.lo, r.hi, [&](std::span<const Int> k) {
      pts.push_back(KunzCoordinates{polytope.m, {k.begin(), k.end()}});
    });
    return pts;
  });
  std::vector<KunzCoordinates> out;
  for (auto& c : chunks) {
    out.insert(out.end(), std::make_move_iterator(c.begin()),
               std::make_move_iterator(c.end()));
  }
  return out;
}

Int count_points(const KunzPolytope& polytope, Int g, int threads) {
  require_genus(g);
  auto chunks = map_ranges(polytope, g, threads, [&](FirstRange r) {
    Int n = 0;
    LatticeEnumerator dfs(polytope, g);
    dfs.run(r.lo, r.hi, [&](std::span<const Int>) { ++n; });
    return n;
  });
  return std::accumulate(chunks.begin(), chunks.end(), Int{0});
}

}  // namespace

std::vector<KunzCoordinates> enumerate_kunz(Int m, Int g, int threads) {
  return enumerate_points(kunz_polytope(m), g, threads);
}

Int count_kunz(Int m, Int g, int threads) {
  return count_points(kunz_polytope(m), g, threads);
}

std::vector<KunzCoordinates> enumerate_kunz_case(Int g, Int i_star) {
  return enumerate_points(reduced_system(4, i_star), g, 1);
}

Int count_kunz_case(Int g, Int i_star) {
  return count_points(reduced_system(4, i_star), g, 1);
}

}  // namespace kunzcount
