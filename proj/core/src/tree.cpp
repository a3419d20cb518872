#include "kunzcount/tree.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kunzcount {

namespace {

std::size_t idx(Int i) { return static_cast<std::size_t>(i); }

}  // namespace

NumericalSemigroup remove_generator(const NumericalSemigroup& s, Int x) {
  const auto gens = s.minimal_generators();
  if (std::find(gens.begin(), gens.end(), x) == gens.end()) {
    throw std::invalid_argument("remove_generator: x is not a minimal generator");
  }
  if (x <= s.frobenius()) {
    throw std::invalid_argument("remove_generator: x must exceed the Frobenius number");
  }
  // Dropping a minimal generator above F keeps the set closed; x becomes the
  // new Frobenius number. The multiplicity changes only when x was it.
  Int m2 = s.multiplicity();
  if (x == m2) {
    m2 = 2 * s.multiplicity();
    for (Int i = 1; i < s.multiplicity(); ++i) {
      m2 = std::min(m2, s.apery()[idx(i)]);
    }
  }
  std::vector<Int> apery(idx(m2), 0);
  for (Int i = 1; i < m2; ++i) {
    Int n = i;
    while (!s.contains(n) || n == x) n += m2;
    apery[idx(i)] = n;
  }
  return NumericalSemigroup::from_apery(m2, std::move(apery));
}

std::vector<NumericalSemigroup> children(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  std::vector<NumericalSemigroup> out;
  for (Int x : s.minimal_generators()) {
    if (x > f) out.push_back(remove_generator(s, x));
  }
  return out;
}

std::vector<NumericalSemigroup> children_in_mult_tree(const NumericalSemigroup& s, Int m) {
  if (s.multiplicity() != m) {
    throw std::invalid_argument("children_in_mult_tree: multiplicity mismatch");
  }
  const Int f = s.frobenius();
  std::vector<NumericalSemigroup> out;
  for (Int x : s.minimal_generators()) {
    if (x > f && x != m) out.push_back(remove_generator(s, x));
  }
  return out;
}

NumericalSemigroup restricted_root(Int m) {
  if (m < 2) throw std::invalid_argument("restricted_root: multiplicity must be >= 2");
  // <m, m+1, ..., 2m-1>: the Apery element in class i is m + i.
  std::vector<Int> apery(idx(m), 0);
  for (Int i = 1; i < m; ++i) apery[idx(i)] = m + i;
  return NumericalSemigroup::from_apery(m, std::move(apery));
}

namespace {

using ChildFn = std::vector<NumericalSemigroup> (*)(const NumericalSemigroup&, Int);

std::vector<NumericalSemigroup> unrestricted_children(const NumericalSemigroup& s, Int) {
  return children(s);
}

std::vector<NumericalSemigroup> expand(const std::vector<NumericalSemigroup>& parents,
                                       ChildFn child_fn, Int m, int threads) {
  std::vector<NumericalSemigroup> next;
  if (threads <= 1 || parents.size() < 2) {
    for (const auto& p : parents) {
      auto kids = child_fn(p, m);
      next.insert(next.end(), std::make_move_iterator(kids.begin()),
                  std::make_move_iterator(kids.end()));
    }
    return next;
  }
  const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                 parents.size());
  std::vector<std::future<std::vector<NumericalSemigroup>>> futures;
  const std::size_t base = parents.size() / want;
  std::size_t extra = parents.size() % want;
  std::size_t lo = 0;
  for (std::size_t t = 0; t < want; ++t) {
    const std::size_t len = base + (extra > 0 ? 1 : 0);
    if (extra > 0) --extra;
    const std::size_t hi = lo + len;
    futures.push_back(std::async(std::launch::async, [&, lo, hi] {
      std::vector<NumericalSemigroup> part;
      for (std::size_t u = lo; u < hi; ++u) {
        auto kids = child_fn(parents[u], m);
        part.insert(part.end(), std::make_move_iterator(kids.begin()),
                    std::make_move_iterator(kids.end()));
      }
      return part;
    }));
    lo = hi;
  }
  for (auto& f : futures) {
    auto part = f.get();
    next.insert(next.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  return next;
}

}  // namespace

std::vector<NumericalSemigroup> level(Int g, std::optional<Int> m, int threads) {
  if (g < 0) throw std::invalid_argument("level: genus must be nonnegative");
  std::vector<NumericalSemigroup> current;
  Int depth = 0;
  ChildFn child_fn = unrestricted_children;
  Int mult = 0;
  if (m) {
    mult = *m;
    if (mult == 1) {
      if (g == 0) current.push_back(NumericalSemigroup::naturals());
      return current;
    }
    if (g < mult - 1) return current;
    current.push_back(restricted_root(mult));
    depth = mult - 1;
    child_fn = children_in_mult_tree;
  } else {
    current.push_back(NumericalSemigroup::naturals());
  }
  for (; depth < g; ++depth) {
    current = expand(current, child_fn, mult, threads);
  }
  return current;
}

Mult3Class classify_mult3(const NumericalSemigroup& s) {
  if (s.multiplicity() != 3) {
    throw std::invalid_argument("classify_mult3: multiplicity must be 3");
  }
  if (s.embedding_dimension() == 2) return Mult3Class::Leaf;
  const Int f = s.frobenius();
  const Int g = s.genus();
  if (2 * f == 3 * g) {
    throw std::domain_error("classify_mult3: 2F == 3g cannot happen for multiplicity 3");
  }
  return 2 * f > 3 * g ? Mult3Class::OneChild : Mult3Class::TwoChildren;
}

namespace {

TreeNode grow(NumericalSemigroup s, Int genus, std::optional<Int> removed,
              Int max_genus, std::optional<Int> m) {
  TreeNode node{std::move(s), genus, removed, {}};
  if (genus == max_genus) return node;
  auto kids = m ? children_in_mult_tree(node.semigroup, *m) : children(node.semigroup);
  node.children.reserve(kids.size());
  for (auto& child : kids) {
    const Int x = child.frobenius();
    node.children.push_back(grow(std::move(child), genus + 1, x, max_genus, m));
  }
  return node;
}

}  // namespace

TreeNode build_tree(Int max_genus, std::optional<Int> m) {
  if (max_genus < 0) throw std::invalid_argument("build_tree: max_genus must be nonnegative");
  if (!m) {
    return grow(NumericalSemigroup::naturals(), 0, std::nullopt, max_genus, m);
  }
  if (*m < 2) throw std::invalid_argument("build_tree: multiplicity must be >= 2");
  if (max_genus < *m - 1) {
    throw std::invalid_argument("build_tree: max_genus is below the root genus m - 1");
  }
  return grow(restricted_root(*m), *m - 1, std::nullopt, max_genus, m);
}

namespace {

std::string generator_label(const NumericalSemigroup& s) {
  std::ostringstream out;
  out << "⟨";
  const auto gens = s.minimal_generators();
  for (std::size_t t = 0; t < gens.size(); ++t) {
    if (t > 0) out << ",";
    out << gens[t];
  }
  out << "⟩";
  return out.str();
}

void dot_nodes(const TreeNode& node, std::size_t& next_id, std::ostringstream& out) {
  const std::size_t id = next_id++;
  out << "  n" << id << " [label=\"" << generator_label(node.semigroup)
      << "\\ng=" << node.genus << "\"];\n";
  for (const auto& child : node.children) dot_nodes(child, next_id, out);
}

void dot_edges(const TreeNode& node, std::size_t& next_id, std::ostringstream& out) {
  const std::size_t id = next_id++;
  for (const auto& child : node.children) {
    out << "  n" << id << " -> n" << next_id;
    if (child.removed_generator) out << " [label=\"" << *child.removed_generator << "\"]";
    out << ";\n";
    dot_edges(child, next_id, out);
  }
}

nlohmann::ordered_json json_node(const TreeNode& node) {
  nlohmann::ordered_json j;
  j["generators"] = node.semigroup.minimal_generators();
  j["genus"] = node.genus;
  j["frobenius"] = node.semigroup.frobenius();
  if (node.removed_generator) j["removed"] = *node.removed_generator;
  auto& kids = j["children"] = nlohmann::ordered_json::array();
  for (const auto& child : node.children) kids.push_back(json_node(child));
  return j;
}

}  // namespace

std::string export_tree(const TreeNode& root, TreeFormat format) {
  if (format == TreeFormat::json) {
    return json_node(root).dump(2) + "\n";
  }
  std::ostringstream out;
  out << "digraph semigroup_tree {\n";
  std::size_t next_id = 0;
  dot_nodes(root, next_id, out);
  next_id = 0;
  dot_edges(root, next_id, out);
  out << "}\n";
  return out.str();
}

}  // namespace kunzcount
