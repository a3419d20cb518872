// Command line front end. Subcommands: count, enumerate, verify, tree, kunz.
// Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 computation or verification failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kunzcount/counting.hpp"
#include "kunzcount/kunz.hpp"
#include "kunzcount/serialize.hpp"
#include "kunzcount/tree.hpp"

namespace {

using kunzcount::Int;

constexpr Int kUnrestrictedTreeLimit = 12;
constexpr Int kRestrictedTreeLimit = 60;

void require_mult(Int m) {
  if (m < 2) throw std::invalid_argument("multiplicity must be at least 2");
}

int cmd_count(Int m, Int g, const std::string& method, int threads) {
  require_mult(m);
  std::string chosen = method;
  if (chosen == "auto") {
    chosen = (m >= 2 && m <= 4) ? "closed" : "enumerate";
  }
  kunzcount::CountReport report{m, g, kunzcount::CountMethod::enumeration, 0};
  if (chosen == "closed") {
    report.method = kunzcount::CountMethod::closed_form;
    switch (m) {
      case 2: report.value = kunzcount::count_mult2(g); break;
      case 3: report.value = kunzcount::count_mult3_closed(g); break;
      case 4: report.value = kunzcount::count_mult4_closed(g); break;
      default:
        throw std::invalid_argument("no closed form for multiplicity " + std::to_string(m));
    }
  } else if (chosen == "partition") {
    if (m != 4) throw std::invalid_argument("the partition method requires multiplicity 4");
    report.method = kunzcount::CountMethod::partition;
    report.value = kunzcount::partition_count_closed(g + 6);
  } else if (chosen == "residues") {
    if (m != 4) throw std::invalid_argument("the residue method requires multiplicity 4");
    report.method = kunzcount::CountMethod::residue_sum;
    report.value = 0;
    for (Int r = 1; r <= 3; ++r) report.value += kunzcount::count_mult4_residue(g, r);
  } else {
    report.method = kunzcount::CountMethod::enumeration;
    report.value = kunzcount::count_kunz(m, g, threads);
  }
  std::cout << kunzcount::to_json(report) << "\n";
  return 0;
}

int cmd_enumerate(Int m, Int g, const std::string& format, const std::string& as) {
  require_mult(m);
  const auto points = kunzcount::enumerate_kunz(m, g);
  std::vector<std::vector<Int>> rows;
  if (as == "generators") {
    rows.reserve(points.size());
    for (const auto& p : points) {
      rows.push_back(kunzcount::semigroup_from_kunz(p).minimal_generators());
    }
  } else {
    rows = kunzcount::kunz_points_as_rows(points);
  }
  if (format == "csv") {
    std::cout << kunzcount::rows_to_csv(rows);
  } else {
    std::cout << kunzcount::rows_to_json(rows) << "\n";
  }
  return 0;
}

int cmd_verify(Int m, Int from, Int to, int threads) {
  require_mult(m);
  if (from < 0 || from > to) throw std::invalid_argument("need 0 <= from <= to");
  Int checks = 0;
  auto fail = [&](Int g, const char* check, Int expected, Int actual) {
    nlohmann::ordered_json j;
    j["mult"] = m;
    j["genus"] = g;
    j["check"] = check;
    j["expected"] = expected;
    j["actual"] = actual;
    j["ok"] = false;
    std::cout << j.dump() << "\n";
    return 1;
  };
  std::vector<Int> counts;
  counts.reserve(static_cast<std::size_t>(to - from + 1));
  for (Int g = from; g <= to; ++g) {
    const Int n = kunzcount::count_kunz(m, g, threads);
    counts.push_back(n);
    if (m == 2) {
      ++checks;
      const Int c = kunzcount::count_mult2(g);
      if (c != n) return fail(g, "closed_form", c, n);
    } else if (m == 3) {
      ++checks;
      const Int c = kunzcount::count_mult3_closed(g);
      if (c != n) return fail(g, "closed_form", c, n);
    } else if (m == 4) {
      ++checks;
      const Int c = kunzcount::count_mult4_closed(g);
      if (c != n) return fail(g, "closed_form", c, n);
      Int residue_sum = 0;
      for (Int r = 1; r <= 3; ++r) {
        const Int byFormula = kunzcount::count_mult4_residue(g, r);
        const Int byCase = kunzcount::count_kunz_case(g, r);
        ++checks;
        if (byFormula != byCase) {
          const std::string name = "residue_" + std::to_string(r);
          return fail(g, name.c_str(), byFormula, byCase);
        }
        residue_sum += byFormula;
      }
      ++checks;
      if (residue_sum != n) return fail(g, "residue_sum", residue_sum, n);
      ++checks;
      const Int parts = kunzcount::partition_count_enumerated(g + 6);
      if (parts != n) return fail(g, "partition", parts, n);
      ++checks;
      const Int parts_closed = kunzcount::partition_count_closed(g + 6);
      if (parts_closed != n) return fail(g, "partition_closed", parts_closed, n);
    }
  }
  for (std::size_t t = 1; t < counts.size(); ++t) {
    ++checks;
    if (counts[t - 1] > counts[t]) {
      return fail(from + static_cast<Int>(t) - 1, "monotonic", counts[t - 1], counts[t]);
    }
  }
  nlohmann::ordered_json j;
  j["mult"] = m;
  j["from"] = from;
  j["to"] = to;
  j["checks"] = checks;
  j["ok"] = true;
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_tree(Int max_genus, std::optional<Int> m, const std::string& format, bool force) {
  const Int limit = m ? kRestrictedTreeLimit : kUnrestrictedTreeLimit;
  if (max_genus > limit && !force) {
    std::cerr << "error: max genus " << max_genus << " exceeds the safety limit " << limit
              << (m ? " for a fixed-multiplicity tree" : " for the full tree")
              << "; pass --force to override\n";
    return 2;
  }
  const auto root = kunzcount::build_tree(max_genus, m);
  const auto fmt = format == "json" ? kunzcount::TreeFormat::json : kunzcount::TreeFormat::dot;
  std::cout << kunzcount::export_tree(root, fmt);
  return 0;
}

int cmd_kunz(Int m, bool verbatim, const std::string& format) {
  if (verbatim) {
    std::cout << kunzcount::gap_style(kunzcount::kunz_polytope_verbatim(m)) << "\n";
    return 0;
  }
  const auto polytope = kunzcount::kunz_polytope(m);
  if (format == "csv") {
    std::cout << kunzcount::rows_to_csv(polytope.rows);
  } else {
    std::cout << kunzcount::rows_to_json(polytope.rows) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroups of fixed multiplicity: counting, enumeration and trees"};
  app.require_subcommand(1);

  Int mult = 0;
  Int genus = 0;
  Int from = 0;
  Int to = 0;
  Int max_genus = 0;
  int threads = 1;
  std::string method = "auto";
  std::string format;
  std::string as = "kunz";
  bool force = false;
  bool verbatim = false;

  auto* count = app.add_subcommand("count", "Count semigroups of a multiplicity and genus");
  count->add_option("--mult", mult, "Multiplicity (>= 2)")->required();
  count->add_option("--genus", genus, "Genus (>= 0)")->required()
       ->check(CLI::NonNegativeNumber);
  count->add_option("--method", method, "auto, closed, enumerate, partition or residues")
       ->check(CLI::IsMember({"auto", "closed", "enumerate", "partition", "residues"}));
  count->add_option("--threads", threads, "Worker threads for enumeration")
       ->check(CLI::Range(1, 256));

  auto* enumerate = app.add_subcommand("enumerate", "List semigroups of a multiplicity and genus");
  enumerate->add_option("--mult", mult, "Multiplicity (>= 2)")->required();
  enumerate->add_option("--genus", genus, "Genus (>= 0)")->required()
           ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", format, "json (default) or csv")
           ->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("--as", as, "kunz (coordinate vectors) or generators")
           ->check(CLI::IsMember({"kunz", "generators"}));

  auto* verify = app.add_subcommand("verify", "Cross-check formulas against enumeration");
  verify->add_option("--mult", mult, "Multiplicity (>= 2)")->required();
  verify->add_option("--from", from, "First genus")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--to", to, "Last genus")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", threads, "Worker threads for enumeration")
        ->check(CLI::Range(1, 256));

  auto* tree = app.add_subcommand("tree", "Print the semigroup tree up to a genus");
  tree->add_option("--max-genus", max_genus, "Deepest genus")->required()
      ->check(CLI::NonNegativeNumber);
  auto* tree_mult = tree->add_option("--mult", mult, "Fix the multiplicity");
  tree->add_option("--format", format, "dot (default) or json")
      ->check(CLI::IsMember({"dot", "json"}));
  tree->add_flag("--force", force, "Override the depth safety limit");

  auto* kunz = app.add_subcommand("kunz", "Print the Kunz inequality system");
  kunz->add_option("--mult", mult, "Multiplicity (>= 2)")->required();
  kunz->add_flag("--verbatim,--verbatim-gap", verbatim,
                 "Reproduce the reference single-line matrix, duplicates included");
  kunz->add_option("--format", format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) return cmd_count(mult, genus, method, threads);
    if (enumerate->parsed()) return cmd_enumerate(mult, genus, format, as);
    if (verify->parsed()) return cmd_verify(mult, from, to, threads);
    if (tree->parsed()) {
      std::optional<Int> m;
      if (tree_mult->count() > 0) m = mult;
      return cmd_tree(max_genus, m, format, force);
    }
    if (kunz->parsed()) return cmd_kunz(mult, verbatim, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
