// kernelsplit: command-line surface over the finite-group computation
// library.
//
//   analyze <spec>                      structure + automorphism-splitting
//   lie <family> <rank> <p> <m>         closed-form aut-split verdict
//   lien --f <spec> --gamma <spec> [--kappa <pairs>]
//                                       neutrality + tower splitting
//   reproduce                           the full built-in claim suite
//
// Cycle notation is 1-indexed in all input and output.  --json switches each
// report from the human-readable table to a stable JSON document.  Exit
// codes: 0 success, 2 parse/input error, 3 bound exceeded, 4 claim failure
// in reproduce, 1 anything else.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kernelsplit/autsplit.hpp"
#include "kernelsplit/catalog.hpp"
#include "kernelsplit/complement.hpp"
#include "kernelsplit/config.hpp"
#include "kernelsplit/error.hpp"
#include "kernelsplit/group_ops.hpp"
#include "kernelsplit/lien.hpp"
#include "kernelsplit/lietype.hpp"
#include "kernelsplit/perm.hpp"
#include "kernelsplit/perm_group.hpp"
#include "kernelsplit/structure.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

json cycle_strings(const std::vector<ks::Perm>& perms) {
  json out = json::array();
  for (const ks::Perm& p : perms) out.push_back(p.cycle_string());
  return out;
}

json certificate_json(const ks::SearchCertificate& cert) {
  return json{{"quotient_generator_orders", cert.quotient_gen_orders},
              {"candidate_counts", cert.candidate_counts},
              {"tuples_examined", cert.tuples_examined},
              {"exhausted", cert.exhausted}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// analyze

json run_analyze(const std::string& spec_text) {
  const auto start = Clock::now();
  ks::NamedGroup named = ks::parse_group_spec(spec_text);
  const ks::PermGroup& g = named.group;

  ks::AutData aut = ks::automorphism_group(g);
  ks::CompositionSeries series = ks::composition_factors(g);
  bool anti_solvable = true;
  json factor_names = json::array();
  for (const ks::SimpleId& id : series.factors) {
    factor_names.push_back(id.name());
    if (id.family == ks::SimpleFamily::Cyclic) anti_solvable = false;
  }
  ks::AutSplitResult split = ks::is_aut_split(aut);

  // Alias labels per class id (beyond the canonical scan-order label).
  std::map<std::uint32_t, std::vector<std::string>> aliases;
  for (const auto& [label, id] : aut.labels)
    if (label != aut.out_classes[id].label) aliases[id].push_back(label);

  json classes = json::array();
  for (const ks::OuterClass& cls : aut.out_classes) {
    classes.push_back(
        json{{"id", cls.id},
             {"label", cls.label},
             {"aliases", aliases.count(cls.id) ? json(aliases[cls.id])
                                               : json::array()},
             {"order_in_out", cls.order_in_out},
             {"min_element_order_in_coset", ks::min_order_in_coset(aut, cls)}});
  }

  json report{{"command", "analyze"},
              {"group", named.name},
              {"degree", g.degree()},
              {"order", g.order()},
              {"center_order", ks::center(g).order()},
              {"composition_factors", factor_names},
              {"anti_solvable", anti_solvable},
              {"aut_order", aut.aut.order()},
              {"inn_order", aut.inn.order()},
              {"out_order", aut.out_order},
              {"outer_classes", classes},
              {"aut_split", split.split},
              {"complement_generators", cycle_strings(split.complement_generators)},
              {"search", certificate_json(split.certificate)},
              {"timing_ms", ms_since(start)}};
  return report;
}

void print_analyze(const json& r) {
  std::cout << "group                " << r["group"].get<std::string>()
            << "  (degree " << r["degree"] << ", order " << r["order"]
            << ")\n";
  std::cout << "center order         " << r["center_order"] << "\n";
  std::cout << "composition factors  ";
  if (r["composition_factors"].empty()) std::cout << "(none: trivial group)";
  for (std::size_t i = 0; i < r["composition_factors"].size(); ++i)
    std::cout << (i ? ", " : "")
              << r["composition_factors"][i].get<std::string>();
  std::cout << "  (listed bottom-up)\n";
  std::cout << "anti-solvable        "
            << yes_no(r["anti_solvable"].get<bool>()) << "\n";
  std::cout << "|Aut|                " << r["aut_order"] << "\n";
  std::cout << "|Inn|                " << r["inn_order"] << "\n";
  std::cout << "|Out|                " << r["out_order"] << "\n";
  std::cout << "outer classes        (min order is over the whole coset)\n";
  for (const json& c : r["outer_classes"]) {
    std::cout << "  " << c["label"].get<std::string>();
    for (const json& a : c["aliases"])
      std::cout << " = " << a.get<std::string>();
    std::cout << "  order-in-Out " << c["order_in_out"]
              << "  min element order " << c["min_element_order_in_coset"]
              << "\n";
  }
  std::cout << "aut-split            " << yes_no(r["aut_split"].get<bool>())
            << "\n";
  if (r["aut_split"].get<bool>()) {
    std::cout << "complement generators (permutations of the " << r["order"]
              << " element indices):\n";
    for (const json& w : r["complement_generators"])
      std::cout << "  " << w.get<std::string>() << "\n";
  } else {
    std::cout << "no complement exists; search exhausted: "
              << yes_no(r["search"]["exhausted"].get<bool>()) << "\n";
  }
  std::cout << "search tuples        " << r["search"]["tuples_examined"]
            << "\n";
  std::cout << "timing               " << r["timing_ms"] << " ms\n";
}

// ---------------------------------------------------------------------------
// lie

json run_lie(const std::string& family_text, unsigned rank, std::uint64_t p,
             unsigned m) {
  const auto start = Clock::now();
  ks::LieFamily family = ks::parse_lie_family(family_text);
  ks::LieTypeParams params = ks::validate_lie_params(family, rank, p, m);
  ks::LieVerdict verdict = ks::is_aut_split_lie(params);
  return json{{"command", "lie"},
              {"family", ks::lie_family_name(family)},
              {"rank", params.rank},
              {"p", params.p},
              {"m", params.m},
              {"q", params.q},
              {"d", verdict.d},
              {"branch", ks::lie_branch_name(verdict.branch)},
              {"triple", verdict.triple},
              {"aut_split", verdict.aut_split},
              {"timing_ms", ms_since(start)}};
}

void print_lie(const json& r) {
  std::cout << "type                 " << r["family"].get<std::string>()
            << r["rank"] << "(" << r["q"] << ")   [q = " << r["p"] << "^"
            << r["m"] << "]\n";
  std::cout << "d                    " << r["d"] << "\n";
  std::cout << "branch               " << r["branch"].get<std::string>()
            << "\n";
  if (!r["triple"].empty()) {
    std::cout << "gcd arguments        (";
    for (std::size_t i = 0; i < r["triple"].size(); ++i)
      std::cout << (i ? ", " : "") << r["triple"][i];
    std::cout << ")\n";
  } else {
    std::cout << "criterion            rank parity / characteristic 2 only\n";
  }
  std::cout << "aut-split            " << yes_no(r["aut_split"].get<bool>())
            << "\n";
  std::cout << "timing               " << r["timing_ms"] << " ms\n";
}

// ---------------------------------------------------------------------------
// lien

struct KappaAssignment {
  unsigned generator_pos = 0;  // 1-based position into gamma's generators
  std::string label;
  std::uint32_t class_id = 0;
};

// Resolves an outer-class label; "swap" means the class exchanging the two
// factors of a direct square, computed from the block-exchanging conjugation.
std::uint32_t resolve_kappa_label(const ks::AutData& aut,
                                  const ks::NamedGroup& f_spec,
                                  const std::string& label) {
  if (label == "swap") {
    if (!f_spec.square_product)
      ks::fail(ks::ErrorKind::ParseError,
               "the outer-class label 'swap' needs a kernel that is a direct "
               "square, e.g. \"A5 x A5\"");
    const unsigned d = f_spec.group.degree();
    const unsigned h = d / 2;
    std::vector<ks::Perm::Pt> img(d);
    for (unsigned i = 0; i < d; ++i)
      img[i] = static_cast<ks::Perm::Pt>((i + h) % d);
    ks::Perm swap = ks::Perm::from_images(std::move(img));
    return aut.out_class_of(aut.table->conjugation_map(swap));
  }
  return aut.resolve_label(label);
}

// Parses "1:s,2:o1" into per-generator outer classes, then completes the
// assignment to a full table over gamma's element indices along the Cayley
// BFS tree.  Generators not mentioned get the trivial class.  Whether the
// result is an actual homomorphism is validated downstream by make_lien.
std::vector<std::uint32_t> build_kappa_table(
    const ks::AutData& aut, const ks::NamedGroup& f_spec,
    const ks::ElementTable& gt, const std::string& pairs_text,
    std::vector<KappaAssignment>& assignments) {
  const std::size_t gen_count = gt.generators().size();
  std::vector<std::uint32_t> gen_class(gen_count, 0);
  std::vector<bool> assigned(gen_count, false);

  std::size_t pos = 0;
  while (pos < pairs_text.size()) {
    std::size_t comma = pairs_text.find(',', pos);
    if (comma == std::string::npos) comma = pairs_text.size();
    std::string piece = pairs_text.substr(pos, comma - pos);
    pos = comma + 1;
    // Trim surrounding spaces.
    while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
    while (!piece.empty() && piece.back() == ' ') piece.pop_back();
    if (piece.empty()) continue;

    std::size_t colon = piece.find(':');
    if (colon == std::string::npos)
      ks::fail(ks::ErrorKind::ParseError,
               "kappa pair '" + piece + "' is not of the form INDEX:LABEL");
    unsigned idx = 0;
    try {
      std::size_t used = 0;
      idx = static_cast<unsigned>(std::stoul(piece.substr(0, colon), &used));
      if (used != colon) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      ks::fail(ks::ErrorKind::ParseError,
               "kappa pair '" + piece + "' needs a 1-based generator index");
    }
    if (idx < 1 || idx > gen_count)
      ks::fail(ks::ErrorKind::ParseError,
               "kappa generator index " + std::to_string(idx) +
                   " is out of range: gamma has " +
                   std::to_string(gen_count) + " generator(s)");
    if (assigned[idx - 1])
      ks::fail(ks::ErrorKind::ParseError,
               "kappa generator index " + std::to_string(idx) +
                   " is assigned twice");
    std::string label = piece.substr(colon + 1);
    KappaAssignment a;
    a.generator_pos = idx;
    a.label = label;
    a.class_id = resolve_kappa_label(aut, f_spec, label);
    gen_class[idx - 1] = a.class_id;
    assigned[idx - 1] = true;
    assignments.push_back(a);
  }

  // Complete along the Cayley BFS tree: every non-identity element factors as
  // parent * generator.
  std::vector<std::uint32_t> table(gt.size(), 0);
  for (std::uint32_t e : gt.bfs_order()) {
    if (e == gt.bfs_order().front()) continue;
    table[e] = aut.out_mul(table[gt.bfs_parent(e)], gen_class[gt.bfs_gen(e)]);
  }
  return table;
}

json tower_json(const ks::Lien& lien) {
  try {
    ks::TowerResult tower = ks::split_via_tower(lien);
    json gens = json::array();
    if (tower.section)
      gens = cycle_strings(tower.section->gen_images());
    return json{{"applicable", true},
                {"split", tower.split},
                {"trace", tower.trace},
                {"section_images", gens}};
  } catch (const ks::KsError& e) {
    if (e.kind() != ks::ErrorKind::HypothesisFailed) throw;
    return json{{"applicable", false}, {"reason", e.what()}};
  }
}

json run_lien(const std::string& f_text, const std::string& gamma_text,
              const std::string& kappa_text) {
  const auto start = Clock::now();
  ks::NamedGroup f_spec = ks::parse_group_spec(f_text);
  ks::NamedGroup gamma_spec = ks::parse_group_spec(gamma_text);

  auto aut = std::make_shared<const ks::AutData>(
      ks::automorphism_group(f_spec.group));
  ks::ElementTablePtr gt = ks::ElementTable::build(gamma_spec.group);

  std::vector<KappaAssignment> assignments;
  std::vector<std::uint32_t> table =
      build_kappa_table(*aut, f_spec, *gt, kappa_text, assignments);
  ks::Lien lien = ks::make_lien(aut, gamma_spec.group, table);

  json assignment_json = json::array();
  for (const KappaAssignment& a : assignments)
    assignment_json.push_back(json{{"generator", a.generator_pos},
                                   {"label", a.label},
                                   {"class", a.class_id}});

  ks::NeutralityResult neutrality = ks::is_neutral(lien);
  json section = json();  // null when not neutral
  if (neutrality.extension.section)
    section = cycle_strings(neutrality.extension.section->gen_images());

  json report{{"command", "lien"},
              {"f", f_spec.name},
              {"f_order", f_spec.group.order()},
              {"f_degree", f_spec.group.degree()},
              {"out_order", aut->out_order},
              {"gamma", gamma_spec.name},
              {"gamma_order", gamma_spec.group.order()},
              {"gamma_generators", cycle_strings(gt->generators())},
              {"kappa", json{{"assignments", assignment_json},
                             {"table", lien.kappa}}},
              {"extension_order", neutrality.extension.e.order()},
              {"extension_degree", neutrality.extension.e.degree()},
              {"neutral", neutrality.neutral},
              {"section_images", section},
              {"search", certificate_json(neutrality.certificate)},
              {"tower", tower_json(lien)},
              {"timing_ms", ms_since(start)}};
  return report;
}

void print_lien(const json& r) {
  std::cout << "kernel F             " << r["f"].get<std::string>()
            << "  (order " << r["f_order"] << ", |Out| " << r["out_order"]
            << ")\n";
  std::cout << "gamma                " << r["gamma"].get<std::string>()
            << "  (order " << r["gamma_order"] << ")\n";
  std::cout << "gamma generators     ";
  for (std::size_t i = 0; i < r["gamma_generators"].size(); ++i)
    std::cout << (i ? ", " : "")
              << r["gamma_generators"][i].get<std::string>();
  std::cout << "\n";
  std::cout << "kappa table          [";
  for (std::size_t i = 0; i < r["kappa"]["table"].size(); ++i)
    std::cout << (i ? ", " : "") << r["kappa"]["table"][i];
  std::cout << "]  (gamma element index -> outer class id)\n";
  std::cout << "extension            order " << r["extension_order"]
            << ", degree " << r["extension_degree"] << "\n";
  std::cout << "neutral              " << yes_no(r["neutral"].get<bool>())
            << "\n";
  if (r["neutral"].get<bool>()) {
    std::cout << "section images       (per gamma generator, acting on "
              << r["extension_degree"] << " points)\n";
    for (const json& w : r["section_images"])
      std::cout << "  " << w.get<std::string>() << "\n";
  } else {
    std::cout << "no section exists; search exhausted: "
              << yes_no(r["search"]["exhausted"].get<bool>()) << "\n";
  }
  const json& tower = r["tower"];
  if (tower["applicable"].get<bool>()) {
    std::cout << "tower                split: "
              << yes_no(tower["split"].get<bool>()) << "\n";
    for (const json& line : tower["trace"])
      std::cout << "  " << line.get<std::string>() << "\n";
  } else {
    std::cout << "tower                not applicable: "
              << tower["reason"].get<std::string>() << "\n";
  }
  std::cout << "timing               " << r["timing_ms"] << " ms\n";
}

// ---------------------------------------------------------------------------
// reproduce

struct ReproduceOutcome {
  json report;
  std::vector<std::string> failed_claims;
};

json a6_json(const ks::A6Report& rep) {
  json classes = json::array();
  for (const ks::A6ClassFinding& f : rep.classes)
    classes.push_back(json{{"label", f.label},
                           {"class_id", f.class_id},
                           {"min_order_in_coset", f.min_order_in_coset},
                           {"neutral", f.neutral}});
  return json{{"classes", classes},
              {"involution_in_m_coset", rep.involution_in_m_coset},
              {"non_neutral_class", rep.non_neutral_class},
              {"pass", true}};
}

ReproduceOutcome run_reproduce() {
  const auto start = Clock::now();
  ReproduceOutcome out;

  // The order-2 counterexample kernel: exactly one of the three nontrivial
  // outer classes resists splitting, and it is the involution-free one.
  json a6;
  try {
    a6 = a6_json(ks::a6_counterexample());
  } catch (const ks::KsError& e) {
    if (e.kind() != ks::ErrorKind::Internal &&
        e.kind() != ks::ErrorKind::HypothesisFailed)
      throw;
    a6 = json{{"pass", false}, {"error", e.what()}};
    out.failed_claims.push_back(
        std::string("A6 counterexample: ") + e.what());
  }

  // Sweep: every kernel datum over these kernels and quotients must be
  // neutral, and the tower construction must produce a verified section.
  const std::vector<std::string> kernel_specs = {"A5", "PSL(2,7)", "A5 x A5"};
  const std::vector<std::string> gamma_specs = {"C2", "C3", "C2 x C2", "S3"};

  json cases = json::array();
  std::uint64_t case_count = 0, neutral_count = 0, tower_count = 0;
  for (const std::string& f_text : kernel_specs) {
    ks::NamedGroup f_spec = ks::parse_group_spec(f_text);
    auto aut = std::make_shared<const ks::AutData>(
        ks::automorphism_group(f_spec.group));
    for (const std::string& gamma_text : gamma_specs) {
      ks::NamedGroup gamma_spec = ks::parse_group_spec(gamma_text);
      ks::ElementTablePtr gt = ks::ElementTable::build(gamma_spec.group);
      for (const std::vector<std::uint32_t>& table :
           ks::all_kappa_tables(*aut, *gt)) {
        ks::Lien lien = ks::make_lien(aut, gamma_spec.group, table);
        ++case_count;
        bool neutral = false, tower_split = false;
        std::string error;
        try {
          neutral = ks::is_neutral(lien).neutral;
          tower_split = ks::split_via_tower(lien).split;
        } catch (const ks::KsError& e) {
          if (e.kind() != ks::ErrorKind::Internal &&
              e.kind() != ks::ErrorKind::HypothesisFailed)
            throw;
          error = e.what();
        }
        neutral_count += neutral;
        tower_count += tower_split;
        json entry{{"f", f_spec.name},
                   {"gamma", gamma_spec.name},
                   {"kappa", table},
                   {"neutral", neutral},
                   {"tower_split", tower_split}};
        if (!error.empty()) entry["error"] = error;
        if (!neutral || !tower_split) {
          std::string claim = "sweep case f=" + f_spec.name +
                              " gamma=" + gamma_spec.name + " kappa=[";
          for (std::size_t i = 0; i < table.size(); ++i)
            claim += (i ? "," : "") + std::to_string(table[i]);
          claim += !neutral ? "]: not neutral" : "]: tower did not split";
          if (!error.empty()) claim += " (" + error + ")";
          out.failed_claims.push_back(claim);
        }
        cases.push_back(std::move(entry));
      }
    }
  }

  const bool sweep_pass =
      neutral_count == case_count && tower_count == case_count;
  const bool pass = sweep_pass && a6["pass"].get<bool>();
  out.report = json{{"command", "reproduce"},
                    {"a6", a6},
                    {"sweep", json{{"kernels", kernel_specs},
                                   {"gammas", gamma_specs},
                                   {"cases", cases},
                                   {"case_count", case_count},
                                   {"neutral_count", neutral_count},
                                   {"tower_split_count", tower_count},
                                   {"pass", sweep_pass}}},
                    {"pass", pass},
                    {"failed_claims", out.failed_claims},
                    {"timing_ms", ms_since(start)}};
  return out;
}

void print_reproduce(const json& r) {
  const json& a6 = r["a6"];
  std::cout << "A6 counterexample    "
            << (a6["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  if (a6["pass"].get<bool>()) {
    for (const json& c : a6["classes"])
      std::cout << "  class " << c["label"].get<std::string>()
                << "  min element order " << c["min_order_in_coset"]
                << "  neutral " << yes_no(c["neutral"].get<bool>()) << "\n";
    std::cout << "  involution in m-coset: "
              << yes_no(a6["involution_in_m_coset"].get<bool>()) << "\n";
  } else {
    std::cout << "  " << a6["error"].get<std::string>() << "\n";
  }
  const json& sweep = r["sweep"];
  std::cout << "sweep                " << sweep["case_count"]
            << " kernel data, neutral " << sweep["neutral_count"]
            << ", tower split " << sweep["tower_split_count"] << "  "
            << (sweep["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  for (const json& c : sweep["cases"]) {
    std::cout << "  " << c["f"].get<std::string>() << "  over  "
              << c["gamma"].get<std::string>() << "  kappa=[";
    for (std::size_t i = 0; i < c["kappa"].size(); ++i)
      std::cout << (i ? "," : "") << c["kappa"][i];
    std::cout << "]  neutral " << yes_no(c["neutral"].get<bool>())
              << "  tower " << yes_no(c["tower_split"].get<bool>()) << "\n";
  }
  std::cout << "overall              "
            << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  std::cout << "timing               " << r["timing_ms"] << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kernelsplit: exhaustive finite-group analysis of automorphism "
      "splitting and kernel data.\n"
      "Group specs: A5, S6, C2, PSL(2,9), \"A5 x A5\", "
      "\"perm:(1 2 3)(4 5); (1 2)\" (1-indexed cycles).\n"
      "The trivial group counts as anti-solvable (it has no composition "
      "factors at all) and\n"
      "not characteristically simple.  KERNELSPLIT_MAX_ORDER overrides the "
      "element-enumeration cap."};
  app.require_subcommand(1);

  bool json_out = false;
  std::string analyze_spec, lien_f, lien_gamma, lien_kappa;
  std::string lie_family;
  unsigned lie_rank = 0, lie_m = 0;
  std::uint64_t lie_p = 0;

  CLI::App* analyze = app.add_subcommand(
      "analyze",
      "Order, center, composition factors, anti-solvability, Aut/Inn/Out and "
      "the aut-split verdict with witness");
  analyze->add_option("spec", analyze_spec, "group spec")->required();
  analyze->add_flag("--json", json_out, "emit the JSON report");

  CLI::App* lie = app.add_subcommand(
      "lie",
      "Closed-form aut-split verdict for a simple group of Lie type; "
      "family is one of A B C D E6 E7 E8 F4 G2 2A 2B2 2D 3D4 2E6 2F4 2G2");
  lie->add_option("family", lie_family, "Lie family symbol")->required();
  lie->add_option("rank", lie_rank, "untwisted Lie rank")->required();
  lie->add_option("p", lie_p, "field characteristic (prime)")->required();
  lie->add_option("m", lie_m, "field exponent: q = p^m")->required();
  lie->add_flag("--json", json_out, "emit the JSON report");

  CLI::App* lien = app.add_subcommand(
      "lien",
      "Neutrality and tower splitting for a kernel datum (F, gamma, kappa)");
  lien->add_option("--f", lien_f, "kernel group spec (must be centerless)")
      ->required();
  lien->add_option("--gamma", lien_gamma, "quotient group spec (order <= 24)")
      ->required();
  lien->add_option(
      "--kappa", lien_kappa,
      "comma-separated INDEX:LABEL pairs, e.g. \"1:s\" or \"1:o1,2:o2\"; "
      "INDEX is a 1-based gamma generator position, LABEL an outer-class "
      "label (o0, o1, ..., aliases like s/p/m, or swap for direct squares); "
      "unmentioned generators get the trivial class; default: all trivial");
  lien->add_flag("--json", json_out, "emit the JSON report");

  CLI::App* reproduce = app.add_subcommand(
      "reproduce",
      "Run the built-in claim suite: the A6 counterexample pattern and the "
      "full kernel-datum sweep (A5, PSL(2,7), A5 x A5 over C2, C3, C2 x C2, "
      "S3, all kappa); exits 4 naming any failed claim");
  reproduce->add_flag("--json", json_out, "emit the JSON report");

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
    if (*analyze) {
      json report = run_analyze(analyze_spec);
      if (json_out)
        std::cout << report.dump(2) << "\n";
      else
        print_analyze(report);
      return 0;
    }
    if (*lie) {
      json report = run_lie(lie_family, lie_rank, lie_p, lie_m);
      if (json_out)
        std::cout << report.dump(2) << "\n";
      else
        print_lie(report);
      return 0;
    }
    if (*lien) {
      json report = run_lien(lien_f, lien_gamma, lien_kappa);
      if (json_out)
        std::cout << report.dump(2) << "\n";
      else
        print_lien(report);
      return 0;
    }
    if (*reproduce) {
      ReproduceOutcome outcome = run_reproduce();
      if (json_out)
        std::cout << outcome.report.dump(2) << "\n";
      else
        print_reproduce(outcome.report);
      if (!outcome.failed_claims.empty()) {
        for (const std::string& claim : outcome.failed_claims)
          std::cerr << "claim failed: " << claim << "\n";
        return 4;
      }
      return 0;
    }
  } catch (const ks::KsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ks::ErrorKind::ParseError:
      case ks::ErrorKind::InvalidInput:
        return 2;
      case ks::ErrorKind::BoundExceeded:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
