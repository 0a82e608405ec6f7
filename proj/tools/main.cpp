#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grouph1/catalog.hpp"
#include "grouph1/homology.hpp"
#include "grouph1/io.hpp"

namespace {

using namespace grouph1;

std::string group_text(const AbelianGroupStructure<Int>& s) {
  std::vector<std::string> parts;
  if (s.free_rank == 1) parts.push_back("Z");
  if (s.free_rank > 1) parts.push_back("Z^" + std::to_string(s.free_rank));
  for (const Int& t : s.torsion) parts.push_back("Z" + to_decimal(t));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " \xE2\x8A\x95 " + parts[i];
  return out;
}

Json torsion_json(const AbelianGroupStructure<Int>& s) {
  Json out = Json::array();
  for (const Int& t : s.torsion) out.push_back(int_to_json(t));
  return out;
}

Json result_json(const Json& genus, const Json& boundary,
                 const std::string& coefficients, const H1Result& res,
                 const Json& matched) {
  return Json{{"genus", genus},
              {"boundary", boundary},
              {"coefficients", coefficients},
              {"free_rank", res.invariants.free_rank},
              {"torsion", torsion_json(res.invariants)},
              {"kernel_rank", res.kernel_rank},
              {"matched_expected", matched}};
}

std::string surface_text(const SurfaceSpec& spec) {
  return "N_{" + std::to_string(spec.genus) + "," +
         std::to_string(spec.boundary) + "}";
}

int cmd_compute(Index g, int s, const std::string& coeffs, bool as_json) {
  const SurfaceSpec spec{g, s};
  if (!spec.supported()) throw UnsupportedSurface(spec);
  const GroupPresentation p = mcg_presentation(spec);

  H1Result res;
  bool have_expected = false;
  bool matched = false;
  if (coeffs == "twisted") {
    res = twisted_h1(p, mcg_action(spec), mcg_module(spec));
    have_expected = true;
    matched = res.invariants == expected_h1(spec);
  } else {
    res = twisted_h1(p, trivial_representation(p), trivial_module());
  }

  if (as_json) {
    std::cout << result_json(spec.genus, spec.boundary, coeffs, res,
                             have_expected ? Json(matched) : Json(nullptr))
                     .dump(2)
              << "\n";
  } else {
    std::cout << "surface: " << surface_text(spec) << "\n"
              << "coefficients: " << coeffs << "\n"
              << "H1 = " << group_text(res.invariants) << "\n"
              << "free rank: " << res.invariants.free_rank << "\n"
              << "kernel rank: " << res.kernel_rank << "\n"
              << "relation chains: " << res.num_relation_vectors << "\n";
    if (have_expected)
      std::cout << "expected: " << group_text(expected_h1(spec)) << "\n"
                << "match: " << (matched ? "yes" : "no") << "\n";
  }
  return have_expected && !matched ? 1 : 0;
}

int cmd_table(Index g_min, Index g_max, const std::string& s_sel, bool as_json) {
  if (g_min > g_max) throw Error("empty genus range");
  std::vector<SurfaceSpec> specs;
  for (int s : {1, 0}) {
    if (s_sel != "both" && s_sel != std::to_string(s)) continue;
    for (Index g = g_min; g <= g_max; ++g)
      if (SurfaceSpec{g, s}.supported()) specs.push_back(SurfaceSpec{g, s});
  }
  if (specs.empty()) throw Error("no supported surface in the requested range");

  bool all_match = true;
  Json rows = Json::array();
  std::string text;
  for (const SurfaceSpec& spec : specs) {
    const H1Result res =
        twisted_h1(mcg_presentation(spec), mcg_action(spec), mcg_module(spec));
    const auto expected = expected_h1(spec);
    const bool matched = res.invariants == expected;
    all_match = all_match && matched;
    if (as_json) {
      rows.push_back(result_json(spec.genus, spec.boundary, "twisted", res,
                                 Json(matched)));
    } else {
      text += surface_text(spec) + ": computed " + group_text(res.invariants) +
              ", expected " + group_text(expected) + ", match " +
              (matched ? "yes" : "no") + "\n";
    }
  }
  if (as_json)
    std::cout << rows.dump(2) << "\n";
  else
    std::cout << text << (all_match ? "all rows match" : "MISMATCH") << "\n";
  return all_match ? 0 : 1;
}

int cmd_verify(Index g, int s, const std::string& what) {
  const SurfaceSpec spec{g, s};
  if (!spec.supported()) throw UnsupportedSurface(spec);
  const GroupPresentation p = mcg_presentation(spec);
  const MatrixRepresentation rep = mcg_action(spec);
  const CoefficientModule m = mcg_module(spec);

  if (what == "action") {
    const RepReport report = verify_representation(p, rep, m);
    for (const auto& gen : report.generators)
      std::cout << "generator " << gen.name << ": inverse "
                << (gen.inverse_consistent ? "ok" : "FAIL") << ", unimodular "
                << (gen.unimodular ? "ok" : "FAIL") << "\n";
    for (const auto& rel : report.relations)
      std::cout << "relation " << rel.label << ": "
                << (rel.holds ? "ok" : "FAIL") << "\n";
    const bool compatible = check_action_compatibility(m, rep);
    std::cout << "module compatibility: " << (compatible ? "ok" : "FAIL")
              << "\n";
    const bool pass = report.pass && compatible;
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
  }

  const KernelCandidates candidates = kernel_generator_candidates(spec);
  bool any = false;
  std::string accepted = "none";
  for (const FamilySign sign : {FamilySign::minus, FamilySign::plus}) {
    const KernelCheckReport report =
        verify_kernel_generators(p, rep, m, candidates.with_sign(sign));
    const bool pass = report.membership && report.generation &&
                      (s == 1 ? report.independent : true);
    std::cout << "variant " << (sign == FamilySign::minus ? "minus" : "plus")
              << ": membership " << (report.membership ? "ok" : "FAIL")
              << ", generation " << (report.generation ? "ok" : "FAIL")
              << ", independence " << (report.independent ? "ok" : "no")
              << " (candidates " << report.candidate_rank << "/"
              << report.kernel_rank << " kernel rank)\n";
    if (pass && !any) accepted = sign == FamilySign::minus ? "minus" : "plus";
    any = any || pass;
  }
  std::cout << "accepted variant: " << accepted << "\n";
  return any ? 0 : 1;
}

int cmd_run(const std::string& p_file, const std::string& r_file,
            const std::string& m_file, bool as_json) {
  const GroupPresentation p = parse_presentation(read_text_file(p_file));
  const auto issues = validate(p);
  if (!issues.empty()) throw Error("invalid presentation: " + issues.front());
  const MatrixRepresentation rep =
      representation_from_json(Json::parse(read_text_file(r_file)), p);
  const CoefficientModule m =
      module_from_json(Json::parse(read_text_file(m_file)));

  const H1Result res = twisted_h1(p, rep, m);
  if (as_json) {
    std::cout << result_json(Json(nullptr), Json(nullptr), "file", res,
                             Json(nullptr))
                     .dump(2)
              << "\n";
  } else {
    std::cout << "group: " << p.name << "\n"
              << "H1 = " << group_text(res.invariants) << "\n"
              << "free rank: " << res.invariants.free_rank << "\n"
              << "kernel rank: " << res.kernel_rank << "\n"
              << "relation chains: " << res.num_relation_vectors << "\n";
  }
  return 0;
}

int cmd_emit(Index g, int s, const std::string& what, std::string format) {
  const SurfaceSpec spec{g, s};
  if (!spec.supported()) throw UnsupportedSurface(spec);
  if (format.empty()) format = what == "presentation" ? "dsl" : "json";
  if ((what == "presentation") != (format == "dsl"))
    throw Error("artifact `" + what + "` cannot be emitted as " + format);

  if (what == "presentation")
    std::cout << format_presentation(mcg_presentation(spec));
  else if (what == "action")
    std::cout << representation_to_json(mcg_action(spec)).dump(2) << "\n";
  else
    std::cout << module_to_json(mcg_module(spec)).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First homology of finitely presented groups with twisted "
               "integer coefficients"};
  app.require_subcommand(1);

  Index g = 0, g_min = 0, g_max = 0;
  int s = 1;
  std::string coeffs = "twisted", s_sel = "both", what, format;
  std::string p_file, r_file, m_file;
  bool as_json = false;

  CLI::App* compute = app.add_subcommand("compute", "Homology of a catalog group");
  compute->add_option("--g", g, "genus")->required();
  compute->add_option("--s", s, "boundary components (0 or 1)")->required();
  compute->add_option("--coeffs", coeffs, "twisted or trivial")
      ->check(CLI::IsMember({"twisted", "trivial"}));
  compute->add_flag("--json", as_json, "structured output");

  CLI::App* table = app.add_subcommand("table", "Catalog range with expected values");
  table->add_option("--g-min", g_min, "least genus")->required();
  table->add_option("--g-max", g_max, "greatest genus")->required();
  table->add_option("--s", s_sel, "0, 1 or both")
      ->check(CLI::IsMember({"0", "1", "both"}));
  table->add_flag("--json", as_json, "structured output");

  CLI::App* verify = app.add_subcommand("verify", "Check the catalog data");
  verify->add_option("--g", g, "genus")->required();
  verify->add_option("--s", s, "boundary components (0 or 1)")->required();
  verify->add_option("what", what, "action or kernel")
      ->required()
      ->check(CLI::IsMember({"action", "kernel"}));

  CLI::App* run = app.add_subcommand("run", "Homology of user-supplied files");
  run->add_option("presentation", p_file, "presentation file (DSL)")->required();
  run->add_option("representation", r_file, "representation file (JSON)")->required();
  run->add_option("module", m_file, "module file (JSON)")->required();
  run->add_flag("--json", as_json, "structured output");

  CLI::App* emit = app.add_subcommand("emit", "Write catalog artifacts to stdout");
  emit->add_option("--g", g, "genus")->required();
  emit->add_option("--s", s, "boundary components (0 or 1)")->required();
  emit->add_option("--what", what, "presentation, action or module")
      ->default_val("presentation")
      ->check(CLI::IsMember({"presentation", "action", "module"}));
  emit->add_option("--format", format, "dsl or json")
      ->check(CLI::IsMember({"dsl", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(g, s, coeffs, as_json);
    if (table->parsed()) return cmd_table(g_min, g_max, s_sel, as_json);
    if (verify->parsed()) return cmd_verify(g, s, what);
    if (run->parsed()) return cmd_run(p_file, r_file, m_file, as_json);
    if (emit->parsed()) return cmd_emit(g, s, what, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
