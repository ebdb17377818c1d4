// Command-line front end for the oriented-matroid toolkit.
//
// Reports go to stdout as JSON, one-line human summaries to stderr, so the
// tool composes with shell pipelines and test harnesses. Exit codes:
// 0 success, 1 validation failure (machine-readable {"error": ...} or a
// failing report), 2 usage error. Everything is deterministic; --seed-free
// is accepted everywhere as an explicit statement of that fact.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "omt/axioms.hpp"
#include "omt/chirotope.hpp"
#include "omt/error.hpp"
#include "omt/extension.hpp"
#include "omt/faces.hpp"
#include "omt/geometry.hpp"
#include "omt/symmetry.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << content;
}

void emit_report(const json& j, const std::string& out_path = "") {
  write_output(j.dump(2) + "\n", out_path);
}

omt::Chirotope load_chirotope(const std::string& path) {
  return omt::Chirotope::from_text(read_file(path));
}

json group_json(const omt::GroupDescriptor& desc) {
  json j;
  j["order"] = desc.order;
  j["name"] = desc.name;
  j["parameter"] = desc.parameter;
  json orders = json::object();
  for (const auto& [ord, count] : desc.element_orders)
    orders[std::to_string(ord)] = count;
  j["element_orders"] = std::move(orders);
  json gens = json::array();
  for (const auto& g : desc.generators) gens.push_back(g.to_string());
  j["generators"] = std::move(gens);
  return j;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size())
      throw std::invalid_argument("bad integer list entry '" + item + "'");
  }
  return out;
}

std::vector<omt::QuadExt> parse_point(const std::string& text) {
  std::vector<omt::QuadExt> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(omt::parse_quadext(item));
  return out;
}

struct Args {
  std::string command;
  std::string sub;  // pattern-check flavor
  std::string input_path;
  std::string out_path;
  std::string mode = "full";
  std::optional<int> cap;
  std::size_t max_covectors = 2'000'000;
  std::uint64_t max_nodes = 200'000'000;
  int element = 0;
  bool at_extension = false;
  std::string example_name;
  int example_n = 0;
  std::string sigma_text;
  std::string q1_text, q2_text;
  std::string cycle_text;
  std::string covector_text;
};

int run_example(const Args& a) {
  omt::PointConfig cfg = omt::example_config(a.example_name, a.example_n);
  write_output(cfg.to_json(), a.out_path);
  std::cerr << "example " << a.example_name << ": " << cfg.size() << " points, dim "
            << cfg.dim << "\n";
  return 0;
}

int run_from_points(const Args& a) {
  omt::PointConfig cfg = omt::PointConfig::from_json(read_file(a.input_path));
  omt::Chirotope chi = omt::chirotope_from_points(cfg);
  write_output(chi.to_text(), a.out_path);
  std::cerr << "from-points: rank " << chi.rank() << " chirotope on "
            << chi.ground_size() << " elements\n";
  return 0;
}

int run_axioms(const Args& a) {
  omt::Chirotope chi = load_chirotope(a.input_path);
  omt::AxiomMode mode;
  if (a.mode == "full") mode = omt::AxiomMode::Full;
  else if (a.mode == "screened") mode = omt::AxiomMode::Screened;
  else throw CLI::ValidationError("--mode must be full or screened");
  omt::AxiomOptions opts;
  if (a.cap) {
    opts.max_n_full_rank3 = *a.cap;
    opts.max_n_full_rank4 = *a.cap;
  }
  omt::AxiomReport report = omt::check_chirotope_axioms(chi, mode, opts);
  json j;
  j["passed"] = report.passed;
  j["mode"] = a.mode;
  json viols = json::array();
  for (const auto& v : report.violations)
    viols.push_back(json{{"axiom", v.axiom}, {"detail", v.detail}});
  j["violations"] = std::move(viols);
  emit_report(j, a.out_path);
  std::cerr << "axioms: " << (report.passed ? "passed" : "failed") << " (" << a.mode
            << ")\n";
  return report.passed ? 0 : 1;
}

int run_faces(const Args& a) {
  omt::Chirotope chi = load_chirotope(a.input_path);
  auto cocircs = omt::cocircuits(chi);
  auto covs = omt::covectors(chi, a.max_covectors);
  bool acyclic = omt::is_acyclic(chi);
  json j;
  j["n"] = chi.ground_size();
  j["rank"] = chi.rank();
  j["cocircuit_count"] = cocircs.size();
  j["covector_count"] = covs.size();
  json cc = json::array(), cv = json::array();
  for (const auto& c : cocircs) cc.push_back(c.to_string());
  for (const auto& v : covs) cv.push_back(v.to_string());
  j["cocircuits"] = std::move(cc);
  j["covectors"] = std::move(cv);
  j["acyclic"] = acyclic;
  j["extreme_points"] = acyclic ? json(omt::extreme_points(chi)) : json::array();
  j["matroid_polytope"] = omt::is_matroid_polytope(chi);
  emit_report(j, a.out_path);
  std::cerr << "faces: " << cocircs.size() << " cocircuits, " << covs.size()
            << " covectors\n";
  return 0;
}

int run_symmetry(const Args& a) {
  omt::Chirotope chi = load_chirotope(a.input_path);
  omt::SymmetryOptions opts;
  opts.max_nodes = a.max_nodes;
  omt::SymmetryGroup group = omt::symmetry_group(chi, opts);
  auto rotations = group.rotations();
  json j = group_json(omt::identify_group(group.elements));
  j["kinds"] = json{{"rotations", rotations.size()},
                    {"reflections", group.elements.size() - rotations.size()}};
  j["rotation_subgroup"] = group_json(omt::identify_group(rotations));
  emit_report(j, a.out_path);
  std::cerr << "symmetry: order " << group.elements.size() << ", rotations "
            << rotations.size() << "\n";
  return 0;
}

int run_classify(const Args& a) {
  omt::Chirotope chi = load_chirotope(a.input_path);
  omt::Rank4Classification res = omt::classify_rank4(chi);
  json j;
  j["rotation_group"] = group_json(res.rotation_group);
  j["in_allowed_families"] = res.in_allowed_families;
  j["full_group_order"] = res.full_group_order;
  j["reflection_count"] = res.reflection_count;
  emit_report(j, a.out_path);
  std::cerr << "classify: " << res.rotation_group.name
            << (res.in_allowed_families ? "" : " (outside the allowed families!)")
            << "\n";
  return res.in_allowed_families ? 0 : 1;
}

int run_extend(const Args& a) {
  omt::Chirotope chi = load_chirotope(a.input_path);
  omt::FixedPointExtension fpe = omt::fixed_point_extension(chi);
  auto rep = omt::simplicity_report(fpe.extended);
  json j;
  j["new_element"] = fpe.new_element;
  j["chirotope"] = fpe.extended.to_text();
  j["simple"] = rep.simple();
  j["acyclic"] = omt::is_acyclic(fpe.extended);
  j["matroid_polytope"] = omt::is_matroid_polytope(fpe.extended);
  j["rotations_preserved"] = fpe.rotations_checked;
  emit_report(j, a.out_path);
  std::cerr << "extend: new element " << fpe.new_element << ", "
            << fpe.rotations_checked << " rotations preserved\n";
  return 0;
}

int run_contract(const Args& a) {
  omt::Chirotope chi = load_chirotope(a.input_path);
  if (a.at_extension == (a.element != 0))
    throw CLI::ValidationError("contract needs exactly one of --element, --at-extension");
  omt::Chirotope out = a.at_extension ? omt::contract_at_extension(chi)
                                      : chi.contract(a.element);
  write_output(out.to_text(), a.out_path);
  std::cerr << "contract: rank " << out.rank() << " chirotope on "
            << out.ground_size() << " elements\n";
  return 0;
}

int run_gap(const Args& a) {
  omt::PointConfig base;
  if (!a.input_path.empty())
    base = omt::PointConfig::from_json(read_file(a.input_path));
  else if (!a.example_name.empty())
    base = omt::example_config(a.example_name, a.example_n);
  else
    throw CLI::ValidationError("gap needs a points file or --example");

  omt::Permutation sigma;
  if (!a.sigma_text.empty()) {
    sigma = omt::Permutation::parse(a.sigma_text, base.size());
  } else {
    std::vector<int> img(base.size());  // default: the cyclic shift
    for (int i = 1; i <= base.size(); ++i) img[i - 1] = i % base.size() + 1;
    sigma = omt::Permutation(std::move(img));
  }

  omt::GapOptions opts;
  if (!a.q1_text.empty()) opts.q1 = parse_point(a.q1_text);
  if (!a.q2_text.empty()) opts.q2 = parse_point(a.q2_text);
  omt::GapResult res = omt::gap_construction(base, sigma, opts);

  json j;
  j["points"] = json::parse(res.config.to_json());
  j["tau"] = res.tau.to_string();
  j["m_symmetry"] = true;  // verified inside gap_construction
  j["chirotope"] = res.chirotope.to_text();
  emit_report(j, a.out_path);
  std::cerr << "gap: " << res.config.size() << " points, tau = " << res.tau.to_string()
            << "\n";
  return 0;
}

int run_pattern_check(const Args& a) {
  omt::Chirotope chi = load_chirotope(a.input_path);
  bool holds;
  if (a.sub == "cocircuit") {
    holds = omt::cocircuit_pattern_check(chi, parse_int_list(a.cycle_text), a.element);
  } else {
    holds = omt::covector_split_check(
        chi, omt::SignVector::from_string(a.covector_text), a.element);
  }
  json j;
  j["holds"] = holds;
  emit_report(j, a.out_path);
  std::cerr << "pattern-check " << a.sub << ": " << (holds ? "holds" : "fails") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact oriented-matroid toolkit"};
  app.require_subcommand(1);
  Args a;
  bool seed_free = false;
  app.add_flag("--seed-free", seed_free,
               "assert deterministic operation (always on; flag is a no-op)");

  auto* example = app.add_subcommand("example", "emit a named point configuration");
  example->add_option("name", a.example_name, "configuration name")->required();
  example->add_option("--n", a.example_n, "vertex count for parametric families");
  example->add_option("-o,--output", a.out_path, "output path (default stdout)");

  auto* from_points = app.add_subcommand("from-points", "chirotope of a point file");
  from_points->add_option("points", a.input_path, "points JSON file")->required();
  from_points->add_option("-o,--output", a.out_path, "output path (default stdout)");

  auto* axioms = app.add_subcommand("axioms", "run the chirotope axiom checker");
  axioms->add_option("chirotope", a.input_path, "chirotope file")->required();
  axioms->add_option("--mode", a.mode, "full or screened (default full)");
  axioms->add_option("--cap", a.cap, "ground-size cap for the full check");
  axioms->add_option("-o,--output", a.out_path, "output path (default stdout)");

  auto* faces = app.add_subcommand("faces", "cocircuits, covectors, convexity data");
  faces->add_option("chirotope", a.input_path, "chirotope file")->required();
  faces->add_option("--max-covectors", a.max_covectors, "covector enumeration cap");
  faces->add_option("-o,--output", a.out_path, "output path (default stdout)");

  auto* symmetry = app.add_subcommand("symmetry", "full symmetry group report");
  symmetry->add_option("chirotope", a.input_path, "chirotope file")->required();
  symmetry->add_option("--max-nodes", a.max_nodes, "search node cap");
  symmetry->add_option("-o,--output", a.out_path, "output path (default stdout)");

  auto* classify = app.add_subcommand("classify", "rotation group of a rank-4 chirotope");
  classify->add_option("chirotope", a.input_path, "chirotope file")->required();
  classify->add_option("-o,--output", a.out_path, "output path (default stdout)");

  auto* extend = app.add_subcommand("extend", "majority-rule fixed-point extension");
  extend->add_option("chirotope", a.input_path, "chirotope file")->required();
  extend->add_option("-o,--output", a.out_path, "output path (default stdout)");

  auto* contract = app.add_subcommand("contract", "contract one element");
  contract->add_option("chirotope", a.input_path, "chirotope file")->required();
  contract->add_option("--element", a.element, "element to contract");
  contract->add_flag("--at-extension", a.at_extension,
                     "extend first, then contract the new element");
  contract->add_option("-o,--output", a.out_path, "output path (default stdout)");

  auto* gap = app.add_subcommand("gap", "stacked-copies symmetry gap construction");
  gap->add_option("points", a.input_path, "planar points JSON file");
  gap->add_option("--example", a.example_name, "named planar example instead of a file");
  gap->add_option("--n", a.example_n, "vertex count for the named example");
  gap->add_option("--sigma", a.sigma_text,
                  "base symmetry, one-line images (default: cyclic shift)");
  gap->add_option("--q1", a.q1_text, "first joint point, comma-separated coordinates");
  gap->add_option("--q2", a.q2_text, "second joint point, comma-separated coordinates");
  gap->add_option("-o,--output", a.out_path, "output path (default stdout)");

  auto* pattern = app.add_subcommand("pattern-check", "convex sign-pattern validators");
  pattern->require_subcommand(1);
  auto* pc_cocircuit = pattern->add_subcommand("cocircuit", "edge-cocircuit sign pattern");
  pc_cocircuit->add_option("chirotope", a.input_path, "chirotope file")->required();
  pc_cocircuit->add_option("--cycle", a.cycle_text, "convex cycle, comma-separated")
      ->required();
  pc_cocircuit->add_option("--element", a.element, "element to trace")->required();
  pc_cocircuit->add_option("-o,--output", a.out_path, "output path (default stdout)");
  auto* pc_split = pattern->add_subcommand("split", "covector split pattern");
  pc_split->add_option("chirotope", a.input_path, "chirotope file")->required();
  pc_split->add_option("--covector", a.covector_text, "covector string")->required();
  pc_split->add_option("--element", a.element, "zeroed element")->required();
  pc_split->add_option("-o,--output", a.out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  try {
    if (example->parsed()) return run_example(a);
    if (from_points->parsed()) return run_from_points(a);
    if (axioms->parsed()) return run_axioms(a);
    if (faces->parsed()) return run_faces(a);
    if (symmetry->parsed()) return run_symmetry(a);
    if (classify->parsed()) return run_classify(a);
    if (extend->parsed()) return run_extend(a);
    if (contract->parsed()) return run_contract(a);
    if (gap->parsed()) return run_gap(a);
    if (pattern->parsed()) {
      a.sub = pc_cocircuit->parsed() ? "cocircuit" : "split";
      return run_pattern_check(a);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable with require_subcommand
}
