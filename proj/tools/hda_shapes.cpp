#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hda/errors.hpp"
#include "hda/io.hpp"
#include "hda/realize.hpp"

using namespace hda;

namespace {

constexpr int kOk = 0, kRefuted = 1, kInputError = 2, kBudget = 3;

long long default_budget() {
  if (const char* env = std::getenv("HDA_SHAPES_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw InvalidInput("HDA_SHAPES_BUDGET is not an integer");
    }
  }
  return 100000;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

bool is_precubical_doc(const Json& j) { return j.is_object() && j.contains("cubes"); }

FinitePresheaf load_presheaf(const Json& j) {
  return is_precubical_doc(j) ? precubical_from_json(j) : presheaf_from_json(j);
}

std::string detect_kind(const Json& j) {
  if (j.is_array()) return "boxed";
  if (!j.is_object()) throw InvalidInput("top level must be an object or an array");
  if (j.contains("cubes")) return "precubical";
  if (j.contains("site")) return "presheaf";
  if (j.contains("objects")) return "semicategory";
  if (j.contains("cells")) return "sset";
  if (j.contains("nodes")) return "tree";
  throw InvalidInput("cannot tell the document kind; pass --kind");
}

Json witness_json(const ProbeWitness& w) {
  return {{"kind", w.kind}, {"source", w.source}, {"target", w.target}, {"degree", w.degree}, {"lhs", w.lhs},
          {"rhs", w.rhs}, {"text", w.to_string()}};
}

Json probe_json(const ProbeReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.verdict.witnesses) ws.push_back(witness_json(w));
  auto homs = [](const std::vector<std::pair<std::string, HomologyReport>>& v) {
    Json out = Json::object();
    for (const auto& [pair, h] : v) out[pair] = to_json(h);
    return out;
  };
  return {{"nerve_counts", r.nerve_counts},
          {"dim_bound", r.dim_bound},
          {"max_degree", r.max_degree},
          {"verdict", r.verdict.refuted ? "refuted" : "consistent"},
          {"checked_up_to", r.verdict.checked_up_to},
          {"witnesses", ws},
          {"source_homology", homs(r.source_homology)},
          {"target_homology", homs(r.target_homology)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hda-shapes: semicategories, presheaf realizations and nerves"};
  app.require_subcommand(1);
  long long budget = -1;
  unsigned seed = 0;
  bool timing = false;
  app.add_option("--budget", budget, "enumeration budget (default $HDA_SHAPES_BUDGET or 100000)");
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_flag("--timing", timing, "print elapsed time to stderr");

  std::string file, file2, kind = "auto";
  int max_degree = 3, dim = 3, sphere_dim = -1, discrete = -1, max_factors = 2, max_nodes = 3;
  std::string model = "globular", site = "cube";

  auto* validate = app.add_subcommand("validate", "parse and check a document");
  validate->add_option("file", file)->required();
  validate->add_option("--kind", kind)->check(
      CLI::IsMember({"auto", "sset", "semicategory", "presheaf", "precubical", "tree", "boxed"}));

  auto* homology_cmd = app.add_subcommand("homology", "integral homology of a simplicial set");
  homology_cmd->add_option("file", file)->required();
  homology_cmd->add_option("--max-degree", max_degree)->check(CLI::Range(0, 64));

  auto* realize_cmd = app.add_subcommand("realize", "realize a presheaf as a semicategory");
  realize_cmd->add_option("file", file)->required();
  realize_cmd->add_option("--model", model)->check(CLI::IsMember({"poset", "globular"}));

  auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a semicategory");
  nerve_cmd->add_option("file", file)->required();
  nerve_cmd->add_option("--site", site)->check(CLI::IsMember({"cube", "tree"}));
  nerve_cmd->add_option("--dim", dim, "cube dimension bound, or tree node bound")->check(CLI::Range(0, 6));
  nerve_cmd->add_option("--model", model)->check(CLI::IsMember({"poset", "globular"}));

  auto* probe_cmd = app.add_subcommand("probe-counit", "probe the counit at glob(Y)");
  probe_cmd->add_option("file", file, "simplicial set Y");
  probe_cmd->add_option("--sphere-dim", sphere_dim, "Y = boundary of the (k+1)-simplex")->check(CLI::Range(0, 6));
  probe_cmd->add_option("--discrete", discrete, "Y = n points")->check(CLI::Range(0, 64));
  probe_cmd->add_option("--max-degree", max_degree)->check(CLI::Range(0, 16));
  probe_cmd->add_option("--dim", dim, "cube dimension bound of the nerve")->check(CLI::Range(0, kGlMaxDim));

  auto* local_cmd = app.add_subcommand("check-test-category", "local checks on boxed trees");
  local_cmd->add_option("--max-factors", max_factors)->check(CLI::Range(0, 4));
  local_cmd->add_option("--max-nodes", max_nodes)->check(CLI::Range(1, 5));
  local_cmd->add_option("--max-degree", max_degree)->check(CLI::Range(0, 6));

  auto* adj_cmd = app.add_subcommand("adjunction-check", "compare Hom(realize K, X) with Hom(K, N X)");
  adj_cmd->add_option("presheaf", file)->required();
  adj_cmd->add_option("semicategory", file2)->required();
  adj_cmd->add_option("--model", model)->check(CLI::IsMember({"poset", "globular"}));

  CLI11_PARSE(app, argc, argv);

  auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (budget < 0) budget = default_budget();
    CubeModel cm = model == "poset" ? CubeModel::poset : CubeModel::globular;

    if (*validate) {
      auto j = read_json_file(file);
      if (kind == "auto") kind = detect_kind(j);
      Json out = {{"kind", kind}, {"valid", true}};
      if (kind == "sset") {
        auto s = simplicial_set_from_json(j);
        out["counts"] = s.counts();
      } else if (kind == "semicategory") {
        auto k = semicategory_from_json(j);
        auto bad = check_associativity(k);
        if (!bad.empty()) throw InvalidInput("associativity fails: " + bad.front());
        out["objects"] = k.object_count();
      } else if (kind == "presheaf" || kind == "precubical") {
        auto k = load_presheaf(j);
        auto bad = k.validate();
        if (!bad.empty()) throw InvalidInput(bad.front());
      } else if (kind == "tree") {
        out["canonical"] = tree_from_json(j).canonical();
      } else {
        out["elements"] = boxed_object_from_json(j).element_count();
      }
      emit(out);
    } else if (*homology_cmd) {
      emit(to_json(homology(simplicial_set_from_json(read_json_file(file)), max_degree)));
    } else if (*realize_cmd) {
      auto k = load_presheaf(read_json_file(file));
      auto bad = k.validate();
      if (!bad.empty()) throw InvalidInput(bad.front());
      if (k.site().name() == "tree") {
        emit(to_json(tree_realize(k).k));
      } else {
        emit(to_json(cube_realize(k, cm).k));
      }
    } else if (*nerve_cmd) {
      auto x = semicategory_from_json(read_json_file(file));
      if (site == "tree") {
        if (dim < 1) throw InvalidInput("--dim must be at least 1 node for the tree site");
        emit(to_json(tree_nerve(x, dim, budget).presheaf));
      } else {
        if (cm == CubeModel::globular && dim > kGlMaxDim)
          throw InvalidInput("--dim above " + std::to_string(kGlMaxDim) + " for the globular model");
        emit(to_json(gl_nerve(x, dim, budget, cm).presheaf));
      }
    } else if (*probe_cmd) {
      int given = (sphere_dim >= 0) + (discrete >= 0) + !file.empty();
      if (given != 1) throw InvalidInput("give exactly one of FILE, --sphere-dim, --discrete");
      FiniteSimplicialSet y = sphere_dim >= 0 ? boundary_simplex(sphere_dim + 1)
                              : discrete >= 0 ? discrete_set(discrete)
                                              : simplicial_set_from_json(read_json_file(file));
      auto r = probe_nonequivalence(y, max_degree, budget, dim);
      emit(probe_json(r));
      if (r.verdict.refuted) code = kRefuted;
    } else if (*local_cmd) {
      auto r = local_test_report(max_factors, max_nodes, max_degree);
      emit({{"objects", r.objects},
            {"morphisms", r.morphisms},
            {"augmentation_failures", r.augmentation_failures},
            {"functoriality_failures", r.functoriality_failures},
            {"sieve_failures", r.sieve_failures},
            {"stability_failures", r.stability_failures},
            {"final_failures", r.final_failures},
            {"asphericity_failures", r.asphericity_failures},
            {"corrupted_precylinder_detected", r.corrupted_precylinder_detected},
            {"non_sieve_detected", r.non_sieve_detected},
            {"failures", r.failures},
            {"pass", r.pass()},
            {"summary", r.to_string()}});
      if (!r.pass()) code = kRefuted;
    } else if (*adj_cmd) {
      auto k = load_presheaf(read_json_file(file));
      auto bad = k.validate();
      if (!bad.empty()) throw InvalidInput(bad.front());
      auto x = semicategory_from_json(read_json_file(file2));
      const CellularCoObject& co = k.site().name() == "tree" ? tree_poset_coobject(k.site_ptr())
                                   : cm == CubeModel::poset   ? poset_coobject()
                                                              : gl_coobject();
      auto r = verify_adjunction(k, x, co, budget);
      emit({{"realization_side", r.realization_side},
            {"nerve_side", r.nerve_side},
            {"bijection", r.bijection},
            {"round_trips", r.round_trips},
            {"naturality_checks", r.naturality_checks},
            {"naturality", r.naturality},
            {"ok", r.ok()}});
      if (!r.ok()) code = kRefuted;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    code = kBudget;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = kInputError;
  }
  if (timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed: " << ms.count() << " ms\n";
  }
  return code;
}
