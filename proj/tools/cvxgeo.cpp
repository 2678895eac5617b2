// cvxgeo: command-line front-end for finite convex geometries.
//
// Subcommands cover validation, hulls and extreme sets, resolutions and
// compositions, shrinkability tables, deresolution, poset bridges, exact
// affine constructions, and the enumeration census. All machine output is
// normalized JSON (sorted keys, canonical set order) so identical inputs
// produce byte-identical outputs.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cvxgeo/choice.hpp"
#include "cvxgeo/enumerate.hpp"
#include "cvxgeo/json_io.hpp"
#include "cvxgeo/shrink.hpp"

namespace {

using cvx::ConvexGeometry;
using cvx::Mask;
using json = nlohmann::json;

constexpr const char* kVersion = "cvxgeo 1.0.0 (format 1)";

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot write " + output_path);
  out << text;
}

void emit_json(const json& j, const std::string& output_path) {
  emit(cvx::io::dump(j), output_path);
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(csv);
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json verdict_json(const cvx::PropertyCheck& p, const cvx::GroundSet& ground) {
  json j;
  switch (p.verdict) {
    case cvx::Verdict::Holds: j["holds"] = true; break;
    case cvx::Verdict::Fails: j["holds"] = false; break;
    case cvx::Verdict::NotApplicable: j["holds"] = nullptr; break;
  }
  if (!p.witness.empty()) {
    j["witness"] = json::array();
    for (Mask w : p.witness) {
      json labels = json::array();
      for (const auto& l : ground.labels_of(w)) labels.push_back(l);
      j["witness"].push_back(labels);
    }
  }
  return j;
}

json labels_json(const cvx::GroundSet& ground, Mask m) {
  json out = json::array();
  for (const auto& l : ground.labels_of(m)) out.push_back(l);
  return out;
}

char verdict_char(const cvx::PropertyCheck& p) {
  if (p.verdict == cvx::Verdict::Holds) return '+';
  if (p.verdict == cvx::Verdict::Fails) return '-';
  return '.';
}

int run(int argc, char** argv) {
  CLI::App app{"finite convex geometries: resolutions, shrinkability, census"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string input, input2, output, set_csv, reference_path;
  int n_arg = 0, jobs = 1;
  bool classify_flag = false, check_oracle = false, pretty = false, dot = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output, "write result to a file instead of stdout");
  };

  auto* c_validate = app.add_subcommand("validate", "check a set family against the axioms");
  c_validate->add_option("family", input, "family JSON file")->required();
  add_output(c_validate);

  auto* c_hull = app.add_subcommand("hull", "convex hull of a set");
  c_hull->add_option("geometry", input, "geometry JSON file")->required();
  c_hull->add_option("--set", set_csv, "comma-separated element labels")->required();
  add_output(c_hull);

  auto* c_extreme = app.add_subcommand("extreme", "extreme elements of a set");
  c_extreme->add_option("geometry", input, "geometry JSON file")->required();
  c_extreme->add_option("--set", set_csv, "comma-separated element labels")->required();
  add_output(c_extreme);

  auto* c_resolve = app.add_subcommand("resolve", "resolution of a base into fibers");
  c_resolve->add_option("spec", input, "resolution spec JSON file")->required();
  add_output(c_resolve);

  auto* c_compose = app.add_subcommand("compose", "composition (no non-extreme indiscernibility)");
  c_compose->add_option("spec", input, "resolution spec JSON file")->required();
  add_output(c_compose);

  auto* c_shrink = app.add_subcommand("shrinkable", "shrinkability table over all candidate sets");
  c_shrink->add_option("geometry", input, "geometry JSON file")->required();
  c_shrink->add_flag("--pretty", pretty, "human-readable table");
  add_output(c_shrink);

  auto* c_primitive = app.add_subcommand("primitive", "test for the absence of shrinkable sets");
  c_primitive->add_option("geometry", input, "geometry JSON file")->required();
  add_output(c_primitive);

  auto* c_deresolve = app.add_subcommand("deresolve", "extract base and fibers at a shrinkable set");
  c_deresolve->add_option("geometry", input, "geometry JSON file")->required();
  c_deresolve->add_option("--set", set_csv, "comma-separated element labels")->required();
  add_output(c_deresolve);

  auto* c_from_poset = app.add_subcommand("from-poset", "ideal geometry of a poset");
  c_from_poset->add_option("poset", input, "poset JSON file")->required();
  add_output(c_from_poset);

  auto* c_to_poset = app.add_subcommand("to-poset", "associated order of a union-closed geometry");
  c_to_poset->add_option("geometry", input, "geometry JSON file")->required();
  add_output(c_to_poset);

  auto* c_lex_sum = app.add_subcommand("lex-sum", "lexicographic sum of posets");
  c_lex_sum->add_option("input", input, "JSON file with base poset and fiber posets")->required();
  add_output(c_lex_sum);

  auto* c_from_points = app.add_subcommand("from-points", "geometry induced by a point configuration");
  c_from_points->add_option("config", input, "point config JSON file")->required();
  add_output(c_from_points);

  auto* c_obstructions = app.add_subcommand("obstructions", "betweenness obstructions to affineness");
  c_obstructions->add_option("geometry", input, "geometry JSON file")->required();
  add_output(c_obstructions);

  auto* c_faces = app.add_subcommand("faces", "face-union traces of a point configuration");
  c_faces->add_option("config", input, "point config JSON file")->required();
  add_output(c_faces);

  auto* c_enumerate = app.add_subcommand("enumerate", "census of geometries up to isomorphism");
  c_enumerate->add_option("--n", n_arg, "ground set size (1..5)")->required();
  c_enumerate->add_flag("--classify", classify_flag, "attach classification flags per class");
  c_enumerate->add_flag("--check-oracle", check_oracle,
                        "cross-check against the brute-force oracle (n <= 4)");
  c_enumerate->add_option("--reference", reference_path,
                          "JSON file mapping n to the expected class count");
  c_enumerate->add_option("--jobs", jobs, "parallel classification workers")->default_val(1);
  add_output(c_enumerate);

  auto* c_iso = app.add_subcommand("iso", "isomorphism test for two geometries");
  c_iso->add_option("first", input, "geometry JSON file")->required();
  c_iso->add_option("second", input2, "geometry JSON file")->required();
  add_output(c_iso);

  auto* c_lattice = app.add_subcommand("lattice", "lattice of convex sets");
  c_lattice->add_option("geometry", input, "geometry JSON file")->required();
  c_lattice->add_flag("--dot", dot, "emit a DOT digraph of the covering relation");
  add_output(c_lattice);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (c_validate->parsed()) {
    cvx::SetFamily family = cvx::io::family_from_json(cvx::io::load_file(input));
    cvx::ValidationReport report;
    auto g = ConvexGeometry::validate(family, &report);
    if (!g) {
      json err;
      err["error"]["kind"] = "invalid_geometry";
      err["error"]["message"] = report.to_string(family.ground());
      err["error"]["violations"] = json::array();
      for (const auto& v : report.violations) {
        json vj;
        vj["axiom"] = v.axiom;
        vj["message"] = v.message;
        vj["witness"] = json::array();
        for (Mask w : v.witness) vj["witness"].push_back(labels_json(family.ground(), w));
        err["error"]["violations"].push_back(vj);
      }
      std::cerr << cvx::io::dump(err);
      return 1;
    }
    emit_json(json{{"format", 1}, {"valid", true}}, output);
  } else if (c_hull->parsed() || c_extreme->parsed()) {
    ConvexGeometry g = cvx::io::geometry_from_json(cvx::io::load_file(input));
    const Mask a = g.ground().mask_of(split_labels(set_csv));
    json j;
    j["format"] = 1;
    j["set"] = labels_json(g.ground(), a);
    if (c_hull->parsed())
      j["hull"] = labels_json(g.ground(), conv(g, a));
    else
      j["extreme"] = labels_json(g.ground(), extreme(g, a));
    emit_json(j, output);
  } else if (c_resolve->parsed()) {
    cvx::ResolutionSpec spec = cvx::io::spec_from_json(cvx::io::load_file(input));
    if (!spec.is_nontrivial())
      std::cerr << "note: trivial resolution (base or every fiber is a single element)\n";
    emit_json(cvx::io::geometry_to_json(resolve(spec)), output);
  } else if (c_compose->parsed()) {
    cvx::ResolutionSpec spec = cvx::io::spec_from_json(cvx::io::load_file(input));
    cvx::SetFamily family = compose(spec);
    json j = cvx::io::family_to_json(family);
    cvx::ValidationReport report;
    auto g = ConvexGeometry::validate(family, &report);
    j["is_geometry"] = g.has_value();
    if (!g) {
      j["violations"] = json::array();
      for (const auto& v : report.violations) {
        json vj;
        vj["axiom"] = v.axiom;
        vj["message"] = v.message;
        vj["witness"] = json::array();
        for (Mask w : v.witness) vj["witness"].push_back(labels_json(family.ground(), w));
        j["violations"].push_back(vj);
      }
    }
    emit_json(j, output);
  } else if (c_shrink->parsed()) {
    ConvexGeometry g = cvx::io::geometry_from_json(cvx::io::load_file(input));
    const std::vector<cvx::ShrinkReport> reports = cvx::shrink_table(g);
    if (pretty) {
      std::string text = "S\tS1 S2 T1 T2 T3 V1 V2\tshrinkable\textreme\n";
      for (const auto& r : reports) {
        text += g.ground().to_string(r.subject) + "\t";
        text += std::string(1, verdict_char(r.s.s1)) + "  ";
        text += std::string(1, verdict_char(r.s.s2)) + "  ";
        text += std::string(1, verdict_char(r.t.t1)) + "  ";
        text += std::string(1, verdict_char(r.t.t2)) + "  ";
        text += std::string(1, verdict_char(r.t.t3)) + "  ";
        text += std::string(1, verdict_char(r.v.v1)) + "  ";
        text += std::string(1, verdict_char(r.v.v2)) + "\t";
        text += (r.shrinkable ? "yes" : "no");
        text += "\t";
        text += (r.extremely_shrinkable ? "yes" : "no");
        text += "\n";
      }
      emit(text, output);
    } else {
      json j;
      j["format"] = 1;
      j["sets"] = json::array();
      for (const auto& r : reports) {
        json e;
        e["S"] = labels_json(g.ground(), r.subject);
        e["S1"] = verdict_json(r.s.s1, g.ground());
        e["S2"] = verdict_json(r.s.s2, g.ground());
        e["T1"] = verdict_json(r.t.t1, g.ground());
        e["T2"] = verdict_json(r.t.t2, g.ground());
        e["T3"] = verdict_json(r.t.t3, g.ground());
        e["V1"] = verdict_json(r.v.v1, g.ground());
        e["V2"] = verdict_json(r.v.v2, g.ground());
        e["shrinkable"] = r.shrinkable;
        e["extremely_shrinkable"] = r.extremely_shrinkable;
        j["sets"].push_back(e);
      }
      emit_json(j, output);
    }
  } else if (c_primitive->parsed()) {
    ConvexGeometry g = cvx::io::geometry_from_json(cvx::io::load_file(input));
    emit_json(json{{"format", 1}, {"primitive", cvx::is_primitive(g)}}, output);
  } else if (c_deresolve->parsed()) {
    ConvexGeometry g = cvx::io::geometry_from_json(cvx::io::load_file(input));
    const Mask s = g.ground().mask_of(split_labels(set_csv));
    emit_json(cvx::io::spec_to_json(cvx::deresolve(g, s)), output);
  } else if (c_from_poset->parsed()) {
    cvx::Poset p = cvx::io::poset_from_json(cvx::io::load_file(input));
    emit_json(cvx::io::geometry_to_json(ideals(p)), output);
  } else if (c_to_poset->parsed()) {
    ConvexGeometry g = cvx::io::geometry_from_json(cvx::io::load_file(input));
    emit_json(cvx::io::poset_to_json(associated_order(g)), output);
  } else if (c_lex_sum->parsed()) {
    const json j = cvx::io::load_file(input);
    cvx::Poset base = cvx::io::poset_from_json(j.at("base"));
    std::vector<cvx::Poset> fibers;
    const json& fj = j.at("fibers");
    for (int x = 0; x < base.size(); ++x) {
      const std::string& label = base.ground().label(x);
      if (!fj.contains(label))
        throw std::invalid_argument("missing fiber poset for base element \"" + label + "\"");
      fibers.push_back(cvx::io::poset_from_json(fj.at(label)));
    }
    emit_json(cvx::io::poset_to_json(lex_sum(base, fibers)), output);
  } else if (c_from_points->parsed()) {
    cvx::PointConfig cfg = cvx::io::config_from_json(cvx::io::load_file(input));
    emit_json(cvx::io::geometry_to_json(induced_geometry(cfg)), output);
  } else if (c_obstructions->parsed()) {
    ConvexGeometry g = cvx::io::geometry_from_json(cvx::io::load_file(input));
    json j;
    j["format"] = 1;
    j["findings"] = json::array();
    for (const auto& f : cvx::affine_obstructions(g)) {
      json e;
      e["kind"] = f.kind;
      e["elements"] = json::array();
      for (int i : f.elems) e["elements"].push_back(g.ground().label(i));
      e["message"] = f.describe(g.ground());
      j["findings"].push_back(e);
    }
    emit_json(j, output);
  } else if (c_faces->parsed()) {
    cvx::PointConfig cfg = cvx::io::config_from_json(cvx::io::load_file(input));
    json j;
    j["format"] = 1;
    j["face_traces"] = json::array();
    for (Mask m : cvx::face_trace_sets(cfg)) j["face_traces"].push_back(labels_json(cfg.ground(), m));
    emit_json(j, output);
  } else if (c_enumerate->parsed()) {
    const cvx::EnumerationResult result = cvx::enumerate_geometries(n_arg);
    json j;
    j["format"] = 1;
    j["n"] = n_arg;
    j["class_count"] = result.classes.size();
    j["labeled_count"] = result.labeled_count;
    if (!cvx::audit_enumeration(result, n_arg)) {
      std::cerr << cvx::io::dump(json{{"error", {{"kind", "census_mismatch"},
                                                 {"message", "enumeration self-audit failed"}}}});
      return 1;
    }
    if (check_oracle) {
      const auto oracle = cvx::enumerate_geometries_brute(n_arg);
      j["oracle_class_count"] = oracle.size();
      if (oracle != result.classes) {
        std::cerr << cvx::io::dump(json{
            {"error", {{"kind", "census_mismatch"},
                       {"message", "generator and brute-force oracle disagree"}}}});
        return 1;
      }
    }
    if (!reference_path.empty()) {
      const json ref = cvx::io::load_file(reference_path);
      const std::string key = std::to_string(n_arg);
      if (ref.contains(key)) {
        const auto expected = ref.at(key).get<std::uint64_t>();
        j["reference_count"] = expected;
        if (expected != result.classes.size()) {
          std::cerr << cvx::io::dump(json{
              {"error",
               {{"kind", "census_mismatch"},
                {"message", "class count " + std::to_string(result.classes.size()) +
                                " does not match reference " + std::to_string(expected)}}}});
          return 1;
        }
      }
    }
    if (classify_flag) {
      j["entries"] = json::array();
      const auto entries = cvx::census(n_arg, jobs);
      for (const auto& e : entries) {
        json ej;
        ej["geometry"] = cvx::io::geometry_to_json(e.geometry);
        ej["ordinal"] = e.ordinal;
        ej["atomistic"] = e.atomistic;
        ej["primitive"] = e.primitive;
        ej["extremely_resolvable"] = e.extremely_resolvable;
        if (e.affine == cvx::Tristate::Unknown)
          ej["affine"] = "unknown";
        else
          ej["affine"] = e.affine == cvx::Tristate::True;
        ej["shrinkable_count"] = e.shrinkable_count;
        j["entries"].push_back(ej);
      }
    }
    emit_json(j, output);
  } else if (c_iso->parsed()) {
    ConvexGeometry a = cvx::io::geometry_from_json(cvx::io::load_file(input));
    ConvexGeometry b = cvx::io::geometry_from_json(cvx::io::load_file(input2));
    emit_json(json{{"format", 1}, {"isomorphic", cvx::are_isomorphic(a, b)}}, output);
  } else if (c_lattice->parsed()) {
    ConvexGeometry g = cvx::io::geometry_from_json(cvx::io::load_file(input));
    if (!dot) throw std::invalid_argument("lattice currently supports --dot output only");
    const auto sets = g.family().canonical_order();
    std::string text = "digraph lattice {\n  rankdir=BT;\n";
    for (Mask m : sets) text += "  \"" + g.ground().to_string(m) + "\";\n";
    for (Mask lo : sets)
      for (Mask hi : sets) {
        if (lo == hi || !cvx::subset(lo, hi)) continue;
        bool cover = true;
        for (Mask mid : sets)
          if (mid != lo && mid != hi && cvx::subset(lo, mid) && cvx::subset(mid, hi)) {
            cover = false;
            break;
          }
        if (cover)
          text += "  \"" + g.ground().to_string(lo) + "\" -> \"" + g.ground().to_string(hi) +
                  "\";\n";
      }
    text += "}\n";
    emit(text, output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << cvx::io::dump(json{{"error", {{"kind", "invalid_input"}, {"message", e.what()}}}});
    return 1;
  } catch (const std::exception& e) {
    std::cerr << cvx::io::dump(json{{"error", {{"kind", "failure"}, {"message", e.what()}}}});
    return 1;
  }
}
