#include "persrep/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "persrep/barcode.hpp"
#include "persrep/error.hpp"
#include "persrep/functors.hpp"
#include "persrep/gallery.hpp"
#include "persrep/io.hpp"
#include "persrep/random.hpp"

namespace persrep::cli {

using nlohmann::json;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PERSREP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw ValidationError(std::string("PERSREP_SEED is not a natural number: ") + env);
    }
  }
  return 0;
}

json degrees_json(const GoodMonoid& m, const std::vector<MonoidElement>& gs) {
  auto out = json::array();
  for (const auto& g : gs) out.push_back(degree_to_json(m, g));
  return out;
}

json matrix_json(const Matrix& a) {
  auto rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.ring().format(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json module_json(const FpPresentation& p) {
  json out{{"generators", p.generators}, {"relations", matrix_json(p.relations)}};
  if (p.ring.is_field()) {
    out["dimension"] = dimension(p);
  } else {
    auto inv = abelian_invariants(p);
    auto torsion = json::array();
    for (const auto& t : inv.torsion) torsion.push_back(t.get_str());
    out["free_rank"] = inv.free_rank;
    out["torsion"] = torsion;
  }
  return out;
}

std::string module_text(const FpPresentation& p) {
  std::ostringstream s;
  s << p.generators << " generators, " << p.relations.rows() << " relations";
  if (p.ring.is_field()) {
    s << ", dimension " << dimension(p);
  } else {
    auto inv = abelian_invariants(p);
    s << ", Z^" << inv.free_rank;
    for (const auto& t : inv.torsion) s << " + Z/" << t.get_str();
  }
  return s.str();
}

std::string report_text(const Report& r) {
  std::ostringstream s;
  for (const auto& e : r.entries()) {
    s << (e.pass ? "PASS " : "FAIL ") << e.name;
    if (!e.degree.is_null()) s << " @ " << e.degree.dump();
    if (!e.detail.empty()) s << ": " << e.detail;
    s << '\n';
  }
  s << (r.pass() ? "all checks passed" : std::to_string(r.failures()) + " check(s) failed") << '\n';
  return s.str();
}

bool is_diagram_file(const json& j) { return j.is_object() && j.contains("frames"); }

std::unique_ptr<EvaluableModule> load_module(const std::string& path) {
  auto j = read_json_file(path);
  if (is_diagram_file(j)) return std::make_unique<DiagramModule>(diagram_from_json(j));
  return std::make_unique<PresentationModule>(presentation_from_json(j));
}

struct Emit {
  std::ostream& out;
  bool pretty;
  void operator()(json j, const std::string& text) const {
    if (pretty) {
      out << text;
      if (!text.empty() && text.back() != '\n') out << '\n';
    } else {
      j["version"] = kSchemaVersion;
      out << dump(j, false) << '\n';
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact persistence modules over good monoids", "persrep"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  std::string file, degree, from, to, output, sequence, monoid_spec, elems, gallery_case;
  std::size_t samples = 20;
  std::optional<std::uint64_t> seed;
  bool dot = false;
  std::function<int()> action;

  auto* component_cmd = app.add_subcommand("component", "Component of a presentation at a degree");
  component_cmd->add_option("FILE", file, "Presentation JSON")->required();
  component_cmd->add_option("--degree", degree, "Degree")->required();

  auto* map_cmd = app.add_subcommand("map", "Structure map between two degrees");
  map_cmd->add_option("FILE", file, "Presentation JSON")->required();
  map_cmd->add_option("--from", from, "Source degree")->required();
  map_cmd->add_option("--to", to, "Target degree")->required();

  auto* frames_cmd = app.add_subcommand("frames", "Framing set and its reduction");
  frames_cmd->add_option("FILE", file, "Presentation JSON")->required();

  auto* bars_cmd = app.add_subcommand("barcode", "Barcode of a graded F[t]-module");
  bars_cmd->add_option("FILE", file, "Presentation JSON")->required();

  auto* alpha_cmd = app.add_subcommand("alpha", "Graded presentation of a framed diagram");
  alpha_cmd->add_option("FILE", file, "Diagram JSON")->required();
  alpha_cmd->add_option("-o,--output", output, "Output path (stdout if omitted)");

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Check the alpha/beta round trip");
  roundtrip_cmd->add_option("FILE", file, "Diagram or presentation JSON")->required();
  roundtrip_cmd->add_option("--samples", samples, "Sampled degrees");
  roundtrip_cmd->add_option("--seed", seed, "Random seed");

  auto* stationary_cmd = app.add_subcommand("stationary", "Stationarity index of a monotone sequence");
  stationary_cmd->add_option("FILE", file, "Diagram or presentation JSON")->required();
  stationary_cmd->add_option("--sequence", sequence, "Degrees D1,D2,...")->required();

  auto* monoid_cmd = app.add_subcommand("monoid", "Monoid utilities");
  monoid_cmd->require_subcommand(1);
  auto* plcm_cmd = monoid_cmd->add_subcommand("plcm", "Partially least common multiples");
  plcm_cmd->add_option("--monoid", monoid_spec, "Monoid spec")->required();
  plcm_cmd->add_option("--elems", elems, "Elements E1,E2,...")->required();
  auto* axioms_cmd = monoid_cmd->add_subcommand("axioms", "Sampled good-monoid axioms");
  axioms_cmd->add_option("--monoid", monoid_spec, "Monoid spec")->required();
  axioms_cmd->add_option("--samples", samples, "Sample count");
  axioms_cmd->add_option("--seed", seed, "Random seed");

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of divisibility");
  hasse_cmd->add_option("--monoid", monoid_spec, "Monoid spec")->required();
  hasse_cmd->add_option("--elems", elems, "Elements E1,E2,...")->required();
  hasse_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");

  auto* gallery_cmd = app.add_subcommand("gallery", "Counterexamples");
  gallery_cmd->add_option("CASE", gallery_case, "zc-counterexample | qplus")
      ->required()
      ->check(CLI::IsMember({"zc-counterexample", "qplus"}));
  gallery_cmd->add_option("--seed", seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  const Emit emit{out, pretty};
  try {
    const std::uint64_t rng_seed = seed ? *seed : default_seed();

    if (*component_cmd) {
      auto p = load_presentation(file);
      auto g = parse_degree(p.monoid, degree);
      auto c = component(p, g);
      auto gens = json::array();
      for (auto j : component_generators(p, g)) gens.push_back(p.generators[j].id);
      json j = module_json(c);
      j["degree"] = degree_to_json(p.monoid, g);
      j["generator_ids"] = gens;
      emit(j, "component at " + p.monoid.to_string(g) + ": " + module_text(c));
    } else if (*map_cmd) {
      auto p = load_presentation(file);
      auto g1 = parse_degree(p.monoid, from);
      auto g2 = parse_degree(p.monoid, to);
      auto m = structure_map(p, g1, g2);
      json j{{"from", degree_to_json(p.monoid, g1)}, {"to", degree_to_json(p.monoid, g2)}, {"matrix", matrix_json(m)}};
      std::string text = "structure map " + p.monoid.to_string(g1) + " -> " + p.monoid.to_string(g2) + "\n" + m.to_string();
      if (p.ring.is_field()) {
        auto r = induced_rank(component(p, g1), component(p, g2), m);
        j["rank"] = r;
        text += "\ninduced rank " + std::to_string(r);
      }
      emit(j, text);
    } else if (*frames_cmd) {
      auto p = load_presentation(file);
      PresentationModule module(p);
      const auto& h = module.framing_set();
      auto reduced = reduce_framing_set(module, h);
      std::string text = "framing set:";
      for (const auto& g : h) text += " " + p.monoid.to_string(g);
      text += "\nreduced:";
      for (const auto& g : reduced) text += " " + p.monoid.to_string(g);
      emit({{"framing_set", degrees_json(p.monoid, h)}, {"reduced", degrees_json(p.monoid, reduced)}}, text);
    } else if (*bars_cmd) {
      auto p = load_presentation(file);
      auto b = barcode(p);
      emit({{"bars", barcode_to_json(b)}}, barcode_ascii(b, stability_bound(p) + 1));
    } else if (*alpha_cmd) {
      auto d = load_diagram(file);
      auto j = presentation_to_json(alpha(d));
      if (output.empty()) {
        out << dump(j, pretty) << '\n';
      } else {
        write_json_file(output, j);
        emit({{"written", output}, {"generators", j["generators"].size()}, {"relations", j["relations"].size()}},
             "wrote " + output);
      }
    } else if (*roundtrip_cmd) {
      auto j = read_json_file(file);
      std::mt19937_64 rng(rng_seed);
      Report r;
      if (is_diagram_file(j)) {
        auto d = diagram_from_json(j);
        r = roundtrip_check(d, sample_degrees(d.monoid, samples, rng));
      } else {
        auto p = presentation_from_json(j);
        r = roundtrip_check(p, sample_degrees(p.monoid, samples, rng));
      }
      auto rep = r.to_json();
      rep["seed"] = rng_seed;
      emit(rep, report_text(r));
      if (!r.pass()) return kPropertyViolated;
    } else if (*stationary_cmd) {
      auto m = load_module(file);
      auto seq = parse_degree_list(m->monoid(), sequence);
      auto idx = stationarity_index(*m, seq);
      emit({{"sequence", degrees_json(m->monoid(), seq)}, {"index", idx ? json(*idx) : json(nullptr)}},
           idx ? "stationary from index " + std::to_string(*idx) : std::string("not stationary within the sequence"));
    } else if (*plcm_cmd) {
      auto mon = parse_monoid_spec(monoid_spec);
      auto xs = parse_degree_list(mon, elems);
      auto ps = mon.plcm(xs);
      std::string text = "plcm:";
      for (const auto& g : ps) text += " " + mon.to_string(g);
      if (ps.empty()) text += " (none)";
      emit({{"monoid", monoid_to_json(mon)}, {"elems", degrees_json(mon, xs)}, {"plcm", degrees_json(mon, ps)}}, text);
    } else if (*axioms_cmd) {
      auto mon = parse_monoid_spec(monoid_spec);
      auto r = check_good_axioms(mon, samples, rng_seed);
      auto rep = r.to_json();
      rep["monoid"] = monoid_to_json(mon);
      rep["samples"] = samples;
      rep["seed"] = rng_seed;
      emit(rep, report_text(r));
      if (!r.pass()) return kPropertyViolated;
    } else if (*hasse_cmd) {
      auto mon = parse_monoid_spec(monoid_spec);
      auto xs = parse_degree_list(mon, elems);
      auto text = hasse_dot(mon, xs);
      if (dot) {
        out << text;
      } else {
        emit({{"monoid", monoid_to_json(mon)}, {"elems", degrees_json(mon, xs)}, {"dot", text}}, text);
      }
    } else if (*gallery_cmd) {
      json rep = gallery_case == "qplus" ? qplus_report(rng_seed, 50, 200) : zc_report(5);
      std::ostringstream text;
      if (gallery_case == "qplus") {
        text << "Q>=0 module (M_0 = R, M_q = 0 for q > 0)\n"
             << "stationary sequences: " << rep["stationary_sequences"] << " / " << rep["sequences"] << '\n'
             << "refuted framing-set candidates: " << rep["refuted_candidates"] << " / " << rep["candidates"] << '\n';
      } else {
        text << "Z[x1,x2,...] module M_i = R/<x1..xi>, generated by {1}\n";
        for (const auto& w : rep["witnesses"])
          text << "i=" << w["i"] << ": " << w["witness"].get<std::string>() << " nonzero in M_i: " << w["nonzero_in_M_i"]
               << ", zero in M_(i+1): " << w["zero_in_M_i_plus_1"] << '\n';
      }
      text << (rep["pass"].get<bool>() ? "reproduced" : "NOT reproduced") << '\n';
      emit(rep, text.str());
      if (!rep["pass"].get<bool>()) return kPropertyViolated;
    }
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace persrep::cli
