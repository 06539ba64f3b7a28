#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "polycx/curvature.hpp"
#include "polycx/hyperplanes.hpp"
#include "polycx/io.hpp"
#include "polycx/verify.hpp"

using namespace polycx;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct EnumerateArgs {
  std::string signature;
  std::string mode = "full";
  int radius = -1;
  std::vector<int> center;
  std::size_t cap = 200000;
};

void add_enumeration_flags(CLI::App* cmd, EnumerateArgs& a) {
  cmd->add_option("signature", a.signature, "surface, e.g. 0,0:6")->required();
  cmd->add_option("--mode", a.mode, "full or ball")->check(CLI::IsMember({"full", "ball"}));
  cmd->add_option("--radius", a.radius, "ball radius");
  cmd->add_option("--center", a.center, "ball center as base arc ids")->delimiter(',');
  cmd->add_option("--cap", a.cap, "vertex cap");
}

Enumeration run_enumeration(const EnumerateArgs& a) {
  const auto sig = parse_signature(a.signature);
  EnumerationOptions opts;
  opts.vertex_cap = a.cap;
  if (a.mode == "full") {
    if (a.radius >= 0) throw CLI::ValidationError("--radius", "only valid with --mode ball");
    return enumerate_full(sig, opts);
  }
  if (a.radius < 0) throw CLI::ValidationError("--radius", "required with --mode ball");
  std::optional<ArcSet> center;
  if (!a.center.empty()) {
    ArcSet c;
    for (int id : a.center) c.push_back(arc_id(id));
    std::sort(c.begin(), c.end());
    center = c;
  }
  return enumerate_ball(sig, a.radius, center, opts);
}

void print_report(const Report& r) {
  std::cout << "suite " << r.suite << " on " << r.instance << "\n";
  for (const auto& c : r.checks) {
    std::cout << "  " << std::left << std::setw(26) << to_string(c.status) << std::setw(52) << c.name << " [" << c.anchor
              << "] n=" << c.instances;
    if (!c.counterexample.empty()) std::cout << "  " << c.counterexample;
    std::cout << "\n";
  }
  std::cout << "  totals: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
            << r.count(Status::skipped_out_of_assumption) << " skipped, " << r.count(Status::no_qualifying_instances)
            << " without instances\n";
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text_atomic(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polygonalisation complexes of marked surfaces"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 keeps the default)");

  auto* surface = app.add_subcommand("surface", "print E, F and whether the surface is exceptional");
  std::string surface_sig;
  bool surface_json = false;
  surface->add_option("signature", surface_sig)->required();
  surface->add_flag("--json", surface_json);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate a complex and write its JSON document");
  EnumerateArgs en_args;
  std::string en_out;
  bool en_cubes = false, en_no_cache = false;
  add_enumeration_flags(enumerate, en_args);
  enumerate->add_option("--out,-o", en_out, "output path (stdout when omitted)");
  enumerate->add_flag("--cubes", en_cubes, "include cubes of dimension >= 2");
  enumerate->add_flag("--no-cache", en_no_cache, "bypass the enumeration cache");

  auto* exporter = app.add_subcommand("export", "export a document as DOT");
  std::string ex_in, ex_what = "complex", ex_out;
  exporter->add_option("input", ex_in, "document path")->required();
  exporter->add_option("--what", ex_what, "complex, crossing or hyperplane:ARC");
  exporter->add_option("--out,-o", ex_out);

  auto* verifier = app.add_subcommand("verify", "run verification suites");
  EnumerateArgs v_args;
  std::string v_in, v_suite = "all", v_json;
  verifier->add_option("signature", v_args.signature);
  verifier->add_option("--in", v_in, "verify a stored document instead");
  verifier->add_option("--mode", v_args.mode)->check(CLI::IsMember({"full", "ball"}));
  verifier->add_option("--radius", v_args.radius);
  verifier->add_option("--suite", v_suite)->check(CLI::IsMember({"cubes", "sageev", "crossing", "curvature", "all"}));
  verifier->add_option("--json", v_json, "write the report as JSON");

  auto* distances = app.add_subcommand("distances", "compare arc graph and crossing graph distances");
  EnumerateArgs d_args;
  distances->add_option("signature", d_args.signature)->required();

  auto* curvature = app.add_subcommand("curvature", "positive curvature systems per vertex");
  EnumerateArgs c_args;
  std::string c_json;
  add_enumeration_flags(curvature, c_args);
  curvature->add_option("--json", c_json, "write per-vertex systems as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }
  if (threads > 0) set_threads(threads);

  try {
    if (*surface) {
      const auto sig = parse_signature(surface_sig);
      const int E = complexity_E(sig), F = face_count_F(sig);
      if (surface_json) {
        nlohmann::json j = {{"signature", to_string(sig)}, {"E", E}, {"F", F}, {"exceptional", is_exceptional(sig)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "E=" << E << " F=" << F << " exceptional=" << (is_exceptional(sig) ? "true" : "false") << "\n";
      }
      return kExitPass;
    }

    if (*enumerate) {
      const auto sig = parse_signature(en_args.signature);
      const Mode mode = en_args.mode == "full" ? Mode::full : Mode::ball;
      std::optional<PolComplex> cx;
      const bool cacheable = !en_no_cache && en_args.center.empty();
      if (cacheable) cx = cache_load(sig, mode, en_args.radius);
      if (!cx) {
        cx = run_enumeration(en_args).complex;
        if (cacheable) cache_store(*cx);
      }
      emit(complex_to_json(*cx, en_cubes).dump(1) + "\n", en_out);
      const auto counts = cube_counts(*cx);
      std::cerr << to_string(sig) << ": " << cx->vertex_count() << " vertices, " << cx->edges.size() << " edges";
      for (std::size_t d = 2; d < counts.size(); ++d) std::cerr << ", " << counts[d] << " " << d << "-cubes";
      std::cerr << "\n";
      return kExitPass;
    }

    if (*exporter) {
      const auto cx = read_complex(ex_in);
      std::string dot;
      if (ex_what == "complex") dot = complex_dot(cx);
      else if (ex_what == "crossing") dot = crossing_dot(cx);
      else if (ex_what.rfind("hyperplane:", 0) == 0) dot = hyperplane_dot(cx, arc_id(std::stoi(ex_what.substr(11))));
      else throw CLI::ValidationError("--what", "expected complex, crossing or hyperplane:ARC");
      emit(dot, ex_out);
      return kExitPass;
    }

    if (*verifier) {
      Report report;
      const Suite suite = suite_from_string(v_suite);
      if (!v_in.empty()) {
        const auto doc = read_complex(v_in);
        EnumerateArgs regen;
        regen.signature = to_string(doc.signature);
        regen.mode = doc.mode == Mode::full ? "full" : "ball";
        regen.radius = doc.mode == Mode::full ? -1 : doc.radius;
        if (doc.mode == Mode::ball && doc.center >= 0)
          for (ArcId a : doc.vertices[static_cast<std::size_t>(doc.center)].arcs) regen.center.push_back(index(a));
        auto en = run_enumeration(regen);
        report = verify(doc, en, suite, Execution::parallel);
      } else {
        if (v_args.signature.empty()) throw CLI::ValidationError("signature", "give a signature or --in");
        auto en = run_enumeration(v_args);
        report = verify(en.complex, en, suite, Execution::parallel);
      }
      print_report(report);
      if (!v_json.empty()) write_text_atomic(v_json, report_to_json(report).dump(1) + "\n");
      return report.passed() ? kExitPass : kExitFail;
    }

    if (*distances) {
      auto en = run_enumeration(d_args);
      const auto arcs = en.complex.arcs();
      const Graph ag = arc_graph(*en.ctx, arcs);
      const Graph cg = crossing_graph(*en.ctx, arcs).graph;
      auto diameter = [](const Graph& g) {
        int d = 0;
        for (const auto& row : all_pairs_distances(g))
          for (int x : row)
            if (x != kUnreachable) d = std::max(d, x);
        return d;
      };
      std::cout << arcs.size() << " arcs; arc graph " << ag.edge_count() << " edges, diameter " << diameter(ag)
                << "; crossing graph " << cg.edge_count() << " edges, diameter " << diameter(cg) << "\n";
      const auto report = distance_comparison(en);
      print_report(report);
      return report.passed() ? kExitPass : kExitFail;
    }

    if (*curvature) {
      auto en = run_enumeration(c_args);
      const auto j = curvature_to_json(en);
      std::cout << "vertex  arcs  systems\n";
      for (const auto& v : j["vertices"])
        std::cout << std::setw(6) << v["vertex"].get<int>() << "  " << std::setw(4) << v["arcs"].size() << "  "
                  << v["systems"].size() << "\n";
      std::cout << j["systems"].get<std::size_t>() << " systems over " << j["certified_vertices"].get<int>()
                << " certified vertices\n";
      if (en.complex.mode == Mode::full)
        std::cout << "non-positively curved: " << (is_nonpositively_curved(en.complex) ? "yes" : "no") << "\n";
      if (!c_json.empty()) write_text_atomic(c_json, j.dump(1) + "\n");
      return kExitPass;
    }
  } catch (const EnumerationDiverged& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSignature& e) {
    std::cerr << "invalid signature: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedSignature& e) {
    std::cerr << "unsupported signature: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::logic_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
