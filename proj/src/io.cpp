#include "polycx/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <unistd.h>

#include "polycx/curvature.hpp"
#include "polycx/hyperplanes.hpp"

namespace polycx {

using nlohmann::json;

namespace {

const char* mode_name(Mode m) { return m == Mode::full ? "full" : "ball"; }
const char* source_name(Source s) { return s == Source::engine ? "engine" : "oracle"; }

json arc_list(const ArcSet& s) {
  json out = json::array();
  for (ArcId a : s) out.push_back(index(a));
  return out;
}

std::string colour(int deficiency) {
  switch (deficiency) {
    case 0: return "red";
    case 1: return "blue";
    case 2: return "green";
    default: return "gray";
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw IoError(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

json complex_to_json(const PolComplex& cx, bool with_cubes) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["signature"] = to_string(cx.signature);
  doc["complexity"] = cx.complexity;
  doc["mode"] = mode_name(cx.mode);
  doc["source"] = source_name(cx.source);
  if (cx.mode == Mode::ball) {
    doc["radius"] = cx.radius;
    doc["center"] = cx.center;
  }
  json arcs = json::array();
  for (const auto& [a, coords] : cx.arc_coords) arcs.push_back({{"id", index(a)}, {"base_coords", coords}});
  doc["arcs"] = std::move(arcs);
  json vertices = json::array();
  for (int v = 0; v < cx.vertex_count(); ++v) {
    const auto& p = cx.vertices[static_cast<std::size_t>(v)];
    json jv = {{"id", v}, {"arcs", arc_list(p.arcs)}, {"deficiency", p.deficiency}};
    if (cx.mode == Mode::ball) {
      jv["distance"] = cx.distance[static_cast<std::size_t>(v)];
      jv["frontier"] = cx.is_frontier(v);
    }
    vertices.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& e : cx.edges)
    edges.push_back({{"v", e.v}, {"w", e.w}, {"arc", index(e.arc)}, {"orientation", e.upper}});
  doc["edges"] = std::move(edges);
  if (with_cubes) {
    json cs = json::array();
    for (const auto& c : cubes(cx, 2)) cs.push_back({{"bottom", c.bottom}, {"top", c.top}, {"dimension", c.dimension}});
    doc["cubes"] = std::move(cs);
  }
  doc["content_digest"] = sha256_hex(doc.dump());
  return doc;
}

PolComplex complex_from_json(const json& in) {
  try {
    if (field<std::string>(in, "format_version") != kFormatVersion) throw IoError("unsupported format version");
    json body = in;
    const auto digest = field<std::string>(in, "content_digest");
    body.erase("content_digest");
    if (sha256_hex(body.dump()) != digest) throw IoError("content digest mismatch");

    PolComplex cx;
    cx.signature = parse_signature(field<std::string>(in, "signature"));
    cx.complexity = field<int>(in, "complexity");
    const auto mode = field<std::string>(in, "mode");
    if (mode != "full" && mode != "ball") throw IoError("unknown mode '" + mode + "'");
    cx.mode = mode == "full" ? Mode::full : Mode::ball;
    const auto source = field<std::string>(in, "source");
    if (source != "engine" && source != "oracle") throw IoError("unknown source '" + source + "'");
    cx.source = source == "engine" ? Source::engine : Source::oracle;
    if (cx.mode == Mode::ball) {
      cx.radius = field<int>(in, "radius");
      cx.center = field<int>(in, "center");
    }
    for (const auto& a : field<json>(in, "arcs")) cx.arc_coords.emplace(arc_id(field<int>(a, "id")), field<Coords>(a, "base_coords"));
    const auto& vs = field<json>(in, "vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& v = vs[i];
      if (field<std::size_t>(v, "id") != i) throw IoError("vertex ids are not dense");
      Polygonalisation p;
      for (int a : field<std::vector<int>>(v, "arcs")) p.arcs.push_back(arc_id(a));
      p.deficiency = field<int>(v, "deficiency");
      cx.vertices.push_back(std::move(p));
      if (cx.mode == Mode::ball) {
        cx.distance.push_back(field<int>(v, "distance"));
        cx.frontier.push_back(field<bool>(v, "frontier"));
      }
    }
    const int n = cx.vertex_count();
    for (const auto& e : field<json>(in, "edges")) {
      ComplexEdge ce{field<int>(e, "v"), field<int>(e, "w"), arc_id(field<int>(e, "arc")), field<int>(e, "orientation")};
      if (ce.v < 0 || ce.w >= n || ce.v >= ce.w || (ce.upper != ce.v && ce.upper != ce.w)) throw IoError("malformed edge");
      cx.edges.push_back(ce);
    }
    cx.index();
    return cx;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed document: ") + e.what());
  }
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto tmp = dir / (path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw IoError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename onto " + path.string());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_complex(const std::filesystem::path& path, const PolComplex& cx, bool with_cubes) {
  write_text_atomic(path, complex_to_json(cx, with_cubes).dump(1) + "\n");
}

PolComplex read_complex(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
  return complex_from_json(doc);
}

std::string complex_dot(const PolComplex& cx) {
  std::ostringstream out;
  out << "graph pol {\n  node [style=filled];\n";
  for (int v = 0; v < cx.vertex_count(); ++v) {
    const auto& p = cx.vertices[static_cast<std::size_t>(v)];
    out << "  v" << v << " [fillcolor=" << colour(p.deficiency) << ", label=\"";
    for (std::size_t i = 0; i < p.arcs.size(); ++i) out << (i ? " " : "") << index(p.arcs[i]);
    out << "\"];\n";
  }
  for (const auto& e : cx.edges) out << "  v" << e.v << " -- v" << e.w << " [label=\"" << index(e.arc) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string crossing_dot(const PolComplex& cx) {
  const auto cr = quadrant_crossing_graph(cx);
  std::ostringstream out;
  out << "graph crossing {\n";
  for (std::size_t i = 0; i < cr.arcs.size(); ++i) out << "  h" << index(cr.arcs[i]) << ";\n";
  for (auto [u, w] : cr.graph.edges())
    out << "  h" << index(cr.arcs[static_cast<std::size_t>(u)]) << " -- h" << index(cr.arcs[static_cast<std::size_t>(w)]) << ";\n";
  out << "}\n";
  return out.str();
}

std::string hyperplane_dot(const PolComplex& cx, ArcId a) {
  const auto hs = hyperplanes(cx);
  const int h = hs.plane_of(a);
  if (h < 0) throw UnknownArc("no hyperplane for arc " + std::to_string(index(a)));
  const auto& plane = hs.planes[static_cast<std::size_t>(h)];
  std::ostringstream out;
  out << "graph hyperplane_" << index(a) << " {\n";
  for (int e : plane.edges) {
    const auto& ce = cx.edges[static_cast<std::size_t>(e)];
    out << "  e" << e << " [label=\"" << ce.v << "-" << ce.w << "\"];\n";
  }
  for (auto [u, w] : plane.carrier.edges())
    out << "  e" << plane.edges[static_cast<std::size_t>(u)] << " -- e" << plane.edges[static_cast<std::size_t>(w)] << ";\n";
  out << "}\n";
  return out.str();
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc = {{"name", c.name}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"instances", c.instances}};
    if (!c.counterexample.empty()) jc["counterexample"] = c.counterexample;
    checks.push_back(std::move(jc));
  }
  json totals;
  for (Status s : {Status::pass, Status::fail, Status::skipped_out_of_assumption, Status::no_qualifying_instances})
    totals[to_string(s)] = r.count(s);
  return {{"suite", r.suite}, {"instance", r.instance}, {"checks", std::move(checks)}, {"totals", std::move(totals)}};
}

json curvature_to_json(const Enumeration& en) {
  const PolComplex& cx = en.complex;
  json vertices = json::array();
  int certified = 0;
  std::size_t total = 0;
  for (int v = 0; v < cx.vertex_count(); ++v) {
    if (!vertex_certified(cx, v)) continue;
    ++certified;
    const auto cube = find_pcs_cubewise(cx, v);
    if (cube.empty()) continue;
    const auto curve = find_pcs_curvewise(en, v);
    json systems = json::array();
    for (const auto& p : cube) {
      json js = {{"arcs", arc_list(p.arcs)}, {"edges", p.edges}, {"downward", p.downward}};
      for (const auto& c : curve)
        if (c.arcs == p.arcs) {
          json arcs = json::array();
          for (ArcId a : c.cycle_arcs) arcs.push_back(index(a));
          js["cycle"] = {{"regions", c.cycle_regions}, {"arcs", std::move(arcs)}};
        }
      systems.push_back(std::move(js));
    }
    total += cube.size();
    vertices.push_back({{"vertex", v}, {"arcs", arc_list(cx.vertices[static_cast<std::size_t>(v)].arcs)}, {"systems", std::move(systems)}});
  }
  return {{"signature", to_string(cx.signature)},
          {"mode", mode_name(cx.mode)},
          {"certified_vertices", certified},
          {"systems", total},
          {"vertices", std::move(vertices)}};
}

std::filesystem::path cache_dir() {
  const char* env = std::getenv("POLYCX_CACHE_DIR");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path(".polycx-cache");
}

std::filesystem::path cache_path(const SurfaceSignature& sig, Mode mode, int radius) {
  std::string key = to_string(sig) + "|" + mode_name(mode) + "|" + std::to_string(mode == Mode::ball ? radius : 0) + "|" + kFormatVersion;
  return cache_dir() / (sha256_hex(key).substr(0, 32) + ".json");
}

std::optional<PolComplex> cache_load(const SurfaceSignature& sig, Mode mode, int radius) {
  const auto path = cache_path(sig, mode, radius);
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    auto cx = read_complex(path);
    if (cx.signature != sig || cx.mode != mode || (mode == Mode::ball && cx.radius != radius)) return std::nullopt;
    return cx;
  } catch (const IoError&) {
    return std::nullopt;
  }
}

void cache_store(const PolComplex& cx) { write_complex(cache_path(cx.signature, cx.mode, cx.radius), cx); }

}  // namespace polycx
