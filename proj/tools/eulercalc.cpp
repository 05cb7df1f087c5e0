// eulercalc: command-line front end.
//
// Exit codes: 0 success, 2 malformed input or violated invariant,
// 3 unsupported carrier/map combination, 4 inversion hypotheses violated,
// 5 an identity failed.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "eulercalc/builtins.hpp"
#include "eulercalc/io.hpp"
#include "eulercalc/models.hpp"
#include "eulercalc/radon.hpp"
#include "eulercalc/selftest.hpp"

using namespace eulercalc;

namespace {

constexpr int kParse = 2;
constexpr int kUnsupported = 3;
constexpr int kHypotheses = 4;
constexpr int kIdentity = 5;

struct Global {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;  // per-command default when absent
  std::size_t samples = 10;
  std::string builtin;
};

bool json_out(const Global& g) { return g.format == "json"; }

void emit(const Global& g, const Json& j, const std::string& text) {
  if (json_out(g)) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

/// Inline JSON when the argument starts with '{', otherwise a file path.
Json load(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return parse_json_text(arg);
  return read_json_file(arg);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

/// "x,y" for the plane, "t" for the line, "p,q" (a direction) for the
/// circle, a label for finite carriers.
CarrierPoint parse_point(const std::string& text, Carrier carrier) {
  const auto parts = split(text, ',');
  switch (carrier) {
    case Carrier::Finite: return text;
    case Carrier::Line:
      if (parts.size() != 1) throw RejectedInput("a line point is a single rational");
      return parse_rat(text);
    case Carrier::Circle:
      if (parts.size() != 2) throw RejectedInput("a direction is \"p,q\"");
      return Direction(BigInt(parts[0]), BigInt(parts[1]));
    case Carrier::Plane:
      if (parts.size() != 2) throw RejectedInput("a planar point is \"x,y\"");
      return Point2{parse_rat(parts[0]), parse_rat(parts[1])};
  }
  throw RejectedInput("bad point");
}

void print_function(const Global& g, const ConstructibleFn& f, const std::optional<std::string>& at) {
  if (at) {
    const EulerDim v = cf_eval(f, parse_point(*at, f.carrier()));
    emit(g, to_json(v), to_string(v));
  } else {
    emit(g, to_json(f), to_text(f));
  }
}

int cmd_mu(const Global& g, const std::string& input) {
  Json j;
  if (!g.builtin.empty()) {
    j = to_json(builtin_scene(g.builtin).Z);
  } else {
    j = load(input);
  }
  EulerDim v;
  if (j.contains("cells")) {
    v = mu_complex(complex_from_json(j));
  } else if (j.value("carrier", std::string("line")) == "circle") {
    v = mu_circle(circle_set_from_json(j));
  } else {
    v = mu_1d(line_set_from_json(j));
  }
  emit(g, to_json(v), to_string(v));
  return 0;
}

ConstructibleFn load_fn(const Global& g, const std::string& input) {
  if (input.empty() && !g.builtin.empty()) return ConstructibleFn::indicator(builtin_scene(g.builtin).Z);
  return fn_from_json(load(input));
}

int cmd_radon_incidence(const Global& g, const FiniteIncidence& inc, bool invert) {
  const auto transform = radon_finite(inc, ConstructibleFn::indicator(inc.x_set(), inc.x_set()));
  if (!invert) {
    emit(g, {{"transform", to_json(transform)}}, "R(1_X):\n" + to_text(transform));
    return 0;
  }
  const auto r = inversion_trials_finite(inc, transpose(inc), g.trials.value_or(100), g.seed);
  Json j = {{"lambda", to_json(r.lambda)}, {"theta", to_json(r.theta)}, {"trials", r.trials}};
  std::string text;
  switch (r.status) {
    case InversionStatus::Ok:
      j["status"] = "ok";
      text = "λ=" + to_string(r.lambda) + " θ=" + to_string(r.theta) + " OK (" + std::to_string(r.trials) + " trials)";
      emit(g, j, text);
      return 0;
    case InversionStatus::HypothesesViolated:
      j["status"] = "hypotheses-violated";
      j["witness"] = r.witness;
      emit(g, j, "hypotheses violated: " + r.witness);
      return kHypotheses;
    case InversionStatus::IdentityFailed:
      j["status"] = "identity-failed";
      j["witness"] = r.witness;
      emit(g, j, "identity failed " + r.witness);
      return kIdentity;
  }
  return kIdentity;
}

std::vector<Point2> scene_samples(const Global& g, const PolygonScene& scene, const std::optional<BuiltinScene>& b) {
  if (!scene.samples.empty()) return scene.samples;
  std::mt19937_64 rng(g.seed);
  if (b) {
    const std::size_t inside = g.samples / 2;
    auto pts = interior_samples(b->polygon, inside, rng);
    auto out = exterior_samples(b->Z, g.samples - inside, rng);
    pts.insert(pts.end(), out.begin(), out.end());
    return pts;
  }
  return exterior_samples(scene.Z, g.samples, rng);
}

int cmd_radon_scene(const Global& g, const PolygonScene& scene, const std::optional<BuiltinScene>& b, bool invert) {
  const auto samples = scene_samples(g, scene, b);
  if (!invert) {
    Json rows = Json::array();
    std::string text;
    for (const auto& p : samples) {
      const auto profile = pencil_profile(p, scene, true);
      const EulerDim v = cf_integrate(profile);
      rows.push_back({{"point", to_json(p)}, {"pencil", to_json(profile)}, {"double", to_json(v)}});
      text += to_string(p) + ": " + to_string(v) + "\n";
    }
    emit(g, rows, text);
    return 0;
  }
  const auto report = inversion_check_plane(scene, samples, true);
  Json rows = Json::array();
  std::string text;
  for (const auto& r : report.rows) {
    rows.push_back({{"point", to_json(r.point)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"ok", r.ok}});
    if (!r.ok) text += "FAIL at " + to_string(r.point) + ": " + to_string(r.lhs) + " vs " + to_string(r.rhs) + "\n";
  }
  text += std::to_string(report.passed) + "/" + std::to_string(report.rows.size()) + " points OK";
  emit(g, {{"rows", rows}, {"passed", report.passed}, {"total", report.rows.size()}}, text);
  return report.ok() ? 0 : kIdentity;
}

int cmd_radon(const Global& g, const std::string& input, bool invert) {
  if (!g.builtin.empty()) {
    if (g.builtin == "fano") return cmd_radon_incidence(g, fano(), invert);
    if (g.builtin.rfind("pg2q=", 0) == 0) {
      const std::string digits = g.builtin.substr(5);
      if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw RejectedInput("pg2q needs a small prime order, e.g. pg2q=3");
      }
      return cmd_radon_incidence(g, projective_plane(static_cast<unsigned>(std::stoul(digits))), invert);
    }
    const BuiltinScene b = builtin_scene(g.builtin);
    return cmd_radon_scene(g, PolygonScene{b.Z, std::nullopt, {}}, b, invert);
  }
  if (input.empty()) throw RejectedInput("radon needs an input file or --builtin");
  const Json j = load(input);
  if (j.contains("S")) return cmd_radon_incidence(g, incidence_from_json(j), invert);
  return cmd_radon_scene(g, scene_from_json(j), std::nullopt, invert);
}

struct ModelArgs {
  std::string input;
  std::string cls;
  std::string push;
  std::string pull;
  std::string fn;
};

int cmd_models(const Global& g, const ModelArgs& a) {
  const FiniteModel m = model_from_json(load(a.input));
  if (!a.cls.empty()) {
    const EulerDim v = sk0_class(m, a.cls);
    emit(g, to_json(v), to_string(v));
    return 0;
  }
  if (!a.push.empty() || !a.pull.empty()) {
    const bool push = !a.push.empty();
    const std::string& name = push ? a.push : a.pull;
    if (!m.maps.count(name)) throw RejectedInput("unknown map '" + name + "'");
    const auto& map = m.maps.at(name);
    ConstructibleFn f;
    if (a.fn.empty()) {
      const auto dom = m.subset(push ? map.dom : map.cod);
      f = ConstructibleFn::indicator(dom, dom);
    } else {
      f = fn_from_json(load(a.fn));
    }
    print_function(g, push ? model_pushforward(m, name, f) : model_pullback(m, name, f), std::nullopt);
    return 0;
  }
  Json j = Json::object();
  std::string text;
  j["universe"] = to_json(sk0_class(m, "universe"));
  text += "[universe] = " + to_string(sk0_class(m, "universe")) + "\n";
  for (const auto& [name, s] : m.subsets) {
    j["subsets"][name] = to_json(sk0_class(m, name));
    text += "[" + name + "] = " + to_string(sk0_class(m, name)) + "\n";
  }
  for (const auto& [name, map] : m.maps) {
    const auto dom = m.subset(map.dom);
    const auto pushed = model_pushforward(m, name, ConstructibleFn::indicator(dom, dom));
    j["maps"][name] = to_json(pushed);
    text += name + "_!(1):\n" + to_text(pushed);
  }
  emit(g, j, text);
  return 0;
}

struct PresArgs {
  std::string input;
  std::string op;
  std::string with;
  std::optional<std::int64_t> translate;
  bool reflect = false;
};

int cmd_presburger(const Global& g, const PresArgs& a) {
  PresburgerSet s = presburger_from_json(load(a.input));
  if (!a.op.empty()) {
    if (a.with.empty()) throw RejectedInput("--op needs --with");
    const PresburgerSet other = presburger_from_json(load(a.with));
    SetOp op;
    if (a.op == "union") {
      op = SetOp::Union;
    } else if (a.op == "intersect") {
      op = SetOp::Intersect;
    } else if (a.op == "difference") {
      op = SetOp::Difference;
    } else {
      throw RejectedInput("--op must be union, intersect or difference");
    }
    s = pres_ops(s, other, op);
  }
  if (a.translate) s = pres_translate(s, *a.translate);
  if (a.reflect) s = pres_reflect(s);
  const EulerDim cls = pres_class(s);
  emit(g, {{"set", to_json(s)}, {"class", to_json(cls)}}, to_string(s) + "\nclass " + to_string(cls));
  return 0;
}

int cmd_selftest(const Global& g, const std::string& fault, bool timing) {
  SelftestOptions opts;
  opts.trials = g.trials.value_or(1000);
  opts.samples = g.samples;
  opts.seed = g.seed;
  opts.inject_fault = fault;
  if (opts.trials == 0) std::cerr << "warning: --trials 0, randomized suites run no trials (vacuous pass)\n";
  const auto rows = run_selftest(opts);
  bool ok = true;
  Json j = Json::array();
  std::ostringstream text;
  for (const auto& r : rows) {
    ok = ok && r.passed;
    Json row = {{"suite", r.suite}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}};
    if (timing) row["seconds"] = r.seconds;
    j.push_back(row);
    text << (r.passed ? "PASS " : "FAIL ") << r.suite << " (" << r.checks << " checks)";
    if (timing) text << " " << r.seconds << "s";
    text << ": " << r.detail << "\n";
  }
  text << (ok ? "all suites passed" : "FAILURES");
  emit(g, j, text.str());
  return ok ? 0 : kIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler calculus: measures, integrals, pushforward, pullback and Radon inversion"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--trials", g.trials, "Random trials per identity");
  app.add_option("--samples", g.samples, "Sample points for planar checks");
  app.add_option("--builtin", g.builtin, "fano, pg2q=<q>, square, triangle or pentagon");

  std::string input;
  std::string map_spec;
  std::optional<std::string> at;
  bool invert = false;
  bool timing = false;
  std::string fault;
  ModelArgs model_args;
  PresArgs pres_args;

  auto* mu = app.add_subcommand("mu", "Measure (chi, dim) of a complex or a 1-D set");
  mu->add_option("input", input, "JSON file or inline JSON");

  auto* integrate = app.add_subcommand("integrate", "Integral of a constructible function");
  integrate->add_option("input", input, "Function JSON");

  auto* push = app.add_subcommand("push", "Pushforward along a map");
  push->add_option("input", input, "Function JSON");
  push->add_option("--map", map_spec, "Map descriptor (JSON or file)")->required();
  push->add_option("--at", at, "Evaluate the result at a point");

  auto* pull = app.add_subcommand("pull", "Pullback along a map");
  pull->add_option("input", input, "Function JSON");
  pull->add_option("--map", map_spec, "Map descriptor (JSON or file)")->required();
  pull->add_option("--at", at, "Evaluate the result at a point");

  auto* radon = app.add_subcommand("radon", "Radon transform of an incidence or a planar scene");
  radon->add_option("input", input, "Incidence or scene JSON");
  radon->add_flag("--invert", invert, "Check the inversion formula");

  auto* models = app.add_subcommand("models", "Classes and direct images on a finite model");
  models->add_option("input", model_args.input, "Model JSON")->required();
  models->add_option("--class", model_args.cls, "Class of a named subset");
  models->add_option("--push", model_args.push, "Push a function along a named map");
  models->add_option("--pull", model_args.pull, "Pull a function back along a named map");
  models->add_option("--fn", model_args.fn, "Function JSON (defaults to the unit)");

  auto* presburger = app.add_subcommand("presburger", "Canonical form and class of a Presburger set");
  presburger->add_option("input", pres_args.input, "Presburger JSON")->required();
  presburger->add_option("--op", pres_args.op, "union, intersect or difference");
  presburger->add_option("--with", pres_args.with, "Second operand");
  presburger->add_option("--translate", pres_args.translate, "Translate by an integer");
  presburger->add_flag("--reflect", pres_args.reflect, "Reflect x -> -x");

  auto* selftest = app.add_subcommand("selftest", "Run every property suite");
  selftest->add_option("--inject-fault", fault, "Corrupt the named suite to check failure reporting");
  selftest->add_flag("--timing", timing, "Report per-suite run times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  try {
    if (*mu) return cmd_mu(g, input);
    if (*integrate) {
      const EulerDim v = cf_integrate(load_fn(g, input));
      emit(g, to_json(v), to_string(v));
      return 0;
    }
    if (*push || *pull) {
      const MapDesc m = map_from_json(load(map_spec));
      const ConstructibleFn f = load_fn(g, input);
      print_function(g, *push ? cf_pushforward(m, f, {true}) : cf_pullback(m, f), at);
      return 0;
    }
    if (*radon) return cmd_radon(g, input, invert);
    if (*models) return cmd_models(g, model_args);
    if (*presburger) return cmd_presburger(g, pres_args);
    if (*selftest) return cmd_selftest(g, fault, timing);
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const RejectedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::logic_error& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return kIdentity;
  }
  return 0;
}
