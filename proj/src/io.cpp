#include "eulercalc/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace eulercalc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw RejectedInput(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return BigInt(s);
    } catch (const std::exception&) {
      bad("not an integer: \"" + s + "\"");
    }
  }
  bad("expected an integer, got " + j.dump());
}

std::uint32_t index_of(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) bad(std::string("index \"") + key + "\" must be >= 0");
  return static_cast<std::uint32_t>(v.get<std::int64_t>());
}

ExtRat bound_from_json(const Json& j, bool upper) {
  if (j.is_null()) return upper ? ExtRat::pos_inf() : ExtRat::neg_inf();
  return ExtRat::finite(rat_from_json(j));
}

Json bound_to_json(const ExtRat& e) { return e.is_finite() ? to_json(e.value) : Json(nullptr); }

std::set<std::string> labels_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of labels");
  std::set<std::string> out;
  for (const auto& e : j) {
    if (!out.insert(string_of(e, "label")).second) bad("duplicate label \"" + e.get<std::string>() + "\"");
  }
  return out;
}

std::vector<std::string> label_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of labels");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(string_of(e, what));
  return out;
}

Carrier carrier_from_string(const std::string& s) {
  if (s == "finite") return Carrier::Finite;
  if (s == "line") return Carrier::Line;
  if (s == "circle") return Carrier::Circle;
  if (s == "plane") return Carrier::Plane;
  bad("unknown carrier \"" + s + "\" (expected finite, line, circle or plane)");
}

std::optional<std::int64_t> int_or_null(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number_integer()) bad(std::string("\"") + key + "\" must be an integer or null");
  return j.at(key).get<std::int64_t>();
}

}  // namespace

Json to_json(const EulerDim& v) {
  Json d = v.dim().is_bottom() ? Json("bot") : Json(v.dim().value());
  return Json::array({big_to_json(v.euler()), d});
}

EulerDim euler_dim_from_json(const Json& j) {
  if (j.is_string()) return parse_euler_dim(j.get<std::string>());
  if (!j.is_array() || j.size() != 2) bad("an A-value is [e, d] with d an integer or \"bot\"; got " + j.dump());
  const BigInt e = big_from_json(j[0]);
  const Json& d = j[1];
  if (d.is_string() && (d.get<std::string>() == "bot" || d.get<std::string>() == "⊥")) return EulerDim(e, Dim());
  if (!d.is_number_integer() || d.get<std::int64_t>() < 0) bad("dimension must be a natural number or \"bot\"");
  return EulerDim(e, Dim(static_cast<std::uint32_t>(d.get<std::int64_t>())));
}

Json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  bad("a rational is a string \"p/q\" or an integer; got " + j.dump());
}

Json to_json(const Point2& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Point2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("a point is [x, y]; got " + j.dump());
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

Json to_json(const Direction& d) { return Json::array({big_to_json(d.p()), big_to_json(d.q())}); }

Direction direction_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("a direction is [p, q]; got " + j.dump());
  return Direction(big_from_json(j[0]), big_from_json(j[1]));
}

Json to_json(const Line2D& l) { return {{"base", to_json(l.base)}, {"dir", to_json(l.dir)}}; }

Line2D line_from_json(const Json& j) {
  return Line2D{point_from_json(field(j, "base")), direction_from_json(field(j, "dir"))};
}

Json to_json(const LinePiece& p) {
  if (p.point) return {{"t", "pt"}, {"at", to_json(p.lo.value)}};
  return {{"t", "open"}, {"lo", bound_to_json(p.lo)}, {"hi", bound_to_json(p.hi)}};
}

LinePiece line_piece_from_json(const Json& j) {
  const auto t = string_of(field(j, "t"), "piece type");
  if (t == "pt") return LinePiece::at(rat_from_json(field(j, "at")));
  if (t == "open") {
    return LinePiece::open(bound_from_json(j.value("lo", Json(nullptr)), false),
                           bound_from_json(j.value("hi", Json(nullptr)), true));
  }
  bad("line piece type must be \"pt\" or \"open\", got \"" + t + "\"");
}

Json to_json(const CirclePiece& p) {
  if (p.point) return {{"t", "pt"}, {"dir", to_json(p.from)}};
  return {{"t", "arc"}, {"from", to_json(p.from)}, {"to", to_json(p.to)}};
}

CirclePiece circle_piece_from_json(const Json& j) {
  const auto t = string_of(field(j, "t"), "piece type");
  if (t == "pt") return CirclePiece::at(direction_from_json(field(j, "dir")));
  if (t == "arc") return CirclePiece::arc(direction_from_json(field(j, "from")), direction_from_json(field(j, "to")));
  bad("circle piece type must be \"pt\" or \"arc\", got \"" + t + "\"");
}

Json to_json(const Cell& c) {
  switch (c.kind) {
    case CellKind::Vertex: return {{"t", "v"}, {"i", c.v[0]}};
    case CellKind::Edge: return {{"t", "e"}, {"i", c.v[0]}, {"j", c.v[1]}};
    case CellKind::Face: return {{"t", "f"}, {"i", c.v[0]}, {"j", c.v[1]}, {"k", c.v[2]}};
  }
  return {};
}

Cell cell_from_json(const Json& j) {
  const auto t = string_of(field(j, "t"), "cell type");
  if (t == "v") return Cell::vertex(index_of(j, "i"));
  if (t == "e") return Cell::edge(index_of(j, "i"), index_of(j, "j"));
  if (t == "f") return Cell::face(index_of(j, "i"), index_of(j, "j"), index_of(j, "k"));
  bad("cell type must be \"v\", \"e\" or \"f\", got \"" + t + "\"");
}

Json to_json(const PlaneComplex& c) {
  Json vs = Json::array();
  for (const auto& v : c.vertices) vs.push_back(to_json(v));
  Json cs = Json::array();
  for (const auto& cell : c.cells) cs.push_back(to_json(cell));
  return {{"vertices", vs}, {"cells", cs}};
}

PlaneComplex complex_from_json(const Json& j) {
  PlaneComplex c;
  const Json& vs = field(j, "vertices");
  const Json& cs = field(j, "cells");
  if (!vs.is_array() || !cs.is_array()) bad("\"vertices\" and \"cells\" must be arrays");
  for (const auto& v : vs) c.vertices.push_back(point_from_json(v));
  for (const auto& cell : cs) c.cells.push_back(cell_from_json(cell));
  return c;
}

Json to_json(const LineSet1D& s) {
  Json ps = Json::array();
  for (const auto& p : s.pieces()) ps.push_back(to_json(p));
  return {{"carrier", "line"}, {"pieces", ps}};
}

LineSet1D line_set_from_json(const Json& j) {
  std::vector<LinePiece> pieces;
  for (const auto& p : field(j, "pieces")) pieces.push_back(line_piece_from_json(p));
  return LineSet1D(std::move(pieces));
}

Json to_json(const CircleSet& s) {
  Json ps = Json::array();
  for (const auto& p : s.pieces()) ps.push_back(to_json(p));
  return {{"carrier", "circle"}, {"pieces", ps}};
}

CircleSet circle_set_from_json(const Json& j) {
  std::vector<CirclePiece> pieces;
  for (const auto& p : field(j, "pieces")) pieces.push_back(circle_piece_from_json(p));
  return CircleSet(std::move(pieces));
}

Json to_json(const ConstructibleFn& f) {
  Json parts = Json::array();
  auto part = [&](Json piece, const EulerDim& v) { parts.push_back({{"piece", std::move(piece)}, {"value", to_json(v)}}); };
  Json out;
  if (auto g = f.get<FiniteFn>()) {
    for (const auto& [label, v] : g->values) part(label, v);
    out = {{"carrier", "finite"}, {"domain", g->domain}};
  } else if (auto g = f.get<LineFn>()) {
    for (const auto& [p, v] : g->parts) part(to_json(p), v);
    out = {{"carrier", "line"}};
  } else if (auto g = f.get<CircleFn>()) {
    for (const auto& [p, v] : g->parts) part(to_json(p), v);
    out = {{"carrier", "circle"}};
  } else if (auto g = f.get<PlaneFn>()) {
    for (std::size_t i = 0; i < g->values.size(); ++i) part(to_json(g->complex.cells[i]), g->values[i]);
    Json vs = Json::array();
    for (const auto& v : g->complex.vertices) vs.push_back(to_json(v));
    out = {{"carrier", "plane"}, {"vertices", vs}};
  } else {
    for (const auto& [p, v] : f.get<LiftedFn>()->base.parts) part(to_json(p), v);
    out = {{"carrier", "plane"}, {"lifted", true}};
  }
  out["parts"] = std::move(parts);
  return out;
}

ConstructibleFn fn_from_json(const Json& j) {
  const Carrier carrier = carrier_from_string(string_of(field(j, "carrier"), "carrier"));
  const Json& parts = field(j, "parts");
  if (!parts.is_array()) bad("\"parts\" must be an array");
  switch (carrier) {
    case Carrier::Finite: {
      FiniteFn f;
      f.domain = labels_from_json(field(j, "domain"), "domain");
      for (const auto& p : parts) {
        const auto label = string_of(field(p, "piece"), "finite piece");
        EulerDim v = euler_dim_from_json(field(p, "value"));
        if (f.values.count(label)) bad("label \"" + label + "\" appears twice");
        if (!v.is_zero()) f.values.emplace(label, std::move(v));
      }
      return ConstructibleFn(std::move(f));
    }
    case Carrier::Line: {
      LineFn f;
      for (const auto& p : parts) {
        f.parts.emplace_back(line_piece_from_json(field(p, "piece")), euler_dim_from_json(field(p, "value")));
      }
      return ConstructibleFn(std::move(f));
    }
    case Carrier::Circle: {
      CircleFn f;
      for (const auto& p : parts) {
        f.parts.emplace_back(circle_piece_from_json(field(p, "piece")), euler_dim_from_json(field(p, "value")));
      }
      return ConstructibleFn(std::move(f));
    }
    case Carrier::Plane: break;
  }
  if (j.value("lifted", false)) {
    LineFn base;
    for (const auto& p : parts) {
      base.parts.emplace_back(line_piece_from_json(field(p, "piece")), euler_dim_from_json(field(p, "value")));
    }
    return ConstructibleFn(LiftedFn{std::move(base)});
  }
  PlaneFn f;
  for (const auto& v : field(j, "vertices")) f.complex.vertices.push_back(point_from_json(v));
  for (const auto& p : parts) {
    f.complex.cells.push_back(cell_from_json(field(p, "piece")));
    f.values.push_back(euler_dim_from_json(field(p, "value")));
  }
  return ConstructibleFn(std::move(f));
}

std::string to_text(const ConstructibleFn& f) {
  std::vector<std::pair<std::string, EulerDim>> rows;
  if (auto g = f.get<FiniteFn>()) {
    for (const auto& [label, v] : g->values) rows.emplace_back(label, v);
  } else if (auto g = f.get<LineFn>()) {
    for (const auto& [p, v] : g->parts) rows.emplace_back(to_string(p), v);
  } else if (auto g = f.get<CircleFn>()) {
    for (const auto& [p, v] : g->parts) rows.emplace_back(to_string(p), v);
  } else if (auto g = f.get<PlaneFn>()) {
    for (std::size_t i = 0; i < g->values.size(); ++i) {
      const Cell& cell = g->complex.cells[i];
      static const char* kinds[] = {"vertex ", "edge ", "face "};
      std::string name = kinds[cell.dim()];
      for (std::size_t k = 0; k < cell.arity(); ++k) {
        name += (k ? "-" : "") + to_string(g->complex.vertex(cell.v[k]));
      }
      rows.emplace_back(std::move(name), g->values[i]);
    }
  } else {
    for (const auto& [p, v] : f.get<LiftedFn>()->base.parts) rows.emplace_back("x in " + to_string(p), v);
  }
  std::string out;
  for (const auto& [piece, v] : rows) {
    if (!v.is_zero()) out += piece + ": " + to_string(v) + "\n";
  }
  return out.empty() ? "0\n" : out;
}

Json to_json(const MapDesc& m) {
  if (auto f = std::get_if<FiniteMap>(&m)) {
    Json out = {{"kind", "finite"}, {"table", f->table}};
    if (!f->codomain.empty()) out["codomain"] = f->codomain;
    return out;
  }
  if (std::holds_alternative<ProjX>(m)) return {{"kind", "proj-x"}};
  if (auto l = std::get_if<LineInclusion>(&m)) return {{"kind", "line-incl"}, {"line", to_json(l->line)}};
  const auto& c = std::get<ConstMap>(m);
  Json out = {{"kind", "const"}};
  if (c.domain) out["domain"] = to_string(*c.domain);
  if (!c.labels.empty()) out["labels"] = c.labels;
  return out;
}

MapDesc map_from_json(const Json& j) {
  const auto kind = string_of(field(j, "kind"), "map kind");
  if (kind == "proj-x") return ProjX{};
  if (kind == "line-incl") return LineInclusion{line_from_json(field(j, "line"))};
  if (kind == "finite") {
    FiniteMap m;
    const Json& table = field(j, "table");
    if (!table.is_object()) bad("\"table\" must be an object");
    for (const auto& [k, v] : table.items()) m.table.emplace(k, string_of(v, "table value"));
    if (j.contains("codomain")) m.codomain = labels_from_json(j.at("codomain"), "codomain");
    for (const auto& [k, v] : m.table) {
      if (!m.codomain.empty() && !m.codomain.count(v)) bad("table value \"" + v + "\" is outside the codomain");
    }
    return m;
  }
  if (kind == "const") {
    ConstMap m;
    if (j.contains("domain")) m.domain = carrier_from_string(string_of(j.at("domain"), "domain"));
    if (j.contains("labels")) m.labels = labels_from_json(j.at("labels"), "labels");
    return m;
  }
  throw Unsupported("unknown map kind \"" + kind + "\"; supported kinds: finite, proj-x, line-incl, const");
}

Json to_json(const FiniteIncidence& inc) {
  Json s = Json::array();
  for (const auto& [x, y] : inc.S) s.push_back({x, y});
  return {{"X", inc.X}, {"Y", inc.Y}, {"S", s}};
}

FiniteIncidence incidence_from_json(const Json& j) {
  FiniteIncidence inc;
  inc.X = label_list(field(j, "X"), "X");
  inc.Y = label_list(field(j, "Y"), "Y");
  for (const auto& p : field(j, "S")) {
    if (!p.is_array() || p.size() != 2) bad("each element of \"S\" is a pair [x, y]");
    inc.S.emplace(string_of(p[0], "x"), string_of(p[1], "y"));
  }
  inc.validate();
  return inc;
}

PolygonScene scene_from_json(const Json& j) {
  PolygonScene scene;
  scene.Z = complex_from_json(j);
  require_valid(scene.Z);
  if (j.contains("weights")) {
    PlaneFn w{scene.Z, {}};
    for (const auto& v : j.at("weights")) w.values.push_back(euler_dim_from_json(v));
    if (w.values.size() != scene.Z.cells.size()) bad("\"weights\" needs one value per cell");
    scene.weights = std::move(w);
  }
  if (j.contains("samples")) {
    for (const auto& p : j.at("samples")) scene.samples.push_back(point_from_json(p));
  }
  return scene;
}

FiniteModel model_from_json(const Json& j) {
  FiniteModel m;
  m.universe = label_list(field(j, "universe"), "universe");
  if (j.contains("subsets")) {
    for (const auto& [name, elems] : j.at("subsets").items()) m.subsets[name] = labels_from_json(elems, "subset");
  }
  if (j.contains("maps")) {
    for (const auto& [name, spec] : j.at("maps").items()) {
      ModelMap map;
      map.dom = string_of(field(spec, "dom"), "dom");
      map.cod = string_of(field(spec, "cod"), "cod");
      for (const auto& [k, v] : field(spec, "table").items()) map.table.emplace(k, string_of(v, "table value"));
      m.maps.emplace(name, std::move(map));
    }
  }
  m.validate();
  return m;
}

Json to_json(const PresburgerSet& s) {
  Json progs = Json::array();
  for (const auto& p : s.progs) {
    progs.push_back({{"r", p.r},
                     {"d", p.d},
                     {"lo", p.lo ? Json(*p.lo) : Json(nullptr)},
                     {"hi", p.hi ? Json(*p.hi) : Json(nullptr)}});
  }
  return {{"points", s.finite_part}, {"progs", progs}};
}

PresburgerSet presburger_from_json(const Json& j) {
  std::vector<std::int64_t> points;
  if (j.contains("points")) {
    for (const auto& p : j.at("points")) {
      if (!p.is_number_integer()) bad("Presburger points must be integers");
      points.push_back(p.get<std::int64_t>());
    }
  }
  std::vector<Progression> progs;
  if (j.contains("progs")) {
    for (const auto& p : j.at("progs")) {
      Progression q;
      q.r = int_or_null(p, "r").value_or(0);
      q.d = int_or_null(p, "d").value_or(1);
      if (q.d < 1) bad("modulus \"d\" must be at least 1");
      q.lo = int_or_null(p, "lo");
      q.hi = int_or_null(p, "hi");
      progs.push_back(q);
    }
  }
  return pres_normalize(progs, points);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

}  // namespace eulercalc
