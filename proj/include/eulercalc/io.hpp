#pragma once

// JSON encodings of every value the command-line tool reads or writes.
// Rationals travel as strings "p/q" (integers are also accepted on input),
// A-values as [e, d] with d an integer or "bot".

#include <string>

#include <json.hpp>

#include "eulercalc/constructible.hpp"
#include "eulercalc/models.hpp"
#include "eulercalc/radon.hpp"

namespace eulercalc {

using Json = nlohmann::json;

Json to_json(const EulerDim& v);
EulerDim euler_dim_from_json(const Json& j);

Json to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json to_json(const Point2& p);
Point2 point_from_json(const Json& j);

Json to_json(const Direction& d);
Direction direction_from_json(const Json& j);

Json to_json(const Line2D& l);
Line2D line_from_json(const Json& j);

Json to_json(const LinePiece& p);
LinePiece line_piece_from_json(const Json& j);

Json to_json(const CirclePiece& p);
CirclePiece circle_piece_from_json(const Json& j);

Json to_json(const Cell& c);
Cell cell_from_json(const Json& j);

/// {"vertices": [["x","y"], ...], "cells": [...]}. Not validated here.
Json to_json(const PlaneComplex& c);
PlaneComplex complex_from_json(const Json& j);

Json to_json(const LineSet1D& s);
LineSet1D line_set_from_json(const Json& j);
Json to_json(const CircleSet& s);
CircleSet circle_set_from_json(const Json& j);

/// {"carrier": ..., "parts": [{"piece": ..., "value": [e, d]}]}. Planar
/// functions carry "vertices"; lifted ones set "lifted": true and use line
/// pieces; finite ones list their "domain".
Json to_json(const ConstructibleFn& f);
ConstructibleFn fn_from_json(const Json& j);

/// One "piece: value" line per part; "0" for the zero function.
std::string to_text(const ConstructibleFn& f);

Json to_json(const MapDesc& m);
MapDesc map_from_json(const Json& j);

Json to_json(const FiniteIncidence& inc);
FiniteIncidence incidence_from_json(const Json& j);

/// Complex format plus optional "weights" (one value per cell) and
/// "samples".
PolygonScene scene_from_json(const Json& j);

FiniteModel model_from_json(const Json& j);

Json to_json(const PresburgerSet& s);
/// Raw specs are normalized on the way in.
PresburgerSet presburger_from_json(const Json& j);

/// Parses text, rethrowing JSON syntax errors as RejectedInput.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace eulercalc
