#pragma once

// Concrete syntax.
//
// Formulas use an ASCII grammar:
//
//   true false  !a  a & b  a | b  a -> b  <p>a  [p]a  fix(p)  Fix(p)  p ~ q
//   skip  ?(a)  p;q  p + q  p ^ q  p - q  p*
//   if a then p else q fi   while a do p od
//
// Propositions, loosest first: -> (right-assoc), |, &, then the prefix forms.
// Programs, loosest first: +, then ^ and - (left-assoc), then ;, then
// postfix *. Binary program and propositional operators other than -> nest to
// the left. A tie is a primary proposition; its operands are printed in
// parentheses unless they are primary programs. '#' starts a line comment.
//
// Models, tile sets, machines and tilings are JSON documents.

#include "pdl/semantics.hpp"
#include "pdl/syntax.hpp"
#include "pdl/tiling.hpp"
#include "pdl/tm.hpp"

#include <json.hpp>

#include <string>

namespace pdl {

struct SourceText {
    std::string text;
    std::string origin = "<inline>";
};

SourceText read_source(const std::string& path);

/// Throws ParseError.
Prop parse_prop(const SourceText& src);
Prog parse_prog(const SourceText& src);

std::string print_prop(const Prop& f);
std::string print_prog(const Prog& p);

/// Each decoder throws ParseError on malformed JSON, SchemaError on missing
/// or ill-typed fields and InvariantError when the decoded value is invalid.
KripkeModel parse_model(const SourceText& src);
TileSet parse_tileset(const SourceText& src);
TuringMachine parse_tm(const SourceText& src);
Tiling parse_tiling(const SourceText& src);
TmTileMeta parse_tm_meta(const SourceText& src);

nlohmann::json to_json(const KripkeModel& m);
nlohmann::json to_json(const TileSet& ts);
nlohmann::json to_json(const TuringMachine& tm);
nlohmann::json to_json(const Tiling& t);
nlohmann::json to_json(const TmTileMeta& meta);

KripkeModel model_from_json(const nlohmann::json& j);
TileSet tileset_from_json(const nlohmann::json& j);
TuringMachine tm_from_json(const nlohmann::json& j);
Tiling tiling_from_json(const nlohmann::json& j);
TmTileMeta tm_meta_from_json(const nlohmann::json& j);

/// Parses JSON text, mapping syntax errors to ParseError with a position.
nlohmann::json parse_json(const SourceText& src);

} // namespace pdl
