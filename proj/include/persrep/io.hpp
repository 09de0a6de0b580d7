#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "persrep/diagram.hpp"
#include "persrep/graded.hpp"
#include "persrep/linalg.hpp"
#include "persrep/monoid.hpp"

namespace persrep {

inline constexpr int kSchemaVersion = 1;

// {"kind":"nat"} | {"kind":"grid","k":2} | {"kind":"freeword","alphabet":["a","b"]} | {"kind":"qplus"}
nlohmann::json monoid_to_json(const GoodMonoid& m);
GoodMonoid monoid_from_json(const nlohmann::json& j);
// Accepts the JSON descriptor or the shorthands nat, grid:K, freeword:ab, qplus.
GoodMonoid parse_monoid_spec(const std::string& text);

// {"kind":"rational"|"integer"|"prime_field","p":5}
nlohmann::json ring_to_json(const Ring& r);
Ring ring_from_json(const nlohmann::json& j);

// integer (nat), integer array (grid), string (freeword), "p/q" string (qplus)
nlohmann::json degree_to_json(const GoodMonoid& m, const MonoidElement& g);
MonoidElement degree_from_json(const GoodMonoid& m, const nlohmann::json& j);
// Command-line degree: JSON text, or a bare integer / word / rational.
MonoidElement parse_degree(const GoodMonoid& m, const std::string& text);
// JSON array text, or comma-separated bare degrees.
std::vector<MonoidElement> parse_degree_list(const GoodMonoid& m, const std::string& text);

Scalar scalar_from_json(const Ring& r, const nlohmann::json& j);
nlohmann::json scalar_to_json(const Ring& r, const Scalar& s);

nlohmann::json presentation_to_json(const GradedPresentation& p);
// Parses and validates; throws ValidationError on any problem.
GradedPresentation presentation_from_json(const nlohmann::json& j);

nlohmann::json diagram_to_json(const FramedDiagram& d);
// Parses, synthesizes missing composite transitions, and validates.
FramedDiagram diagram_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
GradedPresentation load_presentation(const std::filesystem::path& path);
FramedDiagram load_diagram(const std::filesystem::path& path);

// Fixed-key serialization used for all CLI output: identical inputs give
// byte-identical text.
std::string dump(const nlohmann::json& j, bool pretty);

}  // namespace persrep
