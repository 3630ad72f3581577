#pragma once

// JSON file formats. Paths inside a file are resolved relative to that file.
//
//   group           {"name": "C3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}
//   hom             {"source": "h.json", "target": "g.json", "images": [0, 2]}
//   presentation    {"name": "...", "phi1": "hom1.json", "phi2": "hom2.json"}
//   representation  {"group": "g.json" | "c3" | ..., "field": "5", "dimension": 2,
//                    "matrices": [[["1","0"],["0","1"]], ...]}   one matrix per element
//   matrix          {"field": "q", "matrix": [["1","2"],["0","1"]]}
//   poset           {"elements": 4 | ["a","b",...], "order": [[0,2], ["a","c"], ...]}
//   local system    {"poset": "p.json" | "pseudo-circle" | ..., "field": "q", "rank": 1,
//                    "restrictions": [{"lower": "a", "upper": "c", "matrix": [["2"]]}, ...]}
//   element         {"presentation": "c2-star-c2" | "pres.json", "degree": 2, "field": "q",
//                    "components": {"": ["1"], "1": ["1","1"], "12": [...], ...}}
//
// Scalars are strings ("-3/4", "5^2:[1,1]") or integers.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "amalgam/coherent.hpp"
#include "amalgam/groups.hpp"
#include "amalgam/rep.hpp"
#include "amalgam/topo.hpp"

namespace amg::io {

using Json = nlohmann::ordered_json;

/// Throws InputError naming the file on I/O or syntax errors.
Json load_json(const std::filesystem::path& path);

Scalar scalar_from_json(const Json& j, const Field& field, const std::string& where);
Matrix matrix_from_json(const Json& j, const Field& field, const std::string& where);
Json to_json(const Scalar& s);
Json to_json(const Matrix& m);

GroupPtr read_group(const std::filesystem::path& path);
GroupHom read_hom(const std::filesystem::path& path);
PresentationPtr read_presentation(const std::filesystem::path& path);
Representation read_representation(const std::filesystem::path& path);
Matrix read_matrix(const std::filesystem::path& path, const Field& expected);
PosetPtr read_poset(const std::filesystem::path& path);
LocalSystem read_local_system(const std::filesystem::path& path);
TruncatedElement read_element(const std::filesystem::path& path);

/// A preset name or a presentation file.
PresentationPtr presentation_from_reference(const std::string& ref, const std::filesystem::path& base);
/// A model name (pseudo-circle, hexagon, wedge, cone) or a poset file.
PosetPtr poset_from_reference(const std::string& ref, const std::filesystem::path& base);

Json element_to_json(const TruncatedElement& f, const std::string& presentation_ref);

}  // namespace amg::io
