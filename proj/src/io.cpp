#include "amalgam/io.hpp"

#include <fstream>

#include "amalgam/presets.hpp"
#include "amalgam/samples.hpp"

namespace amg::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& field_of(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Field field_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Field::finite(j.get<unsigned>());
    return Field::parse(string_of(j, where));
  } catch (const InputError& e) {
    fail(where, e.what());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

fs::path resolve(const fs::path& base, const std::string& ref) {
  const fs::path p(ref);
  return p.is_absolute() ? p : base / p;
}

bool looks_like_file(const std::string& ref) {
  return ref.find('/') != std::string::npos || ref.find(".json") != std::string::npos;
}

// A group reference: preset name or file.
GroupPtr group_from_reference(const std::string& ref, const fs::path& base) {
  if (!looks_like_file(ref)) return samples::group(ref);
  return read_group(resolve(base, ref));
}

int element_of(const Json& j, const FinitePoset* names, int n, const std::string& where) {
  if (j.is_number_integer()) {
    const int x = j.get<int>();
    if (x < 0 || x >= n) fail(where, "element " + std::to_string(x) + " out of range");
    return x;
  }
  if (j.is_string() && names) {
    try {
      return names->index(j.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an element index or name");
}

}  // namespace

Json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Scalar scalar_from_json(const Json& j, const Field& field, const std::string& where) {
  try {
    if (j.is_number_integer()) return field.from_int(j.get<long>());
    const Scalar s = Scalar::parse(string_of(j, where));
    if (s.is_rational()) return field.from_rational(s.rational());
    if (!(s.field() == field)) fail(where, "scalar '" + s.serialize() + "' is not in field " + field.name());
    return s;
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    fail(where, msg);
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

Matrix matrix_from_json(const Json& j, const Field& field, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a matrix (array of rows)");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    if (!row.is_array()) fail(where + "[" + std::to_string(i) + "]", "expected a row");
    Vector v;
    for (std::size_t c = 0; c < row.size(); ++c)
      v.push_back(scalar_from_json(row[c], field, where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
    if (!rows.empty() && v.size() != rows.front().size()) fail(where, "ragged matrix rows");
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(field, rows);
}

Json to_json(const Scalar& s) { return s.serialize(); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).serialize());
    out.push_back(std::move(row));
  }
  return out;
}

GroupPtr read_group(const fs::path& path) {
  const Json j = load_json(path);
  const std::string where = path.string();
  const Json& table = field_of(j, "table", where);
  if (!table.is_array()) fail(where + ".table", "expected an array of rows");
  std::vector<std::vector<int>> t;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string w = where + ".table[" + std::to_string(i) + "]";
    if (!table[i].is_array()) fail(w, "expected a row");
    std::vector<int> row;
    for (const auto& x : table[i]) row.push_back(int_of(x, w));
    t.push_back(std::move(row));
  }
  if (j.contains("order") && int_of(j["order"], where + ".order") != int(t.size()))
    fail(where + ".order", "does not match the table size");
  const std::string name = j.contains("name") ? string_of(j["name"], where + ".name") : path.stem().string();
  try {
    return std::make_shared<const FiniteGroup>(std::move(t), name);
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

GroupHom read_hom(const fs::path& path) {
  const Json j = load_json(path);
  const std::string where = path.string();
  const fs::path base = path.parent_path();
  GroupHom phi{group_from_reference(string_of(field_of(j, "source", where), where + ".source"), base),
               group_from_reference(string_of(field_of(j, "target", where), where + ".target"), base),
               {}};
  const Json& images = field_of(j, "images", where);
  if (!images.is_array()) fail(where + ".images", "expected an array");
  for (const auto& x : images) phi.images.push_back(int_of(x, where + ".images"));
  const HomReport r = check_hom(phi);
  if (!r.passes) fail(where, "not a homomorphism: " + r.message);
  return phi;
}

PresentationPtr read_presentation(const fs::path& path) {
  const Json j = load_json(path);
  const std::string where = path.string();
  const fs::path base = path.parent_path();
  GroupHom phi1 = read_hom(resolve(base, string_of(field_of(j, "phi1", where), where + ".phi1")));
  GroupHom phi2 = read_hom(resolve(base, string_of(field_of(j, "phi2", where), where + ".phi2")));
  const std::string name = j.contains("name") ? string_of(j["name"], where + ".name") : path.stem().string();
  try {
    return std::make_shared<const AmalgamPresentation>(std::move(phi1), std::move(phi2), name);
  } catch (const InputError& e) {
    fail(where, e.what());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

PresentationPtr presentation_from_reference(const std::string& ref, const fs::path& base) {
  if (!looks_like_file(ref)) return presets::presentation(ref);
  return read_presentation(resolve(base, ref));
}

Representation read_representation(const fs::path& path) {
  const Json j = load_json(path);
  const std::string where = path.string();
  const GroupPtr g = group_from_reference(string_of(field_of(j, "group", where), where + ".group"),
                                          path.parent_path());
  const Field k = field_from_json(field_of(j, "field", where), where + ".field");
  const int dim = int_of(field_of(j, "dimension", where), where + ".dimension");
  const Json& mats = field_of(j, "matrices", where);
  if (!mats.is_array() || int(mats.size()) != g->order())
    fail(where + ".matrices", "expected one matrix per group element (" + std::to_string(g->order()) + ")");
  std::vector<Matrix> ms;
  for (std::size_t e = 0; e < mats.size(); ++e) {
    const std::string w = where + ".matrices[" + std::to_string(e) + "]";
    Matrix m = matrix_from_json(mats[e], k, w);
    if (int(m.rows()) != dim || int(m.cols()) != dim) fail(w, "expected a " + std::to_string(dim) + "x" +
                                                                  std::to_string(dim) + " matrix");
    ms.push_back(std::move(m));
  }
  try {
    return Representation(g, k, std::move(ms));
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

Matrix read_matrix(const fs::path& path, const Field& expected) {
  const Json j = load_json(path);
  const std::string where = path.string();
  const Field k = j.contains("field") ? field_from_json(j["field"], where + ".field") : expected;
  if (!(k == expected)) fail(where + ".field", "expected field " + expected.name());
  return matrix_from_json(field_of(j, "matrix", where), k, where + ".matrix");
}

PosetPtr read_poset(const fs::path& path) {
  const Json j = load_json(path);
  const std::string where = path.string();
  const Json& el = field_of(j, "elements", where);
  std::vector<std::string> names;
  int n = 0;
  if (el.is_number_integer()) {
    n = el.get<int>();
  } else if (el.is_array()) {
    for (const auto& x : el) names.push_back(string_of(x, where + ".elements"));
    n = int(names.size());
  } else {
    fail(where + ".elements", "expected a count or a list of names");
  }
  if (n <= 0) fail(where + ".elements", "poset needs at least one element");
  std::unique_ptr<FinitePoset> named;
  if (!names.empty()) {
    try {
      named = std::make_unique<FinitePoset>(n, std::vector<std::pair<int, int>>{}, names);
    } catch (const InputError& e) {
      fail(where + ".elements", e.what());
    }
  }
  const Json& order = field_of(j, "order", where);
  if (!order.is_array()) fail(where + ".order", "expected a list of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::string w = where + ".order[" + std::to_string(i) + "]";
    if (!order[i].is_array() || order[i].size() != 2) fail(w, "expected a pair [lower, upper]");
    pairs.emplace_back(element_of(order[i][0], named.get(), n, w), element_of(order[i][1], named.get(), n, w));
  }
  try {
    return std::make_shared<const FinitePoset>(n, pairs, names);
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

PosetPtr poset_from_reference(const std::string& ref, const fs::path& base) {
  if (ref == "pseudo-circle") return models::pseudo_circle();
  if (ref == "hexagon") return models::hexagon_circle();
  if (ref == "wedge") return models::wedge();
  if (ref == "cone") return models::cone();
  if (!looks_like_file(ref)) throw InputError("unknown model '" + ref + "' (expected pseudo-circle, hexagon, wedge, cone or a file)");
  return read_poset(resolve(base, ref));
}

LocalSystem read_local_system(const fs::path& path) {
  const Json j = load_json(path);
  const std::string where = path.string();
  const PosetPtr p = poset_from_reference(string_of(field_of(j, "poset", where), where + ".poset"),
                                          path.parent_path());
  const Field k = field_from_json(field_of(j, "field", where), where + ".field");
  const int rank = int_of(field_of(j, "rank", where), where + ".rank");
  if (rank < 0) fail(where + ".rank", "must be nonnegative");
  const Json& rs = field_of(j, "restrictions", where);
  if (!rs.is_array()) fail(where + ".restrictions", "expected a list");
  std::map<LocalSystem::Key, Matrix> r;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string w = where + ".restrictions[" + std::to_string(i) + "]";
    const int lo = element_of(field_of(rs[i], "lower", w), p.get(), p->size(), w + ".lower");
    const int hi = element_of(field_of(rs[i], "upper", w), p.get(), p->size(), w + ".upper");
    if (!r.emplace(std::make_pair(lo, hi), matrix_from_json(field_of(rs[i], "matrix", w), k, w + ".matrix")).second)
      fail(w, "duplicate restriction");
  }
  try {
    return LocalSystem(p, k, std::size_t(rank), std::move(r));
  } catch (const InputError& e) {
    fail(where, e.what());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

namespace {

std::string sequence_key(const std::vector<int>& seq) {
  std::string s;
  for (int f : seq) s += char('0' + f);
  return s;
}

}  // namespace

TruncatedElement read_element(const fs::path& path) {
  const Json j = load_json(path);
  const std::string where = path.string();
  const PresentationPtr p = presentation_from_reference(
      string_of(field_of(j, "presentation", where), where + ".presentation"), path.parent_path());
  const int degree = int_of(field_of(j, "degree", where), where + ".degree");
  const Field k = field_from_json(field_of(j, "field", where), where + ".field");
  LayoutPtr layout;
  try {
    layout = std::make_shared<const CellLayout>(p, degree);
  } catch (const DomainError& e) {
    fail(where + ".degree", e.what());
  }
  const Json& comps = field_of(j, "components", where);
  if (!comps.is_object()) fail(where + ".components", "expected an object keyed by factor sequences");
  std::vector<Scalar> values(layout->size(), k.zero());
  for (std::size_t s = 0; s < layout->sequences().size(); ++s) {
    const std::string key = sequence_key(layout->sequences()[s]);
    const std::string w = where + ".components[\"" + key + "\"]";
    if (!comps.contains(key)) fail(w, "missing component");
    const Json& grid = comps[key];
    if (!grid.is_array() || grid.size() != layout->grid_size(s))
      fail(w, "expected " + std::to_string(layout->grid_size(s)) + " values");
    for (std::size_t c = 0; c < grid.size(); ++c)
      values[layout->offset(s) + c] = scalar_from_json(grid[c], k, w + "[" + std::to_string(c) + "]");
  }
  for (const auto& [key, value] : comps.items()) {
    bool known = false;
    for (const auto& seq : layout->sequences()) known = known || sequence_key(seq) == key;
    if (!known) fail(where + ".components[\"" + key + "\"]", "not a factor sequence of length <= degree");
  }
  return TruncatedElement(layout, k, std::move(values));
}

Json element_to_json(const TruncatedElement& f, const std::string& presentation_ref) {
  Json j;
  j["presentation"] = presentation_ref;
  j["degree"] = f.degree();
  j["field"] = f.field().name();
  Json comps = Json::object();
  const CellLayout& layout = *f.layout();
  for (std::size_t s = 0; s < layout.sequences().size(); ++s) {
    Json grid = Json::array();
    for (const Scalar& v : f.component(layout.sequences()[s])) grid.push_back(v.serialize());
    comps[sequence_key(layout.sequences()[s])] = std::move(grid);
  }
  j["components"] = std::move(comps);
  return j;
}

}  // namespace amg::io
