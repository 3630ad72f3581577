#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "amalgam/coherent.hpp"
#include "amalgam/io.hpp"
#include "amalgam/presets.hpp"

using namespace amg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("amalgam-io-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("groups, homs and presentations from files") {
  TempDir d;
  d.write("c4.json", R"({"name": "C4", "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]})");
  d.write("inc.json", R"({"source": "c2", "target": "c4.json", "images": [0, 2]})");
  const auto pres = d.write("p.json", R"({"name": "mine", "phi1": "inc.json", "phi2": "inc.json"})");
  const auto p = io::read_presentation(pres);
  CHECK(p->name() == "mine");
  CHECK(p->g1()->order() == 4);
  CHECK(coherent_basis(p, 2, Field::rationals()).dimension() ==
        coherent_basis(presets::c4_amalg_c2_c4(), 2, Field::rationals()).dimension());
  d.write("bad.json", R"({"source": "c2", "target": "c4.json", "images": [0, 1]})");
  CHECK(message_of([&] { io::read_hom(d.path / "bad.json"); }).find("not a homomorphism") != std::string::npos);
}

TEST_CASE("errors name the file and the location") {
  TempDir d;
  const auto r = d.write("r.json", R"({"group": "c2", "field": "q", "dimension": 1, "matrices": [[["1"]], [["x"]]]})");
  const std::string msg = message_of([&] { io::read_representation(r); });
  CHECK(msg.find("r.json.matrices[1][0][0]") != std::string::npos);
  const auto s = d.write("s.json", "{ not json");
  CHECK(message_of([&] { io::load_json(s); }).find("s.json") != std::string::npos);
  CHECK(message_of([&] { io::load_json(d.path / "missing.json"); }).find("cannot open") != std::string::npos);
  const auto wrong = d.write("w.json", R"({"group": "c2", "field": "q", "dimension": 1, "matrices": [[["1"]], [["2"]]]})");
  CHECK_THROWS_AS(io::read_representation(wrong), InputError);
  const auto f = d.write("f.json", R"({"field": "5", "matrix": [["1", "2"]]})");
  CHECK(message_of([&] { io::read_matrix(f, Field::rationals()); }).find("expected field q") != std::string::npos);
  CHECK(io::read_matrix(f, Field::finite(5)).cols() == 2);
}

TEST_CASE("scalars in every supported spelling") {
  const Field q = Field::rationals(), f9 = Field::finite(3, 2);
  CHECK(io::scalar_from_json(io::Json(-3), q, "x") == q.from_int(-3));
  CHECK(io::scalar_from_json(io::Json("-3/4"), q, "x").rational() == mpq_class(-3, 4));
  const Scalar g = f9.generator();
  CHECK(io::scalar_from_json(io::to_json(g), f9, "x") == g);
  CHECK(io::scalar_from_json(io::Json("1/2"), Field::finite(5), "x") == Field::finite(5).from_int(3));
  CHECK_THROWS_AS(io::scalar_from_json(io::Json("1/5"), Field::finite(5), "x"), InputError);
  CHECK_THROWS_AS(io::scalar_from_json(io::Json("5^1:[1]"), q, "x"), InputError);
}

TEST_CASE("posets and local systems") {
  TempDir d;
  d.write("p.json", R"({"elements": ["a", "b", "c", "d"], "order": [["a","c"], ["a","d"], ["b","c"], [1, 3]]})");
  const auto p = io::read_poset(d.path / "p.json");
  CHECK(*p == *models::pseudo_circle());
  const auto l = d.write("l.json", R"({"poset": "p.json", "field": "7", "rank": 1,
      "restrictions": [{"lower": "a", "upper": "c", "matrix": [["1"]]}, {"lower": "a", "upper": "d", "matrix": [["1"]]},
                       {"lower": "b", "upper": "c", "matrix": [["1"]]}, {"lower": "b", "upper": "d", "matrix": [["3"]]}]})");
  const LocalSystem ls = io::read_local_system(l);
  CHECK(ls.rank() == 1);
  const auto m = monodromy(ls, 0);
  CHECK((m.loops[0](0, 0) == ls.field().from_int(3) || m.loops[0](0, 0) == ls.field().from_int(5)));
  d.write("cyc.json", R"({"elements": 2, "order": [[0, 1], [1, 0]]})");
  CHECK_THROWS_AS(io::read_poset(d.path / "cyc.json"), InputError);
  const auto bad = d.write("bad.json", R"({"poset": "p.json", "field": "7", "rank": 1,
      "restrictions": [{"lower": "a", "upper": "c", "matrix": [["0"]]}, {"lower": "a", "upper": "d", "matrix": [["1"]]},
                       {"lower": "b", "upper": "c", "matrix": [["1"]]}, {"lower": "b", "upper": "d", "matrix": [["1"]]}]})");
  CHECK_THROWS_AS(io::read_local_system(bad), InputError);
  CHECK_THROWS_AS(io::poset_from_reference("torus", d.path), InputError);
}

TEST_CASE("elements round trip through JSON") {
  TempDir d;
  const auto b = coherent_basis(presets::c2_star_c3(), 2, Field::finite(5));
  const TruncatedElement f = add(b.basis[1], scale(b.basis[3], Field::finite(5).from_int(2)));
  std::ofstream(d.path / "e.json") << io::element_to_json(f, "c2-star-c3").dump();
  const TruncatedElement g = io::read_element(d.path / "e.json");
  CHECK(g == f);
  CHECK(check_coherence(g).passes());
  d.write("short.json", R"({"presentation": "c2-star-c2", "degree": 1, "field": "q", "components": {"": ["1"]}})");
  CHECK(message_of([&] { io::read_element(d.path / "short.json"); }).find("missing component") != std::string::npos);
}
