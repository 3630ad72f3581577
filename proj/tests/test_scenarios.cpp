#include "doctest.h"

#include "amalgam/exactalg.hpp"
#include "amalgam/scenarios.hpp"

using namespace amg;

namespace {

ScenarioOptions opts(std::map<std::string, std::string> v) { return ScenarioOptions{std::move(v)}; }

bool every_value_has_a_source(const Report& r) {
  for (const auto& v : r.values)
    if (v.source.empty()) return false;
  for (const auto& c : r.children)
    if (!every_value_has_a_source(c)) return false;
  return true;
}

}  // namespace

TEST_CASE("every command passes with its defaults") {
  for (const auto& name : command_names()) {
    if (name == "suite") continue;
    CAPTURE(name);
    const Report r = run_command(name, {});
    CHECK(r.pass);
    CHECK(every_value_has_a_source(r));
  }
}

TEST_CASE("coherent dimension command reports the count") {
  const Report r = run_command("amalgam coherent-dim", opts({{"preset", "c2-star-c2"}, {"degree", "3"}}));
  CHECK(r.pass);
  bool found = false;
  for (const auto& v : r.values)
    if (v.name == "coherent dimension") found = v.value == 7;
  CHECK(found);
  CHECK(r.text().find("coherent dimension") != std::string::npos);
  CHECK(r.json()["values"].is_array());
}

TEST_CASE("output is deterministic for a fixed seed") {
  const auto o = opts({{"seed", "42"}, {"samples", "3"}});
  CHECK(run_command("topo svk", o).text() == run_command("topo svk", o).text());
  CHECK(run_command("frobplus check", o).json().dump() == run_command("frobplus check", o).json().dump());
}

TEST_CASE("bad options are input errors") {
  CHECK_THROWS_AS(run_command("amalgam nothing", {}), InputError);
  CHECK_THROWS_AS(run_command("amalgam coherent-dim", opts({{"degree", "two"}})), InputError);
  CHECK_THROWS_AS(run_command("amalgam coherent-dim", opts({{"preset", "nope"}})), InputError);
  CHECK_THROWS_AS(run_command("frobplus check", opts({{"field", "q"}})), InputError);
  CHECK_THROWS_AS(run_command("topo svk", opts({{"model", "pseudo-circle"}, {"u1", "a,c,d"}, {"u2", "b,c,d"}})),
                  InputError);
  CHECK_THROWS_AS(run_command("reps sl2-cert", opts({{"powers", "0"}})), InputError);
}

TEST_CASE("the suite runs every scenario and passes") {
  const Report r = run_suite({});
  CHECK(r.pass);
  CHECK(r.children.size() == suite_scenarios().size());
  for (const auto& c : r.children) {
    CAPTURE(c.scenario);
    CHECK(c.pass);
  }
  const Report one = run_suite(opts({{"only", "sl2"}}));
  CHECK(one.children.size() == 1);
  CHECK_THROWS_AS(run_suite_scenario("nothing", {}), InputError);
}
