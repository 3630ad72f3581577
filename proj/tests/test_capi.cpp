// Uses the public C header only.
#include "doctest.h"

#include <string>

#include "amalgam/amalgam.h"

TEST_CASE("version and command table") {
  CHECK(std::string(amg_version()).size() > 0);
  REQUIRE(amg_command_count() > 0);
  bool has_suite = false;
  for (size_t k = 0; k < amg_command_count(); ++k) has_suite = has_suite || std::string(amg_command_name(k)) == "suite";
  CHECK(has_suite);
  CHECK(amg_command_name(amg_command_count()) == nullptr);
}

TEST_CASE("running a command through options") {
  amg_options* o = nullptr;
  REQUIRE(amg_options_new(&o) == AMG_OK);
  CHECK(amg_options_set(o, "preset", "c2-star-c2") == AMG_OK);
  CHECK(amg_options_set(o, "degree", "3") == AMG_OK);
  amg_report* r = nullptr;
  REQUIRE(amg_run("amalgam coherent-dim", o, &r) == AMG_OK);
  CHECK(amg_report_passed(r) == 1);
  const std::string text = amg_report_text(r);
  CHECK(text.find("coherent dimension") != std::string::npos);
  CHECK(text.find("verdict: PASS") != std::string::npos);
  CHECK(std::string(amg_report_json(r)).front() == '{');
  amg_report_free(r);

  CHECK(amg_options_set(o, "preset", "no-such-preset") == AMG_OK);
  r = nullptr;
  CHECK(amg_run("amalgam coherent-dim", o, &r) == AMG_EINPUT);
  CHECK(r == nullptr);
  CHECK(std::string(amg_last_error()).find("no-such-preset") != std::string::npos);
  amg_options_free(o);

  CHECK(amg_run("nothing", nullptr, &r) == AMG_EINPUT);
  REQUIRE(amg_run("reps sl2-cert", nullptr, &r) == AMG_OK);
  amg_report_free(r);
}

TEST_CASE("null pointers are input errors") {
  size_t n = 0;
  CHECK(amg_options_new(nullptr) == AMG_EINPUT);
  CHECK(amg_run("suite", nullptr, nullptr) == AMG_EINPUT);
  CHECK(amg_coherent_dimension(nullptr, 2, "q", &n) == AMG_EINPUT);
  CHECK(std::string(amg_last_error()).find("null") != std::string::npos);
  amg_options_free(nullptr);
  amg_report_free(nullptr);
  amg_presentation_free(nullptr);
  amg_rep_free(nullptr);
  amg_poset_free(nullptr);
  amg_local_system_free(nullptr);
}

TEST_CASE("presentations and representations") {
  amg_presentation* p = nullptr;
  REQUIRE(amg_presentation_open("c2-star-c2", &p) == AMG_OK);
  size_t dim = 0;
  for (int n = 1; n <= 3; ++n) {
    REQUIRE(amg_coherent_dimension(p, n, "q", &dim) == AMG_OK);
    CHECK(dim == size_t(2 * n + 1));
  }
  CHECK(amg_coherent_dimension(p, 2, "6", &dim) == AMG_EINPUT);
  CHECK(amg_coherent_dimension(p, 99, "q", &dim) == AMG_EINPUT);
  amg_presentation_free(p);

  amg_rep *a = nullptr, *b = nullptr;
  REQUIRE(amg_rep_va("2", "q", &a) == AMG_OK);
  REQUIRE(amg_rep_va("3", "q", &b) == AMG_OK);
  CHECK(amg_rep_dimension(a, &dim) == AMG_OK);
  CHECK(dim == 2);
  CHECK(amg_hom_dimension(a, a, &dim) == AMG_OK);
  CHECK(dim == 1);
  CHECK(amg_hom_dimension(a, b, &dim) == AMG_OK);
  CHECK(dim == 0);
  amg_rep* bad = nullptr;
  CHECK(amg_rep_va("1", "q", &bad) == AMG_EINPUT);
  CHECK(bad == nullptr);
  amg_rep_free(a);
  amg_rep_free(b);
}

TEST_CASE("posets and local systems") {
  amg_poset* w = nullptr;
  REQUIRE(amg_poset_open("wedge", &w) == AMG_OK);
  size_t n = 0;
  CHECK(amg_poset_size(w, &n) == AMG_OK);
  CHECK(n == 7);
  CHECK(amg_pi1_generators(w, &n) == AMG_OK);
  CHECK(n == 2);
  const char* loops[] = {"2", "3"};
  amg_local_system *l = nullptr, *m = nullptr;
  REQUIRE(amg_local_system_from_loops(w, "7", loops, 2, &l) == AMG_OK);
  const char* same[] = {"2", "2"};
  REQUIRE(amg_local_system_from_loops(w, "7", same, 2, &m) == AMG_OK);
  CHECK(amg_local_system_rank(l, &n) == AMG_OK);
  CHECK(n == 1);
  const char* entry = nullptr;
  REQUIRE(amg_monodromy_entry(l, 1, 0, 0, &entry) == AMG_OK);
  CHECK(std::string(entry) == "3");
  CHECK(amg_monodromy_entry(l, 2, 0, 0, &entry) == AMG_EINPUT);
  CHECK(amg_local_hom_dimension(l, l, &n) == AMG_OK);
  CHECK(n == 1);
  CHECK(amg_local_hom_dimension(l, m, &n) == AMG_OK);
  CHECK(n == 0);
  CHECK(amg_local_system_from_loops(w, "7", loops, 1, &m) == AMG_EINPUT);
  const char* singular[] = {"0", "1"};
  CHECK(amg_local_system_from_loops(w, "7", singular, 2, &m) == AMG_EINPUT);
  amg_local_system_free(l);
  amg_local_system_free(m);
  amg_poset_free(w);
  amg_poset* x = nullptr;
  CHECK(amg_poset_open("torus", &x) == AMG_EINPUT);
  CHECK(amg_local_system_open("/nonexistent/l.json", &l) == AMG_EINPUT);
}
