#include "amalgam/amalgam.h"

#include <cstring>
#include <optional>
#include <string>

#include "amalgam/coherent.hpp"
#include "amalgam/io.hpp"
#include "amalgam/presets.hpp"
#include "amalgam/scenarios.hpp"
#include "amalgam/topo.hpp"

struct amg_options {
  amg::ScenarioOptions options;
};

struct amg_report {
  amg::Report report;
  std::string text;
  std::string json;
};

struct amg_presentation {
  amg::PresentationPtr p;
};

struct amg_rep {
  amg::AmalgamRep rep;
};

struct amg_poset {
  amg::PosetPtr p;
};

struct amg_local_system {
  amg::LocalSystem l;
  std::vector<std::string> loop_entries;  // cached monodromy at point 0
  std::vector<amg::Matrix> loops;
};

namespace {

thread_local std::string last_error;

amg_status fail(amg_status code, const std::string& message) {
  last_error = message;
  return code;
}

// Runs body, mapping library exceptions onto status codes.
template <class F>
amg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const amg::InputError& e) {
    return fail(AMG_EINPUT, e.what());
  } catch (const amg::DomainError& e) {
    return fail(AMG_EINPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AMG_EINTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AMG_EINTERNAL, std::string("internal error: ") + e.what());
  } catch (...) {
    return fail(AMG_EINTERNAL, "internal error");
  }
}

#define AMG_REQUIRE(ptr)                                            \
  do {                                                              \
    if (!(ptr)) return fail(AMG_EINPUT, "null pointer: " #ptr);    \
  } while (0)

amg::Field field_of(const char* text) {
  try {
    return amg::Field::parse(text ? text : "q");
  } catch (const amg::InputError&) {
    throw;
  } catch (const amg::Error& e) {
    throw amg::InputError(e.what());
  }
}

}  // namespace

extern "C" {

const char* amg_version(void) { return "0.1.0"; }

const char* amg_last_error(void) { return last_error.c_str(); }

size_t amg_command_count(void) { return amg::command_names().size(); }

const char* amg_command_name(size_t index) {
  static const std::vector<std::string> names = amg::command_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

amg_status amg_options_new(amg_options** out) {
  AMG_REQUIRE(out);
  return guarded([&] {
    *out = new amg_options{};
    return AMG_OK;
  });
}

amg_status amg_options_set(amg_options* options, const char* key, const char* value) {
  AMG_REQUIRE(options);
  AMG_REQUIRE(key);
  AMG_REQUIRE(value);
  return guarded([&] {
    options->options.values[key] = value;
    return AMG_OK;
  });
}

void amg_options_free(amg_options* options) { delete options; }

amg_status amg_run(const char* command, const amg_options* options, amg_report** out) {
  AMG_REQUIRE(command);
  AMG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    static const amg::ScenarioOptions none;
    auto r = amg::run_command(command, options ? options->options : none);
    const bool pass = r.pass;
    *out = new amg_report{std::move(r), {}, {}};
    if (!pass) last_error = "one or more checks failed";
    return pass ? AMG_OK : AMG_FAIL;
  });
}

int amg_report_passed(const amg_report* report) { return report && report->report.pass ? 1 : 0; }

const char* amg_report_text(const amg_report* report) {
  if (!report) return nullptr;
  auto* r = const_cast<amg_report*>(report);
  if (r->text.empty()) r->text = r->report.text();
  return r->text.c_str();
}

const char* amg_report_json(const amg_report* report) {
  if (!report) return nullptr;
  auto* r = const_cast<amg_report*>(report);
  if (r->json.empty()) r->json = r->report.json().dump(2) + "\n";
  return r->json.c_str();
}

void amg_report_free(amg_report* report) { delete report; }

amg_status amg_presentation_open(const char* reference, amg_presentation** out) {
  AMG_REQUIRE(reference);
  AMG_REQUIRE(out);
  return guarded([&] {
    *out = new amg_presentation{amg::io::presentation_from_reference(reference, ".")};
    return AMG_OK;
  });
}

void amg_presentation_free(amg_presentation* p) { delete p; }

amg_status amg_coherent_dimension(const amg_presentation* p, int degree, const char* field, size_t* out) {
  AMG_REQUIRE(p);
  AMG_REQUIRE(out);
  return guarded([&] {
    *out = amg::coherent_basis(p->p, degree, field_of(field)).dimension();
    return AMG_OK;
  });
}

amg_status amg_rep_va(const char* a, const char* field, amg_rep** out) {
  AMG_REQUIRE(a);
  AMG_REQUIRE(out);
  return guarded([&] {
    const amg::Field f = field_of(field);
    mpq_class q;
    try {
      q = mpq_class(a);
    } catch (const std::invalid_argument&) {
      throw amg::InputError(std::string("cannot parse scalar '") + a + "'");
    }
    q.canonicalize();
    *out = new amg_rep{amg::va_rep(f.from_rational(q))};
    return AMG_OK;
  });
}

amg_status amg_rep_glue(const amg_presentation* p, const char* rep1, const char* rep2, const char* gluing,
                        amg_rep** out) {
  AMG_REQUIRE(p);
  AMG_REQUIRE(rep1);
  AMG_REQUIRE(rep2);
  AMG_REQUIRE(out);
  return guarded([&] {
    const auto v1 = amg::io::read_representation(rep1);
    const auto v2 = amg::io::read_representation(rep2);
    if (v1.group()->table() != p->p->g1()->table() || v2.group()->table() != p->p->g2()->table())
      throw amg::InputError("representation groups do not match the presentation");
    const amg::Matrix c =
        gluing ? amg::io::read_matrix(gluing, v1.field()) : amg::Matrix::identity(v1.field(), v1.dim());
    amg::GluedTriple t{p->p, amg::Representation(p->p->g1(), v1.field(), v1.matrices()),
                       amg::Representation(p->p->g2(), v2.field(), v2.matrices()), c};
    amg::validate_triple(t);
    *out = new amg_rep{amg::glue(t)};
    return AMG_OK;
  });
}

amg_status amg_rep_dimension(const amg_rep* rep, size_t* out) {
  AMG_REQUIRE(rep);
  AMG_REQUIRE(out);
  *out = rep->rep.dim();
  return AMG_OK;
}

amg_status amg_hom_dimension(const amg_rep* left, const amg_rep* right, size_t* out) {
  AMG_REQUIRE(left);
  AMG_REQUIRE(right);
  AMG_REQUIRE(out);
  return guarded([&] {
    if (left->rep.presentation() != right->rep.presentation() &&
        left->rep.presentation()->name() != right->rep.presentation()->name())
      throw amg::InputError("representations of different amalgams");
    *out = amg::hom_space(left->rep, right->rep).size();
    return AMG_OK;
  });
}

void amg_rep_free(amg_rep* rep) { delete rep; }

amg_status amg_poset_open(const char* reference, amg_poset** out) {
  AMG_REQUIRE(reference);
  AMG_REQUIRE(out);
  return guarded([&] {
    *out = new amg_poset{amg::io::poset_from_reference(reference, ".")};
    return AMG_OK;
  });
}

amg_status amg_poset_size(const amg_poset* p, size_t* out) {
  AMG_REQUIRE(p);
  AMG_REQUIRE(out);
  *out = size_t(p->p->size());
  return AMG_OK;
}

amg_status amg_pi1_generators(const amg_poset* p, size_t* out) {
  AMG_REQUIRE(p);
  AMG_REQUIRE(out);
  return guarded([&] {
    *out = amg::pi1_presentation(p->p, 0).generators.size();
    return AMG_OK;
  });
}

void amg_poset_free(amg_poset* p) { delete p; }

namespace {

amg_local_system* wrap(amg::LocalSystem l) {
  auto* h = new amg_local_system{std::move(l), {}, {}};
  h->loops = amg::monodromy(h->l, 0).loops;
  for (const auto& m : h->loops)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) h->loop_entries.push_back(m(i, j).pretty());
  return h;
}

}  // namespace

amg_status amg_local_system_open(const char* path, amg_local_system** out) {
  AMG_REQUIRE(path);
  AMG_REQUIRE(out);
  return guarded([&] {
    *out = wrap(amg::io::read_local_system(path));
    return AMG_OK;
  });
}

amg_status amg_local_system_from_loops(const amg_poset* p, const char* field, const char* const* loops, size_t count,
                                       amg_local_system** out) {
  AMG_REQUIRE(p);
  AMG_REQUIRE(out);
  if (count > 0) AMG_REQUIRE(loops);
  return guarded([&] {
    const amg::Field f = field_of(field);
    const auto pres = amg::pi1_presentation(p->p, 0);
    if (count != pres.generators.size())
      throw amg::InputError("expected " + std::to_string(pres.generators.size()) + " loop values");
    std::vector<amg::Matrix> ms;
    for (size_t k = 0; k < count; ++k) {
      AMG_REQUIRE(loops[k]);
      const amg::Scalar s = amg::io::scalar_from_json(std::string(loops[k]), f, "loops[" + std::to_string(k) + "]");
      ms.push_back(amg::Matrix::from_rows(f, {{s}}));
    }
    *out = wrap(amg::local_system_from_monodromy(pres, f, 1, ms));
    return AMG_OK;
  });
}

amg_status amg_local_system_rank(const amg_local_system* l, size_t* out) {
  AMG_REQUIRE(l);
  AMG_REQUIRE(out);
  *out = l->l.rank();
  return AMG_OK;
}

amg_status amg_monodromy_entry(const amg_local_system* l, size_t loop, size_t row, size_t col, const char** out) {
  AMG_REQUIRE(l);
  AMG_REQUIRE(out);
  const size_t r = l->l.rank();
  if (loop >= l->loops.size() || row >= r || col >= r) return fail(AMG_EINPUT, "monodromy index out of range");
  *out = l->loop_entries[(loop * r + row) * r + col].c_str();
  return AMG_OK;
}

amg_status amg_local_hom_dimension(const amg_local_system* left, const amg_local_system* right, size_t* out) {
  AMG_REQUIRE(left);
  AMG_REQUIRE(right);
  AMG_REQUIRE(out);
  return guarded([&] {
    *out = amg::hom_space(left->l, right->l).size();
    return AMG_OK;
  });
}

void amg_local_system_free(amg_local_system* l) { delete l; }

}  // extern "C"
