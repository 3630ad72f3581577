#include "amalgam/scenarios.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "amalgam/coherent.hpp"
#include "amalgam/frobplus.hpp"
#include "amalgam/hopf.hpp"
#include "amalgam/io.hpp"
#include "amalgam/presets.hpp"
#include "amalgam/rep.hpp"
#include "amalgam/samples.hpp"
#include "amalgam/topo.hpp"

namespace amg {

std::string ScenarioOptions::get(const std::string& key, const std::string& fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

long ScenarioOptions::get_int(const std::string& key, long fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InputError("option " + key + ": expected an integer, got '" + it->second + "'");
  }
}

namespace {

using Json = nlohmann::ordered_json;

// ------------------------------------------------------------------ helpers

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Field parse_field(const std::string& text) {
  try {
    return Field::parse(text);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError("field '" + text + "': " + e.what());
  }
}

Field field_option(const ScenarioOptions& o, const std::string& fallback) {
  return parse_field(o.get("field", fallback));
}

Scalar parse_scalar(const std::string& text, const Field& field) {
  if (text.find(':') != std::string::npos) {
    Scalar s = Scalar::parse(text);
    if (!(s.field() == field)) throw InputError("scalar '" + text + "' is not in " + field.name());
    return s;
  }
  mpq_class q;
  try {
    q = mpq_class(text);
  } catch (const std::invalid_argument&) {
    throw InputError("cannot parse scalar '" + text + "'");
  }
  q.canonicalize();
  try {
    return field.from_rational(q);
  } catch (const DomainError& e) {
    throw InputError("scalar '" + text + "' over " + field.name() + ": " + e.what());
  }
}

PresentationPtr presentation_option(const ScenarioOptions& o) {
  if (o.has("presentation")) return io::read_presentation(o.get("presentation", ""));
  return presets::presentation(o.get("preset", "c2-star-c2"));
}

Json matrices_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(io::to_json(m));
  return out;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order() == b.order() && a.table() == b.table();
}

// Number of classes of cells under the equalities of the coherence system.
std::size_t cell_classes(const CellLayout& layout) {
  std::vector<std::size_t> parent(layout.size());
  std::iota(parent.begin(), parent.end(), std::size_t(0));
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : coherence_conditions(layout)) parent[find(c.lhs)] = find(c.rhs);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++classes;
  return classes;
}

bool bijective(const GroupHom& phi) { return phi.injective() && phi.source->order() == phi.target->order(); }

// Coherent dimension next to its two independent counts.
void coherent_dimension_into(Report& r, const PresentationPtr& p, int degree, const Field& field,
                             const std::string& prefix = "") {
  const auto basis = coherent_basis(p, degree, field);
  const std::size_t dim = basis.dimension();
  const std::size_t classes = cell_classes(*basis.layout);
  r.add(prefix + "coherent dimension", dim, "exact kernel of the coherence system");
  r.add(prefix + "cell classes", classes, "union-find over coherence equalities");
  r.check(prefix + "kernel matches cell classes", dim == classes, "comparison");
  if (!p->has_normal_forms()) {
    r.note("structure maps are not injective; element count skipped");
    return;
  }
  const std::size_t words = enumerate_reduced_words(*p, degree).size();
  r.add(prefix + "elements of length <= N", words, "reduced-word enumeration");
  if (p->h()->order() == 1 || (bijective(p->phi1()) && bijective(p->phi2()))) {
    r.check(prefix + "dimension equals element count", dim == words, "comparison");
  } else {
    r.check(prefix + "dimension bounds element count", dim >= words, "restriction of functions on the group");
    if (dim != words)
      r.note("with H a proper nontrivial subgroup the truncation keeps coherent functions that do not come "
             "from group elements of length <= N");
  }
}

// ------------------------------------------------------------ hopf checks

std::vector<std::vector<TruncatedElement>> coefficient_elements(const AmalgamRep& rho, int degree) {
  std::vector<std::vector<TruncatedElement>> f(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j) f[i].push_back(matrix_coefficient_element(rho, i, j, degree));
  return f;
}

// f_ij(uv) = sum_k f_ik(u) f_kj(v) on every pair of component grids.
bool coefficient_coproduct_holds(const std::vector<std::vector<TruncatedElement>>& f) {
  const auto& layout = *f[0][0].layout();
  const Field& field = f[0][0].field();
  const std::size_t d = f.size();
  for (const auto& a : layout.sequences())
    for (const auto& b : layout.sequences()) {
      if (a.size() + b.size() > std::size_t(layout.degree())) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const Matrix got = comultiply_component(f[i][j], a, b);
          Matrix want(field, got.rows(), got.cols());
          for (std::size_t k = 0; k < d; ++k) {
            const auto left = f[i][k].component(a);
            const auto right = f[k][j].component(b);
            for (std::size_t r = 0; r < want.rows(); ++r)
              for (std::size_t c = 0; c < want.cols(); ++c) want(r, c) += left[r] * right[c];
          }
          if (!(got == want)) return false;
        }
    }
  return true;
}

void factor_algebras_into(Report& r, const AmalgamPresentation& p, const Field& field, const std::string& prefix = "") {
  const FunctionHopfAlgebra k1(p.g1(), field), k2(p.g2(), field), kh(p.h(), field);
  bool axioms = verify_hopf_axioms(k1).passes() && verify_hopf_axioms(k2).passes() && verify_hopf_axioms(kh).passes();
  r.check(prefix + "function algebra axioms (G1, G2, H)", axioms, "exhaustive check on delta bases");
  const HopfMorphism a1{&k1, &kh, dualize_hom(p.phi1(), field)};
  const HopfMorphism a2{&k2, &kh, dualize_hom(p.phi2(), field)};
  r.check(prefix + "restriction maps are Hopf morphisms", check_hopf_morphism(a1).passes() && check_hopf_morphism(a2).passes(),
          "exhaustive check on delta bases");
}

struct ElementChecks {
  bool coherent = true;
  bool hopf_identity = true;
  bool antipode_coherent = true;
  bool antipode_involutive = true;
  std::size_t identities = 0;
};

ElementChecks check_element(const TruncatedElement& f, Report& r, const std::string& label) {
  ElementChecks out;
  const auto coh = check_coherence(f);
  out.coherent = coh.passes();
  if (!out.coherent) {
    const auto& w = *coh.first_violation;
    r.witness({{"element", label}, {"coherence", to_string(w.kind)}, {"slot", w.slot},
               {"lhs", io::to_json(w.lhs_value)}, {"rhs", io::to_json(w.rhs_value)}});
  }
  const auto id = hopf_identity_check(f);
  out.hopf_identity = id.passes;
  out.identities = id.checked;
  if (!id.passes) r.witness({{"element", label}, {"failure", "f(w^-1 w) != f(empty)"}});
  const auto s = antipode(f);
  out.antipode_coherent = check_coherence(s).passes();
  out.antipode_involutive = antipode(s) == f;
  return out;
}

struct ElementSet {
  std::vector<std::pair<std::string, TruncatedElement>> elements;
  std::optional<AmalgamRep> rho;
  std::string description;
};

ElementSet element_option(const ScenarioOptions& o, int fallback_degree) {
  ElementSet out;
  if (o.has("element")) {
    const std::string path = o.get("element", "");
    out.elements.emplace_back(path, io::read_element(path));
    out.description = path;
    return out;
  }
  const Field field = field_option(o, "q");
  const std::string text = o.get("va", "2");
  const Scalar a = parse_scalar(text, field);
  const int degree = int(o.get_int("degree", fallback_degree));
  out.rho = va_rep(a);
  out.description = "V_" + a.pretty() + " over " + field.name();
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  if (o.has("entry")) {
    const auto parts = split_list(o.get("entry", ""));
    if (parts.size() != 2) throw InputError("option entry: expected 'i,j' (1-based)");
    ScenarioOptions tmp;
    tmp.values = {{"i", parts[0]}, {"j", parts[1]}};
    const long i = tmp.get_int("i", 0), j = tmp.get_int("j", 0);
    if (i < 1 || j < 1 || i > long(out.rho->dim()) || j > long(out.rho->dim()))
      throw InputError("option entry: index out of range");
    entries.emplace_back(std::size_t(i - 1), std::size_t(j - 1));
  } else {
    for (std::size_t i = 0; i < out.rho->dim(); ++i)
      for (std::size_t j = 0; j < out.rho->dim(); ++j) entries.emplace_back(i, j);
  }
  for (const auto& [i, j] : entries)
    out.elements.emplace_back("f" + std::to_string(i + 1) + std::to_string(j + 1),
                              matrix_coefficient_element(*out.rho, i, j, degree));
  return out;
}

// ------------------------------------------------------------- amalgam

Report amalgam_coherent_dim(const ScenarioOptions& o) {
  Report r;
  r.scenario = "amalgam coherent-dim";
  const auto p = presentation_option(o);
  const Field field = field_option(o, "q");
  const int degree = int(o.get_int("degree", 2));
  r.add("presentation", p->name(), "input");
  r.add("field", field.name(), "input");
  r.add("degree", degree, "input");
  coherent_dimension_into(r, p, degree, field);
  return r;
}

Report amalgam_verify_hopf(const ScenarioOptions& o) {
  Report r;
  r.scenario = "amalgam verify-hopf";
  const auto set = element_option(o, 4);
  const auto& first = set.elements.front().second;
  r.add("elements", set.description, "input");
  r.add("degree", first.degree(), "input");
  factor_algebras_into(r, *first.presentation(), first.field());
  ElementChecks all;
  for (const auto& [label, f] : set.elements) {
    const auto c = check_element(f, r, label);
    all.coherent = all.coherent && c.coherent;
    all.hopf_identity = all.hopf_identity && c.hopf_identity;
    all.antipode_coherent = all.antipode_coherent && c.antipode_coherent;
    all.antipode_involutive = all.antipode_involutive && c.antipode_involutive;
    all.identities += c.identities;
  }
  r.add("elements checked", set.elements.size(), "count");
  r.check("coherent", all.coherent, "scan of every coherence condition");
  r.add("identities f(w^-1 w) = f(empty) checked", all.identities, "count");
  r.check("antipode identity", all.hopf_identity, "palindromic words w^-1 w");
  r.check("antipode preserves coherence", all.antipode_coherent, "scan of every coherence condition");
  r.check("S^2 = id", all.antipode_involutive, "exact comparison");
  if (set.rho && !o.has("entry")) {
    r.check("coproduct of matrix coefficients", coefficient_coproduct_holds(coefficient_elements(
                                                    *set.rho, first.degree())),
            "matrix product rule f_ij(uv) = sum_k f_ik(u) f_kj(v)");
  }
  return r;
}

Report amalgam_rank(const ScenarioOptions& o) {
  Report r;
  r.scenario = "amalgam rank";
  const auto set = element_option(o, 4);
  r.add("elements", set.description, "input");
  std::optional<long> bound;
  if (o.has("bound")) bound = o.get_int("bound", 0);
  else if (set.rho) bound = long(set.rho->dim());
  if (bound) r.add("bound", *bound, o.has("bound") ? "input" : "representation dimension");
  for (const auto& [label, f] : set.elements) {
    const auto rep = representativity_rank(f);
    r.add("rank " + label, rep.rank, "rank of evaluation blocks f(u.v)");
    r.add("rank by split " + label, Json(rep.rank_by_split), "rank of evaluation blocks f(u.v)");
    const auto split = evaluation_matrix(f, rep.best_split);
    const auto fac = rank_factorization(split.matrix);
    r.check("factorization " + label, fac.left * fac.right == split.matrix && fac.left.cols() == split.rank,
            "pivot-column factorization");
    if (bound) r.check("rank within bound " + label, long(rep.rank) <= *bound, "comparison");
  }
  return r;
}

// ------------------------------------------------------------------ reps

GluedTriple triple_option(const ScenarioOptions& o) {
  if (!o.has("rep1") && !o.has("rep2")) {
    const Field field = field_option(o, "q");
    return va_triple(parse_scalar(o.get("va", "2"), field));
  }
  if (!o.has("rep1") || !o.has("rep2")) throw InputError("reps glue needs both rep1 and rep2");
  const auto p = presentation_option(o);
  Representation v1 = io::read_representation(o.get("rep1", ""));
  Representation v2 = io::read_representation(o.get("rep2", ""));
  if (!same_group(*v1.group(), *p->g1())) throw InputError("rep1 is not a representation of G1 of " + p->name());
  if (!same_group(*v2.group(), *p->g2())) throw InputError("rep2 is not a representation of G2 of " + p->name());
  if (!(v1.field() == v2.field()) || v1.dim() != v2.dim())
    throw InputError("rep1 and rep2 must share field and dimension");
  const Matrix c = o.has("gluing") ? io::read_matrix(o.get("gluing", ""), v1.field())
                                   : Matrix::identity(v1.field(), v1.dim());
  Representation w1(p->g1(), v1.field(), v1.matrices());
  Representation w2(p->g2(), v2.field(), v2.matrices());
  GluedTriple t{p, std::move(w1), std::move(w2), c};
  try {
    validate_triple(t);
  } catch (const DomainError& e) {
    throw InputError(std::string("gluing data: ") + e.what());
  }
  return t;
}

void glue_round_trip_into(Report& r, const GluedTriple& t, const std::string& prefix = "") {
  const AmalgamRep rho = glue(t);
  const GluedTriple s = split(rho);
  const Matrix id = Matrix::identity(t.v1.field(), t.v1.dim());
  const bool witness = is_triple_morphism(s, t, id, t.c) && t.c.inverse().has_value();
  const AmalgamRep again = glue(s);
  const bool round = again.factor(1).matrices() == rho.factor(1).matrices() &&
                     again.factor(2).matrices() == rho.factor(2).matrices();
  r.check(prefix + "split(glue(t)) isomorphic to t", witness, "explicit morphism (I, c)");
  r.check(prefix + "glue(split(rho)) = rho", round, "exact comparison");
}

Report reps_glue(const ScenarioOptions& o) {
  Report r;
  r.scenario = "reps glue";
  const GluedTriple t = triple_option(o);
  r.add("presentation", t.presentation->name(), "input");
  r.add("field", t.v1.field().name(), "input");
  r.add("dimension", t.v1.dim(), "input");
  glue_round_trip_into(r, t);
  const AmalgamRep rho = glue(t);
  const auto end_rho = hom_space(rho, rho).size();
  const auto end_t = fibre_product_homs(t, t).size();
  r.add("dim End(glued)", end_rho, "exact intertwiner kernel");
  r.add("dim End(triple)", end_t, "exact kernel on pairs (a, b)");
  r.check("endomorphism dimensions agree", end_rho == end_t, "comparison");
  const auto letters = t.presentation->g1()->order() + t.presentation->g2()->order();
  r.add("letter matrices", letters, "count");
  return r;
}

Report reps_hom(const ScenarioOptions& o) {
  Report r;
  r.scenario = "reps hom";
  if (o.has("left") || o.has("right")) {
    if (!o.has("left") || !o.has("right")) throw InputError("reps hom needs both left and right");
    const auto v = io::read_representation(o.get("left", ""));
    const auto w = io::read_representation(o.get("right", ""));
    if (!same_group(*v.group(), *w.group())) throw InputError("left and right are over different groups");
    if (!(v.field() == w.field())) throw InputError("left and right are over different fields");
    const auto basis = hom_space(v, w);
    r.add("dim Hom", basis.size(), "exact intertwiner kernel");
    bool all = true;
    for (const auto& f : basis) all = all && is_intertwiner(f, v, w);
    r.check("basis elements intertwine", all, "direct substitution");
    return r;
  }
  const Field field = field_option(o, "q");
  const Scalar a = parse_scalar(o.get("va", "2"), field);
  const Scalar b = parse_scalar(o.get("vb", "3"), field);
  const auto ra = va_rep(a), rb = va_rep(b);
  const auto ta = va_triple(a), tb = va_triple(b);
  r.add("left", "V_" + a.pretty(), "input");
  r.add("right", "V_" + b.pretty(), "input");
  r.add("field", field.name(), "input");
  const std::size_t direct = hom_space(ra, rb).size();
  const std::size_t fibre = fibre_product_homs(ta, tb).size();
  r.add("dim Hom (amalgam)", direct, "exact intertwiner kernel");
  r.add("dim Hom (fibre product)", fibre, "exact kernel on pairs (a, b)");
  r.check("dimensions agree", direct == fibre, "comparison");
  const std::size_t expected = a == b ? 1 : 0;
  r.add("expected", expected, "irreducible and distinguished by the eigenlines");
  r.check("matches expected", direct == expected, "comparison");
  return r;
}

Report reps_sl2_cert(const ScenarioOptions& o) {
  Report r;
  r.scenario = "reps sl2-cert";
  const long max_power = o.get_int("powers", 12);
  if (max_power < 1 || max_power > 64) throw InputError("option powers: expected 1..64");
  const auto cert = sl2_infinite_order_certificate(unsigned(max_power));
  r.add("product", io::to_json(cert.product), "exact matrix product");
  r.add("trace", io::to_json(cert.trace), "exact matrix product");
  r.check("g4 acts with order 4", cert.g4_order_4, "exact matrix powers");
  r.check("g6 acts with order 6", cert.g6_order_6, "exact matrix powers");
  r.check("product is not +-I", !cert.is_plus_minus_identity, "exact comparison");
  r.check("(M - sI)^2 = 0 with s = trace/2", cert.unipotent_part_nilpotent, "exact matrix product");
  const bool none = std::none_of(cert.power_is_identity.begin(), cert.power_is_identity.end(), [](bool b) { return b; });
  r.check("no power up to " + std::to_string(max_power) + " is I", none, "exact matrix powers");
  r.check("infinite order", cert.infinite_order, "nontrivial unipotent part");
  return r;
}

// -------------------------------------------------------------- frobplus

Field finite_field_option(const ScenarioOptions& o, const std::string& fallback) {
  const Field f = field_option(o, fallback);
  if (f.is_rational()) throw InputError("Fr+ needs a finite field (got q)");
  return f;
}

std::vector<samples::NamedRep> corpus_option(const ScenarioOptions& o, const Field& field, const std::string& group) {
  if (o.has("rep")) {
    auto v = io::read_representation(o.get("rep", ""));
    if (!(v.field() == field)) throw InputError("representation field differs from --field");
    return {{o.get("rep", ""), std::move(v)}};
  }
  return samples::rep_corpus(group, field);
}

Scalar sample_scalar(const Field& field) {
  if (field.degree() > 1) return field.generator() + field.one();
  return field.from_int(field.characteristic() > 2 ? 2 : 1);
}

struct FrobTally {
  std::size_t reps = 0;
  std::size_t morphisms = 0;
  bool dims = true, t_ok = true, naturality = true, action_is_twist = true;
  bool semilinear = true, functorial = true, additive = true, unital = true;
};

void frob_rep_checks(const samples::NamedRep& nr, unsigned samples, unsigned seed, FrobTally& tally, Report& r,
                     Json& dims) {
  const Representation& v = nr.rep;
  const Field& field = v.field();
  const unsigned p = field.characteristic();
  const FrPlusResult fr = fr_plus(v);
  const TMapReport t = t_map(fr.space, samples, seed);
  ++tally.reps;
  dims.push_back({{"rep", nr.name}, {"dim", v.dim()}, {"Fr+ dim", fr.space.dim()},
                  {"coinvariants", fr.space.coinvariant_dim()}});
  auto fail = [&](bool& flag, bool ok, const std::string& what) {
    if (ok) return;
    flag = false;
    r.witness({{"rep", nr.name}, {"field", field.name()}, {"failure", what}});
  };
  fail(tally.dims, fr.space.dim() == v.dim(), "dim Fr+ V != dim V");
  fail(tally.t_ok, t.bijective && t.additive && t.semilinear && t.matches_twisted_matrix, "t map");
  if (!t.bijective) return;
  const Matrix& tm = t.matrix;
  const Matrix tinv = *tm.inverse();
  bool twist = true;
  for (int g = 0; g < v.group()->order(); ++g)
    twist = twist && fr.action(g) == tm * frobenius(v(g)) * tinv;
  fail(tally.action_is_twist, twist, "induced action differs from the twist");

  const auto ends = hom_space(v, v);
  const std::size_t use = std::min<std::size_t>(ends.size(), 4);
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < use; ++k) images.push_back(fr_plus_morphism(fr, fr, v, v, ends[k]));
  const Scalar lambda = sample_scalar(field);
  const Scalar lambda_p = lambda.pow(p);
  for (std::size_t k = 0; k < use; ++k) {
    ++tally.morphisms;
    fail(tally.naturality, tm * frobenius(ends[k]) == images[k] * tm, "t not natural");
    fail(tally.semilinear, fr_plus_morphism(fr, fr, v, v, ends[k].scaled(lambda)) == images[k].scaled(lambda_p),
         "Fr+(lambda phi) != lambda^p Fr+(phi)");
    for (std::size_t l = 0; l < use; ++l) {
      fail(tally.functorial, fr_plus_morphism(fr, fr, v, v, ends[k] * ends[l]) == images[k] * images[l],
           "Fr+(phi psi) != Fr+(phi) Fr+(psi)");
      fail(tally.additive, fr_plus_morphism(fr, fr, v, v, ends[k] + ends[l]) == images[k] + images[l],
           "Fr+(phi + psi) != Fr+(phi) + Fr+(psi)");
    }
  }
  const Matrix id = Matrix::identity(field, v.dim());
  fail(tally.unital, fr_plus_morphism(fr, fr, v, v, id) == Matrix::identity(field, fr.space.dim()),
       "Fr+(id) != id");
}

void frob_tally_into(Report& r, const FrobTally& t, const Json& dims) {
  r.add("representations checked", t.reps, "count");
  r.add("endomorphisms checked", t.morphisms, "count");
  r.add("dimensions", dims, "exact image of invariants in coinvariants");
  r.check("dim Fr+ V = dim V", t.dims, "exact image of invariants in coinvariants");
  r.check("t bijective, additive, p-semilinear", t.t_ok, "basis, pairwise sums and seeded samples");
  r.check("induced action is the Frobenius twist", t.action_is_twist, "conjugation by the matrix of t");
  r.check("t natural in morphisms", t.naturality, "exact matrix identity");
  r.check("Fr+(lambda phi) = lambda^p Fr+(phi)", t.semilinear, "exact matrix identity");
  r.check("Fr+ preserves composition", t.functorial, "exact matrix identity");
  r.check("Fr+ is additive", t.additive, "exact matrix identity");
  r.check("Fr+(id) = id", t.unital, "exact matrix identity");
}

void exactness_into(Report& r, const Field& field) {
  const auto s = samples::s3_permutation_filtration(field);
  const auto e = exactness_probe(s);
  r.add("filtration over " + field.name(), Json::array({e.dim_a, e.dim_v, e.dim_b}), "exact image of invariants");
  r.check("Fr+ of the S3 permutation filtration exact over " + field.name(), e.exact(),
          "injectivity, surjectivity and image = kernel by rank");
}

Report frobplus_check(const ScenarioOptions& o) {
  Report r;
  r.scenario = "frobplus check";
  const Field field = finite_field_option(o, "2");
  const std::string group = o.get("group", "s3");
  const auto corpus = corpus_option(o, field, group);
  r.add("field", field.name(), "input");
  r.add("group", o.has("rep") ? corpus.front().rep.group()->name() : group, "input");
  FrobTally tally;
  Json dims = Json::array();
  const unsigned seed = unsigned(o.get_int("seed", 1));
  const unsigned n = unsigned(o.get_int("samples", 20));
  for (const auto& nr : corpus) frob_rep_checks(nr, n, seed, tally, r, dims);
  frob_tally_into(r, tally, dims);
  if (!o.has("rep") && group == "s3") exactness_into(r, field);
  return r;
}

void faithfulness_into(Report& r, const std::vector<samples::NamedRep>& corpus, const std::string& label) {
  std::size_t pairs = 0, bij = 0;
  for (const auto& v : corpus)
    for (const auto& w : corpus) {
      const auto f = faithfulness_probe(v.rep, w.rep);
      ++pairs;
      if (f.bijective()) ++bij;
      else
        r.witness({{"source", v.name}, {"target", w.name}, {"hom", f.hom_dim}, {"fr hom", f.fr_hom_dim},
                   {"image rank", f.image_rank}});
    }
  std::size_t agree = 0;
  for (const auto& v : corpus) {
    const auto c = compare_symmetry_choices(v.rep);
    if (c.images_coincide && c.actions_agree && c.cyclic_dim == c.symmetric_dim) ++agree;
    else r.witness({{"rep", v.name}, {"cyclic", c.cyclic_dim}, {"symmetric", c.symmetric_dim}});
  }
  r.add(label + "pairs probed", pairs, "count");
  r.add(label + "pairs with Hom -> Hom(Fr+, Fr+) bijective", bij, "exact ranks of induced maps");
  r.check(label + "fully faithful on the corpus", bij == pairs, "comparison");
  r.add(label + "reps where Z/p and S_p choices agree", agree, "image comparison in S_p coinvariants");
  r.check(label + "symmetry choices agree", agree == corpus.size(), "comparison");
}

Report frobplus_faithful(const ScenarioOptions& o) {
  Report r;
  r.scenario = "frobplus faithful";
  const Field field = finite_field_option(o, "2");
  const std::string group = o.get("group", "c3");
  const auto corpus = corpus_option(o, field, group);
  r.add("field", field.name(), "input");
  r.add("group", group, "input");
  r.add("corpus size", corpus.size(), "count");
  faithfulness_into(r, corpus, "");
  return r;
}

// ------------------------------------------------------------------ topo

int point_option(const ScenarioOptions& o, const std::string& key, const FinitePoset& p, int fallback) {
  if (!o.has(key)) return fallback;
  return p.index(o.get(key, ""));
}

std::vector<int> points(const FinitePoset& p, const std::string& list) {
  std::vector<int> out;
  for (const auto& name : split_list(list)) out.push_back(p.index(name));
  return out;
}

Report topo_monodromy(const ScenarioOptions& o) {
  Report r;
  r.scenario = "topo monodromy";
  std::optional<LocalSystem> l;
  std::optional<std::vector<Matrix>> given;
  if (o.has("system")) {
    l = io::read_local_system(o.get("system", ""));
  } else {
    const auto poset = io::poset_from_reference(o.get("model", "pseudo-circle"), ".");
    const Field field = field_option(o, "q");
    const int base = point_option(o, "base", *poset, 0);
    const auto pres = pi1_presentation(poset, base);
    std::vector<std::string> texts = split_list(o.get("loops", ""));
    if (!o.has("loops"))
      for (std::size_t g = 0; g < pres.generators.size(); ++g) texts.push_back(std::to_string(g + 2));
    if (texts.size() != pres.generators.size())
      throw InputError("model has " + std::to_string(pres.generators.size()) + " loop generators, got " +
                       std::to_string(texts.size()) + " loop values");
    std::vector<Matrix> loops;
    for (const auto& t : texts) {
      const Scalar s = parse_scalar(t, field);
      if (s.is_zero()) throw InputError("loop values must be nonzero");
      loops.push_back(Matrix::from_rows(field, {{s}}));
    }
    try {
      l = local_system_from_monodromy(pres, field, 1, loops);
    } catch (const DomainError& e) {
      throw InputError(std::string("model: ") + e.what());
    }
    given = loops;
  }
  const PosetPtr& poset = l->poset();
  const int base = point_option(o, "base", *poset, 0);
  const auto mono = monodromy(*l, base);
  r.add("points", poset->size(), "input");
  r.add("base", poset->name(base), "input");
  r.add("rank", l->rank(), "input");
  r.add("generators", mono.presentation.generators.size(), "non-tree edges of the comparability graph");
  r.add("relators", mono.presentation.relators.size(), "chains x < y < z");
  r.add("loops", matrices_json(mono.loops), "transport along edge loops");
  r.check("relators hold", mono.relators_hold, "evaluation of relator words");
  if (given) r.check("loops reproduce input", mono.loops == *given, "exact comparison");
  const int base_b = point_option(o, "base2", *poset, poset->size() - 1);
  const TreeChoice other{TreeChoice::Strategy::DepthFirst, true};
  const auto change = tree_change_check(*l, *l, base, {}, base_b, other);
  r.add("second base", poset->name(base_b), "input");
  r.check("loops conjugate under change of tree and base", change.loops_conjugate, "transport along tree paths");
  r.add("dim End (first tree, second tree, stalkwise)",
        Json::array({change.hom_dim_a, change.hom_dim_b, change.hom_dim_local}), "exact kernels");
  r.check("endomorphism dimensions agree",
          change.hom_dim_a == change.hom_dim_b && change.hom_dim_a == change.hom_dim_local, "comparison");
  return r;
}

std::string missing_hypotheses(const Cover& c) {
  std::vector<std::string> bad;
  if (!c.space_connected) bad.push_back("X disconnected");
  if (!c.u1_connected) bad.push_back("U1 disconnected");
  if (!c.u2_connected) bad.push_back("U2 disconnected");
  if (!c.intersection_connected) bad.push_back(c.intersection.empty() ? "U1 and U2 disjoint" : "U1 ∩ U2 disconnected");
  std::string out;
  for (const auto& b : bad) out += (out.empty() ? "" : "; ") + b;
  return out;
}

// Two rank-1 systems on a connected space are isomorphic exactly when their
// loop scalars agree, and Hom is then a line.
std::size_t rank_one_hom_oracle(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  return a == b ? 1 : 0;
}

void svk_into(Report& r, const Cover& cover, int base, const std::vector<Field>& fields,
              const std::vector<std::size_t>& ranks, std::size_t per_rank, unsigned seed, bool standard) {
  std::size_t total = 0, passed = 0, pairs = 0, agree = 0, oracle_pairs = 0, oracle_ok = 0;
  for (const Field& field : fields) {
    std::vector<GluingData> data;
    std::vector<std::size_t> rank_of;
    for (std::size_t rank : ranks) {
      auto s = samples::sample_gluings(cover, base, field, rank, per_rank, seed + unsigned(rank) * 101);
      for (auto& g : s) {
        data.push_back(std::move(g));
        rank_of.push_back(rank);
      }
    }
    const auto rep = svk_check(cover, base, data);
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
      ++total;
      const auto& s = rep.samples[i];
      if (s.passes()) ++passed;
      else
        r.witness({{"field", field.name()}, {"sample", i}, {"glue valid", s.glue_valid}, {"round trip", s.round_trip},
                   {"loops factor", s.loops_factor}, {"intersection compatible", s.intersection_compatible}});
    }
    std::vector<std::vector<Matrix>> loops;
    for (const auto& g : data) loops.push_back(monodromy(glue(cover, g), base).loops);
    for (const auto& h : rep.homs) {
      ++pairs;
      if (h.global_dim == h.fibre_dim) ++agree;
      else r.witness({{"field", field.name()}, {"pair", {h.left, h.right}}, {"global", h.global_dim}, {"fibre", h.fibre_dim}});
      if (rank_of[h.left] == 1 && rank_of[h.right] == 1) {
        ++oracle_pairs;
        if (h.global_dim == rank_one_hom_oracle(loops[h.left], loops[h.right])) ++oracle_ok;
      }
    }
  }
  r.add("gluing samples", total, "count");
  r.add("samples passing glue, split and loop factorization", passed, "exact comparison");
  r.check("every sample passes", passed == total, "comparison");
  r.add("Hom pairs compared", pairs, "count");
  r.check("dim Hom on X = dim Hom of gluing data", agree == pairs, "exact kernels");
  r.add("rank-1 pairs against loop scalars", oracle_pairs, "count");
  r.check("rank-1 Hom dimensions match loop scalars", oracle_ok == oracle_pairs,
          "Hom of rank-1 systems is a line iff the loop scalars agree");
  if (!standard) return;
  // The two circles carry the loops 2 and 3; the glued system must carry both.
  const Field q = Field::rationals();
  auto on = [&](const OpenSet& u, long value) {
    const auto pres = pi1_presentation(u.poset, u.local(base));
    return local_system_from_monodromy(pres, q, 1, {Matrix::from_ints(q, {{value}})});
  };
  const LocalSystem l1 = on(cover.u1, 2), l2 = on(cover.u2, 3);
  std::vector<int> in1, in2;
  for (int x : cover.intersection) {
    in1.push_back(cover.u1.local(x));
    in2.push_back(cover.u2.local(x));
  }
  const LocalSystem r1 = restrict(l1, open_subset(cover.u1.poset, in1));
  const LocalSystem r2 = restrict(l2, open_subset(cover.u2.poset, in2));
  const int b12 = cover.u12->local(base);
  const auto c = extend_isomorphism(r1, r2, b12, Matrix::identity(q, 1));
  const auto global = monodromy(glue(cover, {l1, l2, c}), base).loops;
  std::vector<std::string> seen;
  for (const auto& m : global) seen.push_back(m(0, 0).pretty());
  std::sort(seen.begin(), seen.end());
  r.add("monodromy of glued (2, 3)", seen, "transport along edge loops");
  r.check("glued (2, 3) has loops {2, 3}", seen == std::vector<std::string>{"2", "3"}, "comparison");
}

Report topo_svk(const ScenarioOptions& o) {
  Report r;
  r.scenario = "topo svk";
  Cover cover = models::standard_wedge_cover();
  bool standard = true;
  if (o.has("model") || o.has("u1") || o.has("u2")) {
    if (!o.has("u1") || !o.has("u2")) throw InputError("a custom cover needs both u1 and u2");
    const auto poset = io::poset_from_reference(o.get("model", "wedge"), ".");
    cover = make_cover(poset, points(*poset, o.get("u1", "")), points(*poset, o.get("u2", "")));
    standard = false;
  }
  if (!cover.satisfies_hypotheses()) throw InputError("cover violates the hypotheses: " + missing_hypotheses(cover));
  const int base = o.has("base") ? cover.space->index(o.get("base", "")) : cover.intersection.front();
  std::vector<Field> fields;
  for (const auto& f : split_list(o.get("field", "q,7"))) fields.push_back(parse_field(f));
  std::vector<std::size_t> ranks;
  for (const auto& k : split_list(o.get("rank", "1,2"))) {
    ScenarioOptions tmp;
    tmp.values["rank"] = k;
    const long v = tmp.get_int("rank", 1);
    if (v < 1 || v > 4) throw InputError("option rank: expected 1..4");
    ranks.push_back(std::size_t(v));
  }
  const long per = o.get_int("samples", 5);
  if (per < 1 || per > 50) throw InputError("option samples: expected 1..50");
  r.add("space", Json(cover.space->names()), "input");
  r.add("base", cover.space->name(base), "input");
  std::vector<std::string> names;
  for (const auto& f : fields) names.push_back(f.name());
  r.add("fields", names, "input");
  r.add("ranks", ranks, "input");
  svk_into(r, cover, base, fields, ranks, std::size_t(per), unsigned(o.get_int("seed", 1)), standard);
  return r;
}

void models_into(Report& r, const PosetPtr& p1, const PosetPtr& p2, const Field& field, std::size_t count,
                 unsigned seed) {
  const auto pres = pi1_presentation(p1, 0);
  const std::size_t gens = pres.generators.size();
  std::vector<std::vector<Matrix>> tuples;
  std::size_t swap_index = 0;
  if (gens == 1) {
    tuples.push_back({Matrix::from_ints(field, {{0, 1}, {1, 0}})});
    tuples.push_back({Matrix::identity(field, 2)});
  }
  const std::size_t half = count / 2;
  for (auto& t : samples::sample_loop_tuples(field, gens, 1, half, seed)) tuples.push_back(std::move(t));
  for (auto& t : samples::sample_loop_tuples(field, gens, 2, count - half, seed + 7)) tuples.push_back(std::move(t));
  const auto rep = model_equivalence_check(p1, 0, p2, 0, field, tuples);
  r.add("pi1 rank", rep.pi1_rank, "edge-path presentation");
  r.add("monodromy samples", tuples.size(), "count");
  std::size_t realized = 0, ends = 0;
  Json dims = Json::array();
  for (const auto& s : rep.samples) {
    if (s.realized_on_first && s.realized_on_second) ++realized;
    if (s.end_dim_first == s.end_dim_oracle && s.end_dim_second == s.end_dim_oracle) ++ends;
    dims.push_back(Json::array({s.end_dim_first, s.end_dim_second, s.end_dim_oracle}));
  }
  r.add("End dimensions (first, second, commutant)", dims, "stalkwise kernels and matrix commutant");
  r.check("every monodromy realized on both models", realized == rep.samples.size(), "loops recomputed");
  r.check("End dimensions match the commutant", ends == rep.samples.size(), "comparison");
  r.add("Hom pairs compared", rep.hom_pairs_checked, "count");
  r.check("Hom dimensions agree across models", rep.hom_dims_agree, "exact kernels");
  if (gens == 1 && !rep.samples.empty()) {
    r.add("dim End for loop (0 1; 1 0)", rep.samples[swap_index].end_dim_first, "stalkwise kernel");
    r.check("dim End for loop (0 1; 1 0) is 2", rep.samples[swap_index].end_dim_first == 2 &&
                                                    rep.samples[swap_index].end_dim_second == 2,
            "commutant of a swap is spanned by I and the swap");
  }
}

Report topo_models(const ScenarioOptions& o) {
  Report r;
  r.scenario = "topo models";
  const auto p1 = io::poset_from_reference(o.get("first", "pseudo-circle"), ".");
  const auto p2 = io::poset_from_reference(o.get("second", "hexagon"), ".");
  const Field field = field_option(o, "q");
  const long count = o.get_int("samples", 10);
  if (count < 0 || count > 200) throw InputError("option samples: expected 0..200");
  r.add("first", o.get("first", "pseudo-circle"), "input");
  r.add("second", o.get("second", "hexagon"), "input");
  r.add("field", field.name(), "input");
  try {
    models_into(r, p1, p2, field, std::size_t(count), unsigned(o.get_int("seed", 1)));
  } catch (const DomainError& e) {
    throw InputError(std::string("models: ") + e.what());
  }
  return r;
}

// ----------------------------------------------------------------- suite

Report suite_coherent(const ScenarioOptions&) {
  Report r;
  r.scenario = "coherent dimension of C2 * C2";
  const auto p = presets::c2_star_c2();
  for (int n = 1; n <= 3; ++n) {
    const std::string pre = "N=" + std::to_string(n) + " ";
    coherent_dimension_into(r, p, n, Field::rationals(), pre);
    const std::size_t alternating = std::size_t(2 * n + 1);
    r.add(pre + "alternating words", alternating, "1 + two alternating words of each length 1..N");
    r.check(pre + "dimension = 2N + 1", coherent_basis(p, n, Field::rationals()).dimension() == alternating,
            "comparison");
  }
  coherent_dimension_into(r, presets::c2_star_c3(), 3, Field::rationals(), "C2 * C3, N=3 ");
  coherent_dimension_into(r, presets::c2_star_c2(), 2, Field::finite(5), "C2 * C2 over 5, N=2 ");
  return r;
}

Report suite_collapse(const ScenarioOptions&) {
  Report r;
  r.scenario = "amalgamation over the whole group";
  const auto p = presets::c2_amalg_c2_c2();
  const int top = Limits::current().max_truncation;
  for (int n = 1; n <= top; ++n) {
    const std::size_t dim = coherent_basis(p, n, Field::rationals()).dimension();
    r.add("C2 *_C2 C2, N=" + std::to_string(n), dim, "exact kernel of the coherence system");
    r.check("N=" + std::to_string(n) + " dimension = |G|", dim == 2, "order of the collapsed amalgam");
  }
  const auto q = presets::c4_amalg_c2_c4();
  for (int n = 1; n <= 2; ++n) {
    const auto e = quotient_embedding_check(q, n, Field::rationals());
    r.add("C4 *_C2 C4, N=" + std::to_string(n) + " (amalgamated, free)",
          Json::array({e.amalgamated_dimension, e.free_dimension}), "exact kernels");
    r.check("N=" + std::to_string(n) + " amalgamated elements satisfy the free system", e.inclusion_holds,
            "scan of every free-product condition");
  }
  coherent_dimension_into(r, q, 2, Field::rationals(), "C4 *_C2 C4, N=2 ");
  return r;
}

Report suite_hopf(const ScenarioOptions&) {
  Report r;
  r.scenario = "Hopf structure on matrix coefficients";
  factor_algebras_into(r, *presets::c2_star_c2(), Field::rationals(), "c2-star-c2: ");
  for (const auto& fg : {presets::c4_amalg_c2_c4(), presets::z4_star_z6()})
    factor_algebras_into(r, *fg, Field::finite(5), fg->name() + " over 5: ");
  for (long a : {2L, 3L}) {
    const AmalgamRep rho = va_rep(Field::rationals().from_int(a));
    const auto f = coefficient_elements(rho, 4);
    const std::string pre = "V_" + std::to_string(a) + " ";
    bool coh = true, ident = true, s2 = true, scoh = true, rank_ok = true;
    std::size_t max_rank = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const auto c = check_element(f[i][j], r, pre + "f" + std::to_string(i + 1) + std::to_string(j + 1));
        coh = coh && c.coherent;
        ident = ident && c.hopf_identity;
        s2 = s2 && c.antipode_involutive;
        scoh = scoh && c.antipode_coherent;
        const auto rk = representativity_rank(f[i][j]).rank;
        max_rank = std::max(max_rank, rk);
        rank_ok = rank_ok && rk <= 2;
      }
    r.check(pre + "coefficients coherent", coh, "scan of every coherence condition");
    r.check(pre + "antipode identity", ident, "palindromic words w^-1 w");
    r.check(pre + "S^2 = id", s2 && scoh, "exact comparison");
    r.add(pre + "largest evaluation rank", max_rank, "rank of evaluation blocks f(u.v)");
    r.check(pre + "rank <= 2", rank_ok, "comparison");
    r.check(pre + "coproduct of coefficients", coefficient_coproduct_holds(f),
            "matrix product rule f_ij(uv) = sum_k f_ik(u) f_kj(v)");
  }
  return r;
}

Report suite_fibre(const ScenarioOptions& o) {
  Report r;
  r.scenario = "representations as a fibre product";
  const unsigned seed = unsigned(o.get_int("seed", 1));
  std::size_t triples = 0, round = 0, pairs = 0, agree = 0;
  for (const auto& p : {presets::c2_star_c2(), presets::c4_amalg_c2_c4(), presets::c2_star_c3()})
    for (const Field& field : {Field::rationals(), Field::finite(5)}) {
      std::vector<GluedTriple> ts;
      for (std::size_t d = 1; d <= 3; ++d)
        for (auto& t : samples::sample_triples(p, field, d, 2, seed + unsigned(d))) ts.push_back(std::move(t));
      for (const auto& t : ts) {
        ++triples;
        Report sub;
        glue_round_trip_into(sub, t);
        if (sub.pass) ++round;
        else r.witness({{"presentation", p->name()}, {"field", field.name()}, {"dim", t.v1.dim()}});
      }
      std::vector<AmalgamRep> glued;
      for (const auto& t : ts) glued.push_back(glue(t));
      for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j) {
          ++pairs;
          const auto a = hom_space(glued[i], glued[j]).size();
          const auto b = fibre_product_homs(ts[i], ts[j]).size();
          if (a == b) ++agree;
          else r.witness({{"presentation", p->name()}, {"pair", {i, j}}, {"amalgam", a}, {"fibre", b}});
        }
    }
  r.add("sampled triples", triples, "count");
  r.check("at least 10 triples", triples >= 10, "count");
  r.add("round trips", round, "explicit morphism (I, c) and exact comparison");
  r.check("every round trip holds", round == triples, "comparison");
  r.add("Hom pairs compared", pairs, "count");
  r.check("dim Hom agrees on every pair", agree == pairs, "exact kernels");
  return r;
}

Report suite_va(const ScenarioOptions&) {
  Report r;
  r.scenario = "the family V_a";
  for (const Field& field : {Field::rationals(), Field::finite(7)}) {
    const std::vector<long> as = {2, 3, 5};
    for (long a : as)
      for (long b : as) {
        const Scalar sa = field.from_int(a), sb = field.from_int(b);
        const auto direct = hom_space(va_rep(sa), va_rep(sb)).size();
        const auto fibre = fibre_product_homs(va_triple(sa), va_triple(sb)).size();
        const std::string label = "dim Hom(V_" + std::to_string(a) + ", V_" + std::to_string(b) + ") over " + field.name();
        r.add(label, direct, "exact intertwiner kernel");
        r.check(label + " expected", direct == (a == b ? 1u : 0u) && fibre == direct,
                "irreducible and distinguished by the eigenlines");
      }
  }
  return r;
}

Report suite_sl2(const ScenarioOptions& o) {
  Report r = reps_sl2_cert(o);
  r.scenario = "an infinite-order element of Z/4 * Z/6";
  return r;
}

Report suite_frobplus(const ScenarioOptions& o) {
  Report r;
  r.scenario = "Fr+ basics";
  const unsigned seed = unsigned(o.get_int("seed", 1));
  for (const auto& [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    const Field field = Field::finite(p, m);
    FrobTally tally;
    Json dims = Json::array();
    for (const std::string g : {"trivial", "c3", "s3"})
      for (const auto& nr : samples::rep_corpus(g, field)) frob_rep_checks({g + ":" + nr.name, nr.rep}, 10, seed, tally, r, dims);
    Report sub;
    sub.scenario = "over " + field.name();
    frob_tally_into(sub, tally, dims);
    r.child(std::move(sub));
  }
  exactness_into(r, Field::finite(2));
  exactness_into(r, Field::finite(3));
  TwistedSpace tw{Field::finite(3, 2), 2};
  r.check("v -> v (x) 1 is semilinear over 3^2", tw.semilinear_on_basis(Field::finite(3, 2).elements()),
          "all scalars on basis vectors");
  return r;
}

Report suite_faithful(const ScenarioOptions&) {
  Report r;
  r.scenario = "faithfulness probes";
  for (const Field& field : {Field::finite(2), Field::finite(3), Field::finite(2, 2)})
    for (const std::string g : {"c3", "s3"})
      faithfulness_into(r, samples::rep_corpus(g, field), g + " over " + field.name() + ": ");
  return r;
}

Report suite_svk(const ScenarioOptions& o) {
  Report r;
  r.scenario = "gluing local systems on the wedge";
  const Cover cover = models::standard_wedge_cover();
  svk_into(r, cover, cover.intersection.front(), {Field::rationals(), Field::finite(7)}, {1, 2}, 5,
           unsigned(o.get_int("seed", 1)), true);
  return r;
}

Report suite_models(const ScenarioOptions& o) {
  Report r;
  r.scenario = "two models of the circle";
  models_into(r, models::pseudo_circle(), models::hexagon_circle(), Field::rationals(), 10,
              unsigned(o.get_int("seed", 1)));
  return r;
}

using Runner = Report (*)(const ScenarioOptions&);

const std::vector<std::pair<std::string, Runner>>& suite_table() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"coherent-dimension", suite_coherent}, {"collapse", suite_collapse},   {"hopf", suite_hopf},
      {"fibre-product", suite_fibre},         {"va-family", suite_va},        {"sl2", suite_sl2},
      {"frobplus", suite_frobplus},           {"faithful", suite_faithful},   {"svk", suite_svk},
      {"models", suite_models}};
  return table;
}

const std::vector<std::pair<std::string, Runner>>& command_table() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"amalgam coherent-dim", amalgam_coherent_dim},
      {"amalgam verify-hopf", amalgam_verify_hopf},
      {"amalgam rank", amalgam_rank},
      {"reps glue", reps_glue},
      {"reps hom", reps_hom},
      {"reps sl2-cert", reps_sl2_cert},
      {"frobplus check", frobplus_check},
      {"frobplus faithful", frobplus_faithful},
      {"topo monodromy", topo_monodromy},
      {"topo svk", topo_svk},
      {"topo models", topo_models},
      {"suite", run_suite}};
  return table;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : command_table()) out.push_back(name);
  return out;
}

Report run_command(const std::string& command, const ScenarioOptions& options) {
  for (const auto& [name, fn] : command_table())
    if (name == command) return fn(options);
  throw InputError("unknown command '" + command + "'");
}

std::vector<std::string> suite_scenarios() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suite_table()) out.push_back(name);
  return out;
}

Report run_suite_scenario(const std::string& name, const ScenarioOptions& options) {
  for (const auto& [n, fn] : suite_table())
    if (n == name) return fn(options);
  throw InputError("unknown scenario '" + name + "'");
}

Report run_suite(const ScenarioOptions& options) {
  Report r;
  r.scenario = "suite";
  const auto only = options.get("only", "");
  for (const auto& [name, fn] : suite_table()) {
    if (!only.empty() && only != name) continue;
    Report child = fn(options);
    child.scenario = name + ": " + child.scenario;
    r.child(std::move(child));
  }
  if (r.children.empty()) throw InputError("unknown scenario '" + only + "'");
  return r;
}

}  // namespace amg
