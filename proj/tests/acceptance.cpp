// One line per acceptance criterion. Values are recomputed here from the
// library and compared with the independent routines in oracles.hpp.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "amalgam/coherent.hpp"
#include "amalgam/frobplus.hpp"
#include "amalgam/presets.hpp"
#include "amalgam/rep.hpp"
#include "amalgam/samples.hpp"
#include "amalgam/topo.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::vector<Matrix> letter_matrices(const AmalgamRep& rho) {
  std::vector<Matrix> out;
  for (int f : {1, 2})
    for (const auto& m : rho.factor(f).matrices()) out.push_back(m);
  return out;
}

void criterion1(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t dim = coherent_basis(presets::c2_star_c2(), n, Field::rationals()).dimension();
    const std::size_t words = oracle::free_product_elements(2, 2, n);
    o.require(dim == std::size_t(2 * n + 1), "dimension at N=" + std::to_string(n));
    o.require(dim == words, "word count at N=" + std::to_string(n));
    o.detail << "N=" << n << ":" << dim << " ";
  }
}

void criterion2(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t dim = coherent_basis(presets::c2_amalg_c2_c2(), n, Field::rationals()).dimension();
    o.require(dim == 2, "collapsed dimension at N=" + std::to_string(n));
  }
  const auto e = quotient_embedding_check(presets::c4_amalg_c2_c4(), 2, Field::rationals());
  o.require(e.inclusion_holds, "embedding into the free product");
  o.detail << "collapse=2 for N<=4, embedding " << e.amalgamated_dimension << " into " << e.free_dimension << " ";
}

void criterion3(Outcome& o) {
  const Field q = Field::rationals();
  for (long a : {2L, 3L}) {
    const AmalgamRep rho = va_rep(q.from_int(a));
    std::size_t max_rank = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const auto f = matrix_coefficient_element(rho, i, j, 4);
        const std::string tag = "a=" + std::to_string(a) + " f" + std::to_string(i) + std::to_string(j);
        o.require(check_coherence(f).passes(), tag + " coherence");
        const auto id = hopf_identity_check(f);
        o.require(id.passes && id.max_half_length >= 2, tag + " antipode identity");
        const auto s = antipode(f);
        o.require(check_coherence(s).passes() && antipode(s) == f, tag + " S^2");
        // S f_ij agrees with the matrix coefficient of the inverse
        for (const auto& w : enumerate_reduced_words(*rho.presentation(), 2))
          o.require(evaluation_on_group(s, w) == (*evaluate_word(rho, w).inverse())(i, j), tag + " S on words");
        const std::size_t r = representativity_rank(f).rank;
        max_rank = std::max(max_rank, r);
        o.require(r <= 2, tag + " rank");
      }
    o.detail << "a=" << a << " rank<=" << max_rank << " ";
  }
}

void criterion4(Outcome& o) {
  std::size_t triples = 0, pairs = 0;
  for (const auto& p : {presets::c2_star_c2(), presets::c4_amalg_c2_c4()})
    for (const Field& f : {Field::rationals(), Field::finite(5)}) {
      std::vector<GluedTriple> ts;
      for (std::size_t d = 1; d <= 3; ++d)
        for (auto& t : samples::sample_triples(p, f, d, 1, 100 + unsigned(d))) ts.push_back(std::move(t));
      for (const auto& t : ts) {
        const AmalgamRep rho = glue(t);
        const GluedTriple back = split(rho);
        o.require(is_triple_morphism(back, t, Matrix::identity(f, t.c.rows()), t.c), "split(glue) witness");
        o.require(letter_matrices(glue(back)) == letter_matrices(rho), "glue(split) identity");
        ++triples;
      }
      for (const auto& s : ts)
        for (const auto& t : ts) {
          const AmalgamRep a = glue(s), b = glue(t);
          const std::size_t direct = hom_space(a, b).size();
          o.require(direct == fibre_product_homs(s, t).size(), "Hom versus fibre product");
          o.require(direct == oracle::intertwiner_dim(f, letter_matrices(a), letter_matrices(b)), "Hom versus oracle");
          ++pairs;
        }
    }
  o.require(triples >= 10, "sample count");
  o.detail << triples << " triples, " << pairs << " Hom pairs ";
}

void criterion5(Outcome& o) {
  const Field q = Field::rationals();
  for (long a : {2L, 3L, 5L})
    for (long b : {2L, 3L, 5L}) {
      const auto ra = va_rep(q.from_int(a)), rb = va_rep(q.from_int(b));
      const std::size_t expect = a == b ? 1 : 0;
      o.require(hom_space(ra, rb).size() == expect, "Hom(V_" + std::to_string(a) + ", V_" + std::to_string(b) + ")");
      o.require(oracle::intertwiner_dim(q, letter_matrices(ra), letter_matrices(rb)) == expect, "oracle Hom");
    }
  o.detail << "End=1, Hom=0 for a!=b in {2,3,5} ";
}

void criterion6(Outcome& o) {
  const auto c = sl2_infinite_order_certificate(12);
  o.require(c.trace.rational() == -2, "trace");
  o.require(!c.is_plus_minus_identity, "not +-I");
  bool none = true;
  for (bool b : c.power_is_identity) none = none && !b;
  o.require(none && c.power_is_identity.size() == 12, "no power is I");
  o.require(c.g4_order_4 && c.g6_order_6, "factor orders");
  // independent: (0 -1; 1 0) and (1 -1; 1 0) multiplied in mpq
  const mpq_class g4[2][2] = {{0, -1}, {1, 0}}, g6[2][2] = {{1, -1}, {1, 0}};
  mpq_class prod[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) prod[i][j] = g4[i][0] * g6[0][j] + g4[i][1] * g6[1][j];
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) o.require(c.product(i, j).rational() == prod[i][j], "product entry");
  o.detail << "trace " << c.trace.serialize() << ", no power <= 12 is I ";
}

void criterion7(Outcome& o) {
  std::size_t reps = 0;
  for (const Field& f : {Field::finite(2), Field::finite(2, 2), Field::finite(3)})
    for (const std::string g : {"trivial", "c3", "s3"})
      for (const auto& nr : samples::rep_corpus(g, f)) {
        if (nr.rep.dim() > 3) continue;
        const auto fr = fr_plus(nr.rep);
        const std::string tag = g + "/" + nr.name + " over " + f.name();
        o.require(fr.space.dim() == nr.rep.dim(), tag + " dimension");
        const auto t = t_map(fr.space, 5);
        o.require(t.bijective && t.additive, tag + " t");
        o.require(find_isomorphism(fr.action, nr.rep.twisted()).has_value(), tag + " twist");
        ++reps;
      }
  for (const auto& [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    const auto brute = oracle::fr_brute(p, d);
    o.require(brute.image_dim == d && brute.t_injective, "brute force p=" + std::to_string(p));
    o.require(fr_plus_space(Field::finite(p), d).dim() == brute.image_dim, "brute force dimension");
  }
  for (const Field& f : {Field::finite(2, 2), Field::finite(3, 2)}) {
    const auto t = t_map(fr_plus_space(f, 2), 30);
    o.require(t.semilinear && t.matches_twisted_matrix, "t semilinear over " + f.name());
    o.require(TwistedSpace{f, 2}.semilinear_on_basis(f.elements()), "twist semilinear over " + f.name());
    for (const auto& nr : samples::rep_corpus("c3", f)) {
      const auto fr = fr_plus(nr.rep);
      for (const auto& phi : hom_space(nr.rep, nr.rep))
        for (const Scalar& l : f.elements())
          o.require(fr_plus_morphism(fr, fr, nr.rep, nr.rep, phi.scaled(l)) ==
                        fr_plus_morphism(fr, fr, nr.rep, nr.rep, phi).scaled(l.pow(f.characteristic())),
                    "Fr+ semilinear on morphisms");
    }
  }
  const auto e = exactness_probe(samples::s3_permutation_filtration(Field::finite(2)));
  o.require(e.exact(), "exactness over F2");
  o.detail << reps << " representations, semilinear over 4 and 9, S3 filtration exact ";
}

void criterion8(Outcome& o) {
  std::size_t pairs = 0;
  for (const Field& f : {Field::finite(2), Field::finite(2, 2)})
    for (const std::string g : {"c3", "s3"}) {
      const auto corpus = samples::rep_corpus(g, f);
      for (const auto& v : corpus) {
        for (const auto& w : corpus) {
          const auto r = faithfulness_probe(v.rep, w.rep);
          o.require(r.bijective(), g + " " + v.name + " -> " + w.name);
          o.require(r.hom_dim == oracle::intertwiner_dim(f, v.rep.matrices(), w.rep.matrices()), "Hom oracle");
          ++pairs;
        }
        const auto c = compare_symmetry_choices(v.rep);
        o.require(c.images_coincide && c.actions_agree, g + " " + v.name + " symmetric versus cyclic");
      }
    }
  o.detail << pairs << " pairs ";
}

void criterion9(Outcome& o) {
  const Cover cover = models::standard_wedge_cover();
  const int base = cover.space->index("a");
  std::size_t count = 0;
  for (const Field& f : {Field::rationals(), Field::finite(7)}) {
    for (std::size_t rank : {1, 2}) {
      const auto gs = samples::sample_gluings(cover, base, f, rank, 5, 31 + unsigned(rank));
      const auto rep = svk_check(cover, base, gs);
      o.require(rep.passes(), "SvK over " + f.name());
      for (const auto& h : rep.homs) o.require(h.global_dim == h.fibre_dim, "Hom equality");
      // Hom of the glued systems equals intertwiners of their monodromies
      for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j < gs.size(); ++j) {
          const LocalSystem a = glue(cover, gs[i]), b = glue(cover, gs[j]);
          o.require(hom_space(a, b).size() ==
                        oracle::intertwiner_dim(f, monodromy(a, base).loops, monodromy(b, base).loops),
                    "Hom versus monodromy oracle");
        }
      count += gs.size();
    }
  }
  o.require(count >= 20, "sample count");
  o.detail << count << " samples ";
}

void criterion10(Outcome& o) {
  std::size_t count = 0;
  for (const Field& f : {Field::rationals(), Field::finite(7)}) {
    std::vector<std::vector<Matrix>> tuples = {{Matrix::from_ints(f, {{0, 1}, {1, 0}})}};
    for (std::size_t rank : {1, 2})
      for (auto& t : samples::sample_loop_tuples(f, 1, rank, 5, 50 + unsigned(rank))) tuples.push_back(std::move(t));
    const auto rep = model_equivalence_check(models::pseudo_circle(), 0, models::hexagon_circle(), 0, f, tuples);
    o.require(rep.passes(), "model equivalence over " + f.name());
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      const std::size_t oracle_end = oracle::commutant_dim(f, tuples[k]);
      o.require(rep.samples[k].end_dim_first == oracle_end && rep.samples[k].end_dim_second == oracle_end,
                "End dimension");
    }
    o.require(rep.samples.front().end_dim_first == 2, "swap End dimension");
    count += tuples.size();
  }
  o.require(count >= 10, "sample count");
  o.detail << count << " monodromies, swap End=2 ";
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                                criterion5, criterion6, criterion7, criterion8,
                                                                criterion9, criterion10};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k](o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("criterion %zu: %s  %s\n", k + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
