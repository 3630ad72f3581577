#include "amalgam/groups.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "amalgam/exactalg.hpp"

namespace amg {

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name) : name_(std::move(name)) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("group table is empty");
  const Limits limits = Limits::current();
  if (n > limits.max_group_order)
    throw SizeError("group order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_group_order));
  order_ = n;
  table_.reserve(std::size_t(n) * std::size_t(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[std::size_t(i)].size()) != n)
      throw InputError("group table row " + std::to_string(i) + " has wrong length");
    for (int x : table[std::size_t(i)]) {
      if (x < 0 || x >= n) throw InputError("group table entry " + std::to_string(x) + " out of range");
      table_.push_back(x);
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InputError("group table has no identity");
  inverse_.assign(std::size_t(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inverse_[std::size_t(x)] = y;
        break;
      }
    if (inverse_[std::size_t(x)] < 0) throw InputError("element " + std::to_string(x) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InputError("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
}

GroupPtr FiniteGroup::trivial() { return std::make_shared<const FiniteGroup>(std::vector<std::vector<int>>{{0}}, "1"); }

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a)][std::size_t(b)] = (a + b) % n;
  return std::make_shared<const FiniteGroup>(std::move(t), "C" + std::to_string(n));
}

GroupPtr FiniteGroup::symmetric3() {
  // images of 0,1,2; composition (a*b)(x) = a(b(x))
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[std::size_t(x)] = perms[std::size_t(a)][std::size_t(perms[std::size_t(b)][std::size_t(x)])];
      t[std::size_t(a)][std::size_t(b)] = int(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return std::make_shared<const FiniteGroup>(std::move(t), "S3");
}

int FiniteGroup::power(int a, int e) const {
  int acc = identity_;
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  for (int k = 0; k < e; ++k) acc = mul(acc, a);
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[std::size_t(a)].push_back(mul(a, b));
  return t;
}

// ---------------------------------------------------------------- GroupHom

bool GroupHom::injective() const {
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<int> images(std::size_t(g->order()));
  for (int x = 0; x < g->order(); ++x) images[std::size_t(x)] = x;
  return GroupHom{g, g, std::move(images)};
}

GroupHom GroupHom::from_trivial(GroupPtr target) {
  const int e = target->identity();
  return GroupHom{FiniteGroup::trivial(), std::move(target), {e}};
}

GroupHom GroupHom::after(const GroupHom& inner) const {
  if (inner.target != source && inner.target->table() != source->table())
    throw DomainError("homomorphisms are not composable");
  std::vector<int> images_out;
  for (int x : inner.images) images_out.push_back((*this)(x));
  return GroupHom{inner.source, target, std::move(images_out)};
}

HomReport check_hom(const GroupHom& phi) {
  HomReport r;
  const auto& s = *phi.source;
  const auto& t = *phi.target;
  if (static_cast<int>(phi.images.size()) != s.order()) {
    r.passes = false;
    r.message = "image array has length " + std::to_string(phi.images.size()) + ", expected " + std::to_string(s.order());
    return r;
  }
  for (int x : phi.images)
    if (x < 0 || x >= t.order()) {
      r.passes = false;
      r.message = "image " + std::to_string(x) + " out of range";
      return r;
    }
  if (phi(s.identity()) != t.identity()) {
    r.passes = false;
    r.witness = std::pair{-1, -1};
    r.message = "identity not preserved";
    return r;
  }
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (phi(s.mul(a, b)) != t.mul(phi(a), phi(b))) {
        r.passes = false;
        r.witness = std::pair{a, b};
        r.message = "phi(" + std::to_string(a) + "*" + std::to_string(b) + ") != phi(" + std::to_string(a) + ")*phi(" +
                    std::to_string(b) + ")";
        return r;
      }
  r.message = "homomorphism";
  return r;
}

// ---------------------------------------------------------------- AmalgamPresentation

AmalgamPresentation::AmalgamPresentation(GroupHom phi1, GroupHom phi2, std::string name)
    : phi1_(std::move(phi1)), phi2_(std::move(phi2)), name_(std::move(name)) {
  if (phi1_.source->table() != phi2_.source->table())
    throw InputError("the two homomorphisms must have the same source group");
  for (const GroupHom* phi : {&phi1_, &phi2_}) {
    const HomReport r = check_hom(*phi);
    if (!r.passes) throw InputError("not a group homomorphism: " + r.message);
  }
  normal_forms_ = phi1_.injective() && phi2_.injective();
  for (int f = 0; f < 2; ++f) {
    const GroupHom& phi = f == 0 ? phi1_ : phi2_;
    const FiniteGroup& g = *phi.target;
    const FiniteGroup& h = *phi.source;
    rep_of_[f].assign(std::size_t(g.order()), -1);
    h_part_[f].assign(std::size_t(g.order()), -1);
    for (int x = 0; x < g.order(); ++x) {
      if (rep_of_[f][std::size_t(x)] >= 0) continue;
      // right coset phi(H) x; its smallest index is the representative
      int rep = x;
      for (int k = 0; k < h.order(); ++k) rep = std::min(rep, g.mul(phi(k), x));
      reps_[f].push_back(rep);
      for (int k = 0; k < h.order(); ++k) {
        const int y = g.mul(phi(k), x);
        rep_of_[f][std::size_t(y)] = rep;
      }
    }
    std::sort(reps_[f].begin(), reps_[f].end());
    if (normal_forms_) {
      for (int x = 0; x < g.order(); ++x) {
        const int target = g.mul(x, g.inverse(rep_of_[f][std::size_t(x)]));
        for (int k = 0; k < h.order(); ++k)
          if (phi(k) == target) h_part_[f][std::size_t(x)] = k;
      }
    }
  }
}

const std::vector<int>& AmalgamPresentation::coset_representatives(int factor) const {
  if (factor != 1 && factor != 2) throw DomainError("factor must be 1 or 2");
  return reps_[factor - 1];
}

AmalgamPresentation AmalgamPresentation::free_product() const {
  return AmalgamPresentation(GroupHom::from_trivial(g1()), GroupHom::from_trivial(g2()),
                             name_.empty() ? std::string() : name_ + "/free");
}

void AmalgamPresentation::validate_letter(const Letter& l) const {
  if (l.factor != 1 && l.factor != 2) throw DomainError("letter factor must be 1 or 2, got " + std::to_string(l.factor));
  if (l.element < 0 || l.element >= group(l.factor).order())
    throw DomainError("letter element " + std::to_string(l.element) + " out of range for factor " +
                      std::to_string(l.factor));
}

void AmalgamPresentation::require_normal_forms() const {
  if (!normal_forms_)
    throw DomainError("normal forms need injective structure maps; word equality for non-injective maps is not decided");
}

ReducedWord AmalgamPresentation::normal_form(const RawWord& w) const {
  require_normal_forms();
  for (const auto& l : w) validate_letter(l);
  const FiniteGroup& hgrp = *h();
  int hpart = hgrp.identity();
  std::vector<Letter> reversed;  // back() is the leftmost representative
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int f = it->factor;
    const FiniteGroup& g = group(f);
    const GroupHom& phi = this->phi(f);
    int x = g.mul(it->element, phi(hpart));
    if (!reversed.empty() && reversed.back().factor == f) {
      x = g.mul(x, reversed.back().element);
      reversed.pop_back();
    }
    const int rep = rep_of_[f - 1][std::size_t(x)];
    hpart = h_part_[f - 1][std::size_t(x)];
    if (rep != g.identity()) reversed.push_back(Letter{f, rep});
  }
  ReducedWord out;
  out.letters.assign(reversed.rbegin(), reversed.rend());
  out.h = hpart;
  return out;
}

RawWord AmalgamPresentation::to_letters(const ReducedWord& w) const {
  RawWord out;
  if (w.letters.empty()) {
    if (w.h != h()->identity()) out.push_back(Letter{1, phi1_(w.h)});
    return out;
  }
  out = w.letters;
  const int f = out.front().factor;
  out.front().element = group(f).mul(phi(f)(w.h), out.front().element);
  return out;
}

std::size_t AmalgamPresentation::length(const ReducedWord& w) const {
  if (!w.letters.empty()) return w.letters.size();
  return w.h == h()->identity() ? 0 : 1;
}

ReducedWord AmalgamPresentation::multiply(const ReducedWord& a, const ReducedWord& b) const {
  RawWord w = to_letters(a);
  const RawWord tail = to_letters(b);
  w.insert(w.end(), tail.begin(), tail.end());
  return normal_form(w);
}

ReducedWord AmalgamPresentation::inverse(const ReducedWord& a) const {
  RawWord w = to_letters(a);
  std::reverse(w.begin(), w.end());
  for (auto& l : w) l.element = group(l.factor).inverse(l.element);
  return normal_form(w);
}

std::vector<ReducedWord> enumerate_reduced_words(const AmalgamPresentation& p, int degree) {
  if (!p.has_normal_forms())
    throw DomainError("word enumeration needs injective structure maps");
  const Limits limits = Limits::current();
  if (degree < 0 || degree > limits.max_word_degree)
    throw SizeError("word degree " + std::to_string(degree) + " outside 0.." + std::to_string(limits.max_word_degree));
  const FiniteGroup& hgrp = *p.h();
  std::vector<ReducedWord> out;
  for (int hk = 0; hk < hgrp.order(); ++hk) {
    ReducedWord base;
    base.h = hk;
    if (p.length(base) <= std::size_t(degree)) out.push_back(base);
  }
  // alternating sequences of nontrivial representatives, grown breadth-first
  std::vector<std::vector<Letter>> frontier{{}};
  for (int k = 1; k <= degree; ++k) {
    std::vector<std::vector<Letter>> next;
    for (const auto& seq : frontier)
      for (int f = 1; f <= 2; ++f) {
        if (!seq.empty() && seq.back().factor == f) continue;
        for (int rep : p.coset_representatives(f)) {
          if (rep == p.group(f).identity()) continue;
          auto grown = seq;
          grown.push_back(Letter{f, rep});
          next.push_back(std::move(grown));
        }
      }
    for (const auto& seq : next)
      for (int hk = 0; hk < hgrp.order(); ++hk) out.push_back(ReducedWord{seq, hk});
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const ReducedWord& a, const ReducedWord& b) {
    const auto la = p.length(a), lb = p.length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

}  // namespace amg
