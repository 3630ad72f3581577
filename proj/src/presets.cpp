#include "amalgam/presets.hpp"

#include <functional>
#include <map>

namespace amg::presets {

namespace {

PresentationPtr make(GroupHom phi1, GroupHom phi2, std::string name) {
  return std::make_shared<const AmalgamPresentation>(std::move(phi1), std::move(phi2), std::move(name));
}

const std::map<std::string, std::function<PresentationPtr()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<PresentationPtr()>, std::less<>> table{
      {"c2-star-c2", c2_star_c2},     {"c4-amalg-c2-c4", c4_amalg_c2_c4}, {"c2-amalg-c2-c2", c2_amalg_c2_c2},
      {"z4-star-z6", z4_star_z6},     {"trivial", trivial},               {"c2-star-c3", c2_star_c3},
  };
  return table;
}

}  // namespace

PresentationPtr c2_star_c2() {
  const auto c2 = FiniteGroup::cyclic(2);
  return make(GroupHom::from_trivial(c2), GroupHom::from_trivial(c2), "c2-star-c2");
}

PresentationPtr c4_amalg_c2_c4() {
  const auto c2 = FiniteGroup::cyclic(2);
  const auto c4 = FiniteGroup::cyclic(4);
  return make(GroupHom{c2, c4, {0, 2}}, GroupHom{c2, c4, {0, 2}}, "c4-amalg-c2-c4");
}

PresentationPtr c2_amalg_c2_c2() {
  const auto c2 = FiniteGroup::cyclic(2);
  return make(GroupHom::identity(c2), GroupHom::identity(c2), "c2-amalg-c2-c2");
}

PresentationPtr z4_star_z6() {
  return make(GroupHom::from_trivial(FiniteGroup::cyclic(4)), GroupHom::from_trivial(FiniteGroup::cyclic(6)),
              "z4-star-z6");
}

PresentationPtr trivial() {
  const auto one = FiniteGroup::trivial();
  return make(GroupHom::identity(one), GroupHom::identity(one), "trivial");
}

PresentationPtr c2_star_c3() {
  return make(GroupHom::from_trivial(FiniteGroup::cyclic(2)), GroupHom::from_trivial(FiniteGroup::cyclic(3)),
              "c2-star-c3");
}

PresentationPtr presentation(std::string_view name) {
  const auto& table = registry();
  const auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown presentation preset '" + std::string(name) + "'");
  return it->second();
}

std::vector<std::string> presentation_names() {
  std::vector<std::string> out;
  for (const auto& [name, make_fn] : registry()) out.push_back(name);
  return out;
}

}  // namespace amg::presets
