#include "rbsym/hopf.hpp"

namespace rbsym {

std::string species_name(Species s) {
  switch (s) {
  case Species::DigraphClasses:
    return "digraph_classes";
  case Species::Posets:
    return "posets";
  case Species::Permutations:
    return "permutations";
  }
  return "?";
}

Permutation HopfSpecies<Permutation>::multiply(const Permutation& a, const Permutation& b) {
  std::vector<int> img = a.images();
  const int m = a.size();
  for (int v : b.images())
    img.push_back(v + m);
  return Permutation(std::move(img));
}

Permutation HopfSpecies<Permutation>::restrict_to(const Permutation& s, Mask positions) {
  if (s.size() < 64 && (positions >> s.size()) != 0)
    throw ValidationError("restriction positions outside [n]");
  std::vector<int> word;
  for (int i : mask_elements(positions))
    word.push_back(s(i));
  return standardize(word);
}

FreeModuleElement<Poset> morphism_f(const Permutation& sigma) {
  return FreeModuleElement<Poset>(perm_to_poset(sigma));
}

FreeModuleElement<Poset> morphism_f(const FreeModuleElement<Permutation>& a) {
  FreeModuleElement<Poset> out;
  for (const auto& [s, c] : a.terms())
    out.add(perm_to_poset(s), c);
  return out;
}

FreeModuleElement<Digraph> morphism_g(const Poset& p) {
  return FreeModuleElement<Digraph>(poset_to_digraph(p));
}

FreeModuleElement<Digraph> morphism_g(const FreeModuleElement<Poset>& a) {
  FreeModuleElement<Digraph> out;
  for (const auto& [p, c] : a.terms())
    out.add(poset_to_digraph(p), c);
  return out;
}

} // namespace rbsym
