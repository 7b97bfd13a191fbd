#pragma once

// Combinatorial Hopf algebras of digraphs (isomorphism classes), posets and
// permutations, written once against a small species trait.
//
// Coproducts run over ordered pairs of complementary subsets *including* the
// empty ones, so Delta(x) always contains [empty] (x) x and x (x) [empty].
// Those terms are what make the counit axiom hold.

#include <map>
#include <string>
#include <vector>

#include "rbsym/combinatorics.hpp"
#include "rbsym/digraph.hpp"
#include "rbsym/errors.hpp"
#include "rbsym/exact.hpp"
#include "rbsym/order.hpp"
#include "rbsym/qsym.hpp"

namespace rbsym {

enum class Species { DigraphClasses, Posets, Permutations };

std::string species_name(Species s);

template <class Object>
struct HopfSpecies;

template <>
struct HopfSpecies<Digraph> {
  static constexpr Species tag = Species::DigraphClasses;
  static Digraph unit() { return Digraph(0); }
  static int degree(const Digraph& x) { return x.n(); }
  /// Basis keys are isomorphism-class representatives.
  static Digraph key(const Digraph& x) { return canonical_form(x); }
  static Digraph multiply(const Digraph& a, const Digraph& b) { return product(a, b); }
  static Digraph restrict_to(const Digraph& x, Mask s) { return restrict(x, s); }
  /// Listings with empty descent set.
  static Integer character(const Digraph& x) {
    return Integer(count_hamiltonian_paths(complement(x)));
  }
};

template <>
struct HopfSpecies<Poset> {
  static constexpr Species tag = Species::Posets;
  static Poset unit() { return Poset(0); }
  static int degree(const Poset& p) { return p.n(); }
  static Poset key(const Poset& p) { return p; }
  static Poset multiply(const Poset& a, const Poset& b) { return ordinal_product(a, b); }
  static Poset restrict_to(const Poset& p, Mask s) { return restrict(p, s); }
  static Integer character(const Poset& p) { return Integer(linear_extensions_count(p)); }
};

template <>
struct HopfSpecies<Permutation> {
  static constexpr Species tag = Species::Permutations;
  static Permutation unit() { return Permutation{}; }
  static int degree(const Permutation& s) { return s.size(); }
  static Permutation key(const Permutation& s) { return s; }
  /// (pi(1), ..., pi(m), sigma(1) + m, ..., sigma(n) + m).
  static Permutation multiply(const Permutation& a, const Permutation& b);
  /// st(sigma|_S): the values at positions S, standardized.
  static Permutation restrict_to(const Permutation& s, Mask positions);
  static Integer character(const Permutation& s) { return Integer(sigma_reversing_count(s)); }
};

/// Integer combination of basis objects of one species.
template <class Object>
class FreeModuleElement {
public:
  using Traits = HopfSpecies<Object>;
  using term_map = std::map<Object, Integer>;

  FreeModuleElement() = default;
  explicit FreeModuleElement(const Object& x, Integer coeff = 1) { add(x, coeff); }

  static constexpr Species species() { return Traits::tag; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Normalizes `x` to its basis key first.
  void add(const Object& x, const Integer& coeff) { add_key(Traits::key(x), coeff); }
  /// For callers that already hold a basis key.
  void add_key(const Object& key, const Integer& coeff) {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  Integer coefficient(const Object& x) const {
    auto it = terms_.find(Traits::key(x));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  FreeModuleElement& operator+=(const FreeModuleElement& o) {
    for (const auto& [k, c] : o.terms_)
      add_key(k, c);
    return *this;
  }
  friend FreeModuleElement operator+(FreeModuleElement a, const FreeModuleElement& b) { return a += b; }
  friend bool operator==(const FreeModuleElement&, const FreeModuleElement&) = default;

private:
  term_map terms_;
};

/// Integer combination of k-tuples of basis objects.
template <class Object>
class TensorElement {
public:
  using Traits = HopfSpecies<Object>;
  using key_type = std::vector<Object>;
  using term_map = std::map<key_type, Integer>;

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const key_type& key, const Integer& coeff) {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  Integer coefficient(const key_type& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_)
      add(k, c);
    return *this;
  }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
  term_map terms_;
};

// -- algebra -----------------------------------------------------------------

template <class Object>
FreeModuleElement<Object> hopf_product(const FreeModuleElement<Object>& a,
                                       const FreeModuleElement<Object>& b) {
  using T = HopfSpecies<Object>;
  FreeModuleElement<Object> out;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms())
      out.add(T::multiply(x, y), cx * cy);
  return out;
}

/// Delta on a single basis object.
template <class Object>
TensorElement<Object> coproduct_of(const Object& x) {
  using T = HopfSpecies<Object>;
  TensorElement<Object> out;
  const Mask all = full_mask(T::degree(x));
  for (Mask left = 0;; left = (left - all) & all) {
    out.add({T::key(T::restrict_to(x, left)), T::key(T::restrict_to(x, all & ~left))}, 1);
    if (left == all)
      break;
  }
  return out;
}

template <class Object>
TensorElement<Object> hopf_coproduct(const FreeModuleElement<Object>& a) {
  TensorElement<Object> out;
  for (const auto& [x, c] : a.terms()) {
    const TensorElement<Object> d = coproduct_of(x);
    for (const auto& [pair, m] : d.terms())
      out.add(pair, c * m);
  }
  return out;
}

/// Applies Delta to tensor factor `slot`, turning k-tuples into (k+1)-tuples.
template <class Object>
TensorElement<Object> coproduct_at(const TensorElement<Object>& t, std::size_t slot) {
  TensorElement<Object> out;
  for (const auto& [key, c] : t.terms()) {
    if (slot >= key.size())
      throw ValidationError("coproduct_at: slot out of range");
    const TensorElement<Object> d = coproduct_of(key[slot]);
    for (const auto& [pair, m] : d.terms()) {
      std::vector<Object> next;
      next.reserve(key.size() + 1);
      next.insert(next.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
      next.push_back(pair[0]);
      next.push_back(pair[1]);
      next.insert(next.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
      out.add(next, c * m);
    }
  }
  return out;
}

/// Delta^{(k-1)} of a basis object: k-tuples, by repeatedly splitting the
/// last factor.
template <class Object>
TensorElement<Object> iterated_coproduct(const Object& x, int k) {
  if (k < 1)
    throw ValidationError("iterated_coproduct needs k >= 1");
  TensorElement<Object> t;
  t.add({HopfSpecies<Object>::key(x)}, 1);
  for (int i = 1; i < k; ++i)
    t = coproduct_at(t, static_cast<std::size_t>(i - 1));
  return t;
}

/// Componentwise product of tensors of equal arity.
template <class Object>
TensorElement<Object> tensor_product(const TensorElement<Object>& a, const TensorElement<Object>& b) {
  using T = HopfSpecies<Object>;
  TensorElement<Object> out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.size() != kb.size())
        throw ValidationError("tensor_product: arity mismatch");
      std::vector<Object> k(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i)
        k[i] = T::key(T::multiply(ka[i], kb[i]));
      out.add(k, ca * cb);
    }
  return out;
}

/// Swaps the two factors of every 2-tuple.
template <class Object>
TensorElement<Object> swap_factors(const TensorElement<Object>& t) {
  TensorElement<Object> out;
  for (const auto& [k, c] : t.terms()) {
    if (k.size() != 2)
      throw ValidationError("swap_factors expects 2-tuples");
    out.add({k[1], k[0]}, c);
  }
  return out;
}

template <class Object>
Integer character(const FreeModuleElement<Object>& a) {
  Integer total = 0;
  for (const auto& [x, c] : a.terms())
    total += c * HopfSpecies<Object>::character(x);
  return total;
}

namespace detail {

/// Delta^{(k-1)} followed by projection onto degrees (a_1, ..., a_k), then
/// zeta on every factor. The coproduct is split off one factor at a time and
/// the projection applied to that factor immediately; coassociativity makes
/// this the same map. `cache` memoizes Delta on basis keys.
template <class Object>
Integer zeta_alpha_of(const Object& x, const Composition& alpha,
                      std::map<Object, TensorElement<Object>>& cache) {
  using T = HopfSpecies<Object>;
  auto delta = [&](const Object& y) -> const TensorElement<Object>& {
    auto it = cache.find(y);
    if (it == cache.end())
      it = cache.emplace(y, coproduct_of(y)).first;
    return it->second;
  };
  // current: (product of zetas of peeled factors, remaining factor) -> coeff
  std::map<Object, Integer> current{{T::key(x), Integer(1)}};
  for (int i = 0; i + 1 < alpha.length(); ++i) {
    std::map<Object, Integer> next;
    for (const auto& [rest, c] : current) {
      for (const auto& [pair, m] : delta(rest).terms()) {
        if (T::degree(pair[0]) != alpha[static_cast<std::size_t>(i)])
          continue;
        const Integer z = T::character(pair[0]);
        if (z != 0)
          next[pair[1]] += c * m * z;
      }
    }
    current = std::move(next);
  }
  Integer total = 0;
  for (const auto& [rest, c] : current)
    if (T::degree(rest) == alpha[static_cast<std::size_t>(alpha.length() - 1)])
      total += c * T::character(rest);
  return total;
}

} // namespace detail

/// zeta_alpha of a homogeneous element of degree |alpha|.
template <class Object>
Integer zeta_alpha(const FreeModuleElement<Object>& a, const Composition& alpha) {
  using T = HopfSpecies<Object>;
  std::map<Object, TensorElement<Object>> cache;
  Integer total = 0;
  for (const auto& [x, c] : a.terms()) {
    if (T::degree(x) != alpha.degree())
      throw ValidationError("zeta_alpha: element degree " + std::to_string(T::degree(x)) +
                            " differs from |alpha| = " + std::to_string(alpha.degree()));
    if (alpha.degree() == 0) {
      total += c * T::character(x);
      continue;
    }
    total += c * detail::zeta_alpha_of(x, alpha, cache);
  }
  return total;
}

/// Universal morphism to QSym: sum over alpha of zeta_alpha(h) M_alpha,
/// degree by degree.
template <class Object>
QSymElement psi(const FreeModuleElement<Object>& a) {
  using T = HopfSpecies<Object>;
  std::map<Object, TensorElement<Object>> cache;
  QSymElement out(QBasis::Monomial);
  for (const auto& [x, c] : a.terms()) {
    const int n = T::degree(x);
    if (n == 0) {
      out.add(Composition{}, c * T::character(x));
      continue;
    }
    for_each_composition(n, [&](const Composition& alpha) {
      out.add(alpha, c * detail::zeta_alpha_of(x, alpha, cache));
    });
  }
  return out;
}

// -- morphisms ---------------------------------------------------------------

/// sigma -> P_sigma, extended linearly.
FreeModuleElement<Poset> morphism_f(const FreeModuleElement<Permutation>& a);
FreeModuleElement<Poset> morphism_f(const Permutation& sigma);
/// P -> [D_P], extended linearly.
FreeModuleElement<Digraph> morphism_g(const FreeModuleElement<Poset>& a);
FreeModuleElement<Digraph> morphism_g(const Poset& p);

/// Applies a basis map factorwise to a tensor.
template <class From, class To, class Fn>
TensorElement<To> map_tensor(const TensorElement<From>& t, Fn&& fn) {
  TensorElement<To> out;
  for (const auto& [k, c] : t.terms()) {
    std::vector<To> mapped;
    mapped.reserve(k.size());
    for (const auto& x : k)
      mapped.push_back(HopfSpecies<To>::key(fn(x)));
    out.add(mapped, c);
  }
  return out;
}

} // namespace rbsym
