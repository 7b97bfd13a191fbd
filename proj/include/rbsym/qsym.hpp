#pragma once

// Sparse exact elements of QSym (M and F bases) and Sym (power sums and
// symmetric monomials).
//
// F-basis terms are keyed by composition: F_I of degree n is stored under
// comp(I). Mixed degrees are allowed in a single element.

#include <map>
#include <string>

#include "rbsym/combinatorics.hpp"
#include "rbsym/errors.hpp"
#include "rbsym/exact.hpp"

namespace rbsym {

enum class QBasis { Monomial, Fundamental };
enum class SymBasis { PowerSum, MonomialSym };

/// "M" / "F" / "p" / "m".
std::string basis_name(QBasis b);
std::string basis_name(SymBasis b);

template <class Key, class Coeff, class Tag>
class SparseElement {
public:
  using key_type = Key;
  using coeff_type = Coeff;
  using basis_type = Tag;
  using term_map = std::map<Key, Coeff>;

  explicit SparseElement(Tag basis) : basis_(basis) {}
  SparseElement(Tag basis, const Key& key, Coeff coeff = Coeff(1)) : basis_(basis) {
    add(key, coeff);
  }

  Tag basis() const { return basis_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& key, const Coeff& coeff) {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Coeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Terms of one degree.
  SparseElement degree_part(int n) const {
    SparseElement out(basis_);
    for (const auto& [k, c] : terms_)
      if (k.degree() == n)
        out.terms_.emplace(k, c);
    return out;
  }

  SparseElement& operator+=(const SparseElement& o) {
    require_same_basis(o);
    for (const auto& [k, c] : o.terms_)
      add(k, c);
    return *this;
  }
  SparseElement& operator-=(const SparseElement& o) {
    require_same_basis(o);
    for (const auto& [k, c] : o.terms_)
      add(k, -c);
    return *this;
  }
  SparseElement& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_)
      c *= s;
    return *this;
  }
  friend SparseElement operator+(SparseElement a, const SparseElement& b) { return a += b; }
  friend SparseElement operator-(SparseElement a, const SparseElement& b) { return a -= b; }
  friend SparseElement operator*(SparseElement a, const Coeff& s) { return a *= s; }
  friend bool operator==(const SparseElement& a, const SparseElement& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

private:
  void require_same_basis(const SparseElement& o) const;

  Tag basis_;
  term_map terms_;
};

template <class Key, class Coeff, class Tag>
void SparseElement<Key, Coeff, Tag>::require_same_basis(const SparseElement& o) const {
  if (basis_ != o.basis_)
    throw ValidationError("cannot combine elements of different bases (" + basis_name(basis_) +
                          " vs " + basis_name(o.basis_) + ")");
}

using QSymElement = SparseElement<Composition, Integer, QBasis>;
using SymElement = SparseElement<Partition, Rational, SymBasis>;

// -- conversions -------------------------------------------------------------

/// F_I = sum over J containing I of M_J.
QSymElement f_to_m(const QSymElement& x);
/// Inverse of f_to_m: M_I = sum over J containing I of (-1)^{|J - I|} F_J.
QSymElement m_to_f(const QSymElement& x);

/// Quasi-shuffle product in the M basis.
QSymElement m_product(const QSymElement& a, const QSymElement& b);

/// Integral M-expansion of a power-sum element; PrecisionError on a
/// fractional coefficient.
QSymElement p_to_m(const SymElement& x);

/// True when, degree by degree, all rearrangements of each partition carry
/// the same M-coefficient.
bool is_symmetric(const QSymElement& x);

/// Power-sum expansion of a symmetric M-expansion; DomainError when the
/// input is not symmetric.
SymElement m_to_p(const QSymElement& x);

/// Product in the power-sum basis (p_lambda p_mu = p_{lambda cup mu}).
SymElement p_product(const SymElement& a, const SymElement& b);

/// Value at x_1 = ... = x_m = 1, remaining variables 0.
Rational principal_specialization(const QSymElement& x, int m);
Rational principal_specialization(const SymElement& x, int m);

/// Human-readable rendering, e.g. "p[1,1]: 1, p[2]: 1"; "0" for zero.
std::string to_text(const QSymElement& x);
std::string to_text(const SymElement& x);

} // namespace rbsym
