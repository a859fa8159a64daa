#pragma once

#include <map>
#include <string>
#include <vector>

#include "msemi/constructions.hpp"
#include "msemi/multiop.hpp"
#include "msemi/rational.hpp"

namespace msemi {

/// A finite Coxeter group of small rank, fully enumerated in a faithful
/// concrete model (permutations for A_n, signed permutations for B_n, the
/// dihedral model for I2(m)).  Elements are indexed canonically by
/// (length, lexicographically minimal reduced word); index 0 is the identity.
class CoxeterGroup {
 public:
  /// kind: A1, A2, A3, B2, B3 or I2(m) for m >= 3.
  static CoxeterGroup build(const std::string& kind);

  const std::string& kind() const { return kind_; }
  int rank() const { return rank_; }
  int size() const { return int(length_.size()); }
  int coxeter_m(int i, int j) const { return cox_[size_t(i)][size_t(j)]; }

  int length(int w) const { return length_[size_t(w)]; }
  const std::vector<int>& word(int w) const { return word_[size_t(w)]; }
  const std::string& name(int w) const { return names_[size_t(w)]; }

  int left_mul(int s, int w) const { return left_[size_t(w)][size_t(s)]; }
  int right_mul(int w, int s) const { return right_[size_t(w)][size_t(s)]; }
  int product(int v, int w) const;
  int inverse(int w) const { return inv_[size_t(w)]; }
  int longest_element() const { return size() - 1; }

  SemigroupTable group_table() const;

 private:
  CoxeterGroup() = default;
  void verify() const;  // braid relations, length steps, unique longest

  std::string kind_;
  int rank_ = 0;
  std::vector<std::vector<int>> cox_;
  std::vector<int> length_;
  std::vector<std::vector<int>> word_;   // lex-min reduced words
  std::vector<std::string> names_;
  std::vector<std::vector<int>> left_;   // left_[w][s] = s.w
  std::vector<std::vector<int>> right_;  // right_[w][s] = w.s
  std::vector<int> inv_;
};

/// A vector in the standard Hecke basis: element index -> exact positive
/// rational coefficient (zeros are never stored); q > 1.
struct HeckeVec {
  Rational q{2};
  std::map<int, Rational> coeff;
};

HeckeVec hecke_basis(const CoxeterGroup& W, int w, const Rational& q);

/// Left multiplication by the generator basis element H_s, by the quadratic
/// relation: H_s H_x = H_{sx} when l(sx) > l(x), else (q-1)H_x + qH_{sx}.
HeckeVec hecke_gen_mul(const CoxeterGroup& W, int s, const HeckeVec& v);

/// H_{w1} H_{w2}, expanding w1's stored reduced word rightmost-first.
HeckeVec hecke_mul(const CoxeterGroup& W, int w1, int w2, const Rational& q);

/// The Boolean Hecke multisemigroup: x*y = support of H_x H_y.
MultiOp boolean_hecke(const CoxeterGroup& W, const Rational& q);

/// The full standard-basis structure tensor at q (for the positive-basis
/// construction cross-check).
StructureTensor hecke_structure_tensor(const CoxeterGroup& W, const Rational& q);

}  // namespace msemi
