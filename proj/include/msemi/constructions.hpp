#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "msemi/multiop.hpp"
#include "msemi/rational.hpp"

namespace msemi {

/// An honest single-valued semigroup table; associativity is verified at
/// construction (input_error otherwise).
class SemigroupTable {
 public:
  SemigroupTable(int n, std::vector<int> table);  // row-major n*n entries

  int size() const { return n_; }
  int at(int a, int b) const { return tab_[size_t(a) * size_t(n_) + size_t(b)]; }

  std::optional<int> identity() const;
  bool is_group() const;

  /// Product of two subsets, elementwise.
  Subset set_product(const Subset& A, const Subset& B) const;
  /// S^1 a and a S^1 inside the semigroup.
  Subset left_principal(int a) const;
  Subset right_principal(int a) const;
  Subset two_sided_principal(int a) const;

 private:
  int n_;
  std::vector<int> tab_;
};

/// Exact non-negative structure constants c_{ij}^k of an associative product
/// on a based free module; both the sign and the associativity identity
/// sum_m c_{ij}^m c_{mk}^l = sum_m c_{jk}^m c_{im}^l are verified.
class StructureTensor {
 public:
  StructureTensor(int n, std::vector<Rational> coeffs);  // size n^3, c[(i*n+j)*n+k]

  int size() const { return n_; }
  const Rational& at(int i, int j, int k) const {
    return c_[(size_t(i) * size_t(n_) + size_t(j)) * size_t(n_) + size_t(k)];
  }

 private:
  int n_;
  std::vector<Rational> c_;
};

/// A finite poset; reflexivity, antisymmetry and transitivity are verified.
class Poset {
 public:
  Poset(int n, std::vector<Subset> leq);  // leq[a] = { b : a <= b }

  int size() const { return n_; }
  bool leq(int a, int b) const { return up_[size_t(a)].test(b); }
  Subset down(int a) const;  // { x : x <= a }

  static Poset chain(int k);
  static Poset disjoint_union(const std::vector<Poset>& parts);

 private:
  int n_;
  std::vector<Subset> up_;
};

// ---- generators ------------------------------------------------------------

/// s*t = X for all s,t.  X = {} gives the diamond table, X = S the bullet
/// hypergroup.
MultiOp trivial_multiop(int n, const Subset& X);

enum class CosetLevel { elements, cosets };

/// a*b = HaHb on G, or the coset-level table on H\G.  g must be a group and
/// H a subgroup (both verified).
MultiOp coset_multiop(const SemigroupTable& g, const Subset& H, CosetLevel level);

/// x *_f y = f^{-1}(f(x) * f(y)) for a surjection f : X -> S.
MultiOp inflation(const MultiOp& m, const std::vector<int>& f);

enum class IdealOpKind { L, R, J, L_cap, R_cap, J_cap };

/// The six ideal multioperations over a semigroup (products or intersections
/// of principal ideals).
MultiOp ideal_multiop(const SemigroupTable& s, IdealOpKind kind);

/// a*b = <a> cap <b> (monogenic subsemigroups).
MultiOp monogenic_multiop(const SemigroupTable& s);

/// i*j = { k : c_{ij}^k > 0 }.
MultiOp positive_basis_multiop(const StructureTensor& t);

/// The sl2 tensor-product support rule on highest weights.
std::vector<int> clebsch_gordan(int k, int l);

struct CgCheckResult {
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};
};
/// Exhaustive associativity check of the rule for all triples <= bound.
CgCheckResult cg_associativity_check(int bound);

/// a*b = (a x X x b) union (a x Y x b); equals the single variant with
/// sandwich X union Y.
MultiOp double_variant(const MultiOp& m, const Subset& X, const Subset& Y);

/// Cellwise union of two tables on the same carrier; requires the mixed
/// associativity compatibility (checked exhaustively, input_error on failure).
MultiOp general_double(const MultiOp& m1, const MultiOp& m2);

/// Words of length <= max_len; u*v = scattered subwords of uv up to max_len.
MultiOp subword_multiop(int alphabet_size, int max_len);

MultiOp disconnected_union(const MultiOp& m1, const MultiOp& m2);

/// a*b = f(a)f(b) in the semigroup; requires f(f(a)f(b)) = f(a)f(b) for all
/// pairs (checked, input_error naming the first violating pair).
MultiOp reproductive(const SemigroupTable& s, const std::vector<Subset>& f);

/// a*b = S when a != b, S minus {a} when a = b; hypergroup with no
/// quasi-idempotents (requires n >= 3).
MultiOp no_quasi_idempotent_hypergroup(int n);

/// Carrier X x X with (a,b)*(c,d) = down(a) x down(d); every comparability
/// component of the poset must have a unique minimal element.
MultiOp poset_band(const Poset& p);

/// Hardcoded published Cayley tables:
///   two_element, kl_a2, hecke_a2, s5_209, t_5207, t_531, kl_b2_T
MultiOp fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace msemi
