#pragma once

#include <array>
#include <optional>
#include <vector>

#include "msemi/multiop.hpp"

namespace msemi {

/// Union of a*b over a in A, b in B (the power-set extension of the table).
Subset subset_product(const MultiOp& m, const Subset& A, const Subset& B);

struct AssocResult {
  bool ok = false;
  std::array<int, 3> witness{-1, -1, -1};  // lexicographically first violation
  Subset lhs, rhs;                         // the two sides at the witness
  explicit operator bool() const { return ok; }
};

/// Checks the union-associativity axiom for all triples.
AssocResult is_associative(const MultiOp& m);

/// Throws axiom_error (with the witness triple) unless m is associative.
void require_associative(const MultiOp& m);

std::optional<int> find_identity(const MultiOp& m);
std::optional<int> find_zero(const MultiOp& m);

/// Returns m itself when an identity exists, otherwise the (n+1)-element
/// extension with a fresh identity element appended.
MultiOp adjoin_identity(const MultiOp& m);

enum class ZeroMode { bullet, odot };

/// bullet: a*b union {0} on old elements, {0} elsewhere (always legal).
/// odot: a*b if nonempty else {0}; legal only for a quasi-semigroup
/// without zero (the result is then a semigroup with zero).
MultiOp adjoin_zero(const MultiOp& m, ZeroMode mode);

/// Removes the zero element, deleting it from every cell.
MultiOp strip_zero(const MultiOp& m);

struct IdempotentReport {
  Subset idempotents;        // e*e = {e}
  Subset quasi_idempotents;  // e in e*e
};
IdempotentReport idempotent_report(const MultiOp& m);

/// Reproduction axiom S*a = a*S = S for all a.  Requires associativity
/// (checked; axiom_error otherwise).
bool is_hypergroup(const MultiOp& m);

struct MultigroupResult {
  bool ok = false;
  std::vector<int> inverse;  // a -> a^{-1}, filled when ok
  std::string why;           // failure reason otherwise
  explicit operator bool() const { return ok; }
};

/// Identity + unique two-sided relative inverses + the reversal law
/// c in a*b iff c^{-1} in b^{-1}*a^{-1}.  Requires associativity (checked).
MultigroupResult is_multigroup(const MultiOp& m);

/// sigma must be a bijection on indices (input_error otherwise); true iff
/// sigma is involutive and sigma(a*b) = sigma(b)*sigma(a) cellwise.
bool is_involution(const MultiOp& m, const std::vector<int>& sigma);

enum class TableKind { semigroup, quasi_semigroup, proper_multisemigroup };

/// Finest applicable label; requires associativity (checked).
TableKind classify(const MultiOp& m);
const char* to_string(TableKind k);

/// Least submultisemigroup containing X (fixpoint of product closure).
Subset generated_submultisemigroup(const MultiOp& m, const Subset& X);

/// X^k with X^1 = X; k = 0 is rejected.
Subset power(const MultiOp& m, const Subset& X, int k);

}  // namespace msemi
