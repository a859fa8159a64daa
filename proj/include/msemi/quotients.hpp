#pragma once

#include <string>
#include <vector>

#include "msemi/multiop.hpp"
#include "msemi/partition.hpp"

namespace msemi {

struct CongruenceResult {
  bool ok = true;
  // witness of the first failure: related pair (a,b), context c, the element
  // of c*a / a*c (per side) with no related partner on the other product
  int a = -1, b = -1, c = -1, elem = -1;
  bool left_side = true;
  explicit operator bool() const { return ok; }
  std::string describe(const std::vector<std::string>& names) const;
};

/// The paper's matching condition, quantified literally: for a ~ b and every
/// pair (s, t) in (c*a) x (c*b) there must be partners s' in c*b, t' in c*a
/// with s ~ s', t ~ t' (so the condition is vacuous when either product is
/// empty), and symmetrically on the right.
CongruenceResult is_congruence(const MultiOp& m, const Partition& p);

/// Class-wise saturation condition j(A)*j(B) subseteq j(A*B) over all pairs
/// of classes.  Kept as a second route; agreement with is_congruence is a
/// test-level property, not assumed.
CongruenceResult is_congruence_saturated(const MultiOp& m, const Partition& p);

/// Quotient by a congruence.  Requires is_congruence(m, p) (input_error with
/// the witness otherwise); also re-verifies that the canonical class map is a
/// strong homomorphism and rejects the input when it is not (possible for
/// congruences mixing empty and nonempty products across a class pair).
MultiOp quotient(const MultiOp& m, const Partition& p);

/// Rees quotient modulo a two-sided ideal I != S (possibly empty; verified).
MultiOp rees_quotient(const MultiOp& m, const Subset& I);

struct HomResult {
  bool ok = true;
  int a = -1, b = -1;  // first failing pair
  explicit operator bool() const { return ok; }
};

/// phi : S -> T elementwise; checks union_{s in a*b} {phi(s)} = phi(a) o phi(b).
HomResult is_strong_hom(const MultiOp& m, const MultiOp& target,
                        const std::vector<int>& phi);

/// Fibers of phi (nonempty ones) as a partition of the source.
Partition kernel(int source_size, const std::vector<int>& phi);

/// phi : S -> 2^T; checks union_{s in a*b} phi(s) = phi(a) * phi(b).
HomResult is_weak_hom(const MultiOp& m, const MultiOp& target,
                      const std::vector<Subset>& phi);

/// Restriction of m to its support Q(S) followed by the quotient by the
/// H-relation of m; verified against the closed formula
/// (I,J).(I',J') = (I',J) if (I cap J)*(I' cap J') != {} else {}.
/// Requires a nonempty support (input_error otherwise).
MultiOp support_quotient(const MultiOp& m);

}  // namespace msemi
