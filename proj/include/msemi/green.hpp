#pragma once

#include <utility>
#include <vector>

#include "msemi/multiop.hpp"
#include "msemi/partition.hpp"

namespace msemi {

// Functions in this header assume the table is associative; the CLI checks
// before calling, library callers are expected to do the same.

enum class IdealKind { left, right, twosided };

/// S^1*a, a*S^1 or S^1*a*S^1 with the identity adjunction simulated.
Subset principal_ideal(const MultiOp& m, int a, IdealKind kind);

struct GreenData {
  // leq_X[a] = { b : a <=_X b } (preorder by principal-ideal inclusion)
  std::vector<Subset> leq_L, leq_R, leq_J;
  Partition L, R, J, H, D;
};

GreenData green_data(const MultiOp& m);

bool is_simple(const MultiOp& m);

/// Elements whose principal left and right ideals are both minimal.
Subset quarks(const MultiOp& m);

enum class Simplicity { not_simple, simple, strongly_simple };
Simplicity classify_simplicity(const MultiOp& m);
const char* to_string(Simplicity s);

/// Boolean incidence matrix over (L-classes x R-classes): entry 1 iff the
/// intersection is a hypergroup H-class.  Requires a strongly simple input
/// other than the singleton 0 (input_error otherwise).
struct IncidenceMatrix {
  std::vector<Subset> l_classes, r_classes;  // ordered by least element
  std::vector<std::vector<bool>> ones;       // ones[i][j] for (L_i, R_j)
};
IncidenceMatrix incidence_matrix(const MultiOp& m);

struct CommutationResult {
  bool ok = false;
  std::pair<int, int> witness{-1, -1};  // lexicographically first in the
                                        // symmetric difference of LoR, RoL
  explicit operator bool() const { return ok; }
};

/// Pass iff L o R = R o L as relations ((x,y) in A o B iff x A z B y).
CommutationResult green_commutation(const MultiOp& m);

}  // namespace msemi
