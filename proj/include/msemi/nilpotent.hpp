#pragma once

#include <vector>

#include "msemi/multiop.hpp"

namespace msemi {

/// Directed graph on the carrier with an edge s -> t iff t in a*s for some a.
struct ActionDigraph {
  int n = 0;
  std::vector<Subset> out;  // out[s] = { t : s -> t }
};

ActionDigraph action_digraph(const MultiOp& m);

struct NilpotencyResult {
  bool nilpotent = false;
  int degree = 0;           // minimal k with S^k empty, when nilpotent
  std::vector<int> cycle;   // a directed cycle in the action digraph otherwise
  explicit operator bool() const { return nilpotent; }
};

/// Nilpotency via acyclicity of the action digraph, with the degree read off
/// the longest directed path (edge count + 2) and cross-validated against
/// direct S^k iteration; any disagreement is an internal_error.
NilpotencyResult nilpotency(const MultiOp& m);

/// s^k = {} for some k (k <= n+1 suffices on an n-element carrier).
bool element_nilpotent(const MultiOp& m, int s);

/// R(S) = { s : S^1*s*S^1 is nilpotent }; verified to be a nilpotent
/// two-sided ideal before returning (internal_error otherwise).
Subset radical(const MultiOp& m);

/// All inclusion-maximal nonempty subsets closed under * with some power
/// empty.  Exponential search; n above the limit is a resource_error.
std::vector<Subset> maximal_nilpotent_submultisemigroups(const MultiOp& m,
                                                         int limit = 12);

}  // namespace msemi
