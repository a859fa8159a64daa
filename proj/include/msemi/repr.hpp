#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msemi/multiop.hpp"

namespace msemi {

/// A binary relation as a square bit matrix; rows are outputs and columns
/// inputs (maps operate from the right to the left), row-major.
class BoolMat {
 public:
  BoolMat() = default;
  explicit BoolMat(int n) : n_(n), row_(size_t(n), Subset(n)) {}

  static BoolMat identity(int n);

  int size() const { return n_; }
  bool get(int i, int j) const { return row_[size_t(i)].test(j); }
  void set(int i, int j) { row_[size_t(i)].set(j); }
  const Subset& row(int i) const { return row_[size_t(i)]; }

  BoolMat operator*(const BoolMat& o) const;  // boolean product
  BoolMat& operator+=(const BoolMat& o);      // boolean sum
  bool operator==(const BoolMat& o) const { return n_ == o.n_ && row_ == o.row_; }
  bool operator!=(const BoolMat& o) const { return !(*this == o); }

  std::string to_string() const;  // 0/1 grid

 private:
  int n_ = 0;
  std::vector<Subset> row_;
};

enum class Side { left, right };

/// Left: entry (y,x) = [y in a*x]; right: entry (y,x) = [y in x*a].
BoolMat regular_rep(const MultiOp& m, int a, Side side);

struct RepResult {
  bool ok = true;
  std::pair<int, int> witness{-1, -1};
  Side side = Side::left;
  explicit operator bool() const { return ok; }
};

/// Checks tau_a o tau_b = sum_{s in a*b} tau_s for all pairs, on both sides.
RepResult verify_rep(const MultiOp& m);

/// The representation attached to an L-class: the |L| x |L| matrix of the
/// action y in a*x restricted to L.  L must be an L-class of m.
BoolMat l_class_rep(const MultiOp& m, const Subset& L, int a);

}  // namespace msemi
