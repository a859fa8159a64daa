#pragma once

#include <string>
#include <vector>

#include "msemi/error.hpp"
#include "msemi/subset.hpp"

namespace msemi {

/// A finite multivalued operation: element labels plus an n x n table of
/// subsets of the carrier (cube[a][b] = a*b).  Immutable after construction.
/// No associativity is assumed; checking it is a separate operation.
class MultiOp {
 public:
  MultiOp(std::vector<std::string> names, std::vector<Subset> cube);

  /// Convenience constructor from per-cell element index lists.
  static MultiOp from_cells(std::vector<std::string> names,
                            const std::vector<std::vector<std::vector<int>>>& cells);

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[size_t(i)]; }

  const Subset& cell(int a, int b) const { return cube_[size_t(a) * size_t(n_) + size_t(b)]; }

  Subset carrier() const { return Subset::full(n_); }

  /// Index of a label, or -1 when absent.
  int index_of(const std::string& label) const;

  bool same_cube(const MultiOp& o) const { return n_ == o.n_ && cube_ == o.cube_; }
  bool operator==(const MultiOp& o) const { return names_ == o.names_ && same_cube(o); }
  bool operator!=(const MultiOp& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<std::string> names_;
  std::vector<Subset> cube_;  // row-major, cube_[a * n + b]
};

/// Default labels x1..xn for generated carriers.
std::vector<std::string> default_names(int n);

/// A label not yet present in names: tries base, then base', base'', ...
std::string fresh_name(const std::vector<std::string>& names, const std::string& base);

}  // namespace msemi
