#pragma once

#include <vector>

#include "msemi/subset.hpp"

namespace msemi {

/// A partition of {0,...,n-1}.  Classes are numbered in order of their least
/// element, so equal partitions compare equal structurally.
struct Partition {
  int n = 0;
  std::vector<int> class_of;      // element -> class index
  std::vector<Subset> classes;    // nonempty, disjoint, covering

  int size() const { return int(classes.size()); }

  /// Normalizes an arbitrary labelling (classes renumbered by least element).
  static Partition from_class_of(int n, const std::vector<int>& raw);

  static Partition equality(int n);
  static Partition single(int n);

  /// Builds from explicit classes; throws input_error unless they form a
  /// partition of {0,...,n-1}.
  static Partition from_classes(int n, const std::vector<Subset>& classes);

  bool operator==(const Partition& o) const {
    return n == o.n && class_of == o.class_of;
  }

  /// True iff every class of *this is contained in a class of coarser.
  bool refines(const Partition& coarser) const;
};

}  // namespace msemi
