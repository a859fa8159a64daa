#include "msemi/partition.hpp"

#include <algorithm>

#include "msemi/error.hpp"

namespace msemi {

Partition Partition::from_class_of(int n, const std::vector<int>& raw) {
  if (int(raw.size()) != n) throw input_error("class map has wrong size");
  Partition p;
  p.n = n;
  p.class_of.assign(size_t(n), -1);
  std::vector<int> relabel;  // raw label -> class index, discovered in element order
  std::vector<int> raw_of;
  for (int i = 0; i < n; ++i) {
    int r = raw[size_t(i)];
    int idx = -1;
    for (size_t k = 0; k < raw_of.size(); ++k)
      if (raw_of[k] == r) { idx = int(k); break; }
    if (idx == -1) {
      idx = int(raw_of.size());
      raw_of.push_back(r);
      p.classes.emplace_back(n);
    }
    p.class_of[size_t(i)] = idx;
    p.classes[size_t(idx)].set(i);
  }
  return p;
}

Partition Partition::equality(int n) {
  std::vector<int> raw(size_t(n));
  for (int i = 0; i < n; ++i) raw[size_t(i)] = i;
  return from_class_of(n, raw);
}

Partition Partition::single(int n) {
  return from_class_of(n, std::vector<int>(size_t(n), 0));
}

Partition Partition::from_classes(int n, const std::vector<Subset>& classes) {
  std::vector<int> raw(size_t(n), -1);
  for (size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].universe() != n) throw input_error("partition class width mismatch");
    if (classes[k].empty()) throw input_error("partition classes must be nonempty");
    classes[k].for_each([&](int i) {
      if (raw[size_t(i)] != -1) throw input_error("partition classes overlap");
      raw[size_t(i)] = int(k);
    });
  }
  for (int i = 0; i < n; ++i)
    if (raw[size_t(i)] == -1)
      throw input_error("partition classes do not cover the carrier");
  return from_class_of(n, raw);
}

bool Partition::refines(const Partition& coarser) const {
  if (n != coarser.n) return false;
  for (const Subset& c : classes) {
    int rep = c.first();
    if (!coarser.classes[size_t(coarser.class_of[size_t(rep)])].contains(c))
      return false;
  }
  return true;
}

}  // namespace msemi
