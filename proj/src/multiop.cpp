#include "msemi/multiop.hpp"

#include <set>

namespace msemi {

MultiOp::MultiOp(std::vector<std::string> names, std::vector<Subset> cube)
    : n_(int(names.size())), names_(std::move(names)), cube_(std::move(cube)) {
  if (n_ < 1) throw input_error("carrier must be nonempty");
  if (cube_.size() != size_t(n_) * size_t(n_))
    throw input_error("table must have n*n cells");
  std::set<std::string> seen;
  for (const auto& s : names_) {
    if (s.empty()) throw input_error("element labels must be nonempty");
    if (!seen.insert(s).second) throw input_error("duplicate element label: " + s);
  }
  for (const auto& c : cube_)
    if (c.universe() != n_)
      throw input_error("cell width does not match the carrier size");
}

MultiOp MultiOp::from_cells(std::vector<std::string> names,
                            const std::vector<std::vector<std::vector<int>>>& cells) {
  const int n = int(names.size());
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  if (cells.size() != size_t(n)) throw input_error("table must have n rows");
  for (const auto& row : cells) {
    if (row.size() != size_t(n)) throw input_error("table rows must have n cells");
    for (const auto& cell : row) {
      Subset s(n);
      for (int i : cell) {
        if (i < 0 || i >= n) throw input_error("cell entry out of range");
        s.set(i);
      }
      cube.push_back(std::move(s));
    }
  }
  return MultiOp(std::move(names), std::move(cube));
}

int MultiOp::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (names_[size_t(i)] == label) return i;
  return -1;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  out.reserve(size_t(n));
  for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

std::string fresh_name(const std::vector<std::string>& names, const std::string& base) {
  std::string cand = base;
  auto taken = [&](const std::string& s) {
    for (const auto& t : names)
      if (t == s) return true;
    return false;
  };
  while (taken(cand)) cand += "'";
  return cand;
}

}  // namespace msemi
