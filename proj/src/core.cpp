#include "msemi/core.hpp"

#include <algorithm>
#include <string>

namespace msemi {

Subset subset_product(const MultiOp& m, const Subset& A, const Subset& B) {
  const int n = m.size();
  if (A.universe() != n || B.universe() != n)
    throw input_error("subset_product: operand width does not match the carrier");
  Subset out(n);
  A.for_each([&](int a) {
    B.for_each([&](int b) { out |= m.cell(a, b); });
  });
  return out;
}

AssocResult is_associative(const MultiOp& m) {
  const int n = m.size();
  const Subset full = Subset::full(n);
  AssocResult res;
  Subset lhs(n), rhs(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        lhs = Subset(n);
        m.cell(b, c).for_each([&](int t) {
          if (!lhs.is_full()) lhs |= m.cell(a, t);
        });
        rhs = Subset(n);
        m.cell(a, b).for_each([&](int s) {
          if (!rhs.is_full()) rhs |= m.cell(s, c);
        });
        if (lhs != rhs) {
          res.ok = false;
          res.witness = {a, b, c};
          res.lhs = lhs;
          res.rhs = rhs;
          return res;
        }
      }
  res.ok = true;
  res.lhs = res.rhs = Subset(n);
  return res;
}

void require_associative(const MultiOp& m) {
  AssocResult r = is_associative(m);
  if (!r.ok)
    throw axiom_error("operation is not associative; witness (" +
                      m.name(r.witness[0]) + "," + m.name(r.witness[1]) + "," +
                      m.name(r.witness[2]) + ")");
}

std::optional<int> find_identity(const MultiOp& m) {
  const int n = m.size();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = m.cell(e, a).is_singleton(a) && m.cell(a, e).is_singleton(a);
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<int> find_zero(const MultiOp& m) {
  const int n = m.size();
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = m.cell(z, a).is_singleton(z) && m.cell(a, z).is_singleton(z);
    if (ok) return z;
  }
  return std::nullopt;
}

MultiOp adjoin_identity(const MultiOp& m) {
  if (find_identity(m)) return m;
  const int n = m.size();
  std::vector<std::string> names = m.names();
  names.push_back(fresh_name(names, "1"));
  std::vector<Subset> cube(size_t(n + 1) * size_t(n + 1), Subset(n + 1));
  auto at = [&](int a, int b) -> Subset& { return cube[size_t(a) * size_t(n + 1) + size_t(b)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.cell(a, b).for_each([&](int t) { at(a, b).set(t); });
  for (int a = 0; a <= n; ++a) {
    at(n, a) = Subset::single(n + 1, a);
    at(a, n) = Subset::single(n + 1, a);
  }
  return MultiOp(std::move(names), std::move(cube));
}

MultiOp adjoin_zero(const MultiOp& m, ZeroMode mode) {
  const int n = m.size();
  if (mode == ZeroMode::odot) {
    if (find_zero(m)) throw input_error("odot adjunction requires a table without zero");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (m.cell(a, b).count() > 1)
          throw input_error("odot adjunction requires a quasi-semigroup");
  }
  std::vector<std::string> names = m.names();
  names.push_back(fresh_name(names, "0"));
  std::vector<Subset> cube(size_t(n + 1) * size_t(n + 1), Subset(n + 1));
  auto at = [&](int a, int b) -> Subset& { return cube[size_t(a) * size_t(n + 1) + size_t(b)]; };
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      Subset& cell = at(a, b);
      if (a == n || b == n) {
        cell.set(n);
        continue;
      }
      m.cell(a, b).for_each([&](int t) { cell.set(t); });
      if (mode == ZeroMode::bullet || cell.empty()) cell.set(n);
    }
  return MultiOp(std::move(names), std::move(cube));
}

MultiOp strip_zero(const MultiOp& m) {
  auto z = find_zero(m);
  if (!z) throw input_error("strip_zero: the table has no zero element");
  const int n = m.size();
  if (n <= 1) throw input_error("strip_zero: carrier must have more than one element");
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (i != *z) keep.push_back(i);
  std::vector<std::string> names;
  for (int i : keep) names.push_back(m.name(i));
  std::vector<Subset> cube;
  cube.reserve(keep.size() * keep.size());
  for (int a : keep)
    for (int b : keep) {
      Subset cell(n - 1);
      for (int j = 0; j < n - 1; ++j)
        if (m.cell(a, b).test(keep[size_t(j)])) cell.set(j);
      cube.push_back(std::move(cell));
    }
  return MultiOp(std::move(names), std::move(cube));
}

IdempotentReport idempotent_report(const MultiOp& m) {
  const int n = m.size();
  IdempotentReport rep{Subset(n), Subset(n)};
  for (int e = 0; e < n; ++e) {
    if (m.cell(e, e).test(e)) {
      rep.quasi_idempotents.set(e);
      if (m.cell(e, e).count() == 1) rep.idempotents.set(e);
    }
  }
  return rep;
}

bool is_hypergroup(const MultiOp& m) {
  require_associative(m);
  const int n = m.size();
  const Subset full = Subset::full(n);
  for (int a = 0; a < n; ++a) {
    Subset Sa(n), aS(n);
    for (int s = 0; s < n; ++s) {
      Sa |= m.cell(s, a);
      aS |= m.cell(a, s);
    }
    if (Sa != full || aS != full) return false;
  }
  return true;
}

MultigroupResult is_multigroup(const MultiOp& m) {
  require_associative(m);
  MultigroupResult res;
  auto id = find_identity(m);
  if (!id) {
    res.why = "no identity element";
    return res;
  }
  const int n = m.size();
  std::vector<int> inv(size_t(n), -1);
  for (int a = 0; a < n; ++a) {
    int right = -1, left = -1;
    for (int b = 0; b < n; ++b) {
      if (m.cell(a, b).test(*id)) {
        if (right != -1) {
          res.why = "relative right inverse of " + m.name(a) + " is not unique";
          return res;
        }
        right = b;
      }
      if (m.cell(b, a).test(*id)) {
        if (left != -1) {
          res.why = "relative left inverse of " + m.name(a) + " is not unique";
          return res;
        }
        left = b;
      }
    }
    if (right == -1 || left == -1) {
      res.why = "element " + m.name(a) + " has no relative inverse";
      return res;
    }
    if (right != left) {
      res.why = "left and right relative inverses of " + m.name(a) + " differ";
      return res;
    }
    inv[size_t(a)] = right;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool fwd = m.cell(a, b).test(c);
        bool rev = m.cell(inv[size_t(b)], inv[size_t(a)]).test(inv[size_t(c)]);
        if (fwd != rev) {
          res.why = "inverse-reversal law fails at (" + m.name(a) + "," +
                    m.name(b) + "," + m.name(c) + ")";
          return res;
        }
      }
  res.ok = true;
  res.inverse = std::move(inv);
  return res;
}

bool is_involution(const MultiOp& m, const std::vector<int>& sigma) {
  const int n = m.size();
  if (int(sigma.size()) != n) throw input_error("involution map has wrong size");
  std::vector<bool> hit(size_t(n), false);
  for (int v : sigma) {
    if (v < 0 || v >= n || hit[size_t(v)])
      throw input_error("involution map is not a permutation");
    hit[size_t(v)] = true;
  }
  for (int i = 0; i < n; ++i)
    if (sigma[size_t(sigma[size_t(i)])] != i) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Subset mapped(n);
      m.cell(a, b).for_each([&](int s) { mapped.set(sigma[size_t(s)]); });
      if (mapped != m.cell(sigma[size_t(b)], sigma[size_t(a)])) return false;
    }
  return true;
}

TableKind classify(const MultiOp& m) {
  require_associative(m);
  const int n = m.size();
  bool all_single = true, thin = true;
  for (int a = 0; a < n && thin; ++a)
    for (int b = 0; b < n && thin; ++b) {
      int c = m.cell(a, b).count();
      if (c > 1) thin = false;
      if (c != 1) all_single = false;
    }
  if (!thin) return TableKind::proper_multisemigroup;
  return all_single ? TableKind::semigroup : TableKind::quasi_semigroup;
}

const char* to_string(TableKind k) {
  switch (k) {
    case TableKind::semigroup: return "semigroup";
    case TableKind::quasi_semigroup: return "quasi-semigroup";
    default: return "proper multisemigroup";
  }
}

Subset generated_submultisemigroup(const MultiOp& m, const Subset& X) {
  if (X.empty()) throw input_error("generated submultisemigroup of the empty set");
  Subset T = X;
  for (;;) {
    Subset next = T | subset_product(m, T, T);
    if (next == T) return T;
    T = next;
  }
}

Subset power(const MultiOp& m, const Subset& X, int k) {
  if (k < 1) throw input_error("power requires k >= 1");
  Subset out = X;
  for (int i = 1; i < k; ++i) out = subset_product(m, out, X);
  return out;
}

}  // namespace msemi
