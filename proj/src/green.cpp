#include "msemi/green.hpp"

#include <numeric>

#include "msemi/core.hpp"
#include "msemi/error.hpp"

namespace msemi {

namespace {

Subset left_pid(const MultiOp& m, int a) {
  Subset out = Subset::single(m.size(), a);
  for (int s = 0; s < m.size(); ++s) out |= m.cell(s, a);
  return out;
}

Subset right_pid(const MultiOp& m, int a) {
  Subset out = Subset::single(m.size(), a);
  for (int s = 0; s < m.size(); ++s) out |= m.cell(a, s);
  return out;
}

Subset two_pid(const MultiOp& m, int a) {
  Subset b = left_pid(m, a);
  return b | subset_product(m, b, m.carrier());
}

Partition partition_by_ideal_equality(int n, const std::vector<Subset>& pid) {
  std::vector<int> raw(size_t(n));
  for (int i = 0; i < n; ++i) {
    raw[size_t(i)] = i;
    for (int j = 0; j < i; ++j)
      if (pid[size_t(j)] == pid[size_t(i)]) {
        raw[size_t(i)] = raw[size_t(j)];
        break;
      }
  }
  return Partition::from_class_of(n, raw);
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(size_t(n)) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[size_t(x)] != x) x = up[size_t(x)] = up[size_t(up[size_t(x)])];
    return x;
  }
  void join(int a, int b) { up[size_t(find(a))] = find(b); }
};

}  // namespace

Subset principal_ideal(const MultiOp& m, int a, IdealKind kind) {
  if (a < 0 || a >= m.size()) throw input_error("element index out of range");
  switch (kind) {
    case IdealKind::left: return left_pid(m, a);
    case IdealKind::right: return right_pid(m, a);
    default: return two_pid(m, a);
  }
}

GreenData green_data(const MultiOp& m) {
  const int n = m.size();
  std::vector<Subset> lp(size_t(n)), rp(size_t(n)), jp(size_t(n));
  for (int a = 0; a < n; ++a) {
    lp[size_t(a)] = left_pid(m, a);
    rp[size_t(a)] = right_pid(m, a);
    jp[size_t(a)] = two_pid(m, a);
  }
  GreenData g;
  auto preorder = [n](const std::vector<Subset>& pid) {
    std::vector<Subset> leq(size_t(n), Subset(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (pid[size_t(b)].contains(pid[size_t(a)])) leq[size_t(a)].set(b);
    return leq;
  };
  g.leq_L = preorder(lp);
  g.leq_R = preorder(rp);
  g.leq_J = preorder(jp);
  g.L = partition_by_ideal_equality(n, lp);
  g.R = partition_by_ideal_equality(n, rp);
  g.J = partition_by_ideal_equality(n, jp);

  // H = common refinement of L and R
  {
    std::vector<int> raw(size_t(n));
    for (int i = 0; i < n; ++i)
      raw[size_t(i)] = g.L.class_of[size_t(i)] * n + g.R.class_of[size_t(i)];
    g.H = Partition::from_class_of(n, raw);
  }
  // D = join of L and R (transitive closure of their union)
  {
    UnionFind uf(n);
    for (const Subset& c : g.L.classes) {
      int rep = c.first();
      c.for_each([&](int i) { uf.join(i, rep); });
    }
    for (const Subset& c : g.R.classes) {
      int rep = c.first();
      c.for_each([&](int i) { uf.join(i, rep); });
    }
    std::vector<int> raw(size_t(n));
    for (int i = 0; i < n; ++i) raw[size_t(i)] = uf.find(i);
    g.D = Partition::from_class_of(n, raw);
  }
  return g;
}

bool is_simple(const MultiOp& m) {
  const Subset full = m.carrier();
  for (int a = 0; a < m.size(); ++a)
    if (two_pid(m, a) != full) return false;
  return true;
}

Subset quarks(const MultiOp& m) {
  const int n = m.size();
  Subset q(n);
  std::vector<Subset> lp(size_t(n)), rp(size_t(n));
  for (int a = 0; a < n; ++a) {
    lp[size_t(a)] = left_pid(m, a);
    rp[size_t(a)] = right_pid(m, a);
  }
  // S^1*a is minimal iff S^1*t = S^1*a for every t in it (a nonempty left
  // ideal inside it contains some t and with it all of S^1*t).
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    lp[size_t(a)].for_each([&](int t) {
      if (lp[size_t(t)] != lp[size_t(a)]) ok = false;
    });
    if (!ok) continue;
    rp[size_t(a)].for_each([&](int t) {
      if (rp[size_t(t)] != rp[size_t(a)]) ok = false;
    });
    if (ok) q.set(a);
  }
  return q;
}

Simplicity classify_simplicity(const MultiOp& m) {
  if (!is_simple(m)) return Simplicity::not_simple;
  return quarks(m).is_full() ? Simplicity::strongly_simple : Simplicity::simple;
}

const char* to_string(Simplicity s) {
  switch (s) {
    case Simplicity::not_simple: return "not simple";
    case Simplicity::simple: return "simple";
    default: return "strongly simple";
  }
}

IncidenceMatrix incidence_matrix(const MultiOp& m) {
  if (classify_simplicity(m) != Simplicity::strongly_simple)
    throw input_error("incidence matrix requires a strongly simple table");
  if (m.size() == 1 && m.cell(0, 0).empty())
    throw input_error("incidence matrix is not defined for the singleton 0");
  GreenData g = green_data(m);
  IncidenceMatrix out;
  out.l_classes = g.L.classes;
  out.r_classes = g.R.classes;
  out.ones.assign(out.l_classes.size(),
                  std::vector<bool>(out.r_classes.size(), false));
  for (size_t i = 0; i < out.l_classes.size(); ++i)
    for (size_t j = 0; j < out.r_classes.size(); ++j) {
      Subset H = out.l_classes[i] & out.r_classes[j];
      if (H.empty()) continue;
      // Within a strongly simple table, H*H nonempty already makes H a
      // hypergroup (Theorem 5.9 style criterion).
      out.ones[i][j] = !subset_product(m, H, H).empty();
    }
  return out;
}

CommutationResult green_commutation(const MultiOp& m) {
  const int n = m.size();
  GreenData g = green_data(m);
  auto cls = [&](const Partition& p, int x) -> const Subset& {
    return p.classes[size_t(p.class_of[size_t(x)])];
  };
  CommutationResult res;
  for (int x = 0; x < n; ++x) {
    Subset lr(n), rl(n);  // row x of L o R and of R o L
    cls(g.L, x).for_each([&](int z) { lr |= cls(g.R, z); });
    cls(g.R, x).for_each([&](int z) { rl |= cls(g.L, z); });
    if (lr != rl) {
      Subset diff = (lr - rl) | (rl - lr);
      res.ok = false;
      res.witness = {x, diff.first()};
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace msemi
