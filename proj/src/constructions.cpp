#include "msemi/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "msemi/core.hpp"
#include "msemi/error.hpp"

namespace msemi {

namespace {

// Constructions are proved associative in general; a failed re-check here
// means a bug, not bad input.  Skipped for large carriers (cubic cost).
void verify_constructed(const MultiOp& m, const char* what) {
  if (m.size() > 200) return;
  AssocResult r = is_associative(m);
  if (!r.ok)
    throw internal_error(std::string(what) + " produced a non-associative table at (" +
                         std::to_string(r.witness[0]) + "," + std::to_string(r.witness[1]) +
                         "," + std::to_string(r.witness[2]) + ")");
}

}  // namespace

// ---- SemigroupTable --------------------------------------------------------

SemigroupTable::SemigroupTable(int n, std::vector<int> table)
    : n_(n), tab_(std::move(table)) {
  if (n < 1) throw input_error("semigroup carrier must be nonempty");
  if (tab_.size() != size_t(n) * size_t(n))
    throw input_error("semigroup table must have n*n entries");
  for (int v : tab_)
    if (v < 0 || v >= n) throw input_error("semigroup table entry out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw input_error("table is not associative at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
}

std::optional<int> SemigroupTable::identity() const {
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

bool SemigroupTable::is_group() const {
  auto e = identity();
  if (!e) return false;
  for (int a = 0; a < n_; ++a) {
    bool inv = false;
    for (int b = 0; b < n_ && !inv; ++b) inv = at(a, b) == *e && at(b, a) == *e;
    if (!inv) return false;
  }
  return true;
}

Subset SemigroupTable::set_product(const Subset& A, const Subset& B) const {
  Subset out(n_);
  A.for_each([&](int a) { B.for_each([&](int b) { out.set(at(a, b)); }); });
  return out;
}

Subset SemigroupTable::left_principal(int a) const {
  Subset out = Subset::single(n_, a);
  for (int s = 0; s < n_; ++s) out.set(at(s, a));
  return out;
}

Subset SemigroupTable::right_principal(int a) const {
  Subset out = Subset::single(n_, a);
  for (int s = 0; s < n_; ++s) out.set(at(a, s));
  return out;
}

Subset SemigroupTable::two_sided_principal(int a) const {
  Subset l = left_principal(a);
  Subset out = l;
  l.for_each([&](int x) {
    for (int s = 0; s < n_; ++s) out.set(at(x, s));
  });
  return out;
}

// ---- StructureTensor -------------------------------------------------------

StructureTensor::StructureTensor(int n, std::vector<Rational> coeffs)
    : n_(n), c_(std::move(coeffs)) {
  if (n < 1) throw input_error("tensor must have a nonempty basis");
  if (c_.size() != size_t(n) * size_t(n) * size_t(n))
    throw input_error("tensor must have n^3 coefficients");
  for (const Rational& x : c_)
    if (x < Rational(0)) throw input_error("structure constants must be non-negative");
  // associativity of the bilinear product
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational lhs(0), rhs(0);
          for (int mm = 0; mm < n; ++mm) {
            lhs += at(i, j, mm) * at(mm, k, l);
            rhs += at(j, k, mm) * at(i, mm, l);
          }
          if (lhs != rhs)
            throw input_error("structure tensor is not associative at (" +
                              std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) + ")");
        }
}

// ---- Poset -----------------------------------------------------------------

Poset::Poset(int n, std::vector<Subset> leq) : n_(n), up_(std::move(leq)) {
  if (n < 1) throw input_error("poset must be nonempty");
  if (up_.size() != size_t(n)) throw input_error("poset relation has wrong size");
  for (const auto& row : up_)
    if (row.universe() != n) throw input_error("poset relation width mismatch");
  for (int a = 0; a < n; ++a) {
    if (!up_[size_t(a)].test(a)) throw input_error("poset relation is not reflexive");
    for (int b = 0; b < n; ++b)
      if (a != b && up_[size_t(a)].test(b) && up_[size_t(b)].test(a))
        throw input_error("poset relation is not antisymmetric");
  }
  for (int a = 0; a < n; ++a)
    up_[size_t(a)].for_each([&](int b) {
      if (!up_[size_t(a)].contains(up_[size_t(b)]))
        throw input_error("poset relation is not transitive");
    });
}

Subset Poset::down(int a) const {
  Subset out(n_);
  for (int x = 0; x < n_; ++x)
    if (up_[size_t(x)].test(a)) out.set(x);
  return out;
}

Poset Poset::chain(int k) {
  if (k < 1) throw input_error("chain length must be positive");
  std::vector<Subset> leq(size_t(k), Subset(k));
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) leq[size_t(a)].set(b);
  return Poset(k, std::move(leq));
}

Poset Poset::disjoint_union(const std::vector<Poset>& parts) {
  if (parts.empty()) throw input_error("disjoint union of no posets");
  int n = 0;
  for (const auto& p : parts) n += p.size();
  std::vector<Subset> leq(size_t(n), Subset(n));
  int off = 0;
  for (const auto& p : parts) {
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b)
        if (p.leq(a, b)) leq[size_t(off + a)].set(off + b);
    off += p.size();
  }
  return Poset(n, std::move(leq));
}

// ---- generators ------------------------------------------------------------

MultiOp trivial_multiop(int n, const Subset& X) {
  if (n < 1) throw input_error("carrier must be nonempty");
  if (X.universe() != n) throw input_error("sandwich set width mismatch");
  std::vector<Subset> cube(size_t(n) * size_t(n), X);
  MultiOp m(default_names(n), std::move(cube));
  verify_constructed(m, "trivial_multiop");
  return m;
}

MultiOp coset_multiop(const SemigroupTable& g, const Subset& H, CosetLevel level) {
  const int n = g.size();
  if (!g.is_group()) throw input_error("coset construction requires a group table");
  if (H.universe() != n) throw input_error("subgroup width mismatch");
  if (H.empty()) throw input_error("subgroup must be nonempty");
  bool closed = true;
  H.for_each([&](int a) {
    H.for_each([&](int b) {
      if (!H.test(g.at(a, b))) closed = false;
    });
  });
  if (!closed) throw input_error("H is not a subgroup (not closed under products)");

  auto haHb = [&](int a, int b) {
    Subset Ha = g.set_product(H, Subset::single(n, a));
    Subset HaH = g.set_product(Ha, H);
    return g.set_product(HaH, Subset::single(n, b));
  };

  if (level == CosetLevel::elements) {
    std::vector<Subset> cube;
    cube.reserve(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) cube.push_back(haHb(a, b));
    MultiOp m(default_names(n), std::move(cube));
    verify_constructed(m, "coset_multiop");
    return m;
  }

  // left cosets Ha, ordered by least member
  std::vector<Subset> cosets;
  std::vector<bool> seen(size_t(n), false);
  for (int a = 0; a < n; ++a) {
    if (seen[size_t(a)]) continue;
    Subset Ha = g.set_product(H, Subset::single(n, a));
    Ha.for_each([&](int x) { seen[size_t(x)] = true; });
    cosets.push_back(Ha);
  }
  const int k = int(cosets.size());
  std::vector<std::string> names;
  names.reserve(size_t(k));
  for (const auto& c : cosets) names.push_back("[" + std::to_string(c.first() + 1) + "]");
  std::vector<Subset> cube;
  cube.reserve(size_t(k) * size_t(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Subset prod = haHb(cosets[size_t(i)].first(), cosets[size_t(j)].first());
      Subset cell(k);
      for (int c = 0; c < k; ++c)
        if (prod.contains(cosets[size_t(c)])) cell.set(c);
      cube.push_back(std::move(cell));
    }
  MultiOp m(std::move(names), std::move(cube));
  verify_constructed(m, "coset_multiop");
  return m;
}

MultiOp inflation(const MultiOp& m, const std::vector<int>& f) {
  const int n = m.size();
  const int nx = int(f.size());
  if (nx < 1) throw input_error("inflation domain must be nonempty");
  std::vector<bool> hit(size_t(n), false);
  for (int v : f) {
    if (v < 0 || v >= n) throw input_error("inflation map value out of range");
    hit[size_t(v)] = true;
  }
  for (bool h : hit)
    if (!h) throw input_error("inflation map must be surjective");
  std::vector<Subset> cube;
  cube.reserve(size_t(nx) * size_t(nx));
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y) {
      const Subset& base = m.cell(f[size_t(x)], f[size_t(y)]);
      Subset cell(nx);
      for (int z = 0; z < nx; ++z)
        if (base.test(f[size_t(z)])) cell.set(z);
      cube.push_back(std::move(cell));
    }
  MultiOp out(default_names(nx), std::move(cube));
  verify_constructed(out, "inflation");
  return out;
}

MultiOp ideal_multiop(const SemigroupTable& s, IdealOpKind kind) {
  const int n = s.size();
  std::vector<Subset> pid(size_t(n));
  for (int a = 0; a < n; ++a) {
    switch (kind) {
      case IdealOpKind::L:
      case IdealOpKind::L_cap: pid[size_t(a)] = s.left_principal(a); break;
      case IdealOpKind::R:
      case IdealOpKind::R_cap: pid[size_t(a)] = s.right_principal(a); break;
      default: pid[size_t(a)] = s.two_sided_principal(a); break;
    }
  }
  const bool cap = kind == IdealOpKind::L_cap || kind == IdealOpKind::R_cap ||
                   kind == IdealOpKind::J_cap;
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (cap)
        cube.push_back(pid[size_t(a)] & pid[size_t(b)]);
      else
        cube.push_back(s.set_product(pid[size_t(a)], pid[size_t(b)]));
    }
  MultiOp m(default_names(n), std::move(cube));
  verify_constructed(m, "ideal_multiop");
  return m;
}

MultiOp monogenic_multiop(const SemigroupTable& s) {
  const int n = s.size();
  std::vector<Subset> mono(size_t(n), Subset(n));
  for (int a = 0; a < n; ++a) {
    int x = a;
    while (!mono[size_t(a)].test(x)) {
      mono[size_t(a)].set(x);
      x = s.at(x, a);
    }
  }
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cube.push_back(mono[size_t(a)] & mono[size_t(b)]);
  MultiOp m(default_names(n), std::move(cube));
  verify_constructed(m, "monogenic_multiop");
  return m;
}

MultiOp positive_basis_multiop(const StructureTensor& t) {
  const int n = t.size();
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Subset cell(n);
      for (int k = 0; k < n; ++k)
        if (t.at(i, j, k) > Rational(0)) cell.set(k);
      cube.push_back(std::move(cell));
    }
  MultiOp m(default_names(n), std::move(cube));
  verify_constructed(m, "positive_basis_multiop");
  return m;
}

std::vector<int> clebsch_gordan(int k, int l) {
  if (k < 0 || l < 0) throw input_error("weights must be non-negative");
  std::vector<int> out;
  for (int m = std::abs(k - l); m <= k + l; m += 2) out.push_back(m);
  return out;
}

CgCheckResult cg_associativity_check(int bound) {
  if (bound < 0) throw input_error("bound must be non-negative");
  CgCheckResult res;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c) {
        std::set<int> lhs, rhs;
        for (int t : clebsch_gordan(b, c))
          for (int v : clebsch_gordan(a, t)) lhs.insert(v);
        for (int s : clebsch_gordan(a, b))
          for (int v : clebsch_gordan(s, c)) rhs.insert(v);
        if (lhs != rhs) {
          res.ok = false;
          res.witness = {a, b, c};
          return res;
        }
      }
  return res;
}

MultiOp double_variant(const MultiOp& m, const Subset& X, const Subset& Y) {
  require_associative(m);
  const int n = m.size();
  if (X.universe() != n || Y.universe() != n)
    throw input_error("sandwich set width mismatch");
  auto variant_cell = [&](const Subset& S, int a, int b) {
    return subset_product(m, subset_product(m, Subset::single(n, a), S),
                          Subset::single(n, b));
  };
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      cube.push_back(variant_cell(X, a, b) | variant_cell(Y, a, b));
  MultiOp out(m.names(), std::move(cube));
  verify_constructed(out, "double_variant");
  return out;
}

MultiOp general_double(const MultiOp& m1, const MultiOp& m2) {
  require_associative(m1);
  require_associative(m2);
  const int n = m1.size();
  if (m2.size() != n) throw input_error("double construction needs a common carrier");
  // mixed associativity (a.b)ob = a.(boc) in both orders
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Subset l1(n), r1(n), l2(n), r2(n);
        m1.cell(a, b).for_each([&](int s) { l1 |= m2.cell(s, c); });
        m2.cell(b, c).for_each([&](int t) { r1 |= m1.cell(a, t); });
        m2.cell(a, b).for_each([&](int s) { l2 |= m1.cell(s, c); });
        m1.cell(b, c).for_each([&](int t) { r2 |= m2.cell(a, t); });
        if (l1 != r1 || l2 != r2)
          throw input_error("the two operations are not compatible at (" +
                            m1.name(a) + "," + m1.name(b) + "," + m1.name(c) + ")");
      }
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cube.push_back(m1.cell(a, b) | m2.cell(a, b));
  MultiOp out(m1.names(), std::move(cube));
  verify_constructed(out, "general_double");
  return out;
}

MultiOp subword_multiop(int alphabet_size, int max_len) {
  if (alphabet_size < 1 || alphabet_size > 26)
    throw input_error("alphabet size must be between 1 and 26");
  if (max_len < 1) throw input_error("max length must be positive");
  long long carrier = 1, pw = 1;
  for (int i = 1; i <= max_len; ++i) {
    pw *= alphabet_size;
    carrier += pw;
    if (carrier > 10000) throw resource_error("subword carrier exceeds 10^4 words");
  }
  // carrier in (length, lex) order
  std::vector<std::string> words{""};
  for (size_t head = 0; head < words.size(); ++head) {
    if (int(words[head].size()) == max_len) continue;
    for (int c = 0; c < alphabet_size; ++c) words.push_back(words[head] + char('a' + c));
  }
  std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::map<std::string, int> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = int(i);
  const int n = int(words.size());

  auto scattered = [&](const std::string& w) {
    // all subsequences of w of length <= max_len
    std::set<std::string> acc{""};
    for (char ch : w) {
      std::set<std::string> add;
      for (const auto& p : acc)
        if (int(p.size()) < max_len) add.insert(p + ch);
      acc.insert(add.begin(), add.end());
    }
    Subset out(n);
    for (const auto& p : acc) out.set(index.at(p));
    return out;
  };

  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) cube.push_back(scattered(words[size_t(u)] + words[size_t(v)]));

  std::vector<std::string> names;
  names.reserve(size_t(n));
  for (const auto& w : words) names.push_back(w.empty() ? "\xCE\xB5" : w);  // epsilon
  MultiOp m(std::move(names), std::move(cube));
  verify_constructed(m, "subword_multiop");
  return m;
}

MultiOp disconnected_union(const MultiOp& m1, const MultiOp& m2) {
  const int n1 = m1.size(), n2 = m2.size(), n = n1 + n2;
  std::vector<std::string> names = m1.names();
  for (const auto& nm : m2.names()) names.push_back(fresh_name(names, nm));
  std::vector<Subset> cube(size_t(n) * size_t(n), Subset(n));
  auto at = [&](int a, int b) -> Subset& { return cube[size_t(a) * size_t(n) + size_t(b)]; };
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b)
      m1.cell(a, b).for_each([&](int t) { at(a, b).set(t); });
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b)
      m2.cell(a, b).for_each([&](int t) { at(n1 + a, n1 + b).set(n1 + t); });
  MultiOp m(std::move(names), std::move(cube));
  verify_constructed(m, "disconnected_union");
  return m;
}

MultiOp reproductive(const SemigroupTable& s, const std::vector<Subset>& f) {
  const int n = s.size();
  if (int(f.size()) != n) throw input_error("reproductive map has wrong size");
  for (const auto& v : f)
    if (v.universe() != n) throw input_error("reproductive map width mismatch");
  auto f_of = [&](const Subset& A) {
    Subset out(n);
    A.for_each([&](int a) { out |= f[size_t(a)]; });
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Subset prod = s.set_product(f[size_t(a)], f[size_t(b)]);
      if (f_of(prod) != prod)
        throw input_error("reproductive condition fails at pair (" + std::to_string(a) +
                          "," + std::to_string(b) + ")");
    }
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cube.push_back(s.set_product(f[size_t(a)], f[size_t(b)]));
  MultiOp m(default_names(n), std::move(cube));
  verify_constructed(m, "reproductive");
  return m;
}

MultiOp no_quasi_idempotent_hypergroup(int n) {
  if (n < 3) throw input_error("the construction requires n >= 3");
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Subset cell = Subset::full(n);
      if (a == b) cell.reset(a);
      cube.push_back(std::move(cell));
    }
  MultiOp m(default_names(n), std::move(cube));
  verify_constructed(m, "no_quasi_idempotent_hypergroup");
  return m;
}

MultiOp poset_band(const Poset& p) {
  const int k = p.size();
  // comparability components, each with a unique minimal element
  std::vector<int> comp(size_t(k), -1);
  int ncomp = 0;
  for (int a = 0; a < k; ++a) {
    if (comp[size_t(a)] != -1) continue;
    std::vector<int> stack{a};
    comp[size_t(a)] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < k; ++y)
        if (comp[size_t(y)] == -1 && (p.leq(x, y) || p.leq(y, x))) {
          comp[size_t(y)] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    int minima = 0;
    for (int a = 0; a < k; ++a)
      if (comp[size_t(a)] == c && p.down(a).count() == 1) ++minima;
    if (minima != 1)
      throw input_error("every poset component needs a unique minimal element");
  }

  const int n = k * k;
  std::vector<std::string> names;
  names.reserve(size_t(n));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      names.push_back("(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          Subset cell(n);
          p.down(a).for_each([&](int x) {
            p.down(d).for_each([&](int y) { cell.set(x * k + y); });
          });
          cube.push_back(std::move(cell));
        }
  MultiOp m(std::move(names), std::move(cube));
  verify_constructed(m, "poset_band");
  return m;
}

// ---- fixtures --------------------------------------------------------------

namespace {

MultiOp table_from_labels(std::vector<std::string> names,
                          const std::vector<std::vector<std::vector<const char*>>>& rows) {
  const int n = int(names.size());
  std::vector<std::vector<std::vector<int>>> cells(size_t(n));
  auto idx = [&](const char* s) {
    for (int i = 0; i < n; ++i)
      if (names[size_t(i)] == s) return i;
    throw internal_error("bad fixture label");
  };
  for (int a = 0; a < n; ++a) {
    cells[size_t(a)].resize(size_t(n));
    for (int b = 0; b < n; ++b)
      for (const char* lab : rows[size_t(a)][size_t(b)])
        cells[size_t(a)][size_t(b)].push_back(idx(lab));
  }
  return MultiOp::from_cells(std::move(names), cells);
}

MultiOp fixture_two_element() {
  return table_from_labels({"a", "b"}, {{{"a"}, {"a", "b"}}, {{"a"}, {"b"}}});
}

MultiOp fixture_kl_a2() {
  return table_from_labels(
      {"e", "s", "t", "st", "ts", "sts"},
      {{{"e"}, {"s"}, {"t"}, {"st"}, {"ts"}, {"sts"}},
       {{"s"}, {"s"}, {"st"}, {"st"}, {"sts", "s"}, {"sts"}},
       {{"t"}, {"ts"}, {"t"}, {"sts", "t"}, {"ts"}, {"sts"}},
       {{"st"}, {"sts", "s"}, {"st"}, {"sts", "st"}, {"sts", "s"}, {"sts"}},
       {{"ts"}, {"ts"}, {"sts", "t"}, {"sts", "t"}, {"sts", "ts"}, {"sts"}},
       {{"sts"}, {"sts"}, {"sts"}, {"sts"}, {"sts"}, {"sts"}}});
}

MultiOp fixture_hecke_a2() {
  return table_from_labels(
      {"e", "s", "t", "st", "ts", "sts"},
      {{{"e"}, {"s"}, {"t"}, {"st"}, {"ts"}, {"sts"}},
       {{"s"}, {"e", "s"}, {"st"}, {"t", "st"}, {"sts"}, {"ts", "sts"}},
       {{"t"}, {"ts"}, {"e", "t"}, {"sts"}, {"s", "ts"}, {"st", "sts"}},
       {{"st"}, {"sts"}, {"s", "st"}, {"ts", "sts"}, {"e", "s", "sts"},
        {"t", "st", "ts", "sts"}},
       {{"ts"}, {"t", "ts"}, {"sts"}, {"e", "t", "sts"}, {"st", "sts"},
        {"s", "st", "ts", "sts"}},
       {{"sts"}, {"st", "sts"}, {"ts", "sts"}, {"s", "st", "ts", "sts"},
        {"t", "st", "ts", "sts"}, {"e", "s", "t", "st", "ts", "sts"}}});
}

MultiOp fixture_s5_209() {
  return table_from_labels({"1", "a", "b", "t"},
                           {{{"1"}, {"a"}, {"b"}, {"t"}},
                            {{"a"}, {"a"}, {"1", "a", "b", "t"}, {"a", "t"}},
                            {{"b"}, {"t"}, {"b"}, {"t"}},
                            {{"t"}, {"t"}, {"b", "t"}, {"t"}}});
}

// Cayley table of the simple multisemigroup over X = {1 < 2} with
// (i,j)*(k,l) = down(i) x down(l); carrier indices (i-1)*2 + (j-1).
Subset s5205_cell(int i, int l) {
  Subset out(4);
  for (int x = 1; x <= i; ++x)
    for (int y = 1; y <= l; ++y) out.set((x - 1) * 2 + (y - 1));
  return out;
}

MultiOp fixture_t_5207() {
  // carrier (1,1),(1,2),(2,1),(2,2),(1',1'); the case-wise circ definition
  // with pi((1',1')) = (1,1), applied literally.
  const std::vector<std::string> names{"(1,1)", "(1,2)", "(2,1)", "(2,2)", "(1',1')"};
  const int pi[5] = {0, 1, 2, 3, 0};
  auto in_left = [](int x) { return x == 0 || x == 4 || x == 1; };   // {(1,1),(1',1'),(1,2)}
  auto in_right = [](int y) { return y == 0 || y == 4 || y == 2; };  // {(1,1),(1',1'),(2,1)}
  std::vector<Subset> cube;
  cube.reserve(25);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      int i = pi[x] / 2 + 1, l = pi[y] % 2 + 1;
      Subset base = s5205_cell(i, l);
      Subset cell(5);
      base.for_each([&](int v) { cell.set(v); });
      if (!(in_left(x) && in_right(y))) cell.set(4);
      cube.push_back(std::move(cell));
    }
  return MultiOp(names, std::move(cube));
}

MultiOp fixture_t_531() {
  // carrier (1,1),(1,2),(2,1); (i,j).(k,l) = (down(i) x down(l)) minus {(2,2)}
  const std::vector<std::string> names{"(1,1)", "(1,2)", "(2,1)"};
  const int pairs[3][2] = {{1, 1}, {1, 2}, {2, 1}};
  std::vector<Subset> cube;
  cube.reserve(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Subset cell(3);
      for (int x = 1; x <= pairs[a][0]; ++x)
        for (int y = 1; y <= pairs[b][1]; ++y) {
          if (x == 2 && y == 2) continue;
          cell.set(x == 1 ? (y == 1 ? 0 : 1) : 2);
        }
      cube.push_back(std::move(cell));
    }
  return MultiOp(names, std::move(cube));
}

MultiOp fixture_kl_b2_T() {
  // Rees quotient of the submultisemigroup W\{e} of the type-B2
  // Kazhdan-Lusztig multisemigroup by the zero {stst}; stored directly from
  // the published table.
  return table_from_labels(
      {"s", "t", "st", "ts", "sts", "tst"},
      {{{"s"}, {"st"}, {"st"}, {"s", "sts"}, {"sts"}, {"st"}},
       {{"ts"}, {"t"}, {"t", "tst"}, {"ts"}, {"ts"}, {"tst"}},
       {{"s", "sts"}, {"st"}, {"st"}, {"s", "sts"}, {"s", "sts"}, {"st"}},
       {{"ts"}, {"t", "tst"}, {"t", "tst"}, {"ts"}, {"ts"}, {"t", "tst"}},
       {{"sts"}, {"st"}, {"st"}, {"s", "sts"}, {"s"}, {"st"}},
       {{"ts"}, {"tst"}, {"t", "tst"}, {"ts"}, {"ts"}, {"t"}}});
}

}  // namespace

MultiOp fixture(std::string_view name) {
  MultiOp m = [&] {
    if (name == "two_element") return fixture_two_element();
    if (name == "kl_a2") return fixture_kl_a2();
    if (name == "hecke_a2") return fixture_hecke_a2();
    if (name == "s5_209") return fixture_s5_209();
    if (name == "t_5207") return fixture_t_5207();
    if (name == "t_531") return fixture_t_531();
    if (name == "kl_b2_T") return fixture_kl_b2_T();
    throw input_error("unknown fixture: " + std::string(name));
  }();
  verify_constructed(m, "fixture");
  return m;
}

std::vector<std::string> fixture_names() {
  return {"two_element", "kl_a2", "hecke_a2", "s5_209", "t_5207", "t_531", "kl_b2_T"};
}

}  // namespace msemi
