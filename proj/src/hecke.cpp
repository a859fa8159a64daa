#include "msemi/hecke.hpp"

#include <algorithm>
#include <map>

#include "msemi/core.hpp"
#include "msemi/error.hpp"

namespace msemi {

namespace {

// Concrete element models.  A_r acts on r+1 points (generators are adjacent
// transpositions), B_r on signed points (last generator flips the sign of the
// final coordinate), I2(m) is the dihedral pair (rotation, reflection-flag).
struct Model {
  enum Kind { perm, signed_perm, dihedral } kind;
  int m = 0;  // dihedral order parameter

  using State = std::vector<int>;

  State identity(int points) const {
    if (kind == dihedral) return {0, 0};
    State s(size_t(points));
    for (int i = 0; i < points; ++i) s[size_t(i)] = i + 1;
    return s;
  }

  State compose(const State& p, const State& q) const {  // p after q
    if (kind == dihedral) {
      int r1 = p[0], e1 = p[1], r2 = q[0], e2 = q[1];
      if (e1 == 0) return {(r1 + r2) % m, e2};
      return {((r1 - r2) % m + m) % m, 1 - e2};
    }
    State out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
      int v = q[i];
      out[i] = v > 0 ? p[size_t(v - 1)] : -p[size_t(-v - 1)];
    }
    return out;
  }
};

struct ModelSetup {
  Model model;
  std::vector<Model::State> gens;
  std::vector<std::vector<int>> cox;
};

ModelSetup make_setup(const std::string& kind) {
  ModelSetup ms;
  auto perm_gen = [](int points, int i) {
    std::vector<int> s(size_t(points));
    for (int k = 0; k < points; ++k) s[size_t(k)] = k + 1;
    std::swap(s[size_t(i)], s[size_t(i + 1)]);
    return s;
  };
  if (kind == "A1" || kind == "A2" || kind == "A3") {
    int r = kind[1] - '0';
    ms.model = {Model::perm, 0};
    for (int i = 0; i < r; ++i) ms.gens.push_back(perm_gen(r + 1, i));
    ms.cox.assign(size_t(r), std::vector<int>(size_t(r), 2));
    for (int i = 0; i < r; ++i) {
      ms.cox[size_t(i)][size_t(i)] = 1;
      if (i + 1 < r) ms.cox[size_t(i)][size_t(i + 1)] = ms.cox[size_t(i + 1)][size_t(i)] = 3;
    }
    return ms;
  }
  if (kind == "B2") {
    ms.model = {Model::dihedral, 4};
    ms.gens = {{0, 1}, {1, 1}};
    ms.cox = {{1, 4}, {4, 1}};
    return ms;
  }
  if (kind == "B3") {
    ms.model = {Model::signed_perm, 0};
    ms.gens.push_back({2, 1, 3});
    ms.gens.push_back({1, 3, 2});
    ms.gens.push_back({1, 2, -3});
    ms.cox = {{1, 3, 2}, {3, 1, 4}, {2, 4, 1}};
    return ms;
  }
  if (kind.size() >= 5 && kind.substr(0, 3) == "I2(" && kind.back() == ')') {
    int m = 0;
    for (size_t i = 3; i + 1 < kind.size(); ++i) {
      char c = kind[i];
      if (c < '0' || c > '9') throw input_error("bad I2 parameter: " + kind);
      m = m * 10 + (c - '0');
    }
    if (m < 3 || m > 50) throw input_error("I2(m) requires 3 <= m <= 50");
    ms.model = {Model::dihedral, m};
    ms.gens = {{0, 1}, {1, 1}};
    ms.cox = {{1, m}, {m, 1}};
    return ms;
  }
  throw input_error("unsupported Coxeter kind: " + kind);
}

constexpr const char* kGenLetters = "stu";

}  // namespace

CoxeterGroup CoxeterGroup::build(const std::string& kind) {
  ModelSetup ms = make_setup(kind);
  const int rank = int(ms.gens.size());
  const int points = ms.model.kind == Model::dihedral ? 2
                     : ms.model.kind == Model::perm   ? int(ms.gens[0].size())
                                                      : int(ms.gens[0].size());
  (void)points;

  // breadth-first closure from the identity
  std::map<Model::State, int> index;
  std::vector<Model::State> states{ms.model.identity(int(ms.gens.empty() ? 0 : ms.gens[0].size()))};
  index[states[0]] = 0;
  std::vector<int> length{0};
  for (size_t head = 0; head < states.size(); ++head) {
    for (int s = 0; s < rank; ++s) {
      Model::State nxt = ms.model.compose(states[head], ms.gens[size_t(s)]);
      if (!index.count(nxt)) {
        index[nxt] = int(states.size());
        states.push_back(nxt);
        length.push_back(length[head] + 1);
      }
    }
  }
  const int n = int(states.size());

  // provisional multiplication-by-generator tables
  std::vector<std::vector<int>> right(size_t(n), std::vector<int>(size_t(rank)));
  std::vector<std::vector<int>> left(size_t(n), std::vector<int>(size_t(rank)));
  for (int w = 0; w < n; ++w)
    for (int s = 0; s < rank; ++s) {
      right[size_t(w)][size_t(s)] = index.at(ms.model.compose(states[size_t(w)], ms.gens[size_t(s)]));
      left[size_t(w)][size_t(s)] = index.at(ms.model.compose(ms.gens[size_t(s)], states[size_t(w)]));
    }

  // lex-min reduced word: repeatedly strip the smallest left descent
  std::vector<std::vector<int>> word(size_t(n));
  for (int w0 = 0; w0 < n; ++w0) {
    int w = w0;
    while (length[size_t(w)] > 0) {
      for (int s = 0; s < rank; ++s) {
        int v = left[size_t(w)][size_t(s)];
        if (length[size_t(v)] < length[size_t(w)]) {
          word[size_t(w0)].push_back(s);
          w = v;
          break;
        }
      }
    }
  }

  // canonical order by (length, word)
  std::vector<int> order(size_t(n));
  for (int i = 0; i < n; ++i) order[size_t(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (length[size_t(a)] != length[size_t(b)]) return length[size_t(a)] < length[size_t(b)];
    return word[size_t(a)] < word[size_t(b)];
  });
  std::vector<int> newindex(size_t(n));
  for (int i = 0; i < n; ++i) newindex[size_t(order[size_t(i)])] = i;

  CoxeterGroup g;
  g.kind_ = kind;
  g.rank_ = rank;
  g.cox_ = ms.cox;
  g.length_.resize(size_t(n));
  g.word_.resize(size_t(n));
  g.names_.resize(size_t(n));
  g.left_.assign(size_t(n), std::vector<int>(size_t(rank)));
  g.right_.assign(size_t(n), std::vector<int>(size_t(rank)));
  g.inv_.resize(size_t(n));
  for (int old = 0; old < n; ++old) {
    int w = newindex[size_t(old)];
    g.length_[size_t(w)] = length[size_t(old)];
    g.word_[size_t(w)] = word[size_t(old)];
    for (int s = 0; s < rank; ++s) {
      g.right_[size_t(w)][size_t(s)] = newindex[size_t(right[size_t(old)][size_t(s)])];
      g.left_[size_t(w)][size_t(s)] = newindex[size_t(left[size_t(old)][size_t(s)])];
    }
    std::string nm;
    for (int s : word[size_t(old)]) nm += kGenLetters[s];
    g.names_[size_t(w)] = nm.empty() ? "e" : nm;
  }
  for (int w = 0; w < n; ++w) {
    int v = 0;  // product of word(w) reversed
    const auto& wd = g.word_[size_t(w)];
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) v = g.right_[size_t(v)][size_t(*it)];
    g.inv_[size_t(w)] = v;
  }
  g.verify();
  return g;
}

void CoxeterGroup::verify() const {
  const int n = size();
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      int w = 0;
      for (int k = 0; k < cox_[size_t(i)][size_t(j)]; ++k) {
        w = right_mul(w, i);
        w = right_mul(w, j);
      }
      if (w != 0) throw internal_error("braid relation fails in the model");
    }
  int longest = 0, shortest = 0;
  for (int w = 0; w < n; ++w) {
    for (int s = 0; s < rank_; ++s) {
      int d = length(right_mul(w, s)) - length(w);
      if (d != 1 && d != -1) throw internal_error("length does not step by one");
    }
    if (length(w) == 0) ++shortest;
    if (length(w) == length(n - 1)) ++longest;
    if (int(word(w).size()) != length(w))
      throw internal_error("reduced word length mismatch");
  }
  if (shortest != 1 || longest != 1)
    throw internal_error("identity or longest element is not unique");
}

int CoxeterGroup::product(int v, int w) const {
  int out = v;
  for (int s : word_[size_t(w)]) out = right_mul(out, s);
  return out;
}

SemigroupTable CoxeterGroup::group_table() const {
  const int n = size();
  std::vector<int> tab(size_t(n) * size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tab[size_t(a) * size_t(n) + size_t(b)] = product(a, b);
  return SemigroupTable(n, std::move(tab));
}

HeckeVec hecke_basis(const CoxeterGroup& W, int w, const Rational& q) {
  if (q <= Rational(1)) throw input_error("the Hecke parameter must satisfy q > 1");
  if (w < 0 || w >= W.size()) throw input_error("element index out of range");
  HeckeVec v;
  v.q = q;
  v.coeff[w] = Rational(1);
  return v;
}

HeckeVec hecke_gen_mul(const CoxeterGroup& W, int s, const HeckeVec& v) {
  if (s < 0 || s >= W.rank()) throw input_error("generator index out of range");
  HeckeVec out;
  out.q = v.q;
  const Rational qm1 = v.q - Rational(1);
  for (const auto& [x, c] : v.coeff) {
    int sx = W.left_mul(s, x);
    if (W.length(sx) > W.length(x)) {
      out.coeff[sx] += c;
    } else {
      out.coeff[x] += qm1 * c;
      out.coeff[sx] += v.q * c;
    }
  }
  for (auto it = out.coeff.begin(); it != out.coeff.end();) {
    if (it->second == Rational(0))
      it = out.coeff.erase(it);
    else {
      if (it->second < Rational(0))
        throw internal_error("negative standard-basis coefficient");
      ++it;
    }
  }
  return out;
}

HeckeVec hecke_mul(const CoxeterGroup& W, int w1, int w2, const Rational& q) {
  HeckeVec v = hecke_basis(W, w2, q);
  const auto& wd = W.word(w1);
  for (auto it = wd.rbegin(); it != wd.rend(); ++it) v = hecke_gen_mul(W, *it, v);
  return v;
}

MultiOp boolean_hecke(const CoxeterGroup& W, const Rational& q) {
  if (q <= Rational(1)) throw input_error("the Hecke parameter must satisfy q > 1");
  const int n = W.size();
  std::vector<Subset> cube;
  cube.reserve(size_t(n) * size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      HeckeVec v = hecke_mul(W, a, b, q);
      Subset cell(n);
      for (const auto& [w, c] : v.coeff) cell.set(w);
      cube.push_back(std::move(cell));
    }
  std::vector<std::string> names;
  names.reserve(size_t(n));
  for (int w = 0; w < n; ++w) names.push_back(W.name(w));
  MultiOp m(std::move(names), std::move(cube));
  AssocResult r = is_associative(m);
  if (!r.ok) throw internal_error("Boolean Hecke table is not associative");
  return m;
}

StructureTensor hecke_structure_tensor(const CoxeterGroup& W, const Rational& q) {
  const int n = W.size();
  std::vector<Rational> c(size_t(n) * size_t(n) * size_t(n), Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      HeckeVec v = hecke_mul(W, i, j, q);
      for (const auto& [k, x] : v.coeff)
        c[(size_t(i) * size_t(n) + size_t(j)) * size_t(n) + size_t(k)] = x;
    }
  return StructureTensor(n, std::move(c));
}

}  // namespace msemi
