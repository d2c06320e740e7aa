#pragma once

// Representations of a quiver over F_p, their simples, and exhaustive
// enumeration of Jordan-Hoelder factor sequences. This module is the semantic
// ground truth for every membership question asked by the topology layer.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nctop/errors.hpp"
#include "nctop/linear.hpp"
#include "nctop/quiver.hpp"

namespace nctop {

using DimVector = std::vector<std::size_t>;
using FactorSequence = std::vector<SimpleId>;

inline std::size_t total_dim(const DimVector& d) {
  std::size_t n = 0;
  for (std::size_t x : d) n += x;
  return n;
}

/// Per-vertex spaces F_p^{dim[v]} and one matrix per arrow, shaped
/// dim[target] x dim[source].
struct Representation {
  const Quiver* quiver = nullptr;
  unsigned p = 2;
  DimVector dim;
  std::vector<Matrix> arrow_maps;  // aligned with quiver->arrows()

  std::size_t total() const { return total_dim(dim); }

  bool operator==(const Representation& o) const {
    return quiver == o.quiver && p == o.p && dim == o.dim && arrow_maps == o.arrow_maps;
  }
};

inline void validate(const Representation& m) {
  const auto& arrows = m.quiver->arrows();
  if (m.dim.size() != m.quiver->num_vertices())
    throw Error("representation: dimension vector length mismatch");
  if (m.arrow_maps.size() != arrows.size())
    throw Error("representation: arrow map count mismatch");
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const Matrix& mat = m.arrow_maps[a];
    if (mat.rows() != m.dim[arrows[a].target] || mat.cols() != m.dim[arrows[a].source])
      throw Error("representation: arrow '" + arrows[a].id + "' has wrong shape");
    if (mat.modulus() != m.p) throw Error("representation: mixed moduli");
  }
}

inline Representation zero_representation(const Quiver& q, unsigned p, const DimVector& dim) {
  Representation m{&q, p, dim, {}};
  for (const auto& a : q.arrows()) m.arrow_maps.emplace_back(dim[a.target], dim[a.source], p);
  return m;
}

/// Stable string key for memoization and canonical ordering.
inline std::string encode(const Representation& m) {
  std::string s = std::to_string(m.p);
  for (std::size_t d : m.dim) s += "." + std::to_string(d);
  for (const auto& mat : m.arrow_maps) {
    s += "|";
    for (unsigned e : mat.entries()) s += static_cast<char>('0' + e % 10);
  }
  return s;
}

struct Budget {
  long long nodes = 1'000'000;

  void spend(const char* what) {
    if (--nodes < 0) throw BudgetExceeded(std::string("budget exhausted in ") + what);
  }
};

/// Canonical basis of Hom(S, M) viewed inside the relevant coordinate space:
/// acyclic -- vectors at vertex(s) killed by every outgoing arrow; one-loop --
/// the lambda-eigenspace of the loop. Empty means S does not embed.
inline std::vector<Vec> simple_sub_space(const Representation& m, SimpleId s) {
  if (m.quiver->kind() == QuiverKind::OneLoop) {
    if (s.value >= m.p) throw Error("simple_sub_space: eigenvalue out of range");
    if (m.dim[0] == 0) return {};
    return kernel_basis(m.arrow_maps[0].minus_scalar_identity(s.value));
  }
  std::size_t v = s.value;
  if (v >= m.quiver->num_vertices()) throw Error("simple_sub_space: no such vertex simple");
  std::size_t d = m.dim[v];
  if (d == 0) return {};
  std::vector<Matrix> outgoing;
  for (std::size_t a = 0; a < m.quiver->arrows().size(); ++a)
    if (m.quiver->arrows()[a].source == v) outgoing.push_back(m.arrow_maps[a]);
  if (outgoing.empty()) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < d; ++i) {
      Vec e(d, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return kernel_basis(stack_rows(outgoing, d, m.p));
}

/// Quotient of m by the simple subobject spanned by `line` at the vertex of s.
inline Representation quotient_by_simple_line(const Representation& m, SimpleId s,
                                              const Vec& line) {
  std::vector<Vec> emb = simple_sub_space(m, s);
  std::size_t v = (m.quiver->kind() == QuiverKind::OneLoop) ? 0 : s.value;
  SubspaceForm emb_form = subspace_form(emb, m.dim[v], m.p);
  if (is_zero_vec(line) || !in_span(emb_form, line))
    throw NotEmbedding("quotient_by_simple_line: line is not an embedding of the simple");

  std::vector<std::vector<Vec>> subs(m.quiver->num_vertices());
  subs[v].push_back(line);
  Representation q{m.quiver, m.p, m.dim, {}};
  q.dim[v] -= 1;
  for (std::size_t a = 0; a < m.quiver->arrows().size(); ++a) {
    const Arrow& ar = m.quiver->arrows()[a];
    q.arrow_maps.push_back(quotient_action(m.arrow_maps[a], subs[ar.source], subs[ar.target]));
  }
  return q;
}

/// All normalized lines (first nonzero coefficient 1) in the span of a basis.
inline std::vector<Vec> lines_in_span(const std::vector<Vec>& basis, std::size_t ambient,
                                      unsigned p) {
  std::vector<Vec> lines;
  if (basis.empty()) return lines;
  std::size_t d = basis.size();
  Vec coeff(d, 0);
  // Odometer over F_p^d, keep coefficient vectors whose first nonzero entry is 1.
  while (true) {
    std::size_t first = d;
    for (std::size_t i = 0; i < d; ++i)
      if (coeff[i] != 0) {
        first = i;
        break;
      }
    if (first < d && coeff[first] == 1) {
      Vec v(ambient, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (coeff[i] == 0) continue;
        for (std::size_t j = 0; j < ambient; ++j) v[j] = (v[j] + coeff[i] * basis[i][j]) % p;
      }
      lines.push_back(std::move(v));
    }
    std::size_t k = 0;
    while (k < d && ++coeff[k] == p) coeff[k++] = 0;
    if (k == d) break;
  }
  return lines;
}

namespace detail {

inline std::set<FactorSequence> jh_rec(const Representation& m,
                                       std::map<std::string, std::set<FactorSequence>>& memo,
                                       Budget& budget) {
  if (m.total() == 0) return {FactorSequence{}};
  std::string key = encode(m);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  budget.spend("jh_sequences");

  std::set<FactorSequence> out;
  bool found = false;
  for (SimpleId s : simples(*m.quiver, m.p)) {
    std::vector<Vec> basis = simple_sub_space(m, s);
    if (basis.empty()) continue;
    found = true;
    std::size_t v = (m.quiver->kind() == QuiverKind::OneLoop) ? 0 : s.value;
    for (const Vec& line : lines_in_span(basis, m.dim[v], m.p)) {
      Representation q = quotient_by_simple_line(m, s, line);
      for (const FactorSequence& rest : jh_rec(q, memo, budget)) {
        FactorSequence seq;
        seq.reserve(rest.size() + 1);
        seq.push_back(s);
        seq.insert(seq.end(), rest.begin(), rest.end());
        out.insert(std::move(seq));
      }
    }
  }
  if (!found)
    throw NonSplitFactor("jh_sequences: positive-dimensional representation with no split simple "
                         "subobject over F_" + std::to_string(m.p));
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace detail

/// The exact set of bottom-to-top factor sequences realizable by some
/// Jordan-Hoelder filtration of m.
inline std::set<FactorSequence> jh_sequences(const Representation& m, Budget* budget = nullptr) {
  Budget local;
  if (!budget) budget = &local;
  std::map<std::string, std::set<FactorSequence>> memo;
  return detail::jh_rec(m, memo, *budget);
}

/// Dimension of the isomorphism-distinguishing extension directions, with the
/// convention that ext1_dim(s, t) counts non-split sequences 0 -> t -> X -> s -> 0.
inline std::size_t ext1_dim(const Quiver& q, SimpleId s, SimpleId t, unsigned p) {
  if (q.kind() == QuiverKind::OneLoop) {
    if (s.value >= p || t.value >= p) throw Error("ext1_dim: eigenvalue out of range");
    return s == t ? 1 : 0;
  }
  return q.count_arrows(s.value, t.value);
}

/// All invertible d x d matrices over F_p, in deterministic entry order.
inline std::vector<Matrix> general_linear_group(std::size_t d, unsigned p) {
  std::vector<Matrix> out;
  if (d == 0) {
    out.push_back(Matrix(0, 0, p));
    return out;
  }
  std::vector<unsigned> entries(d * d, 0);
  while (true) {
    Matrix m(d, d, p, entries);
    if (rref(m).rank == d) out.push_back(m);
    std::size_t k = 0;
    while (k < entries.size() && ++entries[k] == p) entries[k++] = 0;
    if (k == entries.size()) break;
  }
  return out;
}

inline long long general_linear_order(std::size_t d, unsigned p) {
  long long order = 1, pd = 1;
  for (std::size_t i = 0; i < d; ++i) pd *= p;
  long long pi = 1;
  for (std::size_t i = 0; i < d; ++i) {
    order *= (pd - pi);
    pi *= p;
  }
  return order;
}

/// Decide isomorphism by exhaustive search over GL(alpha) base-change tuples.
inline bool iso_test(const Representation& m, const Representation& n,
                     long long group_budget = 10'000'000) {
  if (m.quiver != n.quiver || m.p != n.p) throw Error("iso_test: incompatible representations");
  if (m.dim != n.dim) return false;
  const auto& arrows = m.quiver->arrows();
  if (arrows.empty()) return true;

  long long order = 1;
  for (std::size_t d : m.dim) {
    order *= general_linear_order(d, m.p);
    if (order > group_budget)
      throw BudgetExceeded("iso_test: base-change group order exceeds budget");
  }
  std::vector<std::vector<Matrix>> gls;
  for (std::size_t d : m.dim) gls.push_back(general_linear_group(d, m.p));

  std::vector<std::size_t> idx(m.dim.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < arrows.size() && ok; ++a) {
      const Matrix& gi = gls[arrows[a].source][idx[arrows[a].source]];
      const Matrix& gj = gls[arrows[a].target][idx[arrows[a].target]];
      if (n.arrow_maps[a] * gi != gj * m.arrow_maps[a]) ok = false;
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == gls[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return false;
}

/// One representative per isomorphism class of alpha-dimensional
/// representations, in deterministic first-encountered order.
inline std::vector<Representation> enumerate_classes_for_dim(const Quiver& q, unsigned p,
                                                             const DimVector& alpha,
                                                             long long budget = 10'000'000) {
  std::size_t entries_total = 0;
  for (const auto& a : q.arrows()) entries_total += alpha[a.target] * alpha[a.source];
  long long count = 1;
  for (std::size_t i = 0; i < entries_total; ++i) {
    count *= p;
    if (count > budget) throw BudgetExceeded("enumerate_classes_for_dim: too many matrix tuples");
  }

  std::vector<Representation> classes;
  std::vector<unsigned> flat(entries_total, 0);
  while (true) {
    Representation m{&q, p, alpha, {}};
    std::size_t off = 0;
    for (const auto& a : q.arrows()) {
      std::size_t r = alpha[a.target], c = alpha[a.source];
      Matrix mat(r, c, p, std::vector<unsigned>(flat.begin() + off, flat.begin() + off + r * c));
      off += r * c;
      m.arrow_maps.push_back(std::move(mat));
    }
    bool fresh = true;
    for (const auto& cls : classes)
      if (iso_test(cls, m, budget)) {
        fresh = false;
        break;
      }
    if (fresh) classes.push_back(std::move(m));
    std::size_t k = 0;
    while (k < flat.size() && ++flat[k] == p) flat[k++] = 0;
    if (k == flat.size()) break;
  }
  return classes;
}

namespace detail {

inline void dim_vectors_of_total(std::size_t parts, std::size_t total, DimVector& cur,
                                 std::vector<DimVector>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t x = 0; x <= total; ++x) {
    cur.push_back(x);
    dim_vectors_of_total(parts - 1, total - x, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All dimension vectors with the given total, in lexicographic order.
inline std::vector<DimVector> dim_vectors(std::size_t num_vertices, std::size_t total) {
  std::vector<DimVector> out;
  DimVector cur;
  detail::dim_vectors_of_total(num_vertices, total, cur, out);
  return out;
}

/// Iso-class representatives of every representation with |alpha| <= max_total_dim.
inline std::vector<Representation> enumerate_universe(const Quiver& q, unsigned p,
                                                      std::size_t max_total_dim,
                                                      long long budget = 10'000'000) {
  std::vector<Representation> out;
  for (std::size_t n = 0; n <= max_total_dim; ++n)
    for (const DimVector& alpha : dim_vectors(q.num_vertices(), n))
      for (auto& cls : enumerate_classes_for_dim(q, p, alpha, budget))
        out.push_back(std::move(cls));
  return out;
}

inline Representation direct_sum(const Representation& m, const Representation& n) {
  if (m.quiver != n.quiver || m.p != n.p) throw Error("direct_sum: incompatible representations");
  Representation s{m.quiver, m.p, {}, {}};
  for (std::size_t v = 0; v < m.dim.size(); ++v) s.dim.push_back(m.dim[v] + n.dim[v]);
  for (std::size_t a = 0; a < m.arrow_maps.size(); ++a) {
    const Arrow& ar = m.quiver->arrows()[a];
    Matrix blk(s.dim[ar.target], s.dim[ar.source], m.p);
    const Matrix& top = m.arrow_maps[a];
    const Matrix& bot = n.arrow_maps[a];
    for (std::size_t i = 0; i < top.rows(); ++i)
      for (std::size_t j = 0; j < top.cols(); ++j) blk(i, j) = top(i, j);
    for (std::size_t i = 0; i < bot.rows(); ++i)
      for (std::size_t j = 0; j < bot.cols(); ++j)
        blk(top.rows() + i, top.cols() + j) = bot(i, j);
    s.arrow_maps.push_back(std::move(blk));
  }
  return s;
}

/// The one-dimensional representation concentrated at a simple.
inline Representation simple_representation(const Quiver& q, unsigned p, SimpleId s) {
  if (q.kind() == QuiverKind::OneLoop) {
    Representation m = zero_representation(q, p, {1});
    m.arrow_maps[0](0, 0) = s.value % p;
    return m;
  }
  DimVector d(q.num_vertices(), 0);
  d[s.value] = 1;
  return zero_representation(q, p, d);
}

/// Transpose representation over the opposite quiver (duality fixture).
inline Representation opposite_representation(const Representation& m, const Quiver& op) {
  Representation r{&op, m.p, m.dim, {}};
  for (const auto& mat : m.arrow_maps) r.arrow_maps.push_back(mat.transpose());
  return r;
}

}  // namespace nctop
