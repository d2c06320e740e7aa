#pragma once

// Reineke's composition monoid C(Q) as a word-rewriting system: the
// quiver-derived relation families, BFS word-problem decision, the
// extension-theoretic point-set semantics of *-words, and the checkers
// relating the monoid to the basic-opens order.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nctop/opens.hpp"
#include "nctop/rep.hpp"

namespace nctop {

/// A *-word in the vertex generators R_i, bottom factor leftmost.
using MonoidWord = std::vector<std::size_t>;

struct Relation {
  MonoidWord lhs, rhs;
};

/// Relations of C(Q). Every relation preserves word length and generator
/// multiset; this is asserted at construction.
struct RelationSet {
  std::vector<Relation> relations;
};

namespace detail {

inline bool same_multiset(MonoidWord a, MonoidWord b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace detail

inline RelationSet make_relation_set(std::vector<Relation> rels) {
  for (const Relation& r : rels) {
    if (r.lhs.size() != r.rhs.size() || !detail::same_multiset(r.lhs, r.rhs))
      throw Error("RelationSet: relation does not preserve length and multiset");
  }
  return {std::move(rels)};
}

/// The two relation families read off from the quiver: commutation for
/// vertex pairs with no arrows between them, and the braid-like pair for
/// (i, j) with no arrows i->j and n >= 1 arrows j->i.
inline RelationSet relations_from_quiver(const Quiver& q) {
  if (q.kind() != QuiverKind::Acyclic)
    throw UnsupportedShape("relations_from_quiver: composition monoid needs an acyclic quiver");
  std::vector<Relation> rels;
  const std::size_t nv = q.num_vertices();
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j)
      if (q.count_arrows(i, j) == 0 && q.count_arrows(j, i) == 0)
        rels.push_back({{i, j}, {j, i}});
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      if (i == j) continue;
      std::size_t n = q.count_arrows(j, i);
      if (q.count_arrows(i, j) != 0 || n == 0) continue;
      // R_i^{n+1} R_j = R_i^n R_j R_i
      MonoidWord lhs1(n + 1, i), rhs1(n, i);
      lhs1.push_back(j);
      rhs1.push_back(j);
      rhs1.push_back(i);
      rels.push_back({lhs1, rhs1});
      // R_i R_j^{n+1} = R_j R_i R_j^n
      MonoidWord lhs2{i}, rhs2{j, i};
      lhs2.insert(lhs2.end(), n + 1, j);
      rhs2.insert(rhs2.end(), n, j);
      rels.push_back({lhs2, rhs2});
    }
  return make_relation_set(std::move(rels));
}

/// BFS closure of v under subword replacement by the relations (both
/// directions, any position). Relations preserve the letter multiset, so the
/// closure sits inside the finite anagram set and the search terminates.
inline std::set<MonoidWord> rewrite_class(const MonoidWord& v, const RelationSet& r) {
  std::set<MonoidWord> seen{v};
  std::deque<MonoidWord> queue{v};
  auto try_rule = [&](const MonoidWord& w, const MonoidWord& from, const MonoidWord& to) {
    if (from.size() > w.size()) return;
    for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
      if (!std::equal(from.begin(), from.end(), w.begin() + pos)) continue;
      MonoidWord next = w;
      std::copy(to.begin(), to.end(), next.begin() + pos);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  };
  while (!queue.empty()) {
    MonoidWord w = std::move(queue.front());
    queue.pop_front();
    for (const Relation& rel : r.relations) {
      try_rule(w, rel.lhs, rel.rhs);
      try_rule(w, rel.rhs, rel.lhs);
    }
  }
  return seen;
}

inline bool monoid_eq(const MonoidWord& v, const MonoidWord& v2, const RelationSet& r) {
  if (v.size() != v2.size() || !detail::same_multiset(v, v2)) return false;
  return rewrite_class(v, r).count(v2) > 0;
}

enum class RewriteSide { Left, Right };

/// Can v be rewritten so that `affix` appears as a prefix (Left) or suffix
/// (Right)?
inline bool exists_prefix_rewrite(const MonoidWord& v, const MonoidWord& affix,
                                  const RelationSet& r, RewriteSide side) {
  if (affix.size() > v.size()) return false;
  for (const MonoidWord& w : rewrite_class(v, r)) {
    bool hit = (side == RewriteSide::Left)
                   ? std::equal(affix.begin(), affix.end(), w.begin())
                   : std::equal(affix.rbegin(), affix.rend(), w.rbegin());
    if (hit) return true;
  }
  return false;
}

/// F_p point set of a *-word: the iso classes X of dimension sum-of-deltas
/// admitting the word as a bottom-to-top factor sequence.
struct SemanticSet {
  DimVector dim;
  std::vector<Representation> classes;
};

inline DimVector word_dim_vector(const MonoidWord& v, const Quiver& q) {
  DimVector alpha(q.num_vertices(), 0);
  for (std::size_t i : v) {
    if (i >= q.num_vertices()) throw Error("monoid word references unknown vertex");
    ++alpha[i];
  }
  return alpha;
}

inline FactorSequence word_as_sequence(const MonoidWord& v) {
  FactorSequence seq;
  for (std::size_t i : v) seq.push_back({static_cast<unsigned>(i)});
  return seq;
}

inline SemanticSet semantic_set(const MonoidWord& v, const Quiver& q, unsigned p,
                                long long budget = 10'000'000) {
  if (q.kind() != QuiverKind::Acyclic)
    throw UnsupportedShape("semantic_set: composition monoid needs an acyclic quiver");
  SemanticSet out;
  out.dim = word_dim_vector(v, q);
  FactorSequence target = word_as_sequence(v);
  for (auto& cls : enumerate_classes_for_dim(q, p, out.dim, budget))
    if (jh_sequences(cls).count(target)) out.classes.push_back(std::move(cls));
  return out;
}

struct RelationCheck {
  Relation relation;
  bool pass = true;
  std::vector<Representation> lhs_only, rhs_only;  // witnesses of a discrepancy
};

struct RelationSemanticsReport {
  std::vector<RelationCheck> checks;
  bool all_pass = true;
  // The monstroid lives on closed subvarieties over a closed field; here we
  // only compare F_p points at desk scale.
  std::string caveat = "F_p points of iso classes at desk scale, not closed subvarieties";
};

/// Verify that every relation holds point-wise: both sides carve out the same
/// iso classes.
inline RelationSemanticsReport check_relation_semantics(const RelationSet& r, const Quiver& q,
                                                        unsigned p,
                                                        long long budget = 10'000'000) {
  RelationSemanticsReport report;
  for (const Relation& rel : r.relations) {
    RelationCheck chk;
    chk.relation = rel;
    DimVector alpha = word_dim_vector(rel.lhs, q);
    FactorSequence lt = word_as_sequence(rel.lhs), rt = word_as_sequence(rel.rhs);
    for (auto& cls : enumerate_classes_for_dim(q, p, alpha, budget)) {
      std::set<FactorSequence> seqs = jh_sequences(cls);
      bool in_l = seqs.count(lt) > 0, in_r = seqs.count(rt) > 0;
      if (in_l == in_r) continue;
      chk.pass = false;
      (in_l ? chk.lhs_only : chk.rhs_only).push_back(std::move(cls));
    }
    report.all_pass = report.all_pass && chk.pass;
    report.checks.push_back(std::move(chk));
  }
  return report;
}

inline MonoidWord word_from_singleton_letters(const Word& w, const Quiver& q, unsigned p) {
  MonoidWord target;
  for (const Letter& l : w.letters) {
    if (l.members.size() != 1)
      throw Error("expected a word of singleton letters");
    SimpleId s = l.members[0];
    if (q.kind() != QuiverKind::Acyclic) throw UnsupportedShape("singleton-letter monoid words need an acyclic quiver");
    (void)p;
    target.push_back(s.value);
  }
  return target;
}

struct Prop2Report {
  bool agree = true;
  std::vector<std::size_t> disagreements;  // universe indices
  std::size_t checked = 0;
};

/// Membership in a singleton-letter basic open coincides with
/// prefix-rewritability (suffix for the right flavor) of some factor sequence
/// to the word's generator string.
inline Prop2Report check_prop2(const Word& w, const Quiver& q, unsigned p, const Universe& u,
                               Flavor flavor) {
  if (flavor == Flavor::Scattered)
    throw Error("check_prop2: flavor must be left or right");
  Word flavored = w;
  flavored.flavor = flavor;
  MonoidWord target = word_from_singleton_letters(w, q, p);
  RelationSet rels = relations_from_quiver(q);
  RewriteSide side = (flavor == Flavor::Left) ? RewriteSide::Left : RewriteSide::Right;

  Prop2Report report;
  for (std::size_t i = 0; i < u.reps.size(); ++i) {
    bool lhs = member_seqs(u.seqs[i], flavored);
    bool rhs = false;
    for (const FactorSequence& seq : u.seqs[i]) {
      MonoidWord v;
      for (SimpleId s : seq) v.push_back(s.value);
      if (exists_prefix_rewrite(v, target, rels, side)) {
        rhs = true;
        break;
      }
    }
    ++report.checked;
    if (lhs != rhs) {
      report.agree = false;
      report.disagreements.push_back(i);
    }
  }
  return report;
}

struct Prop3Report {
  bool monoid_equiv = true;     // relative to the listed relations
  bool universe_equiv = true;   // relative to the universe bound
  bool agree = true;
  std::optional<MonoidWord> monoid_witness;
  std::size_t words_checked = 0;
};

namespace detail {

inline bool multiset_contains(const std::map<std::size_t, std::size_t>& big,
                              const std::map<std::size_t, std::size_t>& small) {
  for (const auto& [k, c] : small) {
    auto it = big.find(k);
    if (it == big.end() || it->second < c) return false;
  }
  return true;
}

}  // namespace detail

/// Compare the monoid-level equivalence (prefix-rewritability to w and to w2
/// agrees on every *-word containing their letter multiset, up to a length
/// bound) with the universe-level equivalence of the two basic opens.
inline Prop3Report check_prop3(const Word& w, const Word& w2, const Quiver& q, unsigned p,
                               const Universe& u, std::size_t star_len_bound,
                               RewriteSide side = RewriteSide::Left) {
  MonoidWord tw = word_from_singleton_letters(w, q, p);
  MonoidWord tw2 = word_from_singleton_letters(w2, q, p);
  RelationSet rels = relations_from_quiver(q);

  std::map<std::size_t, std::size_t> need;
  {
    std::map<std::size_t, std::size_t> ca, cb;
    for (std::size_t i : tw) ++ca[i];
    for (std::size_t i : tw2) ++cb[i];
    need = ca;
    for (const auto& [k, c] : cb)
      if (need[k] < c) need[k] = c;
  }
  std::size_t need_total = 0;
  for (const auto& [k, c] : need) need_total += c;

  Prop3Report report;
  const std::size_t nv = q.num_vertices();
  for (std::size_t len = need_total; len <= star_len_bound; ++len) {
    MonoidWord v(len, 0);
    if (len == 0) continue;
    while (true) {
      std::map<std::size_t, std::size_t> have;
      for (std::size_t i : v) ++have[i];
      if (detail::multiset_contains(have, need)) {
        ++report.words_checked;
        bool to_w = exists_prefix_rewrite(v, tw, rels, side);
        bool to_w2 = exists_prefix_rewrite(v, tw2, rels, side);
        if (to_w != to_w2 && report.monoid_equiv) {
          report.monoid_equiv = false;
          report.monoid_witness = v;
        }
      }
      std::size_t k = 0;
      while (k < len && ++v[k] == nv) v[k++] = 0;
      if (k == len) break;
    }
  }

  Flavor flavor = (side == RewriteSide::Left) ? Flavor::Left : Flavor::Right;
  Word fw = w, fw2 = w2;
  fw.flavor = flavor;
  fw2.flavor = flavor;
  report.universe_equiv = equiv(element_of(fw), element_of(fw2), u);
  report.agree = report.monoid_equiv == report.universe_equiv;
  return report;
}

}  // namespace nctop
