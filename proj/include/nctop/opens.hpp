#pragma once

// The basic-opens calculus: words of letters, the left/right/scattered
// membership flavors, multiset union, the qualifying sets rep(w u w'), the
// equivalence and order relative to an explicit universe, wedge by
// concatenation and vee by union, packaged as a LatticeInstance.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "nctop/lattice.hpp"
#include "nctop/rep.hpp"

namespace nctop {

/// An open subset of the simples, stored normalized (sorted, explicit).
/// Cofinite inputs normalize to their explicit complement since the simple
/// set over F_p is finite.
struct Letter {
  std::vector<SimpleId> members;

  bool contains(SimpleId s) const {
    return std::binary_search(members.begin(), members.end(), s);
  }
  bool empty() const { return members.empty(); }
  auto operator<=>(const Letter&) const = default;
};

inline Letter make_letter(std::vector<SimpleId> ms) {
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return {std::move(ms)};
}

inline Letter full_letter(const Quiver& q, unsigned p) { return make_letter(simples(q, p)); }

inline Letter empty_letter() { return {}; }

inline Letter cofinite_letter(const std::vector<SimpleId>& excluded, const Quiver& q, unsigned p) {
  Letter ex = make_letter(excluded);
  std::vector<SimpleId> ms;
  for (SimpleId s : simples(q, p))
    if (!ex.contains(s)) ms.push_back(s);
  return make_letter(std::move(ms));
}

/// All letters over the simples (every subset), deterministic order.
inline std::vector<Letter> all_letters(const Quiver& q, unsigned p) {
  std::vector<SimpleId> ss = simples(q, p);
  std::vector<Letter> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ss.size()); ++mask) {
    std::vector<SimpleId> ms;
    for (std::size_t i = 0; i < ss.size(); ++i)
      if (mask & (std::size_t{1} << i)) ms.push_back(ss[i]);
    out.push_back(make_letter(std::move(ms)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class Flavor { Left, Right, Scattered };

inline char flavor_char(Flavor f) {
  switch (f) {
    case Flavor::Left: return 'l';
    case Flavor::Right: return 'r';
    default: return 'o';
  }
}

struct Word {
  Flavor flavor = Flavor::Left;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  auto operator<=>(const Word&) const = default;
};

inline Word zero_word(Flavor f) { return {f, {empty_letter()}}; }
inline Word one_word(Flavor f, const Quiver& q, unsigned p) { return {f, {full_letter(q, p)}}; }

/// Does one factor sequence match the word under its flavor?
inline bool seq_matches(const FactorSequence& seq, const Word& w) {
  const std::size_t k = w.length(), u = seq.size();
  switch (w.flavor) {
    case Flavor::Left:
      if (u < k) return false;
      for (std::size_t i = 0; i < k; ++i)
        if (!w.letters[i].contains(seq[i])) return false;
      return true;
    case Flavor::Right:
      if (u < k) return false;
      for (std::size_t j = 0; j < k; ++j)
        if (!w.letters[j].contains(seq[u - k + j])) return false;
      return true;
    case Flavor::Scattered: {
      std::size_t pos = 0;
      for (std::size_t j = 0; j < k; ++j) {
        while (pos < u && !w.letters[j].contains(seq[pos])) ++pos;
        if (pos == u) return false;
        ++pos;
      }
      return true;
    }
  }
  return false;
}

inline bool member_seqs(const std::set<FactorSequence>& seqs, const Word& w) {
  for (const FactorSequence& s : seqs)
    if (seq_matches(s, w)) return true;
  return false;
}

/// The sequence realizing membership, if any.
inline std::optional<FactorSequence> member_witness_seq(const std::set<FactorSequence>& seqs,
                                                        const Word& w) {
  for (const FactorSequence& s : seqs)
    if (seq_matches(s, w)) return s;
  return std::nullopt;
}

inline bool member(const Representation& m, const Word& w, Budget* budget = nullptr) {
  return member_seqs(jh_sequences(m, budget), w);
}

/// Letters with multiplicities; identity is set equality of normalized letters.
using LetterMultiset = std::map<Letter, std::size_t>;

/// Per distinct letter, the maximum number of occurrences in either word.
inline LetterMultiset multiset_union(const Word& w, const Word& w2) {
  LetterMultiset ms;
  LetterMultiset a, b;
  for (const Letter& l : w.letters) ++a[l];
  for (const Letter& l : w2.letters) ++b[l];
  for (const auto& [l, c] : a) ms[l] = c;
  for (const auto& [l, c] : b) {
    auto it = ms.find(l);
    if (it == ms.end() || it->second < c) ms[l] = c;
  }
  return ms;
}

/// Does the factor multiset of m contain the letter multiset? Decided by
/// maximum bipartite matching between letter instances and factors. The factor
/// multiset is filtration-independent, so any one sequence serves.
inline bool multiset_fits(const FactorSequence& factors, const LetterMultiset& ms) {
  std::vector<const Letter*> instances;
  for (const auto& [l, c] : ms)
    for (std::size_t i = 0; i < c; ++i) instances.push_back(&l);
  if (instances.size() > factors.size()) return false;

  // Kuhn's augmenting paths, letter instances on the left.
  std::vector<int> match(factors.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> try_match =
      [&](std::size_t li, std::vector<bool>& used) {
        for (std::size_t f = 0; f < factors.size(); ++f) {
          if (used[f] || !instances[li]->contains(factors[f])) continue;
          used[f] = true;
          if (match[f] < 0 || try_match(static_cast<std::size_t>(match[f]), used)) {
            match[f] = static_cast<int>(li);
            return true;
          }
        }
        return false;
      };
  for (std::size_t li = 0; li < instances.size(); ++li) {
    std::vector<bool> used(factors.size(), false);
    if (!try_match(li, used)) return false;
  }
  return true;
}

inline bool rep_has_multiset(const Representation& m, const LetterMultiset& ms,
                             Budget* budget = nullptr) {
  std::set<FactorSequence> seqs = jh_sequences(m, budget);
  return multiset_fits(*seqs.begin(), ms);
}

/// A formal finite join of basic opens sharing one flavor; singleton = basic open.
struct LatticeElement {
  Flavor flavor = Flavor::Left;
  std::vector<Word> words;  // sorted, unique, nonempty

  auto operator<=>(const LatticeElement&) const = default;
};

inline LatticeElement element_of(Word w) {
  Flavor f = w.flavor;
  return {f, {std::move(w)}};
}

inline LatticeElement canonicalize(Flavor f, std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  if (words.empty()) throw Error("LatticeElement: empty word set");
  return {f, std::move(words)};
}

inline LatticeElement zero_element(Flavor f) { return element_of(zero_word(f)); }
inline LatticeElement one_element(Flavor f, const Quiver& q, unsigned p) {
  return element_of(one_word(f, q, p));
}

/// Pairwise concatenation distributed over the joins. No equivalence
/// normalization here; the comparison operations own that.
inline LatticeElement wedge(const LatticeElement& x, const LatticeElement& y) {
  if (x.flavor != y.flavor) throw Error("wedge: mixed flavors");
  std::vector<Word> words;
  for (const Word& a : x.words)
    for (const Word& b : y.words) {
      Word c{x.flavor, a.letters};
      c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
      words.push_back(std::move(c));
    }
  return canonicalize(x.flavor, std::move(words));
}

inline LatticeElement vee(const LatticeElement& x, const LatticeElement& y) {
  if (x.flavor != y.flavor) throw Error("vee: mixed flavors");
  std::vector<Word> words = x.words;
  words.insert(words.end(), y.words.begin(), y.words.end());
  return canonicalize(x.flavor, std::move(words));
}

inline bool member_seqs(const std::set<FactorSequence>& seqs, const LatticeElement& x) {
  for (const Word& w : x.words)
    if (member_seqs(seqs, w)) return true;
  return false;
}

/// Iso-class representatives with precomputed factor sequences. One-loop
/// classes whose composition factors are not split over F_p cannot carry a
/// Jordan-Hoelder filtration here; they are set aside in `non_split` and
/// surfaced in reports rather than silently dropped.
struct Universe {
  const Quiver* quiver = nullptr;
  unsigned p = 2;
  std::size_t max_total_dim = 0;
  std::vector<Representation> reps;
  std::vector<std::set<FactorSequence>> seqs;
  std::vector<Representation> non_split;
};

inline Universe make_universe(const Quiver& q, unsigned p, std::size_t max_total_dim,
                              long long budget = 10'000'000) {
  Universe u;
  u.quiver = &q;
  u.p = p;
  u.max_total_dim = max_total_dim;
  for (std::size_t n = 1; n <= max_total_dim; ++n)
    for (const DimVector& alpha : dim_vectors(q.num_vertices(), n))
      for (auto& cls : enumerate_classes_for_dim(q, p, alpha, budget)) {
        try {
          u.seqs.push_back(jh_sequences(cls));
          u.reps.push_back(std::move(cls));
        } catch (const NonSplitFactor&) {
          u.non_split.push_back(std::move(cls));
        }
      }
  return u;
}

/// Qualifying multiset for comparing x and y: per distinct letter, the
/// maximum occurrence count over all words of both elements. Empty letters
/// are dropped: a word containing one has empty point set and would otherwise
/// void every comparison against the 0 element.
inline LetterMultiset qualifying_multiset(const LatticeElement& x, const LatticeElement& y) {
  LetterMultiset ms;
  auto absorb = [&](const LatticeElement& e) {
    for (const Word& w : e.words) {
      LetterMultiset wm;
      for (const Letter& l : w.letters)
        if (!l.empty()) ++wm[l];
      for (const auto& [l, c] : wm) {
        auto it = ms.find(l);
        if (it == ms.end() || it->second < c) ms[l] = c;
      }
    }
  };
  absorb(x);
  absorb(y);
  return ms;
}

struct LeqResult {
  bool holds = true;
  std::optional<std::size_t> witness;  // universe index refuting the inclusion
};

/// x <= y relative to the universe: every qualifying representation that
/// lies in x also lies in y.
inline LeqResult leq_witness(const LatticeElement& x, const LatticeElement& y, const Universe& u) {
  LetterMultiset qual = qualifying_multiset(x, y);
  for (std::size_t i = 0; i < u.reps.size(); ++i) {
    const auto& seqs = u.seqs[i];
    if (!multiset_fits(*seqs.begin(), qual)) continue;
    if (member_seqs(seqs, x) && !member_seqs(seqs, y)) return {false, i};
  }
  return {true, std::nullopt};
}

inline bool leq(const LatticeElement& x, const LatticeElement& y, const Universe& u) {
  return leq_witness(x, y, u).holds;
}

inline bool equiv(const LatticeElement& x, const LatticeElement& y, const Universe& u) {
  return leq(x, y, u) && leq(y, x, u);
}

/// Raw point set of x on the universe (no qualifying restriction).
inline std::vector<std::size_t> point_set(const LatticeElement& x, const Universe& u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.reps.size(); ++i)
    if (member_seqs(u.seqs[i], x)) out.push_back(i);
  return out;
}

/// Package the carrier as a LatticeInstance whose eq/leq are relative to the
/// shared universe.
inline LatticeInstance<LatticeElement> as_lattice(const Quiver& q, unsigned p, Flavor flavor,
                                                  std::shared_ptr<const Universe> universe) {
  LatticeInstance<LatticeElement> L;
  L.zero = zero_element(flavor);
  L.one = one_element(flavor, q, p);
  L.leq = [universe](const LatticeElement& x, const LatticeElement& y) {
    return leq(x, y, *universe);
  };
  L.eq = [universe](const LatticeElement& x, const LatticeElement& y) {
    return equiv(x, y, *universe);
  };
  L.wedge = [](const LatticeElement& x, const LatticeElement& y) { return wedge(x, y); };
  L.vee = [](const LatticeElement& x, const LatticeElement& y) { return vee(x, y); };
  return L;
}

/// All words of length 1..max_len over the alphabet, as singleton elements.
inline std::vector<LatticeElement> sample_words(const std::vector<Letter>& alphabet, Flavor flavor,
                                                std::size_t max_len) {
  std::vector<LatticeElement> out;
  std::vector<std::vector<Letter>> cur = {{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : cur)
      for (const Letter& l : alphabet) {
        std::vector<Letter> w = prefix;
        w.push_back(l);
        out.push_back(element_of(Word{flavor, w}));
        next.push_back(std::move(w));
      }
    cur = std::move(next);
  }
  return out;
}

/// The standard finite global covers used in axiom sweeps: the trivial cover
/// {1} and the singleton-letter cover.
inline std::vector<std::vector<LatticeElement>> standard_covers(const Quiver& q, unsigned p,
                                                                Flavor flavor) {
  std::vector<std::vector<LatticeElement>> covers;
  covers.push_back({one_element(flavor, q, p)});
  std::vector<LatticeElement> singletons;
  for (SimpleId s : simples(q, p))
    singletons.push_back(element_of(Word{flavor, {make_letter({s})}}));
  covers.push_back(std::move(singletons));
  return covers;
}

}  // namespace nctop
