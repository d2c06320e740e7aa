#pragma once

// Generic engine for the one-sided topology axiom table (A1)-(A10): given any
// carrier with (leq, eq, 0, 1, wedge, vee), check each axiom over supplied
// samples, classify idempotents, and evaluate finite (wedge,vee)-words.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nctop/errors.hpp"

namespace nctop {

template <typename E>
struct LatticeInstance {
  std::function<bool(const E&, const E&)> leq;
  std::function<bool(const E&, const E&)> eq;
  E zero;
  E one;
  std::function<E(const E&, const E&)> wedge;
  std::function<E(const E&, const E&)> vee;
};

enum class Side { Left, Middle, Right };

inline std::string side_name(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Middle: return "middle";
    default: return "right";
  }
}

/// (family, side) pairs mirror the three-column axiom table. Only the two
/// associativity families have a middle entry; every other family has a left
/// and a right one.
struct AxiomId {
  int family = 1;  // 1..10
  Side side = Side::Left;

  bool valid() const {
    if (family < 1 || family > 10) return false;
    if (family == 3 || family == 7) return side == Side::Middle;
    return side != Side::Middle;
  }

  std::string label() const { return "A" + std::to_string(family) + "-" + side_name(side); }

  bool operator==(const AxiomId&) const = default;
};

/// Every valid (family, side) pair, table order.
inline std::vector<AxiomId> all_axioms() {
  std::vector<AxiomId> out;
  for (int f = 1; f <= 10; ++f) {
    if (f == 3 || f == 7) {
      out.push_back({f, Side::Middle});
    } else {
      out.push_back({f, Side::Left});
      out.push_back({f, Side::Right});
    }
  }
  return out;
}

/// Column set checked for a given one-sidedness.
inline std::vector<AxiomId> axioms_for_columns(bool left_col, bool right_col) {
  std::vector<AxiomId> out;
  for (const AxiomId& a : all_axioms()) {
    if (a.side == Side::Middle || (a.side == Side::Left && left_col) ||
        (a.side == Side::Right && right_col))
      out.push_back(a);
  }
  return out;
}

template <typename E>
struct Violation {
  std::string detail;
  std::vector<E> elements;
  std::vector<E> cover;  // only for A10
};

template <typename E>
struct AxiomReport {
  AxiomId axiom;
  std::size_t checked = 0;
  bool vacuous = false;  // A9: no idempotent pairs a <= b in the sample
  std::vector<Violation<E>> violations;

  bool passed() const { return violations.empty(); }
};

template <typename E>
bool is_idempotent(const LatticeInstance<E>& L, const E& x) {
  return L.eq(L.wedge(x, x), x);
}

/// Re-evaluate one quantifier instance of an axiom; used by check_axiom and
/// for witness replay. `elems` must carry the axiom's arity (A10: one element
/// plus a cover).
template <typename E>
bool axiom_instance_holds(const LatticeInstance<E>& L, AxiomId a, const std::vector<E>& elems,
                          const std::vector<E>& cover = {}) {
  if (!a.valid()) throw Error("axiom_instance_holds: invalid axiom id " + a.label());
  const bool left = a.side == Side::Left;
  switch (a.family) {
    case 1: {
      const E& x = elems.at(0), & y = elems.at(1);
      return left ? L.leq(L.wedge(x, y), x) : L.leq(L.wedge(x, y), y);
    }
    case 2: {
      const E& x = elems.at(0);
      if (left)
        return L.eq(L.wedge(x, L.one), x) && L.eq(L.wedge(x, L.zero), L.zero);
      return L.eq(L.wedge(L.one, x), x) && L.eq(L.wedge(L.zero, x), L.zero);
    }
    case 3: {
      const E& x = elems.at(0), & y = elems.at(1), & z = elems.at(2);
      return L.eq(L.wedge(L.wedge(x, y), z), L.wedge(x, L.wedge(y, z)));
    }
    case 4: {
      const E& x = elems.at(0), & y = elems.at(1), & z = elems.at(2);
      if (!L.leq(x, y)) return true;
      return left ? L.leq(L.wedge(z, x), L.wedge(z, y)) : L.leq(L.wedge(x, z), L.wedge(y, z));
    }
    case 5: {
      const E& x = elems.at(0), & y = elems.at(1);
      return left ? L.leq(x, L.vee(x, y)) : L.leq(y, L.vee(x, y));
    }
    case 6: {
      const E& x = elems.at(0);
      if (left)
        return L.eq(L.vee(x, L.one), L.one) && L.eq(L.vee(x, L.zero), x);
      return L.eq(L.vee(L.one, x), L.one) && L.eq(L.vee(L.zero, x), x);
    }
    case 7: {
      const E& x = elems.at(0), & y = elems.at(1), & z = elems.at(2);
      return L.eq(L.vee(L.vee(x, y), z), L.vee(x, L.vee(y, z)));
    }
    case 8: {
      const E& x = elems.at(0), & y = elems.at(1), & z = elems.at(2);
      if (!L.leq(x, y)) return true;
      return left ? L.leq(L.vee(x, z), L.vee(y, z)) : L.leq(L.vee(z, x), L.vee(z, y));
    }
    case 9: {
      // Quantified over idempotent a <= b only; callers supply such pairs.
      const E& p = elems.at(0), & q = elems.at(1);
      if (left) return L.leq(L.vee(p, L.wedge(p, q)), L.wedge(L.vee(p, p), q));
      return L.leq(L.vee(p, L.wedge(q, p)), L.wedge(L.vee(p, q), p));
    }
    case 10: {
      const E& x = elems.at(0);
      if (cover.empty()) throw Error("A10 requires a cover");
      E acc = left ? L.wedge(x, cover[0]) : L.wedge(cover[0], x);
      for (std::size_t i = 1; i < cover.size(); ++i)
        acc = L.vee(acc, left ? L.wedge(x, cover[i]) : L.wedge(cover[i], x));
      return L.eq(x, acc);
    }
    default:
      throw Error("unreachable");
  }
}

/// Exhaustively instantiate one axiom's quantifiers over the sample (and the
/// supplied finite global covers for A10), recording every violation.
template <typename E>
AxiomReport<E> check_axiom(const LatticeInstance<E>& L, AxiomId a, const std::vector<E>& sample,
                           const std::vector<std::vector<E>>& covers = {}) {
  if (!a.valid()) throw Error("check_axiom: invalid axiom id");
  AxiomReport<E> report;
  report.axiom = a;
  auto run = [&](std::vector<E> elems, std::vector<E> cover = {}) {
    ++report.checked;
    if (!axiom_instance_holds(L, a, elems, cover))
      report.violations.push_back({a.label(), std::move(elems), std::move(cover)});
  };

  switch (a.family) {
    case 2:
    case 6:
      for (const E& x : sample) run({x});
      break;
    case 1:
    case 5:
      for (const E& x : sample)
        for (const E& y : sample) run({x, y});
      break;
    case 3:
    case 4:
    case 7:
    case 8:
      for (const E& x : sample)
        for (const E& y : sample)
          for (const E& z : sample) run({x, y, z});
      break;
    case 9: {
      std::vector<E> idem;
      for (const E& x : sample)
        if (is_idempotent(L, x)) idem.push_back(x);
      bool any = false;
      for (const E& p : idem)
        for (const E& q : idem)
          if (L.leq(p, q)) {
            any = true;
            run({p, q});
          }
      report.vacuous = !any;
      break;
    }
    case 10: {
      for (const auto& cover : covers) {
        if (cover.empty()) throw InvalidCover("A10: empty cover");
        E acc = cover[0];
        for (std::size_t i = 1; i < cover.size(); ++i) acc = L.vee(acc, cover[i]);
        if (!L.eq(acc, L.one))
          throw InvalidCover("A10: supplied family does not join to 1");
        for (const E& x : sample) run({x}, cover);
      }
      report.vacuous = covers.empty();
      break;
    }
  }
  return report;
}

/// Contractibility relative to an explicit pair sample.
template <typename E>
bool is_contractible(const LatticeInstance<E>& L, const E& x,
                     const std::vector<std::pair<E, E>>& pair_sample) {
  if (!is_idempotent(L, x)) throw NotIdempotent("is_contractible: element is not idempotent");
  for (const auto& [a, b] : pair_sample) {
    if (!L.leq(x, L.vee(a, b))) continue;
    if (!L.eq(x, L.vee(L.wedge(x, a), L.wedge(x, b)))) return false;
  }
  return true;
}

/// Finite expression tree over carrier elements with wedge/vee nodes.
template <typename E>
struct OpWord {
  enum class Kind { Leaf, Wedge, Vee };
  Kind kind = Kind::Leaf;
  std::optional<E> leaf;
  std::vector<OpWord<E>> children;

  static OpWord leaf_of(E e) {
    OpWord w;
    w.leaf = std::move(e);
    return w;
  }
  static OpWord wedge_of(std::vector<OpWord<E>> cs) {
    OpWord w;
    w.kind = Kind::Wedge;
    w.children = std::move(cs);
    return w;
  }
  static OpWord vee_of(std::vector<OpWord<E>> cs) {
    OpWord w;
    w.kind = Kind::Vee;
    w.children = std::move(cs);
    return w;
  }
};

template <typename E>
E eval_op_word(const LatticeInstance<E>& L, const OpWord<E>& w) {
  if (w.kind == OpWord<E>::Kind::Leaf) return *w.leaf;
  if (w.children.empty()) throw Error("eval_op_word: operator node with no children");
  E acc = eval_op_word(L, w.children[0]);
  for (std::size_t i = 1; i < w.children.size(); ++i) {
    E next = eval_op_word(L, w.children[i]);
    acc = (w.kind == OpWord<E>::Kind::Wedge) ? L.wedge(acc, next) : L.vee(acc, next);
  }
  return acc;
}

}  // namespace nctop
