#pragma once

// Quivers: finite vertex/arrow data. Supported shapes are acyclic quivers
// (path-algebra model, vertex simples) and the single one-loop quiver
// (polynomial-algebra model, eigenvalue simples).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "nctop/errors.hpp"
#include "nctop/linear.hpp"

namespace nctop {

enum class QuiverKind { Acyclic, OneLoop };

struct Arrow {
  std::size_t source;  // vertex index
  std::size_t target;  // vertex index
  std::string id;
};

class Quiver {
 public:
  Quiver(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows,
         QuiverKind kind)
      : name_(std::move(name)), vertices_(std::move(vertices)), arrows_(std::move(arrows)),
        kind_(kind) {}

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  QuiverKind kind() const { return kind_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  std::size_t vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == name) return i;
    throw ParseError("unknown vertex '" + name + "' in quiver " + name_);
  }

  std::size_t count_arrows(std::size_t from, std::size_t to) const {
    std::size_t n = 0;
    for (const auto& a : arrows_)
      if (a.source == from && a.target == to) ++n;
    return n;
  }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  QuiverKind kind_;
};

struct ArrowSpec {
  std::string from, to, id;
};

/// Validate and classify a quiver description. Accepts acyclic quivers and
/// the single one-loop quiver; rejects everything else.
inline Quiver build_quiver(const std::string& name, const std::vector<std::string>& vertices,
                           const std::vector<ArrowSpec>& arrow_specs) {
  std::vector<std::string> vs = vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) throw ParseError("duplicate vertex id '" + vs[i] + "'");

  std::vector<Arrow> arrows;
  for (const auto& s : arrow_specs) {
    std::size_t from = vs.size(), to = vs.size();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i] == s.from) from = i;
      if (vs[i] == s.to) to = i;
    }
    if (from == vs.size() || to == vs.size())
      throw ParseError("arrow '" + s.id + "' references unknown vertex");
    arrows.push_back({from, to, s.id});
  }
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = i + 1; j < arrows.size(); ++j)
      if (arrows[i].id == arrows[j].id) throw ParseError("duplicate arrow id '" + arrows[i].id + "'");

  // The one-loop quiver: exactly one vertex carrying exactly one loop.
  if (vs.size() == 1 && arrows.size() == 1 && arrows[0].source == 0 && arrows[0].target == 0)
    return Quiver(name, vs, arrows, QuiverKind::OneLoop);

  for (const auto& a : arrows)
    if (a.source == a.target)
      throw UnsupportedShape("quiver '" + name + "': loops are only supported as the lone one-loop quiver");

  // Kahn topological sort for acyclicity.
  std::vector<std::size_t> indeg(vs.size(), 0);
  for (const auto& a : arrows) ++indeg[a.target];
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (indeg[i] == 0) queue.push_back(i);
  std::size_t seen = 0;
  while (!queue.empty()) {
    std::size_t v = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& a : arrows)
      if (a.source == v && --indeg[a.target] == 0) queue.push_back(a.target);
  }
  if (seen != vs.size()) throw CycleError("quiver '" + name + "' contains a directed cycle");
  return Quiver(name, vs, arrows, QuiverKind::Acyclic);
}

/// Identifier of a simple object: the vertex index for acyclic quivers, the
/// loop eigenvalue residue for the one-loop quiver.
struct SimpleId {
  unsigned value = 0;
  auto operator<=>(const SimpleId&) const = default;
};

inline std::string simple_label(const Quiver& q, SimpleId s) {
  if (q.kind() == QuiverKind::Acyclic) return "S" + q.vertices().at(s.value);
  return "S" + std::to_string(s.value);
}

/// All simple objects, in deterministic order.
inline std::vector<SimpleId> simples(const Quiver& q, unsigned p) {
  if (!is_prime(p)) throw Error("simples: p must be prime");
  std::vector<SimpleId> out;
  if (q.kind() == QuiverKind::Acyclic) {
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
      out.push_back({static_cast<unsigned>(i)});
  } else {
    for (unsigned lam = 0; lam < p; ++lam) out.push_back({lam});
  }
  return out;
}

/// Quiver with all arrows reversed (same vertex order and names).
inline Quiver opposite_quiver(const Quiver& q) {
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({a.target, a.source, a.id});
  return Quiver(q.name() + "_op", q.vertices(), arrows, q.kind());
}

}  // namespace nctop
