#pragma once

// File formats and the report structure used by the CLI. Quiver and
// representation files are versioned JSON; words use the compact text syntax
//   <flavor> <letters>   e.g.  "l {S2}{S1}", "o *{S1}", "r ~{S0}"
// with '*' the full letter, '{}' the empty letter and '~{...}' a cofinite
// letter.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nctop/opens.hpp"
#include "nctop/quiver.hpp"
#include "nctop/rep.hpp"

namespace nctop {

using nlohmann::json;

inline void require_format_1(const json& j, const std::string& what) {
  if (!j.contains("format") || j["format"] != 1)
    throw ParseError(what + ": missing or unsupported 'format' (expected 1)");
}

inline Quiver quiver_from_json(const json& j) {
  require_format_1(j, "quiver file");
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<ArrowSpec> arrows;
    for (const auto& a : j.at("arrows"))
      arrows.push_back({a.at("from").get<std::string>(), a.at("to").get<std::string>(),
                        a.at("id").get<std::string>()});
    return build_quiver(j.value("name", "quiver"), vertices, arrows);
  } catch (const json::exception& e) {
    throw ParseError(std::string("quiver file: ") + e.what());
  }
}

inline json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"from", q.vertices()[a.source]},
                      {"to", q.vertices()[a.target]},
                      {"id", a.id}});
  return {{"format", 1}, {"name", q.name()}, {"vertices", q.vertices()}, {"arrows", arrows}};
}

inline Representation rep_from_json(const json& j, const Quiver& q) {
  require_format_1(j, "rep file");
  try {
    if (j.contains("quiver") && j["quiver"].get<std::string>() != q.name())
      throw ParseError("rep file: quiver name '" + j["quiver"].get<std::string>() +
                       "' does not match '" + q.name() + "'");
    unsigned p = j.at("p").get<unsigned>();
    if (!is_prime(p)) throw ParseError("rep file: p = " + std::to_string(p) + " is not prime");
    DimVector dim = j.at("dim").get<DimVector>();
    if (dim.size() != q.num_vertices()) throw ParseError("rep file: dim vector length mismatch");
    Representation m{&q, p, dim, {}};
    const json& mats = j.at("arrows");
    for (const auto& a : q.arrows()) {
      if (!mats.contains(a.id)) throw ParseError("rep file: missing matrix for arrow '" + a.id + "'");
      const json& rows = mats[a.id];
      std::size_t r = dim[a.target], c = dim[a.source];
      if (rows.size() != r)
        throw ParseError("rep file: arrow '" + a.id + "' expects " + std::to_string(r) + " rows");
      Matrix mat(r, c, p);
      for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
          throw ParseError("rep file: arrow '" + a.id + "' expects " + std::to_string(c) +
                           " columns in row " + std::to_string(i));
        for (std::size_t k = 0; k < c; ++k)
          mat(i, k) = rows[i][k].get<long long>() % p;
      }
      m.arrow_maps.push_back(std::move(mat));
    }
    validate(m);
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("rep file: ") + e.what());
  }
}

inline json rep_to_json(const Representation& m) {
  json mats = json::object();
  for (std::size_t a = 0; a < m.quiver->arrows().size(); ++a) {
    const Matrix& mat = m.arrow_maps[a];
    json rows = json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < mat.cols(); ++k) row.push_back(mat(i, k));
      rows.push_back(row);
    }
    mats[m.quiver->arrows()[a].id] = rows;
  }
  return {{"format", 1}, {"quiver", m.quiver->name()}, {"p", m.p}, {"dim", m.dim},
          {"arrows", mats}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

inline SimpleId parse_simple(const std::string& tok, const Quiver& q, unsigned p) {
  if (tok.size() < 2 || tok[0] != 'S') throw ParseError("bad simple token '" + tok + "'");
  std::string body = tok.substr(1);
  if (q.kind() == QuiverKind::Acyclic) return {static_cast<unsigned>(q.vertex_index(body))};
  unsigned lam;
  try {
    lam = static_cast<unsigned>(std::stoul(body));
  } catch (...) {
    throw ParseError("bad eigenvalue in simple token '" + tok + "'");
  }
  if (lam >= p) throw ParseError("eigenvalue in '" + tok + "' not a residue mod " + std::to_string(p));
  return {lam};
}

inline std::vector<SimpleId> parse_simple_list(const std::string& body, const Quiver& q,
                                               unsigned p) {
  std::vector<SimpleId> out;
  std::string tok;
  std::stringstream ss(body);
  while (std::getline(ss, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(parse_simple(tok.substr(b, e - b + 1), q, p));
  }
  return out;
}

inline Word parse_word(const std::string& text, const Quiver& q, unsigned p) {
  std::size_t i = text.find_first_not_of(" \t");
  if (i == std::string::npos) throw ParseError("empty word string");
  Flavor flavor;
  switch (text[i]) {
    case 'l': flavor = Flavor::Left; break;
    case 'r': flavor = Flavor::Right; break;
    case 'o': flavor = Flavor::Scattered; break;
    default: throw ParseError("word must start with flavor l, r or o");
  }
  ++i;
  Word w{flavor, {}};
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    if (text[i] == '*') {
      w.letters.push_back(full_letter(q, p));
      ++i;
      continue;
    }
    bool cofinite = false;
    if (text[i] == '~') {
      cofinite = true;
      ++i;
    }
    if (i >= text.size() || text[i] != '{')
      throw ParseError("expected '{' in word at position " + std::to_string(i));
    std::size_t close = text.find('}', i);
    if (close == std::string::npos) throw ParseError("unterminated letter in word");
    std::vector<SimpleId> ms = parse_simple_list(text.substr(i + 1, close - i - 1), q, p);
    if (cofinite) {
      if (q.kind() != QuiverKind::OneLoop)
        throw ParseError("cofinite letters are only meaningful for the one-loop quiver");
      w.letters.push_back(cofinite_letter(ms, q, p));
    } else {
      w.letters.push_back(make_letter(std::move(ms)));
    }
    i = close + 1;
  }
  if (w.letters.empty()) throw ParseError("word has no letters");
  return w;
}

/// Canonical printed form; parse(print_word(w)) == w.
inline std::string print_word(const Word& w, const Quiver& q, unsigned p) {
  std::string out(1, flavor_char(w.flavor));
  out += ' ';
  Letter full = full_letter(q, p);
  for (const Letter& l : w.letters) {
    if (l == full) {
      out += '*';
      continue;
    }
    out += '{';
    for (std::size_t i = 0; i < l.members.size(); ++i) {
      if (i) out += ',';
      out += simple_label(q, l.members[i]);
    }
    out += '}';
  }
  return out;
}

inline std::string print_sequence(const FactorSequence& seq, const Quiver& q) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += simple_label(q, seq[i]);
  }
  return out;
}

/// Machine- and human-renderable command report. Every verdict carries the
/// scale parameters needed to reproduce it.
struct Report {
  std::string command;
  json params = json::object();
  std::string verdict;  // "pass", "fail", "true", "false", ...
  json witnesses = json::array();
  std::vector<std::string> caveats;
  json details = json::object();
};

inline json report_to_json(const Report& r) {
  return {{"format", 1},     {"command", r.command}, {"params", r.params},
          {"verdict", r.verdict}, {"witnesses", r.witnesses}, {"caveats", r.caveats},
          {"details", r.details}};
}

inline Report report_from_json(const json& j) {
  require_format_1(j, "report");
  Report r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.verdict = j.at("verdict").get<std::string>();
  r.witnesses = j.at("witnesses");
  r.caveats = j.at("caveats").get<std::vector<std::string>>();
  r.details = j.at("details");
  return r;
}

inline std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "params: " << r.params.dump() << "\n";
  out << "verdict: " << r.verdict << "\n";
  if (!r.witnesses.empty()) out << "witnesses: " << r.witnesses.dump() << "\n";
  for (const auto& c : r.caveats) out << "caveat: " << c << "\n";
  if (!r.details.empty()) out << "details: " << r.details.dump(2) << "\n";
  return out.str();
}

}  // namespace nctop
