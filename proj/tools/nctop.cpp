// nctop: batch query front end for the quiver-representation topology library.
//
// Exit codes: 0 = affirmative/pass, 1 = negative/violation found,
// 2 = usage, parse or budget error. The NCTOP_BUDGET environment variable
// overrides the default enumeration budget.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nctop/io.hpp"
#include "nctop/lattice.hpp"
#include "nctop/monoid.hpp"
#include "nctop/opens.hpp"
#include "nctop/rep.hpp"

using namespace nctop;

namespace {

long long env_budget() {
  if (const char* s = std::getenv("NCTOP_BUDGET")) {
    try {
      long long b = std::stoll(s);
      if (b <= 0) throw ParseError("NCTOP_BUDGET must be positive");
      return b;
    } catch (const Error&) {
      throw;
    } catch (...) {
      throw ParseError("NCTOP_BUDGET is not an integer");
    }
  }
  return 10'000'000;
}

Flavor parse_flavor(const std::string& s) {
  if (s == "l") return Flavor::Left;
  if (s == "r") return Flavor::Right;
  if (s == "o") return Flavor::Scattered;
  throw ParseError("flavor must be l, r or o");
}

/// "R2R2R1" -> generator indices via the quiver's vertex names.
MonoidWord parse_monoid_word(const std::string& s, const Quiver& q) {
  if (s.empty() || s[0] != 'R') throw ParseError("monoid word must look like R2R2R1");
  MonoidWord out;
  std::size_t i = 1;
  while (i <= s.size()) {
    std::size_t next = s.find('R', i);
    if (next == std::string::npos) next = s.size();
    if (next == i) throw ParseError("empty generator in monoid word '" + s + "'");
    out.push_back(q.vertex_index(s.substr(i, next - i)));
    i = next + 1;
  }
  return out;
}

std::string monoid_word_str(const MonoidWord& v, const Quiver& q) {
  std::string out;
  for (std::size_t i : v) out += "R" + q.vertices()[i];
  return out;
}

struct Output {
  bool as_json = false;
  long long seed = 0;

  void emit(Report r) const {
    r.params["seed"] = seed;
    if (as_json)
      std::cout << report_to_json(r).dump(2) << "\n";
    else
      std::cout << report_to_text(r);
  }
};

json element_json(const LatticeElement& x, const Quiver& q, unsigned p) {
  json words = json::array();
  for (const Word& w : x.words) words.push_back(print_word(w, q, p));
  return words;
}

int cmd_jh(const Output& out, const std::string& quiver_path, const std::string& rep_path) {
  json qj = load_json_file(quiver_path);
  Quiver q = quiver_from_json(qj);
  Representation m = rep_from_json(load_json_file(rep_path), q);
  Budget budget;
  const long long configured = env_budget();
  budget.nodes = configured;
  std::set<FactorSequence> seqs = jh_sequences(m, &budget);
  Report r;
  r.command = "jh";
  r.params = {{"quiver", q.name()}, {"p", m.p}, {"dim", m.dim}, {"budget", configured}};
  r.verdict = "ok";
  for (const FactorSequence& s : seqs) r.witnesses.push_back(print_sequence(s, q));
  r.details["count"] = seqs.size();
  out.emit(r);
  return 0;
}

int cmd_member(const Output& out, const std::string& quiver_path, const std::string& rep_path,
               const std::string& word_str) {
  Quiver q = quiver_from_json(load_json_file(quiver_path));
  Representation m = rep_from_json(load_json_file(rep_path), q);
  Word w = parse_word(word_str, q, m.p);
  Budget budget;
  const long long configured = env_budget();
  budget.nodes = configured;
  std::set<FactorSequence> seqs = jh_sequences(m, &budget);
  auto witness = member_witness_seq(seqs, w);
  Report r;
  r.command = "member";
  r.params = {{"quiver", q.name()}, {"p", m.p}, {"dim", m.dim},
              {"word", print_word(w, q, m.p)}, {"budget", configured}};
  r.verdict = witness ? "true" : "false";
  if (witness) r.witnesses.push_back(print_sequence(*witness, q));
  out.emit(r);
  return witness ? 0 : 1;
}

int cmd_axioms(const Output& out, const std::string& quiver_path, const std::string& flavor_str,
               unsigned p, std::size_t max_dim, std::size_t max_word_len) {
  Quiver q = quiver_from_json(load_json_file(quiver_path));
  Flavor f = parse_flavor(flavor_str);
  auto uni = std::make_shared<Universe>(make_universe(q, p, max_dim, env_budget()));
  auto L = as_lattice(q, p, f, uni);
  auto sample = sample_words(all_letters(q, p), f, max_word_len);
  auto covers = standard_covers(q, p, f);

  std::vector<AxiomId> required;
  if (f == Flavor::Left)
    required = axioms_for_columns(true, false);
  else if (f == Flavor::Right)
    required = axioms_for_columns(false, true);
  else
    required = axioms_for_columns(true, true);

  auto in_required = [&](AxiomId a) {
    for (AxiomId b : required)
      if (a.family == b.family && a.side == b.side) return true;
    return false;
  };

  Report r;
  r.command = "axioms";
  r.params = {{"quiver", q.name()}, {"flavor", flavor_str}, {"p", p},
              {"max_dim", max_dim}, {"max_word_len", max_word_len},
              {"sample_size", sample.size()}};
  std::size_t required_violations = 0;
  json table = json::array();
  for (AxiomId a : all_axioms()) {
    auto report = check_axiom(L, a, sample, covers);
    bool req = in_required(a);
    json row = {{"axiom", a.label()},
                {"required", req},
                {"checked", report.checked},
                {"vacuous", report.vacuous},
                {"violations", report.violations.size()}};
    if (!report.violations.empty()) {
      json elems = json::array();
      for (const auto& e : report.violations[0].elements) elems.push_back(element_json(e, q, p));
      row["witness"] = elems;
    }
    if (req)
      required_violations += report.violations.size();
    else if (!report.passed())
      r.caveats.push_back("opposite-column probe " + a.label() + " fails (" +
                          std::to_string(report.violations.size()) +
                          " violations); not required for flavor " + flavor_str);
    table.push_back(std::move(row));
  }
  r.details["table"] = std::move(table);
  r.details["required_violations"] = required_violations;
  r.caveats.push_back("finite field F_" + std::to_string(p) + ", universe total dim <= " +
                      std::to_string(max_dim) + ", words of length <= " +
                      std::to_string(max_word_len));
  r.verdict = required_violations == 0 ? "pass" : "fail";
  out.emit(r);
  return required_violations == 0 ? 0 : 1;
}

int cmd_monoid_relations(const Output& out, const Quiver& q) {
  RelationSet rels = relations_from_quiver(q);
  Report r;
  r.command = "monoid relations";
  r.params = {{"quiver", q.name()}};
  r.verdict = "ok";
  for (const Relation& rel : rels.relations)
    r.witnesses.push_back(monoid_word_str(rel.lhs, q) + " = " + monoid_word_str(rel.rhs, q));
  out.emit(r);
  return 0;
}

int cmd_monoid_eq(const Output& out, const Quiver& q, const std::string& a,
                  const std::string& b) {
  bool eq = monoid_eq(parse_monoid_word(a, q), parse_monoid_word(b, q),
                      relations_from_quiver(q));
  Report r;
  r.command = "monoid eq";
  r.params = {{"quiver", q.name()}, {"lhs", a}, {"rhs", b}};
  r.verdict = eq ? "true" : "false";
  out.emit(r);
  return eq ? 0 : 1;
}

int cmd_monoid_prefix(const Output& out, const Quiver& q, const std::string& word,
                      const std::string& affix, const std::string& side_str) {
  RewriteSide side = side_str == "right" ? RewriteSide::Right : RewriteSide::Left;
  if (side_str != "left" && side_str != "right")
    throw ParseError("--side must be left or right");
  bool ok = exists_prefix_rewrite(parse_monoid_word(word, q), parse_monoid_word(affix, q),
                                  relations_from_quiver(q), side);
  Report r;
  r.command = "monoid prefix";
  r.params = {{"quiver", q.name()}, {"word", word}, {"affix", affix}, {"side", side_str}};
  r.verdict = ok ? "true" : "false";
  out.emit(r);
  return ok ? 0 : 1;
}

int cmd_monoid_semcheck(const Output& out, const Quiver& q, unsigned p) {
  auto report = check_relation_semantics(relations_from_quiver(q), q, p, env_budget());
  Report r;
  r.command = "monoid semcheck";
  r.params = {{"quiver", q.name()}, {"p", p}};
  r.verdict = report.all_pass ? "pass" : "fail";
  r.caveats.push_back(report.caveat);
  for (const RelationCheck& chk : report.checks) {
    json row = {{"relation", monoid_word_str(chk.relation.lhs, q) + " = " +
                             monoid_word_str(chk.relation.rhs, q)},
                {"pass", chk.pass}};
    r.details["checks"].push_back(std::move(row));
  }
  out.emit(r);
  return report.all_pass ? 0 : 1;
}

int cmd_check_prop2(const Output& out, const Quiver& q, const std::string& word_str, unsigned p,
                    std::size_t max_dim) {
  Word w = parse_word(word_str, q, p);
  if (w.flavor == Flavor::Scattered) throw ParseError("prop2 needs a one-sided flavor (l or r)");
  Universe u = make_universe(q, p, max_dim, env_budget());
  auto report = check_prop2(w, q, p, u, w.flavor);
  Report r;
  r.command = "check prop2";
  r.params = {{"quiver", q.name()}, {"word", print_word(w, q, p)}, {"p", p},
              {"max_dim", max_dim}};
  r.verdict = report.agree ? "pass" : "fail";
  r.details["checked"] = report.checked;
  for (std::size_t i : report.disagreements)
    r.witnesses.push_back({{"universe_index", i}, {"dim", u.reps[i].dim}});
  out.emit(r);
  return report.agree ? 0 : 1;
}

int cmd_check_prop3(const Output& out, const Quiver& q, const std::string& w_str,
                    const std::string& w2_str, unsigned p, std::size_t max_dim,
                    std::size_t star_bound, const std::string& side_str) {
  if (side_str != "left" && side_str != "right")
    throw ParseError("--side must be left or right");
  RewriteSide side = side_str == "right" ? RewriteSide::Right : RewriteSide::Left;
  Word w = parse_word(w_str, q, p), w2 = parse_word(w2_str, q, p);
  Universe u = make_universe(q, p, max_dim, env_budget());
  auto report = check_prop3(w, w2, q, p, u, star_bound, side);
  Report r;
  r.command = "check prop3";
  r.params = {{"quiver", q.name()}, {"word", print_word(w, q, p)},
              {"word2", print_word(w2, q, p)}, {"p", p}, {"max_dim", max_dim},
              {"star_bound", star_bound}, {"side", side_str}};
  r.verdict = report.agree ? "pass" : "fail";
  r.details["monoid_equiv"] = report.monoid_equiv;
  r.details["universe_equiv"] = report.universe_equiv;
  r.details["star_words_checked"] = report.words_checked;
  if (report.monoid_witness)
    r.witnesses.push_back(monoid_word_str(*report.monoid_witness, q));
  out.emit(r);
  return report.agree ? 0 : 1;
}

int cmd_check_prop4(const Output& out, const Quiver& q, unsigned p, std::size_t max_dim) {
  auto uni = std::make_shared<Universe>(make_universe(q, p, max_dim, env_budget()));
  auto letters = all_letters(q, p);
  std::size_t bad = 0, checked = 0;
  Report r;
  for (Flavor f : {Flavor::Left, Flavor::Right})
    for (const Letter& ul : letters)
      for (const Letter& vl : letters) {
        Word uv{f, {ul, vl}}, vu{f, {vl, ul}};
        ++checked;
        if (!equiv(element_of(uv), element_of(vu), *uni)) {
          ++bad;
          r.witnesses.push_back({{"uv", print_word(uv, q, p)}, {"vu", print_word(vu, q, p)}});
        }
      }
  r.command = "check prop4";
  r.params = {{"quiver", q.name()}, {"p", p}, {"max_dim", max_dim}};
  r.verdict = bad == 0 ? "pass" : "fail";
  r.details["pairs_checked"] = checked;
  r.details["non_commuting_pairs"] = bad;
  out.emit(r);
  return bad == 0 ? 0 : 1;
}

int cmd_check_equiv(const Output& out, const Quiver& q, const std::string& w_str,
                    const std::string& w2_str, unsigned p, std::size_t max_dim) {
  Word w = parse_word(w_str, q, p), w2 = parse_word(w2_str, q, p);
  if (w.flavor != w2.flavor) throw ParseError("equiv: both words must share a flavor");
  Universe u = make_universe(q, p, max_dim, env_budget());
  LatticeElement x = element_of(w), y = element_of(w2);
  auto fwd = leq_witness(x, y, u), bwd = leq_witness(y, x, u);
  Report r;
  r.command = "check equiv";
  r.params = {{"quiver", q.name()}, {"word", print_word(w, q, p)},
              {"word2", print_word(w2, q, p)}, {"p", p}, {"max_dim", max_dim}};
  bool eq = fwd.holds && bwd.holds;
  r.verdict = eq ? "true" : "false";
  auto add_witness = [&](const char* dir, const LeqResult& res) {
    if (res.holds) return;
    r.witnesses.push_back({{"direction", dir},
                           {"dim", u.reps[*res.witness].dim},
                           {"rep", rep_to_json(u.reps[*res.witness])}});
  };
  add_witness("x<=y", fwd);
  add_witness("y<=x", bwd);
  out.emit(r);
  return eq ? 0 : 1;
}

int cmd_dot(const Output& out, const Quiver& q, const std::string& flavor_str, unsigned p,
            std::size_t max_dim, std::size_t max_word_len) {
  Flavor f = parse_flavor(flavor_str);
  Universe u = make_universe(q, p, max_dim, env_budget());
  auto sample = sample_words(all_letters(q, p), f, max_word_len);
  std::ostringstream dot;
  dot << "digraph leq {\n  rankdir=BT;\n";
  auto node_name = [&](std::size_t i) { return "w" + std::to_string(i); };
  for (std::size_t i = 0; i < sample.size(); ++i)
    dot << "  " << node_name(i) << " [label=\"" << print_word(sample[i].words[0], q, p)
        << "\"];\n";
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j)
      if (i != j && leq(sample[i], sample[j], u))
        dot << "  " << node_name(i) << " -> " << node_name(j) << ";\n";
  dot << "}\n";
  if (out.as_json) {
    Report r;
    r.command = "dot";
    r.params = {{"quiver", q.name()}, {"flavor", flavor_str}, {"p", p},
                {"max_dim", max_dim}, {"max_word_len", max_word_len}};
    r.verdict = "ok";
    r.details["dot"] = dot.str();
    out.emit(r);
  } else {
    std::cout << dot.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field quiver representation topology toolkit"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "emit machine-readable JSON reports");
  app.add_option("--seed", out.seed,
                 "seed echoed into reports (all default sweeps are exhaustive)");

  std::string quiver_path, rep_path, word_str, word2_str, flavor_str = "l";
  std::string monoid_lhs, monoid_rhs, side_str = "left";
  unsigned p = 2;
  std::size_t max_dim = 3, max_word_len = 2, star_bound = 4;

  auto* jh = app.add_subcommand("jh", "all Jordan-Hölder factor sequences of a representation");
  jh->add_option("quiver", quiver_path)->required();
  jh->add_option("rep", rep_path)->required();

  auto* member = app.add_subcommand("member", "does a representation lie in a basic open?");
  member->add_option("quiver", quiver_path)->required();
  member->add_option("rep", rep_path)->required();
  member->add_option("word", word_str)->required();

  auto* axioms = app.add_subcommand("axioms", "axiom sweep for a flavor's required columns");
  axioms->add_option("quiver", quiver_path)->required();
  axioms->add_option("--flavor", flavor_str)->required();
  axioms->add_option("--p", p);
  axioms->add_option("--max-dim", max_dim);
  axioms->add_option("--max-word-len", max_word_len);

  auto* monoid = app.add_subcommand("monoid", "composition monoid queries");
  monoid->add_option("quiver", quiver_path)->required();
  monoid->require_subcommand(1);
  auto* m_rel = monoid->add_subcommand("relations", "list the quiver's relation families");
  auto* m_eq = monoid->add_subcommand("eq", "decide the word problem");
  m_eq->add_option("lhs", monoid_lhs)->required();
  m_eq->add_option("rhs", monoid_rhs)->required();
  auto* m_pre = monoid->add_subcommand("prefix", "prefix/suffix rewritability");
  m_pre->add_option("word", monoid_lhs)->required();
  m_pre->add_option("affix", monoid_rhs)->required();
  m_pre->add_option("--side", side_str);
  auto* m_sem = monoid->add_subcommand("semcheck", "point-set soundness of the relations");
  m_sem->add_option("--p", p);

  auto* check = app.add_subcommand("check", "property checkers");
  check->add_option("quiver", quiver_path)->required();
  check->require_subcommand(1);
  auto* c_p2 = check->add_subcommand("prop2", "membership vs prefix-rewritability");
  c_p2->add_option("--word", word_str)->required();
  c_p2->add_option("--p", p);
  c_p2->add_option("--max-dim", max_dim);
  auto* c_p3 = check->add_subcommand("prop3", "monoid-level vs universe-level equivalence");
  c_p3->add_option("--word", word_str)->required();
  c_p3->add_option("--word2", word2_str)->required();
  c_p3->add_option("--p", p);
  c_p3->add_option("--max-dim", max_dim);
  c_p3->add_option("--star-bound", star_bound);
  c_p3->add_option("--side", side_str);
  auto* c_p4 = check->add_subcommand("prop4", "commutativity sweep over all letter pairs");
  c_p4->add_option("--p", p);
  c_p4->add_option("--max-dim", max_dim);
  auto* c_eq = check->add_subcommand("equiv", "universe equivalence of two basic opens");
  c_eq->add_option("--word", word_str)->required();
  c_eq->add_option("--word2", word2_str)->required();
  c_eq->add_option("--p", p);
  c_eq->add_option("--max-dim", max_dim);

  auto* dot = app.add_subcommand("dot", "DOT export of the <=-order on sample words");
  dot->add_option("quiver", quiver_path)->required();
  dot->add_option("--flavor", flavor_str);
  dot->add_option("--p", p);
  dot->add_option("--max-dim", max_dim);
  dot->add_option("--max-word-len", max_word_len);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (jh->parsed()) return cmd_jh(out, quiver_path, rep_path);
    if (member->parsed()) return cmd_member(out, quiver_path, rep_path, word_str);
    if (axioms->parsed())
      return cmd_axioms(out, quiver_path, flavor_str, p, max_dim, max_word_len);
    if (monoid->parsed()) {
      Quiver q = quiver_from_json(load_json_file(quiver_path));
      if (m_rel->parsed()) return cmd_monoid_relations(out, q);
      if (m_eq->parsed()) return cmd_monoid_eq(out, q, monoid_lhs, monoid_rhs);
      if (m_pre->parsed()) return cmd_monoid_prefix(out, q, monoid_lhs, monoid_rhs, side_str);
      if (m_sem->parsed()) return cmd_monoid_semcheck(out, q, p);
    }
    if (check->parsed()) {
      Quiver q = quiver_from_json(load_json_file(quiver_path));
      if (c_p2->parsed()) return cmd_check_prop2(out, q, word_str, p, max_dim);
      if (c_p3->parsed())
        return cmd_check_prop3(out, q, word_str, word2_str, p, max_dim, star_bound, side_str);
      if (c_p4->parsed()) return cmd_check_prop4(out, q, p, max_dim);
      if (c_eq->parsed()) return cmd_check_equiv(out, q, word_str, word2_str, p, max_dim);
    }
    if (dot->parsed()) {
      Quiver q = quiver_from_json(load_json_file(quiver_path));
      return cmd_dot(out, q, flavor_str, p, max_dim, max_word_len);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
