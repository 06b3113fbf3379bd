/*
  coxblock - command line front end.

  Subcommands:
    verify-table1   re-verify the bundled induced-orbit table
    lemma32         run the induced-orbit criterion on one (type, weights, subset)
    orbits          list or look up nilpotent orbit data
    coxeter         Coxeter number, characteristic polynomial, torus order
    primes          admissible primes for a type and prime power
    tree            build, bind and emit the Brauer tree of a bundled fixture

  Exit codes: 0 success / all-pass, 1 verification failure, 2 usage or
  configuration errors.
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "coxblock/balacarter.hpp"
#include "coxblock/blockarith.hpp"
#include "coxblock/brauer_io.hpp"
#include "coxblock/table1.hpp"

using namespace coxblock;
using nlohmann::json;

namespace {

std::string poly_str(const QuadPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Quad c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string term;
    bool negative = c.a < Rat(0) || (c.a == Rat(0) && c.b < Rat(0));
    Quad mag = negative ? -c : c;
    std::string coeff = mag.str();
    if (k == 0) term = coeff;
    else {
      std::string power = var + (k == 1 ? "" : "^" + std::to_string(k));
      term = (coeff == "1" ? "" : coeff + "*") + power;
    }
    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

json poly_json(const QuadPoly& p) {
  json coeffs = json::array();
  int d = 1;
  for (const Quad& c : p.coeffs())
    if (c.d > 1) d = c.d;
  for (const Quad& c : p.coeffs()) {
    if (!c.a.is_integer() || !c.b.is_integer()) throw std::logic_error("non-integer coefficient");
    if (d == 1) coeffs.push_back(c.a.num());
    else coeffs.push_back({c.a.num(), c.b.num()});
  }
  json out;
  out["coefficients"] = coeffs;  // ascending degree
  if (d > 1) out["sqrt"] = d;
  return out;
}

json zpoly_json(const ZPoly& p) {
  json coeffs = json::array();
  for (Int c : p.coeffs()) coeffs.push_back(c);
  return json{{"coefficients", coeffs}};
}

std::string zpoly_str(const ZPoly& p, const std::string& var) {
  std::vector<Quad> q;
  for (Int c : p.coeffs()) q.emplace_back(c);
  return poly_str(QuadPoly(q), var);
}

std::vector<Int> parse_weights(const std::string& text) {
  std::vector<Int> out;
  for (const auto& tok : detail::split(text, ',')) out.push_back(std::stoll(detail::strip(tok)));
  return out;
}

// user-facing node indices are 1-based Bourbaki
std::vector<int> parse_subset(const std::string& text, int rank) {
  std::vector<int> out;
  if (detail::strip(text).empty()) return out;
  for (const auto& tok : detail::split(text, ',')) {
    int v = std::stoi(detail::strip(tok));
    if (v < 1 || v > rank) throw std::invalid_argument("node index out of range: " + tok);
    out.push_back(v - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string subset_str(const std::vector<int>& I) {
  std::string s = "{";
  for (size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i] + 1);
  return s + "}";
}

struct Options {
  std::string format = "text";
  std::string data_directory;
  bool json() const { return format == "json"; }
};

int run_verify_table1(const Options& opt, int max_rank) {
  auto reports = verify_table1(max_rank, opt.data_directory);
  bool ok = all_rows_pass(reports);
  if (opt.json()) {
    json rows = json::array();
    for (const auto& r : reports) {
      json row;
      row["row_id"] = r.row_id;
      row["status"] = detail::status_str(r.status);
      if (!r.detail.empty()) row["detail"] = r.detail;
      if (r.status == RowStatus::Pass) {
        row["levi_consistent"] = r.levi_consistent;
        row["ambient_consistent"] = r.ambient_consistent;
        row["witness_subset"] = json::array();
        for (int i : r.witness_subset) row["witness_subset"].push_back(i + 1);
        row["cond_i"] = r.criterion.cond_i;
        row["cond_ii"] = r.criterion.cond_ii;
        row["cond_iii"] = r.criterion.cond_iii;
        row["uI_in_u2"] = r.criterion.uI_in_u2;
        row["dim_identity"] = r.criterion.dim_identity;
        row["ambient_dim"] = r.criterion.ambient_dim;
        row["levi_dim"] = r.criterion.levi_dim;
        row["radical_size"] = r.criterion.radical_size;
        json witnesses = json::array();
        for (const auto& w : r.criterion.witnesses) {
          json jw;
          jw["component"] = json::array();
          for (int c : w.component) jw["component"].push_back(c + 1);
          jw["beta"] = w.beta + 1;
          jw["chain"] = json::array();
          for (int c : w.chain) jw["chain"].push_back(c + 1);
          witnesses.push_back(jw);
        }
        row["witnesses"] = witnesses;
      }
      rows.push_back(row);
    }
    json out{{"rows", rows}, {"all_pass", ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.status == RowStatus::Pass   ? "pass    "
                    : r.status == RowStatus::Fail ? "FAIL    "
                                                  : "skipped ")
                << r.row_id;
      if (r.status == RowStatus::Pass)
        std::cout << "  I=" << subset_str(r.witness_subset) << "  dim " << r.criterion.ambient_dim
                  << " = " << r.criterion.levi_dim << " + 2*" << r.criterion.radical_size;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
    }
    std::cout << (ok ? "all rows pass" : "FAILURES PRESENT") << "\n";
  }
  return ok ? 0 : 1;
}

int run_lemma32(const Options& opt, const std::string& type_text, const std::string& weights_text,
                const std::string& subset_text) {
  CartanType t = parse_type(type_text);
  RootSystem rs(t);
  std::vector<Int> w = parse_weights(weights_text);
  if (static_cast<int>(w.size()) != rs.rank())
    throw std::invalid_argument("expected " + std::to_string(rs.rank()) + " weights for " +
                                t.str());
  WeightedDynkinDiagram d(w);
  std::vector<int> I = parse_subset(subset_text, rs.rank());
  OrbitTables tables(opt.data_directory);
  Lemma32Report rep = lemma32_check(rs, d, I, tables);
  if (opt.json()) {
    json out;
    out["type"] = t.str();
    out["subset"] = json::array();
    for (int i : I) out["subset"].push_back(i + 1);
    out["cond_i"] = rep.cond_i;
    out["cond_ii"] = rep.cond_ii;
    out["cond_iii"] = rep.cond_iii;
    out["uI_in_u2"] = rep.uI_in_u2;
    out["dim_identity"] = rep.dim_identity;
    out["pass"] = rep.pass();
    out["ambient_dim"] = rep.ambient_dim;
    out["levi_dim"] = rep.levi_dim;
    out["radical_size"] = rep.radical_size;
    out["levi_orbit_labels"] = rep.levi_orbit_labels;
    json ws = json::array();
    for (const auto& cw : rep.witnesses) {
      json jw;
      jw["found"] = cw.found;
      jw["component"] = json::array();
      for (int c : cw.component) jw["component"].push_back(c + 1);
      if (cw.found) {
        jw["beta"] = cw.beta + 1;
        jw["chain"] = json::array();
        for (int c : cw.chain) jw["chain"].push_back(c + 1);
      }
      ws.push_back(jw);
    }
    out["witnesses"] = ws;
    std::cout << out.dump(2) << "\n";
  } else {
    auto mark = [](bool b) { return b ? "ok  " : "FAIL"; };
    std::cout << "type " << t.str() << ", subset " << subset_str(I) << "\n";
    std::cout << "  (i)   Levi restriction valid      " << mark(rep.cond_i);
    if (!rep.levi_orbit_labels.empty()) {
      std::cout << "  [";
      for (size_t k = 0; k < rep.levi_orbit_labels.size(); ++k)
        std::cout << (k ? ", " : "") << rep.levi_orbit_labels[k];
      std::cout << "]";
    }
    std::cout << "\n";
    std::cout << "  (ii)  complement all of weight 2  " << mark(rep.cond_ii) << "\n";
    std::cout << "  (iii) attachment chains exist     " << mark(rep.cond_iii);
    for (const auto& cw : rep.witnesses) {
      std::cout << "  component {";
      for (size_t k = 0; k < cw.component.size(); ++k)
        std::cout << (k ? "," : "") << cw.component[k] + 1;
      std::cout << "}: ";
      if (cw.found) {
        std::cout << "chain [";
        for (size_t k = 0; k < cw.chain.size(); ++k) std::cout << (k ? "," : "") << cw.chain[k] + 1;
        std::cout << "] -> " << cw.beta + 1;
      } else {
        std::cout << "none";
      }
    }
    std::cout << "\n";
    std::cout << "  u_I inside u(2)                   " << mark(rep.uI_in_u2) << "\n";
    std::cout << "  dimension identity                " << mark(rep.dim_identity) << "  ("
              << rep.ambient_dim << " vs " << rep.levi_dim << " + 2*" << rep.radical_size << ")\n";
    std::cout << (rep.pass() ? "pass" : "FAIL") << "\n";
  }
  return rep.pass() ? 0 : 1;
}

int run_orbits(const Options& opt, const std::string& type_text, const std::string& name,
               const std::string& label_text, const std::string& diagram_text) {
  CartanType t = parse_type(type_text);
  RootSystem rs(t);
  OrbitTables tables(opt.data_directory);
  json out;
  std::ostringstream text;
  if (is_exceptional_family(t.family)) {
    const auto& table = tables.table(t.family, t.rank);
    if (!name.empty()) {
      auto hit = lookup_orbit(table, name);
      if (!hit) throw std::invalid_argument("no orbit named '" + name + "' in " + t.str());
      out = {{"name", hit->name}, {"weights", hit->diagram}, {"dim", hit->dim}};
      text << hit->name << " | ";
      for (size_t i = 0; i < hit->diagram.size(); ++i) text << (i ? "," : "") << hit->diagram[i];
      text << " | dim " << hit->dim << "\n";
    } else if (!diagram_text.empty()) {
      auto hit = lookup_orbit_by_diagram(table, parse_weights(diagram_text));
      if (!hit) throw std::invalid_argument("not a weighted Dynkin diagram for " + t.str());
      out = {{"name", hit->name}, {"weights", hit->diagram}, {"dim", hit->dim}};
      text << hit->name << " | dim " << hit->dim << "\n";
    } else {
      json rows = json::array();
      for (const auto& orbit : table) {
        rows.push_back({{"name", orbit.name}, {"weights", orbit.diagram}, {"dim", orbit.dim}});
        text << orbit.name << " | ";
        for (size_t i = 0; i < orbit.diagram.size(); ++i)
          text << (i ? "," : "") << orbit.diagram[i];
        text << " | dim " << orbit.dim << "\n";
      }
      out = {{"type", t.str()}, {"orbits", rows}};
    }
  } else {
    if (!label_text.empty()) {
      OrbitLabel l = instantiate_label(t.family, label_text, 0, "<arg>", 0);
      std::string err = label_error(t.family, t.rank, l);
      if (!err.empty()) throw std::invalid_argument("bad label: " + err);
      auto d = classical_diagram(t.family, t.rank, l);
      out = {{"label", label_str(l)}, {"weights", d}, {"dim", orbit_dimension_formula(rs, d)}};
      text << label_str(l) << " -> ";
      for (size_t i = 0; i < d.size(); ++i) text << (i ? "," : "") << d[i];
      text << " | dim " << orbit_dimension_formula(rs, d) << "\n";
    } else if (!diagram_text.empty()) {
      auto d = parse_weights(diagram_text);
      auto l = classical_label(t.family, t.rank, d);
      if (!l) throw std::invalid_argument("not a weighted Dynkin diagram for " + t.str());
      out = {{"label", label_str(*l)}, {"weights", d}, {"dim", orbit_dimension_formula(rs, d)}};
      text << label_str(*l) << " | dim " << orbit_dimension_formula(rs, d) << "\n";
    } else {
      json rows = json::array();
      for (const OrbitLabel& l : all_classical_labels(t.family, t.rank)) {
        auto d = classical_diagram(t.family, t.rank, l);
        rows.push_back(
            {{"label", label_str(l)}, {"weights", d}, {"dim", orbit_dimension_formula(rs, d)}});
        text << label_str(l) << " -> ";
        for (size_t i = 0; i < d.size(); ++i) text << (i ? "," : "") << d[i];
        text << " | dim " << orbit_dimension_formula(rs, d) << "\n";
      }
      out = {{"type", t.str()}, {"orbits", rows}};
    }
  }
  if (opt.json()) std::cout << out.dump(2) << "\n";
  else std::cout << text.str();
  return 0;
}

int run_coxeter(const Options& opt, const std::string& type_text) {
  CartanType t = parse_type(type_text);
  RootSystem rs(t);
  WeylElement c = coxeter_element(rs);
  CoxeterNumber cn = coxeter_number(t);
  ZPoly cp = char_poly(c);
  QuadPoly to = torus_order(rs, c);
  if (opt.json()) {
    json out;
    out["type"] = t.str();
    out["h"] = cn.h;
    out["delta"] = cn.delta;
    out["twisted_rank"] = rs.twisted_rank();
    out["very_twisted"] = cn.use_torus_order;
    json word = json::array();
    for (int i : c.word) word.push_back(i + 1);
    out["coxeter_word"] = word;
    out["char_poly"] = zpoly_json(cp);
    out["torus_order"] = poly_json(to);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "type " << t.str() << "\n";
    std::cout << "  h = " << cn.h << ", delta = " << cn.delta
              << ", twisted rank r = " << rs.twisted_rank() << "\n";
    std::cout << "  coxeter word:";
    for (int i : c.word) std::cout << " s" << i + 1;
    std::cout << "\n";
    std::cout << "  char poly:   " << zpoly_str(cp, "x") << "\n";
    std::cout << "  |T_c|(q):    " << poly_str(to, "q") << "\n";
    if (cn.use_torus_order)
      std::cout << "  (very twisted: admissibility goes through |T_c|, q^2 the prime power)\n";
  }
  return 0;
}

int run_primes(const Options& opt, const std::string& type_text, Int q, Int q2, Int bound) {
  CartanType t = parse_type(type_text);
  bool vt = very_twisted(t);
  if (vt && q2 == 0)
    throw std::invalid_argument("very twisted type: give the honest prime power with --q2");
  if (!vt && q == 0) throw std::invalid_argument("give the prime power with --q");
  Int q_power = vt ? q2 : q;
  std::vector<Int> admissible;
  for (Int ell = 2; ell <= bound; ++ell) {
    if (!is_prime(ell)) continue;
    if (coxeter_case_check({t, q_power, ell}).admissible()) admissible.push_back(ell);
  }
  AdmissibilityReport sample = coxeter_case_check({t, q_power, 2});
  if (opt.json()) {
    json out;
    out["type"] = t.str();
    out[vt ? "q2" : "q"] = q_power;
    out["bound"] = bound;
    out["divisor"] = sample.divisor_desc;
    out["divisor_value"] = sample.divisor_value;
    out["admissible"] = admissible;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.str() << ", " << sample.divisor_desc << " = " << sample.divisor_value << "\n";
    std::cout << "admissible ell <= " << bound << ":";
    for (Int ell : admissible) std::cout << " " << ell;
    std::cout << "\n";
  }
  return 0;
}

int run_tree(const Options& opt, const std::string& type_text, Int q, Int q2, Int ell,
             const std::string& emit, const std::string& out_path) {
  CartanType t = parse_type(type_text);
  SeriesFixture fx = load_series_fixture(t, opt.data_directory);
  bool vt = very_twisted(t);
  Int q_power = vt ? q2 : q;
  if (q_power == 0) {
    q_power = fx.ref_q_power;
    if (ell == 0) ell = fx.ref_ell;
  }
  if (ell == 0) throw std::invalid_argument("give the prime with --ell");

  AdmissibilityReport adm = coxeter_case_check({t, q_power, ell});

  // multiplicity of the exceptional node: (ell-part of |T_c| - 1) / (h/delta)
  Int ell_part = 1, value = adm.divisor_value;
  while (value != 0 && value % ell == 0) {
    ell_part *= ell;
    value /= ell;
  }
  Int m_exc = (ell_part - 1) / (adm.h / adm.delta);
  if (m_exc < 1) m_exc = fx.ref_multiplicity;

  BrauerTree tree = build_hlm_tree(fx.series, m_exc);
  tree = attach_planar_order(tree, fixture_planar_orders(tree, fx));

  // bind the root-of-unity tags; odd exponents of irrational q cannot bind
  json bindings = json::array();
  std::ostringstream bind_text;
  for (const auto& s : fx.series) {
    std::string tag = s.characters.front().name;
    json b{{"series", tag}, {"order", s.zeta.order}, {"exp", s.zeta.exp}};
    if (vt && s.zeta.exp % 2 != 0) {
      b["bound"] = false;
      b["reason"] = "q^" + std::to_string(s.zeta.exp) +
                    " is irrational; the residue lives in a quadratic extension";
      bind_text << "  " << tag << ": not bindable over F_" << ell << " (odd power of q)\n";
    } else {
      RootOfUnitySpec spec = s.zeta;
      if (vt) spec.exp /= 2;  // q^exp = (q^2)^(exp/2)
      BindingResult r = bind_root_of_unity(spec, q_power, ell);
      b["bound"] = r.bound;
      if (r.bound) {
        b["residue"] = r.residue;
        bind_text << "  " << tag << ": zeta = q^" << s.zeta.exp << " = " << r.residue << " mod "
                  << ell << " (order " << s.zeta.order << ")\n";
      } else {
        b["reason"] = r.reason;
        bind_text << "  " << tag << ": binding failed, " << r.reason << "\n";
      }
    }
    bindings.push_back(b);
  }

  std::string emitted = emit == "json" ? serialize_tree_json(tree) : serialize_tree_dot(tree);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << emitted;
  }

  if (opt.json()) {
    json out;
    out["type"] = t.str();
    out[vt ? "q2" : "q"] = q_power;
    out["ell"] = ell;
    out["admissible"] = adm.admissible();
    out["m_exc"] = m_exc;
    out["bindings"] = bindings;
    out["tree"] = tree_to_json(tree);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "type " << t.str() << ", " << (vt ? "q^2" : "q") << " = " << q_power
              << ", ell = " << ell << (adm.admissible() ? "" : "  [NOT ADMISSIBLE]") << "\n";
    std::cout << "exceptional multiplicity " << m_exc << "\n";
    std::cout << "bindings:\n" << bind_text.str();
    if (out_path.empty()) std::cout << emitted;
    else std::cout << "wrote " << out_path << "\n";
  }
  return adm.admissible() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of Coxeter-case blocks: root systems, nilpotent\n"
               "orbit induction, and Brauer trees"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--data-dir", opt.data_directory,
                 "data directory (overrides COXBLOCK_DATA_DIR)");

  auto* verify = app.add_subcommand("verify-table1", "re-verify the bundled induced-orbit table");
  int max_rank = 8;
  verify->add_option("--max-rank", max_rank, "rank cap for parametric families")
      ->check(CLI::Range(2, 8));

  auto* lemma = app.add_subcommand("lemma32", "induced-orbit criterion for one diagram");
  std::string l_type, l_weights, l_subset;
  lemma->add_option("--type", l_type, "Cartan type, e.g. A3 or 2E6")->required();
  lemma->add_option("--weights", l_weights, "comma weights d(alpha_1..n)")->required();
  lemma->add_option("--subset", l_subset, "Levi nodes, 1-based, comma separated");

  auto* orbits = app.add_subcommand("orbits", "list or look up nilpotent orbits");
  std::string o_type, o_name, o_label, o_diagram;
  orbits->add_option("--type", o_type, "Cartan type")->required();
  orbits->add_option("--name", o_name, "orbit name (exceptional types)");
  orbits->add_option("--label", o_label, "partition label, e.g. [3,1] or [1];[3]");
  orbits->add_option("--diagram", o_diagram, "weights to identify");

  auto* coxeter = app.add_subcommand("coxeter", "Coxeter element data of a type");
  std::string c_type;
  coxeter->add_option("--type", c_type, "Cartan type")->required();

  auto* primes = app.add_subcommand("primes", "admissible primes for (type, q)");
  std::string p_type;
  Int p_q = 0, p_q2 = 0, p_bound = 100;
  primes->add_option("--type", p_type, "Cartan type")->required();
  primes->add_option("--q", p_q, "prime power q");
  primes->add_option("--q2", p_q2, "honest prime power q^2 (Suzuki/Ree)");
  primes->add_option("--bound", p_bound, "upper bound for ell");

  auto* tree = app.add_subcommand("tree", "Brauer tree of a bundled fixture");
  std::string t_type, t_emit = "dot", t_out;
  Int t_q = 0, t_q2 = 0, t_ell = 0;
  tree->add_option("--type", t_type, "fixture type (F4 or 2G2)")->required();
  tree->add_option("--q", t_q, "prime power q");
  tree->add_option("--q2", t_q2, "honest prime power q^2 (Suzuki/Ree)");
  tree->add_option("--ell", t_ell, "prime ell");
  tree->add_option("--emit", t_emit, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  tree->add_option("--out", t_out, "write the emitted tree to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify_table1(opt, max_rank);
    if (lemma->parsed()) return run_lemma32(opt, l_type, l_weights, l_subset);
    if (orbits->parsed()) return run_orbits(opt, o_type, o_name, o_label, o_diagram);
    if (coxeter->parsed()) return run_coxeter(opt, c_type);
    if (primes->parsed()) return run_primes(opt, p_type, p_q, p_q2, p_bound);
    if (tree->parsed()) return run_tree(opt, t_type, t_q, t_q2, t_ell, t_emit, t_out);
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what()
              << "\n(hint: point --data-dir or COXBLOCK_DATA_DIR at the bundled data/)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
