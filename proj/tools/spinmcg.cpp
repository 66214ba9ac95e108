// Command-line front end.  Exit codes: 0 = success / verification passed,
// 1 = a verification or membership check failed, 2 = bad input.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinmcg/group_enum.hpp"
#include "spinmcg/json_io.hpp"
#include "spinmcg/schreier.hpp"

using nlohmann::json;
using namespace spinmcg;

namespace {

struct Options {
  int g = 2;
  std::string word;
  std::string vector_text;
  std::string form_text;
  std::string matrix_path;
  std::string classes_path;
  std::string check_path;
  std::string format;
  int twist = 1;
  int arf_filter = -1;
};

CurveClassTable table_for(const Options& opt, int g) {
  if (opt.classes_path.empty()) return default_curve_classes(g);
  CurveClassTable t = classes_from_json(json::parse(read_text_file(opt.classes_path)));
  if (t.g != g) {
    throw std::invalid_argument("curve-class table is genus " +
                                std::to_string(t.g) + ", expected " +
                                std::to_string(g));
  }
  return t;
}

json load_check(const Options& opt) {
  return json::parse(read_text_file(opt.check_path));
}

int report(bool ok, const std::string& what) {
  std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
  return ok ? 0 : 1;
}

int print_cert(const json& j, const Options& opt, const std::string& summary) {
  if (opt.format == "text") {
    std::cout << summary << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_eval(const Options& opt) {
  CurveClassTable t = table_for(opt, opt.g);
  GenWord w = parse_word(opt.g, opt.word);
  IntMatrix m = eval_int(w, t);
  if (opt.format == "text") {
    std::cout << to_string(m);
  } else {
    json j{{"genus", opt.g}, {"word", format_word(w)}, {"matrix", matrix_rows(m)}};
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_spin_check(const Options& opt) {
  CurveClassTable t = table_for(opt, opt.g);
  GenWord w = parse_word(opt.g, opt.word);
  bool member = spin_check(w, t);
  return report(member, member ? "word preserves the reference form mod 2"
                               : "word does not preserve the reference form mod 2");
}

int run_arf(const Options& opt) {
  QuadForm q = parse_form(opt.g, opt.form_text);
  std::cout << arf(q) << "\n";
  return 0;
}

int run_forms(const Options& opt) {
  auto forms = enumerate_forms(opt.g, opt.arf_filter);
  if (opt.format == "text") {
    for (const QuadForm& q : forms) {
      std::cout << to_string(q) << "  arf=" << arf(q) << "\n";
    }
  } else {
    json labels = json::array();
    for (const QuadForm& q : forms) labels.push_back(form_label(q));
    json j{{"genus", opt.g},
           {"arf", opt.arf_filter},
           {"count", forms.size()},
           {"labels", labels}};
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_rewrite(const Options& opt) {
  if (!opt.check_path.empty()) {
    RewriteCert cert = rewrite_from_json(load_check(opt));
    std::string why;
    bool ok = check_rewrite(cert, default_curve_classes(cert.g), &why);
    return report(ok, ok ? "rewrite certificate verified" : why);
  }
  CurveClassTable t = table_for(opt, opt.g);
  RewriteCert cert = rewrite_square_conjugate(opt.g, parse_word(opt.g, opt.word),
                                              opt.twist);
  std::string why;
  if (!check_rewrite(cert, t, &why)) {
    std::cerr << "internal verification failed: " << why << "\n";
    return 1;
  }
  std::string tokens;
  for (const GToken& tok : cert.tokens) {
    if (!tokens.empty()) tokens += ' ';
    tokens += token_to_string(tok);
  }
  return print_cert(to_json(cert), opt,
                    std::to_string(cert.tokens.size()) + " tokens: " + tokens);
}

int run_reduce(const Options& opt, bool to_delta) {
  const char* kind = to_delta ? "delta_reduction" : "block_reduction";
  if (!opt.check_path.empty()) {
    ReductionCert cert = reduction_from_json(load_check(opt));
    if (cert.kind != kind) {
      throw std::invalid_argument("certificate kind '" + cert.kind +
                                  "' does not match this subcommand");
    }
    std::string why;
    bool ok = verify_reduction(cert, &why);
    return report(ok, ok ? "reduction certificate verified" : why);
  }
  IntVec a = parse_int_vector(opt.g, opt.vector_text);
  ReductionCert cert = to_delta ? reduce_to_delta(a) : reduce_blocks(a);
  std::string why;
  if (!verify_reduction(cert, &why)) {
    std::cerr << "internal verification failed: " << why << "\n";
    return 1;
  }
  return print_cert(to_json(cert), opt,
                    to_string(cert.input) + " -> " + to_string(cert.output) +
                        " in " + std::to_string(cert.moves.size()) + " moves");
}

int run_factor_sqtv(const Options& opt) {
  if (!opt.check_path.empty()) {
    SqtvFactorization f = sqtv_from_json(load_check(opt));
    std::string why;
    bool ok = verify_factorization(f, &why);
    return report(ok, ok ? "factorization certificate verified" : why);
  }
  IntVec a = parse_int_vector(opt.g, opt.vector_text);
  SqtvFactorization f = factor_square_transvection(a);
  std::string why;
  if (!verify_factorization(f, &why)) {
    std::cerr << "internal verification failed: " << why << "\n";
    return 1;
  }
  return print_cert(to_json(f), opt,
                    "core " + to_string(f.core) + ", conjugator from " +
                        std::to_string(f.reduction.moves.size()) + " moves");
}

int run_lambda_reduce(const Options& opt) {
  if (!opt.check_path.empty()) {
    LambdaCert cert = lambda_from_json(load_check(opt));
    std::string why;
    bool ok = verify_lambda_cert(cert, &why);
    return report(ok, ok ? "reduction certificate verified" : why);
  }
  Z2Vec z = parse_mod2_vector(opt.g, opt.vector_text);
  LambdaCert cert = lambda_reduce(z);
  std::string why;
  if (!verify_lambda_cert(cert, &why)) {
    std::cerr << "internal verification failed: " << why << "\n";
    return 1;
  }
  return print_cert(to_json(cert), opt,
                    to_string(cert.input) + " -> " + to_string(cert.output) +
                        " in " + std::to_string(cert.moves.size()) + " moves");
}

int run_factor_orth(const Options& opt) {
  if (!opt.check_path.empty()) {
    OrthFactorization f = orth_from_json(load_check(opt));
    std::string why;
    bool ok = verify_orth_factorization(f, &why);
    return report(ok, ok ? "factorization certificate verified" : why);
  }
  Z2Matrix m = parse_mod2_matrix(opt.g, read_text_file(opt.matrix_path));
  OrthFactorization f = factor_orthogonal(m);
  std::string why;
  if (!verify_orth_factorization(f, &why)) {
    std::cerr << "internal verification failed: " << why << "\n";
    return 1;
  }
  return print_cert(to_json(f), opt,
                    std::to_string(f.factors.size()) +
                        " standard-generator factors");
}

int run_witness(const Options& opt) {
  if (!opt.check_path.empty()) {
    WitnessCert cert = witness_from_json(load_check(opt));
    std::string why;
    bool ok = verify_witness(cert, &why);
    return report(ok, ok ? "witness certificate verified" : why);
  }
  Z2Vec v = parse_mod2_vector(opt.g, opt.vector_text);
  WitnessCert cert = orbit_witness(opt.g, v);
  std::string why;
  if (!verify_witness(cert, &why)) {
    std::cerr << "internal verification failed: " << why << "\n";
    return 1;
  }
  std::string word;
  for (const std::string& name : cert.word) {
    if (!word.empty()) word += ' ';
    word += name;
  }
  return print_cert(to_json(cert), opt,
                    to_string(cert.vector) + " -> " + to_string(cert.target) +
                        " via [" + word + "]");
}

int run_orbit_graph(const Options& opt) {
  CurveClassTable t = table_for(opt, 2);
  OrbitGraph gr = orbit_graph(t);
  // This subcommand's native output is DOT; JSON on request.
  if (opt.format == "json") {
    json vertices = json::array();
    for (const QuadForm& q : gr.vertices) vertices.push_back(form_label(q));
    json edges = json::array();
    for (const OrbitEdge& e : gr.edges) {
      edges.push_back({{"from", e.from}, {"to", e.to}, {"letter", e.letter}});
    }
    json j{{"vertices", vertices}, {"edges", edges}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << orbit_graph_dot(gr);
  }
  return 0;
}

int run_schreier_table(const Options& opt) {
  CurveClassTable t = table_for(opt, 2);
  SchreierTable table = schreier_table(t);
  if (opt.format == "text") {
    for (const TableEntry& e : table.entries) {
      std::string s = format_word(table.transversal[e.row]);
      std::cout << "row=" << (s.empty() ? "1" : s) << " letter=C" << e.letter
                << " raw=[" << format_word(e.raw) << "] name=" << e.name << "\n";
    }
  } else {
    json transversal = json::array();
    for (const GenWord& s : table.transversal) transversal.push_back(format_word(s));
    json entries = json::array();
    for (const TableEntry& e : table.entries) {
      entries.push_back({{"row", e.row},
                         {"letter", e.letter},
                         {"raw", format_word(e.raw)},
                         {"name", e.name}});
    }
    json j{{"transversal", transversal}, {"entries", entries}};
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_verify_table(const Options& opt) {
  CurveClassTable t = table_for(opt, 2);
  TableReport rep = verify_table(t);
  for (const std::string& line : rep.lines) std::cout << line << "\n";
  return report(rep.ok, "induced generating table");
}

int run_group_orders(const Options& opt) {
  json j{{"genus", opt.g}, {"sp_order_formula", sp_order_formula(opt.g)}};
  std::optional<SpClosureStats> stats;
  std::uint64_t orth = 0;
  if (opt.g <= 3) {
    stats = sp_closure_stats(opt.g);
    orth = orthogonal_order_bfs(opt.g);
    j["sp_order_closure"] = stats->sp_order;
    j["orthogonal_order_stabilizer"] = stats->stabilizer_order;
    j["orthogonal_transvection_closure"] = orth;
  }
  if (opt.format == "text") {
    std::cout << "sp order (formula): " << sp_order_formula(opt.g) << "\n";
    if (stats) {
      std::cout << "sp order (closure): " << stats->sp_order << "\n";
      std::cout << "orthogonal order (stabilizer): " << stats->stabilizer_order
                << "\n";
      std::cout << "orthogonal transvection closure: " << orth;
      if (orth != stats->stabilizer_order) {
        std::cout << "  (index " << stats->stabilizer_order / orth
                  << " in the stabilizer: dimension-4 exception)";
      }
      std::cout << "\n";
    }
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_braid_check(const Options& opt) {
  CurveClassTable t = table_for(opt, opt.g);
  BraidReport rep = braid_check(t);
  for (const std::string& line : rep.lines) std::cout << line << "\n";
  return report(rep.ok, "chain relations");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homology computations for hyperelliptic mapping classes "
               "and the mod-2 spin stabilizer"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_g = true) {
    if (with_g) sub->add_option("--g", opt.g, "genus (default 2)");
    sub->add_option("--format", opt.format, "output format");
    sub->add_option("--classes", opt.classes_path,
                    "curve-class table JSON overriding the canonical one");
    return sub;
  };

  CLI::App* eval = add_common(app.add_subcommand(
      "eval", "evaluate a word to its integer homology matrix"));
  eval->add_option("--word", opt.word, "word in C/B letters and named elements")
      ->required();

  CLI::App* spin = add_common(app.add_subcommand(
      "spin-check", "test whether a word preserves the reference form mod 2"));
  spin->add_option("--word", opt.word)->required();

  CLI::App* arf_cmd = add_common(app.add_subcommand(
      "arf", "Arf invariant of a quadratic form given by its label"));
  arf_cmd->add_option("--form", opt.form_text, "label, e.g. 0,1,0,1")->required();

  CLI::App* forms = add_common(
      app.add_subcommand("forms", "enumerate quadratic-form labels"));
  forms->add_option("--arf", opt.arf_filter, "restrict to one Arf value");

  CLI::App* rewrite = add_common(app.add_subcommand(
      "rewrite", "rewrite W C_t^2 W^-1 in the X/Xs/D tokens"));
  rewrite->add_option("--word", opt.word, "conjugating word W");
  rewrite->add_option("--twist", opt.twist, "chain index t");
  rewrite->add_option("--check", opt.check_path, "verify a certificate file");

  CLI::App* rblocks = add_common(app.add_subcommand(
      "reduce-blocks", "per-block Euclid on a primitive vector"));
  rblocks->add_option("--vector", opt.vector_text, "integer coordinates");
  rblocks->add_option("--check", opt.check_path, "verify a certificate file");

  CLI::App* rdelta = add_common(app.add_subcommand(
      "reduce-delta", "reduce a primitive vector to a 0/1 delta vector"));
  rdelta->add_option("--vector", opt.vector_text, "integer coordinates");
  rdelta->add_option("--check", opt.check_path, "verify a certificate file");

  CLI::App* sqtv = add_common(app.add_subcommand(
      "factor-sqtv", "conjugate a squared transvection to a delta-vector one"));
  sqtv->add_option("--vector", opt.vector_text, "integer coordinates");
  sqtv->add_option("--check", opt.check_path, "verify a certificate file");

  CLI::App* lred = add_common(app.add_subcommand(
      "lambda-reduce", "reduce a q0=1 mod-2 vector to a standard generator"));
  lred->add_option("--vector", opt.vector_text, "mod-2 coordinates");
  lred->add_option("--check", opt.check_path, "verify a certificate file");

  CLI::App* forth = add_common(app.add_subcommand(
      "factor-orth", "factor a form-preserving mod-2 matrix into transvections"));
  forth->add_option("--matrix", opt.matrix_path, "text file of 0/1 rows");
  forth->add_option("--check", opt.check_path, "verify a certificate file");

  CLI::App* wit = add_common(app.add_subcommand(
      "witness", "generator word moving a mod-2 class to a standard target"));
  wit->add_option("--vector", opt.vector_text, "mod-2 coordinates");
  wit->add_option("--check", opt.check_path, "verify a certificate file");

  CLI::App* ograph = add_common(app.add_subcommand(
      "orbit-graph", "chain-letter action on the ten even forms (genus 2)"), false);

  CLI::App* stable = add_common(app.add_subcommand(
      "schreier-table", "transversal-induced stabilizer generators (genus 2)"), false);

  CLI::App* vtable = add_common(app.add_subcommand(
      "verify-table1", "verify the induced generating table (genus 2)"), false);

  CLI::App* orders = add_common(app.add_subcommand(
      "group-orders", "mod-2 symplectic and orthogonal group orders"));

  CLI::App* braid = add_common(app.add_subcommand(
      "braid-check", "verify the chain relations on homology"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return run_eval(opt);
    if (spin->parsed()) return run_spin_check(opt);
    if (arf_cmd->parsed()) return run_arf(opt);
    if (forms->parsed()) return run_forms(opt);
    if (rewrite->parsed()) return run_rewrite(opt);
    if (rblocks->parsed()) return run_reduce(opt, false);
    if (rdelta->parsed()) return run_reduce(opt, true);
    if (sqtv->parsed()) return run_factor_sqtv(opt);
    if (lred->parsed()) return run_lambda_reduce(opt);
    if (forth->parsed()) return run_factor_orth(opt);
    if (wit->parsed()) return run_witness(opt);
    if (ograph->parsed()) return run_orbit_graph(opt);
    if (stable->parsed()) return run_schreier_table(opt);
    if (vtable->parsed()) return run_verify_table(opt);
    if (orders->parsed()) return run_group_orders(opt);
    if (braid->parsed()) return run_braid_check(opt);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
