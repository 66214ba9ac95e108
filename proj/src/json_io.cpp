#include "spinmcg/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinmcg {

namespace {

using nlohmann::json;

json int_vec_json(const IntVec& v) { return json(v.c); }

IntVec int_vec_from(int g, const json& j) {
  return intvec(g, j.get<std::vector<Int>>());
}

json mod2_vec_json(const Z2Vec& v) { return json(coords(v)); }

Z2Vec mod2_vec_from(int g, const json& j) {
  return z2vec_from_coords(g, j.get<std::vector<int>>());
}

void require_kind(const json& j, const std::string& kind) {
  if (j.at("kind").get<std::string>() != kind) {
    throw std::invalid_argument("certificate kind '" +
                                j.at("kind").get<std::string>() +
                                "' does not match expected '" + kind + "'");
  }
}

int genus_of(const json& j) { return checked_genus(j.at("genus").get<int>()); }

}  // namespace

json to_json(const ReductionCert& cert) {
  json moves = json::array();
  for (const BoxMove& m : cert.moves) {
    moves.push_back({{"op", m.plus ? "boxplus" : "boxminus"},
                     {"operand", int_vec_json(m.operand)}});
  }
  return {{"kind", cert.kind},
          {"genus", cert.g},
          {"input", int_vec_json(cert.input)},
          {"moves", moves},
          {"output", int_vec_json(cert.output)}};
}

ReductionCert reduction_from_json(const json& j) {
  ReductionCert cert;
  cert.kind = j.at("kind").get<std::string>();
  if (cert.kind != "block_reduction" && cert.kind != "delta_reduction") {
    throw std::invalid_argument("unknown reduction kind '" + cert.kind + "'");
  }
  cert.g = genus_of(j);
  cert.input = int_vec_from(cert.g, j.at("input"));
  for (const json& m : j.at("moves")) {
    std::string op = m.at("op").get<std::string>();
    if (op != "boxplus" && op != "boxminus") {
      throw std::invalid_argument("unknown box-move op '" + op + "'");
    }
    cert.moves.push_back({op == "boxplus", int_vec_from(cert.g, m.at("operand"))});
  }
  cert.output = int_vec_from(cert.g, j.at("output"));
  return cert;
}

json to_json(const SqtvFactorization& f) {
  return {{"kind", "square_transvection_factorization"},
          {"genus", f.reduction.g},
          {"reduction", to_json(f.reduction)},
          {"core", int_vec_json(f.core)}};
}

SqtvFactorization sqtv_from_json(const json& j) {
  require_kind(j, "square_transvection_factorization");
  SqtvFactorization f;
  f.reduction = reduction_from_json(j.at("reduction"));
  if (genus_of(j) != f.reduction.g) {
    throw std::invalid_argument("factorization genus differs from reduction genus");
  }
  f.core = int_vec_from(f.reduction.g, j.at("core"));
  return f;
}

json to_json(const LambdaCert& cert) {
  json moves = json::array();
  for (const SquareMove& m : cert.moves) {
    moves.push_back({{"op", "square"}, {"operand", mod2_vec_json(m.operand)}});
  }
  return {{"kind", "lambda_reduction"},
          {"genus", cert.g},
          {"input", mod2_vec_json(cert.input)},
          {"moves", moves},
          {"output", mod2_vec_json(cert.output)}};
}

LambdaCert lambda_from_json(const json& j) {
  require_kind(j, "lambda_reduction");
  LambdaCert cert;
  cert.g = genus_of(j);
  cert.input = mod2_vec_from(cert.g, j.at("input"));
  for (const json& m : j.at("moves")) {
    if (m.at("op").get<std::string>() != "square") {
      throw std::invalid_argument("lambda moves must have op 'square'");
    }
    cert.moves.push_back({mod2_vec_from(cert.g, m.at("operand"))});
  }
  cert.output = mod2_vec_from(cert.g, j.at("output"));
  return cert;
}

namespace {

json mod2_matrix_json(const Z2Matrix& m) { return json(matrix_rows(m)); }

Z2Matrix mod2_matrix_from(int g, const json& j) {
  return matrix_from_rows(g, j.get<std::vector<std::vector<int>>>());
}

json mod2_vec_list_json(const std::vector<Z2Vec>& vs) {
  json out = json::array();
  for (const Z2Vec& v : vs) out.push_back(mod2_vec_json(v));
  return out;
}

std::vector<Z2Vec> mod2_vec_list_from(int g, const json& j) {
  std::vector<Z2Vec> out;
  for (const json& v : j) out.push_back(mod2_vec_from(g, v));
  return out;
}

}  // namespace

json to_json(const OrthFactorization& f) {
  return {{"kind", "orthogonal_factorization"},
          {"genus", f.g},
          {"matrix", mod2_matrix_json(f.input)},
          {"raw", mod2_vec_list_json(f.raw)},
          {"factors", mod2_vec_list_json(f.factors)}};
}

OrthFactorization orth_from_json(const json& j) {
  require_kind(j, "orthogonal_factorization");
  OrthFactorization f;
  f.g = genus_of(j);
  f.input = mod2_matrix_from(f.g, j.at("matrix"));
  f.raw = mod2_vec_list_from(f.g, j.at("raw"));
  f.factors = mod2_vec_list_from(f.g, j.at("factors"));
  return f;
}

json to_json(const WitnessCert& cert) {
  return {{"kind", "orbit_witness"},
          {"genus", cert.g},
          {"vector", mod2_vec_json(cert.vector)},
          {"word", json(cert.word)},
          {"target", mod2_vec_json(cert.target)}};
}

WitnessCert witness_from_json(const json& j) {
  require_kind(j, "orbit_witness");
  WitnessCert cert;
  cert.g = genus_of(j);
  cert.vector = mod2_vec_from(cert.g, j.at("vector"));
  cert.word = j.at("word").get<std::vector<std::string>>();
  cert.target = mod2_vec_from(cert.g, j.at("target"));
  return cert;
}

json to_json(const RewriteCert& cert) {
  json tokens = json::array();
  for (const GToken& t : cert.tokens) tokens.push_back(token_to_string(t));
  return {{"kind", "square_conjugate_rewrite"},
          {"genus", cert.g},
          {"word", format_word(cert.word)},
          {"twist", cert.twist},
          {"tokens", tokens}};
}

RewriteCert rewrite_from_json(const json& j) {
  require_kind(j, "square_conjugate_rewrite");
  RewriteCert cert;
  cert.g = genus_of(j);
  cert.word = parse_word(cert.g, j.at("word").get<std::string>());
  cert.twist = j.at("twist").get<int>();
  for (const json& t : j.at("tokens")) {
    cert.tokens.push_back(token_from_string(t.get<std::string>()));
  }
  return cert;
}

json to_json(const CurveClassTable& t) {
  json c = json::array();
  for (const IntVec& v : t.c) c.push_back(int_vec_json(v));
  json b = json::array();
  for (const auto& lift : t.b_int) {
    b.push_back(lift ? int_vec_json(*lift) : json(nullptr));
  }
  return {{"kind", "curve_classes"}, {"genus", t.g}, {"c", c}, {"b_int", b}};
}

CurveClassTable classes_from_json(const json& j) {
  require_kind(j, "curve_classes");
  CurveClassTable t;
  t.g = genus_of(j);
  for (const json& v : j.at("c")) t.c.push_back(int_vec_from(t.g, v));
  int b_count = t.g >= 3 ? t.g - 2 : 0;
  json b = j.contains("b_int") ? j.at("b_int") : json::array();
  if (static_cast<int>(b.size()) > b_count) {
    throw std::invalid_argument("curve table has too many B lifts");
  }
  for (int slot = 0; slot < b_count; ++slot) {
    if (slot < static_cast<int>(b.size()) && !b[slot].is_null()) {
      t.b_int.emplace_back(int_vec_from(t.g, b[slot]));
    } else {
      t.b_int.emplace_back(std::nullopt);
    }
    int jj = slot + 2;  // B_{2j} with j = slot + 2
    t.b_mod2.push_back(Z2Vec{t.g, std::uint32_t{1} << (2 * (jj - 1))});
  }
  validate(t);
  return t;
}

GToken token_from_string(const std::string& s) {
  auto fail = [&]() {
    throw std::invalid_argument("bad token '" + s + "': expected X/Xs/D with "
                                "an index and optional ^-1");
  };
  std::size_t p = 0;
  while (p < s.size() && std::isalpha(static_cast<unsigned char>(s[p]))) ++p;
  std::string name = s.substr(0, p);
  GToken t;
  if (name == "X") t.kind = TokenKind::X;
  else if (name == "Xs") t.kind = TokenKind::Xs;
  else if (name == "D") t.kind = TokenKind::D;
  else fail();
  std::size_t d = p;
  while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
  if (d == p) fail();
  t.index = std::stoi(s.substr(p, d - p));
  std::string rest = s.substr(d);
  if (rest.empty()) t.sign = 1;
  else if (rest == "^-1") t.sign = -1;
  else fail();
  return t;
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

template <typename T>
std::vector<T> parse_entries(const std::string& text, const char* what) {
  std::vector<T> out;
  for (const std::string& part : split_commas(text)) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument("trailing junk");
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + what + " entry '" +
                                  part + "' in '" + text + "'");
    }
  }
  return out;
}

}  // namespace

IntVec parse_int_vector(int g, const std::string& text) {
  return intvec(g, parse_entries<Int>(text, "integer vector"));
}

Z2Vec parse_mod2_vector(int g, const std::string& text) {
  return z2vec_from_coords(g, parse_entries<int>(text, "mod-2 vector"));
}

QuadForm parse_form(int g, const std::string& text) {
  return form_from_label(g, parse_entries<int>(text, "form label"));
}

Z2Matrix parse_mod2_matrix(int g, const std::string& text) {
  std::istringstream is(text);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) {
      throw std::invalid_argument("bad matrix row '" + line +
                                  "': entries must be 0/1 integers");
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return matrix_from_rows(g, rows);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace spinmcg
