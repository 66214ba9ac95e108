#pragma once
// JSON round-tripping for certificates, plus small text parsers shared by the
// command-line tool.  Serialized certificates carry everything needed to
// re-verify them without recomputing the reduction.

#include <string>

#include <json.hpp>

#include "spinmcg/boxcalc.hpp"
#include "spinmcg/lambda.hpp"
#include "spinmcg/rewriter.hpp"

namespace spinmcg {

// {"kind": "block_reduction"|"delta_reduction", "genus", "input",
//  "moves": [{"op": "boxplus"|"boxminus", "operand": [..]}], "output"}
nlohmann::json to_json(const ReductionCert& cert);
ReductionCert reduction_from_json(const nlohmann::json& j);

// {"kind": "square_transvection_factorization", "genus", "reduction", "core"}
nlohmann::json to_json(const SqtvFactorization& f);
SqtvFactorization sqtv_from_json(const nlohmann::json& j);

// {"kind": "lambda_reduction", "genus", "input",
//  "moves": [{"op": "square", "operand": [..]}], "output"}
nlohmann::json to_json(const LambdaCert& cert);
LambdaCert lambda_from_json(const nlohmann::json& j);

// {"kind": "orthogonal_factorization", "genus", "matrix": [[0/1 rows]],
//  "raw": [[..]], "factors": [[..]]}
nlohmann::json to_json(const OrthFactorization& f);
OrthFactorization orth_from_json(const nlohmann::json& j);

// {"kind": "orbit_witness", "genus", "vector", "word": ["X1", ..], "target"}
nlohmann::json to_json(const WitnessCert& cert);
WitnessCert witness_from_json(const nlohmann::json& j);

// {"kind": "square_conjugate_rewrite", "genus", "word": "C1 C2^-1",
//  "twist", "tokens": ["X1", "D2^-1", ..]}
nlohmann::json to_json(const RewriteCert& cert);
RewriteCert rewrite_from_json(const nlohmann::json& j);

// {"kind": "curve_classes", "genus", "c": [[..] x 2g+1],
//  "b_int": [[..] or null, x g-2]}.  Loading validates the table.
nlohmann::json to_json(const CurveClassTable& t);
CurveClassTable classes_from_json(const nlohmann::json& j);

// "X2", "Xs3^-1", "D5" -> token; throws std::invalid_argument otherwise.
GToken token_from_string(const std::string& s);

// Comma-separated coordinates: "5,-2,0,1" / "1,0,1,1".  Throw
// std::invalid_argument on malformed input or wrong length.
IntVec parse_int_vector(int g, const std::string& text);
Z2Vec parse_mod2_vector(int g, const std::string& text);
QuadForm parse_form(int g, const std::string& text);  // label coordinates

// Whitespace-separated 0/1 entries, 2g rows of 2g columns.
Z2Matrix parse_mod2_matrix(int g, const std::string& text);

std::string read_text_file(const std::string& path);  // std::runtime_error on I/O failure

}  // namespace spinmcg
