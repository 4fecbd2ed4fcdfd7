#pragma once

#include <string>

#include <json.hpp>

#include "invdmod/cohomo.hpp"
#include "invdmod/glred.hpp"
#include "invdmod/lieverify.hpp"
#include "invdmod/reductive.hpp"

namespace invdmod {

/// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Parse helpers raise MalformedInput with a JSON-pointer-style path.
Rational json_to_rational(const Json& j, const std::string& path);
RatMat json_to_ratmat(const Json& j, const std::string& path);
CartanType json_to_cartan_type(const Json& j, const std::string& path);
FiniteAbelianGroup json_to_group(const Json& j, const std::string& path);
SubgroupSpec json_to_subgroup_spec(const Json& j, const std::string& path);
SemisimpleGroup json_to_semisimple_group(const Json& j, const std::string& path);
RepClass json_to_rep_class(const Json& j, const std::string& path);
ConstantTorusConnection json_to_connection(const Json& j, const std::string& path);
LaurentPoly json_to_laurent(const Json& j, const std::string& path);
LaurentMatrix json_to_laurent_matrix(const Json& j, const std::string& path);
GlrConnectionSpec json_to_glr_spec(const Json& j, const std::string& path);
MonodromyClass json_to_monodromy_class(const Json& j, const std::string& path);
ReductiveProductGroup json_to_reductive_group(const Json& j, const std::string& path);
ReductiveClass json_to_reductive_class(const Json& j, const std::string& path);
LinearRep json_to_linear_rep(const Json& j, const std::string& path);

Json rational_to_json(const Rational& r);
Json ratmat_to_json(const RatMat& m);
Json cartan_type_to_json(const CartanType& t);
Json group_to_json(const FiniteAbelianGroup& g);
Json rep_class_to_json(const RepClass& v);
Json connection_to_json(const ConstantTorusConnection& c);
Json laurent_to_json(const LaurentPoly& p);
Json laurent_matrix_to_json(const LaurentMatrix& m);
Json monodromy_class_to_json(const MonodromyClass& m);
Json reductive_class_to_json(const ReductiveClass& c);

/// Parse a whole document; MalformedInput carries the parser's position.
Json parse_json_text(const std::string& text, const std::string& origin);
/// Load and parse a file.
Json load_json_file(const std::string& filename);

}  // namespace invdmod
