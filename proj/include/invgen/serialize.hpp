#ifndef INVGEN_SERIALIZE_HPP
#define INVGEN_SERIALIZE_HPP

#include <json.hpp>

#include "invgen/finite_group.hpp"
#include "invgen/freeness.hpp"
#include "invgen/invariant_plane.hpp"
#include "invgen/mat2.hpp"
#include "invgen/sl2_spectrum.hpp"
#include "invgen/tree/orbital.hpp"

namespace invgen {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "invgen/1";

// permutations and groups: cycle strings and {degree, generators}
Json perm_to_json(const Perm& p);
Json group_to_json(int degree, const std::vector<Perm>& generators);
std::vector<Perm> generators_from_json(const Json& doc, int& degree);
/// "(0 1);(0 1 2)" or JSON array of cycle strings.
std::vector<Perm> parse_perm_list(const std::string& text, int degree);

// rational 2x2 matrices: [[a, b], [c, d]] with "p/q" strings
Json mat2q_to_json(const Mat2q& m);
Mat2q mat2q_from_json(const Json& doc);
Json mat2d_to_json(const Mat2d& m);
Json mat2gq_to_json(const Mat2gq& m);
Json mat2cd_to_json(const Mat2cd& m);

Json certificate_to_json(const FreenessCertificate& cert, const std::string& tuple_id);
Json spectrum_to_json(const SpectrumReport& report);

// tree elements: {kind: "recipe"|"truncation", d, depth, data}
Json tree_aut_to_json(const tree::TreeAut& g);
tree::TreeAut tree_aut_from_json(const Json& doc);
Json orbital_to_json(const tree::OrbitalType& type);

}  // namespace invgen

#endif  // INVGEN_SERIALIZE_HPP
