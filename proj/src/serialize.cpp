#include "invgen/serialize.hpp"

#include <sstream>

#include "invgen/errors.hpp"

namespace invgen {

Json perm_to_json(const Perm& p) { return p.to_cycle_string(); }

Json group_to_json(int degree, const std::vector<Perm>& generators) {
  Json doc;
  doc["schema"] = kSchemaTag;
  doc["degree"] = degree;
  Json gens = Json::array();
  for (const Perm& g : generators) gens.push_back(g.to_cycle_string());
  doc["generators"] = std::move(gens);
  return doc;
}

std::vector<Perm> generators_from_json(const Json& doc, int& degree) {
  if (!doc.contains("degree") || !doc.contains("generators"))
    throw Error(Errc::ParseError, "group document needs degree and generators");
  degree = doc["degree"].get<int>();
  std::vector<Perm> generators;
  for (const auto& item : doc["generators"])
    generators.push_back(Perm::from_cycle_string(item.get<std::string>(), degree));
  return generators;
}

std::vector<Perm> parse_perm_list(const std::string& text, int degree) {
  std::vector<Perm> perms;
  if (!text.empty() && text.front() == '[') {
    Json arr = Json::parse(text);
    for (const auto& item : arr)
      perms.push_back(Perm::from_cycle_string(item.get<std::string>(), degree));
    return perms;
  }
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ';'))
    if (!piece.empty()) perms.push_back(Perm::from_cycle_string(piece, degree));
  return perms;
}

namespace {

Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  throw Error(Errc::ParseError, "rational entries must be integers or \"p/q\" strings");
}

Json rational_to_json(const Rational& q) { return q.get_str(); }

}  // namespace

Json mat2q_to_json(const Mat2q& m) {
  return Json::array({Json::array({rational_to_json(m(0, 0)), rational_to_json(m(0, 1))}),
                      Json::array({rational_to_json(m(1, 0)), rational_to_json(m(1, 1))})});
}

Mat2q mat2q_from_json(const Json& doc) {
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_array() || doc[0].size() != 2 ||
      !doc[1].is_array() || doc[1].size() != 2)
    throw Error(Errc::ParseError, "matrix document must be [[a,b],[c,d]]");
  return mat2<Rational>(rational_from_json(doc[0][0]), rational_from_json(doc[0][1]),
                        rational_from_json(doc[1][0]), rational_from_json(doc[1][1]));
}

Json mat2d_to_json(const Mat2d& m) {
  return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
}

Json mat2gq_to_json(const Mat2gq& m) {
  auto entry = [](const GaussianRational& z) {
    return Json{{"re", z.re.get_str()}, {"im", z.im.get_str()}};
  };
  return Json::array({Json::array({entry(m(0, 0)), entry(m(0, 1))}),
                      Json::array({entry(m(1, 0)), entry(m(1, 1))})});
}

Json mat2cd_to_json(const Mat2cd& m) {
  auto entry = [](const std::complex<double>& z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
  };
  return Json::array({Json::array({entry(m(0, 0)), entry(m(0, 1))}),
                      Json::array({entry(m(1, 0)), entry(m(1, 1))})});
}

Json certificate_to_json(const FreenessCertificate& cert, const std::string& tuple_id) {
  Json doc;
  doc["schema"] = kSchemaTag;
  doc["tuple_id"] = tuple_id;
  doc["L"] = cert.length_bound;
  doc["status"] = cert.free_up_to ? "free_up_to" : "relation";
  if (cert.relation) doc["relation"] = cert.relation->to_string();
  Json orders = Json::array();
  for (long o : cert.spec.orders) orders.push_back(o);
  doc["orders"] = std::move(orders);
  doc["words_checked"] = cert.words_checked;
  return doc;
}

Json spectrum_to_json(const SpectrumReport& report) {
  Json doc;
  doc["schema"] = kSchemaTag;
  doc["real"] = report.real_values;
  auto complex_list = [](const std::vector<std::complex<double>>& values) {
    Json arr = Json::array();
    for (const auto& z : values) arr.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
    return arr;
  };
  doc["unit"] = complex_list(report.unit_values);
  doc["other"] = complex_list(report.other_values);
  doc["words_evaluated"] = report.words_evaluated;
  return doc;
}

namespace {

using tree::Address;
using tree::NodeKind;
using tree::TreeAut;

Json node_to_json(const TreeAut& g);

Json recipe_body(const TreeAut& g) {
  switch (g.kind()) {
    case NodeKind::Identity:
      return Json{{"type", "identity"}};
    case NodeKind::EdgeFlip: {
      const auto& node = static_cast<const tree::FlipNode&>(g.node());
      return Json{{"type", "edge_flip"}, {"color", node.flip_color}};
    }
    case NodeKind::Translation:
      return Json{{"type", "translation"}};
    case NodeKind::Odometer:
      return Json{{"type", "odometer"}};
    case NodeKind::Portrait: {
      const auto& node = static_cast<const tree::PortraitNode&>(g.node());
      Json entries = Json::object();
      // deterministic order: sort the keys
      std::vector<std::string> keys;
      for (const auto& [key, value] : node.entries) keys.push_back(key);
      std::sort(keys.begin(), keys.end());
      for (const auto& key : keys) entries[key] = node.entries.at(key);
      return Json{{"type", "portrait"}, {"root", node.root_perm}, {"entries", entries}};
    }
    case NodeKind::Composite: {
      const auto& node = static_cast<const tree::CompositeNode&>(g.node());
      return Json{{"type", "compose"},
                  {"outer", node_to_json(node.outer)},
                  {"inner", node_to_json(node.inner)}};
    }
    case NodeKind::Truncation:
      throw Error(Errc::InvalidArgument, "truncations serialize at the top level");
  }
  throw Error(Errc::InvalidArgument, "unknown node kind");
}

Json node_to_json(const TreeAut& g) {
  Json body = recipe_body(g);
  if (g.inverted_view()) return Json{{"type", "inverse"}, {"inner", std::move(body)}};
  return body;
}

TreeAut node_from_json(const Json& doc, int d) {
  std::string type = doc.at("type").get<std::string>();
  if (type == "identity") return TreeAut::identity(d);
  if (type == "edge_flip") return TreeAut::edge_flip(d, doc.at("color").get<int>());
  if (type == "translation") return TreeAut::axis_translation(d);
  if (type == "odometer") return TreeAut::odometer(d);
  if (type == "inverse") return node_from_json(doc.at("inner"), d).inverse();
  if (type == "compose")
    return compose(node_from_json(doc.at("outer"), d),
                   node_from_json(doc.at("inner"), d));
  if (type == "portrait") {
    std::vector<int> root = doc.at("root").get<std::vector<int>>();
    std::map<Address, std::vector<int>> entries;
    for (const auto& [key, value] : doc.at("entries").items())
      entries.emplace(Address::parse(key, d), value.get<std::vector<int>>());
    return TreeAut::portrait(d, std::move(root), std::move(entries));
  }
  throw Error(Errc::ParseError, "unknown recipe node type: " + type);
}

}  // namespace

Json tree_aut_to_json(const tree::TreeAut& g) {
  Json doc;
  doc["schema"] = kSchemaTag;
  if (g.kind() == NodeKind::Truncation && !g.inverted_view()) {
    const auto& node = static_cast<const tree::TruncationNode&>(g.node());
    doc["kind"] = "truncation";
    doc["d"] = g.valence();
    doc["depth"] = node.depth;
    std::vector<std::string> rows;
    for (const auto& [from, to] : node.fwd_map)
      rows.push_back(from.to_string() + "→" + to.to_string());
    std::sort(rows.begin(), rows.end());
    doc["data"] = rows;
    return doc;
  }
  doc["kind"] = "recipe";
  doc["d"] = g.valence();
  int depth = g.forward_depth();
  if (depth >= tree::kUnboundedDepth) doc["depth"] = nullptr;
  else doc["depth"] = depth;
  doc["data"] = node_to_json(g);
  return doc;
}

tree::TreeAut tree_aut_from_json(const Json& doc) {
  int d = doc.at("d").get<int>();
  std::string kind = doc.at("kind").get<std::string>();
  if (kind == "recipe") return node_from_json(doc.at("data"), d);
  if (kind == "truncation") {
    int depth = doc.at("depth").get<int>();
    std::vector<std::pair<Address, Address>> pairs;
    for (const auto& row : doc.at("data")) {
      std::string text = row.get<std::string>();
      std::size_t arrow = text.find("→");
      std::size_t arrow_len = 3;  // UTF-8 length of the arrow
      if (arrow == std::string::npos) {
        arrow = text.find("->");
        arrow_len = 2;
      }
      if (arrow == std::string::npos)
        throw Error(Errc::ParseError, "truncation row needs an arrow: " + text);
      pairs.emplace_back(Address::parse(text.substr(0, arrow), d),
                         Address::parse(text.substr(arrow + arrow_len), d));
    }
    return TreeAut::truncation(d, depth, pairs);
  }
  throw Error(Errc::ParseError, "unknown element kind: " + kind);
}

Json orbital_to_json(const tree::OrbitalType& type) {
  Json doc;
  doc["schema"] = kSchemaTag;
  doc["rooted_at"] = type.rooted_at.to_string();
  doc["radius"] = type.radius;
  // nested marked tree
  const int n = static_cast<int>(type.nodes.size());
  std::vector<std::vector<int>> children(n);
  for (int i = 0; i < n; ++i)
    if (type.nodes[i].parent >= 0) children[type.nodes[i].parent].push_back(i);
  auto rec = [&](auto&& self, int at) -> Json {
    Json node;
    node["mark"] = type.nodes[at].mark;
    if (type.nodes[at].lower_bound_only) node["lower_bound_only"] = true;
    node["representative"] = type.nodes[at].representative.to_string();
    Json kids = Json::array();
    for (int c : children[at]) kids.push_back(self(self, c));
    if (!kids.empty()) node["children"] = std::move(kids);
    return node;
  };
  doc["quotient"] = rec(rec, 0);
  doc["signature"] = orbital_signature(type);
  return doc;
}

}  // namespace invgen
