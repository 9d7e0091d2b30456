#include "invgen/cli_run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "invgen/acceptance_suite.hpp"
#include "invgen/borel.hpp"
#include "invgen/extend_free.hpp"
#include "invgen/invariable.hpp"
#include "invgen/invariant_plane.hpp"
#include "invgen/monomial.hpp"
#include "invgen/serialize.hpp"
#include "invgen/sl2_classify.hpp"
#include "invgen/sl2_lie.hpp"
#include "invgen/tree/generation.hpp"

namespace invgen::cli {

namespace {

using tree::Address;
using tree::TreeAut;

Json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
    return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw Error(Errc::ParseError, "cannot open input file: " + arg);
  Json doc;
  in >> doc;
  return doc;
}

FiniteGroup load_group(const std::string& arg) {
  int degree = 0;
  auto generators = generators_from_json(read_json_arg(arg), degree);
  return FiniteGroup::closure(std::move(generators), degree,
                              Budget::from_env().closure_cap);
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ','))
    if (!piece.empty()) out.push_back(std::stol(piece));
  return out;
}

std::vector<std::vector<int>> parse_partition(const std::string& text) {
  std::vector<std::vector<int>> partition;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{') throw Error(Errc::ParseError, "partition blocks use {..}");
    std::size_t close = text.find('}', i);
    if (close == std::string::npos)
      throw Error(Errc::ParseError, "unterminated partition block");
    std::vector<int> block;
    for (long v : parse_long_list(text.substr(i + 1, close - i - 1)))
      block.push_back(static_cast<int>(v));
    partition.push_back(std::move(block));
    i = close + 1;
  }
  return partition;
}

/// Element inputs: inline/recipe JSON, a file path, or a canned name:
/// identity | odometer | translation | flip:C | type:N:{..}{..}[:WITNESS]
TreeAut load_tree_element(const std::string& arg, int d) {
  if (arg == "identity") return TreeAut::identity(d);
  if (arg == "odometer") return TreeAut::odometer(d);
  if (arg == "translation") return TreeAut::axis_translation(d);
  if (arg.rfind("flip:", 0) == 0)
    return TreeAut::edge_flip(d, std::stoi(arg.substr(5)));
  if (arg.rfind("type:", 0) == 0) {
    std::string rest = arg.substr(5);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::ParseError, "type spec is type:N:{..}{..}[:WITNESS]");
    int level = std::stoi(rest.substr(0, colon));
    std::string tail = rest.substr(colon + 1);
    std::optional<Address> witness;
    std::size_t second = tail.find(':');
    if (second != std::string::npos) {
      witness = Address::parse(tail.substr(second + 1), d);
      tail = tail.substr(0, second);
    }
    return tree::make_type_nP(d, Address(), {level, parse_partition(tail)}, witness);
  }
  return tree_aut_from_json(read_json_arg(arg));
}

const char* outcome_name(tree::ConjugacyOutcome outcome) {
  switch (outcome) {
    case tree::ConjugacyOutcome::ConjugateUpTo: return "conjugate_up_to";
    case tree::ConjugacyOutcome::NotConjugate: return "not_conjugate";
    case tree::ConjugacyOutcome::Undetermined: return "undetermined";
  }
  return "undetermined";
}

const char* class_name(tree::TreeClassKind kind) {
  switch (kind) {
    case tree::TreeClassKind::Elliptic: return "elliptic";
    case tree::TreeClassKind::Inversion: return "inversion";
    case tree::TreeClassKind::Hyperbolic: return "hyperbolic";
    case tree::TreeClassKind::Undetermined: return "undetermined";
  }
  return "undetermined";
}

struct Output {
  Json doc;
  std::string text;
  bool json_mode = true;

  void emit(std::ostream& out) const {
    if (json_mode) out << doc.dump(2) << "\n";
    else out << text;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariable-generation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json|text")->capture_default_str();

  Output output;
  output.doc["schema"] = kSchemaTag;
  std::ostringstream text;

  // ------------------------------------------------------------------ perm
  auto* perm_cmd = app.add_subcommand("perm", "finite permutation groups");
  perm_cmd->require_subcommand(1);

  std::string group_arg, set_arg, subgroup_arg, action_arg = "natural";
  auto* ig = perm_cmd->add_subcommand("ig-check", "invariable generation check");
  ig->add_option("--group", group_arg, "group JSON (inline or path)")->required();
  ig->add_option("--set", set_arg, "tuple, e.g. \"(0 1);(0 1 2)\"")->required();
  ig->callback([&] {
    FiniteGroup group = load_group(group_arg);
    auto tuple = parse_perm_list(set_arg, group.degree());
    bool complete = is_conjugation_complete(group, tuple);
    IgReport report = invariably_generates(group, tuple);
    output.doc["order"] = group.order();
    output.doc["conjugation_complete"] = complete;
    output.doc["result"] = report.generates;
    output.doc["explored_nodes"] = report.explored_nodes;
    if (!report.generates) {
      Json witness = Json::array();
      for (const Perm& p : report.counterexample) witness.push_back(p.to_cycle_string());
      output.doc["counterexample"] = std::move(witness);
    }
    text << "invariably generates: " << (report.generates ? "yes" : "no") << "\n";
  });

  auto* wiegold = perm_cmd->add_subcommand("wiegold", "Wiegold subgroup test");
  wiegold->add_option("--group", group_arg)->required();
  wiegold->add_option("--subgroup", subgroup_arg, "subgroup generators")->required();
  wiegold->callback([&] {
    FiniteGroup group = load_group(group_arg);
    auto gens = parse_perm_list(subgroup_arg, group.degree());
    bool is_w = is_wiegold(group, gens);
    std::int64_t covered = conjugate_union_size(group, gens);
    output.doc["order"] = group.order();
    output.doc["subgroup_order"] =
        FiniteGroup::closure(gens, group.degree(), group.order()).order();
    output.doc["conjugate_union"] = covered;
    output.doc["result"] = is_w;
    text << "wiegold: " << (is_w ? "yes" : "no") << " (union covers " << covered
         << " of " << group.order() << ")\n";
  });

  auto* jordan = perm_cmd->add_subcommand("jordan", "fixed-point-free element search");
  jordan->add_option("--group", group_arg)->required();
  jordan->add_option("--action", action_arg, "natural|regular|cosets");
  jordan->add_option("--subgroup", subgroup_arg, "coset action subgroup generators");
  jordan->callback([&] {
    FiniteGroup group = load_group(group_arg);
    std::optional<GroupAction> action;
    if (action_arg == "natural") action = GroupAction::natural(group);
    else if (action_arg == "regular") action = GroupAction::regular(group);
    else if (action_arg == "cosets")
      action = GroupAction::cosets(group, parse_perm_list(subgroup_arg, group.degree()));
    else throw Error(Errc::InvalidArgument, "unknown action: " + action_arg);
    auto active = jordan_active_element(*action);
    output.doc["domain_size"] = action->domain_size();
    output.doc["found"] = active.has_value();
    if (active) output.doc["active_element"] = active->to_cycle_string();
    text << "active element: " << (active ? active->to_cycle_string() : "none") << "\n";
  });

  // ----------------------------------------------------------------- words
  auto* words_cmd = app.add_subcommand("words", "free words and monomials");
  words_cmd->require_subcommand(1);

  std::string perm_tuple_arg, sl2_tuple_arg, tuple_id = "tuple";
  int degree_arg = 0, bound_arg = 8;
  bool psl_flag = false;
  auto* cert = words_cmd->add_subcommand("free-cert", "bounded freeness certificate");
  cert->add_option("--perm-tuple", perm_tuple_arg, "permutation tuple \"(0 1);(1 2)\"");
  cert->add_option("--degree", degree_arg, "degree for permutation tuples");
  cert->add_option("--sl2-tuple", sl2_tuple_arg, "JSON array of rational matrices");
  cert->add_option("--bound", bound_arg, "word length bound L")->capture_default_str();
  cert->add_option("--tuple-id", tuple_id);
  cert->add_flag("--psl", psl_flag, "projective identity test");
  cert->callback([&] {
    FreenessCertificate result;
    if (!perm_tuple_arg.empty()) {
      if (degree_arg < 1)
        throw Error(Errc::InvalidArgument, "--degree is required for permutation tuples");
      auto tuple = parse_perm_list(perm_tuple_arg, degree_arg);
      result = free_up_to(tuple, bound_arg, PermOps{degree_arg});
    } else if (!sl2_tuple_arg.empty()) {
      std::vector<Mat2q> tuple;
      for (const auto& item : read_json_arg(sl2_tuple_arg))
        tuple.push_back(mat2q_from_json(item));
      if (psl_flag) result = free_up_to(tuple, bound_arg, Psl2qOps{});
      else result = free_up_to(tuple, bound_arg, Sl2qOps{});
    } else {
      throw Error(Errc::InvalidArgument, "provide --perm-tuple or --sl2-tuple");
    }
    output.doc = certificate_to_json(result, tuple_id);
    text << (result.free_up_to
                 ? "free up to L=" + std::to_string(result.length_bound)
                 : "relation: " + result.relation->to_string())
         << "\n";
  });

  int vars_arg = 1;
  std::string orders_arg;
  auto* enumerate = words_cmd->add_subcommand("enumerate", "reduced-on-tuple words");
  enumerate->add_option("--vars", vars_arg, "number of variables")->required();
  enumerate->add_option("--orders", orders_arg, "comma list, 0 = infinite")->required();
  enumerate->add_option("--max-len", bound_arg, "length bound")->capture_default_str();
  enumerate->callback([&] {
    TupleSpec spec{parse_long_list(orders_arg)};
    Json list = Json::array();
    for (const Word& w : enumerate_reduced_words(vars_arg, spec, bound_arg))
      list.push_back(w.to_string());
    output.doc["count"] = list.size();
    output.doc["words"] = std::move(list);
    text << output.doc["count"].get<std::size_t>() << " words\n";
  });

  std::string constants_arg, exponents_arg, at_arg;
  auto* mono = words_cmd->add_subcommand("monomial", "one-variable monomials over SL2(Q)");
  mono->add_option("--constants", constants_arg, "JSON array of m+1 matrices")->required();
  mono->add_option("--exponents", exponents_arg, "comma list of m nonzero exponents")
      ->required();
  mono->add_option("--at", at_arg, "matrix to substitute for x")->required();
  mono->add_flag("--psl", psl_flag, "projective identity test");
  mono->callback([&] {
    std::vector<Mat2q> constants;
    for (const auto& item : read_json_arg(constants_arg))
      constants.push_back(mat2q_from_json(item));
    std::vector<long> exponents = parse_long_list(exponents_arg);
    Mat2q at = mat2q_from_json(read_json_arg(at_arg));
    auto run_with = [&](auto ops) {
      auto w = make_monomial(constants, exponents, ops);
      auto is_central = [&ops](const Mat2q& m) { return psl_equal(m, mat2_identity<Rational>()); };
      auto reduced = monomial_reduce_over_group<decltype(ops)>(w, is_central, ops);
      Mat2q value = monomial_evaluate(w, at, ops);
      output.doc["value"] = mat2q_to_json(value);
      output.doc["in_principal_algebraic_set"] = in_principal_algebraic_set(w, at, ops);
      Json red;
      red["span"] = reduced.span();
      Json cons = Json::array();
      for (const auto& c : reduced.constants) cons.push_back(mat2q_to_json(c));
      red["constants"] = std::move(cons);
      red["exponents"] = reduced.exponents;
      output.doc["reduced"] = std::move(red);
      text << "w(g) = " << mat2q_to_json(value).dump() << "\n";
    };
    if (psl_flag) run_with(Psl2qOps{});
    else run_with(Sl2qOps{});
  });

  // ------------------------------------------------------------------- sl2
  auto* sl2_cmd = app.add_subcommand("sl2", "2x2 matrix groups");
  sl2_cmd->require_subcommand(1);

  std::string matrix_arg, backend_arg = "rational";
  auto* classify_cmd = sl2_cmd->add_subcommand("classify", "conjugacy classification");
  classify_cmd->add_option("--matrix", matrix_arg)->required();
  classify_cmd->add_option("--backend", backend_arg, "rational|double")
      ->capture_default_str();
  classify_cmd->callback([&] {
    Mat2q m = mat2q_from_json(read_json_arg(matrix_arg));
    auto fill = [&](const auto& cls, auto&& value_to_json) {
      switch (cls.kind) {
        case Sl2Kind::Hyperbolic: {
          output.doc["class"] = "hyperbolic";
          const auto& h = std::get<0>(cls.data);
          if (h.lambda) output.doc["lambda"] = value_to_json(*h.lambda);
          break;
        }
        case Sl2Kind::ParabolicCentral:
          output.doc["class"] = "parabolic_central";
          output.doc["sign"] = std::get<Sl2ParabolicCentral>(cls.data).sign;
          break;
        case Sl2Kind::ParabolicShear:
          output.doc["class"] = "parabolic_shear";
          output.doc["sign"] = std::get<Sl2ParabolicShear>(cls.data).sign;
          output.doc["diag"] = std::get<Sl2ParabolicShear>(cls.data).diag;
          break;
        case Sl2Kind::Elliptic: {
          output.doc["class"] = "elliptic";
          const auto& e = std::get<3>(cls.data);
          output.doc["cos_theta"] = value_to_json(e.cos_theta);
          output.doc["sin_sign"] = e.sin_sign;
          break;
        }
      }
      if (cls.borderline) output.doc["borderline"] = true;
    };
    if (backend_arg == "rational") {
      auto cls = sl2_classify(m);
      fill(cls, [](const Rational& v) { return Json(v.get_str()); });
      if (cls.conjugator) output.doc["conjugator"] = mat2q_to_json(*cls.conjugator);
      if (cls.canonical) output.doc["canonical"] = mat2q_to_json(*cls.canonical);
    } else if (backend_arg == "double") {
      auto cls = sl2_classify(to_double(m));
      fill(cls, [](double v) { return Json(v); });
      if (cls.conjugator) output.doc["conjugator"] = mat2d_to_json(*cls.conjugator);
      if (cls.canonical) output.doc["canonical"] = mat2d_to_json(*cls.canonical);
    } else {
      throw Error(Errc::InvalidArgument, "unknown backend: " + backend_arg);
    }
    text << "class: " << output.doc["class"].get<std::string>() << "\n";
  });

  std::string lie_arg;
  double exp_time = 0;
  bool do_exp = false;
  auto* lie_cmd = sl2_cmd->add_subcommand("lie", "traceless classification and exponential");
  lie_cmd->add_option("--element", lie_arg, "[a, b, c] for (a b; c -a)")->required();
  lie_cmd->add_option("--exp", exp_time, "also exponentiate t * X")->trigger_on_parse();
  lie_cmd->callback([&] {
    Json triple = read_json_arg(lie_arg);
    auto entry = [&](int i) {
      const Json& v = triple.at(i);
      if (v.is_string()) return rational_from_string(v.get<std::string>());
      return Rational(v.get<long>());
    };
    LieElemQ x{entry(0), entry(1), entry(2)};
    auto orbit = lie_classify(x);
    switch (orbit.kind) {
      case LieOrbitKind::Split:
        output.doc["orbit"] = "split";
        if (orbit.t) output.doc["t"] = orbit.t->get_str();
        break;
      case LieOrbitKind::Nilpotent:
        output.doc["orbit"] = "nilpotent";
        output.doc["d"] = orbit.nilpotent_d->get_str();
        break;
      case LieOrbitKind::Rotation:
        output.doc["orbit"] = "rotation";
        if (orbit.theta) output.doc["theta"] = orbit.theta->get_str();
        output.doc["orientation"] = orbit.orientation;
        break;
    }
    if (orbit.conjugator) output.doc["conjugator"] = mat2q_to_json(*orbit.conjugator);
    if (orbit.canonical) output.doc["canonical"] = mat2q_to_json(*orbit.canonical);
    do_exp = lie_cmd->count("--exp") > 0;
    if (do_exp) {
      LieElemD xd{to_double(x.a) * exp_time, to_double(x.b) * exp_time,
                  to_double(x.c) * exp_time};
      output.doc["exp"] = mat2d_to_json(xd.is_zero() ? mat2_identity<double>()
                                                     : exp_sl2(xd));
    }
    text << "orbit: " << output.doc["orbit"].get<std::string>() << "\n";
  });

  std::string gens_arg;
  auto* spectrum_cmd = sl2_cmd->add_subcommand("spectrum", "eigenvalue spectrum of words");
  spectrum_cmd->add_option("--generators", gens_arg, "JSON array of matrices")->required();
  spectrum_cmd->add_option("--bound", bound_arg, "word length bound")->capture_default_str();
  spectrum_cmd->callback([&] {
    std::vector<Mat2q> generators;
    for (const auto& item : read_json_arg(gens_arg))
      generators.push_back(mat2q_from_json(item));
    SpectrumReport report = spectrum_of_words(generators, bound_arg);
    output.doc = spectrum_to_json(report);
    text << "real values: " << report.real_values.size()
         << ", unit values: " << report.unit_values.size()
         << ", other: " << report.other_values.size() << "\n";
  });

  auto* borel_cmd = sl2_cmd->add_subcommand("borel", "upper-triangularizing conjugation");
  borel_cmd->add_option("--matrix", matrix_arg)->required();
  borel_cmd->add_option("--backend", backend_arg, "real|complex");
  borel_cmd->callback([&] {
    Mat2q m = mat2q_from_json(read_json_arg(matrix_arg));
    auto method_name = [](BorelMethod method) {
      return method == BorelMethod::SwapConjugation ? "swap" : "shear_root";
    };
    if (backend_arg == "real" || backend_arg == "rational") {
      auto result = borel_conjugator_real(m);
      if (const auto* exact = std::get_if<BorelResult<Rational>>(&result)) {
        output.doc["exact"] = true;
        output.doc["method"] = method_name(exact->method);
        output.doc["x"] = exact->shear_x.get_str();
        output.doc["conjugator"] = mat2q_to_json(exact->conjugator);
        output.doc["conjugated"] = mat2q_to_json(exact->conjugated);
      } else {
        const auto& approx = std::get<BorelResult<double>>(result);
        output.doc["exact"] = false;
        output.doc["method"] = method_name(approx.method);
        output.doc["x"] = approx.shear_x;
        output.doc["conjugator"] = mat2d_to_json(approx.conjugator);
        output.doc["conjugated"] = mat2d_to_json(approx.conjugated);
      }
    } else if (backend_arg == "complex") {
      auto result = borel_conjugator_complex(m);
      if (const auto* exact = std::get_if<BorelResult<GaussianRational>>(&result)) {
        output.doc["exact"] = true;
        output.doc["method"] = method_name(exact->method);
        output.doc["x"] = Json{{"re", exact->shear_x.re.get_str()},
                               {"im", exact->shear_x.im.get_str()}};
        output.doc["conjugated"] = mat2gq_to_json(exact->conjugated);
      } else {
        const auto& approx = std::get<BorelResult<std::complex<double>>>(result);
        output.doc["exact"] = false;
        output.doc["method"] = method_name(approx.method);
        output.doc["x"] = Json{{"re", approx.shear_x.real()}, {"im", approx.shear_x.imag()}};
        output.doc["conjugated"] = mat2cd_to_json(approx.conjugated);
      }
    } else {
      throw Error(Errc::InvalidArgument, "unknown backend: " + backend_arg);
    }
    text << "method: " << output.doc["method"].get<std::string>() << "\n";
  });

  auto* plane_cmd = sl2_cmd->add_subcommand("plane", "invariant plane of a real matrix");
  plane_cmd->add_option("--matrix", matrix_arg, "n x n JSON array of rows")->required();
  plane_cmd->callback([&] {
    Json rows = read_json_arg(matrix_arg);
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rows.at(i).at(j).get<double>();
    InvariantPlane plane = invariant_plane(m);
    Json basis = Json::array();
    for (int col = 0; col < 2; ++col) {
      Json v = Json::array();
      for (int i = 0; i < n; ++i) v.push_back(plane.basis(i, col));
      basis.push_back(std::move(v));
    }
    output.doc["basis"] = std::move(basis);
    output.doc["from_complex_pair"] = plane.from_complex_pair;
    output.doc["eigenvalue"] =
        Json{{"re", plane.eigenvalue.real()}, {"im", plane.eigenvalue.imag()}};
    output.doc["residual"] = invariant_plane_residual(m, plane.basis);
    text << "invariant plane residual: " << invariant_plane_residual(m, plane.basis)
         << "\n";
  });

  std::string tuple_arg, class_rep_arg;
  int trials_arg = 200;
  std::uint64_t seed_arg = 0;
  auto* extend_cmd = sl2_cmd->add_subcommand("extend-free", "randomized free-tuple extension");
  extend_cmd->add_option("--tuple", tuple_arg, "JSON array of matrices (may be empty)")
      ->required();
  extend_cmd->add_option("--class-rep", class_rep_arg, "representative of the new class")
      ->required();
  extend_cmd->add_option("--bound", bound_arg, "certificate length L")->capture_default_str();
  extend_cmd->add_option("--trials", trials_arg)->capture_default_str();
  extend_cmd->add_option("--seed", seed_arg)->required();
  extend_cmd->callback([&] {
    std::vector<Mat2q> tuple;
    for (const auto& item : read_json_arg(tuple_arg))
      tuple.push_back(mat2q_from_json(item));
    Mat2q rep = mat2q_from_json(read_json_arg(class_rep_arg));
    auto result = extend_free_tuple(tuple, rep, bound_arg, trials_arg, seed_arg);
    output.doc["witness"] = mat2q_to_json(result.witness);
    output.doc["conjugated"] = mat2q_to_json(result.conjugated);
    output.doc["trials_used"] = result.trials_used;
    output.doc["certificate"] = certificate_to_json(result.certificate, "extended");
    text << "succeeded after " << result.trials_used << " trial(s)\n";
  });

  // ------------------------------------------------------------------ tree
  auto* tree_cmd = app.add_subcommand("tree", "regular-tree automorphisms");
  tree_cmd->require_subcommand(1);

  int valence = 3, radius_arg = 6, level_arg = 1, emit_depth = 0;
  std::string element_arg, element_b_arg, kind_arg, vertex_arg = ".", witness_arg,
              partition_arg, target_arg;
  int verify_st_radius = 0;

  auto* make_cmd = tree_cmd->add_subcommand("make", "canonical element recipes");
  make_cmd->add_option("--valence", valence)->capture_default_str();
  make_cmd->add_option("--kind", kind_arg, "type|odometer|translation|flip")->required();
  make_cmd->add_option("--level", level_arg, "type level n");
  make_cmd->add_option("--partition", partition_arg, "like {1,2}{3}");
  make_cmd->add_option("--vertex", vertex_arg, "base-relative address, '.' for the base");
  make_cmd->add_option("--witness", witness_arg, "witness on S(v, n-1) for n > 1");
  make_cmd->add_option("--flip-color", level_arg, "color for flips");
  make_cmd->add_option("--verify-st", verify_st_radius,
                       "verify spherical transitivity to this radius");
  make_cmd->callback([&] {
    Address v = Address::parse(vertex_arg, valence);
    TreeAut element = TreeAut::identity(valence);
    if (kind_arg == "type") {
      std::optional<Address> witness;
      if (!witness_arg.empty()) witness = Address::parse(witness_arg, valence);
      element = tree::make_type_nP(valence, v, {level_arg, parse_partition(partition_arg)},
                             witness);
    } else if (kind_arg == "odometer") {
      element = tree::make_spherically_transitive(valence, v);
    } else if (kind_arg == "translation") {
      element = tree::make_hyperbolic_translation(valence);
    } else if (kind_arg == "flip") {
      element = TreeAut::edge_flip(valence, level_arg);
    } else {
      throw Error(Errc::InvalidArgument, "unknown kind: " + kind_arg);
    }
    output.doc = tree_aut_to_json(element);
    if (verify_st_radius > 0)
      output.doc["spherically_transitive_to"] =
          tree::verify_spherical_transitivity(element, v, verify_st_radius)
              ? verify_st_radius
              : -1;
    text << "made " << kind_arg << "\n";
  });

  auto* tclassify = tree_cmd->add_subcommand("classify", "Tits classification");
  tclassify->add_option("--valence", valence)->capture_default_str();
  tclassify->add_option("--element", element_arg)->required();
  tclassify->add_option("--radius", radius_arg)->capture_default_str();
  tclassify->callback([&] {
    TreeAut g = load_tree_element(element_arg, valence);
    tree::TreeClass cls = tree::classify(g, radius_arg);
    output.doc["class"] = class_name(cls.kind);
    if (cls.fixed_vertex) output.doc["fixed_vertex"] = cls.fixed_vertex->to_string();
    if (cls.flipped_edge)
      output.doc["flipped_edge"] = Json::array(
          {cls.flipped_edge->first.to_string(), cls.flipped_edge->second.to_string()});
    if (cls.kind == tree::TreeClassKind::Hyperbolic) {
      output.doc["translation_length"] = cls.translation_length;
      Json axis = Json::array();
      for (const Address& a : cls.axis_segment) axis.push_back(a.to_string());
      output.doc["axis_segment"] = std::move(axis);
    }
    if (!cls.reason.empty()) output.doc["reason"] = cls.reason;
    text << "class: " << class_name(cls.kind) << "\n";
  });

  auto* torbital = tree_cmd->add_subcommand("orbital", "marked quotient tree");
  torbital->add_option("--valence", valence)->capture_default_str();
  torbital->add_option("--element", element_arg)->required();
  torbital->add_option("--radius", radius_arg)->capture_default_str();
  torbital->callback([&] {
    TreeAut g = load_tree_element(element_arg, valence);
    output.doc = orbital_to_json(tree::orbital_type(g, radius_arg));
    text << "orbital signature: " << output.doc["signature"].get<std::string>() << "\n";
  });

  auto* tconj = tree_cmd->add_subcommand("conjugacy", "bounded conjugacy test");
  tconj->add_option("--valence", valence)->capture_default_str();
  tconj->add_option("--a", element_arg)->required();
  tconj->add_option("--b", element_b_arg)->required();
  tconj->add_option("--radius", radius_arg)->capture_default_str();
  tconj->callback([&] {
    TreeAut a = load_tree_element(element_arg, valence);
    TreeAut b = load_tree_element(element_b_arg, valence);
    tree::ConjugacyResult result = tree::conjugacy_test(a, b, radius_arg);
    output.doc["outcome"] = outcome_name(result.outcome);
    output.doc["radius"] = result.radius;
    output.doc["reason"] = result.reason;
    text << "outcome: " << outcome_name(result.outcome) << "\n";
  });

  auto* tphi = tree_cmd->add_subcommand("phi", "local action permutations");
  tphi->add_option("--valence", valence)->capture_default_str();
  tphi->add_option("--element", element_arg)->required();
  tphi->add_option("--vertex", vertex_arg)->capture_default_str();
  tphi->add_option("--level", level_arg, "1 for phi_v1, else n for phi_vnu")
      ->capture_default_str();
  tphi->add_option("--witness", witness_arg, "u on S(v, n-1) for n > 1");
  tphi->callback([&] {
    TreeAut g = load_tree_element(element_arg, valence);
    Address v = Address::parse(vertex_arg, valence);
    Perm p = level_arg <= 1
                 ? tree::phi_v1(g, v)
                 : tree::phi_vnu(g, v, level_arg,
                                 Address::parse(witness_arg, valence));
    output.doc["permutation"] = p.to_cycle_string();
    output.doc["degree"] = p.degree();
    text << "phi image: " << p.to_cycle_string() << "\n";
  });

  auto* tgenv = tree_cmd->add_subcommand("gen-vertex", "vertex transitivity witness");
  tgenv->add_option("--valence", valence)->capture_default_str();
  tgenv->add_option("--target", target_arg, "address to reach from the base")->required();
  tgenv->add_option("--emit-element", emit_depth, "include a truncation to this depth");
  tgenv->callback([&] {
    TreeAut h = tree::make_hyperbolic_translation(valence);
    TreeAut s = TreeAut::odometer(valence);
    Address x = Address::parse(target_arg, valence);
    auto witness = tree::vertex_transitivity_witness(h, s, Address(), x);
    output.doc["target"] = x.to_string();
    output.doc["word"] = witness.word.to_string();
    output.doc["word_letters"] = witness.word.total_letters();
    output.doc["verified"] = witness.element.apply(Address()) == x;
    if (emit_depth > 0)
      output.doc["element"] = tree_aut_to_json(
          TreeAut::truncation(valence, emit_depth, witness.element.materialize(emit_depth)));
    text << "word: " << witness.word.to_string() << "\n";
  });

  bool random_target = false;
  auto* tgens = tree_cmd->add_subcommand("gen-stab", "stabilizer approximation");
  tgens->add_option("--valence", valence)->capture_default_str();
  tgens->add_option("--radius", radius_arg, "match the target on B(v, radius)")
      ->capture_default_str();
  tgens->add_option("--element", element_arg, "target stabilizer element");
  tgens->add_flag("--random", random_target, "use a seeded random stabilizer target");
  tgens->add_option("--seed", seed_arg, "seed for --random");
  tgens->callback([&] {
    TreeAut k = TreeAut::identity(valence);
    if (random_target) {
      if (tgens->count("--seed") == 0)
        throw Error(Errc::InvalidArgument, "--random needs an explicit --seed");
      std::mt19937_64 rng(seed_arg);
      k = tree::random_stabilizer_element(valence, radius_arg, rng);
    } else if (!element_arg.empty()) {
      k = load_tree_element(element_arg, valence);
    } else {
      throw Error(Errc::InvalidArgument, "provide --element or --random with --seed");
    }
    auto supply = tree::make_full_supply(valence, Address(), radius_arg);
    auto approx = tree::stabilizer_approximation(k, supply, radius_arg);
    output.doc["radius"] = approx.radius;
    output.doc["word"] = approx.word.to_string();
    output.doc["word_letters"] = approx.word.total_letters();
    output.doc["verified"] = agree_on_ball(approx.element, k, radius_arg);
    text << "word letters: " << approx.word.total_letters() << "\n";
  });

  // ----------------------------------------------------------------- suite
  auto* suite_cmd = app.add_subcommand("suite", "verification suites");
  suite_cmd->require_subcommand(1);
  auto* acceptance_cmd = suite_cmd->add_subcommand("acceptance", "acceptance criteria");
  int only_criterion = 0;
  acceptance_cmd->add_option("--only", only_criterion, "run a single criterion");
  bool suite_failed = false;
  acceptance_cmd->callback([&] {
    suite_failed = !run_acceptance_suite(text, only_criterion);
    output.json_mode = false;  // the suite prints one line per criterion
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    Json error_doc;
    error_doc["schema"] = kSchemaTag;
    error_doc["error"] = Json{{"code", errc_name(e.code())},
                              {"message", e.what()},
                              {"detail", e.detail()}};
    out << error_doc.dump(2) << "\n";
    return 1;
  }

  output.json_mode = output.json_mode && format == "json";
  output.text = text.str();
  output.emit(out);
  return suite_failed ? 1 : 0;
}

}  // namespace invgen::cli
