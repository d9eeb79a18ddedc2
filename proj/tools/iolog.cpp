#include <iostream>

#include "CLI11.hpp"
#include "iolog/json_io.hpp"
#include "iolog/verifier.hpp"

namespace {

using namespace iolog;

int g_max_carrier = kMaxCarrier;

void print_relation(const NormRelation& r, const std::string& label) {
  std::cout << label << " (" << r.count() << " pairs): " << r.to_text() << "\n";
}

ElementSet parse_inputs(const std::string& text, const NormFile& nf) {
  ElementSet s;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) {
      bool digits = item.find_first_not_of("0123456789") == std::string::npos;
      Element e = digits ? std::stoi(item)
                         : evaluate(*parse(item), nf.entry.algebra, nf.entry.binding,
                                    nf.assignment);
      if (e < 0 || e >= nf.entry.algebra.n)
        fail("BadFile", "input element " + item + " outside the carrier");
      s.add(e);
    }
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return s;
}

std::pair<Element, Element> parse_pair(const std::string& text, const NormFile& nf) {
  size_t comma = text.find(',');
  if (comma == std::string::npos)
    fail("BadFile", "expected 'formula,formula', got '" + text + "'");
  Element a = evaluate(*parse(text.substr(0, comma)), nf.entry.algebra, nf.entry.binding,
                       nf.assignment);
  Element x = evaluate(*parse(text.substr(comma + 1)), nf.entry.algebra, nf.entry.binding,
                       nf.assignment);
  return {a, x};
}

void warn_hypothesis(const StaticPermission& s) {
  if (!s.hypothesis_ok && s.hypothesis_violation)
    std::cerr << "warning: permission (" << s.hypothesis_violation->first << ","
              << s.hypothesis_violation->second
              << ") is not negatively permitted by the normative system\n";
}

int print_reports(const std::vector<PropertyReport>& reports, bool as_json, bool timings) {
  bool all_hold = true;
  for (const auto& r : reports)
    if (!r.holds) all_hold = false;
  if (as_json) {
    std::cout << reports_to_json(reports, timings) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.holds ? "[ ok ] " : "[FAIL] ") << r.check_id;
      if (r.instances) std::cout << " (" << r.instances << " instances)";
      if (r.witness && !r.witness->empty()) {
        std::cout << " witness=(";
        for (size_t i = 0; i < r.witness->size(); ++i)
          std::cout << (i ? "," : "") << (*r.witness)[i];
        std::cout << ")";
      }
      if (!r.notes.empty()) std::cout << " -- " << r.notes;
      std::cout << "\n";
    }
  }
  return all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"input/output logic workbench over finite lattices"};
  app.require_subcommand(1);
  g_max_carrier = max_carrier_from_env();

  std::string arg_name, arg_norms, arg_perms, arg_family, arg_rules = "N1";
  std::string arg_props, arg_inputs, arg_trace, arg_variant, arg_context;
  std::string arg_suite = "all", arg_check;
  uint64_t arg_seed = 0;
  int arg_samples = 10000;
  bool arg_json = false, arg_classical = false, arg_timings = false;

  auto* alg_cmd = app.add_subcommand("algebra", "inspect the algebra catalog");
  auto* alg_list = alg_cmd->add_subcommand("list", "list catalog algebras");
  auto* alg_show = alg_cmd->add_subcommand("show", "print one algebra with its tables");
  alg_show->add_option("name", arg_name, "catalog name or algebra file")->required();
  alg_show->add_flag("--json", arg_json);
  alg_cmd->require_subcommand(1);

  auto* props_cmd = app.add_subcommand("props", "evaluate metalogical properties");
  props_cmd->add_option("algebra", arg_name)->required();
  props_cmd->add_option("--props", arg_props, "comma-separated property ids (default all)");
  props_cmd->add_flag("--json", arg_json);

  auto* close_cmd = app.add_subcommand("close", "close a normative system under rules");
  close_cmd->add_option("norms", arg_norms)->required();
  close_cmd->add_option("--rules", arg_rules, "preset N1..N4 or rule list");
  close_cmd->add_option("--trace", arg_trace, "derive 'formula,formula' and print its trace");
  close_cmd->add_flag("--json", arg_json);

  auto* out_cmd = app.add_subcommand("out", "detach outputs for a set of inputs");
  out_cmd->add_option("norms", arg_norms)->required();
  out_cmd->add_option("--rules", arg_rules);
  out_cmd->add_option("--inputs", arg_inputs, "comma-separated element ids or formulas")
      ->required();
  out_cmd->add_flag("--json", arg_json);

  auto* perm_cmd = app.add_subcommand("perm", "permission systems");
  auto* perm_neg = perm_cmd->add_subcommand("neg", "negative permission");
  perm_neg->add_option("norms", arg_norms)->required();
  perm_neg->add_flag("--classical", arg_classical, "use the bound negation instead");
  perm_neg->add_flag("--json", arg_json);
  auto* perm_dual = perm_cmd->add_subcommand("dual", "dual negative permission");
  perm_dual->add_option("norms", arg_norms)->required();
  perm_dual->add_flag("--classical", arg_classical);
  perm_dual->add_flag("--json", arg_json);
  auto* perm_static = perm_cmd->add_subcommand("static", "static positive permission");
  perm_static->add_option("norms", arg_norms)->required();
  perm_static->add_option("perms", arg_perms)->required();
  perm_static->add_option("--rules", arg_rules);
  perm_static->add_flag("--json", arg_json);
  auto* perm_dyn = perm_cmd->add_subcommand("dynamic", "dynamic positive permission");
  perm_dyn->add_option("norms", arg_norms)->required();
  perm_dyn->add_option("perms", arg_perms)->required();
  perm_dyn->add_option("--rules", arg_rules);
  perm_dyn->add_flag("--classical", arg_classical);
  perm_dyn->add_flag("--json", arg_json);
  auto* perm_gen = perm_cmd->add_subcommand("gen", "generalized dynamic permission");
  perm_gen->add_option("norms", arg_norms)->required();
  perm_gen->add_option("perms", arg_perms)->required();
  perm_gen->add_option("family", arg_family)->required();
  perm_gen->add_option("--rules", arg_rules);
  perm_gen->add_flag("--json", arg_json);
  perm_cmd->require_subcommand(1);

  auto* audit_cmd = app.add_subcommand("audit", "audit a relation against a closure rule");
  audit_cmd->add_option("relation", arg_norms)->required();
  audit_cmd->add_option("--variant", arg_variant, "e.g. SI>, WO<, ANDv")->required();
  audit_cmd->add_option("--context", arg_context, "normative system the rule refers to");
  audit_cmd->add_flag("--json", arg_json);

  auto* verify_cmd = app.add_subcommand("verify", "run registered checks over the catalog");
  verify_cmd->add_option("--suite", arg_suite,
                         "all|negperm|dualperm|static|dynamic|metaprops|example21");
  verify_cmd->add_option("--check", arg_check, "run a single check id instead of a suite");
  verify_cmd->add_option("--seed", arg_seed);
  verify_cmd->add_option("--samples", arg_samples);
  verify_cmd->add_flag("--json", arg_json);
  verify_cmd->add_flag("--timings", arg_timings, "include wall-clock millis in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*alg_list) {
      for (const auto& n : catalog_names()) std::cout << n << "\n";
      return 0;
    }
    if (*alg_show) {
      CatalogEntry e = load_algebra_ref(arg_name, g_max_carrier);
      std::cout << algebra_to_json(e) << "\n";
      return 0;
    }
    if (*props_cmd) {
      CatalogEntry e = load_algebra_ref(arg_name, g_max_carrier);
      std::vector<MetaProp> props;
      if (arg_props.empty()) {
        props.assign(kAllMetaProps.begin(), kAllMetaProps.end());
      } else {
        size_t pos = 0;
        while (pos <= arg_props.size()) {
          size_t comma = arg_props.find(',', pos);
          if (comma == std::string::npos) comma = arg_props.size();
          props.push_back(parse_metaprop(arg_props.substr(pos, comma - pos)));
          if (comma == arg_props.size()) break;
          pos = comma + 1;
        }
      }
      std::vector<PropertyReport> reports;
      for (MetaProp p : props)
        reports.push_back(check_metaproperty(e.algebra, e.binding, p));
      return print_reports(reports, arg_json, arg_timings);
    }
    if (*close_cmd) {
      NormFile nf = load_norm_file(arg_norms, g_max_carrier);
      RuleSet rules = parse_rules(arg_rules);
      ClosureResult res = close(nf.entry.algebra, nf.relation, rules);
      if (!arg_trace.empty()) {
        auto [a, x] = parse_pair(arg_trace, nf);
        for (const auto& line : extract_trace(res, a, x)) std::cout << line << "\n";
        return 0;
      }
      if (arg_json)
        std::cout << relation_to_json(res.relation) << "\n";
      else
        print_relation(res.relation, "closure");
      return 0;
    }
    if (*out_cmd) {
      NormFile nf = load_norm_file(arg_norms, g_max_carrier);
      RuleSet rules = parse_rules(arg_rules);
      ElementSet inputs = parse_inputs(arg_inputs, nf);
      ElementSet result = out(nf.entry.algebra, nf.relation, rules, inputs);
      std::string text;
      for (Element x = 0; x < nf.entry.algebra.n; ++x)
        if (result.contains(x)) text += (text.empty() ? "" : ",") + std::to_string(x);
      if (arg_json)
        std::cout << "{\"outputs\": [" << text << "]}\n";
      else
        std::cout << "out = {" << text << "}\n";
      return 0;
    }
    if (*perm_neg || *perm_dual) {
      NormFile nf = load_norm_file(arg_norms, g_max_carrier);
      const FiniteAlgebra& A = nf.entry.algebra;
      NormRelation r(A.n);
      if (arg_classical) {
        if (!nf.entry.binding.neg) fail("UnboundConnective", "neg");
        r = *perm_neg ? negative_permission_classical(A, nf.relation, *nf.entry.binding.neg)
                      : dual_negative_classical(A, nf.relation, *nf.entry.binding.neg);
      } else {
        r = *perm_neg ? negative_permission(A, nf.relation) : dual_negative(A, nf.relation);
      }
      if (arg_json)
        std::cout << relation_to_json(r) << "\n";
      else
        print_relation(r, *perm_neg ? "negative permission" : "dual negative permission");
      return 0;
    }
    if (*perm_static || *perm_dyn) {
      NormFile nf = load_norm_file(arg_norms, g_max_carrier);
      NormFile pf = load_norm_file(arg_perms, g_max_carrier);
      if (pf.entry.algebra.name != nf.entry.algebra.name)
        fail("BadFile", "norm and permission files use different algebras");
      RuleSet rules = parse_rules(arg_rules);
      const FiniteAlgebra& A = nf.entry.algebra;
      StaticPermission s = static_positive(A, pf.relation, nf.relation, rules);
      warn_hypothesis(s);
      if (*perm_dyn && rules == RuleSet::preset("N4"))
        std::cerr << "warning: dynamic permissions are usually taken over N1..N3; "
                     "N4 accepted\n";
      NormRelation r = s.relation;
      std::string label = "static positive permission";
      if (*perm_dyn) {
        if (arg_classical) {
          if (!nf.entry.binding.neg) fail("UnboundConnective", "neg");
          r = dynamic_positive_classical(A, pf.relation, nf.relation, rules,
                                         *nf.entry.binding.neg);
          label = "dynamic positive permission (negation form)";
        } else {
          r = dynamic_positive(A, pf.relation, nf.relation, rules);
          label = "dynamic positive permission";
        }
      }
      if (arg_json)
        std::cout << relation_to_json(r) << "\n";
      else
        print_relation(r, label);
      return 0;
    }
    if (*perm_gen) {
      NormFile nf = load_norm_file(arg_norms, g_max_carrier);
      NormFile pf = load_norm_file(arg_perms, g_max_carrier);
      FamilyFile ff = load_family_file(arg_family, g_max_carrier);
      if (pf.entry.algebra.name != nf.entry.algebra.name ||
          ff.entry.algebra.name != nf.entry.algebra.name)
        fail("BadFile", "norms, permissions and family must share one algebra");
      RuleSet rules = parse_rules(arg_rules);
      if (rules == RuleSet::preset("N4"))
        std::cerr << "warning: dynamic permissions are usually taken over N1..N3; "
                     "N4 accepted\n";
      NormRelation e = generalized_dynamic(nf.entry.algebra, pf.relation, nf.relation, rules,
                                           ff.family);
      if (arg_json)
        std::cout << relation_to_json(e) << "\n";
      else
        print_relation(e, "generalized dynamic permission");
      return 0;
    }
    if (*audit_cmd) {
      NormFile rf = load_norm_file(arg_norms, g_max_carrier);
      AuditVariant v = parse_audit_variant(arg_variant);
      NormRelation context(rf.entry.algebra.n);
      if (!arg_context.empty()) {
        NormFile cf = load_norm_file(arg_context, g_max_carrier);
        if (cf.entry.algebra.name != rf.entry.algebra.name)
          fail("BadFile", "relation and context use different algebras");
        context = cf.relation;
      }
      PropertyReport r = check_rule_closure(rf.entry.algebra, rf.relation, v, context,
                                            rf.entry.binding);
      return print_reports({r}, arg_json, arg_timings);
    }
    if (*verify_cmd) {
      std::vector<PropertyReport> reports;
      if (!arg_check.empty()) {
        for (const auto& name : catalog_names()) {
          CatalogEntry e = catalog(name);
          CheckOptions opts;
          opts.seed = arg_seed;
          opts.samples = arg_samples;
          PropertyReport r = run_check(arg_check, e.algebra, e.binding, opts);
          r.check_id = arg_check + "@" + name;
          reports.push_back(std::move(r));
        }
      } else {
        reports = run_suite(arg_suite, arg_seed, arg_samples);
      }
      return print_reports(reports, arg_json, arg_timings);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
