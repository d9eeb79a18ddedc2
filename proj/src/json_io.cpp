#include "iolog/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace iolog {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("FileNotFound", path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("BadFile", path + ": " + e.what());
  }
  return j;
}

}  // namespace

int max_carrier_from_env() {
  const char* v = std::getenv("IOLOG_MAX_CARRIER");
  if (!v) return kMaxCarrier;
  int n = std::atoi(v);
  if (n <= 0 || n > kMaxCarrier) return kMaxCarrier;
  return n;
}

CatalogEntry load_algebra_file(const std::string& path) {
  json j = read_json(path);
  AlgebraSpec spec;
  try {
    spec.name = j.value("name", path);
    spec.size = j.at("size").get<int>();
    for (const auto& p : j.value("leq", json::array()))
      spec.leq.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    if (j.contains("ops"))
      for (const auto& [op, table] : j.at("ops").items()) {
        if (!table.is_array() || table.empty())
          fail("BadTable", "operation '" + op + "' must be a nonempty array");
        if (table.front().is_array()) {
          std::vector<Element> flat;
          for (const auto& row : table)
            for (const auto& v : row) flat.push_back(v.get<int>());
          spec.binary_ops[op] = std::move(flat);
        } else {
          spec.unary_ops[op] = table.get<std::vector<Element>>();
        }
      }
  } catch (const json::exception& e) {
    fail("BadFile", path + ": " + e.what());
  }

  CatalogEntry entry{build_algebra(spec), {}};
  entry.binding.has_and = true;
  entry.binding.has_or = true;
  entry.binding.top = entry.algebra.top;
  entry.binding.bot = entry.algebra.bottom;
  // Only operations named in the file enter the binding; derived residuals
  // stay inspectable on the algebra without widening the signature.
  if (spec.unary_ops.count("neg")) entry.binding.neg = *entry.algebra.unary("neg");
  if (spec.binary_ops.count("impl")) entry.binding.impl = *entry.algebra.binary("impl");
  if (spec.binary_ops.count("coimpl"))
    entry.binding.coimpl = *entry.algebra.binary("coimpl");
  return entry;
}

CatalogEntry load_algebra_ref(const std::string& ref, int max_carrier) {
  CatalogEntry e = [&] {
    for (const auto& name : catalog_names())
      if (name == ref) return catalog(ref);
    if (ref.rfind("chain(", 0) == 0) return catalog(ref);
    return load_algebra_file(ref);
  }();
  if (e.algebra.n > max_carrier)
    fail("CarrierTooLarge", ref + " has carrier " + std::to_string(e.algebra.n) +
                                ", cap is " + std::to_string(max_carrier));
  return e;
}

NormFile load_norm_file(const std::string& path, int max_carrier) {
  json j = read_json(path);
  NormFile out;
  std::string alg_ref;
  std::vector<std::pair<std::string, std::string>> raw_pairs;
  try {
    alg_ref = j.at("algebra").get<std::string>();
    for (const auto& p : j.value("pairs", json::array()))
      raw_pairs.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
    if (j.contains("assignment"))
      for (const auto& [atom, v] : j.at("assignment").items())
        out.assignment[atom] = v.get<int>();
    out.role = j.value("role", "norms");
  } catch (const json::exception& e) {
    fail("BadFile", path + ": " + e.what());
  }

  // Non-catalog algebra references resolve relative to the norm file first.
  bool in_catalog = alg_ref.rfind("chain(", 0) == 0;
  for (const auto& name : catalog_names()) in_catalog |= name == alg_ref;
  if (!in_catalog) {
    std::filesystem::path p = std::filesystem::path(path).parent_path() / alg_ref;
    if (std::filesystem::exists(p)) alg_ref = p.string();
  }
  out.entry = load_algebra_ref(alg_ref, max_carrier);
  out.relation = NormRelation(out.entry.algebra.n);
  for (auto& [fs, gs] : raw_pairs) {
    Element a = evaluate(*parse(fs), out.entry.algebra, out.entry.binding, out.assignment);
    Element x = evaluate(*parse(gs), out.entry.algebra, out.entry.binding, out.assignment);
    out.relation.add(a, x);
  }
  return out;
}

FamilyFile load_family_file(const std::string& path, int max_carrier) {
  json j = read_json(path);
  FamilyFile out;
  std::string alg_ref;
  std::vector<std::string> members;
  try {
    alg_ref = j.at("algebra").get<std::string>();
    for (const auto& m : j.at("members")) members.push_back(m.get<std::string>());
  } catch (const json::exception& e) {
    fail("BadFile", path + ": " + e.what());
  }
  out.entry = load_algebra_ref(alg_ref, max_carrier);
  for (const auto& m : members) {
    std::filesystem::path p = m;
    if (p.is_relative()) p = std::filesystem::path(path).parent_path() / p;
    NormFile nf = load_norm_file(p.string(), max_carrier);
    if (nf.entry.algebra.n != out.entry.algebra.n ||
        nf.entry.algebra.name != out.entry.algebra.name)
      fail("BadFile", m + ": member algebra differs from the family algebra");
    out.family.members.push_back(nf.relation);
  }
  return out;
}

std::string reports_to_json(const std::vector<PropertyReport>& reports, bool timings) {
  json arr = json::array();
  for (const auto& r : reports) {
    json o;
    o["check_id"] = r.check_id;
    o["holds"] = r.holds;
    o["instances"] = r.instances;
    if (r.witness) o["witness"] = *r.witness;
    if (!r.notes.empty()) o["notes"] = r.notes;
    if (timings) o["millis"] = r.millis;
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

std::string relation_to_json(const NormRelation& r) {
  json arr = json::array();
  r.for_each([&](Element a, Element x) { arr.push_back(json::array({a, x})); });
  json o;
  o["carrier"] = r.carrier();
  o["count"] = r.count();
  o["pairs"] = std::move(arr);
  return o.dump(2);
}

std::string algebra_to_json(const CatalogEntry& e) {
  const FiniteAlgebra& a = e.algebra;
  json o;
  o["name"] = a.name;
  o["size"] = a.n;
  o["bottom"] = a.bottom;
  o["top"] = a.top;
  json leq = json::array();
  for (Element i = 0; i < a.n; ++i)
    for (Element j = 0; j < a.n; ++j)
      if (i != j && a.leq(i, j)) leq.push_back(json::array({i, j}));
  o["leq"] = std::move(leq);
  auto table2 = [&](const std::vector<Element>& t) {
    json rows = json::array();
    for (Element i = 0; i < a.n; ++i) {
      json row = json::array();
      for (Element j = 0; j < a.n; ++j) row.push_back(t[i * a.n + j]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json ops;
  ops["meet"] = table2(a.meet_);
  ops["join"] = table2(a.join_);
  for (const auto& [op, t] : a.unary_ops) ops[op] = t;
  for (const auto& [op, t] : a.binary_ops) ops[op] = table2(t);
  o["ops"] = std::move(ops);
  json bound = json::array();
  if (e.binding.has_and) bound.push_back("and");
  if (e.binding.has_or) bound.push_back("or");
  if (e.binding.neg) bound.push_back("neg");
  if (e.binding.impl) bound.push_back("impl");
  if (e.binding.coimpl) bound.push_back("coimpl");
  if (e.binding.top) bound.push_back("top");
  if (e.binding.bot) bound.push_back("bot");
  o["binding"] = std::move(bound);
  return o.dump(2);
}

}  // namespace iolog
