#pragma once

#include <string>

#include "iolog/permissions.hpp"
#include "iolog/syntax.hpp"

namespace iolog {

// Loads an algebra description:
//   {"name": ..., "size": n, "leq": [[i,j],...],
//    "ops": {"neg": [...], "impl": [[...],...], ...}}
// Unary tables are flat arrays, binary tables nested row arrays; bottom/top
// are inferred from the order. The returned binding binds and/or plus the
// inferred constants and any of neg/impl/coimpl present among the ops.
CatalogEntry load_algebra_file(const std::string& path);

// Catalog name or path to an algebra file; enforces the carrier cap.
CatalogEntry load_algebra_ref(const std::string& ref, int max_carrier);

struct NormFile {
  CatalogEntry entry;
  NormRelation relation;
  Assignment assignment;
  std::string role;  // "norms" unless the file says {"role": "permission"}
};

// {"algebra": name-or-path, "pairs": [["formula","formula"],...],
//  "assignment": {"atom": element-id}, "role"?: ...}
// Formulas are evaluated under the assignment before any computation.
NormFile load_norm_file(const std::string& path, int max_carrier);

struct FamilyFile {
  CatalogEntry entry;
  ExtensionFamily family;
};

// {"algebra": name-or-path, "members": [norm-file, ...]}; member paths are
// resolved relative to the family file.
FamilyFile load_family_file(const std::string& path, int max_carrier);

// IOLOG_MAX_CARRIER, default 32.
int max_carrier_from_env();

// Machine-readable report: array of {check_id, holds, instances, witness?,
// notes?, millis?}. Timings are off by default so equal seeds give
// byte-identical output.
std::string reports_to_json(const std::vector<PropertyReport>& reports, bool timings);

std::string relation_to_json(const NormRelation& r);
std::string algebra_to_json(const CatalogEntry& e);

}  // namespace iolog
