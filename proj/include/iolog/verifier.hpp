#pragma once

#include "iolog/permissions.hpp"

namespace iolog {

// How a check quantifies its instances.
//   ExhaustiveElements  carrier tuples only
//   ExhaustiveNorms     every relation over the carrier (carrier <= 4)
//   SampledNorms        seeded draws, closed under the check's hypothesis rules
enum class Strategy { ExhaustiveElements, ExhaustiveNorms, SampledNorms };

struct CheckOptions {
  std::optional<Strategy> strategy;  // default: per check and carrier
  uint64_t seed = 0;
  int samples = 10000;
};

// One registered check per verified statement. A check whose metalogical or
// closure hypotheses fail on the given algebra reports holds=true with a
// "skipped" note; a genuine violation carries a witness and the instance that
// produced it.
PropertyReport run_check(const std::string& check_id, const FiniteAlgebra& alg,
                         const Binding& b, const CheckOptions& opts = {});

const std::vector<std::string>& registered_check_ids();
std::string check_title(const std::string& check_id);

// Suites: all, negperm, dualperm, static, dynamic, metaprops, example21.
// Each selected check runs over every catalog algebra in registry order;
// identical seeds give identical reports. Report ids are "<check>@<algebra>".
std::vector<PropertyReport> run_suite(const std::string& suite, uint64_t seed = 0,
                                      int samples = 10000);

const std::vector<std::string>& suite_names();

}  // namespace iolog
