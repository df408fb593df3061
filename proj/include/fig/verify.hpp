#pragma once

/**
 * @file verify.hpp
 * @brief Seeded random presentations and exact checks of the structural
 * theorems on them.
 */

#include "fig/invariants.hpp"

#include "json.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fig {

struct RandomParams {
  std::uint64_t seed = 1;
  int count = 10;
  int d_max = 2;
  int r_max = 3;
  int max_generators = 3;
  int max_relations = 3;
  int max_terms = 3;
  std::vector<FieldSpec> fields{FieldSpec::rationals()};
  std::vector<FiniteGroup> groups{FiniteGroup::trivial()};
};

/// Free generators (regular representations) in degrees [0, d_max]; each
/// relation has degree in [least generator degree, r_max] and 1..max_terms
/// terms +-(f,g) (x) e_1 with (f,g) uniform in the hom set.
Presentation random_presentation(std::mt19937_64 &rng, const FieldSpec &field,
                                 const FiniteGroup &group, const RandomParams &params);

struct CorpusEntry {
  int index = 0;
  Presentation presentation;
};
/// Instance k uses field k mod |fields|, group (k / |fields|) mod |groups|
/// and its own generator seeded by (seed, k).
std::vector<CorpusEntry> random_corpus(const RandomParams &params);

struct Check {
  std::string name;
  bool passed = true;
  /// False when the truncation is too small to decide; such checks do not fail.
  bool certified = true;
  std::string witness;
};

struct InstanceReport {
  int index = 0;
  std::string field, group;
  int d = -1, r = -1, truncation = 0;
  std::vector<Check> checks;
  bool passed() const;
};

struct VerifyOptions {
  int truncation = 8;
  int i_max = 3;
  int a_max = 3;
  int threads = 1;
};

/// Every per-instance check, in a fixed order.
InstanceReport verify_instance(const Presentation &p, const VerifyOptions &opts, int index = 0);

/// K_n cap sum_{i<=a} M_{n-{i}} = sum_{i<=a} K_{n-{i}} for n >= min(r,d) + r + 1, a <= n.
Check check_intersection_identity(const Realization &real, int d, int r);
/// U <= M(W) generated in the degree of W: U and M(W)/U both have H_1 = 0.
Check check_generated_submodule(std::mt19937_64 &rng, const FieldSpec &field,
                                const FiniteGroup &group, int m, int truncation);

struct VerifyReport {
  RandomParams params;
  VerifyOptions options;
  std::vector<InstanceReport> instances;
  std::vector<Check> suite_checks;
  bool passed() const;
};

VerifyReport verify_theorems(const RandomParams &params, const VerifyOptions &opts);

nlohmann::json to_json(const Check &c);
nlohmann::json to_json(const InstanceReport &r);
nlohmann::json to_json(const VerifyReport &r);

} // namespace fig
