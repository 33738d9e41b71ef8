#pragma once

#include <random>
#include <string>

#include "addpoly/dynamics.hpp"

namespace addpoly {

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;  // one line per failure (or skip)
};

/// Available suites: lemmas, thm-main-i, thm-main-ii, thm-linearized,
/// thm-dyn, method-agreement.
std::vector<std::string> verify_suite_names();
SuiteResult run_suite(const std::string& name, uint64_t seed, const Caps& caps = {});
std::vector<SuiteResult> run_all_suites(uint64_t seed, const Caps& caps = {});

// Seeded corpus helpers (shared with the acceptance tests).
FqElem random_element(const FieldCtx& F, std::mt19937_64& rng);
FqElem random_nonzero(const FieldCtx& F, std::mt19937_64& rng);
/// Random polynomial of degree exactly deg.
DensePoly random_dense(const FieldCtx& F, long deg, std::mt19937_64& rng);
/// Random additive polynomial with top index <= d_max (possibly a single term).
AdditivePoly random_additive(const FieldCtx& F, long d_max, std::mt19937_64& rng);
/// `count` random additive polynomials with at least two terms (non-exceptional).
std::vector<AdditivePoly> random_additive_corpus(const FieldCtx& F, long count,
                                                 long d_max, uint64_t seed);

}  // namespace addpoly
