#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mira/matrix.hpp"
#include "mira/polynomial.hpp"
#include "mira/schwartz.hpp"

namespace mira {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // the two unequal values when pass is false
};

using Rng = std::mt19937_64;

// Seeded input generators for the property suites. Value ranges are kept
// small so residue-class enumerations stay desk-scale.
Rational random_rational(Rng& rng, long num_range = 9, long den_range = 4);
SchwartzFunction random_schwartz(Rng& rng, long p, long d, long max_terms = 2,
                                 long max_level = 2);
RationalMatrix random_matrix(Rng& rng, long n);
RationalMatrix random_invertible(Rng& rng, long n);
RationalPoly random_monic_poly(Rng& rng, long deg);

// Property suites; each returns one CheckResult per randomized check.
std::vector<CheckResult> suite_fourier(uint64_t seed, long count);
std::vector<CheckResult> suite_plancherel(uint64_t seed, long count);
std::vector<CheckResult> suite_tate_fe(uint64_t seed, long count);
std::vector<CheckResult> suite_kernel_swap(uint64_t seed, long count);
std::vector<CheckResult> suite_hooks(long max_n = 12);
std::vector<CheckResult> suite_conjugation(long max_n = 12);
std::vector<CheckResult> suite_gl1_trace(uint64_t seed, long count);
std::vector<CheckResult> suite_frobenius(uint64_t seed, long count);
std::vector<CheckResult> suite_eisenstein(uint64_t seed, long count);

std::vector<CheckResult> run_suite(const std::string& name, uint64_t seed, long count);
std::vector<std::string> suite_names();

}  // namespace mira
