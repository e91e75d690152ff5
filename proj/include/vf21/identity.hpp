#ifndef VF21_IDENTITY_HPP
#define VF21_IDENTITY_HPP

// The cross-module identity checks: uniform seeded sampling, residual
// normalization, and deterministic reporting. Checks are registered in a
// table; samples are drawn up front from a splitmix64 stream so that runs
// are reproducible bit-for-bit regardless of thread count.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vf21/params.hpp"

namespace vf21 {

// Deterministic RNG (never the standard distributions, whose output is
// implementation-defined).
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    long long uniform_int(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

struct CheckReport {
    std::string check_id;
    int sample_index = 0;
    std::string params;     // rendered parameter sample
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool gating = true;
    std::string notes;
};

struct SuiteConfig {
    uint64_t seed = 1;
    double rel_tol = 1e-10;
    int samples = 50;
    int e_max = 12;
    int series_order = 12;
    int k_max = 20;
    int threads = 0;        // 0 = library default
    std::vector<double> xs{0.2, 0.3, 0.45};
    std::vector<double> rs{4.0, 5.0, 7.0};
    std::vector<std::string> only;   // check-id filter; empty = all
};

// ---- individual checks; each returns one report per sample ----
std::vector<CheckReport> check_ybe_r8(const SuiteConfig& cfg);
std::vector<CheckReport> check_ybe_r21(const SuiteConfig& cfg);
std::vector<CheckReport> check_ybe_r21_table(const SuiteConfig& cfg);   // informational
std::vector<CheckReport> check_ybe_face(const SuiteConfig& cfg);
std::vector<CheckReport> check_ybe_face22(const SuiteConfig& cfg);
std::vector<CheckReport> check_ybe_mixed(const SuiteConfig& cfg);
std::vector<CheckReport> check_vertex_face_halfspin(const SuiteConfig& cfg);
std::vector<CheckReport> check_vertex_face_fused(const SuiteConfig& cfg);
std::vector<CheckReport> check_dual_vertex_face(const SuiteConfig& cfg);
std::vector<CheckReport> check_s_dual_vertex_face(const SuiteConfig& cfg);
std::vector<CheckReport> check_inversion(const SuiteConfig& cfg);
std::vector<CheckReport> check_lop_inverse(const SuiteConfig& cfg);
std::vector<CheckReport> check_lop_cross_route(const SuiteConfig& cfg);
std::vector<CheckReport> check_residue_degeneracy(const SuiteConfig& cfg);
std::vector<CheckReport> check_fusion_projector(const SuiteConfig& cfg);
std::vector<CheckReport> check_three_term_identity(const SuiteConfig& cfg);
std::vector<CheckReport> check_addition_theorem(const SuiteConfig& cfg);
std::vector<CheckReport> check_tail_coefficient_recursion(const SuiteConfig& cfg);
std::vector<CheckReport> check_elliptic_dual_route(const SuiteConfig& cfg);
std::vector<CheckReport> check_characters(const SuiteConfig& cfg);
std::vector<CheckReport> check_face_characters(const SuiteConfig& cfg);
std::vector<CheckReport> check_chi_sum_rule(const SuiteConfig& cfg);
std::vector<CheckReport> check_boson_fermion_trace(const SuiteConfig& cfg);
std::vector<CheckReport> check_lowtemp_r21(const SuiteConfig& cfg);
std::vector<CheckReport> check_ope(const SuiteConfig& cfg);
std::vector<CheckReport> check_commutation_ratio(const SuiteConfig& cfg);
std::vector<CheckReport> check_ramond_anticommutator(const SuiteConfig& cfg);
std::vector<CheckReport> check_ab_delta(const SuiteConfig& cfg);              // informational
std::vector<CheckReport> check_table_vs_fused(const SuiteConfig& cfg);        // informational
std::vector<CheckReport> check_lowtemp_dominance(const SuiteConfig& cfg);     // informational

// Registered check ids in canonical order.
std::vector<std::string> registered_checks();

// Runs all (or filtered) checks. The parallel path distributes whole checks
// across OpenMP threads; each check's internal sampling is deterministic, so
// serial and parallel runs produce identical reports.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);
std::vector<CheckReport> run_suite_serial(const SuiteConfig& cfg);

} // namespace vf21

#endif
