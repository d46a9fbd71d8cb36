#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zred/contfrac.hpp"
#include "zred/forms.hpp"

namespace zred {

struct Counterexample {
    Integer delta;
    std::optional<Form> form;
    std::string detail;
};

struct VerificationReport {
    std::string theorem_id;
    long long delta_min = 0;
    long long delta_max = 0;
    std::uint64_t cases_checked = 0;
    /// Sorted by discriminant, then form.
    std::vector<Counterexample> failures;

    bool passed() const { return failures.empty(); }
};

/// Sizes of the exhaustive sweeps. delta_max bounds every discriminant range;
/// when it is 0 the string sweeps are skipped as well.
struct SweepBounds {
    long long delta_max = 0;
    std::size_t string_max_length = 8;
    long long string_max_entry = 6;
    std::size_t binary_max_length = 10;
    std::size_t necklace_max_length = 9;
    std::size_t random_samples = 10000;
    std::uint64_t seed = 20240611;
    unsigned jobs = 1;
};

/// Registered suite ids, in a fixed order.
const std::vector<std::string>& suite_ids();

/// Runs one suite. Throws DomainError for an unknown id.
VerificationReport verify(std::string_view theorem_id, long long delta_max, unsigned jobs = 1);
VerificationReport verify(std::string_view theorem_id, const SweepBounds& bounds);

/// Slow independent expansion by rational interval refinement of sqrt(delta).
/// Regular and negative quotients come out comma-joined, Denjoy ones as bits.
std::string expand_surd_oracle(const QuadraticSurd& x, ExpansionKind kind, std::size_t n);

// Independent brute-force helpers, exposed for tests.
namespace oracle {

/// Z-reduced forms of delta by scanning b and a directly.
std::vector<Form> brute_z_reduced(long long delta);
/// G-reduced forms of delta by scanning b and a directly.
std::vector<Form> brute_g_reduced(long long delta);
/// One Zagier step with the reducing number found by linear search.
Form slow_r_z(const Form& f);
/// Length of the Zagier cycle reached from f, using slow_r_z.
std::size_t slow_z_caliber(const Form& f);
/// Fundamental Pell solution by scanning u upward. Gives up past u_max.
std::optional<std::pair<Integer, Integer>> slow_pell(long long delta, long long u_max, int* epsilon);

}  // namespace oracle

}  // namespace zred
