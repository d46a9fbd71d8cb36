#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "zred/forms.hpp"
#include "zred/integer.hpp"

namespace zred {

enum class ReductionOperator { z, g };

const char* to_string(ReductionOperator op);
ReductionOperator parse_reduction_operator(std::string_view text);

/// Orbit of a form split at the first repeat. The operator carries the last
/// cycle element back to the first one.
struct ReductionCycle {
    std::vector<Form> pre_period;
    std::vector<Form> cycle;

    friend bool operator==(const ReductionCycle&, const ReductionCycle&) = default;
};

/// ceil((b + sqrt(delta)) / (2a)). Throws DomainError unless f is indefinite.
Integer reducing_number(const Form& f);

/// Zagier step f(nx + y, -x) with n the reducing number.
Form r_z(const Form& f);
UnimodularMatrix r_z_matrix(const Form& f);

/// Signed Gauss step parameter: |d| = floor((b + sqrt(delta)) / (2|a|)), sign of a.
Integer gauss_number(const Form& f);

/// Gauss step f(dx + y, -x). Only defined on G-reduced forms.
Form r_g(const Form& f);
UnimodularMatrix r_g_matrix(const Form& f);

ReductionCycle orbit_to_cycle(const Form& f, ReductionOperator op);

/// Every Z-reduced form of discriminant delta, sorted.
std::vector<Form> enumerate_z_reduced(const Integer& delta);
/// Every G-reduced form of discriminant delta, sorted.
std::vector<Form> enumerate_g_reduced(const Integer& delta);

/// The reduced forms of delta split into operator cycles. Each cycle starts
/// at its smallest form and cycles are ordered by that form.
std::vector<ReductionCycle> cycles(const Integer& delta, ReductionOperator op);

/// Length of the Z-cycle reached from f.
std::size_t z_caliber(const Form& f);

}  // namespace zred
