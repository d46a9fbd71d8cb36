#pragma once

#include <vector>

#include "zred/integer.hpp"

namespace zred {

/// A positive solution of |t^2 - delta u^2| = 4; epsilon = t^2 - delta u^2.
struct PellSolution {
    Integer t;
    Integer u;
    int epsilon = 0;  // -4 or +4

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// The solution with minimal u >= 1 (and t > 0). When both signs occur at the
/// minimal u (only delta = 5), the epsilon = -4 solution is returned.
/// Throws DomainError unless delta is positive and nonsquare.
PellSolution fundamental_solution(const Integer& delta);

/// Every solution with 1 <= u <= u_max, found by testing delta u^2 -+ 4 for
/// squares. Ordered by u, then epsilon = -4 before +4.
std::vector<PellSolution> solve_pell_bruteforce(const Integer& delta, const Integer& u_max);

}  // namespace zred
