#include "zred/pell.hpp"

#include "zred/forms.hpp"

namespace zred {
namespace {

// Walks the convergents p/q of (p0 + sqrt(d)) / q0 and returns the first one
// for which make(p, q) yields a solution of |t^2 - delta u^2| = 4.
template <class Make>
PellSolution first_convergent_solution(const Integer& delta, Integer p0, Integer q0,
                                       const Integer& d, Make make) {
    const Integer root = isqrt(d);
    Integer P = std::move(p0);
    Integer Q = std::move(q0);
    Integer p_prev = 0, p_cur = 1;
    Integer q_prev = 1, q_cur = 0;
    for (;;) {
        const Integer a = floor_div(P + root, Q);
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);

        auto [t, u] = make(p_cur, q_cur);
        const Integer norm = t * t - delta * u * u;
        if (norm == -4 || norm == 4) {
            return PellSolution{std::move(t), std::move(u), norm == -4 ? -4 : 4};
        }

        P = a * Q - P;
        Q = (d - P * P) / Q;
    }
}

}  // namespace

PellSolution fundamental_solution(const Integer& delta) {
    if (!is_indefinite_discriminant(delta)) {
        throw DomainError("Pell equation needs a positive nonsquare discriminant, got " +
                          to_string(delta));
    }
    if (delta > 4 && is_perfect_square(delta - 4)) return {isqrt(delta - 4), 1, -4};
    if (is_perfect_square(delta + 4)) return {isqrt(delta + 4), 1, 4};

    const int residue = static_cast<int>(delta % 4);
    if (residue == 1) {
        // Units (t + u sqrt(delta)) / 2 = (p - q) + q w with w = (1 + sqrt(delta)) / 2
        // and p/q a convergent of w.
        return first_convergent_solution(delta, 1, 2, delta, [](const Integer& p, const Integer& q) {
            return std::pair<Integer, Integer>{2 * p - q, q};
        });
    }
    if (residue == 0) {
        // t is even: (t/2)^2 - (delta/4) u^2 = -+1.
        return first_convergent_solution(delta, 0, 1, delta / 4, [](const Integer& p, const Integer& q) {
            return std::pair<Integer, Integer>{2 * p, q};
        });
    }
    // delta = 2, 3 (mod 4) forces t and u even: (t/2)^2 - delta (u/2)^2 = -+1.
    return first_convergent_solution(delta, 0, 1, delta, [](const Integer& p, const Integer& q) {
        return std::pair<Integer, Integer>{2 * p, 2 * q};
    });
}

std::vector<PellSolution> solve_pell_bruteforce(const Integer& delta, const Integer& u_max) {
    if (!is_indefinite_discriminant(delta)) {
        throw DomainError("Pell equation needs a positive nonsquare discriminant, got " +
                          to_string(delta));
    }
    std::vector<PellSolution> out;
    for (Integer u = 1; u <= u_max; ++u) {
        const Integer m = delta * u * u;
        if (m > 4 && is_perfect_square(m - 4)) out.push_back({isqrt(m - 4), u, -4});
        if (is_perfect_square(m + 4)) out.push_back({isqrt(m + 4), u, 4});
    }
    return out;
}

}  // namespace zred
