#include "zred/maps.hpp"

#include <string>
#include <vector>

namespace zred {
namespace {

void check_pell(const Form& f, const PellSolution& pell) {
    const Integer delta = discriminant(f);
    if (pell.u < 1 || pell.t < 1 || pell.t * pell.t - delta * pell.u * pell.u != pell.epsilon) {
        throw DomainError("Pell solution does not belong to discriminant " + to_string(delta));
    }
}

Integer half_trace(const Form& f, const PellSolution& pell) {
    const Integer twice = pell.t + f.b * pell.u;
    if (twice % 2 != 0) {
        throw InternalError("t + b u is odd for " + to_string(f));
    }
    return twice / 2;
}

}  // namespace

NatString gamma(const Form& f) {
    if (!is_g_reduced(f) || f.a < 0) {
        throw DomainError("gamma needs a G-reduced form with a > 0, got " + to_string(f));
    }
    return gamma(f, fundamental_solution(discriminant(f)));
}

NatString gamma(const Form& f, const PellSolution& pell) {
    if (!is_g_reduced(f) || f.a < 0) {
        throw DomainError("gamma needs a G-reduced form with a > 0, got " + to_string(f));
    }
    check_pell(f, pell);
    const Integer z = half_trace(f, pell);
    const Integer den = f.a * pell.u;
    if (z == den) {
        // z / (a u) = 1 only has the odd-length expansion (1); this happens at delta = 5
        if (pell.epsilon != -4) throw InternalError("z / (a u) = 1 with epsilon = +4 for " + to_string(f));
        return nat({1});
    }
    if (z < den) {
        throw InternalError("z / (a u) < 1 for " + to_string(f));
    }
    return cf_expand(z, den, pell.epsilon == -4 ? Parity::odd : Parity::even);
}

NatString beta(const Form& f) {
    if (!is_z_reduced(f)) throw DomainError("beta needs a Z-reduced form, got " + to_string(f));
    return beta(f, fundamental_solution(discriminant(f)));
}

NatString beta(const Form& f, const PellSolution& pell) {
    if (!is_z_reduced(f)) throw DomainError("beta needs a Z-reduced form, got " + to_string(f));
    check_pell(f, pell);
    const Integer z = half_trace(f, pell);
    const Integer den = z - f.a * pell.u;
    if (den < 1) {
        throw InternalError("z - a u < 1 for " + to_string(f));
    }
    NatString out = cf_expand(z, den, pell.epsilon == -4 ? Parity::even : Parity::odd);
    if (out.size() < 2) throw InternalError("bead sequence of length 1 for " + to_string(f));
    return out;
}

BinString sigma(const Form& f) {
    return sb(beta(f));
}

BinString sigma(const Form& f, const PellSolution& pell) {
    return sb(beta(f, pell));
}

UnimodularMatrix mu_matrix(const Form& f) {
    if (!is_g_reduced(f)) throw DomainError("mu needs a G-reduced form, got " + to_string(f));
    if (f.a > 0) return UnimodularMatrix(1, 1, 0, 1);
    return UnimodularMatrix(1, 0, 1, 1);
}

Form mu(const Form& f) {
    if (!is_g_reduced(f)) throw DomainError("mu needs a G-reduced form, got " + to_string(f));
    if (f.a > 0) return Form{f.a, 2 * f.a + f.b, f.a + f.b + f.c};
    return Form{f.a + f.b + f.c, f.b + 2 * f.c, f.c};
}

Form tau(const NatString& s) {
    const std::size_t l = s.size();
    if (l < 2) throw DomainError("tau needs a string of length >= 2");
    for (const Integer& q : s) {
        if (q < 1) throw DomainError("tau needs positive entries");
    }
    NatString head = s;  // q1 - 1, ...
    head.front() -= 1;
    NatString tail = s;  // ..., ql - 1
    tail.back() -= 1;
    NatString both = head;
    both.back() -= 1;
    return Form{continuant(head), continuant(s) + continuant(both), continuant(tail)};
}

Form xi(const NatString& s) {
    const auto l = static_cast<std::ptrdiff_t>(s.size());
    if (l < 1) throw DomainError("xi needs a nonempty string");
    for (const Integer& q : s) {
        if (q < 1) throw DomainError("xi needs positive entries");
    }
    const std::span<const Integer> v(s);
    return Form{continuant(v, 2, l), continuant(v) - continuant(v, 2, l - 1), -continuant(v, 1, l - 1)};
}

ClassInvariants class_invariants(const Form& f) {
    return class_invariants(f, fundamental_solution(discriminant(f)));
}

ClassInvariants class_invariants(const Form& f, const PellSolution& pell) {
    const BinString s = sigma(f, pell);
    return ClassInvariants{s.weight(), s.size(), parity_of(s.weight())};
}

SigmaNecklace sigma_bar(const Form& f) {
    return sigma_bar(f, fundamental_solution(discriminant(f)));
}

SigmaNecklace sigma_bar(const Form& f, const PellSolution& pell) {
    BinString s = sigma(f, pell);
    if (s.weight() % 2 == 1) return necklace_of(s);
    const std::size_t first_one = s.bits().find('1');
    return alternating_necklace_of(AlternatingString(std::move(s), first_one));
}

std::string to_string(const SigmaNecklace& n) {
    if (const auto* plain = std::get_if<Necklace<BinString>>(&n)) return plain->canonical.bits();
    return to_string(std::get<AlternatingNecklace>(n));
}

BinString denjoy_period(const Form& f) {
    return denjoy_period(f, fundamental_solution(discriminant(f)));
}

BinString denjoy_period(const Form& f, const PellSolution& pell) {
    const BinString s = sigma(f, pell);
    std::string out;
    for (char c : s.bits()) {
        if (c == '0') {
            out += "01";
        } else {
            out += '1';
        }
    }
    return BinString(std::move(out));
}

QuadraticSurd denjoy_surd_of(const Form& f) {
    if (!is_z_reduced(f)) throw DomainError("needs a Z-reduced form, got " + to_string(f));
    return QuadraticSurd(f.b - 2 * f.a, 2 * f.a, discriminant(f));
}

}  // namespace zred
