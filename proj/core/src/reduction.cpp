#include "zred/reduction.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

namespace zred {
namespace {

Integer checked_root(const Form& f) {
    const Integer delta = discriminant(f);
    if (!is_indefinite_discriminant(delta)) {
        throw DomainError("form " + to_string(f) + " is not indefinite (discriminant " + to_string(delta) + ")");
    }
    return isqrt(delta);
}

// floor((p + sqrt(D)) / q) for irrational sqrt(D) with root = isqrt(D)
Integer surd_floor(const Integer& p, const Integer& q, const Integer& root) {
    if (q > 0) return floor_div(p + root, q);
    return -floor_div(p + root, -q) - 1;
}

Form substitute(const Form& f, const Integer& n) {
    // f(nx + y, -x)
    return Form{f.a * n * n - f.b * n + f.c, 2 * f.a * n - f.b, f.a};
}

// Enumeration works in machine integers; anything larger is far beyond what
// a linear-in-delta scan can finish anyway.
long long enumeration_delta(const Integer& delta) {
    if (!is_indefinite_discriminant(delta)) {
        throw DomainError("enumeration needs a positive nonsquare discriminant, got " + to_string(delta));
    }
    if (delta > Integer(1'000'000'000'000LL)) {
        throw DomainError("discriminant " + to_string(delta) + " is too large to enumerate");
    }
    return delta.convert_to<long long>();
}

}  // namespace

const char* to_string(ReductionOperator op) {
    return op == ReductionOperator::z ? "z" : "g";
}

ReductionOperator parse_reduction_operator(std::string_view text) {
    if (text == "z") return ReductionOperator::z;
    if (text == "g") return ReductionOperator::g;
    throw DomainError("unknown reduction operator '" + std::string(text) + "' (expected z|g)");
}

Integer reducing_number(const Form& f) {
    const Integer root = checked_root(f);
    return surd_floor(f.b, 2 * f.a, root) + 1;
}

Form r_z(const Form& f) {
    return substitute(f, reducing_number(f));
}

UnimodularMatrix r_z_matrix(const Form& f) {
    return UnimodularMatrix(reducing_number(f), 1, -1, 0);
}

Integer gauss_number(const Form& f) {
    if (!is_g_reduced(f)) throw DomainError("Gauss reduction needs a G-reduced form, got " + to_string(f));
    const Integer root = isqrt(discriminant(f));
    const Integer magnitude = surd_floor(f.b, 2 * abs(f.a), root);
    return f.a > 0 ? magnitude : Integer(-magnitude);
}

Form r_g(const Form& f) {
    return substitute(f, gauss_number(f));
}

UnimodularMatrix r_g_matrix(const Form& f) {
    return UnimodularMatrix(gauss_number(f), 1, -1, 0);
}

ReductionCycle orbit_to_cycle(const Form& f, ReductionOperator op) {
    if (op == ReductionOperator::z) {
        checked_root(f);
    } else if (!is_g_reduced(f)) {
        throw DomainError("Gauss reduction needs a G-reduced form, got " + to_string(f));
    }
    std::unordered_map<Form, std::size_t, FormHash> seen;
    std::vector<Form> orbit;
    Form cur = f;
    while (seen.find(cur) == seen.end()) {
        seen.emplace(cur, orbit.size());
        orbit.push_back(cur);
        cur = op == ReductionOperator::z ? r_z(cur) : r_g(cur);
    }
    const std::size_t entry = seen.at(cur);
    ReductionCycle out;
    out.pre_period.assign(orbit.begin(), orbit.begin() + static_cast<std::ptrdiff_t>(entry));
    out.cycle.assign(orbit.begin() + static_cast<std::ptrdiff_t>(entry), orbit.end());
    if (op == ReductionOperator::z && !is_z_reduced(out.cycle.front())) {
        throw InternalError("Zagier orbit re-entered at a form that is not Z-reduced: " +
                            to_string(out.cycle.front()));
    }
    return out;
}

std::vector<Form> enumerate_z_reduced(const Integer& delta) {
    const long long d = enumeration_delta(delta);
    // With e = A - C: (B - A - C)(B + A + C) = delta - e^2.
    std::vector<Form> out;
    for (long long e = 0; e * e < d; ++e) {
        const long long n = d - e * e;
        for (long long lo = 1; lo * lo < n; ++lo) {
            if (n % lo != 0) continue;
            const long long hi = n / lo;
            if ((lo + hi) % 2 != 0) continue;
            const long long b = (lo + hi) / 2;
            const long long sum = (hi - lo) / 2;  // A + C
            if (sum <= e || (sum + e) % 2 != 0) continue;
            const long long a = (sum + e) / 2;
            const long long c = (sum - e) / 2;
            out.push_back(Form{a, b, c});
            if (e != 0) out.push_back(Form{c, b, a});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Form> enumerate_g_reduced(const Integer& delta) {
    const long long d = enumeration_delta(delta);
    std::vector<Form> out;
    for (long long b = 1; b * b < d; ++b) {
        if ((d - b * b) % 4 != 0) continue;
        const long long m = (d - b * b) / 4;  // -AC
        for (long long x = 1; x * x <= m; ++x) {
            if (m % x != 0) continue;
            const long long y = m / x;
            for (const auto& [a, c] : {std::pair{x, -y}, std::pair{-x, y}, std::pair{y, -x}, std::pair{-y, x}}) {
                const long long s = a + c;
                if (b > (s < 0 ? -s : s)) out.push_back(Form{a, b, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ReductionCycle> cycles(const Integer& delta, ReductionOperator op) {
    const std::vector<Form> forms =
        op == ReductionOperator::z ? enumerate_z_reduced(delta) : enumerate_g_reduced(delta);
    std::set<Form> pending(forms.begin(), forms.end());
    std::vector<ReductionCycle> out;
    for (const Form& start : forms) {
        if (!pending.contains(start)) continue;
        ReductionCycle c = orbit_to_cycle(start, op);
        if (!c.pre_period.empty()) {
            throw InternalError("reduced form " + to_string(start) + " has a nonempty pre-period");
        }
        for (const Form& g : c.cycle) {
            if (pending.erase(g) != 1) {
                throw InternalError("cycle of " + to_string(start) + " leaves the enumerated reduced forms");
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t z_caliber(const Form& f) {
    return orbit_to_cycle(f, ReductionOperator::z).cycle.size();
}

}  // namespace zred
