#include "zred/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace zred {

using Rational = boost::multiprecision::cpp_rational;

namespace oracle {

std::vector<Form> brute_z_reduced(long long delta) {
    std::vector<Form> out;
    long long r = 0;
    while ((r + 1) * (r + 1) <= delta) ++r;
    for (long long b = r + 1; b <= delta; ++b) {
        if ((b * b - delta) % 4 != 0) continue;
        const long long m = (b * b - delta) / 4;  // ac
        // b > a + c with ac = m  <=>  a strictly between the roots (b -+ sqrt(delta)) / 2
        for (long long a = std::max(1LL, (b - r - 1) / 2); a <= (b + r + 1) / 2; ++a) {
            if (m % a != 0) continue;
            const long long c = m / a;
            if (c > 0 && b > a + c) out.push_back(Form{a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Form> brute_g_reduced(long long delta) {
    std::vector<Form> out;
    for (long long b = 1; b * b < delta; ++b) {
        if ((delta - b * b) % 4 != 0) continue;
        const long long m = (delta - b * b) / 4;  // -ac
        for (long long a = -m; a <= m; ++a) {
            if (a == 0 || m % a != 0) continue;
            const long long c = -m / a;
            const long long s = a + c < 0 ? -(a + c) : a + c;
            if (b > s) out.push_back(Form{a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Form slow_r_z(const Form& f) {
    if (f.a <= 0) throw DomainError("slow Zagier step expects a > 0");
    const Integer delta = discriminant(f);
    // smallest n with 2an - b > sqrt(delta)
    Integer n = f.b / (2 * f.a) - 1;
    for (;;) {
        const Integer m = 2 * f.a * n - f.b;
        if (m > 0 && m * m > delta) break;
        ++n;
    }
    return Form{f.a * n * n - f.b * n + f.c, 2 * f.a * n - f.b, f.a};
}

std::size_t slow_z_caliber(const Form& f) {
    std::unordered_set<Form, FormHash> seen;
    Form cur = f;
    while (!seen.contains(cur)) {
        seen.insert(cur);
        cur = slow_r_z(cur);
    }
    // cur is the first repeated form; count the loop through it
    std::size_t k = 0;
    Form walk = cur;
    do {
        walk = slow_r_z(walk);
        ++k;
    } while (walk != cur);
    return k;
}

std::optional<std::pair<Integer, Integer>> slow_pell(long long delta, long long u_max, int* epsilon) {
    for (long long u = 1; u <= u_max; ++u) {
        const Integer m = Integer(delta) * u * u;
        for (int eps : {-4, 4}) {
            const Integer t2 = m + eps;
            if (t2 <= 0) continue;
            const Integer t = boost::multiprecision::sqrt(t2);
            if (t * t == t2) {
                if (epsilon) *epsilon = eps;
                return std::pair<Integer, Integer>{t, Integer(u)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace oracle

namespace {

Integer rational_floor(const Rational& x) {
    const Integer n = boost::multiprecision::numerator(x);
    const Integer d = boost::multiprecision::denominator(x);  // positive
    Integer q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

Integer rational_ceil(const Rational& x) {
    return -rational_floor(-x);
}

bool is_integral(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

// Expands the open interval (lo, hi) for as many terms as both ends agree on.
std::string expand_interval(Rational lo, Rational hi, ExpansionKind kind, std::size_t n, std::size_t* produced) {
    std::string out;
    std::size_t k = 0;
    for (; k < n; ++k) {
        Integer q;
        if (kind == ExpansionKind::regular) {
            q = rational_floor(lo);
            if (rational_floor(hi) != q || is_integral(lo) || is_integral(hi)) break;
            Rational a = 1 / (lo - q), b = 1 / (hi - q);
            lo = std::move(b);
            hi = std::move(a);
        } else if (kind == ExpansionKind::negative) {
            q = rational_ceil(lo);
            if (rational_ceil(hi) != q || is_integral(lo) || is_integral(hi)) break;
            Rational a = 1 / (q - lo), b = 1 / (q - hi);
            lo = std::move(a);
            hi = std::move(b);
        } else {
            if (lo >= 1) {
                q = 1;
            } else if (hi <= 1 && lo > 0) {
                q = 0;
            } else {
                break;
            }
            if (lo == q) break;
            Rational a = 1 / (lo - q), b = 1 / (hi - q);
            lo = std::move(b);
            hi = std::move(a);
        }
        if (kind == ExpansionKind::denjoy) {
            out += q == 1 ? '1' : '0';
        } else {
            if (k) out += ',';
            out += q.str();
        }
    }
    *produced = k;
    return out;
}

}  // namespace

std::string expand_surd_oracle(const QuadraticSurd& x, ExpansionKind kind, std::size_t n) {
    if (n == 0) return {};
    if (kind == ExpansionKind::negative && !x.greater_than(1)) {
        throw DomainError("negative expansion needs a surd greater than 1");
    }
    if (kind != ExpansionKind::negative && !x.greater_than(0)) {
        throw DomainError("expansion needs a positive surd");
    }
    for (unsigned bits = 32;; bits *= 2) {
        const Integer scale = Integer(1) << bits;
        const Integer scaled = x.delta() * scale * scale;
        const Integer s = boost::multiprecision::sqrt(scaled);
        const Rational root_lo(s, scale), root_hi(s + 1, scale);
        Rational lo = (x.p() + root_lo) / Rational(x.q());
        Rational hi = (x.p() + root_hi) / Rational(x.q());
        if (lo > hi) std::swap(lo, hi);
        std::size_t produced = 0;
        std::string out = expand_interval(lo, hi, kind, n, &produced);
        if (produced == n) return out;
        if (bits > (1u << 20)) throw InternalError("interval refinement did not converge");
    }
}

}  // namespace zred
