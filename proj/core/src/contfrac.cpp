#include "zred/contfrac.hpp"

#include "zred/forms.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <utility>

namespace zred {

const char* to_string(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

// ---------------------------------------------------------------------------
// Continuants

Integer continuant(std::span<const Integer> s) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i] < 0) throw DomainError("continuant entries must be nonnegative");
        if (s[i] == 0 && i != 0 && i + 1 != n) throw DomainError("continuant has an interior zero");
    }
    Integer cur = 1;   // continuant of the prefix read so far
    Integer prev = 0;  // continuant of the prefix one shorter
    for (const Integer& q : s) {
        Integer next = q * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Integer continuant(std::span<const Integer> s, std::ptrdiff_t first, std::ptrdiff_t last) {
    const std::ptrdiff_t len = last - first + 1;
    if (len == 0) return 1;
    if (len == -1) return 0;
    if (len < -1 || first < 1 || last > static_cast<std::ptrdiff_t>(s.size())) {
        throw DomainError("continuant slice out of range");
    }
    return continuant(s.subspan(static_cast<std::size_t>(first - 1), static_cast<std::size_t>(len)));
}

Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
    return Matrix2{l.m00 * r.m00 + l.m01 * r.m10, l.m00 * r.m01 + l.m01 * r.m11,
                   l.m10 * r.m00 + l.m11 * r.m10, l.m10 * r.m01 + l.m11 * r.m11};
}

Matrix2 continuant_matrix(std::span<const Integer> s) {
    Matrix2 m{1, 0, 0, 1};
    for (const Integer& q : s) {
        if (q < 1) throw DomainError("continuant matrix entries must be positive");
        // right-multiply by [[q,1],[1,0]]
        Integer new00 = m.m00 * q + m.m01;
        Integer new10 = m.m10 * q + m.m11;
        m.m01 = std::move(m.m00);
        m.m11 = std::move(m.m10);
        m.m00 = std::move(new00);
        m.m10 = std::move(new10);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Rational expansions

NatString cf_expand(const Integer& num, const Integer& den, Parity parity) {
    if (den < 1 || num <= den) {
        throw DomainError("cf_expand needs num > den >= 1, got " + to_string(num) + "/" + to_string(den));
    }
    NatString out;
    Integer a = num, b = den;
    while (b != 0) {
        Integer q = a / b;
        Integer r = a - q * b;
        out.push_back(std::move(q));
        a = std::move(b);
        b = std::move(r);
    }
    if (parity_of(out.size()) != parity) {
        if (out.back() >= 2) {
            out.back() -= 1;
            out.emplace_back(1);
        } else {
            // a trailing 1 only survives in a length >= 2 expansion
            out.pop_back();
            out.back() += 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quadratic surds

QuadraticSurd::QuadraticSurd(Integer p, Integer q, Integer delta)
    : p_(std::move(p)), q_(std::move(q)), delta_(std::move(delta)) {
    if (q_ == 0) throw DomainError("surd denominator must be nonzero");
    if (!is_indefinite_discriminant(delta_)) {
        throw DomainError("surd radicand must be positive and nonsquare, got " + to_string(delta_));
    }
    if ((delta_ - p_ * p_) % q_ != 0) {
        const Integer scale = abs(q_);
        p_ *= scale;
        delta_ *= q_ * q_;
        q_ *= scale;
    }
    root_ = isqrt(delta_);
}

QuadraticSurd::QuadraticSurd(Integer p, Integer q, Integer delta, Integer root)
    : p_(std::move(p)), q_(std::move(q)), delta_(std::move(delta)), root_(std::move(root)) {}

QuadraticSurd QuadraticSurd::conjugate() const {
    return QuadraticSurd(-p_, -q_, delta_, root_);
}

Integer QuadraticSurd::floor() const {
    if (q_ > 0) return floor_div(p_ + root_, q_);
    return -floor_div(p_ + root_, -q_) - 1;
}

QuadraticSurd QuadraticSurd::reciprocal_after_subtracting(const Integer& a) const {
    Integer p = a * q_ - p_;
    Integer q = (delta_ - p * p) / q_;
    return QuadraticSurd(std::move(p), std::move(q), delta_, root_);
}

double QuadraticSurd::approx() const {
    return (p_.convert_to<double>() + std::sqrt(delta_.convert_to<double>())) / q_.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x) {
    return os << '(' << x.p() << "+sqrt(" << x.delta() << "))/" << x.q();
}

Integer floor_surd(const QuadraticSurd& x) {
    return x.floor();
}

Integer ceil_surd(const QuadraticSurd& x) {
    return x.ceil();
}

namespace {

// 1 / (a - x), exact
QuadraticSurd reciprocal_of_difference(const QuadraticSurd& x, const Integer& a) {
    const Integer p = a * x.q() - x.p();
    return QuadraticSurd(p, (p * p - x.delta()) / x.q(), x.delta());
}

}  // namespace

NatString reg_cf_surd(const QuadraticSurd& x, std::size_t n) {
    if (!x.greater_than(0)) throw DomainError("regular expansion needs a positive surd");
    NatString out;
    out.reserve(n);
    QuadraticSurd cur = x;
    for (std::size_t i = 0; i < n; ++i) {
        Integer q = cur.floor();
        cur = cur.reciprocal_after_subtracting(q);
        out.push_back(std::move(q));
    }
    return out;
}

NatString neg_cf_surd(const QuadraticSurd& x, std::size_t n) {
    if (!x.greater_than(1)) throw DomainError("negative expansion needs a surd greater than 1");
    NatString out;
    out.reserve(n);
    QuadraticSurd cur = x;
    for (std::size_t i = 0; i < n; ++i) {
        Integer q = cur.ceil();
        cur = reciprocal_of_difference(cur, q);
        out.push_back(std::move(q));
    }
    return out;
}

BinString denjoy_surd(const QuadraticSurd& x, std::size_t n) {
    if (!x.greater_than(0)) throw DomainError("Denjoy expansion needs a positive surd");
    std::string bits;
    bits.reserve(n);
    QuadraticSurd cur = x;
    for (std::size_t i = 0; i < n; ++i) {
        const int q = cur.greater_than(1) ? 1 : 0;
        cur = cur.reciprocal_after_subtracting(q);
        bits.push_back(q ? '1' : '0');
    }
    return BinString(std::move(bits));
}

BinString reg_to_denjoy(const NatString& s) {
    std::string bits;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 0 && s[i] == 0) {
            bits.push_back('0');
            continue;
        }
        if (s[i] < 1) throw DomainError("regular-to-Denjoy conversion needs positive quotients");
        bits.push_back('1');
        for (Integer k = 1; k < s[i]; ++k) bits.append("01");
    }
    return BinString(std::move(bits));
}

NatString neg_to_reg_stream(const NatString& period, std::size_t n) {
    if (period.empty()) throw DomainError("negative continued fraction period is empty");
    bool all_twos = true;
    for (const Integer& q : period) {
        if (q < 2) throw DomainError("negative continued fraction quotients must be >= 2");
        if (q != 2) all_twos = false;
    }
    if (all_twos) throw DomainError("an all-2 period does not represent a quadratic irrational");

    NatString out;
    out.reserve(n);
    if (n == 0) return out;
    std::size_t pos = 0;
    auto next = [&]() -> const Integer& {
        const Integer& q = period[pos];
        pos = (pos + 1) % period.size();
        return q;
    };
    out.push_back(next() - 1);
    while (out.size() < n) {
        Integer run = 0;
        const Integer* q = &next();
        while (*q == 2) {
            ++run;
            q = &next();
        }
        out.push_back(run + 1);
        if (out.size() < n) out.push_back(*q - 2);
    }
    return out;
}

const char* to_string(ExpansionKind k) {
    switch (k) {
        case ExpansionKind::regular: return "reg";
        case ExpansionKind::negative: return "neg";
        case ExpansionKind::denjoy: return "denjoy";
    }
    return "?";
}

ExpansionKind parse_expansion_kind(std::string_view text) {
    if (text == "reg") return ExpansionKind::regular;
    if (text == "neg") return ExpansionKind::negative;
    if (text == "denjoy") return ExpansionKind::denjoy;
    throw DomainError("unknown expansion kind '" + std::string(text) + "' (expected reg|neg|denjoy)");
}

ExpansionShape expansion_shape(const QuadraticSurd& x, ExpansionKind kind) {
    if (kind == ExpansionKind::denjoy && !x.greater_than(0)) {
        throw DomainError("Denjoy expansion needs a positive surd");
    }
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    QuadraticSurd cur = x;
    for (std::size_t i = 0;; ++i) {
        auto [it, inserted] = seen.emplace(std::pair{cur.p(), cur.q()}, i);
        if (!inserted) return ExpansionShape{it->second, i - it->second};
        switch (kind) {
            case ExpansionKind::regular:
                cur = cur.reciprocal_after_subtracting(cur.floor());
                break;
            case ExpansionKind::negative:
                cur = reciprocal_of_difference(cur, cur.ceil());
                break;
            case ExpansionKind::denjoy:
                cur = cur.reciprocal_after_subtracting(cur.greater_than(1) ? 1 : 0);
                break;
        }
    }
}

}  // namespace zred
