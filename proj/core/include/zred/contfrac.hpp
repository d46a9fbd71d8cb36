#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include "zred/integer.hpp"
#include "zred/sequences.hpp"

namespace zred {

enum class Parity { even, odd };

inline Parity parity_of(std::size_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }
const char* to_string(Parity p);

// ---------------------------------------------------------------------------
// Continuants

/// Continuant [q1, ..., ql]: numerator of the simplified continued fraction.
/// The empty string gives 1. A 0 is accepted as the first or last entry, with
/// [0] = 0, [0, q2, ..., ql] = [q3, ..., ql] and symmetrically on the right.
/// Interior zeros and negative entries throw DomainError.
Integer continuant(std::span<const Integer> s);

/// Continuant of the 1-based slice s[first..last]. A slice of length 0 gives 1
/// and a slice of length -1 (last == first - 2) gives 0.
Integer continuant(std::span<const Integer> s, std::ptrdiff_t first, std::ptrdiff_t last);

struct Matrix2 {
    Integer m00, m01, m10, m11;

    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs);

/// [[q1,1],[1,0]] ... [[ql,1],[1,0]]
///   = [[ [q1..ql], [q1..q(l-1)] ], [ [q2..ql], [q2..q(l-1)] ]]
Matrix2 continuant_matrix(std::span<const Integer> s);

// ---------------------------------------------------------------------------
// Rational expansions

/// Regular continued fraction of num/den (num > den >= 1) whose length has the
/// requested parity. The two expansions differ by (..., ql) <-> (..., ql - 1, 1).
NatString cf_expand(const Integer& num, const Integer& den, Parity parity);

// ---------------------------------------------------------------------------
// Quadratic surds

/// The real number (p + sqrt(delta)) / q with delta positive and nonsquare.
/// Stored normalized so that q divides delta - p^2; construction rescales
/// (p, q, delta) by |q| when needed, which leaves the value unchanged.
class QuadraticSurd {
public:
    QuadraticSurd(Integer p, Integer q, Integer delta);

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& delta() const { return delta_; }
    const Integer& isqrt_delta() const { return root_; }

    /// (p - sqrt(delta)) / q
    QuadraticSurd conjugate() const;

    /// Exact floor of the irrational value.
    Integer floor() const;
    Integer ceil() const { return floor() + 1; }

    /// Exact comparisons with an integer (the value is never an integer).
    bool greater_than(const Integer& k) const { return floor() >= k; }
    bool less_than(const Integer& k) const { return floor() < k; }

    /// 1 / (x - a) for integer a, exact.
    QuadraticSurd reciprocal_after_subtracting(const Integer& a) const;

    /// Approximate value for display and diagnostics only.
    double approx() const;

    friend bool operator==(const QuadraticSurd& l, const QuadraticSurd& r) {
        return l.p_ == r.p_ && l.q_ == r.q_ && l.delta_ == r.delta_;
    }
    friend bool operator<(const QuadraticSurd& l, const QuadraticSurd& r) {
        if (l.delta_ != r.delta_) return l.delta_ < r.delta_;
        if (l.q_ != r.q_) return l.q_ < r.q_;
        return l.p_ < r.p_;
    }

private:
    QuadraticSurd(Integer p, Integer q, Integer delta, Integer root);

    Integer p_;
    Integer q_;
    Integer delta_;
    Integer root_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x);

Integer floor_surd(const QuadraticSurd& x);
Integer ceil_surd(const QuadraticSurd& x);

/// First n regular quotients (floor, then x -> 1/(x - q)). Requires x > 0; the
/// first entry is 0 when x < 1 and every later entry is >= 1.
NatString reg_cf_surd(const QuadraticSurd& x, std::size_t n);

/// First n negative ("minus") quotients (ceiling, then x -> 1/(q - x)).
/// Requires x > 1; every quotient is then >= 2.
NatString neg_cf_surd(const QuadraticSurd& x, std::size_t n);

/// First n Denjoy quotients: 0 when the current value is below 1, 1 otherwise,
/// then x -> 1/(x - q). Requires x > 0. Never contains "00".
BinString denjoy_surd(const QuadraticSurd& x, std::size_t n);

/// Replaces each quotient q by 1 (01)^(q-1); an initial 0 is kept as "0".
BinString reg_to_denjoy(const NatString& s);

/// First n regular quotients of the purely periodic negative continued
/// fraction with the given period, by run-length conversion: the output is
/// (q1 - 1, r1 + 1, m1, r2 + 1, m2, ...) where r_i counts the 2s of the i-th
/// maximal run and m_i is two less than the entry that ends it.
/// Throws DomainError if the period is empty, has an entry < 2, or is all 2s.
NatString neg_to_reg_stream(const NatString& period, std::size_t n);

enum class ExpansionKind { regular, negative, denjoy };

const char* to_string(ExpansionKind k);
ExpansionKind parse_expansion_kind(std::string_view text);

/// Pre-period and period lengths of an expansion, found by detecting the
/// first repeated surd state. Works for any real surd value; the regular and
/// Denjoy expansions may start with a nonpositive quotient in that case.
struct ExpansionShape {
    std::size_t preperiod = 0;
    std::size_t period = 0;

    bool purely_periodic() const { return preperiod == 0; }
};

ExpansionShape expansion_shape(const QuadraticSurd& x, ExpansionKind kind);

}  // namespace zred
