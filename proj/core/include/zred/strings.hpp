#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zred/sequences.hpp"

namespace zred {

// ---------------------------------------------------------------------------
// Stars and bars

/// Bijection from natural strings of length >= 2 to binary strings with at
/// least one 1: q1 stars, a bar, q2 stars, ..., read gap by gap (bar -> 1,
/// empty gap -> 0). Length is sum(q) - 1 and weight is l - 1.
BinString sb(const NatString& s);
NatString sb_inv(const BinString& b);

// ---------------------------------------------------------------------------
// Natural string operators

NatString eta_plus(const NatString& s);   // prepend 1
NatString eta_minus(const NatString& s);  // append 1
NatString reversed(const NatString& s);
NatString t_g(const NatString& s);        // (q2, ..., ql, q1)

/// (q1-1, q2, ..., q(l-1), ql+1)   if q1 >= 2
/// (q2, q1)                         if q1 = 1 and l = 2
/// (q3, ..., ql, q2, q1)            if q1 = 1 and l > 2
NatString t_z(const NatString& s);

/// (q1, ...) -> (1, q1-1, ...) when q1 >= 2, (q2+1, q3, ...) when q1 = 1.
/// "(1)" and "()" are left alone.
NatString pinch_left(const NatString& s);
NatString pinch_right(const NatString& s);
NatString pinch_both(const NatString& s);
/// Drop q1, pinch both ends of the rest, then append q1.
NatString knead(const NatString& s);

// ---------------------------------------------------------------------------
// Rotations, periods, necklaces

BinString rotate_left(const BinString& b, std::size_t r);

/// The cyclic shift induced on sigma-strings by one Zagier reduction step:
/// a leading 0 moves to the back; a lone leading 1 followed by 0s moves to the
/// back; otherwise rotate so that the second 1 lands in the final position.
BinString rotate_bin(const BinString& b);

/// Smallest p dividing n such that s is p-periodic (KMP failure function).
template <class T>
std::size_t minimal_period(std::span<const T> s) {
    const std::size_t n = s.size();
    if (n == 0) return 0;
    std::vector<std::size_t> fail(n, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && !(s[i] == s[k])) k = fail[k - 1];
        if (s[i] == s[k]) ++k;
        fail[i] = k;
    }
    const std::size_t p = n - fail[n - 1];
    return n % p == 0 ? p : n;
}

/// Start index of the lexicographically least rotation (two-pointer minimum
/// expression, linear time).
template <class T>
std::size_t least_rotation(std::span<const T> s) {
    const std::size_t n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const T& a = s[(i + k) % n];
        const T& b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (b < a) {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if (i == j) ++j;
        k = 0;
    }
    return n == 0 ? 0 : std::min(i, j);
}

bool is_primitive_string(const BinString& b);
bool is_primitive_string(const NatString& s);

inline std::size_t weight(const BinString& b) { return b.weight(); }
inline std::size_t length(const BinString& b) { return b.size(); }

/// A cyclic class of strings, held by its lexicographically least rotation.
template <class Seq>
struct Necklace {
    Seq canonical;

    friend bool operator==(const Necklace&, const Necklace&) = default;
};

Necklace<BinString> necklace_of(const BinString& b);
Necklace<NatString> necklace_of(const NatString& s);

// ---------------------------------------------------------------------------
// Alternating strings and necklaces

/// An even-weight binary string whose 1s alternate between green and blue.
/// The coloring is fixed by naming the position of one green 1.
class AlternatingString {
public:
    AlternatingString(BinString bits, std::size_t green);

    /// Parses "1g0011b"-style text: every 1 carries a 'g' or 'b' suffix.
    static AlternatingString parse(std::string_view text);

    const BinString& bits() const { return bits_; }
    std::size_t green() const { return green_; }
    bool is_green(std::size_t pos) const;

private:
    BinString bits_;
    std::size_t green_;
};

std::string to_string(const AlternatingString& s);

/// True iff some rotation carries lhs onto rhs with matching bits and colors.
bool alternating_equal(const AlternatingString& lhs, const AlternatingString& rhs);

/// Canonical alternating necklace: the underlying necklace plus the smaller of
/// the first two 1-positions that can be green in the canonical rotation.
struct AlternatingNecklace {
    Necklace<BinString> underlying;
    std::size_t phase = 0;

    friend bool operator==(const AlternatingNecklace&, const AlternatingNecklace&) = default;
};

AlternatingNecklace alternating_necklace_of(const AlternatingString& s);
std::string to_string(const AlternatingNecklace& n);

}  // namespace zred
