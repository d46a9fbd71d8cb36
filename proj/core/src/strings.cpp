#include "zred/strings.hpp"

#include <algorithm>
#include <ostream>

namespace zred {

// ---------------------------------------------------------------------------
// Sequence basics

std::string to_string(const NatString& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += s[i].str();
    }
    return out;
}

NatString parse_nat_string(std::string_view text) {
    NatString out;
    if (text.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        Integer q = parse_integer(piece);
        if (q < 1) throw DomainError("natural string entries must be positive: '" + std::string(text) + "'");
        out.push_back(std::move(q));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

NatString nat(std::initializer_list<long long> entries) {
    NatString out;
    out.reserve(entries.size());
    for (long long q : entries) out.emplace_back(q);
    return out;
}

BinString::BinString(std::string bits) : bits_(std::move(bits)) {
    if (bits_.find_first_not_of("01") != std::string::npos) {
        throw DomainError("binary string may only contain 0 and 1: '" + bits_ + "'");
    }
}

std::size_t BinString::weight() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

std::ostream& operator<<(std::ostream& os, const BinString& b) {
    return os << b.bits();
}

// ---------------------------------------------------------------------------
// Stars and bars

BinString sb(const NatString& s) {
    if (s.size() < 2) throw DomainError("stars-and-bars needs a string of length >= 2");
    std::string bits;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1) throw DomainError("stars-and-bars needs positive entries");
        bits.append(static_cast<std::size_t>(s[i] - 1), '0');
        if (i + 1 < s.size()) bits.push_back('1');
    }
    return BinString(std::move(bits));
}

NatString sb_inv(const BinString& b) {
    if (b.weight() == 0) throw DomainError("inverse stars-and-bars needs at least one 1");
    NatString out;
    Integer run = 1;
    for (char c : b.bits()) {
        if (c == '0') {
            ++run;
        } else {
            out.push_back(run);
            run = 1;
        }
    }
    out.push_back(run);
    return out;
}

// ---------------------------------------------------------------------------
// Natural string operators

namespace {

void require_nonempty(const NatString& s, const char* what) {
    if (s.empty()) throw DomainError(std::string(what) + " needs a nonempty string");
}

}  // namespace

NatString eta_plus(const NatString& s) {
    require_nonempty(s, "eta_plus");
    NatString out;
    out.reserve(s.size() + 1);
    out.emplace_back(1);
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

NatString eta_minus(const NatString& s) {
    require_nonempty(s, "eta_minus");
    NatString out = s;
    out.emplace_back(1);
    return out;
}

NatString reversed(const NatString& s) {
    return NatString(s.rbegin(), s.rend());
}

NatString t_g(const NatString& s) {
    require_nonempty(s, "T_G");
    NatString out(s.begin() + 1, s.end());
    out.push_back(s.front());
    return out;
}

NatString t_z(const NatString& s) {
    if (s.size() < 2) throw DomainError("T_Z needs a string of length >= 2");
    if (s.front() >= 2) {
        NatString out = s;
        out.front() -= 1;
        out.back() += 1;
        return out;
    }
    if (s.size() == 2) return NatString{s[1], s[0]};
    NatString out(s.begin() + 2, s.end());
    out.push_back(s[1]);
    out.push_back(s[0]);
    return out;
}

NatString pinch_left(const NatString& s) {
    if (s.empty() || (s.size() == 1 && s[0] == 1)) return s;
    if (s.front() >= 2) {
        NatString out;
        out.reserve(s.size() + 1);
        out.emplace_back(1);
        out.push_back(s.front() - 1);
        out.insert(out.end(), s.begin() + 1, s.end());
        return out;
    }
    NatString out(s.begin() + 1, s.end());
    out.front() += 1;
    return out;
}

NatString pinch_right(const NatString& s) {
    if (s.empty() || (s.size() == 1 && s[0] == 1)) return s;
    NatString out = s;
    if (s.back() >= 2) {
        out.back() -= 1;
        out.emplace_back(1);
        return out;
    }
    out.pop_back();
    out.back() += 1;
    return out;
}

NatString pinch_both(const NatString& s) {
    return pinch_right(pinch_left(s));
}

NatString knead(const NatString& s) {
    if (s.empty()) return s;
    NatString rest = pinch_both(NatString(s.begin() + 1, s.end()));
    rest.push_back(s.front());
    return rest;
}

// ---------------------------------------------------------------------------
// Binary strings and necklaces

BinString rotate_left(const BinString& b, std::size_t r) {
    if (b.empty()) return b;
    r %= b.size();
    std::string bits = b.bits();
    std::rotate(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(r), bits.end());
    return BinString(std::move(bits));
}

BinString rotate_bin(const BinString& b) {
    const std::size_t w = b.weight();
    if (w == 0) throw DomainError("rotation needs a string with at least one 1");
    if (b[0] == '0' || w == 1) return rotate_left(b, 1);
    const std::size_t second_one = b.bits().find('1', 1);
    return rotate_left(b, second_one + 1);
}

bool is_primitive_string(const BinString& b) {
    if (b.empty()) throw DomainError("primitivity of the empty string");
    return minimal_period(b.view()) == b.size();
}

bool is_primitive_string(const NatString& s) {
    if (s.empty()) throw DomainError("primitivity of the empty string");
    return minimal_period(std::span<const Integer>(s)) == s.size();
}

Necklace<BinString> necklace_of(const BinString& b) {
    if (b.empty()) throw DomainError("necklace of the empty string");
    return {rotate_left(b, least_rotation(b.view()))};
}

Necklace<NatString> necklace_of(const NatString& s) {
    if (s.empty()) throw DomainError("necklace of the empty string");
    const std::size_t r = least_rotation(std::span<const Integer>(s));
    NatString out(s.begin() + static_cast<std::ptrdiff_t>(r), s.end());
    out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r));
    return {std::move(out)};
}

// ---------------------------------------------------------------------------
// Alternating strings

namespace {

// rank of the 1 at position pos among all 1s of bits
std::size_t one_rank(const std::string& bits, std::size_t pos) {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(pos), '1'));
}

void validate_alternating(const BinString& bits, std::size_t green) {
    const std::size_t w = bits.weight();
    if (w == 0 || w % 2 != 0) throw DomainError("alternating strings need even, nonzero weight");
    if (green >= bits.size() || bits[green] != '1') {
        throw DomainError("the green marker must point at a 1");
    }
}

}  // namespace

AlternatingString::AlternatingString(BinString bits, std::size_t green)
    : bits_(std::move(bits)), green_(green) {
    validate_alternating(bits_, green_);
}

bool AlternatingString::is_green(std::size_t pos) const {
    if (pos >= bits_.size() || bits_[pos] != '1') return false;
    return one_rank(bits_.bits(), pos) % 2 == one_rank(bits_.bits(), green_) % 2;
}

AlternatingString AlternatingString::parse(std::string_view text) {
    // Markers may be omitted on some 1s; colors are then inferred by alternation.
    std::string bits;
    std::vector<std::pair<std::size_t, bool>> marks;  // (rank of the 1, is green)
    std::size_t ones = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '0') {
            bits.push_back('0');
        } else if (c == '1') {
            if (i + 1 < text.size() && (text[i + 1] == 'g' || text[i + 1] == 'b')) {
                marks.emplace_back(ones, text[i + 1] == 'g');
                ++i;
            }
            bits.push_back('1');
            ++ones;
        } else {
            throw DomainError("unexpected character in alternating string: '" + std::string(text) + "'");
        }
    }
    if (marks.empty()) throw DomainError("alternating string needs at least one colored 1");
    // parity of the ranks that are green
    const std::size_t green_parity = (marks.front().first + (marks.front().second ? 0 : 1)) % 2;
    for (const auto& [rank, is_g] : marks) {
        if ((rank % 2 == green_parity) != is_g) {
            throw DomainError("colors of an alternating string must alternate: '" + std::string(text) + "'");
        }
    }
    std::size_t rank = 0;
    std::size_t green = bits.size();
    for (std::size_t pos = 0; pos < bits.size(); ++pos) {
        if (bits[pos] != '1') continue;
        if (rank % 2 == green_parity) {
            green = pos;
            break;
        }
        ++rank;
    }
    if (green == bits.size()) throw DomainError("alternating string has no green 1");
    return AlternatingString(BinString(std::move(bits)), green);
}

std::string to_string(const AlternatingString& s) {
    std::string out;
    for (std::size_t i = 0; i < s.bits().size(); ++i) {
        if (s.bits()[i] == '0') {
            out.push_back('0');
        } else {
            out.push_back('1');
            out.push_back(s.is_green(i) ? 'g' : 'b');
        }
    }
    return out;
}

bool alternating_equal(const AlternatingString& lhs, const AlternatingString& rhs) {
    const std::size_t n = lhs.bits().size();
    if (n != rhs.bits().size()) return false;
    for (std::size_t r = 0; r < n; ++r) {
        if (rotate_left(lhs.bits(), r) != rhs.bits()) continue;
        const std::size_t moved_green = (lhs.green() + n - r) % n;
        if (rhs.is_green(moved_green)) return true;
    }
    return false;
}

AlternatingNecklace alternating_necklace_of(const AlternatingString& s) {
    Necklace<BinString> underlying = necklace_of(s.bits());
    const std::string& canon = underlying.canonical.bits();
    const std::size_t n = canon.size();
    const std::size_t first_one = canon.find('1');
    const std::size_t second_one = canon.find('1', first_one + 1);
    std::size_t phase = second_one;
    for (std::size_t r = 0; r < n; ++r) {
        if (rotate_left(s.bits(), r) != underlying.canonical) continue;
        const std::size_t moved_green = (s.green() + n - r) % n;
        if (one_rank(canon, moved_green) % 2 == 0) phase = first_one;
    }
    return AlternatingNecklace{std::move(underlying), phase};
}

std::string to_string(const AlternatingNecklace& n) {
    return to_string(AlternatingString(n.underlying.canonical, n.phase));
}

}  // namespace zred
