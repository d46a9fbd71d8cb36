#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zred/integer.hpp"

namespace zred {

/// Finite sequence of positive integers (q1, ..., ql).
using NatString = std::vector<Integer>;

/// "3,1,1"; the empty string renders as "".
std::string to_string(const NatString& s);
/// Parses comma-separated positive integers; throws DomainError otherwise.
NatString parse_nat_string(std::string_view text);

NatString nat(std::initializer_list<long long> entries);

/// Finite sequence over {0,1}, stored as '0'/'1' characters.
class BinString {
public:
    BinString() = default;
    /// Throws DomainError if bits contains anything but '0' and '1'.
    explicit BinString(std::string bits);

    const std::string& bits() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    char operator[](std::size_t i) const { return bits_[i]; }
    std::span<const char> view() const { return {bits_.data(), bits_.size()}; }

    std::size_t weight() const;

    friend bool operator==(const BinString&, const BinString&) = default;
    friend auto operator<=>(const BinString&, const BinString&) = default;

private:
    std::string bits_;
};

std::ostream& operator<<(std::ostream& os, const BinString& b);
inline const std::string& to_string(const BinString& b) { return b.bits(); }

}  // namespace zred
