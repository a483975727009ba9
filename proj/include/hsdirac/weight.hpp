#pragma once

#include "hsdirac/rational.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hsdirac {

/// Spin(n), n >= 2. Rank and root-system type are derived from n.
class GroupId {
public:
    explicit GroupId(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int rank() const { return n_ / 2; }
    [[nodiscard]] bool is_odd() const { return n_ % 2 == 1; }  // B_k
    [[nodiscard]] bool is_even() const { return !is_odd(); }   // D_k
    [[nodiscard]] std::string name() const { return "Spin(" + std::to_string(n_) + ")"; }

    friend bool operator==(const GroupId&, const GroupId&) = default;
    friend auto operator<=>(const GroupId&, const GroupId&) = default;

private:
    int n_;
};

/// A weight of Spin(n): rank-many entries, all integers or all strict
/// half-integers. Dominance is not enforced here; operations that need it
/// check it and throw NotDominant.
class Weight {
public:
    Weight(GroupId group, std::vector<HalfInt> entries);

    /// Convenience constructor from doubled integers, e.g. {3, 1} for (3/2, 1/2).
    static Weight from_doubled(GroupId group, const std::vector<long>& doubled);

    /// Parses "3/2,3/2,1/2". Throws ParseError.
    static Weight parse(GroupId group, std::string_view text);

    [[nodiscard]] const GroupId& group() const { return group_; }
    [[nodiscard]] const std::vector<HalfInt>& entries() const { return entries_; }
    [[nodiscard]] const HalfInt& operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] bool is_integral() const;

    [[nodiscard]] bool is_dominant() const;

    /// "3/2,1/2"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);
    friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << w.to_string() << ')'; }

private:
    GroupId group_;
    std::vector<HalfInt> entries_;
};

/// Throws NotDominant with a message naming `what`.
void require_dominant(const Weight& w, std::string_view what);

}  // namespace hsdirac
