#include "hsdirac/weight.hpp"

#include "hsdirac/errors.hpp"

#include <algorithm>

namespace hsdirac {

GroupId::GroupId(int n) : n_(n) {
    if (n < 2) throw OutOfRange("Spin(n) requires n >= 2, got " + std::to_string(n));
}

Weight::Weight(GroupId group, std::vector<HalfInt> entries) : group_(group), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(group_.rank())) {
        throw ParseError(group_.name() + " weights have " + std::to_string(group_.rank()) + " entries, got " +
                         std::to_string(entries_.size()));
    }
    const bool integral = entries_.front().is_integer();
    for (const auto& e : entries_) {
        if (e.is_integer() != integral) {
            throw ParseError("weight mixes integer and half-integer entries");
        }
    }
}

Weight Weight::from_doubled(GroupId group, const std::vector<long>& doubled) {
    std::vector<HalfInt> e;
    e.reserve(doubled.size());
    for (long d : doubled) e.push_back(HalfInt::from_doubled(BigInt(d)));
    return {group, std::move(e)};
}

Weight Weight::parse(GroupId group, std::string_view text) {
    std::vector<HalfInt> e;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        e.push_back(HalfInt::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return {group, std::move(e)};
}

bool Weight::is_integral() const { return entries_.front().is_integer(); }

bool Weight::is_dominant() const {
    const std::size_t k = entries_.size();
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (i + 2 == k && group_.is_even()) {
            if (entries_[i] < entries_[i + 1].abs()) return false;
        } else if (entries_[i] < entries_[i + 1]) {
            return false;
        }
    }
    if (group_.is_odd() && entries_.back().sign() < 0) return false;
    return true;
}

std::string Weight::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += entries_[i].to_string();
    }
    return s;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.group_ <=> b.group_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

void require_dominant(const Weight& w, std::string_view what) {
    if (!w.is_dominant()) {
        throw NotDominant(std::string(what) + ": weight (" + w.to_string() + ") is not dominant for " +
                          w.group().name());
    }
}

}  // namespace hsdirac
