#include "nilgen/profile.hpp"

#include <algorithm>
#include <sstream>

#include "nilgen/errors.hpp"
#include "nilgen/factor.hpp"

namespace nilgen {

NilpotentProfile::NilpotentProfile(std::vector<ProfileEntry> entries)
    : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const ProfileEntry& e = entries_[i];
        if (!is_probable_prime(e.prime))
            throw invalid_input_error("profile prime " + e.prime.get_str() + " is not prime");
        if (e.rank < 1) throw invalid_input_error("profile rank must be >= 1");
        if (e.length < e.rank)
            throw invalid_input_error("profile length must be >= rank");
        if (i > 0 && cmp(entries_[i - 1].prime, e.prime) >= 0)
            throw invalid_input_error("profile primes must be strictly increasing");
    }
}

long NilpotentProfile::rank() const {
    long r = 0;
    for (const auto& e : entries_) r = std::max(r, e.rank);
    return r;
}

long NilpotentProfile::len() const {
    long total = 0;
    for (const auto& e : entries_) total += e.length;
    return total;
}

NilpotentProfile sylow_profile(const AbelianGroup& g) {
    std::vector<ProfileEntry> entries;
    for (const auto& f : g.factors()) {
        if (!entries.empty() && entries.back().prime == f.prime) {
            entries.back().rank += 1;
            entries.back().length += static_cast<long>(f.exponent);
        } else {
            entries.push_back({f.prime, 1, static_cast<long>(f.exponent)});
        }
    }
    return NilpotentProfile(std::move(entries));
}

NilpotentProfile frattini_quotient_profile(const AbelianGroup& g) {
    const NilpotentProfile sylow = sylow_profile(g);
    std::vector<ProfileEntry> entries;
    for (ProfileEntry e : sylow.entries()) {
        e.length = e.rank;
        entries.push_back(e);
    }
    return NilpotentProfile(std::move(entries));
}

long rank(const AbelianGroup& g) { return sylow_profile(g).rank(); }
long len(const AbelianGroup& g) { return sylow_profile(g).len(); }
long rank(const NilpotentProfile& profile) { return profile.rank(); }
long len(const NilpotentProfile& profile) { return profile.len(); }

NilpotentProfile parse_profile(const std::string& text) {
    std::vector<ProfileEntry> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t c1 = item.find(':');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : item.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw invalid_input_error("profile entry '" + item + "' is not of the form p:r:l");
        try {
            ProfileEntry e;
            e.prime = Integer(item.substr(0, c1));
            e.rank = std::stol(item.substr(c1 + 1, c2 - c1 - 1));
            e.length = std::stol(item.substr(c2 + 1));
            entries.push_back(std::move(e));
        } catch (const std::invalid_argument&) {
            throw invalid_input_error("profile entry '" + item + "' is not of the form p:r:l");
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const ProfileEntry& a, const ProfileEntry& b) { return cmp(a.prime, b.prime) < 0; });
    return NilpotentProfile(std::move(entries));
}

std::string profile_to_string(const NilpotentProfile& profile) {
    std::string out;
    for (const auto& e : profile.entries()) {
        if (!out.empty()) out += ',';
        out += e.prime.get_str() + ":" + std::to_string(e.rank) + ":" + std::to_string(e.length);
    }
    return out;
}

}  // namespace nilgen
