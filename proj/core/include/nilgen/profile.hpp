#pragma once

#include <string>
#include <vector>

#include "nilgen/group.hpp"

namespace nilgen {

// One Sylow subgroup summarized as (p, rank, chain length). This is the
// minimal data determining generation probabilities and both sampling
// bounds for a finite nilpotent group.
struct ProfileEntry {
    Integer prime;
    long rank = 0;    // >= 1
    long length = 0;  // >= rank

    bool operator==(const ProfileEntry&) const = default;
};

class NilpotentProfile {
public:
    NilpotentProfile() = default;
    // Validates: primes prime and strictly increasing, 1 <= rank <= length.
    explicit NilpotentProfile(std::vector<ProfileEntry> entries);

    const std::vector<ProfileEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    long rank() const;  // max rank over entries, 0 when empty
    long len() const;   // sum of lengths, 0 when empty

    bool operator==(const NilpotentProfile&) const = default;

private:
    std::vector<ProfileEntry> entries_;
};

// Per prime p dividing |G|: rank = number of p-power factors,
// length = sum of their exponents.
NilpotentProfile sylow_profile(const AbelianGroup& g);

// Same primes and ranks, lengths collapsed to ranks: the profile of
// G modulo its Frattini subgroup (elementary abelian per prime).
NilpotentProfile frattini_quotient_profile(const AbelianGroup& g);

long rank(const AbelianGroup& g);
long len(const AbelianGroup& g);
long rank(const NilpotentProfile& profile);
long len(const NilpotentProfile& profile);

// "p:r:l[,p:r:l...]"; empty string is the trivial profile.
NilpotentProfile parse_profile(const std::string& text);
std::string profile_to_string(const NilpotentProfile& profile);

}  // namespace nilgen
