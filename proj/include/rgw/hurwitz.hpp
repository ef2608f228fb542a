#pragma once

#include <cstdint>

#include "rgw/characters.hpp"
#include "rgw/numeric.hpp"
#include "rgw/partition.hpp"

namespace rgw {

/*
 * Branched-cover counts of a genus-g curve with prescribed ramification:
 * degree d, r marked points with ramification profile mu^1..mu^r, covers
 * possibly disconnected, each weighted by 1/|Aut|. Computed two independent
 * ways (exhaustive monodromy tuples, and the Frobenius character formula)
 * so that each serves as an oracle for the other.
 */
struct CoverCountQuery {
    int degree;
    int genus;  // of the target
    Profile profile;
    bool ordered_contacts = false;

    CoverCountQuery(int d, int g, Profile p, bool ordered = false)
        : degree(d), genus(g), profile(std::move(p)), ordered_contacts(ordered) {}
};

// Euler characteristic the cover's domain is forced to have, by
// Riemann-Hurwitz: d*(2-2g) - delta(profile).
int chi_forced(const CoverCountQuery& q);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

// Count monodromy tuples (a_1,b_1,..,a_g,b_g,s_1,..,s_r) in S_d with
// prod [a_i,b_i] * s_1..s_r = id and s_j of cycle type mu^j, divided by d!.
// The last s_r is solved from the constraint rather than enumerated. The
// product of the remaining iteration domains must not exceed the budget
// (else throws EnumerationTooLarge). threads = 0 picks the hardware count.
Rational count_by_enumeration(const CoverCountQuery& q, std::uint64_t budget = kDefaultBudget,
                              int threads = 0);

// Frobenius formula: sum over rho |- d of (d!/dim rho)^{2g-2} *
// prod_j class_size(mu^j) chi_rho(mu^j) / dim rho.
Rational count_by_characters(const CoverCountQuery& q, CharacterTable& table);

/*
 * Real count for a doublet target (two conjugate copies of the genus-g
 * curve swapped by the involution): a real map is determined by its
 * restriction to one half, so the real count equals the complex count of
 * that half. This instantiation is a modeling decision of the engine, not
 * a closed formula quoted from elsewhere. The associated real datum is
 * chi_real = 2 * chi_forced(q), with the profile read over conjugate pairs.
 */
Rational doublet_real_count(const CoverCountQuery& q, CharacterTable& table);

}  // namespace rgw
