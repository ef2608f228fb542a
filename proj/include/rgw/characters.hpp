#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "rgw/numeric.hpp"
#include "rgw/partition.hpp"

namespace rgw {

/*
 * Irreducible characters of symmetric groups, computed by the
 * Murnaghan-Nakayama border-strip recursion and memoized on
 * (shape, remaining cycle multiset). Both keys are partitions of the same
 * integer, so the memo is naturally partitioned by degree; each degree's
 * slice can be persisted to an on-disk cache and reloaded on the next run.
 *
 * The cache is advisory. A missing, truncated or malformed file only means
 * the values get recomputed.
 */
class CharacterTable {
public:
    // cache_dir empty: in-memory only. Otherwise load/save per-degree cache
    // files "mn_d<N>.bin" under that directory.
    explicit CharacterTable(std::string cache_dir = "");
    ~CharacterTable();

    CharacterTable(const CharacterTable&) = delete;
    CharacterTable& operator=(const CharacterTable&) = delete;

    // chi_rho(mu). Requires |rho| == |mu| (else throws InvalidPair).
    BigInt character(const Partition& rho, const Partition& mu);

    // character(rho, (1^d)): the dimension of the irreducible representation.
    BigInt dimension(const Partition& rho);

    // Persist all memoized degrees to the cache directory (no-op without one).
    void flush();

    std::size_t memo_size() const;

private:
    using Key = std::pair<Partition, Partition>;

    BigInt compute(const Partition& rho, const Partition& mu);
    void load_degree(int d);
    void save_degree(int d) const;

    std::string cache_dir_;
    mutable std::mutex mutex_;
    std::map<int, std::map<Key, BigInt>> memo_;  // degree -> (shape, cycles) -> value
    std::map<int, bool> degree_loaded_;
    std::map<int, bool> degree_dirty_;
};

}  // namespace rgw
