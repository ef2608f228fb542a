#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rgw/numeric.hpp"

namespace rgw {

/*
 * An integer partition in multiplicity encoding: part size k -> number of
 * parts m_k. The multiplicity map is the canonical storage; descending part
 * lists are derived views. Immutable after construction.
 */
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> part_list);
    static Partition from_multiplicities(std::map<int, int> mult);
    static Partition single_row(int d);  // (d)
    static Partition all_ones(int d);    // (1^d)

    const std::map<int, int>& multiplicities() const { return mult_; }
    int multiplicity(int k) const;
    std::vector<int> parts() const;  // weakly decreasing

    int size() const { return size_; }      // |lambda|
    int length() const { return length_; }  // ell(lambda)

    bool operator==(const Partition& o) const { return mult_ == o.mult_; }
    // Orders by descending part lists, largest-first list first; this is the
    // enumeration order of partitions_of() and the key order in tables.
    std::strong_ordering operator<=>(const Partition& o) const;

    std::string to_string() const;  // e.g. "[3,1,1]"

private:
    std::map<int, int> mult_;
    int size_ = 0;
    int length_ = 0;
};

// |Aut(lambda)| = prod m_k!
BigInt aut_order(const Partition& p);

// zeta(lambda) = prod m_k! k^{m_k}; the centralizer order of the cycle type.
BigInt zeta(const Partition& p);

// Number of permutations in S_d of cycle type lambda: d!/zeta(lambda).
BigInt class_size(const Partition& p);

// All partitions of d, each exactly once, in reverse-lexicographic order on
// the descending part lists ((d) first, (1^d) last). Throws InvalidDegree
// for d < 1.
std::vector<Partition> partitions_of(int d);

/*
 * An ordered tuple of partitions of a common degree d: the ramification
 * profile of a counting problem, one partition per marked pair.
 */
class Profile {
public:
    explicit Profile(int degree);  // empty profile
    Profile(int degree, std::vector<Partition> parts);

    int degree() const { return degree_; }
    const std::vector<Partition>& parts() const { return parts_; }
    int count() const { return static_cast<int>(parts_.size()); }

    // delta = sum_i (d - ell(mu^i)); nonnegative.
    int delta() const;

    // prod_i |Aut(mu^i)|
    BigInt aut_order() const;

    // The profile with two extra insertions appended (used for the two
    // marked pairs a normalization gains per resolved node pair).
    Profile with_appended(const Partition& a, const Partition& b) const;
    Profile with_appended(const Partition& a) const;

    bool operator==(const Profile& o) const = default;
    std::strong_ordering operator<=>(const Profile& o) const = default;

    std::string to_string() const;  // e.g. "[[2,1],[3]]"

private:
    int degree_;
    std::vector<Partition> parts_;
};

}  // namespace rgw
