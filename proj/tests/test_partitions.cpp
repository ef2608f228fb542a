#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "rgw/errors.hpp"
#include "rgw/partition.hpp"

using namespace rgw;

namespace {

// Independent oracle: p(n) by Euler's pentagonal-number recurrence.
long pentagonal_p(int n) {
    static std::vector<long> memo{1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        long total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            const long sign = k % 2 == 1 ? 1 : -1;
            if (g1 <= m) total += sign * memo[static_cast<size_t>(m - g1)];
            if (g2 <= m) total += sign * memo[static_cast<size_t>(m - g2)];
        }
        memo.push_back(total);
    }
    return memo[static_cast<size_t>(n)];
}

// Independent oracle: all partitions by recursive descent on the largest
// part, collected as descending part lists.
void descend(int remaining, int max_part, std::vector<int>& acc,
             std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        descend(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> partitions_recursive(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    descend(d, d, acc, out);
    return out;
}

// Independent oracle: cycle type of a permutation given as an image list.
std::vector<int> perm_cycle_type(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> type;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

}  // namespace

TEST_CASE("aut_order on the stated examples") {
    CHECK(aut_order(Partition({5})) == 1);
    CHECK(aut_order(Partition({2, 1})) == 1);
    CHECK(aut_order(Partition({1, 1, 2})) == 2);  // m_1 = 2, m_2 = 1
    CHECK(aut_order(Partition(std::vector<int>(6, 1))) == 720);
}

TEST_CASE("zeta on the stated examples") {
    CHECK(zeta(Partition({7})) == 7);
    CHECK(zeta(Partition({2, 1})) == 2);
    CHECK(zeta(Partition(std::vector<int>(5, 1))) == 120);  // (1^5) -> 5!
    CHECK(zeta(Partition({3, 3, 2})) == 36);                // 2! 3^2 * 1! 2^1
}

TEST_CASE("class_size on the stated examples") {
    CHECK(class_size(Partition(std::vector<int>(4, 1))) == 1);
    CHECK(class_size(Partition({2, 1})) == 3);
    CHECK(class_size(Partition({3})) == 2);
}

TEST_CASE("class sizes match a brute-force scan of S_d") {
    for (int d = 1; d <= 7; ++d) {
        std::map<Partition, long> counts;
        std::vector<int> p(static_cast<size_t>(d));
        std::iota(p.begin(), p.end(), 0);
        do {
            counts[Partition(perm_cycle_type(p))] += 1;
        } while (std::next_permutation(p.begin(), p.end()));
        for (const Partition& lambda : partitions_of(d)) {
            CAPTURE(lambda.to_string());
            CHECK(class_size(lambda) == counts[lambda]);
        }
        CHECK(counts.size() == partitions_of(d).size());
    }
}

TEST_CASE("class sizes sum to d! for d <= 12") {
    for (int d = 1; d <= 12; ++d) {
        BigInt sum = 0;
        for (const Partition& lambda : partitions_of(d)) sum += class_size(lambda);
        CHECK(sum == factorial(static_cast<unsigned>(d)));
    }
}

TEST_CASE("zeta is aut_order times the product of the parts") {
    for (int d = 1; d <= 12; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            BigInt prod = 1;
            for (int part : lambda.parts()) prod *= part;
            CHECK(zeta(lambda) == aut_order(lambda) * prod);
        }
    }
}

TEST_CASE("partitions_of counts match the pentagonal recurrence") {
    for (int d = 1; d <= 30; ++d)
        CHECK(partitions_of(d).size() == static_cast<size_t>(pentagonal_p(d)));
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(4).size() == 5);
}

TEST_CASE("partitions_of agrees with an independent recursive generator") {
    for (int d = 1; d <= 14; ++d) {
        const auto enumerated = partitions_of(d);
        const auto expected = partitions_recursive(d);
        REQUIRE(enumerated.size() == expected.size());
        // Same order: the recursive descent also emits reverse-lexicographic.
        for (size_t i = 0; i < enumerated.size(); ++i)
            CHECK(enumerated[i].parts() == expected[i]);
    }
}

TEST_CASE("enumeration order is reverse-lexicographic and duplicate-free") {
    CHECK(partitions_of(1) == std::vector<Partition>{Partition({1})});
    const auto four = partitions_of(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0].parts() == std::vector<int>{4});
    CHECK(four[1].parts() == std::vector<int>{3, 1});
    CHECK(four[2].parts() == std::vector<int>{2, 2});
    CHECK(four[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(four[4].parts() == std::vector<int>{1, 1, 1, 1});
    for (int d = 1; d <= 16; ++d) {
        const auto all = partitions_of(d);
        for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
    }
}

TEST_CASE("partition construction and views") {
    const Partition p({1, 3, 1});  // order of the input list is irrelevant
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.parts() == std::vector<int>{3, 1, 1});
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.multiplicity(2) == 0);
    CHECK(p.to_string() == "[3,1,1]");
    CHECK(Partition::single_row(4).parts() == std::vector<int>{4});
    CHECK(Partition::all_ones(3).parts() == std::vector<int>{1, 1, 1});
    CHECK(Partition::from_multiplicities({{2, 2}, {5, 1}}).parts() == std::vector<int>{5, 2, 2});
    CHECK_THROWS_AS(Partition({0}), InvalidDegree);
    CHECK_THROWS_AS(Partition({3, -1}), InvalidDegree);
    CHECK_THROWS_AS(partitions_of(0), InvalidDegree);
}

TEST_CASE("profiles validate degrees and expose delta") {
    const Profile empty(3);
    CHECK(empty.delta() == 0);
    CHECK(empty.count() == 0);
    CHECK(empty.aut_order() == 1);

    const Profile pr(3, {Partition({2, 1}), Partition({3})});
    CHECK(pr.delta() == (3 - 2) + (3 - 1));
    CHECK(pr.aut_order() == 1);
    CHECK(pr.to_string() == "[[2,1],[3]]");

    const Profile extended = pr.with_appended(Partition({1, 1, 1}), Partition({1, 1, 1}));
    CHECK(extended.count() == 4);
    CHECK(extended.delta() == pr.delta());  // (1^3) adds nothing to delta
    CHECK(extended.aut_order() == 36);      // two factors of 3!

    CHECK_THROWS_AS(Profile(3, {Partition({2})}), InvalidProfile);
    CHECK_THROWS_AS(Profile(0), InvalidDegree);
}
