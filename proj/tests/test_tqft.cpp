#include <doctest.h>

#include <map>

#include "rgw/errors.hpp"
#include "rgw/tqft.hpp"

using namespace rgw;

namespace {

Profile profile_of(int d, std::initializer_list<std::vector<int>> parts) {
    std::vector<Partition> mus;
    for (const auto& p : parts) mus.emplace_back(p);
    return Profile(d, std::move(mus));
}

}  // namespace

TEST_CASE("target curves: euler characteristic bookkeeping") {
    const TargetCurve d1 = TargetCurve::doublet(1);
    CHECK(d1.euler_char() == 0);
    CHECK(TargetCurve::doublet(0).euler_char() == 4);
    CHECK(TargetCurve::doublet(2).euler_char() == -4);
    CHECK(TargetCurve::connected(0, "circle").euler_char() == 2);
    CHECK(TargetCurve::connected(2, "empty").euler_char() == -2);

    // Pinching a conjugate pair of loops keeps the smoothing fixed.
    const TargetCurve pinched = TargetCurve::doublet(2).degenerate();
    CHECK(pinched.node_pairs == 1);
    CHECK(pinched.genus == 1);
    CHECK(pinched.euler_char() == TargetCurve::doublet(2).euler_char());

    // Resolving the nodes gains 4 per pair and two marked pairs per pair.
    const TargetCurve resolved = pinched.normalization();
    CHECK(resolved.node_pairs == 0);
    CHECK(resolved.marked_pairs == pinched.marked_pairs + 2);
    CHECK(resolved.euler_char() == pinched.euler_char() + 4);

    const TargetCurve conn = TargetCurve::connected(3, "two-circles", 1).degenerate();
    CHECK(conn.genus == 1);
    CHECK(conn.euler_char() == TargetCurve::connected(3, "two-circles", 1).euler_char());
    CHECK(conn.normalization().euler_char() == conn.euler_char() + 4);

    CHECK_THROWS_AS(TargetCurve::doublet(0).degenerate(), WrongTarget);
    CHECK_THROWS_AS(TargetCurve::connected(1, "").degenerate(), WrongTarget);
}

TEST_CASE("virtual dimension formula") {
    // d=1 onto a sphere, chi of the domain equal to chi of the target.
    CHECK(virtual_dimension(1, 2, TargetCurve::connected(0, ""), Profile(1)) == 0);
    // d=2 onto a torus-like target with one full ramification insertion.
    CHECK(virtual_dimension(2, -2, TargetCurve::doublet(1), profile_of(2, {{2}})) == 0);
    // Trivial insertions do not move delta.
    const int base = virtual_dimension(3, 4, TargetCurve::doublet(1), Profile(3));
    const Profile trivial = Profile(3).with_appended(Partition::all_ones(3), Partition::all_ones(3));
    CHECK(virtual_dimension(3, 4, TargetCurve::doublet(1), trivial) == base);

    CHECK_THROWS_AS(virtual_dimension(2, 0, TargetCurve::doublet(1), Profile(3)), InvalidProfile);
}

TEST_CASE("invariant tables: implicit zeros and the parity guard") {
    InvariantTable table(TargetCurve::doublet(1, 1));
    const Profile pr = profile_of(2, {{2}});
    // b = 2*0 - chi - 2; chi = -2 gives b = 0.
    table.set(2, -2, pr, Rational(1, 2));
    CHECK(table.get(2, -2, pr) == Rational(1, 2));
    CHECK(table.get(2, -4, pr) == 0);  // absent reads as zero
    CHECK(table.entries().size() == 1);

    table.set(2, -2, pr, Rational(0));  // zero erases
    CHECK(table.entries().empty());

    // chi = -1 makes b odd: nonzero refused, zero accepted.
    CHECK_THROWS_AS(table.set(2, -1, pr, Rational(1)), InconsistentTable);
    table.set(2, -1, pr, Rational(0));
    CHECK(table.entries().empty());
}

TEST_CASE("biseries arithmetic") {
    BiSeries s;
    CHECK(s.is_zero());
    CHECK(s.to_string() == "0");
    s.add(1, 0, Rational(1, 2));  // (1/2) t^{1/2}
    s.add(-4, 2, Rational(3));    // 3 t^{-2} u^2
    CHECK(s.coeff(1, 0) == Rational(1, 2));
    CHECK(s.coeff(-4, 2) == 3);
    CHECK(s.coeff(0, 0) == 0);
    s.add(1, 0, Rational(-1, 2));  // cancel: the key disappears
    CHECK(s.coeffs().size() == 1);

    BiSeries t;
    t.add(-4, 2, Rational(1));
    t += s;
    CHECK(t.coeff(-4, 2) == 4);
    t.scale(Rational(1, 4));
    CHECK(t.coeff(-4, 2) == 1);
    t.shift(4, -2);
    CHECK(t.coeff(0, 0) == 1);
    CHECK(t.to_string() == "1");

    BiSeries u;
    u.add(3, 1, Rational(2));
    CHECK(u.to_string() == "2*t^(3/2)*u^1");
    u.scale(Rational(0));
    CHECK(u.is_zero());
}

TEST_CASE("coefficient chain values and identities") {
    const VfcChain row_d = vfc_coefficient_chain(Partition({5}));
    CHECK(row_d.c_split == 5);
    CHECK(row_d.deg_phi == 1);
    CHECK(row_d.deg_q0 == 5);

    const VfcChain row_11 = vfc_coefficient_chain(Partition({1, 1}));
    CHECK(row_11.c_split == Rational(1, 2));
    CHECK(row_11.deg_phi == 2);
    CHECK(row_11.deg_q0 == 1);

    const VfcChain row_21 = vfc_coefficient_chain(Partition({2, 1}));
    CHECK(row_21.c_split == 2);
    CHECK(row_21.deg_phi == 1);
    CHECK(row_21.deg_q0 == 2);

    for (int d = 1; d <= 12; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            const VfcChain chain = vfc_coefficient_chain(lambda);
            CHECK(chain.c_split * Rational(chain.deg_phi) == Rational(chain.deg_q0));
            BigInt prod = 1;
            for (int part : lambda.parts()) prod *= part;
            CHECK(chain.deg_q0 == prod);
            CHECK(Rational(zeta(lambda)) / Rational(aut_order(lambda)) == Rational(chain.deg_q0));
        }
    }
}

TEST_CASE("dimension invariance under one degeneration") {
    CHECK(dimension_invariance_check(1, 0, Profile(1), Partition({1}), TargetCurve::doublet(1)));
    CHECK(dimension_invariance_check(4, -6, Profile(4), Partition({4}), TargetCurve::doublet(2)));
    for (int d = 1; d <= 6; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            for (int chi = -9; chi <= 9; chi += 3) {
                for (const Partition& mu : partitions_of(d)) {
                    const Profile pr(d, {mu});
                    CHECK(dimension_invariance_check(d, chi, pr, lambda, TargetCurve::doublet(2, 1)));
                    CHECK(dimension_invariance_check(d, chi, pr, lambda,
                                                     TargetCurve::connected(2, "rl", 1)));
                }
            }
        }
    }
    CHECK_THROWS_AS(dimension_invariance_check(3, 0, Profile(3), Partition({2}),
                                               TargetCurve::doublet(1)),
                    InvalidProfile);
}

TEST_CASE("splitting rule on hand-built tables") {
    // Half data d=2, torus half: smoothing value 2 decomposes as
    // zeta((2)) * 1/2 + zeta((1,1)) * 1/2.
    const TargetCurve smoothing = TargetCurve::doublet(1);
    const TargetCurve normalization = smoothing.degenerate().normalization();
    REQUIRE(normalization.marked_pairs == 2);

    InvariantTable table(normalization);
    const int chi = 0;  // chi_real of the d=2 torus-half doublet
    table.set(2, chi + 4 * 1, profile_of(2, {{2}, {2}}), Rational(1, 2));
    table.set(2, chi + 4 * 2, profile_of(2, {{1, 1}, {1, 1}}), Rational(1, 2));
    CHECK(split_invariant(table, 2, chi, Profile(2)) == 2);

    // Missing rows read as zero: drop the (1,1) row.
    InvariantTable partial(normalization);
    partial.set(2, chi + 4, profile_of(2, {{2}, {2}}), Rational(1, 2));
    CHECK(split_invariant(partial, 2, chi, Profile(2)) == 1);

    // d=3 worked decomposition: 3 = 3*(1/3) + 2*(1/2) + 6*(1/6).
    InvariantTable table3(normalization);
    const int chi3 = 0;
    table3.set(3, chi3 + 4, profile_of(3, {{3}, {3}}), Rational(1, 3));
    table3.set(3, chi3 + 8, profile_of(3, {{2, 1}, {2, 1}}), Rational(1, 2));
    table3.set(3, chi3 + 12, profile_of(3, {{1, 1, 1}, {1, 1, 1}}), Rational(1, 6));
    CHECK(split_invariant(table3, 3, chi3, Profile(3)) == 3);

    // d=1 has the single lambda = (1) with zeta 1 and shift 4.
    InvariantTable table1(normalization);
    table1.set(1, 4 + 4, profile_of(1, {{1}, {1}}), Rational(7, 3));
    CHECK(split_invariant(table1, 1, 4, Profile(1)) == Rational(7, 3));

    // Wrong targets are rejected: nodes present, or marked pairs off by one.
    InvariantTable nodal(smoothing.degenerate());
    CHECK_THROWS_AS(split_invariant(nodal, 2, chi, Profile(2)), WrongTarget);
    InvariantTable narrow(TargetCurve::doublet(0, 1));
    CHECK_THROWS_AS(split_invariant(narrow, 2, chi, Profile(2)), WrongTarget);
}

TEST_CASE("series assembly exponents") {
    // Empty table: zero series.
    CHECK(series_assemble(InvariantTable(TargetCurve::doublet(1)), 2).is_zero());

    // Single entry with b = 0 and k = 0: value * t^{-chi/2}.
    InvariantTable one(TargetCurve::connected(0, ""));
    one.set(1, 2, Profile(1), Rational(5));  // b = 1*2 - 2 - 0 = 0
    const BiSeries s = series_assemble(one, 1);
    CHECK(s.coeffs().size() == 1);
    CHECK(s.coeff(-2, 0) == 5);  // t^{-1}

    // Level shifts the u-exponent by d*k and the t-exponent against it.
    InvariantTable lev(TargetCurve::connected(0, "", 0, 0, 3));
    lev.set(2, 4, Profile(2), Rational(1));  // b = 2*2 - 4 = 0, e = 0 + 2*3
    const BiSeries sl = series_assemble(lev, 2);
    CHECK(sl.coeff(-4 - 12, 6) == 1);

    // Other degrees in the same table are ignored.
    InvariantTable mixed(TargetCurve::connected(0, ""));
    mixed.set(1, 2, Profile(1), Rational(5));
    mixed.set(2, 4, Profile(2), Rational(9));
    CHECK(series_assemble(mixed, 1).coeff(-2, 0) == 5);
    CHECK(series_assemble(mixed, 1).coeffs().size() == 1);
}

TEST_CASE("series splitting identity on the d=2 instance") {
    const TargetCurve smoothing = TargetCurve::doublet(1);
    const TargetCurve normalization = smoothing.degenerate().normalization();

    InvariantTable smooth_table(smoothing);
    smooth_table.set(2, 0, Profile(2), Rational(2));
    const BiSeries lhs = series_assemble(smooth_table, 2);

    std::map<Partition, BiSeries> by_lambda;
    InvariantTable t2(normalization);
    t2.set(2, 4, profile_of(2, {{2}, {2}}), Rational(1, 2));
    by_lambda.emplace(Partition({2}), series_assemble(t2, 2));
    InvariantTable t11(normalization);
    t11.set(2, 8, profile_of(2, {{1, 1}, {1, 1}}), Rational(1, 2));
    by_lambda.emplace(Partition({1, 1}), series_assemble(t11, 2));

    const BiSeries rhs = split_series(by_lambda, 2);
    CHECK(lhs == rhs);
    // The smoothing's chi = 0 term sits at t^0 u^0 with coefficient 2.
    CHECK(rhs.coeff(0, 0) == 2);

    // Dropping a factor breaks the equality (the t^{2 len} shifts differ).
    std::map<Partition, BiSeries> unshifted = by_lambda;
    unshifted[Partition({1, 1})] = by_lambda.at(Partition({2}));
    CHECK(!(split_series(unshifted, 2) == lhs));

    // Missing lambda is an error.
    by_lambda.erase(Partition({1, 1}));
    CHECK_THROWS_AS(split_series(by_lambda, 2), IncompleteInput);

    // d=1: a bare t^2 shift.
    BiSeries in;
    in.add(-2, 1, Rational(3, 7));
    std::map<Partition, BiSeries> single{{Partition({1}), in}};
    const BiSeries shifted = split_series(single, 1);
    CHECK(shifted.coeff(-2 + 4, 1) == Rational(3, 7));
    CHECK(shifted.coeffs().size() == 1);
}

TEST_CASE("pair invariants divide out profile automorphisms") {
    InvariantTable table(TargetCurve::doublet(1, 2));
    const Profile ones = profile_of(2, {{1, 1}, {1, 1}});
    // b = 0 at chi = -2*delta = 0 for trivial insertions on the flat doublet.
    table.set(2, 0, ones, Rational(3));
    CHECK(pair_invariant(table, 2, 0, ones) == Rational(3, 4));  // (2!)^2 = 4

    const Profile twos = profile_of(2, {{2}, {2}});
    table.set(2, -4, twos, Rational(1, 2));
    CHECK(pair_invariant(table, 2, -4, twos) == Rational(1, 2));  // divisor 1

    CHECK(pair_invariant(table, 2, 6, ones) == 0);  // absent entry
}
