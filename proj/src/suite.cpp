#include "rgw/suite.hpp"

#include <random>
#include <set>
#include <sstream>

#include "rgw/characters.hpp"
#include "rgw/hurwitz.hpp"
#include "rgw/partition.hpp"
#include "rgw/signs.hpp"
#include "rgw/tqft.hpp"

namespace rgw {

namespace {

std::string q_str(const Rational& q) { return q.get_str(); }

struct Instance {
    int d;
    int half_genus;  // of the smoothing
    Profile base;
};

// d <= 4, half-genus in {1,2}, base profile drawn from the empty profile,
// one near-trivial insertion (2,1^{d-2}) and one full insertion (d).
std::vector<Instance> splitting_instances() {
    std::vector<Instance> out;
    for (int d = 1; d <= 4; ++d) {
        std::set<Profile> bases;
        bases.insert(Profile(d));
        if (d >= 2) {
            std::vector<int> near{2};
            near.insert(near.end(), static_cast<size_t>(d - 2), 1);
            bases.insert(Profile(d, {Partition(near)}));
        }
        bases.insert(Profile(d, {Partition::single_row(d)}));
        for (int g = 1; g <= 2; ++g)
            for (const Profile& base : bases) out.push_back({d, g, base});
    }
    return out;
}

// Both sides of the splitting identity for one instance, all values from
// the cover-count oracle. Returns a mismatch description or the empty
// string.
std::string check_split_instance(const Instance& inst, CharacterTable& table, bool enum_crosscheck) {
    const CoverCountQuery smoothing_query(inst.d, inst.half_genus, inst.base);
    const int chi_real = 2 * chi_forced(smoothing_query);
    const Rational lhs = doublet_real_count(smoothing_query, table);

    if (enum_crosscheck) {
        const Rational lhs_enum = count_by_enumeration(smoothing_query);
        if (lhs_enum != lhs)
            return "enumeration " + q_str(lhs_enum) + " != characters " + q_str(lhs) + " at d=" +
                   std::to_string(inst.d) + " g=" + std::to_string(inst.half_genus) + " profile=" +
                   inst.base.to_string();
    }

    const TargetCurve smoothing = TargetCurve::doublet(inst.half_genus, inst.base.count());
    const TargetCurve normalization = smoothing.degenerate().normalization();
    InvariantTable norm_table(normalization);
    for (const Partition& lambda : partitions_of(inst.d)) {
        const Profile extended = inst.base.with_appended(lambda, lambda);
        const CoverCountQuery norm_query(inst.d, inst.half_genus - 1, extended);
        const Rational v = doublet_real_count(norm_query, table);
        if (enum_crosscheck) {
            const Rational v_enum = count_by_enumeration(norm_query);
            if (v_enum != v)
                return "enumeration " + q_str(v_enum) + " != characters " + q_str(v) +
                       " on normalization at d=" + std::to_string(inst.d) + " lambda=" +
                       lambda.to_string();
        }
        norm_table.set(inst.d, chi_real + 4 * lambda.length(), extended, v);
    }

    const Rational rhs = split_invariant(norm_table, inst.d, chi_real, inst.base);
    if (rhs != lhs)
        return "split sum " + q_str(rhs) + " != smoothing value " + q_str(lhs) + " at d=" +
               std::to_string(inst.d) + " g=" + std::to_string(inst.half_genus) + " profile=" +
               inst.base.to_string();
    return "";
}

CriterionResult criterion_splitting(CharacterTable& table) {
    CriterionResult r{1, "splitting identity on oracle instantiations", true, ""};
    int n = 0;
    for (const Instance& inst : splitting_instances()) {
        const std::string err = check_split_instance(inst, table, inst.half_genus == 1);
        if (!err.empty()) {
            r.passed = false;
            r.detail = err;
            return r;
        }
        ++n;
    }
    r.detail = std::to_string(n) + " instances (d <= 4, half-genus <= 2), exact";
    return r;
}

CriterionResult criterion_worked_instances(CharacterTable& table) {
    CriterionResult r{2, "worked splitting instances d=2 and d=3", true, ""};
    auto fail = [&](const std::string& msg) {
        r.passed = false;
        r.detail = msg;
        return r;
    };

    const Partition two({2}), one_one({1, 1});
    if (zeta(two) != 2 || zeta(one_one) != 2) return fail("zeta values of the d=2 partitions");
    const Rational h1_2 = doublet_real_count(CoverCountQuery(2, 1, Profile(2)), table);
    const Rational h0_22 = doublet_real_count(CoverCountQuery(2, 0, Profile(2, {two, two})), table);
    const Rational h0_11 =
        doublet_real_count(CoverCountQuery(2, 0, Profile(2, {one_one, one_one})), table);
    if (h1_2 != 2) return fail("d=2 smoothing value " + q_str(h1_2) + " != 2");
    if (h0_22 != Rational(1, 2)) return fail("d=2 term at (2): " + q_str(h0_22) + " != 1/2");
    if (h0_11 != Rational(1, 2)) return fail("d=2 term at (1,1): " + q_str(h0_11) + " != 1/2");
    if (Rational(zeta(two)) * h0_22 + Rational(zeta(one_one)) * h0_11 != h1_2)
        return fail("d=2 splitting sum mismatch");

    const Partition three({3}), two_one({2, 1}), ones3({1, 1, 1});
    if (zeta(three) != 3 || zeta(two_one) != 2 || zeta(ones3) != 6)
        return fail("zeta values of the d=3 partitions");
    const Rational h1_3 = doublet_real_count(CoverCountQuery(3, 1, Profile(3)), table);
    const Rational h0_33 = doublet_real_count(CoverCountQuery(3, 0, Profile(3, {three, three})), table);
    const Rational h0_21 =
        doublet_real_count(CoverCountQuery(3, 0, Profile(3, {two_one, two_one})), table);
    const Rational h0_13 = doublet_real_count(CoverCountQuery(3, 0, Profile(3, {ones3, ones3})), table);
    if (h1_3 != 3) return fail("d=3 smoothing value " + q_str(h1_3) + " != 3");
    if (h0_33 != Rational(1, 3)) return fail("d=3 term at (3): " + q_str(h0_33) + " != 1/3");
    if (h0_21 != Rational(1, 2)) return fail("d=3 term at (2,1): " + q_str(h0_21) + " != 1/2");
    if (h0_13 != Rational(1, 6)) return fail("d=3 term at (1,1,1): " + q_str(h0_13) + " != 1/6");
    if (Rational(3) * h0_33 + Rational(2) * h0_21 + Rational(6) * h0_13 != h1_3)
        return fail("d=3 splitting sum mismatch");

    r.detail = "2 = 2*(1/2) + 2*(1/2) and 3 = 3*(1/3) + 2*(1/2) + 6*(1/6), exact";
    return r;
}

std::vector<CoverCountQuery> oracle_query_set() {
    std::vector<CoverCountQuery> queries;
    for (int d = 1; d <= 4; ++d) {
        const auto parts = partitions_of(d);
        for (int g = 0; g <= 1; ++g) {
            for (int r = 0; r <= 3; ++r) {
                // All ordered r-tuples of partitions of d.
                std::vector<size_t> index(static_cast<size_t>(r), 0);
                for (;;) {
                    std::vector<Partition> mus;
                    for (size_t i : index) mus.push_back(parts[i]);
                    queries.emplace_back(d, g, Profile(d, std::move(mus)));
                    int pos = r - 1;
                    while (pos >= 0 && ++index[static_cast<size_t>(pos)] == parts.size()) {
                        index[static_cast<size_t>(pos)] = 0;
                        --pos;
                    }
                    if (pos < 0) break;
                }
            }
        }
    }
    return queries;
}

CriterionResult criterion_oracle_equivalence(CharacterTable& table) {
    CriterionResult r{3, "oracle equivalence: enumeration vs characters", true, ""};
    int n = 0;
    for (const CoverCountQuery& q : oracle_query_set()) {
        const Rational by_enum = count_by_enumeration(q);
        const Rational by_char = count_by_characters(q, table);
        if (by_enum != by_char) {
            r.passed = false;
            r.detail = "d=" + std::to_string(q.degree) + " g=" + std::to_string(q.genus) +
                       " profile=" + q.profile.to_string() + ": " + q_str(by_enum) + " != " +
                       q_str(by_char);
            return r;
        }
        ++n;
    }
    r.detail = std::to_string(n) + " queries (d <= 4, g <= 1, r <= 3), exact";
    return r;
}

CriterionResult criterion_coefficient_chain() {
    CriterionResult r{4, "coefficient chain c_split*deg_phi == deg_q0 == prod of parts", true, ""};
    int n = 0;
    for (int d = 1; d <= 12; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            const VfcChain chain = vfc_coefficient_chain(lambda);
            BigInt prod_parts = 1;
            for (int part : lambda.parts()) prod_parts *= part;
            const bool ok = chain.c_split * Rational(chain.deg_phi) == Rational(chain.deg_q0) &&
                            chain.deg_q0 == prod_parts;
            if (!ok) {
                r.passed = false;
                r.detail = "chain fails at lambda=" + lambda.to_string();
                return r;
            }
            ++n;
        }
    }
    r.detail = std::to_string(n) + " partitions (d <= 12), exact";
    return r;
}

CriterionResult criterion_dimension_invariance() {
    CriterionResult r{5, "virtual dimension invariance under degeneration", true, ""};
    std::mt19937_64 rng(0x5eed);
    int n = 0;
    for (int d = 1; d <= 8; ++d) {
        const auto parts = partitions_of(d);
        for (const Partition& lambda : parts) {
            for (int fuzz = 0; fuzz < 6; ++fuzz) {
                const int g = 1 + static_cast<int>(rng() % 3);
                const int chi = static_cast<int>(rng() % 81) - 40;
                const int nprof = static_cast<int>(rng() % 4);
                std::vector<Partition> mus;
                for (int i = 0; i < nprof; ++i) mus.push_back(parts[rng() % parts.size()]);
                const Profile profile(d, std::move(mus));
                const TargetCurve smoothing = TargetCurve::doublet(g, profile.count());
                if (!dimension_invariance_check(d, chi, profile, lambda, smoothing)) {
                    r.passed = false;
                    r.detail = "b changes at d=" + std::to_string(d) + " lambda=" +
                               lambda.to_string() + " chi=" + std::to_string(chi) + " profile=" +
                               profile.to_string();
                    return r;
                }
                ++n;
            }
        }
    }
    r.detail = std::to_string(n) + " tuples (exhaustive lambda for d <= 8, fuzzed chi/profile), exact";
    return r;
}

CriterionResult criterion_series_identity(CharacterTable& table) {
    CriterionResult r{6, "generating-series splitting identity", true, ""};
    int n = 0;
    for (const Instance& inst : splitting_instances()) {
        const CoverCountQuery smoothing_query(inst.d, inst.half_genus, inst.base);
        const int chi_real = 2 * chi_forced(smoothing_query);
        const TargetCurve smoothing = TargetCurve::doublet(inst.half_genus, inst.base.count());
        const TargetCurve normalization = smoothing.degenerate().normalization();

        InvariantTable smooth_table(smoothing);
        smooth_table.set(inst.d, chi_real, inst.base, doublet_real_count(smoothing_query, table));
        const BiSeries lhs = series_assemble(smooth_table, inst.d);

        std::map<Partition, BiSeries> by_lambda;
        for (const Partition& lambda : partitions_of(inst.d)) {
            const Profile extended = inst.base.with_appended(lambda, lambda);
            InvariantTable one(normalization);
            one.set(inst.d, chi_real + 4 * lambda.length(), extended,
                    doublet_real_count(CoverCountQuery(inst.d, inst.half_genus - 1, extended), table));
            by_lambda.emplace(lambda, series_assemble(one, inst.d));
        }
        const BiSeries rhs = split_series(by_lambda, inst.d);
        if (!(lhs == rhs)) {
            r.passed = false;
            r.detail = "series differ at d=" + std::to_string(inst.d) + " g=" +
                       std::to_string(inst.half_genus) + " profile=" + inst.base.to_string() +
                       ": " + lhs.to_string() + " vs " + rhs.to_string();
            return r;
        }
        ++n;
    }
    r.detail = std::to_string(n) + " instances, exact series equality";
    return r;
}

CriterionResult criterion_sign_ledger() {
    CriterionResult r{7, "sign ledger: main chain +1 and commutation replay (-1)^ell", true, ""};
    const auto chain = main_chain();
    for (int ell = 0; ell <= 32; ++ell) {
        const int main_sign = compose(chain, ell).sign;
        if (main_sign != 1) {
            r.passed = false;
            r.detail = "main chain sign " + std::to_string(main_sign) + " at ell=" + std::to_string(ell);
            return r;
        }
        const int expected = ell % 2 == 0 ? 1 : -1;
        const int replayed = replay_lemma_comsign(ell);
        if (replayed != expected) {
            r.passed = false;
            r.detail = "commutation replay " + std::to_string(replayed) + " at ell=" +
                       std::to_string(ell);
            return r;
        }
    }
    r.detail = "ell = 0..32, both chains, exact";
    return r;
}

CriterionResult criterion_character_selfcheck(CharacterTable& table) {
    CriterionResult r{8, "character-layer self-validation", true, ""};
    for (int d = 1; d <= 8; ++d) {
        const auto parts = partitions_of(d);
        BigInt dim_sq_sum = 0;
        for (const Partition& rho : parts) {
            const BigInt dim = table.dimension(rho);
            dim_sq_sum += dim * dim;
        }
        if (dim_sq_sum != factorial(static_cast<unsigned>(d))) {
            r.passed = false;
            r.detail = "sum of squared dimensions at d=" + std::to_string(d) + " is " +
                       to_string(dim_sq_sum);
            return r;
        }
        for (const Partition& mu : parts) {
            for (const Partition& nu : parts) {
                BigInt s = 0;
                for (const Partition& rho : parts) s += table.character(rho, mu) * table.character(rho, nu);
                const BigInt expected = mu == nu ? zeta(mu) : BigInt(0);
                if (s != expected) {
                    r.passed = false;
                    r.detail = "column orthogonality fails at mu=" + mu.to_string() + " nu=" +
                               nu.to_string() + " (d=" + std::to_string(d) + ")";
                    return r;
                }
            }
        }
    }
    r.detail = "orthogonality and dimension sums for d <= 8, exact";
    return r;
}

CriterionResult criterion_ordered_factor(CharacterTable& table) {
    CriterionResult r{9, "ordered/unordered contact factor", true, ""};
    int n = 0;
    for (CoverCountQuery q : oracle_query_set()) {
        q.ordered_contacts = true;
        const Rational ordered = count_by_enumeration(q);
        q.ordered_contacts = false;
        const Rational unordered = count_by_characters(q, table);
        if (ordered != Rational(q.profile.aut_order()) * unordered) {
            r.passed = false;
            r.detail = "factor fails at d=" + std::to_string(q.degree) + " g=" +
                       std::to_string(q.genus) + " profile=" + q.profile.to_string();
            return r;
        }
        ++n;
    }
    r.detail = std::to_string(n) + " queries, ordered == prod |Aut mu^i| * unordered, exact";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(bool fail_fast, const std::string& cache_dir) {
    CharacterTable table(cache_dir);
    std::vector<CriterionResult> results;
    auto push = [&](CriterionResult res) {
        const bool failed = !res.passed;
        results.push_back(std::move(res));
        return failed;
    };
    if (push(criterion_splitting(table)) && fail_fast) return results;
    if (push(criterion_worked_instances(table)) && fail_fast) return results;
    if (push(criterion_oracle_equivalence(table)) && fail_fast) return results;
    if (push(criterion_coefficient_chain()) && fail_fast) return results;
    if (push(criterion_dimension_invariance()) && fail_fast) return results;
    if (push(criterion_series_identity(table)) && fail_fast) return results;
    if (push(criterion_sign_ledger()) && fail_fast) return results;
    if (push(criterion_character_selfcheck(table)) && fail_fast) return results;
    if (push(criterion_ordered_factor(table)) && fail_fast) return results;
    return results;
}

}  // namespace rgw
