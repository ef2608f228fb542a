#include "rgw/hurwitz.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <vector>

#include "rgw/errors.hpp"

namespace rgw {

int chi_forced(const CoverCountQuery& q) {
    return q.degree * (2 - 2 * q.genus) - q.profile.delta();
}

namespace {

void validate(const CoverCountQuery& q) {
    if (q.degree < 1) throw InvalidDegree("cover degree must be >= 1");
    if (q.genus < 0) throw InvalidDegree("target genus must be >= 0");
    if (q.profile.degree() != q.degree)
        throw InvalidProfile("profile degree " + std::to_string(q.profile.degree()) +
                             " does not match cover degree " + std::to_string(q.degree));
}

// Permutations of {0..d-1} as flat images. Composition (p*q)(i) = p(q(i)).
using Perm = std::vector<std::uint8_t>;

Perm identity_perm(int d) {
    Perm p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> cycles;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        cycles.push_back(len);
    }
    return Partition(std::move(cycles));
}

std::vector<Perm> symmetric_group(int d) {
    std::vector<Perm> all;
    Perm p = identity_perm(d);
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

struct EnumerationPlan {
    // Iteration domains in order: 2g copies of S_d (the a_i, b_i are drawn
    // pairwise from consecutive slots), then the classes of mu^1..mu^{r-1}.
    // mu^r, if present, is solved from the product constraint.
    std::vector<const std::vector<Perm>*> slots;
    int genus;
    const Partition* solved_type = nullptr;  // cycle type required of s_r
};

// Walk all slot choices from `depth` on, accumulating the left product
// `acc`; count tuples whose solved/checked tail closes the relation.
std::uint64_t walk(const EnumerationPlan& plan, size_t depth, const Perm& acc) {
    if (depth == plan.slots.size()) {
        if (plan.solved_type) return cycle_type(inverse(acc)) == *plan.solved_type ? 1 : 0;
        // No ramification: the commutator product itself must be trivial.
        for (size_t i = 0; i < acc.size(); ++i)
            if (acc[i] != i) return 0;
        return 1;
    }
    std::uint64_t n = 0;
    if (depth < static_cast<size_t>(2 * plan.genus)) {
        // Slots come in (a, b) pairs contributing the commutator a b a^- b^-.
        const auto& sd = *plan.slots[depth];
        for (const Perm& a : sd) {
            const Perm ai = inverse(a);
            for (const Perm& b : sd) {
                const Perm c = compose(compose(a, b), compose(ai, inverse(b)));
                n += walk(plan, depth + 2, compose(acc, c));
            }
        }
        return n;
    }
    for (const Perm& s : *plan.slots[depth]) n += walk(plan, depth + 1, compose(acc, s));
    return n;
}

}  // namespace

Rational count_by_enumeration(const CoverCountQuery& q, std::uint64_t budget, int threads) {
    validate(q);
    const int d = q.degree;
    const int g = q.genus;
    const auto& mus = q.profile.parts();
    const int r = static_cast<int>(mus.size());

    // Upfront work estimate: the product of all iterated domain sizes.
    BigInt work = ipow(factorial(static_cast<unsigned>(d)), static_cast<unsigned>(2 * g));
    for (int j = 0; j + 1 < r; ++j) work *= class_size(mus[static_cast<size_t>(j)]);
    if (work > BigInt(static_cast<unsigned long>(budget)))
        throw EnumerationTooLarge("enumeration needs " + to_string(work) + " tuple extensions, budget is " +
                                  std::to_string(budget));

    const std::vector<Perm> sd = symmetric_group(d);
    std::vector<std::vector<Perm>> classes;  // for mu^1 .. mu^{r-1}
    for (int j = 0; j + 1 < r; ++j) {
        std::vector<Perm> members;
        for (const Perm& p : sd)
            if (cycle_type(p) == mus[static_cast<size_t>(j)]) members.push_back(p);
        classes.push_back(std::move(members));
    }

    EnumerationPlan plan;
    plan.genus = g;
    for (int i = 0; i < 2 * g; ++i) plan.slots.push_back(&sd);
    for (const auto& cls : classes) plan.slots.push_back(&cls);
    if (r > 0) plan.solved_type = &mus.back();

    std::uint64_t tuples = 0;
    if (plan.slots.empty()) {
        tuples = walk(plan, 0, identity_perm(d));
    } else {
        // Parallelize over the outermost choice; per-thread tallies are
        // exact (bounded by the budget) and merged by plain summation.
        const auto& outer = *plan.slots.front();
        int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
        if (nthreads < 1) nthreads = 1;
        nthreads = std::min<int>(nthreads, static_cast<int>(outer.size()));

        const bool outer_is_pair = plan.genus > 0;  // slot 0 is an a_i; iterate its b too
        std::vector<std::uint64_t> tally(static_cast<size_t>(nthreads), 0);
        std::atomic<size_t> next{0};
        auto worker = [&](int t) {
            std::uint64_t local = 0;
            for (size_t i = next.fetch_add(1); i < outer.size(); i = next.fetch_add(1)) {
                const Perm& a = outer[i];
                if (outer_is_pair) {
                    const Perm ai = inverse(a);
                    for (const Perm& b : sd) {
                        const Perm c = compose(compose(a, b), compose(ai, inverse(b)));
                        local += walk(plan, 2, c);
                    }
                } else {
                    local += walk(plan, 1, a);
                }
            }
            tally[static_cast<size_t>(t)] = local;
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker, t);
        worker(0);
        for (auto& th : pool) th.join();
        for (std::uint64_t v : tally) tuples += v;
    }

    Rational result(BigInt(static_cast<unsigned long>(tuples)));
    result /= factorial(static_cast<unsigned>(d));
    if (q.ordered_contacts) result *= q.profile.aut_order();
    result.canonicalize();
    return result;
}

Rational count_by_characters(const CoverCountQuery& q, CharacterTable& table) {
    validate(q);
    const int d = q.degree;
    const BigInt dfac = factorial(static_cast<unsigned>(d));
    Rational total = 0;
    for (const Partition& rho : partitions_of(d)) {
        const BigInt dim = table.dimension(rho);
        Rational term = qpow(Rational(dfac) / Rational(dim), 2L * q.genus - 2);
        for (const Partition& mu : q.profile.parts()) {
            term *= Rational(class_size(mu) * table.character(rho, mu)) / Rational(dim);
            if (term == 0) break;
        }
        total += term;
    }
    if (q.ordered_contacts) total *= q.profile.aut_order();
    total.canonicalize();
    return total;
}

Rational doublet_real_count(const CoverCountQuery& q, CharacterTable& table) {
    return count_by_characters(q, table);
}

}  // namespace rgw
