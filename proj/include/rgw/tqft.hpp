#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rgw/numeric.hpp"
#include "rgw/partition.hpp"

namespace rgw {

/*
 * Topological descriptor of a symmetric target curve. Only deformation
 * classes matter here, so a target carries nothing but its genus data,
 * real-structure tag, marked-pair count, conjugate-node-pair count and the
 * degree of the line bundle over it.
 *
 * euler_char() is the Euler characteristic of the smoothing of the target:
 * for a doublet (two conjugate copies of a genus-g curve swapped by the
 * involution) with no nodes it is 2*(2-2g), and each conjugate pair of
 * nodes - obtained by pinching a conjugate pair of loops, which drops the
 * genus of the smooth model - accounts for -4. Resolving the nodes
 * (normalization) therefore raises euler_char by 4 per pair and turns each
 * pair into two new marked pairs.
 */
struct TargetCurve {
    enum class Kind { doublet, connected };

    static TargetCurve doublet(int half_genus, int marked_pairs = 0, int node_pairs = 0,
                               int level = 0);
    static TargetCurve connected(int genus, std::string real_locus, int marked_pairs = 0,
                                 int node_pairs = 0, int level = 0);

    Kind kind = Kind::doublet;
    int genus = 0;  // genus of one half (doublet) or of the curve (connected)
    std::string real_locus;  // opaque descriptor, empty for doublets
    int marked_pairs = 0;
    int node_pairs = 0;
    int level = 0;  // degree k of the line bundle

    int euler_char() const;

    // Pinch one conjugate pair of loops: one more conjugate node pair, same
    // smoothing (euler_char is unchanged).
    TargetCurve degenerate() const;

    // Resolve every conjugate node pair into two marked pairs.
    TargetCurve normalization() const;

    bool operator==(const TargetCurve&) const = default;
    std::string to_string() const;
};

/*
 * Finitely supported map (d, chi, profile) -> exact rational over a fixed
 * target: the abstract home of the invariants. Zero values are implicit;
 * set() refuses nonzero values in odd virtual dimension.
 */
class InvariantTable {
public:
    using Key = std::tuple<int, int, Profile>;

    explicit InvariantTable(TargetCurve target) : target_(std::move(target)) {}

    const TargetCurve& target() const { return target_; }

    // Insert or overwrite; a zero value erases the entry.
    void set(int d, int chi, const Profile& profile, const Rational& value);
    Rational get(int d, int chi, const Profile& profile) const;

    const std::map<Key, Rational>& entries() const { return entries_; }

    bool operator==(const InvariantTable&) const = default;

private:
    TargetCurve target_;
    std::map<Key, Rational> entries_;
};

/*
 * Exact-rational Laurent series in t^{1/2} and u, finitely supported.
 * Exponents of t are stored doubled so half-integer powers stay integral.
 */
class BiSeries {
public:
    BiSeries() = default;

    // Add c * t^{t2/2} * u^{ue}; cancellations erase the key.
    void add(long t2, long ue, const Rational& c);
    Rational coeff(long t2, long ue) const;
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<std::pair<long, long>, Rational>& coeffs() const { return coeffs_; }

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& scale(const Rational& c);
    BiSeries& shift(long dt2, long due);  // multiply by t^{dt2/2} u^{due}

    bool operator==(const BiSeries&) const = default;
    std::string to_string() const;

private:
    std::map<std::pair<long, long>, Rational> coeffs_;
};

// b = d*euler_char(target) - chi - 2*delta(profile).
// Throws InvalidProfile when profile.degree != d.
int virtual_dimension(int d, int chi, const TargetCurve& target, const Profile& profile);

// The splitting rule: value at the smoothing (d, chi, profile) from the
// table of its one-node-pair degeneration's normalization,
//   sum over lambda |- d of zeta(lambda) * table(d, chi + 4 len(lambda),
//                                               profile.lambda.lambda).
// The table's target must be such a normalization: no nodes and exactly two
// marked pairs beyond the profile's (else WrongTarget).
Rational split_invariant(const InvariantTable& table, int d, int chi, const Profile& profile);

// Generating series of a table at fixed degree:
//   sum over entries  value * t^{-chi/2} * (u/t)^{b/2 + d*k}.
// Entries of odd b must be zero (else InconsistentTable); absent d gives
// the zero series.
BiSeries series_assemble(const InvariantTable& table, int d);

// Series form of the splitting rule:
//   sum over lambda |- d of zeta(lambda) * t^{2 len(lambda)} * series(lambda).
// Missing lambda throws IncompleteInput.
BiSeries split_series(const std::map<Partition, BiSeries>& series_by_lambda, int d);

// Unordered invariant from an ordered-contact table: divide by
// prod_i |Aut mu^i|.
Rational pair_invariant(const InvariantTable& table, int d, int chi, const Profile& profile);

/*
 * The rational coefficients threading the splitting of virtual fundamental
 * classes: the class splits with coefficient c_split = zeta/|Aut|^2, the
 * attaching map has degree |Aut|, and their product is the degree
 * zeta/|Aut| = prod of the parts of lambda of the covering map the class is
 * pushed along.
 */
struct VfcChain {
    Rational c_split;
    BigInt deg_phi;
    BigInt deg_q0;
};

VfcChain vfc_coefficient_chain(const Partition& lambda);

// true iff b(smoothing; d, chi, profile) equals
// b(normalization; d, chi + 4 len(lambda), profile.lambda.lambda), where the
// normalization is of the one-node-pair degeneration of `smoothing`.
bool dimension_invariance_check(int d, int chi, const Profile& profile, const Partition& lambda,
                                const TargetCurve& smoothing);

}  // namespace rgw
