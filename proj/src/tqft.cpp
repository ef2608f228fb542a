#include "rgw/tqft.hpp"

#include "rgw/errors.hpp"

namespace rgw {

TargetCurve TargetCurve::doublet(int half_genus, int marked_pairs, int node_pairs, int level) {
    if (half_genus < 0) throw InvalidDegree("doublet half genus must be >= 0");
    if (marked_pairs < 0 || node_pairs < 0) throw InvalidDegree("pair counts must be >= 0");
    TargetCurve t;
    t.kind = Kind::doublet;
    t.genus = half_genus;
    t.marked_pairs = marked_pairs;
    t.node_pairs = node_pairs;
    t.level = level;
    return t;
}

TargetCurve TargetCurve::connected(int genus, std::string real_locus, int marked_pairs,
                                   int node_pairs, int level) {
    if (genus < 0) throw InvalidDegree("genus must be >= 0");
    if (marked_pairs < 0 || node_pairs < 0) throw InvalidDegree("pair counts must be >= 0");
    TargetCurve t;
    t.kind = Kind::connected;
    t.genus = genus;
    t.real_locus = std::move(real_locus);
    t.marked_pairs = marked_pairs;
    t.node_pairs = node_pairs;
    t.level = level;
    return t;
}

int TargetCurve::euler_char() const {
    const int smooth = kind == Kind::doublet ? 2 * (2 - 2 * genus) : 2 - 2 * genus;
    return smooth - 4 * node_pairs;
}

TargetCurve TargetCurve::degenerate() const {
    // Pinching a conjugate pair of loops lowers the genus of the smooth
    // model: by one on each half of a doublet, by two on a connected curve.
    const int drop = kind == Kind::doublet ? 1 : 2;
    if (genus < drop)
        throw WrongTarget("cannot pinch a conjugate pair of loops on " + to_string());
    TargetCurve t = *this;
    t.genus -= drop;
    t.node_pairs += 1;
    return t;
}

TargetCurve TargetCurve::normalization() const {
    TargetCurve t = *this;
    t.marked_pairs += 2 * node_pairs;
    t.node_pairs = 0;
    return t;
}

std::string TargetCurve::to_string() const {
    std::string s = kind == Kind::doublet ? "doublet(g=" : "connected(g=";
    s += std::to_string(genus);
    if (kind == Kind::connected) s += ",real=" + real_locus;
    s += ",r=" + std::to_string(marked_pairs);
    s += ",nodes=" + std::to_string(node_pairs);
    s += ",k=" + std::to_string(level) + ")";
    return s;
}

int virtual_dimension(int d, int chi, const TargetCurve& target, const Profile& profile) {
    if (profile.degree() != d)
        throw InvalidProfile("profile degree " + std::to_string(profile.degree()) +
                             " does not match d = " + std::to_string(d));
    return d * target.euler_char() - chi - 2 * profile.delta();
}

void InvariantTable::set(int d, int chi, const Profile& profile, const Rational& value) {
    const Key key{d, chi, profile};
    if (value == 0) {
        entries_.erase(key);
        return;
    }
    if (virtual_dimension(d, chi, target_, profile) % 2 != 0)
        throw InconsistentTable("nonzero value at odd virtual dimension: d=" + std::to_string(d) +
                                " chi=" + std::to_string(chi) + " profile=" + profile.to_string());
    entries_[key] = value;
}

Rational InvariantTable::get(int d, int chi, const Profile& profile) const {
    auto it = entries_.find(Key{d, chi, profile});
    return it == entries_.end() ? Rational(0) : it->second;
}

void BiSeries::add(long t2, long ue, const Rational& c) {
    if (c == 0) return;
    const auto key = std::make_pair(t2, ue);
    auto [it, inserted] = coeffs_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational BiSeries::coeff(long t2, long ue) const {
    auto it = coeffs_.find(std::make_pair(t2, ue));
    return it == coeffs_.end() ? Rational(0) : it->second;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    for (const auto& [key, c] : o.coeffs_) add(key.first, key.second, c);
    return *this;
}

BiSeries& BiSeries::scale(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, v] : coeffs_) v *= c;
    return *this;
}

BiSeries& BiSeries::shift(long dt2, long due) {
    std::map<std::pair<long, long>, Rational> shifted;
    for (auto& [key, v] : coeffs_)
        shifted.emplace(std::make_pair(key.first + dt2, key.second + due), std::move(v));
    coeffs_ = std::move(shifted);
    return *this;
}

std::string BiSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += c.get_str();
        if (key.first != 0) {
            s += "*t^";
            if (key.first % 2 == 0)
                s += std::to_string(key.first / 2);
            else
                s += "(" + std::to_string(key.first) + "/2)";
        }
        if (key.second != 0) s += "*u^" + std::to_string(key.second);
    }
    return s;
}

Rational split_invariant(const InvariantTable& table, int d, int chi, const Profile& profile) {
    if (profile.degree() != d)
        throw InvalidProfile("profile degree does not match d = " + std::to_string(d));
    const TargetCurve& t = table.target();
    if (t.node_pairs != 0 || t.marked_pairs != profile.count() + 2)
        throw WrongTarget("table target " + t.to_string() +
                          " is not the normalization of a one-node-pair degeneration carrying " +
                          std::to_string(profile.count()) + "+2 marked pairs");
    Rational total = 0;
    for (const Partition& lambda : partitions_of(d)) {
        const Rational v = table.get(d, chi + 4 * lambda.length(), profile.with_appended(lambda, lambda));
        if (v != 0) total += Rational(zeta(lambda)) * v;
    }
    total.canonicalize();
    return total;
}

BiSeries series_assemble(const InvariantTable& table, int d) {
    BiSeries out;
    const int k = table.target().level;
    for (const auto& [key, value] : table.entries()) {
        const auto& [dd, chi, profile] = key;
        if (dd != d) continue;
        const int b = virtual_dimension(d, chi, table.target(), profile);
        if (b % 2 != 0)
            throw InconsistentTable("nonzero value at odd b: d=" + std::to_string(d) +
                                    " chi=" + std::to_string(chi));
        const long e = b / 2 + static_cast<long>(d) * k;  // exponent of u/t
        out.add(-static_cast<long>(chi) - 2 * e, e, value);
    }
    return out;
}

BiSeries split_series(const std::map<Partition, BiSeries>& series_by_lambda, int d) {
    BiSeries out;
    for (const Partition& lambda : partitions_of(d)) {
        auto it = series_by_lambda.find(lambda);
        if (it == series_by_lambda.end())
            throw IncompleteInput("no series supplied for lambda = " + lambda.to_string());
        BiSeries term = it->second;
        term.scale(Rational(zeta(lambda)));
        term.shift(4 * lambda.length(), 0);  // t^{2 len(lambda)}, doubled exponent
        out += term;
    }
    return out;
}

Rational pair_invariant(const InvariantTable& table, int d, int chi, const Profile& profile) {
    Rational v = table.get(d, chi, profile);
    if (v == 0) return v;
    v /= Rational(profile.aut_order());
    v.canonicalize();
    return v;
}

VfcChain vfc_coefficient_chain(const Partition& lambda) {
    const BigInt aut = aut_order(lambda);
    const BigInt z = zeta(lambda);
    VfcChain chain;
    chain.c_split = Rational(z) / Rational(aut * aut);
    chain.c_split.canonicalize();
    chain.deg_phi = aut;
    chain.deg_q0 = z / aut;  // exact: zeta is divisible by the aut order
    return chain;
}

bool dimension_invariance_check(int d, int chi, const Profile& profile, const Partition& lambda,
                                const TargetCurve& smoothing) {
    if (lambda.size() != d)
        throw InvalidProfile("lambda must be a partition of d = " + std::to_string(d));
    const TargetCurve normalization = smoothing.degenerate().normalization();
    const int b = virtual_dimension(d, chi, smoothing, profile);
    const int bt = virtual_dimension(d, chi + 4 * lambda.length(), normalization,
                                     profile.with_appended(lambda, lambda));
    return b == bt;
}

}  // namespace rgw
