#include "rgw/table_io.hpp"

#include <fstream>

#include "rgw/errors.hpp"

namespace rgw {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json bigint_to_json(const BigInt& z) {
    if (z.fits_slong_p()) return ordered_json(z.get_si());
    return ordered_json(z.get_str());
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw IncompleteInput("expected an integer or a decimal string, got " + j.dump());
}

}  // namespace

ordered_json rational_to_json(const Rational& q) {
    ordered_json out;
    out["num"] = bigint_to_json(q.get_num());
    out["den"] = bigint_to_json(q.get_den());
    return out;
}

Rational rational_from_json(const json& num, const json& den) {
    const BigInt d = bigint_from_json(den);
    if (d == 0) throw IncompleteInput("rational with zero denominator");
    Rational q(bigint_from_json(num), d);
    q.canonicalize();
    return q;
}

ordered_json partition_to_json(const Partition& p) { return ordered_json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw IncompleteInput("a partition must be an array of parts, got " + j.dump());
    return Partition(j.get<std::vector<int>>());
}

ordered_json profile_to_json(const Profile& p) {
    ordered_json arr = ordered_json::array();
    for (const Partition& mu : p.parts()) arr.push_back(partition_to_json(mu));
    return arr;
}

Profile profile_from_json(const json& j, int degree) {
    if (!j.is_array()) throw IncompleteInput("a profile must be an array of partitions, got " + j.dump());
    std::vector<Partition> parts;
    for (const auto& el : j) parts.push_back(partition_from_json(el));
    return Profile(degree, std::move(parts));
}

ordered_json target_to_json(const TargetCurve& t) {
    ordered_json out;
    out["kind"] = t.kind == TargetCurve::Kind::doublet ? "doublet" : "connected";
    out["genus"] = t.genus;
    if (t.kind == TargetCurve::Kind::connected) out["real_locus"] = t.real_locus;
    out["marked_pairs"] = t.marked_pairs;
    out["node_pairs"] = t.node_pairs;
    out["level"] = t.level;
    return out;
}

TargetCurve target_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const int genus = j.at("genus").get<int>();
    const int marked = j.value("marked_pairs", 0);
    const int nodes = j.value("node_pairs", 0);
    const int level = j.value("level", 0);
    if (kind == "doublet") return TargetCurve::doublet(genus, marked, nodes, level);
    if (kind == "connected")
        return TargetCurve::connected(genus, j.value("real_locus", ""), marked, nodes, level);
    throw IncompleteInput("unknown target kind '" + kind + "'");
}

ordered_json table_to_json(const InvariantTable& t) {
    ordered_json out;
    out["target"] = target_to_json(t.target());
    ordered_json entries = ordered_json::array();
    for (const auto& [key, value] : t.entries()) {
        const auto& [d, chi, profile] = key;
        ordered_json e;
        e["d"] = d;
        e["chi"] = chi;
        e["profile"] = profile_to_json(profile);
        e["num"] = bigint_to_json(value.get_num());
        e["den"] = bigint_to_json(value.get_den());
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out;
}

InvariantTable table_from_json(const json& j) {
    InvariantTable table(target_from_json(j.at("target")));
    for (const auto& e : j.at("entries")) {
        const int d = e.at("d").get<int>();
        const int chi = e.at("chi").get<int>();
        const Profile profile = profile_from_json(e.at("profile"), d);
        table.set(d, chi, profile, rational_from_json(e.at("num"), e.at("den")));
    }
    return table;
}

InvariantTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IncompleteInput("cannot open table file " + path);
    json j;
    in >> j;
    return table_from_json(j);
}

void save_table(const InvariantTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IncompleteInput("cannot open " + path + " for writing");
    out << table_to_json(t).dump(2) << "\n";
}

}  // namespace rgw
