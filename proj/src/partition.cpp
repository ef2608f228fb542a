#include "rgw/partition.hpp"

#include <algorithm>

#include "rgw/errors.hpp"

namespace rgw {

Partition::Partition(std::vector<int> part_list) {
    for (int k : part_list) {
        if (k < 1) throw InvalidDegree("partition parts must be positive, got " + std::to_string(k));
        ++mult_[k];
        size_ += k;
        ++length_;
    }
}

Partition Partition::from_multiplicities(std::map<int, int> mult) {
    Partition p;
    for (auto& [k, m] : mult) {
        if (k < 1) throw InvalidDegree("partition parts must be positive, got " + std::to_string(k));
        if (m < 1) throw InvalidDegree("multiplicities must be positive, got " + std::to_string(m));
        p.size_ += k * m;
        p.length_ += m;
    }
    p.mult_ = std::move(mult);
    return p;
}

Partition Partition::single_row(int d) {
    if (d < 1) throw InvalidDegree("single_row needs d >= 1");
    return Partition(std::vector<int>{d});
}

Partition Partition::all_ones(int d) {
    if (d < 1) throw InvalidDegree("all_ones needs d >= 1");
    return Partition(std::vector<int>(static_cast<size_t>(d), 1));
}

int Partition::multiplicity(int k) const {
    auto it = mult_.find(k);
    return it == mult_.end() ? 0 : it->second;
}

std::vector<int> Partition::parts() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(length_));
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
        out.insert(out.end(), static_cast<size_t>(it->second), it->first);
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    // Descending part lists compared lexicographically, larger list first,
    // so that (d) < (d-1,1) < ... < (1^d) as map keys and enumeration order.
    const auto a = parts();
    const auto b = o.parts();
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return a.size() <=> b.size();
}

std::string Partition::to_string() const {
    std::string s = "[";
    bool first = true;
    for (int k : parts()) {
        if (!first) s += ",";
        s += std::to_string(k);
        first = false;
    }
    return s + "]";
}

BigInt aut_order(const Partition& p) {
    BigInt r = 1;
    for (auto& [k, m] : p.multiplicities()) r *= factorial(static_cast<unsigned>(m));
    return r;
}

BigInt zeta(const Partition& p) {
    BigInt r = 1;
    for (auto& [k, m] : p.multiplicities()) {
        r *= factorial(static_cast<unsigned>(m));
        r *= ipow(BigInt(k), static_cast<unsigned>(m));
    }
    return r;
}

BigInt class_size(const Partition& p) {
    return factorial(static_cast<unsigned>(p.size())) / zeta(p);
}

std::vector<Partition> partitions_of(int d) {
    if (d < 1) throw InvalidDegree("partitions_of needs d >= 1, got " + std::to_string(d));
    std::vector<Partition> out;
    // In-place successor walk in reverse-lexicographic order: replace the
    // rightmost part that is > 1 by (part - 1) and repack the freed units
    // into chunks of at most (part - 1).
    std::vector<int> a{d};
    for (;;) {
        out.emplace_back(a);
        int k = static_cast<int>(a.size()) - 1;
        int spare = 0;
        while (k >= 0 && a[static_cast<size_t>(k)] == 1) {
            ++spare;
            --k;
        }
        if (k < 0) break;
        a.resize(static_cast<size_t>(k) + 1);
        a[static_cast<size_t>(k)] -= 1;
        ++spare;
        const int chunk = a[static_cast<size_t>(k)];
        while (spare > 0) {
            a.push_back(std::min(chunk, spare));
            spare -= std::min(chunk, spare);
        }
    }
    return out;
}

Profile::Profile(int degree) : degree_(degree) {
    if (degree < 1) throw InvalidDegree("profile degree must be >= 1");
}

Profile::Profile(int degree, std::vector<Partition> parts) : degree_(degree), parts_(std::move(parts)) {
    if (degree < 1) throw InvalidDegree("profile degree must be >= 1");
    for (const auto& p : parts_) {
        if (p.size() != degree_)
            throw InvalidProfile("profile member " + p.to_string() + " is not a partition of " +
                                 std::to_string(degree_));
    }
}

int Profile::delta() const {
    int s = 0;
    for (const auto& p : parts_) s += degree_ - p.length();
    return s;
}

BigInt Profile::aut_order() const {
    BigInt r = 1;
    for (const auto& p : parts_) r *= rgw::aut_order(p);
    return r;
}

Profile Profile::with_appended(const Partition& a, const Partition& b) const {
    auto ps = parts_;
    ps.push_back(a);
    ps.push_back(b);
    return Profile(degree_, std::move(ps));
}

Profile Profile::with_appended(const Partition& a) const {
    auto ps = parts_;
    ps.push_back(a);
    return Profile(degree_, std::move(ps));
}

std::string Profile::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += parts_[i].to_string();
    }
    return s + "]";
}

}  // namespace rgw
