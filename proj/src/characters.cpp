#include "rgw/characters.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <vector>

#include "rgw/errors.hpp"

namespace rgw {

namespace {

// First-column hook lengths ("beta numbers") of a shape with parts
// p_0 >= ... >= p_{L-1}: beta_i = p_i + (L-1-i). Strictly decreasing,
// returned ascending for binary search.
std::vector<int> beta_set(const Partition& shape) {
    const auto p = shape.parts();
    const int L = static_cast<int>(p.size());
    std::vector<int> beta(p.size());
    for (int i = 0; i < L; ++i) beta[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] + (L - 1 - i);
    std::reverse(beta.begin(), beta.end());
    return beta;
}

// Inverse of beta_set, dropping the zero-length rows that appear when a
// border strip empties a row.
Partition shape_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int L = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < L; ++i) {
        const int part = beta[static_cast<size_t>(i)] - (L - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(parts);
}

Partition remove_one_part(const Partition& mu, int k) {
    auto mult = mu.multiplicities();
    auto it = mult.find(k);
    if (it->second == 1)
        mult.erase(it);
    else
        --it->second;
    return Partition::from_multiplicities(std::move(mult));
}

}  // namespace

CharacterTable::CharacterTable(std::string cache_dir) : cache_dir_(std::move(cache_dir)) {}

CharacterTable::~CharacterTable() {
    try {
        flush();
    } catch (...) {
        // Persisting the cache is best effort; never fail in a destructor.
    }
}

BigInt CharacterTable::character(const Partition& rho, const Partition& mu) {
    if (rho.size() != mu.size())
        throw InvalidPair("character needs |rho| == |mu|, got " + rho.to_string() + " and " + mu.to_string());
    std::lock_guard<std::mutex> lock(mutex_);
    if (!cache_dir_.empty()) {
        // Pull in every smaller degree too: the recursion lands there.
        for (int d = rho.size(); d >= 1; --d) load_degree(d);
    }
    return compute(rho, mu);
}

BigInt CharacterTable::dimension(const Partition& rho) {
    if (rho.size() == 0) return 1;
    return character(rho, Partition::all_ones(rho.size()));
}

std::size_t CharacterTable::memo_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::size_t n = 0;
    for (auto& [d, slice] : memo_) n += slice.size();
    return n;
}

// Murnaghan-Nakayama: chi_rho(mu) = sum over removable border strips of
// length s (the largest remaining cycle) of (-1)^height * chi on the smaller
// pair. In beta-number form a strip of length s is a beta value b >= s with
// b - s not a beta value; its height is the number of beta values strictly
// between b - s and b.
BigInt CharacterTable::compute(const Partition& rho, const Partition& mu) {
    if (rho.size() == 0) return 1;
    const int d = rho.size();
    auto& slice = memo_[d];
    const Key key{rho, mu};
    if (auto it = slice.find(key); it != slice.end()) return it->second;

    const int s = mu.parts().front();
    const Partition rest = remove_one_part(mu, s);
    const auto beta = beta_set(rho);

    BigInt total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i];
        if (b < s) continue;
        const int target = b - s;
        if (std::binary_search(beta.begin(), beta.end(), target)) continue;
        auto lo = std::upper_bound(beta.begin(), beta.end(), target);
        auto hi = std::lower_bound(beta.begin(), beta.end(), b);
        const auto height = hi - lo;
        std::vector<int> next = beta;
        next[i] = target;
        const BigInt sub = compute(shape_from_beta(std::move(next)), rest);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }

    memo_[d].emplace(key, total);
    degree_dirty_[d] = true;
    return total;
}

/*
 * Cache files: one per degree, named mn_d<N>.bin, holding every memoized
 * (shape, cycles, value) triple of that degree. Layout:
 *
 *   8-byte magic "RGWMNC1\n", then records back to back. Each record is a
 *   little-endian u64 payload length followed by the payload:
 *     u64 degree
 *     u64 part count, then that many u64 parts (shape, descending)
 *     u64 part count, then that many u64 parts (cycles, descending)
 *     u64 byte count, u8 sign (1 = negative), magnitude bytes LSB first
 *
 * Loading validates framing and that both partitions really are partitions
 * of the file's degree; anything off aborts the load of that file and the
 * affected values are simply recomputed.
 */
namespace {

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

struct Cursor {
    const unsigned char* p;
    size_t left;
    bool ok = true;

    std::uint64_t u64() {
        if (left < 8) {
            ok = false;
            return 0;
        }
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
        p += 8;
        left -= 8;
        return v;
    }

    const unsigned char* bytes(size_t n) {
        if (left < n) {
            ok = false;
            return nullptr;
        }
        const unsigned char* r = p;
        p += n;
        left -= n;
        return r;
    }
};

void put_bigint(std::string& out, const BigInt& z) {
    const size_t nbytes = (mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8;
    std::string mag(z == 0 ? 0 : nbytes, '\0');
    size_t count = 0;
    if (z != 0) mpz_export(mag.data(), &count, -1, 1, 0, 0, z.get_mpz_t());
    put_u64(out, count);
    out.push_back(sgn(z) < 0 ? 1 : 0);
    out += mag.substr(0, count);
}

bool get_bigint(Cursor& c, BigInt& out) {
    const std::uint64_t n = c.u64();
    if (!c.ok || n > (1u << 20)) return false;
    const unsigned char* sign = c.bytes(1);
    const unsigned char* mag = c.bytes(static_cast<size_t>(n));
    if (!c.ok) return false;
    BigInt z = 0;
    if (n > 0) mpz_import(z.get_mpz_t(), static_cast<size_t>(n), -1, 1, 0, 0, mag);
    if (*sign) z = -z;
    out = std::move(z);
    return true;
}

void put_partition(std::string& out, const Partition& p) {
    const auto parts = p.parts();
    put_u64(out, parts.size());
    for (int k : parts) put_u64(out, static_cast<std::uint64_t>(k));
}

bool get_partition(Cursor& c, int degree, Partition& out) {
    const std::uint64_t n = c.u64();
    if (!c.ok || n > static_cast<std::uint64_t>(degree)) return false;
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(n));
    long long sum = 0;
    int prev = degree;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t k = c.u64();
        if (!c.ok || k < 1 || k > static_cast<std::uint64_t>(prev)) return false;
        prev = static_cast<int>(k);
        sum += prev;
        parts.push_back(prev);
    }
    if (sum != degree) return false;
    out = Partition(std::move(parts));
    return true;
}

constexpr char kMagic[8] = {'R', 'G', 'W', 'M', 'N', 'C', '1', '\n'};

}  // namespace

void CharacterTable::load_degree(int d) {
    if (degree_loaded_[d]) return;
    degree_loaded_[d] = true;
    std::ifstream in(cache_dir_ + "/mn_d" + std::to_string(d) + ".bin", std::ios::binary);
    if (!in) return;
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (data.size() < 8 || !std::equal(kMagic, kMagic + 8, data.begin())) return;

    Cursor file{reinterpret_cast<const unsigned char*>(data.data()) + 8, data.size() - 8};
    auto& slice = memo_[d];
    while (file.left > 0) {
        const std::uint64_t len = file.u64();
        const unsigned char* payload = file.bytes(static_cast<size_t>(len));
        if (!file.ok) return;
        Cursor rec{payload, static_cast<size_t>(len)};
        Partition rho, mu;
        BigInt value;
        if (rec.u64() != static_cast<std::uint64_t>(d) || !rec.ok) return;
        try {
            if (!get_partition(rec, d, rho) || !get_partition(rec, d, mu)) return;
        } catch (const Error&) {
            return;
        }
        if (!get_bigint(rec, value) || rec.left != 0) return;
        slice.emplace(Key{std::move(rho), std::move(mu)}, std::move(value));
    }
}

void CharacterTable::save_degree(int d) const {
    auto it = memo_.find(d);
    if (it == memo_.end() || it->second.empty()) return;
    std::string out(kMagic, 8);
    for (auto& [key, value] : it->second) {
        std::string payload;
        put_u64(payload, static_cast<std::uint64_t>(d));
        put_partition(payload, key.first);
        put_partition(payload, key.second);
        put_bigint(payload, value);
        put_u64(out, payload.size());
        out += payload;
    }
    const std::string path = cache_dir_ + "/mn_d" + std::to_string(d) + ".bin";
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) return;
        f.write(out.data(), static_cast<std::streamsize>(out.size()));
        if (!f) return;
    }
    std::rename(tmp.c_str(), path.c_str());
}

void CharacterTable::flush() {
    if (cache_dir_.empty()) return;
    std::lock_guard<std::mutex> lock(mutex_);
    for (auto& [d, dirty] : degree_dirty_) {
        if (dirty) save_degree(d);
        dirty = false;
    }
}

}  // namespace rgw
