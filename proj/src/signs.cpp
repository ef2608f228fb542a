#include "rgw/signs.hpp"

#include <algorithm>

#include "rgw/errors.hpp"

namespace rgw {

LineWord::LineWord(std::vector<std::string> factors)
    : factors_(factors.begin(), factors.end()) {}

bool LineWord::contains(const LineWord& sub) const {
    return std::includes(factors_.begin(), factors_.end(), sub.factors_.begin(), sub.factors_.end());
}

LineWord LineWord::removed(const LineWord& sub) const {
    LineWord out = *this;
    for (const auto& f : sub.factors_) {
        auto it = out.factors_.find(f);
        if (it == out.factors_.end())
            throw WordMismatch("factor " + f + " not present in " + to_string());
        out.factors_.erase(it);
    }
    return out;
}

LineWord LineWord::merged(const LineWord& extra) const {
    LineWord out = *this;
    out.factors_.insert(extra.factors_.begin(), extra.factors_.end());
    return out;
}

std::string LineWord::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& f : factors_) {
        if (!s.empty()) s += " (x) ";
        s += f;
    }
    return s;
}

NamedIso NamedIso::inverse() const {
    // A sign is its own inverse, so only the direction flips.
    return NamedIso{name + "^-1", target, source, sign};
}

namespace {

int parity_sign(int ell) { return ell % 2 == 0 ? 1 : -1; }
int plus_one(int) { return 1; }

LineWord word(std::initializer_list<const char*> factors) {
    std::vector<std::string> fs;
    for (const char* f : factors) fs.emplace_back(f);
    return LineWord(std::move(fs));
}

}  // namespace

std::map<std::string, NamedIso> register_paper_isos() {
    std::map<std::string, NamedIso> catalog;
    auto put = [&](NamedIso iso) { catalog.emplace(iso.name, std::move(iso)); };

    // Splitting of the Deligne-Mumford tangent line under pullback, after
    // trading the node-smoothing directions for a trivial-bundle factor.
    put({"iso-DM-split",
         word({"pull.dbar-triv", "pull.det-T-DM"}),
         word({"res.dbar-triv", "res.det-T-DM"}),
         parity_sign});

    // Normalization sequence for the tangent bundle of the target, coupled
    // with the trivial-bundle sequence.
    put({"iso-tangent-normalization",
         word({"pull.dbar-tangent", "pull.dbar-triv"}),
         word({"res.dbar-tangent", "res.dbar-triv"}),
         parity_sign});

    // Two copies of the trivial-bundle sequence: twice of a bundle carries
    // its canonical orientation on both sides.
    put({"iso-square-trivial",
         word({"pull.dbar-triv", "pull.dbar-triv"}),
         word({"res.dbar-triv", "res.dbar-triv"}),
         plus_one});

    // The twist line L (+) conj(L)-bar under pullback.
    put({"iso-twist",
         word({"pull.dbar-twist"}),
         word({"res.dbar-twist"}),
         parity_sign});

    // A square of a real bundle under pullback.
    put({"iso-square-bundle",
         word({"pull.dbar-square"}),
         word({"res.dbar-square"}),
         plus_one});

    // The canonical trivialization of W (+) E-dual against the standard
    // trivial bundle, under pullback.
    put({"iso-canonical-triv",
         word({"pull.dbar-W", "pull.dbar-E-dual", "pull.dbar-std"}),
         word({"res.dbar-W", "res.dbar-E-dual", "res.dbar-std"}),
         plus_one});

    return catalog;
}

ComposeResult compose(const std::vector<NamedIso>& chain, int ell, const LineWord& start) {
    ComposeResult result{1, start, start, {}};
    for (size_t i = 0; i < chain.size(); ++i) {
        const NamedIso& iso = chain[i];
        bool reversed;
        if (result.end.contains(iso.source)) {
            result.end = result.end.removed(iso.source).merged(iso.target);
            reversed = false;
        } else if (result.end.contains(iso.target)) {
            result.end = result.end.removed(iso.target).merged(iso.source);
            reversed = true;
        } else {
            throw WordMismatch("junction " + std::to_string(i) + " (" + iso.name + "): neither " +
                               iso.source.to_string() + " nor " + iso.target.to_string() +
                               " occurs in " + result.end.to_string());
        }
        const int s = iso.sign(ell);
        result.sign *= s;
        result.steps.push_back({iso.name, s, reversed});
    }
    return result;
}

ComposeResult compose(const std::vector<NamedIso>& chain, int ell) {
    // Launch from the word that makes a left-to-right pass well defined:
    // accumulate, for each junction in order, whichever factors it still
    // misses. (A simple forward scan; junctions the scan would apply
    // backwards contribute their targets.)
    LineWord start;
    LineWord current;
    for (const NamedIso& iso : chain) {
        const bool fwd = current.contains(iso.source);
        const bool bwd = !fwd && current.contains(iso.target);
        const LineWord& need = bwd ? iso.target : iso.source;
        const LineWord& give = bwd ? iso.source : iso.target;
        if (!current.contains(need)) {
            // Pull the missing factors in from the ambient start word.
            LineWord missing;
            LineWord scratch = current;
            for (const auto& f : need.factors()) {
                LineWord one(std::vector<std::string>{f});
                if (scratch.contains(one))
                    scratch = scratch.removed(one);
                else
                    missing = missing.merged(one);
            }
            start = start.merged(missing);
            current = current.merged(missing);
        }
        current = current.removed(need).merged(give);
    }
    return compose(chain, ell, start);
}

std::vector<NamedIso> main_chain() {
    auto catalog = register_paper_isos();
    return {catalog.at("iso-DM-split"), catalog.at("iso-tangent-normalization"),
            catalog.at("iso-square-trivial")};
}

int replay_lemma_comsign(int ell) {
    auto catalog = register_paper_isos();
    const std::vector<NamedIso> chain{catalog.at("iso-square-bundle"),
                                      catalog.at("iso-canonical-triv"), catalog.at("iso-twist")};
    return compose(chain, ell).sign;
}

}  // namespace rgw
