#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace rgw {

/*
 * A formal calculus of determinant-line symbols. A LineWord is a tensor
 * product of opaque named lines ("pull." prefixes live upstairs on the
 * nodal side of the attaching map, "res." downstairs on the normalization).
 * The calculus never reorders factors with a sign: every line here is the
 * orientation line of an even-rank real index space, so the canonical form
 * simply sorts the tags and all braiding introduced by that sorting counts
 * as +1. Any honest sign must enter through a registered named isomorphism.
 * This even-permutation discipline is a stated modeling convention.
 */
class LineWord {
public:
    LineWord() = default;
    explicit LineWord(std::vector<std::string> factors);

    bool empty() const { return factors_.empty(); }
    const std::multiset<std::string>& factors() const { return factors_; }

    bool contains(const LineWord& sub) const;
    LineWord removed(const LineWord& sub) const;  // multiset difference; pre: contains(sub)
    LineWord merged(const LineWord& extra) const;

    bool operator==(const LineWord&) const = default;
    std::string to_string() const;  // e.g. "pull.dbar-C (x) pull.DM"

private:
    std::multiset<std::string> factors_;
};

/*
 * A named signed identification between two words, with sign depending on
 * the number ell of conjugate node pairs. Isomorphisms act on larger words
 * by rewriting the sub-word they match (tensoring with the identity on the
 * rest), and may be applied backwards: the inverse carries the same sign.
 */
struct NamedIso {
    std::string name;
    LineWord source;
    LineWord target;
    std::function<int(int)> sign;  // ell -> +1 or -1

    NamedIso inverse() const;
};

struct ComposeStep {
    std::string name;
    int sign;
    bool reversed;  // applied target -> source
};

struct ComposeResult {
    int sign;        // product of step signs
    LineWord start;  // word the chain was launched from
    LineWord end;    // word after all rewrites
    std::vector<ComposeStep> steps;
};

// The named isomorphisms with their declared signs:
//   iso-DM-split               (-1)^ell
//   iso-tangent-normalization  (-1)^ell
//   iso-square-trivial         +1
//   iso-twist                  (-1)^ell
//   iso-square-bundle          +1
//   iso-canonical-triv         +1
// Source/target words transcribe the displayed line-bundle identities each
// isomorphism rewrites.
std::map<std::string, NamedIso> register_paper_isos();

// Apply the chain in order starting from `start` (or from the union of the
// sources needed by the chain when no start is given). At each junction the
// iso is applied forward if its source sub-word is present, else backward
// if its target is; otherwise WordMismatch reports the failing junction.
ComposeResult compose(const std::vector<NamedIso>& chain, int ell, const LineWord& start);
ComposeResult compose(const std::vector<NamedIso>& chain, int ell);

// The three-step chain comparing the pullback orientation with the
// orientation of the resolved moduli: total sign +1 for every ell.
std::vector<NamedIso> main_chain();

// Replay of the pullback-commutation sign: square-bundle step (+1),
// canonical-trivialization step (+1), twist step ((-1)^ell); returns the
// composed sign (-1)^ell.
int replay_lemma_comsign(int ell);

}  // namespace rgw
