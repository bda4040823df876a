#pragma once

#include <string>
#include <vector>

#include "av/abelian.hpp"
#include "av/exterior.hpp"
#include "av/matrix.hpp"
#include "av/rational.hpp"

namespace av {

/// A variety spec together with its cohomology model.
struct VarietyModel {
    AbelianSpec spec;
    CohomModel cohom;

    int n() const { return cohom.n; }
};

VarietyModel make_variety(AbelianSpec spec, bool allow_large = false);

enum class AtomKind { Graph, TransposeGraph };

/// Graph or transposed graph of an endomorphism. Transposed graphs are only
/// admitted for isogenies (finiteness of the first projection).
struct Atom {
    AtomKind kind = AtomKind::Graph;
    EndMatrix endo;

    bool operator==(const Atom&) const = default;
};

/// Composition chain of atoms; atoms[0] is applied last.
struct Word {
    std::vector<Atom> atoms;

    bool operator==(const Word&) const = default;
};

struct Term {
    Rat coeff;
    Word word;

    bool operator==(const Term&) const = default;
};

/// Nonnegative combination of words in canonical form: adjacent graphs
/// fused, transposed-graph-after-same-graph cancelled to a degree multiple
/// of the diagonal, identity graphs dropped from longer words, like terms
/// merged, terms sorted by word key.
struct Correspondence {
    std::vector<Term> terms;

    bool operator==(const Correspondence&) const = default;
};

std::string atom_key(const Atom& a);
std::string word_key(const Word& w);
std::string corr_key(const Correspondence& c);

/// Rewrites into canonical form; rejects negative coefficients.
Correspondence canonicalize(Correspondence c, const VarietyModel& vm);

Correspondence graph(const EndMatrix& f, const VarietyModel& vm);
Correspondence transpose_graph(const EndMatrix& g, const VarietyModel& vm);
/// The diagonal (graph of the identity).
Correspondence diagonal(const VarietyModel& vm);

Correspondence corr_add(const Correspondence& a, const Correspondence& b,
                        const VarietyModel& vm);
Correspondence corr_scale(const Rat& q, const Correspondence& a, const VarietyModel& vm);

/// Composition g after f (bilinear word concatenation, then canonical form).
Correspondence compose(const Correspondence& g, const Correspondence& f,
                       const VarietyModel& vm);

/// m-fold self-composition, m >= 1. Term count is capped; prefer powers of
/// the graded action for large m.
Correspondence corr_power(const Correspondence& c, int m, const VarietyModel& vm);

/// Reverses every word and swaps atom kinds; fails when a reversed graph
/// would not be an isogeny.
Correspondence transpose(const Correspondence& c, const VarietyModel& vm);

/// Per-degree pullback matrices of the correspondence.
struct GradedAction {
    std::vector<Mat> mats;  // index = cohomological degree, 0..2n

    bool operator==(const GradedAction&) const = default;
};

GradedAction identity_action(const VarietyModel& vm);
GradedAction action_add(const GradedAction& a, const GradedAction& b);
GradedAction action_scale(const Rat& q, const GradedAction& a);
/// Action of a composite: per-degree product in pullback order.
GradedAction action_compose_pullback(const GradedAction& outer, const GradedAction& inner);

GradedAction graded_action(const Correspondence& c, const VarietyModel& vm);

/// (deg_0, ..., deg_n): pairing of the degree-2i image of theta^i against
/// theta^(n-i).
std::vector<Rat> degree_sequence(const Correspondence& c, const VarietyModel& vm);
std::vector<Rat> degree_sequence(const GradedAction& act, const VarietyModel& vm);

/// Sum over i of binom(n,i) * deg_i.
Rat total_degree(const Correspondence& c, const VarietyModel& vm);
Rat total_degree_from_degrees(const std::vector<Rat>& degs, int n);

/// Alternating trace sum of the graded action.
Rat lefschetz_number(const Correspondence& c, const VarietyModel& vm);
Rat lefschetz_number(const GradedAction& act);

/// Intersection number against the transpose of g.
Rat intersect(const Correspondence& f, const Correspondence& g, const VarietyModel& vm);

/// The scaling correspondence for r = n1/n2 > 0: (1/n2^(2n)) * graph([n1])
/// composed with the transposed graph of [n2]. Acts by r^i on degree i.
Correspondence make_Gr(const Rat& r, const VarietyModel& vm);

/// graded_action(compose(make_Gr(r), c)).
GradedAction apply_Gr(const Correspondence& c, const Rat& r, const VarietyModel& vm);

/// Degree projectors recovered from 2n+1 scaling actions by a Vandermonde
/// solve. radii must be distinct and positive, one per degree.
std::vector<GradedAction> kunneth_projectors(const VarietyModel& vm,
                                             const std::vector<Rat>& radii);

/// Image of f under pushforward along phi x psi.
Correspondence lieberman_pushforward(const EndMatrix& phi, const EndMatrix& psi,
                                     const Correspondence& f, const VarietyModel& vm);

}  // namespace av
