#include "av/correspondence.hpp"

#include <algorithm>
#include <map>

#include "av/errors.hpp"

namespace av {

namespace {
constexpr size_t kTermCap = 4096;
}

VarietyModel make_variety(AbelianSpec spec, bool allow_large) {
    validate_spec(spec);
    VarietyModel vm;
    vm.cohom = make_model(spec.dim(), allow_large);
    vm.spec = std::move(spec);
    return vm;
}

std::string atom_key(const Atom& a) {
    return (a.kind == AtomKind::Graph ? "G:" : "T:") + endo_key(a.endo);
}

std::string word_key(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.atoms.size(); ++i) {
        if (i) s += " ";
        s += atom_key(w.atoms[i]);
    }
    return s;
}

std::string corr_key(const Correspondence& c) {
    std::string s;
    for (size_t i = 0; i < c.terms.size(); ++i) {
        if (i) s += " + ";
        s += rat_string(c.terms[i].coeff) + "*[" + word_key(c.terms[i].word) + "]";
    }
    return s;
}

Correspondence canonicalize(Correspondence c, const VarietyModel& vm) {
    const AbelianSpec& spec = vm.spec;
    std::vector<Term> kept;
    for (Term& t : c.terms) {
        if (t.coeff < 0)
            throw InputError("negative coefficient " + rat_string(t.coeff) +
                             " breaks effectiveness");
        if (t.coeff == 0) continue;
        if (t.word.atoms.empty())
            throw InputError("empty word in correspondence term");
        for (Atom& a : t.word.atoms) {
            validate_endo(a.endo, spec);
            if (a.kind == AtomKind::TransposeGraph) {
                if (isogeny_degree(a.endo, spec) == 0)
                    throw InputError(
                        "not a finite correspondence: transposed graph of a non-isogeny");
                if (is_identity_endo(a.endo, spec)) a.kind = AtomKind::Graph;
            }
        }
        bool changed = true;
        while (changed) {
            changed = false;
            auto& at = t.word.atoms;
            for (size_t i = 0; i + 1 < at.size(); ++i) {
                if (at[i].kind == AtomKind::Graph && at[i + 1].kind == AtomKind::Graph) {
                    at[i].endo = compose_endo(at[i].endo, at[i + 1].endo, spec);
                    at.erase(at.begin() + (long)i + 1);
                    changed = true;
                    break;
                }
                if (at[i].kind == AtomKind::TransposeGraph &&
                    at[i + 1].kind == AtomKind::Graph && at[i].endo == at[i + 1].endo) {
                    t.coeff *= isogeny_degree(at[i].endo, spec);
                    at.erase(at.begin() + (long)i, at.begin() + (long)i + 2);
                    changed = true;
                    break;
                }
            }
            if (!changed && at.size() > 1) {
                for (size_t i = 0; i < at.size(); ++i)
                    if (at[i].kind == AtomKind::Graph && is_identity_endo(at[i].endo, spec)) {
                        at.erase(at.begin() + (long)i);
                        changed = true;
                        break;
                    }
            }
        }
        if (t.word.atoms.empty())
            t.word.atoms.push_back(Atom{AtomKind::Graph, identity_endo(spec)});
        kept.push_back(std::move(t));
    }
    std::map<std::string, Term> merged;
    for (Term& t : kept) {
        std::string key = word_key(t.word);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(std::move(key), std::move(t));
        else
            it->second.coeff += t.coeff;
    }
    Correspondence out;
    for (auto& [key, t] : merged)
        if (t.coeff != 0) out.terms.push_back(std::move(t));
    if (out.terms.size() > kTermCap)
        throw InputError("correspondence expansion exceeds the term cap");
    return out;
}

Correspondence graph(const EndMatrix& f, const VarietyModel& vm) {
    Correspondence c;
    c.terms.push_back(Term{Rat(1), Word{{Atom{AtomKind::Graph, f}}}});
    return canonicalize(std::move(c), vm);
}

Correspondence transpose_graph(const EndMatrix& g, const VarietyModel& vm) {
    Correspondence c;
    c.terms.push_back(Term{Rat(1), Word{{Atom{AtomKind::TransposeGraph, g}}}});
    return canonicalize(std::move(c), vm);
}

Correspondence diagonal(const VarietyModel& vm) { return graph(identity_endo(vm.spec), vm); }

Correspondence corr_add(const Correspondence& a, const Correspondence& b,
                        const VarietyModel& vm) {
    Correspondence c = a;
    c.terms.insert(c.terms.end(), b.terms.begin(), b.terms.end());
    return canonicalize(std::move(c), vm);
}

Correspondence corr_scale(const Rat& q, const Correspondence& a, const VarietyModel& vm) {
    Correspondence c = a;
    for (Term& t : c.terms) t.coeff *= q;
    return canonicalize(std::move(c), vm);
}

Correspondence compose(const Correspondence& g, const Correspondence& f,
                       const VarietyModel& vm) {
    Correspondence c;
    for (const Term& tg : g.terms)
        for (const Term& tf : f.terms) {
            Term t;
            t.coeff = tg.coeff * tf.coeff;
            t.word.atoms = tg.word.atoms;
            t.word.atoms.insert(t.word.atoms.end(), tf.word.atoms.begin(),
                                tf.word.atoms.end());
            c.terms.push_back(std::move(t));
        }
    return canonicalize(std::move(c), vm);
}

Correspondence corr_power(const Correspondence& c, int m, const VarietyModel& vm) {
    if (m < 1) throw InputError("power exponent must be >= 1");
    Correspondence acc = c;
    for (int i = 1; i < m; ++i) acc = compose(acc, c, vm);
    return acc;
}

Correspondence transpose(const Correspondence& c, const VarietyModel& vm) {
    Correspondence out;
    for (const Term& t : c.terms) {
        Term r;
        r.coeff = t.coeff;
        for (auto it = t.word.atoms.rbegin(); it != t.word.atoms.rend(); ++it) {
            Atom a = *it;
            if (a.kind == AtomKind::Graph) {
                if (isogeny_degree(a.endo, vm.spec) == 0)
                    throw InputError("transpose not finite: graph of a non-isogeny");
                a.kind = AtomKind::TransposeGraph;
            } else {
                a.kind = AtomKind::Graph;
            }
            r.word.atoms.push_back(std::move(a));
        }
        out.terms.push_back(std::move(r));
    }
    return canonicalize(std::move(out), vm);
}

GradedAction identity_action(const VarietyModel& vm) {
    GradedAction a;
    for (int i = 0; i <= vm.cohom.rank; ++i) a.mats.push_back(Mat::identity(vm.cohom.betti(i)));
    return a;
}

GradedAction action_add(const GradedAction& a, const GradedAction& b) {
    if (a.mats.size() != b.mats.size()) throw InputError("graded actions of different rank");
    GradedAction r;
    for (size_t i = 0; i < a.mats.size(); ++i) r.mats.push_back(a.mats[i] + b.mats[i]);
    return r;
}

GradedAction action_scale(const Rat& q, const GradedAction& a) {
    GradedAction r;
    for (const Mat& m : a.mats) r.mats.push_back(m.scaled(q));
    return r;
}

GradedAction action_compose_pullback(const GradedAction& outer, const GradedAction& inner) {
    if (outer.mats.size() != inner.mats.size())
        throw InputError("graded actions of different rank");
    GradedAction r;
    // pullback of (outer after inner) is inner-pullback composed after
    // outer-pullback in map order, i.e. matrix product inner * outer reversed:
    // act(compose(outer, inner)) = act(inner) * act(outer)
    for (size_t i = 0; i < outer.mats.size(); ++i)
        r.mats.push_back(inner.mats[i] * outer.mats[i]);
    return r;
}

GradedAction graded_action(const Correspondence& c, const VarietyModel& vm) {
    int rank = vm.cohom.rank;
    GradedAction total;
    for (int i = 0; i <= rank; ++i) total.mats.push_back(Mat::zero(vm.cohom.betti(i), vm.cohom.betti(i)));
    for (const Term& t : c.terms) {
        std::vector<Mat> acc;
        for (int i = 0; i <= rank; ++i) acc.push_back(Mat::identity(vm.cohom.betti(i)));
        for (const Atom& a : t.word.atoms) {
            Mat M1 = realize_pullback(a.endo, vm.spec);
            bool push = (a.kind == AtomKind::TransposeGraph);
            Rat d;
            if (push) {
                d = det(M1);
                if (d == 0)
                    throw InputError(
                        "not a finite correspondence: transposed graph of a non-isogeny");
            }
            for (int i = 0; i <= rank; ++i) {
                Mat Mi = exterior_power_matrix(M1, i);
                if (push) Mi = inverse(Mi).scaled(d);
                acc[i] = Mi * acc[i];
            }
        }
        for (int i = 0; i <= rank; ++i) total.mats[i] = total.mats[i] + acc[i].scaled(t.coeff);
    }
    return total;
}

std::vector<Rat> degree_sequence(const GradedAction& act, const VarietyModel& vm) {
    int n = vm.n();
    std::vector<Rat> degs;
    for (int k = 0; k <= n; ++k) {
        GradedClass thk = theta_pow(vm.cohom, k);
        GradedClass img = zero_class(vm.cohom);
        img.comp[2 * k] = matvec(act.mats[2 * k], thk.comp[2 * k]);
        degs.push_back(poincare_pairing(vm.cohom, img, theta_pow(vm.cohom, n - k)));
    }
    return degs;
}

std::vector<Rat> degree_sequence(const Correspondence& c, const VarietyModel& vm) {
    return degree_sequence(graded_action(c, vm), vm);
}

Rat total_degree_from_degrees(const std::vector<Rat>& degs, int n) {
    Rat s = 0;
    for (int i = 0; i <= n; ++i) s += Rat(binomial(n, i)) * degs[(size_t)i];
    return s;
}

Rat total_degree(const Correspondence& c, const VarietyModel& vm) {
    return total_degree_from_degrees(degree_sequence(c, vm), vm.n());
}

Rat lefschetz_number(const GradedAction& act) {
    Rat s = 0;
    for (size_t i = 0; i < act.mats.size(); ++i) {
        Rat tr = act.mats[i].trace();
        s += (i % 2 == 0) ? tr : -tr;
    }
    return s;
}

Rat lefschetz_number(const Correspondence& c, const VarietyModel& vm) {
    return lefschetz_number(graded_action(c, vm));
}

Rat intersect(const Correspondence& f, const Correspondence& g, const VarietyModel& vm) {
    return lefschetz_number(compose(transpose(g, vm), f, vm), vm);
}

Correspondence make_Gr(const Rat& r, const VarietyModel& vm) {
    if (r <= 0) throw InputError("scaling ratio must be positive");
    Int num = r.get_num(), den = r.get_den();
    if (!num.fits_slong_p() || !den.fits_slong_p())
        throw InputError("scaling ratio numerator/denominator too large");
    long n1 = num.get_si(), n2 = den.get_si();
    Correspondence c = compose(graph(multiplication_map(n1, vm.spec), vm),
                               transpose_graph(multiplication_map(n2, vm.spec), vm), vm);
    Rat inv_deg = Rat(1) / rat_pow(Rat(n2), 2 * vm.n());
    return corr_scale(inv_deg, c, vm);
}

GradedAction apply_Gr(const Correspondence& c, const Rat& r, const VarietyModel& vm) {
    return graded_action(compose(make_Gr(r, vm), c, vm), vm);
}

std::vector<GradedAction> kunneth_projectors(const VarietyModel& vm,
                                             const std::vector<Rat>& radii) {
    int N = vm.cohom.rank + 1;
    if ((int)radii.size() != N)
        throw InputError("need exactly " + std::to_string(N) + " sample radii");
    for (const Rat& r : radii)
        if (r <= 0) throw InputError("sample radii must be positive");
    for (size_t i = 0; i < radii.size(); ++i)
        for (size_t j = i + 1; j < radii.size(); ++j)
            if (radii[i] == radii[j])
                throw InputError("repeated sample radius " + rat_string(radii[i]) +
                                 ": Vandermonde system is singular");
    Mat V(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) V.at(i, j) = rat_pow(radii[(size_t)j], i);
    Mat Vinv = inverse(V);
    std::vector<GradedAction> scalings;
    for (const Rat& r : radii) scalings.push_back(graded_action(make_Gr(r, vm), vm));
    std::vector<GradedAction> projectors;
    for (int t = 0; t < N; ++t) {
        GradedAction p = action_scale(Vinv.at(0, t), scalings[0]);
        for (int j = 1; j < N; ++j)
            p = action_add(p, action_scale(Vinv.at(j, t), scalings[(size_t)j]));
        projectors.push_back(std::move(p));
    }
    return projectors;
}

Correspondence lieberman_pushforward(const EndMatrix& phi, const EndMatrix& psi,
                                     const Correspondence& f, const VarietyModel& vm) {
    if (isogeny_degree(phi, vm.spec) == 0 || isogeny_degree(psi, vm.spec) == 0)
        throw InputError("pushforward along a product of non-isogenies");
    return compose(graph(psi, vm), compose(f, transpose_graph(phi, vm), vm), vm);
}

}  // namespace av
