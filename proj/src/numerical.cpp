#include "av/numerical.hpp"

#include <algorithm>

#include "av/errors.hpp"

namespace av {

GradedClass class_from_vector(const CohomModel& model, int degree,
                              const std::vector<Rat>& coords) {
    if (degree < 0 || degree > model.rank || (int)coords.size() != model.betti(degree))
        throw InputError("coordinate vector does not match the requested degree");
    GradedClass g = zero_class(model);
    g.comp[(size_t)degree] = coords;
    return g;
}

static GradedClass graph_divisor_class(const VarietyModel& vm, int p, int q,
                                       const OrderElem& phi, const EndOrder& o) {
    const CohomModel& model = vm.cohom;
    int n = vm.n();
    // pullback on degree 1 along the inclusion of {x_p = phi(x_q)}, a product
    // over the coordinates other than p
    Mat P(2 * (n - 1), 2 * n);
    std::vector<int> row_of_coord(n, -1);
    int r = 0;
    for (int c = 0; c < n; ++c)
        if (c != p) {
            row_of_coord[c] = 2 * r;
            ++r;
        }
    for (int c = 0; c < n; ++c) {
        if (c == p) continue;
        P.at(row_of_coord[c], 2 * c) = 1;
        P.at(row_of_coord[c] + 1, 2 * c + 1) = 1;
    }
    Mat rp = realize_order_elem(phi, o);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) P.at(row_of_coord[q] + i, 2 * p + j) += rp.at(i, j);

    // pairings against the complementary-degree basis, then Poincare duality
    GradedClass D = zero_class(model);
    std::vector<int> all_rows(2 * (size_t)(n - 1));
    for (size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = (int)i;
    uint32_t full = (1u << model.rank) - 1u;
    for (uint32_t S : model.basis[2]) {
        Rat val = det(submatrix(P, all_rows, mask_bits(full & ~S)));
        D.comp[2][model.pos[2].at(S)] = val * Rat(complement_sign(model, S));
    }
    return D;
}

std::vector<GradedClass> divisor_generators(const VarietyModel& vm) {
    const CohomModel& model = vm.cohom;
    std::vector<GradedClass> gens;
    for (int c = 0; c < vm.n(); ++c) gens.push_back(basis_class(model, 0b11u << (2 * c)));
    std::vector<int> starts = vm.spec.block_starts();
    for (size_t b = 0; b < vm.spec.factors.size(); ++b) {
        const Factor& fac = vm.spec.factors[b];
        for (int p = starts[b]; p < starts[b] + fac.multiplicity; ++p)
            for (int q = starts[b]; q < starts[b] + fac.multiplicity; ++q) {
                if (p == q) continue;
                gens.push_back(graph_divisor_class(vm, p, q, OrderElem{1, 0}, fac.order));
                if (!fac.order.is_Z)
                    gens.push_back(graph_divisor_class(vm, p, q, OrderElem{0, 1}, fac.order));
            }
    }
    return gens;
}

static std::vector<Rat> pairing_row(const VarietyModel& vm, const GradedClass& x,
                                    const std::vector<GradedClass>& duals) {
    std::vector<Rat> row;
    row.reserve(duals.size());
    for (const GradedClass& d : duals) row.push_back(poincare_pairing(vm.cohom, x, d));
    return row;
}

/// All degree-(2k) products of k generators, kept only when they enlarge the
/// linear span; deterministic combination order.
static std::vector<GradedClass> wedge_products(const VarietyModel& vm,
                                               const std::vector<GradedClass>& gens, int k) {
    const CohomModel& model = vm.cohom;
    std::vector<GradedClass> out;
    if (k == 0) {
        out.push_back(basis_class(model, 0));
        return out;
    }
    SpanTracker span(model.betti(2 * k));
    std::vector<int> idx(k, 0);
    while (true) {
        GradedClass w = gens[(size_t)idx[0]];
        for (int j = 1; j < k; ++j) w = wedge(model, w, gens[(size_t)idx[j]]);
        if (!class_is_zero(w) && span.add_if_independent(w.comp[2 * (size_t)k]))
            out.push_back(std::move(w));
        // next combination with repetition
        int j = k - 1;
        while (j >= 0 && idx[j] == (int)gens.size() - 1) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < k; ++l) idx[l] = idx[j];
    }
    return out;
}

static void rebuild_quotient(NumericalLattice& lat) {
    SpanTracker rows((int)lat.duals.size());
    lat.quotient_basis.clear();
    for (int s = 0; s < lat.gram.rows; ++s) {
        std::vector<Rat> row(lat.gram.a.begin() + (size_t)s * lat.gram.cols,
                             lat.gram.a.begin() + (size_t)(s + 1) * lat.gram.cols);
        if (rows.add_if_independent(row)) lat.quotient_basis.push_back(s);
    }
    lat.dimension = (int)lat.quotient_basis.size();
}

NumericalLattice build_Nk(const VarietyModel& vm, int k) {
    if (k < 0 || k > vm.n()) throw InputError("codimension out of range");
    NumericalLattice lat;
    lat.k = k;
    std::vector<GradedClass> gens = divisor_generators(vm);
    lat.spanning = wedge_products(vm, gens, k);
    lat.duals = wedge_products(vm, gens, vm.n() - k);
    lat.gram = Mat((int)lat.spanning.size(), (int)lat.duals.size());
    for (size_t s = 0; s < lat.spanning.size(); ++s) {
        std::vector<Rat> row = pairing_row(vm, lat.spanning[s], lat.duals);
        for (size_t t = 0; t < row.size(); ++t) lat.gram.at((int)s, (int)t) = row[t];
    }
    rebuild_quotient(lat);
    return lat;
}

static Mat basis_rows_transposed(const NumericalLattice& lat) {
    Mat At((int)lat.duals.size(), lat.dimension);
    for (int b = 0; b < lat.dimension; ++b)
        for (int t = 0; t < At.rows; ++t) At.at(t, b) = lat.gram.at(lat.quotient_basis[(size_t)b], t);
    return At;
}

InducedAction induced_action(const GradedAction& act, const NumericalLattice& lat0,
                             const VarietyModel& vm) {
    InducedAction out;
    out.lattice = lat0;
    NumericalLattice& lat = out.lattice;
    int k = lat.k;
    const Mat& A2k = act.mats[(size_t)(2 * k)];

    bool grew = true;
    while (grew) {
        grew = false;
        Mat At = basis_rows_transposed(lat);
        for (size_t s = 0; s < lat.spanning.size(); ++s) {
            GradedClass img =
                class_from_vector(vm.cohom, 2 * k, matvec(A2k, lat.spanning[s].comp[2 * (size_t)k]));
            std::vector<Rat> row = pairing_row(vm, img, lat.duals);
            if (!solve(At, row)) {
                int old_rank = lat.dimension;
                lat.spanning.push_back(img);
                Mat g((int)lat.spanning.size(), (int)lat.duals.size());
                for (int i = 0; i < g.rows - 1; ++i)
                    for (int j = 0; j < g.cols; ++j) g.at(i, j) = lat.gram.at(i, j);
                for (int j = 0; j < g.cols; ++j) g.at(g.rows - 1, j) = row[(size_t)j];
                lat.gram = std::move(g);
                rebuild_quotient(lat);
                out.saturation_events.push_back(
                    "N^" + std::to_string(k) + ": image of spanning class " + std::to_string(s) +
                    " enlarged the lattice (rank " + std::to_string(old_rank) + " -> " +
                    std::to_string(lat.dimension) + ")");
                grew = true;
                break;
            }
        }
    }

    Mat At = basis_rows_transposed(lat);
    std::vector<std::vector<Rat>> img_coords(lat.spanning.size());
    for (size_t s = 0; s < lat.spanning.size(); ++s) {
        GradedClass img =
            class_from_vector(vm.cohom, 2 * k, matvec(A2k, lat.spanning[s].comp[2 * (size_t)k]));
        auto c = solve(At, pairing_row(vm, img, lat.duals));
        if (!c) throw InputError("induced action: inconsistent system after saturation");
        img_coords[s] = std::move(*c);
    }

    out.matrix = Mat(lat.dimension, lat.dimension);
    for (int b = 0; b < lat.dimension; ++b)
        for (int a = 0; a < lat.dimension; ++a)
            out.matrix.at(a, b) = img_coords[(size_t)lat.quotient_basis[(size_t)b]][(size_t)a];

    // descent check: spanning classes equal in the quotient must have equal
    // images in the quotient
    for (size_t s = 0; s < lat.spanning.size(); ++s) {
        std::vector<Rat> row(lat.gram.a.begin() + s * (size_t)lat.gram.cols,
                             lat.gram.a.begin() + (s + 1) * (size_t)lat.gram.cols);
        auto coords = solve(At, row);
        std::vector<Rat> want = matvec(out.matrix, *coords);
        if (want != img_coords[s])
            out.descent_violations.push_back("N^" + std::to_string(k) +
                                             ": action does not respect the pairing kernel at "
                                             "spanning class " +
                                             std::to_string(s));
    }
    return out;
}

InducedAction induced_action(const Correspondence& c, const NumericalLattice& lat,
                             const VarietyModel& vm) {
    return induced_action(graded_action(c, vm), lat, vm);
}

Rat lattice_degree(const GradedAction& act, const NumericalLattice& lat,
                   const VarietyModel& vm) {
    int k = lat.k, n = vm.n();
    InducedAction ind = induced_action(act, lat, vm);
    const NumericalLattice& L = ind.lattice;
    Mat At = basis_rows_transposed(L);
    GradedClass thk = theta_pow(vm.cohom, k);
    auto coords = solve(At, pairing_row(vm, thk, L.duals));
    if (!coords) throw InputError("theta power escapes the divisor lattice");
    std::vector<Rat> img = matvec(ind.matrix, *coords);
    GradedClass thnk = theta_pow(vm.cohom, n - k);
    Rat val = 0;
    for (int b = 0; b < L.dimension; ++b)
        val += img[(size_t)b] *
               poincare_pairing(vm.cohom, L.spanning[(size_t)L.quotient_basis[(size_t)b]], thnk);
    return val;
}

AlgTrSplit alg_tr_split(const VarietyModel& vm, int k) {
    if (k < 0 || k > vm.n()) throw InputError("codimension out of range");
    const CohomModel& model = vm.cohom;
    NumericalLattice lat_k = build_Nk(vm, k);
    NumericalLattice lat_c = build_Nk(vm, vm.n() - k);

    AlgTrSplit split;
    for (const GradedClass& g : lat_k.spanning) split.algebraic.push_back(g.comp[2 * (size_t)k]);

    // pairing functionals of the complementary algebraic classes
    Mat G = pairing_gram(model, 2 * k);
    Mat constraints((int)lat_c.spanning.size(), model.betti(2 * k));
    for (size_t a = 0; a < lat_c.spanning.size(); ++a) {
        std::vector<Rat> gy = matvec(G, lat_c.spanning[a].comp[(size_t)(2 * (vm.n() - k))]);
        for (size_t j = 0; j < gy.size(); ++j) constraints.at((int)a, (int)j) = gy[j];
    }
    split.transcendental = kernel_basis(constraints);

    SpanTracker joint(model.betti(2 * k));
    bool independent = true;
    for (const auto& v : split.algebraic)
        if (!joint.add_if_independent(v)) independent = false;
    for (const auto& v : split.transcendental)
        if (!joint.add_if_independent(v)) independent = false;
    split.direct = independent && joint.rank() == model.betti(2 * k);
    return split;
}

}  // namespace av
