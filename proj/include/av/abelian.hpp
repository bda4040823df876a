#pragma once

#include <optional>
#include <string>
#include <vector>

#include "av/exterior.hpp"
#include "av/matrix.hpp"
#include "av/rational.hpp"

namespace av {

/// Endomorphism order of one elliptic-curve factor: either the rational
/// integers or the imaginary quadratic order Z[w] with w^2 = t*w - d.
struct EndOrder {
    bool is_Z = true;
    long t = 0;
    long d = 0;

    bool operator==(const EndOrder&) const = default;
};

/// Throws unless the order is Z or satisfies t^2 - 4d < 0.
void validate_order(const EndOrder& o);

/// One isotypic factor: multiplicity copies of the curve named curve_id.
struct Factor {
    std::string curve_id;
    int multiplicity = 1;
    EndOrder order;
};

/// Product of pairwise non-isogenous curve powers. Distinct curve_ids have
/// zero Hom between them, so endomorphisms are block-diagonal by factor.
struct AbelianSpec {
    std::vector<Factor> factors;

    int dim() const;
    /// First coordinate slot of each factor block.
    std::vector<int> block_starts() const;
};

void validate_spec(const AbelianSpec& spec);

/// Element u + v*w of an EndOrder (v = 0 when the order is Z).
struct OrderElem {
    Int u = 0;
    Int v = 0;

    bool operator==(const OrderElem&) const = default;
};

OrderElem order_add(const OrderElem& a, const OrderElem& b);
OrderElem order_mul(const OrderElem& a, const OrderElem& b, const EndOrder& o);
/// Field norm u^2 + t*u*v + d*v^2; equals the determinant of the 2x2
/// realization.
Int order_norm(const OrderElem& a, const EndOrder& o);
std::string order_elem_string(const OrderElem& a);

/// Block-diagonal endomorphism: blocks[b] is the multiplicity x multiplicity
/// matrix of order elements for factor b, acting on column vectors of points.
struct EndMatrix {
    std::vector<std::vector<std::vector<OrderElem>>> blocks;

    bool operator==(const EndMatrix&) const = default;
};

void validate_endo(const EndMatrix& f, const AbelianSpec& spec);

EndMatrix zero_endo(const AbelianSpec& spec);
EndMatrix identity_endo(const AbelianSpec& spec);
/// The multiplication-by-m map (diagonal m on every block).
EndMatrix multiplication_map(long m, const AbelianSpec& spec);

bool is_identity_endo(const EndMatrix& f, const AbelianSpec& spec);

/// Composition f after g; realizations multiply in reverse order.
EndMatrix compose_endo(const EndMatrix& f, const EndMatrix& g, const AbelianSpec& spec);
EndMatrix add_endo(const EndMatrix& f, const EndMatrix& g, const AbelianSpec& spec);

/// 2x2 realization u*I + v*C with C the companion matrix of x^2 - t*x + d.
Mat realize_order_elem(const OrderElem& a, const EndOrder& o);

/// Exact 2n x 2n matrix of the degree-1 pullback. Block placement is the
/// transpose of the entrywise realization, so composite maps realize
/// contravariantly: realize(f after g) = realize(g) * realize(f).
Mat realize_pullback(const EndMatrix& f, const AbelianSpec& spec);

/// det of the degree-1 pullback; nonzero exactly for isogenies, and then
/// equal to the isogeny degree.
Rat isogeny_degree(const EndMatrix& f, const AbelianSpec& spec);

/// The scalar q with (degree-2 pullback of f)(theta) = q*theta, when one
/// exists.
std::optional<Rat> is_polarized(const EndMatrix& f, const AbelianSpec& spec,
                                const CohomModel& model);

/// Canonical serialization; equal endomorphisms get equal keys.
std::string endo_key(const EndMatrix& f);

}  // namespace av
