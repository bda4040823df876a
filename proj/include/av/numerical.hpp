#pragma once

#include <string>
#include <vector>

#include "av/correspondence.hpp"

namespace av {

/// Degree-2 generators of the divisor algebra: one fiber class per
/// coordinate, plus for every ordered pair of coordinates on the same curve
/// and every order generator (1 and, for CM orders, w) the class of the
/// graph divisor {x_p = phi(x_q)}, recovered from its pairings by Poincare
/// duality.
std::vector<GradedClass> divisor_generators(const VarietyModel& vm);

/// Divisor-generated model of the codimension-k numerical group: spanning
/// wedge products, dual products of complementary codimension, their pairing
/// matrix, and a basis of the quotient by the pairing kernel.
struct NumericalLattice {
    int k = 0;
    std::vector<GradedClass> spanning;  // degree 2k, independent in cohomology
    std::vector<GradedClass> duals;     // degree 2n-2k
    Mat gram;                           // spanning x duals pairings
    std::vector<int> quotient_basis;    // spanning indices with independent gram rows
    int dimension = 0;
};

NumericalLattice build_Nk(const VarietyModel& vm, int k);

/// Action of a correspondence on the lattice quotient. When an image class
/// falls outside the lattice the spanning set is enlarged (saturation) and
/// the quotient rebuilt; every such event is recorded. Failures of the
/// action to respect the pairing kernel are recorded as descent violations.
struct InducedAction {
    Mat matrix;  // on the final quotient basis, column convention
    NumericalLattice lattice;
    std::vector<std::string> saturation_events;
    std::vector<std::string> descent_violations;
};

InducedAction induced_action(const GradedAction& act, const NumericalLattice& lat,
                             const VarietyModel& vm);
InducedAction induced_action(const Correspondence& c, const NumericalLattice& lat,
                             const VarietyModel& vm);

/// deg_k recomputed inside the lattice: numerical coordinates of theta^k,
/// induced matrix, then pairing of the image against theta^(n-k).
Rat lattice_degree(const GradedAction& act, const NumericalLattice& lat,
                   const VarietyModel& vm);

/// Splitting of degree 2k into the algebraic subspace and the pairing
/// kernel against complementary algebraic classes.
struct AlgTrSplit {
    std::vector<std::vector<Rat>> algebraic;       // coordinate vectors in degree 2k
    std::vector<std::vector<Rat>> transcendental;  // ditto
    bool direct = false;                           // spans meet trivially and fill the degree
};

AlgTrSplit alg_tr_split(const VarietyModel& vm, int k);

/// Helper: the coefficient vector of a homogeneous class in one degree.
GradedClass class_from_vector(const CohomModel& model, int degree,
                              const std::vector<Rat>& coords);

}  // namespace av
