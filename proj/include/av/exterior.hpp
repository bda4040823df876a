#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "av/matrix.hpp"
#include "av/rational.hpp"

namespace av {

/// All k-element subsets of {0,...,m-1} as bitmasks, in lexicographic order
/// of the ascending index tuples.
std::vector<uint32_t> subsets_lex(int m, int k);

/// Set bits of a mask in ascending order.
std::vector<int> mask_bits(uint32_t mask);

/// Sign of e_S wedge e_T as a multiple of e_{S|T}; 0 if the sets overlap.
int wedge_sign(uint32_t S, uint32_t T);

/// Exterior-algebra model of the cohomology of an n-dimensional variety.
/// Degree-i piece has the i-subsets of {0,...,2n-1} as its basis.
struct CohomModel {
    int n = 0;
    int rank = 0;  // 2n
    std::vector<std::vector<uint32_t>> basis;            // per degree, lex order
    std::vector<std::unordered_map<uint32_t, int>> pos;  // mask -> basis index

    int betti(int i) const { return (i < 0 || i > rank) ? 0 : (int)basis[i].size(); }
};

/// Builds the model. n > 4 requires allow_large (compound-matrix sizes grow
/// as binomials).
CohomModel make_model(int n, bool allow_large = false);

/// Element of the full graded algebra; comp[i] is the degree-i coefficient
/// vector over the lex basis.
struct GradedClass {
    std::vector<std::vector<Rat>> comp;

    bool operator==(const GradedClass&) const = default;
};

GradedClass zero_class(const CohomModel& model);
GradedClass basis_class(const CohomModel& model, uint32_t mask);
bool class_is_zero(const GradedClass& a);

/// The unique nonzero degree if the class is homogeneous, nullopt if zero or
/// mixed.
std::optional<int> homogeneous_degree(const GradedClass& a);

GradedClass class_add(const GradedClass& a, const GradedClass& b);
GradedClass class_scale(const Rat& c, const GradedClass& a);

GradedClass wedge(const CohomModel& model, const GradedClass& a, const GradedClass& b);

/// Coefficient of the top basis element (the full index set).
Rat integrate(const CohomModel& model, const GradedClass& a);

/// integrate(wedge(a, b)). Homogeneous inputs of non-complementary degrees
/// are rejected.
Rat poincare_pairing(const CohomModel& model, const GradedClass& a, const GradedClass& b);

/// Sum of the coordinate classes e_{2j} ^ e_{2j+1}; the reference ample class.
GradedClass theta(const CohomModel& model);
GradedClass theta_pow(const CohomModel& model, int k);

/// i-th compound matrix: entry (T, S) is det of the (rows T, cols S) minor.
/// Rectangular inputs allowed; subset order matches subsets_lex.
Mat exterior_power_matrix(const Mat& M, int i);

/// det(M) * inverse of the i-th compound; the degree-i pushforward of the
/// endomorphism whose degree-1 pullback is M.
Mat pushforward_matrix(const Mat& M, int i);

/// Gram matrix of the pairing between degrees i and 2n-i; a signed
/// permutation matrix.
Mat pairing_gram(const CohomModel& model, int i);

/// Sign of e_S ^ e_{S^c} relative to the top basis element.
int complement_sign(const CohomModel& model, uint32_t mask);

}  // namespace av
