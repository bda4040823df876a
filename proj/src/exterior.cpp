#include "av/exterior.hpp"

#include <bit>
#include <numeric>

#include "av/errors.hpp"

namespace av {

std::vector<uint32_t> subsets_lex(int m, int k) {
    std::vector<uint32_t> out;
    if (k < 0 || k > m) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        uint32_t mask = 0;
        for (int b : c) mask |= (1u << b);
        out.push_back(mask);
        int i = k - 1;
        while (i >= 0 && c[i] == m - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

std::vector<int> mask_bits(uint32_t mask) {
    std::vector<int> out;
    for (int b = 0; mask >> b; ++b)
        if ((mask >> b) & 1u) out.push_back(b);
    return out;
}

int wedge_sign(uint32_t S, uint32_t T) {
    if (S & T) return 0;
    int inv = 0;
    for (int t = 0; T >> t; ++t)
        if ((T >> t) & 1u) inv += std::popcount(S >> (t + 1));
    return (inv % 2 == 0) ? 1 : -1;
}

CohomModel make_model(int n, bool allow_large) {
    if (n < 1) throw InputError("model dimension must be positive");
    if (n > 4 && !allow_large)
        throw InputError("dimension " + std::to_string(n) +
                         " exceeds the default cap of 4; pass the large-model flag");
    if (n > 15) throw InputError("dimension too large for the mask representation");
    CohomModel m;
    m.n = n;
    m.rank = 2 * n;
    m.basis.resize(m.rank + 1);
    m.pos.resize(m.rank + 1);
    for (int i = 0; i <= m.rank; ++i) {
        m.basis[i] = subsets_lex(m.rank, i);
        for (int j = 0; j < (int)m.basis[i].size(); ++j) m.pos[i][m.basis[i][j]] = j;
    }
    return m;
}

GradedClass zero_class(const CohomModel& model) {
    GradedClass g;
    g.comp.resize(model.rank + 1);
    for (int i = 0; i <= model.rank; ++i) g.comp[i].assign(model.basis[i].size(), Rat(0));
    return g;
}

GradedClass basis_class(const CohomModel& model, uint32_t mask) {
    int d = std::popcount(mask);
    if (d > model.rank || (mask >> model.rank) != 0)
        throw InputError("basis mask out of range for this model");
    GradedClass g = zero_class(model);
    g.comp[d][model.pos[d].at(mask)] = 1;
    return g;
}

bool class_is_zero(const GradedClass& a) {
    for (const auto& v : a.comp)
        for (const auto& x : v)
            if (x != 0) return false;
    return true;
}

std::optional<int> homogeneous_degree(const GradedClass& a) {
    std::optional<int> deg;
    for (int i = 0; i < (int)a.comp.size(); ++i)
        for (const auto& x : a.comp[i])
            if (x != 0) {
                if (deg && *deg != i) return std::nullopt;
                deg = i;
                break;
            }
    return deg;
}

static void check_same_shape(const GradedClass& a, const GradedClass& b) {
    if (a.comp.size() != b.comp.size())
        throw InputError("classes belong to models of different rank");
}

GradedClass class_add(const GradedClass& a, const GradedClass& b) {
    check_same_shape(a, b);
    GradedClass g = a;
    for (size_t i = 0; i < g.comp.size(); ++i)
        for (size_t j = 0; j < g.comp[i].size(); ++j) g.comp[i][j] += b.comp[i][j];
    return g;
}

GradedClass class_scale(const Rat& c, const GradedClass& a) {
    GradedClass g = a;
    for (auto& v : g.comp)
        for (auto& x : v) x *= c;
    return g;
}

GradedClass wedge(const CohomModel& model, const GradedClass& a, const GradedClass& b) {
    check_same_shape(a, b);
    if ((int)a.comp.size() != model.rank + 1)
        throw InputError("class does not belong to this model");
    GradedClass g = zero_class(model);
    for (int i = 0; i <= model.rank; ++i) {
        for (int j = 0; i + j <= model.rank; ++j) {
            for (size_t s = 0; s < a.comp[i].size(); ++s) {
                if (a.comp[i][s] == 0) continue;
                uint32_t S = model.basis[i][s];
                for (size_t t = 0; t < b.comp[j].size(); ++t) {
                    if (b.comp[j][t] == 0) continue;
                    uint32_t T = model.basis[j][t];
                    int sg = wedge_sign(S, T);
                    if (sg == 0) continue;
                    int d = i + j;
                    int idx = model.pos[d].at(S | T);
                    g.comp[d][idx] += Rat(sg) * a.comp[i][s] * b.comp[j][t];
                }
            }
        }
    }
    return g;
}

Rat integrate(const CohomModel& model, const GradedClass& a) {
    if ((int)a.comp.size() != model.rank + 1)
        throw InputError("class does not belong to this model");
    return a.comp[model.rank][0];
}

Rat poincare_pairing(const CohomModel& model, const GradedClass& a, const GradedClass& b) {
    auto da = homogeneous_degree(a);
    auto db = homogeneous_degree(b);
    if (da && db && *da + *db != model.rank)
        throw InputError("pairing requires complementary degrees");
    return integrate(model, wedge(model, a, b));
}

GradedClass theta(const CohomModel& model) {
    GradedClass g = zero_class(model);
    for (int j = 0; j < model.n; ++j) {
        uint32_t mask = 0b11u << (2 * j);
        g.comp[2][model.pos[2].at(mask)] = 1;
    }
    return g;
}

GradedClass theta_pow(const CohomModel& model, int k) {
    if (k < 0) throw InputError("negative power of the ample class");
    GradedClass g = basis_class(model, 0);
    GradedClass th = theta(model);
    for (int i = 0; i < k; ++i) g = wedge(model, g, th);
    return g;
}

Mat exterior_power_matrix(const Mat& M, int i) {
    if (i < 0) throw InputError("negative exterior power");
    std::vector<uint32_t> rowsets = subsets_lex(M.rows, i);
    std::vector<uint32_t> colsets = subsets_lex(M.cols, i);
    Mat out((int)rowsets.size(), (int)colsets.size());
    for (size_t r = 0; r < rowsets.size(); ++r) {
        std::vector<int> ri = mask_bits(rowsets[r]);
        for (size_t c = 0; c < colsets.size(); ++c) {
            std::vector<int> ci = mask_bits(colsets[c]);
            out.at((int)r, (int)c) = det(submatrix(M, ri, ci));
        }
    }
    return out;
}

Mat pushforward_matrix(const Mat& M, int i) {
    if (M.rows != M.cols) throw InputError("pushforward requires a square matrix");
    Rat d = det(M);
    if (d == 0) throw InputError("not an isogeny: singular action on degree 1");
    Mat comp = exterior_power_matrix(M, i);
    return inverse(comp).scaled(d);
}

Mat pairing_gram(const CohomModel& model, int i) {
    if (i < 0 || i > model.rank) throw InputError("degree out of range");
    int j = model.rank - i;
    Mat g(model.betti(i), model.betti(j));
    for (int s = 0; s < model.betti(i); ++s) {
        uint32_t S = model.basis[i][s];
        uint32_t Sc = ((model.rank >= 32 ? 0xffffffffu : ((1u << model.rank) - 1u))) & ~S;
        int t = model.pos[j].at(Sc);
        g.at(s, t) = wedge_sign(S, Sc);
    }
    return g;
}

int complement_sign(const CohomModel& model, uint32_t mask) {
    uint32_t full = (model.rank >= 32 ? 0xffffffffu : ((1u << model.rank) - 1u));
    return wedge_sign(mask, full & ~mask);
}

}  // namespace av
