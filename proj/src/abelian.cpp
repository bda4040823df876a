#include "av/abelian.hpp"

#include <set>

#include "av/errors.hpp"

namespace av {

void validate_order(const EndOrder& o) {
    if (o.is_Z) return;
    long disc = o.t * o.t - 4 * o.d;
    if (disc >= 0)
        throw InputError("order with t=" + std::to_string(o.t) + ", d=" + std::to_string(o.d) +
                         " is not imaginary quadratic (t^2-4d=" + std::to_string(disc) + " >= 0)");
}

int AbelianSpec::dim() const {
    int n = 0;
    for (const auto& f : factors) n += f.multiplicity;
    return n;
}

std::vector<int> AbelianSpec::block_starts() const {
    std::vector<int> starts;
    int s = 0;
    for (const auto& f : factors) {
        starts.push_back(s);
        s += f.multiplicity;
    }
    return starts;
}

void validate_spec(const AbelianSpec& spec) {
    if (spec.factors.empty()) throw InputError("variety needs at least one factor");
    std::set<std::string> seen;
    for (const auto& f : spec.factors) {
        if (f.curve_id.empty()) throw InputError("factor with empty curve_id");
        if (!seen.insert(f.curve_id).second)
            throw InputError("duplicate curve_id '" + f.curve_id +
                             "': merge copies into one factor via multiplicity");
        if (f.multiplicity < 1)
            throw InputError("factor '" + f.curve_id + "' has non-positive multiplicity");
        validate_order(f.order);
    }
}

OrderElem order_add(const OrderElem& a, const OrderElem& b) { return {a.u + b.u, a.v + b.v}; }

OrderElem order_mul(const OrderElem& a, const OrderElem& b, const EndOrder& o) {
    // (u1 + v1 w)(u2 + v2 w) with w^2 = t w - d
    OrderElem r;
    r.u = a.u * b.u - Int(o.d) * a.v * b.v;
    r.v = a.u * b.v + a.v * b.u + Int(o.t) * a.v * b.v;
    return r;
}

Int order_norm(const OrderElem& a, const EndOrder& o) {
    return a.u * a.u + Int(o.t) * a.u * a.v + Int(o.d) * a.v * a.v;
}

std::string order_elem_string(const OrderElem& a) {
    return a.u.get_str() + (a.v == 0 ? "" : "+" + a.v.get_str() + "w");
}

void validate_endo(const EndMatrix& f, const AbelianSpec& spec) {
    if (f.blocks.size() != spec.factors.size())
        throw InputError("endomorphism has wrong number of blocks");
    for (size_t b = 0; b < f.blocks.size(); ++b) {
        int m = spec.factors[b].multiplicity;
        if ((int)f.blocks[b].size() != m)
            throw InputError("block for '" + spec.factors[b].curve_id + "' must be " +
                             std::to_string(m) + "x" + std::to_string(m));
        for (const auto& row : f.blocks[b]) {
            if ((int)row.size() != m)
                throw InputError("block for '" + spec.factors[b].curve_id + "' must be " +
                                 std::to_string(m) + "x" + std::to_string(m));
            for (const auto& e : row)
                if (spec.factors[b].order.is_Z && e.v != 0)
                    throw InputError("curve '" + spec.factors[b].curve_id +
                                     "' has order Z; entry " + order_elem_string(e) +
                                     " uses the generator w");
        }
    }
}

static EndMatrix shaped_endo(const AbelianSpec& spec) {
    EndMatrix f;
    for (const auto& fac : spec.factors)
        f.blocks.emplace_back(fac.multiplicity, std::vector<OrderElem>(fac.multiplicity));
    return f;
}

EndMatrix zero_endo(const AbelianSpec& spec) { return shaped_endo(spec); }

EndMatrix identity_endo(const AbelianSpec& spec) {
    EndMatrix f = shaped_endo(spec);
    for (auto& block : f.blocks)
        for (size_t i = 0; i < block.size(); ++i) block[i][i] = {1, 0};
    return f;
}

EndMatrix multiplication_map(long m, const AbelianSpec& spec) {
    EndMatrix f = shaped_endo(spec);
    for (auto& block : f.blocks)
        for (size_t i = 0; i < block.size(); ++i) block[i][i] = {Int(m), 0};
    return f;
}

bool is_identity_endo(const EndMatrix& f, const AbelianSpec& spec) {
    return f == identity_endo(spec);
}

EndMatrix compose_endo(const EndMatrix& f, const EndMatrix& g, const AbelianSpec& spec) {
    validate_endo(f, spec);
    validate_endo(g, spec);
    EndMatrix r = shaped_endo(spec);
    for (size_t b = 0; b < r.blocks.size(); ++b) {
        const EndOrder& o = spec.factors[b].order;
        int m = spec.factors[b].multiplicity;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                OrderElem acc;
                for (int l = 0; l < m; ++l)
                    acc = order_add(acc, order_mul(f.blocks[b][i][l], g.blocks[b][l][j], o));
                r.blocks[b][i][j] = acc;
            }
    }
    return r;
}

EndMatrix add_endo(const EndMatrix& f, const EndMatrix& g, const AbelianSpec& spec) {
    validate_endo(f, spec);
    validate_endo(g, spec);
    EndMatrix r = shaped_endo(spec);
    for (size_t b = 0; b < r.blocks.size(); ++b) {
        int m = spec.factors[b].multiplicity;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                r.blocks[b][i][j] = order_add(f.blocks[b][i][j], g.blocks[b][i][j]);
    }
    return r;
}

Mat realize_order_elem(const OrderElem& a, const EndOrder& o) {
    Mat m(2, 2);
    m.at(0, 0) = Rat(a.u);
    m.at(0, 1) = Rat(-a.v * Int(o.d));
    m.at(1, 0) = Rat(a.v);
    m.at(1, 1) = Rat(a.u + a.v * Int(o.t));
    return m;
}

Mat realize_pullback(const EndMatrix& f, const AbelianSpec& spec) {
    validate_endo(f, spec);
    int n = spec.dim();
    Mat M(2 * n, 2 * n);
    std::vector<int> starts = spec.block_starts();
    for (size_t b = 0; b < f.blocks.size(); ++b) {
        const EndOrder& o = spec.factors[b].order;
        int m = spec.factors[b].multiplicity;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Mat r = realize_order_elem(f.blocks[b][i][j], o);
                // entry (i,j) of the point map lands transposed, at
                // coordinate rows j and columns i
                int ro = 2 * (starts[b] + j), co = 2 * (starts[b] + i);
                for (int p = 0; p < 2; ++p)
                    for (int q = 0; q < 2; ++q) M.at(ro + p, co + q) = r.at(p, q);
            }
    }
    return M;
}

Rat isogeny_degree(const EndMatrix& f, const AbelianSpec& spec) {
    return det(realize_pullback(f, spec));
}

std::optional<Rat> is_polarized(const EndMatrix& f, const AbelianSpec& spec,
                                const CohomModel& model) {
    if (model.n != spec.dim()) throw InputError("model dimension does not match variety");
    Mat M2 = exterior_power_matrix(realize_pullback(f, spec), 2);
    std::vector<Rat> th = theta(model).comp[2];
    std::vector<Rat> img = matvec(M2, th);
    std::optional<Rat> q;
    for (size_t i = 0; i < th.size(); ++i) {
        if (th[i] == 0) {
            if (img[i] != 0) return std::nullopt;
            continue;
        }
        Rat ratio = img[i] / th[i];
        if (q && *q != ratio) return std::nullopt;
        q = ratio;
    }
    return q;
}

std::string endo_key(const EndMatrix& f) {
    std::string s;
    for (size_t b = 0; b < f.blocks.size(); ++b) {
        if (b) s += "|";
        s += "B";
        for (size_t i = 0; i < f.blocks[b].size(); ++i) {
            if (i) s += ";";
            for (size_t j = 0; j < f.blocks[b][i].size(); ++j) {
                if (j) s += ",";
                s += order_elem_string(f.blocks[b][i][j]);
            }
        }
    }
    return s;
}

}  // namespace av
