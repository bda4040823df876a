#include "av/poly.hpp"

#include <sstream>

namespace av {

namespace {
void strip(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { strip(c); }

Poly Poly::constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

const Rat& Poly::lead() const {
    if (c.empty()) throw InputError("lead of zero polynomial");
    return c.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat v(0);
    for (int i = (int)c.size() - 1; i >= 0; --i) v = v * x + c[i];
    return v;
}

std::string Poly::to_string(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = (int)c.size() - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        Rat a = c[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Rat mag = rat_abs(a);
        if (i == 0 || mag != 1) os << rat_string(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    }
    return Poly(std::move(c));
}

Poly poly_scale(const Poly& a, const Rat& s) {
    std::vector<Rat> c(a.c);
    for (Rat& x : c) x *= s;
    return Poly(std::move(c));
}

Poly poly_shift(const Poly& a, int k) {
    if (a.is_zero()) return Poly();
    std::vector<Rat> c(a.c.size() + k, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i + k] = a.c[i];
    return Poly(std::move(c));
}

void poly_divmod(const Poly& a, const Poly& b, Poly* q, Poly* r) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    std::vector<Rat> rem(a.c), quot;
    int db = b.deg();
    if ((int)rem.size() - 1 >= db) quot.assign(rem.size() - db, Rat(0));
    for (int i = (int)rem.size() - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / b.c.back();
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c[j];
    }
    if (q) *q = Poly(std::move(quot));
    if (r) *r = Poly(std::move(rem));
}

bool poly_divides(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero();
    Poly r;
    poly_divmod(b, a, nullptr, &r);
    return r.is_zero();
}

Poly derivative(const Poly& a) {
    if (a.deg() <= 0) return Poly();
    std::vector<Rat> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = a.c[i] * (long)i;
    return Poly(std::move(c));
}

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, Rat(1) / a.lead());
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r;
        poly_divmod(a, b, nullptr, &r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly squarefree_part(const Poly& a) {
    if (a.deg() <= 1) return monic(a);
    Poly g = poly_gcd(a, derivative(a));
    if (g.deg() == 0) return monic(a);
    Poly q;
    poly_divmod(a, g, &q, nullptr);
    return monic(q);
}

namespace {

// Newton interpolation at the integer nodes 0..n.
Poly interpolate_at_integers(const std::vector<Rat>& values) {
    int n = (int)values.size();
    std::vector<Rat> dd(values);  // divided differences, built in place
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(level);
    Poly result = Poly::constant(dd[n - 1]);
    for (int i = n - 2; i >= 0; --i) {
        Poly node(std::vector<Rat>{Rat(-i), Rat(1)});
        result = result * node + Poly::constant(dd[i]);
    }
    return result;
}

}  // namespace

Poly char_poly(const Mat& M) {
    if (!M.is_square()) throw InputError("char_poly: non-square matrix");
    int n = M.rows;
    if (n == 0) return Poly::constant(Rat(1));
    std::vector<Rat> values;
    values.reserve(n + 1);
    for (int x = 0; x <= n; ++x) {
        Mat s(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s.at(i, j) = (i == j ? Rat(Rat(x) - M.at(i, j)) : Rat(-M.at(i, j)));
        values.push_back(det(s));
    }
    return interpolate_at_integers(values);
}

namespace {

// Minimal monic annihilator of v under M via Krylov span.
Poly vector_annihilator(const Mat& M, const std::vector<Rat>& v) {
    int n = M.rows;
    std::vector<std::vector<Rat>> vecs;
    std::vector<Rat> cur = v;
    for (int k = 0;; ++k) {
        // test dependence of cur on vecs
        Mat A(n, (int)vecs.size());
        for (int j = 0; j < (int)vecs.size(); ++j)
            for (int i = 0; i < n; ++i) A.at(i, j) = vecs[j][i];
        auto sol = solve(A, cur);
        if (sol) {
            std::vector<Rat> c(k + 1, Rat(0));
            c[k] = 1;
            for (int j = 0; j < k; ++j) c[j] = -(*sol)[j];
            return Poly(std::move(c));
        }
        vecs.push_back(cur);
        cur = matvec(M, cur);
    }
}

}  // namespace

Poly min_poly(const Mat& M) {
    if (!M.is_square()) throw InputError("min_poly: non-square matrix");
    int n = M.rows;
    if (n == 0) return Poly::constant(Rat(1));
    Poly m = Poly::constant(Rat(1));
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> e(n, Rat(0));
        e[j] = 1;
        Poly ann = vector_annihilator(M, e);
        Poly g = poly_gcd(m, ann);
        Poly q;
        poly_divmod(ann, g, &q, nullptr);
        m = m * q;  // lcm
        if (m.deg() == n) break;
    }
    // verify m(M) = 0 by Horner on basis vectors
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> acc(n, Rat(0));
        for (int i = m.deg(); i >= 0; --i) {
            acc = matvec(M, acc);
            acc[j] += m.c[i];
        }
        for (const Rat& x : acc)
            if (x != 0) throw InputError("min_poly: verification failed");
    }
    return monic(m);
}

CRat CRat::operator/(const CRat& o) const {
    Rat n = o.norm();
    if (n == 0) throw InputError("complex division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

CRat poly_eval(const Poly& p, const CRat& z) {
    CRat v;
    for (int i = (int)p.c.size() - 1; i >= 0; --i) {
        v = v * z;
        v.re += p.c[i];
    }
    return v;
}

}  // namespace av
