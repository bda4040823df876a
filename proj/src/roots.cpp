#include "av/roots.hpp"

#include <cmath>
#include <complex>

namespace av {

namespace {

Interval abs_interval(const Interval& x) {
    if (x.lo >= 0) return x;
    if (x.hi <= 0) return Interval(-x.hi, -x.lo);
    Rat m = -x.lo > x.hi ? Rat(-x.lo) : x.hi;
    return Interval(Rat(0), m);
}

Interval interval_max(const Interval& a, const Interval& b) {
    return Interval(a.lo > b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi);
}

Interval interval_min(const Interval& a, const Interval& b) {
    return Interval(a.lo < b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

RootCertificate certificate_from_disks(const std::vector<Interval>& disks,
                                       const std::vector<CRat>& centers,
                                       const std::vector<Rat>& radii_ub, int prec_bits) {
    int d = (int)disks.size();
    UnionFind uf(d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Rat s = radii_ub[i] + radii_ub[j];
            if ((centers[i] - centers[j]).norm() <= s * s) uf.unite(i, j);
        }
    std::vector<std::vector<int>> comps;
    {
        std::vector<int> comp_of(d, -1);
        for (int i = 0; i < d; ++i) {
            int r = uf.find(i);
            if (comp_of[r] < 0) {
                comp_of[r] = (int)comps.size();
                comps.emplace_back();
            }
            comps[comp_of[r]].push_back(i);
        }
    }
    RootCertificate cert;
    cert.precision_bits = prec_bits;
    cert.disk_moduli = disks;
    Rat rad_hi(0), rad_lo(0), min_lo(-1), min_hi(-1);
    for (int i = 0; i < d; ++i) {
        if (disks[i].hi > rad_hi) rad_hi = disks[i].hi;
        if (min_lo < 0 || disks[i].lo < min_lo) min_lo = disks[i].lo;
    }
    // each connected component of the disk union contains exactly as many
    // roots as disks, so it bounds at least one root from both sides
    for (const auto& comp : comps) {
        Rat comp_min_lo = disks[comp[0]].lo, comp_max_hi = disks[comp[0]].hi;
        for (int i : comp) {
            if (disks[i].lo < comp_min_lo) comp_min_lo = disks[i].lo;
            if (disks[i].hi > comp_max_hi) comp_max_hi = disks[i].hi;
        }
        if (comp_min_lo > rad_lo) rad_lo = comp_min_lo;
        if (min_hi < 0 || comp_max_hi < min_hi) min_hi = comp_max_hi;
    }
    if (rad_lo > rad_hi) rad_lo = rad_hi;
    if (min_lo > min_hi) min_lo = min_hi;
    cert.radius = Interval(rad_lo, rad_hi);
    cert.min_modulus = Interval(min_lo, min_hi);
    return cert;
}

/// Exact certificate from approximate root locations z (pairwise distinct):
/// with W_i = p(z_i) / prod_{j != i}(z_i - z_j), the matrix
/// diag(z) - W (1,...,1)^T has characteristic polynomial p, so its Gershgorin
/// disks D(z_i - W_i, (d-1)|W_i|) cover all roots of p.
RootCertificate certify_at(const Poly& p_monic, const std::vector<CRat>& z, const Rat& eps,
                           int prec_bits) {
    int d = (int)z.size();
    std::vector<CRat> centers(d);
    std::vector<Rat> radii_ub(d);
    std::vector<Interval> disks(d);
    for (int i = 0; i < d; ++i) {
        CRat denom(Rat(1), Rat(0));
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            denom = denom * (z[i] - z[j]);
        }
        CRat w = poly_eval(p_monic, z[i]) / denom;
        centers[i] = z[i] - w;
        Rat w_abs_ub = sqrt_enclosure(w.norm(), eps).hi;
        radii_ub[i] = Rat(d - 1) * w_abs_ub;
        Interval c_abs = sqrt_enclosure(centers[i].norm(), eps);
        Rat lo = c_abs.lo - radii_ub[i];
        if (lo < 0) lo = 0;
        disks[i] = Interval(lo, c_abs.hi + radii_ub[i]);
    }
    return certificate_from_disks(disks, centers, radii_ub, prec_bits);
}

// ---------- Aberth-Ehrlich in hardware doubles ----------

bool aberth_double(const Poly& p, std::vector<std::complex<double>>* out) {
    int d = p.deg();
    std::vector<std::complex<double>> c(d + 1);
    for (int i = 0; i <= d; ++i) {
        double v = p.c[i].get_d();
        if (!std::isfinite(v)) return false;
        c[i] = v;
    }
    Poly dp = derivative(p);
    std::vector<std::complex<double>> dc(d);
    for (int i = 0; i < d; ++i) dc[i] = dp.c[i].get_d();

    double r0 = 0;
    for (int i = 0; i < d; ++i) r0 = std::max(r0, std::abs(c[i].real()));
    r0 = 1 + r0;
    if (!std::isfinite(r0) || r0 > 1e120) return false;

    std::vector<std::complex<double>>& z = *out;
    z.resize(d);
    for (int i = 0; i < d; ++i) {
        double ang = 2 * M_PI * i / d + 0.4;
        z[i] = std::polar(0.7 * r0, ang);
    }
    auto eval = [](const std::vector<std::complex<double>>& cs, std::complex<double> x) {
        std::complex<double> v = 0;
        for (int i = (int)cs.size() - 1; i >= 0; --i) v = v * x + cs[i];
        return v;
    };
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> pv = eval(c, z[i]);
            if (pv == std::complex<double>(0, 0)) continue;
            std::complex<double> pd = eval(dc, z[i]);
            if (pd == std::complex<double>(0, 0)) {
                z[i] += 1e-6 * (1.0 + std::abs(z[i]));
                worst = 1;
                continue;
            }
            std::complex<double> nw = pv / pd;
            std::complex<double> s = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            std::complex<double> den = 1.0 - nw * s;
            std::complex<double> corr = (den == std::complex<double>(0, 0)) ? nw : nw / den;
            z[i] -= corr;
            if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag())) return false;
            worst = std::max(worst, std::abs(corr) / (1 + std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    return true;
}

// ---------- Aberth-Ehrlich in mpf at a given precision ----------

struct CF {
    mpf_class re, im;
};

CF cf_mul(const CF& a, const CF& b, int prec) {
    CF r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}
CF cf_sub(const CF& a, const CF& b, int prec) {
    CF r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}
CF cf_add(const CF& a, const CF& b, int prec) {
    CF r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    return r;
}
CF cf_div(const CF& a, const CF& b, int prec) {
    mpf_class n(0, prec);
    n = b.re * b.re + b.im * b.im;
    CF r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = (a.re * b.re + a.im * b.im) / n;
    r.im = (a.im * b.re - a.re * b.im) / n;
    return r;
}
mpf_class cf_abs(const CF& a, int prec) {
    mpf_class n(0, prec);
    n = a.re * a.re + a.im * a.im;
    mpf_class r(0, prec);
    r = sqrt(n);
    return r;
}

void aberth_mpf(const Poly& p, int prec, std::vector<CRat>* seeds_io) {
    int d = p.deg();
    std::vector<CF> c(d + 1), dc(d);
    for (int i = 0; i <= d; ++i) c[i] = CF{mpf_class(p.c[i], prec), mpf_class(0, prec)};
    Poly dp = derivative(p);
    for (int i = 0; i < d; ++i) dc[i] = CF{mpf_class(dp.c[i], prec), mpf_class(0, prec)};

    std::vector<CF> z(d);
    for (int i = 0; i < d; ++i)
        z[i] = CF{mpf_class((*seeds_io)[i].re, prec), mpf_class((*seeds_io)[i].im, prec)};

    auto eval = [&](const std::vector<CF>& cs, const CF& x) {
        CF v{mpf_class(0, prec), mpf_class(0, prec)};
        for (int i = (int)cs.size() - 1; i >= 0; --i) v = cf_add(cf_mul(v, x, prec), cs[i], prec);
        return v;
    };
    mpf_class target(0, prec);
    mpf_div_2exp(target.get_mpf_t(), mpf_class(1, prec).get_mpf_t(), (prec * 3) / 4);
    for (int iter = 0; iter < 200; ++iter) {
        mpf_class worst(0, prec);
        for (int i = 0; i < d; ++i) {
            CF pv = eval(c, z[i]);
            if (pv.re == 0 && pv.im == 0) continue;
            CF pd = eval(dc, z[i]);
            if (pd.re == 0 && pd.im == 0) {
                z[i].re += mpf_class(1e-6, prec);
                worst = 1;
                continue;
            }
            CF nw = cf_div(pv, pd, prec);
            CF s{mpf_class(0, prec), mpf_class(0, prec)};
            CF one{mpf_class(1, prec), mpf_class(0, prec)};
            for (int j = 0; j < d; ++j)
                if (j != i) s = cf_add(s, cf_div(one, cf_sub(z[i], z[j], prec), prec), prec);
            CF den = cf_sub(one, cf_mul(nw, s, prec), prec);
            CF corr = (den.re == 0 && den.im == 0) ? nw : cf_div(nw, den, prec);
            z[i] = cf_sub(z[i], corr, prec);
            mpf_class rel(0, prec);
            rel = cf_abs(corr, prec) / (1 + cf_abs(z[i], prec));
            if (rel > worst) worst = rel;
        }
        if (worst < target) break;
    }
    for (int i = 0; i < d; ++i) {
        Rat re, im;
        mpq_set_f(re.get_mpq_t(), z[i].re.get_mpf_t());
        mpq_set_f(im.get_mpq_t(), z[i].im.get_mpf_t());
        (*seeds_io)[i] = CRat(re, im);
    }
}

void make_distinct(std::vector<CRat>* z) {
    for (size_t i = 0; i < z->size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if ((*z)[i] == (*z)[j]) (*z)[i].re += Rat(1, 1000000 + (long)i);
}

RootCertificate quadratic_certificate(const Poly& m, const Rat& tol) {
    // monic x^2 + b x + c
    Rat b = m.coeff(1), c = m.coeff(0);
    Rat disc = b * b - 4 * c;
    Rat eps = tol / 4;
    RootCertificate cert;
    if (disc < 0) {
        Interval mod = sqrt_enclosure(c, eps);  // conjugate pair, |z|^2 = c
        cert.radius = mod;
        cert.min_modulus = mod;
        cert.disk_moduli = {mod, mod};
        return cert;
    }
    Interval sd = sqrt_enclosure(disc, eps);
    Interval r1((-b - sd.hi) / 2, (-b - sd.lo) / 2);
    Interval r2((-b + sd.lo) / 2, (-b + sd.hi) / 2);
    Interval a1 = abs_interval(r1), a2 = abs_interval(r2);
    cert.radius = interval_max(a1, a2);
    cert.min_modulus = interval_min(a1, a2);
    cert.disk_moduli = {a1, a2};
    return cert;
}

}  // namespace

RootCertificate certify_roots(const Poly& p, const Rat& tol) {
    if (tol <= 0) throw InputError("certify_roots: tol must be positive");
    if (p.is_zero()) throw InputError("certify_roots: zero polynomial");
    if (p.deg() == 0) {
        RootCertificate cert;
        cert.radius = Interval::point(Rat(0));
        cert.min_modulus = Interval::point(Rat(0));
        return cert;
    }
    Poly sf = squarefree_part(p);
    bool zero_root = false;
    if (sf.coeff(0) == 0) {  // squarefree, so the factor x appears exactly once
        zero_root = true;
        std::vector<Rat> c(sf.c.begin() + 1, sf.c.end());
        sf = Poly(std::move(c));
    }
    auto with_zero = [&](RootCertificate cert) {
        if (!zero_root) return cert;
        cert.disk_moduli.push_back(Interval::point(Rat(0)));
        cert.min_modulus = Interval::point(Rat(0));
        if (cert.radius.hi == 0) cert.radius = Interval::point(Rat(0));
        return cert;
    };
    int d = sf.deg();
    if (d == 0) {
        RootCertificate cert;
        cert.radius = Interval::point(Rat(0));
        cert.min_modulus = Interval::point(Rat(0));
        return with_zero(cert);
    }
    sf = monic(sf);
    if (d == 1) {
        Rat root = -sf.coeff(0);
        Interval mod = Interval::point(rat_abs(root));
        RootCertificate cert;
        cert.radius = mod;
        cert.min_modulus = mod;
        cert.disk_moduli = {mod};
        return with_zero(cert);
    }
    if (d == 2) return with_zero(quadratic_certificate(sf, tol));

    Rat eps = tol / Rat(8 * (d + 1));
    std::vector<CRat> seeds(d);
    bool have_seeds = false;
    {
        std::vector<std::complex<double>> zd;
        if (aberth_double(sf, &zd)) {
            for (int i = 0; i < d; ++i) {
                Rat re, im;
                mpq_set_d(re.get_mpq_t(), zd[i].real());
                mpq_set_d(im.get_mpq_t(), zd[i].imag());
                seeds[i] = CRat(re, im);
            }
            have_seeds = true;
            make_distinct(&seeds);
            RootCertificate cert = certify_at(sf, seeds, eps, 53);
            if (cert.radius.width() <= tol && cert.min_modulus.width() <= tol)
                return with_zero(cert);
        }
    }
    if (!have_seeds) {
        // fall back to a fixed starting circle in exact coordinates
        for (int i = 0; i < d; ++i)
            seeds[i] = CRat(Rat(1 + i), Rat(1) + Rat(i) / 7);
    }
    for (int prec = 128; prec <= kPrecisionCapBits; prec *= 2) {
        aberth_mpf(sf, prec, &seeds);
        make_distinct(&seeds);
        RootCertificate cert = certify_at(sf, seeds, eps, prec);
        if (cert.radius.width() <= tol && cert.min_modulus.width() <= tol)
            return with_zero(cert);
    }
    throw PrecisionError("root certification did not reach tolerance " + rat_string(tol) +
                         " within " + std::to_string(kPrecisionCapBits) + " bits");
}

Interval spectral_radius(const Poly& p, const Rat& tol) { return certify_roots(p, tol).radius; }

Interval spectral_radius(const Mat& M, const Rat& tol) {
    return spectral_radius(char_poly(M), tol);
}

}  // namespace av
