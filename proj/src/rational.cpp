#include "av/rational.hpp"

#include <cctype>

namespace av {

Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (x == 0) throw InputError("rat_pow: zero base with negative exponent");
        return Rat(1) / rat_pow(x, -e);
    }
    Rat base = x, acc(1);
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

int rat_sign(const Rat& x) { return sgn(x); }

Rat parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.empty() || fp.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("malformed decimal literal: " + text);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        if (ip.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("malformed decimal literal: " + text);
        Int num(ip + fp);
        Int den(1);
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return neg ? Rat(-r) : r;
    }
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator: " + text);
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: " + text);
    }
}

std::string rat_string(const Rat& x) { return x.get_str(); }

std::string rat_decimal(const Rat& x, int frac_digits, int rounding) {
    Int scale(1);
    for (int i = 0; i < frac_digits; ++i) scale *= 10;
    Rat scaled = x * scale;
    Int q;
    // floor division of num by den
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    if (rounding > 0 && Rat(q) != scaled) q += 1;
    bool neg = q < 0;
    Int a = neg ? Int(-q) : q;
    Int ip = a / scale, fp = a % scale;
    std::string frac = fp.get_str();
    while ((int)frac.size() < frac_digits) frac = "0" + frac;
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (frac_digits > 0) out += "." + frac;
    return out;
}

Int isqrt_floor(const Int& x) {
    if (x < 0) throw InputError("isqrt_floor: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& x, Int* root) {
    if (x < 0) return false;
    Int r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
    if (rem != 0) return false;
    if (root) *root = r;
    return true;
}

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw InputError("interval with lo > hi");
}

Rat interval_gap(const Interval& a, const Interval& b) {
    Rat lo = a.lo > b.lo ? a.lo : b.lo;
    Rat hi = a.hi < b.hi ? a.hi : b.hi;
    Rat g = lo - hi;
    return g > 0 ? g : Rat(0);
}

Interval interval_mul_nonneg(const Interval& a, const Interval& b) {
    if (a.lo < 0 || b.lo < 0) throw InputError("interval_mul_nonneg: negative endpoint");
    return Interval(a.lo * b.lo, a.hi * b.hi);
}

Interval sqrt_enclosure(const Rat& x, const Rat& eps) {
    if (x < 0) throw InputError("sqrt_enclosure: negative input");
    if (eps <= 0) throw InputError("sqrt_enclosure: eps must be positive");
    if (x == 0) return Interval::point(Rat(0));
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    Int z = p * q;  // sqrt(p/q) = sqrt(p*q)/q
    Int r;
    if (is_perfect_square(z, &r)) {
        Rat v(r, q);
        v.canonicalize();
        return Interval::point(v);
    }
    // need 1/(q*2^k) <= eps
    Rat need = Rat(1) / (eps * q);
    unsigned long k = 0;
    Int ceil_need;
    mpz_cdiv_q(ceil_need.get_mpz_t(), need.get_num().get_mpz_t(), need.get_den().get_mpz_t());
    if (ceil_need > 1) k = mpz_sizeinbase(ceil_need.get_mpz_t(), 2);
    Int shifted = z << (2 * k);
    Int s = isqrt_floor(shifted);
    Rat denom = Rat(q) * rat_pow(Rat(2), (long)k);
    Rat lo = Rat(s) / denom;
    Rat hi = Rat(s + 1) / denom;
    lo.canonicalize();
    hi.canonicalize();
    return Interval(lo, hi);
}

Interval sqrt_interval(const Interval& x, const Rat& eps) {
    if (x.lo < 0) throw InputError("sqrt_interval: negative endpoint");
    return Interval(sqrt_enclosure(x.lo, eps).lo, sqrt_enclosure(x.hi, eps).hi);
}

SqrtVal::SqrtVal(Rat sq) : square(std::move(sq)) {
    if (square < 0) throw InputError("SqrtVal: negative square");
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

}  // namespace av
