#include "av/recurrence.hpp"

namespace av {

Recurrence berlekamp_massey(const std::vector<Rat>& s) {
    // connection polynomial C with C[0] = 1 and sum_i C[i] s[n-i] = 0
    std::vector<Rat> C{Rat(1)}, B{Rat(1)};
    int L = 0, m = 1;
    Rat b(1);
    for (int n = 0; n < (int)s.size(); ++n) {
        Rat d(0);
        for (int i = 0; i <= L && i <= n; ++i) d += C[i] * s[n - i];
        if (d == 0) {
            ++m;
            continue;
        }
        if (2 * L <= n) {
            std::vector<Rat> T = C;
            Rat f = d / b;
            if ((int)C.size() < (int)B.size() + m) C.resize(B.size() + m, Rat(0));
            for (size_t i = 0; i < B.size(); ++i) C[i + m] -= f * B[i];
            L = n + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            Rat f = d / b;
            if ((int)C.size() < (int)B.size() + m) C.resize(B.size() + m, Rat(0));
            for (size_t i = 0; i < B.size(); ++i) C[i + m] -= f * B[i];
            ++m;
        }
    }
    Recurrence r;
    r.coeffs.resize(L, Rat(0));
    for (int j = 1; j <= L; ++j) r.coeffs[j - 1] = j < (int)C.size() ? Rat(-C[j]) : Rat(0);
    return r;
}

Poly recurrence_char_poly(const Recurrence& r) {
    int L = r.order();
    std::vector<Rat> c(L + 1, Rat(0));
    c[L] = 1;
    for (int j = 1; j <= L; ++j) c[L - j] = -r.coeffs[j - 1];
    return Poly(std::move(c));
}

bool verify_recurrence(const std::vector<Rat>& s, const Recurrence& r) {
    int L = r.order();
    if (L == 0) {
        for (const Rat& v : s)
            if (v != 0) return false;
        return true;
    }
    if ((int)s.size() < L) return false;
    for (int n = L; n < (int)s.size(); ++n) {
        Rat v(0);
        for (int j = 1; j <= L; ++j) v += r.coeffs[j - 1] * s[n - j];
        if (v != s[n]) return false;
    }
    return true;
}

}  // namespace av
