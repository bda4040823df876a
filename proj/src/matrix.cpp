#include "av/matrix.hpp"

namespace av {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw InputError("matrix product: dimension mismatch");
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Rat& y = o.at(k, j);
                if (y == 0) continue;
                r.at(i, j) += x * y;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw InputError("matrix sum: dimension mismatch");
    Mat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw InputError("matrix difference: dimension mismatch");
    Mat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

Mat Mat::scaled(const Rat& s) const {
    Mat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
}

Rat Mat::trace() const {
    if (!is_square()) throw InputError("trace: non-square matrix");
    Rat t(0);
    for (int i = 0; i < rows; ++i) t += at(i, i);
    return t;
}

Rat Mat::max_abs_entry() const {
    Rat m(0);
    for (const Rat& x : a) {
        Rat ax = rat_abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

std::vector<Rat> matvec(const Mat& m, const std::vector<Rat>& v) {
    if ((int)v.size() != m.cols) throw InputError("matvec: dimension mismatch");
    std::vector<Rat> r(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j) == 0 || v[j] == 0) continue;
            r[i] += m.at(i, j) * v[j];
        }
    return r;
}

Mat mat_pow(const Mat& m, long e) {
    if (!m.is_square()) throw InputError("mat_pow: non-square matrix");
    if (e < 0) throw InputError("mat_pow: negative exponent");
    Mat acc = Mat::identity(m.rows), base = m;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Mat submatrix(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Mat out((int)rows.size(), (int)cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) out.at((int)i, (int)j) = m.at(rows[i], cols[j]);
    return out;
}

Rat det(const Mat& m) {
    if (!m.is_square()) throw InputError("det: non-square matrix");
    int n = m.rows;
    if (n == 0) return Rat(1);
    // clear denominators row by row
    std::vector<std::vector<Int>> z(n, std::vector<Int>(n));
    Int scale_prod(1);
    for (int i = 0; i < n; ++i) {
        Int l(1);
        for (int j = 0; j < n; ++j) {
            Int d = m.at(i, j).get_den();
            Int g = gcd(l, d);
            l = l / g * d;
        }
        scale_prod *= l;
        for (int j = 0; j < n; ++j) {
            const Rat& x = m.at(i, j);
            z[i][j] = x.get_num() * (l / x.get_den());
        }
    }
    // Bareiss
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (z[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (z[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return Rat(0);
            std::swap(z[k], z[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = z[i][j] * z[k][k] - z[i][k] * z[k][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = z[k][k];
    }
    Rat d(sign > 0 ? z[n - 1][n - 1] : Int(-z[n - 1][n - 1]), scale_prod);
    d.canonicalize();
    return d;
}

Mat rref(Mat m, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return m;
}

int rank(const Mat& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return (int)piv.size();
}

Mat inverse(const Mat& m) {
    if (!m.is_square()) throw InputError("inverse: non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> piv;
    Mat red = rref(std::move(aug), &piv);
    if ((int)piv.size() < n || piv[n - 1] >= n) {
        for (int i = 0; i < n; ++i)
            if (i >= (int)piv.size() || piv[i] != i) throw InputError("inverse: singular matrix");
    }
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

std::optional<std::vector<Rat>> solve(const Mat& A, const std::vector<Rat>& b) {
    if ((int)b.size() != A.rows) throw InputError("solve: dimension mismatch");
    Mat aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    std::vector<int> piv;
    Mat red = rref(std::move(aug), &piv);
    for (int idx = 0; idx < (int)piv.size(); ++idx)
        if (piv[idx] == A.cols) return std::nullopt;  // pivot in the constant column
    std::vector<Rat> x(A.cols, Rat(0));
    for (int idx = 0; idx < (int)piv.size(); ++idx) x[piv[idx]] = red.at(idx, A.cols);
    return x;
}

std::vector<std::vector<Rat>> kernel_basis(const Mat& A) {
    std::vector<int> piv;
    Mat red = rref(A, &piv);
    std::vector<bool> is_piv(A.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < A.cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<Rat> v(A.cols, Rat(0));
        v[free] = 1;
        for (int idx = 0; idx < (int)piv.size(); ++idx) v[piv[idx]] = -red.at(idx, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> SpanTracker::reduce(std::vector<Rat> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        int l = lead_[r];
        if (v[l] == 0) continue;
        Rat f = v[l];
        for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool SpanTracker::add_if_independent(const std::vector<Rat>& v) {
    if ((int)v.size() != dim_) throw InputError("SpanTracker: dimension mismatch");
    std::vector<Rat> w = reduce(v);
    int l = -1;
    for (int j = 0; j < dim_; ++j)
        if (w[j] != 0) {
            l = j;
            break;
        }
    if (l < 0) return false;
    Rat inv = Rat(1) / w[l];
    for (int j = 0; j < dim_; ++j) w[j] *= inv;
    rows_.push_back(std::move(w));
    lead_.push_back(l);
    return true;
}

bool SpanTracker::contains(const std::vector<Rat>& v) const {
    std::vector<Rat> w = reduce(v);
    for (const Rat& x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace av
