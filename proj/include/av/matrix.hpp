#pragma once

#include <optional>
#include <vector>

#include "av/rational.hpp"

namespace av {

/// Dense matrix of exact rationals, row-major.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Rat(0)) {}

    Rat& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Rat& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Mat identity(int n);
    static Mat zero(int r, int c) { return Mat(r, c); }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Rat& s) const;
    Mat transposed() const;
    bool operator==(const Mat& o) const;
    bool is_square() const { return rows == cols; }

    Rat trace() const;
    Rat max_abs_entry() const;
};

std::vector<Rat> matvec(const Mat& m, const std::vector<Rat>& v);
Mat mat_pow(const Mat& m, long e);

/// Minor with the given row and column index lists (ascending).
Mat submatrix(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Exact determinant via Bareiss elimination on the denominator-cleared
/// integer matrix.
Rat det(const Mat& m);

/// Exact inverse; throws InputError when singular.
Mat inverse(const Mat& m);

int rank(const Mat& m);

/// Reduced row echelon form; optionally reports pivot column indices.
Mat rref(Mat m, std::vector<int>* pivot_cols = nullptr);

/// One exact solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const Mat& A, const std::vector<Rat>& b);

/// Basis of the right kernel {x : A x = 0}.
std::vector<std::vector<Rat>> kernel_basis(const Mat& A);

/// Incremental exact row-span tracker used for dedup-by-span constructions.
class SpanTracker {
public:
    explicit SpanTracker(int dim) : dim_(dim) {}

    /// True and absorbs the vector when it enlarges the span.
    bool add_if_independent(const std::vector<Rat>& v);
    bool contains(const std::vector<Rat>& v) const;
    int rank() const { return (int)rows_.size(); }

private:
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    int dim_;
    std::vector<std::vector<Rat>> rows_;  // echelonized
    std::vector<int> lead_;
};

}  // namespace av
