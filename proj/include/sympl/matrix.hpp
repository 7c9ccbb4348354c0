#pragma once

#include "sympl/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace sympl {

// Dense matrix over Q. Dimensions of zero rows or columns are legal and
// behave as expected; they show up routinely (the one-point symplectic
// space has dimension 0).
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
    }
    Mat(std::initializer_list<std::initializer_list<long>> rows);

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Rat& c) const;
    Mat transpose() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;

    std::vector<Rat> col(int j) const;
    std::vector<Rat> row(int i) const;
    void set_col(int j, const std::vector<Rat>& v);

    // [this | o] side by side (equal row counts).
    Mat hcat(const Mat& o) const;
    // [this; o] stacked (equal column counts).
    Mat vcat(const Mat& o) const;
    Mat submatrix(int r0, int c0, int nrows, int ncols) const;
    // Columns selected by index list, in order.
    Mat select_cols(const std::vector<int>& idx) const;

    // Block diagonal [this 0; 0 o].
    Mat block_diag(const Mat& o) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v);

// In-place reduced row echelon form; returns rank. Pivot columns (leftmost
// first) are appended to *pivots when given. Fully canonical: pivots are 1,
// pivot columns are cleared above and below.
int rref(Mat& m, std::vector<int>* pivots = nullptr);

int rank(const Mat& m);

// Basis of {v : Mv = 0} as matrix columns, canonically ordered by free column.
Mat kernel(const Mat& m);

// One solution of Mx = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b);

std::optional<Mat> inverse(const Mat& m);

} // namespace sympl
