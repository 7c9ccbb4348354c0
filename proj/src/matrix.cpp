#include "sympl/matrix.hpp"

#include <sstream>

namespace sympl {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.assign(static_cast<size_t>(rows_) * cols_, Rat(0));
    int i = 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("Mat: ragged initializer");
        int j = 0;
        for (long v : r) at(i, j++) = Rat(v);
        ++i;
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::+: shape mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

Mat Mat::scaled(const Rat& c) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<Rat> Mat::col(int j) const {
    std::vector<Rat> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Rat> Mat::row(int i) const {
    std::vector<Rat> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Mat::set_col(int j, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("set_col: size");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::hcat(const Mat& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
    Mat r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Mat Mat::vcat(const Mat& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vcat: col mismatch");
    Mat r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Mat Mat::submatrix(int r0, int c0, int nrows, int ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw std::invalid_argument("submatrix: out of range");
    Mat r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

Mat Mat::select_cols(const std::vector<int>& idx) const {
    Mat r(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < static_cast<int>(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
}

Mat Mat::block_diag(const Mat& o) const {
    Mat r(rows_ + o.rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
    return r;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << rat_str(at(i, j));
        os << "]" << (i + 1 < rows_ ? "\n" : "");
    }
    os << "]";
    return os.str();
}

std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("mat_vec: size");
    std::vector<Rat> r(m.rows(), Rat(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

int rref(Mat& m, std::vector<int>* pivots) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat pv = m.at(r, c);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) /= pv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

int rank(const Mat& m) {
    Mat c = m;
    return rref(c);
}

Mat kernel(const Mat& m) {
    Mat re = m;
    std::vector<int> piv;
    int r = rref(re, &piv);
    std::vector<bool> is_piv(m.cols(), false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_piv[c]) free.push_back(c);
    Mat k(m.cols(), static_cast<int>(free.size()));
    for (int fj = 0; fj < static_cast<int>(free.size()); ++fj) {
        int fc = free[fj];
        k.at(fc, fj) = 1;
        for (int i = 0; i < r; ++i) k.at(piv[i], fj) = -re.at(i, fc);
    }
    return k;
}

std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: size");
    Mat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> piv;
    int r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<Rat> x(m.cols(), Rat(0));
    for (int i = 0; i < r; ++i) x[piv[i]] = aug.at(i, m.cols());
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    int n = m.rows();
    Mat aug = m.hcat(Mat::identity(n));
    std::vector<int> piv;
    int r = rref(aug, &piv);
    // all pivots must land in the left block
    if (r != n || (n > 0 && piv.back() >= n)) return std::nullopt;
    return aug.submatrix(0, n, n, n);
}

} // namespace sympl
