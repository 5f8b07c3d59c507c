#include "hankel/matrix.hpp"

#include <sstream>

namespace hankel {

Mat Mat::identity(std::size_t n, Mode mode) {
    Mat m(n, n, mode);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(mode));
    return m;
}

Mat Mat::from_ints(std::size_t rows, std::size_t cols, const std::vector<long>& v, Mode mode) {
    if (v.size() != rows * cols) throw DimensionError("from_ints: wrong entry count");
    Mat m(rows, cols, mode);
    for (std::size_t k = 0; k < v.size(); ++k) {
        switch (mode) {
            case Mode::exact: m.e_[k] = Scalar::exact(v[k]); break;
            case Mode::fp: m.e_[k] = Scalar::fp({static_cast<double>(v[k]), 0.0}); break;
            case Mode::gf2: m.e_[k] = Scalar::gf2((v[k] % 2 + 2) % 2 == 1); break;
        }
    }
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_, mode_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = e_[i * cols_ + j];
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (mode_ != o.mode_) throw ModeError("matrix product across modes");
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Mat r(rows_, o.cols_, mode_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = e_[i * cols_ + k];
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.e_[i * o.cols_ + j] += aik * o.e_[k * o.cols_ + j];
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (mode_ != o.mode_) throw ModeError("matrix sum across modes");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    Mat r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& v : r.e_) v = -v;
    return r;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.mode_ == b.mode_ && a.e_ == b.e_;
}

std::vector<Scalar> Mat::row(std::size_t i) const {
    return {e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_};
}

std::vector<Scalar> Mat::col(std::size_t j) const {
    std::vector<Scalar> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(e_[i * cols_ + j]);
    return c;
}

Mat Mat::submatrix(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const {
    Mat s(rows.size(), cols.size(), mode_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            s.e_[i * cols.size() + j] = at(rows[i], cols[j]);
    return s;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).to_string();
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Scalar> mat_vec(const Mat& A, const std::vector<Scalar>& x) {
    if (x.size() != A.cols()) throw DimensionError("mat_vec shape mismatch");
    std::vector<Scalar> y(A.rows(), Scalar::zero(A.mode()));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) y[i] += A.at(i, j) * x[j];
    return y;
}

}  // namespace hankel
