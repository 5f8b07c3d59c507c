#pragma once

#include <cstddef>
#include <vector>

#include "hankel/scalar.hpp"

namespace hankel {

// Dense row-major matrix with a single arithmetic mode for all entries.
class Mat {
public:
    Mat() : rows_(0), cols_(0), mode_(Mode::exact) {}
    Mat(std::size_t rows, std::size_t cols, Mode mode)
        : rows_(rows), cols_(cols), mode_(mode), e_(rows * cols, Scalar::zero(mode)) {}

    static Mat identity(std::size_t n, Mode mode);
    static Mat from_ints(std::size_t rows, std::size_t cols, const std::vector<long>& v,
                         Mode mode = Mode::exact);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Mode mode() const { return mode_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& v) {
        if (v.mode() != mode_)
            throw ModeError("matrix entry mode mismatch");
        e_[i * cols_ + j] = v;
    }

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-() const;
    friend bool operator==(const Mat& a, const Mat& b);

    std::vector<Scalar> row(std::size_t i) const;
    std::vector<Scalar> col(std::size_t j) const;
    Mat submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    Mode mode_;
    std::vector<Scalar> e_;
};

std::vector<Scalar> mat_vec(const Mat& A, const std::vector<Scalar>& x);

}  // namespace hankel
