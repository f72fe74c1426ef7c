#pragma once

#include "ubb/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ubb {

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& u, const RationalVector& v);

// Kronecker product; entry at i*dim(v)+j equals u_i * v_j.
RationalVector tensor_product(const RationalVector& u, const RationalVector& v);

// Dense row-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("RationalMatrix: negative dimension");
    }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    RationalVector row(int r) const {
        return RationalVector(a_.begin() + static_cast<long>(r) * cols_,
                              a_.begin() + static_cast<long>(r + 1) * cols_);
    }

    Rational trace() const {
        require_square("trace");
        Rational t;
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("RationalMatrix: shape mismatch in product");
        RationalMatrix p(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& x = at(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Rational& y = o.at(k, j);
                    if (!y.is_zero()) p.at(i, j) += x * y;
                }
            }
        return p;
    }

    RationalMatrix& operator+=(const RationalMatrix& o) {
        require_same_shape(o, "sum");
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    RationalMatrix& operator-=(const RationalMatrix& o) {
        require_same_shape(o, "difference");
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }

    RationalMatrix scaled(const Rational& c) const {
        RationalMatrix m(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
        return m;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

    // Stacks vectors of equal length as matrix rows.
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    // Rank-one update: M += (v v^T) / scale.
    void add_outer(const RationalVector& v, const Rational& scale);

private:
    void require_square(const char* op) const {
        if (rows_ != cols_)
            throw std::invalid_argument(std::string("RationalMatrix: ") + op +
                                        " requires a square matrix");
    }
    void require_same_shape(const RationalMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("RationalMatrix: shape mismatch in ") + op);
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace ubb
