#ifndef YANGIAN_MATRIX_HPP
#define YANGIAN_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "yangian/errors.hpp"
#include "yangian/polynomial.hpp"
#include "yangian/rational.hpp"

namespace yangian {

/// Dense matrix over an exact coefficient ring (Rational or Poly).
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool is_diagonal() const {
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (r != c && !(at(r, c) == T())) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) {
            return false;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (!(at(r, c) == (r == c ? T(1) : T()))) {
                    return false;
                }
            }
        }
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "+");
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            m.e_[i] = a.e_[i] + b.e_[i];
        }
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "-");
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            m.e_[i] = a.e_[i] - b.e_[i];
        }
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw Error("matrix product shape mismatch: " + a.shape_str() + " * " + b.shape_str());
        }
        Matrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& ark = a.at(r, k);
                if (ark == T()) {
                    continue;
                }
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    m.at(r, c) += ark * b.at(k, c);
                }
            }
        }
        return m;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            m.e_[i] = s * a.e_[i];
        }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }
    static void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw Error(std::string("matrix shape mismatch in '") + op + "': " + a.shape_str() +
                        " vs " + b.shape_str());
        }
    }

    std::size_t rows_, cols_;
    std::vector<T> e_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;

inline PolyMatrix to_poly(const RatMatrix& m) {
    PolyMatrix p(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            p.at(r, c) = Poly(m.at(r, c));
        }
    }
    return p;
}

inline PolyMatrix operator*(const RatMatrix& a, const PolyMatrix& b) { return to_poly(a) * b; }
inline PolyMatrix operator*(const PolyMatrix& a, const RatMatrix& b) { return a * to_poly(b); }

/// Applies p(u) -> p(u+s) to every entry.
inline PolyMatrix shifted(const PolyMatrix& m, const Rational& s) {
    PolyMatrix p(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            p.at(r, c) = m.at(r, c).shifted(s);
        }
    }
    return p;
}

}  // namespace yangian

#endif  // YANGIAN_MATRIX_HPP
