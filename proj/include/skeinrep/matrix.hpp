#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skeinrep/poly.hpp"

namespace skeinrep {

// Dense matrix over a field K. Columns of an operator matrix are images of
// basis vectors; words act by left multiplication in word order.
template <class K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), d_(rows * cols, K()) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    K& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
    const K& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::logic_error("Matrix: size mismatch in product");
        Matrix out(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                if (a(i, k) == K()) continue;
                for (size_t j = 0; j < b.c_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::logic_error("Matrix: size mismatch in sum");
        for (size_t i = 0; i < a.d_.size(); ++i) a.d_[i] += b.d_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::logic_error("Matrix: size mismatch in difference");
        for (size_t i = 0; i < a.d_.size(); ++i) a.d_[i] -= b.d_[i];
        return a;
    }

    Matrix scaled(const K& k) const {
        Matrix out = *this;
        for (auto& x : out.d_) x *= k;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix out(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    template <class F>
    Matrix map(F&& f) const {
        Matrix out(r_, c_);
        for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = f(d_[i]);
        return out;
    }

    K trace() const {
        K t{};
        for (size_t i = 0; i < r_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : d_)
            if (!(x == K())) return false;
        return true;
    }

    // In-place row reduction to reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < c_ && row < r_; ++col) {
            size_t sel = r_;
            for (size_t i = row; i < r_; ++i)
                if (!((*this)(i, col) == K())) {
                    sel = i;
                    break;
                }
            if (sel == r_) continue;
            if (sel != row)
                for (size_t j = 0; j < c_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
            K inv = K(1) / (*this)(row, col);
            for (size_t j = col; j < c_; ++j) (*this)(row, j) *= inv;
            for (size_t i = 0; i < r_; ++i) {
                if (i == row) continue;
                K f = (*this)(i, col);
                if (f == K()) continue;
                for (size_t j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // Basis of the right kernel, one column vector per free column.
    std::vector<std::vector<K>> kernel_basis() const {
        Matrix m = *this;
        std::vector<size_t> pivots = m.rref();
        std::vector<bool> is_pivot(c_, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<std::vector<K>> out;
        for (size_t f = 0; f < c_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> v(c_, K());
            v[f] = K(1);
            for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = K() - m(i, f);
            out.push_back(std::move(v));
        }
        return out;
    }

    Matrix inverse() const {
        if (r_ != c_) throw std::logic_error("Matrix: inverse of non-square");
        Matrix aug(r_, 2 * c_);
        for (size_t i = 0; i < r_; ++i) {
            for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_ + i) = K(1);
        }
        auto pivots = aug.rref();
        if (pivots.size() != r_) throw std::domain_error("Matrix: singular");
        for (size_t p : pivots)
            if (p >= c_) throw std::domain_error("Matrix: singular");
        Matrix out(r_, c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) out(i, j) = aug(i, c_ + j);
        return out;
    }

    // Solve A x = b for one column vector b; A must be invertible.
    std::vector<K> solve(const std::vector<K>& b) const {
        if (r_ != c_ || b.size() != r_) throw std::logic_error("Matrix: solve size mismatch");
        Matrix aug(r_, c_ + 1);
        for (size_t i = 0; i < r_; ++i) {
            for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_) = b[i];
        }
        auto pivots = aug.rref();
        if (pivots.size() != r_) throw std::domain_error("Matrix: singular solve");
        std::vector<K> x(c_, K());
        for (size_t i = 0; i < r_; ++i) x[pivots[i]] = aug(i, c_);
        return x;
    }

    // Characteristic polynomial det(xI - A) by Faddeev-LeVerrier; only divides
    // by the integers 1..n, which is safe in characteristic zero.
    Poly<K> charpoly() const {
        if (r_ != c_) throw std::logic_error("Matrix: charpoly of non-square");
        size_t n = r_;
        std::vector<K> c(n + 1, K());
        c[n] = K(1);
        Matrix m(n, n);
        for (size_t k = 1; k <= n; ++k) {
            m = (*this) * m;
            for (size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
            K tr = ((*this) * m).trace();
            K divk = K(1);
            for (size_t i = 1; i < k; ++i) divk += K(1);
            c[n - k] = (K() - tr) / divk;
        }
        return Poly<K>(std::move(c));
    }

    std::string str(const std::function<std::string(const K&)>& f) const {
        std::string out = "[";
        for (size_t i = 0; i < r_; ++i) {
            out += i ? ", [" : "[";
            for (size_t j = 0; j < c_; ++j) {
                if (j) out += ", ";
                out += f((*this)(i, j));
            }
            out += "]";
        }
        return out + "]";
    }

  private:
    size_t r_ = 0, c_ = 0;
    std::vector<K> d_;
};

}  // namespace skeinrep
