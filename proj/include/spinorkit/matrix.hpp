/// @file matrix.hpp
/// @brief Dense exact matrices over a fixed field.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "spinorkit/error.hpp"
#include "spinorkit/scalar.hpp"

namespace spinorkit {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Mat {
  public:
    Mat() : spec_(FieldSpec::rational()) {}

    Mat(std::size_t rows, std::size_t cols, FieldSpec spec)
        : rows_(rows), cols_(cols), spec_(spec), entries_(rows * cols, zero_of<F>(spec)) {}

    Mat(std::size_t rows, std::size_t cols, Vec<F> entries, FieldSpec spec)
        : rows_(rows), cols_(cols), spec_(spec), entries_(std::move(entries)) {
        require(entries_.size() == rows_ * cols_, ErrorCode::BadShape, "entry count mismatch");
    }

    static Mat identity(std::size_t n, FieldSpec spec) {
        Mat m(n, n, spec);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_of<F>(spec);
        return m;
    }

    static Mat from_rows(const std::vector<Vec<F>>& rows, FieldSpec spec) {
        std::size_t nc = rows.empty() ? 0 : rows.front().size();
        Mat m(rows.size(), nc, spec);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == nc, ErrorCode::BadShape, "ragged rows");
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const FieldSpec& field() const { return spec_; }

    F& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    [[nodiscard]] Vec<F> row(std::size_t i) const {
        return Vec<F>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    }

    void set_row(std::size_t i, const Vec<F>& r) {
        require(r.size() == cols_, ErrorCode::BadShape, "row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    [[nodiscard]] Mat transpose() const {
        Mat t(cols_, rows_, spec_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] bool is_zero() const {
        for (const F& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    [[nodiscard]] bool is_skew() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!(*this)(i, i).is_zero()) return false;  // required also in char 2
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        }
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        Mat c(a.rows_, b.cols_, a.spec_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    [[nodiscard]] Vec<F> apply(const Vec<F>& v) const {
        require(v.size() == cols_, ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
        Vec<F> out(rows_, zero_of<F>(spec_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    // Rows of `other` appended below.
    [[nodiscard]] Mat stacked(const Mat& other) const {
        require(cols_ == other.cols_, ErrorCode::DimensionMismatch, "stack width mismatch");
        Mat s(rows_ + other.rows_, cols_, spec_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < other.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s(rows_ + i, j) = other(i, j);
        return s;
    }

    [[nodiscard]] Mat submatrix_excluding(std::size_t row, std::size_t col) const {
        Mat s(rows_ - 1, cols_ - 1, spec_);
        for (std::size_t i = 0, si = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, sj = 0; j < cols_; ++j) {
                if (j == col) continue;
                s(si, sj++) = (*this)(i, j);
            }
            ++si;
        }
        return s;
    }

    // Text format: rows separated by ';', entries by whitespace.
    [[nodiscard]] std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ' ';
                os << (*this)(i, j).to_string();
            }
        }
        return os.str();
    }

    static Mat parse(const std::string& text, FieldSpec spec) {
        std::vector<Vec<F>> rows;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(';', start);
            std::string chunk =
                text.substr(start, end == std::string::npos ? std::string::npos : end - start);
            std::istringstream is(chunk);
            Vec<F> r;
            std::string tok;
            while (is >> tok) r.push_back(parse_scalar<F>(tok, spec));
            if (!r.empty()) rows.push_back(std::move(r));
            if (end == std::string::npos) break;
            start = end + 1;
        }
        require(!rows.empty(), ErrorCode::BadInput, "empty matrix literal");
        return from_rows(rows, spec);
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldSpec spec_;
    Vec<F> entries_;
};

template <class F>
Vec<F> parse_vector(const std::string& text, const FieldSpec& spec) {
    std::istringstream is(text);
    Vec<F> v;
    std::string tok;
    while (is >> tok) v.push_back(parse_scalar<F>(tok, spec));
    return v;
}

template <class F>
std::string vector_to_string(const Vec<F>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].to_string();
    }
    return s;
}

template <class F>
bool is_zero_vector(const Vec<F>& v) {
    for (const F& e : v)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace spinorkit
