#ifndef QPART_EXACT_MATRIX_HPP
#define QPART_EXACT_MATRIX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpart/errors.hpp"
#include "qpart/rational.hpp"

namespace qpart {

// Sparse exact-rational matrix, row major; only nonzero entries are stored.
class ExactMatrix {
public:
    ExactMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {
        if (rows < 0 || cols < 0) throw SizeMismatch("matrix dimensions must be nonnegative");
    }

    static ExactMatrix identity(long n) {
        ExactMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.set(i, i, Rational(1));
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    const std::map<long, Rational>& row(long i) const { return data_[static_cast<size_t>(i)]; }

    Rational get(long i, long j) const {
        check(i, j);
        const auto& r = data_[static_cast<size_t>(i)];
        auto it = r.find(j);
        return it == r.end() ? Rational(0) : it->second;
    }

    void set(long i, long j, const Rational& v) {
        check(i, j);
        auto& r = data_[static_cast<size_t>(i)];
        if (v == 0)
            r.erase(j);
        else
            r[j] = v;
    }

    void add_at(long i, long j, const Rational& v) {
        check(i, j);
        if (v == 0) return;
        auto& r = data_[static_cast<size_t>(i)];
        auto [it, inserted] = r.try_emplace(j, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) r.erase(it);
        }
    }

    long nonzero_count() const {
        long n = 0;
        for (const auto& r : data_) n += static_cast<long>(r.size());
        return n;
    }

    bool is_zero() const { return nonzero_count() == 0; }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix& operator+=(const ExactMatrix& o) {
        require_same_shape(o);
        for (long i = 0; i < rows_; ++i)
            for (const auto& [j, v] : o.data_[static_cast<size_t>(i)]) add_at(i, j, v);
        return *this;
    }

    ExactMatrix& operator-=(const ExactMatrix& o) {
        require_same_shape(o);
        for (long i = 0; i < rows_; ++i)
            for (const auto& [j, v] : o.data_[static_cast<size_t>(i)]) add_at(i, j, -v);
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }

    ExactMatrix scaled(const Rational& c) const {
        ExactMatrix r(rows_, cols_);
        if (c == 0) return r;
        for (long i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[static_cast<size_t>(i)])
                r.data_[static_cast<size_t>(i)][j] = v * c;
        return r;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_)
            throw SizeMismatch("matrix product shape mismatch: " + std::to_string(a.cols_) +
                               " vs " + std::to_string(b.rows_));
        ExactMatrix r(a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (const auto& [l, av] : a.data_[static_cast<size_t>(i)])
                for (const auto& [j, bv] : b.data_[static_cast<size_t>(l)])
                    r.add_at(i, j, av * bv);
        return r;
    }

    ExactMatrix transpose() const {
        ExactMatrix r(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[static_cast<size_t>(i)]) r.set(j, i, v);
        return r;
    }

    Rational trace() const {
        Rational t(0);
        for (long i = 0; i < rows_ && i < cols_; ++i) t += get(i, i);
        return t;
    }

private:
    void check(long i, long j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") outside " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_));
    }
    void require_same_shape(const ExactMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix shape mismatch");
    }

    long rows_, cols_;
    std::vector<std::map<long, Rational>> data_;
};

// Exact rank by fraction-free (two-term, exact-division) elimination on
// integer-cleared rows. No pivoting thresholds, no floating point.
inline long matrix_rank(const ExactMatrix& m) {
    std::vector<std::map<long, Int>> rows;
    rows.reserve(static_cast<size_t>(m.rows()));
    for (long i = 0; i < m.rows(); ++i) {
        const auto& r = m.row(i);
        if (r.empty()) continue;
        Int lcm = 1;
        for (const auto& [j, v] : r) {
            Int den = rat_den(v);
            lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        }
        std::map<long, Int> row;
        for (const auto& [j, v] : r) row[j] = rat_num(v) * (lcm / rat_den(v));
        rows.push_back(std::move(row));
    }
    long rank = 0;
    Int prev_pivot = 1;
    std::vector<char> done(rows.size(), 0);
    while (true) {
        // Pick the sparsest remaining nonzero row.
        size_t pivot_row = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            if (pivot_row == rows.size() || rows[i].size() < rows[pivot_row].size()) pivot_row = i;
        }
        if (pivot_row == rows.size()) break;
        ++rank;
        done[pivot_row] = 1;
        const long pc = rows[pivot_row].begin()->first;
        const Int piv = rows[pivot_row].begin()->second;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            auto it = rows[i].find(pc);
            const Int factor = it == rows[i].end() ? Int(0) : it->second;
            std::map<long, Int> next;
            for (const auto& [j, v] : rows[i]) {
                if (j == pc) continue;
                auto pj = rows[pivot_row].find(j);
                Int updated = v * piv - (pj == rows[pivot_row].end() ? Int(0) : pj->second * factor);
                if (updated != 0) next[j] = updated / prev_pivot;
            }
            if (factor != 0)
                for (const auto& [j, v] : rows[pivot_row]) {
                    if (j == pc || rows[i].count(j)) continue;
                    Int updated = -v * factor;
                    if (updated != 0) next[j] = updated / prev_pivot;
                }
            rows[i] = std::move(next);
        }
        prev_pivot = piv;
    }
    return rank;
}

// Dimension of the span of a family of equal-shaped matrices, via the exact
// Gram matrix of the trace pairing <A,B> = tr(A B^T), which is positive
// definite on real matrices.
inline long span_rank(const std::vector<ExactMatrix>& mats) {
    const size_t n = mats.size();
    ExactMatrix gram(static_cast<long>(n), static_cast<long>(n));
    std::vector<ExactMatrix> transposed;
    transposed.reserve(n);
    for (const auto& m : mats) transposed.push_back(m.transpose());
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            Rational t = (mats[a] * transposed[b]).trace();
            gram.set(static_cast<long>(a), static_cast<long>(b), t);
            if (a != b) gram.set(static_cast<long>(b), static_cast<long>(a), t);
        }
    return matrix_rank(gram);
}

} // namespace qpart

#endif // QPART_EXACT_MATRIX_HPP
