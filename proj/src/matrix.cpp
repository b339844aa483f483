#include "gkm/matrix.hpp"

#include <stdexcept>

namespace gkm {

void RationalMatrix::set(int row, int col, const Rational& value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
        throw std::out_of_range("RationalMatrix::set: index out of range");
    }
    if (value == 0) {
        entries_.erase({row, col});
    } else {
        entries_[{row, col}] = value;
    }
}

void RationalMatrix::add(int row, int col, const Rational& value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
        throw std::out_of_range("RationalMatrix::add: index out of range");
    }
    auto [it, inserted] = entries_.emplace(std::make_pair(row, col), value);
    if (!inserted) {
        it->second += value;
    }
    if (it->second == 0) {
        entries_.erase(it);
    }
}

Rational RationalMatrix::at(int row, int col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

void RationalMatrix::append_rows(const RationalMatrix& extra) {
    if (extra.cols_ != cols_) {
        throw std::invalid_argument("RationalMatrix::append_rows: column count mismatch");
    }
    const int offset = rows_;
    rows_ += extra.rows_;
    for (const auto& [key, value] : extra.entries_) {
        entries_[{key.first + offset, key.second}] = value;
    }
}

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Exact division; in debug builds the zero remainder is asserted.
BigInt exact_div(const BigInt& num, const BigInt& den) {
#ifndef NDEBUG
    BigInt q, r;
    divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::logic_error("fraction-free elimination: inexact division");
    }
    return q;
#else
    return num / den;
#endif
}

} // namespace

KernelResult kernel(const RationalMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();

    // clear denominators row by row (row scaling preserves rank and kernel)
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols, BigInt(0)));
    std::vector<BigInt> row_lcm(rows, BigInt(1));
    for (const auto& [key, value] : m.entries()) {
        const BigInt den = denominator(value);
        row_lcm[key.first] = lcm(row_lcm[key.first], den);
    }
    for (const auto& [key, value] : m.entries()) {
        a[key.first][key.second] = numerator(value) * (row_lcm[key.first] / denominator(value));
    }

    // fraction-free forward elimination with row pivoting; pivot = smallest
    // nonzero magnitude to keep intermediate minors small
    std::vector<int> pivot_cols;
    BigInt previous_pivot = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0 && (best < 0 || abs_big(a[i][c]) < abs_big(a[best][c]))) {
                best = i;
            }
        }
        if (best < 0) {
            continue;
        }
        std::swap(a[r], a[best]);
        const BigInt pivot = a[r][c];
        for (int i = r + 1; i < rows; ++i) {
            const BigInt factor = a[i][c];
            a[i][c] = 0;
            for (int j = c + 1; j < cols; ++j) {
                a[i][j] = exact_div(a[i][j] * pivot - factor * a[r][j], previous_pivot);
            }
        }
        previous_pivot = pivot;
        pivot_cols.push_back(c);
        ++r;
    }
    const int rank_value = r;

    // exact back-substitution of the pivot rows to reduced echelon form
    std::vector<std::vector<Rational>> rr(rank_value, std::vector<Rational>(cols, Rational(0)));
    for (int i = 0; i < rank_value; ++i) {
        for (int j = pivot_cols[i]; j < cols; ++j) {
            if (a[i][j] != 0) {
                rr[i][j] = Rational(a[i][j]);
            }
        }
    }
    for (int i = rank_value - 1; i >= 0; --i) {
        const Rational pivot = rr[i][pivot_cols[i]];
        for (int j = pivot_cols[i]; j < cols; ++j) {
            rr[i][j] /= pivot;
        }
        for (int above = 0; above < i; ++above) {
            const Rational factor = rr[above][pivot_cols[i]];
            if (factor == 0) {
                continue;
            }
            for (int j = pivot_cols[i]; j < cols; ++j) {
                rr[above][j] -= factor * rr[i][j];
            }
        }
    }

    // canonical kernel basis: one vector per free column
    KernelResult out;
    out.rank = rank_value;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_cols) {
        is_pivot[c] = true;
    }
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (int i = 0; i < rank_value; ++i) {
            if (rr[i][f] != 0) {
                v[pivot_cols[i]] = -rr[i][f];
            }
        }
        // scale so the first nonzero entry is 1
        for (int j = 0; j < cols; ++j) {
            if (v[j] != 0) {
                if (v[j] != 1) {
                    const Rational lead = v[j];
                    for (int t = j; t < cols; ++t) {
                        v[t] /= lead;
                    }
                }
                break;
            }
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

long long rank(const RationalMatrix& m) { return kernel(m).rank; }

} // namespace gkm
