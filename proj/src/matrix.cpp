#include "ubb/matrix.hpp"

namespace ubb {

Rational dot(const RationalVector& u, const RationalVector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s;
    for (size_t i = 0; i < u.size(); ++i) {
        if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
    }
    return s;
}

RationalVector tensor_product(const RationalVector& u, const RationalVector& v) {
    RationalVector out(u.size() * v.size());
    size_t k = 0;
    for (const Rational& a : u) {
        if (a.is_zero()) {
            k += v.size();
            continue;
        }
        for (const Rational& b : v) out[k++] = a * b;
    }
    return out;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return RationalMatrix(0, 0);
    const int cols = static_cast<int>(rows[0].size());
    RationalMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw std::invalid_argument("from_rows: ragged input");
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
    }
    return m;
}

void RationalMatrix::add_outer(const RationalVector& v, const Rational& scale) {
    if (static_cast<int>(v.size()) != rows_ || rows_ != cols_)
        throw std::invalid_argument("add_outer: shape mismatch");
    std::vector<int> support;
    for (int i = 0; i < rows_; ++i)
        if (!v[i].is_zero()) support.push_back(i);
    for (int i : support) {
        const Rational vi = v[i] / scale;
        for (int j : support) at(i, j) += vi * v[j];
    }
}

}  // namespace ubb
