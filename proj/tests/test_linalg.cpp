#include "ubb/linalg.hpp"

#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

using ubb::kernel_basis;
using ubb::Rational;
using ubb::RationalMatrix;
using ubb::RationalVector;

namespace {

// Test-local RNG, independent of the library's sampling helpers.
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    long pick(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rat() {
        long n = 0;
        while (n == 0) n = pick(-9, 9);
        return Rational(n, pick(1, 9));
    }
};

RationalMatrix random_matrix(Lcg& rng, int rows, int cols) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rat();
    return m;
}

// Plain Gaussian elimination, written independently of the library's
// fraction-free routine, as a rank oracle.
int rank_oracle(RationalMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) {
            Rational tmp = m.at(r, j);
            m.at(r, j) = m.at(pivot, j);
            m.at(pivot, j) = tmp;
        }
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rational f = m.at(i, c) / m.at(r, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

// Symmetric congruence elimination: PSD iff no negative pivot appears and no
// zero-diagonal row keeps off-diagonal mass. Independent PSD oracle.
bool psd_oracle(RationalMatrix m) {
    const int n = m.rows();
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, i).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            // all remaining diagonal zero: PSD only if everything else is too
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (!m.at(i, j).is_zero()) return false;
            return true;
        }
        if (pivot != k) {
            for (int j = 0; j < n; ++j) {
                Rational tmp = m.at(k, j);
                m.at(k, j) = m.at(pivot, j);
                m.at(pivot, j) = tmp;
            }
            for (int i = 0; i < n; ++i) {
                Rational tmp = m.at(i, k);
                m.at(i, k) = m.at(i, pivot);
                m.at(i, pivot) = tmp;
            }
        }
        if (m.at(k, k).sign() < 0) return false;
        for (int i = k + 1; i < n; ++i) {
            const Rational f = m.at(i, k) / m.at(k, k);
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
        for (int j = k + 1; j < n; ++j) m.at(k, j) = Rational(0);
    }
    return true;
}

RationalMatrix gram(const RationalMatrix& a) {
    RationalMatrix g(a.cols(), a.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Rational acc(0);
            for (int k = 0; k < a.rows(); ++k) acc += a.at(k, i) * a.at(k, j);
            g.at(i, j) = acc;
        }
    return g;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank basics") {
    CHECK(ubb::rank(RationalMatrix(4, 4)) == 0);
    CHECK(ubb::rank(RationalMatrix::identity(5)) == 5);

    RationalMatrix outer(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) outer.at(i, j) = Rational((i + 1) * (j + 1));
    CHECK(ubb::rank(outer) == 1);
}

TEST_CASE("rank agrees with an independent elimination on random matrices") {
    Lcg rng(11);
    for (int t = 0; t < 60; ++t) {
        const int rows = 1 + static_cast<int>(rng.next() % 7);
        const int cols = 1 + static_cast<int>(rng.next() % 7);
        RationalMatrix m = random_matrix(rng, rows, cols);
        if (t % 3 == 0 && rows > 1) {
            // plant a dependent row
            for (int j = 0; j < cols; ++j) m.at(rows - 1, j) = m.at(0, j) * Rational(3, 2);
        }
        CHECK(ubb::rank(m) == rank_oracle(m));
    }
}

TEST_CASE("kernel basis spans the kernel") {
    Lcg rng(23);
    for (int t = 0; t < 40; ++t) {
        const int rows = 1 + static_cast<int>(rng.next() % 5);
        const int cols = 2 + static_cast<int>(rng.next() % 6);
        const RationalMatrix m = random_matrix(rng, rows, cols);
        const auto kernel = kernel_basis(m);
        CHECK(static_cast<int>(kernel.size()) == cols - ubb::rank(m));
        for (const auto& k : kernel)
            for (int i = 0; i < rows; ++i) {
                Rational acc(0);
                for (int j = 0; j < cols; ++j) acc += m.at(i, j) * k[static_cast<std::size_t>(j)];
                CHECK(acc.is_zero());
            }
        if (!kernel.empty()) {
            std::vector<RationalVector> rows_k(kernel.begin(), kernel.end());
            CHECK(ubb::rank(RationalMatrix::from_rows(rows_k)) ==
                  static_cast<int>(kernel.size()));
        }
    }
}

TEST_CASE("orthogonalize worked examples") {
    const RationalVector v11{Rational(1), Rational(1)};
    const RationalVector v10{Rational(1), Rational(0)};
    auto out = ubb::orthogonalize({v11, v10});
    REQUIRE(out.size() == 2);
    CHECK(out[0] == v11);
    CHECK(out[1] == RationalVector{Rational(1), Rational(-1)});

    const RationalVector ones{Rational(1), Rational(1), Rational(1)};
    auto out3 = ubb::orthogonalize(
        {ones,
         {Rational(1), Rational(0), Rational(0)},
         {Rational(0), Rational(1), Rational(0)}});
    REQUIRE(out3.size() == 3);
    CHECK(out3[0] == ones);
    CHECK(out3[1] == RationalVector{Rational(2), Rational(-1), Rational(-1)});
    CHECK(out3[2] == RationalVector{Rational(0), Rational(1), Rational(-1)});
}

TEST_CASE("orthogonalize keeps the first vector's orientation") {
    auto out = ubb::orthogonalize({{Rational(-1), Rational(-1)}, {Rational(1), Rational(0)}});
    CHECK(out[0] == RationalVector{Rational(-1), Rational(-1)});
    CHECK(out[1][0].sign() > 0);  // completions lead with a positive entry
}

TEST_CASE("orthogonalize rejects dependent input") {
    CHECK_THROWS_AS(ubb::orthogonalize({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}),
                    std::invalid_argument);
}

TEST_CASE("orthogonalize yields diagonal Gram matrices on random input") {
    Lcg rng(37);
    for (int t = 0; t < 30; ++t) {
        const int dim = 3 + static_cast<int>(rng.next() % 4);
        const int count = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(dim));
        std::vector<RationalVector> vecs;
        RationalMatrix m = random_matrix(rng, count, dim);
        if (ubb::rank(m) < count) {
            --t;
            continue;
        }
        for (int i = 0; i < count; ++i) {
            RationalVector v(static_cast<std::size_t>(dim));
            for (int j = 0; j < dim; ++j) v[static_cast<std::size_t>(j)] = m.at(i, j);
            vecs.push_back(std::move(v));
        }
        const auto out = ubb::orthogonalize(vecs);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                CHECK(ubb::dot(out[i], out[j]).is_zero());
        for (const auto& v : out) {
            mpz_class g(0);
            bool integral = true;
            for (const auto& c : v) {
                if (c.den() != 1) integral = false;
                g = gcd(g, c.num());
            }
            CHECK(integral);  // primitive integer output
            if (g != 0) CHECK(g == 1);
        }
    }
}

TEST_CASE("char_poly on the identity") {
    const auto c = ubb::char_poly(RationalMatrix::identity(3));
    REQUIRE(c.size() == 4);
    CHECK(c[0] == Rational(-1));
    CHECK(c[1] == Rational(3));
    CHECK(c[2] == Rational(-3));
    CHECK(c[3] == Rational(1));
}

TEST_CASE("char_poly matches trace and determinant") {
    Lcg rng(41);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const RationalMatrix m = random_matrix(rng, n, n);
        const auto c = ubb::char_poly(m);
        REQUIRE(static_cast<int>(c.size()) == n + 1);
        CHECK(c[static_cast<std::size_t>(n)] == Rational(1));
        CHECK(c[static_cast<std::size_t>(n - 1)] == -m.trace());
    }
}

TEST_CASE("modular characteristic polynomial agrees with the direct one") {
    Lcg rng(53);
    for (int t = 0; t < 12; ++t) {
        const int n = 2 + static_cast<int>(rng.next() % 6);
        RationalMatrix m = random_matrix(rng, n, n);
        // symmetrize, matching how the routine is used
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m.at(j, i) = m.at(i, j);
        CHECK(ubb::detail::char_poly_modular(m) == ubb::detail::char_poly_faddeev_leverrier(m));
    }
}

TEST_CASE("char_poly dispatch stays consistent above the direct-size cutoff") {
    Lcg rng(59);
    const int n = 17;
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            m.at(i, j) = Rational(rng.pick(-5, 5));
            m.at(j, i) = m.at(i, j);
        }
    CHECK(ubb::char_poly(m) == ubb::detail::char_poly_faddeev_leverrier(m));
}

TEST_CASE("is_psd known cases") {
    RationalMatrix good(2, 2);
    good.at(0, 0) = Rational(2);
    good.at(0, 1) = Rational(1);
    good.at(1, 0) = Rational(1);
    good.at(1, 1) = Rational(2);
    CHECK(ubb::is_psd(good));

    RationalMatrix bad(2, 2);
    bad.at(0, 0) = Rational(1);
    bad.at(0, 1) = Rational(2);
    bad.at(1, 0) = Rational(2);
    bad.at(1, 1) = Rational(1);
    CHECK_FALSE(ubb::is_psd(bad));

    CHECK(ubb::is_psd(RationalMatrix(3, 3)));
    CHECK(ubb::is_psd(RationalMatrix::identity(4)));

    RationalMatrix offdiag(2, 2);
    offdiag.at(0, 1) = Rational(1);
    offdiag.at(1, 0) = Rational(1);
    CHECK_FALSE(ubb::is_psd(offdiag));
}

TEST_CASE("is_psd agrees with a congruence-elimination oracle") {
    Lcg rng(67);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const RationalMatrix a = random_matrix(rng, 1 + static_cast<int>(rng.next() % 5), n);
        RationalMatrix m = gram(a);  // PSD by construction
        if (t % 2 == 1) {
            // pull the spectrum down so it is no longer PSD
            const Rational shift = m.trace() + Rational(1);
            for (int i = 0; i < n; ++i) m.at(i, i) -= shift;
        }
        CHECK(ubb::is_psd(m) == psd_oracle(m));
    }
}

TEST_CASE("min_eig_bound on diagonal and exchange matrices") {
    const auto ident = ubb::min_eig_bound(RationalMatrix::identity(4));
    CHECK(ident.lo == Rational(1));
    CHECK(ident.hi == Rational(1));

    RationalMatrix diag(3, 3);
    diag.at(0, 0) = Rational(2);
    diag.at(1, 1) = Rational(3);
    diag.at(2, 2) = Rational(5);
    const auto di = ubb::min_eig_bound(diag);
    CHECK(di.lo <= Rational(2));
    CHECK(Rational(2) <= di.hi);
    CHECK(di.hi - di.lo <= Rational(1, 1000000000));

    RationalMatrix ex(2, 2);
    ex.at(0, 1) = Rational(1);
    ex.at(1, 0) = Rational(1);
    const auto xi = ubb::min_eig_bound(ex);  // eigenvalues -1 and 1
    CHECK(xi.lo <= Rational(-1));
    CHECK(Rational(-1) <= xi.hi);
    CHECK(xi.hi - xi.lo <= Rational(1, 1000000000));
}

}  // TEST_SUITE
