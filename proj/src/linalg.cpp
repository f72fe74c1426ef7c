#include "ubb/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ubb {

namespace {

// Clears one row to coprime integers (multiplies by the lcm of denominators,
// divides by the gcd of numerators). Rank-preserving.
std::vector<mpz_class> cleared_row(const RationalMatrix& m, int r) {
    mpz_class l = 1;
    for (int c = 0; c < m.cols(); ++c) l = lcm(l, m.at(r, c).den());
    std::vector<mpz_class> out(m.cols());
    mpz_class g = 0;
    for (int c = 0; c < m.cols(); ++c) {
        out[c] = m.at(r, c).num() * (l / m.at(r, c).den());
        g = gcd(g, out[c]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace

int rank(const RationalMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<mpz_class>> a(rows);
    for (int r = 0; r < rows; ++r) a[r] = cleared_row(m, r);

    // Bareiss fraction-free elimination; the division by the previous pivot
    // is always exact.
    mpz_class prev = 1;
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int r = rk; r < rows; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rk], a[piv]);
        for (int r = rk + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                a[r][c] = (a[rk][col] * a[r][c] - a[r][col] * a[rk][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    RationalMatrix a = m;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        const Rational pv = a.at(r, c);
        for (int j = c; j < cols; ++j) a.at(r, j) /= pv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const Rational f = a.at(i, c);
            for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols);
        v[free] = Rational(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RationalVector> orthogonalize(const std::vector<RationalVector>& vs) {
    std::vector<RationalVector> out;
    bool first = true;
    for (const RationalVector& input : vs) {
        RationalVector w = input;
        for (const RationalVector& u : out) {
            const Rational c = dot(w, u) / dot(u, u);
            if (c.is_zero()) continue;
            for (size_t i = 0; i < w.size(); ++i) w[i] -= c * u[i];
        }
        mpz_class l = 1;
        for (const Rational& x : w) l = lcm(l, x.den());
        mpz_class g = 0;
        std::vector<mpz_class> iw(w.size());
        for (size_t i = 0; i < w.size(); ++i) {
            iw[i] = w[i].num() * (l / w[i].den());
            g = gcd(g, iw[i]);
        }
        if (g == 0) throw std::invalid_argument("orthogonalize: dependent input");
        int lead = 0;
        while (iw[lead] == 0) ++lead;
        // Completions get a positive leading entry; the first vector keeps
        // its own orientation.
        if (!first && iw[lead] < 0) g = -g;
        RationalVector res(w.size());
        for (size_t i = 0; i < w.size(); ++i) res[i] = Rational(mpz_class(iw[i] / g), mpz_class(1));
        out.push_back(std::move(res));
        first = false;
    }
    return out;
}

namespace detail {

std::vector<Rational> char_poly_faddeev_leverrier(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square input");
    const int n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    if (n == 0) return c;
    RationalMatrix a = m;
    c[n - 1] = -a.trace();
    for (int k = 2; k <= n; ++k) {
        RationalMatrix shifted = a;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
        a = m * shifted;
        c[n - k] = -(a.trace() / Rational(k));
    }
    return c;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

u64 modinv(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Characteristic polynomial mod p of an upper Hessenberg matrix, by the
// leading-principal-minor recurrence. Returns ascending coefficients.
std::vector<u64> hessenberg_char_poly_mod(std::vector<std::vector<u64>>& h, int n, u64 p) {
    std::vector<std::vector<u64>> poly(n + 1);
    poly[0] = {1};
    for (int k = 1; k <= n; ++k) {
        const u64 diag = h[k - 1][k - 1];
        std::vector<u64> pk(k + 1, 0);
        const auto& pm = poly[k - 1];
        for (int j = 0; j < k; ++j) {
            pk[j + 1] = (pk[j + 1] + pm[j]) % p;
            pk[j] = (pk[j] + p - mulmod(diag, pm[j], p)) % p;
        }
        u64 prod = 1;
        for (int i = k - 1; i >= 1; --i) {
            prod = mulmod(prod, h[i][i - 1], p);
            const u64 f = mulmod(h[i - 1][k - 1], prod, p);
            if (f == 0) continue;
            const auto& pi = poly[i - 1];
            for (size_t j = 0; j < pi.size(); ++j)
                pk[j] = (pk[j] + p - mulmod(f, pi[j], p)) % p;
        }
        poly[k] = std::move(pk);
    }
    return poly[n];
}

void hessenberg_reduce_mod(std::vector<std::vector<u64>>& h, int n, u64 p) {
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int r = j + 1; r < n; ++r)
            if (h[r][j] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != j + 1) {
            std::swap(h[piv], h[j + 1]);
            for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
        }
        const u64 inv = modinv(h[j + 1][j], p);
        for (int r = j + 2; r < n; ++r) {
            if (h[r][j] == 0) continue;
            const u64 f = mulmod(h[r][j], inv, p);
            for (int c = j; c < n; ++c)
                h[r][c] = (h[r][c] + p - mulmod(f, h[j + 1][c], p)) % p;
            for (int c = 0; c < n; ++c)
                h[c][j + 1] = (h[c][j + 1] + mulmod(f, h[c][r], p)) % p;
        }
    }
}

}  // namespace

std::vector<Rational> char_poly_modular(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square input");
    const int n = m.rows();
    std::vector<Rational> out(n + 1);
    out[n] = Rational(1);
    if (n == 0) return out;

    // Scale to an integer matrix N = D*M; then c_k(M) = c_k(N) / D^(n-k).
    mpz_class den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) den = lcm(den, m.at(i, j).den());
    std::vector<std::vector<mpz_class>> nmat(n, std::vector<mpz_class>(n));
    mpz_class maxabs = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            nmat[i][j] = m.at(i, j).num() * (den / m.at(i, j).den());
            mpz_class a = abs(nmat[i][j]);
            if (a > maxabs) maxabs = a;
        }

    // |c_{n-k}(N)| <= C(n,k) * k^(k/2) * maxabs^k  (Hadamard bound summed
    // over principal k-minors).
    mpz_class bound = 1;
    for (int k = 1; k <= n; ++k) {
        mpz_class binom, kk, apow;
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        mpz_ui_pow_ui(kk.get_mpz_t(), k, k);
        mpz_class kroot = sqrt(kk) + 1;
        mpz_pow_ui(apow.get_mpz_t(), maxabs.get_mpz_t(), k);
        mpz_class bk = binom * kroot * apow;
        if (bk > bound) bound = bk;
    }
    bound *= 2;

    std::vector<u64> primes;
    mpz_class prod = 1;
    for (u64 cand = (u64(1) << 62) + 1; prod <= bound; cand += 2) {
        if (!is_prime_u64(cand)) continue;
        primes.push_back(cand);
        prod *= mpz_class(static_cast<unsigned long>(cand));
    }

    std::vector<mpz_class> crt_val(n + 1, 0);
    mpz_class crt_mod = 1;
    for (u64 p : primes) {
        std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
        const mpz_class pz(static_cast<unsigned long>(p));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpz_class r = nmat[i][j] % pz;
                if (r < 0) r += pz;
                h[i][j] = r.get_ui();
            }
        hessenberg_reduce_mod(h, n, p);
        std::vector<u64> cp = hessenberg_char_poly_mod(h, n, p);
        // Incremental CRT merge.
        const mpz_class pm = crt_mod % pz;
        u64 inv = modinv(pm.get_ui() % p, p);
        for (int k = 0; k <= n; ++k) {
            mpz_class cur = crt_val[k] % pz;
            if (cur < 0) cur += pz;
            u64 delta = (cp[k] + p - cur.get_ui() % p) % p;
            crt_val[k] += crt_mod * mulmod(delta, inv, p);
        }
        crt_mod *= pz;
    }
    const mpz_class half = crt_mod / 2;
    mpz_class dpow = 1;
    for (int k = n; k >= 0; --k) {
        mpz_class v = crt_val[k];
        if (v > half) v -= crt_mod;
        out[k] = Rational(v, dpow);
        dpow *= den;
    }
    return out;
}

bool nonnegative_roots(const std::vector<Rational>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    for (int k = 1; k <= n; ++k) {
        const Rational& c = coeffs[n - k];
        if (k % 2 == 1 ? c.sign() > 0 : c.sign() < 0) return false;
    }
    return true;
}

}  // namespace detail

std::vector<Rational> char_poly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square input");
    return m.rows() <= 16 ? detail::char_poly_faddeev_leverrier(m)
                          : detail::char_poly_modular(m);
}

bool is_psd(const RationalMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("is_psd: asymmetric input");
    return detail::nonnegative_roots(char_poly(m));
}

namespace {

// p(y + x) expanded in y; with p monic this keeps the degree and shifts all
// roots down by x, so sign alternation on the shifted polynomial decides
// "min eigenvalue >= x".
std::vector<Rational> taylor_shift(const std::vector<Rational>& c, const Rational& x) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<Rational> q(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (c[k].is_zero()) continue;
        Rational xpow(1);
        mpz_class binom = 1;
        for (int j = k; j >= 0; --j) {
            q[j] += c[k] * Rational(binom, mpz_class(1)) * xpow;
            xpow *= x;
            if (j > 0) binom = binom * j / (k - j + 1);
        }
    }
    return q;
}

}  // namespace

EigInterval min_eig_bound(const RationalMatrix& m, const Rational& width) {
    if (!m.is_symmetric()) throw std::invalid_argument("min_eig_bound: asymmetric input");
    const int n = m.rows();
    if (n == 0) return {Rational(0), Rational(0)};
    // Gershgorin gives a certified lower bound; the smallest diagonal entry
    // is an upper bound on the minimum eigenvalue of a symmetric matrix.
    Rational lo, hi;
    for (int i = 0; i < n; ++i) {
        Rational radius;
        for (int j = 0; j < n; ++j)
            if (j != i) radius += m.at(i, j).abs();
        const Rational gersh = m.at(i, i) - radius;
        if (i == 0 || gersh < lo) lo = gersh;
        if (i == 0 || m.at(i, i) < hi) hi = m.at(i, i);
    }
    const std::vector<Rational> p = char_poly(m);
    const auto psd_at = [&](const Rational& x) {
        return detail::nonnegative_roots(taylor_shift(p, x));
    };
    if (psd_at(hi)) return {hi, hi};
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / Rational(2);
        if (psd_at(mid))
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

}  // namespace ubb
