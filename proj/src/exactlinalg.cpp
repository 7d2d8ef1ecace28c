#include "qpi/exactlinalg.hpp"

#include <algorithm>
#include <optional>

#include "qpi/error.hpp"
#include "qpi/pipedream.hpp"

namespace qpi {

IntMatrix matrix_from_diagram(const Diagram& d) {
    const auto boxes = white_labels(d);
    const std::size_t n = boxes.size();
    IntMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            // Row-major labels: a later box sharing a row is to the right,
            // a later box sharing a column is below.
            if (boxes[a].row == boxes[b].row || boxes[a].col == boxes[b].col) {
                m(a, b) = 1;
                m(b, a) = -1;
            }
        }
    return m;
}

IntMatrix extend(const IntMatrix& m, ExtendOrientation o) {
    require_skew(m);
    const std::size_t n = m.rows();
    const long sign = o == ExtendOrientation::OnesColumn ? 1 : -1;
    IntMatrix e(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) e(i, j) = m(i, j);
        e(i, n) = sign;
        e(n, i) = -sign;
    }
    return e;
}

namespace {

struct Pos {
    std::size_t i;
    std::size_t j;
};

// Smallest nonzero |a(i,j)| with i, j >= k.
std::optional<Pos> min_entry(const IntMatrix& a, std::size_t k) {
    std::optional<Pos> best;
    Int best_abs;
    for (std::size_t i = k; i < a.rows(); ++i)
        for (std::size_t j = k; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            Int v = abs(a(i, j));
            if (!best || v < best_abs) {
                best = Pos{i, j};
                best_abs = v;
                if (best_abs == 1) return best;
            }
        }
    return best;
}

void swap_rows(IntMatrix& a, std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < a.cols(); ++j) swap(a(r, j), a(s, j));
}

void swap_cols(IntMatrix& a, std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t i = 0; i < a.rows(); ++i) swap(a(i, r), a(i, s));
}

// row_r += c * row_s
void add_row(IntMatrix& a, std::size_t r, std::size_t s, const Int& c) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (sgn(a(s, j)) != 0) a(r, j) += c * a(s, j);
}

void add_col(IntMatrix& a, std::size_t r, std::size_t s, const Int& c) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (sgn(a(i, s)) != 0) a(i, r) += c * a(i, s);
}

} // namespace

SmithResult smith_invariant_factors(const IntMatrix& m) {
    IntMatrix a = m;
    SmithResult out;
    const std::size_t lim = std::min(a.rows(), a.cols());
    std::size_t k = 0;
    for (; k < lim; ++k) {
        auto piv = min_entry(a, k);
        if (!piv) break;
        for (;;) {
            swap_rows(a, k, piv->i);
            swap_cols(a, k, piv->j);
            const Int p = a(k, k);
            bool dirty = false;
            for (std::size_t i = k + 1; i < a.rows(); ++i) {
                if (sgn(a(i, k)) == 0) continue;
                Int q = a(i, k) / p;
                add_row(a, i, k, -q);
                dirty = dirty || sgn(a(i, k)) != 0;
            }
            for (std::size_t j = k + 1; j < a.cols(); ++j) {
                if (sgn(a(k, j)) == 0) continue;
                Int q = a(k, j) / p;
                add_col(a, j, k, -q);
                dirty = dirty || sgn(a(k, j)) != 0;
            }
            if (!dirty) {
                // Pivot must divide the rest of the block.
                for (std::size_t i = k + 1; i < a.rows() && !dirty; ++i)
                    for (std::size_t j = k + 1; j < a.cols(); ++j)
                        if (sgn(a(i, j)) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), p.get_mpz_t())) {
                            add_row(a, k, i, 1);
                            dirty = true;
                            break;
                        }
            }
            if (!dirty) break;
            piv = min_entry(a, k);
        }
        out.factors.push_back(abs(a(k, k)));
    }
    out.rank = out.factors.size();
    out.kernel_dim = m.cols() - out.rank;
    if (m.is_skew_symmetric())
        for (std::size_t i = 0; i < out.factors.size(); i += 2) out.pairs.push_back(out.factors[i]);
    return out;
}

namespace {

// Congruence operations on a skew matrix, mirrored into the transform E.
struct Congruence {
    IntMatrix a;
    IntMatrix e;

    void swap(std::size_t r, std::size_t s) {
        if (r == s) return;
        swap_rows(a, r, s);
        swap_cols(a, r, s);
        swap_rows(e, r, s);
    }
    void addmul(std::size_t r, std::size_t s, const Int& c) {
        if (sgn(c) == 0) return;
        add_row(a, r, s, c);
        add_col(a, r, s, c);
        add_row(e, r, s, c);
    }
    void negate(std::size_t r) {
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, r) = -a(i, r);
        for (std::size_t j = 0; j < e.cols(); ++j) e(r, j) = -e(r, j);
    }
};

} // namespace

IntMatrix skew_block_matrix(const std::vector<Int>& h, std::size_t n) {
    IntMatrix s(n, n);
    for (std::size_t k = 0; k < h.size(); ++k) {
        s(2 * k, 2 * k + 1) = h[k];
        s(2 * k + 1, 2 * k) = -h[k];
    }
    return s;
}

SkewNormalForm skew_normal_form(const IntMatrix& m) {
    require_skew(m);
    const std::size_t n = m.rows();
    Congruence w{m, IntMatrix::identity(n)};
    SkewNormalForm out;

    std::size_t k = 0;
    while (k + 1 < n) {
        auto piv = min_entry(w.a, k);
        if (!piv) break;
        for (;;) {
            std::size_t i = std::min(piv->i, piv->j);
            std::size_t j = std::max(piv->i, piv->j);
            w.swap(k, i);
            w.swap(k + 1, j);
            const Int p = w.a(k, k + 1);
            bool dirty = false;
            for (std::size_t l = k + 2; l < n; ++l) {
                if (sgn(w.a(k, l)) != 0) w.addmul(l, k + 1, -Int(w.a(k, l) / p));
                if (sgn(w.a(k + 1, l)) != 0) w.addmul(l, k, Int(w.a(k + 1, l) / p));
                dirty = dirty || sgn(w.a(k, l)) != 0 || sgn(w.a(k + 1, l)) != 0;
            }
            if (!dirty) {
                for (std::size_t r = k + 2; r < n && !dirty; ++r)
                    for (std::size_t c = r + 1; c < n; ++c)
                        if (sgn(w.a(r, c)) != 0 && !mpz_divisible_p(w.a(r, c).get_mpz_t(), p.get_mpz_t())) {
                            // Pull the offending row into row k so its remainder becomes a new pivot.
                            w.addmul(k, r, 1);
                            dirty = true;
                            break;
                        }
            }
            if (!dirty) break;
            piv = min_entry(w.a, k);
        }
        if (sgn(w.a(k, k + 1)) < 0) w.negate(k);
        out.h.push_back(w.a(k, k + 1));
        k += 2;
    }
    out.kernel_dim = n - 2 * out.h.size();
    out.S = skew_block_matrix(out.h, n);
    out.E = std::move(w.e);

    if (w.a != out.S || out.E * m * out.E.transpose() != out.S)
        throw Error(Errc::InternalVerificationFailed, "E M E^T does not equal the block form");
    for (std::size_t i = 1; i < out.h.size(); ++i)
        if (!mpz_divisible_p(out.h[i].get_mpz_t(), out.h[i - 1].get_mpz_t()))
            throw Error(Errc::InternalVerificationFailed, "invariant factors do not form a divisor chain");
    return out;
}

IntMatrix unimodular_inverse(const IntMatrix& e) {
    const std::size_t n = e.rows();
    if (e.cols() != n) throw Error(Errc::InternalVerificationFailed, "inverse of a non-square matrix");
    IntMatrix a = e;
    IntMatrix inv = IntMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        // Euclid down column c until a single nonzero entry remains at row c.
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = c; i < n; ++i)
                if (sgn(a(i, c)) != 0 && (!best || abs(a(i, c)) < abs(a(*best, c)))) best = i;
            if (!best) throw Error(Errc::InternalVerificationFailed, "matrix is singular");
            swap_rows(a, c, *best);
            swap_rows(inv, c, *best);
            bool done = true;
            for (std::size_t i = c + 1; i < n; ++i) {
                if (sgn(a(i, c)) == 0) continue;
                Int q = a(i, c) / a(c, c);
                add_row(a, i, c, -q);
                add_row(inv, i, c, -q);
                done = done && sgn(a(i, c)) == 0;
            }
            if (done) break;
        }
        if (abs(a(c, c)) != 1) throw Error(Errc::InternalVerificationFailed, "matrix is not unimodular");
    }
    for (std::size_t c = n; c-- > 0;) {
        if (a(c, c) == -1) {
            for (std::size_t j = 0; j < n; ++j) {
                a(c, j) = -a(c, j);
                inv(c, j) = -inv(c, j);
            }
        }
        for (std::size_t i = 0; i < c; ++i) {
            if (sgn(a(i, c)) == 0) continue;
            Int q = a(i, c);
            add_row(a, i, c, -q);
            add_row(inv, i, c, -q);
        }
    }
    if (e * inv != IntMatrix::identity(n))
        throw Error(Errc::InternalVerificationFailed, "E * E^-1 is not the identity");
    return inv;
}

namespace {

void make_primitive(IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

} // namespace

std::vector<IntVector> kernel_basis_rational(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<IntVector> a(rows, IntVector(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

    // Fraction-free Gauss-Jordan: cross-multiply, then strip row content.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::optional<std::size_t> best;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(a[i][c]) != 0 && (!best || abs(a[i][c]) < abs(a[*best][c]))) best = i;
        if (!best) continue;
        std::swap(a[r], a[*best]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            const Int f = a[i][c];
            const Int p = a[r][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = p * a[i][j] - f * a[r][j];
            make_primitive(a[i]);
        }
        make_primitive(a[r]);
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    Int l = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) l = lcm(l, a[k][pivot_col[k]]);
    l = abs(l);

    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        IntVector v(cols);
        v[f] = l;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -(a[k][f] * l) / a[k][pivot_col[k]];
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    for (const auto& v : basis) {
        for (const auto& x : m.apply(v))
            if (sgn(x) != 0) throw Error(Errc::InternalVerificationFailed, "kernel vector fails M v = 0");
    }
    return basis;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 reduce(const Int& x, u64 p) {
    mpz_class pp;
    mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

// Reduced row echelon form mod p; returns pivot columns.
std::vector<std::size_t> rref_mod_p(std::vector<std::vector<u64>>& a, std::size_t cols, u64 p) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t i = r;
        while (i < a.size() && a[i][c] == 0) ++i;
        if (i == a.size()) continue;
        std::swap(a[r], a[i]);
        const u64 inv = powmod(a[r][c], p - 2, p);
        for (auto& x : a[r]) x = mulmod(x, inv, p);
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (k == r || a[k][c] == 0) continue;
            const u64 f = a[k][c];
            for (std::size_t j = 0; j < cols; ++j) a[k][j] = (a[k][j] + p - mulmod(f, a[r][j], p)) % p;
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

} // namespace

std::vector<std::vector<std::uint64_t>> kernel_basis_mod_p(const IntMatrix& m, std::uint64_t p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    const std::size_t cols = m.cols();
    std::vector<std::vector<u64>> a(m.rows(), std::vector<u64>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = reduce(m(i, j), p);
    const auto piv = rref_mod_p(a, cols, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<u64>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<u64> v(cols, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = (p - a[k][f]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t kernel_dim_mod_p(const IntMatrix& m, std::uint64_t p) { return kernel_basis_mod_p(m, p).size(); }

bool one_perp(const IntMatrix& m) {
    for (const auto& v : kernel_basis_rational(m)) {
        Int s = 0;
        for (const auto& x : v) s += x;
        if (sgn(s) != 0) return false;
    }
    return true;
}

bool one_perp_mod_p(const IntMatrix& m, std::uint64_t p) {
    for (const auto& v : kernel_basis_mod_p(m, p)) {
        u64 s = 0;
        for (auto x : v) s = (s + x) % p;
        if (s != 0) return false;
    }
    return true;
}

namespace {

struct Exits {
    int left;
    int up;
};

std::vector<Exits> white_exits(const Diagram& d, const SideLabels& labels) {
    std::vector<Exits> out;
    for (const Box& b : white_labels(d))
        out.push_back({trace_pipe(d, labels, b.row, b.col - 1, Heading::Left),
                       trace_pipe(d, labels, b.row - 1, b.col, Heading::Up)});
    return out;
}

CycleKernelVector build_cycle_vector(const Diagram& d, const std::vector<Exits>& exits,
                                     const std::vector<int>& cycle) {
    CycleKernelVector kv;
    kv.cycle = cycle;
    kv.v.assign(static_cast<std::size_t>(d.rows() + d.cols()) + 1, 0);
    // Seeded with +1 at the least label; signs alternate along the cycle.
    for (std::size_t k = 0; k < cycle.size(); ++k) kv.v[cycle[k]] = k % 2 == 0 ? 1 : -1;
    for (const auto& e : exits) kv.w.emplace_back(kv.v[e.left] - kv.v[e.up]);
    return kv;
}

} // namespace

std::vector<CycleKernelVector> kernel_from_cycles(const Diagram& d) {
    const SideLabels labels = toric_labels(d.rows(), d.cols());
    const auto exits = white_exits(d, labels);
    const IntMatrix m = matrix_from_diagram(d);
    std::vector<CycleKernelVector> out;
    for (const auto& c : cycle_decomposition(toric_permutation(d)).cycles) {
        if (!is_odd_cycle(c)) continue;
        auto kv = build_cycle_vector(d, exits, c);
        for (const auto& x : m.apply(kv.w))
            if (sgn(x) != 0) throw Error(Errc::InternalVerificationFailed, "cycle vector is not in ker M");
        out.push_back(std::move(kv));
    }
    return out;
}

Int cycle_sum(const Diagram& d, const std::vector<int>& cycle) {
    const int m = d.rows();
    const SideLabels labels = toric_labels(d.rows(), d.cols());
    const auto kv = build_cycle_vector(d, white_exits(d, labels), cycle);
    const Permutation tau = toric_permutation(d);
    auto is_row = [m](int label) { return label <= m; };

    Int direct = 0;
    for (const auto& x : kv.w) direct += x;

    // Transitions between row and column labels along the cycle.
    Int transitions = 0;
    for (int j : cycle) {
        const int next = tau(j);
        if (!is_row(j) && is_row(next)) transitions += kv.v[next];
        if (is_row(j) && !is_row(next)) transitions -= kv.v[next];
    }

    // Alternating run form: start at the beginning of a run of row labels,
    // split into R_1 C_1 ... R_k C_k and sum the signed run boundaries.
    Int runs = 0;
    const std::size_t len = cycle.size();
    std::optional<std::size_t> start;
    for (std::size_t a = 0; a < len && !start; ++a)
        if (is_row(cycle[a]) && !is_row(cycle[(a + len - 1) % len])) start = a;
    if (start) {
        const int seed = kv.v[cycle[*start]];
        std::size_t pos = 0;
        bool row_run = true;
        int sign_exp = 0;
        while (pos < len) {
            std::size_t run = 0;
            while (pos + run < len && is_row(cycle[(*start + pos + run) % len]) == row_run) ++run;
            pos += run;
            sign_exp += static_cast<int>(run);
            const int term = sign_exp % 2 == 0 ? 1 : -1;
            runs += row_run ? -term : term;
            row_run = !row_run;
        }
        // A trailing row run with no column run after it contributes its closing boundary.
        if (!row_run) runs += sign_exp % 2 == 0 ? 1 : -1;
        runs *= seed;
    }

    if (direct != transitions || direct != runs)
        throw Error(Errc::FormulaMismatch, "cycle sum " + direct.get_str() + " vs transition form " +
                                               transitions.get_str() + " vs run form " + runs.get_str());
    return direct;
}

} // namespace qpi
