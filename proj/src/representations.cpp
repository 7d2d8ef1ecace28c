#include "qpi/representations.hpp"

#include <numeric>

#include "qpi/diagrams.hpp"
#include "qpi/error.hpp"
#include "qpi/exactlinalg.hpp"
#include "qpi/pidegree.hpp"

namespace qpi {

namespace {

using u64 = std::uint64_t;

std::uint32_t mod_ell(const Int& x, std::uint32_t ell) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), ell);
    return static_cast<std::uint32_t>(r.get_ui());
}

constexpr std::size_t kMaxDimension = 1u << 22;

} // namespace

MonomialMatrix::MonomialMatrix(std::uint32_t ell, std::vector<std::uint32_t> perm, std::vector<std::uint32_t> exps)
    : ell_(ell), perm_(std::move(perm)), exps_(std::move(exps)) {
    if (ell_ < 1 || perm_.size() != exps_.size()) throw Error(Errc::BadRange, "malformed monomial matrix");
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
        if (p >= perm_.size() || seen[p]) throw Error(Errc::BadRange, "monomial matrix support is not a permutation");
        seen[p] = true;
    }
    for (auto& e : exps_) e %= ell_;
}

MonomialMatrix MonomialMatrix::identity(std::uint32_t ell, std::size_t d) {
    std::vector<std::uint32_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0u);
    return MonomialMatrix(ell, std::move(perm), std::vector<std::uint32_t>(d, 0));
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.dim() != b.dim() || a.ell() != b.ell()) throw Error(Errc::BadRange, "incompatible monomial matrices");
    const std::size_t d = a.dim();
    std::vector<std::uint32_t> perm(d);
    std::vector<std::uint32_t> exps(d);
    for (std::size_t j = 0; j < d; ++j) {
        const auto mid = b.perm()[j];
        perm[j] = a.perm()[mid];
        exps[j] = (b.exps()[j] + a.exps()[mid]) % a.ell();
    }
    return MonomialMatrix(a.ell(), std::move(perm), std::move(exps));
}

MonomialMatrix MonomialMatrix::pow(std::uint64_t e) const {
    MonomialMatrix result = identity(ell_, dim());
    MonomialMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool MonomialMatrix::is_identity() const {
    for (std::size_t j = 0; j < perm_.size(); ++j)
        if (perm_[j] != j || exps_[j] != 0) return false;
    return true;
}

std::optional<std::uint32_t> MonomialMatrix::scalar_ratio(const MonomialMatrix& other) const {
    if (dim() != other.dim() || ell_ != other.ell_ || perm_ != other.perm_) return std::nullopt;
    if (dim() == 0) return 0u;
    const std::uint32_t c = (exps_[0] + ell_ - other.exps_[0]) % ell_;
    for (std::size_t j = 1; j < dim(); ++j)
        if ((exps_[j] + ell_ - other.exps_[j]) % ell_ != c) return std::nullopt;
    return c;
}

MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.ell() != b.ell()) throw Error(Errc::BadRange, "kron of matrices over different ell");
    const std::size_t db = b.dim();
    std::vector<std::uint32_t> perm(a.dim() * db);
    std::vector<std::uint32_t> exps(a.dim() * db);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < db; ++j) {
            perm[i * db + j] = static_cast<std::uint32_t>(a.perm()[i] * db + b.perm()[j]);
            exps[i * db + j] = (a.exps()[i] + b.exps()[j]) % a.ell();
        }
    return MonomialMatrix(a.ell(), std::move(perm), std::move(exps));
}

std::pair<MonomialMatrix, MonomialMatrix> clock_shift(std::uint32_t ell, long h) {
    if (ell < 2) throw Error(Errc::BadEll, "clock and shift need ell > 1");
    const long hr = ((h % static_cast<long>(ell)) + ell) % ell;
    if (std::gcd(hr, static_cast<long>(ell)) != 1)
        throw Error(Errc::GcdViolation, "gcd(" + std::to_string(h) + ", " + std::to_string(ell) + ") != 1");
    std::vector<std::uint32_t> id(ell);
    std::vector<std::uint32_t> clock_exps(ell);
    std::vector<std::uint32_t> shift(ell);
    for (std::uint32_t j = 0; j < ell; ++j) {
        id[j] = j;
        clock_exps[j] = static_cast<std::uint32_t>((static_cast<u64>(j) * hr) % ell);
        shift[j] = (j + 1) % ell;
    }
    return {MonomialMatrix(ell, id, clock_exps), MonomialMatrix(ell, shift, std::vector<std::uint32_t>(ell, 0))};
}

QASRepresentation qas_representation(const IntMatrix& m, std::uint32_t ell) {
    require_skew(m);
    if (ell < 2) throw Error(Errc::BadEll, "ell must be at least 2");
    QASRepresentation rep;
    rep.ell = ell;
    const SkewNormalForm snf = skew_normal_form(m);
    rep.h = snf.h;
    rep.E = snf.E;
    rep.E_inv = unimodular_inverse(snf.E);
    for (const auto& h : rep.h)
        if (gcd(h, Int(ell)) != 1)
            throw Error(Errc::GcdViolation, "invariant factor " + h.get_str() + " shares a factor with ell");

    const std::size_t s = rep.h.size();
    rep.dimension = 1;
    for (std::size_t k = 0; k < s; ++k) {
        rep.dimension *= ell;
        if (rep.dimension > kMaxDimension) throw Error(Errc::TooLarge, "representation dimension exceeds limit");
    }

    std::vector<std::size_t> before(s, 1);
    for (std::size_t k = 1; k < s; ++k) before[k] = before[k - 1] * ell;
    for (std::size_t k = 0; k < s; ++k) {
        auto [X, Y] = clock_shift(ell, static_cast<long>(mod_ell(rep.h[k], ell)));
        const auto left = MonomialMatrix::identity(ell, before[k]);
        const auto right = MonomialMatrix::identity(ell, rep.dimension / (before[k] * ell));
        rep.x.push_back(kron(kron(left, X), right));
        rep.y.push_back(kron(kron(left, Y), right));
    }

    // T_i = prod_k x_k^{e'_{i,2k-1}} y_k^{e'_{i,2k}}; kernel generators act trivially.
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        MonomialMatrix t = MonomialMatrix::identity(ell, rep.dimension);
        for (std::size_t k = 0; k < s; ++k) {
            t = t * rep.x[k].pow(mod_ell(rep.E_inv(i, 2 * k), ell));
            t = t * rep.y[k].pow(mod_ell(rep.E_inv(i, 2 * k + 1), ell));
        }
        rep.T.push_back(std::move(t));
    }
    return rep;
}

RelationCheck verify_relations(const QASRepresentation& rep, const IntMatrix& m) {
    const std::uint32_t ell = rep.ell;
    auto fail = [](int i, int j, std::string why) { return RelationCheck{false, i, j, std::move(why)}; };

    for (std::size_t k = 0; k < rep.x.size(); ++k) {
        if (!rep.x[k].pow(ell).is_identity() || !rep.y[k].pow(ell).is_identity())
            return fail(static_cast<int>(k) + 1, 0, "clock/shift generator has ell-th power != Id");
        auto c = (rep.x[k] * rep.y[k]).scalar_ratio(rep.y[k] * rep.x[k]);
        if (!c || *c != mod_ell(rep.h[k], ell)) return fail(static_cast<int>(k) + 1, 0, "x y != q^h y x");
    }
    for (std::size_t i = 0; i < rep.T.size(); ++i)
        if (!rep.T[i].pow(ell).is_identity()) return fail(static_cast<int>(i) + 1, 0, "T-image has ell-th power != Id");

    const std::size_t n = rep.T.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const int wi = static_cast<int>(i) + 1;
            const int wj = static_cast<int>(j) + 1;
            auto c = (rep.T[i] * rep.T[j]).scalar_ratio(rep.T[j] * rep.T[i]);
            if (!c) return fail(wi, wj, "T_i T_j and T_j T_i differ beyond a scalar");
            if (*c != mod_ell(m(i, j), ell)) return fail(wi, wj, "commutation exponent differs from m_ij mod ell");

            Int expected = 0;
            for (std::size_t k = 0; k < rep.h.size(); ++k)
                expected += rep.h[k] * (rep.E_inv(i, 2 * k) * rep.E_inv(j, 2 * k + 1) -
                                        rep.E_inv(i, 2 * k + 1) * rep.E_inv(j, 2 * k));
            if (expected != m(i, j)) return fail(wi, wj, "m_ij is not recovered from h and E^-1");
        }
    return {};
}

namespace {

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

u64 primitive_root_of_unity(std::uint32_t ell, u64 p) {
    std::vector<u64> primes;
    for (u64 q = 2, rest = ell; rest > 1; ++q)
        if (rest % q == 0) {
            primes.push_back(q);
            while (rest % q == 0) rest /= q;
        }
    for (u64 g = 2; g < p; ++g) {
        const u64 z = powmod(g, (p - 1) / ell, p);
        bool ok = z != 1 || ell == 1;
        for (u64 q : primes) ok = ok && powmod(z, ell / q, p) != 1;
        if (ok) return z;
    }
    return 1;
}

struct SpanBasis {
    u64 p;
    std::vector<std::vector<u64>> rows;
    std::vector<std::size_t> pivots;

    // Reduces v in place; returns true when something independent remains.
    bool insert(std::vector<u64>& v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const u64 f = v[pivots[r]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < v.size(); ++c)
                if (rows[r][c]) v[c] = (v[c] + p - mulmod(f, rows[r][c], p)) % p;
        }
        std::size_t piv = 0;
        while (piv < v.size() && v[piv] == 0) ++piv;
        if (piv == v.size()) return false;
        const u64 inv = powmod(v[piv], p - 2, p);
        std::vector<u64> row(v.size());
        for (std::size_t c = 0; c < v.size(); ++c) row[c] = mulmod(v[c], inv, p);
        rows.push_back(std::move(row));
        pivots.push_back(piv);
        return true;
    }
};

} // namespace

std::size_t span_dimension(const std::vector<MonomialMatrix>& gens, std::size_t dim, std::uint32_t ell, u64 p,
                           std::size_t bound) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (ell < 1 || (p - 1) % ell != 0)
        throw Error(Errc::NoRootOfUnity, "ell = " + std::to_string(ell) + " does not divide p - 1");
    if (dim * dim > bound) throw Error(Errc::TooLarge, "d^2 = " + std::to_string(dim * dim) + " exceeds bound");
    const u64 zeta = primitive_root_of_unity(ell, p);
    std::vector<u64> zpow(ell);
    for (std::uint32_t e = 0; e < ell; ++e) zpow[e] = powmod(zeta, e, p);

    SpanBasis basis{p, {}, {}};
    std::vector<std::vector<u64>> queue;
    std::vector<u64> id(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1;
    queue.push_back(id);
    basis.insert(id);

    // Left-multiply every new element by every generator until nothing new appears.
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& g : gens) {
            if (g.dim() != dim) throw Error(Errc::BadRange, "generator dimension mismatch");
            std::vector<u64> prod(dim * dim, 0);
            for (std::size_t c = 0; c < dim; ++c) {
                const u64 z = zpow[g.exps()[c]];
                const std::size_t target = g.perm()[c];
                for (std::size_t col = 0; col < dim; ++col)
                    prod[target * dim + col] = mulmod(z, queue[q][c * dim + col], p);
            }
            std::vector<u64> reduced = prod;
            if (basis.insert(reduced)) queue.push_back(std::move(prod));
        }
    }
    return basis.rows.size();
}

bool irreducibility_check(const std::vector<MonomialMatrix>& gens, std::size_t dim, std::uint32_t ell, u64 p,
                          std::size_t bound) {
    return span_dimension(gens, dim, ell, p, bound) == dim * dim;
}

bool irreducibility_check(const QASRepresentation& rep, u64 p, std::size_t bound) {
    return irreducibility_check(rep.T, rep.dimension, rep.ell, p, bound);
}

u64 default_field_prime(std::uint32_t ell) {
    for (u64 p = ell + 1;; p += ell)
        if (is_prime(p)) return p;
}

bool determinantal_rep_dimension_check(int n, int t, std::uint32_t ell) {
    if (ell % 2 == 0) throw Error(Errc::EvenEll, "determinantal representation check needs odd ell");
    const auto rep = qas_representation(matrix_from_diagram(determinantal_diagram(n, t)), ell);
    return Int(static_cast<unsigned long>(rep.dimension)) == pi_degree_determinantal(n, t, ell).value;
}

} // namespace qpi
