#include "qpi/pidegree.hpp"

#include <algorithm>
#include <numeric>

#include "qpi/error.hpp"

namespace qpi {

namespace {

Int to_int(std::uint64_t x) {
    Int z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
    return z;
}

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

void require_ell(std::uint64_t ell, std::uint64_t min_ell) {
    if (ell < min_ell)
        throw Error(Errc::BadEll, "ell = " + std::to_string(ell) + " is below " + std::to_string(min_ell));
}

void require_odd(std::uint64_t ell) {
    require_ell(ell, 3);
    if (ell % 2 == 0) throw Error(Errc::EvenEll, "closed form needs odd ell, got " + std::to_string(ell));
}

} // namespace

PiDegree pi_degree_power(std::uint64_t ell, long a, const Int& d, const char* method) {
    PiDegree out;
    out.ell = ell;
    out.method = method;
    const Int l = to_int(ell);
    Int div = d;
    while (a > 0 && mpz_divisible_p(div.get_mpz_t(), l.get_mpz_t())) {
        div /= l;
        --a;
    }
    if (a < 0) throw Error(Errc::BadRange, "negative exponent in PI degree");
    const Int num = ipow(l, static_cast<unsigned long>(a));
    if (!mpz_divisible_p(num.get_mpz_t(), div.get_mpz_t()))
        throw Error(Errc::InternalVerificationFailed, "PI degree is not an integer");
    out.exponent = a;
    out.divisor = div;
    out.value = num / div;
    return out;
}

PiDegree pi_degree_from_factors(const std::vector<Int>& h, std::uint64_t ell) {
    require_ell(ell, 2);
    const Int l = to_int(ell);
    Int d = 1;
    std::vector<Int> factors;
    for (const auto& x : h) {
        Int g = gcd(x, l);
        factors.push_back(l / g);
        d *= g;
    }
    PiDegree out = pi_degree_power(ell, static_cast<long>(h.size()), d, kMethodGeneric);
    Int prod = 1;
    for (const auto& f : factors) prod *= f;
    if (prod != out.value) throw Error(Errc::InternalVerificationFailed, "factor product disagrees with normal form");
    out.factors = std::move(factors);
    return out;
}

PiDegree pi_degree_qas(const IntMatrix& m, std::uint64_t ell) {
    return pi_degree_from_factors(skew_normal_form(m).h, ell);
}

IntMatrix partition_matrix(const Partition& p) { return matrix_from_diagram(young_diagram(p)); }

PiDegree pi_degree_partition(const Partition& p, std::uint64_t ell) {
    require_odd(ell);
    const int n_white = p.size();
    const int r = cycle_decomposition(tau_lambda(p, p.box_m, p.box_n)).odd_count;
    return pi_degree_power(ell, (n_white - r) / 2, 1, kMethodClosed);
}

PiDegree pi_degree_determinantal(int n, int t, std::uint64_t ell) {
    if (n < 2 || t < 1 || t > n - 1) throw Error(Errc::BadRange, "need 1 <= t <= n-1");
    require_ell(ell, 3);
    const long e = (2L * n * t - 1L * t * t - t) / 2;
    if (ell % 2 == 1) return pi_degree_power(ell, e, 1, kMethodClosed);
    // Even ell: multiply by 2^(-nt + (t^2+t)/2 + n - 1).
    const long k = 1L * n * t - (1L * t * t + t) / 2 - n + 1;
    if (k < 0) throw Error(Errc::InternalVerificationFailed, "negative power of 2 for 1 <= t <= n-1");
    return pi_degree_power(ell, e, ipow(2, static_cast<unsigned long>(k)), kMethodClosed);
}

ExtendedAnalysis analyze_extended(const IntMatrix& m) {
    ExtendedAnalysis a;
    a.base = skew_normal_form(m);
    a.ext = skew_normal_form(extend(m));
    a.one_perp = one_perp(m);
    a.kernel_delta = static_cast<int>(a.ext.kernel_dim) - static_cast<int>(a.base.kernel_dim);
    const std::size_t s = a.base.h.size();
    a.h_next = a.ext.h.size() > s ? a.ext.h[s] : Int(0);
    return a;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) return n;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

PiDegree pi_degree_extended_diagram(const Diagram& d, std::uint64_t ell) {
    require_odd(ell);
    const int n_white = d.white_count();
    const int r = cycle_decomposition(toric_permutation(d)).odd_count;
    const long e = (n_white - r) / 2;
    const ExtendedAnalysis a = analyze_extended(matrix_from_diagram(d));
    if (a.one_perp) return pi_degree_power(ell, e, 1, kMethodClosed);
    const std::uint64_t ell0 = smallest_prime_factor(ell);
    if (ell0 > static_cast<std::uint64_t>(std::min(d.rows(), d.cols())))
        return pi_degree_power(ell, e + 1, 1, kMethodClosed);
    return pi_degree_power(ell, e + 1, gcd(a.h_next, to_int(ell)), kMethodClosed);
}

namespace {

bool schubert_hypothesis(int box_m, int box_n, std::uint64_t ell) {
    const int bound = std::min({box_m, box_n, 2});
    return smallest_prime_factor(ell) > static_cast<std::uint64_t>(bound);
}

PiDegree generic_fallback(const IntMatrix& m, std::uint64_t ell) {
    PiDegree out = pi_degree_qas(extend(m), ell);
    out.method = kMethodGenericFallback;
    out.hypothesis_met = false;
    return out;
}

} // namespace

PiDegree pi_degree_schubert(const PluckerIndex& g, std::uint64_t ell) {
    require_ell(ell, 3);
    const Partition p = partition_from_plucker(g);
    const IntMatrix m = partition_matrix(p);
    if (!schubert_hypothesis(g.m, g.n - g.m, ell)) return generic_fallback(m, ell);
    const int r = cycle_decomposition(tau_lambda(p, p.box_m, p.box_n)).odd_count;
    const long e = (p.size() - r) / 2;
    return pi_degree_power(ell, one_perp(m) ? e : e + 1, 1, kMethodClosed);
}

int mu2(std::uint64_t i) {
    if (i == 0) throw Error(Errc::BadRange, "mu2 needs a positive integer");
    int j = 0;
    while (i % 2 == 0) {
        i /= 2;
        ++j;
    }
    return j;
}

bool grassmannian_kernel_trivial_literal(int m, int n) { return mu2(m) != mu2(n); }

bool grassmannian_kernel_trivial(int m, int n) { return mu2(m) != mu2(n - m); }

PiDegree pi_degree_grassmannian(int m, int n, std::uint64_t ell) {
    if (m < 1 || m >= n) throw Error(Errc::BadRange, "need 1 <= m < n");
    require_ell(ell, 3);
    const Partition rect = make_partition(std::vector<int>(m, n - m), m, n - m);
    if (!schubert_hypothesis(m, n - m, ell)) return generic_fallback(partition_matrix(rect), ell);
    const long area = 1L * m * (n - m);
    if (grassmannian_kernel_trivial(m, n)) return pi_degree_power(ell, area / 2, 1, kMethodClosed);
    return pi_degree_power(ell, (area - std::gcd(m, n)) / 2 + 1, 1, kMethodClosed);
}

CycleDecomposition determinantal_toric_cycles(int n, int t) {
    if (n < 2 || t < 1 || t > n - 1) throw Error(Errc::BadRange, "need 1 <= t <= n-1");
    std::vector<std::vector<int>> cycles;
    if (n - t < t) {
        const int r = n - t;
        for (int i = 1; i <= t; ++i) {
            if (i <= r)
                cycles.push_back({i, i + t, 2 * t + r + i, t + r + i});
            else
                cycles.push_back({i, t + r + i});
        }
    } else if (n - t == t) {
        for (int i = 1; i <= t; ++i) cycles.push_back({i, i + t, i + t + n, i + n});
    } else {
        const int u = n / t;
        const int r = n % t;
        for (int i = 1; i <= t; ++i) {
            const int top = i <= r ? u : u - 1;
            std::vector<int> c;
            for (int k = 0; k <= top; ++k) c.push_back(i + k * t);
            for (int k = top; k >= 0; --k) c.push_back(i + k * t + n);
            cycles.push_back(std::move(c));
        }
    }
    std::vector<bool> covered(static_cast<std::size_t>(2 * n) + 1, false);
    for (const auto& c : cycles)
        for (int x : c) covered[x] = true;
    for (int x = 1; x <= 2 * n; ++x)
        if (!covered[x]) cycles.push_back({x});

    // Same normal form as cycle_decomposition.
    CycleDecomposition out;
    for (auto& c : cycles) {
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        if (is_odd_cycle(c)) ++out.odd_count;
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
    out.cycles = std::move(cycles);
    return out;
}

} // namespace qpi
