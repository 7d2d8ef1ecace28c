#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpi/diagrams.hpp"
#include "qpi/exactlinalg.hpp"
#include "qpi/pipedream.hpp"

namespace qpi {

// value = ell^exponent / divisor, with divisor not divisible by ell.
struct PiDegree {
    std::uint64_t ell = 0;
    std::vector<Int> factors; // ell / gcd(h_i, ell); empty for closed forms
    Int value = 1;
    long exponent = 0;
    Int divisor = 1;
    std::string method = "generic";
    bool hypothesis_met = true;

    bool operator==(const PiDegree&) const = default;
};

// Equal as numbers (ignores how the value was obtained).
inline bool same_value(const PiDegree& a, const PiDegree& b) {
    return a.ell == b.ell && a.value == b.value && a.exponent == b.exponent && a.divisor == b.divisor;
}

inline constexpr const char* kMethodGeneric = "generic";
inline constexpr const char* kMethodClosed = "closed form";
inline constexpr const char* kMethodGenericFallback = "generic (hypothesis not met)";

// Builds ell^a / d in normal form (d reduced by powers of ell).
PiDegree pi_degree_power(std::uint64_t ell, long a, const Int& d, const char* method);

PiDegree pi_degree_from_factors(const std::vector<Int>& h, std::uint64_t ell);
PiDegree pi_degree_qas(const IntMatrix& m, std::uint64_t ell);

PiDegree pi_degree_partition(const Partition& p, std::uint64_t ell);
PiDegree pi_degree_determinantal(int n, int t, std::uint64_t ell);
PiDegree pi_degree_extended_diagram(const Diagram& d, std::uint64_t ell);
PiDegree pi_degree_schubert(const PluckerIndex& g, std::uint64_t ell);
PiDegree pi_degree_grassmannian(int m, int n, std::uint64_t ell);

// Literal transcription of the Grassmannian kernel test, comparing mu2(m)
// with mu2(n); kept for comparison with the rectangle-based test.
bool grassmannian_kernel_trivial_literal(int m, int n);
bool grassmannian_kernel_trivial(int m, int n);

int mu2(std::uint64_t i);
std::uint64_t smallest_prime_factor(std::uint64_t n);

CycleDecomposition determinantal_toric_cycles(int n, int t);

// Data shared by the extended-matrix formulas.
struct ExtendedAnalysis {
    SkewNormalForm base;
    SkewNormalForm ext;
    bool one_perp = true;
    int kernel_delta = 0; // +1 or -1
    Int h_next = 0;       // h_{s+1}(M^E), 0 when absent
};

ExtendedAnalysis analyze_extended(const IntMatrix& m);

// Young-diagram matrix M_lambda for a partition (boxes outside lambda are black).
IntMatrix partition_matrix(const Partition& p);

} // namespace qpi
