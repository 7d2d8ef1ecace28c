#pragma once

#include <cstdint>
#include <vector>

#include "qpi/diagrams.hpp"
#include "qpi/matrix.hpp"

namespace qpi {

// M[i][j] = 1 when white box j lies to the right of box i in the same row or
// below it in the same column, -1 for the mirrored positions, 0 otherwise.
IntMatrix matrix_from_diagram(const Diagram& d);

enum class ExtendOrientation {
    OnesColumn,    // [[M, 1], [-1^T, 0]]
    MinusOnesColumn // [[M, -1], [1^T, 0]]
};

IntMatrix extend(const IntMatrix& m, ExtendOrientation o = ExtendOrientation::OnesColumn);

struct SmithResult {
    std::vector<Int> factors; // d_1 | d_2 | ... | d_rank, all positive
    std::size_t rank = 0;
    std::size_t kernel_dim = 0; // cols - rank
    std::vector<Int> pairs;   // for skew input: every other factor (h_1, ..., h_s)
};

SmithResult smith_invariant_factors(const IntMatrix& m);

struct SkewNormalForm {
    std::vector<Int> h; // h_1 | h_2 | ... | h_s
    std::size_t kernel_dim = 0;
    IntMatrix E;
    IntMatrix S;
};

// Congruence reduction E M E^T = S; the identity is re-checked before return.
SkewNormalForm skew_normal_form(const IntMatrix& m);

// Block form with blocks [[0,h],[-h,0]] followed by zeros.
IntMatrix skew_block_matrix(const std::vector<Int>& h, std::size_t n);

// Exact inverse of a unimodular matrix; throws InternalVerificationFailed otherwise.
IntMatrix unimodular_inverse(const IntMatrix& e);

// Primitive integer vectors spanning the rational kernel.
std::vector<IntVector> kernel_basis_rational(const IntMatrix& m);

bool is_prime(std::uint64_t p);

std::size_t kernel_dim_mod_p(const IntMatrix& m, std::uint64_t p);
std::vector<std::vector<std::uint64_t>> kernel_basis_mod_p(const IntMatrix& m, std::uint64_t p);

bool one_perp(const IntMatrix& m);
bool one_perp_mod_p(const IntMatrix& m, std::uint64_t p);

struct CycleKernelVector {
    std::vector<int> cycle;
    std::vector<int> v; // indexed by side label 1..m+n (slot 0 unused), entries in {-1,0,1}
    IntVector w;        // indexed by white label 1..N (0-based storage)
};

// One kernel vector of M(d) per odd cycle of the toric permutation.
std::vector<CycleKernelVector> kernel_from_cycles(const Diagram& d);

// Coordinate sum of the kernel vector attached to `cycle`, computed from the
// vector itself and from the row/column alternation of the cycle.
Int cycle_sum(const Diagram& d, const std::vector<int>& cycle);

} // namespace qpi
