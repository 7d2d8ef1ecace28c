#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpi/matrix.hpp"

namespace qpi {

// Generalized permutation matrix with entry q^exp[j] at (perm[j], j),
// q a primitive ell-th root of unity. Indices are 0-based.
class MonomialMatrix {
public:
    MonomialMatrix() = default;
    MonomialMatrix(std::uint32_t ell, std::vector<std::uint32_t> perm, std::vector<std::uint32_t> exps);

    static MonomialMatrix identity(std::uint32_t ell, std::size_t d);

    std::uint32_t ell() const { return ell_; }
    std::size_t dim() const { return perm_.size(); }
    const std::vector<std::uint32_t>& perm() const { return perm_; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }

    MonomialMatrix pow(std::uint64_t e) const;
    bool is_identity() const;

    // c with *this = q^c * other, if the two differ by a global scalar.
    std::optional<std::uint32_t> scalar_ratio(const MonomialMatrix& other) const;

    bool operator==(const MonomialMatrix&) const = default;

private:
    std::uint32_t ell_ = 1;
    std::vector<std::uint32_t> perm_;
    std::vector<std::uint32_t> exps_;
};

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b);

// Clock X = diag(q^{(j-1)h}) and cyclic shift Y: e_j -> e_{j+1}; X Y = q^h Y X.
std::pair<MonomialMatrix, MonomialMatrix> clock_shift(std::uint32_t ell, long h);

struct QASRepresentation {
    std::uint32_t ell = 0;
    std::vector<Int> h;
    std::size_t dimension = 1;
    std::vector<MonomialMatrix> x; // one per invariant-factor pair
    std::vector<MonomialMatrix> y;
    std::vector<MonomialMatrix> T; // images of the N generators
    IntMatrix E;
    IntMatrix E_inv;
};

QASRepresentation qas_representation(const IntMatrix& m, std::uint32_t ell);

struct RelationCheck {
    bool ok = true;
    int i = 0; // 1-based witness pair when !ok
    int j = 0;
    std::string reason;
};

RelationCheck verify_relations(const QASRepresentation& rep, const IntMatrix& m);

inline constexpr std::size_t kDefaultSpanBound = 10000;

// Dimension over F_p of the algebra generated by the matrices.
std::size_t span_dimension(const std::vector<MonomialMatrix>& gens, std::size_t dim, std::uint32_t ell,
                           std::uint64_t p, std::size_t bound = kDefaultSpanBound);

bool irreducibility_check(const std::vector<MonomialMatrix>& gens, std::size_t dim, std::uint32_t ell,
                          std::uint64_t p, std::size_t bound = kDefaultSpanBound);
bool irreducibility_check(const QASRepresentation& rep, std::uint64_t p, std::size_t bound = kDefaultSpanBound);

// Smallest prime p with ell | p - 1.
std::uint64_t default_field_prime(std::uint32_t ell);

bool determinantal_rep_dimension_check(int n, int t, std::uint32_t ell);

} // namespace qpi
