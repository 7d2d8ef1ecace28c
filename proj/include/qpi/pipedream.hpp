#pragma once

#include <string>
#include <vector>

#include "qpi/diagrams.hpp"

namespace qpi {

// Bijection of {1..k}. Composition is right-to-left: (a * b)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int k);
    static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& one_line() const { return img_; }

    Permutation inverse() const;

    // Non-trivial cycles only, e.g. "(1,7)(2,6,3,8,4)"; "()" for the identity.
    std::string cycle_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

Permutation operator*(const Permutation& a, const Permutation& b);

// An "odd cycle" is a cycle that is an odd permutation, i.e. of even length.
// Fixed points are even permutations and do not count.
bool is_odd_cycle(const std::vector<int>& cycle);

struct CycleDecomposition {
    std::vector<std::vector<int>> cycles; // each starts at its least label; sorted by that label
    int odd_count = 0;
    bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

enum class Heading { Left, Up };

// Labels on the four sides of an m x n diagram. Pipes enter on the right
// (row i) or bottom (column j) and leave on the left or top.
struct SideLabels {
    std::vector<int> right;  // indexed by row 1..m (slot 0 unused)
    std::vector<int> bottom; // indexed by column 1..n
    std::vector<int> left;
    std::vector<int> top;
};

SideLabels toric_labels(int m, int n);
SideLabels w_labels(int m, int n);

// Walks a pipe that is about to enter cell (row, col) travelling in `heading`
// and returns the exit label. Starting positions outside the grid exit at once.
int trace_pipe(const Diagram& d, const SideLabels& labels, int row, int col, Heading heading);

Permutation pipe_permutation(const Diagram& d, const SideLabels& labels);

Permutation toric_permutation(const Diagram& d);
Permutation w_permutation(const Diagram& d);

PluckerIndex gamma_from_partition(const Partition& p, int m, int n);

Permutation w_lambda(const Partition& p, int m, int n);

// tau_lambda = w0 * w_lambda * w0' with right-to-left composition.
Permutation tau_lambda(const Partition& p, int m, int n);

} // namespace qpi
