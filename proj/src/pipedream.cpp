#include "qpi/pipedream.hpp"

#include <algorithm>

#include "qpi/error.hpp"

namespace qpi {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
        if (v < 1 || v > size() || seen[v]) throw Error(Errc::BadRange, "not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) img[i] = i + 1;
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    for (const auto& c : cycles)
        for (std::size_t a = 0; a < c.size(); ++a) {
            const int from = c[a];
            if (from < 1 || from > k || used[from]) throw Error(Errc::BadRange, "cycles are not disjoint in 1..k");
            used[from] = true;
            img[from - 1] = c[(a + 1) % c.size()];
        }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

std::string Permutation::cycle_string() const {
    std::string out;
    for (const auto& c : cycle_decomposition(*this).cycles) {
        if (c.size() < 2) continue;
        out += '(';
        for (std::size_t a = 0; a < c.size(); ++a) {
            if (a) out += ',';
            out += std::to_string(c[a]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw Error(Errc::BadRange, "composing permutations of different sizes");
    std::vector<int> img(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) img[i - 1] = a(b(i));
    return Permutation(std::move(img));
}

bool is_odd_cycle(const std::vector<int>& cycle) { return cycle.size() % 2 == 0; }

CycleDecomposition cycle_decomposition(const Permutation& p) {
    CycleDecomposition out;
    std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
    for (int i = 1; i <= p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            c.push_back(j);
        }
        if (is_odd_cycle(c)) ++out.odd_count;
        out.cycles.push_back(std::move(c));
    }
    return out;
}

SideLabels toric_labels(int m, int n) {
    // Opposite sides share labels: rows carry 1..m from the bottom up,
    // columns carry m+1..m+n from left to right.
    SideLabels s;
    s.right.assign(m + 1, 0);
    s.left.assign(m + 1, 0);
    s.bottom.assign(n + 1, 0);
    s.top.assign(n + 1, 0);
    for (int i = 1; i <= m; ++i) s.right[i] = s.left[i] = m + 1 - i;
    for (int j = 1; j <= n; ++j) s.bottom[j] = s.top[j] = m + j;
    return s;
}

SideLabels w_labels(int m, int n) {
    // Entries run from the north-east corner down the right side, then
    // leftwards along the bottom. Exits run leftwards along the top, then
    // down the left side.
    SideLabels s;
    s.right.assign(m + 1, 0);
    s.left.assign(m + 1, 0);
    s.bottom.assign(n + 1, 0);
    s.top.assign(n + 1, 0);
    for (int i = 1; i <= m; ++i) {
        s.right[i] = i;
        s.left[i] = n + i;
    }
    for (int j = 1; j <= n; ++j) {
        s.bottom[j] = m + n + 1 - j;
        s.top[j] = n + 1 - j;
    }
    return s;
}

int trace_pipe(const Diagram& d, const SideLabels& labels, int row, int col, Heading heading) {
    while (row >= 1 && col >= 1) {
        // Crosses keep the heading; hyperbolas turn Left <-> Up.
        if (d.is_white(row, col)) heading = heading == Heading::Left ? Heading::Up : Heading::Left;
        if (heading == Heading::Left)
            --col;
        else
            --row;
    }
    return col < 1 ? labels.left[row] : labels.top[col];
}

Permutation pipe_permutation(const Diagram& d, const SideLabels& labels) {
    const int m = d.rows();
    const int n = d.cols();
    std::vector<int> img(static_cast<std::size_t>(m + n), 0);
    for (int i = 1; i <= m; ++i) img[labels.right[i] - 1] = trace_pipe(d, labels, i, n, Heading::Left);
    for (int j = 1; j <= n; ++j) img[labels.bottom[j] - 1] = trace_pipe(d, labels, m, j, Heading::Up);
    return Permutation(std::move(img));
}

Permutation toric_permutation(const Diagram& d) {
    return pipe_permutation(d, toric_labels(d.rows(), d.cols()));
}

Permutation w_permutation(const Diagram& d) { return pipe_permutation(d, w_labels(d.rows(), d.cols())); }

PluckerIndex gamma_from_partition(const Partition& p, int m, int n) {
    const int len = static_cast<int>(p.parts.size());
    if (m < 1 || m >= n || len > m || (len > 0 && p.parts[0] > n - m))
        throw Error(Errc::ShapeOverflow, "partition does not fit the m x (n-m) rectangle");
    std::vector<int> gamma;
    for (int i = 1; i <= m; ++i) gamma.push_back(i + (n - m) - (i <= len ? p.parts[i - 1] : 0));
    return make_plucker(std::move(gamma), n);
}

Permutation w_lambda(const Partition& p, int m, int n) {
    const int len = static_cast<int>(p.parts.size());
    if (m < 0 || n < 0 || len > m || (len > 0 && p.parts[0] > n))
        throw Error(Errc::ShapeOverflow, "partition does not fit the m x n box");
    std::vector<int> img;
    std::vector<bool> used(static_cast<std::size_t>(m + n) + 1, false);
    for (int i = 1; i <= m; ++i) {
        const int g = i + n - (i <= len ? p.parts[i - 1] : 0);
        img.push_back(g);
        used[g] = true;
    }
    for (int v = 1; v <= m + n; ++v)
        if (!used[v]) img.push_back(v);
    return Permutation(std::move(img));
}

Permutation tau_lambda(const Partition& p, int m, int n) {
    const Permutation w = w_lambda(p, m, n);
    std::vector<int> w0(static_cast<std::size_t>(m + n));
    std::vector<int> w0p(static_cast<std::size_t>(m + n));
    for (int i = 1; i <= m + n; ++i) w0[i - 1] = m + n + 1 - i;
    for (int i = 1; i <= m; ++i) w0p[i - 1] = m + 1 - i;
    for (int i = m + 1; i <= m + n; ++i) w0p[i - 1] = m + n + m + 1 - i;
    return Permutation(std::move(w0)) * w * Permutation(std::move(w0p));
}

} // namespace qpi
