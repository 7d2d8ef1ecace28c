#include "qpi/diagrams.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "qpi/error.hpp"

namespace qpi {

Diagram::Diagram(int m, int n, Cell fill) : m_(m), n_(n) {
    if (m < 0 || n < 0) throw Error(Errc::BadRange, "negative diagram dimension");
    cells_.assign(static_cast<std::size_t>(m) * n, fill);
}

std::size_t Diagram::idx(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > n_)
        throw Error(Errc::BadRange, "cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside diagram");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

int Diagram::white_count() const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), Cell::White));
}

std::string Diagram::to_text(char white, char black) const {
    std::string out;
    for (int i = 1; i <= m_; ++i) {
        for (int j = 1; j <= n_; ++j) out += is_white(i, j) ? white : black;
        out += '\n';
    }
    return out;
}

Diagram diagram_from_text(std::string_view text, char white, char black) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
        pos = nl + 1;
    }
    if (lines.empty()) throw Error(Errc::EmptyInput, "diagram text has no rows");

    const std::size_t width = lines[0].size();
    Diagram d(static_cast<int>(lines.size()), static_cast<int>(width), Cell::Black);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() != width)
            throw Error(Errc::RaggedRows, "row " + std::to_string(i + 1) + " has length " +
                                              std::to_string(lines[i].size()) + ", expected " +
                                              std::to_string(width));
        for (std::size_t j = 0; j < width; ++j) {
            char c = lines[i][j];
            if (c == white)
                d.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, Cell::White);
            else if (c != black)
                throw Error(Errc::UnknownCharacter, std::string("unexpected character '") + c + "' in row " +
                                                        std::to_string(i + 1));
        }
    }
    return d;
}

bool is_cauchon_le(const Diagram& d) {
    for (int i = 1; i <= d.rows(); ++i)
        for (int j = 1; j <= d.cols(); ++j) {
            if (d.is_white(i, j)) continue;
            bool above = true;
            for (int k = 1; k < i && above; ++k) above = !d.is_white(k, j);
            bool left = true;
            for (int k = 1; k < j && left; ++k) left = !d.is_white(i, k);
            if (!above && !left) return false;
        }
    return true;
}

std::vector<Box> white_labels(const Diagram& d) {
    std::vector<Box> out;
    for (int i = 1; i <= d.rows(); ++i)
        for (int j = 1; j <= d.cols(); ++j)
            if (d.is_white(i, j)) out.push_back({i, j});
    return out;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition make_partition(std::vector<int> parts, int box_m, int box_n) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw Error(Errc::BadRange, "partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw Error(Errc::BadRange, "partition parts must be weakly decreasing");
    }
    Partition p;
    p.parts = std::move(parts);
    const int len = static_cast<int>(p.parts.size());
    const int first = p.parts.empty() ? 0 : p.parts[0];
    p.box_m = box_m < 0 ? len : box_m;
    p.box_n = box_n < 0 ? first : box_n;
    if (len > p.box_m || first > p.box_n) throw Error(Errc::ShapeOverflow, "partition does not fit its box");
    return p;
}

std::vector<int> parse_int_list(std::string_view csv) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view tok = csv.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(Errc::BadSpec, "not an integer list: '" + std::string(csv) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

Partition parse_partition(std::string_view csv, int box_m, int box_n) {
    return make_partition(csv.empty() ? std::vector<int>{} : parse_int_list(csv), box_m, box_n);
}

Diagram young_diagram(const Partition& p, const std::set<Box>& black_boxes) {
    Diagram d(p.box_m, p.box_n, Cell::Black);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (int j = 1; j <= p.parts[i]; ++j) d.set(static_cast<int>(i) + 1, j, Cell::White);
    for (const Box& b : black_boxes) {
        const bool inside = b.row >= 1 && b.row <= static_cast<int>(p.parts.size()) && b.col >= 1 &&
                            b.col <= p.parts[b.row - 1];
        if (!inside)
            throw Error(Errc::BoxOutsideShape,
                        "box (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") is outside the shape");
        d.set(b.row, b.col, Cell::Black);
    }
    return d;
}

Diagram determinantal_diagram(int n, int t) {
    if (n < 1 || t < 1 || t > n - 1)
        throw Error(Errc::BadRange, "need 1 <= t <= n-1, got n=" + std::to_string(n) + " t=" + std::to_string(t));
    Diagram d(n, n, Cell::Black);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i >= n - t + 1 || j >= n - t + 1) d.set(i, j, Cell::White);
    return d;
}

PluckerIndex make_plucker(std::vector<int> gamma, int n) {
    const int m = static_cast<int>(gamma.size());
    if (m < 1 || m >= n) throw Error(Errc::BadRange, "need 1 <= m < n for a Pluecker index");
    for (int i = 0; i < m; ++i) {
        if (gamma[i] < 1 || gamma[i] > n) throw Error(Errc::BadRange, "Pluecker entry outside [1, n]");
        if (i > 0 && gamma[i] <= gamma[i - 1]) throw Error(Errc::BadRange, "Pluecker index must be strictly increasing");
    }
    return {std::move(gamma), m, n};
}

Partition partition_from_plucker(const PluckerIndex& g) {
    std::vector<int> parts;
    for (int i = 1; i <= g.m; ++i) parts.push_back(g.n - g.m - (g.gamma[i - 1] - i));
    return make_partition(std::move(parts), g.m, g.n - g.m);
}

} // namespace qpi
