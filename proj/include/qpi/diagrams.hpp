#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qpi {

enum class Cell : unsigned char { Black, White };

// A box position, 1-based: row from the top, column from the left.
struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

class Diagram {
public:
    Diagram() = default;
    Diagram(int m, int n, Cell fill = Cell::White);

    int rows() const { return m_; }
    int cols() const { return n_; }

    Cell at(int i, int j) const { return cells_[idx(i, j)]; }
    bool is_white(int i, int j) const { return at(i, j) == Cell::White; }
    void set(int i, int j, Cell c) { cells_[idx(i, j)] = c; }

    int white_count() const;
    std::string to_text(char white = '.', char black = '#') const;

    bool operator==(const Diagram&) const = default;

private:
    std::size_t idx(int i, int j) const;

    int m_ = 0;
    int n_ = 0;
    std::vector<Cell> cells_;
};

Diagram diagram_from_text(std::string_view text, char white = '.', char black = '#');

bool is_cauchon_le(const Diagram& d);

// White boxes in row-major order; label k sits at element k-1.
std::vector<Box> white_labels(const Diagram& d);

// Weakly decreasing positive parts inside a box_m x box_n rectangle.
struct Partition {
    std::vector<int> parts;
    int box_m = 0;
    int box_n = 0;

    int size() const;
    bool operator==(const Partition&) const = default;
};

// Strips trailing zeros and validates; a box dimension of -1 means "tight".
Partition make_partition(std::vector<int> parts, int box_m = -1, int box_n = -1);
Partition parse_partition(std::string_view csv, int box_m = -1, int box_n = -1);

Diagram young_diagram(const Partition& p, const std::set<Box>& black_boxes = {});

Diagram determinantal_diagram(int n, int t);

struct PluckerIndex {
    std::vector<int> gamma;
    int m = 0;
    int n = 0;
    bool operator==(const PluckerIndex&) const = default;
};

PluckerIndex make_plucker(std::vector<int> gamma, int n);

Partition partition_from_plucker(const PluckerIndex& g);

std::vector<int> parse_int_list(std::string_view csv);

} // namespace qpi
