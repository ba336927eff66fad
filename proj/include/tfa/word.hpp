#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfa {

/// Boundary marker surrounding every two-dimensional word.
inline constexpr char kBorder = '#';

/// A rectangular grid of alphabet symbols with an implicit one-cell frame
/// of '#' around it. Cells are addressed 1-based: the word occupies
/// (1..rows)x(1..cols); row 0, row rows+1, col 0 and col cols+1 are the
/// frame. Anything beyond the frame is out of range.
class Word2D {
public:
    Word2D(std::size_t rows, std::size_t cols, char fill);
    Word2D(std::vector<std::string> lines);

    static Word2D unary(std::size_t rows, std::size_t cols, char symbol = 'a');

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// True for frame coordinates and word cells alike.
    bool in_frame(long row, long col) const {
        return row >= 0 && row <= static_cast<long>(rows_) + 1 &&
               col >= 0 && col <= static_cast<long>(cols_) + 1;
    }

    bool in_word(long row, long col) const {
        return row >= 1 && row <= static_cast<long>(rows_) &&
               col >= 1 && col <= static_cast<long>(cols_);
    }

    /// Symbol at a framed coordinate; '#' on the frame itself.
    /// Throws std::out_of_range beyond the frame.
    char at(long row, long col) const;

    void set(std::size_t row, std::size_t col, char symbol);

    bool operator==(const Word2D& other) const = default;

    /// One line per row, characters contiguous.
    std::string serialize() const;

    /// Parses the word file format; accepts the "unary <rows>x<cols>"
    /// shorthand.
    static Word2D parse(const std::string& text);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::string> cells_;  // cells_[r][c], 0-based internally
};

}  // namespace tfa
