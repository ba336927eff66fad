#include "tfa/word.hpp"

#include <sstream>

namespace tfa {

Word2D::Word2D(std::size_t rows, std::size_t cols, char fill)
    : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("Word2D dimensions must be positive");
    }
    cells_.assign(rows, std::string(cols, fill));
}

Word2D::Word2D(std::vector<std::string> lines) {
    if (lines.empty()) {
        throw std::invalid_argument("Word2D needs at least one row");
    }
    rows_ = lines.size();
    cols_ = lines.front().size();
    if (cols_ == 0) {
        throw std::invalid_argument("Word2D rows must be non-empty");
    }
    for (const auto& line : lines) {
        if (line.size() != cols_) {
            throw std::invalid_argument("Word2D rows must have equal length");
        }
        if (line.find(kBorder) != std::string::npos) {
            throw std::invalid_argument("'#' is reserved for the frame");
        }
    }
    cells_ = std::move(lines);
}

Word2D Word2D::unary(std::size_t rows, std::size_t cols, char symbol) {
    return Word2D(rows, cols, symbol);
}

char Word2D::at(long row, long col) const {
    if (!in_frame(row, col)) {
        throw std::out_of_range("coordinate outside the framed grid");
    }
    if (!in_word(row, col)) {
        return kBorder;
    }
    return cells_[static_cast<std::size_t>(row) - 1]
                 [static_cast<std::size_t>(col) - 1];
}

void Word2D::set(std::size_t row, std::size_t col, char symbol) {
    if (!in_word(static_cast<long>(row), static_cast<long>(col))) {
        throw std::out_of_range("set() addresses word cells only");
    }
    cells_[row - 1][col - 1] = symbol;
}

std::string Word2D::serialize() const {
    std::string out;
    for (const auto& line : cells_) {
        out += line;
        out += '\n';
    }
    return out;
}

Word2D Word2D::parse(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
    }
    if (lines.size() == 1 && lines[0].rfind("unary ", 0) == 0) {
        std::istringstream spec(lines[0].substr(6));
        std::size_t rows = 0, cols = 0;
        char x = 0;
        if (spec >> rows && spec >> x && x == 'x' && spec >> cols) {
            return unary(rows, cols);
        }
        throw std::invalid_argument("bad unary shorthand: " + lines[0]);
    }
    return Word2D(std::move(lines));
}

}  // namespace tfa
