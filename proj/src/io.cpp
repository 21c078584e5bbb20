#include "ldu/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace ldu {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Rat entry_to_rat(const ordered_json& cell, std::size_t i, std::size_t j) {
    try {
        if (cell.is_string()) return parse_rat(cell.get<std::string>());
        if (cell.is_number_integer()) return Rat(Int(cell.get<long long>()));
    } catch (const ParseError& e) {
        throw ParseError(e.what(), i + 1, j + 1);
    }
    throw ParseError("matrix entry must be a string or integer", i + 1, j + 1);
}

MatrixValue from_rat_grid(std::size_t rows, std::size_t cols,
                          const std::vector<std::vector<Rat>>& grid) {
    bool integral = true;
    for (const auto& row : grid)
        for (const Rat& v : row)
            if (!v.is_integer()) integral = false;
    if (integral) {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = grid[i][j].num();
        return m;
    }
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = grid[i][j];
    return m;
}

MatrixValue parse_matrix_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw ParseError("matrix JSON needs rows, cols, entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("entries must hold one array per row");
    std::vector<std::vector<Rat>> grid(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries.at(i);
        if (!row.is_array() || row.size() != cols)
            throw ParseError("row " + std::to_string(i + 1) + " must hold " +
                             std::to_string(cols) + " entries");
        grid[i].reserve(cols);
        for (std::size_t jj = 0; jj < cols; ++jj)
            grid[i].push_back(entry_to_rat(row.at(jj), i, jj));
    }
    return from_rat_grid(rows, cols, grid);
}

MatrixValue parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<Rat>> grid;
    std::istringstream in(text);
    std::string line;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        if (trimmed(line).empty()) continue;
        std::vector<Rat> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            std::string v = trimmed(cell);
            std::size_t r = grid.size() + 1, c = row.size() + 1;
            if (v.find('/') != std::string::npos)
                throw MixedKind("CSV matrices are over the ring; fraction at (" +
                                std::to_string(r) + "," + std::to_string(c) + ")");
            try {
                row.push_back(Rat(parse_int(v)));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), r, c);
            }
        }
        if (width == 0)
            width = row.size();
        else if (row.size() != width)
            throw ParseError("CSV row " + std::to_string(grid.size() + 1) +
                             " has a different width");
        grid.push_back(std::move(row));
    }
    if (grid.empty()) throw ParseError("empty matrix file");
    return from_rat_grid(grid.size(), width, grid);
}

template <typename T>
ordered_json matrix_json(const Matrix<T>& m) {
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        entries.push_back(std::move(row));
    }
    return ordered_json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ordered_json wperm_json(const WeightedPermMatrix& d) {
    ordered_json pivots = ordered_json::array();
    for (const auto& p : d.pivots())
        pivots.push_back(
            ordered_json{{"row", p.row + 1}, {"col", p.col + 1}, {"w", p.w.str()}});
    return ordered_json{{"n", d.size()}, {"pivots", pivots}};
}

WeightedPermMatrix wperm_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("pivots"))
        throw ParseError("pivot list JSON needs n and pivots");
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<WeightedPermMatrix::Pivot> pivots;
    for (const auto& p : j.at("pivots")) {
        std::size_t row = p.at("row").get<std::size_t>();
        std::size_t col = p.at("col").get<std::size_t>();
        if (row == 0 || col == 0) throw ParseError("pivot indices are 1-based");
        pivots.push_back({row - 1, col - 1, parse_rat(p.at("w").get<std::string>())});
    }
    return WeightedPermMatrix(n, std::move(pivots));
}

IntMatrix ring_matrix_from_json(const ordered_json& j, const std::string& name) {
    MatrixValue v = parse_matrix_json(j);
    if (std::holds_alternative<IntMatrix>(v)) return std::get<IntMatrix>(v);
    throw MixedKind("factor " + name + " must be over the ring");
}

template <typename T>
std::string format_impl(const Matrix<T>& m) {
    std::vector<std::string> cells(m.rows() * m.cols());
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string s = m(i, j).str();
            width[j] = std::max(width[j], s.size());
            cells[i * m.cols() + j] = std::move(s);
        }
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string& s = cells[i * m.cols() + j];
            out << std::string(width[j] - s.size(), ' ') << s;
            out << (j + 1 < m.cols() ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace

MatrixValue parse_matrix_text(const std::string& text) {
    std::string t = trimmed(text);
    if (t.empty()) throw ParseError("empty matrix file");
    if (t.front() == '{') {
        ordered_json j;
        try {
            j = ordered_json::parse(t);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return parse_matrix_json(j);
    }
    return parse_matrix_csv(text);
}

MatrixValue parse_matrix_file(const std::string& path) {
    return parse_matrix_text(read_file(path));
}

IntMatrix require_ring(const MatrixValue& m) {
    if (std::holds_alternative<IntMatrix>(m)) return std::get<IntMatrix>(m);
    throw MixedKind("a ring matrix is required but fractional entries were given");
}

std::string matrix_to_json(const IntMatrix& m) { return matrix_json(m).dump(2) + "\n"; }
std::string matrix_to_json(const RatMatrix& m) { return matrix_json(m).dump(2) + "\n"; }

std::string bundle_to_json(const LduFactorization& f) {
    ordered_json pivots = ordered_json::array();
    for (const PivotInfo& p : f.pivots)
        pivots.push_back(ordered_json{
            {"row", p.row + 1}, {"col", p.col + 1}, {"det", p.det.str()}});
    ordered_json j{{"alpha", f.alpha.str()},
                   {"alpha_r", f.alpha_r.str()},
                   {"L", matrix_json(f.L)},
                   {"U", matrix_json(f.U)},
                   {"M", matrix_json(f.M)},
                   {"W", matrix_json(f.W)},
                   {"D", wperm_json(f.D)},
                   {"Dhat", wperm_json(f.Dhat)},
                   {"pivots", pivots},
                   {"original_shape", {f.original_rows, f.original_cols}}};
    return j.dump(2) + "\n";
}

LduFactorization bundle_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        LduFactorization f;
        f.alpha = parse_int(j.at("alpha").get<std::string>());
        f.alpha_r = parse_int(j.at("alpha_r").get<std::string>());
        f.L = ring_matrix_from_json(j.at("L"), "L");
        f.U = ring_matrix_from_json(j.at("U"), "U");
        f.M = ring_matrix_from_json(j.at("M"), "M");
        f.W = ring_matrix_from_json(j.at("W"), "W");
        f.D = wperm_from_json(j.at("D"));
        f.Dhat = wperm_from_json(j.at("Dhat"));
        for (const auto& p : j.at("pivots")) {
            std::size_t row = p.at("row").get<std::size_t>();
            std::size_t col = p.at("col").get<std::size_t>();
            if (row == 0 || col == 0) throw ParseError("pivot indices are 1-based");
            f.pivots.push_back({row - 1, col - 1, parse_int(p.at("det").get<std::string>())});
        }
        f.original_rows = j.at("original_shape").at(0).get<std::size_t>();
        f.original_cols = j.at("original_shape").at(1).get<std::size_t>();
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad factorization bundle: ") + e.what());
    }
}

LduFactorization bundle_from_file(const std::string& path) {
    return bundle_from_json(read_file(path));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
    if (!out) throw Error("failed writing '" + path + "'");
}

std::string format_matrix(const IntMatrix& m) { return format_impl(m); }
std::string format_matrix(const RatMatrix& m) { return format_impl(m); }

}  // namespace ldu
