#include "sln/linalg.hpp"

#include <map>
#include <set>

namespace sln {

namespace {

// In-place reduction to row echelon form; returns pivot column per row.
std::vector<int> echelon(RationalMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = Rational(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

int rank(RationalMatrix a) { return static_cast<int>(echelon(a).size()); }

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = echelon(a);
    // Inconsistent iff some pivot lands in the augmented column.
    for (int p : pivots)
        if (static_cast<size_t>(p) == cols) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

bool in_column_span(const RationalMatrix& a, const std::vector<Rational>& b) {
    return solve(a, b).has_value();
}

int RadicalCoordinates::add_column(const std::vector<RadicalScalar>& column) {
    std::vector<std::pair<Key, Rational>> entries;
    for (size_t slot = 0; slot < column.size(); ++slot) {
        for (const auto& [rad, g] : column[slot].terms()) {
            if (!g.re.is_zero()) entries.push_back({{slot, rad, false}, g.re});
            if (!g.im.is_zero()) entries.push_back({{slot, rad, true}, g.im});
        }
    }
    columns_.push_back(std::move(entries));
    return static_cast<int>(columns_.size()) - 1;
}

RationalMatrix RadicalCoordinates::matrix() const {
    std::set<Key> keys;
    for (const auto& col : columns_)
        for (const auto& [k, v] : col) keys.insert(k);
    std::map<Key, size_t> row_of;
    size_t idx = 0;
    for (const auto& k : keys) row_of[k] = idx++;
    RationalMatrix m(keys.size(), std::vector<Rational>(columns_.size(), Rational(0)));
    for (size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [k, v] : columns_[c]) m[row_of.at(k)][c] = v;
    return m;
}

} // namespace sln
