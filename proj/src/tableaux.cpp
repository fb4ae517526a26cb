#include "deltacalc/tableaux.hpp"

#include <algorithm>

namespace deltacalc {

namespace {

// fill cells in column-reading order (column by column? no: row by row, cell by
// cell) with values 1..m respecting SSYT constraints and a content budget
void ssyt_rec(const Partition& shape, std::vector<int>& budget, Tableau& t, int r, int c,
              std::vector<Tableau>& out) {
    int rows = static_cast<int>(shape.size());
    if (r == rows) {
        out.push_back(t);
        return;
    }
    int nr = r, nc = c + 1;
    if (nc >= shape[r]) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);      // weak increase along rows
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);  // strict increase down columns
    int m = static_cast<int>(budget.size());
    for (int v = lo; v <= m; ++v) {
        if (budget[v - 1] == 0) continue;
        --budget[v - 1];
        t[r][c] = v;
        ssyt_rec(shape, budget, t, nr, nc, out);
        ++budget[v - 1];
    }
}

} // namespace

std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content) {
    std::vector<Tableau> out;
    if (partition_size(shape) != partition_size(content)) return out;
    if (shape.empty()) {
        out.push_back({});
        return out;
    }
    Tableau t(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) t[i].assign(shape[i], 0);
    std::vector<int> budget(content.begin(), content.end());
    ssyt_rec(shape, budget, t, 0, 0, out);
    return out;
}

std::vector<Tableau> syt_enumerate(const Partition& shape) {
    Partition content(partition_size(shape), 1);
    return ssyt_enumerate(shape, content);
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        for (int v : *it) w.push_back(v);
    return w;
}

int syt_des(const Tableau& t) {
    int n = 0;
    for (const auto& row : t) n += static_cast<int>(row.size());
    std::vector<int> row_of(n + 2, 0);
    for (size_t r = 0; r < t.size(); ++r)
        for (int v : t[r]) row_of[v] = static_cast<int>(r);
    int d = 0;
    for (int i = 1; i < n; ++i)
        if (row_of[i] < row_of[i + 1]) ++d;
    return d;
}

long syt_maj(const Tableau& t) {
    int n = 0;
    for (const auto& row : t) n += static_cast<int>(row.size());
    std::vector<int> row_of(n + 2, 0);
    for (size_t r = 0; r < t.size(); ++r)
        for (int v : t[r]) row_of[v] = static_cast<int>(r);
    long m = 0;
    for (int i = 1; i < n; ++i)
        if (row_of[i] < row_of[i + 1]) m += i;
    return m;
}

bool is_ssyt(const Tableau& t) {
    for (size_t r = 0; r < t.size(); ++r) {
        for (size_t c = 0; c < t[r].size(); ++c) {
            if (c > 0 && t[r][c] < t[r][c - 1]) return false;
            if (r > 0) {
                if (c >= t[r - 1].size()) return false;
                if (t[r][c] <= t[r - 1][c]) return false;
            }
        }
        if (r > 0 && t[r].size() > t[r - 1].size()) return false;
    }
    return true;
}

bool is_syt(const Tableau& t) {
    if (!is_ssyt(t)) return false;
    std::vector<int> seen;
    for (const auto& row : t)
        for (int v : row) seen.push_back(v);
    std::sort(seen.begin(), seen.end());
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != static_cast<int>(i) + 1) return false;
    return true;
}

} // namespace deltacalc
