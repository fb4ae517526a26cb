#include "deltacalc/qt_ops.hpp"

#include "deltacalc/errors.hpp"
#include "deltacalc/tableaux.hpp"

#include <algorithm>

namespace deltacalc {

namespace {

bool has_partition_content(const std::vector<int>& w, std::vector<int>& mult) {
    int m = 0;
    for (int x : w) {
        if (x <= 0) return false;
        m = std::max(m, x);
    }
    mult.assign(m, 0);
    for (int x : w) ++mult[x - 1];
    for (int j = 1; j < m; ++j)
        if (mult[j] > mult[j - 1]) return false;
    return m == 0 || mult[m - 1] > 0;
}

} // namespace

std::vector<std::vector<int>> standard_subwords(const std::vector<int>& w) {
    std::vector<int> mult;
    if (!has_partition_content(w, mult)) throw NotPartitionContent();
    std::vector<std::vector<int>> out;
    std::vector<int> word = w;
    std::vector<int> pos(word.size());
    while (!word.empty()) {
        int m = *std::max_element(word.begin(), word.end());
        std::vector<int> marks;
        // rightmost 1
        int cur = -1;
        for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i)
            if (word[i] == 1) {
                cur = i;
                break;
            }
        marks.push_back(cur);
        for (int letter = 2; letter <= m; ++letter) {
            int nxt = -1;
            for (int i = cur - 1; i >= 0; --i)
                if (word[i] == letter) {
                    nxt = i;
                    break;
                }
            if (nxt < 0)
                for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i)
                    if (word[i] == letter) {
                        nxt = i;
                        break;
                    }
            marks.push_back(nxt);
            cur = nxt;
        }
        std::sort(marks.begin(), marks.end());
        std::vector<int> sub;
        for (int i : marks) sub.push_back(word[i]);
        out.push_back(sub);
        std::vector<int> rest;
        size_t mi = 0;
        for (size_t i = 0; i < word.size(); ++i) {
            if (mi < marks.size() && static_cast<int>(i) == marks[mi]) {
                ++mi;
            } else {
                rest.push_back(word[i]);
            }
        }
        word = std::move(rest);
    }
    return out;
}

long cocharge_perm(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    std::vector<int> posn(n + 1);
    for (int i = 0; i < n; ++i) posn[v[i]] = i;
    long cc = 0, total = 0;
    for (int i = 1; i < n; ++i) {
        if (posn[i + 1] < posn[i]) ++cc;
        total += cc;
    }
    return total;
}

long cocharge(const std::vector<int>& w) {
    long s = 0;
    for (const auto& sub : standard_subwords(w)) s += cocharge_perm(sub);
    return s;
}

SymFunc hall_littlewood(const Partition& mu) {
    int n = partition_size(mu);
    SymFunc f(n, SfBasis::s);
    for (const auto& lam : partitions_of(n)) {
        QTPoly k;
        for (const auto& t : ssyt_enumerate(lam, mu))
            k += QTPoly::monomial(static_cast<int>(cocharge(reading_word(t))), 0);
        if (!k.is_zero()) f.add(lam, QTRat(k));
    }
    return f;
}

SymFunc hall_littlewood_monomial_sum(const Partition& mu) {
    int n = partition_size(mu);
    SymFunc f(n, SfBasis::m);
    for (const auto& lam : partitions_of(n)) {
        QTPoly k;
        for (const auto& t : ssyt_enumerate(lam, mu))
            k += QTPoly::monomial(static_cast<int>(cocharge(reading_word(t))), 0);
        if (!k.is_zero()) f.add(lam, QTRat(k));
    }
    return f;
}

QTPoly b_mu(const Partition& mu) {
    QTPoly b;
    for (size_t r = 0; r < mu.size(); ++r)
        for (int c = 0; c < mu[r]; ++c) b += QTPoly::monomial(c, static_cast<int>(r));
    return b;
}

std::vector<QTPoly> b_mu_cells(const Partition& mu, bool prime) {
    std::vector<QTPoly> cells;
    for (size_t r = 0; r < mu.size(); ++r)
        for (int c = 0; c < mu[r]; ++c) {
            if (prime && r == 0 && c == 0) continue;
            cells.push_back(QTPoly::monomial(c, static_cast<int>(r)));
        }
    return cells;
}

QTRat multiset_elementary(const std::vector<QTPoly>& vals, int d) {
    if (d < 0 || d > static_cast<int>(vals.size())) return QTRat();
    std::vector<QTPoly> e(d + 1);
    e[0] = QTPoly(Rat(1));
    int seen = 0;
    for (const auto& v : vals) {
        ++seen;
        for (int i = std::min(d, seen); i >= 1; --i) e[i] += e[i - 1] * v;
    }
    return QTRat(e[d]);
}

QTRat multiset_homogeneous(const std::vector<QTPoly>& vals, int d) {
    if (d < 0) return QTRat();
    std::vector<QTPoly> h(d + 1);
    h[0] = QTPoly(Rat(1));
    for (const auto& v : vals)
        for (int i = 1; i <= d; ++i) h[i] += h[i - 1] * v;
    return QTRat(h[d]);
}

// ---------------------------------------------------------------------------
// Macdonald basis via the triangularity + normalization axioms

namespace {

// dense linear solve over Q(q,t): A (rows x N) augmented with rhs; requires a
// unique solution
std::vector<QTRat> solve_unique(std::vector<std::vector<QTRat>> a, std::vector<QTRat> b) {
    size_t rows = a.size();
    if (rows == 0) throw SingularSystem("empty system");
    size_t cols = a[0].size();
    size_t rank = 0;
    std::vector<int> pivot_col;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        QTRat d = a[rank][col];
        for (size_t j = col; j < cols; ++j) a[rank][j] /= d;
        b[rank] /= d;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            QTRat f = a[r][col];
            for (size_t j = col; j < cols; ++j) a[r][j] -= f * a[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    if (rank < cols) throw SingularSystem("underdetermined system");
    for (size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) throw SingularSystem("inconsistent system");
    std::vector<QTRat> x(cols, QTRat());
    for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return x;
}

} // namespace

MacdonaldBasis macdonald_basis(int n) {
    MacdonaldBasis mb;
    mb.n = n;
    auto pars = partitions_of(n);
    int N = static_cast<int>(pars.size());

    // columns: s-expansions of plethystically scaled Schur functions
    std::vector<std::vector<QTRat>> pq(N, std::vector<QTRat>(N, QTRat()));
    std::vector<std::vector<QTRat>> pt(N, std::vector<QTRat>(N, QTRat()));
    for (int j = 0; j < N; ++j) {
        SymFunc sj = SymFunc::single(n, SfBasis::s, pars[j]);
        SymFunc aq = plethystic_scale(sj, pleth_one_minus_q());
        SymFunc at = plethystic_scale(sj, pleth_one_minus_t());
        for (int i = 0; i < N; ++i) {
            pq[i][j] = aq.coeff(pars[i]);
            pt[i][j] = at.coeff(pars[i]);
        }
    }

    for (const auto& mu : pars) {
        Partition muc = conjugate(mu);
        std::vector<std::vector<QTRat>> rows;
        std::vector<QTRat> rhs;
        for (int i = 0; i < N; ++i) {
            if (!dominates(pars[i], mu)) {
                rows.push_back(pq[i]);
                rhs.push_back(QTRat());
            }
            if (!dominates(pars[i], muc)) {
                rows.push_back(pt[i]);
                rhs.push_back(QTRat());
            }
        }
        // normalization <H_mu, s_(n)> = 1
        std::vector<QTRat> norm(N, QTRat());
        norm[0] = QTRat(1); // partitions_of puts (n) first
        rows.push_back(norm);
        rhs.push_back(QTRat(1));

        auto x = solve_unique(std::move(rows), std::move(rhs));
        SymFunc h(n, SfBasis::s);
        for (int i = 0; i < N; ++i) h.add(pars[i], x[i]);
        mb.table.emplace(mu, std::move(h));
    }
    return mb;
}

bool macdonald_axioms_hold(const MacdonaldBasis& mb) {
    auto pars = partitions_of(mb.n);
    Partition row{mb.n};
    for (const auto& [mu, h] : mb.table) {
        if (h.coeff(row) != QTRat(1)) return false;
        SymFunc aq = plethystic_scale(h, pleth_one_minus_q());
        SymFunc at = plethystic_scale(h, pleth_one_minus_t());
        Partition muc = conjugate(mu);
        for (const auto& lam : pars) {
            if (!dominates(lam, mu) && !aq.coeff(lam).is_zero()) return false;
            if (!dominates(lam, muc) && !at.coeff(lam).is_zero()) return false;
        }
    }
    return static_cast<int>(mb.table.size()) == static_cast<int>(pars.size());
}

std::map<Partition, QTRat, RevLexLess> macdonald_expand(const SymFunc& f,
                                                        const MacdonaldBasis& mb) {
    if (f.degree != mb.n) throw DegreeMismatch();
    SymFunc fs = f.basis == SfBasis::s ? f : convert(f, SfBasis::s);
    auto pars = partitions_of(mb.n);
    int N = static_cast<int>(pars.size());
    std::vector<std::vector<QTRat>> a(N, std::vector<QTRat>(N, QTRat()));
    std::vector<QTRat> b(N, QTRat());
    for (int j = 0; j < N; ++j) {
        const SymFunc& h = mb.table.at(pars[j]);
        for (int i = 0; i < N; ++i) a[i][j] = h.coeff(pars[i]);
    }
    for (int i = 0; i < N; ++i) b[i] = fs.coeff(pars[i]);
    auto x = solve_unique(std::move(a), std::move(b));
    std::map<Partition, QTRat, RevLexLess> out;
    for (int j = 0; j < N; ++j)
        if (!x[j].is_zero()) out[pars[j]] = x[j];
    return out;
}

namespace {

SymFunc eigen_apply(const SymFunc& f, const MacdonaldBasis& mb,
                    const std::function<QTRat(const Partition&)>& eigenvalue) {
    auto dec = macdonald_expand(f, mb);
    SymFunc out(f.degree, SfBasis::s);
    for (const auto& [mu, c] : dec) {
        QTRat ev = eigenvalue(mu);
        if (ev.is_zero() || c.is_zero()) continue;
        const SymFunc& h = mb.table.at(mu);
        for (const auto& [lam, hc] : h.coeffs) out.add(lam, c * ev * hc);
    }
    return out;
}

QTRat label_eval(OpLabel label, int d, const std::vector<QTPoly>& cells) {
    return label == OpLabel::e ? multiset_elementary(cells, d) : multiset_homogeneous(cells, d);
}

} // namespace

SymFunc delta_op(OpLabel label, int d, const SymFunc& f, const MacdonaldBasis& mb) {
    return eigen_apply(f, mb, [&](const Partition& mu) {
        return label_eval(label, d, b_mu_cells(mu, false));
    });
}

SymFunc delta_prime_op(OpLabel label, int d, const SymFunc& f, const MacdonaldBasis& mb) {
    return eigen_apply(f, mb, [&](const Partition& mu) {
        return label_eval(label, d, b_mu_cells(mu, true));
    });
}

SymFunc nabla(const SymFunc& f, const MacdonaldBasis& mb) {
    return delta_op(OpLabel::e, f.degree, f, mb);
}

namespace {

QTRat pi_eigenvalue(const Partition& mu) {
    QTPoly prod(Rat(1));
    for (const auto& cell : b_mu_cells(mu, true)) {
        QTPoly f(Rat(1));
        f -= cell;
        prod *= f;
    }
    return QTRat(prod);
}

} // namespace

SymFunc pi_op(const SymFunc& f, const MacdonaldBasis& mb) {
    return eigen_apply(f, mb, pi_eigenvalue);
}

SymFunc pi_inv_op(const SymFunc& f, const MacdonaldBasis& mb) {
    return eigen_apply(f, mb, [](const Partition& mu) { return pi_eigenvalue(mu).inv(); });
}

SymFunc theta_op(OpLabel label, int d, const SymFunc& f, const MacdonaldBasis& mb_f,
                 const MacdonaldBasis& mb_out) {
    if (f.degree + d != mb_out.n) throw DegreeMismatch();
    SymFunc g = pi_inv_op(f, mb_f);
    SymFunc mult = SymFunc::single(d, SfBasis::e, {}, QTRat(1));
    if (d > 0) mult = SymFunc::single(d, label == OpLabel::e ? SfBasis::e : SfBasis::h, {d});
    mult = plethystic_scale(convert(mult, SfBasis::s), pleth_macdonald_kernel());
    SymFunc prod = sf_multiply(mult, g);
    return pi_op(prod, mb_out);
}

} // namespace deltacalc
