#include "deltacalc/schubert.hpp"

#include "deltacalc/coinvariant.hpp"
#include "deltacalc/errors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

namespace deltacalc {

int PatternMatrix::star_count() const {
    int s = 0;
    for (const auto& row : grid)
        for (PMCell c : row)
            if (c == PMCell::star) ++s;
    return s;
}

std::string PatternMatrix::ascii() const {
    std::ostringstream os;
    for (const auto& row : grid) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << (row[j] == PMCell::zero ? '0' : row[j] == PMCell::one ? '1' : '*');
        }
        os << '\n';
    }
    return os.str();
}

PatternMatrix pattern_matrix(const std::vector<int>& w, int k) {
    int n = static_cast<int>(w.size());
    PatternMatrix pm;
    pm.word = w;
    pm.k = k;
    pm.grid.assign(k, std::vector<PMCell>(n, PMCell::zero));
    std::map<int, int> init_col; // letter -> its first column (1-based)
    for (int j = 0; j < n; ++j) {
        int r = w[j];
        if (r < 1 || r > k) throw BadParams("pattern_matrix: letter out of range");
        pm.grid[r - 1][j] = PMCell::one;
        if (!init_col.count(r)) {
            // initial column: stars at rows already pivotal and north of r
            for (const auto& [letter, col] : init_col)
                if (letter < r) pm.grid[letter - 1][j] = PMCell::star;
            init_col[r] = j + 1;
        } else {
            // repeat column: stars at rows pivotal before the letter's own
            // initial column
            int jr = init_col[r];
            for (const auto& [letter, col] : init_col)
                if (col < jr && letter != r) pm.grid[letter - 1][j] = PMCell::star;
        }
    }
    return pm;
}

int dim_stat(const std::vector<int>& w, int k) { return pattern_matrix(w, k).star_count(); }

// ---------------------------------------------------------------------------

SmallField::SmallField(int q) : q_(q) {
    struct GF {
        int p, e;
        std::vector<int> modpoly; // coefficients of the reduction polynomial
    };
    GF gf;
    switch (q) {
        case 2: gf = {2, 1, {}}; break;
        case 3: gf = {3, 1, {}}; break;
        case 5: gf = {5, 1, {}}; break;
        case 7: gf = {7, 1, {}}; break;
        case 4: gf = {2, 2, {1, 1}}; break;    // x^2 = x + 1
        case 8: gf = {2, 3, {1, 1, 0}}; break; // x^3 = x + 1
        case 9: gf = {3, 2, {2, 0}}; break;    // x^2 = 2  (x^2 + 1 irreducible)
        default: throw BadParams("SmallField: q must be a prime power <= 9");
    }
    auto digits = [&](int a) {
        std::vector<int> d(gf.e);
        for (int i = 0; i < gf.e; ++i) {
            d[i] = a % gf.p;
            a /= gf.p;
        }
        return d;
    };
    auto undigits = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = gf.e - 1; i >= 0; --i) a = a * gf.p + d[i];
        return a;
    };
    add_.assign(q, std::vector<int>(q));
    mul_.assign(q, std::vector<int>(q));
    neg_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        auto da = digits(a);
        std::vector<int> nd(gf.e);
        for (int i = 0; i < gf.e; ++i) nd[i] = (gf.p - da[i]) % gf.p;
        neg_[a] = undigits(nd);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<int> sum(gf.e);
            for (int i = 0; i < gf.e; ++i) sum[i] = (da[i] + db[i]) % gf.p;
            add_[a][b] = undigits(sum);
            // polynomial multiplication with reduction
            std::vector<int> prod(2 * gf.e - 1, 0);
            for (int i = 0; i < gf.e; ++i)
                for (int j = 0; j < gf.e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % gf.p;
            for (int d = 2 * gf.e - 2; d >= gf.e; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < gf.e; ++i)
                    prod[d - gf.e + i] = (prod[d - gf.e + i] + c * gf.modpoly[i]) % gf.p;
            }
            std::vector<int> red(prod.begin(), prod.begin() + gf.e);
            mul_[a][b] = undigits(red);
        }
    }
}

int SmallField::inv(int a) const {
    if (a == 0) throw ZeroDenominator("GF inverse of zero");
    for (int b = 1; b < q_; ++b)
        if (mul_[a][b] == 1) return b;
    throw error("GF inverse not found");
}

// ---------------------------------------------------------------------------
// echelon decomposition, generic over the scalar field

namespace {

template <typename E, typename Ops>
struct EchelonGeneric {
    std::vector<std::vector<E>> u, ops_matrix, b;
    std::vector<E> t;
    std::vector<int> word;
};

template <typename E, typename Ops>
EchelonGeneric<E, Ops> echelon_impl(const Ops& ops, std::vector<std::vector<E>> m) {
    int k = static_cast<int>(m.size());
    int n = k ? static_cast<int>(m[0].size()) : 0;
    std::vector<std::vector<E>> L(k, std::vector<E>(k, ops.zero()));
    for (int i = 0; i < k; ++i) L[i][i] = ops.one();

    std::vector<int> pivot_order(k, -1); // row -> sequence number, -1 if not pivotal
    int npiv = 0;
    std::vector<int> word(n, 0);
    for (int j = 0; j < n; ++j) {
        int r = -1;
        for (int i = 0; i < k; ++i) {
            if (pivot_order[i] < 0 && !ops.is_zero(m[i][j])) {
                r = i;
                break;
            }
        }
        if (r >= 0) {
            word[j] = r + 1;
            pivot_order[r] = npiv++;
            for (int i = r + 1; i < k; ++i) {
                if (ops.is_zero(m[i][j])) continue;
                E c = ops.mul(m[i][j], ops.inv(m[r][j]));
                for (int col = 0; col < n; ++col)
                    m[i][col] = ops.sub(m[i][col], ops.mul(c, m[r][col]));
                for (int col = 0; col < k; ++col)
                    L[i][col] = ops.sub(L[i][col], ops.mul(c, L[r][col]));
            }
        } else {
            // all nonzero entries sit in pivotal rows; the letter is the most
            // recently pivotal row in the support
            int best = -1, best_order = -1;
            for (int i = 0; i < k; ++i) {
                if (ops.is_zero(m[i][j])) continue;
                if (pivot_order[i] > best_order) {
                    best_order = pivot_order[i];
                    best = i;
                }
            }
            if (best < 0) throw ZeroColumn("column " + std::to_string(j + 1) + " is zero");
            word[j] = best + 1;
        }
    }

    EchelonGeneric<E, Ops> res;
    res.word = word;
    res.t.resize(n);
    res.b.assign(k, std::vector<E>(n, ops.zero()));
    for (int j = 0; j < n; ++j) {
        res.t[j] = m[word[j] - 1][j];
        E ti = ops.inv(res.t[j]);
        for (int i = 0; i < k; ++i) res.b[i][j] = ops.mul(m[i][j], ti);
    }
    res.ops_matrix = L;
    // u = L^{-1}, lower unitriangular
    std::vector<std::vector<E>> u(k, std::vector<E>(k, ops.zero()));
    for (int i = 0; i < k; ++i) u[i][i] = ops.one();
    for (int col = 0; col < k; ++col) {
        // solve L * u_col = e_col by forward substitution
        for (int i = col + 1; i < k; ++i) {
            E s = ops.zero();
            for (int j = 0; j < i; ++j) s = ops.add(s, ops.mul(L[i][j], u[j][col]));
            u[i][col] = ops.sub(ops.zero(), s);
        }
    }
    res.u = u;
    return res;
}

struct RatOps {
    using E = Rat;
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    bool is_zero(const Rat& a) const { return a == 0; }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat inv(const Rat& a) const {
        if (a == 0) throw ZeroDenominator();
        return Rat(1) / a;
    }
};

struct FqOps {
    const SmallField* f;
    using E = int;
    int zero() const { return 0; }
    int one() const { return 1; }
    bool is_zero(int a) const { return a == 0; }
    int add(int a, int b) const { return f->add(a, b); }
    int sub(int a, int b) const { return f->sub(a, b); }
    int mul(int a, int b) const { return f->mul(a, b); }
    int inv(int a) const { return f->inv(a); }
};

} // namespace

EchelonRat echelon_decompose(const std::vector<std::vector<Rat>>& a) {
    auto r = echelon_impl<Rat, RatOps>(RatOps{}, a);
    EchelonRat out;
    out.u = std::move(r.u);
    out.ops_matrix = std::move(r.ops_matrix);
    out.b = std::move(r.b);
    out.t = std::move(r.t);
    out.word = std::move(r.word);
    return out;
}

EchelonFq echelon_decompose_fq(const SmallField& f, const std::vector<std::vector<int>>& a) {
    auto r = echelon_impl<int, FqOps>(FqOps{&f}, a);
    EchelonFq out;
    out.u = std::move(r.u);
    out.ops_matrix = std::move(r.ops_matrix);
    out.b = std::move(r.b);
    out.t = std::move(r.t);
    out.word = std::move(r.word);
    return out;
}

// ---------------------------------------------------------------------------

Int count_spanning_fq(int n, int k, int q, long budget) {
    SmallField f(q);
    // lines: normalized vectors with first nonzero coordinate = 1
    std::vector<std::vector<int>> lines;
    std::vector<int> v(k, 0);
    std::function<void(int, bool)> rec = [&](int i, bool lead) {
        if (i == k) {
            if (lead) lines.push_back(v);
            return;
        }
        if (!lead) {
            v[i] = 0;
            rec(i + 1, false);
            v[i] = 1;
            rec(i + 1, true);
        } else {
            for (int x = 0; x < q; ++x) {
                v[i] = x;
                rec(i + 1, true);
            }
        }
    };
    rec(0, false);
    double total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<double>(lines.size());
    if (total > static_cast<double>(budget)) throw BudgetExceeded();

    Int count = 0;
    std::vector<int> idx(n, 0);
    std::vector<std::vector<int>> rows;
    auto rank = [&]() {
        // Gaussian elimination over GF(q) on an n x k matrix
        rows.assign(n, {});
        for (int i = 0; i < n; ++i) rows[i] = lines[idx[i]];
        int rk = 0;
        for (int col = 0; col < k && rk < n; ++col) {
            int piv = -1;
            for (int r = rk; r < n; ++r)
                if (rows[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[piv], rows[rk]);
            int inv = f.inv(rows[rk][col]);
            for (int c = 0; c < k; ++c) rows[rk][c] = f.mul(rows[rk][c], inv);
            for (int r = 0; r < n; ++r) {
                if (r == rk || rows[r][col] == 0) continue;
                int c0 = rows[r][col];
                for (int c = 0; c < k; ++c)
                    rows[r][c] = f.sub(rows[r][c], f.mul(c0, rows[rk][c]));
            }
            ++rk;
        }
        return rk;
    };
    while (true) {
        if (rank() == k) ++count;
        int i = n - 1;
        while (i >= 0 && idx[i] + 1 == static_cast<int>(lines.size())) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++idx[i];
    }
    return count;
}

Int spanning_formula(int n, int k, int q) {
    QTPoly f = q_factorial(k) * q_stirling(n, k);
    Rat val(0);
    Rat qq(q);
    for (const auto& [e, c] : f.terms()) {
        Rat p(1);
        for (int i = 0; i < e.first; ++i) p *= qq;
        val += c * p;
    }
    Rat lead(1);
    for (int i = 0; i < k * (k - 1) / 2; ++i) lead *= qq;
    val *= lead;
    return Int(val.get_num());
}

// ---------------------------------------------------------------------------

std::vector<int> conv_word(const std::vector<int>& w) {
    std::vector<int> order; // letters by first appearance
    for (int x : w)
        if (std::find(order.begin(), order.end(), x) == order.end()) order.push_back(x);
    std::vector<int> out;
    for (int letter : order)
        for (int x : w)
            if (x == letter) out.push_back(letter);
    return out;
}

std::vector<int> sort_perm(const std::vector<int>& w) {
    std::vector<int> order;
    for (int x : w)
        if (std::find(order.begin(), order.end(), x) == order.end()) order.push_back(x);
    std::vector<int> u;
    for (int letter : order)
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] == letter) u.push_back(static_cast<int>(i) + 1);
    return u;
}

std::vector<int> standardize(const std::vector<int>& v, int k) {
    // convexity: no i ... j ... i with i != j
    std::vector<int> seen;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0 && v[i] == v[i - 1]) continue;
        if (std::find(seen.begin(), seen.end(), v[i]) != seen.end())
            throw NotConvex("standardize: input word is not convex");
        seen.push_back(v[i]);
    }
    std::vector<int> out = v;
    std::vector<bool> initial(v.size(), false);
    std::vector<bool> met(k + 1, false);
    for (size_t i = 0; i < v.size(); ++i) {
        if (!met[v[i]]) {
            initial[i] = true;
            met[v[i]] = true;
        }
    }
    int next = k + 1;
    for (size_t i = 0; i < v.size(); ++i)
        if (!initial[i]) out[i] = next++;
    return out;
}

namespace {

std::vector<int> one_line_inverse(const std::vector<int>& w) {
    std::vector<int> inv(w.size());
    for (size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

std::mutex g_schubert_mutex;
std::map<std::vector<int>, XPoly> g_schubert_cache;

} // namespace

XPoly schubert_classical(const std::vector<int>& u, OrderKind ord) {
    int n = static_cast<int>(u.size());
    {
        std::lock_guard<std::mutex> lock(g_schubert_mutex);
        auto it = g_schubert_cache.find(u);
        if (it != g_schubert_cache.end()) return it->second.with_order(ord);
    }
    XPoly result(n, OrderKind::neglex);
    bool is_w0 = true;
    for (int i = 0; i < n; ++i)
        if (u[i] != n - i) is_w0 = false;
    if (is_w0) {
        Expo e(n, 0);
        for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
        result = XPoly::monomial(n, e, Rat(1), OrderKind::neglex);
    } else {
        int i = -1;
        for (int j = 0; j + 1 < n; ++j)
            if (u[j] < u[j + 1]) {
                i = j;
                break;
            }
        std::vector<int> us = u;
        std::swap(us[i], us[i + 1]);
        XPoly higher = schubert_classical(us, OrderKind::neglex);
        // divided difference d_i(f) = (f - s_i f) / (x_i - x_{i+1})
        result = divide_by_var_diff(higher - higher.swapped(i + 1), i + 1);
    }
    {
        std::lock_guard<std::mutex> lock(g_schubert_mutex);
        g_schubert_cache.emplace(u, result);
    }
    return result.with_order(ord);
}

XPoly schubert_fubini(const FubiniWord& w, OrderKind ord) {
    std::vector<int> cw = conv_word(w.letters);
    std::vector<int> st = standardize(cw, w.k);
    std::vector<int> sp = sort_perm(w.letters);
    XPoly s = schubert_classical(st, ord);
    return s.permuted(one_line_inverse(sp));
}

std::map<std::vector<int>, Rat> expand_in_schubert(const XPoly& f, int n, int k) {
    IdealParams p;
    p.n = n;
    p.k = k;
    GB gb = groebner_of(IdealKind::delta, p);
    Quotient quo = quotient_basis(gb);
    auto words = fubini_words(n, k);
    size_t dim = quo.standard_monomials.size();
    if (dim != words.size()) throw SingularBasis("dimension does not match |W_{n,k}|");
    std::map<Expo, size_t> index;
    for (size_t i = 0; i < dim; ++i) index[quo.standard_monomials[i]] = i;

    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim, Rat(0)));
    for (size_t j = 0; j < words.size(); ++j) {
        XPoly nf = normal_form(schubert_fubini(words[j]), gb);
        for (const auto& [e, c] : nf.terms()) m[index.at(e)][j] = c;
    }
    std::vector<Rat> rhs(dim, Rat(0));
    XPoly nf = normal_form(f, gb);
    for (const auto& [e, c] : nf.terms()) rhs[index.at(e)] = c;

    // Gaussian elimination
    for (size_t col = 0, row = 0; col < dim && row < dim; ++col) {
        size_t piv = row;
        while (piv < dim && m[piv][col] == 0) ++piv;
        if (piv == dim) throw SingularBasis("Schubert basis matrix is singular");
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        Rat d = m[row][col];
        for (size_t j = 0; j < dim; ++j) m[row][j] /= d;
        rhs[row] /= d;
        for (size_t r = 0; r < dim; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat fac = m[r][col];
            for (size_t j = 0; j < dim; ++j) m[r][j] -= fac * m[row][j];
            rhs[r] -= fac * rhs[row];
        }
        ++row;
    }
    std::map<std::vector<int>, Rat> out;
    for (size_t j = 0; j < words.size(); ++j)
        if (rhs[j] != 0) out[words[j].letters] = rhs[j];
    return out;
}

} // namespace deltacalc
