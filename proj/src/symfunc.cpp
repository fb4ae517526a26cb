#include "deltacalc/symfunc.hpp"

#include "deltacalc/errors.hpp"
#include "deltacalc/tableaux.hpp"
#include "deltacalc/xpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace deltacalc {

std::string basis_name(SfBasis b) {
    switch (b) {
        case SfBasis::m: return "m";
        case SfBasis::e: return "e";
        case SfBasis::h: return "h";
        case SfBasis::p: return "p";
        case SfBasis::s: return "s";
        case SfBasis::HL_q: return "HL_q";
        case SfBasis::Mac_qt: return "Mac_qt";
    }
    return "?";
}

SfBasis basis_from_name(const std::string& s) {
    if (s == "m") return SfBasis::m;
    if (s == "e") return SfBasis::e;
    if (s == "h") return SfBasis::h;
    if (s == "p") return SfBasis::p;
    if (s == "s") return SfBasis::s;
    if (s == "HL_q") return SfBasis::HL_q;
    if (s == "Mac_qt") return SfBasis::Mac_qt;
    throw UnsupportedBasis("unknown basis: " + s);
}

SymFunc SymFunc::single(int deg, SfBasis b, const Partition& lam, const QTRat& c) {
    SymFunc f(deg, b);
    f.add(lam, c);
    return f;
}

QTRat SymFunc::coeff(const Partition& lam) const {
    auto it = coeffs.find(lam);
    return it == coeffs.end() ? QTRat() : it->second;
}

void SymFunc::add(const Partition& lam, const QTRat& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(lam);
    if (it == coeffs.end()) {
        coeffs.emplace(lam, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

SymFunc SymFunc::operator-() const {
    SymFunc r = *this;
    for (auto& [l, c] : r.coeffs) c = -c;
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (degree != o.degree) throw DegreeMismatch();
    if (basis != o.basis) throw UnsupportedBasis("adding different bases");
    for (const auto& [l, c] : o.coeffs) add(l, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::operator*=(const QTRat& c) {
    if (c.is_zero()) {
        coeffs.clear();
        return *this;
    }
    for (auto& [l, v] : coeffs) v *= c;
    return *this;
}

bool SymFunc::operator==(const SymFunc& o) const {
    return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
}

SymFunc SymFunc::mapped(const std::function<QTRat(const QTRat&)>& f) const {
    SymFunc r(degree, basis);
    for (const auto& [l, c] : coeffs) r.add(l, f(c));
    return r;
}

std::string SymFunc::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << basis_name(basis) << partition_str(l);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// transition tables

namespace {

struct RatMatrix {
    int n = 0;
    std::vector<std::vector<Rat>> a;
    RatMatrix() = default;
    explicit RatMatrix(int nn) : n(nn), a(nn, std::vector<Rat>(nn, Rat(0))) {}
};

// Gaussian inverse; the matrices here are change-of-basis, always invertible
RatMatrix invert(const RatMatrix& m) {
    int n = m.n;
    std::vector<std::vector<Rat>> a = m.a;
    RatMatrix inv(n);
    for (int i = 0; i < n; ++i) inv.a[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularSystem("transition matrix singular");
        std::swap(a[piv], a[col]);
        std::swap(inv.a[piv], inv.a[col]);
        Rat d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv.a[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv.a[r][j] -= f * inv.a[col][j];
            }
        }
    }
    return inv;
}

struct DegreeTables {
    int n = 0;
    std::vector<Partition> pars;
    std::map<Partition, int, RevLexLess> index;
    // to_m[b]: columns are m-expansions of basis elements; from_m inverse
    std::map<SfBasis, RatMatrix> to_m, from_m;
};

// m-coordinates of a symmetric polynomial in n = deg variables
std::vector<Rat> m_coords(const XPoly& f, const std::vector<Partition>& pars, int n) {
    std::vector<Rat> v(pars.size(), Rat(0));
    for (size_t i = 0; i < pars.size(); ++i) {
        Expo e(n, 0);
        for (size_t j = 0; j < pars[i].size(); ++j) e[j] = pars[i][j];
        v[i] = f.coeff(e);
    }
    return v;
}

XPoly gen_product(int n, const Partition& lam, const std::function<XPoly(int)>& gen) {
    XPoly f = XPoly::constant(n, Rat(1));
    for (int part : lam) f = f * gen(part);
    return f;
}

const DegreeTables& tables(int n) {
    static std::mutex mu;
    static std::map<int, DegreeTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    DegreeTables t;
    t.n = n;
    t.pars = partitions_of(n);
    int N = static_cast<int>(t.pars.size());
    for (int i = 0; i < N; ++i) t.index[t.pars[i]] = i;

    std::vector<int> all_vars(n);
    for (int i = 0; i < n; ++i) all_vars[i] = i + 1;

    auto build = [&](SfBasis b, const std::function<XPoly(const Partition&)>& expand) {
        RatMatrix M(N);
        for (int j = 0; j < N; ++j) {
            auto col = m_coords(expand(t.pars[j]), t.pars, n);
            for (int i = 0; i < N; ++i) M.a[i][j] = col[i];
        }
        t.to_m[b] = M;
        t.from_m[b] = invert(M);
    };

    build(SfBasis::e, [&](const Partition& lam) {
        return gen_product(n, lam, [&](int d) { return elementary_in(n, d, all_vars, OrderKind::neglex); });
    });
    build(SfBasis::h, [&](const Partition& lam) {
        return gen_product(n, lam, [&](int d) { return homogeneous_in(n, d, all_vars, OrderKind::neglex); });
    });
    build(SfBasis::p, [&](const Partition& lam) {
        return gen_product(n, lam, [&](int d) {
            XPoly pk(n, OrderKind::neglex);
            for (int i = 1; i <= n; ++i) pk += power_of_var(n, i, d, OrderKind::neglex);
            return pk;
        });
    });
    // Schur via Kostka numbers: s_lam = sum_mu K_{lam,mu} m_mu
    {
        RatMatrix M(N);
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < N; ++i) M.a[i][j] = Rat(kostka_number(t.pars[j], t.pars[i]));
        t.to_m[SfBasis::s] = M;
        t.from_m[SfBasis::s] = invert(M);
    }
    {
        RatMatrix I(N);
        for (int i = 0; i < N; ++i) I.a[i][i] = 1;
        t.to_m[SfBasis::m] = I;
        t.from_m[SfBasis::m] = I;
    }
    return cache.emplace(n, std::move(t)).first->second;
}

std::vector<QTRat> apply(const RatMatrix& M, const std::vector<QTRat>& v) {
    std::vector<QTRat> r(M.n, QTRat());
    for (int i = 0; i < M.n; ++i) {
        QTRat s;
        for (int j = 0; j < M.n; ++j) {
            if (M.a[i][j] == 0 || v[j].is_zero()) continue;
            s += QTRat(M.a[i][j]) * v[j];
        }
        r[i] = s;
    }
    return r;
}

bool plain_basis(SfBasis b) {
    return b == SfBasis::m || b == SfBasis::e || b == SfBasis::h || b == SfBasis::p ||
           b == SfBasis::s;
}

} // namespace

long kostka_number(const Partition& lam, const Partition& mu) {
    return static_cast<long>(ssyt_enumerate(lam, mu).size());
}

SymFunc convert(const SymFunc& f, SfBasis target) {
    if (!plain_basis(f.basis) || !plain_basis(target))
        throw UnsupportedBasis("convert handles m/e/h/p/s only");
    if (f.basis == target) return f;
    const DegreeTables& t = tables(f.degree);
    std::vector<QTRat> v(t.pars.size(), QTRat());
    for (const auto& [l, c] : f.coeffs) v[t.index.at(l)] = c;
    auto mv = apply(t.to_m.at(f.basis), v);
    auto out = apply(t.from_m.at(target), mv);
    SymFunc g(f.degree, target);
    for (size_t i = 0; i < t.pars.size(); ++i) g.add(t.pars[i], out[i]);
    return g;
}

QTRat hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.degree != g.degree) throw DegreeMismatch();
    SymFunc fs = f.basis == SfBasis::s ? f : convert(f, SfBasis::s);
    SymFunc gs = g.basis == SfBasis::s ? g : convert(g, SfBasis::s);
    QTRat r;
    for (const auto& [l, c] : fs.coeffs) {
        auto it = gs.coeffs.find(l);
        if (it != gs.coeffs.end()) r += c * it->second;
    }
    return r;
}

SymFunc omega(const SymFunc& f) {
    SymFunc fs = f.basis == SfBasis::s ? f : convert(f, SfBasis::s);
    SymFunc r(f.degree, SfBasis::s);
    for (const auto& [l, c] : fs.coeffs) r.add(conjugate(l), c);
    return f.basis == SfBasis::s ? r : convert(r, f.basis);
}

PlethysmScale pleth_one_minus_q() {
    return [](int k) {
        QTPoly p(Rat(1));
        p -= QTPoly::monomial(k, 0);
        return QTRat(p);
    };
}

PlethysmScale pleth_one_minus_t() {
    return [](int k) {
        QTPoly p(Rat(1));
        p -= QTPoly::monomial(0, k);
        return QTRat(p);
    };
}

PlethysmScale pleth_macdonald_kernel() {
    return [](int k) {
        QTPoly pq(Rat(1)), pt(Rat(1));
        pq -= QTPoly::monomial(k, 0);
        pt -= QTPoly::monomial(0, k);
        return QTRat(QTPoly(Rat(1)), pq * pt);
    };
}

SymFunc plethystic_scale(const SymFunc& f, const PlethysmScale& scale) {
    SymFunc fp = convert(f, SfBasis::p);
    SymFunc r(f.degree, SfBasis::p);
    for (const auto& [l, c] : fp.coeffs) {
        QTRat v = c;
        for (int part : l) v *= scale(part);
        r.add(l, v);
    }
    return convert(r, f.basis);
}

SymFunc frobenius_from_character(int n, const std::map<Partition, Rat, RevLexLess>& chi) {
    SymFunc fp(n, SfBasis::p);
    for (const auto& mu : partitions_of(n)) {
        auto it = chi.find(mu);
        if (it == chi.end()) throw BadParams("character missing cycle type " + partition_str(mu));
        Rat c = it->second / Rat(z_mu(mu));
        fp.add(mu, QTRat(c));
    }
    SymFunc fs = convert(fp, SfBasis::s);
    for (const auto& [l, c] : fs.coeffs) {
        auto r = c.as_rat();
        if (!r || !is_integer(*r) || *r < 0)
            throw NonIntegralMultiplicity("bad multiplicity at " + partition_str(l));
    }
    return fs;
}

SymFunc sf_multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, SfBasis::p);
    SymFunc gp = convert(g, SfBasis::p);
    SymFunc r(f.degree + g.degree, SfBasis::p);
    for (const auto& [lf, cf] : fp.coeffs)
        for (const auto& [lg, cg] : gp.coeffs) {
            Partition u = lf;
            u.insert(u.end(), lg.begin(), lg.end());
            std::sort(u.begin(), u.end(), std::greater<int>());
            r.add(u, cf * cg);
        }
    return convert(r, SfBasis::s);
}

Int syt_count(const Partition& lam) {
    int n = partition_size(lam);
    if (n == 0) return 1;
    Partition conj = conjugate(lam);
    Int num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    Int den = 1;
    for (size_t r = 0; r < lam.size(); ++r)
        for (int c = 0; c < lam[r]; ++c) {
            int hook = (lam[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
            den *= hook;
        }
    return num / den;
}

} // namespace deltacalc
