#include "deltacalc/coinvariant.hpp"

#include "deltacalc/combinat.hpp"
#include "deltacalc/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace deltacalc {

XPoly isobaric_divided_difference(const XPoly& f, int i) {
    XPoly xi = XPoly::variable(f.nvars(), i, f.order());
    XPoly xi1 = XPoly::variable(f.nvars(), i + 1, f.order());
    XPoly num = xi * f - xi1 * f.swapped(i);
    return divide_by_var_diff(num, i);
}

XPoly demazure(const std::vector<int>& gamma, OrderKind ord) {
    int n = static_cast<int>(gamma.size());
    for (int x : gamma)
        if (x < 0) throw BadParams("demazure: negative entry");
    // weakly decreasing -> monomial
    int asc = -1;
    for (int i = 0; i + 1 < n; ++i)
        if (gamma[i] < gamma[i + 1]) {
            asc = i;
            break;
        }
    if (asc < 0) {
        Expo e(gamma.begin(), gamma.end());
        return XPoly::monomial(n, e, Rat(1), ord);
    }
    std::vector<int> swapped = gamma;
    std::swap(swapped[asc], swapped[asc + 1]);
    return isobaric_divided_difference(demazure(swapped, ord), asc + 1);
}

int m_in(int i, int n, const Partition& lambda) {
    Partition conj = conjugate(lambda);
    conj.resize(n, 0);
    int s = 0;
    for (int j = n - i; j < n; ++j) s += conj[j];
    return s;
}

namespace {

std::vector<int> all_vars(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

void add_tanisaki_generators(Ideal& ideal, int n, const Partition& lambda, OrderKind ord) {
    // e_d(S) for S subset of [n], d > n - m_{|S|,n}(lambda), restricted to d <= |S|
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> S;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) S.push_back(i + 1);
        int sz = static_cast<int>(S.size());
        int lo = n - m_in(sz, n, lambda) + 1;
        for (int d = std::max(lo, 1); d <= sz; ++d)
            ideal.generators.push_back(elementary_in(n, d, S, ord));
    }
}

} // namespace

Ideal build_ideal(IdealKind kind, const IdealParams& p, OrderKind ord) {
    Ideal ideal;
    ideal.nvars = p.n;
    int n = p.n;
    if (n < 1) throw BadParams("n must be positive");
    auto vars = all_vars(n);
    switch (kind) {
        case IdealKind::coinvariant:
            for (int d = 1; d <= n; ++d)
                ideal.generators.push_back(elementary_in(n, d, vars, ord));
            break;
        case IdealKind::delta:
            if (p.k < 1 || p.k > n) throw BadParams("delta: need 1 <= k <= n");
            for (int d = n - p.k + 1; d <= n; ++d)
                ideal.generators.push_back(elementary_in(n, d, vars, ord));
            for (int i = 1; i <= n; ++i)
                ideal.generators.push_back(power_of_var(n, i, p.k, ord));
            break;
        case IdealKind::delta_s:
            if (p.k < 0 || p.k > p.s || p.s > n) throw BadParams("delta_s: need 0 <= k <= s <= n");
            for (int i = 1; i <= n; ++i)
                ideal.generators.push_back(power_of_var(n, i, p.s, ord));
            for (int d = n - p.k + 1; d <= n; ++d)
                ideal.generators.push_back(elementary_in(n, d, vars, ord));
            break;
        case IdealKind::tanisaki:
            if (partition_size(p.lambda) != n) throw BadParams("tanisaki: lambda must sum to n");
            add_tanisaki_generators(ideal, n, p.lambda, ord);
            break;
        case IdealKind::triple:
            if (partition_size(p.lambda) > n) throw BadParams("triple: |lambda| <= n required");
            if (static_cast<int>(p.lambda.size()) > p.s)
                throw BadParams("triple: len(lambda) <= s required");
            add_tanisaki_generators(ideal, n, p.lambda, ord);
            for (int i = 1; i <= n; ++i)
                ideal.generators.push_back(power_of_var(n, i, p.s, ord));
            break;
        case IdealKind::rank_init: {
            if (p.r < 1 || p.r > p.k || p.k > n) throw BadParams("rank_init: need 1 <= r <= k <= n");
            for (int i = 1; i <= n; ++i)
                ideal.generators.push_back(power_of_var(n, i, p.k, ord));
            for (int d = n - p.k + 1; d <= n; ++d)
                ideal.generators.push_back(elementary_in(n, d, vars, ord));
            std::vector<int> first_r(vars.begin(), vars.begin() + p.r);
            // h_d for k-r < d <= k generate all higher h_d over r variables
            for (int d = p.k - p.r + 1; d <= p.k; ++d)
                ideal.generators.push_back(homogeneous_in(n, d, first_r, ord));
            break;
        }
    }
    // drop zero generators (restricted e_d(S) with d > |S| never enter by
    // construction, but stay safe)
    std::vector<XPoly> gens;
    for (auto& g : ideal.generators)
        if (!g.is_zero()) gens.push_back(std::move(g));
    ideal.generators = std::move(gens);
    return ideal;
}

GB groebner_of(IdealKind kind, const IdealParams& p, OrderKind ord, bool use_hints) {
    Ideal ideal = build_ideal(kind, p, ord);
    std::vector<XPoly> hints;
    if (use_hints && (kind == IdealKind::delta || kind == IdealKind::delta_s) && p.k >= 1) {
        // kappa_{rev(gamma(S))} for |S| = n-k+1 lie in <e_n..e_{n-k+1}>
        int n = p.n, k = p.k;
        int need = n - k + 1;
        std::vector<int> comb(need);
        for (int i = 0; i < need; ++i) comb[i] = i + 1;
        while (true) {
            Code g = skip_sequence(comb, n);
            std::vector<int> rev(g.rbegin(), g.rend());
            hints.push_back(demazure(rev, ord));
            int i = need - 1;
            while (i >= 0 && comb[i] == n - need + i + 1) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < need; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return buchberger(ideal, ord, hints);
}

SymFunc graded_frobenius(const Quotient& q, const Ideal& ideal) {
    int n = q.gb.nvars;
    // equivariance of the generating set: permuted generators must reduce to 0
    for (const XPoly& g : ideal.generators) {
        for (int i = 1; i < n; ++i) {
            std::vector<int> tr(n);
            for (int j = 0; j < n; ++j) tr[j] = j + 1;
            std::swap(tr[i - 1], tr[i]);
            if (!normal_form(g.permuted(tr), q.gb).is_zero())
                throw NotEquivariant("generator not stable under s_" + std::to_string(i));
        }
    }

    int maxdeg = 0;
    for (const Expo& e : q.standard_monomials) maxdeg = std::max(maxdeg, expo_deg(e));

    SymFunc out(n, SfBasis::s);
    auto pars = partitions_of(n);
    // trace of each cycle type on each graded piece
    std::map<Partition, std::vector<Rat>, RevLexLess> traces;
    for (const auto& mu : pars) {
        auto w = cycle_type_representative(mu, n);
        std::vector<Rat> tr(maxdeg + 1, Rat(0));
        for (const Expo& e : q.standard_monomials) {
            XPoly m = XPoly::monomial(n, e, Rat(1), q.gb.order.kind);
            XPoly nf = normal_form(m.permuted(w), q.gb);
            tr[expo_deg(e)] += nf.coeff(e);
        }
        traces.emplace(mu, std::move(tr));
    }
    for (int d = 0; d <= maxdeg; ++d) {
        std::map<Partition, Rat, RevLexLess> chi;
        bool all_zero = true;
        for (const auto& mu : pars) {
            chi[mu] = traces.at(mu)[d];
            if (chi[mu] != 0) all_zero = false;
        }
        if (all_zero) continue;
        SymFunc fd = frobenius_from_character(n, chi);
        QTRat qd(QTPoly::monomial(d, 0));
        for (const auto& [lam, c] : fd.coeffs) out.add(lam, qd * c);
    }
    return out;
}

SymFunc syt_formula(int n, int k) {
    if (k < 1 || k > n) throw BadParams("syt_formula: need 1 <= k <= n");
    SymFunc out(n, SfBasis::s);
    for (const auto& lam : partitions_of(n)) {
        QTPoly coeff;
        for (const auto& t : syt_enumerate(lam)) {
            int des = syt_des(t);
            long maj = syt_maj(t);
            QTPoly binom = q_binomial(n - des - 1, n - k);
            if (binom.is_zero()) continue;
            coeff += QTPoly::monomial(static_cast<int>(maj), 0) * binom;
        }
        if (!coeff.is_zero()) out.add(lam, QTRat(coeff));
    }
    return out;
}

SymFunc hl_formula(int n, int k) {
    if (k < 1 || k > n) throw BadParams("hl_formula: need 1 <= k <= n");
    SymFunc out(n, SfBasis::s);
    for (const auto& lam : partitions_of(n)) {
        if (static_cast<int>(lam.size()) != k) continue;
        auto mult = part_multiplicities(lam, n);
        long expo = static_cast<long>(n - k) * (k - 1);
        for (int i = 1; i <= n; ++i) expo += static_cast<long>(mult[i]) * (mult[i] - 1) / 2;
        for (size_t i = 0; i < lam.size(); ++i)
            expo -= static_cast<long>(i) * (2 * lam[i] - 1);
        std::vector<int> parts(mult.begin() + 1, mult.end());
        QTPoly multinom = q_multinomial(k, parts);
        QTRat factor = QTRat(multinom);
        if (expo >= 0) {
            factor *= QTRat(QTPoly::monomial(static_cast<int>(expo), 0));
        } else {
            factor = factor / QTRat(QTPoly::monomial(static_cast<int>(-expo), 0));
        }
        SymFunc hl = hall_littlewood(lam);
        for (const auto& [mu, c] : hl.coeffs) out.add(mu, factor * c);
    }
    return out;
}

PointLocus PointLocus::make(int nvars, std::vector<std::vector<Rat>> pts) {
    PointLocus z;
    z.nvars = nvars;
    std::set<std::vector<Rat>> seen;
    for (auto& p : pts) {
        if (static_cast<int>(p.size()) != nvars) throw BadParams("point arity mismatch");
        if (!seen.insert(p).second) throw DuplicatePoints();
    }
    z.points = std::move(pts);
    return z;
}

PointLocus locus_znk(int n, int k) {
    std::vector<std::vector<Rat>> pts;
    for (const auto& w : fubini_words(n, k)) {
        std::vector<Rat> p(n);
        for (int i = 0; i < n; ++i) p[i] = Rat(w.letters[i] - 1);
        pts.push_back(std::move(p));
    }
    return PointLocus::make(n, std::move(pts));
}

PointLocus locus_znks(int n, int k, int s) {
    std::vector<std::vector<Rat>> pts;
    std::vector<int> cur(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<bool> seen(s, false);
            for (int x : cur) seen[x] = true;
            for (int j = 0; j < k; ++j)
                if (!seen[j]) return;
            std::vector<Rat> p(n);
            for (int j = 0; j < n; ++j) p[j] = Rat(cur[j]);
            pts.push_back(std::move(p));
            return;
        }
        for (int v = 0; v < s; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return PointLocus::make(n, std::move(pts));
}

PointLocus locus_zlambda(const Partition& lam) {
    int n = partition_size(lam);
    std::vector<int> values;
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j) values.push_back(static_cast<int>(i));
    return locus_orbit(n, values);
}

PointLocus locus_orbit(int n, const std::vector<int>& multiset_values) {
    if (static_cast<int>(multiset_values.size()) != n)
        throw BadParams("orbit: need n values");
    std::vector<int> v = multiset_values;
    std::sort(v.begin(), v.end());
    std::vector<std::vector<Rat>> pts;
    do {
        std::vector<Rat> p(n);
        for (int i = 0; i < n; ++i) p[i] = Rat(v[i]);
        pts.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return PointLocus::make(n, std::move(pts));
}

PointLocus locus_union(const PointLocus& a, const PointLocus& b) {
    if (a.nvars != b.nvars) throw BadParams("union: arity mismatch");
    std::vector<std::vector<Rat>> pts = a.points;
    for (const auto& p : b.points)
        if (std::find(a.points.begin(), a.points.end(), p) == a.points.end()) pts.push_back(p);
    return PointLocus::make(a.nvars, std::move(pts));
}

GB vanishing_ideal(const PointLocus& z) {
    const int n = z.nvars;
    const size_t m = z.points.size();
    const OrderKind ord = OrderKind::graded_neglex;
    if (m == 0) throw BadParams("vanishing_ideal: empty locus");

    struct Row {
        std::vector<Rat> vec; // reduced evaluation vector, pivot normalized to 1
        size_t pivot;
        XPoly poly; // monomial minus reductions, evaluates to vec
    };
    std::vector<Row> rows;
    std::vector<Expo> lts;
    GB gb;
    gb.nvars = n;
    gb.order = TermOrder{ord};

    MonoLess less{ord};
    std::set<Expo, MonoLess> pool(less);
    pool.insert(Expo(n, 0));
    auto divisible = [&](const Expo& e) {
        for (const Expo& lt : lts) {
            bool div = true;
            for (int i = 0; i < n; ++i)
                if (lt[i] > e[i]) {
                    div = false;
                    break;
                }
            if (div) return true;
        }
        return false;
    };

    while (!pool.empty()) {
        Expo e = *pool.begin();
        pool.erase(pool.begin());
        if (divisible(e)) continue;
        // evaluation vector of x^e on the locus
        std::vector<Rat> v(m);
        for (size_t p = 0; p < m; ++p) {
            Rat val(1);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < e[i]; ++j) val *= z.points[p][i];
            v[p] = val;
        }
        XPoly poly = XPoly::monomial(n, e, Rat(1), ord);
        for (const Row& r : rows) {
            const Rat& c = v[r.pivot];
            if (c == 0) continue;
            for (size_t p = 0; p < m; ++p) v[p] -= c * r.vec[p];
            poly -= r.poly.mul_term(Expo(n, 0), c);
        }
        size_t piv = m;
        for (size_t p = 0; p < m; ++p)
            if (v[p] != 0) {
                piv = p;
                break;
            }
        if (piv == m) {
            gb.polys.push_back(poly);
            lts.push_back(e);
        } else {
            Rat d = v[piv];
            for (size_t p = 0; p < m; ++p) v[p] /= d;
            poly *= Rat(1) / d;
            rows.push_back(Row{std::move(v), piv, std::move(poly)});
            for (int i = 0; i < n; ++i) {
                Expo f = e;
                ++f[i];
                if (!divisible(f)) pool.insert(f);
            }
        }
    }
    std::sort(gb.polys.begin(), gb.polys.end(), [&](const XPoly& a, const XPoly& b) {
        return less(a.lead_exp(), b.lead_exp());
    });
    return gb;
}

GB associated_graded(const GB& graded_order_gb) {
    if (graded_order_gb.order.kind != OrderKind::graded_neglex)
        throw BadParams("associated_graded needs a degree-compatible order");
    Ideal top;
    top.nvars = graded_order_gb.nvars;
    for (const XPoly& g : graded_order_gb.polys) top.generators.push_back(g.top_form());
    return buchberger(top, OrderKind::graded_neglex);
}

HLPositivityReport hl_positivity_check(const SymFunc& graded_frob) {
    int n = graded_frob.degree;
    SymFunc fs = graded_frob.basis == SfBasis::s ? graded_frob : convert(graded_frob, SfBasis::s);
    for (const auto& [lam, c] : fs.coeffs)
        if (!c.is_polynomial() || c.num().deg_t() > 0)
            throw NotPolynomial("graded Frobenius coefficient not a polynomial in q");
    auto pars = partitions_of(n);
    std::map<Partition, SymFunc, RevLexLess> hl;
    for (const auto& mu : pars) hl.emplace(mu, hall_littlewood(mu));

    HLPositivityReport rep;
    // K~ is unitriangular-with-monomial-diagonal against dominance; revlex
    // refines dominance, so solve back to front
    std::map<Partition, QTRat, RevLexLess> c;
    for (auto it = pars.rbegin(); it != pars.rend(); ++it) {
        const Partition& lam = *it;
        QTRat val = fs.coeff(lam);
        for (const auto& [mu, cm] : c) {
            val -= cm * hl.at(mu).coeff(lam);
        }
        QTRat diag = hl.at(lam).coeff(lam);
        c[lam] = val / diag;
    }
    for (const auto& [mu, cm] : c) {
        if (cm.is_zero()) continue;
        rep.coefficients[mu] = cm;
        if (!cm.is_polynomial()) {
            rep.polynomial = false;
            rep.positive = false;
            continue;
        }
        for (const auto& [e, coeff] : cm.num().terms())
            if (coeff < 0 || !is_integer(coeff)) rep.positive = false;
    }
    return rep;
}

bool demazure_membership(const std::vector<int>& S, int n, int k) {
    if (static_cast<int>(S.size()) != n - k + 1)
        throw BadParams("demazure_membership: need |S| = n-k+1");
    static std::map<std::pair<int, int>, GB> cache;
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Ideal e_only;
        e_only.nvars = n;
        auto vars = all_vars(n);
        for (int d = n - k + 1; d <= n; ++d)
            e_only.generators.push_back(elementary_in(n, d, vars, OrderKind::neglex));
        it = cache.emplace(key, buchberger(e_only, OrderKind::neglex)).first;
    }
    Code g = skip_sequence(S, n);
    std::vector<int> rev(g.rbegin(), g.rend());
    XPoly kappa = demazure(rev, OrderKind::neglex);
    return normal_form(kappa, it->second).is_zero();
}

namespace {

SymFunc graded_frobenius_nks(int n, int k, int s) {
    IdealParams p;
    p.n = n;
    p.k = k;
    p.s = s;
    Ideal ideal = build_ideal(IdealKind::delta_s, p);
    GB gb = groebner_of(IdealKind::delta_s, p);
    Quotient q = quotient_basis(gb);
    return graded_frobenius(q, ideal);
}

} // namespace

bool ses_recursion_check(int n, int k, int s) {
    if (!(0 <= k && k < s && s <= n)) throw BadParams("ses: need 0 <= k < s <= n");
    SymFunc lhs = graded_frobenius_nks(n, k, s);
    SymFunc a = graded_frobenius_nks(n, k, s - 1);
    SymFunc b = graded_frobenius_nks(n, k + 1, s);
    QTRat shift(QTPoly::monomial(n - k, 0));
    SymFunc rhs = b;
    for (const auto& [lam, c] : a.coeffs) rhs.add(lam, shift * c);
    return lhs == rhs;
}

SymFunc orbit_graded_frobenius(const PointLocus& z) {
    GB vi = vanishing_ideal(z);
    GB gr = associated_graded(vi);
    Quotient q = quotient_basis(gr);
    Ideal ideal;
    ideal.nvars = z.nvars;
    ideal.generators = gr.polys;
    return graded_frobenius(q, ideal);
}

} // namespace deltacalc
