#include "deltacalc/groebner.hpp"

#include "deltacalc/errors.hpp"

#include <algorithm>
#include <string>
#include <functional>
#include <map>
#include <set>

namespace deltacalc {

namespace {

bool divides(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo lcm_exp(const Expo& a, const Expo& b) {
    Expo l(a.size());
    for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool coprime(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

XPoly spoly(const XPoly& f, const XPoly& g) {
    Expo l = lcm_exp(f.lead_exp(), g.lead_exp());
    Expo mf(l.size()), mg(l.size());
    for (size_t i = 0; i < l.size(); ++i) {
        mf[i] = l[i] - f.lead_exp()[i];
        mg[i] = l[i] - g.lead_exp()[i];
    }
    return f.mul_term(mf, Rat(1) / f.lead_coeff()) - g.mul_term(mg, Rat(1) / g.lead_coeff());
}

XPoly reduce_full(const XPoly& f, const std::vector<XPoly>& basis) {
    XPoly rem(f.nvars(), f.order());
    XPoly cur = f;
    Expo m(f.nvars());
    while (!cur.is_zero()) {
        bool reduced = false;
        const Expo& le = cur.lead_exp();
        for (const XPoly& g : basis) {
            if (!divides(g.lead_exp(), le)) continue;
            for (int i = 0; i < f.nvars(); ++i) m[i] = le[i] - g.lead_exp()[i];
            cur -= g.mul_term(m, cur.lead_coeff() / g.lead_coeff());
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(le, cur.lead_coeff());
            cur.add_term(le, -cur.lead_coeff());
        }
    }
    return rem;
}

std::vector<XPoly> interreduce(std::vector<XPoly> basis) {
    // minimalize: drop polynomials whose LT is divisible by another LT
    std::vector<XPoly> minimal;
    std::sort(basis.begin(), basis.end(), [](const XPoly& a, const XPoly& b) {
        MonoLess less{a.order()};
        return less(a.lead_exp(), b.lead_exp());
    });
    for (size_t i = 0; i < basis.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (divides(basis[j].lead_exp(), basis[i].lead_exp()) &&
                !(j > i && basis[j].lead_exp() == basis[i].lead_exp())) {
                drop = true;
                break;
            }
        }
        if (!drop) minimal.push_back(basis[i]);
    }
    // tail-reduce each against the others
    std::vector<XPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<XPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        XPoly r = reduce_full(minimal[i], others);
        r *= Rat(1) / r.lead_coeff();
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const XPoly& a, const XPoly& b) {
        MonoLess less{a.order()};
        return less(a.lead_exp(), b.lead_exp());
    });
    return out;
}

} // namespace

XPoly normal_form(const XPoly& f, const GB& gb) {
    XPoly g = f.order() == gb.order.kind ? f : f.with_order(gb.order.kind);
    return reduce_full(g, gb.polys);
}

GB buchberger(const Ideal& ideal, OrderKind ord, const std::vector<XPoly>& hints) {
    std::vector<XPoly> basis;
    for (const XPoly& g : ideal.generators)
        if (!g.is_zero()) basis.push_back(g.with_order(ord));
    for (const XPoly& g : hints)
        if (!g.is_zero()) basis.push_back(g.with_order(ord));
    GB gb;
    gb.nvars = ideal.nvars;
    gb.order = TermOrder{ord};
    if (basis.empty()) return gb;

    // drop duplicates and reduce each generator against the running basis
    std::vector<XPoly> start;
    for (const XPoly& g : basis) {
        XPoly r = reduce_full(g, start);
        if (!r.is_zero()) {
            r *= Rat(1) / r.lead_coeff();
            start.push_back(std::move(r));
        }
    }
    basis = std::move(start);

    struct Pair {
        int deg;
        Expo lcm;
        int i, j;
    };
    MonoLess less{ord};
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    auto push_pairs = [&](int jnew) {
        for (int i = 0; i < jnew; ++i) {
            Expo l = lcm_exp(basis[i].lead_exp(), basis[jnew].lead_exp());
            queue.push_back(Pair{expo_deg(l), l, i, jnew});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    std::set<std::pair<int, int>> done;
    size_t qi = 0;
    while (qi < queue.size()) {
        Pair p = queue[qi++];
        done.insert({p.i, p.j});
        const XPoly& f = basis[p.i];
        const XPoly& g = basis[p.j];
        if (coprime(f.lead_exp(), g.lead_exp())) continue;
        // chain criterion
        bool skip = false;
        for (int m = 0; m < static_cast<int>(basis.size()); ++m) {
            if (m == p.i || m == p.j) continue;
            if (!divides(basis[m].lead_exp(), p.lcm)) continue;
            auto key1 = std::minmax(p.i, m);
            auto key2 = std::minmax(m, p.j);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second})) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        XPoly s = reduce_full(spoly(f, g), basis);
        if (s.is_zero()) continue;
        s *= Rat(1) / s.lead_coeff();
        basis.push_back(std::move(s));
        int jnew = static_cast<int>(basis.size()) - 1;
        size_t old = queue.size();
        for (int i = 0; i < jnew; ++i) {
            Expo l = lcm_exp(basis[i].lead_exp(), basis[jnew].lead_exp());
            queue.push_back(Pair{expo_deg(l), l, i, jnew});
        }
        std::sort(queue.begin() + qi, queue.end(), pair_less);
        (void)old;
    }

    gb.polys = interreduce(std::move(basis));
    return gb;
}

Quotient quotient_basis(const GB& gb) {
    int n = gb.nvars;
    // cap_i = minimal a with x_i^a a leading-term pure power
    std::vector<int> cap(n, -1);
    for (const XPoly& g : gb.polys) {
        const Expo& e = g.lead_exp();
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (e[i] > 0) {
                if (nz >= 0) {
                    pure = false;
                    break;
                }
                nz = i;
            }
        }
        if (pure && nz >= 0 && (cap[nz] < 0 || e[nz] < cap[nz])) cap[nz] = e[nz];
        if (pure && nz < 0) {
            // constant in the basis: unit ideal
            Quotient q;
            q.gb = gb;
            return q;
        }
    }
    for (int i = 0; i < n; ++i)
        if (cap[i] < 0) throw NotZeroDimensional("no pure power of x" + std::to_string(i + 1));

    std::vector<Expo> lts;
    for (const XPoly& g : gb.polys) lts.push_back(g.lead_exp());

    Quotient q;
    q.gb = gb;
    Expo cur(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            for (const Expo& lt : lts)
                if (divides(lt, cur)) return;
            q.standard_monomials.push_back(cur);
            return;
        }
        for (int a = 0; a < cap[i]; ++a) {
            cur[i] = a;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    std::sort(q.standard_monomials.begin(), q.standard_monomials.end(),
              [&](const Expo& a, const Expo& b) { return graded_neglex_less(a, b); });
    for (const Expo& e : q.standard_monomials) q.hilbert += QTPoly::monomial(expo_deg(e), 0);
    return q;
}

bool gb_equal(const GB& a, const GB& b) {
    if (a.nvars != b.nvars || a.order.kind != b.order.kind) return false;
    if (a.polys.size() != b.polys.size()) return false;
    for (size_t i = 0; i < a.polys.size(); ++i)
        if (!(a.polys[i] == b.polys[i])) return false;
    return true;
}

} // namespace deltacalc
