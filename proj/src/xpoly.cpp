#include "deltacalc/xpoly.hpp"

#include <algorithm>
#include <sstream>

namespace deltacalc {

bool neglex_less(const Expo& a, const Expo& b) {
    if (a.size() != b.size()) throw LengthMismatch("neglex: exponent lengths differ");
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool graded_neglex_less(const Expo& a, const Expo& b) {
    int da = expo_deg(a), db = expo_deg(b);
    if (da != db) return da < db;
    return neglex_less(a, b);
}

XPoly XPoly::constant(int nvars, const Rat& c, OrderKind ord) {
    XPoly p(nvars, ord);
    if (c != 0) p.terms_[Expo(nvars, 0)] = c;
    return p;
}

XPoly XPoly::variable(int nvars, int i, OrderKind ord) {
    Expo e(nvars, 0);
    e[i - 1] = 1;
    return monomial(nvars, e, Rat(1), ord);
}

XPoly XPoly::monomial(int nvars, const Expo& e, const Rat& c, OrderKind ord) {
    XPoly p(nvars, ord);
    if (c != 0) p.terms_[e] = c;
    return p;
}

int XPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, expo_deg(e));
    return d;
}

bool XPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = expo_deg(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (expo_deg(e) != d) return false;
    return true;
}

Rat XPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void XPoly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r(a.nvars_, a.order());
    Expo e(a.nvars_, 0);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

XPoly& XPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
}

XPoly XPoly::mul_term(const Expo& e, const Rat& c) const {
    XPoly r(nvars_, order());
    if (c == 0) return r;
    Expo f(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (int i = 0; i < nvars_; ++i) f[i] = ea[i] + e[i];
        r.terms_[f] = ca * c;
    }
    return r;
}

bool XPoly::operator==(const XPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

XPoly XPoly::with_order(OrderKind ord) const {
    XPoly r(nvars_, ord);
    for (const auto& [e, c] : terms_) r.terms_[e] = c;
    return r;
}

XPoly XPoly::permuted(const std::vector<int>& w) const {
    XPoly r(nvars_, order());
    Expo f(nvars_);
    for (const auto& [e, c] : terms_) {
        std::fill(f.begin(), f.end(), 0);
        for (int i = 0; i < nvars_; ++i) f[w[i] - 1] = e[i];
        r.add_term(f, c);
    }
    return r;
}

XPoly XPoly::swapped(int i) const {
    XPoly r(nvars_, order());
    for (const auto& [e, c] : terms_) {
        Expo f = e;
        std::swap(f[i - 1], f[i]);
        r.add_term(f, c);
    }
    return r;
}

XPoly XPoly::top_form() const {
    XPoly r(nvars_, order());
    int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (expo_deg(e) == d) r.terms_[e] = c;
    return r;
}

Rat XPoly::eval(const std::vector<Rat>& pt) const {
    Rat s(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < e[i]; ++j) m *= pt[i];
        s += m;
    }
    return s;
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1 || expo_deg(it->first) == 0) {
            os << rat_str(c);
            printed = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << (i + 1);
            if (it->first[i] > 1) os << "^" << it->first[i];
            printed = true;
        }
    }
    return os.str();
}

XPoly elementary_in(int nvars, int d, const std::vector<int>& vars, OrderKind ord) {
    if (d < 0 || d > static_cast<int>(vars.size())) return XPoly(nvars, ord);
    if (d == 0) return XPoly::constant(nvars, Rat(1), ord);
    // DP over the variable list: keep e_0..e_d
    std::vector<XPoly> acc(d + 1, XPoly(nvars, ord));
    acc[0] = XPoly::constant(nvars, Rat(1), ord);
    for (size_t k = 0; k < vars.size(); ++k) {
        XPoly xv = XPoly::variable(nvars, vars[k], ord);
        for (int i = std::min<int>(d, static_cast<int>(k) + 1); i >= 1; --i)
            acc[i] += acc[i - 1] * xv;
    }
    return acc[d];
}

XPoly homogeneous_in(int nvars, int d, const std::vector<int>& vars, OrderKind ord) {
    if (d < 0) return XPoly(nvars, ord);
    if (d == 0) return XPoly::constant(nvars, Rat(1), ord);
    // h_d over the set = sum over monomials; DP adding one variable at a time
    std::vector<XPoly> acc;
    acc.reserve(d + 1);
    acc.push_back(XPoly::constant(nvars, Rat(1), ord));
    for (int i = 1; i <= d; ++i) acc.push_back(XPoly(nvars, ord));
    for (int v : vars) {
        XPoly xv = XPoly::variable(nvars, v, ord);
        for (int i = 1; i <= d; ++i) acc[i] += acc[i - 1] * xv;
    }
    return acc[d];
}

XPoly power_of_var(int nvars, int i, int k, OrderKind ord) {
    Expo e(nvars, 0);
    e[i - 1] = k;
    return XPoly::monomial(nvars, e, Rat(1), ord);
}

XPoly divide_by_var_diff(const XPoly& f, int i) {
    XPoly d = XPoly::variable(f.nvars(), i, f.order()) -
              XPoly::variable(f.nvars(), i + 1, f.order());
    XPoly rem = f;
    XPoly quot(f.nvars(), f.order());
    const Expo& dl = d.lead_exp();
    const Rat& dc = d.lead_coeff();
    Expo m(f.nvars());
    while (!rem.is_zero()) {
        const Expo& rl = rem.lead_exp();
        for (int j = 0; j < f.nvars(); ++j) {
            m[j] = rl[j] - dl[j];
            if (m[j] < 0) throw DivisionFailure("divide_by_var_diff: not exact");
        }
        Rat c = rem.lead_coeff() / dc;
        quot.add_term(m, c);
        rem -= d.mul_term(m, c);
    }
    return quot;
}

} // namespace deltacalc
