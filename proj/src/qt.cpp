#include "deltacalc/qt.hpp"

#include <algorithm>
#include <sstream>

namespace deltacalc {

namespace {

// dense univariate polynomial over Q, used for the t-layered gcd
struct UPoly {
    std::vector<Rat> c; // c[i] = coefficient of x^i

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lc() const { return c.back(); }
};

UPoly up_add(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

UPoly up_scale(const UPoly& a, const Rat& s) {
    if (s == 0) return {};
    UPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
    if (a.zero() || b.zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

// remainder of a by b (b nonzero), standard division over Q
UPoly up_rem(UPoly a, const UPoly& b) {
    while (!a.zero() && a.deg() >= b.deg()) {
        Rat f = a.lc() / b.lc();
        int shift = a.deg() - b.deg();
        for (int i = 0; i <= b.deg(); ++i) a.c[i + shift] -= f * b.c[i];
        a.trim();
    }
    return a;
}

// exact quotient a / b; caller guarantees divisibility
UPoly up_div_exact(UPoly a, const UPoly& b) {
    UPoly q;
    if (a.zero()) return q;
    q.c.assign(a.deg() - b.deg() + 1, Rat(0));
    while (!a.zero() && a.deg() >= b.deg()) {
        Rat f = a.lc() / b.lc();
        int shift = a.deg() - b.deg();
        q.c[shift] = f;
        for (int i = 0; i <= b.deg(); ++i) a.c[i + shift] -= f * b.c[i];
        a.trim();
    }
    return q;
}

UPoly up_monic(UPoly a) {
    if (a.zero()) return a;
    Rat l = a.lc();
    for (auto& x : a.c) x /= l;
    return a;
}

UPoly up_gcd(UPoly a, UPoly b) {
    while (!b.zero()) {
        UPoly r = up_rem(a, b);
        a = b;
        b = r;
    }
    return up_monic(a);
}

// QTPoly viewed as a polynomial in t with UPoly-in-q coefficients
using TLayers = std::map<int, UPoly>;

TLayers layers_of(const QTPoly& p) {
    TLayers l;
    for (const auto& [e, c] : p.terms()) {
        UPoly& u = l[e.second];
        if (static_cast<int>(u.c.size()) <= e.first) u.c.resize(e.first + 1, Rat(0));
        u.c[e.first] = c;
    }
    for (auto& [d, u] : l) u.trim();
    return l;
}

QTPoly poly_of(const TLayers& l) {
    QTPoly p;
    for (const auto& [dt, u] : l)
        for (size_t dq = 0; dq < u.c.size(); ++dq)
            if (u.c[dq] != 0) p.set(static_cast<int>(dq), dt, u.c[dq]);
    return p;
}

int t_deg(const TLayers& l) { return l.empty() ? -1 : l.rbegin()->first; }

TLayers t_scale(const TLayers& a, const UPoly& s, int tshift) {
    TLayers r;
    for (const auto& [d, u] : a) {
        UPoly m = up_mul(u, s);
        if (!m.zero()) r[d + tshift] = std::move(m);
    }
    return r;
}

TLayers t_sub(TLayers a, const TLayers& b) {
    for (const auto& [d, u] : b) {
        auto it = a.find(d);
        if (it == a.end()) {
            a[d] = up_scale(u, Rat(-1));
        } else {
            it->second = up_add(it->second, up_scale(u, Rat(-1)));
            if (it->second.zero()) a.erase(it);
        }
    }
    return a;
}

UPoly t_content(const TLayers& l) {
    UPoly g;
    for (const auto& [d, u] : l) g = up_gcd(g, u);
    return g;
}

TLayers t_div_content(const TLayers& l, const UPoly& g) {
    TLayers r;
    for (const auto& [d, u] : l) r[d] = up_div_exact(u, g);
    return r;
}

// pseudo-remainder in (Q[q])[t]
TLayers t_prem(TLayers a, const TLayers& b) {
    const UPoly& blc = b.rbegin()->second;
    int db = t_deg(b);
    while (!a.empty() && t_deg(a) >= db) {
        UPoly alc = a.rbegin()->second;
        int shift = t_deg(a) - db;
        // blc * a - alc * t^shift * b  kills the leading t-term
        a = t_sub(t_scale(a, blc, 0), t_scale(b, alc, shift));
    }
    return a;
}

} // namespace

QTPoly QTPoly::monomial(int dq, int dt, const Rat& c) {
    QTPoly p;
    if (c != 0) p.terms_[{dq, dt}] = c;
    return p;
}

bool QTPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0} &&
           terms_.begin()->second == 1;
}

int QTPoly::deg_q() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int QTPoly::deg_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

QTExp QTPoly::lead_exp() const { return terms_.rbegin()->first; }
Rat QTPoly::lead_coeff() const { return terms_.rbegin()->second; }

Rat QTPoly::coeff(int dq, int dt) const {
    auto it = terms_.find({dq, dt});
    return it == terms_.end() ? Rat(0) : it->second;
}

void QTPoly::set(int dq, int dt, const Rat& c) {
    if (c == 0)
        terms_.erase({dq, dt});
    else
        terms_[{dq, dt}] = c;
}

QTPoly QTPoly::operator-() const {
    QTPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) { return *this += -o; }

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            QTExp e{ea.first + eb.first, ea.second + eb.second};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = ca * cb;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

QTPoly& QTPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
}

QTPoly QTPoly::eval(const std::optional<Rat>& at_q, const std::optional<Rat>& at_t) const {
    QTPoly out;
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        int dq = e.first, dt = e.second;
        if (at_q) {
            Rat p(1);
            for (int i = 0; i < e.first; ++i) p *= *at_q;
            v *= p;
            dq = 0;
        }
        if (at_t) {
            Rat p(1);
            for (int i = 0; i < e.second; ++i) p *= *at_t;
            v *= p;
            dt = 0;
        }
        out += QTPoly::monomial(dq, dt, v);
    }
    return out;
}

QTPoly QTPoly::swap_qt() const {
    QTPoly r;
    for (const auto& [e, c] : terms_) r.set(e.second, e.first, c);
    return r;
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && (e.first > 0 || e.second > 0);
        if (!unit) os << rat_str(a);
        if (e.first > 0) {
            if (!unit) os << "*";
            os << "q";
            if (e.first > 1) os << "^" << e.first;
            unit = false;
        }
        if (e.second > 0) {
            if (!unit) os << "*";
            os << "t";
            if (e.second > 1) os << "^" << e.second;
        }
    }
    return os.str();
}

QTPoly qt_gcd(const QTPoly& a, const QTPoly& b) {
    auto normalize = [](const QTPoly& p) {
        if (p.is_zero()) return p;
        QTPoly r = p;
        r *= Rat(1) / p.lead_coeff();
        return r;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);

    TLayers la = layers_of(a), lb = layers_of(b);
    UPoly ca = t_content(la), cb = t_content(lb);
    TLayers pa = t_div_content(la, ca), pb = t_div_content(lb, cb);
    UPoly cg = up_gcd(ca, cb);

    // primitive Euclid in (Q[q])[t]
    while (!pb.empty()) {
        TLayers r = t_prem(pa, pb);
        pa = std::move(pb);
        if (r.empty()) {
            pb.clear();
        } else {
            UPoly cr = t_content(r);
            pb = t_div_content(r, cr);
        }
    }
    UPoly cpa = t_content(pa);
    TLayers prim = t_div_content(pa, cpa);
    QTPoly g = poly_of(t_scale(prim, cg, 0));
    return normalize(g);
}

QTPoly qt_div_exact(const QTPoly& a, const QTPoly& b) {
    if (b.is_zero()) throw DivisionFailure("qt_div_exact: division by zero");
    QTPoly rem = a, quot;
    while (!rem.is_zero()) {
        QTExp la = rem.lead_exp(), lb = b.lead_exp();
        int dq = la.first - lb.first, dt = la.second - lb.second;
        if (dq < 0 || dt < 0) throw DivisionFailure("qt_div_exact: not divisible");
        QTPoly m = QTPoly::monomial(dq, dt, rem.lead_coeff() / b.lead_coeff());
        quot += m;
        rem -= m * b;
    }
    return quot;
}

QTPoly rev_q(const QTPoly& f, int top_degree) {
    QTPoly r;
    for (const auto& [e, c] : f.terms()) {
        if (e.second != 0) throw NotUnivariate("rev_q: term involves t");
        if (e.first > top_degree) throw DegreeExceeded("rev_q: deg_q exceeds top_degree");
        r.set(top_degree - e.first, 0, c);
    }
    return r;
}

void QTRat::assign(const QTPoly& num, const QTPoly& den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) {
        num_ = QTPoly();
        den_ = QTPoly(Rat(1));
        return;
    }
    QTPoly g = qt_gcd(num, den);
    QTPoly n = qt_div_exact(num, g);
    QTPoly d = qt_div_exact(den, g);
    Rat l = d.lead_coeff();
    n *= Rat(1) / l;
    d *= Rat(1) / l;
    num_ = std::move(n);
    den_ = std::move(d);
}

QTRat qt_normalize(const QTPoly& num, const QTPoly& den) { return QTRat(num, den); }

QTRat QTRat::operator-() const {
    QTRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRat QTRat::inv() const {
    if (num_.is_zero()) throw ZeroDenominator("inverse of zero");
    return QTRat(den_, num_);
}

QTRat operator+(const QTRat& a, const QTRat& b) {
    return QTRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
QTRat operator-(const QTRat& a, const QTRat& b) {
    return QTRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
QTRat operator*(const QTRat& a, const QTRat& b) {
    return QTRat(a.num_ * b.num_, a.den_ * b.den_);
}
QTRat operator/(const QTRat& a, const QTRat& b) {
    if (b.num_.is_zero()) throw ZeroDenominator("division by zero");
    return QTRat(a.num_ * b.den_, a.den_ * b.num_);
}

QTRat QTRat::eval(const std::optional<Rat>& at_q, const std::optional<Rat>& at_t) const {
    QTPoly d = den_.eval(at_q, at_t);
    if (d.is_zero()) throw PoleAtPoint();
    return QTRat(num_.eval(at_q, at_t), d);
}

QTRat qt_eval(const QTRat& f, const std::optional<Rat>& at_q, const std::optional<Rat>& at_t) {
    return f.eval(at_q, at_t);
}

std::optional<Rat> QTRat::as_rat() const {
    if (!den_.is_one()) return std::nullopt;
    if (num_.is_zero()) return Rat(0);
    if (num_.terms().size() == 1 && num_.terms().begin()->first == QTExp{0, 0})
        return num_.terms().begin()->second;
    return std::nullopt;
}

std::string QTRat::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QTPoly q_int(int n) {
    QTPoly p;
    for (int i = 0; i < n; ++i) p += QTPoly::monomial(i, 0);
    return p;
}

QTPoly q_factorial(int n) {
    QTPoly p(Rat(1));
    for (int i = 1; i <= n; ++i) p *= q_int(i);
    return p;
}

QTPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) return QTPoly();
    return qt_div_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

QTPoly q_multinomial(int n, const std::vector<int>& parts) {
    QTPoly den(Rat(1));
    int total = 0;
    for (int a : parts) {
        den *= q_factorial(a);
        total += a;
    }
    if (total != n) throw BadParams("q_multinomial: parts don't sum to n");
    return qt_div_exact(q_factorial(n), den);
}

} // namespace deltacalc
