#include "deltacalc/paths.hpp"

#include "deltacalc/errors.hpp"

#include <algorithm>
#include <functional>
#include <atomic>
#include <thread>

namespace deltacalc {

namespace {
std::atomic<int> g_jobs{1};
}

void set_jobs(int jobs) { g_jobs = std::max(1, jobs); }
int get_jobs() { return g_jobs.load(); }

LabeledPath LabeledPath::from_steps(const std::string& steps, const std::vector<int>& labels) {
    LabeledPath p;
    int north = 0, east = 0;
    for (char c : steps) {
        if (c == 'N' || c == 'n') {
            p.area_vec.push_back(north - east);
            ++north;
        } else if (c == 'E' || c == 'e') {
            ++east;
            if (east > north) throw BadParams("path sinks below the diagonal");
        } else {
            throw BadParams("path step must be N or E");
        }
    }
    if (north != east) throw BadParams("path must end on the diagonal");
    p.labels = labels;
    if (labels.size() != p.area_vec.size()) throw BadParams("one label per north step");
    for (size_t i = 1; i < p.area_vec.size(); ++i) {
        if (p.area_vec[i] == p.area_vec[i - 1] + 1 && labels[i] <= labels[i - 1])
            throw BadParams("labels must increase up vertical runs");
    }
    for (int l : labels)
        if (l <= 0) throw BadParams("labels must be positive");
    return p;
}

std::string LabeledPath::steps() const {
    std::string s;
    int east = 0;
    for (int i = 0; i < size(); ++i) {
        // before the i-th north step (row i+1), east steps so far = i - a_i
        int need = i - area_vec[i] - east;
        s.append(need, 'E');
        east += need;
        s.push_back('N');
    }
    s.append(size() - east, 'E');
    return s;
}

PathStats path_stats(const LabeledPath& p) {
    int n = p.size();
    PathStats st;
    st.a = p.area_vec;
    st.d.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        st.area += st.a[i];
        for (int j = i + 1; j < n; ++j) {
            if (st.a[i] == st.a[j] && p.labels[i] < p.labels[j]) ++st.d[i];
            if (st.a[i] == st.a[j] + 1 && p.labels[i] > p.labels[j]) ++st.d[i];
        }
        st.dinv += st.d[i];
    }
    for (int i = 1; i < n; ++i) {
        if (st.a[i] < st.a[i - 1] ||
            (st.a[i] == st.a[i - 1] && p.labels[i] > p.labels[i - 1]))
            st.val.insert(i + 1);
    }
    return st;
}

bool table_symmetric(const MonomialTable& t) {
    for (const auto& [e, c] : t) {
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        auto it = t.find(sorted);
        if (it == t.end() || !(it->second == c)) return false;
    }
    return true;
}

SymFunc table_to_symfunc(const MonomialTable& t, int degree) {
    if (!table_symmetric(t)) throw NotSymmetric();
    SymFunc m(degree, SfBasis::m);
    for (const auto& [e, c] : t) {
        bool sorted = true;
        for (size_t i = 1; i < e.size(); ++i)
            if (e[i] > e[i - 1]) {
                sorted = false;
                break;
            }
        if (!sorted) continue;
        Partition lam;
        for (int x : e)
            if (x > 0) lam.push_back(x);
        m.add(lam, c);
    }
    return convert(m, SfBasis::s);
}

MonomialTable table_eval(const MonomialTable& t, const std::optional<Rat>& at_q,
                         const std::optional<Rat>& at_t) {
    MonomialTable out;
    for (const auto& [e, c] : t) {
        QTRat v = c.eval(at_q, at_t);
        if (!v.is_zero()) out[e] = v;
    }
    return out;
}

MonomialTable table_swap_qt(const MonomialTable& t) {
    MonomialTable out;
    for (const auto& [e, c] : t) out[e] = c.swap_qt();
    return out;
}

namespace {

// all Dyck area vectors of size n
std::vector<std::vector<int>> area_vectors(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        int cap = cur[i - 1] + 1;
        for (int a = 0; a <= cap; ++a) {
            cur[i] = a;
            rec(i + 1);
        }
    };
    if (n == 0) return out;
    cur[0] = 0;
    rec(1);
    return out;
}

// run over labelings of one area vector; fn(labels, dvec, dinv)
template <typename F>
void for_labelings(const std::vector<int>& a, int max_label, bool standard_only, F&& fn) {
    int n = static_cast<int>(a.size());
    std::vector<int> labels(n, 0);
    std::vector<char> used(max_label + 1, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<int> d(n, 0);
            long dinv = 0;
            for (int x = 0; x < n; ++x) {
                for (int y = x + 1; y < n; ++y) {
                    if (a[x] == a[y] && labels[x] < labels[y]) ++d[x];
                    if (a[x] == a[y] + 1 && labels[x] > labels[y]) ++d[x];
                }
                dinv += d[x];
            }
            fn(labels, d, dinv);
            return;
        }
        int lo = 1;
        if (i > 0 && a[i] == a[i - 1] + 1) lo = labels[i - 1] + 1;
        for (int l = lo; l <= max_label; ++l) {
            if (standard_only && used[l]) continue;
            labels[i] = l;
            if (standard_only) used[l] = 1;
            rec(i + 1);
            if (standard_only) used[l] = 0;
        }
    };
    rec(0);
}

void table_add(MonomialTable& t, const std::vector<int>& e, const QTRat& c) {
    if (c.is_zero()) return;
    auto it = t.find(e);
    if (it == t.end()) {
        t[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

void table_merge(MonomialTable& into, const MonomialTable& from) {
    for (const auto& [e, c] : from) table_add(into, e, c);
}

std::vector<int> content_of(const std::vector<int>& labels, int n) {
    std::vector<int> c(n, 0);
    for (int l : labels) ++c[l - 1];
    return c;
}

// parallel map over area vectors with deterministic merge
MonomialTable accumulate_paths(int n, int max_label,
                               const std::function<void(const std::vector<int>&, MonomialTable&)>& per_path) {
    auto paths = area_vectors(n);
    int jobs = std::min<int>(get_jobs(), std::max<size_t>(paths.size(), 1));
    if (jobs <= 1) {
        MonomialTable t;
        for (const auto& a : paths) per_path(a, t);
        return t;
    }
    std::vector<MonomialTable> parts(jobs);
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            size_t i;
            while ((i = next.fetch_add(1)) < paths.size()) per_path(paths[i], parts[w]);
        });
    }
    for (auto& th : workers) th.join();
    MonomialTable t;
    for (const auto& part : parts) table_merge(t, part);
    return t;
}

} // namespace

MonomialTable shuffle_table(int n, int max_label) {
    return accumulate_paths(n, max_label, [&](const std::vector<int>& a, MonomialTable& t) {
        long area = 0;
        for (int x : a) area += x;
        for_labelings(a, max_label, false, [&](const std::vector<int>& labels,
                                               const std::vector<int>&, long dinv) {
            table_add(t, content_of(labels, n),
                      QTRat(QTPoly::monomial(static_cast<int>(area), static_cast<int>(dinv))));
        });
    });
}

SymFunc shuffle_rhs(int n) {
    return table_to_symfunc(shuffle_table(n, n), n);
}

MonomialTable rise_table(int n, int k, int max_label) {
    int pick = n - k;
    return accumulate_paths(n, max_label, [&](const std::vector<int>& a, MonomialTable& t) {
        long area = 0;
        for (int x : a) area += x;
        // z^{n-k} coefficient of prod over rises (1 + z t^{-a_i}): depends on
        // the path only
        std::vector<QTRat> e(pick + 1);
        e[0] = QTRat(1);
        for (int i = 1; i < n; ++i) {
            if (a[i] != a[i - 1] + 1) continue;
            QTRat v(QTPoly(Rat(1)), QTPoly::monomial(0, a[i])); // t^{-a_i}
            for (int j = pick; j >= 1; --j) e[j] += e[j - 1] * v;
        }
        if (e[pick].is_zero()) return;
        QTRat path_factor = e[pick] * QTRat(QTPoly::monomial(0, static_cast<int>(area)));
        std::map<std::vector<int>, QTPoly> qtab;
        for_labelings(a, max_label, false, [&](const std::vector<int>& labels,
                                               const std::vector<int>&, long dinv) {
            qtab[content_of(labels, n)] += QTPoly::monomial(static_cast<int>(dinv), 0);
        });
        for (const auto& [e2, qp] : qtab) table_add(t, e2, path_factor * QTRat(qp));
    });
}

SymFunc rise_rhs(int n, int k) {
    return table_to_symfunc(rise_table(n, k, n), n);
}

MonomialTable val_table(int n, int k, int max_label) {
    int pick = n - k;
    return accumulate_paths(n, max_label, [&](const std::vector<int>& a, MonomialTable& t) {
        long area = 0;
        for (int x : a) area += x;
        QTRat tprod(QTPoly::monomial(0, static_cast<int>(area)));
        for_labelings(a, max_label, false, [&](const std::vector<int>& labels,
                                               const std::vector<int>& d, long dinv) {
            // contractible valleys of this labeling
            std::vector<QTRat> e(pick + 1);
            e[0] = QTRat(1);
            for (int i = 1; i < n; ++i) {
                bool valley = a[i] < a[i - 1] || (a[i] == a[i - 1] && labels[i] > labels[i - 1]);
                if (!valley) continue;
                QTRat v(QTPoly(Rat(1)), QTPoly::monomial(d[i] + 1, 0)); // q^{-(d_i+1)}
                for (int j = pick; j >= 1; --j) e[j] += e[j - 1] * v;
            }
            if (e[pick].is_zero()) return;
            QTRat w = e[pick] * tprod * QTRat(QTPoly::monomial(static_cast<int>(dinv), 0));
            table_add(t, content_of(labels, n), w);
        });
    });
}

SymFunc val_rhs(int n, int k) {
    return table_to_symfunc(val_table(n, k, n), n);
}

QTPoly rise_squarefree_t0(int n, int k) {
    int pick = n - k;
    MonomialTable t = accumulate_paths(n, n, [&](const std::vector<int>& a, MonomialTable& tt) {
        long area = 0;
        for (int x : a) area += x;
        std::vector<QTRat> e(pick + 1);
        e[0] = QTRat(1);
        for (int i = 1; i < n; ++i) {
            if (a[i] != a[i - 1] + 1) continue;
            QTRat v(QTPoly(Rat(1)), QTPoly::monomial(0, a[i]));
            for (int j = pick; j >= 1; --j) e[j] += e[j - 1] * v;
        }
        if (e[pick].is_zero()) return;
        QTRat path_factor = e[pick] * QTRat(QTPoly::monomial(0, static_cast<int>(area)));
        QTPoly qsum;
        for_labelings(a, n, true, [&](const std::vector<int>&, const std::vector<int>&, long dinv) {
            qsum += QTPoly::monomial(static_cast<int>(dinv), 0);
        });
        if (qsum.is_zero()) return;
        std::vector<int> ones(n, 1);
        table_add(tt, ones, path_factor * QTRat(qsum));
    });
    std::vector<int> ones(n, 1);
    auto it = t.find(ones);
    if (it == t.end()) return QTPoly();
    QTRat v = it->second.eval(std::nullopt, Rat(0));
    if (!v.is_polynomial()) throw NotPolynomial("rise t=0 coefficient not polynomial");
    return v.num();
}

} // namespace deltacalc
