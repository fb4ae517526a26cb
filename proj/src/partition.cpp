#include "deltacalc/partition.hpp"

#include <algorithm>
#include <sstream>

namespace deltacalc {

bool partition_valid(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.resize(p[0]);
    for (int i = 0; i < p[0]; ++i) {
        int cnt = 0;
        for (int part : p)
            if (part > i) ++cnt;
        c[i] = cnt;
    }
    return c;
}

bool dominates(const Partition& lam, const Partition& mu) {
    size_t m = std::max(lam.size(), mu.size());
    long a = 0, b = 0;
    for (size_t i = 0; i < m; ++i) {
        a += i < lam.size() ? lam[i] : 0;
        b += i < mu.size() ? mu[i] : 0;
        if (a < b) return false;
    }
    return a == b;
}

namespace {
void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int first = std::min(n, maxpart); first >= 1; --first) {
        cur.push_back(first);
        gen_partitions(n - first, first, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

long kappa(const Partition& p) {
    long s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += static_cast<long>(i) * p[i];
    return s;
}

std::vector<int> part_multiplicities(const Partition& p, int n) {
    std::vector<int> m(n + 1, 0);
    for (int x : p)
        if (x <= n) ++m[x];
    return m;
}

Int z_mu(const Partition& mu) {
    int n = partition_size(mu);
    auto m = part_multiplicities(mu, n);
    Int z = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j < m[i]; ++j) z *= i;
        for (int j = 2; j <= m[i]; ++j) z *= j;
    }
    return z;
}

std::vector<int> cycle_type_representative(const Partition& mu, int n) {
    std::vector<int> w(n);
    int pos = 0;
    for (int part : mu) {
        // cycle (pos+1, pos+2, ..., pos+part)
        for (int i = 0; i < part; ++i) w[pos + i] = pos + 1 + ((i + 1) % part);
        pos += part;
    }
    for (; pos < n; ++pos) w[pos] = pos + 1;
    return w;
}

bool RevLexLess::operator()(const Partition& a, const Partition& b) const {
    size_t m = std::max(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
        int ai = i < a.size() ? a[i] : 0;
        int bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai > bi;
    }
    return false;
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

} // namespace deltacalc
