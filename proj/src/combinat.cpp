#include "deltacalc/combinat.hpp"

#include "deltacalc/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace deltacalc {

OSP OSP::make(std::vector<std::vector<int>> blocks) {
    OSP s;
    s.blocks = std::move(blocks);
    s.k = static_cast<int>(s.blocks.size());
    std::set<int> seen;
    for (auto& b : s.blocks) {
        if (b.empty()) throw BadParams("OSP: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x <= 0 || !seen.insert(x).second) throw BadParams("OSP: not disjoint");
        }
    }
    s.n = static_cast<int>(seen.size());
    if (*seen.rbegin() != s.n) throw BadParams("OSP: union must be [n]");
    return s;
}

std::string OSP::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << "|";
        for (size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) os << " ";
            os << blocks[b][i];
        }
    }
    os << ")";
    return os.str();
}

FubiniWord FubiniWord::make(std::vector<int> letters) {
    FubiniWord w;
    w.letters = std::move(letters);
    int k = 0;
    for (int x : w.letters) {
        if (x <= 0) throw BadParams("FubiniWord: letters must be positive");
        k = std::max(k, x);
    }
    std::vector<bool> seen(k, false);
    for (int x : w.letters) seen[x - 1] = true;
    for (bool b : seen)
        if (!b) throw BadParams("FubiniWord: not surjective");
    w.k = k;
    return w;
}

OSP word_to_osp(const FubiniWord& w) {
    std::vector<std::vector<int>> blocks(w.k);
    for (size_t i = 0; i < w.letters.size(); ++i)
        blocks[w.letters[i] - 1].push_back(static_cast<int>(i) + 1);
    return OSP::make(std::move(blocks));
}

FubiniWord osp_to_word(const OSP& s) {
    std::vector<int> letters(s.n, 0);
    for (int b = 0; b < s.k; ++b)
        for (int x : s.blocks[b]) letters[x - 1] = b + 1;
    return FubiniWord::make(std::move(letters));
}

// inversion pair: b minimal in its block, a in a strictly earlier block, a > b
long osp_inv(const OSP& s) {
    long c = 0;
    for (int j = 0; j < s.k; ++j) {
        int b = s.blocks[j][0];
        for (int i = 0; i < j; ++i)
            for (int a : s.blocks[i])
                if (a > b) ++c;
    }
    return c;
}

long osp_coinv(const OSP& s) {
    long c = 0;
    for (int j = 0; j < s.k; ++j) {
        int b = s.blocks[j][0];
        for (int i = 0; i < j; ++i)
            for (int a : s.blocks[i])
                if (a < b) ++c;
        // non-minimal letters in blocks strictly to the right of b's block
        for (int i = j + 1; i < s.k; ++i)
            c += static_cast<long>(s.blocks[i].size()) - 1;
    }
    return c;
}

Code code_of(const OSP& s) {
    Code c(s.n, 0);
    std::vector<int> block_of(s.n + 1, 0);
    for (int b = 0; b < s.k; ++b)
        for (int x : s.blocks[b]) block_of[x] = b;
    for (int i = 1; i <= s.n; ++i) {
        int l = block_of[i];
        int right = 0;
        for (int j = l + 1; j < s.k; ++j)
            if (s.blocks[j][0] > i) ++right;
        c[i - 1] = (i == s.blocks[l][0]) ? right : l + right;
    }
    return c;
}

Code code_perm(const std::vector<int>& w) {
    // entry c_i is indexed by the value i: letters larger than i standing to
    // the right of i in one-line notation (the code of ({w(1)}|...|{w(n)}))
    int n = static_cast<int>(w.size());
    std::vector<int> pos(n + 1, 0);
    for (int p = 0; p < n; ++p) pos[w[p]] = p;
    Code c(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int p = pos[i] + 1; p < n; ++p)
            if (w[p] > i) ++c[i - 1];
    return c;
}

OSP iota(const Code& c, int n, int k) {
    if (static_cast<int>(c.size()) != n) throw BadParams("iota: length mismatch");
    if (!is_substaircase(c, n, k)) throw NotSubstaircase();
    std::vector<std::vector<int>> blocks(k);
    for (int i = 1; i <= n; ++i) {
        // coinversion labels, as in the worked insertion tables: empty sets
        // carry 0..j-1 from right to left, nonempty sets j..k-1 left to right
        std::vector<int> label(k, -1);
        int next = 0;
        for (int b = k - 1; b >= 0; --b)
            if (blocks[b].empty()) label[b] = next++;
        for (int b = 0; b < k; ++b)
            if (!blocks[b].empty()) label[b] = next++;
        int target = -1;
        for (int b = 0; b < k; ++b)
            if (label[b] == c[i - 1]) {
                target = b;
                break;
            }
        if (target < 0) throw NotSubstaircase("iota: no slot with required label");
        blocks[target].push_back(i);
    }
    for (const auto& b : blocks)
        if (b.empty()) throw NotSubstaircase("iota: empty block remains");
    return OSP::make(std::move(blocks));
}

std::vector<int> iota_perm(const Code& c) {
    // with k = n every block is a singleton; slot j holds w(j)
    int n = static_cast<int>(c.size());
    OSP s = iota(c, n, n);
    std::vector<int> w(n);
    for (int b = 0; b < n; ++b) w[b] = s.blocks[b][0];
    return w;
}

Code skip_sequence(const std::vector<int>& S, int n) {
    Code g(n, 0);
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    for (size_t j = 0; j < sorted.size(); ++j) {
        int i = sorted[j];
        if (i < 1 || i > n) throw BadParams("skip_sequence: element out of range");
        g[i - 1] = i - static_cast<int>(j);
    }
    return g;
}

bool is_nonskip(const Code& c, int n, int k) {
    for (int x : c)
        if (x >= k || x < 0) return false;
    // exists S, |S| = n-k+1, with gamma(S) <= reverse(c)?  DP over positions
    int need = n - k + 1;
    if (need <= 0) return true;
    std::vector<int> d(c.rbegin(), c.rend());
    std::vector<std::vector<char>> feas(n + 1, std::vector<char>(need + 1, 0));
    feas[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j <= need; ++j) {
            if (feas[i - 1][j]) feas[i][j] = 1;
            if (j >= 1 && feas[i - 1][j - 1] && i - j + 1 <= d[i - 1]) feas[i][j] = 1;
        }
    }
    return !feas[n][need];
}

std::vector<Code> staircases(int n, int k) {
    // shuffles of (k-1, ..., 1, 0) with n-k copies of k-1
    std::set<Code> out;
    std::vector<int> stair(k);
    for (int i = 0; i < k; ++i) stair[i] = k - 1 - i;
    // choose positions of the staircase part
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    // iterate over k-subsets of [n]
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        Code c(n, k - 1);
        for (int i = 0; i < k; ++i) c[comb[i]] = stair[i];
        out.insert(c);
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return std::vector<Code>(out.begin(), out.end());
}

bool is_substaircase(const Code& c, int n, int k) {
    if (static_cast<int>(c.size()) != n) return false;
    for (const auto& st : staircases(n, k)) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (c[i] > st[i]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

namespace {
void fubini_rec(int n, int k, int pos, int used, std::vector<int>& cur,
                std::vector<FubiniWord>& out) {
    if (pos == n) {
        FubiniWord w;
        w.letters = cur;
        w.k = k;
        out.push_back(std::move(w));
        return;
    }
    int missing = k - used;
    if (n - pos < missing) return;
    for (int l = 1; l <= k; ++l) {
        bool fresh = true;
        for (int i = 0; i < pos; ++i)
            if (cur[i] == l) {
                fresh = false;
                break;
            }
        cur[pos] = l;
        fubini_rec(n, k, pos + 1, used + (fresh ? 1 : 0), cur, out);
    }
    cur[pos] = 0;
}
} // namespace

std::vector<FubiniWord> fubini_words(int n, int k) {
    std::vector<FubiniWord> out;
    if (k > n || k < 1) return out;
    std::vector<int> cur(n, 0);
    fubini_rec(n, k, 0, 0, cur, out);
    return out;
}

std::vector<OSP> all_osps(int n, int k) {
    std::vector<OSP> out;
    for (const auto& w : fubini_words(n, k)) out.push_back(word_to_osp(w));
    return out;
}

namespace {
void substair_rec(int n, int k, int pos, std::vector<const Code*>& live, std::vector<int>& cur,
                  std::vector<Code>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    int cap = 0;
    for (const Code* st : live) cap = std::max(cap, (*st)[pos]);
    for (int v = 0; v <= cap; ++v) {
        std::vector<const Code*> next;
        for (const Code* st : live)
            if ((*st)[pos] >= v) next.push_back(st);
        if (next.empty()) continue;
        cur[pos] = v;
        std::swap(live, next);
        substair_rec(n, k, pos + 1, live, cur, out);
        std::swap(live, next);
    }
    cur[pos] = 0;
}
} // namespace

std::vector<Code> substaircase_codes(int n, int k) {
    auto sts = staircases(n, k);
    std::vector<const Code*> live;
    for (const auto& s : sts) live.push_back(&s);
    std::vector<int> cur(n, 0);
    std::vector<Code> out;
    substair_rec(n, k, 0, live, cur, out);
    return out;
}

QTPoly q_stirling(int n, int k) {
    if (n < 1 || k < 0 || k > n) {
        if (n >= 0 && k == 0) return n == 0 ? QTPoly(Rat(1)) : QTPoly();
        return QTPoly();
    }
    static std::map<std::pair<int, int>, QTPoly> memo;
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    QTPoly r;
    if (n == 1) {
        r = (k == 1) ? QTPoly(Rat(1)) : QTPoly();
    } else {
        r = q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k);
    }
    memo[{n, k}] = r;
    return r;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int stirling2(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    std::vector<std::vector<Int>> s(n + 1, std::vector<Int>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = s[i - 1][j - 1] + Int(j) * s[i - 1][j];
    return s[n][k];
}

Int count_osp_nls(int n, const std::vector<int>& lambda, int s) {
    // sum over compositions (b_1..b_s), b_i >= lambda_i, sum = n, of n!/(prod b_i!)
    std::vector<int> lam = lambda;
    lam.resize(s, 0);
    Int total = 0;
    std::vector<int> b(s, 0);
    Int nfact = factorial(n);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == s) {
            if (rem == 0) {
                Int den = 1;
                for (int x : b) den *= factorial(x);
                total += nfact / den;
            }
            return;
        }
        for (int v = lam[i]; v <= rem; ++v) {
            b[i] = v;
            rec(i + 1, rem - v);
        }
    };
    rec(0, n);
    return total;
}

} // namespace deltacalc
