#ifndef UNIPOT_SYMBOLS_HPP
#define UNIPOT_SYMBOLS_HPP

/* Lusztig symbols: rank, defect, reduction, the delta statistic,
 * cuspidal and special symbols, the symbol attached to a partition
 * through its 2-core and 2-quotient, family enumeration and a_Z. */

#include "combinatorics.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unipot {

struct Symbol {
    BetaSet top;    /* first row */
    BetaSet bottom; /* second row */

    Symbol() = default;
    Symbol(BetaSet t, BetaSet b) : top(std::move(t)), bottom(std::move(b)) {}
    Symbol(std::initializer_list<int> t, std::initializer_list<int> b) : top(t), bottom(b) {}

    auto operator<=>(const Symbol&) const = default;
};

enum class SymbolFamily { Sp, OPlus, OMinus, UnitaryContext };

inline const char* family_name(SymbolFamily f)
{
    switch (f) {
    case SymbolFamily::Sp: return "Sp";
    case SymbolFamily::OPlus: return "OPlus";
    case SymbolFamily::OMinus: return "OMinus";
    case SymbolFamily::UnitaryContext: return "Unitary";
    }
    return "?";
}

inline int defect(const Symbol& s) { return s.top.size() - s.bottom.size(); }

inline int floor_quarter_square(int x) { return (x * x) / 4; }

inline int rank(const Symbol& s)
{
    int len = s.top.size() + s.bottom.size();
    /* floor(((len-1)/2)^2) with len-1 possibly -1 */
    return s.top.sum() + s.bottom.sum() - floor_quarter_square(len - 1);
}

inline Symbol transpose(const Symbol& s) { return Symbol(s.bottom, s.top); }

inline Symbol reduce(Symbol s)
{
    while (s.top.contains(0) && s.bottom.contains(0)) {
        s.top.entries.pop_back();
        s.bottom.entries.pop_back();
        for (int& x : s.top.entries)
            --x;
        for (int& x : s.bottom.entries)
            --x;
    }
    return s;
}

inline bool is_reduced(const Symbol& s) { return !(s.top.contains(0) && s.bottom.contains(0)); }

/* {a+1 : a in A} u {0} on both rows */
inline Symbol shift_up(const Symbol& s)
{
    auto up = [](const BetaSet& a) {
        std::vector<int> e;
        for (int x : a.entries)
            e.push_back(x + 1);
        e.push_back(0);
        return BetaSet(std::move(e));
    };
    return Symbol(up(s.top), up(s.bottom));
}

inline int delta_beta(const BetaSet& a) { return a.empty() ? 0 : a.entries.front() - a.size() + 1; }

inline int delta_symbol(const Symbol& s) { return delta_beta(s.top) + delta_beta(s.bottom); }

inline bool is_cuspidal_by_rank(const Symbol& s) { return rank(s) == floor_quarter_square(defect(s)); }

inline bool is_cuspidal(const Symbol& s)
{
    bool by_delta = delta_symbol(reduce(s)) == 0;
    if (by_delta != is_cuspidal_by_rank(s))
        throw std::logic_error("cuspidality tests disagree");
    return by_delta;
}

inline std::optional<SymbolFamily> family_of(const Symbol& s)
{
    int r = ((defect(s) % 4) + 4) % 4;
    if (r == 1)
        return SymbolFamily::Sp;
    if (r == 0)
        return SymbolFamily::OPlus;
    if (r == 2)
        return SymbolFamily::OMinus;
    return std::nullopt;
}

inline bool in_family(const Symbol& s, SymbolFamily f) { return family_of(s) == f; }

inline bool is_special(const Symbol& s)
{
    const auto& a = s.top.entries;
    const auto& b = s.bottom.entries;
    int d = defect(s);
    if (d != 0 && d != 1)
        return false;
    /* merged order a1 b1 a2 b2 ... must be weakly decreasing */
    std::vector<int> seq;
    for (std::size_t i = 0; i < a.size(); ++i) {
        seq.push_back(a[i]);
        if (i < b.size())
            seq.push_back(b[i]);
    }
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] > seq[i - 1])
            return false;
    return true;
}

inline Bipartition upsilon_symbol(const Symbol& s) { return {upsilon_beta(s.top), upsilon_beta(s.bottom)}; }

/* The reduced symbol of defect d whose Upsilon image is bip. */
inline Symbol symbol_of_bipartition(const Bipartition& bip, int d)
{
    int mb = std::max(bip.bottom.length(), bip.top.length() - d);
    int mt = mb + d;
    return reduce(Symbol(beta_of_partition(bip.top, mt), beta_of_partition(bip.bottom, mb)));
}

/* X = beta(l, len(l)); (X(0)|X(1)) when len(l) is odd, (X(1)|X(0)) otherwise. */
inline Symbol symbol_of_partition(const Partition& l)
{
    auto [x0, x1] = two_quotient_split(beta_of_partition(l, l.length()));
    if (l.length() % 2 == 1)
        return Symbol(x0, x1);
    return Symbol(x1, x0);
}

/* Defect of the symbol of l read off the parities of len(l) and len(core). */
inline int defect_vs_core(const Partition& l)
{
    int L = two_core(l).length();
    bool lodd = l.length() % 2 == 1;
    if (L % 2 == 0)
        return lodd ? L + 1 : L;
    return lodd ? -L : -L - 1;
}

namespace detail {
inline std::vector<int> staircase(int top)
{
    std::vector<int> v;
    for (int x = top; x >= 0; --x)
        v.push_back(x);
    return v;
}
} // namespace detail

/* The partition with 2-core of length d and 2-quotient bip (through the
 * symbol of the partition).  r = len(mu), s = len(nu). */
inline Partition partition_of_core_and_quotient(int d, const Bipartition& bip)
{
    if (d < 0)
        throw domain_error("core length must be non-negative");
    const Partition& mu = bip.top;
    const Partition& nu = bip.bottom;
    int r = mu.length(), s = nu.length();
    std::vector<int> x0, x1;
    auto push_rows = [](std::vector<int>& out, const Partition& p, int off) {
        for (int i = 1; i <= p.length(); ++i)
            out.push_back(p[i - 1] + off - i);
    };
    auto push_stair = [](std::vector<int>& out, int top) {
        for (int x : detail::staircase(top))
            out.push_back(x);
    };
    if (d % 2 == 0) {
        if (r - s > d) {
            push_rows(x0, mu, r);
            push_rows(x1, nu, r - d - 1);
            push_stair(x1, r - s - d - 2);
        } else {
            push_rows(x1, mu, s + d);
            push_stair(x1, s - r + d - 1);
            push_rows(x0, nu, s);
        }
    } else {
        if (r - s >= -d) {
            push_rows(x0, mu, r);
            push_rows(x1, nu, r + d);
            push_stair(x1, r - s + d - 1);
        } else {
            push_rows(x1, mu, s - d - 1);
            push_stair(x1, s - r - d - 2);
            push_rows(x0, nu, s);
        }
    }
    std::vector<int> x;
    for (int e : x0)
        x.push_back(2 * e);
    for (int e : x1)
        x.push_back(2 * e + 1);
    return upsilon_beta(BetaSet(std::move(x)));
}

/* Length of the 2-core of any partition whose symbol has defect d. */
inline int core_length_of_defect(int d) { return d >= 0 ? (d % 2 == 0 ? d : d - 1) : (-d % 2 == 1 ? -d : -d - 1); }

/* Inverse of symbol_of_partition on its image; nullopt when s is not of
 * the form symbol_of_partition(l). */
inline std::optional<Partition> partition_of_symbol(const Symbol& s)
{
    Symbol r = reduce(s);
    Partition l = partition_of_core_and_quotient(core_length_of_defect(defect(r)), upsilon_symbol(r));
    if (symbol_of_partition(l) != r)
        return std::nullopt;
    return l;
}

/* All reduced symbols of rank n and defect d, via bipartitions of
 * n - floor(d^2/4). */
inline std::vector<Symbol> enumerate_symbols(int n, int d)
{
    std::vector<Symbol> out;
    int k = n - floor_quarter_square(d);
    if (k < 0)
        return out;
    for (const auto& bip : bipartitions_of(k))
        out.push_back(symbol_of_bipartition(bip, d));
    return out;
}

/* Defects of a family ordered by |d|, positive before negative. */
inline std::vector<int> family_defects(int n, SymbolFamily f)
{
    int res = f == SymbolFamily::Sp ? 1 : f == SymbolFamily::OPlus ? 0 : 2;
    std::vector<int> out;
    for (int a = 0; floor_quarter_square(a) <= n; ++a) {
        for (int d : {a, -a}) {
            if (((d % 4) + 4) % 4 == res && (out.empty() || out.back() != d))
                out.push_back(d);
        }
    }
    return out;
}

inline std::vector<Symbol> enumerate_family(int n, SymbolFamily f)
{
    if (f == SymbolFamily::UnitaryContext)
        throw domain_error("enumerate_family needs Sp, OPlus or OMinus");
    std::vector<Symbol> out;
    for (int d : family_defects(n, f))
        for (auto& s : enumerate_symbols(n, d))
            out.push_back(std::move(s));
    return out;
}

/* Lambda_M = (Z minus M) with the rows of M swapped. */
inline Symbol lambda_of_subset(const Symbol& z, const Symbol& m)
{
    std::vector<int> t, b;
    for (int x : z.top.entries)
        if (!m.top.contains(x))
            t.push_back(x);
    for (int x : z.bottom.entries)
        if (!m.bottom.contains(x))
            b.push_back(x);
    for (int x : m.bottom.entries)
        t.push_back(x);
    for (int x : m.top.entries)
        b.push_back(x);
    return Symbol(BetaSet(std::move(t)), BetaSet(std::move(b)));
}

/* Entries occurring in exactly one row of z. */
inline Symbol singles(const Symbol& z)
{
    std::vector<int> t, b;
    for (int x : z.top.entries)
        if (!z.bottom.contains(x))
            t.push_back(x);
    for (int x : z.bottom.entries)
        if (!z.top.contains(x))
            b.push_back(x);
    return Symbol(BetaSet(std::move(t)), BetaSet(std::move(b)));
}

struct SpecialClosure {
    Symbol z;
    Symbol m; /* subset of the singles of z, rows as in z */
};

/* Re-interleaves the entries of s into the special symbol of defect 0 or
 * 1 and solves s = Lambda_M.  Equal entries in both rows split one per
 * row, the first copy going to the top. */
inline SpecialClosure special_closure(const Symbol& s0)
{
    Symbol s = reduce(s0);
    int d = defect(s);
    if (!(d % 2 == 0 || ((d % 4) + 4) % 4 == 1))
        throw domain_error("special_closure needs defect = 1 mod 4 or even defect");
    std::vector<int> all = s.top.entries;
    all.insert(all.end(), s.bottom.entries.begin(), s.bottom.entries.end());
    std::sort(all.begin(), all.end(), std::greater<int>());
    std::vector<int> t, b;
    for (std::size_t i = 0; i < all.size(); ++i)
        (i % 2 == 0 ? t : b).push_back(all[i]);
    Symbol z{BetaSet(t), BetaSet(b)};
    Symbol zi = singles(z);
    std::vector<int> mt, mb;
    for (int x : zi.top.entries)
        if (!s.top.contains(x))
            mt.push_back(x);
    for (int x : zi.bottom.entries)
        if (!s.bottom.contains(x))
            mb.push_back(x);
    Symbol m(BetaSet(std::move(mt)), BetaSet(std::move(mb)));
    if (lambda_of_subset(z, m) != s)
        throw std::logic_error("special_closure: no subset reproduces the symbol");
    return {z, m};
}

inline long long a_invariant(const Symbol& z)
{
    if (defect(z) != 1 || !is_special(z))
        throw domain_error("a_invariant needs a special symbol of defect 1");
    const auto& a = z.top.entries;
    const auto& b = z.bottom.entries;
    long long m = static_cast<long long>(b.size());
    long long sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            sum += std::min(a[i], a[j]);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            sum += std::min(b[i], b[j]);
    for (int x : a)
        for (int y : b)
            sum += std::min(x, y);
    return sum - m * (m - 1) * (4 * m + 1) / 6;
}

inline long long a_of_symbol(const Symbol& s) { return a_invariant(special_closure(s).z); }

/* ---- text syntax: "3,0|2", "-|2,1,0", "-|-" ---- */

inline std::string row_to_string(const BetaSet& a)
{
    if (a.empty())
        return "-";
    std::string s;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(a.entries[i]);
    }
    return s;
}

inline std::string to_string(const Symbol& s) { return row_to_string(s.top) + "|" + row_to_string(s.bottom); }

inline BetaSet parse_row(const std::string& r)
{
    if (r == "-" || r.empty())
        return BetaSet();
    std::vector<int> e;
    std::size_t pos = 0;
    for (;;) {
        std::size_t c = r.find(',', pos);
        std::string tok = r.substr(pos, c == std::string::npos ? std::string::npos : c - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw domain_error("bad symbol entry: '" + tok + "'");
        e.push_back(std::stoi(tok));
        if (c == std::string::npos)
            break;
        pos = c + 1;
    }
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (sorted != e)
        throw domain_error("symbol rows must be written in decreasing order: " + r);
    return BetaSet(std::move(e));
}

inline Symbol parse_symbol(std::string s)
{
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    auto bar = s.find('|');
    if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
        throw domain_error("symbol needs exactly one '|': " + s);
    return Symbol(parse_row(s.substr(0, bar)), parse_row(s.substr(bar + 1)));
}

} // namespace unipot

#endif
