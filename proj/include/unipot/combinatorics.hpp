#ifndef UNIPOT_COMBINATORICS_HPP
#define UNIPOT_COMBINATORICS_HPP

/* Partitions, beta-sets, the Upsilon map, the shifted containment
 * relation and 2-core / 2-quotient machinery. */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unipot {

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Weakly decreasing positive parts, no trailing zeros. */
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}
    explicit Partition(std::vector<int> p) : parts(std::move(p))
    {
        while (!parts.empty() && parts.back() == 0)
            parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0)
                throw domain_error("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw domain_error("partition parts must be weakly decreasing");
        }
    }

    int size() const
    {
        int s = 0;
        for (int p : parts)
            s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    /* zero-padded access */
    int operator[](std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

    auto operator<=>(const Partition&) const = default;
};

/* Strictly decreasing non-negative entries. */
struct BetaSet {
    std::vector<int> entries;

    BetaSet() = default;
    BetaSet(std::initializer_list<int> e) : BetaSet(std::vector<int>(e)) {}
    explicit BetaSet(std::vector<int> e) : entries(std::move(e))
    {
        std::sort(entries.begin(), entries.end(), std::greater<int>());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i] < 0)
                throw domain_error("beta-set entries must be non-negative");
            if (i > 0 && entries[i] == entries[i - 1])
                throw domain_error("beta-set entries must be distinct");
        }
    }

    int size() const { return static_cast<int>(entries.size()); }
    bool empty() const { return entries.empty(); }
    bool contains(int x) const
    {
        return std::binary_search(entries.begin(), entries.end(), x, std::greater<int>());
    }
    int sum() const
    {
        int s = 0;
        for (int x : entries)
            s += x;
        return s;
    }

    auto operator<=>(const BetaSet&) const = default;
};

struct Bipartition {
    Partition top;
    Partition bottom;

    int size() const { return top.size() + bottom.size(); }
    auto operator<=>(const Bipartition&) const = default;
};

inline Partition transpose_partition(const Partition& l)
{
    std::vector<int> t;
    int first = l.empty() ? 0 : l.parts[0];
    for (int j = 1; j <= first; ++j) {
        int c = 0;
        for (int p : l.parts)
            if (p >= j)
                ++c;
        t.push_back(c);
    }
    return Partition(std::move(t));
}

/* l <= m iff m_i - 1 <= l_i <= m_i at every (zero-padded) index */
inline bool shift_le(const Partition& l, const Partition& m)
{
    std::size_t n = std::max(l.parts.size(), m.parts.size());
    for (std::size_t i = 0; i < n; ++i)
        if (l[i] > m[i] || l[i] < m[i] - 1)
            return false;
    return true;
}

inline Partition upsilon_beta(const BetaSet& a)
{
    std::vector<int> p;
    int m = a.size();
    for (int i = 0; i < m; ++i)
        p.push_back(a.entries[i] - (m - 1 - i));
    return Partition(std::move(p));
}

inline BetaSet beta_of_partition(const Partition& l, int m)
{
    if (m < l.length())
        throw domain_error("beta-set length shorter than the partition");
    std::vector<int> e;
    for (int i = 0; i < m; ++i)
        e.push_back(l[i] + (m - 1 - i));
    return BetaSet(std::move(e));
}

/* Removes 2-hooks from X (largest first) until none is left. */
inline BetaSet remove_two_hooks(BetaSet x)
{
    for (;;) {
        bool moved = false;
        for (int& e : x.entries) {
            if (e >= 2 && !x.contains(e - 2)) {
                e -= 2;
                std::sort(x.entries.begin(), x.entries.end(), std::greater<int>());
                moved = true;
                break;
            }
        }
        if (!moved)
            return x;
    }
}

inline Partition two_core(const Partition& l)
{
    return upsilon_beta(remove_two_hooks(beta_of_partition(l, l.length())));
}

inline std::pair<BetaSet, BetaSet> two_quotient_split(const BetaSet& x)
{
    std::vector<int> even, odd;
    for (int e : x.entries)
        (e % 2 == 0 ? even : odd).push_back(e / 2);
    return {BetaSet(std::move(even)), BetaSet(std::move(odd))};
}

/* Interleaving criterion for Upsilon(A)^t <= Upsilon(B)^t.  The two
 * conditions depend on the actual lengths of A and B:
 *   |B| = |A|:     b1 >= a1 > b2 >= a2 > ... > bm >= am
 *   |B| = |A|+1:   b1 > a1 >= b2 > a2 >= ... >= bm > am >= b(m+1) */
inline bool beta_shift_le(const BetaSet& A, const BetaSet& B)
{
    const auto& a = A.entries;
    const auto& b = B.entries;
    std::size_t m = a.size();
    if (b.size() == m) {
        for (std::size_t i = 0; i < m; ++i) {
            if (!(b[i] >= a[i]))
                return false;
            if (i + 1 < m && !(a[i] > b[i + 1]))
                return false;
        }
        return true;
    }
    if (b.size() == m + 1) {
        for (std::size_t i = 0; i < m; ++i)
            if (!(b[i] > a[i] && a[i] >= b[i + 1]))
                return false;
        return true;
    }
    return false;
}

inline std::string to_string(const Partition& l)
{
    std::string s = "[";
    for (std::size_t i = 0; i < l.parts.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(l.parts[i]);
    }
    return s + "]";
}

/* Accepts "[2,1]", "2,1", "[]", "" or "-". */
inline Partition parse_partition(std::string s)
{
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw domain_error("unbalanced brackets in partition: " + s);
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> p;
    if (s.empty() || s == "-")
        return Partition();
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t c = s.find(',', pos);
        std::string tok = s.substr(pos, c == std::string::npos ? std::string::npos : c - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw domain_error("bad partition token: '" + tok + "'");
        p.push_back(std::stoi(tok));
        if (c == std::string::npos)
            break;
        pos = c + 1;
    }
    return Partition(std::move(p));
}

/* All partitions of n, parts in reverse lexicographic order
 * ([n] first, [1,...,1] last). */
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/* Bipartitions of n, top size descending, each row in partitions_of order. */
inline std::vector<Bipartition> bipartitions_of(int n)
{
    std::vector<Bipartition> out;
    for (int k = n; k >= 0; --k)
        for (const auto& t : partitions_of(k))
            for (const auto& b : partitions_of(n - k))
                out.push_back({t, b});
    return out;
}

} // namespace unipot

#endif
