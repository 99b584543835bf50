#ifndef UNIPOT_CORRESPONDENCE_HPP
#define UNIPOT_CORRESPONDENCE_HPP

/* The relations B+ and B- on symbols, their symplectic-orthogonal and
 * unitary refinements, unipotent Weil-decomposition tables and the
 * minimal-rank partners theta_0 that give first occurrence. */

#include "symbols.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace unipot {

enum class Sign : int { Plus = 1, Minus = -1 };

inline Sign operator*(Sign a, Sign b) { return static_cast<int>(a) * static_cast<int>(b) > 0 ? Sign::Plus : Sign::Minus; }
inline Sign operator-(Sign a) { return a == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Sign sign_of_parity(long long k) { return k % 2 == 0 ? Sign::Plus : Sign::Minus; }
inline const char* sign_text(Sign s) { return s == Sign::Plus ? "+" : "-"; }
inline SymbolFamily o_family(Sign e) { return e == Sign::Plus ? SymbolFamily::OPlus : SymbolFamily::OMinus; }

inline bool in_b_plus(const Symbol& l0, const Symbol& r0)
{
    Symbol l = reduce(l0), r = reduce(r0);
    return beta_shift_le(l.bottom, r.top) && beta_shift_le(r.bottom, l.top);
}

inline bool in_b_minus(const Symbol& l0, const Symbol& r0)
{
    Symbol l = reduce(l0), r = reduce(r0);
    return beta_shift_le(l.top, r.bottom) && beta_shift_le(r.top, l.bottom);
}

inline bool in_b(const Symbol& l, const Symbol& r, Sign e) { return e == Sign::Plus ? in_b_plus(l, r) : in_b_minus(l, r); }

inline bool in_b_sp_o(const Symbol& l, const Symbol& r, Sign e)
{
    return in_family(l, SymbolFamily::Sp) && in_family(r, o_family(e)) && in_b(l, r, e);
}

/* Allowed defects of the right-hand symbol in the unitary relations. */
inline bool uu_defect_ok(int d, int dp, Sign e)
{
    bool even = d % 2 == 0;
    if (e == Sign::Plus)
        return even ? (dp == -d || dp == -d + 1) : (dp == -d + 1 || dp == -d + 2);
    return even ? (dp == -d - 2 || dp == -d - 1) : (dp == -d - 1 || dp == -d);
}

inline std::optional<Sign> in_b_uu_symbols(const Symbol& l, const Symbol& r)
{
    int d = defect(l), dp = defect(r);
    if (uu_defect_ok(d, dp, Sign::Plus) && in_b_plus(l, r))
        return Sign::Plus;
    if (uu_defect_ok(d, dp, Sign::Minus) && in_b_minus(l, r))
        return Sign::Minus;
    return std::nullopt;
}

inline std::optional<Sign> in_b_uu(const Partition& l, const Partition& lp)
{
    return in_b_uu_symbols(symbol_of_partition(l), symbol_of_partition(lp));
}

enum class PairKind { SpOPlus, SpOMinus, UnitaryPlus, UnitaryMinus };

inline const char* pair_kind_name(PairKind k)
{
    switch (k) {
    case PairKind::SpOPlus: return "SpOPlus";
    case PairKind::SpOMinus: return "SpOMinus";
    case PairKind::UnitaryPlus: return "UnitaryPlus";
    case PairKind::UnitaryMinus: return "UnitaryMinus";
    }
    return "?";
}

struct CorrespondencePair {
    Symbol left;
    Symbol right;
    PairKind kind;
    /* set for the unitary kinds: the partitions behind left and right */
    std::optional<Partition> left_partition;
    std::optional<Partition> right_partition;
};

inline std::vector<CorrespondencePair> weil_unipotent_pairs(int n, int np, PairKind kind)
{
    std::vector<CorrespondencePair> out;
    if (kind == PairKind::SpOPlus || kind == PairKind::SpOMinus) {
        Sign e = kind == PairKind::SpOPlus ? Sign::Plus : Sign::Minus;
        auto lefts = enumerate_family(n, SymbolFamily::Sp);
        auto rights = enumerate_family(np, o_family(e));
        for (const auto& l : lefts)
            for (const auto& r : rights)
                if (in_b(l, r, e))
                    out.push_back({l, r, kind, std::nullopt, std::nullopt});
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return std::pair(to_string(a.left), to_string(a.right)) < std::pair(to_string(b.left), to_string(b.right));
        });
    } else {
        Sign e = kind == PairKind::UnitaryPlus ? Sign::Plus : Sign::Minus;
        for (const auto& l : partitions_of(n))
            for (const auto& r : partitions_of(np))
                if (in_b_uu(l, r) == e)
                    out.push_back({symbol_of_partition(l), symbol_of_partition(r), kind, l, r});
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return std::pair(to_string(*a.left_partition), to_string(*a.right_partition))
                < std::pair(to_string(*b.left_partition), to_string(*b.right_partition));
        });
    }
    return out;
}

/* Row formula shared by theta_0 on both sides; rows a (top), b (bottom).
 *   +:  (b1..b_m2 | a2..a_m1)          if m1 > 0
 *       (b1+1, .., b_m2+1, 0 | -)      if m1 = 0
 *   -:  (b2..b_m2 | a1..a_m1)          if m2 > 0
 *       (- | a1+1, .., a_m1+1, 0)      if m2 = 0 */
inline Symbol theta0_formula(const Symbol& s0, Sign e)
{
    Symbol s = reduce(s0);
    const auto& a = s.top.entries;
    const auto& b = s.bottom.entries;
    auto bump = [](const std::vector<int>& v) {
        std::vector<int> o;
        for (int x : v)
            o.push_back(x + 1);
        o.push_back(0);
        return BetaSet(std::move(o));
    };
    if (e == Sign::Plus) {
        if (!a.empty())
            return reduce(Symbol(BetaSet(b), BetaSet(std::vector<int>(a.begin() + 1, a.end()))));
        return reduce(Symbol(bump(b), BetaSet()));
    }
    if (!b.empty())
        return reduce(Symbol(BetaSet(std::vector<int>(b.begin() + 1, b.end())), BetaSet(a)));
    return reduce(Symbol(BetaSet(), bump(a)));
}

inline Symbol theta0_sp(const Symbol& s, Sign e)
{
    if (!in_family(s, SymbolFamily::Sp))
        throw domain_error("theta0_sp needs a symbol in the Sp family");
    return theta0_formula(s, e);
}

inline Sign o_sign_of(const Symbol& s)
{
    auto f = family_of(s);
    if (f == SymbolFamily::OPlus)
        return Sign::Plus;
    if (f == SymbolFamily::OMinus)
        return Sign::Minus;
    throw domain_error("symbol is not in an even orthogonal family: " + to_string(s));
}

inline Symbol theta0_even_o(const Symbol& s) { return theta0_formula(s, o_sign_of(s)); }

enum class Tower { OPlus, OMinus, SpFromOEven };

/* Dimension of the first partner space: 2 rank(theta_0). */
inline int first_occurrence_unipotent(const Symbol& s, Tower t)
{
    switch (t) {
    case Tower::OPlus: return 2 * rank(theta0_sp(s, Sign::Plus));
    case Tower::OMinus: return 2 * rank(theta0_sp(s, Sign::Minus));
    case Tower::SpFromOEven: return 2 * rank(theta0_even_o(s));
    }
    return -1;
}

/* Lazily filled per-rank family lists for brute-force searches. */
class FamilyTable {
public:
    const std::vector<Symbol>& get(int n, SymbolFamily f)
    {
        auto key = std::pair(n, static_cast<int>(f));
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, enumerate_family(n, f)).first;
        return it->second;
    }

private:
    std::map<std::pair<int, int>, std::vector<Symbol>> cache_;
};

struct MinimalPartners {
    int rank = -1; /* -1 when none was found up to the cap */
    std::vector<Symbol> symbols;
};

/* Scans partner ranks upward and returns every partner at the first rank
 * where one exists. */
template <class Pred>
MinimalPartners minimal_partners(FamilyTable& table, SymbolFamily target, int max_rank, Pred related)
{
    MinimalPartners out;
    for (int r = 0; r <= max_rank; ++r) {
        for (const auto& c : table.get(r, target))
            if (related(c))
                out.symbols.push_back(c);
        if (!out.symbols.empty()) {
            out.rank = r;
            return out;
        }
    }
    return out;
}

inline MinimalPartners theta0_sp_search(FamilyTable& table, const Symbol& s, Sign e, int max_rank)
{
    return minimal_partners(table, o_family(e), max_rank, [&](const Symbol& c) { return in_b_sp_o(s, c, e); });
}

inline MinimalPartners theta0_even_o_search(FamilyTable& table, const Symbol& s, int max_rank)
{
    Sign e = o_sign_of(s);
    return minimal_partners(table, SymbolFamily::Sp, max_rank, [&](const Symbol& c) { return in_b_sp_o(c, s, e); });
}

/* Partitions with their symbols, grouped by size. */
class PartitionTable {
public:
    struct Entry {
        Partition partition;
        Symbol symbol;
    };
    const std::vector<Entry>& get(int n)
    {
        while (static_cast<int>(rows_.size()) <= n) {
            std::vector<Entry> row;
            for (auto& p : partitions_of(static_cast<int>(rows_.size())))
                row.push_back({p, symbol_of_partition(p)});
            rows_.push_back(std::move(row));
        }
        return rows_[n];
    }

private:
    std::vector<std::vector<Entry>> rows_;
};

struct UnitaryFirstOccurrence {
    int even = -1; /* smallest even size of a partner */
    int odd = -1;  /* smallest odd size of a partner */
};

/* Brute force over partner partitions of increasing size. */
inline UnitaryFirstOccurrence unitary_first_occurrence(const Partition& l, PartitionTable& table)
{
    UnitaryFirstOccurrence out;
    Symbol s = symbol_of_partition(l);
    int cap = 2 * l.size() + 5;
    for (int np = 0; np <= cap && (out.even < 0 || out.odd < 0); ++np) {
        int& slot = np % 2 == 0 ? out.even : out.odd;
        if (slot >= 0)
            continue;
        for (const auto& e : table.get(np)) {
            if (in_b_uu_symbols(s, e.symbol)) {
                slot = np;
                break;
            }
        }
    }
    return out;
}

inline UnitaryFirstOccurrence unitary_first_occurrence(const Partition& l)
{
    PartitionTable t;
    return unitary_first_occurrence(l, t);
}

/* Minimal partner of l on one side: theta0_formula(Lambda_l, e) need not
 * be the symbol of a partition, but the partition with the same 2-core
 * length and 2-quotient is, and it has the same size. */
inline Partition unitary_theta0(const Partition& l, Sign e)
{
    Symbol t = theta0_formula(symbol_of_partition(l), e);
    return partition_of_core_and_quotient(core_length_of_defect(defect(t)), upsilon_symbol(t));
}

inline UnitaryFirstOccurrence unitary_first_occurrence_closed(const Partition& l)
{
    UnitaryFirstOccurrence out;
    for (Sign e : {Sign::Plus, Sign::Minus}) {
        int n = unitary_theta0(l, e).size();
        (n % 2 == 0 ? out.even : out.odd) = n;
    }
    if (out.even < 0 || out.odd < 0)
        throw std::logic_error("unitary theta_0 partners have equal parity");
    return out;
}

inline std::vector<Symbol> cuspidal_symbol(SymbolFamily f, int m)
{
    if (m < 0)
        throw domain_error("cuspidal_symbol needs m >= 0");
    auto stair = [](int top) { return BetaSet(detail::staircase(top)); };
    switch (f) {
    case SymbolFamily::Sp:
        /* defect 2m+1 for m even, -(2m+1) for m odd */
        if (m % 2 == 0)
            return {Symbol(stair(2 * m), BetaSet())};
        return {Symbol(BetaSet(), stair(2 * m))};
    case SymbolFamily::OPlus:
    case SymbolFamily::OMinus: {
        Sign want = f == SymbolFamily::OPlus ? Sign::Plus : Sign::Minus;
        if (sign_of_parity(m) != want)
            return {};
        if (m == 0)
            return {Symbol()};
        Symbol c(stair(2 * m - 1), BetaSet());
        return {c, transpose(c)};
    }
    case SymbolFamily::UnitaryContext: {
        std::vector<int> p;
        for (int k = m; k >= 1; --k)
            p.push_back(k);
        return {symbol_of_partition(Partition(std::move(p)))};
    }
    }
    return {};
}

/* The staircase partition [m, m-1, .., 1]. */
inline Partition cuspidal_partition(int m)
{
    std::vector<int> p;
    for (int k = m; k >= 1; --k)
        p.push_back(k);
    return Partition(std::move(p));
}

/* (n-k+1, 0 | k), the symbols of maximal delta in rank n. */
inline Symbol extreme_symbol(int n, int k) { return reduce(Symbol(BetaSet{n - k + 1, 0}, BetaSet{k})); }

} // namespace unipot

#endif
