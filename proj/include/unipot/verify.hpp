#ifndef UNIPOT_VERIFY_HPP
#define UNIPOT_VERIFY_HPP

/* Verification suites shared by the command-line tool and the
 * acceptance gate. Each suite returns one record per checked instance
 * group; a record passes iff expected and computed agree. */

#include "cells.hpp"
#include "correspondence.hpp"
#include "lusztig.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace unipot::verify {

struct ReportRecord {
    std::string suite;
    std::string instance;
    std::string expected;
    std::string computed;
    bool pass = false;
};

using Report = std::vector<ReportRecord>;

inline bool all_pass(const Report& r)
{
    return std::all_of(r.begin(), r.end(), [](const ReportRecord& x) { return x.pass; });
}

class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string& instance, const std::string& expected, const std::string& computed)
    {
        out_.push_back({suite_, instance, expected, computed, expected == computed});
    }
    void check(const std::string& instance, long long expected, long long computed)
    {
        check(instance, std::to_string(expected), std::to_string(computed));
    }
    void check(const std::string& instance, bool computed) { check(instance, "true", computed ? "true" : "false"); }

    /* a group of checks: ok out of total */
    void tally(const std::string& instance, long long total, long long ok)
    {
        check(instance, std::to_string(total) + " hold", std::to_string(ok) + " hold");
    }

    Report take() { return std::move(out_); }

private:
    std::string suite_;
    Report out_;
};

struct Params {
    int max_rank = 6;          /* symbol rank / partition size bound */
    int unitary_max = 10;      /* partition size bound for unitary first occurrence */
    int classification_max = 18;
    int cell_rank = 6;         /* specials of rank <= cell_rank */
    int cell_degree = 4;       /* plus all-singles specials up to this degree */
    int descriptor_dim = 12;   /* descriptor space dimension bound */
    int chain_m = 2;
    int chain_k = 4;
};

/* ---------- bijections ---------- */

inline Report bijections(const Params& p)
{
    Recorder r("bijections");
    {
        Partition l({7, 5, 4, 3, 2, 2});
        BetaSet x = beta_of_partition(l, 6);
        auto [x0, x1] = two_quotient_split(x);
        r.check("worked example X", "12,9,7,5,3,2", row_to_string(x));
        r.check("worked example X(0)", "6,1", row_to_string(x0));
        r.check("worked example X(1)", "4,3,2,1", row_to_string(x1));
        r.check("worked example core", "[2,1]", to_string(two_core(l)));
        r.check("worked example symbol", "4,3,2,1|6,1", to_string(symbol_of_partition(l)));
    }
    for (int n = 0; n <= p.max_rank; ++n) {
        long long total = 0, beta = 0, size = 0, inverse = 0;
        for (const auto& l : partitions_of(n)) {
            ++total;
            bool ok = true;
            for (int m = l.length(); m <= l.length() + 2; ++m)
                ok = ok && upsilon_beta(beta_of_partition(l, m)) == l;
            beta += ok;
            Symbol s = symbol_of_partition(l);
            size += l.size() == two_core(l).size() + 2 * upsilon_symbol(s).size();
            inverse += partition_of_core_and_quotient(two_core(l).length(), upsilon_symbol(s)) == l &&
                       partition_of_symbol(s) == l;
        }
        std::string tag = "|lambda|=" + std::to_string(n);
        r.tally(tag + " beta/Upsilon round trip", total, beta);
        r.tally(tag + " size identity", total, size);
        r.tally(tag + " (core, quotient) inverse", total, inverse);
        /* and from (core length, bipartition) back to the same pair */
        long long fwd_total = 0, fwd_ok = 0;
        for (int d = 0; d * (d + 1) / 2 <= n; ++d) {
            int rest = n - d * (d + 1) / 2;
            if (rest % 2)
                continue;
            for (const auto& bip : bipartitions_of(rest / 2)) {
                ++fwd_total;
                Partition l = partition_of_core_and_quotient(d, bip);
                fwd_ok += l.size() == n && two_core(l).length() == d && upsilon_symbol(symbol_of_partition(l)) == bip;
            }
        }
        r.tally(tag + " (d, bipartition) -> lambda -> (d, bipartition)", fwd_total, fwd_ok);
        r.check(tag + " bipartition count", static_cast<long long>(partitions_of(n).size()), fwd_total);
    }
    return r.take();
}

/* ---------- defects and 2-cores ---------- */

inline Report defects(const Params& p)
{
    Recorder r("defects");
    for (int n = 0; n <= p.max_rank; ++n) {
        long long total = 0, ok = 0;
        for (const auto& l : partitions_of(n)) {
            ++total;
            /* defect by the parity of the core length and of l(lambda) */
            int L = two_core(l).length();
            bool lodd = l.length() % 2 == 1;
            int want = L % 2 == 0 ? (lodd ? L + 1 : L) : (lodd ? -L : -L - 1);
            ok += defect(symbol_of_partition(l)) == want;
        }
        r.tally("defect table |lambda|=" + std::to_string(n), total, ok);
    }
    PartitionTable table;
    for (int n = 0; n <= p.max_rank; ++n) {
        long long pairs = 0, parity = 0, chain = 0, defect_ok = 0;
        for (int np = 0; np <= p.max_rank; ++np)
            for (const auto& a : table.get(n))
                for (const auto& b : table.get(np)) {
                    bool plus = in_b_plus(a.symbol, b.symbol), minus = in_b_minus(a.symbol, b.symbol);
                    int d = defect(a.symbol), dp = defect(b.symbol);
                    bool uu_plus = plus && uu_defect_ok(d, dp, Sign::Plus);
                    bool uu_minus = minus && uu_defect_ok(d, dp, Sign::Minus);
                    if (!uu_plus && !uu_minus)
                        continue;
                    ++pairs;
                    Sign e = uu_plus ? Sign::Plus : Sign::Minus;
                    parity += e == sign_of_parity(n + np) && !(uu_plus && uu_minus);
                    defect_ok += in_b_uu(a.partition, b.partition) == e;
                    int L = two_core(a.partition).length(), Lp = two_core(b.partition).length();
                    int want = e == Sign::Plus ? (L == 0 ? 0 : (L % 2 == 0 ? L - 1 : L + 1))
                                               : (L % 2 == 0 ? L + 1 : L - 1);
                    chain += Lp == want;
                }
        std::string tag = "|lambda|=" + std::to_string(n) + " partners up to " + std::to_string(p.max_rank);
        r.tally(tag + " parity law", pairs, parity);
        r.tally(tag + " 2-core chain", pairs, chain);
        r.tally(tag + " relation agrees", pairs, defect_ok);
    }
    return r.take();
}

/* ---------- preservation ---------- */

namespace detail {

/* Rows B above A (A <= B in the shifted order), all lengths allowed by
 * the interleaving criterion. Only B[0] is unbounded: f(B) is called
 * for B[0] increasing until it returns false. */
template <class F>
void rows_above(const std::vector<int>& a, F&& f)
{
    const int m = static_cast<int>(a.size());
    for (int len : {m, m + 1}) {
        if (len == 0) {
            f(std::vector<int>{});
            continue;
        }
        std::vector<int> lo(len), hi(len);
        for (int i = 1; i < len; ++i) {
            if (len == m)
                lo[i] = a[i], hi[i] = a[i - 1] - 1;
            else
                lo[i] = i < m ? a[i] + 1 : 0, hi[i] = a[i - 1];
        }
        lo[0] = m == 0 ? 0 : (len == m ? a[0] : a[0] + 1);
        std::vector<int> row(len);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == len) {
                for (row[0] = lo[0];; ++row[0])
                    if (!f(row))
                        break;
                return;
            }
            for (row[i] = lo[i]; row[i] <= hi[i]; ++row[i])
                self(self, i + 1);
        };
        rec(rec, 1);
    }
}

/* Rows B below A (B <= A in the shifted order); finitely many. */
inline std::vector<std::vector<int>> rows_below(const std::vector<int>& a)
{
    const int k = static_cast<int>(a.size());
    std::vector<std::vector<int>> out;
    for (int len : {k, k - 1}) {
        if (len < 0)
            continue;
        std::vector<int> lo(len), hi(len);
        for (int i = 0; i < len; ++i) {
            if (len == k)
                lo[i] = i + 1 < k ? a[i + 1] + 1 : 0, hi[i] = a[i];
            else
                lo[i] = a[i + 1], hi[i] = a[i] - 1;
        }
        std::vector<int> row(len);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == len) {
                out.push_back(row);
                return;
            }
            for (row[i] = lo[i]; row[i] <= hi[i]; ++row[i])
                self(self, i + 1);
        };
        rec(rec, 0);
    }
    return out;
}

} // namespace detail

/* Every reduced symbol r of rank <= cap with (l, r) in B^e, generated
 * from the interleaving conditions rather than by filtering a family. */
inline std::vector<Symbol> related_symbols(const Symbol& l0, Sign e, int cap)
{
    Symbol l = reduce(l0);
    const auto& upper_src = e == Sign::Plus ? l.bottom.entries : l.top.entries;
    const auto& lower_src = e == Sign::Plus ? l.top.entries : l.bottom.entries;
    std::vector<Symbol> out;
    for (const auto& low : detail::rows_below(lower_src)) {
        detail::rows_above(upper_src, [&](const std::vector<int>& up) {
            Symbol r = e == Sign::Plus ? Symbol(BetaSet(up), BetaSet(low)) : Symbol(BetaSet(low), BetaSet(up));
            if (rank(r) > cap)
                return false;
            if (is_reduced(r))
                out.push_back(r);
            return !up.empty();
        });
    }
    return out;
}

/* Minimal-rank members of a family among the related symbols. */
inline MinimalPartners brute_minimal(const Symbol& l, Sign e, SymbolFamily target, int cap)
{
    MinimalPartners m;
    for (const auto& r : related_symbols(l, e, cap)) {
        if (!in_family(r, target))
            continue;
        if (m.rank < 0 || rank(r) < m.rank) {
            m.rank = rank(r);
            m.symbols.clear();
        }
        if (rank(r) == m.rank)
            m.symbols.push_back(r);
    }
    std::sort(m.symbols.begin(), m.symbols.end());
    return m;
}

inline Report preservation(const Params& p)
{
    Recorder r("preservation");
    for (int n = 0; n <= p.max_rank; ++n) {
        std::string tag = "rank " + std::to_string(n);
        long long sp_total = 0, sp_sum = 0, sp_min = 0, consistent = 0, related = 0;
        for (const auto& s : enumerate_family(n, SymbolFamily::Sp)) {
            ++sp_total;
            int a = first_occurrence_unipotent(s, Tower::OPlus), b = first_occurrence_unipotent(s, Tower::OMinus);
            sp_sum += a + b == 4 * n - 2 * delta_symbol(s) + 2;
            bool ok = true;
            for (Sign e : {Sign::Plus, Sign::Minus}) {
                Symbol t = theta0_sp(s, e);
                auto m = brute_minimal(s, e, o_family(e), rank(t));
                ok = ok && m.rank == rank(t) && m.symbols == std::vector<Symbol>{t};
                auto rel = related_symbols(s, e, rank(t));
                related += static_cast<long long>(rel.size());
                consistent += std::all_of(rel.begin(), rel.end(), [&](const Symbol& x) { return in_b(s, x, e); });
            }
            sp_min += ok;
        }
        r.tally(tag + " Sp: n0+ + n0- = 4n - 2 delta + 2", sp_total, sp_sum);
        r.tally(tag + " Sp: theta_0 is the unique minimal partner", sp_total, sp_min);
        long long o_total = 0, o_sum = 0, o_min = 0;
        for (auto f : {SymbolFamily::OPlus, SymbolFamily::OMinus})
            for (const auto& s : enumerate_family(n, f)) {
                ++o_total;
                int a = first_occurrence_unipotent(s, Tower::SpFromOEven);
                int b = first_occurrence_unipotent(transpose(s), Tower::SpFromOEven);
                o_sum += a + b == 4 * n - 2 * delta_symbol(s);
                Symbol t = theta0_even_o(s);
                auto m = brute_minimal(s, o_sign_of(s), SymbolFamily::Sp, rank(t));
                o_min += m.rank == rank(t) && m.symbols == std::vector<Symbol>{t};
                auto rel = related_symbols(s, o_sign_of(s), rank(t));
                related += static_cast<long long>(rel.size());
                consistent += std::all_of(rel.begin(), rel.end(), [&](const Symbol& x) { return in_b(s, x, o_sign_of(s)); });
            }
        r.tally(tag + " O: n0'(L) + n0'(L^t) = 4n - 2 delta", o_total, o_sum);
        r.tally(tag + " O: theta_0 is the unique minimal partner", o_total, o_min);
        r.tally(tag + " generated partners satisfy the relation", 2 * sp_total + o_total, consistent);
        r.check(tag + " partners generated", true, related > 0 || n < 0);
    }
    PartitionTable table;
    for (int n = 0; n <= p.unitary_max; ++n) {
        long long total = 0, closed = 0, sum = 0;
        for (const auto& e : table.get(n)) {
            ++total;
            auto brute = unitary_first_occurrence(e.partition, table);
            auto c = unitary_first_occurrence_closed(e.partition);
            closed += brute.even == c.even && brute.odd == c.odd;
            sum += brute.even + brute.odd == 2 * n - 2 * delta_symbol(e.symbol) + 1;
        }
        std::string tag = "unitary |lambda|=" + std::to_string(n);
        r.tally(tag + " closed form = brute force", total, closed);
        r.tally(tag + " n0+ + n0- = 2n - 2 delta + 1", total, sum);
    }
    for (int m = 0; m <= 3; ++m) {
        std::string tag = "cuspidal m=" + std::to_string(m);
        auto u = unitary_first_occurrence(cuspidal_partition(m));
        r.check(tag + " unitary sum", m * (m + 1) + 1, u.even + u.odd);
        Symbol sp = cuspidal_symbol(SymbolFamily::Sp, m).front();
        r.check(tag + " Sp sum", 4 * m * (m + 1) + 2,
                first_occurrence_unipotent(sp, Tower::OPlus) + first_occurrence_unipotent(sp, Tower::OMinus));
        if (m > 0) {
            int s = 0;
            for (const auto& o : cuspidal_symbol(o_family(sign_of_parity(m)), m))
                s += first_occurrence_unipotent(o, Tower::SpFromOEven);
            r.check(tag + " O sum", 4 * m * m, s);
        }
    }
    return r.take();
}

/* ---------- cuspidal classification ---------- */

inline Report cuspidal_classification(const Params& p)
{
    Recorder r("cuspidal-classification");
    for (int n = 0; n <= p.classification_max; ++n) {
        int sq = -1, pr = -1;
        for (int m = 0; m * m <= n; ++m) {
            if (m * m == n)
                sq = m;
            if (m * (m + 1) == n)
                pr = m;
        }
        std::string tag = "n=" + std::to_string(n);
        long long sp = 0, op = 0, om = 0;
        for (const auto& s : enumerate_family(n, SymbolFamily::Sp))
            sp += is_cuspidal(s);
        for (const auto& s : enumerate_family(n, SymbolFamily::OPlus))
            op += is_cuspidal(s);
        for (const auto& s : enumerate_family(n, SymbolFamily::OMinus))
            om += is_cuspidal(s);
        r.check(tag + " cuspidal Sp symbols", pr >= 0 ? 1 : 0, sp);
        long long want_o = sq < 0 ? 0 : (sq == 0 ? 1 : 2);
        r.check(tag + " cuspidal O+ symbols", sq >= 0 && sq % 2 == 0 ? want_o : 0, op);
        r.check(tag + " cuspidal O- symbols", sq >= 0 && sq % 2 == 1 ? want_o : 0, om);
        r.check(tag + " pseudo-unipotent cuspidal characters", want_o,
                static_cast<long long>(pseudo_unipotent_cuspidal(n).size()));
    }
    return r.take();
}

/* ---------- cells ---------- */

namespace detail {

inline long long binom(int n, int k)
{
    long long v = 1;
    for (int i = 1; i <= k; ++i)
        v = v * (n - k + i) / i;
    return v;
}

/* (2d, .., 2, 0 | 2d-1, .., 1) for defect 1, (2d-1, .., 1 | 2d-2, .., 0) for defect 0 */
inline SpecialSymbolData all_singles(int degree, int d)
{
    std::vector<int> t, b;
    int top = d == 1 ? 2 * degree : 2 * degree - 1;
    for (int x = top; x >= 0; --x)
        ((top - x) % 2 == 0 ? t : b).push_back(x);
    return special_data(Symbol(BetaSet(t), BetaSet(b)));
}

inline std::vector<SpecialSymbolData> cell_cases(const Params& p, int d)
{
    std::vector<SpecialSymbolData> out;
    int reached = 0;
    for (int n = 0; n <= p.cell_rank; ++n)
        for (const auto& z : special_symbols(n, d)) {
            out.push_back(special_data(z));
            reached = std::max(reached, out.back().degree);
        }
    for (int k = reached + 1; k <= p.cell_degree; ++k)
        out.push_back(all_singles(k, d));
    return out;
}

inline std::string z_tag(const SpecialSymbolData& z) { return "Z=" + to_string(z.z) + " (degree " + std::to_string(z.degree) + ")"; }

} // namespace detail

inline Report cells(const Params& p)
{
    Recorder r("cells");
    for (const auto& z : detail::cell_cases(p, 1)) {
        int d = z.degree;
        std::string tag = detail::z_tag(z);
        auto sz = family_masks(z, FamilyKind::S_Z);
        r.check(tag + " |S_Z|", 1LL << (2 * d), static_cast<long long>(sz.size()));
        r.check(tag + " |S_Z,1|", detail::binom(2 * d + 1, d), static_cast<long long>(family_masks(z, FamilyKind::S_Z1).size()));
        auto arr = arrangements(z);
        long long part_ok = 0;
        std::vector<std::vector<PairMask>> cid(arr.size());
        for (std::size_t k = 0; k < arr.size(); ++k) {
            std::map<SubsetMask, int> hits;
            bool sizes = true;
            for (PairMask psi = 0; psi < (PairMask{1} << arr[k].pairs.size()); ++psi) {
                auto c = cell_masks(z, arr[k], psi);
                sizes = sizes && static_cast<long long>(c.size()) == (1LL << d);
                for (SubsetMask m : c)
                    hits[m] += cell_of(arr[k], m) == psi ? 1 : 100;
            }
            bool once = hits.size() == sz.size();
            for (SubsetMask m : sz)
                once = once && hits[m] == 1;
            part_ok += sizes && once;
            for (SubsetMask m : sz)
                cid[k].push_back(cell_of(arr[k], m));
        }
        r.tally(tag + " cells of size 2^d partition S_Z", static_cast<long long>(arr.size()), part_ok);
        std::size_t n = sz.size();
        long long sep = 0, pairs = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                ++pairs;
                bool s = false;
                for (std::size_t k = 0; k < arr.size() && !s; ++k)
                    s = cid[k][i] != cid[k][j];
                sep += s;
            }
        r.tally(tag + " distinct symbols are separated by a cell", pairs, sep);
        long long iso = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool found = false;
            for (std::size_t k1 = 0; k1 < arr.size() && !found; ++k1)
                for (std::size_t k2 = 0; k2 < arr.size() && !found; ++k2) {
                    int c = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        c += cid[k1][j] == cid[k1][i] && cid[k2][j] == cid[k2][i];
                    found = c == 1;
                }
            iso += found;
        }
        r.tally(tag + " each symbol is cut out by two cells", static_cast<long long>(n), iso);
    }
    for (const auto& z : detail::cell_cases(p, 0)) {
        int d = z.degree;
        if (d == 0)
            continue;
        std::string tag = detail::z_tag(z);
        r.check(tag + " |S_Z+|", 1LL << (2 * d - 1), static_cast<long long>(family_masks(z, FamilyKind::S_Z_plus).size()));
        r.check(tag + " |S_Z-|", 1LL << (2 * d - 1), static_cast<long long>(family_masks(z, FamilyKind::S_Z_minus).size()));
        r.check(tag + " |S_Z,0|", detail::binom(2 * d, d), static_cast<long long>(family_masks(z, FamilyKind::S_Z0).size()));
        auto arr = arrangements(z);
        long long lemma_ok = 0;
        auto fp = family_masks(z, FamilyKind::S_Z_plus), fm = family_masks(z, FamilyKind::S_Z_minus);
        for (const auto& a : arr) {
            std::set<SubsetMask> plus, minus;
            bool ok = true;
            for (PairMask psi = 0; psi < (PairMask{1} << a.pairs.size()); ++psi) {
                auto c = cell_masks(z, a, psi);
                ok = ok && static_cast<long long>(c.size()) == (1LL << d);
                std::set<Symbol> members;
                for (SubsetMask m : c)
                    members.insert(lambda_of_mask(z, m));
                int outside = static_cast<int>(a.pairs.size()) - std::popcount(psi);
                for (SubsetMask m : c) {
                    ok = ok && members.count(transpose(lambda_of_mask(z, m)));
                    ok = ok && (outside % 2 == 0 ? plus : minus).insert(m).second;
                }
            }
            ok = ok && plus == std::set<SubsetMask>(fp.begin(), fp.end()) &&
                 minus == std::set<SubsetMask>(fm.begin(), fm.end());
            lemma_ok += ok;
        }
        r.tally(tag + " cells are transpose-closed and tile S_Z+ / S_Z-", static_cast<long long>(arr.size()), lemma_ok);
        auto [p1, p2] = cyclic_arrangements(z);
        PairMask all = (PairMask{1} << d) - 1;
        long long cyc = 0, cyc_total = 0;
        for (PairMask s1 = 0; s1 <= all; ++s1)
            for (PairMask s2 = 0; s2 <= all; ++s2) {
                ++cyc_total;
                auto c1 = cell_masks(z, p1, s1), c2 = cell_masks(z, p2, s2);
                std::vector<SubsetMask> both;
                std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(both));
                bool same = std::popcount(s1) % 2 == std::popcount(s2) % 2;
                bool ok = both.size() == (same ? 2u : 0u);
                if (ok && both.size() == 2)
                    ok = lambda_of_mask(z, both[0]) == transpose(lambda_of_mask(z, both[1]));
                cyc += ok;
            }
        r.tally(tag + " cyclic-shift cells meet in 2 or 0 symbols", cyc_total, cyc);
        SubsetMask full = (SubsetMask{1} << z.single_count()) - 1;
        long long sep = 0, sep_total = 0;
        for (auto fam : {&fp, &fm})
            for (SubsetMask a : *fam)
                for (SubsetMask b : *fam) {
                    if (a == b || a == (full ^ b))
                        continue;
                    ++sep_total;
                    bool s = false;
                    for (const auto& ar : arr)
                        s = s || cell_of(ar, a) != cell_of(ar, b);
                    sep += s;
                }
        r.tally(tag + " symbols other than L, L^t are separated", sep_total, sep);
    }
    {
        long long total = 0, ok = 0;
        for (int n = 0; n <= p.cell_rank; ++n)
            for (const auto& z0 : special_symbols(n, 1)) {
                ++total;
                long long m = static_cast<long long>(z0.bottom.size());
                ok += a_invariant(z0) >= m * m;
            }
        r.tally("a_Z >= m^2 over specials of rank <= " + std::to_string(p.cell_rank), total, ok);
        for (int m = 1; m <= 4; ++m) {
            std::vector<int> t, b;
            for (int x = m; x >= 0; --x)
                t.push_back(x);
            for (int x = m; x >= 1; --x)
                b.push_back(x);
            r.check("a_Z0 for m=" + std::to_string(m), static_cast<long long>(m) * m,
                    a_invariant(Symbol(BetaSet(t), BetaSet(b))));
        }
    }
    return r.take();
}

/* ---------- orthogonality ---------- */

inline Report orthogonality(const Params& p)
{
    Recorder r("orthogonality");
    for (const auto& z : detail::cell_cases(p, 1)) {
        std::string tag = detail::z_tag(z);
        auto rows = family_masks(z, FamilyKind::S_Z1), cols = family_masks(z, FamilyKind::S_Z);
        long long total = 0, ok = 0;
        for (SubsetMask a : rows)
            for (SubsetMask b : rows) {
                ++total;
                long long s = 0;
                for (SubsetMask m : cols)
                    s += std::popcount((a ^ b) & m) % 2 == 0 ? 1 : -1;
                ok += s == (a == b ? (1LL << (2 * z.degree)) : 0);
            }
        r.tally(tag + " sign-sum orthogonality", total, ok);
        auto g = row_gram(projection_matrix(z).expansion);
        long long gok = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                gok += g[i][j] == Rational(i == j ? 1 : 0);
        r.tally(tag + " projection Gram = identity", static_cast<long long>(g.size() * g.size()), gok);
    }
    for (const auto& z : detail::cell_cases(p, 0)) {
        if (z.degree == 0)
            continue;
        std::string tag = detail::z_tag(z);
        for (Sign e : {Sign::Plus, Sign::Minus}) {
            auto pm = projection_matrix(z, e);
            std::string t = tag + " S_Z" + sign_text(e);
            long long total = 0, ok = 0;
            for (std::size_t i = 0; i < pm.uniform.rows.size(); ++i)
                for (std::size_t j = 0; j < pm.uniform.rows.size(); ++j) {
                    ++total;
                    long long s = 0;
                    for (const auto& c : pm.uniform.cols)
                        s += pairing(z, pm.uniform.rows[i], c) == pairing(z, pm.uniform.rows[j], c) ? 1 : -1;
                    ok += s == (i == j ? (1LL << (2 * z.degree - 1)) : 0);
                }
            r.tally(t + " sign-sum orthogonality", total, ok);
            auto g = row_gram(pm.expansion);
            long long gok = 0;
            for (std::size_t i = 0; i < g.size(); ++i)
                for (std::size_t j = 0; j < g.size(); ++j)
                    gok += g[i][j] == (i == j ? Rational(1, 2) : Rational(0));
            r.tally(t + " projection Gram = identity/2 on representatives", static_cast<long long>(g.size() * g.size()), gok);
            /* rho_L and rho_{L^t} have the same uniform projection, so Omega_Z is
             * not pinned down: both the diagonal and the transposed choice of
             * a_{L,L'} must satisfy every cell equation. */
            long long twins = 0;
            for (std::size_t c = 0; c < pm.uniform.cols.size(); ++c) {
                Symbol tc = transpose(pm.uniform.cols[c]);
                auto it = std::find(pm.uniform.cols.begin(), pm.uniform.cols.end(), tc);
                bool same = it != pm.uniform.cols.end();
                for (std::size_t i = 0; same && i < pm.uniform.rows.size(); ++i)
                    same = pm.uniform.entries[i][c] == pm.uniform.entries[i][it - pm.uniform.cols.begin()];
                twins += same;
            }
            r.tally(t + " rho_L and rho_L^t share their uniform projection", static_cast<long long>(pm.uniform.cols.size()),
                    twins);
        }
        if (z.degree <= 3) {
            SubsetMask full = (SubsetMask{1} << z.single_count()) - 1;
            std::vector<std::vector<SubsetMask>> all_cells;
            for (const auto& a : arrangements(z))
                for (PairMask psi = 0; psi < (PairMask{1} << a.pairs.size()); ++psi)
                    all_cells.push_back(cell_masks(z, a, psi));
            long long total = 0, ok = 0;
            for (const auto& c1 : all_cells)
                for (const auto& c2 : all_cells) {
                    ++total;
                    std::vector<SubsetMask> both, c2t;
                    for (SubsetMask m : c2)
                        c2t.push_back(full ^ m);
                    std::sort(c2t.begin(), c2t.end());
                    std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(both));
                    std::size_t meet = both.size();
                    both.clear();
                    std::set_intersection(c1.begin(), c1.end(), c2t.begin(), c2t.end(), std::back_inserter(both));
                    ok += both.size() == meet;
                }
            r.tally(tag + " diagonal and transposed Omega_Z both satisfy the cell equations", total, ok);
        }
    }
    for (int n = 0; n <= std::min(p.cell_rank, 5); ++n) {
        auto zs = special_symbols(n, 1);
        long long total = 0, ok = 0;
        for (const auto& z1 : zs)
            for (const auto& z2 : zs) {
                auto a = special_data(z1), b = special_data(z2);
                for (const auto& s : family(a, FamilyKind::S_Z1))
                    for (const auto& l : family(b, FamilyKind::S_Z)) {
                        ++total;
                        Rational want = z1 != z2 ? Rational(0) : (pairing(a, s, l) ? -1 : 1) * pow2(-a.degree);
                        ok += uniform_coefficient(s, l) == want;
                    }
            }
        r.tally("rank " + std::to_string(n) + " uniform coefficients (zero across families)", total, ok);
    }
    return r.take();
}

/* ---------- Lusztig-level examples ---------- */

namespace detail {

inline CharacterDescriptor sp4_character(std::vector<std::pair<OrbitToken, int>> orbits, const Symbol& minus)
{
    CharacterDescriptor c;
    int n = rank(minus);
    for (auto& [t, m] : orbits) {
        c.ss.orbit_mults[t] = m;
        c.labels1[t] = Partition(std::vector<int>(m, 1));
        n += t.degree * m;
    }
    c.ss.ambient = make_group(GroupKind::SOOdd, n);
    c.ss.nu_minus1 = rank(minus);
    c.ss.minus1_type = o_sign_of(minus);
    c.label_plus1 = Symbol({0}, {});
    c.label_minus1 = reduce(minus);
    validate(c);
    return c;
}

inline std::string towers_text(const FirstOccurrence& f, const std::string& plus, const std::string& minus)
{
    return plus + ":" + std::to_string(f.n_plus) + " " + minus + ":" + std::to_string(f.n_minus) +
           " sum:" + std::to_string(f.sum);
}

} // namespace detail

inline Report lusztig_catalogue(const Params& p)
{
    Recorder r("lusztig-examples");
    const OrbitToken u1{"u1", 1, OrbitKind::UnitaryOrbit}, u1b{"u1b", 1, OrbitKind::UnitaryOrbit},
        u2{"u2", 2, OrbitKind::UnitaryOrbit};
    struct Case {
        std::string name;
        CharacterDescriptor c;
        std::string even, odd;
    };
    std::vector<Case> cases{
        {"chi_1 (U_1(q^2))", detail::sp4_character({{u2, 1}}, Symbol()), "O+:6 O-:4 sum:10", "eta:5 eta_nat:5 sum:10"},
        {"chi_4 (U_1 x U_1)", detail::sp4_character({{u1, 1}, {u1b, 1}}, Symbol()), "O+:4 O-:6 sum:10",
         "eta:5 eta_nat:5 sum:10"},
        {"xi'_21 (U_1 x O-_2)", detail::sp4_character({{u1, 1}}, Symbol({1, 0}, {})), "O+:4 O-:6 sum:10",
         "eta:7 eta_nat:3 sum:10"},
        {"xi'_22 (U_1 x O-_2)", detail::sp4_character({{u1, 1}}, Symbol({}, {1, 0})), "O+:4 O-:6 sum:10",
         "eta:3 eta_nat:7 sum:10"},
        {"theta_10 (unipotent)", unipotent_character(make_group(GroupKind::SOOdd, 2), Symbol({}, {2, 1, 0})),
         "O+:8 O-:2 sum:10", "eta:5 eta_nat:5 sum:10"},
    };
    for (const auto& k : cases) {
        r.check("Sp_4 " + k.name + " cuspidal", is_cuspidal(k.c));
        r.check("Sp_4 " + k.name + " even towers", k.even,
                detail::towers_text(first_occurrence_general(k.c, Flavor::EvenOrthogonalPair), "O+", "O-"));
        r.check("Sp_4 " + k.name + " odd towers", k.odd,
                detail::towers_text(first_occurrence_general(k.c, Flavor::OddOrthogonalPair), "eta", "eta_nat"));
    }
    {
        auto partner = first_partner(cases[0].c, Flavor::EvenOrthogonalPair, Sign::Minus);
        std::string f;
        for (const auto& g : centralizer_factors(partner.ss))
            f += (f.empty() ? "" : " x ") + to_string(g);
        r.check("Sp_4 chi_1 partner in O-_4", "U_1(q^2) x O+_0 x O+_0", f);
    }
    /* chi_{eps'}^{(i)}: nu_-1 = n, eta^(2) = 1 or sgn */
    for (int n = 1; n <= 3; ++n)
        for (Sign ep : {Sign::Plus, Sign::Minus}) {
            Symbol one = ep == Sign::Plus ? Symbol({n}, {0}) : Symbol({}, {n, 0});
            std::string tag = "chi_" + std::string(sign_text(ep)) + " n=" + std::to_string(n);
            long long occ_below = 0, occ_total = 0, shape_ok = 0;
            for (const Symbol& l : {one, transpose(one)}) {
                auto chi = pseudo_unipotent_character(l);
                for (Sign e : {Sign::Plus, Sign::Minus})
                    for (int np = 0; np <= n + 2; ++np) {
                        if (np == 0 && e == Sign::Minus)
                            continue;
                        for (const auto& c : enumerate_characters(make_group(GroupKind::OEven, np, e))) {
                            if (!howe_occurs(chi, c, Flavor::EvenOrthogonalPair))
                                continue;
                            ++occ_total;
                            occ_below += np < n;
                            auto x = xi_factors(c, Flavor::EvenOrthogonalPair);
                            Sign t = ep * e;
                            int k = np - n;
                            Symbol triv = t == Sign::Plus ? reduce(Symbol({k}, {0})) : Symbol({}, {k, 0});
                            shape_ok += x.g2 == make_group(GroupKind::OEven, n, ep) &&
                                        *x.g3 == make_group(GroupKind::OEven, k, t) &&
                                        (*x.label3 == triv || *x.label3 == reduce(transpose(triv)));
                        }
                    }
            }
            r.check(tag + " occurrences with n' < n", 0, occ_below);
            r.tally(tag + " partners have G2 = O_2n, G3 = O_2(n'-n), eta'^(3) = 1", occ_total, shape_ok);
            long long mem_total = 0, mem_ok = 0;
            for (int np = 0; np <= 2 * n + 2; ++np) {
                for (int k = 0; k <= std::min(n, np); ++k, ++mem_total)
                    mem_ok += in_b_plus(Symbol({np - k + 1, 0}, {k}), Symbol({n}, {0}));
                for (int k = 0; k <= std::min(n, np - n); ++k, ++mem_total)
                    mem_ok += in_b_plus(Symbol({np - k + 1, k}, {0}), Symbol({0}, {n}));
                for (int k = 1; k <= std::min(n, np + 1); ++k, ++mem_total)
                    mem_ok += in_b_minus(Symbol({k, 0}, {np - k + 1}), Symbol({}, {n, 0}));
                for (int k = 1; k <= std::min(n, np - n); ++k, ++mem_total)
                    mem_ok += in_b_minus(Symbol({}, {np - k + 1, k, 0}), Symbol({n, 0}, {}));
            }
            r.tally(tag + " k-indexed B memberships", mem_total, mem_ok);
            auto fo = first_occurrence_general(pseudo_unipotent_character(one), Flavor::OddOrthogonalPair);
            int late = ep == Sign::Plus ? n : n + 1;
            r.check(tag + " odd towers: one from n'=0, the other from n'=" + std::to_string(late),
                    "1," + std::to_string(2 * late + 1), std::to_string(fo.n_plus) + "," + std::to_string(fo.n_minus));
        }
    /* closed-form sums over every descriptor within the dimension cap */
    struct Amb {
        GroupKind k;
        std::vector<Flavor> flavors;
    };
    for (const auto& a : {Amb{GroupKind::SOOdd, {Flavor::EvenOrthogonalPair, Flavor::OddOrthogonalPair}},
                          Amb{GroupKind::OEven, {Flavor::EvenOrthogonalPair}},
                          Amb{GroupKind::Sp, {Flavor::OddOrthogonalPair}}, Amb{GroupKind::Unitary, {Flavor::UnitaryPair}}}) {
        long long total = 0, ok = 0, inv = 0;
        for (int n = 0;; ++n) {
            GroupDescriptor probe = make_group(a.k, n, a.k == GroupKind::OEven ? std::optional<Sign>(Sign::Plus) : std::nullopt);
            int dim = a.k == GroupKind::Sp ? 2 * n + 1 : natural_dimension(probe);
            if (dim > p.descriptor_dim)
                break;
            std::vector<std::optional<Sign>> types{std::nullopt};
            if (a.k == GroupKind::OEven)
                types = n == 0 ? std::vector<std::optional<Sign>>{Sign::Plus}
                               : std::vector<std::optional<Sign>>{Sign::Plus, Sign::Minus};
            for (auto t : types)
                for (const auto& c : enumerate_characters(make_group(a.k, n, t)))
                    for (Flavor f : a.flavors) {
                        ++total;
                        FirstOccurrence fo;
                        try {
                            fo = first_occurrence_general(c, f);
                        } catch (const std::logic_error&) {
                            continue;
                        }
                        bool occurs = howe_occurs(c, first_partner(c, f, Sign::Plus), f) &&
                                      howe_occurs(c, first_partner(c, f, Sign::Minus), f);
                        ok += occurs && fo.n_plus + fo.n_minus == first_occurrence_closed_form(c, f);
                        if (a.k == GroupKind::SOOdd && f == Flavor::OddOrthogonalPair) {
                            auto np = natural_partner(c);
                            inv += natural_partner(np) == c && np.ss == c.ss &&
                                   delta_of_character(np, f) == delta_of_character(c, f);
                        }
                    }
        }
        std::string tag = std::string("ambient ") + group_kind_name(a.k) + " dim <= " + std::to_string(p.descriptor_dim);
        r.tally(tag + " individual first occurrences sum to the closed form", total, ok);
        if (a.k == GroupKind::SOOdd)
            r.tally(tag + " natural partner is a delta-preserving involution", total / 2, inv);
    }
    return r.take();
}

/* Iterated first-occurrence chains against the closing dimension formulas. */
inline Report chains(const Params& p)
{
    Recorder r("chains");
    auto base = [](int i) { return i % 2 != 0 ? 2 * ((i - 1) / 2) * ((i + 1) / 2) : 2 * (i / 2) * (i / 2); };
    auto run = [&](const std::string& name, const CharacterDescriptor& centre, Flavor f, int shift, bool odd_orth) {
        auto ch = cuspidal_chain(centre, f, p.chain_k);
        std::string want, got;
        bool linked = true;
        for (int i = -p.chain_k; i <= p.chain_k; ++i) {
            const auto& c = ch[i + p.chain_k];
            want += (want.empty() ? "" : ",") + std::to_string(shift + base(i) + (odd_orth && i % 2 != 0 ? 1 : 0));
            got += (got.empty() ? "" : ",") + std::to_string(space_dimension(c));
            if (i < p.chain_k)
                linked = linked && howe_occurs(c, ch[i + p.chain_k + 1], f) && is_cuspidal(c);
        }
        r.check(name + " dims", want, got);
        r.check(name + " consecutive terms correspond", linked);
    };
    run("even orthogonal, unipotent", unipotent_character(make_group(GroupKind::OEven, 0, Sign::Plus), Symbol()),
        Flavor::EvenOrthogonalPair, 0, false);
    for (int m = 1; m <= p.chain_m; ++m) {
        Sign t = sign_of_parity(m);
        CharacterDescriptor c;
        c.ss.ambient = make_group(GroupKind::OEven, m * m, t);
        c.ss.nu_minus1 = m * m;
        c.ss.minus1_type = t;
        c.label_plus1 = Symbol();
        c.label_minus1 = cuspidal_symbol(o_family(t), m).front();
        run("even orthogonal, pseudo-unipotent m=" + std::to_string(m), c, Flavor::EvenOrthogonalPair, 2 * m * m, false);
    }
    for (int m = 0; m <= p.chain_m; ++m)
        run("odd orthogonal, unipotent Sp centre m=" + std::to_string(m),
            unipotent_character(make_group(GroupKind::SOOdd, m * (m + 1)), cuspidal_symbol(SymbolFamily::Sp, m).front()),
            Flavor::OddOrthogonalPair, 2 * m * (m + 1), true);
    run("odd orthogonal, pseudo-unipotent Sp terms", pseudo_unipotent_cuspidal(0).front(), Flavor::OddOrthogonalPair, 0,
        true);
    return r.take();
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"bijections", "defects", "preservation", "cells",
                                                "orthogonality", "cuspidal-classification", "lusztig-examples"};
    return names;
}

inline Report run_suite(const std::string& name, const Params& p)
{
    if (name == "bijections")
        return bijections(p);
    if (name == "defects")
        return defects(p);
    if (name == "preservation")
        return preservation(p);
    if (name == "cells")
        return cells(p);
    if (name == "orthogonality")
        return orthogonality(p);
    if (name == "cuspidal-classification")
        return cuspidal_classification(p);
    if (name == "lusztig-examples") {
        Report a = lusztig_catalogue(p), b = chains(p);
        for (auto& x : b)
            x.suite = "lusztig-examples";
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    throw domain_error("unknown suite: " + name);
}

} // namespace unipot::verify

#endif
