#ifndef UNIPOT_CELLS_HPP
#define UNIPOT_CELLS_HPP

/* Families attached to a special symbol Z, arrangements of its singles,
 * cells C_{Phi,Psi}, the F_2 pairing and the uniform-projection
 * coefficients of unipotent characters. */

#include "correspondence.hpp"
#include "rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace unipot {

/* Subsets M of the singles are bitmasks over single_list: top-row singles
 * in decreasing order, then bottom-row singles in decreasing order. */
using SubsetMask = std::uint32_t;

struct SingleEntry {
    int row; /* 0 top, 1 bottom */
    int value;
};

struct SpecialSymbolData {
    Symbol z;
    Symbol singles;
    int degree = 0;
    std::vector<SingleEntry> single_list;

    int top_count() const { return singles.top.size(); }
    int single_count() const { return static_cast<int>(single_list.size()); }
};

inline constexpr int max_cell_degree = 12;

inline SpecialSymbolData special_data(const Symbol& z0)
{
    Symbol z = reduce(z0);
    int d = defect(z);
    if ((d != 0 && d != 1) || !is_special(z))
        throw domain_error("not a special symbol of defect 0 or 1: " + to_string(z0));
    SpecialSymbolData out;
    out.z = z;
    out.singles = singles(z);
    int n = out.singles.top.size() + out.singles.bottom.size();
    out.degree = d == 1 ? (n - 1) / 2 : n / 2;
    if (out.degree > max_cell_degree)
        throw domain_error("degree of " + to_string(z) + " exceeds " + std::to_string(max_cell_degree));
    for (int x : out.singles.top.entries)
        out.single_list.push_back({0, x});
    for (int x : out.singles.bottom.entries)
        out.single_list.push_back({1, x});
    return out;
}

inline int defect(const SpecialSymbolData& z) { return defect(z.z); }

inline Symbol subset_of_mask(const SpecialSymbolData& z, SubsetMask m)
{
    std::vector<int> t, b;
    for (int i = 0; i < z.single_count(); ++i)
        if (m >> i & 1u)
            (z.single_list[i].row == 0 ? t : b).push_back(z.single_list[i].value);
    return Symbol(BetaSet(std::move(t)), BetaSet(std::move(b)));
}

inline SubsetMask mask_of_subset(const SpecialSymbolData& z, const Symbol& m)
{
    SubsetMask out = 0;
    int found = 0;
    for (int i = 0; i < z.single_count(); ++i) {
        const auto& e = z.single_list[i];
        if ((e.row == 0 ? m.top : m.bottom).contains(e.value)) {
            out |= SubsetMask{1} << i;
            ++found;
        }
    }
    if (found != m.top.size() + m.bottom.size())
        throw domain_error("subset " + to_string(m) + " is not contained in the singles of " + to_string(z.z));
    return out;
}

inline int top_bits(const SpecialSymbolData& z, SubsetMask m)
{
    return std::popcount(m & ((SubsetMask{1} << z.top_count()) - 1));
}

inline int bottom_bits(const SpecialSymbolData& z, SubsetMask m) { return std::popcount(m) - top_bits(z, m); }

inline Symbol lambda_of_mask(const SpecialSymbolData& z, SubsetMask m) { return lambda_of_subset(z.z, subset_of_mask(z, m)); }

inline Symbol lambda_of_subset(const SpecialSymbolData& z, const Symbol& m)
{
    mask_of_subset(z, m);
    return lambda_of_subset(z.z, m);
}

enum class FamilyKind { S_Z, S_Z1, S_Z_plus, S_Z_minus, S_Z0 };

inline const char* family_kind_name(FamilyKind k)
{
    switch (k) {
    case FamilyKind::S_Z: return "S_Z";
    case FamilyKind::S_Z1: return "S_Z1";
    case FamilyKind::S_Z_plus: return "S_Z_plus";
    case FamilyKind::S_Z_minus: return "S_Z_minus";
    case FamilyKind::S_Z0: return "S_Z0";
    }
    return "?";
}

inline bool mask_in_family(const SpecialSymbolData& z, SubsetMask m, FamilyKind k)
{
    int t = top_bits(z, m), b = bottom_bits(z, m);
    switch (k) {
    case FamilyKind::S_Z:
    case FamilyKind::S_Z_plus: return (t - b) % 2 == 0;
    case FamilyKind::S_Z_minus: return (t - b) % 2 != 0;
    case FamilyKind::S_Z1:
    case FamilyKind::S_Z0: return t == b;
    }
    return false;
}

inline void check_family_defect(const SpecialSymbolData& z, FamilyKind k)
{
    bool one = k == FamilyKind::S_Z || k == FamilyKind::S_Z1;
    if (defect(z) != (one ? 1 : 0))
        throw domain_error(std::string(family_kind_name(k)) + " does not apply to " + to_string(z.z));
}

inline std::vector<SubsetMask> family_masks(const SpecialSymbolData& z, FamilyKind k)
{
    check_family_defect(z, k);
    std::vector<SubsetMask> out;
    for (SubsetMask m = 0; m < (SubsetMask{1} << z.single_count()); ++m)
        if (mask_in_family(z, m, k))
            out.push_back(m);
    return out;
}

inline std::vector<Symbol> family(const SpecialSymbolData& z, FamilyKind k)
{
    std::vector<Symbol> out;
    for (SubsetMask m : family_masks(z, k))
        out.push_back(lambda_of_mask(z, m));
    return out;
}

/* Pairs are (top index, bottom index) into single_list. */
struct Arrangement {
    std::vector<std::pair<int, int>> pairs;
    int isolated = -1; /* index of the unpaired top single, defect 1 only */

    SubsetMask pair_mask(int i) const { return (SubsetMask{1} << pairs[i].first) | (SubsetMask{1} << pairs[i].second); }
};

/* Defect 1: the isolated top single runs from the smallest entry upward;
 * for each, the remaining top singles are matched to the bottom ones in
 * next_permutation order. */
inline std::vector<Arrangement> arrangements(const SpecialSymbolData& z)
{
    int t = z.top_count(), b = z.single_count() - t;
    std::vector<Arrangement> out;
    std::vector<int> isolated;
    if (defect(z) == 1)
        for (int i = t - 1; i >= 0; --i)
            isolated.push_back(i);
    else
        isolated.push_back(-1);
    for (int iso : isolated) {
        std::vector<int> tops;
        for (int i = 0; i < t; ++i)
            if (i != iso)
                tops.push_back(i);
        std::vector<int> perm(b);
        for (int j = 0; j < b; ++j)
            perm[j] = t + j;
        do {
            Arrangement a;
            a.isolated = iso;
            for (int j = 0; j < b; ++j)
                a.pairs.push_back({tops[j], perm[j]});
            out.push_back(std::move(a));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

inline std::string to_string(const SpecialSymbolData& z, const Arrangement& a)
{
    std::string s = "{";
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(z.single_list[a.pairs[i].first].value) + "-"
            + std::to_string(z.single_list[a.pairs[i].second].value);
    }
    s += "}";
    if (a.isolated >= 0)
        s += " isolating " + std::to_string(z.single_list[a.isolated].value);
    return s;
}

/* Psi is a bitmask over the pairs of an arrangement. */
using PairMask = std::uint32_t;

/* M meets each Psi-pair in 0 or 2 elements and each other pair in 1. */
inline bool meets_pairs_as_cell(const Arrangement& a, PairMask psi, SubsetMask m)
{
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        int k = std::popcount(m & a.pair_mask(i));
        bool in_psi = psi >> i & 1u;
        if (in_psi ? k == 1 : k != 1)
            return false;
    }
    return true;
}

/* |M cap Psi'| = |(Phi minus Psi) cap Psi'^*| mod 2 for every Psi' <= Phi */
inline bool meets_pairs_quantified(const Arrangement& a, PairMask psi, SubsetMask m)
{
    PairMask all = (PairMask{1} << a.pairs.size()) - 1;
    for (PairMask q = 0; q <= all; ++q) {
        SubsetMask span = 0;
        for (std::size_t i = 0; i < a.pairs.size(); ++i)
            if (q >> i & 1u)
                span |= a.pair_mask(i);
        int lhs = std::popcount(m & span);
        int rhs = std::popcount(q & ~psi & all);
        if ((lhs - rhs) % 2 != 0)
            return false;
    }
    return true;
}

/* Membership of Lambda_M in C_{Phi,Psi}; defect 1 cells live in S_Z. */
inline bool in_cell(const SpecialSymbolData& z, const Arrangement& a, PairMask psi, SubsetMask m)
{
    if (defect(z) == 1 && !mask_in_family(z, m, FamilyKind::S_Z))
        return false;
    bool two = meets_pairs_as_cell(a, psi, m);
    if (two != meets_pairs_quantified(a, psi, m))
        throw std::logic_error("cell membership conditions disagree");
    return two;
}

inline std::vector<SubsetMask> cell_masks(const SpecialSymbolData& z, const Arrangement& a, PairMask psi)
{
    if (psi >> a.pairs.size() != 0)
        throw domain_error("Psi is not a subset of the pairs of Phi");
    std::vector<SubsetMask> out;
    for (SubsetMask m = 0; m < (SubsetMask{1} << z.single_count()); ++m)
        if (in_cell(z, a, psi, m))
            out.push_back(m);
    return out;
}

inline std::vector<Symbol> cell(const SpecialSymbolData& z, const Arrangement& a, PairMask psi)
{
    std::vector<Symbol> out;
    for (SubsetMask m : cell_masks(z, a, psi))
        out.push_back(lambda_of_mask(z, m));
    return out;
}

/* The Psi whose cell contains Lambda_M: pairs met in 0 or 2 elements. */
inline PairMask cell_of(const Arrangement& a, SubsetMask m)
{
    PairMask psi = 0;
    for (std::size_t i = 0; i < a.pairs.size(); ++i)
        if (std::popcount(m & a.pair_mask(i)) != 1)
            psi |= PairMask{1} << i;
    return psi;
}

/* Phi_1 = {s_i - t_i}, Phi_2 = {s_{i+1} - t_i} with s_1 - t_d closing the
 * cycle; s and t are the top and bottom singles of a defect 0 symbol. */
inline std::pair<Arrangement, Arrangement> cyclic_arrangements(const SpecialSymbolData& z)
{
    if (defect(z) != 0)
        throw domain_error("cyclic arrangements need a defect 0 symbol");
    int d = z.degree;
    Arrangement a1, a2;
    for (int i = 0; i < d; ++i) {
        a1.pairs.push_back({i, d + i});
        a2.pairs.push_back({(i + 1) % d, d + i});
    }
    return {a1, a2};
}

/* Recovers M with Lambda = Lambda_M over z; nullopt if the special
 * closure of Lambda is another symbol. */
inline std::optional<SubsetMask> subset_mask_of(const SpecialSymbolData& z, const Symbol& lambda)
{
    Symbol r = reduce(lambda);
    int d = defect(r);
    if (!(d % 2 == 0 || ((d % 4) + 4) % 4 == 1))
        return std::nullopt;
    auto c = special_closure(r);
    if (c.z != z.z)
        return std::nullopt;
    return mask_of_subset(z, c.m);
}

inline int pairing(const SpecialSymbolData& z, const Symbol& sigma, const Symbol& lambda)
{
    auto n = subset_mask_of(z, sigma);
    auto m = subset_mask_of(z, lambda);
    if (!n || !m)
        throw domain_error("pairing needs two symbols over the same special symbol");
    return std::popcount(*n & *m) % 2;
}

inline int pairing(const Symbol& sigma, const Symbol& lambda)
{
    return pairing(special_data(special_closure(sigma).z), sigma, lambda);
}

/* <R_Sigma, rho_Lambda> for Sigma in S_{Z,1} or S_{Z,0}: a signed power of
 * 2 when Lambda lies over the same Z, and 0 otherwise.  A degenerate Z of
 * defect 0 and degree 0 has the single coefficient 1. */
inline Rational uniform_coefficient(const Symbol& sigma, const Symbol& lambda)
{
    SpecialSymbolData z = special_data(special_closure(sigma).z);
    auto n = subset_mask_of(z, sigma);
    FamilyKind rows = defect(z) == 1 ? FamilyKind::S_Z1 : FamilyKind::S_Z0;
    if (!mask_in_family(z, *n, rows))
        throw domain_error(to_string(sigma) + " is not in " + family_kind_name(rows));
    auto m = subset_mask_of(z, lambda);
    if (!m)
        return Rational(0);
    if (defect(z) == 1 && !mask_in_family(z, *m, FamilyKind::S_Z))
        return Rational(0);
    int sign = std::popcount(*n & *m) % 2 == 0 ? 1 : -1;
    int d = z.degree;
    if (defect(z) == 1)
        return sign * pow2(-d);
    if (d == 0)
        return Rational(1);
    return sign * pow2(-(d - 1));
}

/* Norm <R_Sigma, R_Sigma> restricted to one family: 1 for defect 1, 2 for
 * defect 0 with d >= 1 (Sigma and its transpose span the same line). */
inline Rational uniform_norm(const SpecialSymbolData& z)
{
    if (defect(z) == 1 || z.degree == 0)
        return Rational(1);
    return Rational(2);
}

struct RationalMatrix {
    std::vector<Symbol> rows;
    std::vector<Symbol> cols;
    std::vector<std::vector<Rational>> entries;
};

inline std::vector<std::vector<Rational>> row_gram(const RationalMatrix& a)
{
    std::size_t n = a.rows.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s;
            for (std::size_t k = 0; k < a.cols.size(); ++k)
                s += a.entries[i][k] * a.entries[j][k];
            g[i][j] = s;
        }
    return g;
}

/* Transversal of S_{Z,0} under transposition: the member whose top row is
 * lexicographically >= its bottom row. */
inline bool is_transversal_representative(const Symbol& s) { return s.top.entries >= s.bottom.entries; }

struct ProjectionMatrix {
    /* <R_Sigma, rho_Lambda> */
    RationalMatrix uniform;
    /* coefficient of R_Sigma in the uniform projection of rho_Lambda:
     * uniform / uniform_norm, rows and columns as above */
    RationalMatrix expansion;
};

/* Rows: S_{Z,1}, or the transversal of S_{Z,0}.  Columns: S_Z, or S_Z^eps. */
inline ProjectionMatrix projection_matrix(const SpecialSymbolData& z, Sign eps = Sign::Plus)
{
    ProjectionMatrix p;
    bool one = defect(z) == 1;
    for (const auto& s : family(z, one ? FamilyKind::S_Z1 : FamilyKind::S_Z0))
        if (one || is_transversal_representative(s))
            p.uniform.rows.push_back(s);
    p.uniform.cols = family(z, one ? FamilyKind::S_Z : eps == Sign::Plus ? FamilyKind::S_Z_plus : FamilyKind::S_Z_minus);
    p.expansion.rows = p.uniform.rows;
    p.expansion.cols = p.uniform.cols;
    Rational norm = uniform_norm(z);
    for (const auto& r : p.uniform.rows) {
        std::vector<Rational> u, e;
        for (const auto& c : p.uniform.cols) {
            u.push_back(uniform_coefficient(r, c));
            e.push_back(u.back() / norm);
        }
        p.uniform.entries.push_back(std::move(u));
        p.expansion.entries.push_back(std::move(e));
    }
    return p;
}

/* All special symbols of rank n and defect d (0 or 1). */
inline std::vector<Symbol> special_symbols(int n, int d)
{
    std::vector<Symbol> out;
    for (auto& s : enumerate_symbols(n, d))
        if (is_special(s))
            out.push_back(s);
    return out;
}

} // namespace unipot

#endif
