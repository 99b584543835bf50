#include "unipot/lusztig.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace unipot;

namespace {

const OrbitToken U1{"u1", 1, OrbitKind::UnitaryOrbit};
const OrbitToken U1B{"u1b", 1, OrbitKind::UnitaryOrbit};
const OrbitToken U2{"u2", 2, OrbitKind::UnitaryOrbit};
const OrbitToken S1{"s1", 1, OrbitKind::SplitPairOrbit};

Symbol S(const char* t) { return parse_symbol(t); }

int label_rank(const Label& l)
{
    if (auto s = std::get_if<Symbol>(&l))
        return rank(*s);
    return std::get<Partition>(l).size();
}

/* Ranks of the +-1 blocks are read off the labels; the -1 block type
 * defaults to the family of its label. */
CharacterDescriptor make_char(GroupKind kind, std::optional<Sign> type,
                              std::vector<std::pair<OrbitToken, Partition>> orbits, Label plus,
                              Symbol minus = Symbol(), std::optional<Sign> odd = std::nullopt)
{
    CharacterDescriptor c;
    int n = 0;
    for (auto& [t, l] : orbits) {
        c.ss.orbit_mults[t] = l.size();
        c.labels1[t] = l;
        n += t.degree * l.size();
    }
    c.ss.nu_plus1 = label_rank(plus);
    c.ss.nu_minus1 = rank(minus);
    n += c.ss.nu_plus1 + c.ss.nu_minus1;
    c.ss.ambient = make_group(kind, n, type);
    if (kind == GroupKind::SOOdd || kind == GroupKind::OEven)
        c.ss.minus1_type = o_sign_of(minus);
    c.label_plus1 = plus;
    c.label_minus1 = minus;
    c.odd_o_sign = odd;
    validate(c);
    return c;
}

CharacterDescriptor sp_char(std::vector<std::pair<OrbitToken, Partition>> orbits, Symbol plus, Symbol minus = Symbol())
{
    return make_char(GroupKind::SOOdd, std::nullopt, std::move(orbits), plus, minus);
}

/* The cuspidal characters of Sp_4. */
CharacterDescriptor sp4_unitary_q2() { return sp_char({{U2, Partition{1}}}, S("0|-")); }
CharacterDescriptor sp4_unitary_pair() { return sp_char({{U1, Partition{1}}, {U1B, Partition{1}}}, S("0|-")); }
CharacterDescriptor sp4_unitary_o2(const char* minus) { return sp_char({{U1, Partition{1}}}, S("0|-"), S(minus)); }
CharacterDescriptor sp4_theta10() { return sp_char({}, S("-|2,1,0")); }

std::vector<std::string> names(const std::vector<GroupDescriptor>& gs)
{
    std::vector<std::string> v;
    for (const auto& g : gs)
        v.push_back(to_string(g));
    return v;
}

std::vector<OrbitToken> tokens_of(const CharacterDescriptor& c)
{
    std::vector<OrbitToken> v;
    for (const auto& [t, m] : c.ss.orbit_mults)
        v.push_back(t);
    return v;
}

std::vector<CharacterDescriptor> characters_up_to(GroupKind kind, int max_rank)
{
    std::vector<CharacterDescriptor> out;
    for (int n = 0; n <= max_rank; ++n) {
        std::vector<std::optional<Sign>> types{std::nullopt};
        if (kind == GroupKind::OEven)
            types = n == 0 ? std::vector<std::optional<Sign>>{Sign::Plus}
                           : std::vector<std::optional<Sign>>{Sign::Plus, Sign::Minus};
        for (auto t : types)
            for (auto& c : enumerate_characters(make_group(kind, n, t)))
                out.push_back(std::move(c));
    }
    return out;
}

Flavor flavors_of(GroupKind k, bool odd)
{
    if (k == GroupKind::Unitary)
        return Flavor::UnitaryPair;
    if (k == GroupKind::OEven)
        return Flavor::EvenOrthogonalPair;
    if (k == GroupKind::Sp)
        return Flavor::OddOrthogonalPair;
    return odd ? Flavor::OddOrthogonalPair : Flavor::EvenOrthogonalPair;
}

/* Smallest partner space dimension found by scanning partner groups of
 * increasing rank. For the unitary and Sp-even cases the scan is
 * restricted to one tower (given by want). */
int brute_first_dimension(const CharacterDescriptor& c, Flavor f, std::optional<Sign> want, int cap)
{
    auto pool = tokens_of(c);
    auto kind = c.ss.ambient.kind;
    for (int r = 0; r <= cap; ++r) {
        GroupDescriptor amb;
        if (kind == GroupKind::SOOdd && f == Flavor::EvenOrthogonalPair) {
            if (r == 0 && *want == Sign::Minus)
                continue;
            amb = make_group(GroupKind::OEven, r, *want);
        } else if (kind == GroupKind::SOOdd) {
            amb = make_group(GroupKind::Sp, r);
        } else if (kind == GroupKind::Unitary) {
            if (r % 2 != (*want == Sign::Plus ? 0 : 1))
                continue;
            amb = make_group(GroupKind::Unitary, r);
        } else {
            amb = make_group(GroupKind::SOOdd, r);
        }
        for (const auto& p : enumerate_characters(amb, pool))
            if (howe_occurs(c, p, f))
                return space_dimension(p);
    }
    return -1;
}

int closed_form_oracle(const CharacterDescriptor& c, Flavor f)
{
    /* 2 dim - 2 delta + const, with delta read from the label that
     * governs the dual pair */
    const auto& a = c.ss.ambient;
    int dim, k;
    Symbol gov;
    switch (a.kind) {
    case GroupKind::SOOdd:
        dim = 2 * a.parameter, k = 2;
        gov = f == Flavor::EvenOrthogonalPair ? std::get<Symbol>(c.label_plus1) : c.label_minus1;
        break;
    case GroupKind::OEven: dim = 2 * a.parameter, k = 0, gov = std::get<Symbol>(c.label_plus1); break;
    case GroupKind::Sp: dim = 2 * a.parameter + 1, k = 0, gov = std::get<Symbol>(c.label_plus1); break;
    default:
        dim = a.parameter, k = 1;
        gov = symbol_of_partition(std::get<Partition>(c.label_plus1));
        break;
    }
    return 2 * dim - 2 * delta_symbol(reduce(gov)) + k;
}

} // namespace

TEST(CentralizerFactors, Examples)
{
    EXPECT_EQ(names(centralizer_factors(sp4_unitary_q2().ss)), (std::vector<std::string>{"U_1(q^2)", "SO_1", "O+_0"}));
    EXPECT_EQ(names(centralizer_factors(sp4_unitary_pair().ss)),
              (std::vector<std::string>{"U_1", "U_1", "SO_1", "O+_0"}));
    EXPECT_EQ(names(centralizer_factors(sp4_unitary_o2("1,0|-").ss)),
              (std::vector<std::string>{"U_1", "SO_1", "O-_2"}));
    for (int n = 0; n <= 4; ++n) {
        auto c = unipotent_character(make_group(GroupKind::SOOdd, n), enumerate_family(n, SymbolFamily::Sp).front());
        auto f = centralizer_factors(c.ss);
        ASSERT_EQ(f.size(), 2u);
        EXPECT_EQ(f[0], c.ss.ambient);
        EXPECT_EQ(f[1].parameter, 0);
    }
    auto o = unipotent_character(make_group(GroupKind::OEven, 2, Sign::Minus), S("-|2,0"));
    EXPECT_EQ(names(centralizer_factors(o.ss)), (std::vector<std::string>{"O-_4", "O+_0"}));
}

TEST(CentralizerFactors, RejectsBrokenDescriptors)
{
    SemisimpleDescriptor s{make_group(GroupKind::SOOdd, 2), {{U1, 1}}, 0, 0, Sign::Plus};
    EXPECT_THROW(centralizer_factors(s), domain_error);
    s.nu_plus1 = 1;
    EXPECT_NO_THROW(centralizer_factors(s));
    s.minus1_type = Sign::Minus;
    EXPECT_THROW(centralizer_factors(s), domain_error);
    SemisimpleDescriptor u{make_group(GroupKind::Unitary, 2), {}, 1, 1, std::nullopt};
    EXPECT_THROW(centralizer_factors(u), domain_error);
    SemisimpleDescriptor o{make_group(GroupKind::OEven, 1, Sign::Plus), {{U1, 1}}, 0, 0, Sign::Plus};
    EXPECT_THROW(centralizer_factors(o), domain_error); /* the orbit factor forces type - */
    o.ambient.type_sign = Sign::Minus;
    EXPECT_NO_THROW(centralizer_factors(o));
}

TEST(XiFactors, Examples)
{
    for (int n = 1; n <= 3; ++n) {
        for (Sign e : {Sign::Plus, Sign::Minus}) {
            Symbol one = e == Sign::Plus ? Symbol({n}, {0}) : Symbol({}, {n, 0});
            auto c = pseudo_unipotent_character(one);
            auto even = xi_factors(c, Flavor::EvenOrthogonalPair);
            EXPECT_TRUE(even.g1.empty());
            EXPECT_EQ(even.g2, make_group(GroupKind::OEven, n, e));
            EXPECT_EQ(*even.g3, make_group(GroupKind::Sp, 0));
            auto odd = xi_factors(c, Flavor::OddOrthogonalPair);
            EXPECT_EQ(odd.g2, make_group(GroupKind::Sp, 0));
            EXPECT_EQ(*odd.g3, make_group(GroupKind::OEven, n, e));
            EXPECT_EQ(*odd.label3, one);
        }
        auto u = unipotent_character(make_group(GroupKind::SOOdd, n), enumerate_family(n, SymbolFamily::Sp).back());
        auto x = xi_factors(u, Flavor::EvenOrthogonalPair);
        EXPECT_EQ(x.g2, make_group(GroupKind::OEven, 0, Sign::Plus));
        EXPECT_EQ(*x.g3, make_group(GroupKind::Sp, n));
    }
    auto un = unipotent_character(make_group(GroupKind::Unitary, 3), Partition{2, 1});
    auto x = xi_factors(un, Flavor::UnitaryPair);
    EXPECT_FALSE(x.g3.has_value());
    EXPECT_EQ(x.g2, make_group(GroupKind::Unitary, 3));
    EXPECT_THROW(xi_factors(un, Flavor::EvenOrthogonalPair), domain_error);
    EXPECT_THROW(xi_factors(sp4_theta10(), Flavor::UnitaryPair), domain_error);
    auto o = unipotent_character(make_group(GroupKind::OEven, 1, Sign::Minus), S("1,0|-"));
    EXPECT_THROW(xi_factors(o, Flavor::OddOrthogonalPair), domain_error);
}

TEST(HoweOccurs, Examples)
{
    auto o2 = unipotent_character(make_group(GroupKind::OEven, 1, Sign::Minus), S("1,0|-"));
    EXPECT_TRUE(howe_occurs(sp4_theta10(), o2, Flavor::EvenOrthogonalPair));
    EXPECT_TRUE(howe_occurs(o2, sp4_theta10(), Flavor::EvenOrthogonalPair));
    auto sp0 = unipotent_character(make_group(GroupKind::SOOdd, 0), S("0|-"));
    auto o0 = unipotent_character(make_group(GroupKind::OEven, 0, Sign::Plus), S("-|-"));
    EXPECT_TRUE(howe_occurs(sp0, o0, Flavor::EvenOrthogonalPair));
    EXPECT_THROW(howe_occurs(sp0, sp0, Flavor::EvenOrthogonalPair), domain_error);
    EXPECT_THROW(howe_occurs(sp0, o0, Flavor::OddOrthogonalPair), domain_error);
}

/* chi_{eps'}: s has nu_-1 = n, and eta^(2) is 1 or sgn of O^{eps'}_{2n}. */
TEST(HoweOccurs, ChiEpsilonEvenTowers)
{
    for (int n = 1; n <= 3; ++n) {
        for (Sign ep : {Sign::Plus, Sign::Minus}) {
            Symbol one = ep == Sign::Plus ? Symbol({n}, {0}) : Symbol({}, {n, 0});
            for (const Symbol& l : {one, transpose(one)}) {
                auto chi = pseudo_unipotent_character(l);
                for (Sign e : {Sign::Plus, Sign::Minus}) {
                    for (int np = 0; np <= n + 2; ++np) {
                        if (np == 0 && e == Sign::Minus)
                            continue;
                        int count = 0;
                        for (const auto& c : enumerate_characters(make_group(GroupKind::OEven, np, e))) {
                            if (!howe_occurs(chi, c, Flavor::EvenOrthogonalPair))
                                continue;
                            ++count;
                            ASSERT_GE(np, n);
                            auto x = xi_factors(c, Flavor::EvenOrthogonalPair);
                            EXPECT_EQ(x.g2, make_group(GroupKind::OEven, n, ep));
                            int k = np - n;
                            Sign t = ep * e;
                            EXPECT_EQ(*x.g3, make_group(GroupKind::OEven, k, t));
                            Symbol triv = t == Sign::Plus ? reduce(Symbol({k}, {0})) : Symbol({}, {k, 0});
                            EXPECT_TRUE(*x.label3 == triv || *x.label3 == reduce(transpose(triv)))
                                << to_string(*x.label3);
                        }
                        if (np > n || (np == n && ep * e == Sign::Plus)) {
                            EXPECT_GT(count, 0) << n << " " << np;
                        }
                    }
                }
            }
        }
    }
}

/* The same characters against odd orthogonal groups: the memberships
 * ((n'-k+1,0|k), (n|0)) and ((n'-k+1,k|0), (0|n)) in B+, and
 * ((k,0|n'-k+1), (-|n,0)) and ((-|n'-k+1,k,0), (n,0|-)) in B-. */
TEST(HoweOccurs, ChiEpsilonOddTowers)
{
    for (int n = 1; n <= 4; ++n) {
        for (int np = 0; np <= 8; ++np) {
            for (int k = 0; k <= std::min(n, np); ++k)
                EXPECT_TRUE(in_b_plus(Symbol({np - k + 1, 0}, {k}), Symbol({n}, {0}))) << n << np << k;
            for (int k = 0; k <= std::min(n, np - n); ++k)
                EXPECT_TRUE(in_b_plus(Symbol({np - k + 1, k}, {0}), Symbol({0}, {n}))) << n << np << k;
            for (int k = 1; k <= std::min(n, np + 1); ++k)
                EXPECT_TRUE(in_b_minus(Symbol({k, 0}, {np - k + 1}), Symbol({}, {n, 0}))) << n << np << k;
            for (int k = 1; k <= std::min(n, np - n); ++k)
                EXPECT_TRUE(in_b_minus(Symbol({}, {np - k + 1, k, 0}), Symbol({n, 0}, {}))) << n << np << k;
        }
        /* one of the pair occurs from n' = 0, the other from n' = n (+)
         * or n' = n + 1 (-) */
        for (Sign ep : {Sign::Plus, Sign::Minus}) {
            Symbol one = ep == Sign::Plus ? Symbol({n}, {0}) : Symbol({}, {n, 0});
            auto chi = pseudo_unipotent_character(one);
            auto fo = first_occurrence_general(chi, Flavor::OddOrthogonalPair);
            EXPECT_EQ(fo.n_plus, 1);
            EXPECT_EQ(fo.n_minus, 2 * (ep == Sign::Plus ? n : n + 1) + 1);
            for (int np = 0; np <= n + 2; ++np) {
                bool exact_one = false, exact_sgn = false;
                for (const auto& l : enumerate_family(np, SymbolFamily::Sp)) {
                    exact_one = exact_one || in_b_sp_o(l, one, ep);
                    exact_sgn = exact_sgn || in_b_sp_o(l, transpose(one), ep);
                }
                EXPECT_TRUE(exact_one);
                EXPECT_EQ(exact_sgn, np >= (ep == Sign::Plus ? n : n + 1)) << n << " " << np;
            }
        }
    }
}

TEST(FirstOccurrence, CuspidalCatalogueOfSp4)
{
    struct Case {
        CharacterDescriptor c;
        int o_plus, o_minus; /* dims in the O+ and O- towers */
        std::set<int> odd;   /* odd orthogonal dims for eta, eta^natural */
    };
    std::vector<Case> cases{{sp4_unitary_q2(), 6, 4, {5}},
                            {sp4_unitary_pair(), 4, 6, {5}},
                            {sp4_unitary_o2("1,0|-"), 4, 6, {3, 7}},
                            {sp4_unitary_o2("-|1,0"), 4, 6, {3, 7}},
                            {sp4_theta10(), 8, 2, {5}}};
    for (const auto& k : cases) {
        EXPECT_TRUE(is_cuspidal(k.c));
        auto e = first_occurrence_general(k.c, Flavor::EvenOrthogonalPair);
        EXPECT_EQ(e.n_plus, k.o_plus);
        EXPECT_EQ(e.n_minus, k.o_minus);
        EXPECT_EQ(e.sum, 10);
        auto o = first_occurrence_general(k.c, Flavor::OddOrthogonalPair);
        EXPECT_EQ((std::set<int>{o.n_plus, o.n_minus}), k.odd);
        EXPECT_EQ(o.sum, 10);
    }
    /* the two members of family (3) split between O_3 and O_7 */
    EXPECT_EQ(first_occurrence_general(sp4_unitary_o2("1,0|-"), Flavor::OddOrthogonalPair).n_plus, 7);
    EXPECT_EQ(first_occurrence_general(sp4_unitary_o2("-|1,0"), Flavor::OddOrthogonalPair).n_plus, 3);
    /* partners of the U_1(q^2) family carry O-_4 = U_1(q^2) x O+_0 x O+_0 */
    auto p = first_partner(sp4_unitary_q2(), Flavor::EvenOrthogonalPair, Sign::Minus);
    EXPECT_EQ(p.ss.ambient, make_group(GroupKind::OEven, 2, Sign::Minus));
    EXPECT_EQ(names(centralizer_factors(p.ss)), (std::vector<std::string>{"U_1(q^2)", "O+_0", "O+_0"}));
}

TEST(FirstOccurrence, UnipotentReducesToSymbols)
{
    for (int n = 0; n <= 5; ++n) {
        for (const auto& l : enumerate_family(n, SymbolFamily::Sp)) {
            auto c = unipotent_character(make_group(GroupKind::SOOdd, n), l);
            auto fo = first_occurrence_general(c, Flavor::EvenOrthogonalPair);
            EXPECT_EQ(fo.n_plus, first_occurrence_unipotent(l, Tower::OPlus));
            EXPECT_EQ(fo.n_minus, first_occurrence_unipotent(l, Tower::OMinus));
            EXPECT_EQ(fo.sum, 4 * n - 2 * delta_symbol(reduce(l)) + 2);
        }
    }
}

TEST(FirstOccurrence, SumsMatchClosedFormUpToDimension12)
{
    struct Amb {
        GroupKind k;
        int max_rank;
    };
    long checked = 0;
    for (auto a : {Amb{GroupKind::SOOdd, 6}, Amb{GroupKind::OEven, 6}, Amb{GroupKind::Sp, 5}, Amb{GroupKind::Unitary, 12}}) {
        for (const auto& c : characters_up_to(a.k, a.max_rank)) {
            for (bool odd : {false, true}) {
                if (odd && a.k != GroupKind::SOOdd)
                    continue;
                Flavor f = flavors_of(a.k, odd);
                auto fo = first_occurrence_general(c, f);
                ASSERT_EQ(fo.n_plus + fo.n_minus, closed_form_oracle(c, f));
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 10000);
}

TEST(FirstOccurrence, PartnersOccurAndAreMinimal)
{
    struct Amb {
        GroupKind k;
        int max_rank;
    };
    for (auto a : {Amb{GroupKind::SOOdd, 3}, Amb{GroupKind::OEven, 3}, Amb{GroupKind::Sp, 2}, Amb{GroupKind::Unitary, 5}}) {
        for (const auto& c : characters_up_to(a.k, a.max_rank)) {
            for (bool odd : {false, true}) {
                if (odd && a.k != GroupKind::SOOdd)
                    continue;
                Flavor f = flavors_of(a.k, odd);
                auto fo = first_occurrence_general(c, f);
                for (Sign d : {Sign::Plus, Sign::Minus})
                    EXPECT_TRUE(howe_occurs(c, first_partner(c, f, d), f));
                int cap = std::max(fo.n_plus, fo.n_minus);
                bool tower_exact = a.k == GroupKind::Unitary || (a.k == GroupKind::SOOdd && !odd);
                if (tower_exact) {
                    EXPECT_EQ(brute_first_dimension(c, f, Sign::Plus, cap), fo.n_plus);
                    EXPECT_EQ(brute_first_dimension(c, f, Sign::Minus, cap), fo.n_minus);
                } else {
                    /* occurrence is insensitive to the sgn twist here */
                    EXPECT_EQ(brute_first_dimension(c, f, std::nullopt, cap), std::min(fo.n_plus, fo.n_minus));
                }
            }
        }
    }
}

TEST(HoweOccurs, SgnOrbitsAndSeriesCompatibility)
{
    auto sp = characters_up_to(GroupKind::SOOdd, 3);
    for (int np = 0; np <= 3; ++np) {
        for (Sign e : {Sign::Plus, Sign::Minus}) {
            if (np == 0 && e == Sign::Minus)
                continue;
            auto os = enumerate_characters(make_group(GroupKind::OEven, np, e));
            for (const auto& c : sp) {
                const CharacterDescriptor* first = nullptr;
                for (const auto& o : os) {
                    bool occ = howe_occurs(c, o, Flavor::EvenOrthogonalPair);
                    CharacterDescriptor flipped = o;
                    flipped.label_minus1 = reduce(transpose(o.label_minus1));
                    EXPECT_EQ(occ, howe_occurs(c, flipped, Flavor::EvenOrthogonalPair));
                    EXPECT_EQ(occ, howe_occurs(c, sgn_twist(o), Flavor::EvenOrthogonalPair));
                    if (!occ)
                        continue;
                    if (!first)
                        first = &o;
                    EXPECT_TRUE(same_series(first->ss, o.ss));
                }
            }
        }
    }
    auto odd_os = characters_up_to(GroupKind::Sp, 3);
    for (const auto& c : sp) {
        std::map<int, const CharacterDescriptor*> first;
        for (const auto& o : odd_os) {
            if (!howe_occurs(c, o, Flavor::OddOrthogonalPair))
                continue;
            EXPECT_TRUE(howe_occurs(c, sgn_twist(o), Flavor::OddOrthogonalPair));
            EXPECT_TRUE(howe_occurs(natural_partner(c), o, Flavor::OddOrthogonalPair));
            auto [it, fresh] = first.emplace(o.ss.ambient.parameter, &o);
            if (!fresh) {
                EXPECT_TRUE(same_series(it->second->ss, o.ss));
            }
        }
    }
}

TEST(NaturalPartner, InvolutionPreservingDelta)
{
    for (int n = 1; n <= 4; ++n) {
        auto c = pseudo_unipotent_character(Symbol({n}, {0}));
        EXPECT_EQ(natural_partner(c).label_minus1, Symbol({0}, {n}));
    }
    for (const auto& c : characters_up_to(GroupKind::SOOdd, 4)) {
        auto p = natural_partner(c);
        EXPECT_EQ(natural_partner(p), c);
        EXPECT_EQ(p.ss, c.ss);
        EXPECT_EQ(delta_of_character(p, Flavor::OddOrthogonalPair), delta_of_character(c, Flavor::OddOrthogonalPair));
    }
    auto o = unipotent_character(make_group(GroupKind::OEven, 1, Sign::Minus), S("1,0|-"));
    EXPECT_THROW(natural_partner(o), domain_error);
}

TEST(Delta, Examples)
{
    auto c = unipotent_character(make_group(GroupKind::SOOdd, rank(S("4,0|2"))), S("4,0|2"));
    EXPECT_EQ(delta_of_character(c, Flavor::EvenOrthogonalPair), 5);
    for (const auto& k : {sp4_unitary_q2(), sp4_unitary_pair(), sp4_unitary_o2("1,0|-"), sp4_theta10()}) {
        EXPECT_EQ(delta_of_character(k, Flavor::EvenOrthogonalPair), 0);
        EXPECT_EQ(delta_of_character(k, Flavor::OddOrthogonalPair), 0);
    }
    auto u = unipotent_character(make_group(GroupKind::Unitary, 3), Partition{2, 1});
    EXPECT_EQ(delta_of_character(u, Flavor::UnitaryPair), 0);
}

TEST(PseudoUnipotent, CuspidalExactlyAtSquares)
{
    for (int n = 0; n <= 30; ++n) {
        auto v = pseudo_unipotent_cuspidal(n);
        int m = 0;
        while ((m + 1) * (m + 1) <= n)
            ++m;
        if (m * m != n) {
            EXPECT_TRUE(v.empty()) << n;
            continue;
        }
        ASSERT_EQ(v.size(), m == 0 ? 1u : 2u) << n;
        std::set<Symbol> labels, expect;
        for (const auto& c : v) {
            EXPECT_TRUE(is_pseudo_unipotent(c));
            EXPECT_EQ(minus1_sign(c.ss), sign_of_parity(m));
            labels.insert(c.label_minus1);
        }
        for (const auto& s : cuspidal_symbol(o_family(sign_of_parity(m)), m))
            expect.insert(s);
        EXPECT_EQ(labels, expect);
    }
    std::set<Symbol> one;
    for (const auto& c : pseudo_unipotent_cuspidal(1))
        one.insert(c.label_minus1);
    EXPECT_EQ(one, (std::set<Symbol>{S("1,0|-"), S("-|1,0")}));
    auto z = pseudo_unipotent_cuspidal(0);
    EXPECT_TRUE(is_unipotent(z.front()) && is_pseudo_unipotent(z.front()));
}

TEST(CuspidalChain, StepExamples)
{
    for (int m = 0; m <= 3; ++m) {
        auto u = unipotent_character(make_group(GroupKind::SOOdd, m * (m + 1)), cuspidal_symbol(SymbolFamily::Sp, m).front());
        for (Sign d : {Sign::Plus, Sign::Minus}) {
            auto p = cuspidal_chain_step(u, Flavor::OddOrthogonalPair, d);
            EXPECT_EQ(p.ss.ambient, make_group(GroupKind::Sp, m * (m + 1)));
            EXPECT_EQ(space_dimension(p), 2 * m * (m + 1) + 1);
            EXPECT_TRUE(is_pseudo_unipotent(p));
            EXPECT_TRUE(is_cuspidal(p));
        }
    }
    for (int m = 1; m <= 4; ++m) {
        std::set<int> odd, even;
        for (const auto& c : pseudo_unipotent_cuspidal(m * m)) {
            for (Sign d : {Sign::Plus, Sign::Minus}) {
                auto p = cuspidal_chain_step(c, Flavor::OddOrthogonalPair, d);
                EXPECT_TRUE(is_unipotent(p));
                odd.insert(p.ss.ambient.parameter);
                even.insert(cuspidal_chain_step(c, Flavor::EvenOrthogonalPair, d).ss.ambient.parameter);
            }
        }
        EXPECT_EQ(odd, (std::set<int>{m * (m - 1), m * (m + 1)}));
        EXPECT_EQ(even, (std::set<int>{m * m, m * m + 1}));
    }
    auto nc = unipotent_character(make_group(GroupKind::SOOdd, 1), S("1|-"));
    EXPECT_THROW(cuspidal_chain_step(nc, Flavor::EvenOrthogonalPair, Sign::Plus), domain_error);
}

namespace {

/* 2 ((i-1)/2)((i+1)/2) for odd i, 2 (i/2)^2 for even i */
int base_dim(int i) { return i % 2 != 0 ? 2 * ((i - 1) / 2) * ((i + 1) / 2) : 2 * (i / 2) * (i / 2); }

void check_chain(const CharacterDescriptor& centre, Flavor f, int shift, bool odd_orth, const char* what)
{
    const int k = 4;
    auto chain = cuspidal_chain(centre, f, k);
    ASSERT_EQ(chain.size(), 2u * k + 1);
    for (int i = -k; i <= k; ++i) {
        const auto& c = chain[i + k];
        int expect = shift + base_dim(i) + (odd_orth && i % 2 != 0 ? 1 : 0);
        EXPECT_EQ(space_dimension(c), expect) << what << " i=" << i;
        EXPECT_TRUE(is_cuspidal(c)) << what << " i=" << i;
        if (i < k) {
            EXPECT_TRUE(howe_occurs(c, chain[i + k + 1], f)) << what << " i=" << i;
        }
    }
}

} // namespace

TEST(CuspidalChain, DimensionsOfTheFourCases)
{
    /* even orthogonal, unipotent: centred at O+_0 */
    auto o0 = unipotent_character(make_group(GroupKind::OEven, 0, Sign::Plus), Symbol());
    check_chain(o0, Flavor::EvenOrthogonalPair, 0, false, "even unipotent");
    for (const auto& c : cuspidal_chain(o0, Flavor::EvenOrthogonalPair, 4))
        EXPECT_TRUE(is_unipotent(c));
    for (int m = 1; m <= 2; ++m) {
        /* even orthogonal, pseudo-unipotent: centred at O_{2m^2} */
        Sign t = sign_of_parity(m);
        Symbol cusp = cuspidal_symbol(o_family(t), m).front();
        CharacterDescriptor c;
        c.ss.ambient = make_group(GroupKind::OEven, m * m, t);
        c.ss.nu_minus1 = m * m;
        c.ss.minus1_type = t;
        c.label_plus1 = Symbol();
        c.label_minus1 = cusp;
        validate(c);
        check_chain(c, Flavor::EvenOrthogonalPair, 2 * m * m, false, "even pseudo-unipotent");
        auto ch = cuspidal_chain(c, Flavor::EvenOrthogonalPair, 4);
        for (int i = -4; i <= 4; ++i)
            EXPECT_EQ(is_pseudo_unipotent(ch[i + 4]), std::abs(i) <= 1) << m << " " << i;
    }
    for (int m = 0; m <= 2; ++m) {
        /* odd orthogonal, unipotent symplectic centre */
        auto u = unipotent_character(make_group(GroupKind::SOOdd, m * (m + 1)), cuspidal_symbol(SymbolFamily::Sp, m).front());
        check_chain(u, Flavor::OddOrthogonalPair, 2 * m * (m + 1), true, "odd unipotent");
        auto ch = cuspidal_chain(u, Flavor::OddOrthogonalPair, 4);
        EXPECT_TRUE(is_pseudo_unipotent(ch[3]) && is_pseudo_unipotent(ch[5]));
    }
    /* odd orthogonal, pseudo-unipotent symplectic terms */
    auto sp0 = pseudo_unipotent_cuspidal(0).front();
    check_chain(sp0, Flavor::OddOrthogonalPair, 0, true, "odd pseudo-unipotent");
    auto ch = cuspidal_chain(sp0, Flavor::OddOrthogonalPair, 4);
    for (int i = -4; i <= 4; ++i)
        EXPECT_TRUE(i % 2 != 0 ? is_unipotent(ch[i + 4]) : is_pseudo_unipotent(ch[i + 4])) << i;
}
