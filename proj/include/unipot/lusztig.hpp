#ifndef UNIPOT_LUSZTIG_HPP
#define UNIPOT_LUSZTIG_HPP

/* Descriptor-level Lusztig correspondence. A semisimple class is an
 * abstract record of eigenvalue orbits with multiplicities plus the
 * +1 and -1 blocks; a character is such a record together with the
 * unipotent labels of the centralizer factors. */

#include "correspondence.hpp"
#include "symbols.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace unipot {

enum class GroupKind { Sp, SOOdd, OEven, SOEven, Unitary, GL };

inline const char* group_kind_name(GroupKind k)
{
    switch (k) {
    case GroupKind::Sp: return "Sp";
    case GroupKind::SOOdd: return "SOOdd";
    case GroupKind::OEven: return "OEven";
    case GroupKind::SOEven: return "SOEven";
    case GroupKind::Unitary: return "Unitary";
    case GroupKind::GL: return "GL";
    }
    return "?";
}

/* parameter: n for Sp_{2n}, SO_{2n+1}, O_{2n}, SO_{2n}; n for U_n, GL_n */
struct GroupDescriptor {
    GroupKind kind = GroupKind::Sp;
    int parameter = 0;
    std::optional<Sign> type_sign;
    int field_degree = 1;

    bool operator==(const GroupDescriptor&) const = default;
};

inline GroupDescriptor make_group(GroupKind k, int n, std::optional<Sign> t = std::nullopt, int d = 1)
{
    return GroupDescriptor{k, n, t, d};
}

/* Dimension of the natural module over the base field. */
inline int natural_dimension(const GroupDescriptor& g)
{
    switch (g.kind) {
    case GroupKind::Sp:
    case GroupKind::OEven:
    case GroupKind::SOEven: return 2 * g.parameter;
    case GroupKind::SOOdd: return 2 * g.parameter + 1;
    case GroupKind::Unitary:
    case GroupKind::GL: return g.parameter * g.field_degree;
    }
    return 0;
}

/* Sp_4, SO_5, O+_4, SO-_2, U_1(q^2), GL_2 */
inline std::string to_string(const GroupDescriptor& g)
{
    std::string t = g.type_sign ? sign_text(*g.type_sign) : "";
    std::string field = g.field_degree > 1 ? "(q^" + std::to_string(g.field_degree) + ")" : "";
    switch (g.kind) {
    case GroupKind::Sp: return "Sp_" + std::to_string(2 * g.parameter);
    case GroupKind::SOOdd: return "SO_" + std::to_string(2 * g.parameter + 1);
    case GroupKind::OEven: return "O" + t + "_" + std::to_string(2 * g.parameter);
    case GroupKind::SOEven: return "SO" + t + "_" + std::to_string(2 * g.parameter);
    case GroupKind::Unitary: return "U_" + std::to_string(g.parameter) + field;
    case GroupKind::GL: return "GL_" + std::to_string(g.parameter) + field;
    }
    return "?";
}

enum class OrbitKind { UnitaryOrbit, SplitPairOrbit };

inline const char* orbit_kind_name(OrbitKind k) { return k == OrbitKind::UnitaryOrbit ? "UnitaryOrbit" : "SplitPairOrbit"; }

/* degree is the field degree d of the factor U_nu(q^d) or GL_nu(q^d) */
struct OrbitToken {
    std::string id;
    int degree = 1;
    OrbitKind kind = OrbitKind::UnitaryOrbit;

    bool operator==(const OrbitToken& o) const { return id == o.id; }
    bool operator<(const OrbitToken& o) const { return id < o.id; }
};

/* ambient is the dual group G* in which the class lives:
 *   SOOdd n -> characters of Sp_{2n}
 *   Sp n    -> characters of O_{2n+1}
 *   OEven n -> characters of O^eps_{2n}
 *   Unitary -> characters of U_n */
struct SemisimpleDescriptor {
    GroupDescriptor ambient;
    std::map<OrbitToken, int> orbit_mults;
    int nu_plus1 = 0;
    int nu_minus1 = 0;
    std::optional<Sign> minus1_type;

    bool operator==(const SemisimpleDescriptor&) const = default;
};

using Label = std::variant<Symbol, Partition>;

inline std::string label_to_string(const Label& l)
{
    if (auto s = std::get_if<Symbol>(&l))
        return to_string(*s);
    return to_string(std::get<Partition>(l));
}

struct CharacterDescriptor {
    SemisimpleDescriptor ss;
    std::map<OrbitToken, Partition> labels1;
    Label label_plus1 = Symbol({0}, {});
    Symbol label_minus1;
    std::optional<Sign> odd_o_sign;

    bool operator==(const CharacterDescriptor&) const = default;
};

enum class Flavor { EvenOrthogonalPair, OddOrthogonalPair, UnitaryPair };

inline const char* flavor_name(Flavor f)
{
    switch (f) {
    case Flavor::EvenOrthogonalPair: return "EvenOrthogonalPair";
    case Flavor::OddOrthogonalPair: return "OddOrthogonalPair";
    case Flavor::UnitaryPair: return "UnitaryPair";
    }
    return "?";
}

/* ---------- semisimple descriptors ---------- */

inline int orbit_rank(const SemisimpleDescriptor& s)
{
    int r = 0;
    for (const auto& [t, m] : s.orbit_mults)
        r += t.degree * m;
    return r;
}

inline Sign minus1_sign(const SemisimpleDescriptor& s) { return s.minus1_type.value_or(Sign::Plus); }

/* Even orthogonal type absorbed by the orbit factors. */
inline Sign g1_type(const SemisimpleDescriptor& s)
{
    long long k = 0;
    for (const auto& [t, m] : s.orbit_mults)
        if (t.kind == OrbitKind::UnitaryOrbit)
            k += m;
    return sign_of_parity(k);
}

/* Type of the +1 block of an even orthogonal ambient. */
inline Sign plus1_type(const SemisimpleDescriptor& s)
{
    if (s.ambient.kind != GroupKind::OEven)
        throw domain_error("the +1 block carries a type only in an even orthogonal ambient");
    return s.ambient.type_sign.value_or(Sign::Plus) * g1_type(s) * minus1_sign(s);
}

inline void validate(const SemisimpleDescriptor& s)
{
    const auto& a = s.ambient;
    if (a.parameter < 0 || s.nu_plus1 < 0 || s.nu_minus1 < 0)
        throw domain_error("negative rank in semisimple descriptor");
    if (a.field_degree != 1)
        throw domain_error("ambient group must be over the base field");
    for (const auto& [t, m] : s.orbit_mults) {
        if (t.degree < 1 || m < 1)
            throw domain_error("orbit " + t.id + " needs degree >= 1 and multiplicity >= 1");
    }
    if (orbit_rank(s) + s.nu_plus1 + s.nu_minus1 != a.parameter)
        throw domain_error("orbit ranks and nu_{+-1} do not add up to the ambient rank");
    bool o_minus_block = a.kind == GroupKind::SOOdd || a.kind == GroupKind::OEven;
    switch (a.kind) {
    case GroupKind::SOOdd:
    case GroupKind::Sp:
        if (a.type_sign)
            throw domain_error("ambient " + to_string(a) + " carries no type");
        break;
    case GroupKind::OEven:
        if (!a.type_sign)
            throw domain_error("even orthogonal ambient needs a type");
        if (a.parameter == 0 && *a.type_sign == Sign::Minus)
            throw domain_error("O-_0 does not exist");
        break;
    case GroupKind::Unitary:
        if (a.type_sign)
            throw domain_error("unitary ambient carries no type");
        if (s.nu_minus1 != 0)
            throw domain_error("unitary ambient has no -1 block");
        break;
    default: throw domain_error("unsupported ambient kind " + std::string(group_kind_name(a.kind)));
    }
    if (o_minus_block) {
        if (!s.minus1_type)
            throw domain_error("-1 block needs a type");
        if (s.nu_minus1 == 0 && minus1_sign(s) == Sign::Minus)
            throw domain_error("O-_0 does not exist");
        if (a.kind == GroupKind::OEven && s.nu_plus1 == 0 && plus1_type(s) == Sign::Minus)
            throw domain_error("type signs force a +1 block O-_0");
    } else if (s.minus1_type) {
        throw domain_error("ambient " + to_string(a) + " has no typed -1 block");
    }
}

/* One factor per orbit, then the +1 block, then the -1 block. */
inline std::vector<GroupDescriptor> centralizer_factors(const SemisimpleDescriptor& s)
{
    validate(s);
    std::vector<GroupDescriptor> out;
    for (const auto& [t, m] : s.orbit_mults) {
        GroupKind k = t.kind == OrbitKind::UnitaryOrbit ? GroupKind::Unitary : GroupKind::GL;
        out.push_back(make_group(k, m, std::nullopt, t.degree));
    }
    switch (s.ambient.kind) {
    case GroupKind::SOOdd:
        out.push_back(make_group(GroupKind::SOOdd, s.nu_plus1));
        out.push_back(make_group(GroupKind::OEven, s.nu_minus1, minus1_sign(s)));
        break;
    case GroupKind::Sp:
        out.push_back(make_group(GroupKind::Sp, s.nu_plus1));
        out.push_back(make_group(GroupKind::Sp, s.nu_minus1));
        break;
    case GroupKind::OEven:
        out.push_back(make_group(GroupKind::OEven, s.nu_plus1, plus1_type(s)));
        out.push_back(make_group(GroupKind::OEven, s.nu_minus1, minus1_sign(s)));
        break;
    default: out.push_back(make_group(GroupKind::Unitary, s.nu_plus1)); break;
    }
    return out;
}

/* Data of the orbit part up to relabelling of tokens. */
using OrbitShape = std::tuple<int, OrbitKind, int>;

inline std::vector<OrbitShape> orbit_shape(const SemisimpleDescriptor& s)
{
    std::vector<OrbitShape> v;
    for (const auto& [t, m] : s.orbit_mults)
        v.emplace_back(t.degree, t.kind, m);
    std::sort(v.begin(), v.end());
    return v;
}

/* Equal up to a bijection of orbit tokens. */
inline bool same_series(const SemisimpleDescriptor& a, const SemisimpleDescriptor& b)
{
    return a.ambient == b.ambient && a.nu_plus1 == b.nu_plus1 && a.nu_minus1 == b.nu_minus1 &&
           minus1_sign(a) == minus1_sign(b) && orbit_shape(a) == orbit_shape(b);
}

/* ---------- character descriptors ---------- */

/* The group whose character this is, as text. */
inline std::string character_group_name(const SemisimpleDescriptor& s)
{
    const auto& a = s.ambient;
    switch (a.kind) {
    case GroupKind::SOOdd: return "Sp_" + std::to_string(2 * a.parameter);
    case GroupKind::Sp: return "O_" + std::to_string(2 * a.parameter + 1);
    case GroupKind::OEven: return to_string(a);
    case GroupKind::Unitary: return to_string(a);
    default: return "?";
    }
}

/* dim of the space the character's group acts on */
inline int space_dimension(const CharacterDescriptor& c)
{
    const auto& a = c.ss.ambient;
    return a.kind == GroupKind::Sp ? 2 * a.parameter + 1 : a.kind == GroupKind::SOOdd ? 2 * a.parameter
                                                                                       : natural_dimension(a);
}

inline const Symbol& plus1_symbol(const CharacterDescriptor& c)
{
    if (auto s = std::get_if<Symbol>(&c.label_plus1))
        return *s;
    throw domain_error("+1 block label is a partition");
}

inline const Partition& plus1_partition(const CharacterDescriptor& c)
{
    if (auto p = std::get_if<Partition>(&c.label_plus1))
        return *p;
    throw domain_error("+1 block label is a symbol");
}

namespace detail {

inline void check_symbol(const Symbol& s, SymbolFamily f, int r, const char* what)
{
    if (!in_family(s, f) || rank(s) != r)
        throw domain_error(std::string(what) + " label " + to_string(s) + " must lie in the " + family_name(f) +
                           " family of rank " + std::to_string(r));
}

} // namespace detail

inline void validate(const CharacterDescriptor& c)
{
    validate(c.ss);
    if (c.labels1.size() != c.ss.orbit_mults.size())
        throw domain_error("one label per orbit is required");
    for (const auto& [t, m] : c.ss.orbit_mults) {
        auto it = c.labels1.find(t);
        if (it == c.labels1.end())
            throw domain_error("orbit " + t.id + " has no label");
        if (it->first.degree != t.degree || it->first.kind != t.kind)
            throw domain_error("orbit " + t.id + " label token disagrees with the class");
        if (it->second.size() != m)
            throw domain_error("orbit " + t.id + " label must be a partition of its multiplicity");
    }
    const auto kind = c.ss.ambient.kind;
    if (kind == GroupKind::Unitary) {
        if (plus1_partition(c).size() != c.ss.nu_plus1)
            throw domain_error("+1 block label must be a partition of nu_1");
        if (reduce(c.label_minus1) != Symbol())
            throw domain_error("unitary characters have no -1 block label");
    } else {
        const Symbol& p = plus1_symbol(c);
        SymbolFamily pf = kind == GroupKind::OEven ? o_family(plus1_type(c.ss)) : SymbolFamily::Sp;
        detail::check_symbol(p, pf, c.ss.nu_plus1, "+1 block");
        SymbolFamily mf = kind == GroupKind::Sp ? SymbolFamily::Sp : o_family(minus1_sign(c.ss));
        detail::check_symbol(c.label_minus1, mf, c.ss.nu_minus1, "-1 block");
    }
    if ((kind == GroupKind::Sp) != c.odd_o_sign.has_value())
        throw domain_error("odd_o_sign is required exactly for odd orthogonal characters");
}

/* Every centralizer factor carries a cuspidal unipotent label. GL
 * factors of positive rank are Levi factors and never cuspidal. */
inline bool is_cuspidal(const CharacterDescriptor& c)
{
    validate(c);
    for (const auto& [t, l] : c.labels1) {
        if (t.kind == OrbitKind::SplitPairOrbit)
            return false;
        if (two_core(l) != l)
            return false;
    }
    if (auto p = std::get_if<Partition>(&c.label_plus1))
        return two_core(*p) == *p;
    return is_cuspidal(plus1_symbol(c)) && is_cuspidal(c.label_minus1);
}

/* s = -1 in the dual group (n = 0 counts as both). */
inline bool is_pseudo_unipotent(const CharacterDescriptor& c)
{
    return c.ss.orbit_mults.empty() && c.ss.nu_plus1 == 0 && c.ss.ambient.kind != GroupKind::Unitary;
}

inline bool is_unipotent(const CharacterDescriptor& c) { return c.ss.orbit_mults.empty() && c.ss.nu_minus1 == 0; }

namespace detail {

inline void check_flavor(const CharacterDescriptor& c, Flavor f)
{
    auto k = c.ss.ambient.kind;
    bool ok = k == GroupKind::SOOdd ? f != Flavor::UnitaryPair
              : k == GroupKind::OEven ? f == Flavor::EvenOrthogonalPair
              : k == GroupKind::Sp    ? f == Flavor::OddOrthogonalPair
                                      : f == Flavor::UnitaryPair;
    if (!ok)
        throw domain_error(std::string("flavor ") + flavor_name(f) + " does not fit characters of " +
                           character_group_name(c.ss));
}

} // namespace detail

struct XiFactors {
    std::vector<std::pair<GroupDescriptor, Partition>> g1;
    GroupDescriptor g2;
    Label label2;
    std::optional<GroupDescriptor> g3;
    std::optional<Symbol> label3;
};

/* G^(1), G^(2), G^(3) with their unipotent labels.
 *   Sp, even:  G2 = -1 block O_{2nu_-1}, G3 = Sp_{2nu_1} dual of the +1 block
 *   Sp, odd:   G2 = Sp_{2nu_1}, G3 = -1 block O_{2nu_-1}
 *   O even:    G2 = -1 block, G3 = +1 block
 *   O odd:     G2 = Sp_{2nu_-1}, G3 = Sp_{2nu_1}
 *   unitary:   G2 = +1 block, no G3 */
inline XiFactors xi_factors(const CharacterDescriptor& c, Flavor f)
{
    validate(c);
    detail::check_flavor(c, f);
    const auto& s = c.ss;
    XiFactors x;
    for (const auto& [t, m] : s.orbit_mults) {
        GroupKind k = t.kind == OrbitKind::UnitaryOrbit ? GroupKind::Unitary : GroupKind::GL;
        x.g1.emplace_back(make_group(k, m, std::nullopt, t.degree), c.labels1.at(t));
    }
    GroupDescriptor sp_plus = make_group(GroupKind::Sp, s.nu_plus1);
    GroupDescriptor o_minus = make_group(GroupKind::OEven, s.nu_minus1, minus1_sign(s));
    switch (s.ambient.kind) {
    case GroupKind::SOOdd:
        if (f == Flavor::EvenOrthogonalPair) {
            x.g2 = o_minus, x.label2 = c.label_minus1;
            x.g3 = sp_plus, x.label3 = plus1_symbol(c);
        } else {
            x.g2 = sp_plus, x.label2 = plus1_symbol(c);
            x.g3 = o_minus, x.label3 = c.label_minus1;
        }
        break;
    case GroupKind::OEven:
        x.g2 = o_minus, x.label2 = c.label_minus1;
        x.g3 = make_group(GroupKind::OEven, s.nu_plus1, plus1_type(s)), x.label3 = plus1_symbol(c);
        break;
    case GroupKind::Sp:
        x.g2 = make_group(GroupKind::Sp, s.nu_minus1), x.label2 = c.label_minus1;
        x.g3 = sp_plus, x.label3 = plus1_symbol(c);
        break;
    default:
        x.g2 = make_group(GroupKind::Unitary, s.nu_plus1), x.label2 = c.label_plus1;
        break;
    }
    return x;
}

/* delta of the distinguished label: G^(3) for Sp/O flavors, G^(2) for
 * unitary groups (through the symbol of the partition). */
inline int delta_of_character(const CharacterDescriptor& c, Flavor f)
{
    auto x = xi_factors(c, f);
    if (x.label3)
        return delta_symbol(reduce(*x.label3));
    return delta_symbol(symbol_of_partition(std::get<Partition>(x.label2)));
}

/* eta^natural: transpose the even orthogonal G^(3) label of an Sp
 * character in the odd orthogonal flavor. */
inline CharacterDescriptor natural_partner(const CharacterDescriptor& c)
{
    validate(c);
    if (c.ss.ambient.kind != GroupKind::SOOdd)
        throw domain_error("natural_partner needs a character of a symplectic group");
    CharacterDescriptor out = c;
    out.label_minus1 = reduce(transpose(c.label_minus1));
    return out;
}

/* eta * sgn for orthogonal characters. */
inline CharacterDescriptor sgn_twist(const CharacterDescriptor& c)
{
    validate(c);
    CharacterDescriptor out = c;
    if (c.ss.ambient.kind == GroupKind::OEven) {
        out.label_plus1 = reduce(transpose(plus1_symbol(c)));
        out.label_minus1 = reduce(transpose(c.label_minus1));
    } else if (c.ss.ambient.kind == GroupKind::Sp) {
        out.odd_o_sign = -*c.odd_o_sign;
    } else {
        throw domain_error("sgn twist needs an orthogonal group");
    }
    return out;
}

/* ---------- occurrence ---------- */

namespace detail {

using G1Entry = std::tuple<int, OrbitKind, int, Partition>;

inline std::vector<G1Entry> g1_multiset(const CharacterDescriptor& c)
{
    std::vector<G1Entry> v;
    for (const auto& [t, m] : c.ss.orbit_mults)
        v.emplace_back(t.degree, t.kind, m, c.labels1.at(t));
    std::sort(v.begin(), v.end());
    return v;
}

inline bool equal_up_to_transpose(const Symbol& a, const Symbol& b)
{
    Symbol ra = reduce(a), rb = reduce(b);
    return ra == rb || ra == reduce(transpose(rb));
}

} // namespace detail

/* Whether chi (x) chi' occurs in the correspondence for the dual pair of
 * their groups. Either argument may be the symplectic one. */
inline bool howe_occurs(const CharacterDescriptor& a, const CharacterDescriptor& b, Flavor f)
{
    validate(a);
    validate(b);
    auto ka = a.ss.ambient.kind, kb = b.ss.ambient.kind;
    if (f == Flavor::UnitaryPair) {
        if (ka != GroupKind::Unitary || kb != GroupKind::Unitary)
            throw domain_error("unitary pair needs two unitary characters");
        return detail::g1_multiset(a) == detail::g1_multiset(b) &&
               in_b_uu(plus1_partition(a), plus1_partition(b)).has_value();
    }
    GroupKind other = f == Flavor::EvenOrthogonalPair ? GroupKind::OEven : GroupKind::Sp;
    if (ka == other && kb == GroupKind::SOOdd)
        return howe_occurs(b, a, f);
    if (ka != GroupKind::SOOdd || kb != other)
        throw domain_error(std::string("characters do not form a dual pair of flavor ") + flavor_name(f));
    const CharacterDescriptor& sp = a;
    const CharacterDescriptor& o = b;
    if (detail::g1_multiset(sp) != detail::g1_multiset(o))
        return false;
    if (f == Flavor::EvenOrthogonalPair) {
        if (sp.ss.nu_minus1 != o.ss.nu_minus1 || minus1_sign(sp.ss) != minus1_sign(o.ss))
            return false;
        if (!detail::equal_up_to_transpose(sp.label_minus1, o.label_minus1))
            return false;
        Sign e3 = plus1_type(o.ss);
        const Symbol& l = plus1_symbol(sp);
        const Symbol& r = plus1_symbol(o);
        return in_b_sp_o(l, r, e3) || in_b_sp_o(l, transpose(r), e3);
    }
    if (sp.ss.nu_plus1 != o.ss.nu_minus1 || reduce(plus1_symbol(sp)) != reduce(o.label_minus1))
        return false;
    Sign e3 = minus1_sign(sp.ss);
    const Symbol& l = plus1_symbol(o);
    return in_b_sp_o(l, sp.label_minus1, e3) || in_b_sp_o(l, transpose(sp.label_minus1), e3);
}

/* ---------- first occurrence ---------- */

struct FirstOccurrence {
    /* dimensions of the first partner spaces in the two towers:
     *   Sp, even flavor: O+ and O- towers
     *   Sp, odd flavor:  eta and eta^natural
     *   O even or odd:   eta and eta * sgn
     *   unitary:         even and odd dimensional spaces */
    int n_plus = 0;
    int n_minus = 0;
    int sum = 0; /* closed form */
};

/* 2 dim(v) - 2 delta + c with c per dual pair type. */
inline int first_occurrence_closed_form(const CharacterDescriptor& c, Flavor f)
{
    int dim = space_dimension(c);
    int delta = delta_of_character(c, f);
    switch (c.ss.ambient.kind) {
    case GroupKind::SOOdd: return 2 * dim - 2 * delta + 2;
    case GroupKind::OEven:
    case GroupKind::Sp: return 2 * dim - 2 * delta;
    default: return 2 * dim - 2 * delta + 1;
    }
}

/* Partner descriptor in the indicated tower (see FirstOccurrence for
 * the meaning of the sign). */
inline CharacterDescriptor first_partner(const CharacterDescriptor& c, Flavor f, Sign dir)
{
    validate(c);
    detail::check_flavor(c, f);
    const auto& s = c.ss;
    CharacterDescriptor p;
    p.ss.orbit_mults = s.orbit_mults;
    p.labels1 = c.labels1;
    const int g1 = orbit_rank(s);
    switch (s.ambient.kind) {
    case GroupKind::SOOdd:
        if (f == Flavor::EvenOrthogonalPair) {
            /* O^dir tower: the +1 block type is dir * eps_G1 * eps_G2 */
            Sign e3 = dir * g1_type(s) * minus1_sign(s);
            Symbol t = theta0_sp(plus1_symbol(c), e3);
            p.ss.nu_minus1 = s.nu_minus1;
            p.ss.minus1_type = s.minus1_type;
            p.label_minus1 = c.label_minus1;
            p.ss.nu_plus1 = rank(t);
            p.label_plus1 = t;
            p.ss.ambient = make_group(GroupKind::OEven, g1 + p.ss.nu_minus1 + p.ss.nu_plus1, dir);
        } else {
            Symbol m = dir == Sign::Plus ? c.label_minus1 : transpose(c.label_minus1);
            Symbol t = theta0_even_o(m);
            p.ss.nu_minus1 = s.nu_plus1;
            p.label_minus1 = plus1_symbol(c);
            p.ss.nu_plus1 = rank(t);
            p.label_plus1 = t;
            p.odd_o_sign = minus1_sign(s);
            p.ss.ambient = make_group(GroupKind::Sp, g1 + p.ss.nu_minus1 + p.ss.nu_plus1);
        }
        break;
    case GroupKind::OEven: {
        Symbol l = dir == Sign::Plus ? plus1_symbol(c) : transpose(plus1_symbol(c));
        Symbol t = theta0_even_o(l);
        p.ss.nu_minus1 = s.nu_minus1;
        p.ss.minus1_type = s.minus1_type;
        p.label_minus1 = dir == Sign::Plus ? c.label_minus1 : reduce(transpose(c.label_minus1));
        p.ss.nu_plus1 = rank(t);
        p.label_plus1 = t;
        p.ss.ambient = make_group(GroupKind::SOOdd, g1 + p.ss.nu_minus1 + p.ss.nu_plus1);
        break;
    }
    case GroupKind::Sp: {
        Sign e = dir * *c.odd_o_sign;
        Symbol t = theta0_sp(plus1_symbol(c), e);
        p.ss.nu_plus1 = s.nu_minus1;
        p.label_plus1 = c.label_minus1;
        p.ss.nu_minus1 = rank(t);
        p.label_minus1 = t;
        p.ss.minus1_type = e;
        p.ss.ambient = make_group(GroupKind::SOOdd, g1 + p.ss.nu_minus1 + p.ss.nu_plus1);
        break;
    }
    default: {
        /* even tower for +, odd tower for - */
        int want = dir == Sign::Plus ? 0 : 1;
        for (Sign e : {Sign::Plus, Sign::Minus}) {
            Partition t = unitary_theta0(plus1_partition(c), e);
            if ((g1 + t.size()) % 2 == want) {
                p.label_plus1 = t;
                p.ss.nu_plus1 = t.size();
            }
        }
        p.ss.ambient = make_group(GroupKind::Unitary, g1 + p.ss.nu_plus1);
        break;
    }
    }
    validate(p);
    return p;
}

/* Individual first occurrences by reduction to the unipotent labels;
 * throws if they do not add up to the closed form. */
inline FirstOccurrence first_occurrence_general(const CharacterDescriptor& c, Flavor f)
{
    FirstOccurrence r;
    r.n_plus = space_dimension(first_partner(c, f, Sign::Plus));
    r.n_minus = space_dimension(first_partner(c, f, Sign::Minus));
    r.sum = first_occurrence_closed_form(c, f);
    if (r.n_plus + r.n_minus != r.sum)
        throw std::logic_error("first occurrences do not add up to the closed form");
    return r;
}

/* ---------- enumeration ---------- */

inline std::vector<OrbitToken> default_token_pool()
{
    return {{"s1", 1, OrbitKind::SplitPairOrbit},
            {"u1", 1, OrbitKind::UnitaryOrbit},
            {"u1b", 1, OrbitKind::UnitaryOrbit},
            {"u2", 2, OrbitKind::UnitaryOrbit}};
}

namespace detail {

inline void orbit_assignments(const std::vector<OrbitToken>& pool, std::size_t i, int budget,
                              std::map<OrbitToken, int>& cur, std::vector<std::map<OrbitToken, int>>& out)
{
    if (i == pool.size()) {
        out.push_back(cur);
        return;
    }
    for (int m = 0; m * pool[i].degree <= budget; ++m) {
        if (m > 0)
            cur[pool[i]] = m;
        orbit_assignments(pool, i + 1, budget - m * pool[i].degree, cur, out);
    }
    cur.erase(pool[i]);
}

inline void label_products(const std::vector<std::pair<OrbitToken, int>>& orbits, std::size_t i,
                           std::map<OrbitToken, Partition>& cur, std::vector<std::map<OrbitToken, Partition>>& out)
{
    if (i == orbits.size()) {
        out.push_back(cur);
        return;
    }
    for (const auto& p : partitions_of(orbits[i].second)) {
        cur[orbits[i].first] = p;
        label_products(orbits, i + 1, cur, out);
    }
    cur.erase(orbits[i].first);
}

} // namespace detail

/* All valid character descriptors whose class lives in the given
 * ambient, with orbits drawn from the token pool. */
inline std::vector<CharacterDescriptor> enumerate_characters(const GroupDescriptor& ambient,
                                                             const std::vector<OrbitToken>& pool = default_token_pool())
{
    std::vector<CharacterDescriptor> out;
    std::vector<std::map<OrbitToken, int>> assigns;
    std::map<OrbitToken, int> cur;
    detail::orbit_assignments(pool, 0, ambient.parameter, cur, assigns);
    const bool unitary = ambient.kind == GroupKind::Unitary;
    for (const auto& orbits : assigns) {
        SemisimpleDescriptor base{ambient, orbits, 0, 0, std::nullopt};
        int rest = ambient.parameter - orbit_rank(base);
        std::vector<std::map<OrbitToken, Partition>> labels;
        std::map<OrbitToken, Partition> lcur;
        detail::label_products({orbits.begin(), orbits.end()}, 0, lcur, labels);
        for (int nm = 0; nm <= (unitary ? 0 : rest); ++nm) {
            std::vector<std::optional<Sign>> types{std::nullopt};
            if (ambient.kind == GroupKind::SOOdd || ambient.kind == GroupKind::OEven)
                types = nm == 0 ? std::vector<std::optional<Sign>>{Sign::Plus}
                                : std::vector<std::optional<Sign>>{Sign::Plus, Sign::Minus};
            for (auto t : types) {
                SemisimpleDescriptor s = base;
                s.nu_plus1 = rest - nm;
                s.nu_minus1 = nm;
                s.minus1_type = t;
                try {
                    validate(s);
                } catch (const domain_error&) {
                    continue;
                }
                std::vector<Label> plus_labels;
                std::vector<Symbol> minus_labels{Symbol()};
                if (unitary) {
                    for (auto& p : partitions_of(s.nu_plus1))
                        plus_labels.push_back(p);
                } else {
                    SymbolFamily pf = ambient.kind == GroupKind::OEven ? o_family(plus1_type(s)) : SymbolFamily::Sp;
                    for (auto& sym : enumerate_family(s.nu_plus1, pf))
                        plus_labels.push_back(sym);
                    SymbolFamily mf = ambient.kind == GroupKind::Sp ? SymbolFamily::Sp : o_family(minus1_sign(s));
                    minus_labels = enumerate_family(s.nu_minus1, mf);
                }
                std::vector<std::optional<Sign>> signs{std::nullopt};
                if (ambient.kind == GroupKind::Sp)
                    signs = {Sign::Plus, Sign::Minus};
                for (const auto& l1 : labels)
                    for (const auto& lp : plus_labels)
                        for (const auto& lm : minus_labels)
                            for (auto e : signs)
                                out.push_back(CharacterDescriptor{s, l1, lp, lm, e});
            }
        }
    }
    return out;
}

/* ---------- pseudo-unipotent cuspidal characters ---------- */

/* Cuspidal characters of Sp_{2n} whose class is -1 in SO_{2n+1}: the
 * orbit part and the +1 block are empty, so only the -1 block label
 * varies. */
inline std::vector<CharacterDescriptor> pseudo_unipotent_cuspidal(int n)
{
    if (n < 0)
        throw domain_error("rank must be non-negative");
    std::vector<CharacterDescriptor> out;
    for (Sign t : {Sign::Plus, Sign::Minus}) {
        CharacterDescriptor c;
        c.ss.ambient = make_group(GroupKind::SOOdd, n);
        c.ss.nu_minus1 = n;
        c.ss.minus1_type = t;
        try {
            validate(c.ss);
        } catch (const domain_error&) {
            continue;
        }
        for (const auto& l : enumerate_family(n, o_family(t))) {
            c.label_minus1 = l;
            if (is_cuspidal(c))
                out.push_back(c);
        }
    }
    return out;
}

inline CharacterDescriptor unipotent_character(const GroupDescriptor& ambient, const Label& label)
{
    CharacterDescriptor c;
    c.ss.ambient = ambient;
    c.ss.nu_plus1 = ambient.parameter;
    c.label_plus1 = label;
    if (ambient.kind == GroupKind::Sp)
        c.odd_o_sign = Sign::Plus;
    if (ambient.kind == GroupKind::SOOdd || ambient.kind == GroupKind::OEven)
        c.ss.minus1_type = Sign::Plus;
    validate(c);
    return c;
}

/* The character of Sp_{2n} with s = -1 and the given even orthogonal label. */
inline CharacterDescriptor pseudo_unipotent_character(const Symbol& minus1)
{
    CharacterDescriptor c;
    int n = rank(minus1);
    c.ss.ambient = make_group(GroupKind::SOOdd, n);
    c.ss.nu_minus1 = n;
    c.ss.minus1_type = o_sign_of(minus1);
    c.label_minus1 = reduce(minus1);
    validate(c);
    return c;
}

/* First-occurrence partner of a cuspidal character. */
inline CharacterDescriptor cuspidal_chain_step(const CharacterDescriptor& c, Flavor f, Sign dir)
{
    if (!is_cuspidal(c))
        throw domain_error("cuspidal_chain_step needs a cuspidal character");
    return first_partner(c, f, dir);
}

/* Characters eta_{-k} .. eta_k: the first step leaves the centre in
 * direction + (resp. -), later steps move to the larger partner. */
inline std::vector<CharacterDescriptor> cuspidal_chain(const CharacterDescriptor& centre, Flavor f, int k)
{
    std::vector<CharacterDescriptor> pos{centre}, neg{centre};
    for (auto* side : {&pos, &neg}) {
        Sign first = side == &pos ? Sign::Plus : Sign::Minus;
        for (int i = 1; i <= k; ++i) {
            const auto& prev = side->back();
            CharacterDescriptor next = cuspidal_chain_step(prev, f, first);
            if (i > 1) {
                CharacterDescriptor other = cuspidal_chain_step(prev, f, -first);
                if (space_dimension(other) > space_dimension(next))
                    next = other;
            }
            side->push_back(next);
        }
    }
    std::vector<CharacterDescriptor> out(neg.rbegin(), neg.rend() - 1);
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

} // namespace unipot

#endif
