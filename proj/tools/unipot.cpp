#include "unipot/descriptor_io.hpp"
#include "unipot/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace unipot;
using Json = nlohmann::ordered_json;

namespace {

struct Caps {
    int symbol = 10;
    int cell = 6;
    int descriptor = 12;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_or(const char* name, int fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw usage_error(std::string(name) + " must be an integer");
    }
}

void require_cap(const char* what, int value, int cap, const char* flag)
{
    if (value < 0)
        throw usage_error(std::string(what) + " must be non-negative");
    if (value > cap)
        throw usage_error(std::string(what) + " " + std::to_string(value) + " exceeds the cap " + std::to_string(cap) +
                          " (raise it with " + flag + ")");
}

SymbolFamily parse_family(const std::string& s)
{
    if (s == "Sp")
        return SymbolFamily::Sp;
    if (s == "OPlus")
        return SymbolFamily::OPlus;
    if (s == "OMinus")
        return SymbolFamily::OMinus;
    throw usage_error("family must be Sp, OPlus or OMinus");
}

Flavor parse_flavor(const std::string& s)
{
    if (s == "even")
        return Flavor::EvenOrthogonalPair;
    if (s == "odd")
        return Flavor::OddOrthogonalPair;
    if (s == "unitary")
        return Flavor::UnitaryPair;
    throw usage_error("flavor must be even, odd or unitary");
}

std::string csv_cell(const Json& v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

/* one JSON object per line, or a CSV table keyed by the first row */
void emit(const std::vector<Json>& rows, bool csv, const std::vector<std::string>& header)
{
    if (!csv) {
        for (const auto& r : rows)
            std::cout << r.dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < header.size(); ++i)
            std::cout << (i ? "," : "") << csv_cell(r.at(header[i]));
        std::cout << "\n";
    }
}

Json symbol_row(const Symbol& s)
{
    Json j;
    j["symbol"] = to_string(s);
    j["rank"] = rank(s);
    j["defect"] = defect(s);
    j["delta"] = delta_symbol(s);
    j["cuspidal"] = is_cuspidal(s);
    j["special"] = is_special(s);
    return j;
}

int run_enumerate(int n, const std::string& family, bool cusp, bool special, bool csv, const Caps& caps)
{
    require_cap("rank", n, caps.symbol, "--symbol-cap");
    std::vector<Json> rows;
    for (const auto& s : enumerate_family(n, parse_family(family)))
        if ((!cusp || is_cuspidal(s)) && (!special || is_special(s)))
            rows.push_back(symbol_row(s));
    emit(rows, csv, {"symbol", "rank", "defect", "delta", "cuspidal", "special"});
    return 0;
}

int run_correspond(int n, int np, const std::string& kind_text, bool csv, const Caps& caps)
{
    require_cap("n", n, caps.symbol, "--symbol-cap");
    require_cap("n'", np, caps.symbol, "--symbol-cap");
    std::optional<PairKind> kind;
    for (PairKind k : {PairKind::SpOPlus, PairKind::SpOMinus, PairKind::UnitaryPlus, PairKind::UnitaryMinus})
        if (kind_text == pair_kind_name(k))
            kind = k;
    if (!kind)
        throw usage_error("kind must be SpOPlus, SpOMinus, UnitaryPlus or UnitaryMinus");
    std::vector<Json> rows;
    for (const auto& p : weil_unipotent_pairs(n, np, *kind)) {
        Json j;
        j["left"] = p.left_partition ? to_string(*p.left_partition) : to_string(p.left);
        j["right"] = p.right_partition ? to_string(*p.right_partition) : to_string(p.right);
        j["kind"] = pair_kind_name(p.kind);
        j["left_symbol"] = to_string(p.left);
        j["right_symbol"] = to_string(p.right);
        j["left_defect"] = defect(p.left);
        j["right_defect"] = defect(p.right);
        j["left_delta"] = delta_symbol(p.left);
        j["right_delta"] = delta_symbol(p.right);
        rows.push_back(j);
    }
    emit(rows, csv,
         {"left", "right", "kind", "left_symbol", "right_symbol", "left_defect", "right_defect", "left_delta",
          "right_delta"});
    return 0;
}

int run_first_occurrence(const std::string& text, const Caps& caps)
{
    Symbol s;
    try {
        s = reduce(parse_symbol(text));
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
    require_cap("rank", rank(s), caps.symbol, "--symbol-cap");
    Json j;
    j["symbol"] = to_string(s);
    int d = defect(s);
    if (((d % 4) + 4) % 4 == 1) {
        j["family"] = "Sp";
        Symbol tp = theta0_sp(s, Sign::Plus), tm = theta0_sp(s, Sign::Minus);
        j["plus"] = first_occurrence_unipotent(s, Tower::OPlus);
        j["minus"] = first_occurrence_unipotent(s, Tower::OMinus);
        j["sum"] = j["plus"].get<int>() + j["minus"].get<int>();
        j["theta0_plus"] = to_string(tp);
        j["theta0_minus"] = to_string(tm);
    } else if (d % 4 == 0) {
        j["family"] = o_sign_of(s) == Sign::Plus ? "OPlus" : "OMinus";
        j["direct"] = first_occurrence_unipotent(s, Tower::SpFromOEven);
        j["transpose"] = first_occurrence_unipotent(transpose(s), Tower::SpFromOEven);
        j["sum"] = j["direct"].get<int>() + j["transpose"].get<int>();
        j["theta0"] = to_string(theta0_even_o(s));
        j["theta0_transpose"] = to_string(theta0_even_o(transpose(s)));
    } else {
        throw usage_error("symbol " + to_string(s) + " has defect " + std::to_string(d) +
                          ", which is neither 1 mod 4 nor 0 mod 4");
    }
    j["delta"] = delta_symbol(s);
    std::cout << j.dump() << "\n";
    return 0;
}

int run_reduce(const std::string& path, const std::string& flavor_text, const Caps& caps)
{
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot read descriptor file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    CharacterDescriptor c;
    try {
        c = parse_descriptor(buf.str());
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
    Flavor f = parse_flavor(flavor_text);
    require_cap("descriptor dimension", space_dimension(c), caps.descriptor, "--descriptor-cap");
    XiFactors x;
    try {
        x = xi_factors(c, f);
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
    Json j;
    j["group"] = character_group_name(c.ss);
    j["flavor"] = flavor_name(f);
    Json g1 = Json::array();
    for (const auto& [g, l] : x.g1)
        g1.push_back({{"group", to_string(g)}, {"label", to_string(l)}});
    j["G1"] = g1;
    j["G2"] = to_string(x.g2);
    j["label2"] = label_to_string(x.label2);
    if (x.g3) {
        j["G3"] = to_string(*x.g3);
        j["label3"] = to_string(*x.label3);
    }
    j["delta"] = delta_of_character(c, f);
    j["cuspidal"] = is_cuspidal(c);
    auto fo = first_occurrence_general(c, f);
    j["first_occurrence"] = {{"plus", fo.n_plus}, {"minus", fo.n_minus}, {"sum", fo.sum}};
    j["closed_form"] = first_occurrence_closed_form(c, f);
    std::cout << j.dump() << "\n";
    return 0;
}

int run_verify(const std::string& suite, int max_rank, bool csv, const Caps& caps)
{
    const auto& names = verify::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw usage_error("unknown suite: " + suite);
    if (max_rank < 0)
        throw usage_error("max-rank must be non-negative");
    verify::Params p;
    p.max_rank = max_rank;
    p.unitary_max = max_rank + 4;
    p.classification_max = 3 * max_rank;
    p.cell_rank = max_rank;
    p.cell_degree = std::min(4, caps.cell);
    p.descriptor_dim = caps.descriptor;
    verify::Report r = verify::run_suite(suite, p);
    std::vector<Json> rows;
    for (const auto& x : r) {
        Json j;
        j["suite"] = x.suite;
        j["instance"] = x.instance;
        j["expected"] = x.expected;
        j["computed"] = x.computed;
        j["pass"] = x.pass;
        rows.push_back(j);
    }
    emit(rows, csv, {"suite", "instance", "expected", "computed", "pass"});
    std::size_t failed = std::count_if(r.begin(), r.end(), [](const auto& x) { return !x.pass; });
    if (failed) {
        std::cerr << failed << " of " << r.size() << " records failed:\n";
        for (const auto& x : r)
            if (!x.pass)
                std::cerr << "  " << x.instance << ": expected " << x.expected << ", computed " << x.computed << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Unipotent characters, symbols and first occurrence in the finite theta correspondence"};
    app.require_subcommand(1);
    Caps caps;
    std::optional<int> symbol_cap, cell_cap, descriptor_cap;
    app.add_option("--symbol-cap", symbol_cap, "Symbol rank cap (default 10, env UNIPOT_SYMBOL_CAP)");
    app.add_option("--cell-cap", cell_cap, "Cell degree cap (default 6, env UNIPOT_CELL_CAP)");
    app.add_option("--descriptor-cap", descriptor_cap, "Descriptor dimension cap (default 12, env UNIPOT_DESCRIPTOR_CAP)");

    bool csv = false;

    auto* en = app.add_subcommand("enumerate", "List the symbols of a rank and family");
    int en_rank = 0;
    std::string en_family = "Sp";
    bool en_cusp = false, en_special = false;
    en->add_option("--rank", en_rank, "Rank n")->required();
    en->add_option("--family", en_family, "Sp, OPlus or OMinus");
    en->add_flag("--cuspidal", en_cusp, "Only cuspidal symbols");
    en->add_flag("--special", en_special, "Only special symbols");
    en->add_flag("--csv", csv, "Comma-separated output");

    auto* co = app.add_subcommand("correspond", "Unipotent pairs occurring in the Weil character");
    int co_n = 0, co_np = 0;
    std::string co_kind = "SpOPlus";
    co->add_option("--n", co_n, "Rank of the first group")->required();
    co->add_option("--np", co_np, "Rank of the second group")->required();
    co->add_option("--kind", co_kind, "SpOPlus, SpOMinus, UnitaryPlus or UnitaryMinus");
    co->add_flag("--csv", csv, "Comma-separated output");

    auto* fo = app.add_subcommand("first-occurrence", "First occurrence of a unipotent character in both towers");
    std::string fo_symbol;
    fo->add_option("--symbol", fo_symbol, "Symbol such as \"-|2,1,0\"")->required();

    auto* rd = app.add_subcommand("reduce", "Reduce a descriptor to centralizer data and first occurrence");
    std::string rd_path, rd_flavor = "even";
    rd->add_option("--descriptor", rd_path, "Descriptor JSON file")->required();
    rd->add_option("--flavor", rd_flavor, "even, odd or unitary");

    auto* ve = app.add_subcommand("verify", "Run a verification suite");
    std::string ve_suite;
    int ve_rank = 6;
    ve->add_option("--suite", ve_suite, "bijections, defects, preservation, cells, orthogonality, "
                                        "cuspidal-classification or lusztig-examples")
        ->required();
    ve->add_option("--max-rank", ve_rank, "Rank bound for the suite");
    ve->add_flag("--csv", csv, "Comma-separated output");

    CLI11_PARSE(app, argc, argv);

    try {
        caps.symbol = symbol_cap.value_or(env_or("UNIPOT_SYMBOL_CAP", caps.symbol));
        caps.cell = cell_cap.value_or(env_or("UNIPOT_CELL_CAP", caps.cell));
        caps.descriptor = descriptor_cap.value_or(env_or("UNIPOT_DESCRIPTOR_CAP", caps.descriptor));
        if (*en)
            return run_enumerate(en_rank, en_family, en_cusp, en_special, csv, caps);
        if (*co)
            return run_correspond(co_n, co_np, co_kind, csv, caps);
        if (*fo)
            return run_first_occurrence(fo_symbol, caps);
        if (*rd)
            return run_reduce(rd_path, rd_flavor, caps);
        if (*ve)
            return run_verify(ve_suite, ve_rank, csv, caps);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
