// Command-line front end: group-spec parsing, pipeline dispatch, text and
// JSON reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prequant/format.hpp"
#include "prequant/smith.hpp"

using namespace prequant;
using nlohmann::ordered_json;

namespace {

int degree_cap_from_env()
{
    const char* env = std::getenv("PREQUANT_DEGREE_CAP");
    if (!env)
        return 8;
    try {
        size_t used = 0;
        int cap = std::stoi(env, &used);
        if (used != std::string(env).size() || cap < 8)
            throw DomainError("PREQUANT_DEGREE_CAP must be an integer >= 8");
        return cap;
    } catch (const std::logic_error&) {
        throw DomainError("PREQUANT_DEGREE_CAP must be an integer >= 8");
    }
}

std::vector<CartanPoint> read_classes_file(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open classes file " + path);
    std::vector<CartanPoint> classes;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ss >> tok)
            toks.push_back(tok);
        if (toks.empty())
            continue;
        if (static_cast<int>(toks.size()) != n)
            throw DomainError("classes file line " + std::to_string(lineno) + ": expected " +
                              std::to_string(n) + " rationals");
        CartanPoint x;
        for (const auto& t : toks)
            x.push_back(parse_rat(t));
        check_cartan(x);
        classes.push_back(std::move(x));
    }
    return classes;
}

ordered_json cartan_json(const CartanPoint& x)
{
    ordered_json arr = ordered_json::array();
    for (const auto& c : x)
        arr.push_back(c.str());
    return arr;
}

struct Options {
    bool json = false;
    Style style;
    int cap = 8;
};

int cmd_l0(const std::string& spec, const Options& opt)
{
    L0Result r = l0(parse_group_spec(spec), opt.cap);
    if (opt.json)
        std::cout << format_l0_json(r) << "\n";
    else
        std::cout << format_l0_text(r) << "\n";
    return 0;
}

int cmd_table(int max_n, const Options& opt)
{
    auto rows = table(max_n, opt.cap);
    if (opt.json)
        std::cout << format_table_json(max_n, rows) << "\n";
    else
        std::cout << format_table_text(rows);
    return 0;
}

int cmd_phi_star(const std::string& spec, long long prime, const Options& opt)
{
    GroupId g = parse_group_spec(spec);
    PrimeData pd = make_prime_data(g, prime, opt.cap);
    switch (pd.lift.kind) {
    case Z3Lift::Kind::Algebraic: {
        TensorElement image = pd.hopf.phi_star(pd.lift.cls);
        if (opt.json) {
            ordered_json j;
            j["group"] = to_string(g);
            j["prime"] = prime;
            j["lift"] = format_element(pd.hopf.pres(), pd.lift.cls, opt.style);
            j["phi_star"] = format_tensor(pd.hopf.pres(), image, opt.style);
            j["provenance"] = "computed";
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << format_tensor(pd.hopf.pres(), image, opt.style) << "\n";
        }
        return 0;
    }
    case Z3Lift::Kind::Pinned: {
        PrimeData via = make_prime_data(pd.lift.via, prime, opt.cap);
        std::string image = format_tensor(via.hopf.pres(), pd.lift.pinned_image, opt.style);
        if (opt.json) {
            ordered_json j;
            j["group"] = to_string(g);
            j["prime"] = prime;
            j["phi_star"] = image;
            j["provenance"] = "pinned(" + pd.lift.citation + ")";
            j["stated_in"] = to_string(pd.lift.via);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << image << "   [pinned, stated in " << to_string(pd.lift.via)
                      << "; " << pd.lift.citation << "]\n";
        }
        return 0;
    }
    case Z3Lift::Kind::TorFormula:
        throw DomainError("no algebraic lift is cataloged for " + to_string(g) + " at p = " +
                          std::to_string(prime) +
                          "; its order comes from the Tor pushforward (see the l0 command)");
    }
    return 0;
}

int cmd_verify_hopf(const std::string& spec, long long prime, int max_degree, const Options& opt)
{
    GroupId g = parse_group_spec(spec);
    int cap = std::max(opt.cap, max_degree);
    PrimeData pd = make_prime_data(g, prime, cap);
    AxiomReport rep = verify_axioms(pd.hopf, max_degree);
    if (opt.json) {
        ordered_json j;
        j["group"] = to_string(g);
        j["prime"] = prime;
        j["max_degree"] = max_degree;
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
            ordered_json item;
            item["name"] = c.name;
            item["checked"] = c.checked;
            item["failures"] = c.failures;
            checks.push_back(item);
        }
        j["checks"] = checks;
        j["all_passed"] = rep.all_passed();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << c.name << ": " << (c.failures ? "FAIL" : "ok") << "  (" << c.checked
                      << " checks";
            if (c.failures)
                std::cout << ", " << c.failures << " failures";
            std::cout << ")\n";
            for (const auto& w : c.failing)
                std::cout << "    failing: " << w << "\n";
        }
    }
    if (!rep.all_passed()) {
        std::cerr << "axiom suite failed for " << to_string(g) << " at p = " << prime << "\n";
        return 3;
    }
    return 0;
}

int cmd_check_level(const std::string& spec, long long level, long long genus, const Options& opt)
{
    CheckLevelResult r = check_level(parse_group_spec(spec), level, genus, opt.cap);
    if (opt.json) {
        ordered_json j;
        j["group"] = to_string(r.group);
        j["level"] = r.level;
        j["genus"] = r.genus;
        j["l0"] = r.l0_value;
        j["admits"] = r.admits;
        j["explanation"] = r.explanation;
        std::cout << j.dump(2) << "\n";
    } else {
        if (r.admits)
            std::cout << "YES (l0 = " << r.l0_value << " divides " << r.level << ")\n";
        else
            std::cout << "NO (l0 = " << r.l0_value << " does not divide " << r.level << ")\n";
        std::cout << r.explanation << "\n";
    }
    return 0;
}

int cmd_marked_points(int n, long long level, const std::string& classes_file, const Options& opt)
{
    auto classes = read_classes_file(classes_file, n);
    MarkedVerdict v = marked_points_check(n, level, classes);
    if (opt.json) {
        ordered_json j;
        j["n"] = n;
        j["level"] = level;
        j["classes"] = static_cast<long long>(classes.size());
        j["verdict"] = verdict_name(v.kind);
        j["reasons"] = v.reasons;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << verdict_name(v.kind) << "\n";
        for (const auto& rline : v.reasons)
            std::cout << "  - " << rline << "\n";
    }
    return 0;
}

int cmd_alcove(int n, const std::string& reduce_arg, const Options& opt)
{
    AlcoveData a = alcove_vertices(n);
    std::optional<CartanPoint> reduced;
    std::optional<CartanPoint> input;
    if (!reduce_arg.empty()) {
        std::istringstream ss(reduce_arg);
        CartanPoint x;
        std::string tok;
        while (ss >> tok)
            x.push_back(parse_rat(tok));
        if (static_cast<int>(x.size()) != n)
            throw DomainError("--reduce expects " + std::to_string(n) + " rationals");
        check_cartan(x);
        input = x;
        reduced = alcove_reduce(n, x);
    }
    if (opt.json) {
        ordered_json j;
        j["n"] = n;
        ordered_json verts = ordered_json::array();
        for (const auto& v : a.vertices)
            verts.push_back(cartan_json(v));
        j["vertices"] = verts;
        j["barycenter"] = cartan_json(a.barycenter);
        if (reduced) {
            j["input"] = cartan_json(*input);
            j["reduced"] = cartan_json(*reduced);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < a.vertices.size(); ++i)
            std::cout << "v" << i << " = " << format_cartan(a.vertices[i]) << "\n";
        std::cout << "barycenter = " << format_cartan(a.barycenter) << "\n";
        if (reduced)
            std::cout << "reduce" << format_cartan(*input) << " = " << format_cartan(*reduced)
                      << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal pre-quantization levels of moduli of flat bundles: symbolic Hopf "
                 "algebra, Bockstein, and alcove computations"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_flag("--ascii", opt.style.ascii, "ASCII tensor signs: 'x1 (x) y2'");

    std::string spec, classes_file, reduce_arg;
    long long prime = 0, level = 0, genus = 1;
    int max_n = 0, n = 0, max_degree = 8;

    auto* c_l0 = app.add_subcommand("l0", "minimal pre-quantizable level of a group");
    c_l0->add_option("spec", spec, "group spec, e.g. PU:6 or SU:8/4")->required();

    auto* c_table = app.add_subcommand("table", "l0 for every catalog group up to a bound");
    c_table->add_option("--max-n", max_n, "parameter bound")->required();

    auto* c_phi = app.add_subcommand("phi-star", "commutator pullback of the degree-3 lift");
    c_phi->add_option("spec", spec)->required();
    c_phi->add_option("--prime", prime)->required();

    auto* c_verify = app.add_subcommand("verify-hopf", "run the Hopf axiom suite");
    c_verify->add_option("spec", spec)->required();
    c_verify->add_option("--prime", prime)->required();
    c_verify->add_option("--max-degree", max_degree, "check through this degree (default 8)");

    auto* c_check = app.add_subcommand("check-level", "does a level admit a pre-quantization?");
    c_check->add_option("spec", spec)->required();
    c_check->add_option("--level", level)->required();
    c_check->add_option("--genus", genus, "surface genus (the verdict is genus-independent)");

    auto* c_marked = app.add_subcommand("marked-points", "marked-point verdict for PU(n)");
    c_marked->add_option("--n", n)->required();
    c_marked->add_option("--level", level)->required();
    c_marked->add_option("--classes", classes_file, "file of alcove points, one per line")
        ->required();

    auto* c_alcove = app.add_subcommand("alcove", "su(n) alcove vertices / point reduction");
    c_alcove->add_option("--n", n)->required();
    c_alcove->add_option("--reduce", reduce_arg, "n space-separated rationals to reduce");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        opt.cap = degree_cap_from_env();
        if (c_l0->parsed())
            return cmd_l0(spec, opt);
        if (c_table->parsed())
            return cmd_table(max_n, opt);
        if (c_phi->parsed())
            return cmd_phi_star(spec, prime, opt);
        if (c_verify->parsed())
            return cmd_verify_hopf(spec, prime, max_degree, opt);
        if (c_check->parsed())
            return cmd_check_level(spec, level, genus, opt);
        if (c_marked->parsed())
            return cmd_marked_points(n, level, classes_file, opt);
        if (c_alcove->parsed())
            return cmd_alcove(n, reduce_arg, opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
