#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prismhom/io.hpp"
#include "prismhom/reference_formulas.hpp"

using namespace prismhom;

namespace {

enum Exit
{
    ok = 0,
    math_failure = 1,
    io_failure = 2
};

struct RunConfig
{
    std::string structure;
    std::string diagram;
    std::string foam;
    std::string theory = "prismatic";
    std::string require = "qualgebra";
    std::string format = "text";
    std::string tuple;
    std::string output;
    std::string corrupt_tri;
    std::size_t max_degree = 3;
    bool allow_truncation = false;
    bool no_d3 = false;
    bool show_colorings = false;
    unsigned jobs = 0;
};

unsigned resolve_jobs(unsigned flag)
{
    if (flag > 0)
        return flag;
    if (const char* env = std::getenv("PRISMCTL_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw FormatError("PRISMCTL_JOBS must be a positive integer");
    }
    return 1;
}

void emit(const RunConfig& cfg, const Json& j, const std::string& text)
{
    std::ostringstream out;
    if (cfg.format == "json")
        out << j.dump(2) << '\n';
    else
        out << text;
    if (cfg.output.empty()) {
        std::cout << out.str();
        return;
    }
    std::ofstream f(cfg.output);
    if (!f)
        throw FormatError("cannot write " + cfg.output);
    f << out.str();
}

StructureData load(const RunConfig& cfg)
{
    return parse_structure(read_json(cfg.structure));
}

std::string element_list(const std::vector<Element>& w, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? ", " : "") + (w[i] < names.size() ? names[w[i]] : std::to_string(w[i]));
    return out;
}

int cmd_axioms(const RunConfig& cfg)
{
    const auto data = load(cfg);
    const auto report = check_axioms(data.dot, data.tri);
    const auto cls = classify(data.dot, data.tri);

    const std::map<std::string, std::vector<Axiom>> needs = {
        {"shelf", {Axiom::III}},
        {"spindle", {Axiom::III, Axiom::I}},
        {"rack", {Axiom::III, Axiom::II}},
        {"quandle", {Axiom::III, Axiom::II, Axiom::I}},
        {"shalgebra", {Axiom::H, Axiom::YI, Axiom::IY, Axiom::III}},
        {"qualgebra", {all_axioms.begin(), all_axioms.end()}},
    };
    const auto& required = needs.at(cfg.require);
    const bool satisfied = std::all_of(required.begin(), required.end(), [&](Axiom a) { return report.holds(a); });

    std::ostringstream text;
    for (Axiom a : all_axioms) {
        text << axiom_name(a) << std::string(5 - axiom_name(a).size(), ' ') << (report.holds(a) ? "pass" : "FAIL");
        if (!report.holds(a))
            text << "  witness (" << element_list(report[a].witness, data.names) << ")";
        text << '\n';
    }
    text << "action: " << to_string(cls.action) << "\npair: " << to_string(cls.pair)
         << "\ngroup: " << (cls.group ? "yes" : "no") << '\n'
         << cfg.require << ": " << (satisfied ? "satisfied" : "not satisfied") << '\n';

    Json j{{"axioms", axiom_report_to_json(report, data.names)},
           {"action", to_string(cls.action)},
           {"pair", to_string(cls.pair)},
           {"group", cls.group},
           {"require", cfg.require},
           {"satisfied", satisfied}};
    emit(cfg, j, text.str());
    return satisfied ? ok : math_failure;
}

Shalgebra gated(const StructureData& data, std::initializer_list<Axiom> axioms)
{
    const auto report = check_axioms(data.dot, data.tri);
    for (Axiom a : axioms)
        if (!report.holds(a))
            throw AxiomError(a, report[a].witness);
    return Shalgebra::unchecked(data.dot, data.tri, data.names);
}

int cmd_homology(const RunConfig& cfg)
{
    const auto data = load(cfg);
    const std::size_t top = cfg.allow_truncation ? cfg.max_degree : cfg.max_degree - 1;
    std::vector<std::string> warnings;
    std::vector<HomologyGroup> groups;

    if (cfg.theory == "rack" || cfg.theory == "group") {
        const bool rack = cfg.theory == "rack";
        const auto s = rack ? gated(data, {Axiom::III}) : gated(data, {Axiom::H});
        const auto k = rack ? rack_complex(s, cfg.max_degree) : bar_complex(s, cfg.max_degree);
        if (!verify_d_squared(k, 2, cfg.max_degree).empty())
            throw ContractViolation("d^2 != 0 in the " + cfg.theory + " complex");
        for (std::size_t n = 1; n <= top; ++n)
            groups.push_back(homology(k, n, cfg.allow_truncation));
    } else {
        ComplexOptions options;
        options.mode = cfg.theory == "prismatic"   ? ComplexMode::plain
                       : cfg.theory == "qualgebra" ? ComplexMode::qualgebra
                                                   : ComplexMode::normalized;
        options.include_d3 = !cfg.no_d3;
        options.jobs = resolve_jobs(cfg.jobs);
        const PrismaticComplex k(Shalgebra(data.dot, data.tri, data.names), cfg.max_degree, options);
        warnings = k.warnings();
        for (std::size_t n = 1; n <= top; ++n)
            groups.push_back(k.homology(n, cfg.allow_truncation));
    }

    std::ostringstream text;
    Json list = Json::array();
    for (std::size_t n = 1; n <= groups.size(); ++n) {
        text << "H_" << n << " = " << to_string(groups[n - 1]) << '\n';
        Json h = homology_to_json(groups[n - 1]);
        h["degree"] = n;
        list.push_back(std::move(h));
    }
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << '\n';
    Json j{{"theory", cfg.theory}, {"max_degree", cfg.max_degree}, {"homology", list}, {"warnings", warnings}};
    emit(cfg, j, text.str());
    return ok;
}

int cmd_invariant(const RunConfig& cfg)
{
    if (cfg.diagram.empty() == cfg.foam.empty())
        throw FormatError("give exactly one of a diagram file or --foam");
    const auto data = load(cfg);
    const Shalgebra s(data.dot, data.tri, data.names);
    const unsigned jobs = resolve_jobs(cfg.jobs);

    if (!cfg.foam.empty()) {
        const auto f = parse_foam(read_json(cfg.foam), s);
        const FoamInvariantComputer computer(s, jobs);
        for (const auto& w : computer.complex().warnings())
            std::cerr << "warning: " << w << '\n';
        const auto c = computer(f);
        Json j{{"homology", homology_to_json(computer.group())}, {"class", class_to_json(c)}};
        emit(cfg, j, "H_3 = " + to_string(computer.group()) + "\nclass " + to_string(c) + '\n');
        return ok;
    }

    const auto d = parse_diagram(read_json(cfg.diagram));
    const InvariantComputer computer(
        s, {.mode = ComplexMode::qualgebra, .include_d3 = !cfg.no_d3, .jobs = jobs});
    const auto r = computer(d);
    std::ostringstream text;
    text << "H_2 = " << to_string(r.group) << "\ncolorings: " << r.coloring_count() << '\n';
    for (const auto& [c, n] : r.multiset)
        text << "  " << to_string(c) << " x" << n << '\n';
    if (cfg.show_colorings)
        for (std::size_t i = 0; i < r.colorings.size(); ++i) {
            text << "  coloring";
            for (std::size_t k = 0; k < d.arcs.size(); ++k)
                text << ' ' << d.arcs[k] << '=' << s.name(r.colorings[i].colors[k]);
            text << " -> " << to_string(r.classes[i]) << '\n';
        }
    emit(cfg, invariant_to_json(r, d, s, cfg.show_colorings), text.str());
    return ok;
}

void corrupt(StructureData& data, const std::string& text)
{
    std::vector<Element> v;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ','))
        v.push_back(static_cast<Element>(std::stoul(part)));
    if (v.size() != 3 || v[0] >= data.tri.size() || v[1] >= data.tri.size() || v[2] >= data.tri.size())
        throw FormatError("--corrupt-tri expects a,b,value within range");
    data.tri.set(v[0], v[1], v[2]);
}

int cmd_verify(const RunConfig& cfg)
{
    auto data = load(cfg);
    if (!cfg.corrupt_tri.empty())
        corrupt(data, cfg.corrupt_tri);
    const auto s = Shalgebra::unchecked(data.dot, data.tri, data.names);
    const std::size_t n_max = cfg.max_degree;

    struct Check
    {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;

    auto square_check = [&](ComplexMode mode) {
        const PrismaticComplex k(s, n_max, {.mode = mode, .skip_axiom_gate = true, .jobs = resolve_jobs(cfg.jobs)});
        const auto& v = k.square_violations();
        std::string detail = std::to_string(v.size()) + " violations";
        if (!v.empty())
            detail = "d^2 of " + k.describe(v.front().generator.degree, v.front().generator.index) + " is " +
                     format(k.to_cells(v.front().residue), s);
        checks.push_back({"d^2 = 0 (" + std::string(to_string(mode)) + ")", v.empty(), detail});
    };
    square_check(ComplexMode::plain);
    if (s.is_qualgebra())
        square_check(ComplexMode::qualgebra);

    std::size_t compared = 0;
    std::string geometric_failure, symbolic_failure;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            std::size_t total = 1;
            for (std::size_t t = 0; t < n; ++t)
                total *= s.size();
            for (std::size_t idx = 0; idx < total; ++idx) {
                const BracketedTuple g(p, tuple_from_index(idx, n, s.size()));
                ++compared;
                if (geometric_failure.empty()) {
                    try {
                        auto geo = geometric_faces(good_labeling(g, s), s);
                        std::vector<SignedPrism> alg;
                        for (auto& f : all_faces(g, s))
                            alg.push_back({f.sign, good_labeling(f.tuple, s)});
                        std::sort(geo.begin(), geo.end());
                        std::sort(alg.begin(), alg.end());
                        if (geo != alg)
                            geometric_failure = format(g, s);
                    } catch (const ContractViolation& e) {
                        geometric_failure = e.what();
                    }
                }
                if (symbolic_failure.empty() && n >= 2 && n <= 4) {
                    auto ref = *reference_boundary(g, s);
                    auto faces = all_faces(g, s);
                    std::sort(ref.begin(), ref.end());
                    std::sort(faces.begin(), faces.end());
                    if (ref != faces)
                        symbolic_failure = format(g, s);
                }
            }
        }
    checks.push_back({"geometric faces", geometric_failure.empty(),
                      geometric_failure.empty() ? std::to_string(compared) + " tuples" : geometric_failure});
    checks.push_back({"low-degree formulas", symbolic_failure.empty(),
                      symbolic_failure.empty() ? "degrees 2.." + std::to_string(std::min<std::size_t>(n_max, 4))
                                               : symbolic_failure});

    bool all = true;
    std::ostringstream text;
    Json list = Json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        text << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        list.push_back(Json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    emit(cfg, Json{{"max_degree", n_max}, {"checks", list}, {"pass", all}}, text.str());
    return all ? ok : math_failure;
}

int cmd_export_prism(const RunConfig& cfg)
{
    const auto data = load(cfg);
    const Shalgebra s(data.dot, data.tri, data.names);
    const auto g = parse_blocks(cfg.tuple, s);
    const auto prism = good_labeling(g, s);
    const Json j = prism_to_json(prism, s);
    std::ostringstream text;
    text << "prism " << j["tuple"].get<std::string>() << '\n';
    for (const auto& e : j["edges"])
        text << "  " << e["from"].dump() << " -> " << e["to"].dump() << "  " << e["label"].get<std::string>() << '\n';
    for (const auto& f : j["faces"])
        text << "  face " << (f["sign"].get<int>() > 0 ? "+" : "-") << ' ' << f["tuple"].get<std::string>() << '\n';
    emit(cfg, j, text.str());
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Prismatic and qualgebra homology of shalgebras, and invariants of knotted trivalent graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("structure", cfg.structure, "Structure file (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("-o,--output", cfg.output, "Write output to a file");
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("-j,--jobs", cfg.jobs, "Worker threads (default: PRISMCTL_JOBS or 1)")
            ->check(CLI::PositiveNumber);
    };

    auto* axioms = app.add_subcommand("axioms", "Check the seven axioms");
    add_common(axioms);
    axioms->add_option("--require", cfg.require, "Class whose axioms must hold for exit code 0")
        ->check(CLI::IsMember({"shelf", "spindle", "rack", "quandle", "shalgebra", "qualgebra"}));

    auto* hom = app.add_subcommand("homology", "Compute homology groups");
    add_common(hom);
    add_jobs(hom);
    hom->add_option("--theory", cfg.theory, "Complex to use")
        ->check(CLI::IsMember({"prismatic", "qualgebra", "normalized", "rack", "group"}));
    hom->add_option("-N,--max-degree", cfg.max_degree, "Highest degree of the complex")->check(CLI::Range(1, 8));
    hom->add_flag("--allow-truncation", cfg.allow_truncation, "Report the top degree with the next boundary taken as 0");
    hom->add_flag("--no-d3", cfg.no_d3, "Omit the D3 cells in the qualgebra theory");

    auto* inv = app.add_subcommand("invariant", "Coloring invariant of a diagram or class of a foam chain");
    add_common(inv);
    add_jobs(inv);
    inv->add_option("diagram", cfg.diagram, "Diagram file (JSON)")->check(CLI::ExistingFile);
    inv->add_option("--foam", cfg.foam, "Foam chain presentation (JSON) instead of a diagram")->check(CLI::ExistingFile);
    inv->add_flag("--show-colorings", cfg.show_colorings, "List every coloring with its class");
    inv->add_flag("--no-d3", cfg.no_d3, "Omit the D3 cells");

    auto* ver = app.add_subcommand("verify", "Run the internal consistency checks");
    add_common(ver);
    add_jobs(ver);
    ver->add_option("-N,--max-degree", cfg.max_degree, "Highest degree to check")->check(CLI::Range(1, 6));
    ver->add_option("--corrupt-tri", cfg.corrupt_tri)->group("");

    auto* exp = app.add_subcommand("export-prism", "Export the labeled prism of a tuple");
    add_common(exp);
    exp->add_option("--tuple", cfg.tuple, "Blocks like \"a,b;c\" for (a,b)|c")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return io_failure;
    }

    try {
        if (axioms->parsed())
            return cmd_axioms(cfg);
        if (hom->parsed())
            return cmd_homology(cfg);
        if (inv->parsed())
            return cmd_invariant(cfg);
        if (ver->parsed())
            return cmd_verify(cfg);
        return cmd_export_prism(cfg);
    } catch (const AxiomError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return math_failure;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return math_failure;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io_failure;
    }
}
