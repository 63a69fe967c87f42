#include "prismhom/io.hpp"

#include <fstream>

namespace prismhom {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object())
        throw FormatError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw FormatError(where + ": missing field \"" + key + "\"");
    return *it;
}

std::int64_t integer(const Json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw FormatError(where + ": expected an integer");
    return j.get<std::int64_t>();
}

int sign_of(const Json& j, const std::string& where)
{
    const auto s = integer(j, where);
    if (s != 1 && s != -1)
        throw FormatError(where + ": sign must be 1 or -1");
    return static_cast<int>(s);
}

OperationTable parse_table(const Json& j, std::size_t n, const std::string& where)
{
    if (!j.is_array() || j.size() != n)
        throw FormatError(where + ": expected " + std::to_string(n) + " rows");
    std::vector<Element> entries;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != n)
            throw FormatError(row + ": expected " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) {
            const auto v = integer(j[i][k], row + "[" + std::to_string(k) + "]");
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw FormatError(row + "[" + std::to_string(k) + "]: entry " + std::to_string(v) + " out of range");
            entries.push_back(static_cast<Element>(v));
        }
    }
    return OperationTable(n, std::move(entries));
}

Json table_to_json(const OperationTable& t)
{
    Json rows = Json::array();
    for (Element i = 0; i < t.size(); ++i) {
        Json row = Json::array();
        for (Element k = 0; k < t.size(); ++k)
            row.push_back(t(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string element_name(const std::vector<std::string>& names, Element a)
{
    return a < names.size() ? names[a] : std::to_string(a);
}

Json big_to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json crossing_to_json(const Crossing& c)
{
    return Json{{"over", c.over}, {"under_in", c.under_in}, {"under_out", c.under_out}, {"sign", c.sign}};
}

Json vertex_to_json(const Vertex& v)
{
    return Json{{"arcs", {v.arcs[0], v.arcs[1], v.arcs[2]}}, {"role", to_string(v.role)}, {"sign", v.sign}};
}

} // namespace

Json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

StructureData parse_structure(const Json& j)
{
    const auto size = integer(field(j, "size", "structure"), "structure.size");
    if (size <= 0)
        throw FormatError("structure.size: must be positive");
    const auto n = static_cast<std::size_t>(size);
    StructureData out{parse_table(field(j, "dot", "structure"), n, "structure.dot"),
                      parse_table(field(j, "tri", "structure"), n, "structure.tri"),
                      {}};
    if (auto it = j.find("names"); it != j.end()) {
        if (!it->is_array() || it->size() != n)
            throw FormatError("structure.names: expected " + std::to_string(n) + " strings");
        for (std::size_t i = 0; i < n; ++i) {
            if (!(*it)[i].is_string())
                throw FormatError("structure.names[" + std::to_string(i) + "]: expected a string");
            out.names.push_back((*it)[i].get<std::string>());
        }
    }
    return out;
}

Json structure_to_json(const OperationTable& dot, const OperationTable& tri, const std::vector<std::string>& names)
{
    Json j{{"size", dot.size()}, {"dot", table_to_json(dot)}, {"tri", table_to_json(tri)}};
    if (!names.empty())
        j["names"] = names;
    return j;
}

Element parse_element(const Json& j, const Shalgebra& s, const std::string& where)
{
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0 || static_cast<std::size_t>(v) >= s.size())
            throw FormatError(where + ": element " + std::to_string(v) + " out of range");
        return static_cast<Element>(v);
    }
    if (j.is_string()) {
        const auto& names = s.names();
        auto it = std::find(names.begin(), names.end(), j.get<std::string>());
        if (it == names.end())
            throw FormatError(where + ": unknown element \"" + j.get<std::string>() + "\"");
        return static_cast<Element>(it - names.begin());
    }
    throw FormatError(where + ": expected an element index or name");
}

KTGDiagram parse_diagram(const Json& j)
{
    KTGDiagram d;
    const auto& arcs = field(j, "arcs", "diagram");
    if (!arcs.is_array())
        throw FormatError("diagram.arcs: expected an array");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const std::string where = "diagram.arcs[" + std::to_string(i) + "]";
        d.arcs.push_back(arcs[i].is_object() ? integer(field(arcs[i], "id", where), where + ".id")
                                             : integer(arcs[i], where));
    }
    if (auto it = j.find("crossings"); it != j.end()) {
        if (!it->is_array())
            throw FormatError("diagram.crossings: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "diagram.crossings[" + std::to_string(i) + "]";
            const auto& c = (*it)[i];
            d.crossings.push_back({integer(field(c, "over", where), where + ".over"),
                                   integer(field(c, "under_in", where), where + ".under_in"),
                                   integer(field(c, "under_out", where), where + ".under_out"),
                                   sign_of(field(c, "sign", where), where + ".sign")});
        }
    }
    if (auto it = j.find("vertices"); it != j.end()) {
        if (!it->is_array())
            throw FormatError("diagram.vertices: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "diagram.vertices[" + std::to_string(i) + "]";
            const auto& v = (*it)[i];
            const auto& a = field(v, "arcs", where);
            if (!a.is_array() || a.size() != 3)
                throw FormatError(where + ".arcs: expected three arc ids");
            Vertex out;
            for (std::size_t k = 0; k < 3; ++k)
                out.arcs[k] = integer(a[k], where + ".arcs[" + std::to_string(k) + "]");
            const auto& role = field(v, "role", where);
            if (role == "zip")
                out.role = VertexRole::zip;
            else if (role == "unzip")
                out.role = VertexRole::unzip;
            else
                throw FormatError(where + ".role: expected \"zip\" or \"unzip\"");
            out.sign = v.contains("sign") ? sign_of(v["sign"], where + ".sign") : (out.role == VertexRole::zip ? 1 : -1);
            d.vertices.push_back(out);
        }
    }
    validate(d);
    return d;
}

Json diagram_to_json(const KTGDiagram& d)
{
    Json j{{"arcs", d.arcs}, {"crossings", Json::array()}, {"vertices", Json::array()}};
    for (const auto& c : d.crossings)
        j["crossings"].push_back(crossing_to_json(c));
    for (const auto& v : d.vertices)
        j["vertices"].push_back(vertex_to_json(v));
    return j;
}

FoamChainPresentation parse_foam(const Json& j, const Shalgebra& s)
{
    FoamChainPresentation f;
    const auto& list = field(j, "crossings", "foam");
    if (!list.is_array())
        throw FormatError("foam.crossings: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "foam.crossings[" + std::to_string(i) + "]";
        const auto& c = list[i];
        const auto& type = field(c, "type", where);
        auto kind = type.is_string() ? foam_kind_from_name(type.get<std::string>()) : std::nullopt;
        if (!kind)
            throw FormatError(where + ".type: expected one of H, YI, IY, III");
        const auto& labels = field(c, "labels", where);
        if (!labels.is_array() || labels.size() != 3)
            throw FormatError(where + ".labels: expected three elements");
        FoamCrossing out{*kind, {}, sign_of(field(c, "sign", where), where + ".sign")};
        for (std::size_t k = 0; k < 3; ++k)
            out.labels[k] = parse_element(labels[k], s, where + ".labels[" + std::to_string(k) + "]");
        f.crossings.push_back(out);
    }
    return f;
}

MoveFixture parse_move_fixture(const Json& j)
{
    MoveFixture f;
    const auto& name = field(j, "move", "fixture");
    auto m = name.is_string() ? move_from_name(name.get<std::string>()) : std::nullopt;
    if (!m)
        throw FormatError("fixture.move: unknown move");
    f.move = *m;
    const auto& site = field(j, "site", "fixture");
    const auto& targets = field(site, "targets", "fixture.site");
    if (!targets.is_array())
        throw FormatError("fixture.site.targets: expected an array");
    for (std::size_t i = 0; i < targets.size(); ++i)
        f.site.targets.push_back(integer(targets[i], "fixture.site.targets[" + std::to_string(i) + "]"));
    if (site.contains("sign"))
        f.site.sign = sign_of(site["sign"], "fixture.site.sign");
    if (site.contains("variant"))
        f.site.variant = static_cast<int>(integer(site["variant"], "fixture.site.variant"));
    if (site.contains("inverse")) {
        if (!site["inverse"].is_boolean())
            throw FormatError("fixture.site.inverse: expected a boolean");
        f.site.inverse = site["inverse"].get<bool>();
    }
    f.before = parse_diagram(field(j, "before", "fixture"));
    f.after = parse_diagram(field(j, "after", "fixture"));
    return f;
}

Json move_fixture_to_json(const MoveFixture& f)
{
    return Json{{"move", to_string(f.move)},
                {"site",
                 {{"targets", f.site.targets},
                  {"sign", f.site.sign},
                  {"variant", f.site.variant},
                  {"inverse", f.site.inverse}}},
                {"before", diagram_to_json(f.before)},
                {"after", diagram_to_json(f.after)}};
}

Json axiom_report_to_json(const AxiomReport& r, const std::vector<std::string>& names)
{
    Json out = Json::array();
    for (Axiom a : all_axioms) {
        Json w = Json::array();
        for (Element x : r[a].witness)
            w.push_back(element_name(names, x));
        out.push_back(Json{{"axiom", axiom_name(a)}, {"holds", r.holds(a)}, {"witness", std::move(w)}});
    }
    return out;
}

Json homology_to_json(const HomologyGroup& h)
{
    Json torsion = Json::array();
    for (const auto& d : h.torsion)
        torsion.push_back(big_to_json(d));
    return Json{{"free_rank", h.free_rank}, {"torsion", std::move(torsion)}, {"group", to_string(h)}};
}

Json class_to_json(const HomologyClass& c)
{
    Json free = Json::array(), torsion = Json::array();
    for (const auto& x : c.free)
        free.push_back(big_to_json(x));
    for (const auto& x : c.torsion)
        torsion.push_back(big_to_json(x));
    return Json{{"free", std::move(free)}, {"torsion", std::move(torsion)}};
}

Json invariant_to_json(const InvariantResult& r, const KTGDiagram& d, const Shalgebra& s, bool with_colorings)
{
    Json classes = Json::array();
    for (const auto& [c, n] : r.multiset)
        classes.push_back(Json{{"class", class_to_json(c)}, {"count", n}});
    Json out{{"homology", homology_to_json(r.group)}, {"coloring_count", r.coloring_count()}, {"classes", classes}};
    if (with_colorings) {
        Json list = Json::array();
        for (std::size_t i = 0; i < r.colorings.size(); ++i) {
            Json colors = Json::object();
            for (std::size_t k = 0; k < d.arcs.size(); ++k)
                colors[std::to_string(d.arcs[k])] = s.name(r.colorings[i].colors[k]);
            list.push_back(Json{{"colors", std::move(colors)}, {"class", class_to_json(r.classes[i])}});
        }
        out["colorings"] = std::move(list);
    }
    return out;
}

Json prism_to_json(const LabeledPrism& p, const Shalgebra& s)
{
    Json vertices = Json::array(), edges = Json::array(), faces = Json::array();
    for (const auto& v : p.vertices())
        vertices.push_back(v.coords);
    for (const auto& [e, label] : p.edges)
        edges.push_back(Json{{"from", e.first.coords}, {"to", e.second.coords}, {"label", s.name(label)}});
    for (const auto& f : geometric_faces(p, s))
        faces.push_back(Json{{"sign", f.sign}, {"tuple", format(f.prism.label, s)}});
    return Json{{"tuple", format(p.label, s)},
                {"partition", p.partition.parts},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)},
                {"faces", std::move(faces)}};
}

BracketedTuple parse_blocks(std::string_view text, const Shalgebra& s)
{
    std::vector<std::vector<Element>> blocks(1);
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw FormatError("tuple \"" + std::string(text) + "\": empty entry");
        Json j = token;
        if (!token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(c); }) &&
            std::find(s.names().begin(), s.names().end(), token) == s.names().end())
            j = std::stoll(token);
        blocks.back().push_back(parse_element(j, s, "tuple"));
        token.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (c == ';') {
            flush();
            blocks.emplace_back();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    flush();
    return BracketedTuple::from_blocks(blocks);
}

} // namespace prismhom
