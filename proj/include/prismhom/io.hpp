/**
 * JSON reading and writing for structures, diagrams, foam presentations,
 * prisms and computed results.
 */
#ifndef PRISMHOM_IO_HPP
#define PRISMHOM_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "prismhom/knots.hpp"
#include "prismhom/moves.hpp"
#include "prismhom/prisms.hpp"

namespace prismhom {

using Json = nlohmann::ordered_json;

/// Malformed file contents; the message names the offending field.
class FormatError : public InputError
{
public:
    using InputError::InputError;
};

Json read_json(const std::filesystem::path& path);

struct StructureData
{
    OperationTable dot;
    OperationTable tri;
    std::vector<std::string> names;
};

StructureData parse_structure(const Json& j);
Json structure_to_json(const OperationTable& dot, const OperationTable& tri, const std::vector<std::string>& names = {});

/// Element given as an index or as one of the structure's names.
Element parse_element(const Json& j, const Shalgebra& s, const std::string& field);

KTGDiagram parse_diagram(const Json& j);
Json diagram_to_json(const KTGDiagram& d);

FoamChainPresentation parse_foam(const Json& j, const Shalgebra& s);

struct MoveFixture
{
    Move move = Move::I;
    MoveSite site;
    KTGDiagram before;
    KTGDiagram after;
};

MoveFixture parse_move_fixture(const Json& j);
Json move_fixture_to_json(const MoveFixture& f);

Json axiom_report_to_json(const AxiomReport& r, const std::vector<std::string>& names);
Json homology_to_json(const HomologyGroup& h);
Json class_to_json(const HomologyClass& c);
/// Per-coloring detail is optional so that different diagrams of one graph compare equal.
Json invariant_to_json(const InvariantResult& r, const KTGDiagram& d, const Shalgebra& s, bool with_colorings = false);
Json prism_to_json(const LabeledPrism& p, const Shalgebra& s);

/// Parses blocks written like "a,b;c" (for (a,b)|c) with element names or indices.
BracketedTuple parse_blocks(std::string_view text, const Shalgebra& s);

} // namespace prismhom

#endif
