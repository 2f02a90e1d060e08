#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "bisyz/hilbert.hpp"
#include "bisyz/koszul.hpp"
#include "bisyz/point.hpp"
#include "bisyz/textio.hpp"

namespace bisyz {

// Reports are JSON objects with insertion-ordered keys so that identical
// inputs produce byte-identical output. All numbers that could outgrow a
// machine word, and all rationals, are rendered as exact decimal strings.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

Json json_poly(const BiPoly& p);
Json json_point(const PointP1xP1& p);
Json json_bidegree(const BiDegree& d);
Json json_ideal(const IdealSpec& spec);
Json json_local_report(const LocalReport& rep);
Json json_module_element(const FreeModuleElement& x);
Json json_submodule(const SubmodulePresentation& m);
Json json_hilbert_poly(const HilbertPoly2& hp);
Json json_koszul_verdict(const KoszulVerdict& verdict);

// Wraps the assembled sections with the schema version and dumps them
// deterministically. An empty `sections` yields the bare skeleton.
std::string serialize_report(const Json& sections);

// Section builders used by the CLI commands.
Json basepoints_sections(const IdealSpec& ideal);
Json saturate_sections(const IdealSpec& ideal);
Json syzygies_sections(const IdealSpec& ideal);
Json koszul_check_sections(const IdealSpec& ideal,
                           const std::vector<BiPoly>& syzygy);
Json lci_sections(const IdealSpec& ideal,
                  const std::optional<PointP1xP1>& point);
Json hilbert_sections(const IdealSpec& ideal);
Json slice_sections(const IdealSpec& ideal, std::optional<BiDegree> at,
                    BiDegree max_degree);
Json theorem_sections(const IdealSpec& ideal);

}  // namespace bisyz
