#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hoobs/high_order.hpp"
#include "hoobs/predicate.hpp"
#include "hoobs/verifier.hpp"

namespace hoobs {

/// A property entry exactly as written in a scenario file.
struct PropertySpec {
    std::string name;
    /// Builtin kind; empty when `formula` is given.
    std::string kind;
    std::string formula;
    std::vector<std::string> chain;
    std::optional<std::string> stage;
    std::optional<std::string> method;
    std::optional<std::string> t_set;
    std::optional<std::vector<std::string>> critical;
    std::optional<std::vector<std::string>> secrets;

    friend bool operator==(const PropertySpec&, const PropertySpec&) = default;
};

struct AgentSpec {
    std::string name;
    std::vector<std::string> observable;

    friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

/// Unresolved scenario: names only, validated against the schema.
struct ScenarioFile {
    std::vector<std::string> states;
    std::vector<std::string> events;
    std::vector<std::array<std::string, 3>> transitions;
    std::vector<std::string> initial;
    /// event -> label, "eps" for silent events.
    std::optional<std::map<std::string, std::string>> labeling;
    std::vector<AgentSpec> agents;
    std::optional<std::vector<std::string>> secrets;
    std::map<std::string, std::vector<std::vector<std::string>>> t_sets;
    std::vector<PropertySpec> properties;

    friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

/// Schema violations name the offending JSON pointer.
ScenarioFile parse_scenario(std::string_view json_text);
std::string serialize_scenario(const ScenarioFile& f);

enum class PropertyKind {
    formula,
    cso,
    scso,
    critical_observability,
    determinism,
    t_det,
    hoo_a,
    hoo_b,
    hoo_c,
    order3_cso,
};

struct Property {
    std::string name;
    PropertyKind kind = PropertyKind::formula;
    /// Absent only for scso.
    std::optional<Formula> formula;
    /// Order-1 properties without an agent use the scenario labeling.
    AgentChain chain;
    StageChoice stage = StageChoice::automatic;
    ScsoMethod method = ScsoMethod::han;
    StateSet secrets;
};

/// Scenario with every name resolved to ids.
struct Scenario {
    ScenarioFile file;
    Automaton system;
    std::optional<Labeling> labeling;
    std::vector<AgentProfile> agents;
    StateSet secrets;
    std::map<std::string, std::vector<StateSet>> t_sets;
    std::vector<Property> properties;

    const AgentProfile& agent(std::string_view name) const;
    AgentChain chain(const std::vector<std::string>& names) const;
    /// LFSA for order-1 work: projection of `agent`, or the explicit labeling.
    LabeledAutomaton labeled(const std::optional<std::string>& agent) const;
};

/// Throws ValidationError on dangling references or inconsistent parameters.
Scenario resolve_scenario(const ScenarioFile& f);
Scenario load_scenario(std::string_view json_text);
Scenario load_scenario_file(const std::string& path);

/// Runs one property with a shared pipeline cache.
Verdict check_property(const Scenario& sc, const Property& p, PipelineCache& cache);

}  // namespace hoobs
