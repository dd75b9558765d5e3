#include "hoobs/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hoobs/errors.hpp"

namespace hoobs {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& msg) {
    throw ValidationError("schema violation at " + (pointer.empty() ? std::string("/") : pointer) + ": " + msg);
}

[[noreturn]] void ref_error(const std::string& pointer, const std::string& msg) {
    throw ValidationError("invalid reference at " + pointer + ": " + msg);
}

void check_keys(const json& j, const std::string& ptr, const std::set<std::string>& allowed) {
    for (const auto& [k, v] : j.items()) {
        if (!allowed.count(k)) schema_error(ptr + "/" + k, "unknown property");
    }
}

const json& require(const json& j, const std::string& ptr, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) schema_error(ptr + "/" + key, "required property missing");
    return *it;
}

std::string get_string(const json& j, const std::string& ptr) {
    if (!j.is_string()) schema_error(ptr, "expected a string");
    auto s = j.get<std::string>();
    if (s.empty()) schema_error(ptr, "expected a non-empty string");
    return s;
}

std::vector<std::string> get_names(const json& j, const std::string& ptr, bool unique, bool nonempty = false) {
    if (!j.is_array()) schema_error(ptr, "expected an array");
    if (nonempty && j.empty()) schema_error(ptr, "expected a non-empty array");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto p = ptr + "/" + std::to_string(i);
        auto s = get_string(j[i], p);
        if (unique && !seen.insert(s).second) schema_error(p, "duplicate entry '" + s + "'");
        out.push_back(std::move(s));
    }
    return out;
}

json names_json(const std::vector<std::string>& v) { return json(v); }

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) schema_error("", "expected an object");
    check_keys(root, "", {"system", "labeling", "agents", "secrets", "t_sets", "properties"});
    ScenarioFile f;

    const json& sys = require(root, "", "system");
    if (!sys.is_object()) schema_error("/system", "expected an object");
    check_keys(sys, "/system", {"states", "events", "transitions", "initial"});
    f.states = get_names(require(sys, "/system", "states"), "/system/states", true, true);
    f.events = get_names(require(sys, "/system", "events"), "/system/events", true);
    const json& ts = require(sys, "/system", "transitions");
    if (!ts.is_array()) schema_error("/system/transitions", "expected an array");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto p = "/system/transitions/" + std::to_string(i);
        if (!ts[i].is_array() || ts[i].size() != 3) schema_error(p, "expected [source, event, target]");
        f.transitions.push_back({get_string(ts[i][0], p + "/0"), get_string(ts[i][1], p + "/1"),
                                 get_string(ts[i][2], p + "/2")});
    }
    f.initial = get_names(require(sys, "/system", "initial"), "/system/initial", true, true);

    if (auto it = root.find("labeling"); it != root.end()) {
        if (!it->is_object()) schema_error("/labeling", "expected an object");
        std::map<std::string, std::string> m;
        for (const auto& [k, v] : it->items()) m[k] = get_string(v, "/labeling/" + k);
        f.labeling = std::move(m);
    }
    if (auto it = root.find("agents"); it != root.end()) {
        if (!it->is_array()) schema_error("/agents", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            auto p = "/agents/" + std::to_string(i);
            const json& a = (*it)[i];
            if (!a.is_object()) schema_error(p, "expected an object");
            check_keys(a, p, {"name", "observable"});
            f.agents.push_back({get_string(require(a, p, "name"), p + "/name"),
                                get_names(require(a, p, "observable"), p + "/observable", true)});
        }
    }
    if (auto it = root.find("secrets"); it != root.end()) f.secrets = get_names(*it, "/secrets", true);
    if (auto it = root.find("t_sets"); it != root.end()) {
        if (!it->is_object()) schema_error("/t_sets", "expected an object");
        for (const auto& [k, v] : it->items()) {
            auto p = "/t_sets/" + k;
            if (!v.is_array()) schema_error(p, "expected an array");
            std::vector<std::vector<std::string>> fam;
            for (std::size_t i = 0; i < v.size(); ++i) {
                fam.push_back(get_names(v[i], p + "/" + std::to_string(i), true, true));
            }
            f.t_sets[k] = std::move(fam);
        }
    }
    if (auto it = root.find("properties"); it != root.end()) {
        if (!it->is_array()) schema_error("/properties", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            auto p = "/properties/" + std::to_string(i);
            const json& j = (*it)[i];
            if (!j.is_object()) schema_error(p, "expected an object");
            check_keys(j, p, {"name", "kind", "formula", "chain", "stage", "method", "t_set", "critical", "secrets"});
            PropertySpec ps;
            ps.name = get_string(require(j, p, "name"), p + "/name");
            bool has_kind = j.contains("kind"), has_formula = j.contains("formula");
            if (has_kind == has_formula) schema_error(p, "exactly one of 'kind' and 'formula' is required");
            if (has_kind) ps.kind = get_string(j["kind"], p + "/kind");
            if (has_formula) ps.formula = get_string(j["formula"], p + "/formula");
            if (j.contains("chain")) ps.chain = get_names(j["chain"], p + "/chain", false);
            if (j.contains("stage")) {
                ps.stage = get_string(j["stage"], p + "/stage");
                if (*ps.stage != "auto" && *ps.stage != "observer" && *ps.stage != "detector") {
                    schema_error(p + "/stage", "expected auto, observer or detector");
                }
            }
            if (j.contains("method")) {
                ps.method = get_string(j["method"], p + "/method");
                if (*ps.method != "han" && *ps.method != "diamond") schema_error(p + "/method", "expected han or diamond");
            }
            if (j.contains("t_set")) ps.t_set = get_string(j["t_set"], p + "/t_set");
            if (j.contains("critical")) ps.critical = get_names(j["critical"], p + "/critical", true);
            if (j.contains("secrets")) ps.secrets = get_names(j["secrets"], p + "/secrets", true);
            f.properties.push_back(std::move(ps));
        }
    }
    return f;
}

std::string serialize_scenario(const ScenarioFile& f) {
    json root;
    json sys;
    sys["states"] = names_json(f.states);
    sys["events"] = names_json(f.events);
    sys["transitions"] = json::array();
    for (const auto& t : f.transitions) sys["transitions"].push_back({t[0], t[1], t[2]});
    sys["initial"] = names_json(f.initial);
    root["system"] = std::move(sys);
    if (f.labeling) root["labeling"] = *f.labeling;
    if (!f.agents.empty()) {
        root["agents"] = json::array();
        for (const auto& a : f.agents) root["agents"].push_back({{"name", a.name}, {"observable", a.observable}});
    }
    if (f.secrets) root["secrets"] = *f.secrets;
    if (!f.t_sets.empty()) root["t_sets"] = f.t_sets;
    if (!f.properties.empty()) {
        root["properties"] = json::array();
        for (const auto& p : f.properties) {
            json j;
            j["name"] = p.name;
            if (!p.kind.empty()) j["kind"] = p.kind;
            if (!p.formula.empty()) j["formula"] = p.formula;
            if (!p.chain.empty()) j["chain"] = p.chain;
            if (p.stage) j["stage"] = *p.stage;
            if (p.method) j["method"] = *p.method;
            if (p.t_set) j["t_set"] = *p.t_set;
            if (p.critical) j["critical"] = *p.critical;
            if (p.secrets) j["secrets"] = *p.secrets;
            root["properties"].push_back(std::move(j));
        }
    }
    return root.dump(2) + "\n";
}

const AgentProfile& Scenario::agent(std::string_view name) const {
    for (const auto& a : agents) {
        if (a.name == name) return a;
    }
    throw ValidationError("unknown agent '" + std::string(name) + "'");
}

AgentChain Scenario::chain(const std::vector<std::string>& names) const {
    AgentChain out;
    for (const auto& n : names) out.push_back(agent(n));
    return out;
}

LabeledAutomaton Scenario::labeled(const std::optional<std::string>& agent_name) const {
    if (agent_name) {
        return LabeledAutomaton(system, Labeling::projection(system.event_names(), agent(*agent_name).observable));
    }
    if (!labeling) throw ValidationError("no agent given and the scenario has no explicit labeling");
    return LabeledAutomaton(system, *labeling);
}

namespace {

StateSet resolve_states(const NameTable& names, const std::vector<std::string>& v, const std::string& ptr) {
    std::vector<StateId> ids;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto id = names.find(v[i]);
        if (!id) ref_error(ptr + "/" + std::to_string(i), "unknown state '" + v[i] + "'");
        ids.push_back(*id);
    }
    return StateSet(std::move(ids));
}

const std::map<std::string, PropertyKind>& kind_table() {
    static const std::map<std::string, PropertyKind> t{
        {"cso", PropertyKind::cso},
        {"scso", PropertyKind::scso},
        {"critical_observability", PropertyKind::critical_observability},
        {"determinism", PropertyKind::determinism},
        {"t_det", PropertyKind::t_det},
        {"hoo_a", PropertyKind::hoo_a},
        {"hoo_b", PropertyKind::hoo_b},
        {"hoo_c", PropertyKind::hoo_c},
        {"order3_cso", PropertyKind::order3_cso},
    };
    return t;
}

}  // namespace

Scenario resolve_scenario(const ScenarioFile& f) {
    Scenario sc;
    sc.file = f;
    NameTable states(f.states);
    NameTable events;
    for (const auto& e : f.events) {
        if (e == kEpsName) ref_error("/system/events", "'eps' is reserved");
        events.add(e);
    }
    std::vector<Transition> ts;
    for (std::size_t i = 0; i < f.transitions.size(); ++i) {
        auto p = "/system/transitions/" + std::to_string(i);
        const auto& t = f.transitions[i];
        auto s = states.find(t[0]);
        auto e = events.find(t[1]);
        auto d = states.find(t[2]);
        if (!s) ref_error(p + "/0", "unknown state '" + t[0] + "'");
        if (!e) ref_error(p + "/1", "unknown event '" + t[1] + "'");
        if (!d) ref_error(p + "/2", "unknown state '" + t[2] + "'");
        ts.push_back({*s, *e, *d});
    }
    StateSet init = resolve_states(states, f.initial, "/system/initial");
    sc.system = Automaton(states, events, std::move(ts), std::move(init));

    if (f.labeling) {
        std::vector<LabelId> map(events.size(), kEpsilon);
        NameTable labels;
        std::vector<bool> covered(events.size(), false);
        for (const auto& [ev, lab] : *f.labeling) {
            auto e = events.find(ev);
            if (!e) ref_error("/labeling/" + ev, "unknown event '" + ev + "'");
            covered[*e] = true;
            if (lab == kEpsName) continue;
            auto l = labels.find(lab);
            map[*e] = l ? *l : labels.add(lab);
        }
        for (EventId e = 0; e < events.size(); ++e) {
            if (!covered[e]) ref_error("/labeling", "event '" + events.name(e) + "' has no label");
        }
        sc.labeling = Labeling(std::move(map), std::move(labels));
    }

    std::set<std::string> agent_names;
    for (std::size_t i = 0; i < f.agents.size(); ++i) {
        auto p = "/agents/" + std::to_string(i);
        const auto& a = f.agents[i];
        if (!agent_names.insert(a.name).second) ref_error(p + "/name", "duplicate agent '" + a.name + "'");
        std::vector<EventId> obs;
        for (std::size_t j = 0; j < a.observable.size(); ++j) {
            auto e = events.find(a.observable[j]);
            if (!e) ref_error(p + "/observable/" + std::to_string(j), "unknown event '" + a.observable[j] + "'");
            obs.push_back(*e);
        }
        sc.agents.push_back({a.name, EventSet(std::move(obs))});
    }
    if (f.secrets) sc.secrets = resolve_states(states, *f.secrets, "/secrets");
    for (const auto& [name, fam] : f.t_sets) {
        std::vector<StateSet> out;
        for (std::size_t i = 0; i < fam.size(); ++i) {
            out.push_back(resolve_states(states, fam[i], "/t_sets/" + name + "/" + std::to_string(i)));
        }
        sc.t_sets[name] = std::move(out);
    }

    for (std::size_t i = 0; i < f.properties.size(); ++i) {
        auto p = "/properties/" + std::to_string(i);
        const auto& ps = f.properties[i];
        Property prop;
        prop.name = ps.name;
        for (std::size_t j = 0; j < ps.chain.size(); ++j) {
            if (!agent_names.count(ps.chain[j])) {
                ref_error(p + "/chain/" + std::to_string(j), "unknown agent '" + ps.chain[j] + "'");
            }
        }
        prop.chain = sc.chain(ps.chain);
        if (ps.stage) {
            prop.stage = *ps.stage == "observer"   ? StageChoice::observer
                         : *ps.stage == "detector" ? StageChoice::detector
                                                   : StageChoice::automatic;
        }
        if (ps.method) prop.method = *ps.method == "diamond" ? ScsoMethod::diamond : ScsoMethod::han;
        prop.secrets = ps.secrets ? resolve_states(states, *ps.secrets, p + "/secrets") : sc.secrets;
        const std::size_t n = std::max<std::size_t>(1, ps.chain.size());

        auto need_order = [&](std::size_t want) {
            if (n != want) {
                ref_error(p + "/chain", "kind '" + ps.kind + "' needs a chain of " + std::to_string(want) + " agent(s)");
            }
        };
        auto t_family = [&]() {
            if (!ps.t_set) ref_error(p, "kind '" + ps.kind + "' needs 't_set'");
            auto it = sc.t_sets.find(*ps.t_set);
            if (it == sc.t_sets.end()) ref_error(p + "/t_set", "unknown t_set '" + *ps.t_set + "'");
            return it->second;
        };
        try {
            if (!ps.formula.empty()) {
                prop.kind = PropertyKind::formula;
                prop.formula = parse_predicate(ps.formula, states);
                if (prop.formula->level() != static_cast<int>(n)) {
                    ref_error(p + "/formula", "predicate level " + std::to_string(prop.formula->level()) +
                                                  " does not match chain length " + std::to_string(n));
                }
            } else {
                auto it = kind_table().find(ps.kind);
                if (it == kind_table().end()) ref_error(p + "/kind", "unknown property kind '" + ps.kind + "'");
                prop.kind = it->second;
                switch (prop.kind) {
                    case PropertyKind::cso:
                        need_order(1);
                        prop.formula = builtin::cso(prop.secrets);
                        break;
                    case PropertyKind::scso:
                        need_order(1);
                        break;
                    case PropertyKind::critical_observability: {
                        need_order(1);
                        if (!ps.critical) ref_error(p, "kind 'critical_observability' needs 'critical'");
                        prop.formula = builtin::critical_observability(
                            resolve_states(states, *ps.critical, p + "/critical"), states.size());
                        break;
                    }
                    case PropertyKind::determinism:
                        need_order(1);
                        prop.formula = builtin::determinism();
                        break;
                    case PropertyKind::t_det:
                        if (n < 2) ref_error(p + "/chain", "kind 't_det' needs a chain of at least 2 agents");
                        prop.formula = builtin::order_n_t_det(t_family(), n);
                        break;
                    case PropertyKind::hoo_a:
                        need_order(2);
                        prop.formula = builtin::hoo_a(t_family());
                        break;
                    case PropertyKind::hoo_b:
                        need_order(2);
                        prop.formula = builtin::hoo_b();
                        break;
                    case PropertyKind::hoo_c:
                        need_order(2);
                        prop.formula = builtin::hoo_c(states.size());
                        break;
                    case PropertyKind::order3_cso:
                        need_order(3);
                        prop.formula = builtin::order3_cso();
                        break;
                    case PropertyKind::formula:
                        break;
                }
            }
        } catch (const ValidationError& e) {
            std::string msg = e.what();
            if (msg.rfind("invalid reference", 0) == 0) throw;
            ref_error(p, msg);
        }
        if (n == 1 && ps.chain.empty() && !sc.labeling) {
            ref_error(p, "order-1 property without an agent needs an explicit labeling");
        }
        sc.properties.push_back(std::move(prop));
    }
    return sc;
}

Scenario load_scenario(std::string_view json_text) { return resolve_scenario(parse_scenario(json_text)); }

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_scenario(ss.str());
}

Verdict check_property(const Scenario& sc, const Property& p, PipelineCache& cache) {
    Verdict v;
    if (p.kind == PropertyKind::scso) {
        std::optional<std::string> agent;
        if (!p.chain.empty()) agent = p.chain.front().name;
        v = verify_scso(sc.labeled(agent), p.secrets, p.method);
    } else if (p.chain.size() <= 1) {
        std::optional<std::string> agent;
        if (!p.chain.empty()) agent = p.chain.front().name;
        v = verify_order1(sc.labeled(agent), *p.formula, true);
    } else {
        v = verify_order_n(cache, p.chain, *p.formula, p.stage);
    }
    v.property = p.name;
    return v;
}

}  // namespace hoobs
