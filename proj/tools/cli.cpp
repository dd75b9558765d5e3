#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hoobs/hoobs.hpp"
#include "json.hpp"

namespace hoobs::cli {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::size_t state_cap_from_env() {
    const char* v = std::getenv("HOOBS_STATE_CAP");
    if (!v || !*v) return kDefaultStateCap;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw ValidationError(std::string("HOOBS_STATE_CAP is not a number: ") + v);
    }
}

std::string set_automaton_json(const SetAutomaton& x, const std::vector<std::string>& names) {
    nlohmann::json j;
    j["states"] = names;
    j["initial"] = 0;
    j["edges"] = nlohmann::json::array();
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (const auto& e : x.edges(i)) j["edges"].push_back({i, x.labels().name(e.label), e.target});
    }
    return j.dump(2) + "\n";
}

std::vector<std::string> rendered_states(const SetAutomaton& x) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(render_set(x.state(i), x.source_states()));
    return out;
}

Stage parse_stage(const std::string& s) {
    if (s == "observer") return Stage::observer;
    if (s == "detector") return Stage::detector;
    throw ValidationError("unknown stage '" + s + "'");
}

struct Options {
    std::string scenario;
    std::string agent;
    bool completed = false;
    std::string format;
    std::string with = "observer";
    std::string lift_to;
    std::string chain;
    std::string stage;
    bool flatten = false;
    std::vector<std::string> properties;
    std::string alpha;
    std::size_t bound = 8;
    std::size_t slack = 2;
    std::string what;
    std::string method = "han";
    std::size_t level = 0;
    std::string output;
    std::size_t state_cap = 0;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    int observe() {
        auto sc = load();
        auto s = sc.labeled(agent_or_none());
        Observer obs = build_observer(s, o_.completed);
        if (o_.format == "json") return emit(set_automaton_json(obs, rendered_states(obs)));
        return emit(emit_dot(obs, dot_name("obs")));
    }

    int detect() {
        auto sc = load();
        Detector det = build_detector(sc.labeled(agent_or_none()));
        if (o_.format == "json") return emit(set_automaton_json(det, rendered_states(det)));
        return emit(emit_dot(det, dot_name("det")));
    }

    int compose() {
        auto sc = load();
        auto s = sc.labeled(agent_or_none());
        StateBudget budget(cap());
        LabeledAutomaton right;
        if (o_.with == "observer") {
            ObserverOptions opt;
            opt.budget = &budget;
            right = build_observer(s, opt).as_labeled(true);
        } else if (o_.with == "detector") {
            right = build_detector(s, &budget).as_labeled(true);
        } else {
            throw ValidationError("--with must be observer or detector");
        }
        ProductAutomaton cc = concurrent_composition(s, right, &budget);
        DotOptions opt = dot_name("cc");
        if (!o_.lift_to.empty()) {
            auto lifted = lift_composition(cc, sc.system.event_names(), sc.agent(o_.lift_to).observable);
            return emit(emit_dot(lifted, opt));
        }
        return emit(emit_dot(cc, opt));
    }

    int order_obs() {
        auto sc = load();
        PipelineCache cache(sc.system, cap());
        auto h = cache.get(sc.chain(chain()), o_.stage.empty() ? Stage::observer : parse_stage(o_.stage));
        auto fp = check_fastpath(*h);
        if (fp.applicable && !fp.counts_equal) {
            err_ << "note: nested alphabets, but the pipeline's state counts differ from the plain observers\n";
        }
        if (o_.format == "json") {
            const auto& sa = h->level(h->order()).set_automaton();
            std::vector<std::string> names;
            for (std::size_t i = 0; i < sa.size(); ++i) {
                names.push_back(o_.flatten ? render(h->estimate(i), sc.system.state_names())
                                           : render(h->value(i), sc.system.state_names()));
            }
            return emit(set_automaton_json(sa, names));
        }
        DotOptions opt = dot_name("order" + std::to_string(h->order()));
        opt.flatten = o_.flatten;
        return emit(emit_dot(*h, opt));
    }

    int verify() {
        auto sc = load();
        PipelineCache cache(sc.system, cap());
        std::vector<Verdict> verdicts;
        std::vector<const Property*> selected;
        for (const auto& want : o_.properties) {
            auto it = std::find_if(sc.properties.begin(), sc.properties.end(),
                                   [&](const Property& p) { return p.name == want; });
            if (it == sc.properties.end()) throw ValidationError("unknown property '" + want + "'");
            selected.push_back(&*it);
        }
        if (o_.properties.empty()) {
            for (const auto& p : sc.properties) selected.push_back(&p);
        }
        if (selected.empty()) throw ValidationError("the scenario defines no properties");
        bool all = true;
        for (const Property* p : selected) {
            Property q = *p;
            if (!o_.stage.empty()) {
                q.stage = o_.stage == "auto"       ? StageChoice::automatic
                          : o_.stage == "detector" ? StageChoice::detector
                                                   : StageChoice::observer;
            }
            verdicts.push_back(check_property(sc, q, cache));
            all = all && verdicts.back().holds;
        }
        out_ << emit_report(verdicts, o_.format == "json" ? ReportFormat::json : ReportFormat::text);
        return all ? 0 : 1;
    }

    int estimate() {
        auto sc = load();
        PipelineCache cache(sc.system, cap());
        Stage stage = o_.stage.empty() ? Stage::observer : parse_stage(o_.stage);
        Estimate e = estimate_at(cache, sc.chain(chain()), split_commas(o_.alpha), stage);
        out_ << render(e, sc.system.state_names()) << '\n';
        return 0;
    }

    int oracle_check() {
        auto sc = load();
        std::vector<std::vector<std::string>> chains;
        if (!o_.chain.empty()) {
            chains.push_back(chain());
        } else {
            for (const auto& p : sc.file.properties) {
                if (!p.chain.empty() && std::find(chains.begin(), chains.end(), p.chain) == chains.end()) {
                    chains.push_back(p.chain);
                }
            }
        }
        if (chains.empty()) throw ValidationError("no agent chain to check; pass --chain");
        OracleConfig cfg;
        cfg.max_trace_len = o_.bound;
        cfg.level_slack = o_.slack;
        PipelineCache cache(sc.system, cap());
        std::size_t checked = 0, skipped = 0, mismatches = 0;
        for (const auto& names : chains) {
            auto full = sc.chain(names);
            TraceOracle oracle(sc.system, full, cfg);
            for (std::size_t n = 1; n <= full.size(); ++n) {
                AgentChain prefix(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
                auto h = cache.get(prefix, Stage::observer);
                auto labeling = h->final_labeling();
                for (const auto& alpha : oracle.observations(n)) {
                    auto r = oracle.estimate(n, alpha);
                    if (!r.stabilized) {
                        ++skipped;
                        continue;
                    }
                    ++checked;
                    auto i = h->run(parse_labels(labeling, alpha));
                    bool same = i && h->estimate(*i) == r.value;
                    if (!same) {
                        ++mismatches;
                        out_ << "MISMATCH chain=" << join_alpha(names) << " n=" << n << " alpha=\"" << join_alpha(alpha)
                             << "\" oracle=" << render(r.value, sc.system.state_names()) << " pipeline="
                             << (i ? render(h->estimate(*i), sc.system.state_names()) : std::string("<none>")) << '\n';
                    }
                }
            }
        }
        out_ << "checked " << checked << " estimates, " << skipped << " not stabilized within bound " << o_.bound << ", "
             << mismatches << " mismatches\n";
        return mismatches == 0 ? 0 : 1;
    }

    int export_artifact() {
        auto sc = load();
        const auto& w = o_.what;
        std::string text;
        DotOptions opt = dot_name(w);
        if (w == "system") {
            opt.secrets = sc.secrets;
            text = sc.labeling ? emit_dot(LabeledAutomaton(sc.system, *sc.labeling), opt) : emit_dot(sc.system, opt);
        } else if (w == "obs") {
            text = emit_dot(build_observer(sc.labeled(agent_or_none()), o_.completed), opt);
        } else if (w == "det") {
            text = emit_dot(build_detector(sc.labeled(agent_or_none())), opt);
        } else if (w == "cc" || w == "order-obs") {
            PipelineCache cache(sc.system, cap());
            auto h = cache.get(sc.chain(chain()), o_.stage.empty() ? Stage::observer : parse_stage(o_.stage));
            if (w == "cc") {
                std::size_t k = o_.level ? o_.level : h->order();
                if (k < 2 || k > h->order()) throw ValidationError("--level must be between 2 and the chain length");
                text = emit_level_composition(*h, k, opt);
            } else {
                opt.flatten = o_.flatten;
                text = emit_dot(*h, opt);
            }
        } else if (w == "scso-cc" || w == "scso-obs") {
            auto s = sc.labeled(agent_or_none());
            auto ns = nonsecret_subautomaton(s, sc.secrets);
            if (w == "scso-cc") {
                auto right = build_observer(ns.lfsa, true).as_labeled(true);
                opt.secrets = secret_pairs(concurrent_composition(s, right), sc.secrets);
                text = emit_dot(concurrent_composition(s, right), opt);
            } else {
                auto dc = diamond_completion(ns.lfsa);
                auto cc = concurrent_composition(s, dc.lfsa);
                text = emit_dot(build_observer(cc.lfsa, false), opt);
            }
        } else {
            throw ValidationError("unknown --what '" + w + "'");
        }
        if (o_.output.empty()) return emit(text);
        std::ofstream f(o_.output);
        if (!f) throw ValidationError("cannot write '" + o_.output + "'");
        f << text;
        return 0;
    }

private:
    Scenario load() const { return load_scenario_file(o_.scenario); }

    std::optional<std::string> agent_or_none() const {
        if (o_.agent.empty()) return std::nullopt;
        return o_.agent;
    }

    std::vector<std::string> chain() const {
        auto c = split_commas(o_.chain);
        if (c.empty()) throw ValidationError("--chain is required");
        return c;
    }

    std::size_t cap() const { return o_.state_cap ? o_.state_cap : state_cap_from_env(); }

    DotOptions dot_name(const std::string& n) const {
        DotOptions opt;
        opt.graph_name = n;
        return opt;
    }

    static StateSet secret_pairs(const ProductAutomaton& cc, const StateSet& secrets) {
        std::vector<StateId> out;
        for (StateId i = 0; i < cc.state_pairs.size(); ++i) {
            if (secrets.contains(cc.state_pairs[i].first)) out.push_back(i);
        }
        return StateSet(std::move(out));
    }

    int emit(const std::string& text) {
        out_ << text;
        return 0;
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hoobs: observers, order-n observers and state-estimation property checks"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--state-cap", o.state_cap, "State cap for constructions (overrides HOOBS_STATE_CAP)");

    auto scenario = [&](CLI::App* sub) {
        sub->add_option("scenario", o.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    };
    auto fmt = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
    };
    auto stage = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--stage", o.stage, "First pipeline stage")->check(CLI::IsMember(allowed));
    };

    auto* observe = app.add_subcommand("observe", "Observer of the system under an agent's projection");
    scenario(observe);
    observe->add_option("--agent", o.agent, "Agent whose projection labels the system");
    observe->add_flag("--completed", o.completed, "Add the absorbing empty state");
    fmt(observe, {"dot", "json"});

    auto* detect = app.add_subcommand("detect", "Detector of the system under an agent's projection");
    scenario(detect);
    detect->add_option("--agent", o.agent, "Agent whose projection labels the system");
    fmt(detect, {"dot", "json"});

    auto* compose = app.add_subcommand("compose", "Concurrent composition of the system with its observer or detector");
    scenario(compose);
    compose->add_option("--agent", o.agent, "Agent whose projection labels the system");
    compose->add_option("--with", o.with, "Right factor")->check(CLI::IsMember({"observer", "detector"}));
    compose->add_option("--lift-to", o.lift_to, "Rename events to the system's and label by this agent");

    auto* order_obs = app.add_subcommand("order-obs", "Order-n observer for an agent chain");
    scenario(order_obs);
    order_obs->add_option("--chain", o.chain, "Comma-separated agents A1,...,An")->required();
    stage(order_obs, {"observer", "detector"});
    order_obs->add_flag("--flatten", o.flatten, "Label states by their flattened estimates");
    fmt(order_obs, {"dot", "json"});

    auto* verify = app.add_subcommand("verify", "Check the scenario's properties");
    scenario(verify);
    verify->add_option("--property", o.properties, "Property name (repeatable; default: all)");
    stage(verify, {"auto", "observer", "detector"});
    fmt(verify, {"text", "json"});

    auto* estimate = app.add_subcommand("estimate", "Flattened order-n estimate after an observation");
    scenario(estimate);
    estimate->add_option("--chain", o.chain, "Comma-separated agents A1,...,An")->required();
    estimate->add_option("--alpha", o.alpha, "Comma-separated labels observed by An")->required();
    stage(estimate, {"observer", "detector"});

    auto* oracle = app.add_subcommand("oracle-check", "Compare pipeline estimates with bounded trace enumeration");
    scenario(oracle);
    oracle->add_option("--bound", o.bound, "Trace length bound")->check(CLI::Range(1, 64));
    oracle->add_option("--level-slack", o.slack, "Extra trace length per inner level")->check(CLI::Range(0, 32));
    oracle->add_option("--chain", o.chain, "Comma-separated agents (default: every chain used by a property)");

    auto* exp = app.add_subcommand("export", "Write a constructed artifact as DOT");
    scenario(exp);
    exp->add_option("--what", o.what, "Artifact")
        ->required()
        ->check(CLI::IsMember({"system", "obs", "det", "cc", "order-obs", "scso-cc", "scso-obs"}));
    exp->add_option("--agent", o.agent, "Agent for obs, det, scso-cc, scso-obs");
    exp->add_option("--chain", o.chain, "Agent chain for cc and order-obs");
    exp->add_option("--level", o.level, "Pipeline level for cc (default: last)");
    exp->add_flag("--completed", o.completed, "Completed observer for obs");
    exp->add_flag("--flatten", o.flatten, "Flattened labels for order-obs");
    stage(exp, {"observer", "detector"});
    exp->add_option("-o,--output", o.output, "Output file (default: stdout)");

    std::vector<const char*> argv{"hoobs"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    Runner r(o, out, err);
    try {
        if (*observe) return r.observe();
        if (*detect) return r.detect();
        if (*compose) return r.compose();
        if (*order_obs) return r.order_obs();
        if (*verify) return r.verify();
        if (*estimate) return r.estimate();
        if (*oracle) return r.oracle_check();
        if (*exp) return r.export_artifact();
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace hoobs::cli
