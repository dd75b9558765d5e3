#include "hoobs/dot.hpp"
#include "hoobs/errors.hpp"

#include <sstream>
#include <string>

namespace hoobs {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.compare(i, kDiamondName.size(), kDiamondName) == 0) {
            out += "◇";
            i += kDiamondName.size() - 1;
            continue;
        }
        if (s[i] == '"' || s[i] == '\\') out += '\\';
        out += s[i];
    }
    return out;
}

class Writer {
public:
    explicit Writer(const std::string& name) { os_ << "digraph \"" << escape(name) << "\" {\n  rankdir=LR;\n"; }

    void node(std::size_t id, const std::string& label, bool initial, bool highlight, bool box) {
        if (initial) {
            os_ << "  init" << id << " [shape=point];\n  init" << id << " -> n" << id << ";\n";
        }
        os_ << "  n" << id << " [label=\"" << escape(label) << "\"" << (box ? ", shape=box" : ", shape=circle")
            << (highlight ? ", color=red, fontcolor=red" : "") << "];\n";
    }

    void edge(std::size_t from, std::size_t to, const std::string& label, bool silent) {
        os_ << "  n" << from << " -> n" << to << " [label=\"" << escape(label) << "\""
            << (silent ? ", style=dashed" : "") << "];\n";
    }

    std::string finish() {
        os_ << "}\n";
        return os_.str();
    }

private:
    std::ostringstream os_;
};

std::string automaton_dot(const Automaton& a, const Labeling* l, const DotOptions& opt) {
    Writer w(opt.graph_name);
    bool box = a.num_states() > 0 && a.state_names().name(0).size() > 2;
    for (StateId q = 0; q < a.num_states(); ++q) {
        w.node(q, a.state_names().name(q), a.initial().contains(q), opt.secrets.contains(q), box);
    }
    for (const auto& t : a.transitions()) {
        w.edge(t.src, t.dst, a.event_names().name(t.event), l && !l->observable(t.event));
    }
    return w.finish();
}

}  // namespace

std::string emit_dot(const Automaton& a, const DotOptions& opt) { return automaton_dot(a, nullptr, opt); }

std::string emit_dot(const LabeledAutomaton& s, const DotOptions& opt) {
    return automaton_dot(s.automaton, &s.labeling, opt);
}

std::string emit_dot(const SetAutomaton& x, const DotOptions& opt) {
    Writer w(opt.graph_name);
    for (std::size_t i = 0; i < x.size(); ++i) w.node(i, render_set(x.state(i), x.source_states()), i == 0, false, true);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (const auto& e : x.edges(i)) w.edge(i, e.target, x.labels().name(e.label), false);
    }
    return w.finish();
}

std::string emit_dot(const ProductAutomaton& p, const DotOptions& opt) { return emit_dot(p.lfsa, opt); }

std::string emit_dot(const HighOrderObserver& h, const DotOptions& opt) {
    const auto& sa = h.level(h.order()).set_automaton();
    const auto& names = h.system().state_names();
    Writer w(opt.graph_name);
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const auto& v = h.level(h.order()).values[i];
        w.node(i, opt.flatten ? render(flatten(v), names) : render(v, names), i == 0, false, true);
    }
    for (std::size_t i = 0; i < sa.size(); ++i) {
        for (const auto& e : sa.edges(i)) w.edge(i, e.target, sa.labels().name(e.label), false);
    }
    return w.finish();
}

std::string emit_level_composition(const HighOrderObserver& h, std::size_t k, const DotOptions& opt) {
    if (k < 2 || k > h.order()) {
        throw ValidationError("level " + std::to_string(k) + " has no composition (valid: 2.." + std::to_string(h.order()) + ")");
    }
    const auto& lv = h.level(k);
    const auto& a = lv.lifted.value().automaton;
    const auto& l = lv.lifted->labeling;
    Writer w(opt.graph_name);
    for (StateId s = 0; s < a.num_states(); ++s) {
        w.node(s, h.render_product_state(k, s), a.initial().contains(s), opt.secrets.contains(lv.product->state_pairs[s].first),
               true);
    }
    for (const auto& t : a.transitions()) w.edge(t.src, t.dst, a.event_names().name(t.event), !l.observable(t.event));
    return w.finish();
}

}  // namespace hoobs
