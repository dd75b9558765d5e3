#include "hoobs/families.hpp"

#include <string>
#include <vector>

#include "hoobs/errors.hpp"

namespace hoobs {

Automaton counter_automaton(std::size_t k) {
    if (k < 1 || k > 16) throw ValidationError("counter width must be between 1 and 16, got " + std::to_string(k));
    const StateId n = StateId{1} << k;
    constexpr EventId d = 0, f = 1, r = 2, t = 3;
    std::vector<Transition> ts{{0, d, 0}};
    for (StateId i = 0; i < n; ++i) {
        ts.push_back({i, f, i ^ 1u});
        ts.push_back({i, r, 0});
        ts.push_back({i, t, (i + 1) % n});
    }
    return Automaton(NameTable::anonymous(n, ""), NameTable({"d", "f", "r", "t"}), std::move(ts), StateSet{0});
}

}  // namespace hoobs
