#include "swarmcheck/checker.hpp"

#include "swarmcheck/alpha.hpp"
#include "swarmcheck/pack.hpp"
#include "swarmcheck/relative.hpp"
#include "swarmcheck/state_index.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <chrono>
#include <vector>

namespace swarmcheck {

// ---------------------------------------------------------------------------
// Properties

namespace {

std::size_t skip_ws(std::string_view text, std::size_t pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    return pos;
}

std::string take_ident(std::string_view text, std::size_t &pos) {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    return std::string(text.substr(start, pos - start));
}

int take_int(std::string_view text, std::size_t &pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw PropertyParseError(start, "expected an integer");
    return std::stoi(std::string(text.substr(start, pos - start)));
}

} // namespace

Property parse_property(std::string_view text) {
    std::size_t pos = skip_ws(text, 0);
    std::size_t shape_pos = pos;
    std::string shape = take_ident(text, pos);
    Property prop;
    if (shape == "F")
        prop.shape = TemporalShape::eventually;
    else if (shape == "G")
        prop.shape = TemporalShape::always;
    else if (shape == "GF")
        prop.shape = TemporalShape::repeatedly;
    else if (shape == "FG")
        prop.shape = TemporalShape::eventually_always;
    else
        throw PropertyParseError(shape_pos, "unsupported temporal operator: '" + shape + "'");

    pos = skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '!') {
        prop.negated = true;
        pos = skip_ws(text, pos + 1);
    }
    std::size_t atom_pos = pos;
    std::string atom = take_ident(text, pos);
    if (atom == "all_connected") {
        prop.atom = Atom::all_connected;
    } else if (atom == "collision_free") {
        prop.atom = Atom::collision_free;
    } else if (atom == "pairwise") {
        prop.atom = Atom::pairwise;
        pos = skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != '(')
            throw PropertyParseError(pos, "expected '(' after pairwise");
        pos = skip_ws(text, pos + 1);
        prop.i = take_int(text, pos);
        pos = skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != ',')
            throw PropertyParseError(pos, "expected ',' in pairwise");
        pos = skip_ws(text, pos + 1);
        prop.j = take_int(text, pos);
        pos = skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != ')')
            throw PropertyParseError(pos, "expected ')' in pairwise");
        ++pos;
    } else {
        throw PropertyParseError(atom_pos, "unknown atom: '" + atom + "'");
    }
    pos = skip_ws(text, pos);
    if (pos != text.size())
        throw PropertyParseError(pos, "trailing input after property");
    return prop;
}

std::string to_string(const Property &prop) {
    std::string out;
    switch (prop.shape) {
    case TemporalShape::eventually: out = "F "; break;
    case TemporalShape::always: out = "G "; break;
    case TemporalShape::repeatedly: out = "GF "; break;
    case TemporalShape::eventually_always: out = "FG "; break;
    }
    if (prop.negated)
        out += "!";
    switch (prop.atom) {
    case Atom::all_connected: out += "all_connected"; break;
    case Atom::collision_free: out += "collision_free"; break;
    case Atom::pairwise:
        out += "pairwise(" + std::to_string(prop.i) + "," + std::to_string(prop.j) + ")";
        break;
    }
    return out;
}

bool eval_atom(const Property &prop, const SwarmState &s, const ModelParams &params) {
    bool v = false;
    switch (prop.atom) {
    case Atom::all_connected: v = all_connected(s, params); break;
    case Atom::collision_free: v = collision_free(s, params); break;
    case Atom::pairwise: v = pairwise_connected(s, prop.i, prop.j, params); break;
    }
    return prop.negated ? !v : v;
}

const char *to_string(Outcome o) {
    switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Encoding adapters. The exploration, cycle search and witness machinery is
// written once and instantiated for the global and the relative encoding.

namespace {

struct GlobalOps {
    using State = SwarmState;
    using Succ = Successor;

    const ModelParams &params;
    StatePacker packer;

    explicit GlobalOps(const ModelParams &p) : params(p), packer(p) {}

    StateKey pack(const State &s) const { return packer.pack(s); }
    State unpack(StateKey k) const { return packer.unpack(k); }
    void successors(const State &s, std::vector<Succ> &out) const {
        global_successors(s, params, out);
    }
    void for_each_init(const std::function<void(const State &)> &fn) const {
        for_each_initial(params, fn);
    }
    static const SwarmState &base(const State &s) { return s; }
    static void attach(Verdict &v, Lasso<State> &&lasso) { v.witness = std::move(lasso); }
};

struct RelativeOps {
    using State = RelativeState;
    using Succ = RelSuccessor;

    const ModelParams &params;
    StatePacker packer;

    explicit RelativeOps(const ModelParams &p) : params(p), packer(p) {}

    StateKey pack(const State &s) const { return packer.pack(s); }
    State unpack(StateKey k) const { return packer.unpack_relative(k); }
    void successors(const State &s, std::vector<Succ> &out) const {
        relative_successors(s, params, out);
    }
    void for_each_init(const std::function<void(const State &)> &fn) const {
        for_each_initial_relative(params, fn);
    }
    static const SwarmState &base(const State &s) { return s.base; }
    static void attach(Verdict &v, Lasso<State> &&lasso) { v.rel_witness = std::move(lasso); }
};

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end{};
    bool enabled = false;
    bool expired = false;

    explicit Deadline(double seconds) {
        if (seconds > 0) {
            enabled = true;
            end = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(seconds));
        }
    }

    bool check() {
        if (enabled && !expired && Clock::now() > end)
            expired = true;
        return expired;
    }
};

constexpr std::int8_t kMoverNone = -3;

struct Exploration {
    StateIndex idx;
    std::vector<std::uint32_t> parent;
    std::vector<std::int8_t> mover_in;
    std::uint64_t transitions = 0;
    bool budget_hit = false;
    bool stopped_early = false;
};

// Breadth-first closure of the kept part of the graph. `keep` filters both
// seeds and successors; `visit` sees every stored state once and may stop the
// search (shortest-counterexample extraction relies on BFS order).
template <class Ops, class Keep, class Visit>
Exploration explore(const Ops &ops, const Budget &budget, Deadline &deadline,
                    bool record_parents, Keep keep, Visit visit) {
    Exploration res;
    bool stop = false;
    auto store = [&](const typename Ops::State &s, std::uint32_t from, std::int8_t mv) {
        bool inserted = false;
        std::uint32_t id = res.idx.insert(ops.pack(s), inserted);
        if (!inserted)
            return;
        if (record_parents) {
            res.parent.push_back(from);
            res.mover_in.push_back(mv);
        }
        if (visit(s, id)) {
            res.stopped_early = true;
            stop = true;
        }
        if (res.idx.size() > budget.max_states) {
            res.budget_hit = true;
            stop = true;
        }
    };

    ops.for_each_init([&](const typename Ops::State &s) {
        if (stop || !keep(s))
            return;
        store(s, StateIndex::kNpos, kMoverNone);
    });

    std::vector<typename Ops::Succ> succs;
    for (std::uint32_t qi = 0; !stop && qi < res.idx.size(); ++qi) {
        if ((qi & 0x3fff) == 0 && deadline.check()) {
            res.budget_hit = true;
            break;
        }
        typename Ops::State s = ops.unpack(res.idx.key_at(qi));
        ops.successors(s, succs);
        res.transitions += succs.size();
        for (const auto &sc : succs) {
            if (!keep(sc.state))
                continue;
            store(sc.state, qi, static_cast<std::int8_t>(sc.mover));
            if (stop)
                break;
        }
    }
    return res;
}

struct Csr {
    std::vector<std::uint64_t> offsets; // size n + 1
    std::vector<std::uint32_t> to;
    std::vector<std::int8_t> mover;
};

// Adjacency among the states already held in `exp`, in storage order.
// Successors outside the store (possible after a budget stop) are dropped.
template <class Ops, class Keep>
Csr build_csr(const Ops &ops, const Exploration &exp, Keep keep) {
    Csr csr;
    std::size_t n = exp.idx.size();
    csr.offsets.reserve(n + 1);
    csr.offsets.push_back(0);
    std::vector<typename Ops::Succ> succs;
    for (std::uint32_t u = 0; u < n; ++u) {
        typename Ops::State s = ops.unpack(exp.idx.key_at(u));
        ops.successors(s, succs);
        for (const auto &sc : succs) {
            if (!keep(sc.state))
                continue;
            std::uint32_t v = exp.idx.find(ops.pack(sc.state));
            if (v == StateIndex::kNpos)
                continue;
            csr.to.push_back(v);
            csr.mover.push_back(static_cast<std::int8_t>(sc.mover));
        }
        csr.offsets.push_back(csr.to.size());
    }
    return csr;
}

// Iterative Tarjan; components are numbered in pop order.
std::vector<std::uint32_t> tarjan_scc(const Csr &csr, std::uint32_t &num_comps) {
    std::size_t n = csr.offsets.size() - 1;
    constexpr std::uint32_t kUnvisited = 0xffffffffu;
    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<std::uint32_t> comp(n, kUnvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    struct Frame {
        std::uint32_t node;
        std::uint64_t next_edge;
    };
    std::vector<Frame> frames;
    std::uint32_t counter = 0;
    num_comps = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited)
            continue;
        frames.push_back({root, csr.offsets[root]});
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame &f = frames.back();
            std::uint32_t u = f.node;
            if (f.next_edge < csr.offsets[u + 1]) {
                std::uint32_t v = csr.to[f.next_edge++];
                if (index[v] == kUnvisited) {
                    index[v] = lowlink[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    frames.push_back({v, csr.offsets[v]});
                } else if (on_stack[v]) {
                    lowlink[u] = std::min(lowlink[u], index[v]);
                }
            } else {
                if (lowlink[u] == index[u]) {
                    std::uint32_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = num_comps;
                    } while (w != u);
                    ++num_comps;
                }
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().node] =
                        std::min(lowlink[frames.back().node], lowlink[u]);
            }
        }
    }
    return comp;
}

// A cycle through an SCC counts as a fair execution when the mode guarantees
// progress structurally, otherwise every robot must appear as a mover on
// some edge inside the component.
struct SccFlags {
    std::vector<bool> cyclic;
    std::vector<std::uint32_t> movers; // bitmask; kAllRobots edges set all bits
    std::vector<bool> has_target;      // FG: component holds a !p state
};

SccFlags scan_sccs(const Csr &csr, const std::vector<std::uint32_t> &comp,
                   std::uint32_t num_comps, int r, const std::vector<bool> *target_nodes) {
    SccFlags flags;
    flags.cyclic.assign(num_comps, false);
    flags.movers.assign(num_comps, 0);
    flags.has_target.assign(num_comps, false);
    std::uint32_t all = (1u << r) - 1;
    std::size_t n = csr.offsets.size() - 1;
    for (std::uint32_t u = 0; u < n; ++u) {
        std::uint32_t c = comp[u];
        if (target_nodes && (*target_nodes)[u])
            flags.has_target[c] = true;
        for (std::uint64_t e = csr.offsets[u]; e < csr.offsets[u + 1]; ++e) {
            if (comp[csr.to[e]] != c)
                continue;
            flags.cyclic[c] = true;
            flags.movers[c] |= csr.mover[e] == kAllRobots ? all : (1u << csr.mover[e]);
        }
    }
    return flags;
}

struct LoopStep {
    std::uint32_t node;
    std::int8_t mover;
};

// Shortest path inside component c from `cur` until either traversing an
// edge labelled want_mover or reaching want_node, appended to `walk`.
// Returns the new current node, or kNpos if unreachable.
class ComponentWalker {
public:
    ComponentWalker(const Csr &csr, const std::vector<std::uint32_t> &comp, std::uint32_t c)
        : csr_(csr), comp_(comp), c_(c), seen_(comp.size(), 0),
          prev_node_(comp.size(), 0), prev_edge_(comp.size(), 0) {}

    std::uint32_t advance(std::uint32_t cur, int want_mover, std::uint32_t want_node,
                          std::vector<LoopStep> &walk) {
        ++epoch_;
        seen_[cur] = epoch_;
        queue_.clear();
        queue_.push_back(cur);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            std::uint32_t u = queue_[qi];
            for (std::uint64_t e = csr_.offsets[u]; e < csr_.offsets[u + 1]; ++e) {
                std::uint32_t v = csr_.to[e];
                if (comp_[v] != c_)
                    continue;
                bool edge_hit = want_mover >= 0 &&
                                (csr_.mover[e] == want_mover || csr_.mover[e] == kAllRobots);
                bool node_hit = v == want_node;
                if (edge_hit || node_hit) {
                    emit_path(cur, u, walk);
                    walk.push_back({u, csr_.mover[e]});
                    return v;
                }
                if (seen_[v] != epoch_) {
                    seen_[v] = epoch_;
                    prev_node_[v] = u;
                    prev_edge_[v] = e;
                    queue_.push_back(v);
                }
            }
        }
        return StateIndex::kNpos;
    }

private:
    void emit_path(std::uint32_t from, std::uint32_t to, std::vector<LoopStep> &walk) {
        std::vector<LoopStep> rev;
        std::uint32_t v = to;
        while (v != from) {
            rev.push_back({prev_node_[v], csr_.mover[prev_edge_[v]]});
            v = prev_node_[v];
        }
        walk.insert(walk.end(), rev.rbegin(), rev.rend());
    }

    const Csr &csr_;
    const std::vector<std::uint32_t> &comp_;
    std::uint32_t c_;
    std::vector<std::uint32_t> seen_;
    std::vector<std::uint32_t> prev_node_;
    std::vector<std::uint64_t> prev_edge_;
    std::vector<std::uint32_t> queue_;
    std::uint32_t epoch_ = 0;
};

// Closed walk through component c starting and ending at entry, traversing
// every required mover (fair mode), passing through require_node if given.
std::vector<LoopStep> build_loop(const Csr &csr, const std::vector<std::uint32_t> &comp,
                                 std::uint32_t c, std::uint32_t entry, int r, bool need_movers,
                                 std::uint32_t require_node) {
    ComponentWalker walker(csr, comp, c);
    std::vector<LoopStep> walk;
    std::uint32_t cur = entry;

    if (require_node != StateIndex::kNpos && cur != require_node) {
        cur = walker.advance(cur, -1, require_node, walk);
        assert(cur != StateIndex::kNpos);
    }
    if (need_movers) {
        auto covered = [&] {
            std::uint32_t mask = 0;
            for (const LoopStep &st : walk)
                mask |= st.mover == kAllRobots ? (1u << r) - 1 : (1u << st.mover);
            return mask;
        };
        for (int x = 0; x < r; ++x) {
            if (covered() & (1u << x))
                continue;
            cur = walker.advance(cur, x, StateIndex::kNpos, walk);
            assert(cur != StateIndex::kNpos);
        }
    }
    if (walk.empty() || cur != entry) {
        // Route back; a zero-length loop is not a loop, so force one edge.
        std::uint32_t back = walker.advance(cur, -1, entry, walk);
        if (back == StateIndex::kNpos && cur == entry) {
            // Self-loop on entry is the only remaining possibility.
            for (std::uint64_t e = csr.offsets[entry]; e < csr.offsets[entry + 1]; ++e)
                if (csr.to[e] == entry) {
                    walk.push_back({entry, csr.mover[e]});
                    return walk;
                }
        }
        assert(back == entry);
    }
    return walk;
}

template <class Ops>
Lasso<typename Ops::State> assemble_lasso(const Ops &ops, const Exploration &exp,
                                          std::uint32_t entry,
                                          const std::vector<LoopStep> &loop_steps) {
    Lasso<typename Ops::State> lasso;
    std::vector<std::uint32_t> path;
    for (std::uint32_t v = entry; v != StateIndex::kNpos; v = exp.parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        lasso.prefix.push_back({ops.unpack(exp.idx.key_at(path[i])),
                                static_cast<int>(exp.mover_in[path[i + 1]])});
    for (const LoopStep &st : loop_steps)
        lasso.loop.push_back({ops.unpack(exp.idx.key_at(st.node)), static_cast<int>(st.mover)});
    return lasso;
}

// ---------------------------------------------------------------------------
// check() per temporal shape

template <class Ops>
Verdict check_impl(const Ops &ops, const ModelParams &params, const Property &prop,
                   const Budget &budget) {
    Verdict verdict;
    Deadline deadline(budget.max_seconds);
    auto t0 = Clock::now();
    auto finish = [&](Outcome outcome) {
        verdict.outcome = outcome;
        verdict.stats.time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        return verdict;
    };
    auto p = [&](const typename Ops::State &s) { return eval_atom(prop, Ops::base(s), params); };
    bool structurally_fair = params.mode != Mode::fair;

    if (prop.shape == TemporalShape::always) {
        std::uint32_t bad = StateIndex::kNpos;
        Exploration exp =
            explore(ops, budget, deadline, true,
                    [](const typename Ops::State &) { return true; },
                    [&](const typename Ops::State &s, std::uint32_t id) {
                        if (!p(s)) {
                            bad = id;
                            return true;
                        }
                        return false;
                    });
        verdict.stats.reachable = exp.idx.size();
        verdict.stats.transitions = exp.transitions;
        verdict.stats.peak_states = exp.idx.size();
        verdict.stats.budget_hit = exp.budget_hit;
        if (bad != StateIndex::kNpos) {
            Lasso<typename Ops::State> lasso;
            std::vector<std::uint32_t> path;
            for (std::uint32_t v = bad; v != StateIndex::kNpos; v = exp.parent[v])
                path.push_back(v);
            std::reverse(path.begin(), path.end());
            for (std::size_t i = 0; i < path.size(); ++i) {
                int mv = i + 1 < path.size() ? static_cast<int>(exp.mover_in[path[i + 1]])
                                             : kNoMover;
                lasso.prefix.push_back({ops.unpack(exp.idx.key_at(path[i])), mv});
            }
            Ops::attach(verdict, std::move(lasso));
            return finish(Outcome::fails);
        }
        return finish(exp.budget_hit ? Outcome::inconclusive : Outcome::holds);
    }

    if (prop.shape == TemporalShape::eventually) {
        // fails iff some fair cycle of !p states is reachable through !p
        // states only: explore the !p region and look for a fair SCC. The
        // verdict is decided by the region alone; the full pass only feeds
        // the stats row and is released before the region pass.
        {
            Exploration full = explore(
                ops, budget, deadline, false,
                [](const typename Ops::State &) { return true; },
                [](const typename Ops::State &, std::uint32_t) { return false; });
            verdict.stats.reachable = full.idx.size();
            verdict.stats.transitions = full.transitions;
            verdict.stats.peak_states = full.idx.size();
            verdict.stats.budget_hit = full.budget_hit;
        }
        Exploration region =
            explore(ops, budget, deadline, true,
                    [&](const typename Ops::State &s) { return !p(s); },
                    [](const typename Ops::State &, std::uint32_t) { return false; });
        verdict.stats.peak_states =
            std::max<std::uint64_t>(verdict.stats.peak_states, region.idx.size());
        Csr csr = build_csr(ops, region, [&](const typename Ops::State &s) { return !p(s); });
        std::uint32_t num_comps = 0;
        std::vector<std::uint32_t> comp = tarjan_scc(csr, num_comps);
        SccFlags flags = scan_sccs(csr, comp, num_comps, params.r, nullptr);
        std::uint32_t all = (1u << params.r) - 1;
        for (std::uint32_t v = 0; v < region.idx.size(); ++v) {
            std::uint32_t c = comp[v];
            if (!flags.cyclic[c] || (!structurally_fair && flags.movers[c] != all))
                continue;
            std::vector<LoopStep> loop = build_loop(csr, comp, c, v, params.r,
                                                    !structurally_fair, StateIndex::kNpos);
            Ops::attach(verdict, assemble_lasso(ops, region, v, loop));
            return finish(Outcome::fails);
        }
        if (region.budget_hit) {
            verdict.stats.budget_hit = true;
            return finish(Outcome::inconclusive);
        }
        return finish(Outcome::holds);
    }

    // GF p / FG p need the reachable graph itself.
    std::vector<bool> satisfies; // per stored state
    Exploration full =
        explore(ops, budget, deadline, true,
                [](const typename Ops::State &) { return true; },
                [&](const typename Ops::State &s, std::uint32_t) {
                    satisfies.push_back(p(s));
                    return false;
                });
    verdict.stats.reachable = full.idx.size();
    verdict.stats.transitions = full.transitions;
    verdict.stats.peak_states = full.idx.size();
    verdict.stats.budget_hit = full.budget_hit;
    bool target_is_np = prop.shape == TemporalShape::eventually_always;
    Csr csr = build_csr(ops, full, [](const typename Ops::State &) { return true; });
    std::vector<bool> region_mask;
    if (prop.shape == TemporalShape::repeatedly) {
        // Cycle must avoid p entirely: restrict edges to the !p-induced graph.
        std::size_t n = full.idx.size();
        Csr restricted;
        restricted.offsets.reserve(n + 1);
        restricted.offsets.push_back(0);
        for (std::uint32_t u = 0; u < n; ++u) {
            if (!satisfies[u])
                for (std::uint64_t e = csr.offsets[u]; e < csr.offsets[u + 1]; ++e) {
                    std::uint32_t v = csr.to[e];
                    if (!satisfies[v]) {
                        restricted.to.push_back(v);
                        restricted.mover.push_back(csr.mover[e]);
                    }
                }
            restricted.offsets.push_back(restricted.to.size());
        }
        csr = std::move(restricted);
    }
    std::vector<bool> np_nodes;
    if (target_is_np) {
        np_nodes.resize(full.idx.size());
        for (std::size_t i = 0; i < np_nodes.size(); ++i)
            np_nodes[i] = !satisfies[i];
    }
    std::uint32_t num_comps = 0;
    std::vector<std::uint32_t> comp = tarjan_scc(csr, num_comps);
    SccFlags flags = scan_sccs(csr, comp, num_comps, params.r,
                               target_is_np ? &np_nodes : nullptr);
    std::uint32_t all = (1u << params.r) - 1;
    for (std::uint32_t v = 0; v < full.idx.size(); ++v) {
        std::uint32_t c = comp[v];
        if (prop.shape == TemporalShape::repeatedly && satisfies[v])
            continue;
        if (!flags.cyclic[c] || (!structurally_fair && flags.movers[c] != all))
            continue;
        if (target_is_np && !flags.has_target[c])
            continue;
        std::uint32_t require = StateIndex::kNpos;
        if (target_is_np && !np_nodes[v]) {
            for (std::uint32_t w = 0; w < full.idx.size(); ++w)
                if (comp[w] == c && np_nodes[w]) {
                    require = w;
                    break;
                }
        }
        std::vector<LoopStep> loop =
            build_loop(csr, comp, c, v, params.r, !structurally_fair, require);
        Ops::attach(verdict, assemble_lasso(ops, full, v, loop));
        return finish(Outcome::fails);
    }
    return finish(full.budget_hit ? Outcome::inconclusive : Outcome::holds);
}

} // namespace

// ---------------------------------------------------------------------------

ReachResult enumerate_reachable(const ModelParams &params, const Budget &budget) {
    params.validate();
    Deadline deadline(budget.max_seconds);
    auto t0 = Clock::now();
    ReachResult res;
    auto run = [&](const auto &ops) {
        Exploration exp = explore(
            ops, budget, deadline, false,
            [](const auto &) { return true; }, [](const auto &, std::uint32_t) { return false; });
        res.count = exp.idx.size();
        res.transitions = exp.transitions;
        res.budget_hit = exp.budget_hit;
    };
    if (params.encoding == Encoding::global)
        run(GlobalOps(params));
    else
        run(RelativeOps(params));
    res.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return res;
}

std::vector<std::uint64_t> reachable_keys(const ModelParams &params, const Budget &budget) {
    params.validate();
    Deadline deadline(budget.max_seconds);
    std::vector<std::uint64_t> keys;
    auto run = [&](const auto &ops) {
        Exploration exp = explore(
            ops, budget, deadline, false,
            [](const auto &) { return true; }, [](const auto &, std::uint32_t) { return false; });
        if (exp.budget_hit)
            throw ConfigError("state budget exhausted while materializing reachable set");
        keys = exp.idx.keys();
    };
    if (params.encoding == Encoding::global)
        run(GlobalOps(params));
    else
        run(RelativeOps(params));
    return keys;
}

Verdict check(const ModelParams &params, const Property &prop, const Budget &budget) {
    params.validate();
    if (params.encoding == Encoding::global)
        return check_impl(GlobalOps(params), params, prop, budget);
    return check_impl(RelativeOps(params), params, prop, budget);
}

// ---------------------------------------------------------------------------
// Witness replay

namespace {

template <class Ops>
TraceCheck validate_impl(const Ops &ops, const Lasso<typename Ops::State> &trace,
                         const ModelParams &params, const Property &prop) {
    auto fail = [](int step, std::string reason) {
        return TraceCheck{false, step, std::move(reason)};
    };
    std::size_t prefix_len = trace.prefix.size();
    std::size_t total = prefix_len + trace.loop.size();
    if (total == 0)
        return fail(-1, "empty trace");

    auto state_at = [&](std::size_t i) -> const typename Ops::State & {
        return i < prefix_len ? trace.prefix[i].state : trace.loop[i - prefix_len].state;
    };
    auto mover_at = [&](std::size_t i) {
        return i < prefix_len ? trace.prefix[i].mover : trace.loop[i - prefix_len].mover;
    };

    if (!is_initial_state(state_at(0), params))
        return fail(0, "first state is not initial");

    bool finite = trace.loop.empty();
    if (finite && prop.shape != TemporalShape::always)
        return fail(-1, "missing loop for a liveness counterexample");
    if (!finite && prop.shape == TemporalShape::always)
        return fail(-1, "safety counterexample must be a finite prefix");

    std::vector<typename Ops::Succ> succs;
    std::size_t steps = finite ? total - 1 : total;
    for (std::size_t i = 0; i < steps; ++i) {
        const typename Ops::State &cur = state_at(i);
        const typename Ops::State &next =
            i + 1 < total ? state_at(i + 1) : trace.loop.front().state;
        int mv = mover_at(i);
        ops.successors(cur, succs);
        bool found = false;
        for (const auto &sc : succs)
            if (sc.mover == mv && sc.state == next) {
                found = true;
                break;
            }
        if (!found)
            return fail(static_cast<int>(i), "recorded transition is not a successor");
    }
    if (finite && mover_at(total - 1) != kNoMover)
        return fail(static_cast<int>(total - 1), "finite witness must end without a mover");

    auto p = [&](std::size_t i) { return eval_atom(prop, Ops::base(state_at(i)), params); };
    switch (prop.shape) {
    case TemporalShape::always:
        if (p(total - 1))
            return fail(static_cast<int>(total - 1), "final state does not violate the invariant");
        break;
    case TemporalShape::eventually:
        for (std::size_t i = 0; i < total; ++i)
            if (p(i))
                return fail(static_cast<int>(i), "atom holds on an eventually-counterexample");
        break;
    case TemporalShape::repeatedly:
        for (std::size_t i = prefix_len; i < total; ++i)
            if (p(i))
                return fail(static_cast<int>(i), "atom holds inside the loop");
        break;
    case TemporalShape::eventually_always: {
        bool some = false;
        for (std::size_t i = prefix_len; i < total; ++i)
            if (!p(i))
                some = true;
        if (!some)
            return fail(static_cast<int>(total - 1), "loop never violates the atom");
        break;
    }
    }

    if (params.mode == Mode::fair && !trace.loop.empty()) {
        std::uint32_t mask = 0;
        for (const auto &st : trace.loop)
            mask |= st.mover == kAllRobots ? (1u << params.r) - 1 : (1u << st.mover);
        if (mask != (1u << params.r) - 1)
            return fail(static_cast<int>(total - 1), "fairness: some robot never moves in the loop");
    }
    return {};
}

} // namespace

TraceCheck validate_trace(const GlobalLasso &trace, const ModelParams &params,
                          const Property &prop) {
    return validate_impl(GlobalOps(params), trace, params, prop);
}

TraceCheck validate_trace(const RelativeLasso &trace, const ModelParams &params,
                          const Property &prop) {
    return validate_impl(RelativeOps(params), trace, params, prop);
}

AgreementReport verdict_agreement(const ModelParams &params, const Property &prop,
                                  const Budget &budget) {
    AgreementReport report;
    ModelParams g = params;
    g.encoding = Encoding::global;
    ModelParams rel = params;
    rel.encoding = Encoding::relative;
    report.global = check(g, prop, budget);
    report.relative = check(rel, prop, budget);
    if (report.global.outcome == Outcome::inconclusive ||
        report.relative.outcome == Outcome::inconclusive)
        report.agreement = Agreement::untested;
    else
        report.agreement = report.global.outcome == report.relative.outcome
                               ? Agreement::identical
                               : Agreement::different;
    return report;
}

} // namespace swarmcheck
