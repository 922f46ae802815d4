#include "pairsolve/route_ledger.hpp"

#include <algorithm>

namespace pairsolve {

OriginId RouteLedger::add_origin(Vertex source, Vertex target, OriginKind kind,
                                 EdgeId initial_edge) {
    if (source == target) throw PreconditionError("demand endpoints must be distinct");
    if (slot_of_.count(initial_edge))
        throw PreconditionError("edge id " + std::to_string(initial_edge) +
                                " already belongs to a walk");
    OriginId o = origin_count();
    LedgerEntry e;
    e.source = source;
    e.target = target;
    e.kind = kind;
    e.walk.push_back(WalkStep{StepKind::Live, source, target, initial_edge});
    entries_.push_back(std::move(e));
    slot_of_[initial_edge] = SlotRef{o, 0};
    return o;
}

void RouteLedger::replace_with_lift(EdgeId old_edge, EdgeId first, EdgeId second, Vertex via) {
    auto it = slot_of_.find(old_edge);
    if (it == slot_of_.end())
        throw PreconditionError("edge id " + std::to_string(old_edge) + " not in any walk");
    SlotRef ref = it->second;
    LedgerEntry& en = entries_[ref.origin];
    WalkStep old = en.walk[ref.index];

    WalkStep a{StepKind::Live, old.from, via, first};
    WalkStep b{StepKind::Live, via, old.to, second};
    en.walk[ref.index] = a;
    en.walk.insert(en.walk.begin() + ref.index + 1, b);

    slot_of_.erase(it);
    slot_of_[first] = SlotRef{ref.origin, ref.index};
    slot_of_[second] = SlotRef{ref.origin, ref.index + 1};
    // slots after the insertion point shifted right by one
    for (int i = ref.index + 2; i < static_cast<int>(en.walk.size()); ++i)
        if (en.walk[i].kind == StepKind::Live) slot_of_[en.walk[i].edge].index = i;
}

void RouteLedger::finalize_edge(EdgeId e) {
    auto it = slot_of_.find(e);
    if (it == slot_of_.end())
        throw PreconditionError("edge id " + std::to_string(e) + " not in any walk");
    WalkStep& step = entries_[it->second.origin].walk[it->second.index];
    step.kind = StepKind::Final;
    step.edge = -1;
    ++finalized_counts_[VertexPair{step.from, step.to}];
    slot_of_.erase(it);
}

void RouteLedger::finalize_slot_with_path(EdgeId e, const std::vector<Vertex>& path) {
    auto it = slot_of_.find(e);
    if (it == slot_of_.end())
        throw PreconditionError("edge id " + std::to_string(e) + " not in any walk");
    SlotRef ref = it->second;
    LedgerEntry& en = entries_[ref.origin];
    WalkStep old = en.walk[ref.index];

    std::vector<Vertex> p = path;
    if (p.size() < 2) throw PreconditionError("replacement path needs at least two vertices");
    if (p.front() == old.to && p.back() == old.from) std::reverse(p.begin(), p.end());
    if (p.front() != old.from || p.back() != old.to)
        throw PreconditionError("replacement path does not connect the slot endpoints");

    std::vector<WalkStep> steps;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        steps.push_back(WalkStep{StepKind::Final, p[i], p[i + 1], -1});
        ++finalized_counts_[VertexPair{p[i], p[i + 1]}];
    }
    en.walk.erase(en.walk.begin() + ref.index);
    en.walk.insert(en.walk.begin() + ref.index, steps.begin(), steps.end());
    slot_of_.erase(it);
    for (int i = ref.index + static_cast<int>(steps.size());
         i < static_cast<int>(en.walk.size()); ++i)
        if (en.walk[i].kind == StepKind::Live) slot_of_[en.walk[i].edge].index = i;
}

bool RouteLedger::fully_finalized() const { return slot_of_.empty(); }

std::vector<std::string> RouteLedger::audit_walks(const DemandGraph& g) const {
    std::vector<std::string> problems;
    std::map<EdgeId, int> seen;
    for (OriginId o = 0; o < origin_count(); ++o) {
        const LedgerEntry& en = entries_[o];
        Vertex at = en.source;
        if (en.walk.empty()) {
            problems.push_back("origin " + std::to_string(o) + ": empty walk");
            continue;
        }
        for (const WalkStep& s : en.walk) {
            if (s.from != at)
                problems.push_back("origin " + std::to_string(o) + ": walk breaks at vertex " +
                                   std::to_string(at));
            at = s.to;
            if (s.kind == StepKind::Live) {
                ++seen[s.edge];
                if (!g.is_live(s.edge))
                    problems.push_back("origin " + std::to_string(o) + ": slot holds dead edge " +
                                       std::to_string(s.edge));
                else if (VertexPair{s.from, s.to} != g.edge(s.edge).pair())
                    problems.push_back("origin " + std::to_string(o) + ": slot endpoints disagree " +
                                       "with edge " + std::to_string(s.edge));
            }
        }
        if (at != en.target)
            problems.push_back("origin " + std::to_string(o) + ": walk ends at " +
                               std::to_string(at) + " not target " + std::to_string(en.target));
    }
    for (auto [e, cnt] : seen)
        if (cnt != 1)
            problems.push_back("edge " + std::to_string(e) + " appears in " +
                               std::to_string(cnt) + " slots");
    for (EdgeId e : g.live_edge_ids())
        if (!seen.count(e))
            problems.push_back("live edge " + std::to_string(e) + " missing from all walks");
    return problems;
}

std::vector<std::string> RouteLedger::audit_finalized_distinct() const {
    std::vector<std::string> problems;
    std::map<VertexPair, int> counts;
    for (const LedgerEntry& en : entries_)
        for (const WalkStep& s : en.walk)
            if (s.kind == StepKind::Final) ++counts[VertexPair{s.from, s.to}];
    for (const auto& [p, cnt] : counts)
        if (cnt > 1)
            problems.push_back("K_n edge {" + std::to_string(p.lo) + "," + std::to_string(p.hi) +
                               "} finalized " + std::to_string(cnt) + " times");
    if (counts != finalized_counts_) problems.push_back("finalized pair cache out of sync");
    return problems;
}

std::vector<Vertex> shortcut_walk(std::vector<Vertex> walk) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Vertex, int> first_pos;
        for (int j = 0; j < static_cast<int>(walk.size()); ++j) {
            auto it = first_pos.find(walk[j]);
            if (it != first_pos.end()) {
                walk.erase(walk.begin() + it->second + 1, walk.begin() + j + 1);
                changed = true;
                break;
            }
            first_pos.emplace(walk[j], j);
        }
    }
    return walk;
}

Resolution extract_resolution(const RouteLedger& ledger) {
    Resolution res;
    for (OriginId o = 0; o < ledger.origin_count(); ++o) {
        const LedgerEntry& en = ledger.entry(o);
        Vertex at = en.source;
        std::vector<Vertex> walk{en.source};
        for (const WalkStep& s : en.walk) {
            if (s.kind == StepKind::Live)
                throw PreconditionError("origin " + std::to_string(o) +
                                        " still holds live edge " + std::to_string(s.edge));
            if (s.from != at)
                throw InternalError("origin " + std::to_string(o) + ": disconnected walk");
            at = s.to;
            walk.push_back(at);
        }
        if (at != en.target)
            throw InternalError("origin " + std::to_string(o) + ": walk misses its target");
        if (en.kind == OriginKind::Dummy) continue;
        res.paths.push_back(Resolution::PathEntry{o, shortcut_walk(std::move(walk))});
    }
    return res;
}

} // namespace pairsolve
