#include "tanglekit/bracket.hpp"

#include <string>
#include <unordered_map>

namespace tanglekit {

namespace {

void check_cap(const LinkDiagram& link) {
    if (link.crossings.size() > static_cast<size_t>(kMaxBracketCrossings))
        throw TooManyCrossings("link has " + std::to_string(link.crossings.size()) +
                               " crossings, bracket cap is " +
                               std::to_string(kMaxBracketCrossings));
}

void fuse_smoothing(detail::ArcFuser& uf, const Crossing& x, Smoothing which) {
    if (which == Smoothing::A) {
        uf.fuse(x.ends[0].arc, x.ends[1].arc);
        uf.fuse(x.ends[2].arc, x.ends[3].arc);
    } else {
        uf.fuse(x.ends[0].arc, x.ends[3].arc);
        uf.fuse(x.ends[1].arc, x.ends[2].arc);
    }
}

Zeta8 bracket_memo(const LinkDiagram& link, std::unordered_map<std::string, Zeta8>& memo) {
    if (link.crossings.empty())
        return link.free_loops == 1 ? Zeta8::one() : Zeta8::zero();
    std::string key = serialize_link(link);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Zeta8 a_side = bracket_memo(smooth(link, 0, Smoothing::A), memo);
    Zeta8 b_side = bracket_memo(smooth(link, 0, Smoothing::B), memo);
    Zeta8 result = Zeta8::unit_power(1) * a_side + Zeta8::unit_power(-1) * b_side;
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace

ResolvedState resolve(const LinkDiagram& link, State state) {
    detail::ArcFuser uf(link.n_arcs);
    ResolvedState r;
    for (size_t c = 0; c < link.crossings.size(); ++c) {
        const bool b_side = (state >> c) & 1u;
        fuse_smoothing(uf, link.crossings[c], b_side ? Smoothing::B : Smoothing::A);
        r.exponent += b_side ? -1 : 1;
    }
    // After every end is consumed each closed circle has bumped loops once.
    r.circles = checked_add(uf.loops, link.free_loops);
    return r;
}

LinkDiagram smooth(const LinkDiagram& link, int crossing, Smoothing which) {
    if (crossing < 0 || crossing >= static_cast<int>(link.crossings.size()))
        throw IndexError("smooth: crossing " + std::to_string(crossing) + " out of range");
    detail::ArcFuser uf(link.n_arcs);
    fuse_smoothing(uf, link.crossings[static_cast<size_t>(crossing)], which);
    std::vector<std::array<int, 4>> rest;
    for (size_t c = 0; c < link.crossings.size(); ++c) {
        if (c == static_cast<size_t>(crossing))
            continue;
        const auto& e = link.crossings[c].ends;
        rest.push_back({e[0].arc, e[1].arc, e[2].arc, e[3].arc});
    }
    return detail::assemble_link(rest, uf, link.free_loops);
}

Zeta8 bracket_statesum(const LinkDiagram& link) {
    check_cap(link);
    Zeta8 acc = Zeta8::zero();
    const State limit = State{1} << link.crossings.size();
    for (State s = 0; s < limit; ++s) {
        ResolvedState r = resolve(link, s);
        if (r.circles == 1)
            accumulate_power(acc, 1, r.exponent);
    }
    return acc;
}

Zeta8 bracket_recursive(const LinkDiagram& link) {
    check_cap(link);
    std::unordered_map<std::string, Zeta8> memo;
    return bracket_memo(link, memo);
}

} // namespace tanglekit
