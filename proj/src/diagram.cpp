#include "tanglekit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace tanglekit {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        Line line;
        line.number = number;
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

bool valid_label(const std::string& s) {
    if (s.empty())
        return false;
    for (char ch : s)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
            return false;
    return true;
}

i64 parse_count(const Line& line, const char* what) {
    const std::string& tok = line.tokens.at(1);
    i64 value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        throw SyntaxError("line " + std::to_string(line.number) + ": '" + tok +
                          "' is not a nonnegative integer " + what + " count");
    return value;
}

struct RawDiagram {
    bool has_outer = false;
    std::array<std::string, 4> outer;
    std::vector<std::array<std::string, 4>> holes;
    std::vector<std::array<std::string, 4>> crossings;
    i64 n_holes = 0;
    i64 loops = 0;
};

std::array<std::string, 4> read_labeled_line(const Line& line, bool arity_is_syntax) {
    const std::string what = line.tokens[0] == "X" ? "crossing" : line.tokens[0] + " boundary";
    if (line.tokens.size() != 5) {
        std::string msg = "line " + std::to_string(line.number) + ": " + what + " has " +
                          std::to_string(line.tokens.size() - 1) + " points, expected 4";
        if (arity_is_syntax)
            throw SyntaxError(msg);
        throw ArityError(msg);
    }
    std::array<std::string, 4> labels;
    for (int i = 0; i < 4; ++i) {
        labels[i] = line.tokens[i + 1];
        if (!valid_label(labels[i]))
            throw SyntaxError("line " + std::to_string(line.number) + ": bad arc label '" +
                              labels[i] + "' (want [A-Za-z0-9_]+)");
    }
    return labels;
}

RawDiagram parse_raw(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    auto need = [&](size_t i, const char* what) -> const Line& {
        if (i >= lines.size())
            throw SyntaxError("unexpected end of input: expected " + std::string(what));
        return lines[i];
    };

    RawDiagram raw;
    const Line& head = need(0, "'tangle' header");
    if (head.tokens.size() != 1 || head.tokens[0] != "tangle")
        throw SyntaxError("line " + std::to_string(head.number) + ": expected 'tangle' header");

    const Line& holes_line = need(1, "'holes <n>'");
    if (holes_line.tokens.size() != 2 || holes_line.tokens[0] != "holes")
        throw SyntaxError("line " + std::to_string(holes_line.number) + ": expected 'holes <n>'");
    raw.n_holes = parse_count(holes_line, "hole");

    const Line& loops_line = need(2, "'loops <m>'");
    if (loops_line.tokens.size() != 2 || loops_line.tokens[0] != "loops")
        throw SyntaxError("line " + std::to_string(loops_line.number) + ": expected 'loops <m>'");
    raw.loops = parse_count(loops_line, "loop");

    size_t i = 3;
    if (i < lines.size() && lines[i].tokens[0] == "outer") {
        raw.has_outer = true;
        raw.outer = read_labeled_line(lines[i], /*arity_is_syntax=*/false);
        ++i;
    }
    while (i < lines.size() && lines[i].tokens[0] == "hole") {
        raw.holes.push_back(read_labeled_line(lines[i], /*arity_is_syntax=*/false));
        ++i;
    }
    while (i < lines.size() && lines[i].tokens[0] == "X") {
        raw.crossings.push_back(read_labeled_line(lines[i], /*arity_is_syntax=*/true));
        ++i;
    }
    if (i < lines.size())
        throw SyntaxError("line " + std::to_string(lines[i].number) + ": unexpected '" +
                          lines[i].tokens[0] + "' (sections are outer, hole*, X*)");

    if (static_cast<i64>(raw.holes.size()) != raw.n_holes)
        throw SyntaxError("found " + std::to_string(raw.holes.size()) + " hole lines, header says " +
                          std::to_string(raw.n_holes));
    if (!raw.has_outer && raw.n_holes > 0)
        throw SyntaxError("hole boundaries require an outer boundary");
    return raw;
}

// Assign dense arc ids by first appearance and slots by occurrence order.
struct LabelArena {
    std::unordered_map<std::string, int> ids;
    std::vector<int> seen;
    std::vector<const std::string*> names;

    ArcEnd end_for(const std::string& label) {
        auto [it, fresh] = ids.try_emplace(label, static_cast<int>(ids.size()));
        if (fresh) {
            seen.push_back(0);
            names.push_back(&it->first);
        }
        int arc = it->second;
        int slot = seen[arc]++;
        if (slot > 1)
            throw DegreeError("arc label '" + label +
                              "' appears more than twice (each arc has two ends)");
        return ArcEnd{arc, slot};
    }

    void check_complete() const {
        std::string stragglers;
        for (size_t a = 0; a < seen.size(); ++a)
            if (seen[a] != 2)
                stragglers += (stragglers.empty() ? "'" : ", '") + *names[a] + "'";
        if (!stragglers.empty())
            throw DegreeError("arc label(s) " + stragglers +
                              " appear only once (each arc has two ends)");
    }
};

void fill_cycle(BoundaryCycle& cycle, const std::array<std::string, 4>& labels, LabelArena& arena) {
    cycle.points.clear();
    for (const std::string& label : labels)
        cycle.points.push_back(arena.end_for(label));
}

void check_cycle(const BoundaryCycle& cycle, const std::string& name, int n_arcs,
                 std::vector<Violation>& out) {
    if (cycle.points.size() != 4)
        out.push_back({ViolationKind::Arity, name + " has " + std::to_string(cycle.points.size()) +
                                                 " points, expected 4"});
    for (const ArcEnd& e : cycle.points)
        if (e.arc < 0 || e.arc >= n_arcs)
            out.push_back({ViolationKind::Structure,
                           name + " references arc " + std::to_string(e.arc) + " outside [0, " +
                               std::to_string(n_arcs) + ")"});
}

struct DegreeCounter {
    std::vector<int> degree;
    std::vector<int> slot_mask;

    explicit DegreeCounter(int n_arcs) : degree(n_arcs, 0), slot_mask(n_arcs, 0) {}

    void count(const ArcEnd& e) {
        if (e.arc < 0 || e.arc >= static_cast<int>(degree.size()))
            return; // reported separately as a structure violation
        ++degree[e.arc];
        if (e.slot == 0 || e.slot == 1)
            slot_mask[e.arc] |= 1 << e.slot;
        else
            slot_mask[e.arc] |= 4;
    }

    void report(std::vector<Violation>& out) const {
        for (size_t a = 0; a < degree.size(); ++a) {
            if (degree[a] != 2)
                out.push_back({ViolationKind::Degree, "arc " + std::to_string(a) + " has degree " +
                                                          std::to_string(degree[a]) +
                                                          ", expected 2"});
            else if (slot_mask[a] != 3)
                out.push_back({ViolationKind::Structure,
                               "arc " + std::to_string(a) + " ends do not use slots {0,1}"});
        }
    }
};

int relabeled(std::vector<int>& relabel, int& next, const ArcEnd& e) {
    if (e.arc < 0 || e.arc >= static_cast<int>(relabel.size()))
        throw TangleError("serialize: arc id " + std::to_string(e.arc) + " out of range");
    if (relabel[e.arc] < 0)
        relabel[e.arc] = next++;
    return relabel[e.arc];
}

} // namespace

TangleDiagram parse_tangle(const std::string& text) {
    RawDiagram raw = parse_raw(text);
    if (!raw.has_outer)
        throw SyntaxError("tangle has no 'outer' line (a closed link, not a ball tangle)");

    TangleDiagram d;
    LabelArena arena;
    fill_cycle(d.outer, raw.outer, arena);
    d.holes.resize(raw.holes.size());
    for (size_t h = 0; h < raw.holes.size(); ++h)
        fill_cycle(d.holes[h], raw.holes[h], arena);
    for (const auto& labels : raw.crossings) {
        Crossing x;
        for (int i = 0; i < 4; ++i)
            x.ends[i] = arena.end_for(labels[i]);
        d.crossings.push_back(x);
    }
    arena.check_complete();
    d.n_holes = static_cast<int>(d.holes.size());
    d.free_loops = raw.loops;
    d.n_arcs = static_cast<int>(arena.ids.size());
    return d;
}

LinkDiagram parse_link(const std::string& text) {
    RawDiagram raw = parse_raw(text);
    if (raw.has_outer)
        throw SyntaxError("closed link must not have an 'outer' line");

    LinkDiagram d;
    LabelArena arena;
    for (const auto& labels : raw.crossings) {
        Crossing x;
        for (int i = 0; i < 4; ++i)
            x.ends[i] = arena.end_for(labels[i]);
        d.crossings.push_back(x);
    }
    arena.check_complete();
    d.free_loops = raw.loops;
    d.n_arcs = static_cast<int>(arena.ids.size());
    return d;
}

ParsedDiagram parse_any(const std::string& text) {
    ParsedDiagram out;
    out.is_link = !parse_raw(text).has_outer;
    if (out.is_link)
        out.link = parse_link(text);
    else
        out.tangle = parse_tangle(text);
    return out;
}

std::string serialize_tangle(const TangleDiagram& d) {
    std::vector<int> relabel(d.n_arcs, -1);
    int next = 0;
    std::string out = "tangle\n";
    out += "holes " + std::to_string(d.holes.size()) + "\n";
    out += "loops " + std::to_string(d.free_loops) + "\n";
    out += "outer";
    for (const ArcEnd& e : d.outer.points)
        out += " " + std::to_string(relabeled(relabel, next, e));
    out += "\n";
    for (const BoundaryCycle& hole : d.holes) {
        out += "hole";
        for (const ArcEnd& e : hole.points)
            out += " " + std::to_string(relabeled(relabel, next, e));
        out += "\n";
    }
    for (const Crossing& x : d.crossings) {
        out += "X";
        for (const ArcEnd& e : x.ends)
            out += " " + std::to_string(relabeled(relabel, next, e));
        out += "\n";
    }
    return out;
}

std::string serialize_link(const LinkDiagram& d) {
    std::vector<int> relabel(d.n_arcs, -1);
    int next = 0;
    std::string out = "tangle\n";
    out += "holes 0\n";
    out += "loops " + std::to_string(d.free_loops) + "\n";
    for (const Crossing& x : d.crossings) {
        out += "X";
        for (const ArcEnd& e : x.ends)
            out += " " + std::to_string(relabeled(relabel, next, e));
        out += "\n";
    }
    return out;
}

const char* to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::Degree: return "DegreeError";
    case ViolationKind::Arity: return "ArityError";
    case ViolationKind::Structure: return "StructureError";
    }
    return "?";
}

std::vector<Violation> validate(const TangleDiagram& d) {
    std::vector<Violation> out;
    if (d.n_holes != static_cast<int>(d.holes.size()))
        out.push_back({ViolationKind::Structure,
                       "n_holes is " + std::to_string(d.n_holes) + " but diagram stores " +
                           std::to_string(d.holes.size()) + " holes"});
    if (d.free_loops < 0)
        out.push_back({ViolationKind::Structure, "free_loops is negative"});
    if (d.n_arcs < 0)
        out.push_back({ViolationKind::Structure, "n_arcs is negative"});

    check_cycle(d.outer, "outer boundary", d.n_arcs, out);
    for (size_t h = 0; h < d.holes.size(); ++h)
        check_cycle(d.holes[h], "hole " + std::to_string(h), d.n_arcs, out);
    for (size_t c = 0; c < d.crossings.size(); ++c)
        for (const ArcEnd& e : d.crossings[c].ends)
            if (e.arc < 0 || e.arc >= d.n_arcs)
                out.push_back({ViolationKind::Structure,
                               "crossing " + std::to_string(c) + " references arc " +
                                   std::to_string(e.arc) + " outside [0, " +
                                   std::to_string(d.n_arcs) + ")"});

    DegreeCounter deg(d.n_arcs);
    for (const ArcEnd& e : d.outer.points)
        deg.count(e);
    for (const BoundaryCycle& hole : d.holes)
        for (const ArcEnd& e : hole.points)
            deg.count(e);
    for (const Crossing& x : d.crossings)
        for (const ArcEnd& e : x.ends)
            deg.count(e);
    deg.report(out);
    return out;
}

std::vector<Violation> validate(const LinkDiagram& d) {
    std::vector<Violation> out;
    if (d.free_loops < 0)
        out.push_back({ViolationKind::Structure, "free_loops is negative"});
    if (d.n_arcs < 0)
        out.push_back({ViolationKind::Structure, "n_arcs is negative"});
    for (size_t c = 0; c < d.crossings.size(); ++c)
        for (const ArcEnd& e : d.crossings[c].ends)
            if (e.arc < 0 || e.arc >= d.n_arcs)
                out.push_back({ViolationKind::Structure,
                               "crossing " + std::to_string(c) + " references arc " +
                                   std::to_string(e.arc) + " outside [0, " +
                                   std::to_string(d.n_arcs) + ")"});
    DegreeCounter deg(d.n_arcs);
    for (const Crossing& x : d.crossings)
        for (const ArcEnd& e : x.ends)
            deg.count(e);
    deg.report(out);
    return out;
}

TangleDiagram fundamental(int j) {
    if (j != 1 && j != 2)
        throw IndexError("fundamental tangle index must be 1 or 2, got " + std::to_string(j));
    TangleDiagram d;
    d.n_holes = 0;
    d.free_loops = 0;
    d.n_arcs = 2;
    if (j == 1) // NW-SW and SE-NE: two vertical strands
        d.outer.points = {ArcEnd{0, 0}, ArcEnd{0, 1}, ArcEnd{1, 0}, ArcEnd{1, 1}};
    else // NW-NE and SW-SE: two horizontal strands
        d.outer.points = {ArcEnd{0, 0}, ArcEnd{1, 0}, ArcEnd{1, 1}, ArcEnd{0, 1}};
    return d;
}

TangleDiagram twist(i64 p) {
    if (p == 0)
        return fundamental(2);
    const i64 c = p > 0 ? p : -p;
    if (c > 1'000'000)
        throw TooManyCrossings("twist with " + std::to_string(c) + " crossings is unreasonable");

    // Arena arc ids, one per strand segment of the horizontal chain.
    std::vector<std::array<int, 4>> crossings(static_cast<size_t>(c));
    int next = 0;
    const int a_nw = next++, a_sw = next++;
    crossings[0][0] = a_nw;
    crossings[0][1] = a_sw;
    for (i64 i = 0; i + 1 < c; ++i) {
        const int a_top = next++, a_bot = next++;
        crossings[static_cast<size_t>(i)][3] = a_top;
        crossings[static_cast<size_t>(i + 1)][0] = a_top;
        crossings[static_cast<size_t>(i)][2] = a_bot;
        crossings[static_cast<size_t>(i + 1)][1] = a_bot;
    }
    const int a_se = next++, a_ne = next++;
    crossings[static_cast<size_t>(c - 1)][2] = a_se;
    crossings[static_cast<size_t>(c - 1)][3] = a_ne;

    if (p < 0) // mirror: rotate every crossing tuple left one position
        for (auto& x : crossings)
            x = {x[1], x[2], x[3], x[0]};

    std::vector<std::array<int, 4>> boundaries = {{a_nw, a_sw, a_se, a_ne}};
    detail::ArcFuser uf(next);
    return detail::assemble_tangle(boundaries, crossings, uf, 0);
}

TangleDiagram identity_spherical() {
    // Four radial arcs; hole tuple is stored in the filler's frame, so hole
    // point i carries the same arc as outer point i.
    std::vector<std::array<int, 4>> boundaries = {{0, 1, 2, 3}, {0, 1, 2, 3}};
    detail::ArcFuser uf(4);
    return detail::assemble_tangle(boundaries, {}, uf, 0);
}

namespace detail {

ArcFuser::ArcFuser(int n_arcs) : parent(static_cast<size_t>(n_arcs)) {
    for (size_t i = 0; i < parent.size(); ++i)
        parent[i] = static_cast<int>(i);
}

int ArcFuser::find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
        parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
        a = parent[static_cast<size_t>(a)];
    }
    return a;
}

void ArcFuser::fuse(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb)
        ++loops; // the strand's two remaining ends met: a free circle
    else
        parent[static_cast<size_t>(rb)] = ra;
}

namespace {

struct DenseMapper {
    ArcFuser& uf;
    std::vector<int> dense;
    std::vector<int> seen;
    int next = 0;

    explicit DenseMapper(ArcFuser& f)
        : uf(f), dense(f.parent.size(), -1), seen(f.parent.size(), 0) {}

    ArcEnd map_end(int arena_id) {
        int root = uf.find(arena_id);
        if (dense[static_cast<size_t>(root)] < 0)
            dense[static_cast<size_t>(root)] = next++;
        int slot = seen[static_cast<size_t>(root)]++;
        if (slot > 1)
            throw TangleError("internal gluing error: arc consumed more than twice");
        return ArcEnd{dense[static_cast<size_t>(root)], slot};
    }
};

} // namespace

TangleDiagram assemble_tangle(const std::vector<std::array<int, 4>>& boundaries,
                              const std::vector<std::array<int, 4>>& crossings,
                              ArcFuser& uf, i64 free_loops) {
    if (boundaries.empty())
        throw TangleError("internal gluing error: tangle with no outer boundary");
    DenseMapper mapper(uf);
    TangleDiagram d;
    for (size_t b = 0; b < boundaries.size(); ++b) {
        BoundaryCycle cycle;
        for (int arena_id : boundaries[b])
            cycle.points.push_back(mapper.map_end(arena_id));
        if (b == 0)
            d.outer = std::move(cycle);
        else
            d.holes.push_back(std::move(cycle));
    }
    for (const auto& ends : crossings) {
        Crossing x;
        for (int i = 0; i < 4; ++i)
            x.ends[i] = mapper.map_end(ends[i]);
        d.crossings.push_back(x);
    }
    d.n_holes = static_cast<int>(d.holes.size());
    d.n_arcs = mapper.next;
    d.free_loops = checked_add(free_loops, uf.loops);
    if (4 * (boundaries.size() + crossings.size()) != 2 * static_cast<size_t>(mapper.next))
        throw TangleError("internal gluing error: dangling arc end after assembly");
    return d;
}

LinkDiagram assemble_link(const std::vector<std::array<int, 4>>& crossings, ArcFuser& uf,
                          i64 free_loops) {
    DenseMapper mapper(uf);
    LinkDiagram d;
    for (const auto& ends : crossings) {
        Crossing x;
        for (int i = 0; i < 4; ++i)
            x.ends[i] = mapper.map_end(ends[i]);
        d.crossings.push_back(x);
    }
    d.n_arcs = mapper.next;
    d.free_loops = checked_add(free_loops, uf.loops);
    if (4 * crossings.size() != 2 * static_cast<size_t>(mapper.next))
        throw TangleError("internal gluing error: dangling arc end after assembly");
    return d;
}

} // namespace detail

} // namespace tanglekit
