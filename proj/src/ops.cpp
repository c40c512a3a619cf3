#include "tanglekit/ops.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "tanglekit/invariant.hpp"
#include "tanglekit/random_tangle.hpp"

namespace tanglekit {

namespace {

SignedPermAction canonical(SignedPermAction a) {
    if (a.sign[0] < 0)
        for (int& s : a.sign) s = -s;
    return a;
}

} // namespace

SignedPermAction SignedPermAction::identity() { return SignedPermAction{}; }

SignedPermAction SignedPermAction::of(ElemOp op) {
    SignedPermAction a;
    switch (op) {
    case ElemOp::Star: // [[a,c],[b,d]] -> [[a,-c],[-b,d]]
        a.perm = {0, 1, 2, 3};
        a.sign = {1, -1, -1, 1};
        break;
    case ElemOp::Dash: // -> [[d,c],[b,a]]
        a.perm = {3, 1, 2, 0};
        a.sign = {1, 1, 1, 1};
        break;
    case ElemOp::R1: // -> [[-c,a],[-d,b]]
        a.perm = {2, 3, 0, 1};
        a.sign = {-1, -1, 1, 1};
        break;
    case ElemOp::R2: // -> [[-b,-d],[a,c]]
        a.perm = {1, 0, 3, 2};
        a.sign = {-1, 1, -1, 1};
        break;
    case ElemOp::R: // -> [[d,-b],[-c,a]]
        a.perm = {3, 2, 1, 0};
        a.sign = {1, -1, -1, 1};
        break;
    }
    return canonical(a);
}

SignedPermAction SignedPermAction::then(const SignedPermAction& next) const {
    // next reads slot next.perm[s] of our output, which we drew from slot
    // perm[next.perm[s]] of the original input.
    SignedPermAction out;
    for (int s = 0; s < 4; ++s) {
        int mid = next.perm[static_cast<size_t>(s)];
        out.perm[static_cast<size_t>(s)] = perm[static_cast<size_t>(mid)];
        out.sign[static_cast<size_t>(s)] =
            next.sign[static_cast<size_t>(s)] * sign[static_cast<size_t>(mid)];
    }
    return canonical(out);
}

ProjMatrix apply_action(const SignedPermAction& act, const ProjMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw ShapeError("elementary operations act on 2x2 invariants, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    // Column-major slots: alpha, beta, gamma, delta.
    std::array<i64, 4> in{m.at(0, 0), m.at(1, 0), m.at(0, 1), m.at(1, 1)};
    std::array<i64, 4> out{};
    for (int s = 0; s < 4; ++s)
        out[static_cast<size_t>(s)] =
            checked_mul(static_cast<i64>(act.sign[static_cast<size_t>(s)]),
                        in[static_cast<size_t>(act.perm[static_cast<size_t>(s)])]);
    IntMatrix r = IntMatrix::zeros(2, 2);
    r.at(0, 0) = out[0];
    r.at(1, 0) = out[1];
    r.at(0, 1) = out[2];
    r.at(1, 1) = out[3];
    return ProjMatrix(std::move(r));
}

ProjMatrix apply_op(ElemOp op, const ProjMatrix& m) { return apply_action(SignedPermAction::of(op), m); }

SignedPermAction word_action(const std::string& word) {
    SignedPermAction acc = SignedPermAction::identity();
    for (char c : word) {
        switch (c) {
        case 'x': acc = acc.then(SignedPermAction::of(ElemOp::Dash)); break;
        case 'y': acc = acc.then(SignedPermAction::of(ElemOp::R1)); break;
        case 'z': acc = acc.then(SignedPermAction::of(ElemOp::Star)); break;
        default:
            throw SyntaxError(std::string("operation words use letters x, y, z; got '") + c + "'");
        }
    }
    return acc;
}

ProjMatrix word_apply(const std::string& word, const ProjMatrix& m) {
    return apply_action(word_action(word), m);
}

std::vector<SignedPermAction> enumerate_group() {
    const std::array<SignedPermAction, 3> gens{SignedPermAction::of(ElemOp::Dash),
                                              SignedPermAction::of(ElemOp::R1),
                                              SignedPermAction::of(ElemOp::Star)};
    std::vector<SignedPermAction> found{SignedPermAction::identity()};
    std::deque<SignedPermAction> queue{SignedPermAction::identity()};
    while (!queue.empty()) {
        SignedPermAction cur = queue.front();
        queue.pop_front();
        for (const SignedPermAction& g : gens) {
            SignedPermAction next = cur.then(g);
            if (std::find(found.begin(), found.end(), next) == found.end()) {
                found.push_back(next);
                queue.push_back(next);
            }
        }
    }
    return found;
}

namespace {

// Normal forms for the presented group, independent of the action tables:
// push every z right, cancel squares, and prefer the xyxy spelling of the
// braid word. Each rule is a consequence of the nine relators, and rewriting
// strictly decreases (length, spelling) lexicographically, so this
// terminates; the closure search below counts the reachable normal forms.
std::string rewrite_normal_form(std::string w) {
    static const std::pair<const char*, const char*> rules[] = {
        {"xx", ""}, {"yy", ""}, {"zz", ""}, {"zx", "xz"}, {"zy", "yz"}, {"yxyx", "xyxy"}};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [lhs, rhs] : rules) {
            size_t pos = w.find(lhs);
            if (pos != std::string::npos) {
                w.replace(pos, std::string(lhs).size(), rhs);
                changed = true;
                break;
            }
        }
    }
    return w;
}

int presentation_group_order() {
    std::set<std::string> seen{""};
    std::deque<std::string> queue{""};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (char g : {'x', 'y', 'z'}) {
            std::string next = rewrite_normal_form(cur + g);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return static_cast<int>(seen.size());
}

} // namespace

CoxeterReport verify_coxeter() {
    CoxeterReport report;
    const SignedPermAction id = SignedPermAction::identity();

    const char* relators[] = {"xx", "yy", "zz", "xyxyxyxy", "yxyxyxyx", "xzxz", "zxzx", "yzyz", "zyzy"};
    report.relators_hold = true;
    for (const char* rel : relators) {
        bool holds = word_action(rel) == id;
        report.notes.push_back(std::string("relator ") + rel + (holds ? " acts trivially" : " FAILS"));
        if (!holds) report.relators_hold = false;
    }

    report.action_group_order = static_cast<int>(enumerate_group().size());
    report.presentation_order = presentation_group_order();
    report.notes.push_back("action group order " + std::to_string(report.action_group_order));
    report.notes.push_back("presented group order " + std::to_string(report.presentation_order) +
                           " by normal-form enumeration");

    SignedPermAction xy = word_action("xy");
    SignedPermAction acc = xy;
    int order = 1;
    while (acc != id && order <= 16) {
        acc = acc.then(xy);
        ++order;
    }
    report.xy_has_order_four = (order == 4);
    report.notes.push_back("xy has order " + std::to_string(order));

    report.z_central = true;
    SignedPermAction z = word_action("z");
    for (const SignedPermAction& g : enumerate_group())
        if (!(z.then(g) == g.then(z))) report.z_central = false;
    report.notes.push_back(report.z_central ? "z commutes with the whole group" : "z is NOT central");

    const char* coset_words[] = {"", "x", "xy", "xyx", "xyxy", "xyxyx", "xyxyxy", "xyxyxyx"};
    report.coset_words_distinct = true;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (word_action(coset_words[i]) == word_action(coset_words[j]))
                report.coset_words_distinct = false;
    report.notes.push_back(report.coset_words_distinct ? "eight braid-word cosets pairwise distinct"
                                                       : "braid-word cosets COLLIDE");

    report.ok = report.relators_hold && report.xy_has_order_four && report.z_central &&
                report.coset_words_distinct && report.action_group_order == 16 &&
                report.presentation_order == 16 &&
                report.action_group_order == report.presentation_order;
    return report;
}

TangleDiagram mirror_diagram(const TangleDiagram& t) {
    TangleDiagram out = t;
    for (Crossing& x : out.crossings) {
        // Rotating the marked strand a quarter turn swaps over and under.
        ArcEnd first = x.ends[0];
        x.ends[0] = x.ends[1];
        x.ends[1] = x.ends[2];
        x.ends[2] = x.ends[3];
        x.ends[3] = first;
    }
    return out;
}

TangleDiagram rotate_boundary_diagram(const TangleDiagram& t, BoundarySide side, int hole_index) {
    TangleDiagram out = t;
    BoundaryCycle* cycle = nullptr;
    if (side == BoundarySide::Outer) {
        cycle = &out.outer;
    } else {
        if (hole_index < 0 || hole_index >= t.n_holes)
            throw IndexError("rotate: hole " + std::to_string(hole_index) + " of a diagram with " +
                             std::to_string(t.n_holes) + " holes");
        cycle = &out.holes[static_cast<size_t>(hole_index)];
    }
    ArcEnd first = cycle->points[0];
    cycle->points[0] = cycle->points[1];
    cycle->points[1] = cycle->points[2];
    cycle->points[2] = cycle->points[3];
    cycle->points[3] = first;
    return out;
}

FuzzDetReport fuzz_det_square(int trials, int max_crossings, u64 seed) {
    if (trials < 0) throw IndexError("trial count must be nonnegative");
    FuzzDetReport report;
    report.trials = trials;
    report.max_crossings = max_crossings;
    report.seed = seed;
    Rng rng(seed);
    for (int i = 0; i < trials; ++i) {
        TangleDiagram t = random_spherical_tangle(rng, max_crossings);
        i64 det = determinant(compute_invariant(t));
        bool square = false;
        if (det >= 0) {
            i64 root = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(det))));
            for (i64 r = std::max<i64>(0, root - 2); r <= root + 2 && !square; ++r)
                if (r * r == det) square = true;
        }
        if (square)
            ++report.squares;
        else
            report.non_squares.push_back(FuzzTrial{serialize_tangle(t), det, false});
    }
    return report;
}

} // namespace tanglekit
