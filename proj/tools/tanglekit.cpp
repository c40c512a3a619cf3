// Command line front end: bracket evaluation, invariants, the gluing
// formulas, operation words, and the verification / fuzz suites. Inputs are
// diagram files, built-in fixture names, or matrix JSON via --matrix.

#include <CLI11.hpp>
#include <json.hpp>

#include <tanglekit/algebra.hpp>
#include <tanglekit/bracket.hpp>
#include <tanglekit/diagram.hpp>
#include <tanglekit/errors.hpp>
#include <tanglekit/gluing.hpp>
#include <tanglekit/invariant.hpp>
#include <tanglekit/ops.hpp>
#include <tanglekit/proj_matrix.hpp>
#include <tanglekit/zeta8.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tanglekit;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Fixtures addressable by name so the common inputs need no files:
// fundamental1, fundamental2, identity, crossing, and twist<p> with a signed
// integer suffix (twist2, twist-4, ...).
std::optional<TangleDiagram> builder_by_name(const std::string& name) {
    if (name == "fundamental1") return fundamental(1);
    if (name == "fundamental2") return fundamental(2);
    if (name == "identity") return identity_spherical();
    if (name == "crossing") return twist(1);
    if (name.rfind("twist", 0) == 0 && name.size() > 5) {
        const char* first = name.data() + 5;
        const char* last = name.data() + name.size();
        i64 p = 0;
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec == std::errc() && ptr == last) return twist(p);
    }
    return std::nullopt;
}

// Existing paths win over builder names, so a file called "identity" still
// parses as a file.
TangleDiagram load_tangle(const std::string& name) {
    if (std::filesystem::exists(name)) return parse_tangle(read_file(name));
    if (auto t = builder_by_name(name)) return *t;
    throw SyntaxError("no file or builder named '" + name + "'");
}

LinkDiagram close_tangle(const TangleDiagram& t, const std::string& closure) {
    if (closure == "none")
        throw SyntaxError("tangle input needs --closure num or --closure den");
    if (!t.holes.empty())
        throw SyntaxError("bracket closure applies to tangles without holes");
    ClosureKind kind = closure == "num" ? ClosureKind::Numerator : ClosureKind::Denominator;
    return close_and_fill(t, kind, fill_pattern(0, 0));
}

void print_matrix(const ProjMatrix& m, bool json) {
    std::cout << (json ? to_json(m) : to_text(m)) << "\n";
}

int cmd_bracket(const std::string& input, const std::string& closure, bool json) {
    LinkDiagram link;
    if (std::filesystem::exists(input)) {
        ParsedDiagram parsed = parse_any(read_file(input));
        if (parsed.is_link) {
            if (closure != "none")
                throw SyntaxError("'" + input + "' is a closed link; drop --closure");
            link = parsed.link;
        } else {
            link = close_tangle(parsed.tangle, closure);
        }
    } else if (auto t = builder_by_name(input)) {
        link = close_tangle(*t, closure);
    } else {
        throw SyntaxError("no file or builder named '" + input + "'");
    }
    ZPhi value = normalize_zphi(bracket_recursive(link));
    i64 magnitude = value.p < 0 ? -value.p : value.p;
    if (json) {
        nlohmann::json out{{"p", value.p}, {"k", value.k}, {"magnitude", magnitude}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(value) << "\n";
        std::cout << "magnitude " << magnitude << "\n";
    }
    return 0;
}

int cmd_invariant(const std::string& input, int max_holes, bool json) {
    print_matrix(compute_invariant(load_tangle(input), max_holes), json);
    return 0;
}

int cmd_compose(const std::string& matrix_file, const std::vector<std::string>& items, bool json) {
    std::optional<ProjMatrix> outer;
    size_t first_part = 0;
    if (!matrix_file.empty()) {
        outer = proj_matrix_from_json(read_file(matrix_file));
    } else {
        if (items.empty()) throw SyntaxError("compose needs an outer tangle or --matrix");
        outer = compute_invariant(load_tangle(items[0]));
        first_part = 1;
    }
    std::vector<ProjMatrix> parts;
    for (size_t i = first_part; i < items.size(); ++i)
        parts.push_back(compute_invariant(load_tangle(items[i])));
    print_matrix(compose_invariants(*outer, parts), json);
    return 0;
}

int cmd_sum(bool horizontal, bool vertical, const std::string& a_name, const std::string& b_name,
            bool json) {
    if (horizontal == vertical) throw SyntaxError("sum needs exactly one of --h or --v");
    ProjMatrix a = compute_invariant(load_tangle(a_name));
    ProjMatrix b = compute_invariant(load_tangle(b_name));
    print_matrix(horizontal ? connect_h_inv(a, b) : connect_v_inv(a, b), json);
    return 0;
}

int cmd_ops(const std::string& word, const std::string& input, const std::string& matrix_file,
            bool json) {
    if (matrix_file.empty() == input.empty())
        throw SyntaxError("ops needs a diagram input or --matrix, not both");
    ProjMatrix m = matrix_file.empty() ? compute_invariant(load_tangle(input))
                                       : proj_matrix_from_json(read_file(matrix_file));
    print_matrix(word_apply(word, m), json);
    return 0;
}

int cmd_verify(bool json) {
    CoxeterReport r = verify_coxeter();
    if (json) {
        nlohmann::json out{{"ok", r.ok},
                           {"action_group_order", r.action_group_order},
                           {"presentation_order", r.presentation_order},
                           {"relators_hold", r.relators_hold},
                           {"xy_has_order_four", r.xy_has_order_four},
                           {"z_central", r.z_central},
                           {"coset_words_distinct", r.coset_words_distinct},
                           {"notes", r.notes}};
        std::cout << out.dump() << "\n";
    } else {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "action group order " << r.action_group_order << "\n";
        std::cout << "presentation order " << r.presentation_order << "\n";
        std::cout << "relators hold " << yn(r.relators_hold) << "\n";
        std::cout << "xy has order four " << yn(r.xy_has_order_four) << "\n";
        std::cout << "z central " << yn(r.z_central) << "\n";
        std::cout << "coset words distinct " << yn(r.coset_words_distinct) << "\n";
        for (const std::string& note : r.notes) std::cout << "note: " << note << "\n";
        std::cout << (r.ok ? "PASS" : "FAIL") << "\n";
    }
    return r.ok ? 0 : 1;
}

int cmd_fuzz_det(int trials, int max_crossings, u64 seed, bool json) {
    FuzzDetReport rep = fuzz_det_square(trials, max_crossings, seed);
    if (json) {
        nlohmann::json misses = nlohmann::json::array();
        for (const FuzzTrial& t : rep.non_squares)
            misses.push_back({{"det", t.det}, {"diagram", t.diagram}});
        nlohmann::json out{{"trials", rep.trials},
                           {"max_crossings", rep.max_crossings},
                           {"seed", rep.seed},
                           {"squares", rep.squares},
                           {"non_squares", misses}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "trials " << rep.trials << "\n";
        std::cout << "max-crossings " << rep.max_crossings << "\n";
        std::cout << "seed " << rep.seed << "\n";
        std::cout << "squares " << rep.squares << "\n";
        std::cout << "non-squares " << rep.non_squares.size() << "\n";
        for (const FuzzTrial& t : rep.non_squares) {
            std::cout << "non-square det " << t.det << " from:\n" << t.diagram;
            if (t.diagram.empty() || t.diagram.back() != '\n') std::cout << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bracket and invariant toolkit for punctured-ball tangles"};
    app.require_subcommand(1);

    std::string input, closure = "none", matrix_file, word, a_name, b_name;
    std::vector<std::string> items;
    bool json = false, horizontal = false, vertical = false;
    int max_holes = kDefaultMaxHoles;
    int trials = 500, max_crossings = 8;
    u64 seed = 1;

    CLI::App* bracket_cmd =
        app.add_subcommand("bracket", "evaluate the bracket of a link or closed tangle");
    bracket_cmd->add_option("input", input, "diagram file or builder name")->required();
    bracket_cmd->add_option("--closure", closure, "closure for tangle input")
        ->check(CLI::IsMember({"num", "den", "none"}));
    bracket_cmd->add_flag("--json", json, "print JSON");

    CLI::App* invariant_cmd =
        app.add_subcommand("invariant", "compute the 2 x 2^n invariant matrix of a tangle");
    invariant_cmd->add_option("input", input, "diagram file or builder name")->required();
    invariant_cmd->add_option("--max-holes", max_holes, "largest hole count accepted");
    invariant_cmd->add_flag("--json", json, "print JSON");

    CLI::App* compose_cmd =
        app.add_subcommand("compose", "fill the holes of an outer tangle with parts");
    compose_cmd->add_option("items", items, "outer tangle (unless --matrix) then one part per hole");
    compose_cmd->add_option("--matrix", matrix_file, "outer invariant as matrix JSON");
    compose_cmd->add_flag("--json", json, "print JSON");

    CLI::App* sum_cmd = app.add_subcommand("sum", "connect sum of two tangle invariants");
    sum_cmd->set_help_flag("--help", "print help"); // frees -h for the --h direction flag
    sum_cmd->add_flag("--h", horizontal, "glue side by side");
    sum_cmd->add_flag("--v", vertical, "glue top to bottom");
    sum_cmd->add_option("a", a_name, "first diagram file or builder")->required();
    sum_cmd->add_option("b", b_name, "second diagram file or builder")->required();
    sum_cmd->add_flag("--json", json, "print JSON");

    CLI::App* ops_cmd =
        app.add_subcommand("ops", "apply a word in x (dash), y (r1), z (star) to a matrix");
    ops_cmd->add_option("word", word, "letters x, y, z applied left to right")->required();
    ops_cmd->add_option("input", input, "diagram file or builder name");
    ops_cmd->add_option("--matrix", matrix_file, "matrix JSON file");
    ops_cmd->add_flag("--json", json, "print JSON");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check the elementary-operation group structure");
    verify_cmd->add_flag("--json", json, "print JSON");

    CLI::App* fuzz_cmd =
        app.add_subcommand("fuzz-det", "survey determinant squareness on random diagrams");
    fuzz_cmd->add_option("--trials", trials, "number of random diagrams");
    fuzz_cmd->add_option("--max-crossings", max_crossings, "crossing budget per diagram");
    fuzz_cmd->add_option("--seed", seed, "random seed");
    fuzz_cmd->add_flag("--json", json, "print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*bracket_cmd) return cmd_bracket(input, closure, json);
        if (*invariant_cmd) return cmd_invariant(input, max_holes, json);
        if (*compose_cmd) return cmd_compose(matrix_file, items, json);
        if (*sum_cmd) return cmd_sum(horizontal, vertical, a_name, b_name, json);
        if (*ops_cmd) return cmd_ops(word, input, matrix_file, json);
        if (*verify_cmd) return cmd_verify(json);
        if (*fuzz_cmd) return cmd_fuzz_det(trials, max_crossings, seed, json);
    } catch (const TangleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
