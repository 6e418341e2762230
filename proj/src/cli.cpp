#include "vknots/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "vknots/classify.hpp"
#include "vknots/distance.hpp"
#include "vknots/errors.hpp"
#include "vknots/gauss_diagram.hpp"
#include "vknots/invariants.hpp"
#include "vknots/script.hpp"

namespace vknots::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string error_json(const std::string& kind, const std::string& message) {
    ordered_json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    return j.dump();
}

// The diagram argument of most verbs: a positional code, --input FILE, or
// --stdin. Exactly one must be given; the empty string is the empty diagram.
struct CodeSource {
    std::string positional;
    std::string file;
    bool use_stdin = false;
    CLI::Option* pos = nullptr;

    void attach(CLI::App* cmd, const char* what) {
        pos = cmd->add_option("code", positional, what);
        cmd->add_flag("--stdin", use_stdin, "read the Gauss code from standard input");
        cmd->add_option("--input", file, "read the Gauss code from a file");
    }

    std::string fetch() const {
        bool have_positional = pos && pos->count() > 0;
        int sources = (have_positional ? 1 : 0) + (file.empty() ? 0 : 1) +
                      (use_stdin ? 1 : 0);
        if (sources != 1)
            throw std::invalid_argument(
                "provide exactly one diagram source: a positional code, --input, or --stdin");
        if (have_positional) return positional;
        if (use_stdin) {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            return buf.str();
        }
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot read file '" + file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    GaussDiagram diagram() const { return parse_gauss_code(fetch()); }
};

ordered_json writhe_json(const WritheVector& wv) {
    ordered_json entries = ordered_json::object();
    for (auto it = wv.entries.rbegin(); it != wv.entries.rend(); ++it)
        entries[std::to_string(it->first)] = it->second;
    return entries;
}

ordered_json poly_json(const LaurentPolynomial& p) {
    ordered_json arr = ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        if (it->first != 0) arr.push_back({it->first, it->second});
    if (long long c = p.coefficient(0)) arr.push_back({0, c});
    return arr;
}

struct Exit {
    int code;
    std::string output;
};

Exit run_impl(const std::vector<std::string>& args) {
    CLI::App app{"Gauss diagram calculus for virtual knots: writhe invariants, "
                 "diagram moves, 2k-classification, and move-distance search"};
    app.require_subcommand(1);

    // invariants
    auto* inv_cmd = app.add_subcommand("invariants", "n-writhes, odd writhe, and "
                                                     "affine index polynomial");
    CodeSource inv_src;
    inv_src.attach(inv_cmd, "Gauss code, e.g. \"O1+ O2+ U1+ U2+\"");

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "class of the diagram modulo "
                                                   "2k-moves and xi-moves");
    CodeSource cls_src;
    cls_src.attach(cls_cmd, "Gauss code");
    long long cls_k = 0;
    cls_cmd->add_option("--k", cls_k, "modulus parameter k")->required();

    // move
    auto* mov_cmd = app.add_subcommand("move", "apply a single move");
    CodeSource mov_src;
    mov_src.attach(mov_cmd, "Gauss code");
    std::string mov_line;
    mov_cmd->add_option("--apply", mov_line, "move line, e.g. \"XI 3\" or \"R1- c=2\"")
        ->required();

    // script-replay
    auto* rep_cmd = app.add_subcommand("script-replay", "apply a move script from a file");
    CodeSource rep_src;
    rep_src.attach(rep_cmd, "Gauss code");
    std::string rep_file;
    rep_cmd->add_option("--file", rep_file, "script file, one move per line")->required();

    // distance
    auto* dst_cmd = app.add_subcommand("distance", "2k-move distance bounds between "
                                                   "two diagrams");
    std::string dst_a, dst_b;
    dst_cmd->add_option("from", dst_a, "source Gauss code")->required();
    dst_cmd->add_option("to", dst_b, "target Gauss code")->required();
    long long dst_k = 0;
    dst_cmd->add_option("--k", dst_k, "move parameter k")->required();
    SearchBudget dst_budget;
    dst_cmd->add_option("--budget-moves", dst_budget.max_moves,
                        "most 2k-moves in a certificate (default 8)");
    dst_cmd->add_option("--budget-chords", dst_budget.max_chords,
                        "chord cap during search (default max size + 2k + 2)");
    dst_cmd->add_option("--budget-states", dst_budget.max_states,
                        "most stored states (default 100000)");
    bool dst_serial = false, dst_xi = false;
    dst_cmd->add_flag("--serial", dst_serial, "disable parallel expansion");
    dst_cmd->add_flag("--allow-xi", dst_xi, "also treat xi swaps as free moves");

    // witness
    auto* wit_cmd = app.add_subcommand("witness", "diagram at exact 2k-distance a "
                                                  "from the given base");
    CodeSource wit_src;
    wit_src.attach(wit_cmd, "base Gauss code (\"\" for the empty diagram)");
    long long wit_a = 0, wit_k = 0;
    wit_cmd->add_option("--a", wit_a, "target distance")->required();
    wit_cmd->add_option("--k", wit_k, "move parameter k")->required();

    // normal-form
    auto* nrm_cmd = app.add_subcommand("normal-form", "standard diagram G(a)");
    long long nrm_a = 0;
    nrm_cmd->add_option("--a", nrm_a, "block count with sign")->required();

    // random
    auto* rnd_cmd = app.add_subcommand("random", "seeded random diagram");
    int rnd_n = 0;
    std::uint64_t rnd_seed = 0;
    rnd_cmd->add_option("--n", rnd_n, "chord count")->required();
    rnd_cmd->add_option("--seed", rnd_seed, "RNG seed (required: runs are reproducible)")
        ->required();

    std::vector<const char*> argv;
    argv.push_back("vknot");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        if (code == 0) return {0, out.str()};
        std::string message = err.str();
        while (!message.empty() && (message.back() == '\n' || message.back() == '\r'))
            message.pop_back();
        return {1, error_json("usage", message.empty() ? e.what() : message)};
    }

    ordered_json j;
    if (inv_cmd->parsed()) {
        GaussDiagram g = inv_src.diagram();
        WritheVector wv = writhe_vector(g);
        j["n_writhes"] = writhe_json(wv);
        j["j0"] = wv.j0;
        j["odd_writhe"] = odd_writhe(g);
        j["affine_index_polynomial"] = poly_json(affine_index_polynomial(g));
    } else if (cls_cmd->parsed()) {
        GaussDiagram g = cls_src.diagram();
        NormalForm nf = classify_2k_xi(g, cls_k);
        j["k"] = cls_k;
        j["a"] = nf.a;
        j["odd_writhe"] = odd_writhe(g);
        j["representative"] = serialize(nf.diagram);
    } else if (mov_cmd->parsed()) {
        GaussDiagram g = mov_src.diagram();
        Move m = parse_move_line(mov_line);
        GaussDiagram out = apply_move(g, m);
        j["move"] = format_move(m);
        j["result"] = serialize(out);
    } else if (rep_cmd->parsed()) {
        GaussDiagram g = rep_src.diagram();
        std::ifstream in(rep_file);
        if (!in) throw std::invalid_argument("cannot read file '" + rep_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        MoveScript script = parse_script(buf.str());
        GaussDiagram out = replay_script(g, script);
        j["moves"] = script.size();
        j["twok_count"] = twok_count(script);
        j["result"] = serialize(out);
    } else if (dst_cmd->parsed()) {
        GaussDiagram from = parse_gauss_code(dst_a);
        GaussDiagram to = parse_gauss_code(dst_b);
        SearchOptions opts;
        opts.parallel = !dst_serial;
        opts.allow_xi = dst_xi;
        j["k"] = dst_k;
        auto lower = lower_bound_2k(from, to, dst_k);
        if (!lower) {
            j["infeasible"] = true;
        } else {
            j["lower"] = *lower;
            auto found = search_upper_bound(from, to, dst_k, dst_budget, opts);
            if (found) {
                j["upper"] = found->twok_moves;
                if (found->twok_moves == *lower) j["exact"] = *lower;
                ordered_json cert = ordered_json::array();
                for (const Move& m : found->script) cert.push_back(format_move(m));
                j["certificate"] = cert;
            }
        }
    } else if (wit_cmd->parsed()) {
        GaussDiagram base = wit_src.diagram();
        j["a"] = wit_a;
        j["k"] = wit_k;
        j["witness"] = serialize(witness_construction(base, wit_a, wit_k));
    } else if (nrm_cmd->parsed()) {
        j["a"] = nrm_a;
        j["representative"] = serialize(normal_form_diagram(nrm_a));
    } else if (rnd_cmd->parsed()) {
        if (rnd_n < 0) throw std::invalid_argument("chord count must be nonnegative");
        j["n"] = rnd_n;
        j["seed"] = rnd_seed;
        j["code"] = serialize(random_diagram(rnd_n, rnd_seed));
    }
    return {0, j.dump()};
}

} // namespace

RunResult run(const std::vector<std::string>& args) {
    try {
        Exit e = run_impl(args);
        return {e.code, e.output};
    } catch (const ParseError& e) {
        return {1, error_json("parse", e.what())};
    } catch (const MoveError& e) {
        return {1, error_json("move", e.what())};
    } catch (const std::invalid_argument& e) {
        return {1, error_json("invalid", e.what())};
    } catch (const std::exception& e) {
        return {2, error_json("internal", e.what())};
    }
}

} // namespace vknots::cli
