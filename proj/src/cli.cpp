#include "seqblocks/cli.hpp"

#include "seqblocks/batch.hpp"
#include "seqblocks/normalize.hpp"
#include "seqblocks/parser.hpp"
#include "seqblocks/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

namespace seqblocks::cli {

namespace {

constexpr const char* kGrammarHelp =
    "Sequence expression grammar (whitespace-insensitive):\n"
    "  expr    := term (('+' | '-') term)*\n"
    "  term    := factor (('*' | '/') factor)*\n"
    "  factor  := '-' factor | power\n"
    "  power   := primary ('^' factor)*    (exponent: a constant integer)\n"
    "  primary := NUMBER | 'n' | '(' expr ')' | 'sinq(n)' | 'altsign(n)'\n"
    "           | 'piecewise(mod m; e_0, ..., e_{m-1})'\n"
    "sinq(n) = sin(n*pi/2); altsign(n) = (-1)^n; piecewise selects e_(n mod m).\n"
    "Division (and '^' with a negative exponent) only by nonzero rational\n"
    "constants or powers of n. Rationals print exactly, e.g. 2/3; profiles\n"
    "use \"-inf\" / \"+inf\" for infinite values.";

Block parse_block_letter(const std::string& s) {
    if (s.size() == 1) {
        if (auto b = block_from_letter(s[0])) return *b;
    }
    throw std::invalid_argument("unknown block '" + s + "' (expected one of A..G)");
}

std::set<Block> parse_union(const std::string& s) {
    std::set<Block> blocks;
    std::string token;
    std::stringstream ss(s);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        blocks.insert(parse_block_letter(token));
    }
    if (blocks.empty()) throw std::invalid_argument("union must name at least one block");
    return blocks;
}

std::int64_t env_default_depth() {
    if (const char* v = std::getenv("SEQBLOCKS_DEPTH")) {
        char* end = nullptr;
        long d = std::strtol(v, &end, 10);
        if (end && *end == '\0' && d >= 1) return d;
    }
    return 8;
}

Coder parse_coder(const std::string& s) {
    if (s == "weighted") return Coder::Weighted;
    if (s == "interleaved") return Coder::Interleaved;
    throw std::invalid_argument("unknown coder '" + s + "' (weighted|interleaved)");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string error_output(const std::string& message, std::optional<std::int64_t> offset = {}) {
    Json j;
    j["status"] = "error";
    j["message"] = message;
    if (offset) j["offset"] = *offset;
    return dump(j);
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{std::string("seqblocks: classify closed-form real sequences by limit profile, "
                             "build block connectors and transfer maps, and compare the "
                             "macro/micro block digraphs.\n\n") +
                 kGrammarHelp};
    app.require_subcommand(0, 1);

    std::string expr_text, block_arg, from_arg, to_arg, target_arg, union_arg;
    std::string coder_arg = "interleaved";
    std::string level_arg, format_arg;
    std::string shift_arg, threshold_arg = "1000", window_arg = "1/2";
    std::int64_t depth = env_default_depth(), digits = 16, horizon = 10000;
    bool numeric = false;

    auto* classify = app.add_subcommand("classify", "Limit profile and block of an expression");
    classify->add_option("expr", expr_text, "sequence expression")->required();
    classify->add_flag("--numeric", numeric, "use the window estimator instead of the exact path");
    classify->add_option("--horizon", horizon, "estimator horizon N (>= 8)");
    classify->add_option("--divergence-threshold", threshold_arg, "estimator threshold M");
    classify->add_option("--window", window_arg, "estimator window fraction in (0, 1]");

    auto* rep = app.add_subcommand("representative", "Closed-form representative of a block");
    rep->add_option("block", block_arg, "block letter A..G")->required();
    rep->add_option("--shift", shift_arg, "add a rational constant in (0, 1)");

    auto* conn = app.add_subcommand("connect", "Hadamard connector toward a target block");
    conn->add_option("expr", expr_text, "source sequence expression")->required();
    conn->add_option("--target", target_arg, "target block letter")->required();

    auto* trans = app.add_subcommand("transfer", "Macroscale injection into another block");
    trans->add_option("expr", expr_text, "source sequence expression")->required();
    trans->add_option("--from", from_arg, "source block letter")->required();
    trans->add_option("--to", to_arg, "target block letter")->required();
    trans->add_option("--coder", coder_arg, "weighted|interleaved");
    trans->add_option("--depth", depth, "number of leading terms encoded (K)");
    trans->add_option("--digits", digits, "binary digits per term (interleaved)");

    auto* code_cmd = app.add_subcommand("code", "Exact (0,1) code of a sequence");
    code_cmd->add_option("expr", expr_text, "sequence expression")->required();
    code_cmd->add_option("--coder", coder_arg, "weighted|interleaved");
    code_cmd->add_option("--depth", depth, "number of leading terms encoded (K)");
    code_cmd->add_option("--digits", digits, "binary digits per term (interleaved)");

    auto* sub = app.add_subcommand("subspace", "Is a union of blocks a linear subspace?");
    sub->add_option("--union", union_arg, "comma-joined block letters, e.g. A,B,G")->required();

    auto* mat = app.add_subcommand("matrix", "Macro (U) or micro (V) adjacency matrix");
    mat->add_option("--level", level_arg, "macro|micro")->required();
    mat->add_option("--format", format_arg, "csv|json (default json)");

    app.add_subcommand("metrics", "Contingency counts and similarity statistics of U vs V");

    auto* graph = app.add_subcommand("graph", "Heptagon digraph rendering");
    graph->add_option("--level", level_arg, "macro|micro")->required();
    graph->add_option("--format", format_arg, "dot (default)");

    app.add_subcommand("regions", "The seven (L1, L2) region definitions");

    std::vector<char*> argv;
    std::string prog = "seqblocks";
    argv.push_back(prog.data());
    std::vector<std::string> owned = args;
    for (auto& a : owned) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        int code = app.exit(e, out, out);
        return {code, out.str()};
    }

    try {
        Json j;
        j["status"] = "ok";

        if (app.got_subcommand(classify)) {
            CanonicalSeq s = normalize(expr_text);
            LimitProfile profile = numeric
                                       ? estimate_profile(Sequence(s),
                                                          EstimatorConfig{
                                                              horizon,
                                                              rat_from_string(threshold_arg),
                                                              rat_from_string(window_arg),
                                                              true,
                                                          })
                                       : exact_profile(s);
            j["block"] = block_string(block_of(profile));
            j["profile"] = profile_json(profile);
            j["canonical"] = render(s);
            j["method"] = numeric ? "numeric" : "exact";
            return {0, dump(j)};
        }
        if (app.got_subcommand(rep)) {
            Block b = parse_block_letter(block_arg);
            CanonicalSeq s = shift_arg.empty()
                                 ? representative(b)
                                 : representative_shifted(b, rat_from_string(shift_arg));
            j["block"] = block_string(b);
            j["expr"] = render(s);
            j["profile"] = profile_json(exact_profile(s));
            return {0, dump(j)};
        }
        if (app.got_subcommand(conn)) {
            CanonicalSeq s = normalize(expr_text);
            Block target = parse_block_letter(target_arg);
            auto result = connect(s, target);
            Json payload = connection_json(s, result);
            payload["status"] =
                std::holds_alternative<Connector>(result) ? "ok" : "obstruction";
            return {0, dump(payload)};
        }
        if (app.got_subcommand(trans)) {
            CanonicalSeq s = normalize(expr_text);
            Block from = parse_block_letter(from_arg);
            Block to = parse_block_letter(to_arg);
            CoderConfig cfg{parse_coder(coder_arg), depth, digits};
            TransferImage image = transfer(from, to, Sequence(s), cfg);
            j["from"] = block_string(from);
            j["to"] = block_string(to);
            j["code"] = code_json(image.source_code);
            j["image_expr"] = render(image.seq);
            j["image_profile"] = profile_json(exact_profile(image.seq));
            j["recovered_code"] = rat_to_string(recover_code(to, image.seq));
            return {0, dump(j)};
        }
        if (app.got_subcommand(code_cmd)) {
            CanonicalSeq s = normalize(expr_text);
            CoderConfig cfg{parse_coder(coder_arg), depth, digits};
            Code c = encode(Sequence(s), cfg);
            j["code"] = rat_to_string(c.value);
            j["coder"] = coder_arg;
            j["depth"] = c.depth;
            if (c.coder == Coder::Interleaved) j["digits"] = c.digits;
            return {0, dump(j)};
        }
        if (app.got_subcommand(sub)) {
            std::set<Block> blocks = parse_union(union_arg);
            Json payload = subspace_json(blocks, union_is_subspace(blocks));
            payload["status"] = "ok";
            return {0, dump(payload)};
        }
        if (app.got_subcommand(mat)) {
            AdjMatrix7 m = level_arg == "macro"   ? macro_matrix()
                           : level_arg == "micro" ? micro_matrix().matrix
                                                  : throw std::invalid_argument(
                                                        "unknown level '" + level_arg + "'");
            if (format_arg == "csv") return {0, export_csv(m)};
            if (!format_arg.empty() && format_arg != "json")
                throw std::invalid_argument("unknown matrix format '" + format_arg + "'");
            Json payload = matrix_json(m, level_arg);
            payload["status"] = "ok";
            return {0, dump(payload)};
        }
        if (app.got_subcommand("metrics")) {
            ContingencyCounts c = contingency(macro_matrix(), micro_matrix().matrix);
            Json payload = metrics_json(c, metrics(c));
            payload["status"] = "ok";
            return {0, dump(payload)};
        }
        if (app.got_subcommand(graph)) {
            if (!format_arg.empty() && format_arg != "dot")
                throw std::invalid_argument("unknown graph format '" + format_arg + "'");
            if (level_arg == "macro") return {0, export_dot(macro_matrix(), GraphLevel::Macro)};
            if (level_arg == "micro")
                return {0, export_dot(micro_matrix().matrix, GraphLevel::Micro)};
            throw std::invalid_argument("unknown level '" + level_arg + "'");
        }
        if (app.got_subcommand("regions")) {
            Json regions = Json::array();
            const char* l1[] = {"-inf", "finite", "finite", "-inf", "-inf", "+inf", "finite"};
            const char* l2[] = {"finite", "finite", "+inf", "+inf", "-inf", "+inf", "finite"};
            const char* rel[] = {nullptr, "l1 < l2", nullptr, nullptr, nullptr, nullptr,
                                 "l1 == l2"};
            for (Block b : kAllBlocks) {
                auto i = static_cast<std::size_t>(b);
                Json r;
                r["block"] = block_string(b);
                r["l1"] = l1[i];
                r["l2"] = l2[i];
                r["constraint"] = rel[i] ? Json(rel[i]) : Json(nullptr);
                r["description"] = block_description(b);
                regions.push_back(r);
            }
            j["regions"] = regions;
            return {0, dump(j)};
        }

        std::ostringstream help;
        help << app.help();
        return {0, help.str()};
    } catch (const ParseError& e) {
        return {1, error_output(e.message(), static_cast<std::int64_t>(e.offset()))};
    } catch (const std::exception& e) {
        return {1, error_output(e.what())};
    }
}

}  // namespace seqblocks::cli
