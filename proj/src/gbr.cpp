// gbr: batch front end for the generalised braid calculus. Subcommands
// parse, eq, normalize, enumerate, verify; see --help for the flag set.
//
// Exit codes are a contract relied on by scripts:
//   parse      0 ok, 2 bad word
//   eq         0 equal, 1 refuted, 3 undecided, 2 bad word / endpoint mismatch
//   normalize  0 ok, 2 bad word
//   enumerate  0 ok, 2 bad object name
//   verify     0 all checks pass, 1 some check failed, 4 report I/O error

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gbr/json_io.hpp"
#include "gbr/koperator.hpp"
#include "gbr/parse.hpp"
#include "gbr/rewrite.hpp"
#include "gbr/split.hpp"
#include "gbr/verify.hpp"

namespace {

using gbr::json;

struct ModelSelection {
    bool rewrite = true;
    bool split = true;
    bool ktheory = true;
};

ModelSelection select_models(const std::string& name) {
    if (name == "all") return {};
    return {name == "rewrite", name == "split", name == "ktheory"};
}

json checks_to_json(const std::vector<gbr::CheckResult>& checks) {
    json out = json::array();
    for (const gbr::CheckResult& c : checks) {
        json row{{"check", c.check}, {"status", c.passed ? "pass" : "fail"}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        if (c.lhs_matrix) row["lhs_matrix"] = gbr::matrix_to_json(*c.lhs_matrix);
        if (c.rhs_matrix) row["rhs_matrix"] = gbr::matrix_to_json(*c.rhs_matrix);
        out.push_back(std::move(row));
    }
    return out;
}

std::string checks_to_text(const std::vector<gbr::CheckResult>& checks) {
    std::string out;
    for (const gbr::CheckResult& c : checks) {
        out += c.passed ? "[PASS] " : "[FAIL] ";
        out += c.check;
        if (!c.detail.empty()) out += " (" + c.detail + ")";
        out += '\n';
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_parse(const std::string& text, const std::string& format) {
    const gbr::Word w = gbr::parse_word(text);
    if (format == "json") {
        json j = gbr::word_to_json(w);
        j["rendered"] = gbr::render(w);
        j["target"] = std::string(gbr::to_string(w.target()));
        emit(j);
    } else {
        std::cout << gbr::render(w) << '\n'
                  << "source: " << gbr::to_string(w.source()) << '\n'
                  << "target: " << gbr::to_string(w.target()) << '\n';
    }
    return 0;
}

// Each model reports equal / distinct / unknown; the aggregate ranks
// refutation over proof over silence, since a matrix refutation and a
// rewrite proof are both sound but silence is just an exhausted budget.
int run_eq(const std::string& lhs_text, const std::string& rhs_text, const std::string& model,
           const gbr::Budget& budget, const std::string& format) {
    const gbr::Word w1 = gbr::parse_word(lhs_text);
    const gbr::Word w2 = gbr::parse_word(rhs_text);
    if (w1.source() != w2.source() || w1.target() != w2.target())
        throw gbr::EndpointMismatch(
            std::string(gbr::to_string(w1.source())) + ">" +
                std::string(gbr::to_string(w1.target())),
            std::string(gbr::to_string(w2.source())) + ">" +
                std::string(gbr::to_string(w2.target())));

    const ModelSelection sel = select_models(model);
    bool any_proof = false;
    bool any_refutation = false;
    json verdicts = json::object();
    std::string text_out;

    if (sel.rewrite) {
        const gbr::EqualityVerdict v = gbr::equal(w1, w2, budget);
        const bool proved = v.status == gbr::EqStatus::ProvedEqual;
        any_proof |= proved;
        verdicts["rewrite"] = json{{"verdict", proved ? "equal" : "unknown"},
                                   {"states", v.states_explored},
                                   {"witness", gbr::witness_to_json(v.witness)}};
        text_out += proved ? "rewrite: equal (witness length " +
                                 std::to_string(v.witness.size()) + ")\n"
                           : "rewrite: unknown (no proof within budget)\n";
    }
    if (sel.split) {
        const gbr::SplitVerdict v = gbr::split_equal(w1, w2);
        const char* name = v == gbr::SplitVerdict::EqualGenericV ? "equal at generic v"
                           : v == gbr::SplitVerdict::EqualAtMinusOne ? "equal at v = -1"
                                                                     : "distinct";
        if (v == gbr::SplitVerdict::Distinct)
            any_refutation = true;
        else
            any_proof = true;
        verdicts["split"] = json{
            {"verdict", v == gbr::SplitVerdict::Distinct ? "distinct" : "equal"},
            {"detail", name}};
        text_out += std::string("split: ") + name + "\n";
    }
    if (sel.ktheory) {
        const gbr::Mat m1 = gbr::evaluate_word(w1).matrix;
        const gbr::Mat m2 = gbr::evaluate_word(w2).matrix;
        const bool same = m1 == m2;
        if (same)
            any_proof = true;
        else
            any_refutation = true;
        verdicts["ktheory"] = json{{"verdict", same ? "equal" : "distinct"}};
        if (!same) {
            verdicts["ktheory"]["lhs_matrix"] = gbr::matrix_to_json(m1);
            verdicts["ktheory"]["rhs_matrix"] = gbr::matrix_to_json(m2);
        }
        text_out += same ? "ktheory: equal (matrices agree)\n"
                         : "ktheory: distinct (matrices differ)\n";
    }

    const char* aggregate =
        any_refutation ? "distinct" : any_proof ? "equal" : "unknown";
    if (format == "json") {
        emit(json{{"lhs", gbr::render(w1)},
                  {"rhs", gbr::render(w2)},
                  {"models", std::move(verdicts)},
                  {"verdict", aggregate}});
    } else {
        std::cout << text_out << "verdict: " << aggregate << '\n';
    }
    return any_refutation ? 1 : any_proof ? 0 : 3;
}

int run_normalize(const std::string& text, const gbr::Budget& budget,
                  const std::string& format) {
    const gbr::Word w = gbr::parse_word(text);
    const gbr::Word n = gbr::normalize(w, budget);
    if (format == "json") {
        emit(json{{"input", gbr::render(w)},
                  {"normal_form", gbr::render(n)},
                  {"word", gbr::word_to_json(n)}});
    } else {
        std::cout << gbr::render(n) << '\n';
    }
    return 0;
}

int run_enumerate(const std::string& src_name, const std::string& tgt_name,
                  std::size_t max_len, gbr::Budget budget, const std::string& format) {
    const auto src = gbr::partition_from(src_name);
    const auto tgt = gbr::partition_from(tgt_name);
    if (!src || !tgt) {
        std::cerr << "error: objects are 3, 12, 21 or 111\n";
        return 2;
    }
    const auto classes = gbr::enumerate_classes(*src, *tgt, max_len, budget);
    if (format == "json") {
        json out = json::array();
        for (const auto& cls : classes) {
            json members = json::array();
            for (const gbr::Word& w : cls) members.push_back(gbr::render(w));
            out.push_back(json{{"representative", gbr::render(cls.front())},
                               {"size", cls.size()},
                               {"members", std::move(members)}});
        }
        emit(out);
    } else {
        std::cout << "classes: " << classes.size() << '\n';
        for (std::size_t i = 0; i < classes.size(); ++i)
            std::cout << "class " << i + 1 << " (size " << classes[i].size()
                      << "): " << gbr::render(classes[i].front()) << '\n';
    }
    return 0;
}

int run_verify(const std::string& model, const gbr::Budget& budget, unsigned seed,
               const std::string& report_path, const std::string& format) {
    gbr::VerifyOptions opt;
    opt.budget = budget;
    opt.seed = seed;
    const ModelSelection sel = select_models(model);
    opt.rewrite = sel.rewrite;
    opt.split = sel.split;
    opt.ktheory = sel.ktheory;

    const std::vector<gbr::CheckResult> checks = gbr::run_checks(opt);
    const bool ok = gbr::all_passed(checks);

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << checks_to_json(checks).dump(2) << '\n';
        out.close();
        if (!out) {
            std::cerr << "error: could not write " << report_path << '\n';
            return 4;
        }
    }
    if (format == "json")
        emit(checks_to_json(checks));
    else
        std::cout << checks_to_text(checks) << (ok ? "all checks passed\n"
                                                   : "some checks FAILED\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic calculus for generalised braids on three strands"};
    app.require_subcommand(1);

    std::size_t max_states = 200000;
    std::size_t max_len = 16;
    std::string model = "all";
    std::string format = "text";
    unsigned seed = 7;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--max-states", max_states,
                        "search state budget (env GBR_BUDGET_STATES)")
            ->envname("GBR_BUDGET_STATES")
            ->capture_default_str();
        cmd->add_option("--max-len", max_len, "longest word the search may visit")
            ->capture_default_str();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--model", model, "which model(s) to consult")
            ->check(CLI::IsMember({"rewrite", "split", "ktheory", "all"}))
            ->capture_default_str();
    };

    int rc = 0;

    std::string word_text;
    CLI::App* parse_cmd = app.add_subcommand("parse", "parse a word and echo it back");
    parse_cmd->add_option("word", word_text, "word to parse")->required();
    add_format(parse_cmd);
    parse_cmd->callback([&] { rc = run_parse(word_text, format); });

    std::string lhs_text, rhs_text;
    CLI::App* eq_cmd = app.add_subcommand("eq", "compare two parallel words");
    eq_cmd->add_option("lhs", lhs_text, "left word")->required();
    eq_cmd->add_option("rhs", rhs_text, "right word")->required();
    add_model(eq_cmd);
    add_budget(eq_cmd);
    add_format(eq_cmd);
    eq_cmd->callback(
        [&] { rc = run_eq(lhs_text, rhs_text, model, {max_states, max_len}, format); });

    CLI::App* norm_cmd = app.add_subcommand("normalize", "print the least equal word found");
    norm_cmd->add_option("word", word_text, "word to normalize")->required();
    add_budget(norm_cmd);
    add_format(norm_cmd);
    norm_cmd->callback([&] { rc = run_normalize(word_text, {max_states, max_len}, format); });

    std::string src_name, tgt_name;
    std::size_t enum_len = 4;
    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "list provable-equality classes of words");
    enum_cmd->add_option("source", src_name, "source object")->required();
    enum_cmd->add_option("target", tgt_name, "target object")->required();
    enum_cmd->add_option("--max-len", enum_len, "longest word to enumerate")
        ->capture_default_str();
    enum_cmd->add_option("--max-states", max_states,
                         "search state budget (env GBR_BUDGET_STATES)")
        ->envname("GBR_BUDGET_STATES")
        ->capture_default_str();
    add_format(enum_cmd);
    enum_cmd->callback([&] {
        rc = run_enumerate(src_name, tgt_name, enum_len, {max_states, max_len}, format);
    });

    std::string report_path;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the full relation and consistency suite");
    verify_cmd->add_option("--report", report_path, "write the JSON report here");
    verify_cmd->add_option("--seed", seed, "seed for the sampled cross-model checks")
        ->capture_default_str();
    add_model(verify_cmd);
    add_budget(verify_cmd);
    add_format(verify_cmd);
    verify_cmd->callback([&] {
        rc = run_verify(model, {max_states, max_len}, seed, report_path, format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const gbr::ParseError& e) {
        std::cerr << "error " << e.what() << '\n';
        return 2;
    } catch (const gbr::EndpointMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
