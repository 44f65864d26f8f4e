#include "conormal/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode { kOk = 0, kCriterionFails = 1, kInputError = 2, kLimitExceeded = 3 };

int run(const std::string& path, const std::string& format, const conormal::RunOptions& opt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read session file '" << path << "'\n";
        return kInputError;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    try {
        conormal::SessionFile session = conormal::parse_session_text(text);
        conormal::ReportDocument doc = conormal::run_session(session, text, opt);
        std::cout << conormal::emit_report(doc, format == "text" ? conormal::ReportFormat::text : conormal::ReportFormat::json);
        return doc.criterion_failed ? kCriterionFails : kOk;
    } catch (const conormal::SessionError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kInputError;
    } catch (const conormal::CommandLimitExceeded& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kLimitExceeded;
    } catch (const conormal::Error& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conormal-lab: conormal modules, blowup algebras and integral closedness criteria"};
    app.require_subcommand(1);
    CLI::App* run_cmd = app.add_subcommand("run", "Execute a session file and print its report");
    std::string path, format = "json";
    int max_degree = conormal::kDefaultMaxDegree;
    unsigned seed = 0;
    long step_limit = 0;
    bool timing = false;
    run_cmd->add_option("session", path, "Session file")->required();
    run_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    auto* md = run_cmd->add_option("--max-degree", max_degree, "Degree bound for component materialization")
                   ->check(CLI::NonNegativeNumber);
    auto* sd = run_cmd->add_option("--seed", seed, "Seed for pseudo-random candidate forms");
    auto* sl = run_cmd->add_option("--step-limit", step_limit, "Cap on Groebner basis steps per computation")
                   ->check(CLI::PositiveNumber);
    run_cmd->add_flag("--timing", timing, "Include per-command wall time in the report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }
    conormal::RunOptions opt;
    if (md->count()) opt.max_degree = max_degree;
    if (sd->count()) opt.seed = seed;
    if (sl->count()) opt.step_limit = step_limit;
    opt.timing = timing;
    return run(path, format, opt);
}
