// upsemi: check, classify, enumerate and build finite UP-semigroup
// structures from the command line.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical violation was found,
// 2 = input or usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "upsemi/algebra_file.hpp"
#include "upsemi/checks.hpp"
#include "upsemi/classify.hpp"
#include "upsemi/enumerate.hpp"
#include "upsemi/json_io.hpp"
#include "upsemi/powerset.hpp"

namespace {

using namespace upsemi;
using nlohmann::json;

constexpr int exit_pass = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

class Timer
{
public:
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string witness_text(const Witness& w)
{
    static constexpr const char* names[4] = {"x", "y", "z", "a"};
    std::ostringstream out;
    out << w.law << " at";
    for (std::size_t i = 0; i < w.elements.size(); ++i)
        out << ' ' << (i < 4 ? names[i] : "?") << '=' << int(w.elements[i]);
    out << ": lhs=" << int(w.lhs) << " rhs=" << int(w.rhs);
    return out.str();
}

std::string labels_text(const ClassLabelSet& labels)
{
    std::string out;
    for (ClassLabel label : labels.to_vector()) {
        if (!out.empty())
            out += ' ';
        out += class_code(label);
    }
    return out.empty() ? "(none)" : out;
}

std::string profile_text(const DistributivityProfile& p)
{
    std::ostringstream out;
    out << std::boolalpha << "dl=" << p.dl << " dr=" << p.dr << " sl=" << p.sl << " sr=" << p.sr;
    return out.str();
}

int thread_cap_from_env()
{
    const char* value = std::getenv("UPSEMI_THREADS");
    if (!value)
        return 0;
    const int parsed = std::atoi(value);
    return parsed > 0 ? parsed : 0;
}

struct CheckArgs
{
    std::string file;
    bool as_json = false;
};

int run_check(const CheckArgs& args)
{
    const Timer timer;
    const AlgebraFile file = parse_algebra_file(read_file(args.file));

    const AxiomReport axioms = check_up_axioms(file.dot, file.zero);
    std::optional<LawReport> assoc;
    if (file.star)
        assoc = check_associativity(*file.star);
    const bool pass = axioms.pass && (!assoc || assoc->pass);

    if (args.as_json) {
        json report{{"command", "check"},
                    {"file", args.file},
                    {"order", file.order},
                    {"zero", int(file.zero)},
                    {"verdict", pass ? "pass" : "fail"},
                    {"up_axioms", to_json(axioms)},
                    {"associativity", assoc ? to_json(*assoc) : json()},
                    {"timing_ms", timer.elapsed_ms()}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "check: " << args.file << " (order " << file.order << ", zero "
                  << int(file.zero) << ")\n";
        std::cout << "UP axioms: " << (axioms.pass ? "pass" : "FAIL") << "\n";
        for (const Witness& w : axioms.violations)
            std::cout << "  " << witness_text(w) << "\n";
        if (assoc) {
            std::cout << "associativity: " << (assoc->pass ? "pass" : "FAIL") << "\n";
            if (assoc->counterexample)
                std::cout << "  " << witness_text(*assoc->counterexample) << "\n";
        }
        std::cout << "verdict: " << (pass ? "pass" : "fail") << " (" << timer.elapsed_ms()
                  << " ms)\n";
    }
    return pass ? exit_pass : exit_violation;
}

struct ClassifyArgs
{
    std::string file;
    bool as_json = false;
};

int run_classify(const ClassifyArgs& args)
{
    const Timer timer;
    const AlgebraFile file = parse_algebra_file(read_file(args.file));
    if (!file.star)
        throw std::runtime_error("classify needs both tables; '" + args.file +
                                 "' has no star section");

    const AxiomReport axioms = check_up_axioms(file.dot, file.zero);
    const LawReport assoc = check_associativity(*file.star);
    if (!axioms.pass || !assoc.pass) {
        if (args.as_json) {
            json report{{"command", "classify"},
                        {"file", args.file},
                        {"order", file.order},
                        {"zero", int(file.zero)},
                        {"verdict", "fail"},
                        {"up_axioms", to_json(axioms)},
                        {"associativity", to_json(assoc)},
                        {"profile", json()},
                        {"labels", json()},
                        {"timing_ms", timer.elapsed_ms()}};
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << "classify: " << args.file << " (order " << file.order << ", zero "
                      << int(file.zero) << ")\n";
            if (!axioms.pass)
                for (const Witness& w : axioms.violations)
                    std::cout << "  " << witness_text(w) << "\n";
            if (!assoc.pass)
                std::cout << "  " << witness_text(*assoc.counterexample) << "\n";
            std::cout << "verdict: fail (" << timer.elapsed_ms() << " ms)\n";
        }
        return exit_violation;
    }

    const UpAlgebra dot(file.dot, file.zero);
    const SemigroupOp star(*file.star);
    const DistributivityProfile profile = distributivity_profile(dot, star);
    const ClassLabelSet labels = classify(profile);

    if (args.as_json) {
        json report{{"command", "classify"},
                    {"file", args.file},
                    {"order", file.order},
                    {"zero", int(file.zero)},
                    {"verdict", "pass"},
                    {"up_axioms", to_json(axioms)},
                    {"associativity", to_json(assoc)},
                    {"profile", to_json(profile)},
                    {"labels", to_json(labels)},
                    {"timing_ms", timer.elapsed_ms()}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "classify: " << args.file << " (order " << file.order << ", zero "
                  << int(file.zero) << ")\n";
        std::cout << "profile: " << profile_text(profile) << "\n";
        std::cout << "labels: " << labels_text(labels) << "\n";
        std::cout << "verdict: pass (" << timer.elapsed_ms() << " ms)\n";
    }
    return exit_pass;
}

struct EnumerateArgs
{
    int order = 1;
    bool up_to_iso = false;
    std::string class_filter;
    std::uint64_t limit = 0;
    bool has_limit = false;
    bool as_json = false;
};

int run_enumerate(const EnumerateArgs& args)
{
    const Timer timer;
    SearchConfig cfg;
    cfg.order = args.order;
    cfg.up_to_iso = args.up_to_iso;
    cfg.threads = thread_cap_from_env();
    if (args.has_limit)
        cfg.limit = args.limit;
    if (!args.class_filter.empty()) {
        const auto label = class_from_code(args.class_filter);
        if (!label)
            throw std::runtime_error("unknown class code '" + args.class_filter + "'");
        cfg.class_filter = *label;
    }
    if (args.order < 1 || args.order > max_search_order)
        throw std::runtime_error("enumerate order must be in 1.." +
                                 std::to_string(max_search_order));

    std::vector<EnumeratedPair> structures;
    const auto collect = [&](const EnumeratedPair& pair) {
        structures.push_back(pair);
        return true;
    };
    const EnumerationSummary summary =
        enumerate_up_semigroups(cfg, args.has_limit ? collect
                                                    : std::function<bool(const EnumeratedPair&)>{});

    if (args.as_json) {
        json structures_json = json::array();
        for (const EnumeratedPair& pair : structures)
            structures_json.push_back({{"dot", table_rows_json(pair.dot.table())},
                                       {"zero", int(pair.dot.zero())},
                                       {"star", table_rows_json(pair.star.table())},
                                       {"labels", to_json(pair.labels)}});
        json report{{"command", "enumerate"},
                    {"class_filter", cfg.class_filter ? json(std::string(class_code(*cfg.class_filter)))
                                                      : json()},
                    {"summary", to_json(summary)},
                    {"structures", structures_json},
                    {"timing_ms", timer.elapsed_ms()}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "enumerate: order " << summary.order
                  << (summary.up_to_iso ? ", up to isomorphism" : ", raw") << "\n";
        std::cout << "up-algebras: " << summary.count_up_algebras << "\n";
        std::cout << "semigroups: " << summary.count_semigroups << "\n";
        std::cout << "pairs: " << summary.count_pairs << "\n";
        std::cout << "class counts:";
        for (ClassLabel label : all_class_labels)
            std::cout << ' ' << class_code(label) << '='
                      << summary.class_counts[static_cast<unsigned>(label)];
        std::cout << "\n";
        if (cfg.class_filter)
            std::cout << "matching pairs (" << class_code(*cfg.class_filter)
                      << "): " << summary.matching_pairs << "\n";
        for (std::size_t i = 0; i < structures.size(); ++i) {
            std::cout << "# pair " << i + 1 << ": labels " << labels_text(structures[i].labels)
                      << "\n";
            AlgebraFile file;
            file.order = structures[i].dot.order();
            file.zero = structures[i].dot.zero();
            file.dot = structures[i].dot.table();
            file.star = structures[i].star.table();
            std::cout << format_algebra_file(file);
        }
        std::cout << "elapsed: " << timer.elapsed_ms() << " ms\n";
    }
    return exit_pass;
}

struct PowersetArgs
{
    int universe = 0;
    bool verify_identities = false;
    bool do_classify = false;
    std::string export_path;
    int type = 0;
    std::string kind;
    bool as_json = false;
};

int run_powerset(const PowersetArgs& args)
{
    const Timer timer;
    const Universe u(args.universe);

    if (args.verify_identities) {
        const SuiteReport suite = verify_identity_suite(u);
        if (args.as_json) {
            json report{{"command", "powerset"},
                        {"action", "verify-identities"},
                        {"universe", u.size},
                        {"verdict", suite.all_pass() ? "pass" : "fail"},
                        {"suite", to_json(suite)},
                        {"timing_ms", timer.elapsed_ms()}};
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << "powerset verify-identities: universe " << u.size << " (order "
                      << u.subset_count() << ")\n";
            for (const IdentityReport& r : suite.results)
                if (!r.pass)
                    std::cout << "  FAIL " << r.id << ": " << witness_text(*r.counterexample)
                              << "\n";
            std::cout << "identities: " << suite.passed() << "/" << suite.results.size()
                      << " pass\n";
            std::cout << "verdict: " << (suite.all_pass() ? "pass" : "fail") << " ("
                      << timer.elapsed_ms() << " ms)\n";
        }
        return suite.all_pass() ? exit_pass : exit_violation;
    }

    // classify and export both need the combo
    const auto kind = powerset_op_from_code(args.kind);
    if (!kind || *kind == PowersetOpKind::Dot || *kind == PowersetOpKind::Star)
        throw std::runtime_error("--kind must be one of odot, otimes, boxdot, boxtimes, cap, cup");
    if (args.type != 1 && args.type != 2)
        throw std::runtime_error("--type must be 1 or 2");

    const UpAlgebra dot = build_power_up_algebra(u, args.type);
    const SemigroupOp star = build_power_semigroup(u, *kind);

    if (!args.export_path.empty()) {
        AlgebraFile file;
        file.order = dot.order();
        file.zero = dot.zero();
        file.dot = dot.table();
        file.star = star.table();
        std::ofstream out(args.export_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + args.export_path + "'");
        out << "# power UP-algebra type " << args.type << " with " << args.kind
            << " over universe size " << u.size << "\n";
        out << format_algebra_file(file);
        if (args.as_json) {
            json report{{"command", "powerset"}, {"action", "export"},
                        {"universe", u.size},    {"type", args.type},
                        {"kind", args.kind},     {"path", args.export_path},
                        {"verdict", "pass"},     {"timing_ms", timer.elapsed_ms()}};
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << "wrote " << args.export_path << "\n";
        }
        return exit_pass;
    }

    const DistributivityProfile profile = distributivity_profile(dot, star);
    const ClassLabelSet labels = classify(profile);
    if (args.as_json) {
        json report{{"command", "powerset"},
                    {"action", "classify"},
                    {"universe", u.size},
                    {"type", args.type},
                    {"kind", args.kind},
                    {"verdict", "pass"},
                    {"profile", to_json(profile)},
                    {"labels", to_json(labels)},
                    {"timing_ms", timer.elapsed_ms()}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "powerset classify: universe " << u.size << ", type " << args.type
                  << ", kind " << args.kind << " (order " << dot.order() << ", zero "
                  << int(dot.zero()) << ")\n";
        std::cout << "profile: " << profile_text(profile) << "\n";
        std::cout << "labels: " << labels_text(labels) << "\n";
        std::cout << "verdict: pass (" << timer.elapsed_ms() << " ms)\n";
    }
    return exit_pass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite-algebra workbench for UP-algebras paired with semigroups"};
    app.require_subcommand(1);

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "Check UP axioms (and associativity) of a table file");
    check->add_option("file", check_args.file, "algebra file")->required();
    check->add_flag("--json", check_args.as_json, "emit a JSON report");

    ClassifyArgs classify_args;
    CLI::App* classify =
        app.add_subcommand("classify", "Compute the distributivity profile and class labels");
    classify->add_option("file", classify_args.file, "algebra file with dot and star tables")
        ->required();
    classify->add_flag("--json", classify_args.as_json, "emit a JSON report");

    EnumerateArgs enum_args;
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "Exhaustively enumerate UP-semigroup pairs of one order");
    enumerate->add_option("--order", enum_args.order, "carrier size, 1..5")->required();
    enumerate->add_flag("--up-to-iso", enum_args.up_to_iso, "one representative per isomorphism class");
    enumerate->add_option("--class", enum_args.class_filter, "only emit pairs in this class (code)");
    CLI::Option* limit_opt =
        enumerate->add_option("--limit", enum_args.limit, "print at most this many structures");
    enumerate->add_flag("--json", enum_args.as_json, "emit a JSON report");

    PowersetArgs pow_args;
    CLI::App* powerset =
        app.add_subcommand("powerset", "Build and check power-set UP-algebras and semigroups");
    powerset->add_option("--universe", pow_args.universe, "universe size, 0..4")->required();
    CLI::Option* verify_opt = powerset->add_flag("--verify-identities", pow_args.verify_identities,
                                                 "run the 30-identity suite");
    CLI::Option* classify_opt =
        powerset->add_flag("--classify", pow_args.do_classify, "classify a (type, kind) combination");
    CLI::Option* export_opt =
        powerset->add_option("--export", pow_args.export_path, "write the combination as a table file");
    verify_opt->excludes(classify_opt)->excludes(export_opt);
    classify_opt->excludes(export_opt);
    powerset->add_option("--type", pow_args.type, "power UP-algebra type, 1 or 2");
    powerset->add_option("--kind", pow_args.kind, "semigroup kind: odot|otimes|boxdot|boxtimes|cap|cup");
    powerset->add_flag("--json", pow_args.as_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (check->parsed())
            return run_check(check_args);
        if (classify->parsed())
            return run_classify(classify_args);
        if (enumerate->parsed()) {
            enum_args.has_limit = limit_opt->count() > 0;
            return run_enumerate(enum_args);
        }
        if (powerset->parsed()) {
            if (!pow_args.verify_identities && !pow_args.do_classify &&
                pow_args.export_path.empty())
                throw std::runtime_error(
                    "powerset needs one of --verify-identities, --classify, --export PATH");
            return run_powerset(pow_args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
