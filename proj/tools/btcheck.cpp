// btcheck: exact structure checks for block Toeplitz matrices over
// commutative matrix algebras. `run` replays the randomized criterion-vs-
// oracle suites; `verify` classifies a user-supplied instance file.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "btx/io.hpp"
#include "btx/normality.hpp"
#include "btx/suites.hpp"
#include "btx/version.hpp"

namespace {

struct RangeFlag {
    int lo = 0, hi = 0;
};

// "A..B" or a single "A"
RangeFlag parse_range(const std::string& text) {
    RangeFlag r;
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, pos));
            r.hi = std::stoi(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected 'A..B' or 'A', got '" + text + "'");
    }
    if (r.lo < 1 || r.hi < r.lo)
        throw CLI::ValidationError("range", "bad range '" + text + "'");
    return r;
}

struct RunOptions {
    std::vector<std::string> theorems;
    bool all = false;
    std::uint64_t seed = 42;
    int trials = 100;
    std::string n_range = "2..5";
    std::string d_range = "1..3";
    std::vector<std::string> algebras;
    std::string json_path;
    std::string counterexample_path;
};

int cmd_run(const RunOptions& opt) {
    btx::TrialConfig cfg;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;
    RangeFlag nr = parse_range(opt.n_range), dr = parse_range(opt.d_range);
    cfg.n_lo = nr.lo;
    cfg.n_hi = nr.hi;
    cfg.d_lo = dr.lo;
    cfg.d_hi = dr.hi;
    if (!opt.algebras.empty()) {
        cfg.kinds.clear();
        for (const auto& name : opt.algebras)
            cfg.kinds.push_back(btx::algebra_kind_from_string(name));
    }
    cfg.validate();

    std::vector<std::string> ids = opt.theorems;
    if (opt.all) ids = btx::theorem_ids();
    if (ids.empty())
        throw CLI::ValidationError("run", "select suites with --theorem or --all");
    {  // fail fast on unknown ids, before any work
        auto known = btx::theorem_ids();
        for (const auto& id : ids)
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw CLI::ValidationError("run", "unknown theorem id '" + id + "'");
    }

    const auto t0 = std::chrono::steady_clock::now();
    btx::json suites = btx::json::array();
    std::vector<btx::TrialOutcome> counterexamples;
    long total_disagreements = 0;

    for (const auto& id : ids) {
        auto outcomes = btx::run_theorem_suite(id, cfg);
        int agree = 0, crit_true = 0;
        for (const auto& o : outcomes) {
            if (o.agreement) ++agree;
            else counterexamples.push_back(o);
            if (o.criterion_result) ++crit_true;
        }
        const int disagree = static_cast<int>(outcomes.size()) - agree;
        total_disagreements += disagree;
        std::string desc;
        for (const auto& [tid, d] : btx::theorem_catalog())
            if (tid == id) desc = d;
        suites.push_back(btx::json{{"theorem", id},
                                   {"description", desc},
                                   {"trials", outcomes.size()},
                                   {"agreements", agree},
                                   {"disagreements", disagree},
                                   {"criterion_true", crit_true},
                                   {"criterion_false",
                                    static_cast<int>(outcomes.size()) - crit_true}});
        std::cout << (disagree == 0 ? "PASS " : "FAIL ") << id << "  trials=" << outcomes.size()
                  << " agree=" << agree << " disagree=" << disagree
                  << " criterion true/false=" << crit_true << "/"
                  << (outcomes.size() - crit_true) << "\n";
    }
    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();

    if (!opt.counterexample_path.empty() && !counterexamples.empty()) {
        std::ofstream out(opt.counterexample_path);
        if (!out) {
            std::cerr << "cannot write " << opt.counterexample_path << "\n";
            return 2;
        }
        for (const auto& o : counterexamples) out << btx::to_json(o).dump() << "\n";
        std::cout << "wrote " << counterexamples.size() << " counterexample(s) to "
                  << opt.counterexample_path << "\n";
    }

    if (!opt.json_path.empty()) {
        btx::json report{{"tool", "btcheck"},
                         {"version", btx::version},
                         {"seed", cfg.seed},
                         {"trials", cfg.trials},
                         {"n_range", btx::json::array({cfg.n_lo, cfg.n_hi})},
                         {"d_range", btx::json::array({cfg.d_lo, cfg.d_hi})},
                         {"algebras", [&] {
                              btx::json a = btx::json::array();
                              for (auto k : cfg.kinds) a.push_back(btx::to_string(k));
                              return a;
                          }()},
                         {"suites", suites},
                         {"total_disagreements", total_disagreements},
                         {"counterexamples",
                          opt.counterexample_path.empty() || counterexamples.empty()
                              ? btx::json(nullptr)
                              : btx::json(opt.counterexample_path)},
                         {"wall_ms", wall_ms}};
        std::ofstream out(opt.json_path);
        if (!out) {
            std::cerr << "cannot write " << opt.json_path << "\n";
            return 2;
        }
        out << report.dump(2) << "\n";
    }

    std::cout << (total_disagreements == 0 ? "all suites passed"
                                           : "criterion/oracle disagreements found")
              << " (" << wall_ms << " ms)\n";
    return total_disagreements == 0 ? 0 : 1;
}

struct VerifyOptions {
    std::string file;
    std::string shift_x_file;
    std::string algebra_file;
    std::string json_path;
};

btx::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw btx::ParseError("cannot open '" + path + "'");
    try {
        return btx::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw btx::ParseError(path + ": " + e.what());
    }
}

int cmd_verify(const VerifyOptions& opt) {
    btx::json doc = load_json_file(opt.file);
    std::optional<btx::CommAlgebra> alg;
    if (!opt.algebra_file.empty())
        alg.emplace(btx::algebra_from_json(load_json_file(opt.algebra_file)));
    std::optional<btx::DenseMat> x;
    if (!opt.shift_x_file.empty())
        x.emplace(btx::dense_from_json(load_json_file(opt.shift_x_file), "<shift-x>"));

    btx::BlockMatrix m(1, 1);
    if (doc.is_object()) m = btx::spec_from_json(doc).build();
    else m = btx::block_from_json(doc);

    btx::json report{{"tool", "btcheck"}, {"version", btx::version}};
    auto spec = btx::toeplitz_recognize(m, alg ? &*alg : nullptr);
    report["is_toeplitz"] = spec.has_value();
    std::cout << "toeplitz: " << (spec ? "yes" : "no") << "\n";

    if (auto form = btx::displacement_form(m)) {
        report["displacement_form"] = btx::json{{"a", btx::to_json(form->first)},
                                                {"omega", btx::to_json(form->second)}};
    } else {
        report["displacement_form"] = nullptr;
    }

    auto scls = btx::commutant_S_classify(m);
    report["shift_commutant"] = btx::to_string(scls);
    std::cout << "shift commutant: " << btx::to_string(scls) << "\n";

    if (x) {
        auto xcls = btx::commutant_SX_classify(m, *x);
        auto xstr = btx::commutant_SX_structural(m, *x);
        report["shift_x_commutant"] = btx::json{{"direct", btx::to_string(xcls.kind)},
                                                {"structural", btx::to_string(xstr)}};
        std::cout << "shift-x commutant: direct=" << btx::to_string(xcls.kind)
                  << " structural=" << btx::to_string(xstr) << "\n";
    }

    if (spec) {
        btx::NormalityReport nr = btx::normality_criterion(*spec);
        report["normality"] = btx::to_json(nr);
        std::cout << "normal: " << (nr.is_normal ? "yes" : "no");
        if (nr.criterion_witness)
            std::cout << " (witness s=" << nr.criterion_witness->first
                      << " k=" << nr.criterion_witness->second << ")";
        if (!nr.criterion_matches_defect)
            std::cout << " [criterion and defect disagree: entries outside the"
                         " adjoint-commuting setting]";
        std::cout << "\n";
    } else {
        bool normal = btx::normal_defect(m).is_zero();
        report["normality"] = btx::json{{"is_normal", normal}};
        std::cout << "normal: " << (normal ? "yes" : "no") << "\n";
    }

    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path);
        if (!out) {
            std::cerr << "cannot write " << opt.json_path << "\n";
            return 2;
        }
        out << report.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact block Toeplitz structure checks"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run = app.add_subcommand("run", "run criterion-vs-oracle suites");
    run->add_option("--theorem", run_opt.theorems, "suite id (repeatable), e.g. T5.2");
    run->add_flag("--all", run_opt.all, "run every suite");
    run->add_option("--seed", run_opt.seed, "base seed");
    run->add_option("--trials", run_opt.trials, "trials per suite")
        ->check(CLI::PositiveNumber);
    run->add_option("--n", run_opt.n_range, "block order range A..B");
    run->add_option("--d", run_opt.d_range, "block dimension range A..B");
    run->add_option("--algebra", run_opt.algebras,
                    "algebra kind (repeatable): diagonal|circulant|poly|explicit");
    run->add_option("--json", run_opt.json_path, "write the JSON report here");
    run->add_option("--counterexamples", run_opt.counterexample_path,
                    "write disagreeing trials as JSON lines");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "classify an instance file");
    verify->add_option("file", verify_opt.file, "BlockMatrix or ToeplitzSpec JSON")
        ->required();
    verify->add_option("--shift-x", verify_opt.shift_x_file,
                       "corner block for the generalized shift (DenseMat JSON)");
    verify->add_option("--algebra", verify_opt.algebra_file,
                       "algebra descriptor JSON for span checks");
    verify->add_option("--json", verify_opt.json_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(run_opt);
        return cmd_verify(verify_opt);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const btx::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
