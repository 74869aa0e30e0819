// SPDX-License-Identifier: Apache-2.0

#include "qadd/cli.hpp"

#include "qadd/baseline.hpp"
#include "qadd/export.hpp"
#include "qadd/passes.hpp"
#include "qadd/resources.hpp"
#include "qadd/simulator.hpp"
#include "qadd/synthesis.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

namespace qadd {
namespace {

    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    // Sweeps above this many input bits need --samples.
    constexpr std::uint32_t kExhaustiveCap = 24;

    const std::vector<std::string> kVariantNames{"unoptimized", "optimized", "controlled", "pipeline", "cuccaro"};

    struct Options {
        std::uint64_t constant = 0;
        std::uint32_t width = 0;
        std::string variant = "optimized";
        std::string left = "unoptimized";
        std::string right = "optimized";
        bool control = false;
        std::vector<std::string> passes;
        std::optional<std::uint64_t> samples;
        std::uint64_t seed = 0;
        bool strict = false;
        bool exhaustive = false;
        std::string format;
        std::string out_path;
    };

    std::uint64_t default_seed() {
        if (const char* env = std::getenv("QADD_SEED"); env != nullptr && *env != '\0') {
            try {
                return std::stoull(env);
            } catch (const std::exception&) {
                throw UsageError(std::string("QADD_SEED is not an unsigned integer: ") + env);
            }
        }
        return 0;
    }

    Circuit build(const std::string& variant, const Options& o) {
        Circuit c = [&] {
            if (variant == "cuccaro") {
                if (o.control) {
                    throw UsageError("the cuccaro baseline has no controlled form");
                }
                return reduce_to_constant(synth_cuccaro_mod(o.width), o.constant);
            }
            if (variant == "pipeline") {
                Circuit raw = synth(o.constant, o.width, Variant::unoptimized, o.control);
                return run_pipeline(raw, {std::string(kCancelInverses), std::string(kMergeClassicalX)}).first;
            }
            return synth(o.constant, o.width, *variant_from_string(variant), o.control);
        }();
        if (!o.passes.empty()) {
            c = run_pipeline(c, o.passes).first;
        }
        require_valid(c);
        return c;
    }

    std::string mode_text(const Options& o) {
        if (o.samples) {
            return "sampled samples=" + std::to_string(*o.samples) + " seed=" + std::to_string(o.seed);
        }
        return "exhaustive";
    }

    struct VerifyOutcome {
        std::uint64_t passed = 0;
        std::uint64_t total = 0;
        std::optional<ordered_json> first_failure;
    };

    VerifyOutcome verify_circuit(const Circuit& c, const Options& o) {
        const std::uint32_t n = o.width;
        const std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        const std::uint64_t a = o.constant & mask;
        const Program program(c);

        std::vector<std::uint64_t> inputs;
        if (o.samples) {
            std::mt19937_64 rng(o.seed);
            inputs.reserve(*o.samples);
            for (std::uint64_t k = 0; k < *o.samples; ++k) {
                inputs.push_back(rng() & mask);
            }
        }
        const std::uint64_t count = o.samples ? inputs.size() : (std::uint64_t{1} << n);
        std::vector<bool> controls = c.has_control() ? std::vector<bool>{false, true} : std::vector<bool>{false};

        VerifyOutcome outcome;
        for (std::uint64_t k = 0; k < count; ++k) {
            const std::uint64_t b = o.samples ? inputs[k] : k;
            for (bool g : controls) {
                ++outcome.total;
                const bool adds = !c.has_control() || g;
                const std::uint64_t expected = adds ? (a + b) & mask : b;
                std::optional<std::uint64_t> got;
                std::string error;
                try {
                    const BasisState s = program.run({b, 0, g});
                    got = s.data;
                } catch (const Error& e) {
                    error = e.what();
                }
                if (got && *got == expected) {
                    ++outcome.passed;
                } else if (!outcome.first_failure) {
                    ordered_json f;
                    f["b"] = b;
                    if (c.has_control()) {
                        f["control"] = g ? 1 : 0;
                    }
                    f["expected"] = expected;
                    f["got"] = got ? ordered_json(*got) : ordered_json(nullptr);
                    f["error"] = error.empty() ? ordered_json(nullptr) : ordered_json(error);
                    outcome.first_failure = std::move(f);
                }
            }
        }
        return outcome;
    }

    int cmd_synth(const Options& o, std::string& text) {
        const Circuit c = build(o.variant, o);
        const std::string format = o.format.empty() ? "qasm" : o.format;
        if (format == "qasm") {
            text = to_qasm(c);
        } else if (format == "json") {
            text = to_json(c).dump(2) + "\n";
        } else {
            text = to_text(c);
        }
        return kExitOk;
    }

    int cmd_verify(const Options& o, std::string& text, std::ostream& err) {
        if (!o.samples && o.width > kExhaustiveCap) {
            throw UsageError("width " + std::to_string(o.width) + " is above the exhaustive cap of " +
                             std::to_string(kExhaustiveCap) + "; pass --samples K");
        }
        const Circuit c = build(o.variant, o);
        const VerifyOutcome v = verify_circuit(c, o);
        const bool identity = c.constant() && c.constant()->is_identity();

        if (o.format == "json") {
            ordered_json j;
            j["command"] = "verify";
            j["variant"] = o.variant;
            j["constant"] = o.constant;
            j["width"] = o.width;
            j["mode"] = o.samples ? "sampled" : "exhaustive";
            j["seed"] = o.samples ? ordered_json(o.seed) : ordered_json(nullptr);
            j["identity"] = identity;
            j["passed"] = v.passed;
            j["total"] = v.total;
            j["first_failure"] = v.first_failure ? *v.first_failure : ordered_json(nullptr);
            text = j.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "verify variant=" << o.variant << " constant=" << o.constant << " width=" << o.width
               << " mode=" << mode_text(o) << "\n";
            if (identity) {
                os << "constant is 0 mod 2^" << o.width << ": identity circuit\n";
            }
            if (v.first_failure) {
                os << "first counterexample: " << v.first_failure->dump() << "\n";
            }
            os << (v.first_failure ? "FAIL " : "PASS ") << v.passed << "/" << v.total << "\n";
            text = os.str();
        }
        if (v.first_failure) {
            err << "verify: mismatch " << v.first_failure->dump() << "\n";
            return kExitFailure;
        }
        return kExitOk;
    }

    int cmd_count(const Options& o, std::string& text) {
        const Circuit c = build(o.variant, o);
        const ResourceReport r = audit(c);
        if (o.format == "text") {
            std::ostringstream os;
            const ordered_json j = to_json(r);
            for (const auto& [key, value] : j.items()) {
                os << key << ": " << value.dump() << "\n";
            }
            text = os.str();
        } else {
            text = to_json(r).dump(2) + "\n";
        }
        return o.strict && !r.conforms ? kExitFailure : kExitOk;
    }

    int cmd_compare(const Options& o, std::string& text) {
        if (o.width < 4) {
            throw UsageError("compare needs --width >= 4");
        }
        const auto rows = comparison_table(o.width, o.constant == 0 ? 1 : o.constant);
        text = o.format == "json" ? to_json(rows, o.width).dump(2) + "\n" : to_text(rows, o.width);
        const bool mismatch = std::any_of(rows.begin(), rows.end(), [](const ComparisonRow& r) {
            return r.t_measured && (*r.t_measured != r.t_formula || *r.ancilla_measured != r.ancilla_formula);
        });
        return o.strict && mismatch ? kExitFailure : kExitOk;
    }

    int cmd_equiv(const Options& o, std::string& text) {
        const Circuit left = build(o.left, o);
        const Circuit right = build(o.right, o);
        if (left.has_control() != right.has_control()) {
            throw UsageError("cannot compare a controlled circuit with an uncontrolled one");
        }
        const auto cex = assert_equivalent(left, right, kExhaustiveCap);
        std::ostringstream os;
        if (o.format == "json") {
            ordered_json j;
            j["command"] = "equiv";
            j["left"] = o.left;
            j["right"] = o.right;
            j["constant"] = o.constant;
            j["width"] = o.width;
            j["equivalent"] = !cex.has_value();
            if (cex) {
                j["counterexample"] = {{"input", cex->input}, {"left", cex->left}, {"right", cex->right}};
            }
            os << j.dump(2) << "\n";
        } else {
            os << "equiv " << o.left << " vs " << o.right << " constant=" << o.constant << " width=" << o.width
               << "\n";
            if (cex) {
                os << "counterexample input=" << cex->input << " left=" << cex->left << " right=" << cex->right
                   << "\n";
            } else {
                os << "equivalent\n";
            }
        }
        text = os.str();
        return cex ? kExitFailure : kExitOk;
    }

    void add_circuit_options(CLI::App* cmd, Options& o, bool with_variant) {
        cmd->add_option("--constant,-a", o.constant, "classical addend a")->required();
        cmd->add_option("--width,-n", o.width, "register width n")->required()->check(CLI::Range(1U, kMaxWidth));
        if (with_variant) {
            cmd->add_option("--variant", o.variant, "circuit construction")
                ->check(CLI::IsMember(kVariantNames));
        }
        cmd->add_flag("--control", o.control, "build the controlled adder");
        cmd->add_option("--passes", o.passes, "comma-separated peephole passes")->delimiter(',');
    }

    void add_output_options(CLI::App* cmd, Options& o, const std::vector<std::string>& formats) {
        cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
        cmd->add_option("--out", o.out_path, "output file (default stdout)");
    }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Synthesize, verify and audit quantum adders by a classical constant", "qadd"};
    app.require_subcommand(1);

    auto* synth_cmd = app.add_subcommand("synth", "emit an adder circuit");
    add_circuit_options(synth_cmd, o, true);
    add_output_options(synth_cmd, o, {"qasm", "json", "text"});

    auto* verify_cmd = app.add_subcommand("verify", "check the adder against (a+b) mod 2^n");
    add_circuit_options(verify_cmd, o, true);
    add_output_options(verify_cmd, o, {"text", "json"});
    verify_cmd->add_flag("--exhaustive", o.exhaustive, "sweep every input (default when no --samples)");
    auto* samples = verify_cmd->add_option("--samples", o.samples, "random inputs to check")
                        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", o.seed, "sampling seed (default $QADD_SEED or 0)");
    verify_cmd->get_option("--exhaustive")->excludes(samples);

    auto* count_cmd = app.add_subcommand("count", "resource report with formula conformance");
    add_circuit_options(count_cmd, o, true);
    add_output_options(count_cmd, o, {"json", "text"});
    count_cmd->add_flag("--strict", o.strict, "exit 1 unless the report conforms");

    auto* compare_cmd = app.add_subcommand("compare", "cost comparison against known adders");
    compare_cmd->add_option("--width,-n", o.width, "register width n")->required()->check(CLI::Range(4U, kMaxWidth / 2));
    compare_cmd->add_option("--constant,-a", o.constant, "constant used for measured rows (default 1)");
    add_output_options(compare_cmd, o, {"text", "json"});
    compare_cmd->add_flag("--strict", o.strict, "exit 1 if a measured row differs from its formula");

    auto* equiv_cmd = app.add_subcommand("equiv", "compare two constructions by exhaustive simulation");
    add_circuit_options(equiv_cmd, o, false);
    add_output_options(equiv_cmd, o, {"text", "json"});
    equiv_cmd->add_option("--left", o.left, "first construction")->check(CLI::IsMember(kVariantNames));
    equiv_cmd->add_option("--right", o.right, "second construction")->check(CLI::IsMember(kVariantNames));

    try {
        o.seed = default_seed();
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "qadd: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "qadd: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string text;
    int code = kExitOk;
    try {
        if (synth_cmd->parsed()) {
            code = cmd_synth(o, text);
        } else if (verify_cmd->parsed()) {
            code = cmd_verify(o, text, err);
        } else if (count_cmd->parsed()) {
            code = cmd_count(o, text);
        } else if (compare_cmd->parsed()) {
            code = cmd_compare(o, text);
        } else if (equiv_cmd->parsed()) {
            code = cmd_equiv(o, text);
        }
    } catch (const UsageError& e) {
        err << "qadd: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "qadd: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::WidthZero:
        case ErrorCode::WidthTooLarge:
        case ErrorCode::WidthTooSmall:
        case ErrorCode::UnknownPass:
        case ErrorCode::CapExceeded:
            return kExitUsage;
        default:
            return kExitInternal;
        }
    }

    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "qadd: cannot open " << o.out_path << " for writing\n";
            return kExitUsage;
        }
        file << text;
    }
    return code;
}

} // namespace qadd
