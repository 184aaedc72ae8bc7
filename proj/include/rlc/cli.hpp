#pragma once

// Command-line front end. run_cli() holds all the logic so the tool's main()
// and the tests drive the same code path.
//
//   rlc count      --n N --a A1,..,Ak --t T1,..,Tk --b B [--format json]
//   rlc classify   --n N --a ... --t ... --b B
//   rlc ramanujan  --n N --m M
//   rlc orbicyclic --m M1,..,Mk [--period P]
//   rlc oracle     --n N --a ... --t ... --b B [--max-tuples C]
//   rlc verify     [--seed S] [--samples K] [--max-n N] [--sweep-max-n N]
//
// Exit status: 0 success, 1 invalid input, 2 verification failure.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rlc/congruence.hpp"
#include "rlc/instance.hpp"
#include "rlc/oracle.hpp"
#include "rlc/ramanujan.hpp"
#include "rlc/verify.hpp"

namespace rlc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailure = 2;

class CliInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "3,-1,4" into integers. Empty string gives an empty list.
inline std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::int64_t v = 0;
        const char* first = item.data();
        const char* last = item.data() + item.size();
        if (!item.empty() && item.front() == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last) {
            throw CliInputError(flag + ": '" + item + "' is not a 64-bit integer");
        }
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',') throw CliInputError(flag + ": trailing comma");
    return out;
}

inline nlohmann::json profile_to_json(const PrimeLocalProfile& pr) {
    nlohmann::json j;
    j["p"] = pr.p;
    j["r_p"] = pr.r_p;
    j["m_p"] = pr.m_p;
    j["e_p"] = pr.e_p ? nlohmann::json(*pr.e_p) : nlohmann::json(nullptr);
    j["b_class"] = std::string(to_string(pr.b_class));
    return j;
}

inline nlohmann::json case_to_json(const std::optional<UnsolvableCase>& c) {
    return c ? nlohmann::json(std::string(to_string(*c))) : nlohmann::json(nullptr);
}

/// JSON form of a count: counts are decimal strings, keys sorted.
inline nlohmann::json report_to_json(const CountReport& report, const CongruenceInstance& canonical) {
    nlohmann::json j;
    j["count"] = report.count.str();
    j["solvable"] = report.solvable;
    j["unsolvable_case"] = case_to_json(report.unsolvable_case);
    j["primes"] = nlohmann::json::array();
    for (const auto& pr : report.locals) j["primes"].push_back(profile_to_json(pr));
    j["canonical_a"] = canonical.a;
    j["canonical_b"] = canonical.b;
    return j;
}

namespace detail {

struct CliOptions {
    std::int64_t n = 0;
    std::string a;
    std::string t;
    std::int64_t b = 0;
    std::int64_t m = 0;
    std::string m_list;
    std::int64_t period = 0;
    std::uint64_t max_tuples = OracleBudget{}.max_tuples;
    std::uint64_t seed = 1;
    std::uint64_t samples = 300;
    std::int64_t max_n = 60;
    std::int64_t sweep_max_n = 20;
    std::string format = "human";
    std::string output;
};

inline void add_instance_flags(CLI::App* sub, CliOptions& o) {
    sub->add_option("--n", o.n, "modulus n >= 1")->required();
    sub->add_option("--a", o.a, "comma-separated coefficients a_1..a_k");
    sub->add_option("--t", o.t, "comma-separated gcd targets t_1..t_k");
    sub->add_option("--b", o.b, "right-hand side b")->required();
}

inline CongruenceInstance instance_from(const CliOptions& o) {
    CongruenceInstance inst;
    inst.n = o.n;
    inst.a = parse_int_list(o.a, "--a");
    inst.t = parse_int_list(o.t, "--t");
    inst.b = o.b;
    if (inst.n <= 0) throw CliInputError("--n: modulus must be positive, got " + std::to_string(inst.n));
    if (inst.a.size() != inst.t.size()) {
        throw CliInputError("--t: expected " + std::to_string(inst.a.size()) + " entries to match --a, got " +
                            std::to_string(inst.t.size()));
    }
    for (std::int64_t ti : inst.t) {
        if (ti <= 0) throw CliInputError("--t: gcd targets must be positive, got " + std::to_string(ti));
    }
    return inst;
}

inline std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// CLI11 reads a leading '-' as an option marker; "--a -1,2" is rewritten to
// "--a=-1,2" for the list flags.
inline std::vector<std::string> join_negative_lists(std::vector<std::string> args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& cur = args[i];
        const bool takes_value = cur == "--a" || cur == "--t" || cur == "--m" || cur == "--b" || cur == "--n";
        if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
            (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) != 0)) {
            out.push_back(cur + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(cur);
        }
    }
    return out;
}

}  // namespace detail

/// Runs one invocation. args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using nlohmann::json;
    detail::CliOptions o;

    CLI::App app{"Counting solutions of restricted linear congruences", "rlc"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    app.add_option("--output", o.output, "write the report to this file instead of stdout");

    auto* count = app.add_subcommand("count", "count solutions (explicit product formula)");
    detail::add_instance_flags(count, o);
    auto* classify = app.add_subcommand("classify", "solvability verdict and unsolvable case");
    detail::add_instance_flags(classify, o);
    auto* oracle = app.add_subcommand("oracle", "brute-force count");
    detail::add_instance_flags(oracle, o);
    oracle->add_option("--max-tuples", o.max_tuples, "enumeration budget on n^k")->capture_default_str();
    auto* ram = app.add_subcommand("ramanujan", "Ramanujan sum c_n(m)");
    ram->add_option("--n", o.n, "modulus n >= 1")->required();
    ram->add_option("--m", o.m, "argument m")->required();
    auto* orbi = app.add_subcommand("orbicyclic", "orbicyclic function E(m_1..m_k)");
    orbi->add_option("--m", o.m_list, "comma-separated m_1..m_k")->required();
    orbi->add_option("--period", o.period, "common multiple to use instead of lcm");
    auto* verify = app.add_subcommand("verify", "run identity suites and a seeded counting sweep");
    verify->add_option("--seed", o.seed, "seed of the random sweep")->capture_default_str();
    verify->add_option("--samples", o.samples, "random instances in the sweep")->capture_default_str();
    verify->add_option("--max-n", o.max_n, "largest n for the identity suites")->capture_default_str();
    verify->add_option("--sweep-max-n", o.sweep_max_n, "largest n in the random sweep")->capture_default_str();

    // Subcommand flags may also precede or follow the global ones.
    for (auto* sub : {count, classify, oracle, ram, orbi, verify}) sub->fallthrough();

    args = detail::join_negative_lists(std::move(args));
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    const bool as_json = o.format == "json";
    std::ostringstream report;
    int status = kExitOk;

    try {
        if (count->parsed()) {
            const auto inst = detail::instance_from(o);
            const auto canonical = inst.canonical();
            const CountReport r = count_general_explicit(inst);
            if (as_json) {
                report << report_to_json(r, canonical).dump() << "\n";
            } else {
                report << "count: " << r.count.str() << "\n";
                report << "solvable: " << (r.solvable ? "yes" : "no") << "\n";
                if (r.unsolvable_case) report << "unsolvable case: " << to_string(*r.unsolvable_case) << "\n";
                report << "canonical: a=(" << detail::join(canonical.a) << ") b=" << canonical.b
                       << " n=" << canonical.n << "\n";
                for (const auto& pr : r.locals) {
                    report << "  p=" << pr.p << " r_p=" << pr.r_p << " m_p=" << pr.m_p
                           << " e_p=" << (pr.e_p ? std::to_string(*pr.e_p) : "-")
                           << " b_class=" << to_string(pr.b_class) << "\n";
                }
            }
        } else if (classify->parsed()) {
            const auto inst = detail::instance_from(o);
            const auto verdict = classify_unsolvable(inst);
            if (as_json) {
                json j;
                j["solvable"] = !verdict.has_value();
                j["unsolvable_case"] = case_to_json(verdict);
                report << j.dump() << "\n";
            } else if (verdict) {
                report << "unsolvable (case " << to_string(*verdict) << ")\n";
            } else {
                report << "solvable\n";
            }
        } else if (oracle->parsed()) {
            const auto inst = detail::instance_from(o);
            const std::uint64_t c = oracle_count(inst, OracleBudget{o.max_tuples});
            if (as_json) {
                json j;
                j["count"] = std::to_string(c);
                report << j.dump() << "\n";
            } else {
                report << "oracle count: " << c << "\n";
            }
        } else if (ram->parsed()) {
            if (o.n <= 0) throw CliInputError("--n: modulus must be positive, got " + std::to_string(o.n));
            const std::int64_t v = ramanujan(o.n, o.m);
            if (as_json) {
                json j;
                j["n"] = o.n;
                j["m"] = o.m;
                j["value"] = v;
                report << j.dump() << "\n";
            } else {
                report << "c_" << o.n << "(" << o.m << ") = " << v << "\n";
            }
        } else if (orbi->parsed()) {
            const auto ms = parse_int_list(o.m_list, "--m");
            for (std::int64_t mi : ms) {
                if (mi <= 0) throw CliInputError("--m: entries must be positive, got " + std::to_string(mi));
            }
            std::int64_t period = 1;
            for (std::int64_t mi : ms) period = lcm2(period, mi);
            if (o.period != 0) {
                if (o.period < 0 || o.period % period != 0) {
                    throw CliInputError("--period: " + std::to_string(o.period) + " is not a multiple of lcm " +
                                        std::to_string(period));
                }
                period = o.period;
            }
            const BigInt v = orbicyclic(ms, period);
            if (as_json) {
                json j;
                j["m"] = ms;
                j["period"] = period;
                j["value"] = v.str();
                report << j.dump() << "\n";
            } else {
                report << "E(" << detail::join(ms) << ") = " << v.str() << "  [period " << period << "]\n";
            }
        } else if (verify->parsed()) {
            if (o.max_n <= 0 || o.sweep_max_n <= 0) throw CliInputError("--max-n/--sweep-max-n: must be positive");
            std::vector<SuiteResult> suites;
            suites.push_back(verify_ramanujan_agreement(std::min<std::int64_t>(o.max_n, 500)));
            suites.push_back(verify_divisor_sum(o.max_n));
            suites.push_back(verify_orthogonality(o.max_n));
            suites.push_back(verify_new_orthogonality_suite(o.max_n));
            suites.push_back(verify_counting_sweep(o.seed, o.samples, o.sweep_max_n));
            const bool all_ok = std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
            if (as_json) {
                json j;
                j["passed"] = all_ok;
                j["seed"] = o.seed;
                j["suites"] = json::array();
                for (const auto& s : suites) {
                    json js;
                    js["name"] = s.name;
                    js["checks"] = s.checks;
                    js["failures"] = s.failures;
                    js["first_failure"] = s.first_failure.empty() ? json(nullptr) : json(s.first_failure);
                    j["suites"].push_back(js);
                }
                report << j.dump() << "\n";
            } else {
                for (const auto& s : suites) {
                    report << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.checks << " checks, "
                           << s.failures << " failures";
                    if (!s.passed()) report << " (first: " << s.first_failure << ")";
                    report << "\n";
                }
                report << (all_ok ? "all suites passed" : "verification FAILED") << " [seed " << o.seed << "]\n";
            }
            if (!all_ok) status = kExitVerificationFailure;
        }
    } catch (const InvariantViolation& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    if (!o.output.empty()) {
        std::ofstream file(o.output);
        if (!file) {
            err << "error: --output: cannot open '" << o.output << "'\n";
            return kExitInvalidInput;
        }
        file << report.str();
    } else {
        out << report.str();
    }
    return status;
}

}  // namespace rlc
