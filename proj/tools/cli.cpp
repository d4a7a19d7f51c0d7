#include "cli.hpp"

#include "repdec/expansion.hpp"
#include "repdec/factor.hpp"
#include "repdec/period.hpp"
#include "repdec/scan.hpp"
#include "repdec/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>

namespace repdec::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Digits only. Text that is numeric but wider than 64 bits is a domain
// error (out of range); anything else is a usage error.
u64 parse_u64(const std::string& text, std::string_view what)
{
    if (text.empty() || !std::ranges::all_of(text, [](char c) { return c >= '0' && c <= '9'; }))
        throw UsageError(fmt::format("{} must be a non-negative integer, got '{}'", what, text));
    u64 value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw Error(ErrorCode::OutOfRange, fmt::format("{} {} does not fit in 64 bits", what, text));
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError(fmt::format("cannot parse {} '{}'", what, text));
    return value;
}

Json envelope(std::string_view command, Json inputs, Json results)
{
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["results"] = std::move(results);
    return doc;
}

void emit_json(std::ostream& out, const Json& doc)
{
    out << doc.dump(2) << '\n';
}

Json to_json(const PeriodInfo& info)
{
    return Json{{"n", info.n},
                {"coprime_part", info.coprime_part},
                {"preperiod", info.preperiod},
                {"period", info.period}};
}

void print_plain(std::ostream& out, const PeriodInfo& info)
{
    fmt::print(out, "n: {}\ncoprime_part: {}\npreperiod: {}\nperiod: {}\n", info.n,
               info.coprime_part, info.preperiod, info.period);
}

std::string truncated(const std::string& digits, std::optional<u64> max_digits)
{
    if (!max_digits || digits.size() <= *max_digits)
        return digits;
    return fmt::format("{}…(truncated, full length {})", digits.substr(0, *max_digits),
                       digits.size());
}

std::string decimal_form(const ExpansionInfo& e, std::optional<u64> max_digits)
{
    std::string text = fmt::format("{}", e.integer_part);
    if (e.preperiod_digits.empty() && e.period_digits.empty())
        return text;
    text += '.';
    text += e.preperiod_digits;
    if (!e.period_digits.empty())
        text += fmt::format("({})", truncated(e.period_digits, max_digits));
    return text;
}

Json to_json(const ExpansionInfo& e)
{
    return Json{{"numerator", e.numerator},
                {"denominator", e.denominator},
                {"integer_part", e.integer_part},
                {"preperiod_digits", e.preperiod_digits},
                {"period_digits", e.period_digits},
                {"period_length", e.period_length()}};
}

Json to_json(const Factorization& f)
{
    Json factors = Json::array();
    for (const auto& [p, e] : f.factors)
        factors.push_back(Json{{"prime", p}, {"exponent", e}});
    return Json{{"n", f.n}, {"factors", std::move(factors)}};
}

std::string factor_text(const Factorization& f)
{
    std::string text;
    for (const auto& [p, e] : f.factors) {
        if (!text.empty())
            text += ' ';
        text += e == 1 ? fmt::format("{}", p) : fmt::format("{}^{}", p, e);
    }
    return text;
}

Json to_json(const PrimePeriodRecord& r)
{
    return Json{{"p", r.p},
                {"l_p", r.l_p},
                {"m_p", r.m_p},
                {"full_reptend", r.full_reptend},
                {"terminating", r.terminating}};
}

Json to_json(const ScanReport& r, bool with_timing)
{
    Json doc{{"kind", to_string(r.kind)},
             {"limit", r.limit},
             {"hits", r.hits},
             {"primes_examined", r.primes_examined}};
    doc["density"] = r.density ? Json(*r.density) : Json(nullptr);
    if (with_timing)
        doc["elapsed_ms"] = r.elapsed_ms;
    return doc;
}

void print_plain(std::ostream& out, const ScanReport& r, bool with_timing)
{
    fmt::print(out, "kind: {}\nlimit: {}\nprimes_examined: {}\nhit_count: {}\n", to_string(r.kind),
               r.limit, r.primes_examined, r.hits.size());
    if (r.density)
        fmt::print(out, "density: {}\n", *r.density);
    if (with_timing)
        fmt::print(out, "elapsed_ms: {:.3f}\n", r.elapsed_ms);
    fmt::print(out, "hits:{}{}\n", r.hits.empty() ? "" : " ", fmt::join(r.hits, " "));
}

std::string optional_suffix(const std::string& value)
{
    return value.empty() ? std::string{} : " " + value;
}

struct ScanOptions {
    std::string limit;
    bool json = false;
    bool timing = false;
    unsigned threads = 0;
};

void add_scan_options(CLI::App* cmd, ScanOptions& opts)
{
    cmd->add_option("--limit", opts.limit, "scan primes p <= limit")->required();
    cmd->add_flag("--json", opts.json, "emit JSON");
    cmd->add_flag("--timing", opts.timing, "include elapsed time in the report");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware concurrency)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Repeating decimal periods: fast factorization-based path, exact expansions, "
                 "oracle cross-checks and prime scans",
                 "repdec"};
    app.require_subcommand(1);

    std::string n_text, fraction_text, p_text;
    bool json = false;
    std::optional<u64> max_period_digits;

    auto* period_cmd = app.add_subcommand("period", "period and preperiod length of 1/n");
    period_cmd->add_option("n", n_text)->required();
    period_cmd->add_flag("--json", json);

    auto* expand_cmd = app.add_subcommand("expand", "exact decimal expansion of q/n");
    expand_cmd->add_option("fraction", fraction_text, "q/n")->required();
    expand_cmd->add_flag("--json", json);
    expand_cmd->add_option("--max-period-digits", max_period_digits,
                           "truncate the displayed period (plain output only)");

    auto* factor_cmd = app.add_subcommand("factor", "prime factorization of n");
    factor_cmd->add_option("n", n_text)->required();
    factor_cmd->add_flag("--json", json);

    auto* record_cmd = app.add_subcommand("record", "l_p, m_p and the full-reptend flag of a prime");
    record_cmd->add_option("p", p_text)->required();
    record_cmd->add_flag("--json", json);

    ScanOptions scan_opts;
    auto* scan_cmd = app.add_subcommand("scan", "empirical prime scans");
    scan_cmd->require_subcommand(1);
    auto* reptend_cmd = scan_cmd->add_subcommand("reptend", "primes with l_p = p - 1");
    auto* wieferich_cmd = scan_cmd->add_subcommand("wieferich", "primes with m_p > 0");
    add_scan_options(reptend_cmd, scan_opts);
    add_scan_options(wieferich_cmd, scan_opts);

    std::string verify_limit;
    auto* verify_cmd = app.add_subcommand("verify", "fast path vs long-division oracle on [1, N]");
    verify_cmd->add_option("--limit", verify_limit)->required();

    std::string bench_limit, bench_samples_text, bench_seed, bench_min = "2";
    auto* bench_cmd = app.add_subcommand("bench", "time the fast path against the oracle");
    bench_cmd->add_option("--limit", bench_limit)->required();
    bench_cmd->add_option("--samples", bench_samples_text)->required();
    bench_cmd->add_option("--seed", bench_seed)->required();
    bench_cmd->add_option("--min", bench_min, "smallest sampled n")->capture_default_str();

    // CLI11 consumes arguments from the back and without the program name.
    std::vector<std::string> reversed;
    if (!args.empty())
        reversed.assign(args.rbegin(), std::prev(args.rend()));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        fmt::print(err, "error:usage: {}\n", e.what());
        return kExitUsage;
    }

    try {
        if (*period_cmd) {
            const u64 n = parse_u64(n_text, "n");
            const PeriodInfo info = period_length(n);
            if (json)
                emit_json(out, envelope("period", Json{{"n", n}}, to_json(info)));
            else
                print_plain(out, info);
        } else if (*expand_cmd) {
            const auto slash = fraction_text.find('/');
            if (slash == std::string::npos)
                throw UsageError(fmt::format("expected q/n, got '{}'", fraction_text));
            const u64 q = parse_u64(fraction_text.substr(0, slash), "q");
            const u64 n = parse_u64(fraction_text.substr(slash + 1), "n");
            const ExpansionInfo e = expand(q, n);
            if (json) {
                emit_json(out, envelope("expand", Json{{"q", q}, {"n", n}}, to_json(e)));
            } else {
                fmt::print(out, "numerator: {}\ndenominator: {}\ninteger_part: {}\n", e.numerator,
                           e.denominator, e.integer_part);
                fmt::print(out, "preperiod_digits:{}\n", optional_suffix(e.preperiod_digits));
                fmt::print(out, "period_digits:{}\n",
                           optional_suffix(truncated(e.period_digits, max_period_digits)));
                fmt::print(out, "period_length: {}\ndecimal: {}\n", e.period_length(),
                           decimal_form(e, max_period_digits));
            }
        } else if (*factor_cmd) {
            const u64 n = parse_u64(n_text, "n");
            const Factorization f = factorize(n);
            if (json)
                emit_json(out, envelope("factor", Json{{"n", n}}, to_json(f)));
            else
                fmt::print(out, "n: {}\nfactors:{}\n", f.n, optional_suffix(factor_text(f)));
        } else if (*record_cmd) {
            const u64 p = parse_u64(p_text, "p");
            const PrimePeriodRecord r = prime_record(p);
            if (json)
                emit_json(out, envelope("record", Json{{"p", p}}, to_json(r)));
            else
                fmt::print(out, "p: {}\nl_p: {}\nm_p: {}\nfull_reptend: {}\nterminating: {}\n", r.p,
                           r.l_p, r.m_p, r.full_reptend, r.terminating);
        } else if (*scan_cmd) {
            const bool reptend = static_cast<bool>(*reptend_cmd);
            const u64 limit = parse_u64(scan_opts.limit, "limit");
            const ScanReport report = reptend ? scan_full_reptend(limit, scan_opts.threads)
                                              : scan_wieferich_m(limit, scan_opts.threads);
            const std::string_view name = reptend ? "scan reptend" : "scan wieferich";
            if (scan_opts.json)
                emit_json(out, envelope(name, Json{{"limit", limit}},
                                        to_json(report, scan_opts.timing)));
            else
                print_plain(out, report, scan_opts.timing);
        } else if (*verify_cmd) {
            const u64 limit = parse_u64(verify_limit, "limit");
            const VerifyResult result = verify_range(limit);
            if (result.first_mismatch) {
                const Mismatch& m = *result.first_mismatch;
                fmt::print(out, "mismatch at n = {}\nfast:\n", m.n);
                print_plain(out, m.fast);
                fmt::print(out, "oracle:\n");
                print_plain(out, m.oracle);
                fmt::print(err, "error:verify_mismatch: fast path and oracle disagree at n = {}\n",
                           m.n);
                return kExitDomain;
            }
            fmt::print(out, "verified n in [1, {}]: {} values checked, 0 mismatches\n", limit,
                       result.checked);
        } else if (*bench_cmd) {
            const u64 limit = parse_u64(bench_limit, "limit");
            const u64 count = parse_u64(bench_samples_text, "samples");
            const u64 seed = parse_u64(bench_seed, "seed");
            const u64 lo = parse_u64(bench_min, "min");
            const u64 hi = std::min(limit, kOracleCap);
            const auto samples = bench_samples(lo, hi, count, seed);
            const BenchResult result = run_bench(samples);
            fmt::print(out, "range: [{}, {}]\nseed: {}\nsamples: {}\n", lo, hi, seed, count);
            fmt::print(out, "sample_set: {}\n", fmt::join(result.samples, " "));
            fmt::print(out, "fast_ms: {:.3f}\nnaive_ms: {:.3f}\nspeedup: {:.1f}\n",
                       result.fast_ms, result.naive_ms, result.speedup());
            fmt::print(out, "disagreements: {}\n", result.disagreements);
            if (result.disagreements != 0) {
                fmt::print(err, "error:verify_mismatch: {} sampled values disagree\n",
                           result.disagreements);
                return kExitDomain;
            }
        }
    } catch (const UsageError& e) {
        fmt::print(err, "error:usage: {}\n", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        fmt::print(err, "error:{}: {}\n", to_string(e.code()), e.what());
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace repdec::cli
