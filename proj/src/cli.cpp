#include "congruent/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "congruent/census.hpp"
#include "congruent/errors.hpp"
#include "congruent/families.hpp"
#include "congruent/plmap.hpp"
#include "congruent/sequences.hpp"

namespace congruent::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Params {
    std::string family;
    long n = 0;
    long m = 0;
    long j = 0;
};

struct Summary {
    bool all_pass = true;
    std::optional<long> first_failure;
};

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json seq_parameters(const SequenceSpec& spec) {
    json p;
    p["family"] = to_string(spec.family);
    if (spec.family == SeqFamily::C) p["j"] = spec.j;
    if (spec.family == SeqFamily::C || spec.family == SeqFamily::D) p["m"] = spec.m;
    p["n"] = spec.n;
    return p;
}

json summary_json(const Summary& s, Clock::time_point start) {
    json j;
    j["all_pass"] = s.all_pass;
    j["first_failure"] = s.first_failure ? json(*s.first_failure) : json(nullptr);
    j["runtime_ms"] = elapsed_ms(start);
    return j;
}

void add_family_options(CLI::App* cmd, Params& p) {
    cmd->add_option("--n", p.n, "Family parameter n");
    cmd->add_option("--m", p.m, "Family parameter m");
    cmd->add_option("--j", p.j, "Family parameter j");
}

IntRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + text + "' (expected lo..hi or a single integer)");
    }
}

struct OracleTarget {
    std::string label;
    PLMap map;
    Sign sign;
};

std::string with_n(const std::string& prefix, long n) { return prefix + "n=" + std::to_string(n) + ")"; }

// The maps whose solution counts the sequence claims to give.
std::vector<OracleTarget> oracle_targets(const SequenceSpec& spec) {
    std::vector<OracleTarget> out;
    switch (spec.family) {
        case SeqFamily::A:
            if (spec.n == 3) {
                out.push_back({"base2", make_base_map(), Sign::Plus});
            } else {
                for (long m = 2; m < spec.n - 1; ++m)
                    out.push_back({with_n("fmn(m=" + std::to_string(m) + ",", spec.n), make_fmn(m, spec.n), Sign::Plus});
            }
            if (spec.n % 2 == 0 && spec.n >= 4)
                out.push_back({with_n("pn(", spec.n / 2), make_pn(spec.n / 2), Sign::Plus});
            break;
        case SeqFamily::B: out.push_back({with_n("gn(", spec.n), make_gn(spec.n), Sign::Plus}); break;
        case SeqFamily::C:
            out.push_back({with_n("hjmn(j=" + std::to_string(spec.j) + ",m=" + std::to_string(spec.m) + ",", spec.n),
                           make_hjmn(spec.j, spec.m, spec.n), Sign::Plus});
            break;
        case SeqFamily::S: out.push_back({with_n("pn(", spec.n), make_pn(spec.n), Sign::Minus}); break;
        case SeqFamily::D: break;
    }
    return out;
}

void write_reports_csv(std::ostream& out, const std::vector<CensusReport>& rows) {
    out << "k,phi,operator_value,modulus,quotient,pass\n";
    for (const auto& r : rows)
        out << r.k << ',' << r.phi_value.get_str() << ',' << r.operator_value.get_str() << ',' << r.modulus
            << ',' << r.quotient.get_str() << ',' << (r.pass ? "true" : "false") << '\n';
}

json reports_json(const std::vector<CensusReport>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["k"] = r.k;
        j["phi"] = r.phi_value.get_str();
        j["operator_value"] = r.operator_value.get_str();
        j["modulus"] = r.modulus;
        j["quotient"] = r.quotient.get_str();
        j["pass"] = r.pass;
        arr.push_back(std::move(j));
    }
    return arr;
}

Summary summarize(const std::vector<CensusReport>& rows) {
    Summary s;
    for (const auto& r : rows) {
        if (!r.pass) {
            s.all_pass = false;
            s.first_failure = static_cast<long>(r.k);
            break;
        }
    }
    return s;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw UsageError("unsupported format '" + format + "'");
}

// ---- seq -------------------------------------------------------------------

int cmd_seq(const Params& p, long K, const std::string& format, std::ostream& out) {
    const auto start = Clock::now();
    check_format(format, {"json", "csv", "bfile"});
    const auto spec = make_spec({parse_seq_family(p.family), p.n, p.m, p.j});
    const auto terms = spec.terms(K);
    if (format == "bfile") {
        for (std::size_t i = 0; i < terms.size(); ++i) out << i + 1 << ' ' << terms[i].get_str() << '\n';
    } else if (format == "csv") {
        out << "k,value\n";
        for (std::size_t i = 0; i < terms.size(); ++i) out << i + 1 << ',' << terms[i].get_str() << '\n';
    } else {
        json rec;
        rec["command"] = "seq";
        rec["parameters"] = seq_parameters(spec);
        rec["parameters"]["K"] = K;
        json rows = json::array();
        for (std::size_t i = 0; i < terms.size(); ++i) rows.push_back({{"k", i + 1}, {"value", terms[i].get_str()}});
        rec["rows"] = std::move(rows);
        rec["summary"] = summary_json({}, start);
        out << rec.dump(2) << '\n';
    }
    return kSuccess;
}

// ---- count -----------------------------------------------------------------

int cmd_count(const Params& p, long k, int sign_value, const IterateOptions& opts, const std::string& format,
              std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    check_format(format, {"json", "text"});
    if (sign_value != 1 && sign_value != -1) throw UsageError("--sign must be 1 or -1");
    const Sign sign = sign_value == 1 ? Sign::Plus : Sign::Minus;
    const PLMap map = make_map({parse_map_family(p.family), p.n, p.m, p.j});
    try {
        const Int count = count_solutions(map, static_cast<int>(k), sign, opts);
        if (format == "text") {
            out << count.get_str() << '\n';
        } else {
            json rec;
            rec["command"] = "count";
            rec["parameters"] = {{"map", p.family}, {"n", p.n},       {"m", p.m},
                                 {"j", p.j},          {"k", k},         {"sign", sign_value},
                                 {"skip_degenerate", opts.degenerate == Degenerate::Skip}};
            rec["rows"] = json::array({{{"k", k}, {"count", count.get_str()}}});
            rec["summary"] = summary_json({}, start);
            out << rec.dump(2) << '\n';
        }
        return kSuccess;
    } catch (const InfiniteSolutions& e) {
        err << "error: infinitely many solutions; witness interval [" << e.witness_lo().get_str() << ", "
            << e.witness_hi().get_str() << "]\n";
        return kVerificationFailure;
    }
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
    std::string conjecture;
    std::string op = "phi1";
    long K = 100;
    long oracle_depth = 8;
    std::string q = "0..3";
    std::string r = "0..3";
    std::string s = "0..3";
    std::size_t max_pieces = IterateOptions{}.max_pieces;
    bool skip_degenerate = false;
    std::string format = "json";
};

int verify_qrs(const Params& p, const VerifyOptions& v, std::ostream& out) {
    const auto start = Clock::now();
    const auto findings = explore_qrs(p.n, parse_range(v.q), parse_range(v.r), parse_range(v.s), v.K);
    std::size_t holding = 0;
    for (const auto& f : findings) holding += f.holds ? 1 : 0;
    if (v.format == "csv") {
        out << "q,r,s,holds,first_failure_k\n";
        for (const auto& f : findings)
            out << f.triple.q << ',' << f.triple.r << ',' << f.triple.s << ',' << (f.holds ? "true" : "false") << ','
                << (f.first_failure_k ? std::to_string(*f.first_failure_k) : "") << '\n';
        return kSuccess;
    }
    json rec;
    rec["command"] = "verify";
    rec["parameters"] = {{"conjecture", "qrs"}, {"n", p.n}, {"q", v.q}, {"r", v.r}, {"s", v.s}, {"K", v.K}};
    json rows = json::array();
    for (const auto& f : findings)
        rows.push_back({{"q", f.triple.q},
                        {"r", f.triple.r},
                        {"s", f.triple.s},
                        {"holds", f.holds},
                        {"first_failure_k", f.first_failure_k ? json(*f.first_failure_k) : json(nullptr)}});
    rec["rows"] = std::move(rows);
    Summary s;
    s.all_pass = holding == findings.size();
    auto summary = summary_json(s, start);
    summary["triples"] = findings.size();
    summary["holding"] = holding;
    rec["summary"] = std::move(summary);
    out << rec.dump(2) << '\n';
    return kSuccess;
}

int verify_family(const Params& p, const VerifyOptions& v, bool conjecture, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    const auto spec = make_spec({parse_seq_family(p.family), p.n, p.m, p.j});
    const Operator op = v.op == "phi2" ? Operator::Phi2 : Operator::Phi1;
    if (v.K < 1) throw UsageError("--K must be >= 1");
    if (v.oracle_depth < 0) throw UsageError("--oracle-depth must be >= 0");

    json oracle = json::array();
    bool oracle_ok = true;
    if (!conjecture && v.oracle_depth > 0) {
        const auto expected = spec.terms(v.oracle_depth);
        IterateOptions opts;
        opts.max_pieces = v.max_pieces;
        if (v.skip_degenerate) opts.degenerate = Degenerate::Skip;
        for (const auto& t : oracle_targets(spec)) {
            json entry = {{"map", t.label}, {"sign", static_cast<int>(t.sign)}, {"depth", v.oracle_depth}};
            bool matched = false;
            try {
                std::optional<long> mismatch;
                const auto got = count_solutions_through(t.map, static_cast<int>(v.oracle_depth), t.sign, opts);
                for (std::size_t i = 0; i < got.size(); ++i)
                    if (got[i] != expected[i]) {
                        mismatch = static_cast<long>(i + 1);
                        break;
                    }
                matched = !mismatch;
                entry["match"] = matched;
                entry["first_mismatch"] = mismatch ? json(*mismatch) : json(nullptr);
                if (mismatch) err << "oracle mismatch on " << t.label << " at k = " << *mismatch << '\n';
            } catch (const InfiniteSolutions& e) {
                entry["match"] = false;
                entry["infinite_witness"] = {e.witness_lo().get_str(), e.witness_hi().get_str()};
                err << "oracle on " << t.label << ": " << e.what() << '\n';
            }
            oracle_ok = oracle_ok && matched;
            oracle.push_back(std::move(entry));
        }
    }

    const auto reports = verify_congruence(spec, op, v.K);
    Summary s = summarize(reports);
    if (!s.all_pass && !conjecture)
        err << "congruence fails for " << spec.name() << " at k = " << *s.first_failure << '\n';

    if (v.format == "csv") {
        write_reports_csv(out, reports);
    } else {
        json rec;
        rec["command"] = "verify";
        rec["parameters"] = seq_parameters(spec);
        rec["parameters"]["operator"] = v.op;
        rec["parameters"]["K"] = v.K;
        rec["parameters"]["oracle_depth"] = v.oracle_depth;
        rec["parameters"]["status"] = conjecture ? "conjecture" : "proved";
        rec["oracle"] = std::move(oracle);
        rec["rows"] = reports_json(reports);
        auto summary = summary_json(s, start);
        summary["oracle_pass"] = oracle_ok;
        rec["summary"] = std::move(summary);
        out << rec.dump(2) << '\n';
    }
    if (conjecture) return kSuccess;
    return s.all_pass && oracle_ok ? kSuccess : kVerificationFailure;
}

int cmd_verify(const Params& p, const VerifyOptions& v, std::ostream& out, std::ostream& err) {
    check_format(v.format, {"json", "csv"});
    if (v.op != "phi1" && v.op != "phi2") throw UsageError("--operator must be phi1 or phi2");
    if (!v.conjecture.empty() && !p.family.empty()) throw UsageError("give either --family or --conjecture");
    if (v.conjecture == "qrs") return verify_qrs(p, v, out);
    if (v.conjecture == "phi1-on-s") {
        Params sp = p;
        sp.family = "s";
        VerifyOptions sv = v;
        sv.op = "phi1";
        return verify_family(sp, sv, true, out, err);
    }
    if (!v.conjecture.empty()) throw UsageError("unknown conjecture '" + v.conjecture + "' (expected qrs or phi1-on-s)");
    if (p.family.empty()) throw UsageError("verify needs --family or --conjecture");

    const SeqFamily fam = parse_seq_family(p.family);
    if (v.op == "phi2" && fam != SeqFamily::S) throw UsageError("phi2 applies to the s-family only");
    // Φ1 on the s-family is only an empirical observation.
    const bool conjecture = fam == SeqFamily::S && v.op == "phi1";
    return verify_family(p, v, conjecture, out, err);
}

// ---- gfcheck ---------------------------------------------------------------

int cmd_gfcheck(const Params& p, long K, const std::string& format, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    check_format(format, {"json", "csv"});
    const auto spec = make_spec({parse_seq_family(p.family), p.n, p.m, p.j});
    const auto gf = gf_of(spec);
    const auto series = series_expand(gf.numerator, gf.denominator, K);
    const auto terms = spec.terms(K);

    Summary s;
    for (long k = 1; k <= K; ++k)
        if (series[static_cast<std::size_t>(k - 1)] != terms[static_cast<std::size_t>(k - 1)]) {
            s.all_pass = false;
            s.first_failure = k;
            break;
        }

    json printed;
    if (spec.family == SeqFamily::S && spec.n <= 3) {
        const Poly as_printed = s_numerator_as_printed(spec.n);
        const bool agrees = as_printed == gf.numerator;
        printed["printed_numerator"] = as_printed.to_string();
        printed["computed_numerator"] = gf.numerator.to_string();
        printed["printed_matches"] = agrees;
        if (agrees) {
            printed["note"] = "printed special-case numerator confirmed";
        } else {
            const auto alt = series_expand(as_printed, gf.denominator, K);
            long first = 0;
            for (long k = 1; k <= K && first == 0; ++k)
                if (alt[static_cast<std::size_t>(k - 1)] != terms[static_cast<std::size_t>(k - 1)]) first = k;
            printed["printed_first_mismatch"] = first == 0 ? json(nullptr) : json(first);
            printed["note"] = "printed special-case numerator " + as_printed.to_string() +
                              " does not reproduce the sequence; using computed numerator " +
                              gf.numerator.to_string();
            err << "note: " << printed["note"].get<std::string>() << '\n';
        }
    }

    if (format == "csv") {
        out << "k,series,sequence,match\n";
        for (long k = 1; k <= K; ++k) {
            const auto i = static_cast<std::size_t>(k - 1);
            out << k << ',' << series[i].get_str() << ',' << terms[i].get_str() << ','
                << (series[i] == terms[i] ? "true" : "false") << '\n';
        }
    } else {
        json rec;
        rec["command"] = "gfcheck";
        rec["parameters"] = seq_parameters(spec);
        rec["parameters"]["K"] = K;
        rec["numerator"] = gf.numerator.to_string();
        rec["denominator"] = gf.denominator.to_string();
        if (!printed.is_null()) rec["special_case"] = std::move(printed);
        json rows = json::array();
        for (long k = 1; k <= K; ++k) {
            const auto i = static_cast<std::size_t>(k - 1);
            rows.push_back({{"k", k},
                            {"series", series[i].get_str()},
                            {"sequence", terms[i].get_str()},
                            {"match", series[i] == terms[i]}});
        }
        rec["rows"] = std::move(rows);
        rec["summary"] = summary_json(s, start);
        out << rec.dump(2) << '\n';
    }
    if (!s.all_pass) {
        err << "generating function differs from the sequence at k = " << *s.first_failure << '\n';
        return kVerificationFailure;
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Periodic-point counts and congruence identities for piecewise-linear interval maps",
                 "congruent"};
    app.require_subcommand(1);

    Params seq_p;
    long seq_k = 10;
    std::string seq_format = "json";
    auto* seq = app.add_subcommand("seq", "Print terms of a sequence family");
    seq->add_option("--family", seq_p.family, "a, b, c, d or s")->required();
    add_family_options(seq, seq_p);
    seq->add_option("--k", seq_k, "Number of terms");
    seq->add_option("--format", seq_format, "json, csv or bfile");

    Params count_p;
    long count_k = 1;
    int count_sign = 1;
    IterateOptions count_opts;
    bool count_skip = false;
    std::string count_format = "json";
    auto* count = app.add_subcommand("count", "Count solutions of f^k(x) = x or f^k(x) = -x");
    count->add_option("--map", count_p.family, "base2, fmn, gn, hjmn or pn")->required();
    add_family_options(count, count_p);
    count->add_option("--k", count_k, "Iterate");
    count->add_option("--sign", count_sign, "1 for f^k(x) = x, -1 for f^k(x) = -x");
    count->add_option("--max-pieces", count_opts.max_pieces, "Abort past this many pieces");
    count->add_flag("--skip-degenerate", count_skip, "Ignore pieces that solve the equation identically");
    count->add_option("--format", count_format, "json or text");

    Params verify_p;
    VerifyOptions verify_o;
    auto* verify = app.add_subcommand("verify", "Check oracle counts and congruences for a family or conjecture");
    verify->add_option("--family", verify_p.family, "a, b, c, d or s");
    verify->add_option("--conjecture", verify_o.conjecture, "qrs or phi1-on-s");
    add_family_options(verify, verify_p);
    verify->add_option("--K", verify_o.K, "Check k = 1..K");
    verify->add_option("--operator", verify_o.op, "phi1 or phi2");
    verify->add_option("--oracle-depth", verify_o.oracle_depth, "Compare against map counts for k <= depth");
    verify->add_option("--q", verify_o.q, "q range lo..hi");
    verify->add_option("--r", verify_o.r, "r range lo..hi");
    verify->add_option("--s", verify_o.s, "s range lo..hi");
    verify->add_option("--max-pieces", verify_o.max_pieces, "Abort past this many pieces");
    verify->add_flag("--skip-degenerate", verify_o.skip_degenerate,
                     "Oracle ignores pieces that solve the equation identically");
    verify->add_option("--format", verify_o.format, "json or csv");

    Params gf_p;
    long gf_k = 50;
    std::string gf_format = "json";
    auto* gfcheck = app.add_subcommand("gfcheck", "Expand a generating function and compare with the sequence");
    gfcheck->add_option("--family", gf_p.family, "a, b, c, d or s")->required();
    add_family_options(gfcheck, gf_p);
    gfcheck->add_option("--K", gf_k, "Number of terms");
    gfcheck->add_option("--format", gf_format, "json or csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*seq) return cmd_seq(seq_p, seq_k, seq_format, out);
        if (*count) {
            if (count_skip) count_opts.degenerate = Degenerate::Skip;
            return cmd_count(count_p, count_k, count_sign, count_opts, count_format, out, err);
        }
        if (*verify) return cmd_verify(verify_p, verify_o, out, err);
        if (*gfcheck) return cmd_gfcheck(gf_p, gf_k, gf_format, out, err);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResourceGuard;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InfiniteSolutions& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    }
    return kUsageError;
}

}  // namespace congruent::cli
