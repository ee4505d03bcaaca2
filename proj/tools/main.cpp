// Command-line front end: Euclidean-ideal-class decisions for real
// biquadratic fields Q(sqrt(p1), sqrt(q1*q2)), genus-field classification,
// quadratic-field invariants, the bundled reference table, and batch scans.

#include "biqeuclid/biquad.hpp"
#include "biqeuclid/euclid.hpp"
#include "biqeuclid/genus.hpp"
#include "biqeuclid/localsym.hpp"
#include "biqeuclid/quadfield.hpp"
#include "biqeuclid/table1.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

using namespace biqeuclid;
using nlohmann::json;

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

struct Options {
    bool json = false;
    bool quiet = false;
};

Integer parse_integer(const std::string& text)
{
    try {
        return Integer(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError("not an integer: " + text);
    }
}

void check_input_bound(const Integer& n)
{
    if (n >= is_prime_limit())
        throw CLI::ValidationError("input exceeds the deterministic primality bound " +
                                   is_prime_limit().str());
}

json genus_json(const GenusVerdict& g)
{
    json j;
    j["elementary"] = g.elementary;
    j["case"] = g.case_label;
    if (g.bullet)
        j["bullet"] = *g.bullet;
    else
        j["bullet"] = nullptr;
    j["orientation"] = {g.orientation.first.str(), g.orientation.second.str()};
    return j;
}

std::string genus_text(const GenusVerdict& g)
{
    std::ostringstream os;
    os << (g.elementary ? "elementary" : "not elementary") << ", case " << g.case_label;
    if (g.bullet)
        os << ", subcase " << *g.bullet;
    os << ", orientation (" << g.orientation.first << ", " << g.orientation.second << ")";
    return os.str();
}

json certificate_json(const DecideCertificate& c)
{
    // class numbers are positive; zero marks "not computed"
    json j;
    j["h0"] = c.h0 > 0 ? json(c.h0.str()) : json(nullptr);
    j["h1"] = c.h1 > 0 ? json(c.h1.str()) : json(nullptr);
    j["h2"] = c.h2 > 0 ? json(c.h2.str()) : json(nullptr);
    j["h0_is_one"] = c.h0_is_one;
    j["h1_pow2"] = c.h1_pow2;
    j["h2_pow2"] = c.h2_pow2;
    j["q_both_1_mod_4"] = c.q_both_1_mod_4;
    j["q_contains_3"] = c.q_contains_3;
    j["applied"] = c.applied;
    j["genus"] = c.genus ? genus_json(*c.genus) : json(nullptr);
    return j;
}

int emit(const Options& opt, const json& j, const std::string& text, int code)
{
    if (opt.json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
    return code;
}

// ---------------------------------------------------------------------- decide

int run_decide(const Options& opt, const std::string& p1s, const std::string& q1s,
               const std::string& q2s)
{
    const Integer p1 = parse_integer(p1s), q1 = parse_integer(q1s), q2 = parse_integer(q2s);
    const Decision dec = decide(p1, q1, q2);

    json j;
    j["command"] = "decide";
    j["p1"] = p1.str();
    j["q1"] = q1.str();
    j["q2"] = q2.str();
    j["verdict"] = to_string(dec.verdict);
    j["certificate"] = certificate_json(dec.certificate);

    std::ostringstream os;
    if (!opt.quiet) {
        os << "triple: (" << p1 << ", " << q1 << ", " << q2 << ")\n";
        if (dec.verdict != Verdict::invalid) {
            const DecideCertificate& c = dec.certificate;
            os << "h(Q(sqrt " << p1 << ")) = " << c.h0;
            if (c.h1 > 0)
                os << ", h(Q(sqrt " << q1 * q2 << ")) = " << c.h1;
            if (c.h2 > 0)
                os << ", h(Q(sqrt " << p1 * q1 * q2 << ")) = " << c.h2;
            os << "\n";
            if (c.genus)
                os << "genus field: " << genus_text(*c.genus) << "\n";
            os << "applied: " << c.applied << "\n";
        } else {
            os << "reason: " << dec.certificate.applied << "\n";
        }
    }
    os << "verdict: " << to_string(dec.verdict) << "\n";

    int code = kExitDecided;
    if (dec.verdict == Verdict::unknown)
        code = kExitUnknown;
    else if (dec.verdict == Verdict::invalid)
        code = kExitUsage;
    return emit(opt, j, os.str(), code);
}

// ----------------------------------------------------------------------- genus

int run_genus(const Options& opt, const std::string& p1s, const std::string& q1s,
              const std::string& q2s)
{
    const Integer p1 = parse_integer(p1s), q1 = parse_integer(q1s), q2 = parse_integer(q2s);
    for (const Integer* x : {&p1, &q1, &q2})
        check_input_bound(*x);
    const GenusVerdict g = classify(BiquadTriple(p1, q1, q2));

    json j;
    j["command"] = "genus";
    j["p1"] = p1.str();
    j["q1"] = q1.str();
    j["q2"] = q2.str();
    j.update(genus_json(g));

    std::ostringstream os;
    os << "genus field of Q(sqrt " << p1 << ", sqrt " << q1 * q2 << "): " << genus_text(g)
       << "\n";
    return emit(opt, j, os.str(), kExitDecided);
}

// ------------------------------------------------------------------------ quad

int run_quad(const Options& opt, const std::string& ms)
{
    const Integer m = parse_integer(ms);
    check_input_bound(m);
    const QuadFieldData data = quad_field_data(m);
    const QuadUnit eps = fundamental_unit(m);

    json j;
    j["command"] = "quad";
    j["m"] = m.str();
    j["D"] = data.D.str();
    j["h"] = data.h.str();
    j["h_narrow"] = data.h_narrow.str();
    j["eps"] = {{"a", eps.a.str()},
                {"b", eps.b.str()},
                {"denom", eps.denom},
                {"norm", eps.norm},
                {"text", to_string(eps)}};

    std::ostringstream os;
    os << "Q(sqrt " << m << "): D = " << data.D << ", h = " << data.h
       << ", h+ = " << data.h_narrow << "\n"
       << "eps = " << to_string(eps) << ", norm " << (eps.norm > 0 ? "+1" : "-1") << "\n";
    return emit(opt, j, os.str(), kExitDecided);
}

// -------------------------------------------------------------------------- hk

int run_hk(const Options& opt, const std::string& p1s, const std::string& q1s,
           const std::string& q2s)
{
    const Integer p1 = parse_integer(p1s), q1 = parse_integer(q1s), q2 = parse_integer(q2s);
    for (const Integer* x : {&p1, &q1, &q2})
        check_input_bound(*x);
    const BiquadTriple t(p1, q1, q2);
    const Integer h0 = class_number(t.p1());
    const Integer h1 = class_number(t.d());
    const Integer h2 = class_number(t.p1() * t.d());
    const UnitIndexResult q = unit_index(t.p1(), t.d());
    const Integer hk = class_number_biquad(t);

    json j;
    j["command"] = "hk";
    j["p1"] = p1.str();
    j["q1"] = q1.str();
    j["q2"] = q2.str();
    j["h0"] = h0.str();
    j["h1"] = h1.str();
    j["h2"] = h2.str();
    j["Q"] = q.Q;
    j["h_K"] = hk.str();
    json sq = json::array();
    for (const auto& e : q.square_products)
        sq.push_back({e[0], e[1], e[2]});
    j["square_products"] = sq;

    std::ostringstream os;
    os << "K = Q(sqrt " << p1 << ", sqrt " << t.d() << ")\n"
       << "h0 = " << h0 << ", h1 = " << h1 << ", h2 = " << h2 << ", Q(K) = " << q.Q << "\n"
       << "h_K = Q*h0*h1*h2/4 = " << hk << "\n";
    return emit(opt, j, os.str(), kExitDecided);
}

// --------------------------------------------------------------------- witness

int run_witness(const Options& opt, const std::string& p1s, const std::string& q1s,
                const std::string& q2s)
{
    const Integer p1 = parse_integer(p1s), q1 = parse_integer(q1s), q2 = parse_integer(q2s);
    for (const Integer* x : {&p1, &q1, &q2})
        check_input_bound(*x);
    const BiquadTriple t(p1, q1, q2);
    try {
        const ProgressionWitness w = progression_witness(t);
        json j;
        j["command"] = "witness";
        j["p1"] = p1.str();
        j["q1"] = q1.str();
        j["q2"] = q2.str();
        j["u"] = w.u.str();
        j["l"] = w.l.str();
        j["checked_prime"] = w.checked_prime.str();
        j["prime_symbols"] = {w.prime_symbols[0], w.prime_symbols[1], w.prime_symbols[2]};

        std::ostringstream os;
        os << "progression: p = " << w.u << " (mod " << w.l << ")\n"
           << "first prime: " << w.checked_prime << " with (p1/p) = " << w.prime_symbols[0]
           << ", (q1/p) = " << w.prime_symbols[1] << ", (q2/p) = " << w.prime_symbols[2] << "\n";
        return emit(opt, j, os.str(), kExitDecided);
    } catch (const std::domain_error& e) {
        json j;
        j["command"] = "witness";
        j["error"] = e.what();
        return emit(opt, j, std::string("witness construction failed: ") + e.what() + "\n",
                    kExitUnknown);
    }
}

// ---------------------------------------------------------------------- table1

int run_table1(const Options& opt, bool verify, bool dump, bool skip_hk,
               const std::string& fixture_path)
{
    std::vector<ReferenceRow> rows;
    try {
        rows = fixture_path.empty() ? reference_table() : parse_reference_csv_file(fixture_path);
    } catch (const ReferenceFormatError& e) {
        std::cerr << "fixture corrupt: " << e.what() << "\n";
        return kExitUsage;
    }

    if (dump || !verify) {
        std::cout << to_csv(rows);
        return kExitDecided;
    }

    std::vector<CellDiff> diffs;
    try {
        diffs = verify_reference_rows(rows, {.check_hk = !skip_hk});
    } catch (const ReferenceFormatError& e) {
        std::cerr << "fixture corrupt: " << e.what() << "\n";
        return kExitUsage;
    }

    json j;
    j["command"] = "table1";
    j["rows"] = rows.size();
    j["checked_hk"] = !skip_hk;
    json mism = json::array();
    for (const CellDiff& d : diffs) {
        mism.push_back({{"row", d.row},
                        {"column", d.column},
                        {"fixture", d.fixture_value},
                        {"computed", d.computed_value}});
    }
    j["mismatches"] = mism;

    std::ostringstream os;
    for (const CellDiff& d : diffs) {
        const ReferenceRow& r = rows[d.row];
        os << "mismatch at row (" << r.p1 << "," << r.q1 << "," << r.q2 << ") column " << d.column
           << ": fixture \"" << d.fixture_value << "\" vs computed \"" << d.computed_value
           << "\"\n";
    }
    if (diffs.empty())
        os << rows.size() << "/" << rows.size() << " rows match\n";
    else
        os << diffs.size() << " cell(s) differ\n";
    return emit(opt, j, os.str(), diffs.empty() ? kExitDecided : kExitMismatch);
}

// ------------------------------------------------------------------------ scan

struct ScanRow {
    std::string csv;
    json record;
};

std::string scan_csv_header()
{
    return reference_csv_header() + ",verdict,case,bullet";
}

ScanRow scan_one(const BiquadTriple& t)
{
    const Decision dec = decide(t);
    const GenusVerdict* g = dec.certificate.genus.has_value() ? &*dec.certificate.genus : nullptr;

    const bool q1_odd = t.q1() != 2;
    const bool q2_odd = t.q2() != 2;
    const std::string sym1 = q1_odd ? std::to_string(jacobi(t.p1(), t.q1()).value()) : "";
    const std::string sym2 = q2_odd ? std::to_string(jacobi(t.p1(), t.q2()).value()) : "";

    const QuadUnit eps = fundamental_unit(t.p1());

    std::string unit_sym;
    if (q1_odd && q2_odd && t.p1() % 4 == 1 && t.q1() % 4 == 1 && sym1 == "1" && sym2 == "-1")
        unit_sym = std::to_string(unit_residue_symbol(t.p1(), t.q1()).value());

    const Integer hk = class_number_biquad(t);

    std::string euclidean;
    if (dec.verdict == Verdict::yes)
        euclidean = "Y";
    else if (dec.verdict == Verdict::no)
        euclidean = "N";

    ScanRow row;
    std::ostringstream os;
    os << t.p1() << ',' << t.q1() << ',' << t.q2() << ',' << hk << ',' << sym1 << ',' << sym2
       << ',' << eps.a << ',' << eps.b << ',' << eps.denom << ',' << unit_sym << ',' << euclidean
       << ',' << to_string(dec.verdict) << ',';
    if (g)
        os << g->case_label;
    os << ',';
    if (g && g->bullet)
        os << *g->bullet;
    row.csv = os.str();

    json& j = row.record;
    j["p1"] = t.p1().str();
    j["q1"] = t.q1().str();
    j["q2"] = t.q2().str();
    j["hK"] = hk.str();
    j["sym1"] = sym1;
    j["sym2"] = sym2;
    j["eps_a"] = eps.a.str();
    j["eps_b"] = eps.b.str();
    j["eps_denom"] = eps.denom;
    j["unit_symbol"] = unit_sym;
    j["euclidean"] = euclidean;
    j["verdict"] = to_string(dec.verdict);
    j["case"] = g ? json(g->case_label) : json(nullptr);
    j["bullet"] = (g && g->bullet) ? json(*g->bullet) : json(nullptr);
    return row;
}

int run_scan(const Options& opt, std::uint64_t p1_max, std::uint64_t q_max,
             const std::string& filter, const std::string& out_path)
{
    if (p1_max < 3 || q_max < 3)
        throw CLI::ValidationError("scan bounds must be >= 3");
    Verdict want = Verdict::invalid; // invalid stands in for "no filter"
    if (filter == "yes")
        want = Verdict::yes;
    else if (filter == "no")
        want = Verdict::no;
    else if (filter == "unknown")
        want = Verdict::unknown;
    else if (filter != "all")
        throw CLI::ValidationError("filter must be yes, no, unknown or all");

    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= std::max(p1_max, q_max); ++n)
        if (is_prime(n))
            primes.push_back(n);

    std::vector<BiquadTriple> triples;
    for (std::uint64_t p1 : primes) {
        if (p1 > p1_max)
            break;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (primes[i] > q_max || primes[i] == p1)
                continue;
            for (std::size_t k = i + 1; k < primes.size(); ++k) {
                if (primes[k] > q_max || primes[k] == p1)
                    continue;
                triples.emplace_back(Integer(p1), Integer(primes[i]), Integer(primes[k]));
            }
        }
    }

    // Evaluate in parallel; emission order stays lexicographic in (p1,q1,q2).
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::optional<ScanRow>> rows(triples.size());
    std::vector<std::future<void>> futures;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= triples.size())
                    return;
                const Decision dec = decide(triples[i]);
                if (want != Verdict::invalid && dec.verdict != want)
                    continue;
                rows[i] = scan_one(triples[i]);
            }
        }));
    }
    for (auto& f : futures)
        f.get();

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return kExitUsage;
        }
        os = &file;
    }

    if (opt.json) {
        json arr = json::array();
        for (const auto& row : rows)
            if (row)
                arr.push_back(row->record);
        *os << arr.dump() << "\n";
    } else {
        *os << scan_csv_header() << "\n";
        for (const auto& row : rows)
            if (row)
                *os << row->csv << "\n";
    }
    os->flush();
    if (os->fail()) {
        std::cerr << "write failed\n";
        return kExitUsage;
    }
    return kExitDecided;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Euclidean ideal classes of real biquadratic fields Q(sqrt(p1), sqrt(q1*q2))"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit one JSON object instead of text");
    app.add_flag("--quiet", opt.quiet, "suppress certificate details");

    std::string p1s, q1s, q2s, ms;

    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("--p1", p1s, "prime p1")->required();
        sub->add_option("--q1", q1s, "prime q1")->required();
        sub->add_option("--q2", q2s, "prime q2")->required();
        sub->fallthrough();
    };

    CLI::App* decide_cmd = app.add_subcommand("decide", "decide the Euclidean-ideal-class verdict");
    add_triple(decide_cmd);

    CLI::App* genus_cmd = app.add_subcommand("genus", "classify the genus field");
    add_triple(genus_cmd);

    CLI::App* quad_cmd = app.add_subcommand("quad", "real quadratic field invariants");
    quad_cmd->add_option("--m", ms, "squarefree radicand > 1")->required();
    quad_cmd->fallthrough();

    CLI::App* hk_cmd = app.add_subcommand("hk", "class number of the biquadratic field");
    add_triple(hk_cmd);

    CLI::App* witness_cmd =
        app.add_subcommand("witness", "arithmetic progression of class-group generators");
    add_triple(witness_cmd);

    bool verify = false, dump = false, skip_hk = false;
    std::string fixture_path;
    CLI::App* table_cmd = app.add_subcommand("table1", "bundled reference table of 26 fields");
    table_cmd->add_flag("--verify", verify, "recompute every derivable column and diff");
    table_cmd->add_flag("--dump", dump, "print the fixture CSV");
    table_cmd->add_flag("--skip-hk", skip_hk, "verify all columns except hK");
    table_cmd->add_option("--fixture", fixture_path, "external fixture CSV to verify");
    table_cmd->fallthrough();

    std::uint64_t p1_max = 0, q_max = 0;
    std::string filter = "all", out_path;
    CLI::App* scan_cmd = app.add_subcommand("scan", "scan triples and emit CSV");
    scan_cmd->add_option("--p1-max", p1_max, "largest p1")->required();
    scan_cmd->add_option("--q-max", q_max, "largest q1, q2")->required();
    scan_cmd->add_option("--filter", filter, "yes, no, unknown or all");
    scan_cmd->add_option("--out", out_path, "output file (default stdout)");
    scan_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(decide_cmd))
            return run_decide(opt, p1s, q1s, q2s);
        if (app.got_subcommand(genus_cmd))
            return run_genus(opt, p1s, q1s, q2s);
        if (app.got_subcommand(quad_cmd))
            return run_quad(opt, ms);
        if (app.got_subcommand(hk_cmd))
            return run_hk(opt, p1s, q1s, q2s);
        if (app.got_subcommand(witness_cmd))
            return run_witness(opt, p1s, q1s, q2s);
        if (app.got_subcommand(table_cmd))
            return run_table1(opt, verify, dump, skip_hk, fixture_path);
        if (app.got_subcommand(scan_cmd))
            return run_scan(opt, p1_max, q_max, filter, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
