// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is taken from $BIQEUCLID_CLI.

#include "biqeuclid/biquad.hpp"
#include "biqeuclid/euclid.hpp"
#include "biqeuclid/genus.hpp"
#include "biqeuclid/localsym.hpp"
#include "biqeuclid/quadfield.hpp"
#include "biqeuclid/table1.hpp"

#include "oracles.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace biqeuclid;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(const std::string& name, bool pass, double elapsed, double budget,
            const std::string& detail = "")
{
    const bool in_budget = budget <= 0 || elapsed < budget;
    const bool ok = pass && in_budget;
    if (!ok)
        ++g_failures;
    std::printf("[%s] %s (%.2f s", ok ? "PASS" : "FAIL", name.c_str(), elapsed);
    if (budget > 0)
        std::printf(" < %.0f s budget", budget);
    std::printf(")");
    if (!detail.empty())
        std::printf(" %s", detail.c_str());
    if (pass && !in_budget)
        std::printf(" [over time budget]");
    std::printf("\n");
    std::fflush(stdout);
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const char* cli = std::getenv("BIQEUCLID_CLI");
    if (!cli) {
        std::fprintf(stderr, "BIQEUCLID_CLI is not set\n");
        std::exit(2);
    }
    const std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::fprintf(stderr, "popen failed\n");
        std::exit(2);
    }
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// --------------------------------------------------------------- criteria 1+2

void criterion_1_and_2()
{
    Timer t;
    const RunResult r = run_cli("table1 --verify");
    const double elapsed = t.seconds();
    const bool clean = r.exit_code == 0 && r.out.find("26/26 rows match") != std::string::npos;
    report("criterion 1: table1 --verify Euclidean column, 26/26 rows", clean, elapsed, 10.0);

    // spot-check the named row alongside the clean full verify
    const QuadUnit eps = fundamental_unit(29);
    const bool row_ok = jacobi(29, 53) == 1 && jacobi(29, 37) == -1 && eps.a == 5 &&
                        eps.b == 1 && eps.denom == 2 && unit_residue_symbol(29, 53) == -1;
    report("criterion 2: symbol, unit and unit-symbol columns, 26/26 rows", clean && row_ok,
           elapsed, 0.0);
}

void criterion_3()
{
    Timer t;
    bool ok = true;
    std::string detail;
    for (const ReferenceRow& row : reference_table()) {
        const Integer hk = class_number_biquad(BiquadTriple(row.p1, row.q1, row.q2));
        if (hk != row.h_k) {
            ok = false;
            detail = "first mismatch at (" + row.p1.str() + "," + row.q1.str() + "," +
                     row.q2.str() + ")";
            break;
        }
    }
    report("criterion 3: h_K via unit index and class-number product, 26/26 rows", ok,
           t.seconds(), 60.0, detail);
}

void criterion_4()
{
    Timer t;
    const Decision d = decide(BiquadTriple(2, 5, 7));
    report("criterion 4: decide(2,5,7) = Yes", d.verdict == Verdict::yes, t.seconds(), 0.0);
}

void criterion_5()
{
    Timer t;
    const GenusVerdict g = classify(BiquadTriple(5, 3, 29));
    report("criterion 5: classify(5,3,29) non-elementary", !g.elementary, t.seconds(), 0.0);
}

// ----------------------------------------------------------------- criterion 6

void criterion_6a()
{
    Timer t;
    std::mt19937_64 rng(101);
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
        Integer num = Integer(rng() % 9999) + 1;
        Integer den = Integer(rng() % 9999) + 1;
        if (rng() & 1)
            num = -num;
        Integer num2 = Integer(rng() % 9999) + 1;
        Integer den2 = Integer(rng() % 9999) + 1;
        if (rng() & 1)
            num2 = -num2;
        ok = product_over_places(Rational(num, den), Rational(num2, den2)) == 1;
    }
    report("criterion 6a: Hilbert product formula, 500 random pairs", ok, t.seconds(), 120.0);
}

void criterion_6b()
{
    Timer t;
    bool ok = true;
    const auto primes = oracles::primes_below(200);
    for (std::uint64_t p : primes) {
        if (p == 2)
            continue;
        for (std::uint64_t q : primes) {
            if (q == 2 || q == p)
                continue;
            const int lhs = jacobi(p, q).value() * jacobi(q, p).value();
            const int rhs = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
            if (lhs != rhs)
                ok = false;
        }
    }
    report("criterion 6b: quadratic reciprocity, prime pairs below 200", ok, t.seconds(), 120.0);
}

void criterion_6c()
{
    Timer t;
    bool ok = true;
    for (std::uint64_t d : oracles::squarefree_below(300)) {
        const auto factors = detail::factorize(Integer(d));
        bool expected_odd = false;
        if (factors.size() == 1) {
            expected_odd = true;
        } else if (factors.size() == 2) {
            const Integer& p = factors[0].first;
            const Integer& q = factors[1].first;
            expected_odd = (p == 2) ? (q % 4 == 3) : (p % 4 == 3 && q % 4 == 3);
        }
        if ((class_number(d) % 2 == 1) != expected_odd)
            ok = false;
    }
    report("criterion 6c: class-number parity criterion, squarefree d < 300", ok, t.seconds(),
           120.0);
}

void criterion_6d()
{
    Timer t;
    bool ok = true;
    for (std::uint64_t m : oracles::squarefree_below(500))
        if (class_number(m) != oracles::analytic_class_number(m))
            ok = false;
    report("criterion 6d: exact vs analytic class number, squarefree m < 500", ok, t.seconds(),
           120.0);
}

void criterion_6e()
{
    Timer t;
    std::mt19937_64 rng(202);
    const auto primes = oracles::primes_below(2000);
    std::vector<std::uint64_t> ones;
    for (std::uint64_t p : primes)
        if (p % 4 == 1)
            ones.push_back(p);
    bool ok = true;
    int done = 0;
    while (done < 100) {
        const Integer p1 = ones[rng() % ones.size()];
        const Integer q = ones[rng() % ones.size()];
        if (p1 == q || !(jacobi(p1, q) == 1))
            continue;
        const QuadUnit eps = fundamental_unit(p1);
        const Integer s = *sqrt_mod_prime(p1, q);
        const Integer inv_denom = mod_inverse(Integer(eps.denom), q);
        const SymbolValue v1 = jacobi(mod_floor((eps.a + eps.b * s) * inv_denom, q), q);
        const SymbolValue v2 = jacobi(mod_floor((eps.a + eps.b * (q - s)) * inv_denom, q), q);
        if (!(v1 == v2) || !(unit_residue_symbol(p1, q) == v1))
            ok = false;
        ++done;
    }
    report("criterion 6e: unit-symbol root independence, 100 valid pairs", ok, t.seconds(),
           120.0);
}

void criterion_6f()
{
    Timer t;
    const auto primes = oracles::primes_below(150);
    std::vector<std::array<std::uint64_t, 3>> triples;
    for (std::uint64_t p1 : primes)
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (primes[i] == p1)
                continue;
            for (std::size_t k = i + 1; k < primes.size(); ++k) {
                if (primes[k] == p1)
                    continue;
                triples.push_back({p1, primes[i], primes[k]});
            }
        }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> ok{true};
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> futures;
    for (unsigned w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= triples.size())
                    return;
                const auto& tr = triples[i];
                const BiquadTriple a(tr[0], tr[1], tr[2]);
                const BiquadTriple b(tr[0], tr[2], tr[1]);
                const GenusVerdict ga = classify(a);
                const GenusVerdict gb = classify(b);
                if (ga.elementary != gb.elementary)
                    ok = false;
                const Decision da = decide(a);
                const Decision db = decide(b);
                if (da.verdict != db.verdict)
                    ok = false;
            }
        }));
    for (auto& f : futures)
        f.get();
    std::ostringstream detail;
    detail << "(" << triples.size() << " ordered pairs of triples)";
    report("criterion 6f: decide/classify symmetry under q-swap, entries < 150", ok.load(),
           t.seconds(), 120.0, detail.str());
}

void criterion_6g()
{
    Timer t;
    // 50 distinct Yes-triples with odd entries, smallest first
    const auto primes = oracles::primes_below(120);
    std::vector<BiquadTriple> yes;
    for (std::size_t a = 1; a < primes.size() && yes.size() < 50; ++a)
        for (std::size_t b = 1; b < primes.size() && yes.size() < 50; ++b) {
            if (b == a)
                continue;
            for (std::size_t c = b + 1; c < primes.size() && yes.size() < 50; ++c) {
                if (c == a)
                    continue;
                BiquadTriple t3(primes[a], primes[b], primes[c]);
                if (decide(t3).verdict == Verdict::yes)
                    yes.push_back(std::move(t3));
            }
        }

    bool ok = yes.size() == 50;
    for (const BiquadTriple& t3 : yes) {
        const ProgressionWitness w = progression_witness(t3);
        namespace mp = boost::multiprecision;
        if (mp::gcd(w.u, w.l) != 1 || mp::gcd((w.u - 1) / 2, w.l) != 1 || w.u % 4 != 3)
            ok = false;
        if (w.l != mp::lcm(Integer(16), conductor_biquad(t3)))
            ok = false;
        if (w.u % t3.p1() == 1 || w.u % t3.q1() == 1 || w.u % t3.q2() == 1)
            ok = false;
        int found = 0;
        for (Integer cand = w.u; found < 3; cand += w.l) {
            if (cand < 2 || !is_prime(cand))
                continue;
            ++found;
            if (!(jacobi(t3.p1(), cand) == 1) || !(jacobi(t3.q1(), cand) == -1) ||
                !(jacobi(t3.q2(), cand) == -1))
                ok = false;
        }
    }
    report("criterion 6g: witness postconditions + first three progression primes, 50 triples",
           ok, t.seconds(), 120.0);
}

// ----------------------------------------------------------------- criterion 7

void criterion_7()
{
    Timer t;
    const auto& rows = reference_table();
    const char* columns[] = {"p1",    "q1",    "q2",        "hK",          "sym1",     "sym2",
                             "eps_a", "eps_b", "eps_denom", "unit_symbol", "euclidean"};
    bool ok = true;
    std::string detail;

    // every one of the 26*11 cells, through the library verification path
    for (std::size_t r = 0; r < rows.size() && ok; ++r) {
        for (const char* col : columns) {
            auto fixture = rows;
            ReferenceRow& row = fixture[r];
            const std::string c = col;
            if (c == "p1")
                row.p1 += 2;
            else if (c == "q1")
                row.q1 += 2;
            else if (c == "q2")
                row.q2 += 2;
            else if (c == "hK")
                row.h_k *= 2;
            else if (c == "sym1")
                row.sym1 = -row.sym1;
            else if (c == "sym2")
                row.sym2 = -row.sym2;
            else if (c == "eps_a")
                row.eps_a += 1;
            else if (c == "eps_b")
                row.eps_b += 1;
            else if (c == "eps_denom")
                row.eps_denom = row.eps_denom == 2 ? 1 : 2;
            else if (c == "unit_symbol")
                row.unit_symbol = row.unit_symbol ? std::optional<int>() : std::optional<int>(-1);
            else
                row.euclidean = !row.euclidean;

            const auto diffs = verify_reference_rows(fixture, {.check_hk = true});
            bool named = false;
            for (const CellDiff& d : diffs)
                if (d.row == r && d.column == c)
                    named = true;
            if (!named) {
                ok = false;
                detail = "cell (" + std::to_string(r) + ", " + c + ") not flagged";
                break;
            }
        }
    }

    // one CLI round-trip per column, exercising the exit code contract
    for (std::size_t i = 0; i < std::size(columns) && ok; ++i) {
        auto fixture = rows;
        ReferenceRow& row = fixture[i % rows.size()];
        const std::string c = columns[i];
        if (c == "p1")
            row.p1 += 2;
        else if (c == "q1")
            row.q1 += 2;
        else if (c == "q2")
            row.q2 += 2;
        else if (c == "hK")
            row.h_k *= 2;
        else if (c == "sym1")
            row.sym1 = -row.sym1;
        else if (c == "sym2")
            row.sym2 = -row.sym2;
        else if (c == "eps_a")
            row.eps_a += 1;
        else if (c == "eps_b")
            row.eps_b += 1;
        else if (c == "eps_denom")
            row.eps_denom = row.eps_denom == 2 ? 1 : 2;
        else if (c == "unit_symbol")
            row.unit_symbol = row.unit_symbol ? std::optional<int>() : std::optional<int>(-1);
        else
            row.euclidean = !row.euclidean;

        const std::string path = "/tmp/biqeuclid_acceptance_mut.csv";
        std::ofstream f(path);
        f << to_csv(fixture);
        f.close();
        const RunResult res = run_cli("table1 --verify --fixture " + path);
        if (res.exit_code == 0 || res.out.find("column " + c) == std::string::npos) {
            ok = false;
            detail = "CLI did not flag column " + c;
        }
    }
    report("criterion 7: single-cell fault injection, 286 cells + CLI per column", ok,
           t.seconds(), 0.0, detail);
}

} // namespace

int main()
{
    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6a();
    criterion_6b();
    criterion_6c();
    criterion_6d();
    criterion_6e();
    criterion_6f();
    criterion_6g();
    criterion_7();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
