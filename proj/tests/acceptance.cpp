// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are zero everywhere (exact rational identities);
// the stated runtime budgets are enforced.

#include "dictionary.hpp"
#include "random_gen.hpp"
#include "serialize.hpp"
#include "special_moulds.hpp"
#include "suites.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

using namespace mouldcalc;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void criterion(int number, const std::string &label, bool passed, double seconds, double budget_seconds,
               const std::string &detail = "")
{
    bool in_budget = budget_seconds <= 0 || seconds < budget_seconds;
    bool ok = passed && in_budget;
    std::ostringstream os;
    os << "criterion " << number << (ok ? " PASS " : " FAIL ") << label;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " [" << seconds << " s";
    if (budget_seconds > 0)
        os << " / budget " << budget_seconds << " s";
    os << "]";
    std::cout << os.str() << "\n";
    if (!passed && !detail.empty())
        std::cout << "    " << detail << "\n";
    if (!in_budget)
        std::cout << "    runtime budget exceeded\n";
    if (!ok)
        ++g_failures;
}

bool run(const std::string &suite, uint64_t seed = 1, int cases = -1, int depth = -1,
         std::string *detail = nullptr)
{
    VerificationReport r = run_suite(SuiteSpec{suite, seed, cases, depth});
    if (!r.ok() && detail)
        *detail = r.text();
    return r.ok();
}

} // namespace

int main()
{
    std::cout << "mouldcalc acceptance suite (exact arithmetic; zero tolerances)\n";

    {
        Timer t;
        std::string detail;
        bool ok = run("pal-golden", 1, -1, 3, &detail);
        criterion(1, "pal golden values, recursion-derived depth-3 sign, depth-3 symmetrality", ok,
                  t.seconds(), 1.0, detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("theorem-6.1", 1, -1, 4, &detail);
        criterion(2, "pal and pil symmetral through depth 4", ok, t.seconds(), 60.0, detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("theorem-3.1", 7, 20, 4, &detail) && run("appendix-A", 7, 20, 4, &detail);
        criterion(3, "alternality closed under lu, arit and ari, 20 seeded pairs, both alphabets", ok,
                  t.seconds(), 0, detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("appendix-B", 11, 20, 4, &detail);
        criterion(4, "mantar-invariance of alternal moulds, operator identity, push orders", ok,
                  t.seconds(), 0, detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("prop-3.5", 5, 10, 3, &detail);
        criterion(5, "swap/ari exchange identity and its push-invariant corollary, 10 pairs", ok,
                  t.seconds(), 0, detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("prop-6.2", 13, 10, 4, &detail);
        criterion(6, "ganit(pic) images of alternal moulds are alternil; e-alternality matches", ok,
                  t.seconds(), 0, detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("fundamental-identity", 17, 10, 3, &detail);
        criterion(7, "fundamental identity, 10 push-symmetrized moulds (depth 3) and constants (depth 4)",
                  ok, t.seconds(), 300.0, detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("lemma-7.1", 1, -1, 4, &detail);
        criterion(8, "constants are fixed through depth 4", ok, t.seconds(), 0, detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("theorem-7.2", 23, 5, 3, &detail);
        criterion(9, "pal transport: round trip and al*al -> al*il classification", ok, t.seconds(), 0,
                  detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("dictionary", 29, 10, -1, &detail);
        criterion(10, "dictionary: ma intertwines the brackets; derivations compose; f_* transcription",
                  ok, t.seconds(), 0, detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("racinet-closure", 1, -1, 8, &detail);
        criterion(11, "double shuffle closure, both routes, weight pairs up to 8", ok, t.seconds(), 300.0,
                  detail);
    }
    {
        Timer t;
        std::string detail;
        bool ok = run("adari-consistency", 31, 5, 3, &detail) && run("ganit-consistency", 31, 5, 3, &detail) &&
                  run("dar-dupal", 1, -1, 4, &detail) && run("twisted-magnus", 31, 3, 4, &detail);
        criterion(12, "consistency reports: adari forms, ganit readings, dar.dupal series, odot sign", ok,
                  t.seconds(), 0, detail);
    }
    {
        Timer t;
        bool ok = true;
        std::string detail;
        // bit-exact serialization over the named fixtures
        Rng rng(2024);
        std::vector<Mould> fixtures = {pal(3), pil(3), dupal(4), pic_mould(3),
                                       random_lfd_mould(rng, Alphabet::u, 3),
                                       random_lfd_mould(rng, Alphabet::v, 3), ma(ds_basis(3)[0])};
        for (const auto &m : fixtures) {
            std::string text = mould_to_text(m);
            if (mould_to_text(mould_from_text(text)) != text) {
                ok = false;
                detail = "serialization roundtrip is not bit-exact";
            }
        }
        NCPoly f3 = ds_basis(3)[0];
        if (ncpoly_to_text(ncpoly_from_text(ncpoly_to_text(f3))) != ncpoly_to_text(f3)) {
            ok = false;
            detail = "ncpoly roundtrip is not bit-exact";
        }
        // identical seeds reproduce identical reports, byte for byte
        for (const char *suite : {"appendix-B", "prop-3.5", "twisted-magnus"}) {
            SuiteSpec spec{suite, 99, 3, 3};
            if (run_suite(spec).text() != run_suite(spec).text() ||
                run_suite(spec).json() != run_suite(spec).json()) {
                ok = false;
                detail = std::string("report for ") + suite + " is not reproducible";
            }
        }
        criterion(13, "bit-exact serialization fixtures; byte-identical reports for identical seeds", ok,
                  t.seconds(), 0, detail);
    }

    if (g_failures == 0)
        std::cout << "acceptance: all 13 criteria passed\n";
    else
        std::cout << "acceptance: " << g_failures << " criterion(s) FAILED\n";
    return g_failures == 0 ? 0 : 1;
}
