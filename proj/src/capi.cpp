#include "mouldcalc.h"

#include "dictionary.hpp"
#include "serialize.hpp"
#include "special_moulds.hpp"
#include "suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

using namespace mouldcalc;

struct mc_mould {
    Mould value;
};

struct mc_ncpoly {
    NCPoly value;
};

namespace {

thread_local std::string g_last_error;

mc_status fail(mc_status code, const std::string &message)
{
    g_last_error = message;
    return code;
}

template <typename Fn> mc_status guarded(Fn &&fn)
{
    try {
        return fn();
    } catch (const ParseError &e) {
        return fail(MC_ERR_PARSE, e.what());
    } catch (const DomainError &e) {
        return fail(MC_ERR_DOMAIN, e.what());
    } catch (const std::exception &e) {
        return fail(MC_ERR_DOMAIN, e.what());
    }
}

char *dup_string(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mc_status require(bool ok, const char *what)
{
    return ok ? MC_OK : fail(MC_ERR_ARGUMENT, what);
}

} // namespace

extern "C" {

const char *mc_version(void) { return "mouldcalc 1.0.0"; }

const char *mc_last_error(void) { return g_last_error.c_str(); }

void mc_string_free(char *s) { std::free(s); }
void mc_mould_free(mc_mould *m) { delete m; }
void mc_ncpoly_free(mc_ncpoly *f) { delete f; }

mc_status mc_mould_parse(const char *text, mc_mould **out)
{
    if (mc_status st = require(text && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_mould{mould_from_text(text)};
        return MC_OK;
    });
}

mc_status mc_mould_to_text(const mc_mould *m, char **out)
{
    if (mc_status st = require(m && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = dup_string(mould_to_text(m->value));
        return MC_OK;
    });
}

mc_status mc_mould_read_file(const char *path, mc_mould **out)
{
    if (mc_status st = require(path && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        std::string text;
        try {
            text = read_file(path);
        } catch (const ParseError &e) {
            return fail(MC_ERR_IO, e.what());
        }
        *out = new mc_mould{mould_from_text(text)};
        return MC_OK;
    });
}

mc_status mc_mould_write_file(const mc_mould *m, const char *path)
{
    if (mc_status st = require(m && path, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        try {
            write_file(path, mould_to_text(m->value));
        } catch (const ParseError &e) {
            return fail(MC_ERR_IO, e.what());
        }
        return MC_OK;
    });
}

mc_status mc_ncpoly_parse(const char *text, mc_ncpoly **out)
{
    if (mc_status st = require(text && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_ncpoly{ncpoly_from_text(text)};
        return MC_OK;
    });
}

mc_status mc_ncpoly_to_text(const mc_ncpoly *f, char **out)
{
    if (mc_status st = require(f && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = dup_string(ncpoly_to_text(f->value));
        return MC_OK;
    });
}

mc_status mc_ncpoly_read_file(const char *path, mc_ncpoly **out)
{
    if (mc_status st = require(path && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        std::string text;
        try {
            text = read_file(path);
        } catch (const ParseError &e) {
            return fail(MC_ERR_IO, e.what());
        }
        *out = new mc_ncpoly{ncpoly_from_text(text)};
        return MC_OK;
    });
}

mc_status mc_ncpoly_write_file(const mc_ncpoly *f, const char *path)
{
    if (mc_status st = require(f && path, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        try {
            write_file(path, ncpoly_to_text(f->value));
        } catch (const ParseError &e) {
            return fail(MC_ERR_IO, e.what());
        }
        return MC_OK;
    });
}

mc_status mc_mould_unary(const char *op, const mc_mould *a, mc_mould **out)
{
    if (mc_status st = require(op && a && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&]() -> mc_status {
        std::string name(op);
        const Mould &m = a->value;
        Mould result = [&]() -> Mould {
            if (name == "neg")
                return neg(m);
            if (name == "push")
                return push(m);
            if (name == "mantar")
                return mantar(m);
            if (name == "pari")
                return pari(m);
            if (name == "dur")
                return dur(m);
            if (name == "dar")
                return dar(m);
            if (name == "swap")
                return swap(m);
            if (name == "expari")
                return expari(m);
            if (name == "logari")
                return logari(m);
            if (name == "invgari")
                return invgari(m);
            if (name == "push-symmetrize")
                return push_symmetrize(m);
            throw DomainError("unknown unary operation '" + name + "'");
        }();
        *out = new mc_mould{std::move(result)};
        return MC_OK;
    });
}

mc_status mc_mould_binary(const char *op, const mc_mould *a, const mc_mould *b, mc_mould **out)
{
    if (mc_status st = require(op && a && b && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&]() -> mc_status {
        std::string name(op);
        const Mould &x = a->value;
        const Mould &y = b->value;
        Mould result = [&]() -> Mould {
            if (name == "add")
                return x + y;
            if (name == "sub")
                return x - y;
            if (name == "mu")
                return mu(x, y);
            if (name == "lu")
                return lu(x, y);
            if (name == "amit")
                return amit(x, y);
            if (name == "anit")
                return anit(x, y);
            if (name == "arit")
                return arit(x, y);
            if (name == "ari")
                return ari(x, y);
            if (name == "preari")
                return preari(x, y);
            if (name == "gari")
                return gari(x, y);
            if (name == "adari")
                return adari(x, y);
            if (name == "ganit")
                return ganit(x, y);
            if (name == "ganit-expder")
                return ganit_expder(x, y);
            throw DomainError("unknown binary operation '" + name + "'");
        }();
        *out = new mc_mould{std::move(result)};
        return MC_OK;
    });
}

mc_status mc_mould_truncate(const mc_mould *a, int depth, mc_mould **out)
{
    if (mc_status st = require(a && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_mould{a->value.truncated(depth)};
        return MC_OK;
    });
}

mc_status mc_pal(int depth, mc_mould **out)
{
    if (mc_status st = require(out && depth >= 0, "bad depth"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_mould{pal(depth)};
        return MC_OK;
    });
}

mc_status mc_pil(int depth, mc_mould **out)
{
    if (mc_status st = require(out && depth >= 0, "bad depth"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_mould{pil(depth)};
        return MC_OK;
    });
}

mc_status mc_dupal(int depth, mc_mould **out)
{
    if (mc_status st = require(out && depth >= 0, "bad depth"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_mould{dupal(depth)};
        return MC_OK;
    });
}

mc_status mc_pic(int depth, mc_mould **out)
{
    if (mc_status st = require(out && depth >= 0, "bad depth"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_mould{pic_mould(depth)};
        return MC_OK;
    });
}

mc_status mc_ma(const mc_ncpoly *f, int max_depth, mc_mould **out)
{
    if (mc_status st = require(f && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_mould{ma(f->value, max_depth)};
        return MC_OK;
    });
}

mc_status mc_mi(const mc_ncpoly *f, int max_depth, mc_mould **out)
{
    if (mc_status st = require(f && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_mould{mi(f->value, max_depth)};
        return MC_OK;
    });
}

mc_status mc_poisson(const mc_ncpoly *f, const mc_ncpoly *g, mc_ncpoly **out)
{
    if (mc_status st = require(f && g && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = new mc_ncpoly{poisson(f->value, g->value)};
        return MC_OK;
    });
}

mc_status mc_fstar_text(const mc_ncpoly *f, char **out)
{
    if (mc_status st = require(f && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = dup_string(ypoly_to_text(fstar(f->value)));
        return MC_OK;
    });
}

mc_status mc_classify(const mc_mould *m, char **out)
{
    if (mc_status st = require(m && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = dup_string(classify(m->value).to_string());
        return MC_OK;
    });
}

mc_status mc_is_in_ds(const mc_ncpoly *f, int *out)
{
    if (mc_status st = require(f && out, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        *out = is_in_ds(f->value) ? 1 : 0;
        return MC_OK;
    });
}

mc_status mc_ds_basis(int weight, mc_ncpoly ***out, size_t *count)
{
    if (mc_status st = require(out && count, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        auto basis = ds_basis(weight);
        auto **arr = static_cast<mc_ncpoly **>(std::malloc(sizeof(mc_ncpoly *) * std::max<size_t>(basis.size(), 1)));
        for (size_t i = 0; i < basis.size(); ++i)
            arr[i] = new mc_ncpoly{std::move(basis[i])};
        *out = arr;
        *count = basis.size();
        return MC_OK;
    });
}

void mc_ncpoly_array_free(mc_ncpoly **arr, size_t count)
{
    if (!arr)
        return;
    for (size_t i = 0; i < count; ++i)
        delete arr[i];
    std::free(arr);
}

mc_status mc_suite_names(char **out)
{
    if (mc_status st = require(out != nullptr, "null argument"); st != MC_OK)
        return st;
    std::string all;
    for (const auto &name : suite_names())
        all += name + "\n";
    *out = dup_string(all);
    return MC_OK;
}

mc_status mc_verify(const char *suite, uint64_t seed, int cases, int depth, int as_json, char **report,
                    int *passed)
{
    if (mc_status st = require(suite && report && passed, "null argument"); st != MC_OK)
        return st;
    if (!is_suite(suite))
        return fail(MC_ERR_ARGUMENT, "unknown verification suite '" + std::string(suite) + "'");
    return guarded([&] {
        VerificationReport r = run_suite(SuiteSpec{suite, seed, cases, depth});
        *report = dup_string(as_json ? r.json() : r.text());
        *passed = r.ok() ? 1 : 0;
        return MC_OK;
    });
}

mc_status mc_compare_ganit(int depth, uint64_t seed, int as_json, char **report, int *passed)
{
    if (mc_status st = require(report && passed, "null argument"); st != MC_OK)
        return st;
    return guarded([&] {
        VerificationReport r = run_suite(SuiteSpec{"ganit-consistency", seed, -1, depth});
        *report = dup_string(as_json ? r.json() : r.text());
        *passed = r.ok() ? 1 : 0;
        return MC_OK;
    });
}

} // extern "C"
