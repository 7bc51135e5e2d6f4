// Command-line front end. Talks to the library exclusively through the C
// interface in mouldcalc.h.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 usage or parse error.

#include "mouldcalc.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct MouldDeleter {
    void operator()(mc_mould *m) const { mc_mould_free(m); }
};
struct PolyDeleter {
    void operator()(mc_ncpoly *f) const { mc_ncpoly_free(f); }
};
using MouldPtr = std::unique_ptr<mc_mould, MouldDeleter>;
using PolyPtr = std::unique_ptr<mc_ncpoly, PolyDeleter>;

[[noreturn]] void die(const std::string &context)
{
    std::cerr << "mouldcalc: " << context;
    const char *detail = mc_last_error();
    if (detail && *detail)
        std::cerr << ": " << detail;
    std::cerr << "\n";
    std::exit(kExitUsage);
}

MouldPtr load_mould(const std::string &path)
{
    mc_mould *m = nullptr;
    if (mc_mould_read_file(path.c_str(), &m) != MC_OK)
        die("reading mould '" + path + "'");
    return MouldPtr(m);
}

PolyPtr load_ncpoly(const std::string &path)
{
    mc_ncpoly *f = nullptr;
    if (mc_ncpoly_read_file(path.c_str(), &f) != MC_OK)
        die("reading polynomial '" + path + "'");
    return PolyPtr(f);
}

void emit_mould(const mc_mould *m, const std::string &out_path)
{
    if (out_path.empty()) {
        char *text = nullptr;
        if (mc_mould_to_text(m, &text) != MC_OK)
            die("serializing mould");
        std::cout << text;
        mc_string_free(text);
    } else if (mc_mould_write_file(m, out_path.c_str()) != MC_OK) {
        die("writing '" + out_path + "'");
    }
}

void emit_ncpoly(const mc_ncpoly *f, const std::string &out_path)
{
    char *text = nullptr;
    if (mc_ncpoly_to_text(f, &text) != MC_OK)
        die("serializing polynomial");
    if (out_path.empty()) {
        std::cout << text;
    } else if (mc_ncpoly_write_file(f, out_path.c_str()) != MC_OK) {
        mc_string_free(text);
        die("writing '" + out_path + "'");
    }
    mc_string_free(text);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact mould calculus: flexion operators, special moulds and "
                 "the double shuffle dictionary"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mc_version()));

    std::string in_a, in_b, out_path;
    int depth = -1;
    int weight = 3;
    uint64_t seed = 1;
    int cases = -1;
    bool as_json = false;
    std::string suite_name;

    auto add_out = [&](CLI::App *cmd) { cmd->add_option("--out", out_path, "write the result to a file"); };

    // unary mould operators
    struct UnaryCmd {
        const char *name;
        const char *op;
        const char *help;
    };
    const UnaryCmd unary_cmds[] = {
        {"swap", "swap", "exchange the two alphabets"},
        {"push", "push", "apply the push operator"},
        {"neg", "neg", "negate all variables"},
        {"mantar", "mantar", "signed reversal"},
        {"expari", "expari", "pre-Lie exponential into the group"},
        {"logari", "logari", "inverse of expari"},
        {"invgari", "invgari", "group inverse"},
    };
    for (const auto &uc : unary_cmds) {
        CLI::App *cmd = app.add_subcommand(uc.name, uc.help);
        cmd->add_option("A", in_a, "mould file")->required();
        add_out(cmd);
        cmd->callback([&, op = uc.op] {
            MouldPtr a = load_mould(in_a);
            mc_mould *r = nullptr;
            if (mc_mould_unary(op, a.get(), &r) != MC_OK)
                die(op);
            MouldPtr result(r);
            emit_mould(result.get(), out_path);
        });
    }

    // binary mould operators
    struct BinaryCmd {
        const char *name;
        const char *op;
        const char *help;
    };
    const BinaryCmd binary_cmds[] = {
        {"ari", "ari", "ari bracket of two moulds"},
        {"mu", "mu", "mould multiplication"},
        {"gari", "gari", "group multiplication"},
        {"adari", "adari", "adjoint action of a group mould"},
        {"ganit", "ganit", "ganit(B).A (parameter first)"},
    };
    for (const auto &bc : binary_cmds) {
        CLI::App *cmd = app.add_subcommand(bc.name, bc.help);
        cmd->add_option("A", in_a, "first mould file")->required();
        cmd->add_option("B", in_b, "second mould file")->required();
        add_out(cmd);
        cmd->callback([&, op = bc.op] {
            MouldPtr a = load_mould(in_a);
            MouldPtr b = load_mould(in_b);
            mc_mould *r = nullptr;
            if (mc_mould_binary(op, a.get(), b.get(), &r) != MC_OK)
                die(op);
            MouldPtr result(r);
            emit_mould(result.get(), out_path);
        });
    }

    // special moulds
    struct SpecialCmd {
        const char *name;
        mc_status (*fn)(int, mc_mould **);
        const char *help;
    };
    const SpecialCmd special_cmds[] = {
        {"pal", mc_pal, "the pal mould, defined by dur.pal = mu(pal, dupal)"},
        {"pil", mc_pil, "swap of pal"},
        {"dupal", mc_dupal, "the Bernoulli-weighted mould driving the pal recursion"},
        {"pic", mc_pic, "the mould 1/(v1...vr)"},
    };
    for (const auto &sc : special_cmds) {
        CLI::App *cmd = app.add_subcommand(sc.name, sc.help);
        cmd->add_option("--depth", depth, "truncation depth")->required();
        add_out(cmd);
        cmd->callback([&, fn = sc.fn, name = sc.name] {
            mc_mould *r = nullptr;
            if (fn(depth, &r) != MC_OK)
                die(name);
            MouldPtr result(r);
            emit_mould(result.get(), out_path);
        });
    }

    {
        CLI::App *cmd = app.add_subcommand("ma", "dictionary image of a polynomial as a u-mould");
        cmd->add_option("F", in_a, "ncpoly file")->required();
        cmd->add_option("--depth", depth, "truncation depth (default: the weight of F)");
        add_out(cmd);
        cmd->callback([&] {
            PolyPtr f = load_ncpoly(in_a);
            mc_mould *r = nullptr;
            if (mc_ma(f.get(), depth, &r) != MC_OK)
                die("ma");
            MouldPtr result(r);
            emit_mould(result.get(), out_path);
        });
    }
    {
        CLI::App *cmd = app.add_subcommand("mi", "swap of the dictionary image");
        cmd->add_option("F", in_a, "ncpoly file")->required();
        cmd->add_option("--depth", depth, "truncation depth (default: the weight of F)");
        add_out(cmd);
        cmd->callback([&] {
            PolyPtr f = load_ncpoly(in_a);
            mc_mould *r = nullptr;
            if (mc_mi(f.get(), depth, &r) != MC_OK)
                die("mi");
            MouldPtr result(r);
            emit_mould(result.get(), out_path);
        });
    }
    {
        CLI::App *cmd = app.add_subcommand("fstar", "f_* in the y alphabet");
        cmd->add_option("F", in_a, "ncpoly file")->required();
        add_out(cmd);
        cmd->callback([&] {
            PolyPtr f = load_ncpoly(in_a);
            char *text = nullptr;
            if (mc_fstar_text(f.get(), &text) != MC_OK)
                die("fstar");
            std::string s(text);
            mc_string_free(text);
            if (out_path.empty())
                std::cout << s;
            else {
                std::FILE *fp = std::fopen(out_path.c_str(), "wb");
                if (!fp)
                    die("writing '" + out_path + "'");
                std::fwrite(s.data(), 1, s.size(), fp);
                std::fclose(fp);
            }
        });
    }
    {
        CLI::App *cmd = app.add_subcommand("poisson", "Poisson (Ihara) bracket of two polynomials");
        cmd->add_option("F", in_a, "ncpoly file")->required();
        cmd->add_option("G", in_b, "ncpoly file")->required();
        add_out(cmd);
        cmd->callback([&] {
            PolyPtr f = load_ncpoly(in_a);
            PolyPtr g = load_ncpoly(in_b);
            mc_ncpoly *r = nullptr;
            if (mc_poisson(f.get(), g.get(), &r) != MC_OK)
                die("poisson");
            PolyPtr result(r);
            emit_ncpoly(result.get(), out_path);
        });
    }
    {
        CLI::App *cmd = app.add_subcommand("classify", "dimorphic membership of a u-mould");
        cmd->add_option("A", in_a, "mould file")->required();
        cmd->add_option("--depth", depth, "classify a truncation instead of the full mould");
        cmd->callback([&] {
            MouldPtr a = load_mould(in_a);
            if (depth >= 0) {
                mc_mould *t = nullptr;
                if (mc_mould_truncate(a.get(), depth, &t) != MC_OK)
                    die("truncate");
                a.reset(t);
            }
            char *text = nullptr;
            if (mc_classify(a.get(), &text) != MC_OK)
                die("classify");
            std::cout << text << "\n";
            mc_string_free(text);
        });
    }
    {
        CLI::App *cmd = app.add_subcommand("ds-basis", "deterministic basis of the double shuffle space");
        cmd->add_option("--weight", weight, "homogeneous weight (>= 3)")->required();
        cmd->callback([&] {
            mc_ncpoly **arr = nullptr;
            size_t count = 0;
            if (mc_ds_basis(weight, &arr, &count) != MC_OK)
                die("ds-basis");
            std::cout << "dimension " << count << "\n";
            for (size_t i = 0; i < count; ++i) {
                char *text = nullptr;
                if (mc_ncpoly_to_text(arr[i], &text) != MC_OK) {
                    mc_ncpoly_array_free(arr, count);
                    die("ds-basis");
                }
                std::cout << text;
                mc_string_free(text);
            }
            mc_ncpoly_array_free(arr, count);
        });
    }

    int verify_exit = kExitPass;
    {
        CLI::App *cmd = app.add_subcommand("verify", "run a named verification suite");
        static bool list_only = false;
        cmd->add_option("suite", suite_name, "suite name (see --list)");
        cmd->add_flag("--list", list_only, "list the available suites");
        cmd->add_option("--seed", seed, "random seed (default 1)");
        cmd->add_option("--cases", cases, "number of random cases (suite default if omitted)");
        cmd->add_option("--depth", depth, "depth/weight bound (suite default if omitted)");
        cmd->add_flag("--json", as_json, "emit the machine-readable report");
        cmd->callback([&] {
            if (list_only) {
                char *names = nullptr;
                if (mc_suite_names(&names) != MC_OK)
                    die("verify");
                std::cout << names;
                mc_string_free(names);
                return;
            }
            if (suite_name.empty())
                die("verify: missing suite name (use --list to see the choices)");
            char *report = nullptr;
            int passed = 0;
            if (mc_verify(suite_name.c_str(), seed, cases, depth, as_json ? 1 : 0, &report, &passed) !=
                MC_OK)
                die("verify " + suite_name);
            std::cout << report;
            if (as_json)
                std::cout << "\n";
            mc_string_free(report);
            verify_exit = passed ? kExitPass : kExitVerifyFail;
        });
    }
    {
        CLI::App *cmd = app.add_subcommand("compare-ganit",
                                           "compare the explicit and exponential-derivation ganit forms");
        cmd->add_option("--depth", depth, "comparison depth (default 3)");
        cmd->add_option("--seed", seed, "random seed (default 1)");
        cmd->add_flag("--json", as_json, "emit the machine-readable report");
        cmd->callback([&] {
            char *report = nullptr;
            int passed = 0;
            if (mc_compare_ganit(depth, seed, as_json ? 1 : 0, &report, &passed) != MC_OK)
                die("compare-ganit");
            std::cout << report;
            if (as_json)
                std::cout << "\n";
            mc_string_free(report);
            verify_exit = passed ? kExitPass : kExitVerifyFail;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }
    return verify_exit;
}
