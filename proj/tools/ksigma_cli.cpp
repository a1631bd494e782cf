// Command-line front end. Talks to the library only through ksigma.h.
#include "ksigma/ksigma.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

struct SigmaDeleter {
    void operator()(ks_sigma* s) const { ks_sigma_free(s); }
};
struct OptionsDeleter {
    void operator()(ks_options* o) const { ks_options_free(o); }
};
using SigmaPtr = std::unique_ptr<ks_sigma, SigmaDeleter>;
using OptionsPtr = std::unique_ptr<ks_options, OptionsDeleter>;

struct Config {
    std::string sigma;
    std::string multigeometric;
    std::string sigma_file;
    std::string q;
    std::optional<unsigned> depth;
    std::string tol;
    std::string max_width;
    std::string format = "json";
    std::string out;
    unsigned resolution = 420;
    unsigned count = 3;
    std::string d;
    std::string star;
    std::string qn;
    std::string input = "-";
};

class Failure : public std::runtime_error {
public:
    Failure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
    int code;
};

void check(ks_status st)
{
    if (st != KS_OK && st != KS_INCONCLUSIVE && st != KS_ERR_VERIFY_FAILED) {
        throw Failure(st, ks_last_error());
    }
}

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure(KS_ERR_IO, "cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SigmaPtr load_sigma(const Config& c)
{
    const int sources = !c.sigma.empty() + !c.multigeometric.empty() + !c.sigma_file.empty();
    if (sources != 1) {
        throw Failure(KS_ERR_INVALID_ARGUMENT, "give exactly one of --sigma, --multigeometric, --sigma-file");
    }
    ks_sigma* s = nullptr;
    if (!c.sigma.empty()) {
        check(ks_sigma_parse(c.sigma.c_str(), &s));
    } else if (!c.multigeometric.empty()) {
        check(ks_sigma_from_multigeometric(c.multigeometric.c_str(), &s));
    } else {
        check(ks_sigma_from_json(read_file(c.sigma_file).c_str(), &s));
    }
    return SigmaPtr(s);
}

OptionsPtr load_options(const Config& c)
{
    ks_options* o = nullptr;
    check(ks_options_new(&o));
    OptionsPtr opts(o);
    if (c.depth) {
        check(ks_options_set_depth(o, *c.depth));
    }
    if (!c.tol.empty()) {
        check(ks_options_set_tolerance(o, c.tol.c_str()));
    }
    if (!c.max_width.empty()) {
        check(ks_options_set_max_width(o, c.max_width.c_str()));
    }
    check(ks_options_set_resolution(o, c.resolution));
    return opts;
}

std::string ratio_of(const Config& c, const ks_sigma* sigma)
{
    if (!c.q.empty()) {
        return c.q;
    }
    if (const char* q = ks_sigma_default_q(sigma)) {
        return q;
    }
    throw Failure(KS_ERR_INVALID_ARGUMENT, "missing --q");
}

int finish(ks_status st, char** slot, const Config& c)
{
    check(st);
    char* text = *slot;
    std::unique_ptr<char, void (*)(char*)> owned(text, ks_string_free);
    if (c.out.empty()) {
        std::fputs(text, stdout);
    } else {
        std::ofstream f(c.out, std::ios::binary);
        f << text;
        if (!f) {
            throw Failure(KS_ERR_IO, "cannot write " + c.out);
        }
    }
    if (st == KS_INCONCLUSIVE) {
        std::cerr << "inconclusive within the configured budget\n";
    } else if (st == KS_ERR_VERIFY_FAILED) {
        std::cerr << "certificate replay failed\n";
    }
    return st;
}

std::pair<unsigned, std::string> split_pair(const std::string& text, const char* flag)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw Failure(KS_ERR_INVALID_ARGUMENT, std::string(flag) + " expects two comma-separated values");
    }
    try {
        return {static_cast<unsigned>(std::stoul(text.substr(0, comma))), text.substr(comma + 1)};
    } catch (const std::exception&) {
        throw Failure(KS_ERR_INVALID_ARGUMENT, std::string(flag) + ": bad integer '" + text.substr(0, comma) + "'");
    }
}

void add_sigma_options(CLI::App* cmd, Config& c)
{
    cmd->add_option("--sigma", c.sigma, "digit set, e.g. 0,2,3,5");
    cmd->add_option("--multigeometric", c.multigeometric, "coefficients k0,...,km with optional ;q");
    cmd->add_option("--sigma-file", c.sigma_file, "JSON file with a digit set");
}

void add_common_options(CLI::App* cmd, Config& c)
{
    cmd->add_option("--depth", c.depth, "depth budget")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", c.tol, "tolerance for enclosures, rational");
    cmd->add_option("--max-width", c.max_width, "widest accepted enclosure for q");
    cmd->add_option("--out", c.out, "output path instead of stdout");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified classification of self-similar sets K(Sigma; q)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ks_version());
    Config c;

    auto* classify = app.add_subcommand("classify", "verdict with certificates for one q");
    auto* gapstats = app.add_subcommand("gapstats", "gap statistics of the digit set");
    auto* sweep = app.add_subcommand("sweep", "classify along the whole q-axis");
    auto* nullcert = app.add_subcommand("nullcert", "search for |Sigma_n| q^n < 1");
    auto* sumset = app.add_subcommand("sumset", "cardinality of Sigma_n");
    auto* cover = app.add_subcommand("cover", "exact length of the depth-n cover");
    auto* bounds = app.add_subcommand("bounds", "alpha_(d), (*)-function minima, q_n roots");
    auto* qnseq = app.add_subcommand("qnseq", "null ratios q_n above 1/|Sigma|");
    auto* t12 = app.add_subcommand("t12", "null test for integer digits and q = 1/(k+1)");
    auto* fullsumset = app.add_subcommand("fullsumset", "digit collisions at q = 1/|Sigma|");
    auto* render = app.add_subcommand("render", "SVG q-axis diagram with JSON sidecar");
    auto* verify = app.add_subcommand("verify", "replay every certificate in a JSON document");

    for (auto* cmd : {classify, gapstats, sweep, nullcert, sumset, cover, qnseq, t12, fullsumset, render}) {
        add_sigma_options(cmd, c);
    }
    for (auto* cmd : {classify, gapstats, sweep, nullcert, sumset, cover, bounds, qnseq, t12, fullsumset, render,
                      verify}) {
        add_common_options(cmd, c);
    }
    for (auto* cmd : {classify, nullcert, sumset, cover, t12}) {
        cmd->add_option("--q", c.q, "ratio: rational or qn:s,n");
    }
    for (auto* cmd : {sweep, render}) {
        cmd->add_option("--resolution", c.resolution, "grid denominator")->check(CLI::PositiveNumber);
    }
    cover->add_option("--format", c.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    bounds->add_option("--d", c.d, "relative minimal gap d in (0, 1/2]");
    bounds->add_option("--star", c.star, "n,gamma: minimum of a (*)-function");
    bounds->add_option("--qn", c.qn, "s,n: enclosure of q_n");
    qnseq->add_option("--count", c.count, "number of certificates")->check(CLI::PositiveNumber);
    verify->add_option("input", c.input, "JSON document, - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return KS_ERR_INVALID_ARGUMENT;
    }

    try {
        const OptionsPtr opts = load_options(c);
        char* text = nullptr;
        if (bounds->parsed()) {
            const int chosen = !c.d.empty() + !c.star.empty() + !c.qn.empty();
            if (chosen != 1) {
                throw Failure(KS_ERR_INVALID_ARGUMENT, "give exactly one of --d, --star, --qn");
            }
            if (!c.d.empty()) {
                return finish(ks_alpha(c.d.c_str(), opts.get(), &text), &text, c);
            }
            if (!c.star.empty()) {
                const auto [n, gamma] = split_pair(c.star, "--star");
                return finish(ks_star_min(n, gamma.c_str(), opts.get(), &text), &text, c);
            }
            const auto [s, n] = split_pair(c.qn, "--qn");
            unsigned nn = 0;
            try {
                nn = static_cast<unsigned>(std::stoul(n));
            } catch (const std::exception&) {
                throw Failure(KS_ERR_INVALID_ARGUMENT, "--qn: bad integer '" + n + "'");
            }
            return finish(ks_qn_root(s, nn, opts.get(), &text), &text, c);
        }
        if (verify->parsed()) {
            return finish(ks_verify(read_file(c.input).c_str(), &text), &text, c);
        }

        const SigmaPtr sigma = load_sigma(c);
        if (classify->parsed()) {
            return finish(ks_classify(sigma.get(), ratio_of(c, sigma.get()).c_str(), opts.get(), &text), &text, c);
        }
        if (gapstats->parsed()) {
            return finish(ks_gap_stats(sigma.get(), &text), &text, c);
        }
        if (sweep->parsed()) {
            return finish(ks_sweep(sigma.get(), opts.get(), &text), &text, c);
        }
        if (nullcert->parsed()) {
            return finish(ks_nullcert(sigma.get(), ratio_of(c, sigma.get()).c_str(), opts.get(), &text), &text, c);
        }
        if (sumset->parsed() || cover->parsed()) {
            if (!c.depth) {
                throw Failure(KS_ERR_INVALID_ARGUMENT, "--depth is required");
            }
            const std::string q = ratio_of(c, sigma.get());
            if (sumset->parsed()) {
                return finish(ks_sumset(sigma.get(), q.c_str(), *c.depth, opts.get(), &text), &text, c);
            }
            return finish(ks_cover(sigma.get(), q.c_str(), *c.depth, c.format.c_str(), opts.get(), &text), &text, c);
        }
        if (qnseq->parsed()) {
            return finish(ks_qnseq(sigma.get(), c.count, opts.get(), &text), &text, c);
        }
        if (t12->parsed()) {
            return finish(ks_t12(sigma.get(), ratio_of(c, sigma.get()).c_str(), opts.get(), &text), &text, c);
        }
        if (fullsumset->parsed()) {
            return finish(ks_full_sumset(sigma.get(), opts.get(), &text), &text, c);
        }
        if (render->parsed()) {
            if (c.out.empty()) {
                throw Failure(KS_ERR_INVALID_ARGUMENT, "render needs --out path.svg");
            }
            const ks_status st = ks_render(sigma.get(), c.out.c_str(), opts.get(), &text);
            check(st);
            std::fputs(text, stdout);
            ks_string_free(text);
            return st;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.what() << '\n';
        return f.code;
    }
    return KS_ERR_INTERNAL;
}
