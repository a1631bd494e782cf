#include "ksigma/ksigma.h"

#include "ksigma/bounds.hpp"
#include "ksigma/classify.hpp"
#include "ksigma/errors.hpp"
#include "ksigma/nullseq.hpp"
#include "ksigma/render.hpp"
#include "ksigma/serialize.hpp"
#include "ksigma/sumsets.hpp"
#include "ksigma/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

struct ks_sigma {
    ksigma::FiniteSigma sigma;
    bool achievement_set = false;
    std::string default_q;
};

struct ks_options {
    ksigma::ClassifyOptions classify;
    unsigned resolution = 420;
};

namespace {

using ksigma::json;
using ksigma::Rational;

thread_local std::string g_last_error;

char* dup_string(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) {
        std::memcpy(p, s.data(), s.size() + 1);
    }
    return p;
}

ks_status emit(const std::string& text, char** out, ks_status status = KS_OK)
{
    *out = dup_string(text);
    if (!*out) {
        g_last_error = "out of memory";
        return KS_ERR_INTERNAL;
    }
    return status;
}

ks_status emit(const json& doc, char** out, ks_status status = KS_OK)
{
    return emit(doc.dump(2) + "\n", out, status);
}

template <class F>
ks_status guarded(F&& body)
{
    g_last_error.clear();
    try {
        return body();
    } catch (const ksigma::InvalidArgument& e) {
        g_last_error = e.what();
        return KS_ERR_INVALID_ARGUMENT;
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return KS_ERR_INVALID_ARGUMENT;
    } catch (const ksigma::BudgetExceeded& e) {
        g_last_error = e.what();
        return KS_INCONCLUSIVE;
    } catch (const ksigma::IoError& e) {
        g_last_error = e.what();
        return KS_ERR_IO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return KS_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return KS_ERR_INTERNAL;
    }
}

void require(bool condition, const char* what)
{
    if (!condition) {
        throw ksigma::InvalidArgument(what);
    }
}

const ks_options& defaults()
{
    static const ks_options* opts = [] {
        ks_options* o = nullptr;
        ks_options_new(&o);
        return o;
    }();
    return *opts;
}

const ks_options& opts_or_default(const ks_options* o)
{
    return o ? *o : defaults();
}

ksigma::ClassifyOptions classify_options(const ks_sigma* sigma, const ks_options* o)
{
    ksigma::ClassifyOptions c = opts_or_default(o).classify;
    c.achievement_set = sigma->achievement_set;
    return c;
}

ksigma::RatioValue parse_q(const char* text, const Rational& tol)
{
    require(text != nullptr, "missing ratio q");
    const std::string_view t(text);
    if (t.rfind("qn:", 0) == 0) {
        const auto comma = t.find(',');
        require(comma != std::string_view::npos, "expected qn:s,n");
        const Rational s = Rational::parse(t.substr(3, comma - 3));
        const Rational n = Rational::parse(t.substr(comma + 1));
        require(s.is_integer() && n.is_integer() && s >= Rational(2) && n >= Rational(2) &&
                    s <= Rational(1 << 20) && n <= Rational(4096),
                "qn:s,n needs integers s >= 2, n >= 2");
        return ksigma::qn_root(static_cast<unsigned>(s.num().get_ui()), static_cast<unsigned>(n.num().get_ui()), tol);
    }
    return ksigma::RatioValue::exact(Rational::parse(t));
}

Rational exact_q(const char* text)
{
    const ksigma::RatioValue q = parse_q(text, ksigma::kDefaultTolerance);
    require(q.is_exact(), "this operation needs an exact rational q");
    return q.value();
}

json with_context(const ks_sigma* sigma, const Rational& q, json body)
{
    json doc{{"schema", body.value("schema", "")}, {"sigma", ksigma::to_json(sigma->sigma)}, {"q", q.str()}};
    for (auto& [k, v] : body.items()) {
        if (k != "schema") {
            doc[k] = v;
        }
    }
    return doc;
}

ksigma::SumsetOptions sumset_options(const ks_options* o)
{
    return opts_or_default(o).classify.sumset;
}

}  // namespace

extern "C" {

const char* ks_version(void)
{
    return "1.0.0";
}

const char* ks_last_error(void)
{
    return g_last_error.c_str();
}

void ks_string_free(char* s)
{
    std::free(s);
}

ks_status ks_sigma_parse(const char* text, ks_sigma** out)
{
    return guarded([&] {
        require(text && out, "null argument");
        *out = new ks_sigma{ksigma::FiniteSigma::parse(text), false, {}};
        return KS_OK;
    });
}

ks_status ks_sigma_from_multigeometric(const char* spec, ks_sigma** out)
{
    return guarded([&] {
        require(spec && out, "null argument");
        const std::string_view t(spec);
        const auto semi = t.find(';');
        std::string q;
        if (semi != std::string_view::npos) {
            q = ksigma::MultigeometricSpec::parse(t).ratio.value().str();
        }
        const auto coeffs = ksigma::parse_coefficients(t.substr(0, semi));
        *out = new ks_sigma{ksigma::sumset_of_multigeometric(coeffs), true, q};
        return KS_OK;
    });
}

ks_status ks_sigma_from_json(const char* json_text, ks_sigma** out)
{
    return guarded([&] {
        require(json_text && out, "null argument");
        *out = new ks_sigma{ksigma::sigma_from_json(json::parse(json_text)), false, {}};
        return KS_OK;
    });
}

void ks_sigma_free(ks_sigma* sigma)
{
    delete sigma;
}

size_t ks_sigma_size(const ks_sigma* sigma)
{
    return sigma ? sigma->sigma.size() : 0;
}

const char* ks_sigma_default_q(const ks_sigma* sigma)
{
    return sigma && !sigma->default_q.empty() ? sigma->default_q.c_str() : nullptr;
}

ks_status ks_sigma_to_json(const ks_sigma* sigma, char** out)
{
    return guarded([&] {
        require(sigma && out, "null argument");
        return emit(ksigma::to_json(sigma->sigma), out);
    });
}

ks_status ks_options_new(ks_options** out)
{
    return guarded([&] {
        require(out, "null argument");
        auto* o = new ks_options{};
        if (const char* env = std::getenv("KSIGMA_MAX_ELEMENTS"); env && *env) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) {
                o->classify.sumset.max_elements = static_cast<std::size_t>(v);
            }
        }
        *out = o;
        return KS_OK;
    });
}

void ks_options_free(ks_options* options)
{
    delete options;
}

ks_status ks_options_set_depth(ks_options* options, unsigned depth)
{
    return guarded([&] {
        require(options && depth > 0, "depth must be positive");
        options->classify.depth_budget = depth;
        return KS_OK;
    });
}

ks_status ks_options_set_tolerance(ks_options* options, const char* rational)
{
    return guarded([&] {
        require(options && rational, "null argument");
        const Rational t = Rational::parse(rational);
        require(t.sign() > 0 && t < Rational(1), "tolerance must lie in (0,1)");
        options->classify.tolerance = t;
        return KS_OK;
    });
}

ks_status ks_options_set_resolution(ks_options* options, unsigned resolution)
{
    return guarded([&] {
        require(options && resolution > 0, "resolution must be positive");
        options->resolution = resolution;
        return KS_OK;
    });
}

ks_status ks_options_set_max_width(ks_options* options, const char* rational)
{
    return guarded([&] {
        require(options && rational, "null argument");
        const Rational w = Rational::parse(rational);
        require(w.sign() >= 0, "maximum width must be non-negative");
        options->classify.max_enclosure_width = w;
        return KS_OK;
    });
}

ks_status ks_options_set_max_elements(ks_options* options, uint64_t max_elements)
{
    return guarded([&] {
        require(options && max_elements > 0, "element cap must be positive");
        options->classify.sumset.max_elements = static_cast<std::size_t>(max_elements);
        return KS_OK;
    });
}

ks_status ks_gap_stats(const ks_sigma* sigma, char** out)
{
    return guarded([&] {
        require(sigma && out, "null argument");
        json doc = ksigma::to_json(ksigma::gap_stats(sigma->sigma));
        doc["sigma"] = ksigma::to_json(sigma->sigma);
        doc["size"] = sigma->sigma.size();
        return emit(doc, out);
    });
}

ks_status ks_classify(const ks_sigma* sigma, const char* q, const ks_options* options, char** out)
{
    return guarded([&] {
        require(sigma && out, "null argument");
        const auto opts = classify_options(sigma, options);
        const ksigma::Verdict v = ksigma::classify(sigma->sigma, parse_q(q, opts.tolerance), opts);
        return emit(ksigma::to_json(v), out, v.trichotomy ? KS_OK : KS_INCONCLUSIVE);
    });
}

ks_status ks_sweep(const ks_sigma* sigma, const ks_options* options, char** out)
{
    return guarded([&] {
        require(sigma && out, "null argument");
        const auto opts = classify_options(sigma, options);
        return emit(ksigma::to_json(ksigma::sweep(sigma->sigma, opts_or_default(options).resolution, opts)), out);
    });
}

ks_status ks_nullcert(const ks_sigma* sigma, const char* q, const ks_options* options, char** out)
{
    return guarded([&] {
        require(sigma && out, "null argument");
        const Rational qv = exact_q(q);
        const unsigned depth = opts_or_default(options).classify.depth_budget;
        json doc{{"schema", "nullcert/v1"},
                 {"sigma", ksigma::to_json(sigma->sigma)},
                 {"q", qv.str()},
                 {"max_depth", depth}};
        std::optional<ksigma::NullCertificate> cert;
        bool exhausted = false;
        try {
            cert = ksigma::null_certificate(sigma->sigma, qv, depth, sumset_options(options));
        } catch (const ksigma::BudgetExceeded& e) {
            exhausted = true;
            doc["depth_reached"] = e.depth_reached();
        }
        doc["budget_exhausted"] = exhausted;
        doc["result"] = cert ? "certificate" : "none";
        if (cert) {
            doc["null_certificate"] = ksigma::to_json(*cert);
        }
        return emit(doc, out, cert ? KS_OK : KS_INCONCLUSIVE);
    });
}

ks_status ks_sumset(const ks_sigma* sigma, const char* q, unsigned depth, const ks_options* options, char** out)
{
    return guarded([&] {
        require(sigma && out && depth > 0, "need a digit set and a positive depth");
        const Rational qv = exact_q(q);
        return emit(with_context(sigma, qv, ksigma::to_json(ksigma::sumset_report(sigma->sigma, qv, depth,
                                                                                    sumset_options(options)))),
                    out);
    });
}

ks_status ks_cover(const ks_sigma* sigma, const char* q, unsigned depth, const char* format,
                   const ks_options* options, char** out)
{
    return guarded([&] {
        require(sigma && out && depth > 0, "need a digit set and a positive depth");
        const std::string fmt = format ? format : "json";
        require(fmt == "json" || fmt == "csv" || fmt == "svg", "cover format must be json, csv or svg");
        const Rational qv = exact_q(q);
        const ksigma::CoverReport r =
            ksigma::cover_length(sigma->sigma, qv, depth, sumset_options(options), fmt != "json");
        if (fmt == "csv") {
            return emit(ksigma::cover_csv(r), out);
        }
        if (fmt == "svg") {
            return emit(ksigma::cover_svg(r), out);
        }
        return emit(with_context(sigma, qv, ksigma::to_json(r)), out);
    });
}

ks_status ks_t12(const ks_sigma* sigma, const char* q, const ks_options* options, char** out)
{
    return guarded([&] {
        require(sigma && out, "null argument");
        const Rational qv = exact_q(q);
        const unsigned depth = opts_or_default(options).classify.depth_budget;
        return emit(with_context(sigma, qv, ksigma::to_json(ksigma::t12_check(sigma->sigma, qv, depth,
                                                                                sumset_options(options)))),
                    out);
    });
}

ks_status ks_full_sumset(const ks_sigma* sigma, const ks_options* options, char** out)
{
    return guarded([&] {
        require(sigma && out, "null argument");
        const unsigned depth = opts_or_default(options).classify.depth_budget;
        const auto s = static_cast<unsigned>(sigma->sigma.size());
        json body = ksigma::to_json(ksigma::full_sumset_check(sigma->sigma, depth, sumset_options(options)), s);
        return emit(with_context(sigma, Rational(1, static_cast<long>(s)), std::move(body)), out);
    });
}

ks_status ks_alpha(const char* d, const ks_options* options, char** out)
{
    return guarded([&] {
        require(d && out, "null argument");
        const Rational tol = opts_or_default(options).classify.tolerance;
        json doc = ksigma::to_json(ksigma::alpha_lower(Rational::parse(d), tol));
        doc["tolerance"] = tol.str();
        return emit(doc, out);
    });
}

ks_status ks_star_min(unsigned n, const char* gamma, const ks_options* options, char** out)
{
    return guarded([&] {
        require(gamma && out, "null argument");
        const ksigma::StarFunction g{n, Rational::parse(gamma)};
        json doc{{"schema", "starmin/v1"}, {"n", n}, {"gamma", g.gamma.str()}};
        const json body = ksigma::to_json(ksigma::star_min(g, opts_or_default(options).classify.tolerance));
        for (const auto& [k, v] : body.items()) {
            doc[k] = v;
        }
        return emit(doc, out);
    });
}

ks_status ks_qn_root(unsigned s, unsigned n, const ks_options* options, char** out)
{
    return guarded([&] {
        require(out != nullptr, "null argument");
        const ksigma::RatioValue q = ksigma::qn_root(s, n, opts_or_default(options).classify.tolerance);
        json doc{{"schema", "qnroot/v1"}, {"s", s}, {"n", n}};
        doc["q"] = ksigma::to_json(q);
        return emit(doc, out);
    });
}

ks_status ks_qnseq(const ks_sigma* sigma, unsigned count, const ks_options* options, char** out)
{
    return guarded([&] {
        require(sigma && out && count > 0, "need a digit set and a positive count");
        json doc{{"schema", "qnseq/v1"}, {"sigma", ksigma::to_json(sigma->sigma)}, {"s", sigma->sigma.size()}};
        const auto w = ksigma::star_condition_witness(sigma->sigma);
        if (!w) {
            doc["witness"] = nullptr;
            doc["certificates"] = json::array();
            return emit(doc, out, KS_INCONCLUSIVE);
        }
        doc["witness"] = {{"a", w->a.str()}, {"b", w->b.str()}, {"c", w->c.str()}};
        json certs = json::array();
        const auto seq = ksigma::qn_sequence(sigma->sigma, count, opts_or_default(options).classify.tolerance);
        for (const auto& c : seq) {
            certs.push_back(ksigma::to_json(c));
        }
        doc["certificates"] = certs;
        return emit(doc, out, seq.size() >= count ? KS_OK : KS_INCONCLUSIVE);
    });
}

ks_status ks_render(const ks_sigma* sigma, const char* path, const ks_options* options, char** out)
{
    return guarded([&] {
        require(sigma && path && out, "null argument");
        const auto opts = classify_options(sigma, options);
        const ksigma::SweepResult sw = ksigma::sweep(sigma->sigma, opts_or_default(options).resolution, opts);
        const ksigma::DiagramSpec spec = ksigma::diagram_from_sweep(sw);
        ksigma::render_svg(spec, path);
        json doc = ksigma::to_json(spec);
        doc["sigma"] = ksigma::to_json(sigma->sigma);
        doc["svg"] = path;
        return emit(doc, out);
    });
}

ks_status ks_verify(const char* json_text, char** out)
{
    return guarded([&] {
        require(json_text && out, "null argument");
        const ksigma::VerifyReport r = ksigma::verify_document(json::parse(json_text));
        return emit(ksigma::to_json(r), out, r.ok() ? KS_OK : KS_ERR_VERIFY_FAILED);
    });
}

}  // extern "C"
