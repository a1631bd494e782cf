#include "ksigma/verify.hpp"

#include "ksigma/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ksigma {

namespace {

class Checker {
public:
    void require(bool condition, const std::string& what)
    {
        if (!condition) {
            problems.push_back(what);
        }
    }

    std::vector<std::string> problems;
};

Rational ratio_of_gaps(const Rational& delta_max, const Rational& diam)
{
    return delta_max / (delta_max + diam);
}

std::pair<Rational, Rational> min_max_gap(std::span<const Rational> xs)
{
    Rational lo = xs[1] - xs[0];
    Rational hi = lo;
    for (std::size_t k = 2; k < xs.size(); ++k) {
        const Rational g = xs[k] - xs[k - 1];
        lo = min(lo, g);
        hi = max(hi, g);
    }
    return {lo, hi};
}

bool strictly_increasing(const std::vector<Rational>& xs)
{
    return std::adjacent_find(xs.begin(), xs.end(), [](const Rational& a, const Rational& b) { return !(a < b); }) ==
           xs.end();
}

std::uint64_t naive_cardinality(const FiniteSigma& sigma, const Rational& q, unsigned depth)
{
    std::set<Rational> level{Rational(0)};
    Rational power(1);
    for (unsigned k = 0; k < depth; ++k) {
        std::set<Rational> next;
        for (const Rational& x : level) {
            for (const Rational& a : sigma) {
                next.insert(x + a * power);
            }
        }
        level = std::move(next);
        power *= q;
    }
    return level.size();
}

bool strings_fit(std::uint64_t s, unsigned depth)
{
    std::uint64_t total = 1;
    for (unsigned k = 0; k < depth; ++k) {
        total *= s;
        if (total > kReplayEnumerationLimit) {
            return false;
        }
    }
    return true;
}

void check_threshold(Checker& c, const ThresholdWitness& w, bool above, const std::optional<FiniteSigma>& sigma)
{
    c.require(w.delta_max.sign() > 0 && w.diam.sign() > 0, "gap and diameter must be positive");
    c.require(w.delta_max <= w.diam, "largest gap exceeds the diameter");
    c.require(w.big_i == ratio_of_gaps(w.delta_max, w.diam), "big_i != delta_max / (delta_max + diam)");
    if (above) {
        c.require(w.q_bound >= w.big_i, "q lower endpoint is below I");
    } else {
        c.require(w.q_bound < w.big_i, "q upper endpoint is not below I");
    }
    c.require(w.q_bound.sign() > 0 && w.q_bound < Rational(1), "q outside (0,1)");
    if (sigma) {
        c.require(sigma->back() - sigma->front() == w.diam, "diam does not match the digit set");
        c.require(min_max_gap(sigma->elements()).second == w.delta_max, "largest gap does not match the digit set");
    }
}

void check_hull(Checker& c, const HullWitness& w, const std::optional<FiniteSigma>& sigma)
{
    c.require(w.subset.size() >= 2, "subset needs two elements");
    if (w.subset.size() < 2) {
        return;
    }
    c.require(strictly_increasing(w.subset), "subset is not strictly increasing");
    const Rational diam = w.subset.back() - w.subset.front();
    const Rational big = min_max_gap(w.subset).second;
    c.require(ratio_of_gaps(big, diam) == w.little_i, "little_i != I(subset)");
    c.require(w.q_lower >= w.little_i, "q lower endpoint is below I(subset)");
    c.require(w.q_lower < Rational(1), "q outside (0,1)");
    if (sigma) {
        for (const Rational& x : w.subset) {
            c.require(sigma->contains(x), "subset element " + x.str() + " not in the digit set");
        }
    }
}

void check_extreme_gap(Checker& c, const ExtremeGapWitness& w, const std::optional<FiniteSigma>& sigma)
{
    check_threshold(c, ThresholdWitness{w.q_upper, w.delta_max, w.diam, w.big_i}, false, sigma);
    c.require(w.gap_hi - w.gap_lo == w.delta_max, "extreme gap length differs from delta_max");
    if (sigma) {
        const std::size_t s = sigma->size();
        const bool left = (*sigma)[0] == w.gap_lo && (*sigma)[1] == w.gap_hi;
        const bool right = (*sigma)[s - 2] == w.gap_lo && (*sigma)[s - 1] == w.gap_hi;
        c.require(left || right, "gap is not the first or last gap of the digit set");
    }
}

void check_sumset_null(Checker& c, const SumsetNullWitness& w, const std::optional<FiniteSigma>& sigma)
{
    c.require(w.depth >= 1, "depth must be positive");
    c.require(w.q_upper.sign() > 0 && w.q_upper < Rational(1), "q outside (0,1)");
    c.require(w.bound == Rational(mpz_class(std::to_string(w.cardinality))) * w.q_upper.pow(w.depth),
              "bound != cardinality * q^depth");
    c.require(w.bound < Rational(1), "bound is not below 1");
    if (!w.q_exact) {
        c.require(w.depth == 1, "enclosure null bounds are only issued at depth 1");
    }
    if (!sigma) {
        return;
    }
    const std::uint64_t s = sigma->size();
    if (w.depth == 1) {
        c.require(w.cardinality == s, "cardinality at depth 1 must equal |Sigma|");
    } else if (w.q_exact && strings_fit(s, w.depth)) {
        c.require(naive_cardinality(*sigma, w.q_upper, w.depth) == w.cardinality,
                  "cardinality disagrees with a direct recount");
    }
}

void check_collapsed(Checker& c, const CollapsedNullWitness& w, const std::optional<FiniteSigma>& sigma)
{
    c.require(w.s >= 2 && w.n >= 2, "need s >= 2 and n >= 2");
    c.require(w.abc.b != w.abc.c, "b must differ from c");
    c.require(w.q_lo <= w.q_hi, "empty enclosure");
    c.require(w.q_lo > Rational(1, static_cast<long>(w.s)), "enclosure does not lie above 1/s");
    c.require(w.q_hi < Rational(1), "enclosure leaves (0,1)");
    if (!c.problems.empty()) {
        return;
    }
    const Rational target(1, static_cast<long>(w.s) - 1);
    auto poly = [&](const Rational& x) {
        Rational sum(0);
        Rational p = x;
        for (unsigned k = 1; k < w.n; ++k) {
            sum += p;
            p *= x;
        }
        return sum - target;
    };
    c.require(poly(w.q_lo).sign() <= 0 && poly(w.q_hi).sign() >= 0, "enclosure does not bracket the root");
    mpz_class sn;
    mpz_ui_pow_ui(sn.get_mpz_t(), w.s, w.n);
    mpz_class two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, w.n - 1);
    const Rational expected = Rational(mpz_class(sn - two), mpz_class(1)) * w.q_hi.pow(w.n);
    c.require(w.collapsed_bound == expected, "collapsed bound != (s^n - 2^(n-1)) * q_hi^n");
    c.require(w.collapsed_bound < Rational(1), "collapsed bound is not below 1");
    if (sigma) {
        c.require(sigma->size() == w.s, "s differs from |Sigma|");
        const Rational s(static_cast<long>(w.s));
        for (const Rational& x : {w.abc.a, w.abc.a + 1, w.abc.b + 1, w.abc.c + 1, w.abc.b + s, w.abc.c + s}) {
            c.require(sigma->contains(x), "condition element " + x.str() + " not in the digit set");
        }
    }
}

void check_collision(Checker& c, const CollisionWitness& w, const std::optional<FiniteSigma>& sigma)
{
    c.require(w.s >= 2, "need s >= 2");
    c.require(!w.first.empty() && w.first.size() == w.second.size(), "digit strings must have equal positive length");
    c.require(w.first != w.second, "digit strings are identical");
    if (!c.problems.empty()) {
        return;
    }
    const Rational q(1, static_cast<long>(w.s));
    Rational a(0);
    Rational b(0);
    Rational p(1);
    for (std::size_t k = 0; k < w.first.size(); ++k) {
        a += w.first[k] * p;
        b += w.second[k] * p;
        p *= q;
    }
    c.require(a == b, "digit strings have different values");
    if (sigma) {
        c.require(sigma->size() == w.s, "s differs from |Sigma|");
        for (const auto* str : {&w.first, &w.second}) {
            for (const Rational& x : *str) {
                c.require(sigma->contains(x), "digit " + x.str() + " not in the digit set");
            }
        }
    }
}

void check_window(Checker& c, const WindowWitness& w, const std::optional<FiniteSigma>& sigma)
{
    c.require(w.d.sign() > 0 && w.d <= Rational(1, 2), "d outside (0, 1/2]");
    c.require(w.alpha_lo <= w.alpha_hi && w.alpha_lo.sign() > 0 && w.alpha_hi < Rational(1), "bad alpha enclosure");
    c.require(w.window_lo < w.q_lower && w.q_lower <= w.q_upper && w.q_upper < w.alpha_lo,
              "q is not inside the window");
    if (!c.problems.empty()) {
        return;
    }
    const bool closed = (Rational(3) - w.d) * (Rational(3) - w.d) >= Rational(8);
    c.require(closed == (w.branch == AlphaBranch::ClosedForm), "branch does not match d");
    if (w.branch == AlphaBranch::ClosedForm) {
        // x / (1 - x) is increasing, so the root of (x / (1 - x))^2 = d lies between the endpoints.
        auto f = [](const Rational& x) {
            const Rational t = x / (Rational(1) - x);
            return t * t;
        };
        c.require(f(w.alpha_lo) <= w.d && w.d <= f(w.alpha_hi), "closed form root not enclosed");
    } else {
        auto cubic = [&](const Rational& x) {
            const Rational y = x - 1;
            return Rational(2) * y * y * y + (Rational(4) - Rational(2) * w.d) * y * y + Rational(3) * y + 1;
        };
        c.require(cubic(w.alpha_lo).sign() * cubic(w.alpha_hi).sign() <= 0, "cubic root not enclosed");
    }
    if (sigma) {
        c.require(w.window_lo == Rational(1, static_cast<long>(sigma->size())), "window start != 1/|Sigma|");
        const auto [small, big] = min_max_gap(sigma->elements());
        c.require(w.d == small / (sigma->back() - sigma->front()), "d does not match the digit set");
    }
}

void walk(const json& node, const std::string& path, const std::optional<FiniteSigma>& sigma, VerifyReport& report)
{
    std::optional<FiniteSigma> local = sigma;
    if (node.is_object()) {
        if (auto it = node.find("sigma"); it != node.end()) {
            try {
                local = sigma_from_json(*it);
            } catch (const std::exception& e) {
                report.failures.push_back({path + "/sigma", e.what()});
            }
        }
        if (node.contains("theorem_tag") && node.contains("witnesses")) {
            ++report.checked;
            try {
                for (const std::string& p : verify_certificate(certificate_from_json(node), local)) {
                    report.failures.push_back({path, p});
                }
            } catch (const std::exception& e) {
                report.failures.push_back({path, std::string("malformed certificate: ") + e.what()});
            }
        }
        for (const auto& [key, value] : node.items()) {
            if (key != "witnesses" && key != "sigma") {
                walk(value, path + "/" + key, local, report);
            }
        }
    } else if (node.is_array()) {
        for (std::size_t k = 0; k < node.size(); ++k) {
            walk(node[k], path + "/" + std::to_string(k), local, report);
        }
    }
}

}  // namespace

std::vector<std::string> verify_certificate(const Certificate& cert, const std::optional<FiniteSigma>& sigma)
{
    Checker c;
    const bool matches = std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            switch (cert.tag) {
            case TheoremTag::IntervalThreshold:
            case TheoremTag::BelowIntervalThreshold:
                if constexpr (std::is_same_v<W, ThresholdWitness>) {
                    check_threshold(c, w, cert.tag == TheoremTag::IntervalThreshold, sigma);
                    return true;
                }
                break;
            case TheoremTag::HullSubset:
                if constexpr (std::is_same_v<W, HullWitness>) {
                    check_hull(c, w, sigma);
                    return true;
                }
                break;
            case TheoremTag::ExtremeGap:
                if constexpr (std::is_same_v<W, ExtremeGapWitness>) {
                    check_extreme_gap(c, w, sigma);
                    return true;
                }
                break;
            case TheoremTag::SumsetNullBound:
                if constexpr (std::is_same_v<W, SumsetNullWitness>) {
                    check_sumset_null(c, w, sigma);
                    return true;
                }
                break;
            case TheoremTag::CollapsedNullBound:
                if constexpr (std::is_same_v<W, CollapsedNullWitness>) {
                    check_collapsed(c, w, sigma);
                    return true;
                }
                break;
            case TheoremTag::DigitCollision:
                if constexpr (std::is_same_v<W, CollisionWitness>) {
                    check_collision(c, w, sigma);
                    return true;
                }
                break;
            case TheoremTag::AeWindow:
                if constexpr (std::is_same_v<W, WindowWitness>) {
                    check_window(c, w, sigma);
                    return true;
                }
                break;
            }
            return false;
        },
        cert.witness);
    if (!matches) {
        c.problems.emplace_back("witness type does not match the theorem tag");
    }
    return c.problems;
}

VerifyReport verify_document(const json& doc)
{
    VerifyReport report;
    walk(doc, "", std::nullopt, report);
    return report;
}

json to_json(const VerifyReport& r)
{
    json failures = json::array();
    for (const VerifyFailure& f : r.failures) {
        failures.push_back({{"path", f.path.empty() ? "/" : f.path}, {"reason", f.reason}});
    }
    return {{"schema", "verify/v1"}, {"ok", r.ok()}, {"checked", r.checked}, {"failures", failures}};
}

}  // namespace ksigma
