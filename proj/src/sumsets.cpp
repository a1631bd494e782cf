#include "ksigma/sumsets.hpp"

#include "ksigma/errors.hpp"

#include <algorithm>
#include <string>

namespace ksigma {

namespace {

std::int64_t to_int64(const mpz_class& z, unsigned depth)
{
    if (!mpz_fits_slong_p(z.get_mpz_t())) {
        throw BudgetExceeded("scaled sumset value exceeds 64-bit range at depth " + std::to_string(depth + 1),
                             depth);
    }
    return mpz_get_si(z.get_mpz_t());
}

// Merges consecutive sorted runs of `data` (boundaries in `runs`) into one sorted run.
void merge_runs(std::vector<std::int64_t>& data, std::vector<std::size_t> runs)
{
    std::vector<std::int64_t> buffer(data.size());
    while (runs.size() > 2) {
        std::vector<std::size_t> next{0};
        std::size_t k = 0;
        for (; k + 2 < runs.size(); k += 2) {
            std::merge(data.begin() + static_cast<std::ptrdiff_t>(runs[k]),
                       data.begin() + static_cast<std::ptrdiff_t>(runs[k + 1]),
                       data.begin() + static_cast<std::ptrdiff_t>(runs[k + 1]),
                       data.begin() + static_cast<std::ptrdiff_t>(runs[k + 2]),
                       buffer.begin() + static_cast<std::ptrdiff_t>(runs[k]));
            next.push_back(runs[k + 2]);
        }
        if (k + 1 < runs.size()) {
            std::copy(data.begin() + static_cast<std::ptrdiff_t>(runs[k]),
                      data.begin() + static_cast<std::ptrdiff_t>(runs[k + 1]),
                      buffer.begin() + static_cast<std::ptrdiff_t>(runs[k]));
            if (next.back() != runs[k + 1]) {
                next.push_back(runs[k + 1]);
            }
        }
        data.swap(buffer);
        runs = std::move(next);
    }
}

}  // namespace

SumsetEngine::SumsetEngine(const FiniteSigma& sigma, const Rational& q, SumsetOptions options,
                           bool track_collisions)
    : digits_(sigma.begin(), sigma.end()), q_(q), p_(q.num()), r_(q.den()), options_(options),
      track_(track_collisions)
{
    if (q.sign() <= 0 || q >= Rational(1)) {
        throw InvalidArgument("sumset ratio must lie in (0,1), got " + q.str());
    }
    lcm_ = denominator_lcm(digits_);
    if (!mpz_fits_slong_p(p_.get_mpz_t())) {
        throw BudgetExceeded("ratio numerator exceeds 64-bit range", 0);
    }
    p64_ = mpz_get_si(p_.get_mpz_t());
    for (const Rational& d : digits_) {
        mpz_class scaled = d.num() * (lcm_ / d.den());
        scaled_digits_.push_back(scaled);
    }
    if (digits_.size() > options_.max_elements) {
        throw BudgetExceeded("digit set larger than the element cap", 0);
    }
    current_.reserve(digits_.size());
    for (const mpz_class& z : scaled_digits_) {
        current_.push_back(to_int64(z, 0));
    }
    depth_ = 1;
}

mpz_class SumsetEngine::scale() const
{
    mpz_class s;
    mpz_pow_ui(s.get_mpz_t(), r_.get_mpz_t(), depth_ - 1);
    return s * lcm_;
}

Rational SumsetEngine::value_at(std::size_t i) const
{
    return Rational(mpz_class(static_cast<long>(current_.at(i))), scale());
}

Rational SumsetEngine::bound() const
{
    return Rational(static_cast<long>(current_.size())) * q_.pow(depth_);
}

std::int64_t SumsetEngine::shift(std::size_t digit, unsigned level) const
{
    // Offset of the leading digit when building `level` from `level - 1`.
    mpz_class rp;
    mpz_pow_ui(rp.get_mpz_t(), r_.get_mpz_t(), level - 1);
    return to_int64(scaled_digits_[digit] * rp, level - 1);
}

void SumsetEngine::advance()
{
    const std::size_t s = digits_.size();
    const std::size_t n = current_.size();
    if (n > options_.max_elements / s) {
        throw BudgetExceeded("projected size of level " + std::to_string(depth_ + 1) + " (" +
                                 std::to_string(n) + " x " + std::to_string(s) +
                                 ") exceeds the element cap of " + std::to_string(options_.max_elements),
                             depth_);
    }
    const unsigned next_level = depth_ + 1;

    std::vector<std::int64_t> shifts(s);
    for (std::size_t i = 0; i < s; ++i) {
        shifts[i] = shift(i, next_level);
    }

    std::vector<std::int64_t> out(n * s);
    std::vector<std::size_t> runs{0};
    std::size_t pos = 0;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::int64_t x : current_) {
            std::int64_t scaled = 0;
            std::int64_t v = 0;
            if (__builtin_mul_overflow(x, p64_, &scaled) || __builtin_add_overflow(scaled, shifts[i], &v)) {
                throw BudgetExceeded("scaled sumset value exceeds 64-bit range at depth " +
                                         std::to_string(next_level),
                                     depth_);
            }
            out[pos++] = v;
        }
        runs.push_back(pos);
    }
    merge_runs(out, std::move(runs));

    std::optional<std::int64_t> duplicate;
    if (track_ && !collision_) {
        const auto it = std::adjacent_find(out.begin(), out.end());
        if (it != out.end()) {
            duplicate = *it;
        }
    }

    if (duplicate) {
        // Distinct leading digits give the two representations, since the
        // previous levels are collision-free.
        std::vector<std::vector<Rational>> reps;
        for (std::size_t i = 0; i < s && reps.size() < 2; ++i) {
            const std::int64_t rest = *duplicate - shifts[i];
            if (rest % p64_ != 0) {
                continue;
            }
            const std::int64_t x = rest / p64_;
            if (!std::binary_search(current_.begin(), current_.end(), x)) {
                continue;
            }
            std::vector<Rational> digits{digits_[i]};
            const std::vector<Rational> tail = decode(depth_, x);
            digits.insert(digits.end(), tail.begin(), tail.end());
            reps.push_back(std::move(digits));
        }
        mpz_class sc;
        mpz_pow_ui(sc.get_mpz_t(), r_.get_mpz_t(), next_level - 1);
        collision_ = DigitCollision{reps.at(0), reps.at(1),
                                    Rational(mpz_class(static_cast<long>(*duplicate)), sc * lcm_)};
        collision_depth_ = next_level;
    }

    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.shrink_to_fit();

    if (track_ && !collision_) {
        history_.push_back(std::move(current_));
    } else {
        history_.clear();
    }
    current_ = std::move(out);
    depth_ = next_level;
}

std::vector<Rational> SumsetEngine::decode(unsigned level, std::int64_t value) const
{
    std::vector<Rational> digits;
    while (true) {
        const std::vector<std::int64_t>& lv = level == depth_ ? current_ : history_.at(level - 1);
        if (level == 1) {
            for (std::size_t i = 0; i < digits_.size(); ++i) {
                if (lv[i] == value) {
                    digits.push_back(digits_[i]);
                    return digits;
                }
            }
            throw Error("sumset decode failed at level 1");
        }
        const std::vector<std::int64_t>& below = history_.at(level - 2);
        bool found = false;
        for (std::size_t i = 0; i < digits_.size() && !found; ++i) {
            const std::int64_t rest = value - shift(i, level);
            if (rest % p64_ == 0 && std::binary_search(below.begin(), below.end(), rest / p64_)) {
                digits.push_back(digits_[i]);
                value = rest / p64_;
                found = true;
            }
        }
        if (!found) {
            throw Error("sumset decode failed at level " + std::to_string(level));
        }
        --level;
    }
}

// ---------------------------------------------------------------------------

FiniteSigma sigma_n(const FiniteSigma& sigma, const Rational& q, unsigned n, SumsetOptions options)
{
    if (n == 0) {
        throw InvalidArgument("depth must be positive");
    }
    SumsetEngine engine(sigma, q, options);
    while (engine.depth() < n) {
        engine.advance();
    }
    std::vector<Rational> values;
    values.reserve(engine.cardinality());
    for (std::size_t i = 0; i < engine.cardinality(); ++i) {
        values.push_back(engine.value_at(i));
    }
    return FiniteSigma(std::move(values));
}

SumsetReport sumset_report(const FiniteSigma& sigma, const Rational& q, unsigned n, SumsetOptions options)
{
    if (n == 0) {
        throw InvalidArgument("depth must be positive");
    }
    SumsetEngine engine(sigma, q, options, /*track_collisions=*/true);
    while (engine.depth() < n) {
        engine.advance();
    }
    return SumsetReport{engine.depth(), engine.cardinality(), engine.bound(), engine.first_collision()};
}

std::optional<NullCertificate> null_certificate(const FiniteSigma& sigma, const Rational& q, unsigned max_depth,
                                                SumsetOptions options)
{
    if (max_depth == 0) {
        throw InvalidArgument("max_depth must be positive");
    }
    SumsetEngine engine(sigma, q, options);
    while (true) {
        const Rational bound = engine.bound();
        if (bound < Rational(1)) {
            return NullCertificate{engine.depth(), engine.cardinality(), q, bound};
        }
        if (engine.depth() >= max_depth) {
            return std::nullopt;
        }
        engine.advance();
    }
}

CoverReport cover_length(const FiniteSigma& sigma, const Rational& q, unsigned n, SumsetOptions options,
                         bool with_components)
{
    if (n == 0) {
        throw InvalidArgument("depth must be positive");
    }
    SumsetEngine engine(sigma, q, options);
    while (engine.depth() < n) {
        engine.advance();
    }
    const auto level = engine.level();
    const mpz_class scale = engine.scale();
    const mpz_class p = q.num();
    const mpz_class r = q.den();

    const Rational diam = sigma.back() - sigma.front();
    CoverReport rep;
    rep.depth = n;
    rep.cover_intervals = level.size();
    rep.diam_k = diam / (Rational(1) - q);
    rep.piece_length = q.pow(n) * rep.diam_k;

    // In scaled units the piece length is A / B with A = p^n * diam * L and B = r - p.
    const mpz_class lcm = denominator_lcm(sigma.elements());
    const Rational diam_scaled = diam * Rational(lcm);
    mpz_class pn;
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n);
    const mpz_class a = pn * diam_scaled.num();
    const mpz_class b = r - p;
    // A gap g (integer) breaks the union iff g > A/B, i.e. g >= floor(A/B) + 1.
    mpz_class threshold;
    mpz_fdiv_q(threshold.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    threshold += 1;
    const bool threshold_fits = mpz_fits_slong_p(threshold.get_mpz_t()) != 0;
    const std::int64_t t64 = threshold_fits ? mpz_get_si(threshold.get_mpz_t()) : 0;

    __extension__ __int128 small_sum = 0;
    std::uint64_t breaks = 0;
    const Rational piece_scaled(a, b);
    const Rational offset_lo = q.pow(n) * sigma.front() / (Rational(1) - q);
    const Rational offset_hi = q.pow(n) * sigma.back() / (Rational(1) - q);
    std::size_t comp_start = 0;
    for (std::size_t j = 1; j < level.size(); ++j) {
        const std::int64_t gap = level[j] - level[j - 1];
        if (threshold_fits && gap >= t64) {
            ++breaks;
            if (with_components) {
                rep.components.push_back(
                    {Rational(mpz_class(static_cast<long>(level[comp_start])), scale) + offset_lo,
                     Rational(mpz_class(static_cast<long>(level[j - 1])), scale) + offset_hi});
            }
            comp_start = j;
        } else {
            small_sum += gap;
        }
    }
    if (with_components && !level.empty()) {
        rep.components.push_back({Rational(mpz_class(static_cast<long>(level[comp_start])), scale) + offset_lo,
                                  Rational(mpz_class(static_cast<long>(level.back())), scale) + offset_hi});
    }
    rep.component_count = breaks + 1;

    // small_sum fits: it is bounded by max - min of the level, an int64 difference.
    const mpz_class small(std::to_string(static_cast<long long>(small_sum)));
    const Rational total_scaled = Rational(small) + Rational(static_cast<long>(breaks + 1)) * piece_scaled;
    rep.total_length = total_scaled / Rational(scale);
    return rep;
}

T12Result t12_check(const FiniteSigma& sigma, const Rational& q, unsigned max_depth, SumsetOptions options)
{
    if (!sigma.is_integral()) {
        throw InvalidArgument("rational-ratio check needs an integer digit set");
    }
    if (q.num() != 1 || q.den() < 2) {
        throw InvalidArgument("rational-ratio check needs q = 1/(k+1) with k >= 1, got " + q.str());
    }
    if (max_depth == 0) {
        throw InvalidArgument("max_depth must be positive");
    }
    T12Result result;
    SumsetEngine engine(sigma, q, options);
    while (true) {
        result.cardinalities.push_back(engine.cardinality());
        result.checked_depth = engine.depth();
        const Rational bound = engine.bound();
        if (bound < Rational(1)) {
            result.zero_measure = NullCertificate{engine.depth(), engine.cardinality(), q, bound};
            return result;
        }
        if (engine.depth() >= max_depth) {
            return result;
        }
        engine.advance();
    }
}

FullSumsetResult full_sumset_check(const FiniteSigma& sigma, unsigned max_depth, SumsetOptions options)
{
    if (!sigma.is_integral()) {
        throw InvalidArgument("full sumset check needs an integer digit set");
    }
    if (max_depth == 0) {
        throw InvalidArgument("max_depth must be positive");
    }
    const Rational q(1, static_cast<long>(sigma.size()));
    SumsetEngine engine(sigma, q, options, /*track_collisions=*/true);
    FullSumsetResult result;
    result.checked_depth = 1;
    while (engine.depth() < max_depth) {
        engine.advance();
        result.checked_depth = engine.depth();
        if (engine.first_collision()) {
            result.collision = engine.first_collision();
            result.collision_depth = engine.first_collision_depth();
            break;
        }
    }
    return result;
}

}  // namespace ksigma
