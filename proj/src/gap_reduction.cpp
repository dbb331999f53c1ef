#include "permpat/gap_reduction.hpp"
#include "permpat/matching.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace permpat {

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0)
        throw std::invalid_argument("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::to_string() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator<(const Rational& a, const Rational& b)
{
    return a.num_ * b.den_ < b.num_ * a.den_;
}

int compare_powers(std::vector<PowerTerm> lhs, std::vector<PowerTerm> rhs)
{
    // net exponent per base, as lhs / rhs
    std::vector<PowerTerm> net;
    auto merge = [&](const PowerTerm& term, bool negate) {
        if (term.base < 1)
            throw std::invalid_argument("compare_powers: base must be >= 1");
        const Rational e = negate ? Rational(0, 1) - term.exponent : term.exponent;
        for (auto& t : net) {
            if (t.base == term.base) {
                t.exponent = t.exponent + e;
                return;
            }
        }
        net.push_back({term.base, e});
    };
    for (const auto& t : lhs)
        merge(t, false);
    for (const auto& t : rhs)
        merge(t, true);

    std::int64_t common = 1;
    for (const auto& t : net)
        common = std::lcm(common, t.exponent.den());

    BigCount left = 1;
    BigCount right = 1;
    for (const auto& t : net) {
        if (t.base == 1 || t.exponent.num() == 0)
            continue;
        const std::int64_t e = t.exponent.num() * (common / t.exponent.den());
        if (e > 0)
            left *= big_pow(t.base, static_cast<std::uint64_t>(e));
        else
            right *= big_pow(t.base, static_cast<std::uint64_t>(-e));
    }
    return left < right ? -1 : (left > right ? 1 : 0);
}

std::uint64_t alpha_for(const Rational& epsilon)
{
    // ceil(2q / p)
    const std::int64_t p = epsilon.num();
    const std::int64_t q = epsilon.den();
    return static_cast<std::uint64_t>((2 * q + p - 1) / p);
}

namespace {

void require_epsilon(const Rational& epsilon)
{
    if (!(Rational(0, 1) < epsilon) || !(epsilon < Rational(1, 2)))
        throw std::invalid_argument("epsilon must lie strictly between 0 and 1/2, got " + epsilon.to_string());
}

BigCount threshold_power(const Rational& epsilon, std::uint64_t alpha, std::size_t k)
{
    return big_pow(BigCount((alpha + 1) * k), 2 * alpha * static_cast<std::uint64_t>(epsilon.den()));
}

} // namespace

GapParams gap_params(const Rational& epsilon, std::size_t k, const BigCount& n)
{
    require_epsilon(epsilon);
    if (k < 1)
        throw std::invalid_argument("gap_params: k must be >= 1");
    if (n < 1)
        throw std::invalid_argument("gap_params: n must be >= 1");
    GapParams params;
    params.epsilon = epsilon;
    params.alpha = alpha_for(epsilon);
    params.k = k;
    params.n = n;
    params.below_threshold =
        big_pow(n, static_cast<std::uint64_t>(epsilon.num())) < threshold_power(epsilon, params.alpha, k);
    return params;
}

BigCount minimal_above_threshold_n(const Rational& epsilon, std::size_t k)
{
    require_epsilon(epsilon);
    const auto alpha = alpha_for(epsilon);
    return iroot_ceil(threshold_power(epsilon, alpha, k), static_cast<std::uint64_t>(epsilon.num()));
}

std::string_view branch_name(GapBranch branch)
{
    switch (branch) {
    case GapBranch::trivial_yes: return "trivial_yes";
    case GapBranch::trivial_no: return "trivial_no";
    case GapBranch::inflated: return "inflated";
    }
    return "inflated";
}

std::size_t max_text_length_from_env()
{
    if (const char* env = std::getenv("PERMPAT_MAX_TEXT_LEN")) {
        std::size_t v = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && ptr == s.data() + s.size() && v > 0)
            return v;
    }
    return kDefaultMaxTextLength;
}

GapInstance build_core(const Permutation& pattern, const Permutation& text, std::uint64_t alpha,
                       std::size_t max_text_length)
{
    if (pattern.empty() || text.empty())
        throw std::invalid_argument("build_core: pattern and text must be non-empty");
    if (alpha < 1)
        throw std::invalid_argument("build_core: alpha must be >= 1");
    const std::size_t k = pattern.size();
    const std::size_t n = text.size();

    const BigCount layer = big_pow(BigCount(n), alpha);
    const BigCount block = BigCount(alpha * k) * layer;
    if (block + (n - 1) > max_text_length)
        throw std::length_error("instance too large: inflated text length " + to_decimal(block + (n - 1)) +
                                " exceeds " + std::to_string(max_text_length));

    const auto pattern_block = static_cast<std::size_t>(alpha * k);
    const auto layer_size = static_cast<std::size_t>(layer);

    std::vector<Permutation> pattern_blocks(k, Permutation{1});
    pattern_blocks[0] = Permutation::identity(pattern_block);
    std::vector<Permutation> text_blocks(n, Permutation{1});
    const std::vector<std::size_t> layers(pattern_block, layer_size);
    text_blocks[0] = layered(layers);

    GapInstance gap;
    gap.pattern = inflate(pattern, pattern_blocks);
    gap.text = inflate(text, text_blocks);
    gap.branch = GapBranch::inflated;
    gap.alpha = alpha;
    gap.k_prime = gap.pattern.size();
    gap.n_prime = gap.text.size();
    gap.initial_block_pattern_len = pattern_block;
    gap.initial_block_text_len = pattern_block * layer_size;
    gap.source_k = k;
    gap.source_n = n;
    return gap;
}

GapInstance build_gap_instance(const Permutation& pattern, const Permutation& text, const Rational& epsilon,
                               std::size_t max_text_length)
{
    if (pattern.empty() || text.empty())
        throw std::invalid_argument("build_gap_instance: pattern and text must be non-empty");
    const GapParams params = gap_params(epsilon, pattern.size(), BigCount(text.size()));
    if (!params.below_threshold)
        return build_core(pattern, text, params.alpha, max_text_length);

    const bool yes = count_left_aligned(pattern, text) > 0;
    GapInstance gap;
    gap.branch = yes ? GapBranch::trivial_yes : GapBranch::trivial_no;
    gap.pattern = yes ? Permutation{1} : Permutation{1, 2};
    gap.text = yes ? Permutation{1, 2} : Permutation{2, 1};
    gap.alpha = params.alpha;
    gap.k_prime = gap.pattern.size();
    gap.n_prime = gap.text.size();
    gap.source_k = pattern.size();
    gap.source_n = text.size();
    return gap;
}

BigCount copies_touching_initial_block(const GapInstance& gap)
{
    if (gap.branch != GapBranch::inflated)
        throw std::invalid_argument("copies_touching_initial_block: instance is not from the inflated branch");
    const auto values = gap.text.values();
    std::vector<long long> rest(values.begin() + static_cast<std::ptrdiff_t>(gap.initial_block_text_len),
                                values.end());
    const Permutation suffix = standardize(rest);
    return count_copies(gap.pattern, gap.text) - count_copies(gap.pattern, suffix);
}

bool BoundsReport::all_hold() const
{
    for (const auto& c : checks)
        if (!c.holds)
            return false;
    return true;
}

namespace {

Rational integer(std::uint64_t v)
{
    return Rational(static_cast<std::int64_t>(v), 1);
}

BigCount n_prime_of(const BigCount& n, std::size_t k, std::uint64_t alpha)
{
    return n - 1 + BigCount(alpha * k) * big_pow(n, alpha);
}

} // namespace

BoundsReport check_size_bounds(const BigCount& n, std::size_t k, std::uint64_t alpha)
{
    const BigCount np = n_prime_of(n, k, alpha);
    const BigCount na = big_pow(n, alpha);
    BoundsReport report;
    report.checks.push_back({"size.lower", "n^alpha <= n'", na <= np});
    report.checks.push_back({"size.upper", "n' <= (alpha+1) k n^alpha", np <= BigCount((alpha + 1) * k) * na});
    return report;
}

BoundsReport check_bounds(const BigCount& n, std::size_t k, const Rational& epsilon)
{
    const GapParams params = gap_params(epsilon, k, n);
    if (params.below_threshold)
        throw std::domain_error("threshold precondition unmet");

    const std::uint64_t a = params.alpha;
    const std::uint64_t kk = k;
    const std::uint64_t kp = a * kk + kk - 1;
    const BigCount np = n_prime_of(n, k, a);
    const Rational eps = epsilon;
    const Rational half_eps = eps * Rational(1, 2);

    auto ge = [](std::vector<PowerTerm> l, std::vector<PowerTerm> r) { return compare_powers(l, r) >= 0; };
    auto le = [](std::vector<PowerTerm> l, std::vector<PowerTerm> r) { return compare_powers(l, r) <= 0; };
    auto lt = [](std::vector<PowerTerm> l, std::vector<PowerTerm> r) { return compare_powers(l, r) < 0; };

    BoundsReport report = check_size_bounds(n, k, a);
    // (alpha+1) k n^alpha <= n^(eps/(2 alpha)) n^alpha
    report.checks.push_back({"size.threshold", "(alpha+1) k n^alpha <= n^(eps/(2 alpha)) n^alpha",
                             le({{BigCount((a + 1) * kk), integer(1)}, {n, integer(a)}},
                                {{n, eps * Rational(1, static_cast<std::int64_t>(2 * a))}, {n, integer(a)}})});

    // lower-bound chain for the yes case
    const Rational ak = integer(a * kk);
    const Rational minus_half_eps_k = Rational(0, 1) - half_eps * integer(kk);
    const Rational minus_half_eps_kp = Rational(0, 1) - half_eps * integer(kp);
    const Rational frac = Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(a + 1));
    const Rational one = integer(1);

    report.checks.push_back({"yes.1", "n^(alpha^2 k) >= (n' / n^(eps/(2 alpha)))^(alpha k)",
                             ge({{n, integer(a * a * kk)}}, {{np, ak}, {n, minus_half_eps_k}})});
    report.checks.push_back({"yes.2", "(n' / n^(eps/(2 alpha)))^(alpha k) >= n^(-eps k/2) n'^(alpha/(alpha+1) k')",
                             ge({{np, ak}, {n, minus_half_eps_k}}, {{n, minus_half_eps_k}, {np, frac * integer(kp)}})});
    report.checks.push_back(
        {"yes.3", "n^(-eps k/2) n'^(alpha/(alpha+1) k') >= n'^(-eps k'/2) n'^((1 - 1/(alpha+1)) k')",
         ge({{n, minus_half_eps_k}, {np, frac * integer(kp)}},
            {{np, minus_half_eps_kp}, {np, (one - Rational(1, static_cast<std::int64_t>(a + 1))) * integer(kp)}})});
    report.checks.push_back(
        {"yes.4", "n'^(-eps k'/2) n'^((1 - 1/(alpha+1)) k') >= n'^(-eps k'/2) n'^((1 - eps/2) k')",
         ge({{np, minus_half_eps_kp}, {np, (one - Rational(1, static_cast<std::int64_t>(a + 1))) * integer(kp)}},
            {{np, minus_half_eps_kp}, {np, (one - half_eps) * integer(kp)}})});
    report.checks.push_back({"yes.5", "n'^(-eps k'/2) n'^((1 - eps/2) k') = n'^((1 - eps) k')",
                             compare_powers({{np, minus_half_eps_kp}, {np, (one - half_eps) * integer(kp)}},
                                            {{np, (one - eps) * integer(kp)}}) == 0});
    report.checks.push_back({"yes.net", "n^(alpha^2 k) >= n'^((1 - eps) k')",
                             ge({{n, integer(a * a * kk)}}, {{np, (one - eps) * integer(kp)}})});

    // upper-bound chain for the no case
    report.checks.push_back({"no.1", "binom(n-1, k') <= n^k'", binomial(n - 1, kp) <= big_pow(n, kp)});
    report.checks.push_back({"no.2", "n^k' <= n'^(k'/alpha)",
                             le({{n, integer(kp)}}, {{np, Rational(static_cast<std::int64_t>(kp),
                                                                   static_cast<std::int64_t>(a))}})});
    report.checks.push_back(
        {"no.3", "n'^(k'/alpha) < n'^(eps k')",
         lt({{np, Rational(static_cast<std::int64_t>(kp), static_cast<std::int64_t>(a))}}, {{np, eps * integer(kp)}})});
    return report;
}

bool meets_gap_yes(const BigCount& count, std::size_t n, std::size_t k, const Rational& epsilon)
{
    if (count == 0)
        return false;
    return compare_powers({{count, integer(1)}},
                          {{BigCount(n), (Rational(1, 1) - epsilon) * integer(k)}}) >= 0;
}

bool meets_gap_no(const BigCount& count, std::size_t n, std::size_t k, const Rational& epsilon)
{
    if (count == 0)
        return true;
    return compare_powers({{count, integer(1)}}, {{BigCount(n), epsilon * integer(k)}}) <= 0;
}

bool decide_via_approx(const Permutation& pattern, const Permutation& text, const BigCount& estimate)
{
    return estimate * estimate > big_pow(BigCount(text.size()), pattern.size());
}

} // namespace permpat
