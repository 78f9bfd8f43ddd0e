#include "fanol2/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "fanol2/error.hpp"
#include "fanol2/hypercore.hpp"

namespace fanol2 {

namespace {

constexpr double kTieTolerance = 1e-12;

BoundPoint make_point(double x, double alpha, double first, double second)
{
    BoundPoint p;
    p.x = x;
    p.alpha = alpha;
    p.first = first;
    p.second = second;
    p.value = std::max(first, second);
    if (std::abs(first - second) <= kTieTolerance)
        p.active = Branch::Tie;
    else
        p.active = first > second ? Branch::First : Branch::Second;
    return p;
}

void check_unit_half(double x, const char* what)
{
    if (!(x >= 0.0 && x <= 0.5))
        fail(ErrorCode::OutOfRange, std::string(what) + " must lie in [0, 1/2]");
}

double ak_first(double x)
{
    return (std::pow(1.0 - 2.0 * x, 1.5) + 4.0 * x - 1.0) / 2.0;
}

double prop23_first(double x, double a)
{
    return (a * a * a + (2.0 * x - a * a) * std::sqrt(2.0 * x + a * a)) / 2.0;
}

BoundPoint doubled(BoundPoint p)
{
    return make_point(p.x, p.alpha, 2.0 * p.first, 2.0 * p.second);
}

// Value of alpha^3 + (2 rho - alpha^2)(2 rho + alpha^2)^{1/2} + 2 rho.
double star_form(double rho, double alpha)
{
    return 2.0 * prop23_first(rho, alpha) + 2.0 * rho;
}

} // namespace

const char* to_string(Branch b)
{
    switch (b) {
    case Branch::First:
        return "first";
    case Branch::Second:
        return "second";
    case Branch::Tie:
        return "tie";
    }
    return "?";
}

BoundPoint ak_s2_bound(double x)
{
    check_unit_half(x, "x");
    return make_point(x, 0.0, ak_first(x), std::sqrt(2.0) * std::pow(x, 1.5));
}

BoundPoint ak_norm_bound(double x)
{
    return doubled(ak_s2_bound(x));
}

BoundPoint prop23_bound(double x, double alpha)
{
    check_unit_half(x, "x");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        fail(ErrorCode::OutOfRange, "alpha must lie in [0, 1]");
    BoundPoint p = make_point(x, alpha, prop23_first(x, alpha), ak_first(x));
    const bool x_ok = x >= 17.0 / 50.0 && x <= 7.0 / 20.0;
    const bool a_ok = (alpha >= 17.0 / 100.0 && alpha <= 23.0 / 100.0) || (alpha >= 1.0 / 3.0 && alpha <= 2.0 / 5.0);
    p.in_regime = x_ok && a_ok;
    return p;
}

BoundPoint prop23_norm_bound(double x, double alpha)
{
    const BoundPoint half = prop23_bound(x, alpha);
    BoundPoint p = doubled(half);
    p.in_regime = half.in_regime;
    return p;
}

double beta1(double x)
{
    check_unit_half(x, "x");
    return std::sqrt(1.0 - 2.0 * x);
}

double beta2(double x)
{
    check_unit_half(x, "x");
    return std::sqrt(2.0 * x);
}

double beta3(double x, double alpha)
{
    check_unit_half(x, "x");
    return std::sqrt(alpha * alpha + 2.0 * x) - alpha;
}

BoundPoint f_point(double y)
{
    check_unit_half(y, "y");
    return make_point(y, 0.0, std::pow(1.0 - 2.0 * y, 1.5) + 6.0 * y - 1.0, std::pow(2.0 * y, 1.5) + 2.0 * y);
}

double f_of(double y)
{
    return f_point(y).value;
}

double f_inverse(double t)
{
    if (!(t >= 0.0 && t <= 2.0))
        fail(ErrorCode::OutOfRange, "f_inverse argument must lie in [0, 2]");
    double lo = 0.0;
    double hi = 0.5;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (f_of(mid) < t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// --- lemma helpers ------------------------------------------------------------

namespace {

Rational core_radicand(const Rational& size, std::uint64_t n, const Rational& beta)
{
    if (beta < 0 || beta >= Rational(7, 2))
        fail(ErrorCode::OutOfRange, "beta must lie in [0, 7/2)");
    const Rational nn = Rational(BigInt(n) * (BigInt(n) + 1));
    return (4 * size - 2 * beta * nn) / (7 - 2 * beta);
}

} // namespace

double lemma34_core_bound(const Rational& size, std::uint64_t n, const Rational& beta)
{
    const Rational r = core_radicand(size, n, beta);
    return r <= 0 ? 0.0 : std::sqrt(to_double(r));
}

bool lemma34_size_ok(std::uint64_t core_size, const Rational& size, std::uint64_t n, const Rational& beta)
{
    const Rational r = core_radicand(size, n, beta);
    return Rational(BigInt(core_size) * core_size) >= r;
}

bool lemma35_check(const std::vector<BigInt>& degrees, std::uint64_t n)
{
    if (degrees.size() != 5)
        fail(ErrorCode::InvalidArgument, "lemma35_check expects five degrees");
    BigInt sum = 0;
    for (const BigInt& d : degrees)
        sum += d;
    const BigInt dmin = *std::min_element(degrees.begin(), degrees.end());
    return 34 * sum + 6 * dmin <= 61 * BigInt(n) * (BigInt(n) + 1);
}

Rational dmin_bound(std::uint64_t n)
{
    return Rational(61 * BigInt(n) * (BigInt(n) + 1), BigInt(176));
}

double claim_radical(double rho)
{
    const double r = 260.0 / 3.0 * rho - 88.0 / 3.0;
    if (r < 0.0)
        fail(ErrorCode::OutOfRange, "negative radicand: rho below 88/260");
    return std::sqrt(r);
}

namespace {

double finite_alpha(double c, double dmin, double n)
{
    if (n <= 0.0)
        fail(ErrorCode::OutOfRange, "n must be positive");
    const double r = 260.0 / 3.0 * dmin - 88.0 / 3.0 * n * (n + 1.0);
    if (r < 0.0)
        fail(ErrorCode::OutOfRange, "negative radicand in alpha");
    return c / (13.0 * n) * std::sqrt(r);
}

} // namespace

double alpha1(double dmin, double n)
{
    return finite_alpha(4.0, dmin, n);
}

double alpha2(double dmin, double n)
{
    return finite_alpha(6.0, dmin, n);
}

double alpha1_asymptotic(double rho)
{
    return 4.0 / 13.0 * claim_radical(rho);
}

double alpha2_asymptotic(double rho)
{
    return 6.0 / 13.0 * claim_radical(rho);
}

// --- claim equations ----------------------------------------------------------

const char* to_string(ClaimEquation e)
{
    switch (e) {
    case ClaimEquation::Claim32:
        return "claim32";
    case ClaimEquation::Claim33:
        return "claim33";
    case ClaimEquation::Claim34:
        return "claim34";
    case ClaimEquation::LinearBranch:
        return "linear";
    }
    return "?";
}

ClaimEquation claim_equation_from_string(const std::string& name)
{
    for (ClaimEquation e :
         {ClaimEquation::Claim32, ClaimEquation::Claim33, ClaimEquation::Claim34, ClaimEquation::LinearBranch})
        if (name == to_string(e))
            return e;
    fail(ErrorCode::InvalidArgument, "unknown claim equation '" + name + "'");
}

double claim_equation_value(ClaimEquation e, double rho)
{
    switch (e) {
    case ClaimEquation::Claim32: {
        const double r = claim_radical(rho);
        return 64.0 / 2197.0 * r * r * r -
               22.0 * (143.0 * rho - 64.0) / 6591.0 * std::sqrt(2.0 * (2587.0 * rho - 704.0) / 3.0) + 2.0 * rho;
    }
    case ClaimEquation::Claim33: {
        if (65.0 * rho - 22.0 < 0.0)
            fail(ErrorCode::OutOfRange, "negative radicand: rho below 22/65");
        return 192.0 * std::sqrt(3.0) * std::pow(65.0 * rho - 22.0, 1.5) / 2197.0 +
               2.0 * (528.0 - 1391.0 * rho) * std::sqrt(3458.0 * rho - 1056.0) / 2197.0 + 2.0 * rho;
    }
    case ClaimEquation::Claim34:
        return 8.0 / 125.0 + (2.0 * rho - 4.0 / 25.0) * std::sqrt(2.0 * rho + 4.0 / 25.0) + 2.0 * rho;
    case ClaimEquation::LinearBranch:
        return 4.0 * rho - 1.0 + std::pow(1.0 - 2.0 * rho, 1.5) + 2.0 * rho;
    }
    fail(ErrorCode::Internal, "unreachable claim equation");
}

double claim_equation_general(ClaimEquation e, double rho)
{
    switch (e) {
    case ClaimEquation::Claim32:
        return star_form(rho, alpha1_asymptotic(rho));
    case ClaimEquation::Claim33:
        return star_form(rho, alpha2_asymptotic(rho));
    case ClaimEquation::Claim34:
        return star_form(rho, 2.0 / 5.0);
    case ClaimEquation::LinearBranch:
        return 2.0 * ak_first(rho) + 2.0 * rho;
    }
    fail(ErrorCode::Internal, "unreachable claim equation");
}

std::pair<double, double> claim_bracket(ClaimEquation e)
{
    switch (e) {
    case ClaimEquation::Claim32:
    case ClaimEquation::Claim33:
        return {0.3385, 0.4};
    case ClaimEquation::Claim34:
    case ClaimEquation::LinearBranch:
        return {0.3, 0.4};
    }
    fail(ErrorCode::Internal, "unreachable claim equation");
}

double solve_claim_equation(ClaimEquation e, double target)
{
    auto [lo, hi] = claim_bracket(e);
    auto g = [&](double rho) { return claim_equation_value(e, rho) - target; };
    if (!(g(lo) < 0.0 && g(hi) > 0.0))
        fail(ErrorCode::OutOfRange, std::string("no sign change for ") + to_string(e) + " on its bracket");
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double root = 0.5 * (lo + hi);
    if (std::abs(g(root)) > 1e-10)
        fail(ErrorCode::Internal, std::string("bisection did not converge for ") + to_string(e));
    return root;
}

// --- exact rational checks ----------------------------------------------------

bool RationalReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const RationalCheck& c) { return c.ok; });
}

BigInt g_of(std::uint64_t m)
{
    return 2 * binomial(m, 2) + 3 * (BigInt(m) * m / 4);
}

RationalReport rational_identity_checks(std::uint64_t limit)
{
    RationalReport report;
    const Rational a(253, 730);
    const Rational b(321, 926);
    const Rational lhs = 2 * a + 3 * b + Rational(3, 17) * a;
    const Rational claimed(5154779, 2872915);
    report.checks.push_back({"fraction_identity", lhs == claimed, to_string(lhs) + " vs " + to_string(claimed)});
    const bool exceeds = BigInt(5154779) * 34 > BigInt(61) * 2872915;
    report.checks.push_back({"fraction_exceeds_61_34", exceeds, "5154779*34 vs 61*2872915"});

    if (limit < 30)
        fail(ErrorCode::InvalidArgument, "step inequality scan needs limit >= 30");
    // 13 (g(m) - g(m-1)) > 44 m, with the difference checked against its
    // closed form along the way.
    BigInt previous = g_of(1);
    bool closed_ok = true;
    std::uint64_t last_fail = 1;
    std::uint64_t first_hold = 0;
    for (std::uint64_t m = 2; m <= limit; ++m) {
        const BigInt current = g_of(m);
        const BigInt step = current - previous;
        if (step != BigInt(2 * (m - 1) + 3 * (m / 2)))
            closed_ok = false;
        const bool holds = 13 * step > BigInt(44) * m;
        if (holds && first_hold == 0)
            first_hold = m;
        if (!holds)
            last_fail = m;
        previous = current;
    }
    report.first_m = first_hold;
    report.first_m_from_which_all = last_fail + 1;
    report.checks.push_back({"step_closed_form", closed_ok,
                             "g(m)-g(m-1) = 2(m-1)+3 floor(m/2) for 2 <= m <= " + std::to_string(limit)});
    report.checks.push_back({"step_inequality_from_30", report.first_m_from_which_all <= 30,
                             "holds for all m >= " + std::to_string(report.first_m_from_which_all) + " up to " +
                                 std::to_string(limit) + "; first m = " + std::to_string(first_hold)});
    return report;
}

// --- density statistics -------------------------------------------------------

DensityStats extremal_density_stats(std::uint64_t n)
{
    if (n < 3)
        fail(ErrorCode::InvalidArgument, "extremal_density_stats requires n >= 3");
    DensityStats s;
    s.n = n;
    s.norm = bn_l2_closed(n);
    const std::uint64_t a = (n + 1) / 2;
    const std::uint64_t b = n / 2;
    // Deleting a vertex of B_n leaves the complete bipartite 3-graph with that
    // part shrunk by one.
    const BigInt da = s.norm - bipartite3_l2_closed(a - 1, b);
    const BigInt db = s.norm - bipartite3_l2_closed(a, b - 1);
    s.min_l2_degree = std::min(da, db);
    s.norm_ratio = to_double(Rational(s.norm, BigInt(n) * n * n * n));
    s.degree_ratio = to_double(Rational(s.min_l2_degree, BigInt(n) * n * n));
    s.exdeg_ratio = 4.0 * s.norm_ratio;
    return s;
}

// --- reference decimals -------------------------------------------------------

std::vector<NamedDecimal> reference_decimals()
{
    const double r253 = claim_radical(253.0 / 730.0);
    return {
        {"f_inverse_5_4", 0.342067, f_inverse(1.25)},
        {"root_linear", 0.346707, solve_claim_equation(ClaimEquation::LinearBranch)},
        {"root_claim32", 0.344635, solve_claim_equation(ClaimEquation::Claim32)},
        {"root_claim33", 0.346577, solve_claim_equation(ClaimEquation::Claim33)},
        {"root_claim34", 0.346665, solve_claim_equation(ClaimEquation::Claim34)},
        {"alpha1_at_61_177", 0.225024, alpha1_asymptotic(61.0 / 177.0)},
        {"alpha1_at_235_687", 0.171997, alpha1_asymptotic(235.0 / 687.0)},
        {"alpha2_at_61_177", 0.337536, alpha2_asymptotic(61.0 / 177.0)},
        {"alpha2_at_61_176", 0.387402, alpha2_asymptotic(61.0 / 176.0)},
        {"degree_5_13_at_253_730", 0.322526, 5.0 / 13.0 * r253},
        {"size_1_2_at_253_730", 0.419284, 0.5 * r253},
    };
}

// --- CSV tables ---------------------------------------------------------------

BoundTable bound_table_from_string(const std::string& name)
{
    if (name == "ak")
        return BoundTable::AK;
    if (name == "prop23")
        return BoundTable::Prop23;
    if (name == "f")
        return BoundTable::F;
    fail(ErrorCode::InvalidArgument, "unknown bound table '" + name + "'");
}

namespace {

std::vector<double> grid(double hi, double step)
{
    const double count = std::floor(hi / step + 1e-9);
    if (count > 1e6)
        fail(ErrorCode::Capacity, "grid has more than 10^6 points per axis");
    std::vector<double> out;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(count); ++i)
        out.push_back(std::min(hi, static_cast<double>(i) * step));
    return out;
}

} // namespace

std::string bound_table_csv(BoundTable table, double step)
{
    if (!(step > 0.0 && step <= 0.5))
        fail(ErrorCode::InvalidArgument, "grid step must lie in (0, 1/2]");
    std::ostringstream out;
    out << std::setprecision(12);
    switch (table) {
    case BoundTable::AK:
        out << "x,value,active_branch\n";
        for (double x : grid(0.5, step)) {
            const BoundPoint p = ak_s2_bound(x);
            out << x << ',' << p.value << ',' << to_string(p.active) << '\n';
        }
        break;
    case BoundTable::Prop23: {
        const auto alphas = grid(1.0, step);
        if (alphas.size() * grid(0.5, step).size() > 1000000)
            fail(ErrorCode::Capacity, "prop23 table would exceed 10^6 rows");
        out << "x,alpha,value,active_branch,in_regime\n";
        for (double x : grid(0.5, step))
            for (double a : alphas) {
                const BoundPoint p = prop23_bound(x, a);
                out << x << ',' << a << ',' << p.value << ',' << to_string(p.active) << ','
                    << (p.in_regime ? 1 : 0) << '\n';
            }
        break;
    }
    case BoundTable::F:
        out << "x,value,active_branch\n";
        for (double y : grid(0.5, step)) {
            const BoundPoint p = f_point(y);
            out << y << ',' << p.value << ',' << to_string(p.active) << '\n';
        }
        break;
    }
    return out.str();
}

} // namespace fanol2
