#pragma once

// Analytic bound curves, the f / f^-1 pair, the root equations used in the
// minimum-degree argument, and exact rational checks.

#include <cstdint>
#include <string>
#include <vector>

#include "fanol2/bigint.hpp"

namespace fanol2 {

enum class Branch { First, Second, Tie };

const char* to_string(Branch b);

/// A max of two branch expressions. Ties are reported within 1e-12.
struct BoundPoint {
    double x = 0;
    double alpha = 0;
    double first = 0;
    double second = 0;
    double value = 0;
    Branch active = Branch::Tie;
    /// False when the inputs lie outside the hypotheses the bound is stated for.
    bool in_regime = true;
};

/// max{((1-2x)^{3/2}+4x-1)/2, sqrt(2) x^{3/2}}, x in [0, 1/2].
BoundPoint ak_s2_bound(double x);
/// Twice ak_s2_bound: the bound on ||G||_2 / n^3.
BoundPoint ak_norm_bound(double x);
/// max{(a^3+(2x-a^2)(2x+a^2)^{1/2})/2, ((1-2x)^{3/2}+4x-1)/2}. Defined on
/// [0,1/2] x [0,1]; in_regime marks x in [17/50, 7/20] with alpha in
/// [17/100, 23/100] or [1/3, 2/5].
BoundPoint prop23_bound(double x, double alpha);
BoundPoint prop23_norm_bound(double x, double alpha);

double beta1(double x);
double beta2(double x);
double beta3(double x, double alpha);

/// max{(1-2y)^{3/2}+6y-1, (2y)^{3/2}+2y}, y in [0, 1/2].
BoundPoint f_point(double y);
double f_of(double y);
/// Bisection to 1e-12 on [0, 1/2]; t in [0, 2].
double f_inverse(double t);

/// sqrt((4 size - 2 beta n(n+1)) / (7 - 2 beta)), clamped at 0.
double lemma34_core_bound(const Rational& size, std::uint64_t n, const Rational& beta);
/// Exact: |U|^2 >= (4 size - 2 beta n(n+1)) / (7 - 2 beta), or the radicand is negative.
bool lemma34_size_ok(std::uint64_t core_size, const Rational& size, std::uint64_t n, const Rational& beta);

/// Exact: sum d + (3/17) min d <= 61 n(n+1)/34. Requires five degrees.
bool lemma35_check(const std::vector<BigInt>& degrees, std::uint64_t n);
Rational dmin_bound(std::uint64_t n);

/// (c/(13n)) sqrt(260/3 dmin - 88/3 n(n+1)) with c = 4 (alpha1) or 6 (alpha2).
double alpha1(double dmin, double n);
double alpha2(double dmin, double n);
/// n -> infinity with dmin = rho n^2: (c/13) sqrt(260/3 rho - 88/3).
double alpha1_asymptotic(double rho);
double alpha2_asymptotic(double rho);
/// sqrt(260/3 rho - 88/3); throws on a negative radicand.
double claim_radical(double rho);

enum class ClaimEquation { Claim32, Claim33, Claim34, LinearBranch };

const char* to_string(ClaimEquation e);
ClaimEquation claim_equation_from_string(const std::string& name);

/// Left-hand side as displayed in closed form.
double claim_equation_value(ClaimEquation e, double rho);
/// The same curve rebuilt from alpha^3 + (2 rho - alpha^2)(2 rho + alpha^2)^{1/2} + 2 rho
/// (or the linear branch), as an independent route.
double claim_equation_general(ClaimEquation e, double rho);
/// Smallest rho in the bracket with equation = target; bisection to 1e-10
/// on the equation value. Throws when there is no sign change.
double solve_claim_equation(ClaimEquation e, double target = 1.25);
/// Fixed bracket per equation; the radical terms need rho >= 88/260, so
/// claim32 and claim33 start at 0.3385 instead of 0.3.
std::pair<double, double> claim_bracket(ClaimEquation e);

struct RationalCheck {
    std::string id;
    bool ok = false;
    std::string detail;
};

struct RationalReport {
    std::vector<RationalCheck> checks;
    /// Smallest m >= 2 with g(m) - g(m-1) > 44m/13.
    std::uint64_t first_m = 0;
    /// Smallest m0 such that the inequality holds for every m0 <= m <= limit.
    std::uint64_t first_m_from_which_all = 0;
    bool ok() const;
};

/// g(m) = 2 C(m,2) + 3 floor(m^2/4).
BigInt g_of(std::uint64_t m);
RationalReport rational_identity_checks(std::uint64_t limit = 1000000);

struct DensityStats {
    std::uint64_t n = 0;
    BigInt norm;             ///< ||B_n||_2
    BigInt min_l2_degree;    ///< min_v d_2(v)
    double norm_ratio = 0;   ///< ||B_n||_2 / n^4
    double degree_ratio = 0; ///< min d_2 / n^3
    double exdeg_ratio = 0;  ///< 4 ||B_n||_2 / n^4
};

/// From closed forms only; works for large n.
DensityStats extremal_density_stats(std::uint64_t n);

/// One named decimal with the expression that produces it.
struct NamedDecimal {
    std::string id;
    double expected = 0;
    double measured = 0;
};

std::vector<NamedDecimal> reference_decimals();

enum class BoundTable { AK, Prop23, F };

BoundTable bound_table_from_string(const std::string& name);
/// CSV with header; for Prop23 alpha runs over the same grid on [0,1].
std::string bound_table_csv(BoundTable table, double step);

} // namespace fanol2
