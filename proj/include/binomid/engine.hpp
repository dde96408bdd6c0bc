#pragma once

#include "binomid/expr.hpp"
#include "binomid/polynomial.hpp"
#include "binomid/special.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace binomid {

// Expression cannot be turned into a polynomial under the given binding.
class ElaborateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameter environment during elaboration; sum indices extend it locally.
using Env = std::map<std::string, BigInt>;

// Turns the expression into an exact polynomial in x and y.
// Binom(u, l) with l a nonneg integer constant becomes choose_poly(l) with u
// substituted for x; with both sides integer constants and u - l >= 0 it
// becomes the generalized binomial. Sum bounds must be integer constants;
// lo > hi is the empty sum. Pow exponents must be nonneg integer constants,
// Div denominators nonzero constants.
Polynomial elaborate(const Expr& e, const Env& env);

// Structural upper bound on degree_in(elaborate(e, env), v). Enforces the
// same side-conditions as elaborate: it throws exactly when elaborate would.
long degree_bound(const Expr& e, const Env& env, Var v);

// Direct numeric interpreter, the evaluation half of the point criterion.
// Never expands polynomials; binomials are computed by falling factorials.
// A value may be omitted only for an indeterminate the expression never uses.
Rational eval_expr(const Expr& e, const Env& env, const std::optional<Rational>& x_value,
                   const std::optional<Rational>& y_value);

enum class Strategy { Symbolic, Points, Both };

const char* strategy_name(Strategy s);

// Inclusive integer interval.
struct Interval {
    BigInt lo, hi;
};

// Ranges for one verification run: one interval per declared parameter, plus
// optional extra evaluation ranges unioned into the point grids per axis.
struct RangeSpec {
    std::map<std::string, Interval> params;
    std::map<Var, Interval> grid_extension;
};

struct Point {
    std::optional<BigInt> x, y;
};

struct Counterexample {
    Strategy strategy = Strategy::Symbolic; // method that produced the witness
    Binding binding;
    std::optional<Point> point;
    std::string lhs_value, rhs_value;
};

// The two strategies returned different statuses for one binding; an engine
// bug, never a statement about the identity.
struct Disagreement {
    Binding binding;
    std::string symbolic_status, points_status;
};

struct BindingError {
    Strategy strategy = Strategy::Symbolic;
    Binding binding;
    std::string message;
};

struct VerificationReport {
    std::string identity;
    Strategy strategy = Strategy::Both;
    std::vector<std::string> param_order; // declaration order, fixes rendering
    unsigned long long bindings_checked = 0;
    unsigned long long points_checked = 0;
    std::vector<Counterexample> failures;
    std::vector<Disagreement> disagreements;
    std::vector<BindingError> errors;

    bool passed() const { return failures.empty() && disagreements.empty() && errors.empty(); }
    // "pass", "fail", "error", or "disagreement" (most severe wins).
    std::string status() const;
};

// Checks one binding by full expansion: pass iff lhs - rhs elaborates to the
// zero polynomial. A failure carries a witness point found on the difference.
VerificationReport verify_symbolic(const Identity& id, const Binding& b);

// Checks one binding on the integer grid {0..Dx} x {0..Dy} given by the
// structural degree bounds of lhs - rhs, unioned with any extension ranges.
// A nonzero difference cannot vanish on the whole grid, so pass is exact.
VerificationReport verify_points(const Identity& id, const Binding& b,
                                 const std::map<Var, Interval>& grid_extension = {});

// Cartesian sweep over all parameter bindings, in declaration order. With
// Strategy::Both every binding runs both methods and any status mismatch is
// recorded as a disagreement. Deterministic for any jobs count.
// Throws std::invalid_argument for unusable ranges (missing, empty, below a
// parameter's domain, or a sweep too large to attempt).
VerificationReport verify_range(const Identity& id, const RangeSpec& ranges, Strategy strategy,
                                unsigned jobs = 1);

std::string render_text(const VerificationReport& report);
std::string render_machine(const VerificationReport& report);

// 0 all pass; 1 counterexample; 2 error; 3 strategy disagreement.
// Severity order: disagreement > error > failure.
int exit_code_for(const std::vector<VerificationReport>& reports);

} // namespace binomid
