#include "saddlelink/equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "saddlelink/holonomy.hpp"

namespace saddlelink {

namespace {

std::string summarize(const std::vector<ViolationReport>& v)
{
    std::string out;
    for (const auto& r : v) {
        if (!out.empty()) out += ", ";
        out += to_string(r.kind);
    }
    return out;
}

enum class Coarse { C12, C11, C22, C21 };

Coarse coarse_of(Subset s)
{
    switch (s) {
    case Subset::S12: return Coarse::C12;
    case Subset::S11R:
    case Subset::S11C: return Coarse::C11;
    case Subset::S22R:
    case Subset::S22C: return Coarse::C22;
    default: return Coarse::C21;
    }
}

/// "CC", "RC", "CR" or "RR".
std::string letters(Subset s) { return std::string(to_string(s)).substr(5); }

bool numbers_agree(double a, double b, double tol)
{
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

EquivalenceVerdict verdict(Outcome o, std::string rule, double tol)
{
    EquivalenceVerdict v;
    v.outcome = o;
    v.rule = std::move(rule);
    v.tol = tol;
    return v;
}

template <class T>
const T& need(const std::optional<T>& v, const char* what)
{
    if (!v) throw Error(ErrorCode::IncompatibleClassifications, std::string("missing ") + what);
    return *v;
}

} // namespace

GenericityError::GenericityError(std::vector<ViolationReport> v)
    : Error(ErrorCode::GenericityViolation, summarize(v)), violations_(std::move(v))
{
}

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::Equivalent: return "equivalent";
    case Outcome::NotEquivalent: return "not equivalent";
    case Outcome::BoundaryIndeterminate: return "boundary-indeterminate";
    }
    return "?";
}

Classification classify(const ConnectionSpec& spec)
{
    auto violations = validate_genericity(spec);
    if (!violations.empty()) throw GenericityError(std::move(violations));
    return classify_params(normalize(spec));
}

Classification classify_params(const NormalizedParams& np)
{
    Classification c;
    c.subset = np.subset;
    c.params = np;

    switch (np.subset) {
    case Subset::S21CC: {
        const double alpha = *np.alpha, beta = *np.beta, t = *np.t;
        c.tt = is_tt_cc(alpha, beta, t);
        if (!c.tt->in_tt) {
            c.alpha_beta_ratio = alpha / beta;
            c.psi_value = psi_modulus(alpha, beta, t);
        }
        break;
    }
    case Subset::S21RC:
        c.tt = is_tt_rc(*np.beta, *np.mu, np.shear(), *np.theta0);
        if (!c.tt->in_tt) c.upsilon_value = upsilon_modulus(*np.beta, *np.mu, np.shear(), *np.theta0);
        break;
    case Subset::S21CR:
        c.tt = is_tt_cr(*np.alpha, *np.gamma, *np.lambda, *np.theta1);
        if (!c.tt->in_tt) c.upsilon_value = upsilon_modulus_cr(*np.alpha, *np.gamma, *np.lambda, *np.theta1);
        break;
    case Subset::S21RR:
        c.rr_type = rr_type(need(np.frames, "frame angles"));
        break;
    default:
        break;
    }
    return c;
}

EquivalenceVerdict equivalent(const Classification& c1, const Classification& c2, double tol)
{
    const Coarse k1 = coarse_of(c1.subset), k2 = coarse_of(c2.subset);
    if (k1 != k2)
        return verdict(Outcome::NotEquivalent, "Hartman-Grobman: Morse indices of the saddles differ", tol);

    switch (k1) {
    case Coarse::C12:
        return verdict(Outcome::Equivalent, "(1-2) class: always topologically equivalent", tol);
    case Coarse::C11:
    case Coarse::C22: {
        const std::string name = k1 == Coarse::C11 ? "(1-1) class" : "(2-2) class";
        if (c1.subset == c2.subset)
            return verdict(Outcome::Equivalent, name + ": same real/complex subset", tol);
        return verdict(Outcome::NotEquivalent, name + ": real vs complex subset", tol);
    }
    case Coarse::C21:
        break;
    }

    const std::string cell = "(2-1) table [" + letters(c1.subset) + ", " + letters(c2.subset) + "]";
    const bool rr1 = c1.subset == Subset::S21RR, rr2 = c2.subset == Subset::S21RR;
    if (rr1 != rr2) return verdict(Outcome::NotEquivalent, cell + ": impossible", tol);
    if (rr1) {
        const RRType t1 = need(c1.rr_type, "rr_type"), t2 = need(c2.rr_type, "rr_type");
        return verdict(t1 == t2 ? Outcome::Equivalent : Outcome::NotEquivalent,
                       cell + (t1 == t2 ? ": same type" : ": different types"), tol);
    }

    const TTVerdict& tt1 = need(c1.tt, "TT verdict");
    const TTVerdict& tt2 = need(c2.tt, "TT verdict");
    if (tt1.boundary || tt2.boundary)
        return verdict(Outcome::BoundaryIndeterminate, cell + ": TT boundary", tol);
    if (tt1.in_tt && tt2.in_tt) return verdict(Outcome::Equivalent, cell + ": both in (TT)", tol);
    if (tt1.in_tt != tt2.in_tt)
        return verdict(Outcome::NotEquivalent, cell + ": one in (TT), one not", tol);
    if (c1.subset != c2.subset)
        return verdict(Outcome::NotEquivalent, cell + ": different subsets off (TT)", tol);

    if (c1.subset == Subset::S21CC) {
        const double r1 = need(c1.alpha_beta_ratio, "alpha/beta"), r2 = need(c2.alpha_beta_ratio, "alpha/beta");
        EquivalenceVerdict v;
        v.tol = tol;
        v.compared.push_back({"alpha/beta", r1, r2});
        if (!numbers_agree(r1, r2, tol)) {
            v.outcome = Outcome::NotEquivalent;
            v.rule = cell + ": alpha/beta differ";
            return v;
        }
        const double p1 = need(c1.psi_value, "Psi"), p2 = need(c2.psi_value, "Psi");
        v.compared.push_back({"Psi", p1, p2});
        const bool same = numbers_agree(p1, p2, tol);
        v.outcome = same ? Outcome::Equivalent : Outcome::NotEquivalent;
        v.rule = cell + (same ? ": alpha/beta and Psi agree" : ": Psi differs");
        return v;
    }

    const double u1 = need(c1.upsilon_value, "Upsilon"), u2 = need(c2.upsilon_value, "Upsilon");
    const bool same = numbers_agree(u1, u2, tol);
    EquivalenceVerdict v = verdict(same ? Outcome::Equivalent : Outcome::NotEquivalent,
                                   cell + (same ? ": Upsilon agrees" : ": Upsilon differs"), tol);
    v.compared.push_back({"Upsilon", u1, u2});
    return v;
}

} // namespace saddlelink
