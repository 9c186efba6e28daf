#pragma once

#include <optional>

#include "saddlelink/geometry.hpp"
#include "saddlelink/params.hpp"
#include "saddlelink/tangency.hpp"

namespace saddlelink {

/// Two linear vector fields whose integral curves are the characteristic
/// foliations compared on one section.
struct FoliationPair {
    Mat2 first;
    Mat2 second;
};

/// (L_alpha, diag(1,lambda)_* L_beta)
FoliationPair cc_pair(double alpha, double beta, double lambda);

/// (R_mu, (R(-theta0) diag(1,lambda))_* L_beta)
FoliationPair rc_pair(double beta, double mu, double lambda, double theta0);

/// Matrix that pushes L_alpha onto the CR section: R(-theta1) diag(1, 1/lambda).
Mat2 cr_push_matrix(double lambda, double theta1);

/// (cr_push_matrix_* L_alpha, R_gamma)
FoliationPair cr_pair(double alpha, double gamma, double lambda, double theta1);

/// Node with leaves tangent to `weak` at the origin and `strong` as the isolated leaf.
Mat2 node_with_frame(double weak, double strong, double ratio);

FoliationPair rr_pair(const FrameAngles& frames, double mu, double gamma);

/// Model pair for a (2-1) parameter set; empty for the other subsets.
std::optional<FoliationPair> model_pair(const NormalizedParams& np);

/// det(first u, second u) for u at angle theta, normalized by the field magnitudes.
double cross_determinant(const FoliationPair& pair, double theta);

/// Tangency lines of an arbitrary linear pair from its cross-determinant form.
TangencyLocus tangency_lines(const FoliationPair& pair);

} // namespace saddlelink
