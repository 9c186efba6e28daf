#pragma once

#include <optional>
#include <string>
#include <vector>

#include "saddlelink/error.hpp"
#include "saddlelink/params.hpp"
#include "saddlelink/tangency.hpp"

namespace saddlelink {

struct Classification {
    Subset subset = Subset::S12;
    NormalizedParams params;
    std::optional<TTVerdict> tt;
    std::optional<RRType> rr_type;
    std::optional<double> psi_value;
    std::optional<double> upsilon_value;
    std::optional<double> alpha_beta_ratio;
};

enum class Outcome { Equivalent, NotEquivalent, BoundaryIndeterminate };

const char* to_string(Outcome o);

struct ComparedValue {
    std::string name;
    double first = 0.0;
    double second = 0.0;
};

struct EquivalenceVerdict {
    Outcome outcome = Outcome::NotEquivalent;
    std::string rule;
    std::vector<ComparedValue> compared;
    double tol = 0.0;
};

class GenericityError : public Error {
public:
    explicit GenericityError(std::vector<ViolationReport> v);
    const std::vector<ViolationReport>& violations() const { return violations_; }

private:
    std::vector<ViolationReport> violations_;
};

Classification classify(const ConnectionSpec& spec);
Classification classify_params(const NormalizedParams& np);

EquivalenceVerdict equivalent(const Classification& c1, const Classification& c2, double tol);

} // namespace saddlelink
