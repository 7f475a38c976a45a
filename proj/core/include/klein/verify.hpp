#pragma once

#include "klein/klein.hpp"

#include <string>
#include <vector>

namespace klein {

struct Check {
    std::string name;
    bool pass = false;
    // Empty for passing checks; otherwise the first mismatch or the residual.
    std::string witness;
};

struct VerificationReport {
    std::string subject;
    std::vector<Check> checks;

    bool overall() const;
    void add(std::string name, bool pass, std::string witness = {});
    std::string render_text() const;
    // {"subject": ..., "checks": [{"check", "status", "witness"}], "status": ...}
    std::string render_json() const;
};

// Every database identity expanded at x = 0 and compared exactly.
VerificationReport check_database(std::size_t order = 20);

// Degree, ramification and the Schwarzian pull-back identity for a covering
// claimed to pull the standard equation back to H(e).  Any placement of |e|
// at X = 0, 1, infinity is accepted.
VerificationReport check_covering(const ExponentTriple& e, const RatFunc& psi);

// Series comparison of both sides of the identity at X = 0.
VerificationReport check_identity(const TransformationIdentity& id, std::size_t order = 20);

// Series check of one contiguous relation used by the pipeline.
Check check_contiguity(const ContiguityUse& use, std::size_t order = 20);

}  // namespace klein
