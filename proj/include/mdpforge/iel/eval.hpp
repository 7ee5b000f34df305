#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mdpforge/env/schema.hpp"
#include "mdpforge/iel/check.hpp"

namespace mdpforge::iel {

struct EvalFault {
    enum class Kind { DivisionByZero, IndexOutOfBounds, NonFiniteOutput, DomainError };
    Kind kind;
    SourceSpan span;
    std::string detail;
};

std::string_view fault_kind_name(EvalFault::Kind k);

class EvalFaultError : public std::runtime_error {
public:
    explicit EvalFaultError(EvalFault fault);
    const EvalFault& fault() const { return fault_; }

private:
    EvalFault fault_;
};

// Evaluates an observation program; output length equals the checked shape and
// all entries are finite. Throws EvalFaultError on any fault. The state must
// conform to the schema the program was checked against.
std::vector<double> eval_obs(const CheckedProgram& program, const env::StateRecord& state);

// Evaluates a reward program over a transition (s, a, sp); finite scalar.
double eval_reward(const CheckedProgram& program, const env::StateRecord& s, const env::Action& a,
                   const env::StateRecord& sp);

}  // namespace mdpforge::iel
