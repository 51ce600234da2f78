#pragma once

#include "cycontext/rational.hpp"
#include "cycontext/system.hpp"

#include <vector>

namespace cycontext {

/// Joint distribution of the coupled pair (T_j in context j, T_j in context
/// j-1) for one connection. p_rs = Pr(first = r, second = s), where "first"
/// is the instance recorded in context j and "second" the one in context j-1.
struct ConnectionCoupling {
    Rational p00, p01, p10, p11;

    Rational first_marginal() const { return p10 + p11; }
    Rational second_marginal() const { return p01 + p11; }
    Rational agreement() const { return p00 + p11; }
};

/// The unique coupling of two binary variables with Pr(first=1) = a and
/// Pr(second=1) = b that maximizes the probability of agreement:
///   p11 = min(a,b), p00 = min(1-a,1-b), p10 = a - p11, p01 = b - p11.
/// Throws std::invalid_argument if a or b lies outside [0,1].
ConnectionCoupling multimaximal_coupling(const Rational& a, const Rational& b);

/// Entry j (0-based j-1) is the multimaximal coupling of connection j,
/// pairing the first-slot marginal of bunch j with the second-slot marginal
/// of bunch j-1.
std::vector<ConnectionCoupling> connection_vector(const CyclicSystem& system);

}  // namespace cycontext
