#ifndef QDWORK_QSERIES_HPP
#define QDWORK_QSERIES_HPP

#include <optional>

#include "qdwork/ratfun.hpp"

namespace qdwork {

/// One side of the Dwork-type sums,
///
///   sum_{k=0}^{terms-1} 2 (q^{s t + u}; q^{m t})_k (q^{(m-s) t - u}; q^{m t})_k q^{m t k}
///                       / ((q^{m t}; q^{m t})_k^2 (1 + q^{m t k})),
///
/// with t = scale and the parameter a specialized to q^u (u = 0 is a = 1).
struct SumSpec {
    long m = 2;
    long s = 1;
    long scale = 1;
    long terms = 0;
    long subst_exponent = 0;
};

/// InvalidParameter unless 0 < s < m, scale > 0 and terms >= 0.
void validate(const SumSpec& spec);

/// (q^e; q^step)_k = prod_{i<k} (1 - q^{e + step i}); e may be negative.
RatFun qpochhammer(long e, long step, long k);

/// k-th summand of the sum described by spec (k = 0 gives 1).
RatFun sum_term(const SumSpec& spec, long k);

/// Smallest k whose summand is zero because a Pochhammer factor 1 - q^0
/// appears; every later summand is zero as well.
std::optional<long> first_vanishing_term(const SumSpec& spec);

/// Exact sum of the first spec.terms summands, in canonical form.
RatFun sum_side(const SumSpec& spec);

}  // namespace qdwork

#endif  // QDWORK_QSERIES_HPP
