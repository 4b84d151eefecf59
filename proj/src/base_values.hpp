#pragma once

#include <functional>

#include "game.hpp"

namespace unionvals::values {

// Any single-game value usable inside the two-step procedure. Must be
// deterministic: equal games produce equal allocations.
using BaseValue = std::function<Allocation(const TUGame&)>;

// Equal division: everyone gets v(N)/n.
Allocation ed(const TUGame& g);

// Equal surplus division: v(i) plus an equal share of v(N) - sum_j v(j).
Allocation esd(const TUGame& g);

// Shapley value via subset enumeration with exact factorial weights,
// sum over S not containing i of |S|!(n-|S|-1)!/n! * (v(S+i) - v(S)).
Allocation shapley(const TUGame& g);

// Banzhaf value: the plain average of all 2^(n-1) marginal contributions.
// Not efficient in general.
Allocation banzhaf(const TUGame& g);

} // namespace unionvals::values
