#pragma once

#include "base_values.hpp"

namespace unionvals::values {

// --- The two-step (Owen) procedure -------------------------------------
//
// Step 0: the modified game replaces one union's seat at the inter-union
// table by a sub-coalition of that union. Step 1 builds the reduced game a
// union plays internally by evaluating a base value on each modified game.
// Step 2 evaluates the base value again on the reduced game.

// Game on {"1".."m"} where block `block` is represented by `inner` alone;
// inner must be a subset of that block (it may be empty).
TUGame modified_game(const UnionGame& ug, int block, Coalition inner);

// Internal game on the members of one block: the worth of S is the payoff
// the base value hands seat `block` when the block is represented by S.
// The empty coalition's worth is forced to 0 to keep the game type's
// invariant; for a base value that assigns a nonzero payoff to an empty
// seat (esd does) this discards that payoff, which none of the in-library
// base values ever read back.
TUGame reduced_game(const UnionGame& ug, int block, const BaseValue& f);

// Runs the two steps for every block and assembles the full allocation.
Allocation owen_procedure(const UnionGame& ug, const BaseValue& f);

// --- Closed-form coalitional values ------------------------------------

// v(N) / (m * p_k) for every member of block k.
Allocation ed_u(const UnionGame& ug);

// Equal split of the block's quotient-game esd payoff:
// v(P_k)/p_k + (v(N) - sum_l v(P_l)) / (m p_k).
Allocation esd1_u(const UnionGame& ug);

// v(i) + (v(P_k) - sum_{j in P_k} v(j))/p_k + (v(N) - sum_l v(P_l))/(m p_k).
Allocation esd2_u(const UnionGame& ug);

// v(i) plus the ed_u share of the zero-normalized surplus:
// v(i) + (v(N) - sum_{j in N} v(j)) / (m p_k).
Allocation esd3_u(const UnionGame& ug);

// The two-step value built from esd; equals esd2_u plus esd4_correction.
Allocation esd4_u(const UnionGame& ug);

// esd1_u plus the weighted intra-block subset sums (esd5_correction).
Allocation esd5_u(const UnionGame& ug);

// Two-step value built from shapley.
Allocation owen(const UnionGame& ug);

// Two-step value built from banzhaf.
Allocation banzhaf_owen(const UnionGame& ug);

// --- esd4 / esd5 decompositions (testable on their own) ------------------

// Per player i in block k:
//   (1/m)(mean_{t in P_k} v(t) - v(i))
// + (1/m)(v(N \ P_k + i) - mean_{t in P_k} v(N \ P_k + t)).
Allocation esd4_correction(const UnionGame& ug);

// Per player i in block k, over strict nonempty subsets T of P_k:
//   sum_{T : i in T} w(m,p_k,|T|)/|T| * v(T)
// - sum_{T : i not in T} w(m,p_k,|T|)/(p_k-|T|) * v(T).
Allocation esd5_correction(const UnionGame& ug);

// --- esd5 weight system ---------------------------------------------------

// Which of the four weight cases applies to a strict subset of size t
// inside a block of size p. Exactly one case matches any valid (p, t).
enum class Esd5WeightCase {
    Pair,      // p = 2, t = 1
    Singleton, // p > 2, t = 1
    NearFull,  // p > 2, t = p - 1
    Interior,  // p > 3, 2 <= t <= p - 2
};

Esd5WeightCase esd5_weight_case(int p, int t); // Error(WeightUndefined)

// The weight w(m, p, t) for strict subsets of size t inside a block of
// size p when there are m blocks:
//   Pair:      1/2
//   Singleton: (1/p)(1 + sum_{j=1..p-2} 1/(m+j))
//   NearFull:  m / ((m+1) p)
//   Interior:  with z = p - t:
//              (m+z-1) / ((p-z+1)(m+z)) * sum_{j=0..z-2} (p-j-t)/(p-j)
Rational esd5_weight(int m, int p, int t); // Error(WeightUndefined)

} // namespace unionvals::values
