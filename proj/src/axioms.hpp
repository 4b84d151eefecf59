#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "coalitional.hpp"

namespace unionvals {

enum class ValueId { EdU, Esd1U, Esd2U, Esd3U, Esd4U, Esd5U, Owen, BanzhafOwen };

enum class AxiomId {
    Ced,    // collapses to ed at the all-singleton partition
    Cesd,   // collapses to esd at the all-singleton partition
    Qgp,    // block sums match the value's payoffs in the quotient game
    Qsgp,   // same with the quotient* game
    Bcu,    // balanced payoff changes when one union member stands alone
    Eiu,    // equal payoffs inside every union
    Dmiviu, // payoff differences inside a union equal singleton-worth differences
    Bcpa,   // balanced payoff changes when the rest of the union is deleted
    Efficiency,
    BlockOrderInvariance,
};

inline constexpr ValueId kAllValues[] = {
    ValueId::EdU, ValueId::Esd1U, ValueId::Esd2U, ValueId::Esd3U,
    ValueId::Esd4U, ValueId::Esd5U, ValueId::Owen, ValueId::BanzhafOwen,
};

const char* value_id_name(ValueId v);
const char* axiom_id_name(AxiomId a);
std::optional<ValueId> value_id_from(std::string_view name);
std::optional<AxiomId> axiom_id_from(std::string_view name);

Allocation evaluate(ValueId v, const UnionGame& ug);

enum class Verdict { Holds, Violated, NotApplicable };

const char* verdict_name(Verdict v);

// A re-checkable counterexample: feeding `instance` back into the checker
// reproduces the violation, with `lhs` and `rhs` the two quantities that
// failed to be equal.
struct Witness {
    UnionGame instance;
    int block = -1;                   // 0-based block index, -1 if not block-specific
    std::vector<std::string> players; // involved player names, possibly empty
    Rational lhs;
    Rational rhs;
    std::string detail;
};

struct AxiomReport {
    ValueId value{};
    AxiomId axiom{};
    Verdict verdict = Verdict::Holds;
    bool vacuous = false;       // no same-block pair existed to test
    bool within_budget = false; // "holds" came from a bounded search, not a proof
    long trials = 0;            // trials consumed when produced by a search
    std::string note;
    std::optional<Witness> witness;
};

AxiomReport check_axiom(ValueId v, AxiomId a, const UnionGame& ug);

// Does the value collapse to `base` at the all-singleton partition?
AxiomReport check_coalitional(ValueId v, const values::BaseValue& base, const TUGame& g);

// --- Randomized counterexample search ------------------------------------

struct WorthBounds {
    long long lo = -10;
    long long hi = 10;
};

// Deterministic fixtures: trial k depends only on (seed, k), never on
// evaluation order. Worths are integers drawn uniformly from bounds; the
// partition is a uniform surjection onto `blocks` labels.
TUGame random_game(int players, std::uint64_t seed, long trial, WorthBounds bounds = {});
UnionGame random_union_game(int players, int blocks, std::uint64_t seed, long trial,
                            WorthBounds bounds = {});

AxiomReport search_counterexample(ValueId v, AxiomId a, int players, int blocks, long trials,
                                  std::uint64_t seed, WorthBounds bounds = {});

// --- Property grid --------------------------------------------------------

// The properties each of the six egalitarian coalitional values is
// expected to satisfy on every instance. Unclaimed (value, axiom) pairs
// are probed empirically; a few of them hold identically anyway and are
// annotated by the matrix runner.
bool claims(ValueId v, AxiomId a);

inline constexpr ValueId kMatrixValues[] = {
    ValueId::EdU,  ValueId::Esd1U, ValueId::Esd2U,
    ValueId::Esd3U, ValueId::Esd4U, ValueId::Esd5U,
};
inline constexpr AxiomId kMatrixAxioms[] = {
    AxiomId::Ced, AxiomId::Cesd, AxiomId::Qgp,    AxiomId::Qsgp,
    AxiomId::Bcu, AxiomId::Eiu,  AxiomId::Dmiviu, AxiomId::Bcpa,
};

struct MatrixCell {
    AxiomId axiom{};
    bool claimed = false;
    AxiomReport report;
};

struct MatrixRow {
    ValueId value{};
    std::vector<MatrixCell> cells;
};

struct AxiomMatrix {
    int players = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    std::vector<MatrixRow> rows;
};

// Runs every grid cell at the given size: claimed cells must hold on all
// trials; unclaimed cells run the counterexample search. Partition sizes
// cycle over 2..players-1, so players must be at least 3.
AxiomMatrix axiom_matrix(int players, long trials, std::uint64_t seed);

} // namespace unionvals
