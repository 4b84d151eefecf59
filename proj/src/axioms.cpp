#include "axioms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "errors.hpp"

namespace unionvals {

const char* value_id_name(ValueId v) {
    switch (v) {
        case ValueId::EdU: return "edu";
        case ValueId::Esd1U: return "esd1u";
        case ValueId::Esd2U: return "esd2u";
        case ValueId::Esd3U: return "esd3u";
        case ValueId::Esd4U: return "esd4u";
        case ValueId::Esd5U: return "esd5u";
        case ValueId::Owen: return "owen";
        case ValueId::BanzhafOwen: return "banzhaf-owen";
    }
    return "?";
}

const char* axiom_id_name(AxiomId a) {
    switch (a) {
        case AxiomId::Ced: return "ced";
        case AxiomId::Cesd: return "cesd";
        case AxiomId::Qgp: return "qgp";
        case AxiomId::Qsgp: return "qsgp";
        case AxiomId::Bcu: return "bcu";
        case AxiomId::Eiu: return "eiu";
        case AxiomId::Dmiviu: return "dmiviu";
        case AxiomId::Bcpa: return "bcpa";
        case AxiomId::Efficiency: return "efficiency";
        case AxiomId::BlockOrderInvariance: return "block-order-invariance";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::optional<ValueId> value_id_from(std::string_view name) {
    for (ValueId v : kAllValues)
        if (name == value_id_name(v)) return v;
    return std::nullopt;
}

std::optional<AxiomId> axiom_id_from(std::string_view name) {
    for (AxiomId a : {AxiomId::Ced, AxiomId::Cesd, AxiomId::Qgp, AxiomId::Qsgp, AxiomId::Bcu,
                      AxiomId::Eiu, AxiomId::Dmiviu, AxiomId::Bcpa, AxiomId::Efficiency,
                      AxiomId::BlockOrderInvariance})
        if (name == axiom_id_name(a)) return a;
    return std::nullopt;
}

Allocation evaluate(ValueId v, const UnionGame& ug) {
    switch (v) {
        case ValueId::EdU: return values::ed_u(ug);
        case ValueId::Esd1U: return values::esd1_u(ug);
        case ValueId::Esd2U: return values::esd2_u(ug);
        case ValueId::Esd3U: return values::esd3_u(ug);
        case ValueId::Esd4U: return values::esd4_u(ug);
        case ValueId::Esd5U: return values::esd5_u(ug);
        case ValueId::Owen: return values::owen(ug);
        case ValueId::BanzhafOwen: return values::banzhaf_owen(ug);
    }
    fail(Errc::UnknownIdentifier, "unknown value id");
}

namespace {

AxiomReport holds_report(ValueId v, AxiomId a, bool vacuous = false) {
    AxiomReport r;
    r.value = v;
    r.axiom = a;
    r.verdict = Verdict::Holds;
    r.vacuous = vacuous;
    return r;
}

AxiomReport violated_report(ValueId v, AxiomId a, Witness w) {
    AxiomReport r;
    r.value = v;
    r.axiom = a;
    r.verdict = Verdict::Violated;
    r.witness = std::move(w);
    return r;
}

// Sum of a value's payoffs over one block against the payoff the block's
// seat earns when the same value is applied to `among_blocks` with the
// all-singleton partition.
AxiomReport check_quotient_sums(ValueId v, const UnionGame& ug, TUGame among_blocks,
                                AxiomId axiom, const char* detail) {
    const Allocation alloc = evaluate(v, ug);
    UnionGame quotient_ug(std::move(among_blocks), trivial_partition(ug.partition.block_count()));
    const Allocation block_alloc = evaluate(v, quotient_ug);
    for (int k = 0; k < ug.partition.block_count(); ++k) {
        Rational sum = 0;
        for (int i : ug.partition.block(k).members()) sum += alloc.payoffs[std::size_t(i)];
        if (sum != block_alloc.payoffs[std::size_t(k)]) {
            return violated_report(
                v, axiom, Witness{ug, k, {}, sum, block_alloc.payoffs[std::size_t(k)], detail});
        }
    }
    return holds_report(v, axiom);
}

// Runs `body` for every ordered pair (i, j), i < j, inside every block of
// size >= 2; reports a vacuous hold when no such pair exists.
template <typename Body>
AxiomReport check_block_pairs(ValueId v, AxiomId a, const UnionGame& ug, Body body) {
    bool any_pair = false;
    for (int k = 0; k < ug.partition.block_count(); ++k) {
        const std::vector<int> members = ug.partition.block(k).members();
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                any_pair = true;
                if (auto report = body(k, members[x], members[y])) return *report;
            }
        }
    }
    return holds_report(v, a, /*vacuous=*/!any_pair);
}

AxiomReport check_bcu(ValueId v, const UnionGame& ug) {
    const Allocation alloc = evaluate(v, ug);
    std::map<int, Allocation> after_split;
    const auto split_alloc = [&](int player) -> const Allocation& {
        auto it = after_split.find(player);
        if (it == after_split.end()) {
            it = after_split
                     .emplace(player,
                              evaluate(v, UnionGame(ug.game, split_off(ug.partition, player))))
                     .first;
        }
        return it->second;
    };
    return check_block_pairs(
        v, AxiomId::Bcu, ug, [&](int k, int i, int j) -> std::optional<AxiomReport> {
            const Rational lhs =
                alloc.payoffs[std::size_t(i)] - split_alloc(j).payoffs[std::size_t(i)];
            const Rational rhs =
                alloc.payoffs[std::size_t(j)] - split_alloc(i).payoffs[std::size_t(j)];
            if (lhs == rhs) return std::nullopt;
            return violated_report(
                v, AxiomId::Bcu,
                Witness{ug, k, {ug.game.player_name(i), ug.game.player_name(j)}, lhs, rhs,
                        "payoff changes when the other member stands alone are unbalanced"});
        });
}

AxiomReport check_eiu(ValueId v, const UnionGame& ug) {
    const Allocation alloc = evaluate(v, ug);
    return check_block_pairs(
        v, AxiomId::Eiu, ug, [&](int k, int i, int j) -> std::optional<AxiomReport> {
            if (alloc.payoffs[std::size_t(i)] == alloc.payoffs[std::size_t(j)])
                return std::nullopt;
            return violated_report(v, AxiomId::Eiu,
                                   Witness{ug, k,
                                           {ug.game.player_name(i), ug.game.player_name(j)},
                                           alloc.payoffs[std::size_t(i)],
                                           alloc.payoffs[std::size_t(j)],
                                           "members of one union received unequal payoffs"});
        });
}

AxiomReport check_dmiviu(ValueId v, const UnionGame& ug) {
    const Allocation alloc = evaluate(v, ug);
    return check_block_pairs(
        v, AxiomId::Dmiviu, ug, [&](int k, int i, int j) -> std::optional<AxiomReport> {
            const Rational lhs =
                alloc.payoffs[std::size_t(i)] - alloc.payoffs[std::size_t(j)];
            const Rational rhs = ug.game.worth(Coalition::single(i)) -
                                 ug.game.worth(Coalition::single(j));
            if (lhs == rhs) return std::nullopt;
            return violated_report(
                v, AxiomId::Dmiviu,
                Witness{ug, k, {ug.game.player_name(i), ug.game.player_name(j)}, lhs, rhs,
                        "payoff difference does not match the singleton-worth difference"});
        });
}

AxiomReport check_bcpa(ValueId v, const UnionGame& ug) {
    const Allocation alloc = evaluate(v, ug);
    std::map<int, Rational> after_reduction;
    const auto reduced_payoff = [&](int k, int player) -> const Rational& {
        auto it = after_reduction.find(player);
        if (it == after_reduction.end()) {
            const UnionGame reduced = bcpa_reduction(ug, k, player);
            const Allocation inner = evaluate(v, reduced);
            const int idx = reduced.game.player_index(ug.game.player_name(player));
            it = after_reduction.emplace(player, inner.payoffs[std::size_t(idx)]).first;
        }
        return it->second;
    };
    return check_block_pairs(
        v, AxiomId::Bcpa, ug, [&](int k, int i, int j) -> std::optional<AxiomReport> {
            const Rational lhs = alloc.payoffs[std::size_t(i)] - reduced_payoff(k, i);
            const Rational rhs = alloc.payoffs[std::size_t(j)] - reduced_payoff(k, j);
            if (lhs == rhs) return std::nullopt;
            return violated_report(
                v, AxiomId::Bcpa,
                Witness{ug, k, {ug.game.player_name(i), ug.game.player_name(j)}, lhs, rhs,
                        "payoff changes when the rest of the union is deleted are unbalanced"});
        });
}

AxiomReport check_efficiency(ValueId v, const UnionGame& ug) {
    const Allocation alloc = evaluate(v, ug);
    const Rational total = alloc.total();
    if (total == ug.game.grand_worth()) return holds_report(v, AxiomId::Efficiency);
    return violated_report(v, AxiomId::Efficiency,
                           Witness{ug, -1, {}, total, ug.game.grand_worth(),
                                   "payoffs do not sum to the grand coalition's worth"});
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Small deterministic stream; unbiased bounded draws by rejection.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) : state_(seed) {
        (void)splitmix64(state_);
        state_ ^= 0x6a09e667f3bcc909ull + stream;
        (void)splitmix64(state_);
    }

    std::uint64_t next() { return splitmix64(state_); }

    std::uint64_t below(std::uint64_t span) {
        std::uint64_t x, r;
        do {
            x = next();
            r = x % span;
        } while (x - r > std::uint64_t(0) - span);
        return r;
    }

    long long range(long long lo, long long hi) {
        return lo + (long long)below(std::uint64_t(hi - lo) + 1);
    }

private:
    std::uint64_t state_;
};

AxiomReport check_block_order_invariance(ValueId v, const UnionGame& ug) {
    const Allocation base = evaluate(v, ug);
    const int m = ug.partition.block_count();
    std::vector<int> order(std::size_t(m));
    std::iota(order.begin(), order.end(), 0);

    const auto try_order = [&](const std::vector<int>& perm) -> std::optional<AxiomReport> {
        std::vector<Coalition> blocks;
        blocks.reserve(perm.size());
        for (int k : perm) blocks.push_back(ug.partition.block(k));
        UnionGame shuffled(ug.game, Partition(std::move(blocks), ug.game.player_count()));
        const Allocation other = evaluate(v, shuffled);
        for (std::size_t i = 0; i < base.payoffs.size(); ++i) {
            if (base.payoffs[i] != other.payoffs[i]) {
                return violated_report(
                    v, AxiomId::BlockOrderInvariance,
                    Witness{std::move(shuffled), -1, {ug.game.player_name(int(i))},
                            base.payoffs[i], other.payoffs[i],
                            "payoff depends on the listing order of the blocks"});
            }
        }
        return std::nullopt;
    };

    if (m <= 4) {
        std::vector<int> perm = order;
        while (std::next_permutation(perm.begin(), perm.end()))
            if (auto r = try_order(perm)) return *r;
    } else {
        std::vector<int> perm = order;
        std::reverse(perm.begin(), perm.end());
        if (auto r = try_order(perm)) return *r;
        Rng rng(0x0b10c0u, std::uint64_t(m));
        for (int round = 0; round < 4; ++round) {
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[std::size_t(rng.below(i))]);
            if (auto r = try_order(perm)) return *r;
        }
    }
    return holds_report(v, AxiomId::BlockOrderInvariance);
}

const values::BaseValue& base_for(AxiomId a) {
    static const values::BaseValue kEd = [](const TUGame& g) { return values::ed(g); };
    static const values::BaseValue kEsd = [](const TUGame& g) { return values::esd(g); };
    return a == AxiomId::Ced ? kEd : kEsd;
}

} // namespace

AxiomReport check_coalitional(ValueId v, const values::BaseValue& base, const TUGame& g) {
    UnionGame ug(g, trivial_partition(g));
    const Allocation got = evaluate(v, ug);
    const Allocation want = base(g);
    for (std::size_t i = 0; i < got.payoffs.size(); ++i) {
        if (got.payoffs[i] != want.payoffs[i]) {
            AxiomReport r = violated_report(
                v, AxiomId::Ced,
                Witness{std::move(ug), -1, {g.player_name(int(i))}, got.payoffs[i],
                        want.payoffs[i],
                        "value at the all-singleton partition differs from the base value"});
            return r;
        }
    }
    return holds_report(v, AxiomId::Ced);
}

AxiomReport check_axiom(ValueId v, AxiomId a, const UnionGame& ug) {
    switch (a) {
        case AxiomId::Ced:
        case AxiomId::Cesd: {
            AxiomReport r = check_coalitional(v, base_for(a), ug.game);
            r.axiom = a;
            return r;
        }
        case AxiomId::Qgp:
            return check_quotient_sums(v, ug, quotient_game(ug), AxiomId::Qgp,
                                       "block sum differs from the block's quotient-game payoff");
        case AxiomId::Qsgp:
            return check_quotient_sums(v, ug, quotient_star_game(ug), AxiomId::Qsgp,
                                       "block sum differs from the block's quotient*-game payoff");
        case AxiomId::Bcu: return check_bcu(v, ug);
        case AxiomId::Eiu: return check_eiu(v, ug);
        case AxiomId::Dmiviu: return check_dmiviu(v, ug);
        case AxiomId::Bcpa: return check_bcpa(v, ug);
        case AxiomId::Efficiency: return check_efficiency(v, ug);
        case AxiomId::BlockOrderInvariance: return check_block_order_invariance(v, ug);
    }
    fail(Errc::UnknownIdentifier, "unknown axiom id");
}

TUGame random_game(int players, std::uint64_t seed, long trial, WorthBounds bounds) {
    if (players < 1 || players > TUGame::kMaxPlayers || bounds.lo > bounds.hi) {
        fail(Errc::InvalidSearchSpace, "bad random game parameters");
    }
    Rng rng(seed, std::uint64_t(trial) * 2);
    std::vector<std::string> roster;
    roster.reserve(std::size_t(players));
    for (int i = 1; i <= players; ++i) roster.push_back(std::to_string(i));

    std::vector<Rational> table(std::size_t{1} << players, Rational(0));
    for (std::uint32_t bits = 1; bits < table.size(); ++bits)
        table[bits] = Rational(rng.range(bounds.lo, bounds.hi));
    return TUGame::from_table(std::move(roster), std::move(table));
}

UnionGame random_union_game(int players, int blocks, std::uint64_t seed, long trial,
                            WorthBounds bounds) {
    if (blocks < 1 || blocks > players) {
        fail(Errc::InvalidSearchSpace, "block count must be between 1 and the player count");
    }
    TUGame game = random_game(players, seed, trial, bounds);
    Rng rng(seed, std::uint64_t(trial) * 2 + 1);

    std::vector<int> label(std::size_t(players));
    while (true) {
        std::uint32_t used = 0;
        for (int i = 0; i < players; ++i) {
            label[std::size_t(i)] = int(rng.below(std::uint64_t(blocks)));
            used |= std::uint32_t{1} << label[std::size_t(i)];
        }
        if (used == (std::uint32_t{1} << blocks) - 1) break; // every block nonempty
    }
    std::vector<Coalition> block_sets(std::size_t(blocks), Coalition{});
    for (int i = 0; i < players; ++i) {
        Coalition& b = block_sets[std::size_t(label[std::size_t(i)])];
        b = b.with(i);
    }
    return UnionGame(std::move(game), Partition(std::move(block_sets), players));
}

AxiomReport search_counterexample(ValueId v, AxiomId a, int players, int blocks, long trials,
                                  std::uint64_t seed, WorthBounds bounds) {
    if (players < 2 || players > TUGame::kMaxPlayers || blocks < 1 || blocks > players ||
        trials < 1) {
        fail(Errc::InvalidSearchSpace,
             "need 2 <= players <= " + std::to_string(TUGame::kMaxPlayers) +
                 ", 1 <= blocks <= players, trials >= 1");
    }
    for (long t = 0; t < trials; ++t) {
        UnionGame ug = random_union_game(players, blocks, seed, t, bounds);
        AxiomReport report = check_axiom(v, a, ug);
        if (report.verdict == Verdict::Violated) {
            report.trials = t + 1;
            return report;
        }
    }
    AxiomReport r = holds_report(v, a);
    r.within_budget = true;
    r.trials = trials;
    return r;
}

bool claims(ValueId v, AxiomId a) {
    switch (v) {
        case ValueId::EdU:
            return a == AxiomId::Ced || a == AxiomId::Qgp || a == AxiomId::Bcu;
        case ValueId::Esd1U:
            return a == AxiomId::Cesd || a == AxiomId::Qgp || a == AxiomId::Eiu;
        case ValueId::Esd2U:
            return a == AxiomId::Cesd || a == AxiomId::Qgp || a == AxiomId::Dmiviu;
        case ValueId::Esd3U:
            return a == AxiomId::Cesd || a == AxiomId::Qsgp || a == AxiomId::Bcu;
        case ValueId::Esd4U:
            return a == AxiomId::Cesd || a == AxiomId::Qgp || a == AxiomId::Bcpa;
        case ValueId::Esd5U:
            return a == AxiomId::Cesd || a == AxiomId::Qgp || a == AxiomId::Bcu;
        default:
            return false;
    }
}

namespace {

// Unclaimed cells whose identity nevertheless holds for every instance, so
// no counterexample can exist and the search always reports a budget hold.
std::string provable_hold_note(ValueId v, AxiomId a) {
    if (v == ValueId::EdU && a == AxiomId::Eiu)
        return "unclaimed, but an equal split inside each block makes this hold identically";
    if (v == ValueId::EdU && a == AxiomId::Qsgp)
        return "unclaimed, but both sides equal v(N)/m for this value, so it holds identically";
    if (v == ValueId::Esd3U && a == AxiomId::Dmiviu)
        return "unclaimed, but payoffs differ by v(i)-v(j) by construction, so it holds identically";
    return {};
}

} // namespace

AxiomMatrix axiom_matrix(int players, long trials, std::uint64_t seed) {
    if (players < 3 || players > TUGame::kMaxPlayers || trials < 1) {
        fail(Errc::InvalidSearchSpace,
             "matrix needs 3 <= players <= " + std::to_string(TUGame::kMaxPlayers) +
                 " and trials >= 1");
    }
    AxiomMatrix matrix;
    matrix.players = players;
    matrix.trials = trials;
    matrix.seed = seed;

    std::uint64_t cell_index = 0;
    for (ValueId v : kMatrixValues) {
        MatrixRow row;
        row.value = v;
        for (AxiomId a : kMatrixAxioms) {
            ++cell_index;
            // a private stream per cell keeps cells independent of each other
            std::uint64_t cell_state = seed;
            (void)splitmix64(cell_state);
            cell_state += cell_index;
            const std::uint64_t cell_seed = splitmix64(cell_state);

            MatrixCell cell;
            cell.axiom = a;
            cell.claimed = claims(v, a);
            cell.report = holds_report(v, a);
            cell.report.trials = trials;
            for (long t = 0; t < trials; ++t) {
                const int m = 2 + int(t % std::max(1, players - 2)); // cycles 2..players-1
                UnionGame ug = random_union_game(players, m, cell_seed, t);
                AxiomReport report = check_axiom(v, a, ug);
                if (report.verdict == Verdict::Violated) {
                    report.trials = t + 1;
                    cell.report = std::move(report);
                    break;
                }
            }
            if (cell.report.verdict == Verdict::Holds && !cell.claimed) {
                cell.report.within_budget = true;
                cell.report.note = provable_hold_note(v, a);
            }
            row.cells.push_back(std::move(cell));
        }
        matrix.rows.push_back(std::move(row));
    }
    return matrix;
}

} // namespace unionvals
