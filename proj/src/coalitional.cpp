#include "coalitional.hpp"

#include <string>

#include "errors.hpp"

namespace unionvals::values {

namespace {

// v(union of all blocks except k, plus `extra`)
Rational worth_outside_with(const UnionGame& ug, int block, Coalition extra) {
    Coalition s = extra;
    for (int b = 0; b < ug.partition.block_count(); ++b)
        if (b != block) s = s.unite(ug.partition.block(b));
    return ug.game.worth(s);
}

Rational block_worth_sum(const UnionGame& ug) {
    Rational sum = 0;
    for (const Coalition& b : ug.partition.blocks()) sum += ug.game.worth(b);
    return sum;
}

Rational singles_sum(const TUGame& g, Coalition s) {
    Rational sum = 0;
    for (int i : s.members()) sum += g.worth(Coalition::single(i));
    return sum;
}

Allocation zero_allocation(const TUGame& g) {
    return Allocation{g.roster(), std::vector<Rational>(std::size_t(g.player_count()), Rational(0))};
}

} // namespace

TUGame modified_game(const UnionGame& ug, int block, Coalition inner) {
    if (!inner.subset_of(ug.partition.block(block))) {
        fail(Errc::CoalitionOutsideBlock,
             "the representing coalition must lie inside block " + std::to_string(block + 1));
    }
    const int m = ug.partition.block_count();
    std::vector<std::string> seats;
    seats.reserve(std::size_t(m));
    for (int k = 1; k <= m; ++k) seats.push_back(std::to_string(k));

    std::vector<Rational> table(std::size_t{1} << m);
    for (std::uint32_t bits = 0; bits < table.size(); ++bits) {
        Coalition players;
        for (int k : Coalition(bits).members())
            players = players.unite(k == block ? inner : ug.partition.block(k));
        table[bits] = ug.game.worth(players);
    }
    return TUGame::from_table(std::move(seats), std::move(table));
}

TUGame reduced_game(const UnionGame& ug, int block, const BaseValue& f) {
    const Coalition members_mask = ug.partition.block(block);
    const std::vector<int> members = members_mask.members();

    std::vector<std::string> roster;
    roster.reserve(members.size());
    for (int i : members) roster.push_back(ug.game.player_name(i));

    std::vector<Rational> table(std::size_t{1} << members.size(), Rational(0));
    for (std::uint32_t bits = 1; bits < table.size(); ++bits) {
        Coalition inner;
        for (std::size_t j = 0; j < members.size(); ++j)
            if ((bits >> j) & 1u) inner = inner.with(members[j]);
        table[bits] = f(modified_game(ug, block, inner)).payoffs[std::size_t(block)];
    }
    return TUGame::from_table(std::move(roster), std::move(table));
}

Allocation owen_procedure(const UnionGame& ug, const BaseValue& f) {
    Allocation out = zero_allocation(ug.game);
    for (int block = 0; block < ug.partition.block_count(); ++block) {
        const Allocation inside = f(reduced_game(ug, block, f));
        const std::vector<int> members = ug.partition.block(block).members();
        for (std::size_t j = 0; j < members.size(); ++j)
            out.payoffs[std::size_t(members[j])] = inside.payoffs[j];
    }
    return out;
}

Allocation ed_u(const UnionGame& ug) {
    const int m = ug.partition.block_count();
    Allocation out = zero_allocation(ug.game);
    for (int k = 0; k < m; ++k) {
        const Rational share = ug.game.grand_worth() / (Rational(m) * ug.partition.block_size(k));
        for (int i : ug.partition.block(k).members()) out.payoffs[std::size_t(i)] = share;
    }
    return out;
}

Allocation esd1_u(const UnionGame& ug) {
    const int m = ug.partition.block_count();
    const Rational surplus = ug.game.grand_worth() - block_worth_sum(ug);
    Allocation out = zero_allocation(ug.game);
    for (int k = 0; k < m; ++k) {
        const int p = ug.partition.block_size(k);
        const Rational share =
            ug.game.worth(ug.partition.block(k)) / p + surplus / (Rational(m) * p);
        for (int i : ug.partition.block(k).members()) out.payoffs[std::size_t(i)] = share;
    }
    return out;
}

Allocation esd2_u(const UnionGame& ug) {
    const int m = ug.partition.block_count();
    const Rational surplus = ug.game.grand_worth() - block_worth_sum(ug);
    Allocation out = zero_allocation(ug.game);
    for (int k = 0; k < m; ++k) {
        const Coalition blk = ug.partition.block(k);
        const int p = blk.size();
        const Rational inner = (ug.game.worth(blk) - singles_sum(ug.game, blk)) / p;
        const Rational outer = surplus / (Rational(m) * p);
        for (int i : blk.members())
            out.payoffs[std::size_t(i)] = ug.game.worth(Coalition::single(i)) + inner + outer;
    }
    return out;
}

Allocation esd3_u(const UnionGame& ug) {
    const int m = ug.partition.block_count();
    const Rational surplus =
        ug.game.grand_worth() - singles_sum(ug.game, ug.game.grand_coalition());
    Allocation out = zero_allocation(ug.game);
    for (int k = 0; k < m; ++k) {
        const int p = ug.partition.block_size(k);
        const Rational share = surplus / (Rational(m) * p);
        for (int i : ug.partition.block(k).members())
            out.payoffs[std::size_t(i)] = ug.game.worth(Coalition::single(i)) + share;
    }
    return out;
}

Allocation esd4_correction(const UnionGame& ug) {
    const int m = ug.partition.block_count();
    Allocation out = zero_allocation(ug.game);
    for (int k = 0; k < m; ++k) {
        const Coalition blk = ug.partition.block(k);
        const int p = blk.size();
        const Rational mean_single = singles_sum(ug.game, blk) / p;
        Rational mean_outside = 0;
        for (int t : blk.members())
            mean_outside += worth_outside_with(ug, k, Coalition::single(t));
        mean_outside /= p;
        for (int i : blk.members()) {
            const Rational own_single = ug.game.worth(Coalition::single(i));
            const Rational own_outside = worth_outside_with(ug, k, Coalition::single(i));
            out.payoffs[std::size_t(i)] =
                (mean_single - own_single) / m + (own_outside - mean_outside) / m;
        }
    }
    return out;
}

Allocation esd4_u(const UnionGame& ug) {
    Allocation out = esd2_u(ug);
    const Allocation fix = esd4_correction(ug);
    for (std::size_t i = 0; i < out.payoffs.size(); ++i) out.payoffs[i] += fix.payoffs[i];
    return out;
}

Esd5WeightCase esd5_weight_case(int p, int t) {
    if (p >= 2 && t == 1) return p == 2 ? Esd5WeightCase::Pair : Esd5WeightCase::Singleton;
    if (p > 2 && t == p - 1) return Esd5WeightCase::NearFull;
    if (p > 3 && t >= 2 && t <= p - 2) return Esd5WeightCase::Interior;
    fail(Errc::WeightUndefined, "no weight case for block size " + std::to_string(p) +
                                    ", subset size " + std::to_string(t));
}

Rational esd5_weight(int m, int p, int t) {
    if (m < 1 || p < 2 || t < 1 || t > p - 1) {
        fail(Errc::WeightUndefined,
             "weight arguments out of range: m=" + std::to_string(m) +
                 " p=" + std::to_string(p) + " t=" + std::to_string(t));
    }
    switch (esd5_weight_case(p, t)) {
        case Esd5WeightCase::Pair:
            return Rational(1, 2);
        case Esd5WeightCase::Singleton: {
            Rational sum = 1;
            for (int j = 1; j <= p - 2; ++j) sum += Rational(1, m + j);
            return sum / p;
        }
        case Esd5WeightCase::NearFull:
            return Rational(m, (m + 1) * p);
        case Esd5WeightCase::Interior: {
            const int z = p - t;
            Rational sum = 0;
            for (int j = 0; j <= z - 2; ++j) sum += Rational(p - j - t, p - j);
            return Rational(m + z - 1, (p - z + 1) * (m + z)) * sum;
        }
    }
    fail(Errc::WeightUndefined, "unreachable");
}

Allocation esd5_correction(const UnionGame& ug) {
    const int m = ug.partition.block_count();
    Allocation out = zero_allocation(ug.game);
    for (int k = 0; k < m; ++k) {
        const Coalition blk = ug.partition.block(k);
        const std::vector<int> members = blk.members();
        const int p = int(members.size());
        if (p < 2) continue; // no strict nonempty subsets

        // local bits enumerate subsets of the block
        const std::uint32_t all = (std::uint32_t{1} << p) - 1;
        for (std::uint32_t bits = 1; bits < all; ++bits) {
            Coalition subset;
            for (int j = 0; j < p; ++j)
                if ((bits >> j) & 1u) subset = subset.with(members[std::size_t(j)]);
            const int t = subset.size();
            const Rational weight = esd5_weight(m, p, t);
            const Rational worth = ug.game.worth(subset);
            const Rational inside = weight / t * worth;
            const Rational outside = weight / (p - t) * worth;
            for (int i : members) {
                if (subset.contains(i))
                    out.payoffs[std::size_t(i)] += inside;
                else
                    out.payoffs[std::size_t(i)] -= outside;
            }
        }
    }
    return out;
}

Allocation esd5_u(const UnionGame& ug) {
    Allocation out = esd1_u(ug);
    const Allocation fix = esd5_correction(ug);
    for (std::size_t i = 0; i < out.payoffs.size(); ++i) out.payoffs[i] += fix.payoffs[i];
    return out;
}

Allocation owen(const UnionGame& ug) { return owen_procedure(ug, shapley); }

Allocation banzhaf_owen(const UnionGame& ug) { return owen_procedure(ug, banzhaf); }

} // namespace unionvals::values
