#include "game.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace unionvals {

namespace {

std::string member_list(const std::vector<std::string>& roster, Coalition s) {
    std::string out;
    for (int i : s.members()) {
        if (!out.empty()) out += ',';
        out += roster[std::size_t(i)];
    }
    return out.empty() ? std::string("(empty)") : out;
}

void check_roster(const std::vector<std::string>& roster) {
    if (roster.empty()) fail(Errc::ValidationError, "roster must not be empty");
    if (roster.size() > std::size_t(TUGame::kMaxPlayers)) {
        fail(Errc::RosterTooLarge, "roster has " + std::to_string(roster.size()) +
                                       " players, limit is " + std::to_string(TUGame::kMaxPlayers));
    }
    std::set<std::string_view> seen;
    for (const auto& name : roster) {
        if (name.empty()) fail(Errc::ValidationError, "player names must not be empty");
        if (name.find(',') != std::string::npos) {
            fail(Errc::ValidationError,
                 "player name \"" + name + "\" contains ',' which is reserved for coalition keys");
        }
        if (!seen.insert(name).second) fail(Errc::DuplicatePlayer, "duplicate player \"" + name + "\"");
    }
}

} // namespace

TUGame TUGame::from_table(std::vector<std::string> roster, std::vector<Rational> table) {
    check_roster(roster);
    if (table.size() != (std::size_t{1} << roster.size())) {
        fail(Errc::ValidationError, "worth table size " + std::to_string(table.size()) +
                                        " does not match 2^" + std::to_string(roster.size()));
    }
    if (table[0] != 0) fail(Errc::NonzeroEmptyWorth, "worth of the empty coalition must be 0");
    return TUGame(std::move(roster), std::move(table));
}

int TUGame::player_index(std::string_view name) const {
    for (int i = 0; i < n_; ++i)
        if (roster_[std::size_t(i)] == name) return i;
    fail(Errc::UnknownPlayer, "unknown player \"" + std::string(name) + "\"");
}

TUGame make_game(std::vector<std::string> roster,
                 const std::vector<std::pair<Coalition, Rational>>& entries,
                 WorthMode mode,
                 const Rational& default_worth) {
    check_roster(roster);
    const int n = int(roster.size());
    const Coalition all = Coalition::full(n);
    const std::size_t table_size = std::size_t{1} << n;

    std::vector<Rational> table(table_size, default_worth);
    std::vector<bool> given(table_size, false);
    for (const auto& [coalition, worth] : entries) {
        if (!coalition.subset_of(all)) {
            fail(Errc::UnknownPlayerInCoalition,
                 "coalition entry uses a player index outside the roster");
        }
        if (coalition.empty()) {
            if (worth != 0) fail(Errc::NonzeroEmptyWorth, "worth of the empty coalition must be 0");
            continue;
        }
        if (given[coalition.bits()]) {
            fail(Errc::ValidationError,
                 "coalition {" + member_list(roster, coalition) + "} listed more than once");
        }
        given[coalition.bits()] = true;
        table[coalition.bits()] = worth;
    }
    if (mode == WorthMode::Strict) {
        for (std::uint32_t bits = 1; bits < table_size; ++bits) {
            if (!given[bits]) {
                fail(Errc::MissingCoalition,
                     "strict mode: no worth for coalition {" +
                         member_list(roster, Coalition(bits)) + "}");
            }
        }
    }
    table[0] = 0;
    return TUGame::from_table(std::move(roster), std::move(table));
}

TUGame zero_normalized(const TUGame& g) {
    std::vector<Rational> table(g.coalition_count());
    for (std::uint32_t bits = 1; bits < table.size(); ++bits) {
        Rational singles = 0;
        for (int i : Coalition(bits).members()) singles += g.worth(Coalition::single(i));
        table[bits] = g.worth(Coalition(bits)) - singles;
    }
    return TUGame::from_table(g.roster(), std::move(table));
}

TUGame restrict_to(const TUGame& g, Coalition keep) {
    if (keep.empty()) fail(Errc::EmptyRestriction, "cannot restrict a game to the empty coalition");
    if (!keep.subset_of(g.grand_coalition())) {
        fail(Errc::UnknownPlayerInCoalition, "restriction uses a player index outside the roster");
    }
    const std::vector<int> kept = keep.members();
    std::vector<std::string> roster;
    roster.reserve(kept.size());
    for (int i : kept) roster.push_back(g.player_name(i));

    std::vector<Rational> table(std::size_t{1} << kept.size());
    for (std::uint32_t bits = 0; bits < table.size(); ++bits) {
        Coalition original;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if ((bits >> j) & 1u) original = original.with(kept[j]);
        table[bits] = g.worth(original);
    }
    return TUGame::from_table(std::move(roster), std::move(table));
}

Partition::Partition(std::vector<Coalition> blocks, int player_count)
    : blocks_(std::move(blocks)), owner_(std::size_t(player_count), -1) {
    Coalition covered;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        const Coalition b = blocks_[k];
        if (b.empty()) fail(Errc::ValidationError, "partition blocks must not be empty");
        if (!b.subset_of(Coalition::full(player_count))) {
            fail(Errc::UnknownPlayer, "partition block uses a player index outside the roster");
        }
        if (!covered.disjoint(b)) fail(Errc::ValidationError, "partition blocks overlap");
        covered = covered.unite(b);
        for (int i : b.members()) owner_[std::size_t(i)] = int(k);
    }
    if (covered != Coalition::full(player_count)) {
        fail(Errc::ValidationError, "partition blocks do not cover the roster");
    }
}

int Partition::block_of(int player) const {
    if (player < 0 || std::size_t(player) >= owner_.size()) {
        fail(Errc::UnknownPlayer, "player index " + std::to_string(player) + " outside the roster");
    }
    return owner_[std::size_t(player)];
}

bool Partition::all_singletons() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](Coalition b) { return b.size() == 1; });
}

Partition trivial_partition(int player_count) {
    std::vector<Coalition> blocks;
    blocks.reserve(std::size_t(player_count));
    for (int i = 0; i < player_count; ++i) blocks.push_back(Coalition::single(i));
    return Partition(std::move(blocks), player_count);
}

Partition trivial_partition(const TUGame& g) { return trivial_partition(g.player_count()); }

Partition split_off(const Partition& p, int player) {
    const int k = p.block_of(player);
    if (p.block_size(k) < 2) {
        fail(Errc::SingletonSplit, "splitting a singleton block would leave an empty block");
    }
    std::vector<Coalition> blocks;
    blocks.reserve(std::size_t(p.block_count()) + 1);
    for (int b = 0; b < p.block_count(); ++b) {
        if (b == k) {
            blocks.push_back(p.block(b).without(player));
            blocks.push_back(Coalition::single(player));
        } else {
            blocks.push_back(p.block(b));
        }
    }
    return Partition(std::move(blocks), p.player_count());
}

UnionGame::UnionGame(TUGame g, Partition p) : game(std::move(g)), partition(std::move(p)) {
    if (partition.player_count() != game.player_count()) {
        fail(Errc::ValidationError, "partition and game roster sizes differ");
    }
}

namespace {

std::vector<std::string> block_names(int m) {
    std::vector<std::string> names;
    names.reserve(std::size_t(m));
    for (int k = 1; k <= m; ++k) names.push_back(std::to_string(k));
    return names;
}

Coalition blocks_union(const Partition& p, Coalition block_set) {
    Coalition out;
    for (int k : block_set.members()) out = out.unite(p.block(k));
    return out;
}

} // namespace

TUGame quotient_game(const UnionGame& ug) {
    const int m = ug.partition.block_count();
    std::vector<Rational> table(std::size_t{1} << m);
    for (std::uint32_t bits = 0; bits < table.size(); ++bits) {
        table[bits] = ug.game.worth(blocks_union(ug.partition, Coalition(bits)));
    }
    return TUGame::from_table(block_names(m), std::move(table));
}

TUGame quotient_star_game(const UnionGame& ug) {
    const int m = ug.partition.block_count();
    std::vector<Rational> table(std::size_t{1} << m);
    for (std::uint32_t bits = 1; bits + 1 < table.size(); ++bits) {
        Rational singles = 0;
        for (int k : Coalition(bits).members())
            for (int i : ug.partition.block(k).members())
                singles += ug.game.worth(Coalition::single(i));
        table[bits] = singles;
    }
    table[table.size() - 1] = ug.game.grand_worth();
    return TUGame::from_table(block_names(m), std::move(table));
}

UnionGame bcpa_reduction(const UnionGame& ug, int block, int player) {
    const Coalition old_block = ug.partition.block(block);
    if (!old_block.contains(player)) {
        fail(Errc::ValidationError, "player is not a member of the named block");
    }
    const Coalition keep =
        ug.game.grand_coalition().minus(old_block).with(player);
    TUGame reduced = restrict_to(ug.game, keep);

    // Remap surviving player indices to the restricted roster.
    std::vector<int> new_index(std::size_t(ug.game.player_count()), -1);
    {
        const auto kept = keep.members();
        for (std::size_t j = 0; j < kept.size(); ++j) new_index[std::size_t(kept[j])] = int(j);
    }
    std::vector<Coalition> blocks;
    blocks.reserve(std::size_t(ug.partition.block_count()));
    for (int b = 0; b < ug.partition.block_count(); ++b) {
        Coalition mapped;
        const Coalition source = (b == block) ? Coalition::single(player) : ug.partition.block(b);
        for (int i : source.members()) mapped = mapped.with(new_index[std::size_t(i)]);
        blocks.push_back(mapped);
    }
    Partition partition(std::move(blocks), reduced.player_count());
    return UnionGame(std::move(reduced), std::move(partition));
}

Rational Allocation::total() const {
    Rational sum = 0;
    for (const auto& p : payoffs) sum += p;
    return sum;
}

} // namespace unionvals
