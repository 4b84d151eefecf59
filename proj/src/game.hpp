#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace unionvals {

// A coalition is a subset of one game's roster, encoded as one bit per
// roster index. Index order is the canonical order everywhere, so the
// encoding is unique per subset and worth lookups are array reads.
class Coalition {
public:
    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

    static constexpr Coalition full(int player_count) {
        return Coalition((std::uint32_t{1} << player_count) - 1);
    }
    static constexpr Coalition single(int player) {
        return Coalition(std::uint32_t{1} << player);
    }
    static Coalition of(std::initializer_list<int> players) {
        Coalition s;
        for (int p : players) s = s.with(p);
        return s;
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int player) const { return (bits_ >> player) & 1u; }
    constexpr bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr Coalition with(int player) const { return Coalition(bits_ | (std::uint32_t{1} << player)); }
    constexpr Coalition without(int player) const { return Coalition(bits_ & ~(std::uint32_t{1} << player)); }
    constexpr Coalition unite(Coalition other) const { return Coalition(bits_ | other.bits_); }
    constexpr Coalition intersect(Coalition other) const { return Coalition(bits_ & other.bits_); }
    constexpr Coalition minus(Coalition other) const { return Coalition(bits_ & ~other.bits_); }
    constexpr bool disjoint(Coalition other) const { return (bits_ & other.bits_) == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr bool operator==(Coalition, Coalition) = default;

private:
    std::uint32_t bits_ = 0;
};

enum class WorthMode { Strict, Sparse };

// A TU-game: an ordered roster of uniquely named players together with a
// total worth mapping on all 2^n coalitions, worth(empty) = 0.
class TUGame {
public:
    // Enumeration is O(2^n), so rosters are capped.
    static constexpr int kMaxPlayers = 20;

    // Builds from a complete worth table indexed by coalition bits.
    // table[0] must be zero and table.size() must be 2^roster.size().
    static TUGame from_table(std::vector<std::string> roster, std::vector<Rational> table);

    int player_count() const { return n_; }
    Coalition grand_coalition() const { return Coalition::full(n_); }
    std::size_t coalition_count() const { return worth_.size(); }

    const std::vector<std::string>& roster() const { return roster_; }
    const std::string& player_name(int index) const { return roster_[std::size_t(index)]; }
    int player_index(std::string_view name) const; // Error(UnknownPlayer)

    const Rational& worth(Coalition s) const { return worth_[s.bits()]; }
    const Rational& grand_worth() const { return worth_[worth_.size() - 1]; }

    friend bool operator==(const TUGame&, const TUGame&) = default;

private:
    TUGame(std::vector<std::string> roster, std::vector<Rational> table)
        : roster_(std::move(roster)), worth_(std::move(table)), n_(int(roster_.size())) {}

    std::vector<std::string> roster_;
    std::vector<Rational> worth_; // indexed by Coalition::bits()
    int n_ = 0;
};

// Validating constructor used by parsers and by hand-authored fixtures.
// Strict mode requires every nonempty coalition to appear exactly once;
// sparse mode fills the missing ones with default_worth. An entry for the
// empty coalition is accepted only with worth 0.
TUGame make_game(std::vector<std::string> roster,
                 const std::vector<std::pair<Coalition, Rational>>& entries,
                 WorthMode mode = WorthMode::Strict,
                 const Rational& default_worth = Rational(0));

// Subtracts singleton worths pointwise: w(S) = v(S) - sum_{i in S} v({i}).
TUGame zero_normalized(const TUGame& g);

// Game on the sub-roster `keep` with worths inherited from g.
TUGame restrict_to(const TUGame& g, Coalition keep); // Error(EmptyRestriction)

// An ordered partition of the roster into nonempty, pairwise disjoint
// blocks. Block order is preserved from the input; allocations must not
// depend on it, but quotient-game player naming does.
class Partition {
public:
    Partition(std::vector<Coalition> blocks, int player_count);

    int block_count() const { return int(blocks_.size()); } // m
    Coalition block(int k) const { return blocks_[std::size_t(k)]; }
    int block_size(int k) const { return blocks_[std::size_t(k)].size(); } // p_k
    int player_count() const { return int(owner_.size()); }
    int block_of(int player) const; // Error(UnknownPlayer)
    bool all_singletons() const;
    const std::vector<Coalition>& blocks() const { return blocks_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Coalition> blocks_;
    std::vector<int> owner_; // player index -> block index
};

Partition trivial_partition(int player_count);
Partition trivial_partition(const TUGame& g);

// The block containing `player` loses it to a new singleton block inserted
// right after: {P_1,..,P_k \ {player}, {player}, .., P_m}. Splitting a
// player out of a singleton block would leave an empty block behind and is
// rejected instead.
Partition split_off(const Partition& p, int player); // Error(SingletonSplit)

// A TU-game together with a partition of its roster into a priori unions.
struct UnionGame {
    UnionGame(TUGame g, Partition p); // validates p against g's roster

    TUGame game;
    Partition partition;

    friend bool operator==(const UnionGame&, const UnionGame&) = default;
};

// The game played between the unions: one synthetic player per block,
// named "1".."m" by block position, worth(R) = v(union of the blocks in R).
TUGame quotient_game(const UnionGame& ug);

// Variant where every strict subset of the unions is worth the sum of its
// members' singleton worths and only the full set is worth v(N).
TUGame quotient_star_game(const UnionGame& ug);

// Deletes everyone else in player's block from the game: roster becomes
// N \ P_k together with the player, and the block shrinks to the singleton
// {player} in the same position (m is unchanged).
UnionGame bcpa_reduction(const UnionGame& ug, int block, int player);

// An exact payoff vector over one game's roster.
struct Allocation {
    std::vector<std::string> players;
    std::vector<Rational> payoffs;

    const Rational& operator[](std::size_t i) const { return payoffs[i]; }
    std::size_t size() const { return payoffs.size(); }
    Rational total() const;

    friend bool operator==(const Allocation&, const Allocation&) = default;
};

} // namespace unionvals
