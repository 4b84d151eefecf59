#include "base_values.hpp"

namespace unionvals::values {

namespace {

Allocation uniform_allocation(const TUGame& g, const Rational& each) {
    return Allocation{g.roster(), std::vector<Rational>(std::size_t(g.player_count()), each)};
}

} // namespace

Allocation ed(const TUGame& g) {
    return uniform_allocation(g, g.grand_worth() / g.player_count());
}

Allocation esd(const TUGame& g) {
    const int n = g.player_count();
    Rational singles = 0;
    for (int i = 0; i < n; ++i) singles += g.worth(Coalition::single(i));
    const Rational share = (g.grand_worth() - singles) / n;

    Allocation out{g.roster(), {}};
    out.payoffs.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) out.payoffs.push_back(g.worth(Coalition::single(i)) + share);
    return out;
}

Allocation shapley(const TUGame& g) {
    const int n = g.player_count();

    // weight[s] = s!(n-s-1)!/n! for a coalition of size s joined by one player
    std::vector<Integer> factorial(std::size_t(n) + 1, 1);
    for (int k = 1; k <= n; ++k) factorial[std::size_t(k)] = factorial[std::size_t(k - 1)] * k;
    std::vector<Rational> weight(std::size_t(n));
    for (int s = 0; s < n; ++s) {
        weight[std::size_t(s)] =
            Rational(factorial[std::size_t(s)] * factorial[std::size_t(n - s - 1)],
                     factorial[std::size_t(n)]);
    }

    Allocation out{g.roster(), std::vector<Rational>(std::size_t(n), Rational(0))};
    const std::uint32_t all = g.grand_coalition().bits();
    for (int i = 0; i < n; ++i) {
        const std::uint32_t rest = all & ~Coalition::single(i).bits();
        Rational sum = 0;
        // enumerate the subsets of N \ {i}
        std::uint32_t s = 0;
        while (true) {
            const Coalition without(s);
            const Coalition with = without.with(i);
            sum += weight[std::size_t(without.size())] * (g.worth(with) - g.worth(without));
            if (s == rest) break;
            s = (s - rest) & rest; // next subset
        }
        out.payoffs[std::size_t(i)] = sum;
    }
    return out;
}

Allocation banzhaf(const TUGame& g) {
    const int n = g.player_count();
    const Integer denom = Integer(1) << (n - 1);

    Allocation out{g.roster(), std::vector<Rational>(std::size_t(n), Rational(0))};
    const std::uint32_t all = g.grand_coalition().bits();
    for (int i = 0; i < n; ++i) {
        const std::uint32_t rest = all & ~Coalition::single(i).bits();
        Rational sum = 0;
        std::uint32_t s = 0;
        while (true) {
            const Coalition without(s);
            sum += g.worth(without.with(i)) - g.worth(without);
            if (s == rest) break;
            s = (s - rest) & rest;
        }
        out.payoffs[std::size_t(i)] = sum / Rational(denom);
    }
    return out;
}

} // namespace unionvals::values
