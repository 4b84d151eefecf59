#include "document.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace unionvals {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> split_key(std::string_view key) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = key.find(',', start);
        names.emplace_back(key.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return names;
}

Coalition coalition_from_key(const TUGame& g, std::string_view key) {
    Coalition s;
    int previous = -1;
    for (const std::string& name : split_key(key)) {
        int idx;
        try {
            idx = g.player_index(name);
        } catch (const Error&) {
            fail(Errc::UnknownPlayerInCoalition,
                 "coalition key \"" + std::string(key) + "\" names unknown player \"" + name +
                     "\"");
        }
        if (idx <= previous) {
            fail(Errc::ValidationError, "coalition key \"" + std::string(key) +
                                            "\" is not in canonical roster order");
        }
        previous = idx;
        s = s.with(idx);
    }
    return s;
}

Rational worth_literal(const ordered_json& value, const std::string& context) {
    if (!value.is_string()) {
        fail(Errc::ValidationError,
             context + ": worths must be rational literals written as strings");
    }
    return parse_rational(value.get<std::string>());
}

std::vector<Coalition> sorted_masks(const TUGame& g) {
    std::vector<Coalition> masks;
    masks.reserve(g.coalition_count() - 1);
    for (std::uint32_t bits = 1; bits < g.coalition_count(); ++bits)
        masks.emplace_back(bits);
    std::sort(masks.begin(), masks.end(), [](Coalition a, Coalition b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    return masks;
}

std::string quoted(const std::string& s) { return ordered_json(s).dump(); }

void render_players(std::ostringstream& out, const TUGame& g) {
    out << "  \"players\": [";
    for (int i = 0; i < g.player_count(); ++i) {
        if (i) out << ", ";
        out << quoted(g.player_name(i));
    }
    out << "],\n";
}

void render_coalitions(std::ostringstream& out, const TUGame& g) {
    out << "  \"coalitions\": {\n";
    const auto masks = sorted_masks(g);
    for (std::size_t i = 0; i < masks.size(); ++i) {
        out << "    " << quoted(coalition_key(g, masks[i])) << ": "
            << quoted(to_string(g.worth(masks[i])));
        out << (i + 1 < masks.size() ? ",\n" : "\n");
    }
    out << "  },\n";
}

void render_partition(std::ostringstream& out, const UnionGame& ug) {
    out << "  \"partition\": [";
    for (int k = 0; k < ug.partition.block_count(); ++k) {
        if (k) out << ", ";
        out << "[";
        const auto members = ug.partition.block(k).members();
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (j) out << ", ";
            out << quoted(ug.game.player_name(members[j]));
        }
        out << "]";
    }
    out << "],\n";
}

} // namespace

std::string coalition_key(const TUGame& g, Coalition s) {
    std::string key;
    for (int i : s.members()) {
        if (!key.empty()) key += ',';
        key += g.player_name(i);
    }
    return key;
}

UnionGame parse_game(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::SyntaxError, e.what());
    }
    if (!doc.is_object()) fail(Errc::ValidationError, "game document must be a JSON object");

    WorthMode mode = WorthMode::Strict;
    if (auto it = doc.find("mode"); it != doc.end()) {
        if (!it->is_string() || (*it != "strict" && *it != "sparse")) {
            fail(Errc::ValidationError, "\"mode\" must be \"strict\" or \"sparse\"");
        }
        mode = (*it == "sparse") ? WorthMode::Sparse : WorthMode::Strict;
    }

    if (mode == WorthMode::Strict) {
        for (const auto& [key, value] : doc.items()) {
            if (key != "players" && key != "coalitions" && key != "partition" && key != "mode" &&
                key != "default_worth") {
                fail(Errc::ValidationError, "unknown field \"" + key + "\" in strict mode");
            }
        }
        if (doc.contains("default_worth")) {
            fail(Errc::ValidationError, "\"default_worth\" is only meaningful in sparse mode");
        }
    }

    Rational default_worth = 0;
    if (auto it = doc.find("default_worth"); it != doc.end() && mode == WorthMode::Sparse) {
        default_worth = worth_literal(*it, "default_worth");
    }

    auto players_it = doc.find("players");
    if (players_it == doc.end() || !players_it->is_array() || players_it->empty()) {
        fail(Errc::ValidationError, "\"players\" must be a nonempty array of names");
    }
    std::vector<std::string> roster;
    roster.reserve(players_it->size());
    for (const auto& p : *players_it) {
        if (!p.is_string()) fail(Errc::ValidationError, "player names must be strings");
        roster.push_back(p.get<std::string>());
    }

    auto coalitions_it = doc.find("coalitions");
    if (coalitions_it == doc.end() || !coalitions_it->is_object()) {
        fail(Errc::ValidationError, "\"coalitions\" must be an object of worth entries");
    }

    // A probe game resolves names to indices for coalition keys before the
    // real worth table exists.
    TUGame probe = make_game(roster, {}, WorthMode::Sparse, 0);

    std::vector<std::pair<Coalition, Rational>> entries;
    entries.reserve(coalitions_it->size());
    for (const auto& [key, value] : coalitions_it->items()) {
        if (key.empty()) {
            fail(Errc::ValidationError, "the empty coalition must not be listed");
        }
        entries.emplace_back(coalition_from_key(probe, key),
                             worth_literal(value, "coalition \"" + key + "\""));
    }
    TUGame game = make_game(std::move(roster), entries, mode, default_worth);

    Partition partition = trivial_partition(game);
    if (auto it = doc.find("partition"); it != doc.end()) {
        if (!it->is_array()) {
            fail(Errc::ValidationError, "\"partition\" must be an array of blocks");
        }
        std::vector<Coalition> blocks;
        blocks.reserve(it->size());
        for (const auto& blk : *it) {
            if (!blk.is_array()) {
                fail(Errc::ValidationError, "partition blocks must be arrays of player names");
            }
            Coalition b;
            for (const auto& name : blk) {
                if (!name.is_string()) {
                    fail(Errc::ValidationError, "partition blocks must contain player names");
                }
                b = b.with(game.player_index(name.get<std::string>()));
            }
            blocks.push_back(b);
        }
        partition = Partition(std::move(blocks), game.player_count());
    }
    return UnionGame(std::move(game), std::move(partition));
}

std::string serialize_game(const UnionGame& ug) {
    std::ostringstream out;
    out << "{\n";
    render_players(out, ug.game);
    render_coalitions(out, ug.game);
    render_partition(out, ug);
    out << "  \"mode\": \"strict\"\n}\n";
    return out.str();
}

std::string serialize_game(const TUGame& g) {
    std::ostringstream out;
    out << "{\n";
    render_players(out, g);
    render_coalitions(out, g);
    out << "  \"mode\": \"strict\"\n}\n";
    return out.str();
}

nlohmann::ordered_json game_document(const TUGame& g) {
    ordered_json doc;
    doc["players"] = g.roster();
    ordered_json coalitions = ordered_json::object();
    for (Coalition s : sorted_masks(g)) coalitions[coalition_key(g, s)] = to_string(g.worth(s));
    doc["coalitions"] = std::move(coalitions);
    doc["mode"] = "strict";
    return doc;
}

nlohmann::ordered_json game_document(const UnionGame& ug) {
    ordered_json doc = game_document(ug.game);
    ordered_json partition = ordered_json::array();
    for (int k = 0; k < ug.partition.block_count(); ++k) {
        ordered_json blk = ordered_json::array();
        for (int i : ug.partition.block(k).members()) blk.push_back(ug.game.player_name(i));
        partition.push_back(std::move(blk));
    }
    // keep the field order of serialize_game: players, coalitions, partition, mode
    ordered_json ordered;
    ordered["players"] = doc["players"];
    ordered["coalitions"] = doc["coalitions"];
    ordered["partition"] = std::move(partition);
    ordered["mode"] = "strict";
    return ordered;
}

} // namespace unionvals
