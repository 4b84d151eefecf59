#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "game.hpp"

namespace unionvals {

// Game files are JSON documents:
//
//   {
//     "players": ["1", "2", "3"],
//     "coalitions": { "1": "0", "2": "2", ..., "1,2,3": "12" },
//     "partition": [["1", "2"], ["3"]],
//     "mode": "strict"
//   }
//
// Coalition keys are the member names joined by ',' in roster order; the
// empty coalition is never listed. Worths are rational literals ("p",
// "-p", "p/q") written as strings, never as JSON numbers. "partition" is
// optional and defaults to the all-singleton partition. "mode" is
// "strict" (default: every nonempty coalition must be listed) or "sparse"
// (missing coalitions get "default_worth", itself defaulting to "0").
// Unknown fields are rejected in strict mode.

UnionGame parse_game(std::string_view text);

// Canonical rendering: roster order for players, coalition keys sorted by
// (size, then member order), rationals in lowest terms, fixed whitespace.
// Byte-deterministic, so equal games serialize to equal bytes.
std::string serialize_game(const UnionGame& ug);

// Same, for a bare game: no "partition" field is emitted.
std::string serialize_game(const TUGame& g);

// The canonical key of one coalition ("1,3"), members in roster order.
std::string coalition_key(const TUGame& g, Coalition s);

// The document as a JSON value with the same field and key order as
// serialize_game; used to embed games inside reports.
nlohmann::ordered_json game_document(const UnionGame& ug);
nlohmann::ordered_json game_document(const TUGame& g);

} // namespace unionvals
