#include "unionvals/unionvals.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "axioms.hpp"
#include "document.hpp"
#include "errors.hpp"

using nlohmann::ordered_json;

struct uv_game {
    unionvals::UnionGame data;
};

namespace {

using namespace unionvals;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** out_error, const std::string& message) {
    if (out_error != nullptr) *out_error = dup_string(message);
}

uv_status status_of(Errc code) {
    switch (code) {
        case Errc::SyntaxError:
            return UV_ERR_SYNTAX;
        case Errc::UnknownIdentifier:
        case Errc::InvalidSearchSpace:
        case Errc::WeightUndefined:
            return UV_ERR_ARGUMENT;
        default:
            return UV_ERR_VALIDATION;
    }
}

// Runs `body`, translating exceptions into status codes + messages.
template <typename Body>
uv_status guarded(char** out_error, Body body) {
    try {
        return body();
    } catch (const Error& e) {
        set_error(out_error, std::string(errc_name(e.code())) + ": " + e.what());
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        set_error(out_error, "out of memory");
        return UV_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(out_error, e.what());
        return UV_ERR_INTERNAL;
    }
}

ordered_json allocation_json(const std::string& id, const Allocation& alloc) {
    ordered_json j;
    j["value"] = id;
    j["players"] = alloc.players;
    ordered_json payoffs = ordered_json::array();
    for (const auto& p : alloc.payoffs) payoffs.push_back(to_string(p));
    j["payoffs"] = std::move(payoffs);
    return j;
}

ordered_json report_json(const AxiomReport& report) {
    ordered_json j;
    j["value"] = value_id_name(report.value);
    j["axiom"] = axiom_id_name(report.axiom);
    j["verdict"] = verdict_name(report.verdict);
    j["vacuous"] = report.vacuous;
    j["within_budget"] = report.within_budget;
    j["trials"] = report.trials;
    if (!report.note.empty()) j["note"] = report.note;
    if (report.witness.has_value()) {
        const Witness& w = *report.witness;
        ordered_json witness;
        if (w.block >= 0) witness["block"] = w.block + 1;
        witness["players"] = w.players;
        witness["lhs"] = to_string(w.lhs);
        witness["rhs"] = to_string(w.rhs);
        witness["detail"] = w.detail;
        witness["game"] = game_document(w.instance);
        j["witness"] = std::move(witness);
    }
    return j;
}

// Single-game values applicable through uv_compute.
const values::BaseValue* base_value_by_id(std::string_view id) {
    static const values::BaseValue ed = [](const TUGame& g) { return values::ed(g); };
    static const values::BaseValue esd = [](const TUGame& g) { return values::esd(g); };
    static const values::BaseValue shapley = [](const TUGame& g) { return values::shapley(g); };
    static const values::BaseValue banzhaf = [](const TUGame& g) { return values::banzhaf(g); };
    if (id == "ed") return &ed;
    if (id == "esd") return &esd;
    if (id == "shapley") return &shapley;
    if (id == "banzhaf") return &banzhaf;
    return nullptr;
}

ValueId require_value_id(const char* id) {
    if (id == nullptr) fail(Errc::UnknownIdentifier, "value id is null");
    if (auto v = value_id_from(id)) return *v;
    fail(Errc::UnknownIdentifier, "unknown value id \"" + std::string(id) + "\"");
}

AxiomId require_axiom_id(const char* id) {
    if (id == nullptr) fail(Errc::UnknownIdentifier, "axiom id is null");
    if (auto a = axiom_id_from(id)) return *a;
    fail(Errc::UnknownIdentifier, "unknown axiom id \"" + std::string(id) + "\"");
}

} // namespace

extern "C" {

const char* uv_version(void) { return "1.0.0"; }

void uv_string_free(char* text) { std::free(text); }

uv_status uv_game_parse(const char* text, size_t text_len, uv_game** out_game,
                        char** out_error) {
    if (text == nullptr || out_game == nullptr) {
        set_error(out_error, "text and out_game must not be null");
        return UV_ERR_ARGUMENT;
    }
    *out_game = nullptr;
    return guarded(out_error, [&]() {
        std::string_view view = text_len > 0 ? std::string_view(text, text_len)
                                             : std::string_view(text);
        *out_game = new uv_game{unionvals::parse_game(view)};
        return UV_OK;
    });
}

uv_status uv_game_serialize(const uv_game* game, char** out_text) {
    if (game == nullptr || out_text == nullptr) return UV_ERR_ARGUMENT;
    return guarded(nullptr, [&]() {
        *out_text = dup_string(unionvals::serialize_game(game->data));
        return *out_text != nullptr ? UV_OK : UV_ERR_INTERNAL;
    });
}

void uv_game_free(uv_game* game) { delete game; }

int uv_game_player_count(const uv_game* game) {
    return game == nullptr ? 0 : game->data.game.player_count();
}

int uv_game_block_count(const uv_game* game) {
    return game == nullptr ? 0 : game->data.partition.block_count();
}

uv_status uv_compute(const uv_game* game, const char* value_id, char** out_json,
                     char** out_error) {
    if (game == nullptr || value_id == nullptr || out_json == nullptr) {
        set_error(out_error, "game, value_id and out_json must not be null");
        return UV_ERR_ARGUMENT;
    }
    return guarded(out_error, [&]() {
        Allocation alloc;
        if (const values::BaseValue* base = base_value_by_id(value_id)) {
            alloc = (*base)(game->data.game);
        } else {
            alloc = evaluate(require_value_id(value_id), game->data);
        }
        *out_json = dup_string(allocation_json(value_id, alloc).dump());
        return UV_OK;
    });
}

uv_status uv_check(const uv_game* game, const char* value_id, const char* axiom_id,
                   int* out_violated, char** out_json, char** out_error) {
    if (game == nullptr || out_json == nullptr) {
        set_error(out_error, "game and out_json must not be null");
        return UV_ERR_ARGUMENT;
    }
    return guarded(out_error, [&]() {
        const AxiomReport report =
            check_axiom(require_value_id(value_id), require_axiom_id(axiom_id), game->data);
        if (out_violated != nullptr) *out_violated = report.verdict == Verdict::Violated ? 1 : 0;
        *out_json = dup_string(report_json(report).dump());
        return UV_OK;
    });
}

uv_status uv_search(const char* value_id, const char* axiom_id, int players, int blocks,
                    long trials, unsigned long long seed, long long worth_lo,
                    long long worth_hi, int* out_found, char** out_json, char** out_error) {
    if (out_json == nullptr) {
        set_error(out_error, "out_json must not be null");
        return UV_ERR_ARGUMENT;
    }
    return guarded(out_error, [&]() {
        if (worth_lo > worth_hi) {
            fail(Errc::InvalidSearchSpace, "empty worth range");
        }
        const AxiomReport report =
            search_counterexample(require_value_id(value_id), require_axiom_id(axiom_id),
                                  players, blocks, trials, seed, WorthBounds{worth_lo, worth_hi});
        if (out_found != nullptr) *out_found = report.verdict == Verdict::Violated ? 1 : 0;
        *out_json = dup_string(report_json(report).dump());
        return UV_OK;
    });
}

uv_status uv_matrix(int players, long trials, unsigned long long seed, char** out_json,
                    char** out_error) {
    if (out_json == nullptr) {
        set_error(out_error, "out_json must not be null");
        return UV_ERR_ARGUMENT;
    }
    return guarded(out_error, [&]() {
        const AxiomMatrix matrix = axiom_matrix(players, trials, seed);
        ordered_json j;
        j["players"] = matrix.players;
        j["trials"] = matrix.trials;
        j["seed"] = matrix.seed;
        ordered_json axioms = ordered_json::array();
        for (AxiomId a : kMatrixAxioms) axioms.push_back(axiom_id_name(a));
        j["axioms"] = std::move(axioms);
        ordered_json rows = ordered_json::array();
        for (const MatrixRow& row : matrix.rows) {
            ordered_json jrow;
            jrow["value"] = value_id_name(row.value);
            ordered_json cells = ordered_json::array();
            for (const MatrixCell& cell : row.cells) {
                ordered_json jcell = report_json(cell.report);
                jcell["claimed"] = cell.claimed;
                cells.push_back(std::move(jcell));
            }
            jrow["cells"] = std::move(cells);
            rows.push_back(std::move(jrow));
        }
        j["rows"] = std::move(rows);
        *out_json = dup_string(j.dump());
        return UV_OK;
    });
}

uv_status uv_quotient(const uv_game* game, int star, char** out_text, char** out_error) {
    if (game == nullptr || out_text == nullptr) {
        set_error(out_error, "game and out_text must not be null");
        return UV_ERR_ARGUMENT;
    }
    return guarded(out_error, [&]() {
        const TUGame q =
            star != 0 ? quotient_star_game(game->data) : quotient_game(game->data);
        *out_text = dup_string(unionvals::serialize_game(q));
        return UV_OK;
    });
}

uv_status uv_table(const uv_game* game, char** out_json, char** out_error) {
    if (game == nullptr || out_json == nullptr) {
        set_error(out_error, "game and out_json must not be null");
        return UV_ERR_ARGUMENT;
    }
    return guarded(out_error, [&]() {
        ordered_json j;
        j["players"] = game->data.game.roster();
        ordered_json ids = ordered_json::array();
        ordered_json payoffs = ordered_json::array();
        for (ValueId v : kAllValues) {
            ids.push_back(value_id_name(v));
            const Allocation alloc = evaluate(v, game->data);
            ordered_json rowj = ordered_json::array();
            for (const auto& p : alloc.payoffs) rowj.push_back(to_string(p));
            payoffs.push_back(std::move(rowj));
        }
        j["values"] = std::move(ids);
        j["payoffs"] = std::move(payoffs);
        *out_json = dup_string(j.dump());
        return UV_OK;
    });
}

} // extern "C"
