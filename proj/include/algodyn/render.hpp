#pragma once

#include "algodyn/machines.hpp"
#include "algodyn/verify.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algodyn {

/// `[8, 6, 7, 4], 0, 4`: array followed by whichever of i, b, dirty exist.
inline std::string format_state(const AnyState& s) {
    return std::visit(
        [](const auto& x) {
            std::string out = to_string(x.array);
            if constexpr (requires { x.index; })
                out += ", " + std::to_string(x.index);
            if constexpr (requires { x.boundary; })
                out += ", " + std::to_string(x.boundary);
            if constexpr (requires { x.dirty; })
                out += x.dirty ? ", dirty" : ", clean";
            return out;
        },
        s);
}

/// Marker line for the sweep index and boundary: one character per cell,
/// `^` under a_i, `|` in front of position b. Empty for index-free states.
inline std::string cursor_of(const AnyState& s) {
    return std::visit(
        [](const auto& x) -> std::string {
            if constexpr (requires { x.index; }) {
                std::string out;
                int n = static_cast<int>(x.array.size());
                int b = n;
                if constexpr (requires { x.boundary; })
                    b = x.boundary;
                for (int k = 0; k < n; ++k) {
                    if (k == b)
                        out += '|';
                    out += k == x.index ? '^' : '.';
                }
                return out;
            } else {
                return {};
            }
        },
        s);
}

namespace detail {

inline std::string base_id(std::string_view id) {
    if (!id.empty() && id.back() == '!')
        id.remove_suffix(1);
    return std::string(id);
}

/// Next machine up the inclusion chain, if any.
inline std::optional<std::string> upper_of(std::string_view base) {
    if (base == "B5" || base == "B5D")
        return "B4";
    if (base == "B4")
        return "B3";
    if (base == "B3")
        return "B2";
    if (base == "B2")
        return "B1";
    return std::nullopt;
}

} // namespace detail

/// One action column per machine, top row = the run's own machine. A
/// missing entry is a stutter: the level does not move on that row.
struct CompareColumns {
    std::vector<std::string> machines;
    std::vector<std::vector<std::optional<Action>>> cells; // [column][row]
};

/// Translate `run` down the inclusion chain (B5 -> B4 -> B3 -> B2 -> B1),
/// replaying each level in its input-enabled form. Levels from B3 upward
/// show a blank wherever the translated step does not change the array
/// under that level's own guard.
inline CompareColumns compare_columns(const Run<AnyState>& run) {
    CompareColumns out;
    out.machines.push_back(detail::base_id(run.machine_id));
    std::vector<std::optional<Action>> top;
    for (auto& st : run.steps)
        top.push_back(st.action);
    out.cells.push_back(std::move(top));

    // `lower` holds only the steps that moved at the previous level; `rows`
    // maps each of them back to its row in the original run.
    Run<AnyState> lower = run;
    std::vector<std::size_t> rows(run.steps.size());
    for (std::size_t k = 0; k < rows.size(); ++k)
        rows[k] = k;

    while (auto up = detail::upper_of(detail::base_id(lower.machine_id))) {
        std::string upper_id = *up == "B4" ? "B4" : *up + "!";
        auto map = refinement_map(lower.machine_id, upper_id);
        auto upper = make_machine(upper_id);
        auto guarded = make_machine(*up);

        Run<AnyState> moved{upper_id, project(lower.initial, upper), {}};
        std::vector<std::size_t> moved_rows;
        std::vector<std::optional<Action>> column(run.steps.size());
        const AnyState* prev = &lower.initial;
        for (std::size_t k = 0; k < lower.steps.size(); ++k) {
            Refined r = refine_step(map, *prev, lower.steps[k].action, lower.steps[k].state);
            prev = &lower.steps[k].state;
            auto* a = std::get_if<Action>(&r);
            if (!a)
                continue;
            const AnyState& cur = moved.last();
            auto next = step(upper, cur, *a);
            if (!next)
                throw unmapped_action(upper_id + " refused " + to_string(*a));
            // B4 never refuses a mapped action; further up, a refused guard
            // is a self-loop and stays blank.
            if (*up != "B4" && !guarded.step_fn(cur, *a))
                continue;
            column[rows[k]] = *a;
            moved.steps.push_back({*a, next.state()});
            moved_rows.push_back(rows[k]);
        }
        out.machines.push_back(*up);
        out.cells.push_back(std::move(column));
        lower = std::move(moved);
        rows = std::move(moved_rows);
    }
    return out;
}

/// Plain-text listing in the layout of a step table: one row per trajectory
/// state, the action taken from it, and optionally the matching action in
/// each machine further up the chain.
inline std::string render_table(const Run<AnyState>& run, bool compare = false) {
    bool indexed = !std::holds_alternative<ArrayState>(run.initial);
    std::vector<std::string> header{"step", "state"};
    if (indexed)
        header.push_back("cursor");
    CompareColumns cols;
    if (compare) {
        cols = compare_columns(run);
    } else {
        cols.machines.push_back(detail::base_id(run.machine_id));
        std::vector<std::optional<Action>> c;
        for (auto& st : run.steps)
            c.push_back(st.action);
        cols.cells.push_back(c);
    }
    for (auto& m : cols.machines)
        header.push_back(m);

    std::vector<std::vector<std::string>> rows;
    auto xs = run.trajectory();
    for (std::size_t k = 0; k < xs.size(); ++k) {
        std::vector<std::string> row{std::to_string(k), format_state(xs[k])};
        if (indexed)
            row.push_back(cursor_of(xs[k]));
        for (auto& col : cols.cells)
            row.push_back(k < col.size() && col[k] ? to_string(*col[k]) : "");
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (auto& r : rows)
            width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out += cells[c];
            if (c + 1 < cells.size())
                out += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ')
            out.pop_back();
        return out + "\n";
    };
    std::string out = line(header);
    for (auto& r : rows)
        out += line(r);
    return out;
}

} // namespace algodyn
