#pragma once

#include "algodyn/core.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace algodyn {

/// State of B1, B2 and B3: the array alone.
struct ArrayState {
    SortArray array;
    auto operator<=>(const ArrayState&) const = default;
};

/// B4: array plus sweep index.
struct B4State {
    SortArray array;
    int index = 0;
    auto operator<=>(const B4State&) const = default;
};

/// B5: array, sweep index, and boundary of the sorted suffix.
struct B5State {
    SortArray array;
    int index = 0;
    int boundary = 0;
    auto operator<=>(const B5State&) const = default;
};

/// B5 with a flag recording whether the current sweep swapped anything.
struct B5DState {
    SortArray array;
    int index = 0;
    int boundary = 0;
    bool dirty = false;
    auto operator<=>(const B5DState&) const = default;
};

using AnyState = std::variant<ArrayState, B4State, B5State, B5DState>;

inline const SortArray& array_of(const AnyState& s) {
    return std::visit([](const auto& x) -> const SortArray& { return x.array; }, s);
}

class unknown_machine : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline int size_of(const SortArray& a) { return static_cast<int>(a.size()); }

template <class Tag>
std::vector<Action> all_pairs(const SortArray& a) {
    std::vector<Action> out;
    for (int i = 0; i < size_of(a); ++i)
        for (int j = i + 1; j < size_of(a); ++j)
            out.emplace_back(Tag{i, j});
    return out;
}

template <class S>
SortArray array_view(const S& s) { return s.array; }

} // namespace detail

/// B1 "Swap": any pair may be exchanged at any time.
inline Machine<ArrayState> machine_b1() {
    return {
        "B1",
        [](const SortArray& a) { return ArrayState{a}; },
        [](const ArrayState& s) { return detail::all_pairs<act::Swap>(s.array); },
        [](const ArrayState& s, const Action& a) -> std::optional<ArrayState> {
            auto* sw = std::get_if<act::Swap>(&a);
            if (!sw || !valid_pair(s.array, sw->i, sw->j))
                return std::nullopt;
            return ArrayState{swap_prim(s.array, sw->i, sw->j)};
        },
        detail::array_view<ArrayState>,
    };
}

/// B2 "Order": swap a pair only when it is inverted.
inline Machine<ArrayState> machine_b2() {
    return {
        "B2",
        [](const SortArray& a) { return ArrayState{a}; },
        [](const ArrayState& s) { return detail::all_pairs<act::Order>(s.array); },
        [](const ArrayState& s, const Action& a) -> std::optional<ArrayState> {
            auto* o = std::get_if<act::Order>(&a);
            if (!o || !valid_pair(s.array, o->i, o->j) || !(s.array[o->i] > s.array[o->j]))
                return std::nullopt;
            return ArrayState{swap_prim(s.array, o->i, o->j)};
        },
        detail::array_view<ArrayState>,
    };
}

/// B3 "Order Adjacent": B2 restricted to pairs (i, i+1).
inline Machine<ArrayState> machine_b3() {
    return {
        "B3",
        [](const SortArray& a) { return ArrayState{a}; },
        [](const ArrayState& s) {
            std::vector<Action> out;
            for (int i = 0; i + 1 < detail::size_of(s.array); ++i)
                out.emplace_back(act::Adj{i});
            return out;
        },
        [b2 = machine_b2()](const ArrayState& s, const Action& a) -> std::optional<ArrayState> {
            auto* adj = std::get_if<act::Adj>(&a);
            if (!adj)
                return std::nullopt;
            return b2.step_fn(s, act::Order{adj->i, adj->i + 1});
        },
        detail::array_view<ArrayState>,
    };
}

/// B4 "Bubble": `inc` orders (i, i+1) and advances i while i < n-1;
/// `reset` returns i to 0 from anywhere, including i = 0.
inline Machine<B4State> machine_b4() {
    return {
        "B4",
        [](const SortArray& a) { return B4State{a, 0}; },
        [](const B4State&) { return std::vector<Action>{act::Inc{}, act::Reset{}}; },
        [](const B4State& s, const Action& a) -> std::optional<B4State> {
            if (std::holds_alternative<act::Reset>(a))
                return B4State{s.array, 0};
            if (!std::holds_alternative<act::Inc>(a))
                return std::nullopt;
            if (s.index < 0 || s.index >= detail::size_of(s.array) - 1)
                return std::nullopt;
            return B4State{order_prim(s.array, s.index, s.index + 1), s.index + 1};
        },
        detail::array_view<B4State>,
    };
}

/// B5 "Bubblesort": a single `next` that behaves as B4 `inc` below the
/// boundary and as `reset` plus boundary decrement at it. Terminal once b <= 1.
inline Machine<B5State> machine_b5() {
    return {
        "B5",
        [](const SortArray& a) { return B5State{a, 0, detail::size_of(a)}; },
        [](const B5State&) { return std::vector<Action>{act::Next{}}; },
        [b4 = machine_b4()](const B5State& s, const Action& a) -> std::optional<B5State> {
            if (!std::holds_alternative<act::Next>(a) || s.boundary <= 1)
                return std::nullopt;
            B4State inner{s.array, s.index};
            if (s.index < s.boundary - 1) {
                auto next = b4.step_fn(inner, act::Inc{});
                if (!next)
                    return std::nullopt;
                return B5State{std::move(next->array), next->index, s.boundary};
            }
            if (s.index == s.boundary - 1) {
                auto next = b4.step_fn(inner, act::Reset{});
                return B5State{std::move(next->array), next->index, s.boundary - 1};
            }
            return std::nullopt;
        },
        detail::array_view<B5State>,
    };
}

/// B5 with early exit: a sweep that swapped nothing ends the run by
/// collapsing the boundary to 1.
inline Machine<B5DState> machine_b5d() {
    return {
        "B5D",
        [](const SortArray& a) { return B5DState{a, 0, detail::size_of(a), false}; },
        [](const B5DState&) { return std::vector<Action>{act::Next{}}; },
        [](const B5DState& s, const Action& a) -> std::optional<B5DState> {
            if (!std::holds_alternative<act::Next>(a) || s.boundary <= 1)
                return std::nullopt;
            int i = s.index;
            if (i >= 0 && i < s.boundary - 1 && i + 1 < detail::size_of(s.array)) {
                bool swapped = s.array[i] > s.array[i + 1];
                return B5DState{order_prim(s.array, i, i + 1), i + 1, s.boundary, s.dirty || swapped};
            }
            if (i == s.boundary - 1) {
                if (s.dirty)
                    return B5DState{s.array, 0, s.boundary - 1, false};
                return B5DState{s.array, 0, 1, false};
            }
            return std::nullopt;
        },
        detail::array_view<B5DState>,
    };
}

/// Lift a concrete machine onto `AnyState`. States of another alternative
/// have no well-formed actions.
template <class S>
Machine<AnyState> erase(Machine<S> m) {
    Machine<AnyState> out;
    out.id = m.id;
    out.input_enabled = m.input_enabled;
    out.initial_of = [f = m.initial_of](const SortArray& a) -> AnyState { return f(a); };
    out.actions_of = [f = m.actions_of](const AnyState& s) -> std::vector<Action> {
        if (auto* x = std::get_if<S>(&s))
            return f(*x);
        return {};
    };
    out.step_fn = [f = m.step_fn](const AnyState& s, const Action& a) -> std::optional<AnyState> {
        auto* x = std::get_if<S>(&s);
        if (!x)
            return std::nullopt;
        if (auto next = f(*x, a))
            return AnyState{std::move(*next)};
        return std::nullopt;
    };
    out.view_of = [](const AnyState& s) { return array_of(s); };
    return out;
}

inline const std::vector<std::string>& base_machine_ids() {
    static const std::vector<std::string> ids{"B1", "B2", "B3", "B4", "B5", "B5D"};
    return ids;
}

/// Resolve a protocol identifier such as "B5" or "B2!" (input-enabled).
inline Machine<AnyState> make_machine(std::string_view id) {
    bool extended = !id.empty() && id.back() == '!';
    std::string_view base = extended ? id.substr(0, id.size() - 1) : id;
    Machine<AnyState> m;
    if (base == "B1")
        m = erase(machine_b1());
    else if (base == "B2")
        m = erase(machine_b2());
    else if (base == "B3")
        m = erase(machine_b3());
    else if (base == "B4")
        m = erase(machine_b4());
    else if (base == "B5")
        m = erase(machine_b5());
    else if (base == "B5D")
        m = erase(machine_b5d());
    else
        throw unknown_machine("unknown machine '" + std::string(id) + "'");
    return extended ? input_enabled(std::move(m)) : m;
}

/// Machines that run unattended to termination: B5 and B5D. Their
/// input-enabled forms self-loop at the end and never terminate.
inline bool is_automated_id(std::string_view id) {
    return id == "B5" || id == "B5D";
}

} // namespace algodyn
