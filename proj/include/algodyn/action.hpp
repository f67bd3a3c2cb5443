#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

namespace algodyn {

namespace act {
struct Swap {
    int i = 0;
    int j = 0;
    bool operator==(const Swap&) const = default;
};
struct Order {
    int i = 0;
    int j = 0;
    bool operator==(const Order&) const = default;
};
struct Adj {
    int i = 0;
    bool operator==(const Adj&) const = default;
};
struct Inc {
    bool operator==(const Inc&) const = default;
};
struct Reset {
    bool operator==(const Reset&) const = default;
};
struct Next {
    bool operator==(const Next&) const = default;
};
} // namespace act

/// Every action understood by the sorting machines.
using Action = std::variant<act::Swap, act::Order, act::Adj, act::Inc, act::Reset, act::Next>;

/// Lower-case kind tag: "swap", "order", "adj", "inc", "reset", "next".
inline std::string_view kind_of(const Action& a) {
    constexpr std::string_view names[] = {"swap", "order", "adj", "inc", "reset", "next"};
    return names[a.index()];
}

/// Human form used in tables and messages, e.g. `swap(0,3)`, `adj(1)`, `inc`.
inline std::string to_string(const Action& a) {
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            std::string k{kind_of(a)};
            if constexpr (std::is_same_v<T, act::Swap> || std::is_same_v<T, act::Order>)
                return k + "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
            else if constexpr (std::is_same_v<T, act::Adj>)
                return k + "(" + std::to_string(x.i) + ")";
            else
                return k;
        },
        a);
}

namespace detail {
inline std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}
} // namespace detail

/// Parse the command-line spelling `swap:i,j | order:i,j | adj:i | inc | reset | next`.
inline std::optional<Action> parse_action(std::string_view text) {
    auto colon = text.find(':');
    std::string_view kind = text.substr(0, colon);
    std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    bool has_args = colon != std::string_view::npos;

    if (kind == "inc" || kind == "reset" || kind == "next") {
        if (has_args)
            return std::nullopt;
        if (kind == "inc")
            return act::Inc{};
        if (kind == "reset")
            return act::Reset{};
        return act::Next{};
    }
    if (kind == "adj") {
        auto i = detail::parse_int(args);
        if (!i)
            return std::nullopt;
        return act::Adj{*i};
    }
    if (kind == "swap" || kind == "order") {
        auto comma = args.find(',');
        if (comma == std::string_view::npos)
            return std::nullopt;
        auto i = detail::parse_int(args.substr(0, comma));
        auto j = detail::parse_int(args.substr(comma + 1));
        if (!i || !j)
            return std::nullopt;
        if (kind == "swap")
            return act::Swap{*i, *j};
        return act::Order{*i, *j};
    }
    return std::nullopt;
}

} // namespace algodyn
