#pragma once

// Sparse text encoding of a Series:
//
//     p=2 N=14
//     1:1 2:1 6:1 12:1 14:1
//
// The data line lists nonzero coefficients as ascending `exponent:coefficient`
// pairs, or the single token `0` for the zero series. Both lines end in '\n'.

#include <charconv>
#include <cstddef>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nottingham/error.hpp"
#include "nottingham/field.hpp"
#include "nottingham/series.hpp"

namespace nottingham {

inline std::string to_series_text(const Series& f)
{
    std::string out = "p=" + std::to_string(f.characteristic()) + " N=" + std::to_string(f.trunc()) + "\n";
    const auto c = f.raw();
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) out += ' ';
        out += std::to_string(i) + ':' + std::to_string(c[i]);
        first = false;
    }
    if (first) out += '0';
    out += '\n';
    return out;
}

namespace detail {

template <class Int>
Int parse_int(std::string_view tok, std::string_view what)
{
    Int v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
        throw error(errc::parse_error, "bad " + std::string(what) + " '" + std::string(tok) + "'");
    }
    return v;
}

inline std::vector<std::string_view> split_spaces(std::string_view line)
{
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ') {
            ++i;
            continue;
        }
        std::size_t j = line.find(' ', i);
        if (j == std::string_view::npos) j = line.size();
        toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

} // namespace detail

/// Parses the two-line encoding. Coefficients must lie in [1, p), exponents
/// must be strictly ascending and at most N.
inline Series parse_series_text(std::string_view text)
{
    if (text.empty() || text.back() != '\n') throw error(errc::parse_error, "missing trailing newline");
    text.remove_suffix(1);
    const std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) throw error(errc::parse_error, "expected a header line and a data line");
    std::string_view header = text.substr(0, nl);
    std::string_view data = text.substr(nl + 1);
    if (data.find('\n') != std::string_view::npos) throw error(errc::parse_error, "trailing content after data line");
    if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
    if (!data.empty() && data.back() == '\r') data.remove_suffix(1);

    const auto head = detail::split_spaces(header);
    if (head.size() != 2 || !head[0].starts_with("p=") || !head[1].starts_with("N=")) {
        throw error(errc::parse_error, "header must read 'p=<p> N=<N>'");
    }
    const auto p = detail::parse_int<unsigned>(head[0].substr(2), "prime");
    const auto n = detail::parse_int<std::size_t>(head[1].substr(2), "truncation order");
    if (!Prime::is_prime(p) || p > Prime::max_value) throw error(errc::parse_error, "unsupported prime " + std::to_string(p));
    Series f(Prime(p), n);

    const auto toks = detail::split_spaces(data);
    if (toks.size() == 1 && toks[0] == "0") return f;
    if (toks.empty()) throw error(errc::parse_error, "empty data line (use '0' for the zero series)");

    bool any = false;
    std::size_t last = 0;
    for (auto tok : toks) {
        const std::size_t colon = tok.find(':');
        if (colon == std::string_view::npos) throw error(errc::parse_error, "expected exponent:coefficient, got '" + std::string(tok) + "'");
        const auto e = detail::parse_int<std::size_t>(tok.substr(0, colon), "exponent");
        const auto c = detail::parse_int<unsigned>(tok.substr(colon + 1), "coefficient");
        if (e > n) throw error(errc::parse_error, "exponent " + std::to_string(e) + " exceeds N");
        if (c == 0 || c >= p) throw error(errc::parse_error, "coefficient " + std::to_string(c) + " not in [1, p)");
        if (any && e <= last) throw error(errc::parse_error, "exponents must be strictly ascending");
        f.set_coeff(e, c);
        last = e;
        any = true;
    }
    return f;
}

inline Series read_series_text(std::istream& in)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_series_text(text);
}

} // namespace nottingham
