#pragma once

// Command-line front end. `run` is the whole program minus process plumbing, so
// tests can drive it in-process and compare bytes.
//
// Exit codes: 0 success, 1 verification failure or route disagreement,
// 2 usage or input error. Nothing is written to `out` on a failure path except
// the report of a failing `verify`.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nottingham/error.hpp"
#include "nottingham/field.hpp"
#include "nottingham/group.hpp"
#include "nottingham/order4.hpp"
#include "nottingham/series.hpp"
#include "nottingham/series_text.hpp"

namespace nottingham::cli {

enum exit_code : int { success = 0, failure = 1, usage = 2 };

namespace detail {

inline Series load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
    return read_series_text(in);
}

inline int sigma_cmd(std::size_t trunc, const std::string& method, std::ostream& out, std::ostream& err)
{
    using namespace order4;
    if (method == "closed") {
        out << to_series_text(sigma_closed(trunc).body());
        return success;
    }
    if (method == "algebraic") {
        out << to_series_text(sigma_algebraic(trunc).body());
        return success;
    }
    if (method == "relation") {
        out << to_series_text(sigma_relation(trunc).body());
        return success;
    }
    const Series closed = sigma_closed(trunc).body();
    const Series algebraic = sigma_algebraic(trunc).body();
    const Series relation = sigma_relation(trunc).body();
    if (auto d = first_difference(closed, algebraic)) {
        err << "error: closed and algebraic constructions disagree at t^" << *d << '\n';
        return failure;
    }
    if (auto d = first_difference(closed, relation)) {
        err << "error: closed and relation constructions disagree at t^" << *d << '\n';
        return failure;
    }
    out << to_series_text(closed);
    return success;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computation in the Nottingham group over F_p", "nottingham"};
    app.require_subcommand(1);

    std::size_t trunc = 0;
    std::string method;
    std::string lhs_path, rhs_path, in_path, sigma_path;
    std::uint64_t k = 0, cap = 0, m = 0;
    unsigned p = 0;
    long long a = 0;

    auto* sigma = app.add_subcommand("sigma", "Print the order-4 automorphism sigma(t) in characteristic 2");
    sigma->add_option("--trunc", trunc, "Truncation order N")->required();
    sigma->add_option("--method", method, "Construction route (default: all, cross-checked)")
        ->check(CLI::IsMember({"closed", "algebraic", "relation"}));

    auto* verify = app.add_subcommand("verify", "Check the defining identities of sigma");
    auto* verify_trunc = verify->add_option("--trunc", trunc, "Truncation order N");
    auto* verify_sigma = verify->add_option("--sigma", sigma_path, "Candidate sigma as a SeriesText file");
    verify->require_option(1, 2);

    auto* compose_cmd = app.add_subcommand("compose", "Compose two series, lhs(rhs(t))");
    compose_cmd->add_option("--lhs", lhs_path, "Outer series (SeriesText file)")->required();
    compose_cmd->add_option("--rhs", rhs_path, "Inner series (SeriesText file)")->required();

    auto* inverse = app.add_subcommand("inverse", "Compositional inverse");
    inverse->add_option("--in", in_path, "SeriesText file")->required();

    auto* power = app.add_subcommand("power", "k-fold self-composition of a group element");
    power->add_option("--in", in_path, "SeriesText file")->required();
    power->add_option("-k", k, "Exponent")->required();

    auto* order = app.add_subcommand("order", "Least p^j with f^(p^j) = t to the file's precision");
    order->add_option("--in", in_path, "SeriesText file")->required();
    auto* cap_opt = order->add_option("--cap", cap, "Search bound (default p^6)")->check(CLI::PositiveNumber);

    auto* depth_cmd = app.add_subcommand("depth", "Depth of a group element (inf for the identity)");
    depth_cmd->add_option("--in", in_path, "SeriesText file")->required();

    auto* klopsch = app.add_subcommand("klopsch", "Order-p representative t (1 - a t^m)^(-1/m)");
    klopsch->add_option("-p", p, "Prime")->required();
    klopsch->add_option("-m", m, "Depth, prime to p")->required();
    klopsch->add_option("-a", a, "Nonzero parameter (reduced mod p)")->required();
    klopsch->add_option("--trunc", trunc, "Truncation order N")->required();

    // CLI11 consumes the argument vector back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    std::ostringstream buf;
    try {
        int rc = success;
        if (sigma->parsed()) {
            rc = detail::sigma_cmd(trunc, method, buf, err);
        } else if (verify->parsed()) {
            std::optional<GroupElement> candidate;
            if (!verify_sigma->empty()) {
                candidate.emplace(detail::load(sigma_path));
                if (!verify_trunc->empty() && candidate->trunc() != trunc) {
                    err << "error: --trunc " << trunc << " does not match the precision of " << sigma_path << '\n';
                    return usage;
                }
            } else {
                candidate.emplace(order4::sigma_closed(trunc));
            }
            const auto report = order4::verify_sigma(*candidate);
            out << report;
            if (const auto* bad = report.first_failed()) {
                err << "verification failed: " << bad->name << " at t^" << *bad->first_failure << '\n';
                return failure;
            }
            return success;
        } else if (compose_cmd->parsed()) {
            buf << to_series_text(compose(detail::load(lhs_path), detail::load(rhs_path)));
        } else if (inverse->parsed()) {
            buf << to_series_text(comp_inverse(detail::load(in_path)));
        } else if (power->parsed()) {
            buf << to_series_text(gpower(GroupElement(detail::load(in_path)), k).body());
        } else if (order->parsed()) {
            const GroupElement f(detail::load(in_path));
            const std::uint64_t bound = cap_opt->empty() ? default_order_cap(f.prime()) : cap;
            const auto ord = order_mod_truncation(f, bound);
            if (!ord) {
                err << "no order p^j <= " << bound << " found at precision " << f.trunc() << '\n';
                return failure;
            }
            buf << *ord << '\n';
        } else if (depth_cmd->parsed()) {
            buf << depth(GroupElement(detail::load(in_path))) << '\n';
        } else if (klopsch->parsed()) {
            const Prime pr(p);
            buf << to_series_text(klopsch_rep(pr, m, FieldElement(pr, a), trunc).body());
        }
        if (rc == success) out << buf.str();
        return rc;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
    return run(args, out, err);
}

} // namespace nottingham::cli
