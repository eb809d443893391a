// Command-line front end: JSON in, JSON out, one subcommand per operation.
//
// Exit codes: 0 on success, 1 with {"error": ...} on a computation error,
// 2 with {"error": ...} on malformed input.

#include <seifert/seifert.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using seifert::json;

json read_json_input(const std::string& path_or_inline) {
    std::string text;
    if (path_or_inline.empty() || path_or_inline == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!path_or_inline.empty() &&
               (path_or_inline.front() == '{' || path_or_inline.front() == '[')) {
        text = path_or_inline;
    } else {
        std::ifstream in(path_or_inline);
        if (!in) throw seifert::bad_input("cannot open input file: " + path_or_inline);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw seifert::bad_input(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail(int code, const std::string& message) {
    emit(json{{"error", message}});
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Seifert fibered spaces and branched coverings "
                 "of torus knots in S^2 x S^1"};
    app.require_subcommand(1);

    std::string input = "-";
    long long n_arg = 0, alpha = 0, beta = 0;
    std::string tuple_arg, cyclic_arg, target_arg;

    auto* normalize = app.add_subcommand("normalize", "Canonical form of a Seifert symbol");
    normalize->add_option("input", input, "symbol JSON (file, inline, or - for stdin)");

    auto* euler = app.add_subcommand("euler", "Euler number of a Seifert symbol");
    euler->add_option("input", input, "symbol JSON");

    auto* h1cmd = app.add_subcommand("h1", "First homology of a Seifert symbol");
    h1cmd->add_option("input", input, "symbol JSON");

    auto* equiv = app.add_subcommand("equivalent", "Fiber-preserving equivalence of two symbols");
    equiv->add_option("input", input, "JSON object {\"a\": symbol, \"b\": symbol}");

    auto* lift = app.add_subcommand("lift", "Lift a covering along a frame representation");
    lift->add_option("input", input, "frame representation JSON");

    auto* aben = app.add_subcommand("abelian-enumerate",
                                    "All degree-n Abelian covers of (S^2 x S^1, t_{alpha,beta})");
    aben->add_option("--n", n_arg, "degree")->required();
    aben->add_option("--alpha", alpha, "torus knot alpha")->required();
    aben->add_option("--beta", beta, "torus knot beta")->required();

    auto* abcov = app.add_subcommand("abelian-cover",
                                     "One Abelian cover, by 4-tuple or cyclic degree");
    abcov->add_option("--alpha", alpha, "torus knot alpha")->required();
    abcov->add_option("--beta", beta, "torus knot beta")->required();
    abcov->add_option("--tuple", tuple_arg, "4-tuple a1,a2,delta,i0");
    abcov->add_option("--cyclic", cyclic_arg, "cyclic cover degree n");

    auto* construct = app.add_subcommand(
        "construct", "Covering tower realizing a zero-Euler-number symbol over t_{alpha,beta}");
    construct->add_option("--target", target_arg, "target symbol JSON (file or inline)")->required();
    construct->add_option("--alpha", alpha, "torus knot alpha")->required();
    construct->add_option("--beta", beta, "torus knot beta")->required();

    auto* verify = app.add_subcommand("verify", "Re-check a covering plan step by step");
    verify->add_option("input", input, "plan JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (normalize->parsed()) {
            seifert::SeifertSymbol s;
            try {
                s = seifert::symbol_from_json(read_json_input(input));
            } catch (const seifert::bad_input& e) {
                return fail(2, e.what());
            }
            emit(seifert::to_json(seifert::canonicalize(s)));
        } else if (euler->parsed()) {
            seifert::SeifertSymbol s;
            try {
                s = seifert::symbol_from_json(read_json_input(input));
            } catch (const seifert::bad_input& e) {
                return fail(2, e.what());
            }
            emit(json{{"euler", seifert::rational_to_string(seifert::euler_number(s))}});
        } else if (h1cmd->parsed()) {
            seifert::SeifertSymbol s;
            try {
                s = seifert::symbol_from_json(read_json_input(input));
            } catch (const seifert::bad_input& e) {
                return fail(2, e.what());
            }
            emit(seifert::to_json(seifert::h1(s)));
        } else if (equiv->parsed()) {
            seifert::SeifertSymbol a, b;
            try {
                json j = read_json_input(input);
                if (!j.is_object() || !j.contains("a") || !j.contains("b"))
                    throw seifert::bad_input("expected {\"a\": symbol, \"b\": symbol}");
                a = seifert::symbol_from_json(j.at("a"));
                b = seifert::symbol_from_json(j.at("b"));
            } catch (const seifert::bad_input& e) {
                return fail(2, e.what());
            }
            emit(json{{"equivalent", seifert::equivalent(a, b)}});
        } else if (lift->parsed()) {
            seifert::FrameRep r;
            try {
                r = seifert::framerep_from_json(read_json_input(input));
            } catch (const seifert::bad_input& e) {
                return fail(2, e.what());
            }
            emit(seifert::to_json(seifert::lift_cover(r)));
        } else if (aben->parsed()) {
            json reports = json::array();
            for (const auto& t : seifert::enumerate_tuples(n_arg)) {
                if (alpha % t.a1 != 0 || alpha % t.a2 != 0) continue;
                reports.push_back(seifert::to_json(seifert::abelian_cover_tuple(alpha, beta, t)));
            }
            if (seifert::gcd_ll(n_arg, alpha) == 1)
                reports.push_back(seifert::to_json(seifert::abelian_cover_cyclic(alpha, beta, n_arg)));
            emit(json{{"alpha", alpha}, {"beta", beta}, {"n", n_arg}, {"reports", reports}});
        } else if (abcov->parsed()) {
            if (tuple_arg.empty() == cyclic_arg.empty())
                return fail(2, "abelian-cover: give exactly one of --tuple or --cyclic");
            if (!tuple_arg.empty()) {
                long long a1, a2, d, i0;
                char c1, c2, c3;
                std::istringstream ss(tuple_arg);
                if (!(ss >> a1 >> c1 >> a2 >> c2 >> d >> c3 >> i0) || c1 != ',' || c2 != ',' ||
                    c3 != ',')
                    return fail(2, "abelian-cover: --tuple expects a1,a2,delta,i0");
                emit(seifert::to_json(
                    seifert::abelian_cover_tuple(alpha, beta, seifert::FourTuple{a1, a2, d, i0})));
            } else {
                emit(seifert::to_json(
                    seifert::abelian_cover_cyclic(alpha, beta, std::stoll(cyclic_arg))));
            }
        } else if (construct->parsed()) {
            seifert::SeifertSymbol target;
            try {
                target = seifert::symbol_from_json(read_json_input(target_arg));
            } catch (const seifert::bad_input& e) {
                return fail(2, e.what());
            }
            emit(seifert::to_json(seifert::plan_theorem45(target, alpha, beta)));
        } else if (verify->parsed()) {
            seifert::CoveringPlan plan;
            try {
                plan = seifert::plan_from_json(read_json_input(input));
            } catch (const seifert::bad_input& e) {
                return fail(2, e.what());
            }
            seifert::VerifyReport report = seifert::verify_plan(plan);
            if (!report.pass) {
                emit(json{{"error", "plan verification failed"},
                          {"report", seifert::to_json(report)}});
                return 1;
            }
            emit(seifert::to_json(report));
        }
    } catch (const seifert::bad_input& e) {
        return fail(2, e.what());
    } catch (const seifert::error& e) {
        return fail(1, e.what());
    } catch (const std::exception& e) {
        return fail(1, e.what());
    }
    return 0;
}
