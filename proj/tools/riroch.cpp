#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "riroch/dsl.hpp"
#include "riroch/hrr.hpp"
#include "riroch/report.hpp"

using json = nlohmann::ordered_json;
using namespace riroch;

namespace {

json poly_to_json(const TwistPoly& p) {
    json j = json::object();
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero())
            j[std::to_string(k)] = p.coeff(k).str();
    return j;
}

json graded_to_json(const GradedClass& g) {
    json j = json::array();
    for (int k = 0; k <= g.dim(); ++k)
        j.push_back(poly_to_json(g.part(k)));
    return j;
}

void emit_json(const json& j) {
    std::cout << j.dump(2) << "\n";
}

struct PolyOutput {
    TwistPoly poly;
    bool has_at = false;
    long at = 0;
};

void emit_poly_result(const std::string& variety_text, json query, const PolyOutput& out,
                      bool as_json) {
    if (!as_json) {
        if (out.has_at)
            std::cout << out.poly.eval(Rational(out.at)).str() << "\n";
        else
            std::cout << out.poly.str() << "\n";
        return;
    }
    json result;
    result["polynomial"] = poly_to_json(out.poly);
    if (out.has_at) {
        result["at"] = out.at;
        result["value"] = out.poly.eval(Rational(out.at)).str();
    }
    emit_json({{"variety", variety_text}, {"query", std::move(query)}, {"result", result}});
}

Mode parse_mode(const std::string& text) {
    return text == "paper-compat" ? Mode::PaperCompat : Mode::Default;
}

void run_chern(const std::string& variety_text, const std::string& bundle_text, bool as_json) {
    const CompleteIntersection x = dsl::parse_variety(variety_text);
    const VirtualBundle e = dsl::evaluate(*dsl::parse_bundle(bundle_text), x);
    const ChernVector cv = chern_classes(e);
    if (!as_json) {
        std::cout << "rank: " << e.rank() << "\n";
        std::cout << "ch: " << e.ch().str() << "\n";
        for (int k = 1; k <= cv.dim(); ++k) {
            GradedClass term(x.dim());
            term.part(k) = cv.c[static_cast<std::size_t>(k)];
            std::cout << "c" << k << ": " << term.str() << "\n";
        }
        return;
    }
    json c = json::array();
    for (int k = 0; k <= cv.dim(); ++k)
        c.push_back(poly_to_json(cv.c[static_cast<std::size_t>(k)]));
    emit_json({{"variety", variety_text},
               {"query", {{"command", "chern"}, {"bundle", bundle_text}}},
               {"result",
                {{"rank", e.rank()}, {"ch", graded_to_json(e.ch())}, {"c", std::move(c)}}}});
}

void run_todd(const std::string& variety_text, bool as_json) {
    const CompleteIntersection x = dsl::parse_variety(variety_text);
    const GradedClass td = todd_tangent(x);
    if (!as_json) {
        std::cout << td.str() << "\n";
        return;
    }
    emit_json({{"variety", variety_text},
               {"query", {{"command", "todd"}}},
               {"result", {{"todd", graded_to_json(td)}}}});
}

void run_euler(const std::string& variety_text, const std::string& bundle_text, bool has_at,
               long at, bool as_json) {
    const CompleteIntersection x = dsl::parse_variety(variety_text);
    const VirtualBundle e = dsl::evaluate(*dsl::parse_bundle(bundle_text), x);
    json query = {{"command", "euler"}, {"bundle", bundle_text}};
    emit_poly_result(variety_text, std::move(query), {euler_characteristic(x, e), has_at, at},
                     as_json);
}

void run_index(const std::string& variety_text, int order, const std::string& source_text,
               const std::string& target_text, const std::string& mode_text, bool has_at, long at,
               bool as_json) {
    const CompleteIntersection x = dsl::parse_variety(variety_text);
    const Mode mode = parse_mode(mode_text);
    const OperatorSpec op{order, dsl::evaluate(*dsl::parse_bundle(source_text), x, mode),
                          dsl::evaluate(*dsl::parse_bundle(target_text), x, mode)};
    json query = {{"command", "index"},
                  {"order", order},
                  {"source", source_text},
                  {"target", target_text},
                  {"mode", mode_text}};
    emit_poly_result(variety_text, std::move(query), {index_polynomial(x, op, mode), has_at, at},
                     as_json);
}

void run_report(const std::string& what, bool as_json) {
    if (what != "paper")
        throw ValidationError("unknown report '" + what + "' (available: paper)");
    if (!as_json) {
        std::cout << render_paper_report();
        return;
    }
    json rows = json::array();
    for (const auto& r : paper_report_rows())
        rows.push_back({{"case", r.label},
                        {"variety", r.variety},
                        {"mode", r.mode},
                        {"computed", poly_to_json(r.computed)},
                        {"printed", r.printed},
                        {"verdict", r.match ? "MATCH" : "MISMATCH"}});
    json notes = json::array();
    for (const auto& n : paper_report_notes())
        notes.push_back(n);
    emit_json({{"variety", nullptr},
               {"query", {{"command", "report"}, {"what", "paper"}}},
               {"result", {{"rows", std::move(rows)}, {"notes", std::move(notes)}}}});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic-class and elliptic-index calculator for smooth complete "
                 "intersections in projective space"};
    app.require_subcommand(1);

    std::string variety_text, bundle_text, source_text, target_text, report_what;
    std::string mode_text = "default";
    int order = 1;
    long at = 0;
    bool as_json = false;

    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit machine-readable JSON on stdout");
    };

    CLI::App* chern = app.add_subcommand("chern", "rank, Chern character and Chern classes");
    chern->add_option("--variety", variety_text, "variety, e.g. \"P(2)\" or \"CI(4;2,3)\"")
        ->required();
    chern->add_option("--bundle", bundle_text, "bundle expression, e.g. \"O(N) * Omega\"")
        ->required();
    add_json(chern);
    chern->callback([&] { run_chern(variety_text, bundle_text, as_json); });

    CLI::App* todd_cmd = app.add_subcommand("todd", "Todd class of the tangent bundle");
    todd_cmd->add_option("--variety", variety_text, "variety")->required();
    add_json(todd_cmd);
    todd_cmd->callback([&] { run_todd(variety_text, as_json); });

    CLI::App* euler = app.add_subcommand("euler", "Euler characteristic via Riemann-Roch");
    euler->add_option("--variety", variety_text, "variety")->required();
    euler->add_option("--bundle", bundle_text, "bundle expression")->required();
    CLI::Option* euler_at = euler->add_option("--at", at, "evaluate the polynomial at N = <int>");
    add_json(euler);
    euler->callback([&] {
        run_euler(variety_text, bundle_text, euler_at->count() > 0, at, as_json);
    });

    CLI::App* index = app.add_subcommand("index", "twisted index polynomial of an operator");
    index->add_option("--variety", variety_text, "variety")->required();
    index->add_option("--order", order, "operator order (0..3)")
        ->required()
        ->check(CLI::Range(0, 3));
    index->add_option("--source", source_text, "source bundle expression")->required();
    index->add_option("--target", target_text, "target bundle expression")->required();
    index->add_option("--mode", mode_text, "computation mode")
        ->check(CLI::IsMember({"default", "paper-compat"}));
    CLI::Option* index_at = index->add_option("--at", at, "evaluate the polynomial at N = <int>");
    add_json(index);
    index->callback([&] {
        run_index(variety_text, order, source_text, target_text, mode_text,
                  index_at->count() > 0, at, as_json);
    });

    CLI::App* report = app.add_subcommand("report", "compare engine results to published values");
    report->add_option("what", report_what, "report name (paper)")->required();
    add_json(report);
    report->callback([&] { run_report(report_what, as_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
