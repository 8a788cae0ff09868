// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: embedding reports, reductions, remnant tables,
// knot diagrams and invariants, parametrizations, SVG plots.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cheb/algebra.hpp"
#include "cheb/diagram.hpp"
#include "cheb/errors.hpp"
#include "cheb/geometry.hpp"
#include "cheb/interval.hpp"
#include "cheb/invariants.hpp"
#include "cheb/poly.hpp"

namespace {

using json = nlohmann::json;
using namespace chebknots;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitCap = 3;
constexpr int kExitIo = 4;

struct Options {
    std::string format = "text";
    std::string out;
    long cap = kDefaultCrossingCap;
    bool alternating = false;
};

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream f(opt.out);
    f << payload << "\n";
    if (!f) throw std::ios_base::failure("cannot write " + opt.out);
}

json laurent_json(const LaurentPoly& p) { return json::parse(laurent_to_json(p)); }

int cmd_embed(const Options& opt, long i, long j, long k) {
    const Triple t{i, j, k};
    const bool ok = is_embedding(t);
    json r{{"schema", "chebknots/embed-report/v1"},
           {"i", i},
           {"j", j},
           {"k", k},
           {"pgcd", pgcd(i, j, k)},
           {"embedding", ok},
           {"trivial", t.contains_unit()}};
    std::ostringstream text;
    text << t.str() << ": pgcd " << pgcd(i, j, k) << ", embedding: " << (ok ? "true" : "false");
    if (ok && !t.contains_unit()) {
        const Witness w = embedding_witness(t);
        r["witness"] = json::parse(witness_to_json(w));
        text << "\n  witness verified: " << r["witness"]["identity"].get<std::string>();
    } else if (t.contains_unit()) {
        text << " (unit component)";
    }
    emit(opt, opt.format == "json" ? r.dump(2) : text.str());
    return kExitOk;
}

int cmd_reduce(const Options& opt, long i, long j, long k) {
    const auto trace = reduce_triple({i, j, k});
    if (opt.format == "json") {
        emit(opt, json::parse(trace_to_json(trace)).dump(2));
        return kExitOk;
    }
    std::ostringstream text;
    text << "reduce " << trace.start.str() << " -> " << trace.end.str() << " in "
         << trace.steps.size() << " step(s)";
    for (const auto& [step, after] : trace.steps) text << "\n  -> " << after.str();
    if (trace.end.contains_unit()) text << "\n  trivial embedding";
    emit(opt, text.str());
    return kExitOk;
}

int cmd_table1(const Options& opt, long max_nodes) {
    const auto rows = table1_rows(max_nodes);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"i", r.i}, {"j", r.j}, {"nodes", r.node_count}, {"remnant", r.remnant}});
        emit(opt, json{{"schema", "chebknots/table1/v1"}, {"rows", arr}}.dump(2));
        return kExitOk;
    }
    std::ostringstream text;
    text << "(i,j)  nodes  remnant";
    for (const auto& r : rows) {
        text << "\n(" << r.i << "," << r.j << ")  " << r.node_count << "  {";
        for (std::size_t s = 0; s < r.remnant.size(); ++s)
            text << (s ? "," : "") << r.remnant[s];
        text << "}";
    }
    emit(opt, text.str());
    return kExitOk;
}

int cmd_knot(const Options& opt, long i, long j, std::optional<long> k) {
    CrossingSequence seq;
    if (k) {
        if (!is_embedding({i, j, *k}))
            throw NotAnEmbedding("(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(*k) + ") is not an embedding");
        seq = z_crossing_sequence(i, j, ChebIndex{*k});
    } else {
        seq = z_crossing_sequence(i, j, alternating_z(i, j));
    }
    const auto g = build_gauss_code(i, j, seq);
    const long n_nodes = static_cast<long>(seq.values.size()) / 2;

    json r{{"schema", "chebknots/knot-report/v1"},
           {"i", i},
           {"j", j},
           {"nodes", n_nodes},
           {"sequence", seq.values},
           {"gauss", json::parse(gauss_to_json(g))},
           {"pd", json::parse(pd_to_json(gauss_to_pd(g)))},
           {"writhe", writhe(g)}};
    if (k)
        r["k"] = *k;
    else
        r["alternating"] = true;

    std::ostringstream text;
    text << "(" << i << "," << j << (k ? "," + std::to_string(*k) : ", alternating") << "): "
         << n_nodes << " nodes, writhe " << writhe(g);

    int exit_code = kExitOk;
    try {
        const LaurentPoly v = jones(g, opt.cap);
        r["jones"] = laurent_json(v);
        text << "\n  jones: " << v.str("x") << "  (x = t^(1/4))";
        const auto id = identify(v);
        r["identification"] = json::parse(identification_to_json(id));
        if (id)
            text << "\n  identified: " << id->record.name
                 << (id->mirror_matched ? " (mirror)" : "");
        else
            text << "\n  not in the reference table";
    } catch (const TooManyCrossings&) {
        r["jones"] = nullptr;
        r["note"] = "invariant skipped: crossing cap exceeded";
        text << "\n  invariant skipped (crossing cap " << opt.cap << " exceeded)";
        exit_code = kExitCap;
    }
    emit(opt, opt.format == "json" ? r.dump(2) : text.str());
    return exit_code;
}

int cmd_param(const Options& opt, long i, long j) {
    const ExactPoly z = alternating_z(i, j);
    if (opt.format == "json") {
        emit(opt, json{{"schema", "chebknots/param-report/v1"},
                       {"i", i},
                       {"j", j},
                       {"x", json::parse(poly_to_json(cheb_t(static_cast<unsigned>(i))))},
                       {"y", json::parse(poly_to_json(cheb_t(static_cast<unsigned>(j))))},
                       {"z", json::parse(poly_to_json(z))}}
                       .dump(2));
        return kExitOk;
    }
    std::ostringstream text;
    text << "x = " << cheb_t(static_cast<unsigned>(i)).str() << "\ny = "
         << cheb_t(static_cast<unsigned>(j)).str() << "\nz = " << z.str()
         << "\n  (degree " << z.degree() << ")";
    emit(opt, text.str());
    return kExitOk;
}

int cmd_svg(const Options& opt, long i, long j, std::optional<long> k,
            const std::string& path) {
    const std::size_t count = static_cast<std::size_t>(64 * (i + j));
    const auto samples = curve_samples(i, j, count, mpq_class(-21, 20), mpq_class(21, 20));
    const auto ns = nodes(i, j);

    // under-strand parameters, as real values, for gap carving
    std::vector<double> under_t;
    if (k || opt.alternating) {
        const CrossingSequence seq = k ? z_crossing_sequence(i, j, ChebIndex{*k})
                                       : alternating_sequence((i - 1) * (j - 1) / 2);
        const auto params = preimage_parameters(i, j);
        for (std::size_t m = 0; m < seq.values.size(); ++m)
            if (seq.values[m] == -1) under_t.push_back(params[m].approx());
    }
    const double gap = 0.55 / static_cast<double>(i + j);

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='-1.25 -1.25 2.5 2.5'>\n"
        << "<rect x='-1.25' y='-1.25' width='2.5' height='2.5' fill='white'/>\n";
    const double t0 = -1.05, t1 = 1.05;
    bool open = false;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const double t = t0 + (t1 - t0) * static_cast<double>(s) /
                                  static_cast<double>(count - 1);
        const bool gapped = std::any_of(under_t.begin(), under_t.end(), [&](double u) {
            return std::fabs(t - u) < gap;
        });
        if (gapped) {
            if (open) svg << "' fill='none' stroke='black' stroke-width='0.015'/>\n";
            open = false;
            continue;
        }
        if (!open) {
            svg << "<polyline points='";
            open = true;
        }
        svg << samples[s].first.get_d() << "," << -samples[s].second.get_d() << " ";
    }
    if (open) svg << "' fill='none' stroke='black' stroke-width='0.015'/>\n";
    for (const auto& n : ns)
        svg << "<circle cx='" << n.x.approx() << "' cy='" << -n.y.approx()
            << "' r='0.02' fill='none' stroke='red' stroke-width='0.008'/>\n";
    svg << "</svg>\n";

    std::ofstream f(path);
    f << svg.str();
    if (!f) throw std::ios_base::failure("cannot write " + path);
    return kExitOk;
}

int cmd_conjecture2(const Options& opt, long i, long j) {
    const auto ks = remnant(i, j);
    json entries = json::array();
    std::vector<std::pair<long, LaurentPoly>> computed;
    bool partial = false;
    std::ostringstream text;
    text << "remnant of (" << i << "," << j << "): " << ks.size() << " value(s)";
    for (long k : ks) {
        json e{{"k", k}};
        try {
            const auto g = build_gauss_code(i, j, z_crossing_sequence(i, j, ChebIndex{k}));
            const LaurentPoly v = jones(g, opt.cap);
            e["jones"] = laurent_json(v);
            const auto id = identify(v);
            e["identification"] = json::parse(identification_to_json(id));
            computed.emplace_back(k, v);
            text << "\n  k=" << k << ": " << (id ? id->record.name : "unidentified");
        } catch (const TooManyCrossings&) {
            e["jones"] = nullptr;
            partial = true;
            text << "\n  k=" << k << ": skipped (cap)";
        }
        entries.push_back(std::move(e));
    }
    bool distinct = true;
    for (std::size_t a = 0; a < computed.size(); ++a)
        for (std::size_t b = a + 1; b < computed.size(); ++b)
            if (computed[a].second == computed[b].second) distinct = false;
    text << "\npairwise distinct jones: " << (distinct ? "yes" : "NO")
         << (partial ? " (partial: some values skipped)" : "")
         << "\n(empirical evidence only)";
    json r{{"schema", "chebknots/conjecture2-report/v1"},
           {"i", i},
           {"j", j},
           {"entries", entries},
           {"pairwise_distinct", distinct},
           {"partial", partial},
           {"note", "empirical evidence only"}};
    emit(opt, opt.format == "json" ? r.dump(2) : text.str());
    return partial ? kExitCap : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chebyshev curve, embedding and knot calculator"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "svg"}));
    app.add_option("--out", opt.out, "output path (default stdout)");
    app.add_option("--cap", opt.cap, "bracket crossing cap");
    app.add_flag("--alternating", opt.alternating, "use the alternating height");

    long i = 0, j = 0, k = 0, max_nodes = 16;

    auto* embed = app.add_subcommand("embed", "embedding test with witness");
    embed->add_option("i", i)->required();
    embed->add_option("j", j)->required();
    embed->add_option("k", k)->required();

    auto* reduce = app.add_subcommand("reduce", "reduce a triple by involutions");
    reduce->add_option("i", i)->required();
    reduce->add_option("j", j)->required();
    reduce->add_option("k", k)->required();

    auto* table1 = app.add_subcommand("table1", "remnant survey");
    table1->add_option("max_nodes", max_nodes)->check(CLI::PositiveNumber);

    auto* knot = app.add_subcommand("knot", "diagram and invariants of a curve");
    knot->add_option("i", i)->required();
    knot->add_option("j", j)->required();
    knot->add_option("k", k);

    auto* param = app.add_subcommand("param", "explicit alternating parametrization");
    param->add_option("i", i)->required();
    param->add_option("j", j)->required();

    // svg takes either `svg i j path` or `svg i j k path`
    auto* svg = app.add_subcommand("svg", "plot the plane curve");
    svg->add_option("i", i)->required();
    svg->add_option("j", j)->required();
    std::vector<std::string> svg_rest;
    svg->add_option("rest", svg_rest, "[k] path")->expected(1, 2);

    auto* conj = app.add_subcommand("conjecture2", "jones across a remnant");
    conj->add_option("i", i)->required();
    conj->add_option("j", j)->required();

    // let --format/--out/--cap/--alternating appear after a subcommand
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (embed->parsed()) return cmd_embed(opt, i, j, k);
        if (reduce->parsed()) return cmd_reduce(opt, i, j, k);
        if (table1->parsed()) return cmd_table1(opt, max_nodes);
        if (knot->parsed()) {
            std::optional<long> kk;
            if (knot->count("k")) kk = k;
            if (!kk && !opt.alternating)
                throw std::domain_error("knot: give k or --alternating");
            return cmd_knot(opt, i, j, kk);
        }
        if (param->parsed()) return cmd_param(opt, i, j);
        if (svg->parsed()) {
            std::optional<long> kk;
            std::string out_path;
            if (svg_rest.size() == 2) {
                kk = std::stol(svg_rest[0]);
                out_path = svg_rest[1];
            } else if (svg_rest.size() == 1) {
                out_path = svg_rest[0];
            } else {
                throw std::domain_error("svg: output path required");
            }
            return cmd_svg(opt, i, j, kk, out_path);
        }
        if (conj->parsed()) return cmd_conjecture2(opt, i, j);
        return kExitDomain;
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return kExitDomain;
    } catch (const TooManyCrossings& e) {
        std::cerr << e.what() << "\n";
        return kExitCap;
    } catch (const std::ios_base::failure& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    }
}
