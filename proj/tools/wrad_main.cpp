// wrad - construct the extremal (di)graph families, compute exact distance
// metrics, evaluate the closed forms, run the verification suites and the
// desk-scale extremal surveys.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrad/chords.hpp"
#include "wrad/codec.hpp"
#include "wrad/constructions.hpp"
#include "wrad/formulas.hpp"
#include "wrad/metrics.hpp"
#include "wrad/survey.hpp"
#include "wrad/verify.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<std::pair<int, int>> parse_chords(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw CLI::ValidationError("--chords", "expected from-to pairs");
        out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open input file " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

json wiener_json(const wrad::WienerValue& w) {
    if (!w) return "infinite";
    return *w;
}

json metric_json(const wrad::MetricValue& v) {
    if (!v) return "infinite";
    return *v;
}

json ecc_json(const std::vector<std::uint16_t>& ecc) {
    json arr = json::array();
    for (auto e : ecc) {
        if (e == wrad::kUnreachable) arr.push_back("infinite");
        else arr.push_back(e);
    }
    return arr;
}

std::string half_string(const wrad::MetricValue& doubled) {
    if (!doubled) return "infinite";
    if (*doubled % 2 == 0) return std::to_string(*doubled / 2);
    return std::to_string(*doubled) + "/2";
}

int cmd_construct(const wrad::ConstructionSpec& spec, const std::string& format,
                  const std::string& outfile) {
    wrad::BuiltConstruction built = wrad::build_construction(spec);
    json params;
    if (spec.n) params["n"] = *spec.n;
    if (spec.r) params["r"] = *spec.r;
    if (spec.s) params["s"] = *spec.s;
    if (spec.d) params["d"] = *spec.d;
    if (spec.doubled_r) params["doubled_r"] = *spec.doubled_r;
    if (spec.variant) params["variant"] = *spec.variant;
    if (!spec.cycle_lengths.empty()) params["cycle_lengths"] = spec.cycle_lengths;
    if (!spec.chords.empty()) {
        json arr = json::array();
        for (auto [a, b] : spec.chords) arr.push_back(json::array({a, b}));
        params["chords"] = arr;
    }
    std::string text;
    if (built.graph) {
        if (format == "digraph6") throw CLI::ValidationError("--format", "family is undirected");
        text = format == "json" ? wrad::write_json_edges(*built.graph, spec.family, params)
                                : wrad::encode_graph6(*built.graph);
    } else {
        if (format == "graph6") throw CLI::ValidationError("--format", "family is directed");
        text = format == "json" ? wrad::write_json_edges(*built.digraph, spec.family, params)
                                : wrad::encode_digraph6(*built.digraph);
    }
    write_output(outfile, text + "\n");
    return 0;
}

json metrics_of_graph(const wrad::Graph& g) {
    wrad::GraphMetrics m = wrad::graph_metrics(g);
    json out;
    out["order"] = m.order;
    out["directed"] = false;
    out["wiener"] = wiener_json(m.wiener);
    out["radius"] = metric_json(m.radius);
    out["diameter"] = metric_json(m.diameter);
    out["eccentricities"] = ecc_json(m.ecc);
    return out;
}

json metrics_of_digraph(const wrad::Digraph& d) {
    wrad::DigraphMetrics m = wrad::digraph_metrics(d);
    json out;
    out["order"] = m.order;
    out["directed"] = true;
    out["wiener"] = wiener_json(m.wiener);
    out["out_radius"] = metric_json(m.out_radius);
    out["in_radius"] = metric_json(m.in_radius);
    out["doubled_radius"] = metric_json(m.doubled_radius);
    out["radius"] = half_string(m.doubled_radius);
    out["strongly_connected"] = m.strongly_connected;
    out["out_eccentricities"] = ecc_json(m.ecc_out);
    out["in_eccentricities"] = ecc_json(m.ecc_in);
    return out;
}

int cmd_metrics(const std::string& input, const std::string& format, const std::string& outfile) {
    std::string text = read_input(input);
    std::string fmt = format;
    if (fmt == "auto") {
        if (!text.empty() && text[0] == '&') {
            fmt = "digraph6";
        } else if (!text.empty() && text[0] == '{' &&
                   nlohmann::json::accept(text)) {
            // '{' is also a valid graph6 order byte (n = 60), so only a
            // well-formed JSON document is routed to the JSON reader.
            fmt = "json";
        } else {
            fmt = "graph6";
        }
    }
    json out;
    out["schema_version"] = 1;
    out["config"] = {{"subcommand", "metrics"}, {"input", input.empty() ? "-" : input}, {"format", fmt}};
    if (fmt == "json") {
        wrad::DecodedJson dec = wrad::read_json_edges(text);
        json one = dec.directed ? metrics_of_digraph(*dec.digraph) : metrics_of_graph(*dec.graph);
        out.update(one);
    } else {
        // Newline-delimited streams: one record per line.
        std::vector<json> records;
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) {
            if (line.empty()) continue;
            records.push_back(fmt == "digraph6" ? metrics_of_digraph(wrad::parse_digraph6(line))
                                                : metrics_of_graph(wrad::parse_graph6(line)));
        }
        if (records.empty()) throw std::runtime_error("metrics: empty input");
        if (records.size() == 1) out.update(records[0]);
        else out["records"] = records;
    }
    write_output(outfile, out.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& suite) {
    auto results = wrad::run_suites(suite);
    bool all_ok = true;
    for (const auto& r : results) {
        if (r.passed()) {
            std::printf("%-12s PASS  (%lld cases)\n", r.name.c_str(), r.cases);
        } else {
            all_ok = false;
            std::printf("%-12s FAIL  (%zu of %lld cases)\n", r.name.c_str(), r.failures.size(),
                        r.cases);
            size_t shown = 0;
            for (const auto& f : r.failures) {
                if (++shown > 5) {
                    std::printf("    ... %zu more\n", r.failures.size() - 5);
                    break;
                }
                std::printf("    %s\n", f.c_str());
            }
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_survey(const std::string& mode, int n, int r, int threads, bool timing,
               const std::string& outfile) {
    json out;
    if (mode == "min-wiener" || mode == "max-wiener") {
        wrad::SurveyReport rep = mode == "min-wiener" ? wrad::min_wiener_radius_survey(n, r, threads)
                                                      : wrad::max_wiener_radius_survey(n, r, threads);
        out = rep.to_json(timing);
    } else if (mode == "outradius1-max") {
        out = wrad::max_wiener_outradius1_survey(n).to_json(timing);
    } else if (mode == "chord") {
        auto results = wrad::chord_augmentation_search(r, threads);
        out["schema_version"] = 1;
        out["mode"] = "chord";
        out["r"] = r;
        json arr = json::array();
        for (const auto& res : results) {
            json item;
            json chords = json::array();
            for (auto [a, b] : res.chords) chords.push_back(json::array({a, b}));
            item["chords"] = chords;
            item["wiener_poly"] = {{"a2", res.a2}, {"a1", res.a1}, {"a0", res.a0}};
            item["contains_base_arc"] = res.contains_base_arc;
            item["rank"] = res.rank;
            item["status"] = res.conjectured ? "conjectured" : "exact";
            arr.push_back(item);
        }
        out["optima"] = arr;
    } else {
        throw CLI::ValidationError("mode", "expected min-wiener, max-wiener, outradius1-max or chord");
    }
    out["config"] = {{"subcommand", "survey"}, {"mode", mode},       {"n", n},
                     {"r", r},                 {"threads", threads}, {"schema_version", 1}};
    write_output(outfile, out.dump(2) + "\n");
    return 0;
}

std::string mu_string(long long wiener, long long pairs) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(wiener) / static_cast<double>(pairs));
    return buf;
}

int cmd_report(const std::string& table, int n_min, int n_max, int n_step, int r_min, int r_max,
               const std::string& outfile) {
    std::ostringstream csv;
    csv << "# wrad report table=" << table << " n=" << n_min << ".." << n_max << " step " << n_step
        << " r=" << r_min << ".." << r_max << " schema_version=1\n";
    if (table == "graphs") {
        csv << "n,r,min_wiener[eq1],min_mu[eq1/binom(n 2)],max_size[vizing]\n";
        for (int n = n_min; n <= n_max; n += n_step)
            for (int r = r_min; r <= r_max; ++r) {
                csv << n << ',' << r << ',';
                if (r >= 3 && n >= 2 * r) {
                    long long w = wrad::formulas::eq1_wiener(n, r);
                    csv << w << ',' << mu_string(w, wrad::formulas::binom2(n)) << ',';
                } else {
                    csv << ",,";
                }
                if (r == 1 || (r == 2 && n >= 4) || (r >= 3 && n >= 2 * r))
                    csv << wrad::formulas::vizing_max_size(n, r);
                csv << '\n';
            }
    } else if (table == "digraphs") {
        csv << "n,r,outrad_min_wiener[eq2],outrad_min_mu[eq2/n(n-1)],max_arcs[max-arcs],"
               "rad_min_wiener[bfs:min-rad],rad_min_mu,rad_max_wiener[bfs:max-rad],rad_max_mu,"
               "outrad_max_wiener[max-outrad],outrad_max_mu\n";
        for (int n = n_min; n <= n_max; n += n_step)
            for (int r = r_min; r <= r_max; ++r) {
                const long long pairs = static_cast<long long>(n) * (n - 1);
                csv << n << ',' << r << ',';
                if (r >= 3 && n >= 2 * r) {
                    long long w = wrad::formulas::eq2_wiener(n, r);
                    csv << w << ',' << mu_string(w, pairs) << ','
                        << wrad::formulas::digraph_max_arcs(n, r) << ',';
                } else {
                    csv << ",,,";
                }
                if (2 * r >= 5 && 2 * n > 2 * r + 4) {
                    auto w = wrad::wiener_digraph(wrad::min_rad_construction(n, 2 * r));
                    csv << *w << ',' << mu_string(*w, pairs) << ',';
                } else {
                    csv << ",,";
                }
                if (r >= 1 && n >= 2 * r + 1) {
                    auto w = wrad::wiener_digraph(wrad::max_rad_construction(n, r));
                    csv << *w << ',' << mu_string(*w, pairs) << ',';
                } else {
                    csv << ",,";
                }
                if (r >= 2 && n >= r + 2) {
                    long long w = wrad::formulas::maxradplus_construction_wiener(n, r);
                    csv << w << ',' << mu_string(w, pairs);
                } else {
                    csv << ',';
                }
                csv << '\n';
            }
    } else {
        throw CLI::ValidationError("table", "expected graphs or digraphs");
    }
    write_output(outfile, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Wiener/radius extremal toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a named family and print its encoding");
    std::string family, chords_text, lengths_text, format = "auto", outfile;
    long long n_opt = -1, r_opt = -1, s_opt = -1, d_opt = -1, dr_opt = -1, variant_opt = -1;
    construct->add_option("family", family, "family name")->required();
    construct->add_option("--n", n_opt, "order");
    construct->add_option("--r", r_opt, "radius parameter");
    construct->add_option("--s", s_opt, "blow-up split");
    construct->add_option("--d", d_opt, "cycle length (dp family)");
    construct->add_option("--dr", dr_opt, "doubled radius (half-integers stay exact)");
    construct->add_option("--variant", variant_opt, "preset variant index");
    construct->add_option("--lengths", lengths_text, "comma list of cycle lengths");
    construct->add_option("--chords", chords_text, "comma list of from-to chord pairs");
    construct->add_option("--format", format, "graph6|digraph6|json|auto");
    construct->add_option("-o,--output", outfile, "output file (default stdout)");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "exact distance metrics of an encoded (di)graph");
    std::string metrics_input, metrics_format = "auto", metrics_out;
    metrics->add_option("input", metrics_input, "input file ('-' = stdin)");
    metrics->add_option("--format", metrics_format, "graph6|digraph6|json|auto");
    metrics->add_option("-o,--output", metrics_out, "output file (default stdout)");

    // formula
    auto* formula = app.add_subcommand("formula", "evaluate a closed form");
    std::string formula_id;
    std::vector<long long> formula_params;
    formula->add_option("id", formula_id, "formula id")->required();
    formula->add_option("params", formula_params, "integer parameters");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name or 'all'")->required();

    // survey
    auto* survey = app.add_subcommand("survey", "desk-scale extremal search");
    std::string survey_mode, survey_out;
    int survey_n = 0, survey_r = 0, survey_threads = 1;
    bool survey_timing = false;
    survey->add_option("mode", survey_mode, "min-wiener|max-wiener|outradius1-max|chord")->required();
    survey->add_option("--n", survey_n, "order");
    survey->add_option("--r", survey_r, "radius");
    survey->add_option("--threads", survey_threads, "worker threads");
    survey->add_flag("--timing", survey_timing, "include elapsed time in the report");
    survey->add_option("-o,--output", survey_out, "output file (default stdout)");

    // report
    auto* report = app.add_subcommand("report", "CSV of computed table rows over an (n,r) grid");
    std::string report_table, report_out;
    int rn_min = 10, rn_max = 30, rn_step = 10, rr_min = 1, rr_max = 4;
    report->add_option("table", report_table, "graphs|digraphs")->required();
    report->add_option("--n-min", rn_min);
    report->add_option("--n-max", rn_max);
    report->add_option("--n-step", rn_step);
    report->add_option("--r-min", rr_min);
    report->add_option("--r-max", rr_max);
    report->add_option("-o,--output", report_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            wrad::ConstructionSpec spec;
            spec.family = family;
            if (n_opt >= 0) spec.n = n_opt;
            if (r_opt >= 0) spec.r = r_opt;
            if (s_opt >= 0) spec.s = s_opt;
            if (d_opt >= 0) spec.d = d_opt;
            if (dr_opt >= 0) spec.doubled_r = dr_opt;
            if (variant_opt >= 0) spec.variant = variant_opt;
            if (!lengths_text.empty()) spec.cycle_lengths = parse_int_list(lengths_text);
            if (!chords_text.empty()) spec.chords = parse_chords(chords_text);
            return cmd_construct(spec, format, outfile);
        }
        if (*metrics) return cmd_metrics(metrics_input, metrics_format, metrics_out);
        if (*formula) {
            std::cout << wrad::formulas::evaluate_formula(formula_id, formula_params) << "\n";
            return 0;
        }
        if (*verify) return cmd_verify(suite);
        if (*survey) return cmd_survey(survey_mode, survey_n, survey_r, survey_threads, survey_timing,
                                       survey_out);
        if (*report)
            return cmd_report(report_table, rn_min, rn_max, rn_step, rr_min, rr_max, report_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
