// hilbext: dimensions of Hilbert-scheme strata and extendability certificates.

#include "hilbext/certify.hpp"
#include "hilbext/json_io.hpp"
#include "hilbext/paper_checks.hpp"
#include "hilbext/search.hpp"
#include "hilbext/strata.hpp"
#include "hilbext/tower.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using hilbext::json;

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string data;
    std::string input;
    std::string output;
    std::string format = "table";
    std::string convention = "exclude";
    std::optional<long> n;
    std::optional<long> n0;
    std::optional<long> t;
    std::optional<long> t_to;
    int k = 0;
    std::optional<std::size_t> workers;
};

json read_input(const Options& opt) {
    std::string text;
    if (!opt.data.empty()) {
        text = opt.data;
    } else if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in) throw UsageError("cannot open input file '" + opt.input + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        throw UsageError("one of --data or --input is required");
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw hilbext::SchemaError(std::string("input is not valid JSON: ") + e.what());
    }
}

std::string render_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Table output renders the JSON document row by row, in the given key order.
std::string render_rows(const json& doc, const std::vector<std::string>& keys) {
    std::size_t width = 0;
    for (const auto& k : keys)
        if (doc.contains(k)) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& k : keys) {
        if (!doc.contains(k)) continue;
        os << std::left << std::setw(static_cast<int>(width + 2)) << k << render_value(doc.at(k)) << "\n";
    }
    return os.str();
}

const std::vector<std::string> certificate_rows{
    "data", "n0", "phi_convention", "dimension_poly_text", "delta_poly_text", "verdict", "witness", "proof", "non_ci",
    "criterion"};

json with_poly_text(json doc, const hilbext::ExtendabilityCertificate& cert) {
    doc["dimension_poly_text"] = cert.dimension_poly.to_string();
    doc["delta_poly_text"] = cert.delta_poly.to_string();
    return doc;
}

struct Rendered {
    json doc;
    std::string table;
    int status = exit_ok;
};

hilbext::ResolutionData read_data(const Options& opt) {
    auto data = hilbext::resolution_from_json(read_input(opt));
    return hilbext::canonical(data);
}

std::vector<std::string> warnings_for(const hilbext::ResolutionData& data) {
    return hilbext::validate(data).warnings;
}

Rendered cmd_dim(const Options& opt) {
    const auto data = read_data(opt);
    const hilbext::Conventions conv{hilbext::parse_convention(opt.convention)};
    const auto poly = hilbext::dimension_poly(data, conv);
    json doc;
    doc["data"] = hilbext::to_json(data);
    doc["formula"] = std::holds_alternative<hilbext::Codim2Data>(data) ? "psi" : "phi";
    doc["equality_pair"] = hilbext::Conventions::equality_pair;
    doc["phi_convention"] = hilbext::convention_name(conv.zero_term);
    doc["dimension_poly"] = hilbext::to_json(poly);
    doc["dimension_poly_text"] = poly.to_string();
    doc["warnings"] = warnings_for(data);
    if (opt.n) {
        doc["n"] = *opt.n;
        doc["dimension"] = hilbext::big_to_json(hilbext::stratum_dimension(data, *opt.n, conv));
    }
    return {doc, render_rows(doc, {"data", "formula", "phi_convention", "dimension_poly_text", "n", "dimension", "warnings"})};
}

Rendered cmd_hilbert(const Options& opt) {
    const auto data = read_data(opt);
    if (!opt.n || !opt.t) throw UsageError("hilbert needs --n and --t");
    const long t_to = opt.t_to.value_or(*opt.t);
    json doc;
    doc["data"] = hilbext::to_json(data);
    doc["n"] = *opt.n;
    json samples = json::array();
    std::ostringstream table;
    table << "t\th(t)\n";
    for (const auto& s : hilbext::hilbert_samples(data, *opt.n, *opt.t, t_to)) {
        samples.push_back({{"t", s.t}, {"value", hilbext::big_to_json(s.value)}});
        table << s.t << "\t" << s.value << "\n";
    }
    doc["samples"] = samples;
    return {doc, table.str()};
}

Rendered cmd_degree(const Options& opt) {
    const auto data = read_data(opt);
    json doc;
    doc["data"] = hilbext::to_json(data);
    doc["degree"] = hilbext::degree_of(data);
    doc["hilbert_polynomial_degree"] = hilbext::degree_from_hilbert(data, hilbext::min_ambient(data));
    if (const auto* d2 = std::get_if<hilbext::Codim2Data>(&data))
        doc["closed_form_degree"] = hilbext::hilbert_burch_degree(*d2);
    doc["complete_intersection"] = hilbext::is_complete_intersection(data);
    return {doc, render_rows(doc, {"data", "degree", "hilbert_polynomial_degree", "closed_form_degree",
                                   "complete_intersection"})};
}

Rendered cmd_certify(const Options& opt) {
    const auto data = read_data(opt);
    const auto cert =
        hilbext::certify(data, opt.n0.value_or(hilbext::default_n0(data)), hilbext::parse_convention(opt.convention));
    json doc = with_poly_text(hilbext::to_json(cert), cert);
    return {doc, render_rows(doc, certificate_rows)};
}

Rendered cmd_lift(const Options& opt) {
    const json in = read_input(opt);
    hilbext::ExtendabilityCertificate base;
    if (in.contains("proof")) {
        base = hilbext::certificate_from_json(in);
    } else {
        const auto data = hilbext::canonical(hilbext::resolution_from_json(in));
        base = hilbext::certify(data, opt.n0.value_or(hilbext::default_n0(data)),
                                hilbext::parse_convention(opt.convention));
    }
    const long n = opt.n.value_or(3 + opt.k + 1);
    const auto tower = hilbext::lift_by_quadrics(base, opt.k, n);
    json doc = with_poly_text(hilbext::to_json(tower), tower.base);
    std::vector<std::string> rows = certificate_rows;
    rows.insert(rows.end(), {"quadric_count", "codim", "n", "gen_degrees", "provenance"});
    return {doc, render_rows(doc, rows)};
}

Rendered cmd_search(const Options& opt) {
    const auto config = hilbext::config_from_json(read_input(opt));
    const auto report = hilbext::run_search(config, opt.workers.value_or(hilbext::default_workers()));
    json doc = hilbext::to_json(report);
    std::ostringstream table;
    table << "candidates  " << report.candidate_count << "\nhits        " << report.hits.size() << "\n";
    for (const auto& [reason, count] : report.rejected_counts) table << "rejected    " << reason << " " << count << "\n";
    for (const auto& h : report.hits)
        table << "hit         " << hilbext::describe(h.data) << "  delta = " << h.delta_poly.to_string() << "\n";
    return {doc, table.str()};
}

Rendered cmd_verify_paper(const Options&) {
    const auto claims = hilbext::run_paper_checks();
    json doc;
    json rows = json::array();
    bool all = true;
    std::ostringstream table;
    for (const auto& c : claims) {
        all = all && c.passed;
        rows.push_back({{"criterion", c.criterion}, {"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}});
        table << (c.passed ? "PASS" : "FAIL") << "  " << c.criterion << "  " << c.claim;
        if (!c.passed) table << "  (" << c.detail << ")";
        table << "\n";
    }
    doc["claims"] = rows;
    doc["all_passed"] = all;
    table << (all ? "all claims reproduced\n" : "MISMATCH\n");
    return {doc, table.str(), all ? exit_ok : exit_domain};
}

void emit(const Rendered& r, const Options& opt) {
    const std::string text = opt.format == "json" ? r.doc.dump(2) + "\n" : r.table;
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw UsageError("cannot write output file '" + opt.output + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert-scheme strata dimensions and extendability certificates"};
    app.require_subcommand(1, 1);
    Options opt;

    auto add_io = [&](CLI::App* sub) {
        auto* data = sub->add_option("--data", opt.data, "inline JSON input");
        auto* input = sub->add_option("--input", opt.input, "path to a JSON input file")->check(CLI::ExistingFile);
        data->excludes(input);
        sub->add_option("--output", opt.output, "write the result here instead of stdout");
        sub->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };
    auto add_convention = [&](CLI::App* sub) {
        sub->add_option("--convention", opt.convention, "zero-term convention for codim-3 data: exclude or include")
            ->check(CLI::IsMember({"exclude", "include"}));
    };

    auto* dim = app.add_subcommand("dim", "stratum dimension (polynomial in n, or its value at --n)");
    add_io(dim);
    add_convention(dim);
    dim->add_option("--n", opt.n, "ambient dimension");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the coordinate ring");
    add_io(hilbert);
    hilbert->add_option("--n", opt.n, "ambient dimension")->required();
    hilbert->add_option("--t", opt.t, "twist")->required();
    hilbert->add_option("--t-to", opt.t_to, "last twist of a range starting at --t");

    auto* degree = app.add_subcommand("degree", "degree of the stratum's schemes");
    add_io(degree);

    auto* cert = app.add_subcommand("certify", "certify or refute the extendability criterion for all n >= n0");
    add_io(cert);
    add_convention(cert);
    cert->add_option("--n0", opt.n0, "starting ambient dimension (default codim + 1)");

    auto* lift = app.add_subcommand("lift", "lift a codim-3 Gorenstein certificate by k quadrics");
    add_io(lift);
    add_convention(lift);
    lift->add_option("--k", opt.k, "number of quadrics")->check(CLI::NonNegativeNumber);
    lift->add_option("--n", opt.n, "ambient dimension (default codim + 1)");
    lift->add_option("--n0", opt.n0, "n0 when certifying raw data");

    auto* search = app.add_subcommand("search", "exhaustive search over degree data within bounds");
    add_io(search);
    search->add_option("--workers", opt.workers, "worker threads (default HILBEXT_WORKERS or hardware)");

    auto* verify = app.add_subcommand("verify-paper", "reproduce the published values");
    verify->add_option("--output", opt.output, "write the result here instead of stdout");
    verify->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Rendered r;
        if (*dim) r = cmd_dim(opt);
        else if (*hilbert) r = cmd_hilbert(opt);
        else if (*degree) r = cmd_degree(opt);
        else if (*cert) r = cmd_certify(opt);
        else if (*lift) r = cmd_lift(opt);
        else if (*search) r = cmd_search(opt);
        else r = cmd_verify_paper(opt);
        emit(r, opt);
        return r.status;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        // InvalidData, SchemaError, TowerError and malformed configs.
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
}
