#include "normclass/cli/run.hpp"

#include "normclass/classes/quadric.hpp"
#include "normclass/cli/report.hpp"
#include "normclass/errors.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

namespace normclass {

namespace {

const std::vector<std::string> kCommands = {"surface-class", "curve-class", "census",
                                            "polar",         "quadric-table", "chow"};

struct Outcome {
    int code = exit_code::kOk;
    Json report;
    std::string diagnostic;
};

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += ' ';
        s += p;
    }
    return s;
}

MultiPoly parse_surface(const std::vector<std::string>& args) { return parse_polynomial(join(args), 4); }

MultiPoly parse_curve(const std::vector<std::string>& args) { return parse_polynomial(join(args), 3); }

Json surface_report(const RunConfig& c) {
    MultiPoly f = parse_surface(c.args);
    auto report = surface_normal_class(f, PipelineOptions{c.seed, c.retries});
    return to_json(report);
}

Json curve_report(const RunConfig& c) {
    MultiPoly g = parse_curve(c.args);
    auto report = curve_normal_class(g, PipelineOptions{c.seed, c.retries});
    return to_json(report);
}

Json census_report(const RunConfig& c) {
    MultiPoly f = parse_surface(c.args);
    require_surface_input(f);
    Census census = census_surface_infinity(f);
    Json j;
    j["input"] = f.to_string();
    j["degree"] = f.total_degree();
    j["census"] = to_json(census);
    j["certified"] = census.unresolved.empty();
    return j;
}

Json polar_report(const RunConfig& c) {
    MultiPoly f = parse_surface(c.args);
    require_surface_input(f);
    std::uint64_t seed = seed_pair(c.seed, 0).first;
    GenericDraw draw(seed);
    IdealHandle polar = generic_normal_polar(f, draw);
    Json j;
    j["input"] = f.to_string();
    j["degree"] = f.total_degree();
    j["polar_dimension"] = ideal_dimension(polar);
    j["polar_degree"] = hilbert_degree(polar);
    j["certified"] = true;
    j["seeds_used"] = {seed};
    return j;
}

Json quadric_entry(QuadricForm form, const GaussianRational& alpha, const std::optional<GaussianRational>& beta,
                   const RunConfig& c) {
    MultiPoly q = quadric_polynomial(form, alpha, beta);
    auto report = surface_normal_class(q, PipelineOptions{c.seed, c.retries});
    long expected = quadric_table(form, alpha, beta);
    Json j;
    j["form"] = std::string(1, form_letter(form));
    j["alpha"] = alpha.to_string();
    if (beta)
        j["beta"] = beta->to_string();
    else
        j["beta"] = nullptr;
    j["input"] = q.to_string();
    j["table_value"] = expected;
    j["normal_class"] = report.normal_class;
    j["reduced"] = report.reduced;
    j["agree"] = expected == report.normal_class;
    return j;
}

Json quadric_report(const RunConfig& c) {
    if (!c.args.empty()) {
        if (c.args.size() < 2 || c.args.size() > 3)
            throw ParseError("quadric-table expects FORM ALPHA [BETA]");
        QuadricForm form = parse_quadric_form(c.args[0]);
        GaussianRational alpha = GaussianRational::parse(c.args[1]);
        std::optional<GaussianRational> beta;
        if (c.args.size() == 3) beta = GaussianRational::parse(c.args[2]);
        return quadric_entry(form, alpha, beta, c);
    }
    const GaussianRational one(1), two(2), four(4);
    Json rows = Json::array();
    for (QuadricForm form : {QuadricForm::A, QuadricForm::B}) {
        rows.push_back(quadric_entry(form, two, four, c));
        rows.push_back(quadric_entry(form, four, four, c));
        rows.push_back(quadric_entry(form, one, one, c));
    }
    for (QuadricForm form : {QuadricForm::C, QuadricForm::D}) {
        rows.push_back(quadric_entry(form, two, std::nullopt, c));
        rows.push_back(quadric_entry(form, one, std::nullopt, c));
    }
    return rows;
}

Json chow_report(const RunConfig& c) { return to_json(ChowClass::parse(join(c.args))); }

Outcome dispatch(const RunConfig& c) {
    Outcome o;
    try {
        if (c.command == "surface-class")
            o.report = surface_report(c);
        else if (c.command == "curve-class")
            o.report = curve_report(c);
        else if (c.command == "census")
            o.report = census_report(c);
        else if (c.command == "polar")
            o.report = polar_report(c);
        else if (c.command == "quadric-table")
            o.report = quadric_report(c);
        else if (c.command == "chow")
            o.report = chow_report(c);
        else
            throw ParseError("unknown command: " + c.command);
    } catch (const ParseError& e) {
        o = {exit_code::kParse, {}, std::string("parse error: ") + e.what()};
    } catch (const DomainError& e) {
        o = {exit_code::kParse, {}, std::string("domain error: ") + e.what()};
    } catch (const GenericityExhausted& e) {
        o = {exit_code::kGenericity, {}, std::string("genericity exhausted: ") + e.what()};
    } catch (const HypothesisViolation& e) {
        o = {exit_code::kHypothesis, {}, std::string("hypothesis violation: ") + e.what()};
    } catch (const NotZeroDimensional& e) {
        o = {exit_code::kHypothesis, {}, std::string("not zero-dimensional: ") + e.what()};
    } catch (const NotCertified& e) {
        o = {exit_code::kHypothesis, {}, std::string("not certified: ") + e.what()};
    } catch (const UnsupportedPoint& e) {
        o = {exit_code::kHypothesis, {}, std::string("unsupported point: ") + e.what()};
    }
    return o;
}

void write_text(const Json& j, std::ostream& out, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured() && !value.empty()) {
                write_text(value, out, prefix + key + ".");
            } else {
                out << prefix << key << ": " << value.dump() << '\n';
            }
        }
    } else if (j.is_array()) {
        bool scalars = std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
        if (scalars) {
            out << prefix.substr(0, prefix.empty() ? 0 : prefix.size() - 1) << ": " << j.dump() << '\n';
            return;
        }
        for (std::size_t k = 0; k < j.size(); ++k) write_text(j[k], out, prefix + std::to_string(k) + ".");
    } else {
        out << prefix << j.dump() << '\n';
    }
}

void emit(const Json& j, OutputFormat format, bool compact, std::ostream& out) {
    if (format == OutputFormat::Text)
        write_text(j, out, "");
    else
        out << (compact ? j.dump() : j.dump(2)) << '\n';
}

std::vector<std::string> read_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open batch file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    return lines;
}

} // namespace

bool is_known_command(const std::string& command) {
    return std::find(kCommands.begin(), kCommands.end(), command) != kCommands.end();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.batch_file) {
        Outcome o = dispatch(config);
        if (o.code != exit_code::kOk) {
            err << o.diagnostic << '\n';
            return o.code;
        }
        emit(o.report, config.output, false, out);
        return exit_code::kOk;
    }

    std::vector<std::string> lines;
    try {
        lines = read_batch(*config.batch_file);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return exit_code::kParse;
    }
    std::vector<std::future<Outcome>> jobs;
    jobs.reserve(lines.size());
    for (const auto& line : lines) {
        RunConfig c = config;
        c.batch_file.reset();
        c.args = {line};
        jobs.push_back(std::async(std::launch::async, [c] { return dispatch(c); }));
    }
    int worst = exit_code::kOk;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        Outcome o = jobs[k].get();
        if (o.code != exit_code::kOk) {
            err << "line " << (k + 1) << ": " << o.diagnostic << '\n';
            Json failed;
            failed["input"] = lines[k];
            failed["error"] = o.diagnostic;
            failed["exit_code"] = o.code;
            failed["certified"] = false;
            emit(failed, config.output, true, out);
            worst = std::max(worst, o.code);
        } else {
            emit(o.report, config.output, true, out);
        }
    }
    return worst;
}

} // namespace normclass
