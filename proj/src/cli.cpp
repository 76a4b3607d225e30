#include "orthoq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "orthoq/error.hpp"

namespace orthoq {

Command parse_command(std::string_view name) {
    if (name == "construct") return Command::Construct;
    if (name == "verify") return Command::Verify;
    if (name == "coeffs") return Command::Coeffs;
    if (name == "classify") return Command::Classify;
    throw ParseError("unknown command '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw ParseError("unknown format '" + std::string(name) + "'");
}

FamilySpec family_from_config(const JobConfig& cfg) {
    if (!cfg.family) throw DomainError("no family given");
    const Family family = parse_family(*cfg.family);
    Rational p(1, 2);
    if (cfg.lattice) {
        const Lattice lat = lattice_from_json(*cfg.lattice);
        if (is_q_family(family)) {
            if (!lat.is_q() || lat != Lattice::askey_wilson(lat.p()))
                throw DomainError(std::string(family_name(family)) + " lives on the lattice (q^-s + q^s)/2");
            p = lat.p();
        } else if (lat != Lattice::wilson()) {
            throw DomainError(std::string(family_name(family)) + " lives on the lattice x(s) = s^2");
        }
    }
    return make_family(family, cfg.params, p);
}

namespace {

long checked_bound(const JobConfig& cfg, std::optional<long> value, const char* what) {
    if (!value) throw DomainError(std::string("missing ") + what);
    if (*value < 0) throw DomainError(std::string(what) + " must be non-negative");
    if (*value > cfg.cap) throw DomainError(std::string(what) + " = " + std::to_string(*value) + " exceeds the cap " + std::to_string(cfg.cap));
    return *value;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json params_json(const std::vector<Rational>& params) {
    Json out = Json::array();
    for (const auto& v : params) out.push_back(to_json(v));
    return out;
}

Json header(const FamilySpec& spec) {
    return Json{{"family", std::string(family_name(spec.family))}, {"params", params_json(spec.params)}};
}

bool quadratic(const FamilySpec& spec) { return !spec.lattice.is_q(); }

std::string offset_label(int j) {
    if (j == 0) return "n";
    return j > 0 ? "n+" + std::to_string(j) : "n-" + std::to_string(-j);
}

CommandResult cmd_construct(const JobConfig& cfg) {
    const FamilySpec spec = family_from_config(cfg);
    const long n_max = checked_bound(cfg, cfg.n_max ? cfg.n_max : cfg.n, "n_max");
    const auto seq = monic_sequence(spec, n_max);
    std::vector<Polynomial> rows;
    for (const auto& p : seq) rows.push_back(quadratic(spec) ? to_t_variable(p) : p);

    CommandResult result;
    if (cfg.format == Format::Csv) {
        result.text = "n,coefficients\n";
        for (std::size_t n = 0; n < rows.size(); ++n) {
            result.text += std::to_string(n);
            for (const auto& c : rows[n].coeffs()) result.text += "," + to_string(c);
            result.text += "\n";
        }
        return result;
    }
    Json out = header(spec);
    out["lattice"] = to_json(spec.lattice);
    out["variable"] = quadratic(spec) ? "t" : "x";
    Json polys = Json::array();
    for (const auto& p : rows) polys.push_back(to_json(p));
    out["polynomials"] = polys;
    result.text = dump(out);
    return result;
}

struct Check {
    std::string identity;
    long n;
    Polynomial residual;
    bool ok;
    Json details = Json::object();
};

using Checks = std::vector<Check>;

Check plain(std::string identity, long n, Polynomial residual) {
    const bool ok = residual.is_zero();
    return {std::move(identity), n, std::move(residual), ok};
}

Checks sl_checks(const FamilySpec& spec, long n_max, long shift) {
    const SLData sl = sl_data_for(spec);
    const OperatorContext ctx(spec.lattice);
    const auto seq = monic_sequence(spec, n_max);
    Checks out;
    for (long n = 0; n <= n_max; ++n) {
        const Rational lambda = lambda_for(sl, n) + shift;
        out.push_back(plain("sturm-liouville", n, sl_residual(ctx, sl, lambda, seq[static_cast<std::size_t>(n)])));
    }
    return out;
}

Checks structure_checks(const FamilySpec& spec, long n_max, bool first) {
    Checks out;
    for (long n = 2; n <= n_max; ++n) {
        const CoefficientReport r = first ? first_structure(spec, n) : second_structure(spec, n);
        Check c = plain(first ? "first-structure" : "second-structure", n, r.residual);
        if (r.closed_form_match) {
            c.ok = c.ok && *r.closed_form_match;
            c.details["closed_form_match"] = *r.closed_form_match;
        }
        c.details["window"] = to_json(r.window);
        out.push_back(std::move(c));
    }
    return out;
}

Checks contiguous_checks(const FamilySpec& spec, long n_max) {
    Checks out;
    for (auto& r : verify_contiguous(spec, n_max)) out.push_back(plain(r.identity, r.n, std::move(r.residual)));
    return out;
}

Checks m_operator_checks(const FamilySpec& spec, long n_max) {
    Checks out;
    for (long n = 0; n <= n_max; ++n) out.push_back(plain("m-operator", n, verify_m_operator_corrected(spec, n)));
    return out;
}

Checks surrogate_checks(const FamilySpec& spec, long n_max) {
    Checks out;
    for (long n = 3; n <= n_max; ++n) {
        const SurrogateReport r = derivative_ttrr_surrogate(spec, n);
        Check c = plain("favard-surrogate", n, r.out_of_band);
        c.ok = r.ok();
        c.details["up"] = to_json(r.up);
        c.details["mid"] = to_json(r.mid);
        c.details["down"] = to_json(r.down);
        c.details["leading_match"] = r.leading_match;
        out.push_back(std::move(c));
    }
    return out;
}

Checks ttrr_checks(const FamilySpec& spec, long n_max) {
    Checks out;
    for (const auto& row : ttrr_coeffs(spec, n_max)) {
        Check c{"ttrr-closed-form", row.n, Polynomial(), row.closed_form_match.value_or(true)};
        c.details["a"] = to_json(row.a);
        c.details["b"] = to_json(row.b);
        out.push_back(std::move(c));
    }
    return out;
}

CommandResult cmd_verify(const JobConfig& cfg) {
    const FamilySpec spec = family_from_config(cfg);
    const long n_max = checked_bound(cfg, cfg.n_max ? cfg.n_max : std::optional<long>(6), "n_max");
    const long shift = cfg.lambda_shift;

    std::vector<std::future<Checks>> jobs;
    auto launch = [&](auto fn) { jobs.push_back(std::async(std::launch::async, fn)); };
    launch([&] { return sl_checks(spec, n_max, shift); });
    launch([&] { return structure_checks(spec, n_max, true); });
    launch([&] { return structure_checks(spec, n_max, false); });
    launch([&] { return m_operator_checks(spec, n_max); });
    launch([&] { return surrogate_checks(spec, n_max); });
    if (spec.family == Family::Wilson || spec.family == Family::AskeyWilson)
        launch([&] { return contiguous_checks(spec, n_max); });
    if (spec.family == Family::Wilson) launch([&] { return ttrr_checks(spec, n_max); });

    Checks all;
    std::exception_ptr failure;
    for (auto& job : jobs) {
        try {
            auto part = job.get();
            std::move(part.begin(), part.end(), std::back_inserter(all));
        } catch (...) {
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::sort(all.begin(), all.end(),
              [](const Check& a, const Check& b) { return std::tie(a.identity, a.n) < std::tie(b.identity, b.n); });

    CommandResult result;
    bool all_ok = true;
    for (const auto& c : all) {
        if (c.ok) continue;
        all_ok = false;
        result.failures.push_back("FAIL " + c.identity + " n=" + std::to_string(c.n) +
                                  " residual=" + to_json(c.residual).dump());
    }
    result.exit_code = all_ok ? kExitOk : kExitIdentityFailure;

    if (cfg.format == Format::Csv) {
        result.text = "identity,n,ok\n";
        for (const auto& c : all)
            result.text += c.identity + "," + std::to_string(c.n) + "," + (c.ok ? "true" : "false") + "\n";
        return result;
    }
    Json out = header(spec);
    out["n_max"] = n_max;
    if (shift != 0) out["lambda_shift"] = shift;
    out["all_ok"] = all_ok;
    Json rows = Json::array();
    for (const auto& c : all) {
        Json row{{"identity", c.identity},
                 {"n", c.n},
                 {"label", c.identity + " n=" + std::to_string(c.n)},
                 {"ok", c.ok},
                 {"residual", to_json(c.residual)}};
        for (const auto& [k, v] : c.details.items()) row[k] = v;
        rows.push_back(row);
    }
    out["results"] = rows;
    result.text = dump(out);
    return result;
}

CommandResult cmd_ttrr(const JobConfig& cfg, const FamilySpec& spec) {
    const long n_max = checked_bound(cfg, cfg.n_max ? cfg.n_max : cfg.n, "n_max");
    auto rows = ttrr_coeffs(spec, n_max);
    if (quadratic(spec))
        for (auto& r : rows) r.a = -r.a;
    CommandResult result;
    if (cfg.format == Format::Csv) {
        result.text = "n,a,b,closed_form_match\n";
        for (const auto& r : rows) {
            result.text += std::to_string(r.n) + "," + to_string(r.a) + "," + to_string(r.b) + "," +
                           (r.closed_form_match ? (*r.closed_form_match ? "true" : "false") : "") + "\n";
        }
        return result;
    }
    Json out = header(spec);
    out["relation"] = "ttrr";
    out["variable"] = quadratic(spec) ? "t" : "x";
    Json list = Json::array();
    for (const auto& r : rows) {
        Json row{{"n", r.n}, {"a", to_json(r.a)}, {"b", to_json(r.b)}};
        if (r.closed_form_match) row["closed_form_match"] = *r.closed_form_match;
        list.push_back(row);
    }
    out["rows"] = list;
    result.text = dump(out);
    return result;
}

CommandResult cmd_coeffs(const JobConfig& cfg) {
    const FamilySpec spec = family_from_config(cfg);
    if (cfg.relation == "ttrr") return cmd_ttrr(cfg, spec);
    const bool first = cfg.relation == "first";
    if (!first && cfg.relation != "second") throw ParseError("unknown relation '" + cfg.relation + "'");
    const long n = checked_bound(cfg, cfg.n, "n");
    const CoefficientReport report = first ? first_structure(spec, n) : second_structure(spec, n);

    std::optional<std::array<Rational, 5>> closed;
    const auto& v = spec.params;
    if (spec.family == Family::Wilson)
        closed = first ? wilson_first_closed_form(n, v[0], v[1], v[2], v[3]) : wilson_second_closed_form(n, v[0], v[1], v[2], v[3]);
    else if (spec.family == Family::AskeyWilson && !first)
        closed = aw_second_closed_form(n, v[0], v[1], v[2], v[3], spec.lattice.p());

    CommandResult result;
    if (cfg.format == Format::Csv) {
        result.text = "offset,value,closed_form,entry_match\n";
        for (const auto& [j, val] : report.window) {
            result.text += std::to_string(j) + "," + to_string(val) + ",";
            if (closed) result.text += to_string((*closed)[static_cast<std::size_t>(j + 2)]);
            result.text += ",";
            if (report.entry_match.count(j)) result.text += report.entry_match.at(j) ? "true" : "false";
            result.text += "\n";
        }
        return result;
    }

    Json out = header(spec);
    out["relation"] = first ? "first" : "second";
    out["variable"] = report.t_variable ? "t" : "x";
    const Json body = to_json(report);
    for (const auto& [k, val] : body.items()) out[k] = val;
    const char letter = first ? 'a' : 'b';
    Json entries = Json::object();
    for (const auto& [j, val] : report.window)
        entries[std::string(1, letter) + "_{n," + offset_label(j) + "}"] = to_json(val);
    out["entries"] = entries;
    if (!first) {
        Json normalized = Json::object();
        for (const auto& [j, val] : report.window) {
            const long m = n + j;
            normalized[std::to_string(j)] = to_json(spec.lattice.gamma_n(m) * spec.lattice.gamma_n(m - 1) * val);
        }
        out["normalized"] = normalized;
    }
    if (closed) {
        Json cf = Json::object();
        Json match = Json::object();
        for (const auto& [j, val] : report.window) {
            cf[std::to_string(j)] = to_json((*closed)[static_cast<std::size_t>(j + 2)]);
            match[std::to_string(j)] = report.entry_match.at(j);
        }
        out["closed_form"] = cf;
        out["entry_match"] = match;
    }
    if (spec.family == Family::AskeyWilson && !first) {
        Json printed = Json::object();
        for (const auto& [j, ok] : aw_printed_entry_match(spec, report)) printed[std::to_string(j)] = ok;
        out["printed_entry_match"] = printed;
    }
    result.text = dump(out);
    return result;
}

CommandResult cmd_classify(const JobConfig& cfg) {
    auto input = [&]() -> SLData {
        if (cfg.family) return sl_data_for(family_from_config(cfg));
        if (!cfg.phi || !cfg.psi) throw DomainError("classify needs --family with --params, or --phi and --psi");
        if (cfg.phi->degree() > 2) throw DomainError("phi must have degree at most 2");
        if (cfg.psi->degree() > 1) throw DomainError("psi must have degree at most 1");
        const Lattice lat = cfg.lattice ? lattice_from_json(*cfg.lattice) : Lattice::askey_wilson(Rational(1, 2));
        return {cfg.phi->coeff(2), cfg.phi->coeff(1), cfg.phi->coeff(0), cfg.psi->coeff(1), cfg.psi->coeff(0), lat};
    };
    const SLData sl = input();
    const FamilyTag tag = classify(sl);
    CommandResult result;
    if (cfg.format == Format::Csv) {
        result.text = "family,params\n" + std::string(family_name(tag.family));
        for (const auto& v : tag.params) result.text += "," + to_string(v);
        result.text += "\n";
        return result;
    }
    result.text = dump(to_json(tag));
    return result;
}

std::vector<Rational> list_from_text(const std::string& text) {
    if (!text.empty() && text.front() == '[') return rationals_from_json(parse_json(text));
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void apply_config_file(JobConfig& cfg, const Json& j) {
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    try {
        if (j.contains("command")) cfg.command = parse_command(j.at("command").get<std::string>());
        if (j.contains("family")) cfg.family = j.at("family").get<std::string>();
        if (j.contains("lattice")) cfg.lattice = j.at("lattice");
        if (j.contains("params")) cfg.params = rationals_from_json(j.at("params"));
        if (j.contains("n")) cfg.n = j.at("n").get<long>();
        if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<long>();
        if (j.contains("relation")) cfg.relation = j.at("relation").get<std::string>();
        if (j.contains("phi")) cfg.phi = polynomial_from_json(j.at("phi"));
        if (j.contains("psi")) cfg.psi = polynomial_from_json(j.at("psi"));
        if (j.contains("lambda_shift")) cfg.lambda_shift = j.at("lambda_shift").get<long>();
        if (j.contains("cap")) cfg.cap = j.at("cap").get<long>();
        if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
        if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
    } catch (const Json::exception& err) {
        throw ParseError(std::string("bad config value: ") + err.what());
    }
}

}  // namespace

CommandResult execute(const JobConfig& cfg) {
    switch (cfg.command) {
        case Command::Construct:
            return cmd_construct(cfg);
        case Command::Verify:
            return cmd_verify(cfg);
        case Command::Coeffs:
            return cmd_coeffs(cfg);
        case Command::Classify:
            return cmd_classify(cfg);
    }
    throw std::logic_error("unhandled command");
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and identity checks for Askey-scheme polynomials"};
    std::string command, family, lattice, params, relation, phi, psi, output, format, config;
    long n = 0, n_max = 0, lambda_shift = 0, cap = 12;
    app.add_option("--command", command, "construct | verify | coeffs | classify");
    app.add_option("--family", family, "family name, e.g. wilson, askey-wilson");
    app.add_option("--lattice", lattice, "lattice as a JSON object");
    app.add_option("--params", params, "comma-separated rationals or a JSON list");
    app.add_option("--n", n, "degree");
    app.add_option("--n-max", n_max, "largest degree");
    app.add_option("--relation", relation, "coeffs: first | second | ttrr");
    app.add_option("--phi", phi, "classify: phi coefficients, constant first");
    app.add_option("--psi", psi, "classify: psi coefficients, constant first");
    app.add_option("--lambda-shift", lambda_shift, "verify: add this to every lambda_n");
    app.add_option("--cap", cap, "largest accepted degree");
    app.add_option("--output", output, "output path (default stdout)");
    app.add_option("--format", format, "json | csv");
    app.add_option("--config", config, "JSON config file; flags override it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        JobConfig cfg;
        if (app.count("--config")) apply_config_file(cfg, parse_json(read_file(config)));
        if (app.count("--command")) cfg.command = parse_command(command);
        if (app.count("--family")) cfg.family = family;
        if (app.count("--lattice")) cfg.lattice = parse_json(lattice);
        if (app.count("--params")) cfg.params = list_from_text(params);
        if (app.count("--n")) cfg.n = n;
        if (app.count("--n-max")) cfg.n_max = n_max;
        if (app.count("--relation")) cfg.relation = relation;
        if (app.count("--phi")) cfg.phi = Polynomial(list_from_text(phi));
        if (app.count("--psi")) cfg.psi = Polynomial(list_from_text(psi));
        if (app.count("--lambda-shift")) cfg.lambda_shift = lambda_shift;
        if (app.count("--cap")) cfg.cap = cap;
        if (app.count("--output")) cfg.output = output;
        if (app.count("--format")) cfg.format = parse_format(format);
        if (!app.count("--config") && !app.count("--command")) throw ParseError("no --command given");

        const CommandResult result = execute(cfg);
        for (const auto& line : result.failures) err << line << "\n";
        if (cfg.output.empty()) {
            out << result.text;
        } else {
            std::ofstream file(cfg.output);
            if (!file) throw ParseError("cannot write '" + cfg.output + "'");
            file << result.text;
        }
        return result.exit_code;
    } catch (const DegenerateError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const ClassificationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitClassificationScope;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIdentityFailure;
    }
}

}  // namespace orthoq
