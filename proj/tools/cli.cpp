#include "cli.hpp"

#include <annulus/error_harness.hpp>
#include <annulus/errors.hpp>
#include <annulus/torsion.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace annulus::cli {

using nlohmann::json;

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

struct RunConfig {
    int dim = 3;
    std::vector<double> radii{1.0, 2.0};
    int truncation = -1;
    std::string field;
    int order = 2;
    int levels = 4;
    std::string which;
    std::string format = "csv";
    std::string out;
};

// Minimal CSV table: header row, then rows of preformatted cells.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void write(std::ostream& os) const
    {
        write_row(os, header_);
        for(const auto& r : rows_)
            write_row(os, r);
    }

private:
    static void write_row(std::ostream& os, const std::vector<std::string>& cells)
    {
        for(std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << cells[i];
        os << '\n';
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string num(double v) { return format_double(v); }
std::string flag(bool b) { return b ? "true" : "false"; }

json json_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

SplineSettings settings_for(const RunConfig& cfg)
{
    SplineSettings s;
    s.truncation = cfg.truncation;
    return s;
}

int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err)
{
    if(cfg.out.empty()) {
        out << text;
        return ok;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if(!f) {
        err << "error: cannot open '" << cfg.out << "' for writing\n";
        return validation_error;
    }
    f << text;
    return ok;
}

std::string cmd_torsion(const RunConfig& cfg)
{
    const AnnularPartition part(cfg.radii);
    CsvTable csv({"d", "r", "R", "c_value", "H_value", "u_critical", "lower_bound", "upper_bound"});
    json annuli = json::array();
    for(std::size_t j = 0; j < part.segment_count(); ++j) {
        const auto seg = part.segment(j);
        const Annulus ann = Annulus::make(seg.r_lo, seg.r_hi, cfg.dim);
        const TorsionReport rep = torsion_constant(ann);
        csv.add({std::to_string(cfg.dim), num(ann.r), num(ann.R), num(rep.c_value), num(rep.H_value),
                 num(rep.u_critical), num(rep.lower_bound), num(rep.upper_bound)});
        annuli.push_back({{"r", ann.r},
                          {"R", ann.R},
                          {"c_value", rep.c_value},
                          {"H_value", rep.H_value},
                          {"u_critical", rep.u_critical},
                          {"lower_bound", rep.lower_bound},
                          {"upper_bound", rep.upper_bound}});
    }
    if(cfg.format == "json")
        return json{{"command", "torsion"}, {"dimension", cfg.dim}, {"annuli", annuli}}.dump(2) + "\n";
    std::ostringstream os;
    csv.write(os);
    return os.str();
}

std::string cmd_interpolate(const RunConfig& cfg, bool& passed)
{
    const TestField F = standard_field(cfg.field, cfg.dim);
    const AnnularPartition part(cfg.radii);
    const SplineSettings settings = settings_for(cfg);
    const SplineExpansion S = build_spline(F, part, cfg.order, settings);
    const double sup_err = sup_norm_error(F, S, settings.sup_grid);
    const double l2_err = l2_error(F, S, settings.l2_rule);
    const BoundKind kind = cfg.order == 2 ? BoundKind::harmonic_sup : BoundKind::biharmonic_l2;
    const BoundCertificate cert = bound_certificate(F, part, kind, settings);
    passed = cert.passed;

    if(cfg.format == "json") {
        json j{{"command", "interpolate"},
               {"field", F.name},
               {"dimension", cfg.dim},
               {"order", cfg.order},
               {"truncation", S.truncation()},
               {"radii", cfg.radii},
               {"h_max", part.h_max()},
               {"sup_error", sup_err},
               {"l2_error", l2_err},
               {"certificate",
                {{"bound", to_string(kind)},
                 {"lhs", cert.lhs},
                 {"rhs", cert.rhs},
                 {"ratio", json_number(cert.ratio)},
                 {"trivial", cert.trivial},
                 {"passed", cert.passed},
                 {"sup_ratio", cert.sup_ratio ? json_number(*cert.sup_ratio) : json(nullptr)}}}};
        return j.dump(2) + "\n";
    }
    CsvTable csv({"field", "d", "order", "truncation", "h_max", "sup_error", "l2_error", "bound", "lhs", "rhs",
                  "ratio", "trivial", "passed", "sup_ratio"});
    csv.add({F.name, std::to_string(cfg.dim), std::to_string(cfg.order), std::to_string(S.truncation()),
             num(part.h_max()), num(sup_err), num(l2_err), to_string(kind), num(cert.lhs), num(cert.rhs),
             num(cert.ratio), flag(cert.trivial), flag(cert.passed),
             cert.sup_ratio ? num(*cert.sup_ratio) : "n/a"});
    std::ostringstream os;
    csv.write(os);
    return os.str();
}

std::string cmd_convergence(const RunConfig& cfg)
{
    const TestField F = standard_field(cfg.field, cfg.dim);
    StudyKind which = cfg.order == 4 ? StudyKind::biharmonic_l2 : StudyKind::harmonic_sup;
    if(!cfg.which.empty()) {
        const auto parsed = parse_study_kind(cfg.which);
        if(!parsed)
            throw ValidationError("unknown study '" + cfg.which + "'");
        which = *parsed;
    }
    const auto rows = convergence_study(F, AnnularPartition(cfg.radii), cfg.levels, which, settings_for(cfg));

    if(cfg.format == "json") {
        json jr = json::array();
        for(const auto& r : rows)
            jr.push_back({{"level", r.level},
                          {"h_max", r.h_max},
                          {"error", r.error},
                          {"rate", r.rate ? json(*r.rate) : json(nullptr)}});
        return json{{"command", "convergence"},
                    {"field", F.name},
                    {"dimension", cfg.dim},
                    {"study", to_string(which)},
                    {"radii", cfg.radii},
                    {"rows", jr}}
                   .dump(2) + "\n";
    }
    CsvTable csv({"level", "h_max", "error", "rate"});
    for(const auto& r : rows)
        csv.add({std::to_string(r.level), num(r.h_max), num(r.error), r.rate ? num(*r.rate) : "n/a"});
    std::ostringstream os;
    csv.write(os);
    return os.str();
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--dim", cfg.dim, "Dimension d")->capture_default_str();
    sub->add_option("--radii", cfg.radii, "Comma-separated radii r_1 < ... < r_N")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
}

void add_spline(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--field", cfg.field, "Standard field")
        ->required()
        ->check(CLI::IsMember(standard_field_names()));
    sub->add_option("--truncation", cfg.truncation, "Angular truncation K (default: 16 for d=2, 8 for d=3)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--order", cfg.order, "2: harmonic spline, 4: biharmonic spline")
        ->check(CLI::IsMember({2, 4}))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Harmonic and biharmonic splines on annuli"};
    app.name("annulus");
    app.require_subcommand(1);
    RunConfig cfg;

    auto* torsion = app.add_subcommand("torsion", "Torsion constant c_d of each annulus A(r_j, r_{j+1})");
    add_common(torsion, cfg);

    auto* interp = app.add_subcommand("interpolate", "Interpolate a field and certify its error bound");
    add_common(interp, cfg);
    add_spline(interp, cfg);

    auto* conv = app.add_subcommand("convergence", "Error under repeated bisection of the partition");
    add_common(conv, cfg);
    add_spline(conv, cfg);
    conv->add_option("--levels", cfg.levels, "Number of rows (>= 3)")->capture_default_str();
    conv->add_option("--which", cfg.which, "harmonic_sup, harmonic_l2 or biharmonic_l2 (default from --order)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch(const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch(const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    }

    try {
        std::string text;
        bool passed = true;
        if(torsion->parsed())
            text = cmd_torsion(cfg);
        else if(interp->parsed())
            text = cmd_interpolate(cfg, passed);
        else
            text = cmd_convergence(cfg);
        const int rc = emit(cfg, text, out, err);
        if(rc != ok)
            return rc;
        if(!passed) {
            err << "certificate failed: error exceeds the bound by more than "
                << format_double(kCertificateSlack * 100) << "%\n";
            return certificate_failed;
        }
        return ok;
    } catch(const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch(const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch(const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
}

}  // namespace annulus::cli
