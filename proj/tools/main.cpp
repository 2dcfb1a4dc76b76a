// Command-line front end: radius tables, zero catalogs, Euler-Rayleigh
// brackets, power sums, verification battery and boundary-curve export.
//
// Exit codes: 0 success, 2 invalid parameters/usage, 3 numerical failure,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <clocale>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nradii/bounds.hpp"
#include "nradii/oracle.hpp"
#include "nradii/radii.hpp"
#include "nradii/sums.hpp"
#include "nradii/tables.hpp"
#include "nradii/zeros.hpp"

using nlohmann::ordered_json;
using namespace nradii;

namespace {

constexpr const char* kVersion = "nradii 0.1.0";

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct CommonOpts {
    double a = 2.0, b = 1.0, c = 0.0, nu = 1.5;
    std::string format = "text";
    std::string out_path;
    bool allow_unverified = false;
    bool banner = false;
};

void add_context_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--a", o.a, "coefficient a");
    cmd->add_option("--b", o.b, "coefficient b");
    cmd->add_option("--c", o.c, "coefficient c");
    cmd->add_option("--nu", o.nu, "order nu");
    cmd->add_option("--format", o.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("-o,--output", o.out_path, "write to file instead of stdout");
    cmd->add_flag("--allow-unverified", o.allow_unverified,
                  "accept orders below the admissibility threshold");
    cmd->add_flag("--banner", o.banner, "prepend a version banner");
}

EvaluationPolicy policy_from(const CommonOpts& o) {
    EvaluationPolicy pol;
    pol.allow_unverified = o.allow_unverified;
    if (const char* env = std::getenv("BESSEL_RADII_MAX_TERMS")) {
        pol.max_terms = std::atoi(env);
    }
    return pol;
}

void emit(const CommonOpts& o, const std::string& payload) {
    std::string text;
    if (o.banner) text = std::string(kVersion) + "\n";
    text += payload;
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw Error("cannot open output file: " + o.out_path);
        f << text;
    }
}

std::string unverified_warning(const EvaluationContext& ctx) {
    return ctx.verified() ? "" : "zeros-not-guaranteed-real";
}

// ---------------------------------------------------------------- radii --

struct RecordRow {
    double a, b, c, nu, beta;
    std::string norm, kind;
    RadiusResult res;
    std::string warnings;
};

std::string rows_to_csv(const std::vector<RecordRow>& rows) {
    std::ostringstream os;
    os << "a,b,c,nu,beta,norm,kind,radius,residual,bracket_lo,bracket_hi,"
          "upper_limit,warnings\n";
    for (const auto& r : rows) {
        os << fmt17(r.a) << ',' << fmt17(r.b) << ',' << fmt17(r.c) << ','
           << fmt17(r.nu) << ',' << fmt17(r.beta) << ',' << r.norm << ','
           << r.kind << ',' << fmt17(r.res.radius) << ','
           << fmt17(r.res.residual) << ',' << fmt17(r.res.bracket_lo) << ','
           << fmt17(r.res.bracket_hi) << ',' << fmt17(r.res.upper_limit) << ','
           << r.warnings << '\n';
    }
    return os.str();
}

ordered_json row_to_json(const RecordRow& r) {
    ordered_json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["c"] = r.c;
    j["nu"] = r.nu;
    j["beta"] = r.beta;
    j["norm"] = r.norm;
    j["kind"] = r.kind;
    j["radius"] = r.res.radius;
    j["residual"] = r.res.residual;
    j["bracket"] = {r.res.bracket_lo, r.res.bracket_hi};
    j["upper_limit"] = r.res.upper_limit;
    j["warnings"] = r.warnings;
    return j;
}

int cmd_radii(const CommonOpts& o, int table, bool have_query,
              const std::string& norm_s, const std::string& kind_s, double beta) {
    std::vector<RecordRow> rows;
    std::string header;
    std::string warning;

    if (table != 0) {
        const TableSpec spec = table_spec(table);
        const auto cells = generate_table(table, policy_from(o));
        for (const auto& cell : cells) {
            RecordRow r{cell.coeffs.a,
                        cell.coeffs.b,
                        cell.coeffs.c,
                        cell.nu,
                        cell.beta,
                        std::string(normalization_name(cell.norm)),
                        std::string(radius_kind_name(cell.kind)),
                        cell.result,
                        table == 6 ? "published-reference-inconsistent" : ""};
            rows.push_back(r);
        }
        std::ostringstream h;
        h << "Table " << table << ": " << radius_kind_name(spec.kind)
          << " radii of " << normalization_name(spec.norm)
          << " at nu = " << spec.nu;
        header = h.str();
        if (table == 6) warning = table6_warning();
    } else {
        if (!have_query)
            throw InvalidParameters("radii: pass --table N or --norm/--kind");
        const Normalization norm = normalization_from_name(norm_s);
        const RadiusKind kind = radius_kind_from_name(kind_s);
        EvaluationContext ctx({o.a, o.b, o.c}, o.nu, policy_from(o));
        const RadiusResult res = solve_radius(ctx, RadiusQuery{norm, kind, beta});
        std::string warn = unverified_warning(ctx);
        if (norm == Normalization::h && kind == RadiusKind::convex) {
            if (!warn.empty()) warn += ";";
            warn += "published-reference-inconsistent";
            warning = table6_warning();
        }
        rows.push_back({o.a, o.b, o.c, o.nu, beta, norm_s, kind_s, res, warn});
    }

    if (o.format == "csv") {
        std::string payload = rows_to_csv(rows);
        if (!warning.empty()) payload = "# " + warning + "\n" + payload;
        emit(o, payload);
    } else if (o.format == "json") {
        ordered_json j;
        if (!header.empty()) j["table"] = header;
        if (!warning.empty()) j["warning"] = warning;
        j["records"] = ordered_json::array();
        for (const auto& r : rows) j["records"].push_back(row_to_json(r));
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        if (!header.empty()) os << header << "\n";
        if (!warning.empty()) os << warning << "\n";
        if (table != 0) {
            os << "  a     b     c     |  beta=0    beta=0.5\n";
            for (std::size_t i = 0; i < rows.size(); i += 2) {
                const auto& r0 = rows[i];
                const auto& r5 = rows[i + 1];
                char line[128];
                std::snprintf(line, sizeof line,
                              "  %-5g %-5g %-5g |  %s    %s\n", r0.a, r0.b, r0.c,
                              fmt4(r0.res.radius).c_str(),
                              fmt4(r5.res.radius).c_str());
                os << line;
            }
        } else {
            const auto& r = rows.front();
            os << r.kind << " radius of " << r.norm << " (a=" << r.a
               << ", b=" << r.b << ", c=" << r.c << ", nu=" << r.nu
               << ", beta=" << r.beta << "): " << fmt4(r.res.radius) << "\n";
            os << "  full precision " << fmt17(r.res.radius) << ", residual "
               << fmt17(r.res.residual) << ", bracket [" << fmt17(r.res.bracket_lo)
               << ", " << fmt17(r.res.bracket_hi) << "], ceiling "
               << fmt17(r.res.upper_limit) << "\n";
            if (!r.warnings.empty()) os << "  warnings: " << r.warnings << "\n";
        }
        emit(o, os.str());
    }
    return 0;
}

// ---------------------------------------------------------------- zeros --

int cmd_zeros(const CommonOpts& o, const std::string& family_s, int count,
              double tol) {
    EvaluationContext ctx({o.a, o.b, o.c}, o.nu, policy_from(o));
    const FamilyKind kind = family_from_name(family_s);
    const ZeroCatalog cat =
        find_zeros(SeriesFamily(ctx, kind), static_cast<std::size_t>(count), tol);
    const std::string warn = unverified_warning(ctx);

    if (o.format == "csv") {
        std::ostringstream os;
        os << "a,b,c,nu,family,index,zero,warnings\n";
        for (std::size_t i = 0; i < cat.zeros.size(); ++i)
            os << fmt17(o.a) << ',' << fmt17(o.b) << ',' << fmt17(o.c) << ','
               << fmt17(o.nu) << ',' << family_s << ',' << i + 1 << ','
               << fmt17(cat.zeros[i]) << ',' << warn << '\n';
        emit(o, os.str());
    } else if (o.format == "json") {
        ordered_json j;
        j["a"] = o.a;
        j["b"] = o.b;
        j["c"] = o.c;
        j["nu"] = o.nu;
        j["family"] = family_s;
        j["zeros"] = cat.zeros;
        j["refined_tol"] = cat.refined_tol;
        j["scan_ceiling"] = cat.scan_ceiling;
        j["warnings"] = warn;
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "zeros of " << family_s << " (a=" << o.a << ", b=" << o.b
           << ", c=" << o.c << ", nu=" << o.nu << ")\n";
        if (!warn.empty()) os << "warning: " << warn << "\n";
        for (std::size_t i = 0; i < cat.zeros.size(); ++i)
            os << "  " << i + 1 << "  " << fmt4(cat.zeros[i]) << "  ("
               << fmt17(cat.zeros[i]) << ")\n";
        emit(o, os.str());
    }
    return 0;
}

// --------------------------------------------------------------- bounds --

int cmd_bounds(const CommonOpts& o, const std::string& target_s, int kmax,
               bool audit) {
    EvaluationContext ctx({o.a, o.b, o.c}, o.nu, policy_from(o));
    if (audit) {
        emit(o, format_audit_report(ctx));
        return 0;
    }
    const BoundTarget target = bound_target_from_name(target_s);
    const BoundBracketSet set = bound_brackets(ctx, target, kmax);

    if (o.format == "csv") {
        std::ostringstream os;
        os << "a,b,c,nu,target,k,lower,upper\n";
        for (const auto& br : set.brackets)
            os << fmt17(o.a) << ',' << fmt17(o.b) << ',' << fmt17(o.c) << ','
               << fmt17(o.nu) << ',' << target_s << ',' << br.k << ','
               << fmt17(br.lower) << ',' << fmt17(br.upper) << '\n';
        if (set.kreyszig_todd)
            os << fmt17(o.a) << ',' << fmt17(o.b) << ',' << fmt17(o.c) << ','
               << fmt17(o.nu) << ',' << target_s << ",kreyszig_todd,,"
               << fmt17(*set.kreyszig_todd) << '\n';
        emit(o, os.str());
    } else if (o.format == "json") {
        ordered_json j;
        j["a"] = o.a;
        j["b"] = o.b;
        j["c"] = o.c;
        j["nu"] = o.nu;
        j["target"] = target_s;
        j["brackets"] = ordered_json::array();
        for (const auto& br : set.brackets)
            j["brackets"].push_back({{"k", br.k},
                                     {"lower", br.lower},
                                     {"upper", br.upper}});
        if (set.kreyszig_todd) j["kreyszig_todd"] = *set.kreyszig_todd;
        j["precision_loss"] = set.precision_loss;
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "brackets for " << target_s << " (a=" << o.a << ", b=" << o.b
           << ", c=" << o.c << ", nu=" << o.nu << ")\n";
        for (const auto& br : set.brackets) {
            char line[128];
            std::snprintf(line, sizeof line, "  k=%d  [%.5f, %.5f]\n", br.k,
                          br.lower, br.upper);
            os << line;
        }
        if (set.kreyszig_todd)
            os << "  kreyszig-todd ceiling " << fmt4(*set.kreyszig_todd) << "\n";
        if (set.precision_loss) os << "  warning: precision loss in Newton sums\n";
        emit(o, os.str());
    }
    return 0;
}

// ----------------------------------------------------------------- sums --

int cmd_sums(const CommonOpts& o, int nmax, bool alternating) {
    EvaluationContext ctx({o.a, o.b, o.c}, o.nu, policy_from(o));
    const SymmetricData data = power_sums_det(ctx, nmax, alternating);

    if (o.format == "csv") {
        std::ostringstream os;
        os << "a,b,c,nu,alternating,n,e_n,s_newton,s_det,s_closed\n";
        for (int n = 1; n <= nmax; ++n)
            os << fmt17(o.a) << ',' << fmt17(o.b) << ',' << fmt17(o.c) << ','
               << fmt17(o.nu) << ',' << (alternating ? 1 : 0) << ',' << n << ','
               << fmt17(data.e[n - 1]) << ',' << fmt17(data.s_newton[n - 1])
               << ',' << fmt17(data.s_det[n - 1]) << ','
               << fmt17(data.s_closed[n - 1]) << '\n';
        emit(o, os.str());
    } else if (o.format == "json") {
        ordered_json j;
        j["a"] = o.a;
        j["b"] = o.b;
        j["c"] = o.c;
        j["nu"] = o.nu;
        j["alternating"] = alternating;
        j["e"] = data.e;
        j["s_newton"] = data.s_newton;
        j["s_det"] = data.s_det;
        j["s_closed"] = data.s_closed;
        j["precision_loss"] = data.precision_loss;
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "power sums (a=" << o.a << ", b=" << o.b << ", c=" << o.c
           << ", nu=" << o.nu << (alternating ? ", alternating" : "") << ")\n";
        os << "  n   e_n                 s_n (newton)        s_n (det)           "
              "s_n (closed form)\n";
        for (int n = 1; n <= nmax; ++n) {
            char line[160];
            std::snprintf(line, sizeof line,
                          "  %-3d %-19.12g %-19.12g %-19.12g %-19.12g\n", n,
                          data.e[n - 1], data.s_newton[n - 1], data.s_det[n - 1],
                          data.s_closed[n - 1]);
            os << line;
        }
        emit(o, os.str());
    }
    return 0;
}

// --------------------------------------------------------------- verify --

int cmd_verify(const CommonOpts& o) {
    EvaluationContext ctx({o.a, o.b, o.c}, o.nu, policy_from(o));
    const auto reports = oracle::run_verification(ctx);
    bool all_pass = true;
    std::ostringstream os;
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass;
        char line[256];
        std::snprintf(line, sizeof line, "%-4s %-36s computed=%-22.15g ref=%-22.15g %s\n",
                      rep.pass ? "ok" : "FAIL", rep.name.c_str(), rep.computed,
                      rep.reference, rep.notes.c_str());
        os << line;
    }
    os << (all_pass ? "verification passed\n" : "verification FAILED\n");
    emit(o, os.str());
    return all_pass ? 0 : 4;
}

// ------------------------------------------------------------------ map --

std::complex<double> horner_psi(const SeriesFamily& psi, std::complex<double> t,
                                int terms) {
    std::complex<double> acc = 0.0;
    for (int n = terms - 1; n >= 0; --n)
        acc = acc * t + psi.coefficient(static_cast<std::size_t>(n));
    return acc;
}

int cmd_map(const CommonOpts& o, const std::string& norm_s,
            std::optional<double> radius, int samples, std::string csv_path) {
    EvaluationContext ctx({o.a, o.b, o.c}, o.nu, policy_from(o));
    const Normalization norm = normalization_from_name(norm_s);
    if (samples < 8) throw InvalidParameters("map: samples must be >= 8");
    if (o.out_path.empty())
        throw InvalidParameters("map: -o output.svg is required");

    int fpow = 0;
    if (norm == Normalization::f) {
        const double inv = 1.0 / ctx.nu();
        fpow = static_cast<int>(std::lround(inv));
        if (fpow < 1 || std::abs(inv - fpow) > 1e-9)
            throw InvalidParameters(
                "map: the f normalization is limited to integer 1/nu "
                "(fractional powers are not single-valued)");
    }

    const double r =
        radius ? *radius
               : solve_radius(ctx, RadiusQuery{norm, RadiusKind::starlike, 0.0})
                     .radius;

    SeriesFamily psi(ctx, FamilyKind::psi);
    const int terms = std::max(
        30, static_cast<int>(std::ceil((norm == Normalization::h ? r : r * r))) + 30);

    std::vector<double> theta(static_cast<std::size_t>(samples));
    std::vector<std::complex<double>> pts(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double th = 2.0 * 3.14159265358979323846 * i / samples;
        const std::complex<double> z = std::polar(r, th);
        std::complex<double> w;
        switch (norm) {
            case Normalization::g: w = z * horner_psi(psi, z * z, terms); break;
            case Normalization::h: w = z * horner_psi(psi, z, terms); break;
            case Normalization::f: {
                std::complex<double> base = horner_psi(psi, z * z, terms);
                std::complex<double> p = 1.0;
                for (int k = 0; k < fpow; ++k) p *= base;
                w = z * p;
                break;
            }
        }
        theta[static_cast<std::size_t>(i)] = th;
        pts[static_cast<std::size_t>(i)] = w;
    }

    // csv of (theta, re, im)
    if (csv_path.empty()) {
        csv_path = o.out_path;
        const auto dot = csv_path.rfind('.');
        if (dot != std::string::npos) csv_path.resize(dot);
        csv_path += ".csv";
    }
    {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw Error("cannot open output file: " + csv_path);
        f << "theta,re,im\n";
        for (int i = 0; i < samples; ++i)
            f << fmt17(theta[static_cast<std::size_t>(i)]) << ','
              << fmt17(pts[static_cast<std::size_t>(i)].real()) << ','
              << fmt17(pts[static_cast<std::size_t>(i)].imag()) << '\n';
    }

    // svg path (fixed formatting keeps the bytes deterministic)
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (const auto& w : pts) {
        min_x = std::min(min_x, w.real());
        max_x = std::max(max_x, w.real());
        min_y = std::min(min_y, w.imag());
        max_y = std::max(max_y, w.imag());
    }
    const double span = std::max(max_x - min_x, max_y - min_y);
    const double margin = 0.05 * span;
    char head[256];
    std::snprintf(head, sizeof head,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                  "viewBox=\"%.6f %.6f %.6f %.6f\">\n",
                  min_x - margin, -max_y - margin, (max_x - min_x) + 2 * margin,
                  (max_y - min_y) + 2 * margin);
    std::ostringstream svg;
    svg << head;
    svg << "<path fill=\"none\" stroke=\"black\" stroke-width=\""
        << fmt4(span / 300.0) << "\" d=\"";
    for (int i = 0; i < samples; ++i) {
        char seg[64];
        std::snprintf(seg, sizeof seg, "%c%.6f %.6f ", i == 0 ? 'M' : 'L',
                      pts[static_cast<std::size_t>(i)].real(),
                      -pts[static_cast<std::size_t>(i)].imag());
        svg << seg;
    }
    svg << "Z\"/>\n</svg>\n";
    {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw Error("cannot open output file: " + o.out_path);
        f << svg.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"radii of starlikeness and convexity for combinations "
                 "a z^2 J'' + b z J' + c J of Bessel functions"};
    app.require_subcommand(1);

    CommonOpts radii_o, zeros_o, bounds_o, sums_o, verify_o, map_o;

    // radii
    auto* radii_cmd = app.add_subcommand("radii", "solve radius problems");
    add_context_flags(radii_cmd, radii_o);
    int table = 0;
    std::string norm_s = "g", kind_s = "starlike";
    double beta = 0.0;
    radii_cmd->add_option("--table", table, "reproduce reference table 1..6")
        ->check(CLI::Range(1, 6));
    radii_cmd->add_option("--norm", norm_s, "normalization f, g or h")
        ->check(CLI::IsMember({"f", "g", "h"}));
    radii_cmd->add_option("--kind", kind_s, "starlike or convex")
        ->check(CLI::IsMember({"starlike", "convex"}));
    radii_cmd->add_option("--beta", beta, "order beta in [0,1)");

    // zeros
    auto* zeros_cmd = app.add_subcommand("zeros", "zero catalogs");
    add_context_flags(zeros_cmd, zeros_o);
    std::string family_s = "psi";
    int count = 5;
    double ztol = 1e-12;
    zeros_cmd->add_option("--family", family_s,
                          "psi, psi1, gprime, hprime, delta or theta");
    zeros_cmd->add_option("--count", count, "number of zeros")->check(CLI::PositiveNumber);
    zeros_cmd->add_option("--tol", ztol, "bisection tolerance");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Euler-Rayleigh brackets");
    add_context_flags(bounds_cmd, bounds_o);
    std::string target_s = "starlike_g";
    int kmax = 4;
    bool audit = false;
    bounds_cmd->add_option("--target", target_s,
                           "starlike_g, starlike_h, convex_g or convex_h");
    bounds_cmd->add_option("--k", kmax, "bracket orders 1..k");
    bounds_cmd->add_flag("--audit", audit,
                         "emit the published-closed-form audit report");

    // sums
    auto* sums_cmd = app.add_subcommand("sums", "zero power sums");
    add_context_flags(sums_cmd, sums_o);
    int nmax = 4;
    bool alternating = false;
    sums_cmd->add_option("--n", nmax, "compute s_1..s_n");
    sums_cmd->add_flag("--alternating", alternating,
                       "signed 4^n-scaled variant");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle battery");
    add_context_flags(verify_cmd, verify_o);

    // map
    auto* map_cmd = app.add_subcommand("map", "boundary-curve export (svg+csv)");
    add_context_flags(map_cmd, map_o);
    std::string map_norm = "g";
    double map_radius = -1.0;
    int samples = 720;
    std::string csv_path;
    map_cmd->add_option("--norm", map_norm, "normalization f, g or h");
    map_cmd->add_option("--radius", map_radius,
                        "circle radius (defaults to the starlike radius)");
    map_cmd->add_option("--samples", samples, "points on the circle");
    map_cmd->add_option("--csv", csv_path, "csv output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (radii_cmd->parsed()) {
            const bool have_norm = radii_cmd->count("--norm") > 0 ||
                                   radii_cmd->count("--kind") > 0;
            return cmd_radii(radii_o, table, have_norm, norm_s, kind_s, beta);
        }
        if (zeros_cmd->parsed()) return cmd_zeros(zeros_o, family_s, count, ztol);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds_o, target_s, kmax, audit);
        if (sums_cmd->parsed()) return cmd_sums(sums_o, nmax, alternating);
        if (verify_cmd->parsed()) return cmd_verify(verify_o);
        if (map_cmd->parsed())
            return cmd_map(map_o, map_norm,
                           map_radius > 0 ? std::optional<double>(map_radius)
                                          : std::nullopt,
                           samples, csv_path);
    } catch (const InvalidParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
