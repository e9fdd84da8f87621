#include "ellipt/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ellipt/elliptic_core.hpp"
#include "ellipt/errors.hpp"
#include "ellipt/extremal.hpp"
#include "ellipt/jacobi.hpp"
#include "ellipt/spectral.hpp"
#include "ellipt/verify.hpp"

namespace ellipt {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json complex_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

void write_json(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) os << ",\n";
            first = false;
            os << inner << Json(it.key()).dump() << ": ";
            write_json(os, it.value(), indent + 1);
        }
        os << "\n" << pad << "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            os << "[]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ",\n";
            os << inner;
            write_json(os, j[i], indent + 1);
        }
        os << "\n" << pad << "]";
    } else if (j.is_number_float()) {
        const double v = j.get<double>();
        os << (std::isfinite(v) ? format_number(v) : "null");
    } else {
        os << j.dump();
    }
}

void emit(std::ostream& os, const Json& j) {
    write_json(os, j, 0);
    os << "\n";
}

void require(bool ok, const char* message) {
    if (!ok) throw UsageError(message);
}

void require_unit_u(double u, const char* what) {
    require(u > 0.0 && u < 1.0, what);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open output file " + path);
    return f;
}

// ------------------------------------------------------------------ commands

struct EvalArgs {
    double u = 0.5;
    double m_re = 0.0;
    double m_im = 0.0;
    std::string side;
};

void run_eval(const EvalArgs& a, std::ostream& out) {
    require_unit_u(a.u, "--u must lie in (0, 1)");
    Side side = Side::none;
    if (a.side == "above") side = Side::above;
    else if (a.side == "below") side = Side::below;
    else require(a.side.empty(), "--side must be above or below");
    const Parameter p(cplx(a.m_re, a.m_im), side);
    const EllipticContext ctx = build_context(p);

    cplx s, c, d;
    if (p.is_one()) {
        s = 1.0;
        c = 0.0;
        d = 0.0;
    } else if (p.on_cut()) {
        const JacobiTriple t = cut_triple(a.u, ctx);
        s = t.s, c = t.c, d = t.d;
    } else {
        const JacobiTriple t = jacobi_triple(a.u, ctx);
        s = t.s, c = t.c, d = t.d;
    }
    const SigmaValue sv = sigma(a.u, p);
    Json j;
    j["u"] = a.u;
    j["m"] = complex_json(p.m());
    j["side"] = std::string(to_string(p.side()));
    j["regime"] = std::string(to_string(p.regime()));
    j["K"] = complex_json(ctx.K);
    j["Kprime"] = complex_json(ctx.Kprime);
    j["q"] = complex_json(ctx.q);
    j["sn"] = complex_json(s);
    j["cn"] = complex_json(c);
    j["dn"] = complex_json(d);
    j["sigma"] = sv.sigma;
    emit(out, j);
}

struct RegionArgs {
    double u = 0.7;
    std::string window = "-0.5,2.5,-1.5,1.5";
    double step = 0.01;
    std::string out;
};

Window parse_window(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            require(used == item.size(), "--window expects X0,X1,Y0,Y1");
        } catch (const std::logic_error&) {
            throw UsageError("--window expects X0,X1,Y0,Y1");
        }
    }
    require(v.size() == 4, "--window expects X0,X1,Y0,Y1");
    require(v[1] > v[0] && v[3] > v[2], "--window needs X0 < X1 and Y0 < Y1");
    return {v[0], v[1], v[2], v[3]};
}

void write_grid(std::ostream& os, const RegionGrid& g) {
    os << "re_m,im_m,sigma\n";
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            os << format_number(g.x(ix)) << ',' << format_number(g.y(iy)) << ',' << format_number(g.at(ix, iy))
               << '\n';
        }
    }
}

void write_contour(std::ostream& os, const RegionGrid& g) {
    os << "polyline_id,vertex_index,re_m,im_m\n";
    for (std::size_t p = 0; p < g.contour.size(); ++p) {
        const auto& line = g.contour[p].vertices;
        for (std::size_t i = 0; i < line.size(); ++i) {
            os << p << ',' << i << ',' << format_number(line[i].real()) << ',' << format_number(line[i].imag())
               << '\n';
        }
    }
}

std::string contour_path(const std::string& grid_path) {
    const std::string ext = ".csv";
    if (grid_path.size() > ext.size() && grid_path.compare(grid_path.size() - ext.size(), ext.size(), ext) == 0) {
        return grid_path.substr(0, grid_path.size() - ext.size()) + ".contour.csv";
    }
    return grid_path + ".contour.csv";
}

void run_region(const RegionArgs& a, std::ostream& out) {
    require_unit_u(a.u, "--u must lie in (0, 1)");
    require(a.step > 0.0, "--step must be positive");
    const Window w = parse_window(a.window);
    const RegionGrid g = region_scan(a.u, w, a.step);
    if (a.out.empty()) {
        write_grid(out, g);
        out << '\n';
        write_contour(out, g);
        return;
    }
    const std::string cpath = contour_path(a.out);
    std::ofstream grid_file = open_output(a.out);
    std::ofstream contour_file = open_output(cpath);
    write_grid(grid_file, g);
    write_contour(contour_file, g);
    Json j;
    j["grid"] = a.out;
    j["contour"] = cpath;
    j["nodes"] = g.values.size();
    j["polylines"] = g.contour.size();
    emit(out, j);
}

struct MaximaArgs {
    double u_min = 0.51;
    double u_max = 0.99;
    double u_step = 0.01;
};

void run_maxima(const MaximaArgs& a, std::ostream& out) {
    require_unit_u(a.u_min, "--u-min must lie in (0, 1)");
    require_unit_u(a.u_max, "--u-max must lie in (0, 1)");
    require(a.u_max >= a.u_min, "--u-max must not be below --u-min");
    require(a.u_step > 0.0, "--u-step must be positive");
    out << "u,m_tilde,m_star,sigma_star\n";
    for (const MaximaRow& r : maxima_table(a.u_min, a.u_max, a.u_step)) {
        out << format_number(r.u) << ',' << (std::isnan(r.m_tilde) ? "nan" : format_number(r.m_tilde)) << ','
            << format_number(r.m_star) << ',' << format_number(r.sigma_star) << '\n';
    }
}

struct GlobalArgs {
    double refine = 1e-8;
    double u_min = 0.5;
    double u_max = 1.0;
    double u_step = 0.01;
};

void run_global(const GlobalArgs& a, std::ostream& out) {
    require(a.refine > 0.0, "--refine must be positive");
    require(a.u_step > 0.0, "--u-step must be positive");
    require(a.u_min >= 0.0 && a.u_max <= 1.0 && a.u_max > a.u_min, "need 0 <= --u-min < --u-max <= 1");
    const GlobalMaximum g = global_max({a.u_min, a.u_max, a.u_step}, a.refine);
    Json j;
    j["u_star"] = g.u_star;
    j["m_star"] = g.m_star;
    j["sigma_star"] = g.sigma_star;
    emit(out, j);
}

struct ProfileArgs {
    double u = 0.7;
    double m_min = 1.0;
    double m_max = 2.0;
    double step = 0.001;
};

void run_profile(const ProfileArgs& a, std::ostream& out) {
    require_unit_u(a.u, "--u must lie in (0, 1)");
    require(a.step > 0.0, "--step must be positive");
    require(a.m_max > a.m_min, "--m-max must exceed --m-min");
    const Profile p = profile(a.u, a.m_min, a.m_max, a.step);
    out << "m,sigma\n";
    for (std::size_t i = 0; i < p.m.size(); ++i) out << format_number(p.m[i]) << ',' << format_number(p.sigma[i]) << '\n';
}

int run_verify(const std::string& name, std::ostream& out) {
    const std::optional<Suite> suite = parse_suite(name);
    require(suite.has_value(), "--suite must be identities, theorem1, asymptotics, spectral or all");
    const std::vector<CheckResult> results = run_suite(*suite);
    Json checks = Json::array();
    for (const CheckResult& r : results) {
        checks.push_back(Json{{"check_name", r.name},
                              {"samples", r.samples},
                              {"violations", r.violations},
                              {"max_error", r.max_error},
                              {"tolerance", r.tolerance},
                              {"pass", r.pass}});
    }
    const bool ok = all_pass(results);
    Json j;
    j["suite"] = std::string(to_string(*suite));
    j["pass"] = ok;
    j["checks"] = checks;
    emit(out, j);
    return ok ? 0 : 1;
}

struct SpectralArgs {
    double k_re = 0.5;
    double k_im = 0.0;
    double z_re = 0.7;
    double z_im = 0.2;
    int n_max = 20;
    int order = 16;
};

void run_spectral(const SpectralArgs& a, std::ostream& out) {
    const cplx k(a.k_re, a.k_im);
    require(std::abs(k) <= 1.0 && k != 1.0 && k != -1.0, "k must lie in the closed unit disk, k != +-1");
    require(a.n_max >= 3, "--n-max must be at least 3");
    require(a.order >= 2 && a.order <= 64, "--order must lie in [2, 64]");
    const cplx z(a.z_re, a.z_im);
    const QuadratureSpec spec{a.order, 4, true};
    const VSequence v = v_sequence(z, k, a.n_max, spec);
    const JacobiResidual r = jacobi_residual(k, z, a.n_max, spec);
    Json entries = Json::array();
    for (cplx e : v.entries) entries.push_back(complex_json(e));
    Json rows = Json::array();
    for (cplx e : r.rows) rows.push_back(complex_json(e));
    Json j;
    j["k"] = complex_json(k);
    j["z"] = complex_json(z);
    j["m"] = complex_json(v.m);
    j["n_max"] = a.n_max;
    j["order"] = a.order;
    j["v"] = entries;
    j["residuals"] = rows;
    j["rhs_check"] = complex_json(r.rhs_check);
    j["max_interior_residual"] = r.max_interior();
    emit(out, j);
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jacobian elliptic functions with complex parameter: evaluation, extremal analysis, checks"};
    app.require_subcommand(1);

    EvalArgs eval;
    auto* c_eval = app.add_subcommand("eval", "sn, cn, dn, K, q and sigma at one (u, m)");
    c_eval->add_option("--u", eval.u, "u in (0, 1)")->required();
    c_eval->add_option("--m-re", eval.m_re, "Re m");
    c_eval->add_option("--m-im", eval.m_im, "Im m");
    c_eval->add_option("--side", eval.side, "above|below, for real m > 1");

    RegionArgs region;
    auto* c_region = app.add_subcommand("region", "sigma on a grid of the m-plane and its level set sigma = 1");
    c_region->add_option("--u", region.u, "u in (0, 1)")->required();
    c_region->add_option("--window", region.window, "X0,X1,Y0,Y1");
    c_region->add_option("--step", region.step, "grid spacing");
    c_region->add_option("--out", region.out, "grid CSV path; the contour goes to <stem>.contour.csv");

    MaximaArgs maxima;
    auto* c_maxima = app.add_subcommand("maxima", "m~(u), m*(u) and sigma(u, m*(u)) over a u-range");
    c_maxima->add_option("--u-min", maxima.u_min);
    c_maxima->add_option("--u-max", maxima.u_max);
    c_maxima->add_option("--u-step", maxima.u_step);

    GlobalArgs global;
    auto* c_global = app.add_subcommand("global-max", "global maximum of sigma over (u, m)");
    c_global->add_option("--refine", global.refine, "bracket width for the u refinement");
    c_global->add_option("--u-min", global.u_min);
    c_global->add_option("--u-max", global.u_max);
    c_global->add_option("--u-step", global.u_step);

    ProfileArgs prof;
    auto* c_profile = app.add_subcommand("profile", "sigma(u, m) along a real m-segment");
    c_profile->add_option("--u", prof.u, "u in (0, 1)")->required();
    c_profile->add_option("--m-min", prof.m_min);
    c_profile->add_option("--m-max", prof.m_max);
    c_profile->add_option("--step", prof.step);

    std::string suite = "all";
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite, "identities|theorem1|asymptotics|spectral|all");

    SpectralArgs spec;
    auto* c_spectral = app.add_subcommand("spectral", "v-sequence and Jacobi-matrix residuals");
    c_spectral->add_option("--k-re", spec.k_re);
    c_spectral->add_option("--k-im", spec.k_im);
    c_spectral->add_option("--z-re", spec.z_re);
    c_spectral->add_option("--z-im", spec.z_im);
    c_spectral->add_option("--n-max", spec.n_max);
    c_spectral->add_option("--order", spec.order);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_eval->parsed()) run_eval(eval, out);
        else if (c_region->parsed()) run_region(region, out);
        else if (c_maxima->parsed()) run_maxima(maxima, out);
        else if (c_global->parsed()) run_global(global, out);
        else if (c_profile->parsed()) run_profile(prof, out);
        else if (c_verify->parsed()) return run_verify(suite, out);
        else if (c_spectral->parsed()) run_spectral(spec, out);
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ellipt
