// arakelov-zeta: command-line front end to the library.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "arakelov/numfield.hpp"
#include "arakelov/qseries.hpp"
#include "arakelov/semigroup.hpp"
#include "arakelov/verify.hpp"
#include "arakelov/zeroscan.hpp"
#include "arakelov/zeta2.hpp"

namespace az = arakelov;
using json = nlohmann::json;
using az::cplx;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kUsage = 2, kNumerical = 3 };

struct RunConfig {
    int precision_bits = 128;
    double tol = 1e-12;
    int threads = 1;
    std::string format = "auto";
    std::string out;
};

// Values from the file named by ARAKELOV_ZETA_CONFIG; flags applied later win.
RunConfig load_config_file() {
    RunConfig cfg;
    const char* path = std::getenv("ARAKELOV_ZETA_CONFIG");
    if (!path || !*path) return cfg;
    std::ifstream in(path);
    if (!in) throw az::ConfigurationError(std::string("cannot open config file ") + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw az::ConfigurationError(std::string("config file: ") + e.what());
    }
    cfg.precision_bits = j.value("precision_bits", cfg.precision_bits);
    cfg.tol = j.value("tol", cfg.tol);
    cfg.threads = j.value("threads", j.value("thread_count", cfg.threads));
    cfg.format = j.value("format", j.value("output_format", cfg.format));
    cfg.out = j.value("out", j.value("output_path", cfg.out));
    return cfg;
}

// Accepts "x", "x,y" or "x+yi" style input.
cplx parse_complex(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t += ch;
    if (t.empty()) throw az::ConfigurationError("empty complex number");
    try {
        const auto comma = t.find(',');
        if (comma != std::string::npos) return {std::stod(t.substr(0, comma)), std::stod(t.substr(comma + 1))};
        if (t.back() == 'i' || t.back() == 'j') {
            const std::string body = t.substr(0, t.size() - 1);
            size_t split = std::string::npos;
            for (size_t k = body.size(); k-- > 1;)
                if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                    split = k;
                    break;
                }
            if (split == std::string::npos) {
                const std::string im = body.empty() || body == "+" ? "1" : body == "-" ? "-1" : body;
                return {0.0, std::stod(im)};
            }
            std::string im = body.substr(split);
            if (im == "+" || im == "-") im += "1";
            return {std::stod(body.substr(0, split)), std::stod(im)};
        }
        size_t used = 0;
        const double re = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return {re, 0.0};
    } catch (const std::logic_error&) {
        throw az::ConfigurationError("cannot parse complex number '" + text + "'");
    }
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// Output sink: stdout or --out file.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw az::ConfigurationError("cannot open output file " + path);
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string resolve_format(const RunConfig& cfg, const std::string& fallback) {
    const std::string f = cfg.format == "auto" ? fallback : cfg.format;
    if (f != "csv" && f != "jsonl") throw az::ConfigurationError("--format must be csv or jsonl");
    return f;
}

void gnuplot_script(const std::string& data, const std::string& using_clause, const std::string& title) {
    std::cout << "set datafile separator ','\n"
              << "set key off\nset title '" << title << "'\n"
              << "plot '" << (data.empty() ? "data.csv" : data) << "' every ::1 using " << using_clause
              << " with lines\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-variable zeta functions of Q and imaginary quadratic fields"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "arakelov-zeta 0.1.0");

    RunConfig cfg;
    try {
        cfg = load_config_file();
    } catch (const az::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    app.add_option("--precision", cfg.precision_bits, "bits for multiprecision paths")->check(CLI::Range(53, 4096));
    app.add_option("--tol", cfg.tol, "target absolute tolerance")->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--format", cfg.format, "csv or jsonl (default depends on the command)");
    app.add_option("--out", cfg.out, "output file (default stdout)");

    std::string w_text = "1", s_text, v_text;
    double u = 1.0, v = 0.0, T = 100.0, tmax = 30.0, tmin = 0.0, step = 0.1, u0 = 1.0, u1 = 2.0, xmax = 10.0;
    int steps = 100, m_max = 20, k_max = 6, disc = -4;
    bool critical = false, gnuplot = false, verbose = false;
    std::vector<std::string> seeds;
    std::string suite = "all";

    auto* eval = app.add_subcommand("eval", "evaluate Z and xi at a point, or along the critical line");
    eval->add_option("--w", w_text, "w (x, x,y or x+yi)");
    eval->add_option("--s", s_text, "s (x, x,y or x+yi)");
    eval->add_flag("--critical-line", critical, "scan Z(w, w/2 + it) for t in [0, tmax]");
    eval->add_option("--tmax", tmax, "largest t for --critical-line")->check(CLI::NonNegativeNumber);
    eval->add_option("--step", step, "t spacing for --critical-line")->check(CLI::PositiveNumber);
    eval->add_flag("--gnuplot", gnuplot, "print a gnuplot script for the --out data instead");

    auto* zeros = app.add_subcommand("zeros", "locate zeros of xi(u, .) with tmin < Im s < tmax");
    zeros->add_option("--u", u, "real slice parameter")->required();
    zeros->add_option("--tmax", tmax, "upper ordinate")->check(CLI::PositiveNumber);
    zeros->add_option("--tmin", tmin, "lower ordinate");

    auto* count = app.add_subcommand("count", "count zeros with |Im s| <= T by the argument principle");
    count->add_option("--u", u, "real slice parameter")->required();
    count->add_option("--T", T, "height")->check(CLI::PositiveNumber);

    auto* track = app.add_subcommand("track", "follow zeros as u varies");
    track->add_option("--u0", u0, "starting u");
    track->add_option("--u1", u1, "final u");
    track->add_option("--seed", seeds, "starting zero 're,im' (repeatable)")->required();
    track->add_option("--steps", steps, "number of u steps")->check(CLI::Range(1, 100000));
    track->add_flag("--gnuplot", gnuplot, "print a gnuplot script for the --out data instead");

    auto* verify = app.add_subcommand("verify", "replay the acceptance criteria");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_flag("--verbose", verbose, "show passing checks too");

    auto* coeffs = app.add_subcommand("coefficients", "CSV of the integer polynomials c*_m(w)");
    coeffs->add_option("--m", m_max, "largest m")->check(CLI::Range(1, 2000));

    auto* dens = app.add_subcommand("density", "semigroup density p_{u,v}(x) on a grid");
    dens->add_option("--u", u, "cone parameter u > 0")->required();
    dens->add_option("--v", v, "cone parameter |v| < u");
    dens->add_option("--xmax", xmax, "grid half-width")->check(CLI::PositiveNumber);
    dens->add_option("--step", step, "grid spacing")->check(CLI::PositiveNumber);

    auto* cum = app.add_subcommand("cumulants", "exact cumulant and moment polynomials");
    cum->add_option("--k", k_max, "largest order")->check(CLI::Range(1, 40));

    auto* fields = app.add_subcommand("fields", "field invariants, or a sign scan of xi_K(0, it)");
    fields->add_option("--disc", disc, "field discriminant (class number one)");
    fields->add_option("--tmax", tmax, "sign scan up to this t (0: invariants table only)");
    fields->add_option("--step", step, "sign scan spacing")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        az::EvalContext ctx;
        ctx.precision_bits = cfg.precision_bits;
        ctx.tol = cfg.tol;
        ctx.threads = cfg.threads;
        ctx.validate();

        if (*eval) {
            const cplx w = parse_complex(w_text);
            if (critical) {
                const std::string fmt = resolve_format(cfg, "jsonl");
                if (gnuplot) {
                    gnuplot_script(cfg.out, "1:2", "Re Z(w, w/2 + it), CSV output");
                    return kOk;
                }
                const long n = long(std::floor(tmax / step + 1e-9)) + 1;
                std::vector<az::Zeta2Value> vals(static_cast<size_t>(n));
                az::parallel_for(n, ctx.threads, [&](long k) {
                    vals[size_t(k)] = az::Z_from_xi(w, 0.5 * w + cplx(0.0, step * double(k)), ctx);
                });
                Sink sink(cfg.out);
                if (fmt == "csv") sink.os() << "t,Z_re,Z_im,error\n";
                for (long k = 0; k < n; ++k) {
                    const double t = step * double(k);
                    const auto& z = vals[size_t(k)];
                    if (fmt == "csv")
                        sink.os() << num(t) << ',' << num(z.value.real()) << ',' << num(z.value.imag()) << ','
                                  << num(z.quadrature_error_estimate) << '\n';
                    else
                        sink.os() << json{{"t", t}, {"Z", cjson(z.value)}, {"error", z.quadrature_error_estimate}}.dump()
                                  << '\n';
                }
                return kOk;
            }
            if (s_text.empty()) throw az::ConfigurationError("eval needs --s (or --critical-line)");
            const cplx s = parse_complex(s_text);
            const az::Zeta2Value x = az::xi_value(w, s, ctx);
            json out{{"w", cjson(w)}, {"s", cjson(s)}, {"xi", cjson(x.value)}, {"xi_error", x.quadrature_error_estimate}};
            // Z is identically zero at w = 0 and has poles at s = 0, w; xi is still reported there.
            if (w != cplx(0.0) && s != cplx(0.0) && s != w) {
                az::Zeta2Value z;
                try {
                    z = az::Z(w, s, ctx);
                } catch (const az::RegionError&) {
                    z = az::Z_continued(w, s, ctx);
                }
                out["Z"] = cjson(z.value);
                out["Z_error"] = z.quadrature_error_estimate;
                out["region"] = az::to_string(z.region);
            }
            Sink sink(cfg.out);
            if (resolve_format(cfg, "jsonl") == "csv") {
                sink.os() << "w_re,w_im,s_re,s_im,xi_re,xi_im,xi_error,Z_re,Z_im,Z_error\n"
                          << num(w.real()) << ',' << num(w.imag()) << ',' << num(s.real()) << ',' << num(s.imag()) << ','
                          << num(x.value.real()) << ',' << num(x.value.imag()) << ',' << num(x.quadrature_error_estimate);
                if (out.contains("Z"))
                    sink.os() << ',' << num(out["Z"][0].get<double>()) << ',' << num(out["Z"][1].get<double>()) << ','
                              << num(out["Z_error"].get<double>());
                else
                    sink.os() << ",,,";
                sink.os() << '\n';
            } else {
                sink.os() << out.dump() << '\n';
            }
            return kOk;
        }

        if (*zeros) {
            const double half = 0.5 * u + 8.0;
            auto found = az::find_zeros(u, {0.5 * u - half - 0.0173, 0.5 * u + half + 0.0137, tmin, tmax}, ctx);
            std::sort(found.begin(), found.end(), [](const az::ZeroRecord& a, const az::ZeroRecord& b) {
                return a.s.imag() != b.s.imag() ? a.s.imag() < b.s.imag() : a.s.real() < b.s.real();
            });
            Sink sink(cfg.out);
            const std::string fmt = resolve_format(cfg, "jsonl");
            if (fmt == "csv") sink.os() << "u,re,im,multiplicity,residual,converged\n";
            for (const auto& z : found) {
                if (fmt == "csv")
                    sink.os() << num(u) << ',' << num(z.s.real()) << ',' << num(z.s.imag()) << ',' << z.multiplicity << ','
                              << num(z.residual) << ',' << (z.converged ? 1 : 0) << '\n';
                else
                    sink.os() << json{{"u", u},
                                      {"s", cjson(z.s)},
                                      {"multiplicity", z.multiplicity},
                                      {"residual", z.residual},
                                      {"converged", z.converged},
                                      {"contour", {z.contour.re0, z.contour.re1, z.contour.im0, z.contour.im1}}}
                                     .dump()
                              << '\n';
            }
            return kOk;
        }

        if (*count) {
            const az::CountReport r = az::count_zeros(u, T, ctx);
            Sink sink(cfg.out);
            if (resolve_format(cfg, "csv") == "csv")
                sink.os() << "u,T,N,half_N,main_term,S\n"
                          << num(r.u) << ',' << num(r.T) << ',' << r.N_u_T << ',' << num(0.5 * double(r.N_u_T)) << ','
                          << num(r.main_term) << ',' << num(r.S_u_T) << '\n';
            else
                sink.os() << json{{"u", r.u}, {"T", r.T}, {"N", r.N_u_T}, {"half_N", 0.5 * double(r.N_u_T)},
                                  {"main_term", r.main_term}, {"S", r.S_u_T}}
                                 .dump()
                          << '\n';
            return kOk;
        }

        if (*track) {
            if (gnuplot) {
                gnuplot_script(cfg.out, "1:5", "Im s along the track");
                return kOk;
            }
            std::vector<az::ZeroRecord> seed_records;
            for (const auto& text : seeds) {
                az::ZeroRecord r;
                r.u = u0;
                r.s = parse_complex(text);
                seed_records.push_back(r);
            }
            const az::TrackResult tr = az::track_zeros(u0, u1, seed_records, steps, ctx);
            Sink sink(cfg.out);
            // One table: path rows, then event rows.
            sink.os() << "row,u,index,re,im,on_line,event,u_end\n";
            for (const auto& p : tr.path)
                for (size_t i = 0; i < p.s.size(); ++i)
                    sink.os() << "path," << num(p.u) << ',' << i << ',' << num(p.s[i].real()) << ',' << num(p.s[i].imag())
                              << ',' << (p.on_line[i] ? 1 : 0) << ",,\n";
            for (const auto& e : tr.events) {
                std::string idx;
                for (size_t k = 0; k < e.zeros.size(); ++k) idx += (k ? ";" : "") + std::to_string(e.zeros[k]);
                sink.os() << "event," << num(e.u) << ',' << idx << ',' << num(e.s.real()) << ',' << num(e.s.imag()) << ",,"
                          << az::to_string(e.kind) << ',' << num(e.u_end) << '\n';
            }
            if (tr.truncated) {
                std::cerr << "track truncated: " << tr.diagnostic << "\n";
                return kNumerical;
            }
            return kOk;
        }

        if (*verify) {
            bool all_ok = true;
            for (int id : az::suite_criteria(suite)) {
                const az::CriterionResult r = az::run_criterion(id, ctx);
                std::cout << az::format_result(r, verbose) << std::flush;
                all_ok = all_ok && r.pass();
            }
            return all_ok ? kOk : kVerifyFail;
        }

        if (*coeffs) {
            Sink sink(cfg.out);
            sink.os() << "m,degree,coefficients_of_c_star_low_to_high\n";
            for (int m = 1; m <= m_max; ++m) {
                const az::RationalPolynomial cs = az::c_star(m);
                sink.os() << m << ',' << cs.degree() << ',';
                for (int j = 0; j <= cs.degree(); ++j) sink.os() << (j ? " " : "") << cs.coeff(j).get_str();
                sink.os() << '\n';
            }
            return kOk;
        }

        if (*dens) {
            const long n = long(std::floor(2.0 * xmax / step + 1e-9)) + 1;
            std::vector<double> vals(static_cast<size_t>(n));
            az::parallel_for(n, ctx.threads, [&](long k) {
                vals[size_t(k)] = az::density(u, v, -xmax + step * double(k), ctx).real();
            });
            Sink sink(cfg.out);
            sink.os() << "x,density\n";
            for (long k = 0; k < n; ++k) sink.os() << num(-xmax + step * double(k)) << ',' << num(vals[size_t(k)]) << '\n';
            return kOk;
        }

        if (*cum) {
            const az::CumulantTable t = az::cumulants(k_max);
            const auto ms = az::moments(k_max);
            Sink sink(cfg.out);
            for (int k = 1; k <= k_max; ++k)
                sink.os() << json{{"k", k},
                                  {"kappa_u", t.at(k).u_coeff.to_string()},
                                  {"kappa_v", t.at(k).v_coeff.to_string()},
                                  {"moment", ms[size_t(k)].to_string()}}
                                 .dump()
                          << '\n';
            return kOk;
        }

        if (*fields) {
            Sink sink(cfg.out);
            if (tmax > 0.0 && fields->count("--tmax")) {
                const auto K = az::FieldDescriptor::from_discriminant(disc);
                for (auto [a, b] : az::sign_scan(K, 0.0, tmax, step, ctx))
                    sink.os() << json{{"field", K.name()}, {"bracket", {a, b}}}.dump() << '\n';
                return kOk;
            }
            const auto q = az::rational_invariants(ctx);
            sink.os() << json{{"field", "Q"}, {"eta", q.eta_K}, {"genus_g", q.genus_g}, {"genus_tilde", q.genus_tilde}}.dump()
                      << '\n';
            for (int d : az::FieldDescriptor::supported_discriminants()) {
                const auto K = az::FieldDescriptor::from_discriminant(d);
                const auto inv = az::invariants(K, ctx);
                sink.os() << json{{"field", K.name()},
                                  {"discriminant", d},
                                  {"norm_form", {K.a, K.b, K.c}},
                                  {"roots_of_unity", K.w_K},
                                  {"eta", inv.eta_K},
                                  {"genus_g", inv.genus_g},
                                  {"genus_tilde", inv.genus_tilde}}
                                 .dump()
                          << '\n';
            }
            return kOk;
        }
    } catch (const az::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const az::ConfigurationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    }
    return kOk;
}
