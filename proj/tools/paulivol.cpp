// Command-line surface for the polytope library: exact volumes and ratios,
// closed-form bounds, extreme-point classification, LME tables, contour
// sweeps, and Monte Carlo cross-checks.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "paulivol/bounds.hpp"
#include "paulivol/exact.hpp"
#include "paulivol/grid.hpp"
#include "paulivol/interval.hpp"
#include "paulivol/mc.hpp"
#include "paulivol/membership.hpp"
#include "paulivol/volumes.hpp"

namespace {

using json = nlohmann::json;
using namespace paulivol;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct CommonOpts {
    unsigned digits = 12;
    std::string format = "table";
};

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string frac(const Rational& q) { return q.get_str(); }

std::string dec(const Rational& q, unsigned digits) {
    return exact::to_decimal_string(q, digits);
}

json volume_json(const volumes::ScaledVolume& v, unsigned digits) {
    return json{{"d", v.d},
                {"coeff", frac(v.coeff)},
                {"coeff_decimal", dec(v.coeff, digits)},
                {"value", v.value()}};
}

void emit(const json& j, const std::string& text, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_vol(unsigned d, const Rational& n, std::optional<unsigned> m,
            std::optional<Rational> t, const CommonOpts& opts) {
    volumes::PolytopeSpec spec;
    spec.d = d;
    spec.n = n;
    if (m && t) spec.cap = {*m, *t};
    spec.validate();

    const auto vb = volumes::volume_B(d, n);
    const auto vp = is_integer(n) && n >= 1
                        ? volumes::volume_P(d, static_cast<unsigned>(n.get_num().get_ui()))
                        : volumes::volume_P_real(d, n);
    json j{{"d", d}, {"n", frac(n)}};
    j["B"] = volume_json(vb, opts.digits);
    j["P"] = volume_json(vp, opts.digits);

    std::ostringstream text;
    text << "Vol(B_{" << d << "," << frac(n) << "}) = " << frac(vb.coeff) << " * sqrt(" << d
         << ") = " << dec(vb.coeff, opts.digits) << " * sqrt(" << d << ")\n";
    text << "Vol(P_{" << d << "," << frac(n) << "}) = " << frac(vp.coeff) << " * sqrt(" << d
         << ") = " << dec(vp.coeff, opts.digits) << " * sqrt(" << d << ")\n";
    if (spec.cap) {
        const auto va = volumes::volume_A(d, n, *m, *t);
        j["A"] = volume_json(va, opts.digits);
        j["A"]["m"] = *m;
        j["A"]["t"] = frac(*t);
        text << "Vol(A_{" << d << "," << frac(n) << "," << *m << "," << frac(*t)
             << "}) = " << frac(va.coeff) << " * sqrt(" << d << ") = "
             << dec(va.coeff, opts.digits) << " * sqrt(" << d << ")\n";
    }
    if (opts.format == "csv") {
        std::cout << "polytope,coeff,coeff_decimal\n";
        std::cout << "B," << frac(vb.coeff) << ',' << dec(vb.coeff, opts.digits) << '\n';
        std::cout << "P," << frac(vp.coeff) << ',' << dec(vp.coeff, opts.digits) << '\n';
        if (spec.cap) {
            const auto va = volumes::volume_A(d, n, *m, *t);
            std::cout << "A," << frac(va.coeff) << ',' << dec(va.coeff, opts.digits) << '\n';
        }
        return kExitOk;
    }
    emit(j, text.str(), opts.format);
    return kExitOk;
}

int run_ratio(unsigned d, unsigned n, std::optional<unsigned> m, const CommonOpts& opts) {
    const auto vp = volumes::volume_P(d, n);
    const auto vb = volumes::volume_B(d, Rational(static_cast<long>(n)));
    const Rational p_over_b = volumes::ratio(vp, vb);
    json j{{"d", d},
           {"n", n},
           {"P_over_B", frac(p_over_b)},
           {"P_over_B_decimal", dec(p_over_b, opts.digits)}};
    std::ostringstream text;
    text << "Vol(P)/Vol(B) = " << frac(p_over_b) << " = " << dec(p_over_b, opts.digits) << "\n";
    if (m) {
        const auto r = bounds::exact_cap_ratio(d, n, *m);
        j["m"] = *m;
        j["A_over_P"] = frac(r.exact());
        j["A_over_P_decimal"] = dec(r.exact(), opts.digits);
        text << "Vol(A)/Vol(P) at m=" << *m << ", t=" << frac(membership::cap_threshold(n, *m))
             << " = " << frac(r.exact()) << " = " << dec(r.exact(), opts.digits) << "\n";
    } else if (membership::cap_certificate(d, n, 1)) {
        const auto best = bounds::best_cap_ratio(d, n);
        j["m_star"] = best.m_star;
        j["A_over_P"] = frac(best.ratio);
        j["A_over_P_decimal"] = dec(best.ratio, opts.digits);
        text << "best Vol(A)/Vol(P) at m*=" << best.m_star << " = " << frac(best.ratio) << " = "
             << dec(best.ratio, opts.digits) << "\n";
    }
    if (membership::cap_certificate(d, n, 1)) {
        const auto g = bounds::gpc_vs_pauli_bound(d, n);
        j["gpc_vs_pauli_upper"] = g.to_string(opts.digits);
        text << "upper bound on Vol(P\\F)/Vol(B\\P): " << g.to_string(opts.digits) << "\n";
    }
    emit(j, text.str(), opts.format);
    return kExitOk;
}

json bound_json(const bounds::RatioBoundResult& r, unsigned digits) {
    json j;
    j["vacuous"] = r.vacuous;
    if (r.is_exact()) {
        j["exact"] = frac(r.exact());
        j["decimal"] = dec(r.exact(), digits);
    } else {
        j["interval"] = r.interval().to_string(digits);
    }
    return j;
}

int run_bounds(unsigned d, unsigned n, unsigned precision_bits, const CommonOpts& opts) {
    json j{{"d", d}, {"n", n}, {"precision_bits", precision_bits}};
    std::ostringstream text;

    const auto loss = bounds::pauli_loss_bounds(d, n);
    j["pauli_loss"] = {{"lower", frac(loss.first)}, {"upper", frac(loss.second)}};
    text << "Pauli loss bracket for Vol(P)/Vol(B): [" << dec(loss.first, opts.digits) << ", "
         << dec(loss.second, opts.digits) << "]\n";

    const bool guard = bounds::guard_fixed_n(d, n);
    j["guard_fixed_n"] = guard;
    text << "fixed-N guard d((N-1)/N)^(d-1) <= 1: " << (guard ? "holds" : "fails") << "\n";

    if (n >= 8 && 2 * n <= d && guard) {
        const auto r = bounds::fixed_n_ratio_bound(d, n, precision_bits);
        j["fixed_n_bound"] = bound_json(r, opts.digits);
        text << "fixed-N lower bound on Vol(F)/Vol(P): "
             << (r.is_exact() ? dec(r.exact(), opts.digits) : r.interval().to_string(opts.digits))
             << (r.vacuous ? "  (vacuous)" : "") << "\n";
    } else {
        text << "fixed-N bound: not applicable (needs 8 <= N <= d/2 and the guard)\n";
    }

    if (n >= 20 && 2 * n < d) {
        const auto r = bounds::fixed_ratio_ratio_bound(d, n, precision_bits);
        j["fixed_ratio_bound"] = bound_json(r, opts.digits);
        text << "fixed-ratio lower bound on Vol(F)/Vol(P): "
             << r.interval().to_string(opts.digits) << (r.vacuous ? "  (vacuous)" : "") << "\n";
    } else {
        text << "fixed-ratio bound: not applicable (needs N = rd >= 20 with r in (0, 1/2))\n";
    }

    emit(j, text.str(), opts.format);
    return kExitOk;
}

int run_extreme(unsigned d, unsigned n, bool bose, const CommonOpts& opts) {
    json j{{"d", d}, {"n", n}};
    std::ostringstream text;
    if (bose) {
        const auto pts = membership::bose_extreme_points(d, Rational(static_cast<long>(n)));
        json arr = json::array();
        for (const auto& p : pts) {
            json v = json::array();
            for (const auto& c : p) v.push_back(frac(c));
            arr.push_back(v);
        }
        j["bose_extreme_points"] = arr;
        text << pts.size() << " extreme points of B_{" << d << "," << n << "}\n";
    }
    const auto pts = membership::pauli_extreme_points(d, n);
    json arr = json::array();
    std::size_t in_count = 0;
    std::ostringstream rows;
    for (const auto& p : pts) {
        const auto verdict = membership::classify(p);
        in_count += verdict.in_f ? 1 : 0;
        const bool slater = p.kind == membership::PointKind::Slater;
        const char* reason = verdict.reason == membership::MembershipReason::Slater ? "slater"
                             : verdict.reason == membership::MembershipReason::LmeExists
                                 ? "lme-exists"
                                 : "lme-absent";
        arr.push_back(json{{"kind", slater ? "slater" : "interior"},
                           {"ones", p.ones},
                           {"zeros", p.zeros},
                           {"fill", slater ? "1" : frac(p.fill())},
                           {"in_F", verdict.in_f},
                           {"reason", reason}});
        rows << (slater ? "slater  " : "interior") << "  i=" << p.ones << " j=" << p.zeros
             << "  fill=" << (slater ? "1" : frac(p.fill()))
             << "  in_F=" << (verdict.in_f ? "yes" : "NO") << "  (" << reason << ")\n";
    }
    j["extreme_points"] = arr;
    j["count"] = pts.size();
    j["in_F_count"] = in_count;
    text << pts.size() << " extreme points of P_{" << d << "," << n << "}, " << in_count
         << " lie in F_{" << d << "," << n << "}\n"
         << rows.str();
    if (opts.format == "csv") {
        std::cout << "kind,ones,zeros,fill,in_F,reason\n";
        for (const auto& e : arr)
            std::cout << e["kind"].get<std::string>() << ',' << e["ones"] << ',' << e["zeros"]
                      << ',' << e["fill"].get<std::string>() << ','
                      << (e["in_F"].get<bool>() ? "true" : "false") << ','
                      << e["reason"].get<std::string>() << '\n';
        return kExitOk;
    }
    emit(j, text.str(), opts.format);
    return kExitOk;
}

int run_lme(unsigned d_max, bool with_dim, const CommonOpts& opts) {
    if (opts.format == "json") {
        json arr = json::array();
        for (const auto& cell : grid::lme_cells(d_max)) {
            json c{{"d", cell.d}, {"n", cell.n}, {"exists", cell.exists}};
            if (with_dim) {
                const auto dim = membership::lme_moduli_dimension(cell.d, cell.n);
                using Kind = membership::DimResult::Kind;
                switch (dim.kind) {
                    case Kind::Empty: c["dim"] = "empty"; break;
                    case Kind::Point: c["dim"] = "point"; break;
                    case Kind::ExistsOnly: c["dim"] = "exists-only"; break;
                    case Kind::Value: c["dim"] = dim.value.get_str(); break;
                }
            }
            arr.push_back(c);
        }
        std::cout << json{{"d_max", d_max}, {"cells", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << grid::lme_table_text(d_max);
    if (with_dim) {
        std::cout << "\nmoduli dimensions (N = 0..d per row):\n";
        for (unsigned d = 1; d <= d_max; ++d) {
            std::cout << "d=" << d << ":";
            for (unsigned n = 0; n <= d; ++n) {
                const auto dim = membership::lme_moduli_dimension(d, n);
                using Kind = membership::DimResult::Kind;
                std::cout << ' ';
                switch (dim.kind) {
                    case Kind::Empty: std::cout << "-1"; break;
                    case Kind::Point: std::cout << "0"; break;
                    case Kind::ExistsOnly: std::cout << ">=0"; break;
                    case Kind::Value: std::cout << dim.value.get_str(); break;
                }
            }
            std::cout << '\n';
        }
    }
    return kExitOk;
}

int run_contour(unsigned d_max, unsigned n_max, const std::string& out_path, bool serial,
                const CommonOpts& opts) {
    const auto cells =
        serial ? grid::contour_cells_serial(d_max, n_max) : grid::contour_cells(d_max, n_max);
    const std::string csv = grid::contour_csv(cells, opts.digits);
    if (out_path.empty()) {
        std::cout << csv;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitUsage;
    }
    out << csv;
    out.flush();
    if (!out.good()) {
        std::cerr << "error: failed writing '" << out_path << "'\n";
        return kExitInternal;
    }
    return kExitOk;
}

int run_verify(unsigned d, const Rational& n, std::optional<unsigned> m,
               std::optional<Rational> t, std::uint64_t samples, std::uint64_t seed,
               const CommonOpts& opts) {
    Rational exact_ratio;
    mc::McEstimate est;
    std::string what;
    const auto vp = is_integer(n) && n >= 1
                        ? volumes::volume_P(d, static_cast<unsigned>(n.get_num().get_ui()))
                        : volumes::volume_P_real(d, n);
    if (m && t) {
        est = mc::estimate_order_fraction(d, n, *m, *t, samples, seed);
        exact_ratio = volumes::ratio(volumes::volume_A(d, n, *m, *t), vp);
        what = "Vol(A)/Vol(P)";
    } else {
        est = mc::estimate_pauli_fraction(d, n, samples, seed);
        exact_ratio = volumes::ratio(vp, volumes::volume_B(d, n));
        what = "Vol(P)/Vol(B)";
    }
    const double p = exact::to_double(exact_ratio);
    // z-score against the sampling error implied by the exact ratio.
    const double se =
        std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(est.effective_samples));
    const double diff = est.mean - p;
    const double z = se > 0 ? diff / se : (diff == 0.0 ? 0.0 : INFINITY);
    const bool pass = std::abs(diff) <= 4.0 * std::max(se, est.std_error);

    json j{{"what", what},
           {"exact", frac(exact_ratio)},
           {"exact_decimal", dec(exact_ratio, opts.digits)},
           {"mc_mean", est.mean},
           {"mc_std_error", est.std_error},
           {"samples", est.samples},
           {"accepted", est.accepted},
           {"effective_samples", est.effective_samples},
           {"seed", est.seed},
           {"z", z},
           {"pass", pass}};
    std::ostringstream text;
    text << what << " exact = " << dec(exact_ratio, opts.digits) << ", MC = " << est.mean
         << " +- " << est.std_error << " (" << est.effective_samples << " effective samples)\n"
         << "z = " << z << " -> " << (pass ? "PASS" : "FAIL") << " (4 sigma)\n";
    emit(j, text.str(), opts.format);
    return pass ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact volumes, bounds and classifications for the fermionic "
                 "occupation-number polytopes B, P and A"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts opts;
    app.add_option("--digits", opts.digits, "fractional digits for decimal rendering")
        ->capture_default_str();

    std::string d_str, n_str, m_str, t_str;
    unsigned precision_bits = BoundInterval::kDefaultPrecision;

    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", opts.format, "output format: " + choices);
    };

    auto* vol = app.add_subcommand("vol", "exact volumes of B, P (and A with --m/--t)");
    vol->add_option("--d", d_str, "ambient dimension d")->required();
    vol->add_option("--n", n_str, "hyperplane level N (integer or p/q)")->required();
    vol->add_option("--m", m_str, "cap index m");
    vol->add_option("--t", t_str, "cap level t (p/q or decimal)");
    add_format(vol, "table|json|csv");

    auto* ratio = app.add_subcommand("ratio", "exact ratios Vol(A)/Vol(P) and Vol(P)/Vol(B)");
    ratio->add_option("--d", d_str, "ambient dimension d")->required();
    ratio->add_option("--n", n_str, "particle number N")->required();
    ratio->add_option("--m", m_str, "cap index m (default: maximize over m)");
    add_format(ratio, "table|json");

    auto* bnd = app.add_subcommand("bounds", "closed-form bounds on volume ratios");
    bnd->add_option("--d", d_str, "ambient dimension d")->required();
    bnd->add_option("--n", n_str, "particle number N")->required();
    bnd->add_option("--precision-bits", precision_bits, "interval precision")
        ->capture_default_str();
    add_format(bnd, "table|json");

    bool bose = false;
    auto* ext = app.add_subcommand("extreme", "extreme points and their F-membership");
    ext->add_option("--d", d_str, "ambient dimension d")->required();
    ext->add_option("--n", n_str, "particle number N")->required();
    ext->add_flag("--bose", bose, "also list the extreme points of B");
    add_format(ext, "table|json|csv");

    unsigned d_max = 12;
    bool with_dim = false;
    auto* lme = app.add_subcommand("lme", "LME existence (and moduli dimension) table");
    lme->add_option("--d-max", d_max, "largest dimension")->capture_default_str();
    lme->add_flag("--dim", with_dim, "include moduli-space dimensions");
    add_format(lme, "table|json");

    unsigned c_dmax = 40, c_nmax = 1u << 30;
    std::string out_path;
    bool serial = false;
    auto* contour = app.add_subcommand("contour", "grid of best exact lower bounds (CSV)");
    contour->add_option("--d-max", c_dmax, "largest dimension (>= 16)")->capture_default_str();
    contour->add_option("--n-max", c_nmax, "largest particle number (default: d/2)");
    contour->add_option("--out", out_path, "output file (default: stdout)");
    contour->add_flag("--serial", serial, "use the serial reference sweep");

    std::uint64_t samples = 1000000, seed = 42;
    auto* verify = app.add_subcommand("verify", "Monte Carlo cross-check of an exact ratio");
    verify->add_option("--d", d_str, "ambient dimension d")->required();
    verify->add_option("--n", n_str, "particle number N")->required();
    verify->add_option("--m", m_str, "cap index m (with --t: check Vol(A)/Vol(P))");
    verify->add_option("--t", t_str, "cap level t");
    verify->add_option("--samples", samples, "number of samples")->capture_default_str();
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    add_format(verify, "table|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        auto need_uint = [](const std::string& s, const char* what) -> unsigned {
            const Rational q = exact::parse_rational(s);
            if (q.get_den() != 1 || q < 0 || q > 100000000)
                throw std::domain_error(std::string(what) +
                                        " must be a nonnegative integer (at most 1e8)");
            return static_cast<unsigned>(q.get_num().get_ui());
        };
        std::optional<unsigned> m;
        if (!m_str.empty()) m = need_uint(m_str, "--m");
        std::optional<Rational> t;
        if (!t_str.empty()) t = exact::parse_rational(t_str);

        if (vol->parsed()) {
            if (m.has_value() != t.has_value())
                throw std::domain_error("vol: --m and --t must be given together");
            return run_vol(need_uint(d_str, "--d"), exact::parse_rational(n_str), m, t, opts);
        }
        if (ratio->parsed())
            return run_ratio(need_uint(d_str, "--d"), need_uint(n_str, "--n"), m, opts);
        if (bnd->parsed())
            return run_bounds(need_uint(d_str, "--d"), need_uint(n_str, "--n"), precision_bits,
                              opts);
        if (ext->parsed())
            return run_extreme(need_uint(d_str, "--d"), need_uint(n_str, "--n"), bose, opts);
        if (lme->parsed()) return run_lme(d_max, with_dim, opts);
        if (contour->parsed()) return run_contour(c_dmax, c_nmax, out_path, serial, opts);
        if (verify->parsed()) {
            if (m.has_value() != t.has_value())
                throw std::domain_error("verify: --m and --t must be given together");
            return run_verify(need_uint(d_str, "--d"), exact::parse_rational(n_str), m, t,
                              samples, seed, opts);
        }
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
