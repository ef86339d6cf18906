// gamma-zeta-lab command-line driver: reproducible batch runs over the
// library modules with machine-readable reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gzlab/delta.hpp"
#include "gzlab/gamma.hpp"
#include "gzlab/holonomy.hpp"
#include "gzlab/leaf.hpp"
#include "gzlab/strata.hpp"
#include "gzlab/zeta.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::string header(unsigned seed) {
    return std::string("gamma-zeta-lab ") + kVersion + " seed=" + std::to_string(seed);
}

std::string num(double v) { return gzlab::detail::fmt_num(v); }

void emit(const std::string& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw gzlab::Error("cannot open output file '" + out_path + "'");
    f << report;
}

gzlab::Multigraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw gzlab::Error("cannot open graph file '" + path + "'");
    return gzlab::parse_graph(f);
}

gzlab::StratifiedComplex load_strata(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw gzlab::Error("cannot open strata file '" + path + "'");
    return gzlab::parse_strata(f);
}

int parse_plane(const std::string& tok) {
    if (tok == "x1" || tok == "0") return 0;
    if (tok == "x2" || tok == "1") return 1;
    if (tok == "x3" || tok == "2") return 2;
    throw gzlab::Error("plane must be x1, x2 or x3");
}

std::string leaf_report(unsigned seed, double b, double tol, int n) {
    const auto prof = gzlab::profile_curve(b, n, tol);
    std::ostringstream os;
    os << header(seed) << "\n";
    os << "leaf v1\n";
    os << "a " << num(prof.profile.a) << "\n";
    os << "b_star " << num(b) << "\n";
    os << "arc_length " << num(prof.arc_length) << "\n";
    os << "rho_max " << num(prof.profile.a / (2.0 * std::sqrt(b))) << "\n";
    os << "K " << num(prof.profile.curvature()) << "\n";
    for (const auto& s : prof.samples)
        os << "sample " << num(s.u) << " " << num(s.x) << " " << num(s.xi) << "\n";
    return os.str();
}

// gamma-graph v1 keeps its own first line, so the run header rides in a comment.
std::string graph_report(unsigned seed, const gzlab::Multigraph& g) {
    return "# " + header(seed) + "\n" + gzlab::serialize_graph(g);
}

std::string poly_line(const gzlab::IntPoly& p) {
    std::ostringstream os;
    os << "poly";
    for (const auto& c : p) os << " " << c;
    os << "\n";
    return os.str();
}

std::vector<gzlab::EmbeddedCurve> gamma_curves(double b, int grid) {
    std::vector<gzlab::EmbeddedCurve> curves;
    for (int d = 0; d < 4; ++d) {
        auto s = gzlab::build_leaf_surface(b, d);
        for (int j = 0; j < 3; ++j)
            for (auto& c : gzlab::extract_plane_curves(s, j, 1e-7, grid))
                curves.push_back(std::move(c));
    }
    return curves;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gamma-zeta-lab: leaf geometry, graph zeta functions, surgery, "
                 "holonomy and stratified cohomology"};
    app.require_subcommand(1);
    unsigned seed = 0;
    std::string out_path;
    app.add_option("--seed", seed, "seed recorded in the report header");
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    // leaf
    auto* leaf = app.add_subcommand("leaf", "leaf profile curves");
    auto* leaf_solve = leaf->add_subcommand("solve", "solve the arc-length constraint for b");
    double leaf_tol = 1e-8;
    leaf_solve->add_option("--tol", leaf_tol, "solver tolerance");
    auto* leaf_profile = leaf->add_subcommand("profile", "sample the profile for a given b");
    double leaf_b = 1.0;
    int leaf_n = 256;
    leaf_profile->add_option("--b", leaf_b, "curvature parameter")->required();
    leaf_profile->add_option("--n", leaf_n, "number of samples");

    // gamma
    auto* gamma = app.add_subcommand("gamma", "interface graph construction");
    auto* gamma_build = gamma->add_subcommand("build", "build Gamma from the leaf surfaces");
    double gamma_b = -1;
    int gamma_grid = 512;
    double gamma_eps = 1e-4;
    gamma_build->add_option("--b", gamma_b, "curvature parameter (default: solved)");
    gamma_build->add_option("--grid", gamma_grid, "marching-squares grid resolution");
    gamma_build->add_option("--eps", gamma_eps, "vertex clustering tolerance");
    auto* gamma_octant = gamma->add_subcommand("octant", "canonical octahedral interface graph");

    // zeta
    auto* zeta = app.add_subcommand("zeta", "Ihara zeta function of a graph");
    std::string zeta_in;
    int zeta_len = 12;
    double zeta_tol = 1e-10;
    auto* zeta_series = zeta->add_subcommand("series", "power series of Z(u)");
    auto* zeta_det = zeta->add_subcommand("det", "exact determinant reciprocal");
    auto* zeta_poles = zeta->add_subcommand("poles", "poles of Z(u) with multiplicities");
    for (auto* sub : {zeta_series, zeta_det, zeta_poles})
        sub->add_option("--in", zeta_in, "input graph file")->required();
    zeta_series->add_option("--max-length", zeta_len, "series truncation degree");
    zeta_poles->add_option("--tol", zeta_tol, "root clustering tolerance");

    // delta
    auto* delta = app.add_subcommand("delta", "mid-plane rotation surgery");
    auto* delta_apply = delta->add_subcommand("apply", "apply the surgery to a graph");
    std::string delta_in, delta_plane = "x1";
    int delta_angle = 90;
    double delta_eps = 1e-5;
    delta_apply->add_option("--in", delta_in, "input graph file")->required();
    delta_apply->add_option("--plane", delta_plane, "x1, x2 or x3");
    delta_apply->add_option("--angle", delta_angle, "0, 90, 180 or 270");
    delta_apply->add_option("--eps", delta_eps, "gluing tolerance");
    auto* delta_check = delta->add_subcommand("check", "compare the zeta functions of two graphs");
    std::string check_a, check_b;
    delta_check->add_option("--a", check_a, "first graph")->required();
    delta_check->add_option("--b", check_b, "second graph")->required();

    // holonomy
    auto* hol = app.add_subcommand("holonomy", "sign character and spherical transport");
    auto* hol_classify = hol->add_subcommand("classify", "fermion/boson split of cycle classes");
    std::string hol_in;
    int hol_len = 8;
    hol_classify->add_option("--in", hol_in, "input graph file")->required();
    hol_classify->add_option("--max-length", hol_len, "cycle length cap");
    auto* hol_sphere = hol->add_subcommand("sphere", "parallel transport around built-in loops");
    std::string hol_loops = "octant";
    hol_sphere->add_option("--loops", hol_loops, "loop family (octant)");
    auto* hol_duality = hol->add_subcommand("duality", "pair zeta poles with holonomy generators");
    std::string dual_in, dual_loops;
    double dual_tol = 1e-10;
    hol_duality->add_option("--in", dual_in, "input graph file")->required();
    hol_duality->add_option("--loops", dual_loops, "optional loop family (octant)");
    hol_duality->add_option("--tol", dual_tol, "pole clustering tolerance");

    // strata
    auto* strata = app.add_subcommand("strata", "stratified complexes and twisted cohomology");
    std::string strata_in, strata_ring = "int";
    int strata_deg = -1;
    auto* strata_coh = strata->add_subcommand("cohomology", "per-stratum cohomology");
    auto* strata_tw = strata->add_subcommand("twisted", "cohomology of the twisted glued complex");
    auto* strata_inv = strata->add_subcommand("invariant", "twist-invariant classes over Q");
    for (auto* sub : {strata_coh, strata_tw, strata_inv})
        sub->add_option("--in", strata_in, "input strata file")->required();
    strata_coh->add_option("--ring", strata_ring, "int or rat");
    strata_coh->add_option("--degree", strata_deg, "restrict to one degree");
    strata_tw->add_option("--ring", strata_ring, "int or rat");
    strata_inv->add_option("--degree", strata_deg, "cohomological degree")->required();

    // allow --seed/--out after the subcommand tokens
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough(true);
        for (auto* sub : a->get_subcommands({})) allow_fallthrough(sub);
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::ostringstream os;
        if (*leaf_solve) {
            const double bstar = gzlab::solve_b(gzlab::kCubeDiagonal, leaf_tol);
            emit(leaf_report(seed, bstar, leaf_tol, 256), out_path);
        } else if (*leaf_profile) {
            emit(leaf_report(seed, leaf_b, 1e-10, leaf_n), out_path);
        } else if (*gamma_build) {
            const double b = gamma_b > 0 ? gamma_b : gzlab::solve_b();
            auto curves = gamma_curves(b, gamma_grid);
            auto g = gzlab::assemble_gamma(gzlab::dedup_curves(curves, 1e-3), gamma_eps);
            emit(graph_report(seed, g), out_path);
        } else if (*gamma_octant) {
            // move into the unit cube so the surgery planes x_j = 1/2 apply
            auto g = gzlab::octant_graph().first;
            const gzlab::Vec3 ctr{0.5, 0.5, 0.5};
            for (auto& v : g.vertices) v.coords = ctr + *v.coords * 0.5;
            for (auto& e : g.edges)
                for (auto& p : e.polyline) p = ctr + p * 0.5;
            emit(graph_report(seed, g), out_path);
        } else if (*zeta_series) {
            auto zs = gzlab::zeta_series(load_graph(zeta_in), zeta_len);
            os << header(seed) << "\nzeta v1\nseries " << zs.max_length;
            for (const auto& c : zs.coeffs) os << " " << c;
            os << "\n";
            emit(os.str(), out_path);
        } else if (*zeta_det) {
            auto zr = gzlab::zeta_reciprocal(load_graph(zeta_in));
            os << header(seed) << "\nzeta v1\n" << poly_line(zr.poly);
            emit(os.str(), out_path);
        } else if (*zeta_poles) {
            auto zr = gzlab::zeta_reciprocal(load_graph(zeta_in));
            os << header(seed) << "\nzeta v1\n";
            for (const auto& p : gzlab::zeta_poles(zr, zeta_tol))
                os << "pole " << num(p.root.real()) << " " << num(p.root.imag()) << " "
                   << p.multiplicity << "\n";
            emit(os.str(), out_path);
        } else if (*delta_apply) {
            auto g = load_graph(delta_in);
            auto [h, rep] = gzlab::apply_delta(
                g, {parse_plane(delta_plane), delta_angle, delta_eps});
            std::string report = graph_report(seed, h);
            report += "# cut_points " + std::to_string(rep.cut_points) + " matched " +
                      std::to_string(rep.matched) + " max_mismatch " + num(rep.max_mismatch) +
                      "\n";
            emit(report, out_path);
        } else if (*delta_check) {
            auto r = gzlab::check_zeta_invariance(load_graph(check_a), load_graph(check_b));
            os << header(seed) << "\nzeta v1\n";
            os << "equal " << (r.equal ? 1 : 0) << "\n";
            os << "first_diff_degree " << r.first_diff_degree << "\n";
            os << "lhs " << poly_line(r.lhs);
            os << "rhs " << poly_line(r.rhs);
            emit(os.str(), out_path);
        } else if (*hol_classify) {
            auto g = load_graph(hol_in);
            auto classes = gzlab::enumerate_cycles(g, hol_len);
            os << header(seed) << "\nholonomy v1\n";
            for (size_t i = 0; i < classes.size(); ++i) {
                auto s = gzlab::cycle_holonomy_sign(classes[i]);
                os << "cycle c" << i << " " << classes[i].length << " "
                   << (s.sign > 0 ? "+1" : "-1") << " "
                   << (s.species == gzlab::Species::fermionic ? "fermionic" : "bosonic")
                   << "\n";
            }
            os << "total " << gzlab::total_holonomy(classes) << "\n";
            emit(os.str(), out_path);
        } else if (*hol_sphere || *hol_duality) {
            std::vector<gzlab::HolonomyElement> els;
            const std::string family = *hol_sphere ? hol_loops : dual_loops;
            if (family == "octant") {
                auto [g, faces] = gzlab::octant_graph();
                const auto as = gzlab::build_arc_system(g);
                for (size_t i = 0; i < faces.size(); ++i) {
                    std::vector<gzlab::Vec3> loop;
                    for (int a : faces[i].rep)
                        loop.push_back(*g.vertices[as.tail[a]].coords);
                    loop.push_back(loop.front());
                    const gzlab::Vec3 t =
                        normalized(loop[1] - loop[0] * dot(loop[0], loop[1]));
                    els.push_back(gzlab::sphere_parallel_transport(
                        loop, loop[0], t, "f" + std::to_string(i)));
                }
            } else if (!family.empty()) {
                throw gzlab::Error("unknown loop family '" + family + "'");
            }
            os << header(seed) << "\nholonomy v1\n";
            if (*hol_sphere) {
                for (const auto& e : els)
                    os << "transport " << e.loop_id << " " << num(e.angle) << " "
                       << (e.reflection ? "refl" : "rot") << "\n";
                if (!els.empty())
                    os << "fixed_dim "
                       << gzlab::holonomy_fixed_points({els.front()}).dimension << "\n";
            } else {
                auto rep = gzlab::duality_report(load_graph(dual_in), els, dual_tol);
                for (const auto& p : rep.poles)
                    os << "pole " << num(p.root.real()) << " " << num(p.root.imag()) << " "
                       << p.multiplicity << "\n";
                for (const auto& n : rep.pairing_notes) os << "note " << n << "\n";
                os << "fixed_dim " << rep.common_fixed_dim << "\n";
            }
            emit(os.str(), out_path);
        } else if (*strata_coh || *strata_tw || *strata_inv) {
            auto sc = load_strata(strata_in);
            const gzlab::Ring ring =
                strata_ring == "rat" ? gzlab::Ring::rationals : gzlab::Ring::integers;
            os << header(seed) << "\nstrata v1\n";
            auto emit_entry = [&](const std::string& tag, int k,
                                  const gzlab::CohomologyEntry& e) {
                os << tag << " " << k << " rank " << e.rank;
                if (!e.torsion.empty()) {
                    os << " torsion";
                    for (const auto& f : e.torsion) os << " " << f;
                }
                os << "\n";
            };
            if (*strata_coh) {
                for (const auto& s : sc.strata)
                    for (int k = 0; k <= s.dim(); ++k) {
                        if (strata_deg >= 0 && k != strata_deg) continue;
                        emit_entry("h " + s.name, k, gzlab::cohomology_stratum(s, k, ring));
                    }
            } else if (*strata_tw) {
                int dim = 0;
                for (const auto& s : sc.strata) dim = std::max(dim, s.dim());
                for (int k = 0; k <= dim; ++k)
                    emit_entry("twisted", k, gzlab::twisted_cohomology(sc, k, ring));
            } else {
                os << "invariant " << strata_deg << " "
                   << gzlab::invariant_classes(sc, strata_deg) << "\n";
            }
            emit(os.str(), out_path);
        }
    } catch (const gzlab::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
