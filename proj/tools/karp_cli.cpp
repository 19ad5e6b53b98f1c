#include "karp/arcs.hpp"
#include "karp/boundary.hpp"
#include "karp/farey.hpp"
#include "karp/poly.hpp"
#include "karp/realize.hpp"
#include "karp/region.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

using karp::Complex;
using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_number(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseFailure("trailing characters in number: " + s);
    return v;
}

// turns as a rational string ("7/24") or a plain decimal
double parse_turns(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return parse_number(s);
    const double num = parse_number(s.substr(0, slash));
    const double den = parse_number(s.substr(slash + 1));
    if (den == 0.0) throw ParseFailure("zero denominator in turns: " + s);
    return num / den;
}

// grammar: "re", "re+imi", "re-imi", "imi", or "modulus@turns"
Complex parse_complex(std::string s) {
    std::erase(s, ' ');
    if (s.empty()) throw ParseFailure("empty complex literal");

    const auto at = s.find('@');
    if (at != std::string::npos) {
        const double mod = parse_number(s.substr(0, at));
        const double turns = parse_turns(s.substr(at + 1));
        return std::polar(mod, kTwoPi * turns);
    }

    if (s.back() != 'i') return Complex(parse_number(s), 0.0);
    s.pop_back();
    if (s.empty() || s == "+") return Complex(0.0, 1.0);
    if (s == "-") return Complex(0.0, -1.0);

    // split at the last sign that is not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return Complex(0.0, parse_number(s));
    const double re = parse_number(s.substr(0, split));
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return Complex(re, parse_number(im));
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json record_json(const karp::BoundaryPoint& b) {
    return json{{"theta", b.theta},
                {"rho", b.rho},
                {"re", b.value.real()},
                {"im", b.value.imag()},
                {"alpha", b.alpha},
                {"q", b.params.q},
                {"s", b.params.s},
                {"type", karp::to_string(b.params.type)},
                {"j0", b.params.j0}};
}

void emit_csv(std::ostream& os, const std::vector<karp::BoundaryPoint>& pts) {
    os << "theta,rho,re,im,alpha,q,s,type,j0\n";
    for (const auto& b : pts)
        os << fmt(b.theta) << ',' << fmt(b.rho) << ',' << fmt(b.value.real()) << ','
           << fmt(b.value.imag()) << ',' << fmt(b.alpha) << ',' << b.params.q << ',' << b.params.s
           << ',' << karp::to_string(b.params.type) << ',' << b.params.j0 << '\n';
}

void emit_svg(std::ostream& os, const std::vector<karp::BoundaryPoint>& pts) {
    const double cx = 500.0, cy = 500.0, r = 450.0;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
       << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    os << "  <path fill=\"#cde\" stroke=\"#247\" stroke-width=\"2\" d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double x = cx + r * pts[i].value.real();
        const double y = cy - r * pts[i].value.imag();
        os << (i == 0 ? 'M' : 'L') << x << ' ' << y << ' ';
    }
    os << "Z\"/>\n</svg>\n";
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ParseFailure("cannot open output file: " + path);
    return file;
}

json complex_json(Complex z) { return json{z.real(), z.imag()}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Karpelevic region toolkit: boundary, membership, realization"};
    app.require_subcommand(1);

    double tol = 1e-13;
    double tol_member = 1e-9;
    int cap = 1000;
    app.add_option("--tol", tol, "root/bisection tolerance");
    app.add_option("--tol-member", tol_member, "membership slack");
    app.add_option("--cap", cap, "order cap for minimal-order search");

    int n = 0;
    int samples = 360;
    std::string z_str, format = "csv", out_path, theta_str;
    std::optional<double> alpha_opt;

    auto* farey = app.add_subcommand("farey", "list the Farey fractions of order n");
    farey->add_option("--n", n, "order")->required()->check(CLI::PositiveNumber);

    auto* arcs = app.add_subcommand("arcs", "arc parameter table for order n");
    arcs->add_option("--n", n, "order")->required()->check(CLI::Range(2, 1000000));

    auto* boundary = app.add_subcommand("boundary", "sample the boundary of Theta_n");
    boundary->add_option("--n", n, "order")->required()->check(CLI::Range(2, 1000000));
    boundary->add_option("--samples", samples, "number of uniform samples")
        ->check(CLI::Range(3, 100000000));
    boundary->add_option("--format", format, "csv, json, or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    boundary->add_option("--out", out_path, "output file (default stdout)");

    auto* member = app.add_subcommand("member", "is z in Theta_n?");
    member->add_option("--n", n, "order")->required()->check(CLI::PositiveNumber);
    member->add_option("--z", z_str, "complex point")->required();

    auto* minn = app.add_subcommand("minn", "smallest n with z in Theta_n");
    minn->add_option("--z", z_str, "complex point")->required();

    auto* realize = app.add_subcommand("realize", "stochastic matrix with z subdominant");
    realize->add_option("--n", n, "order")->required()->check(CLI::Range(2, 1000000));
    realize->add_option("--z", z_str, "complex point")->required();

    auto* roots = app.add_subcommand("roots", "roots of the carrying polynomial at an argument");
    roots->add_option("--n", n, "order")->required()->check(CLI::Range(2, 1000000));
    roots->add_option("--theta", theta_str, "argument in turns (rational) or radians with 'r'")
        ->required();
    double alpha_val = 0.0;
    auto* alpha_flag = roots->add_option("--alpha", alpha_val, "override the arc parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*farey) {
            for (const karp::Fraction& f : karp::farey_sequence(n)) std::cout << f.str() << '\n';
            return 0;
        }

        if (*arcs) {
            const auto seq = karp::farey_sequence(n);
            for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                const karp::ArcParams ap =
                    karp::arc_params(karp::FareyPair{seq[i], seq[i + 1], n}, n);
                std::cout << seq[i].str() << ".." << seq[i + 1].str() << ' '
                          << karp::to_string(ap.type) << " q=" << ap.q << " s=" << ap.s
                          << " d=" << ap.d << " delta=" << ap.delta << " d1=" << ap.d1
                          << " s1=" << ap.s1 << " j0=" << ap.j0 << " l0=" << ap.l0 << '\n';
            }
            return 0;
        }

        if (*boundary) {
            const auto pts = karp::sample_boundary(n, samples);
            std::ofstream file;
            std::ostream& os = open_out(file, out_path);
            if (format == "csv") {
                emit_csv(os, pts);
            } else if (format == "json") {
                json arr = json::array();
                for (const auto& b : pts) arr.push_back(record_json(b));
                os << arr.dump(2) << '\n';
            } else {
                emit_svg(os, pts);
            }
            return 0;
        }

        if (*member) {
            const Complex z = parse_complex(z_str);
            const karp::MembershipVerdict v = karp::contains(n, z, tol_member);
            std::cout << (v.inside ? "inside" : "outside")
                      << " boundary_modulus=" << fmt(v.boundary_modulus)
                      << " margin=" << fmt(v.margin) << '\n';
            return v.inside ? 0 : 1;
        }

        if (*minn) {
            const Complex z = parse_complex(z_str);
            std::cout << karp::min_order(z, cap) << '\n';
            return 0;
        }

        if (*realize) {
            const Complex z = parse_complex(z_str);
            const karp::RealizationResult r = karp::realize_subdominant(n, z);
            json out;
            out["target"] = complex_json(r.target);
            out["achieved"] = complex_json(r.achieved);
            if (r.kind == karp::RealizationKind::Matrix) {
                out["kind"] = "matrix";
                out["order"] = r.matrix->order;
                out["rows"] = r.matrix->rows;
            } else {
                out["kind"] = "certificate";
                const karp::Certificate& c = *r.certificate;
                out["alpha"] = c.alpha;
                json coeffs = json::array();
                for (const Complex& x : c.f_alpha.coeffs) coeffs.push_back(complex_json(x));
                out["coeffs"] = coeffs;
                json rts = json::array();
                for (const Complex& x : c.roots.roots) rts.push_back(complex_json(x));
                out["roots"] = rts;
                out["boundary_root"] = complex_json(c.boundary_root);
                out["subdominance_ok"] = c.subdominance_ok;
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }

        if (*roots) {
            double theta;
            if (!theta_str.empty() && theta_str.back() == 'r')
                theta = parse_number(theta_str.substr(0, theta_str.size() - 1));
            else
                theta = kTwoPi * parse_turns(theta_str);
            const karp::BoundaryPoint bp = karp::boundary_point(n, theta);
            const double alpha = alpha_flag->count() > 0 ? alpha_val : bp.alpha;
            const karp::Poly f = karp::reduced_ito_poly(bp.params, alpha);
            const karp::RootSet rs = karp::all_roots(f, tol);
            for (const Complex& root : rs.roots)
                std::cout << fmt(root.real()) << ' ' << fmt(root.imag()) << '\n';
            return 0;
        }
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const karp::NotInRegion& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
