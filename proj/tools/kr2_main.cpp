// kr2: exact arithmetic and automorphisms for the hypersurfaces
//   x + y (x^d + z^a2)^l + t^a3 = 0.
//
// Exit codes: 0 success / true / member, 1 false / not member / failed
// verification, 2 validation error, 3 parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kr2/json_io.hpp"
#include "kr2/parser.hpp"
#include "kr2/verify.hpp"

namespace {

using namespace kr2;

struct Cli {
    ThreefoldParams params;
    CycloContextPtr cyclo;
    bool json = false;
    std::uint64_t seed = 0;
    std::string command;
    std::vector<std::string> positionals;
    std::map<std::string, std::string> options;  // --p, --mu, ...

    MultiPoly poly_arg(const std::string& src) const { return parse_poly(src, cyclo); }
    Scalar scalar_arg(const std::string& src) const { return parse_scalar(src, cyclo); }

    const std::string& option(const std::string& name) const {
        auto it = options.find(name);
        if (it == options.end()) throw InvalidArgument("missing required option --" + name);
        return it->second;
    }

    Automorphism automorphism_arg(const std::string& p_key, const std::string& mu_key) const {
        return Automorphism(params, poly_arg(option(p_key)), scalar_arg(option(mu_key)));
    }
};

void emit(const Cli& cli, const Json& json, const std::string& text) {
    if (cli.json)
        std::cout << json.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::string automorphism_text(const Automorphism& a) {
    return "p = " + a.shear().str() + "\nmu = " + a.scale().str();
}

int cmd_params(const Cli& cli) {
    const ThreefoldParams& p = cli.params;
    WeightVector w = weights(p);
    Json j = Json::object();
    j["d"] = p.d;
    j["l"] = p.l;
    j["a2"] = p.a2;
    j["a3"] = p.a3;
    j["f"] = cusp_poly(p).str();
    j["P"] = defining_poly(p).str();
    j["weights"] = {w.w[0], w.w[1], w.w[2], w.w[3]};
    std::ostringstream text;
    text << "d = " << p.d << "\nl = " << p.l << "\na2 = " << p.a2 << "\na3 = " << p.a3
         << "\nf = " << cusp_poly(p).str() << "\nP = " << defining_poly(p).str() << "\nweights = ("
         << w.w[0] << ", " << w.w[1] << ", " << w.w[2] << ", " << w.w[3] << ")";
    emit(cli, j, text.str());
    return 0;
}

int cmd_normalize(const Cli& cli) {
    if (cli.positionals.size() != 1) throw InvalidArgument("normalize expects one polynomial");
    RingElement nf = normal_form(cli.params, cli.poly_arg(cli.positionals[0]));
    emit(cli, ring_element_json(nf), nf.str());
    return 0;
}

int cmd_eq(const Cli& cli) {
    if (cli.positionals.size() != 2) throw InvalidArgument("eq expects two polynomials");
    bool equal =
        ring_eq(cli.params, cli.poly_arg(cli.positionals[0]), cli.poly_arg(cli.positionals[1]));
    Json j = Json::object();
    j["equal"] = equal;
    emit(cli, j, equal ? "true" : "false");
    return equal ? 0 : 1;
}

int cmd_apply(const Cli& cli) {
    if (cli.positionals.size() != 1) throw InvalidArgument("apply expects one polynomial");
    Automorphism a = cli.automorphism_arg("p", "mu");
    RingElement image = apply_aut(a, cli.poly_arg(cli.positionals[0]));
    emit(cli, ring_element_json(image), image.str());
    return 0;
}

int cmd_compose(const Cli& cli) {
    Automorphism a = cli.automorphism_arg("p1", "mu1");
    Automorphism b = cli.automorphism_arg("p2", "mu2");
    Automorphism c = compose(a, b);
    emit(cli, automorphism_json(c), automorphism_text(c));
    return 0;
}

int cmd_inverse(const Cli& cli) {
    Automorphism a = inverse(cli.automorphism_arg("p", "mu"));
    emit(cli, automorphism_json(a), automorphism_text(a));
    return 0;
}

SubstitutionData read_images(const Cli& cli) {
    std::map<char, std::string> sources;
    for (char v : {'x', 'y', 'z', 't'}) {
        auto it = cli.options.find(std::string("i") + v);
        if (it != cli.options.end()) sources[v] = it->second;
    }
    if (sources.empty()) {
        // stdin fallback: four lines "x=...", "y=...", "z=...", "t=..."
        std::string line;
        while (sources.size() < 4 && std::getline(std::cin, line)) {
            auto eq = line.find('=');
            if (eq == std::string::npos || eq == 0) continue;
            std::string head = line.substr(0, eq);
            head.erase(head.find_last_not_of(" \t") + 1);
            if (head.size() == 1 && std::string("xyzt").find(head[0]) != std::string::npos)
                sources[head[0]] = line.substr(eq + 1);
        }
    }
    for (char v : {'x', 'y', 'z', 't'})
        if (!sources.count(v))
            throw InvalidArgument(std::string("decompose needs an image for ") + v);
    SubstitutionData s;
    s.x = cli.poly_arg(sources['x']);
    s.y = cli.poly_arg(sources['y']);
    s.z = cli.poly_arg(sources['z']);
    s.t = cli.poly_arg(sources['t']);
    return s;
}

int cmd_decompose(const Cli& cli) {
    Automorphism a = decompose(cli.params, read_images(cli));
    emit(cli, automorphism_json(a), automorphism_text(a));
    return 0;
}

int cmd_exp(const Cli& cli) {
    Derivation d(cli.params, cli.poly_arg(cli.option("q")));
    Automorphism a = exp_lnd(d);
    SubstitutionData images = generator_images(a);
    Json j = Json::object();
    j["images"] = substitution_json(images);
    j["p"] = a.shear().str();
    j["mu"] = scalar_json(a.scale());
    std::ostringstream text;
    text << "x = " << images.x.str() << "\ny = " << images.y.str() << "\nz = " << images.z.str()
         << "\nt = " << images.t.str() << "\n"
         << automorphism_text(a);
    emit(cli, j, text.str());
    return 0;
}

int cmd_lift(const Cli& cli) {
    Automorphism a = lift_from_A(cli.params, cli.poly_arg(cli.option("p")));
    SubstitutionData images = generator_images(a);
    Json j = automorphism_json(a);
    j["images"] = substitution_json(images);
    std::ostringstream text;
    text << automorphism_text(a) << "\ny = " << images.y.str();
    emit(cli, j, text.str());
    return 0;
}

SurfacePoint point_args(const Cli& cli, std::size_t from) {
    if (cli.positionals.size() != from + 4)
        throw InvalidArgument("expected four point coordinates");
    return make_point(cli.params, cli.scalar_arg(cli.positionals[from]),
                      cli.scalar_arg(cli.positionals[from + 1]),
                      cli.scalar_arg(cli.positionals[from + 2]),
                      cli.scalar_arg(cli.positionals[from + 3]));
}

int cmd_orbit(const Cli& cli) {
    OrbitClass c = orbit_classify(point_args(cli, 0));
    std::ostringstream text;
    text << "tag = " << orbit_tag_name(c.tag);
    if (c.projective_key)
        text << "\nkey = [" << c.projective_key->first.str() << " : "
             << c.projective_key->second.str() << "]";
    if (c.cusp_key) text << "\nkey = " << c.cusp_key->str();
    emit(cli, orbit_json(c), text.str());
    return 0;
}

int cmd_fiber(const Cli& cli) {
    if (cli.positionals.size() != 2) throw InvalidArgument("fiber expects two coordinates");
    FiberType f = fiber_type(cli.params, cli.scalar_arg(cli.positionals[0]),
                             cli.scalar_arg(cli.positionals[1]));
    std::ostringstream text;
    text << "tag = " << (f.tag == FiberTag::Line ? "Line" : "MultiLine") << "\ncount = " << f.count;
    emit(cli, fiber_json(f), text.str());
    return 0;
}

int cmd_member_i(const Cli& cli) {
    if (cli.positionals.size() != 1) throw InvalidArgument("member-i expects one polynomial");
    IMembership m = ideal_I_membership(cli.params, cli.poly_arg(cli.positionals[0]));
    Json j = Json::object();
    j["member"] = m.member;
    if (m.member) {
        j["A"] = m.a_cofactor.str();
        j["B"] = m.b_cofactor.str();
        emit(cli, j, "member\nA = " + m.a_cofactor.str() + "\nB = " + m.b_cofactor.str());
        return 0;
    }
    emit(cli, j, "not member");
    return 1;
}

int cmd_member_j(const Cli& cli) {
    if (cli.positionals.size() != 1) throw InvalidArgument("member-j expects one polynomial");
    JMembership m = ideal_J_membership(cli.params, cli.poly_arg(cli.positionals[0]));
    Json j = Json::object();
    j["member"] = m.member;
    if (m.member) {
        MultiPoly witness;
        for (std::size_t k = 0; k < m.witness_coeffs.size(); ++k)
            witness +=
                m.witness_coeffs[k] * MultiPoly::variable(Var::Y).pow(static_cast<std::uint32_t>(k));
        j["witness"] = witness.str();
        emit(cli, j, "member\nwitness = " + witness.str());
        return 0;
    }
    emit(cli, j, "not member");
    return 1;
}

int cmd_point_act(const Cli& cli) {
    Automorphism a = cli.automorphism_arg("p", "mu");
    SurfacePoint image = act_on_point(a, point_args(cli, 0));
    std::ostringstream text;
    text << "x = " << image.x.str() << "\ny = " << image.y.str() << "\nz = " << image.z.str()
         << "\nt = " << image.t.str();
    emit(cli, point_json(image), text.str());
    return 0;
}

int cmd_verify(const Cli& cli) {
    VerifyOptions opts{cli.params, cli.cyclo, cli.seed};
    std::vector<PropertyResult> results = run_verify_suite(opts);
    std::size_t passed = 0;
    Json props = Json::array();
    std::ostringstream text;
    for (const PropertyResult& r : results) {
        if (r.pass) ++passed;
        Json e = Json::object();
        e["name"] = r.name;
        e["pass"] = r.pass;
        if (!r.detail.empty()) e["detail"] = r.detail;
        props.push_back(std::move(e));
        text << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) text << " (" << r.detail << ")";
        text << "\n";
    }
    text << "verified " << passed << "/" << results.size() << " properties";
    Json j = Json::object();
    j["seed"] = cli.seed;
    j["properties"] = std::move(props);
    j["passed"] = passed;
    j["total"] = results.size();
    emit(cli, j, text.str());
    return passed == results.size() ? 0 : 1;
}

const char* kUsage =
    "usage: kr2 --d D --l L --a2 A2 --a3 A3 [--cyclo N] [--seed N] [--output text|json] [--json]\n"
    "           <command> [args]\n"
    "\n"
    "commands:\n"
    "  params                                echo f, P and the torus weights\n"
    "  normalize <poly>                      canonical form in C[X]\n"
    "  eq <poly> <poly>                      equality in C[X] (exit 1 when different)\n"
    "  apply --p <poly> --mu <scalar> <poly> apply the automorphism (p, mu)\n"
    "  compose --p1 .. --mu1 .. --p2 .. --mu2 ..\n"
    "  inverse --p <poly> --mu <scalar>\n"
    "  decompose [--ix .. --iy .. --iz .. --it ..]   (or x=.. lines on stdin)\n"
    "  exp --q <poly in x,z>                 exponential of the derivation q*D\n"
    "  lift --p <poly in x,z>                the shear t -> t + f^l p as a group element\n"
    "  orbit <x> <y> <z> <t>                 orbit classification of a point\n"
    "  fiber <x0> <z0>                       fiber type of the projection\n"
    "  member-i <poly in x,z,t>              membership in I = (f^l, x + t^a3)\n"
    "  member-j <poly>                       membership in J = f^l C[X]\n"
    "  point-act --p .. --mu .. <x> <y> <z> <t>\n"
    "  verify [--seed N]                     run the library invariant suite\n";

int run(int argc, char** argv) {
    std::vector<std::string> tokens(argv + 1, argv + argc);
    if (tokens.empty()) {
        std::cerr << kUsage;
        return 2;
    }

    std::optional<long> d, l, a2, a3, cyclo;
    Cli cli;
    if (const char* env = std::getenv("KR2_OUTPUT")) cli.json = std::string(env) == "json";

    const std::vector<std::string> command_options{"p",  "mu", "p1", "mu1", "p2", "mu2",
                                                   "q",  "ix", "iy", "iz",  "it"};
    auto is_command_option = [&](const std::string& name) {
        for (const auto& o : command_options)
            if (o == name) return true;
        return false;
    };

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (tok.rfind("--", 0) == 0) {
            std::string name = tok.substr(2);
            if (name == "json") {
                cli.json = true;
                continue;
            }
            if (name == "output") {
                if (i + 1 >= tokens.size()) throw InvalidArgument("--output needs a value");
                std::string v = tokens[++i];
                if (v != "text" && v != "json")
                    throw InvalidArgument("--output must be text or json");
                cli.json = v == "json";
                continue;
            }
            auto numeric = [&](std::optional<long>& slot) {
                if (i + 1 >= tokens.size()) throw InvalidArgument(tok + " needs a value");
                slot = std::stol(tokens[++i]);
            };
            if (name == "d") {
                numeric(d);
            } else if (name == "l") {
                numeric(l);
            } else if (name == "a2") {
                numeric(a2);
            } else if (name == "a3") {
                numeric(a3);
            } else if (name == "cyclo") {
                numeric(cyclo);
            } else if (name == "seed") {
                if (i + 1 >= tokens.size()) throw InvalidArgument("--seed needs a value");
                cli.seed = std::stoull(tokens[++i]);
            } else if (is_command_option(name)) {
                if (i + 1 >= tokens.size()) throw InvalidArgument(tok + " needs a value");
                cli.options[name] = tokens[++i];
            } else {
                throw InvalidArgument("unknown option " + tok);
            }
        } else if (cli.command.empty()) {
            cli.command = tok;
        } else {
            cli.positionals.push_back(tok);
        }
    }

    if (cli.command.empty()) {
        std::cerr << kUsage;
        return 2;
    }
    if (cli.command == "help" || cli.command == "--help") {
        std::cout << kUsage;
        return 0;
    }
    if (!d || !l || !a2 || !a3)
        throw InvalidArgument("the parameters --d --l --a2 --a3 are required");
    cli.params = make_params(*d, *l, *a2, *a3);
    if (cyclo) cli.cyclo = CycloContext::make(*cyclo);

    if (cli.command == "params") return cmd_params(cli);
    if (cli.command == "normalize") return cmd_normalize(cli);
    if (cli.command == "eq") return cmd_eq(cli);
    if (cli.command == "apply") return cmd_apply(cli);
    if (cli.command == "compose") return cmd_compose(cli);
    if (cli.command == "inverse") return cmd_inverse(cli);
    if (cli.command == "decompose") return cmd_decompose(cli);
    if (cli.command == "exp") return cmd_exp(cli);
    if (cli.command == "lift") return cmd_lift(cli);
    if (cli.command == "orbit") return cmd_orbit(cli);
    if (cli.command == "fiber") return cmd_fiber(cli);
    if (cli.command == "member-i") return cmd_member_i(cli);
    if (cli.command == "member-j") return cmd_member_j(cli);
    if (cli.command == "point-act") return cmd_point_act(cli);
    if (cli.command == "verify") return cmd_verify(cli);
    throw InvalidArgument("unknown command " + cli.command);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kr2::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const kr2::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
