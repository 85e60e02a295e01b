// SPDX-License-Identifier: MIT
//
// rcgc: command-line front end. Results go to stdout as JSON (or plain
// "re im" lines); diagnostics go to stderr.
//
// Exit codes: 0 success, 1 parse error, 2 domain error, 3 numeric error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rcgc/rcgc.hpp"

using namespace rcgc;
using json = nlohmann::ordered_json;

namespace {

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Params = std::map<std::string, std::string>;

// ---- value parsing ----------------------------------------------------

double parse_angle(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    // [sign][coef][*]pi[/den] or a plain decimal.
    static const std::regex sym(R"(^([+-]?)(\d*\.?\d*(?:[eE][+-]?\d+)?)\*?pi(?:/(\d*\.?\d+))?$)");
    std::smatch m;
    if (std::regex_match(s, m, sym)) {
        double v = pi;
        if (m[2].length() > 0) v *= std::stod(m[2].str());
        if (m[3].matched) v /= std::stod(m[3].str());
        return m[1].str() == "-" ? -v : v;
    }
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size() && std::isfinite(v)) return v;
    } catch (const std::exception&) {
    }
    throw parse_error("cannot parse angle '" + raw + "'");
}

SpherePoint parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw parse_error("point '" + s + "' must be theta,phi");
    return {parse_angle(s.substr(0, comma)), parse_angle(s.substr(comma + 1))};
}

HalfInt parse_half(const std::string& s) {
    try {
        return HalfInt::parse(s);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

int parse_int(const std::string& s) {
    const HalfInt h = parse_half(s);
    if (!h.is_integer()) throw parse_error("expected an integer, got '" + s + "'");
    return h.as_int();
}

double parse_real(const std::string& s) {
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw parse_error("cannot parse number '" + s + "'");
}

bool parse_bool(const std::string& s) {
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    throw parse_error("expected true or false, got '" + s + "'");
}

Family parse_family(const std::string& s) {
    static const std::map<std::string, Family> names = {
        {"xi+", Family::xi_p},       {"xi_p", Family::xi_p},       {"xi-", Family::xi_m},
        {"xi_m", Family::xi_m},      {"theta+", Family::theta_p},  {"theta_p", Family::theta_p},
        {"theta-", Family::theta_m}, {"theta_m", Family::theta_m}, {"zeta+", Family::zeta_p},
        {"zeta_p", Family::zeta_p},  {"zeta-", Family::zeta_m},    {"zeta_m", Family::zeta_m},
        {"eta", Family::eta}};
    auto it = names.find(s);
    if (it == names.end()) throw parse_error("unknown family '" + s + "'");
    return it->second;
}

// ---- result helpers ---------------------------------------------------

json cjson(cnum z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json with_oracle(json out, cnum value, cnum oracle) {
    out["value"] = cjson(value);
    out["oracle"] = {{"value", cjson(oracle)}, {"abs_err", std::abs(value - oracle)}};
    return out;
}

class Args {
public:
    explicit Args(const Params& p) : p_(p) {}
    const std::string& str(const std::string& k) const {
        auto it = p_.find(k);
        if (it == p_.end()) throw parse_error("missing --" + k);
        return it->second;
    }
    bool has(const std::string& k) const { return p_.count(k) != 0; }
    HalfInt half(const std::string& k) const { return parse_half(str(k)); }
    int integer(const std::string& k) const { return parse_int(str(k)); }
    double angle(const std::string& k) const { return parse_angle(str(k)); }
    SpherePoint point(const std::string& k) const { return parse_point(str(k)); }
    double real(const std::string& k, double dflt) const { return has(k) ? parse_real(str(k)) : dflt; }
    bool flag(const std::string& k) const { return has(k) && parse_bool(str(k)); }

private:
    const Params& p_;
};

// ---- commands ---------------------------------------------------------

struct Command {
    std::string help;
    std::vector<std::pair<std::string, std::string>> options;  // name, help
    std::vector<std::string> flags;
    std::function<json(const Args&)> run;
};

json cmd_wigner_d(const Args& a) {
    const HalfInt k = a.half("k"), q = a.half("q"), qp = a.half("qp");
    const EulerAngles o{a.angle("phi"), a.angle("theta"), a.angle("psi")};
    const std::string form = a.has("form") ? a.str("form") : "psum";
    if (form != "psum" && form != "hyp") throw parse_error("--form must be psum or hyp");
    const cnum v = form == "hyp" ? wigner_d_hyp(k, q, qp, o) : wigner_d(k, q, qp, o);
    json out;
    if (a.flag("oracle")) return with_oracle(out, v, form == "hyp" ? wigner_d(k, q, qp, o) : wigner_d_hyp(k, q, qp, o));
    out["value"] = cjson(v);
    return out;
}

json cmd_euler(const Args& a) {
    const SpherePoint x1 = a.point("x1"), x2 = a.point("x2");
    json sols = json::array();
    for (const auto& g : euler_from_points(x1, x2))
        sols.push_back({{"branch", branch_name(g.branch.label)},
                        {"phi", g.omega.phi},
                        {"theta", g.omega.theta},
                        {"psi", g.omega.psi},
                        {"residual", rotation_residual(g.omega, x1, x2)}});
    return {{"solutions", sols}};
}

json cmd_sphfun(const Args& a) {
    const Family f = parse_family(a.str("family"));
    const HalfInt k = a.half("k"), q = a.half("q"), qp = a.half("qp");
    const SpherePoint x1 = a.point("x1"), x2 = a.point("x2");
    const cnum v = a.has("n-prime") ? sphfun_named(f, k, q, qp, x1, x2, a.integer("n-prime"))
                                    : sphfun_named(f, k, q, qp, x1, x2);
    json out{{"family", family_name(f)}};
    if (f == Family::eta) {
        const auto g = eta_solution(x1, x2);
        out["branch"] = {{"label", branch_name(g.branch.label)},
                         {"phi", g.omega.phi},
                         {"theta", g.omega.theta},
                         {"psi", g.omega.psi}};
        if (a.flag("oracle")) return with_oracle(out, v, wigner_d(k, q, qp, g.omega));
    }
    out["value"] = cjson(v);
    return out;
}

json cmd_cgc(const Args& a) {
    const HalfInt j1 = a.half("j1"), m1 = a.half("m1"), j2 = a.half("j2"), m2 = a.half("m2"), j = a.half("j"),
                  m = a.half("m");
    const double v = cgc(j1, m1, j2, m2, j, m);
    json out;
    if (a.flag("oracle") || a.flag("exact")) {
        const ExactCgc e = cgc_exact(j1, m1, j2, m2, j, m);
        out["exact"] = {{"coef", e.coef.get_str()}, {"radicand", e.radicand.get_str()}};
        return with_oracle(out, v, e.to_double());
    }
    out["value"] = cjson(v);
    return out;
}

json cmd_rcgc1(const Args& a) {
    const cnum v = rcgc1(a.half("l1"), a.half("l2"), a.half("l"), a.half("m1"), a.half("m2"), a.half("m"),
                         a.point("x1"), a.point("x2"));
    return {{"value", cjson(v)}};
}

json cmd_rcgc2(const Args& a) {
    const cnum v = rcgc2(a.half("l1"), a.half("l2"), a.half("lp"), a.half("l"), a.half("mp"), a.half("m"),
                         a.point("x1"), a.point("x2"));
    return {{"value", cjson(v)}};
}

json cmd_s_integral(const Args& a) {
    const HalfInt k = a.half("k"), q = a.half("q"), qp = a.half("qp");
    const SpherePoint x1 = a.point("x1");
    const cnum v = S_integral(k, q, qp, x1);
    if (a.flag("oracle")) return with_oracle(json::object(), v, s_integral_oracle(k, q, qp, x1, a.real("tol", 1e-10)));
    return {{"value", cjson(v)}};
}

json cmd_redmat(const Args& a) {
    const HalfInt l = a.half("l"), k = a.half("k"), lb = a.half("lbar");
    const cnum v = reduced_matrix_element(l, k, lb, c_operator_at_pole(k));
    if (!a.flag("oracle")) return {{"value", cjson(v)}};
    // Wigner-Eckart at the first (m, q, mbar) with a nonzero coupling.
    for (HalfInt m = -l; m <= l; m += 1)
        for (HalfInt q = -k; q <= k; q += 1) {
            const HalfInt mb = m - q;
            if (!compatible(lb, mb)) continue;
            const double c = cgc(lb, mb, k, q, l, m);
            if (std::abs(c) < 1e-12) continue;
            json out{{"oracle_components", {{"m", m.str()}, {"q", q.str()}, {"mbar", mb.str()}}}};
            return with_oracle(out, v, gaunt_oracle(l, m, k, q, lb, mb) / c);
        }
    return with_oracle(json::object(), v, 0.0);
}

json cmd_coulomb2e(const Args& a) {
    const int l = a.integer("l"), m = a.integer("m"), lp = a.integer("lp"), mp = a.integer("mp");
    const int k_max = a.has("k-max") ? a.integer("k-max") : l + lp;
    // g as comma-separated values for mu = -l..l; default delta_{mu 0}.
    auto weights = [&](const std::string& key, int rank) {
        std::vector<double> w(2 * rank + 1, 0.0);
        w[rank] = 1.0;
        if (a.has(key)) {
            std::vector<double> v;
            std::stringstream ss(a.str(key));
            for (std::string item; std::getline(ss, item, ',');) v.push_back(parse_real(item));
            if (static_cast<int>(v.size()) != 2 * rank + 1)
                throw parse_error("--" + key + " needs " + std::to_string(2 * rank + 1) + " values");
            w = v;
        }
        return w;
    };
    const auto wb = weights("g-bra", l), wk = weights("g-ket", lp);
    const double rl = a.real("r-less", 0.5), rg = a.real("r-greater", 1.0);
    const RadialWeight gb{[wb, l](int mu) { return cnum(wb.at(mu + l)); }, rl, rg};
    const RadialWeight gk{[wk, lp](int mu) { return cnum(wk.at(mu + lp)); }, rl, rg};
    const cnum v = coulomb_2e_angular(l, m, lp, mp, gb, gk, k_max);
    json out{{"k_max", k_max}};
    if (a.flag("oracle")) return with_oracle(out, v, coulomb_2e_oracle(l, m, lp, mp, gb.g, gk.g, rl, rg, k_max));
    out["value"] = cjson(v);
    return out;
}

json cmd_verify(const Args& a) {
    const std::string suite = a.str("suite");
    const int draws = a.has("draws") ? a.integer("draws") : 200;
    if (draws < 1) throw domain_error("--draws must be positive");
    std::mt19937 rng(a.has("seed") ? static_cast<unsigned>(a.integer("seed")) : 1u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto pick = [&](HalfInt k) {
        return HalfInt::from_twice(-k.twice() + 2 * static_cast<int>(rng() % (k.twice() + 1)));
    };
    auto point = [&] { return SpherePoint{pi * u(rng), two_pi * u(rng)}; };
    double worst = 0.0;
    long checks = 0;
    if (suite == "unitarity") {
        for (int t = 0; t < draws; ++t) {
            const HalfInt k = HalfInt::from_twice(t % 13);
            const EulerAngles o{two_pi * u(rng), pi * u(rng), two_pi * u(rng)};
            for (HalfInt a1 = -k; a1 <= k; a1 += 1)
                for (HalfInt b1 = -k; b1 <= k; b1 += 1) {
                    cnum s = 0.0;
                    for (HalfInt q = -k; q <= k; q += 1) s += std::conj(wigner_d(k, q, a1, o)) * wigner_d(k, q, b1, o);
                    worst = std::max(worst, std::abs(s - (a1 == b1 ? 1.0 : 0.0)));
                    ++checks;
                }
        }
    } else if (suite == "hyp") {
        for (int t = 0; t < draws; ++t) {
            const HalfInt k = HalfInt::from_twice(t % 10);
            const EulerAngles o{two_pi * u(rng), pi * u(rng), two_pi * u(rng)};
            const HalfInt q = pick(k), qp = pick(k);
            worst = std::max(worst, std::abs(wigner_d(k, q, qp, o) - wigner_d_hyp(k, q, qp, o)));
            ++checks;
        }
    } else if (suite == "geometry") {
        for (int t = 0; t < draws; ++t) {
            const SpherePoint x1 = point(), x2 = point();
            for (const auto& g : euler_from_points(x1, x2)) {
                worst = std::max(worst, rotation_residual(g.omega, x1, x2));
                ++checks;
            }
        }
    } else if (suite == "branches") {
        for (int t = 0; t < draws; ++t) {
            const SpherePoint x1 = point(), x2 = point();
            const HalfInt k = HalfInt::from_twice(t % 7), q = pick(k), qp = pick(k);
            for (const auto& g : euler_from_points(x1, x2)) {
                worst = std::max(worst, std::abs(sphfun_branch(g.branch, k, q, qp, x1, x2) - wigner_d(k, q, qp, g.omega)));
                ++checks;
            }
        }
    } else if (suite == "closure") {
        for (int t = 0; t < draws; ++t) {
            const SpherePoint x1 = point(), x2 = point();
            const HalfInt k1 = HalfInt::from_twice(t % 5), k2 = HalfInt::from_twice((t / 5) % 5);
            const HalfInt q1 = pick(k1), q1p = pick(k1), q2 = pick(k2), q2p = pick(k2);
            cnum s = 0.0;
            for (const auto& [k, v] : sphfun_reduce(Family::eta, k1, q1, q1p, k2, q2, q2p, x1, x2)) s += v;
            worst = std::max(worst, std::abs(s - eta(k1, q1, q1p, x1, x2) * eta(k2, q2, q2p, x1, x2)));
            ++checks;
        }
    } else if (suite == "boundary") {
        for (int tk = 0; tk <= 8; ++tk) {
            const HalfInt k = HalfInt::from_twice(tk);
            for (HalfInt q = -k; q <= k; q += 1)
                for (HalfInt qp = -k; qp <= k; qp += 1) {
                    auto [lo, hi] = p_range(k, q, qp);
                    for (int p = lo; p <= hi; ++p) {
                        if (2 * p + (qp - q).as_int() < 0) continue;
                        for (bool at_pi : {false, true}) {
                            const double direct = pI({k, q, qp, p, at_pi ? pi : 0.0, 0.0, pi, 1});
                            worst = std::max(worst, std::abs(pI_boundary(k, q, qp, p, at_pi) - direct));
                            ++checks;
                        }
                    }
                }
        }
    } else {
        throw parse_error("unknown suite '" + suite + "' (unitarity, hyp, geometry, branches, closure, boundary)");
    }
    return {{"suite", suite}, {"checks", checks}, {"max_error", worst}};
}

const std::map<std::string, Command>& commands() {
    static const std::map<std::string, Command> table = {
        {"wigner-d",
         {"Wigner D-function D^k_{qq'}(phi, theta, psi)",
          {{"k", "rank"}, {"q", "row index"}, {"qp", "column index"}, {"phi", "Phi"}, {"theta", "Theta"},
           {"psi", "Psi"}, {"form", "psum or hyp"}},
          {"oracle"},
          cmd_wigner_d}},
        {"euler", {"Euler angles of all branches carrying x1 to x2", {{"x1", "theta,phi"}, {"x2", "theta,phi"}}, {},
                   cmd_euler}},
        {"sphfun",
         {"named spherical function of a coordinate pair",
          {{"family", "xi+, xi-, theta+, theta-, zeta+, zeta-, eta"},
           {"k", "rank"},
           {"q", "row index"},
           {"qp", "column index"},
           {"x1", "theta,phi"},
           {"x2", "theta,phi"},
           {"n-prime", "explicit winding n'"}},
          {"oracle"},
          cmd_sphfun}},
        {"cgc",
         {"Clebsch-Gordan coefficient <j1 m1 j2 m2|j m>",
          {{"j1", ""}, {"m1", ""}, {"j2", ""}, {"m2", ""}, {"j", ""}, {"m", ""}},
          {"oracle", "exact"},
          cmd_cgc}},
        {"rcgc1",
         {"rotated Clebsch-Gordan coefficient, first type",
          {{"l1", ""}, {"l2", ""}, {"l", ""}, {"m1", ""}, {"m2", ""}, {"m", ""}, {"x1", "theta,phi"}, {"x2", "theta,phi"}},
          {},
          cmd_rcgc1}},
        {"rcgc2",
         {"rotated Clebsch-Gordan coefficient, second type",
          {{"l1", ""}, {"l2", ""}, {"lp", ""}, {"l", ""}, {"mp", ""}, {"m", ""}, {"x1", "theta,phi"}, {"x2", "theta,phi"}},
          {},
          cmd_rcgc2}},
        {"s-integral",
         {"closed-form sphere integral S^k_{qq'}(x1)",
          {{"k", ""}, {"q", ""}, {"qp", ""}, {"x1", "theta,phi"}, {"tol", "oracle tolerance"}},
          {"oracle"},
          cmd_s_integral}},
        {"redmat",
         {"reduced matrix element [l||C^k||lbar]", {{"l", ""}, {"k", ""}, {"lbar", ""}}, {"oracle"}, cmd_redmat}},
        {"coulomb2e",
         {"angular two-electron Coulomb element",
          {{"l", ""},
           {"m", ""},
           {"lp", ""},
           {"mp", ""},
           {"k-max", "multipole cut-off (default l + lp)"},
           {"g-bra", "comma-separated g_mu, mu = -l..l"},
           {"g-ket", "comma-separated g_mu, mu = -lp..lp"},
           {"r-less", "r_< (default 0.5)"},
           {"r-greater", "r_> (default 1)"}},
          {"oracle"},
          cmd_coulomb2e}},
        {"verify",
         {"run a property suite and report the maximum error",
          {{"suite", "unitarity, hyp, geometry, branches, closure, boundary"}, {"draws", ""}, {"seed", ""}},
          {},
          cmd_verify}},
    };
    return table;
}

// ---- execution --------------------------------------------------------

struct Outcome {
    json result;
    int code = 0;
};

Outcome execute(const std::string& name, const Params& params) {
    json out{{"command", name}, {"inputs", params}};
    auto fail = [&](int code, const char* kind, const std::string& msg) {
        std::cerr << "rcgc " << name << ": " << msg << '\n';
        out["error"] = {{"kind", kind}, {"message", msg}};
        return Outcome{out, code};
    };
    try {
        auto it = commands().find(name);
        if (it == commands().end()) throw parse_error("unknown command '" + name + "'");
        const Command& c = it->second;
        std::set<std::string> known(c.flags.begin(), c.flags.end());
        for (const auto& o : c.options) known.insert(o.first);
        for (const auto& [k, v] : params)
            if (!known.count(k)) throw parse_error("unknown key '" + k + "'");
        const json r = c.run(Args(params));
        for (const auto& [k, v] : r.items()) out[k] = v;
        return {out, 0};
    } catch (const parse_error& e) {
        return fail(1, "parse", e.what());
    } catch (const domain_error& e) {
        return fail(2, "domain", e.what());
    } catch (const numeric_error& e) {
        return fail(3, "numeric", e.what());
    } catch (const std::exception& e) {
        return fail(3, "numeric", e.what());
    }
}

void print(const Outcome& o, bool plain) {
    if (o.code != 0 && plain) return;
    if (!plain) {
        std::cout << o.result.dump() << '\n';
        return;
    }
    const json& r = o.result;
    std::cout.precision(17);
    if (r.contains("value")) std::cout << r["value"]["re"].get<double>() << ' ' << r["value"]["im"].get<double>() << '\n';
    if (r.contains("oracle"))
        std::cout << r["oracle"]["value"]["re"].get<double>() << ' ' << r["oracle"]["value"]["im"].get<double>() << ' '
                  << r["oracle"]["abs_err"].get<double>() << '\n';
    if (r.contains("solutions"))
        for (const auto& s : r["solutions"])
            std::cout << s["branch"].get<std::string>() << ' ' << s["phi"].get<double>() << ' '
                      << s["theta"].get<double>() << ' ' << s["psi"].get<double>() << '\n';
    if (r.contains("max_error")) std::cout << r["max_error"].get<double>() << '\n';
}

Params params_from_json(const json& j) {
    Params p;
    const json& src = j.contains("inputs") ? j["inputs"] : j;
    for (const auto& [k, v] : src.items()) {
        if (k == "command") continue;
        if (v.is_string()) p[k] = v.get<std::string>();
        else if (v.is_boolean()) p[k] = v.get<bool>() ? "true" : "false";
        else if (v.is_number()) {
            std::ostringstream os;
            os.precision(17);
            os << v.get<double>();
            p[k] = os.str();
        } else throw parse_error("value of '" + k + "' must be a string, number or boolean");
    }
    return p;
}

int run_batch(bool plain) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(std::cin, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    const auto results = parallel_map<Outcome>(static_cast<int>(lines.size()), [&](int i) {
        try {
            const json j = json::parse(lines[i]);
            if (!j.is_object() || !j.contains("command") || !j["command"].is_string())
                throw parse_error("request must be an object with a string 'command'");
            return execute(j["command"].get<std::string>(), params_from_json(j));
        } catch (const json::exception& e) {
            std::cerr << "rcgc batch line " << i + 1 << ": " << e.what() << '\n';
            return Outcome{json{{"error", {{"kind", "parse"}, {"message", e.what()}}}}, 1};
        } catch (const parse_error& e) {
            std::cerr << "rcgc batch line " << i + 1 << ": " << e.what() << '\n';
            return Outcome{json{{"error", {{"kind", "parse"}, {"message", e.what()}}}}, 1};
        }
    });
    int code = 0;
    for (const auto& o : results) {
        print(o, plain);
        if (code == 0) code = o.code;
    }
    return code;
}

// CLI11 reads "--q -1/2" as two options; glue such values to their key.
std::vector<std::string> normalize_args(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < argc) {
            const std::string next = argv[i + 1];
            if (next.size() > 1 && next[0] == '-' &&
                (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.' || next[1] == 'p')) {
                out.push_back(a + "=" + next);
                ++i;
                continue;
            }
        }
        out.push_back(a);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wigner D-functions of coordinate pairs, sphere integrals and rotated Clebsch-Gordan coefficients"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    std::string output = "json";
    bool batch = false;
    app.add_option("--output", output, "json or plain")->check(CLI::IsMember({"json", "plain"}));
    app.add_flag("--batch", batch, "read newline-delimited JSON requests from stdin");

    std::map<std::string, Params> params;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, c] : commands()) {
        CLI::App* s = app.add_subcommand(name, c.help);
        subs[name] = s;
        Params& p = params[name];
        for (const auto& [key, help] : c.options)
            s->add_option_function<std::string>("--" + key, [&p, key = key](const std::string& v) { p[key] = v; }, help);
        for (const auto& key : c.flags)
            s->add_flag_callback("--" + key, [&p, key = key] { p[key] = "true"; });
    }

    auto args = normalize_args(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    const bool plain = output == "plain";
    if (batch) return run_batch(plain);
    for (const auto& [name, s] : subs)
        if (s->parsed()) {
            const Outcome o = execute(name, params[name]);
            print(o, plain);
            return o.code;
        }
    std::cerr << app.help();
    return 1;
}
