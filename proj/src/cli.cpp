#include "aperiodica/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <map>

#include "aperiodica/betanum.hpp"
#include "aperiodica/checks.hpp"
#include "aperiodica/json_io.hpp"
#include "aperiodica/selfsim.hpp"
#include "aperiodica/substderive.hpp"
#include "aperiodica/wordcomb.hpp"

namespace aperiodica {
namespace cli {

namespace {

struct ParamFlags {
    std::string eps, eta, c = "0", len;

    cap::CapParams params() const {
        return {QuadraticReal::parse(eps), QuadraticReal::parse(eta)};
    }
    cap::Window window() const {
        return {QuadraticReal::parse(c), QuadraticReal::parse(len)};
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf, bool need_eta) {
    cmd->add_option("--eps", pf.eps, "slope of the star direction, e.g. \"-1/sqrt(2)\"")
        ->required();
    if (need_eta)
        cmd->add_option("--eta", pf.eta, "slope of the physical direction, e.g. \"tau\"")
            ->required();
    cmd->add_option("--c", pf.c, "window left endpoint (default 0)");
    cmd->add_option("--len", pf.len, "window length")->required();
}

QuadraticReal parse_beta(const std::string& text) {
    // "m,n,+" or "m,n,-" encode beta^2 = m*beta +- n; anything else is a literal
    auto first = text.find(',');
    if (first == std::string::npos) return QuadraticReal::parse(text);
    auto second = text.find(',', first + 1);
    if (second == std::string::npos) throw std::invalid_argument("--beta: expected m,n,+ or m,n,-");
    long long m = std::stoll(text.substr(0, first));
    long long n = std::stoll(text.substr(first + 1, second - first - 1));
    std::string sign = text.substr(second + 1);
    long long nn = sign == "+" ? n : sign == "-" ? -n : throw std::invalid_argument("--beta sign");
    // positive root of x^2 - m x - nn
    long long disc = m * m + 4 * nn;
    if (disc <= 0) throw std::invalid_argument("--beta: no real quadratic root");
    return QuadraticReal(Rational(m, 2), Rational(1, 2), disc);
}

std::vector<int> parse_digits(const std::string& text) {
    std::vector<int> digits;
    if (text.find(',') != std::string::npos) {
        std::string cur;
        for (char ch : text + ",") {
            if (ch == ',') {
                digits.push_back(std::stoi(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("digit string");
            digits.push_back(ch - '0');
        }
    }
    return digits;
}

Json morphism_json(const subst::SubstitutivityResult& res) {
    Json j;
    j["gamma"] = quadratic_json(res.gamma);
    j["gamma_str"] = res.gamma.to_string();
    Json cuts = Json::array();
    for (const auto& c : res.cuts) cuts.push_back(c.to_string());
    j["S"] = cuts;
    j["alphabet"] = res.phi.names;
    Json images;
    for (size_t i = 0; i < res.phi.size(); ++i)
        images[res.phi.names[i]] = res.phi.image_string(static_cast<int>(i));
    j["images"] = images;
    Json jret = Json::array();
    for (long v : res.j) jret.push_back(v);
    j["j"] = jret;
    j["initial"] = Json::array({res.phi.names[static_cast<size_t>(res.v_minus1)],
                                res.phi.names[static_cast<size_t>(res.v0)]});
    Json proj;
    for (size_t i = 0; i < res.psi.size(); ++i)
        proj[res.phi.names[i]] = std::string(1, res.psi[i]);
    j["projection"] = proj;
    j["reflected"] = res.reflected;
    return j;
}

int run_gen(const ParamFlags& pf, size_t left, size_t right, const std::string& format,
            std::ostream& out) {
    cap::CapParams params = pf.params();
    cap::Window window = pf.window();
    cap::GenResult g = cap::generate_any(params, window, left, right);
    if (format == "word") {
        out << g.word.substr(0, g.origin_index) << "|" << g.word.substr(g.origin_index) << "\n";
        return 0;
    }
    if (format == "csv") {
        out << "p,q,value,star\n";
        for (const auto& pt : g.points)
            out << pt.p << "," << pt.q << "," << pt.value(params.eta).to_string() << ","
                << pt.star(params.eps).to_string() << "\n";
        return 0;
    }
    Json j;
    j["eps"] = quadratic_json(params.eps);
    j["eta"] = quadratic_json(params.eta);
    j["window"] = Json{{"c", quadratic_json(window.c)}, {"len", quadratic_json(window.len)}};
    Json pts = Json::array();
    for (const auto& pt : g.points) pts.push_back(point_json(pt, params));
    j["points"] = pts;
    j["word"] = g.word;
    j["origin_index"] = g.origin_index;
    out << j.dump(2) << "\n";
    return 0;
}

int run_analyze(const ParamFlags& pf, int n, const std::string& what, const std::string& factor,
                const std::string& side, std::ostream& out) {
    if (what == "dn") {
        auto dn = words::dn_breakpoints(QuadraticReal::parse(pf.eps), n);
        Json arr = Json::array();
        for (const auto& l : dn) arr.push_back(l.to_string());
        out << Json{{"n", n}, {"breakpoints", arr}}.dump(2) << "\n";
        return 0;
    }
    cap::CapParams params = pf.params();
    cap::Window window = pf.window();
    if (what == "factors") {
        auto fs = words::factors(params, window, n);
        Json arr = Json::array();
        for (const auto& e : fs.entries)
            arr.push_back(Json{{"word", e.word},
                               {"cell_lo", e.lo.to_string()},
                               {"cell_hi", e.hi.to_string()}});
        out << Json{{"n", n}, {"count", fs.entries.size()}, {"factors", arr}}.dump(2) << "\n";
        return 0;
    }
    if (what == "complexity") {
        auto rep = words::complexity(params, window, n);
        Json j{{"n", n}, {"count", rep.count}};
        j["regime"] = rep.regime == words::ComplexityRegime::generic ? "2n+1"
                      : rep.regime == words::ComplexityRegime::sturmian ? "n+1"
                                                                        : "n+n0+1";
        if (rep.n0) j["n0"] = *rep.n0;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (what == "special") {
        auto sp = words::special_factors(params, window, n,
                                         side == "right" ? words::Side::right : words::Side::left);
        Json arr = Json::array();
        for (const auto& s : sp) arr.push_back(Json{{"word", s.word}, {"extensions", s.extensions}});
        out << Json{{"n", n}, {"side", side}, {"special", arr}}.dump(2) << "\n";
        return 0;
    }
    if (what == "density") {
        if (factor.empty()) throw std::invalid_argument("analyze --what density needs --factor");
        QuadraticReal rho = words::factor_density(params, window, factor);
        out << Json{{"factor", factor}, {"density", rho.to_string()}}.dump(2) << "\n";
        return 0;
    }
    throw std::invalid_argument("analyze: unknown --what " + what);
}

int run_rauzy(const ParamFlags& pf, int n, const std::string& format, bool reduced,
              std::ostream& out) {
    cap::CapParams params = pf.params();
    cap::Window window = pf.window();
    auto g = words::rauzy(params, window, n);
    if (format == "json") {
        Json j{{"n", n}, {"vertices", g.vertices}};
        Json edges = Json::array();
        for (const auto& e : g.edges)
            edges.push_back(Json{{"from", g.vertices[e.from]},
                                 {"to", g.vertices[e.to]},
                                 {"label", e.label},
                                 {"weight", e.weight.to_string()}});
        j["edges"] = edges;
        if (reduced) {
            auto rg = words::reduce(g);
            Json redges = Json::array();
            for (const auto& e : rg.edges)
                redges.push_back(Json{{"from", rg.vertices[e.from]},
                                      {"to", rg.vertices[e.to]},
                                      {"weight", e.weight.to_string()},
                                      {"path_len", e.path_len}});
            j["reduced"] = Json{{"vertices", rg.vertices}, {"edges", redges}};
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "digraph rauzy {\n";
    if (reduced) {
        auto rg = words::reduce(g);
        for (const auto& v : rg.vertices) out << "  \"" << v << "\";\n";
        for (const auto& e : rg.edges)
            out << "  \"" << rg.vertices[e.from] << "\" -> \"" << rg.vertices[e.to]
                << "\" [label=\"" << e.weight.to_string() << "\"];\n";
    } else {
        for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
        for (const auto& e : g.edges)
            out << "  \"" << g.vertices[e.from] << "\" -> \"" << g.vertices[e.to]
                << "\" [label=\"" << e.label << " " << e.weight.to_string() << "\"];\n";
    }
    out << "}\n";
    return 0;
}

int run_beta(const std::string& beta_text, const std::string& expand, long frac_depth, bool renyi,
             const std::string& admissible, const std::string& integers, bool do_subst,
             std::ostream& out) {
    auto basis = beta::BetaBasis::of(parse_beta(beta_text));
    Json j;
    j["beta"] = basis.beta.to_string();
    if (!expand.empty()) {
        auto ds = beta::greedy_expand(QuadraticReal::parse(expand), basis, frac_depth);
        j["expand"] = ds.to_string();
    }
    if (renyi) j["renyi"] = beta::renyi_development(basis).to_string();
    if (!admissible.empty())
        j["admissible"] = beta::parry_admissible(parse_digits(admissible), basis);
    if (!integers.empty()) {
        auto zs = beta::beta_integers(basis, QuadraticReal::parse(integers));
        Json vals = Json::array();
        for (const auto& v : zs.values) vals.push_back(v.to_string());
        j["integers"] = vals;
        j["gap_word"] = zs.gap_word;
    }
    if (do_subst) {
        auto m = beta::beta_substitution(basis);
        Json images;
        for (size_t i = 0; i < m.size(); ++i) images[m.names[i]] = m.image_string(static_cast<int>(i));
        j["substitution"] = images;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int run_selfsim(const ParamFlags& pf, bool check, bool find, size_t verify_n, std::ostream& out) {
    cap::CapParams params = pf.params();
    cap::Window window = pf.window();
    Json j;
    if (check) {
        auto chk = selfsim::check_selfsimilar_config(params, window);
        j["self_similar"] = chk.self_similar;
        if (!chk.self_similar) j["reason"] = chk.reason;
    }
    if (find || verify_n > 0) {
        auto f = selfsim::find_factor(params, window);
        j["gamma"] = f.gamma.to_string();
        j["conjugate"] = f.conjugate.to_string();
        j["certificate"] = Json{{"a", bigint_json(f.cert_a)}, {"b", bigint_json(f.cert_b)}};
        if (verify_n > 0) {
            auto rep = selfsim::verify_inclusion(f, params, window, verify_n);
            j["verified"] = rep.ok;
            j["tested"] = rep.tested;
        }
    }
    out << j.dump(2) << "\n";
    return 0;
}

int run_subst(const std::string& eps, const std::string& c, const std::string& len,
              int gamma_power, bool merge, int iterate_rounds, size_t verify_n,
              std::ostream& out) {
    cap::Window window{QuadraticReal::parse(c), QuadraticReal::parse(len)};
    auto res = subst::derive(QuadraticReal::parse(eps), window, gamma_power);
    Json j = morphism_json(res);
    if (iterate_rounds > 0) {
        Json rounds = Json::array();
        for (int r = 0; r <= iterate_rounds; ++r) {
            auto w = subst::iterate(res.phi, res.v_minus1, res.v0, r);
            rounds.push_back(res.phi.render(w.left) + "|" + res.phi.render(w.right));
        }
        j["iterates"] = rounds;
    }
    if (merge) {
        auto m = subst::merge_letters(res.phi, 2, res.psi);
        Json mj;
        Json classes = Json::array();
        for (int r : m.class_rep) classes.push_back(res.phi.names[static_cast<size_t>(r)]);
        mj["class_rep"] = classes;
        if (m.projected) {
            Json images;
            for (size_t i = 0; i < m.projected->size(); ++i)
                images[m.projected->names[i]] = m.projected->image_string(static_cast<int>(i));
            mj["projected"] = images;
        }
        j["merge"] = mj;
    }
    if (verify_n > 0) {
        auto rep = subst::verify_projection(res, verify_n);
        j["verified"] = rep.ok;
        j["letters_checked"] = rep.checked;
        if (!rep.ok) j["first_mismatch"] = rep.first_mismatch;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int run_paper_check(const std::string& only, const std::string& golden_dir,
                    const std::string& write_dir, std::ostream& out) {
    if (!write_dir.empty()) {
        checks::write_goldens(write_dir);
        out << "wrote golden files to " << write_dir << "\n";
        return 0;
    }
    auto results = checks::run(only, golden_dir);
    Json j = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json e{{"name", r.name}, {"pass", r.pass}};
        if (!r.pass) e["detail"] = r.detail;
        j.push_back(e);
        all = all && r.pass;
    }
    out << j.dump(2) << "\n";
    return all && !results.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cut-and-project sequences, word combinatorics, beta-numeration"};
    app.require_subcommand(1);

    ParamFlags gen_pf;
    size_t gen_left = 10, gen_right = 10;
    std::string gen_format = "json";
    auto* gen = app.add_subcommand("gen", "generate points and the coded word");
    add_param_flags(gen, gen_pf, true);
    gen->add_option("--left", gen_left, "points to the left of the origin");
    gen->add_option("--right", gen_right, "points to the right of the origin");
    gen->add_option("--format", gen_format, "json, csv or word")
        ->check(CLI::IsMember({"json", "csv", "word"}));

    ParamFlags an_pf;
    int an_n = 3;
    std::string an_what = "factors", an_factor, an_side = "left";
    auto* an = app.add_subcommand("analyze", "factor language analyses");
    add_param_flags(an, an_pf, true);
    an->get_option("--eta")->required(false);
    an->get_option("--len")->required(false);
    an->add_option("--n", an_n, "factor length")->required();
    an->add_option("--what", an_what, "factors, complexity, special, density or dn")
        ->check(CLI::IsMember({"factors", "complexity", "special", "density", "dn"}));
    an->add_option("--factor", an_factor, "factor for --what density");
    an->add_option("--side", an_side, "left or right for --what special")
        ->check(CLI::IsMember({"left", "right"}));

    ParamFlags rz_pf;
    int rz_n = 3;
    std::string rz_format = "dot";
    bool rz_reduced = false;
    auto* rz = app.add_subcommand("rauzy", "factor graph, DOT or JSON");
    add_param_flags(rz, rz_pf, true);
    rz->add_option("--n", rz_n, "vertex length")->required();
    rz->add_option("--format", rz_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    rz->add_flag("--reduced", rz_reduced, "also contract pass-through vertices");

    std::string dn_eps;
    int dn_n = 4;
    auto* dn = app.add_subcommand("dn", "window lengths with degenerate factor sets");
    dn->add_option("--eps", dn_eps, "slope of the star direction")->required();
    dn->add_option("--n", dn_n, "factor length")->required();

    std::string b_beta, b_expand, b_admissible, b_integers;
    long b_frac = 8;
    bool b_renyi = false, b_subst = false;
    auto* bt = app.add_subcommand("beta", "beta-expansions and beta-integers");
    bt->add_option("--beta", b_beta, "base: literal like \"tau\" or m,n,+ / m,n,-")->required();
    bt->add_option("--expand", b_expand, "value to expand greedily");
    bt->add_option("--frac-depth", b_frac, "fractional digits to produce");
    bt->add_flag("--renyi", b_renyi, "print the development of 1");
    bt->add_option("--admissible", b_admissible, "digit string to test");
    bt->add_option("--integers", b_integers, "enumerate beta-integers up to this bound");
    bt->add_flag("--subst", b_subst, "print the gap-word substitution");

    ParamFlags ss_pf;
    bool ss_check = false, ss_find = false;
    size_t ss_verify = 0;
    auto* ss = app.add_subcommand("selfsim", "self-similarity factors");
    add_param_flags(ss, ss_pf, true);
    ss->add_flag("--check", ss_check, "test the self-similarity conditions");
    ss->add_flag("--find", ss_find, "search a similarity factor");
    ss->add_option("--verify", ss_verify, "verify inclusion on this many points");

    std::string sb_eps, sb_c = "0", sb_len;
    int sb_power = 1, sb_iterate = 0;
    bool sb_merge = false;
    size_t sb_verify = 0;
    auto* sb = app.add_subcommand("subst", "derive the substitutive structure");
    sb->add_option("--eps", sb_eps, "quadratic slope in (-1,0)")->required();
    sb->add_option("--c", sb_c, "window left endpoint (default 0)");
    sb->add_option("--len", sb_len, "window length")->required();
    sb->add_option("--gamma-power", sb_power, "power of the fundamental unit");
    sb->add_flag("--merge", sb_merge, "merge letters with equal phi^2 images");
    sb->add_option("--iterate", sb_iterate, "print this many iteration rounds");
    sb->add_option("--verify", sb_verify, "compare against the coded word on this many letters");

    std::string pc_only, pc_dir, pc_write;
    auto* pc = app.add_subcommand("paper-check", "replay the published worked examples");
    pc->add_option("--only", pc_only, "run checks whose name contains this");
    pc->add_option("--golden-dir", pc_dir, "load expected values from files");
    pc->add_option("--write-golden-dir", pc_write, "write expected values to files");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_pf, gen_left, gen_right, gen_format, out);
        if (an->parsed()) return run_analyze(an_pf, an_n, an_what, an_factor, an_side, out);
        if (rz->parsed()) return run_rauzy(rz_pf, rz_n, rz_format, rz_reduced, out);
        if (dn->parsed()) {
            auto bps = words::dn_breakpoints(QuadraticReal::parse(dn_eps), dn_n);
            Json arr = Json::array();
            for (const auto& l : bps) arr.push_back(l.to_string());
            out << Json{{"n", dn_n}, {"breakpoints", arr}}.dump(2) << "\n";
            return 0;
        }
        if (bt->parsed())
            return run_beta(b_beta, b_expand, b_frac, b_renyi, b_admissible, b_integers, b_subst,
                            out);
        if (ss->parsed()) return run_selfsim(ss_pf, ss_check, ss_find, ss_verify, out);
        if (sb->parsed())
            return run_subst(sb_eps, sb_c, sb_len, sb_power, sb_merge, sb_iterate, sb_verify, out);
        if (pc->parsed()) return run_paper_check(pc_only, pc_dir, pc_write, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 2;
}

}  // namespace cli
}  // namespace aperiodica
