#include "aperiodica/checks.hpp"

#include <fstream>
#include <stdexcept>

#include "aperiodica/betanum.hpp"
#include "aperiodica/selfsim.hpp"
#include "aperiodica/substderive.hpp"
#include "aperiodica/wordcomb.hpp"

namespace aperiodica {
namespace checks {

namespace {

const char* kNames[] = {
    "subst-derive", "subst-iterates", "subst-merge", "root2-points",
    "fib-factors",  "dn4-breakpoints", "beta-windows", "selfsim-factors",
};

QuadraticReal root2_eps() { return QuadraticReal::parse("-1/sqrt(2)"); }
cap::Window root2_window() { return {QuadraticReal(0), QuadraticReal::parse("-2+2*sqrt(2)")}; }

cap::CapParams fib_params() {
    QuadraticReal tau = QuadraticReal::tau();
    return {QuadraticReal(-1) / tau, tau};
}

std::string binary_mapped(const std::string& w) {
    std::string out;
    for (char c : w) out += c == 'A' ? '1' : '0';
    return out;
}

Json factor_list_binary(const words::FactorSet& fs) {
    std::vector<std::string> ws;
    for (const auto& e : fs.entries) ws.push_back(binary_mapped(e.word));
    std::sort(ws.begin(), ws.end());
    return Json(ws);
}

Json factor_list(const words::FactorSet& fs) {
    std::vector<std::string> ws;
    for (const auto& e : fs.entries) ws.push_back(e.word);
    std::sort(ws.begin(), ws.end());
    return Json(ws);
}

Json compute_subst_derive() {
    auto res = subst::derive(root2_eps(), root2_window());
    Json j;
    j["gamma"] = res.gamma.to_string();
    Json cuts = Json::array();
    for (const auto& c : res.cuts) cuts.push_back(c.to_string());
    j["S"] = cuts;
    Json images;
    for (size_t i = 0; i < res.phi.size(); ++i)
        images[res.phi.names[i]] = res.phi.image_string(static_cast<int>(i));
    j["images"] = images;
    j["j0"] = res.j[0];
    j["j3"] = res.j[3];
    j["initial"] = Json::array({res.phi.names[static_cast<size_t>(res.v_minus1)],
                                res.phi.names[static_cast<size_t>(res.v0)]});
    j["psi"] = res.psi;
    return j;
}

Json compute_subst_iterates() {
    auto res = subst::derive(root2_eps(), root2_window());
    Json rounds = Json::array();
    for (int r = 0; r <= 2; ++r) {
        auto w = subst::iterate(res.phi, res.v_minus1, res.v0, r);
        rounds.push_back(res.phi.render(w.left) + "|" + res.phi.render(w.right));
    }
    return rounds;
}

Json compute_subst_merge() {
    auto res = subst::derive(root2_eps(), root2_window());
    auto merged = subst::merge_letters(res.phi, 2, res.psi);
    Json j;
    j["classes_0_1_merged"] = merged.class_rep[1] == merged.class_rep[0];
    if (!merged.projected) throw std::runtime_error("merge did not respect the projection");
    for (size_t i = 0; i < merged.projected->size(); ++i)
        j[merged.projected->names[i]] = merged.projected->image_string(static_cast<int>(i));
    return j;
}

Json compute_root2_points() {
    QuadraticReal eps = root2_eps();
    cap::CapParams params{eps, eps.conjugate()};
    auto g = cap::generate(params, root2_window(), 6, 6);
    Json pts = Json::array();
    for (const auto& pt : g.points) pts.push_back(pt.value(params.eta).to_string());
    Json j;
    j["points"] = pts;
    j["word"] = g.word.substr(0, g.origin_index) + "|" + g.word.substr(g.origin_index);
    return j;
}

Json compute_fib_factors() {
    cap::CapParams params = fib_params();
    cap::Window w{QuadraticReal(0), QuadraticReal(1)};
    Json j;
    j["L3"] = factor_list_binary(words::factors(params, w, 3));
    j["L4"] = factor_list_binary(words::factors(params, w, 4));
    j["L5"] = factor_list_binary(words::factors(params, w, 5));
    auto g3 = words::rauzy(params, w, 3);
    auto g4 = words::rauzy(params, w, 4);
    j["gamma3"] = Json::array({g3.vertices.size(), g3.edges.size()});
    j["gamma4"] = Json::array({g4.vertices.size(), g4.edges.size()});
    return j;
}

Json compute_dn4() {
    cap::CapParams params = fib_params();
    auto dn = words::dn_breakpoints(params.eps, 4);
    Json j;
    Json bp = Json::array();
    for (const auto& l : dn) bp.push_back(l.to_string());
    j["D4"] = bp;
    if (dn.size() == 3) {
        QuadraticReal lo = -params.eps;
        std::vector<QuadraticReal> samples{(lo + dn[0]) / QuadraticReal(2), dn[0],
                                           (dn[0] + dn[1]) / QuadraticReal(2), dn[1],
                                           (dn[1] + dn[2]) / QuadraticReal(2), dn[2]};
        Json lists = Json::array();
        for (const auto& l : samples)
            lists.push_back(factor_list(words::factors(params, cap::Window{QuadraticReal(0), l}, 4)));
        j["L4_lists"] = lists;
    }
    return j;
}

Json compute_beta_windows() {
    Json j;
    {
        auto basis = beta::BetaBasis::of(QuadraticReal::tau());
        auto eq = beta::cap_equivalence(basis);
        auto dev = beta::renyi_development(basis);
        auto sub = beta::beta_substitution(basis);
        Json e;
        e["window_c"] = eq.window.c.to_string();
        e["window_len"] = eq.window.len.to_string();
        e["renyi"] = dev.to_string();
        e["subst_A"] = sub.image_string(0);
        e["subst_B"] = sub.image_string(1);
        j["tau"] = e;
    }
    {
        // beta^2 = 3 beta - 1
        QuadraticReal b(Rational(3, 2), Rational(1, 2), 5);
        auto basis = beta::BetaBasis::of(b);
        auto eq = beta::cap_equivalence(basis);
        auto dev = beta::renyi_development(basis);
        auto sub = beta::beta_substitution(basis);
        Json e;
        e["window_c"] = eq.window.c.to_string();
        e["window_len"] = eq.window.len.to_string();
        e["renyi"] = dev.to_string();
        e["subst_A"] = sub.image_string(0);
        e["subst_B"] = sub.image_string(1);
        j["m3_minus"] = e;
    }
    return j;
}

Json compute_selfsim_factors() {
    Json j;
    {
        cap::CapParams params = fib_params();
        auto f = selfsim::find_factor(params, cap::Window{QuadraticReal(0), QuadraticReal(1)});
        j["fibonacci"] = f.gamma.to_string();
    }
    {
        QuadraticReal eps = root2_eps();
        cap::CapParams params{eps, eps.conjugate()};
        auto f = selfsim::find_factor(params, root2_window());
        j["root2"] = f.gamma.to_string();
    }
    return j;
}

}  // namespace

std::vector<std::string> check_names() {
    return std::vector<std::string>(std::begin(kNames), std::end(kNames));
}

Json golden(const std::string& name) {
    if (name == "subst-derive")
        return Json{{"gamma", "3-2*sqrt(2)"},
                    {"S", {"0", "-1+sqrt(2)", "-3+5/2*sqrt(2)", "1/2*sqrt(2)"}},
                    {"images",
                     {{"0", "002013"}, {"1", "00202"}, {"2", "00202013"}, {"3", "013"}}},
                    {"j0", 6},
                    {"j3", 3},
                    {"initial", {"3", "0"}},
                    {"psi", "AABC"}};
    if (name == "subst-iterates")
        return Json::array(
            {"3|0", "013|002013", "00201300202013|0020130020130020201300201300202013"});
    if (name == "subst-merge")
        return Json{{"classes_0_1_merged", true},
                    {"A", "AABAACAABAACAABABAACAABAACAABABAAC"},
                    {"B", "AABAACAABAACAABABAACAABAACAABABAACAABAACAABABAAC"},
                    {"C", "AABAACAABABAAC"}};
    if (name == "root2-points")
        return Json{{"points",
                     {"-5-4*sqrt(2)", "-4-3*sqrt(2)", "-3-5/2*sqrt(2)", "-2-3/2*sqrt(2)",
                      "-1-sqrt(2)", "-1/2*sqrt(2)", "0", "1+1/2*sqrt(2)", "2+sqrt(2)",
                      "3+2*sqrt(2)", "4+5/2*sqrt(2)", "5+3*sqrt(2)", "5+7/2*sqrt(2)"}},
                    {"word", "BABAAC|AABAAC"}};
    if (name == "fib-factors")
        return Json{{"L3", {"010", "011", "101", "110"}},
                    {"L4", {"0101", "0110", "1010", "1011", "1101"}},
                    {"L5", {"01011", "01101", "10101", "10110", "11010", "11011"}},
                    {"gamma3", {4, 5}},
                    {"gamma4", {5, 6}}};
    if (name == "dn4-breakpoints")
        return Json{
            {"D4", {"3-sqrt(5)", "-5/2+3/2*sqrt(5)", "1"}},
            {"L4_lists",
             {{"ABAB", "ABAC", "ABBA", "ACAB", "BABA", "BABB", "BACA", "BBAB", "CABA"},
              {"ABAB", "ABAC", "ACAB", "BABA", "BACA", "CABA"},
              {"AACA", "ABAB", "ABAC", "ACAA", "ACAB", "BABA", "BACA", "CAAC", "CABA"},
              {"AACA", "ABAC", "ACAA", "ACAB", "BACA", "CAAC", "CABA"},
              {"AACA", "ABAC", "ACAA", "ACAB", "ACAC", "BACA", "CAAC", "CABA", "CACA"},
              {"AACA", "ACAA", "ACAC", "CAAC", "CACA"}}}};
    if (name == "beta-windows")
        return Json{{"tau",
                     {{"window_c", "-1"},
                      {"window_len", "3/2+1/2*sqrt(5)"},
                      {"renyi", "11"},
                      {"subst_A", "AB"},
                      {"subst_B", "A"}}},
                    {"m3_minus",
                     {{"window_c", "0"},
                      {"window_len", "3/2+1/2*sqrt(5)"},
                      {"renyi", "2(1)*"},
                      {"subst_A", "AAB"},
                      {"subst_B", "AB"}}}};
    if (name == "selfsim-factors")
        return Json{{"fibonacci", "3/2+1/2*sqrt(5)"}, {"root2", "3+2*sqrt(2)"}};
    throw std::invalid_argument("unknown check: " + name);
}

Json compute(const std::string& name) {
    if (name == "subst-derive") return compute_subst_derive();
    if (name == "subst-iterates") return compute_subst_iterates();
    if (name == "subst-merge") return compute_subst_merge();
    if (name == "root2-points") return compute_root2_points();
    if (name == "fib-factors") return compute_fib_factors();
    if (name == "dn4-breakpoints") return compute_dn4();
    if (name == "beta-windows") return compute_beta_windows();
    if (name == "selfsim-factors") return compute_selfsim_factors();
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run(const std::string& only, const std::string& golden_dir) {
    std::vector<CheckResult> out;
    for (const std::string& name : check_names()) {
        if (!only.empty() && name.find(only) == std::string::npos) continue;
        CheckResult r{name, false, ""};
        try {
            Json expected;
            if (golden_dir.empty()) {
                expected = golden(name);
            } else {
                std::ifstream in(golden_dir + "/" + name + ".json");
                if (!in) throw std::runtime_error("golden file missing");
                expected = Json::parse(in);  // throws on corruption
            }
            Json computed = compute(name);
            r.pass = computed == expected;
            if (!r.pass)
                r.detail = "expected " + expected.dump() + " got " + computed.dump();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

void write_goldens(const std::string& dir) {
    for (const std::string& name : check_names()) {
        std::ofstream outf(dir + "/" + name + ".json");
        if (!outf) throw std::runtime_error("cannot write golden file in " + dir);
        outf << golden(name).dump(2) << "\n";
    }
}

}  // namespace checks
}  // namespace aperiodica
