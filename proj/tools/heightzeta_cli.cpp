/*
   Copyright 2026 The heightzeta developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end. Every subcommand prints one JSON report:
//   {"command", "params", "results": [...], "checks": [...], "timing_ms"}
// and exits 0 on success, 1 on a failed check or computation error,
// 2 on a usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heightzeta/arakelov.hpp"
#include "heightzeta/cache.hpp"
#include "heightzeta/errors.hpp"
#include "heightzeta/fqoracle.hpp"
#include "heightzeta/hirz.hpp"
#include "heightzeta/motivic.hpp"
#include "heightzeta/numfield.hpp"
#include "heightzeta/pcount.hpp"
#include "heightzeta/specfun.hpp"
#include "heightzeta/zclass.hpp"

namespace {

using json = nlohmann::ordered_json;
using hz::Rat;

// ---------------------------------------------------------------- parsing

hz::RatMat parse_gram(const std::string& spec) {
    if (spec.size() >= 2 && spec[0] == 'I') {
        int k = std::stoi(spec.substr(1));
        if (k < 1) throw hz::domain_error("identity rank must be positive");
        return hz::RatMat::identity(k);
    }
    std::vector<std::vector<Rat>> rows;
    std::stringstream ss(spec);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<Rat> r;
        std::stringstream rs(row);
        std::string cell;
        while (std::getline(rs, cell, ',')) r.push_back(hz::parse_rational(cell));
        rows.push_back(std::move(r));
    }
    int n = static_cast<int>(rows.size());
    hz::RatMat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw hz::domain_error("Gram spec is not square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

hz::cplx parse_complex(const std::string& s) {
    std::string t = s;
    if (t.empty()) throw hz::domain_error("empty complex literal");
    if (t.back() != 'i') return {std::stod(t), 0.0};
    t.pop_back();
    // split at the last sign that is not leading and not an exponent sign
    size_t split = std::string::npos;
    for (size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        if (t.empty() || t == "+") return {0.0, 1.0};
        if (t == "-") return {0.0, -1.0};
        return {0.0, std::stod(t)};
    }
    std::string im = t.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return {std::stod(t.substr(0, split)), std::stod(im)};
}

std::vector<int> parse_split(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
    return out;
}

std::string gram_key(const hz::RatMat& g) {
    std::string s = std::to_string(g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) s += "|" + g(i, j).str();
    return s;
}

// ----------------------------------------------------------------- report

class Report {
 public:
    explicit Report(std::string command) : t0_(clock_t::now()) {
        j_["command"] = std::move(command);
        j_["params"] = json::object();
    }

    json& params() { return j_["params"]; }

    void add_value(const std::string& name, double v) {
        results_.push_back({{"name", name}, {"value", v}});
    }
    void add_analytic(const std::string& name, const hz::AnalyticValue& v) {
        json r{{"name", name}};
        if (v.value.imag() == 0.0) {
            r["value"] = v.value.real();
        } else {
            r["value"] = {{"re", v.value.real()}, {"im", v.value.imag()}};
        }
        r["abs_error"] = v.abs_error;
        results_.push_back(std::move(r));
    }
    void add_rational(const std::string& name, const Rat& v) {
        results_.push_back({{"name", name},
                            {"value", v.to_double()},
                            {"num", v.num()},
                            {"den", v.den()}});
    }
    void add_integer(const std::string& name, hz::i64 v) {
        results_.push_back({{"name", name}, {"value", v}});
    }
    void add_text(const std::string& name, const std::string& v) {
        results_.push_back({{"name", name}, {"value", v}});
    }
    void add_raw(json r) { results_.push_back(std::move(r)); }

    void add_check(const std::string& name, bool pass, double defect) {
        checks_.push_back({{"name", name}, {"pass", pass}, {"defect", defect}});
        failed_ |= !pass;
    }
    void add_check(const std::string& name, bool pass, const std::string& defect) {
        checks_.push_back({{"name", name}, {"pass", pass}, {"defect", defect}});
        failed_ |= !pass;
    }

    bool failed() const { return failed_; }

    int emit() {
        j_["results"] = results_;
        j_["checks"] = checks_;
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
            clock_t::now() - t0_);
        j_["timing_ms"] = dt.count();
        std::cout << j_.dump(2) << "\n";
        return failed_ ? 1 : 0;
    }

 private:
    using clock_t = std::chrono::steady_clock;
    json j_;
    json results_ = json::array();
    json checks_ = json::array();
    bool failed_ = false;
    clock_t::time_point t0_;
};

// -------------------------------------------------------------- commands

struct Options {
    std::string gram = "I2";
    std::string base_gram = "I2";
    std::string bound = "1";
    std::string s = "3";
    std::string split = "0,0";
    std::string csv_path;
    double tol = 1e-9;
    double twist = 0.0;
    double tauber_a = 1.0;
    double tauber_g = 1.0;
    int wan_n = 1;
    int trunc = 12;
    int q = 2;
    int d = 0;
    int e = 2, a = 1, b = 4;
    int order = 1;
    bool list_mode = false;
};

int cmd_points(const Options& o) {
    Report rep(o.list_mode ? "points list" : "points count");
    rep.params() = {{"gram", o.gram}, {"bound", o.bound}};
    hz::RatMat g = parse_gram(o.gram);
    auto bundle = hz::ArakelovBundle::make(g);
    Rat bound = hz::parse_rational(o.bound);
    Rat bsq = bound * bound;

    hz::Cache cache = hz::Cache::from_env();
    std::string key = "census|" + gram_key(g) + "|" + bsq.str();

    if (!o.list_mode) {
        hz::i64 n;
        bool hit = false;
        if (auto cached = cache.load(key)) {
            n = (*cached)["count"].get<hz::i64>();
            hit = true;
        } else {
            n = hz::count_points(bundle, bsq);
            cache.store(key, json{{"count", n}});
        }
        rep.add_integer("count", n);
        rep.add_integer("cache_hit", hit ? 1 : 0);
        return rep.emit();
    }

    auto pts = hz::enumerate_points(bundle, bsq);
    rep.add_integer("count", static_cast<hz::i64>(pts.size()));
    cache.store(key, json{{"count", static_cast<hz::i64>(pts.size())}});
    if (!o.csv_path.empty()) {
        std::ofstream out(o.csv_path);
        if (!out) throw hz::io_error("cannot write " + o.csv_path);
        hz::write_points_csv(out, pts, bundle.rank());
        rep.add_text("csv", o.csv_path);
    } else {
        json arr = json::array();
        for (const auto& p : pts) {
            json rec{{"coords", p.coords},
                     {"height_sq_num", p.height_sq.num()},
                     {"height_sq_den", p.height_sq.den()}};
            arr.push_back(std::move(rec));
        }
        rep.add_raw(json{{"name", "points"}, {"value", arr}});
    }
    return rep.emit();
}

int cmd_theta_h0(const Options& o) {
    Report rep("theta h0");
    rep.params() = {{"gram", o.gram}, {"twist", o.twist}, {"tol", o.tol}};
    auto bundle = hz::ArakelovBundle::make(parse_gram(o.gram)).twisted(o.twist);
    rep.add_value("degree", bundle.degree());
    rep.add_value("norm", bundle.norm());
    rep.add_analytic("h0", hz::h0(bundle, o.tol));
    rep.add_analytic("phi", hz::phi(bundle, o.tol));
    return rep.emit();
}

int cmd_theta_rr(const Options& o) {
    Report rep("theta rr-check");
    rep.params() = {{"gram", o.gram}, {"twist", o.twist}};
    auto bundle = hz::ArakelovBundle::make(parse_gram(o.gram)).twisted(o.twist);
    double defect = hz::rr_defect(bundle);
    rep.add_value("rr_defect", defect);
    rep.add_check("riemann_roch", std::fabs(defect) <= 1e-9, std::fabs(defect));
    return rep.emit();
}

int cmd_zeta_eval(const Options& o) {
    Report rep("zeta eval");
    rep.params() = {{"gram", o.gram}, {"s", o.s}, {"tol", o.tol}};
    auto bundle = hz::ArakelovBundle::make(parse_gram(o.gram));
    auto res = hz::continued_zeta(bundle, parse_complex(o.s), o.tol);
    rep.add_analytic("Z", res.value);
    rep.add_analytic("j_self", res.j_self);
    rep.add_analytic("j_dual", res.j_dual);
    rep.add_analytic("pole_r", hz::av_exact(res.pole_r));
    rep.add_analytic("pole_zero", hz::av_exact(res.pole_zero));
    return rep.emit();
}

int cmd_zeta_residue(const Options& o) {
    Report rep("zeta residue");
    rep.params() = {{"gram", o.gram}};
    auto bundle = hz::ArakelovBundle::make(parse_gram(o.gram));
    rep.add_value("residue", hz::residue_main(bundle));
    rep.add_value("pole", bundle.rank());
    return rep.emit();
}

int cmd_zeta_funceq(const Options& o) {
    Report rep("zeta funceq");
    rep.params() = {{"gram", o.gram}, {"s", o.s}};
    auto bundle = hz::ArakelovBundle::make(parse_gram(o.gram));
    double defect = hz::funceq_defect(bundle, parse_complex(o.s), o.tol);
    rep.add_value("defect", defect);
    rep.add_check("functional_equation", defect <= 1e-6, defect);
    return rep.emit();
}

int cmd_zeta_wan(const Options& o) {
    Report rep("zeta wan");
    rep.params() = {{"n", o.wan_n}, {"s", o.s}};
    hz::cplx s = parse_complex(o.s);
    for (int k = 0; k <= o.wan_n; ++k)
        rep.add_analytic("xi_k" + std::to_string(k), hz::wan_xi_k(k, s, o.tol));
    double defect = hz::wan_formula_defect(o.wan_n, s, o.tol);
    rep.add_value("defect", defect);
    rep.add_check("wan_formula", defect <= 1e-5, defect);
    return rep.emit();
}

int cmd_zeta_partial(const Options& o) {
    Report rep("zeta partial");
    rep.params() = {{"gram", o.gram}, {"s", o.s}, {"bound", o.bound}};
    auto bundle = hz::ArakelovBundle::make(parse_gram(o.gram));
    Rat bound = hz::parse_rational(o.bound);
    auto v = hz::dirichlet_partial(bundle, parse_complex(o.s), bound * bound);
    rep.add_analytic("partial_sum", v);
    return rep.emit();
}

hz::HirzebruchConfig hirz_config(const Options& o) {
    return hz::make_hirzebruch(o.e, o.a, o.b, parse_gram(o.base_gram));
}

int cmd_hirz_count(const Options& o) {
    Report rep("hirzebruch count");
    rep.params() = {{"e", o.e}, {"a", o.a}, {"b", o.b},
                    {"bound", o.bound}, {"base_gram", o.base_gram}};
    auto cfg = hirz_config(o);
    Rat bound = hz::parse_rational(o.bound);

    hz::Cache cache = hz::Cache::from_env();
    std::string key = "hirz|" + std::to_string(o.e) + "," + std::to_string(o.a) +
                      "," + std::to_string(o.b) + "|" +
                      gram_key(cfg.base_gram) + "|" + bound.str();
    hz::i64 n;
    bool hit = false;
    if (auto cached = cache.load(key)) {
        n = (*cached)["count"].get<hz::i64>();
        hit = true;
    } else {
        n = hz::count_surface_points(cfg, bound);
        cache.store(key, json{{"count", n}});
    }
    rep.add_integer("count", n);
    rep.add_integer("minimal_section_count", hz::minimal_section_count(cfg, bound));
    rep.add_integer("cache_hit", hit ? 1 : 0);
    if (!o.csv_path.empty()) {
        auto pts = hz::enumerate_surface(cfg, bound);
        std::ofstream out(o.csv_path);
        if (!out) throw hz::io_error("cannot write " + o.csv_path);
        hz::write_surface_csv(out, pts);
        rep.add_text("csv", o.csv_path);
    }
    return rep.emit();
}

int cmd_hirz_predict(const Options& o) {
    Report rep("hirzebruch predict");
    rep.params() = {{"e", o.e}, {"a", o.a}, {"b", o.b}, {"base_gram", o.base_gram}};
    auto cfg = hirz_config(o);
    auto pr = hz::predicted_poles(cfg);
    json flags{{"s2_in_domain", pr.s2_in_domain},
               {"coincident", pr.coincident},
               {"dominant", pr.dominant == 0 ? "s1" : "s2"}};
    rep.add_rational("s1", pr.s1);
    rep.add_analytic("rho1", pr.rho1);
    rep.add_rational("s2", pr.s2);
    rep.add_analytic("rho2", pr.rho2);
    rep.add_rational("sigma0", pr.sigma0);
    rep.add_raw(json{{"name", "flags"}, {"value", flags}});
    return rep.emit();
}

int cmd_hirz_compare(const Options& o) {
    Report rep("hirzebruch compare");
    rep.params() = {{"e", o.e}, {"a", o.a}, {"b", o.b},
                    {"bound", o.bound}, {"base_gram", o.base_gram}};
    auto cfg = hirz_config(o);
    auto cmp = hz::compare_counts(cfg, hz::parse_rational(o.bound));
    rep.add_integer("observed", cmp.observed);
    rep.add_value("predicted", cmp.predicted);
    rep.add_value("ratio", cmp.ratio);
    rep.add_value("pole", cmp.pole_location);
    rep.add_value("residue", cmp.pole_residue);
    return rep.emit();
}

int cmd_hirz_alpha(const Options& o) {
    Report rep("hirzebruch alpha");
    rep.params() = {{"e", o.e}, {"a", o.a}, {"b", o.b}};
    auto cfg = hz::make_hirzebruch(o.e, o.a, o.b);
    rep.add_rational("alpha", hz::alpha_invariant(cfg));
    return rep.emit();
}

int cmd_motivic_series(const Options& o) {
    Report rep("motivic series");
    rep.params() = {{"split", o.split}, {"trunc", o.trunc}};
    hz::SplittingType split(parse_split(o.split));
    auto s = hz::sect_series(split, o.trunc);
    json arr = json::array();
    for (int d = s.lo(); d <= s.hi(); ++d)
        arr.push_back({{"d", d}, {"class", s.coeff(d).str()}});
    rep.add_raw(json{{"name", "sect_classes"}, {"value", arr}});
    return rep.emit();
}

int cmd_motivic_check(const Options& o) {
    Report rep("motivic check");
    rep.params() = {{"split", o.split}, {"trunc", o.trunc}};
    hz::SplittingType split(parse_split(o.split));

    auto w = hz::rationality_witness(split, o.trunc);
    rep.add_check("rationality_residual_zero", w.all_zero,
                  w.all_zero ? "0" : w.residuals.front().second.str());

    auto cv = hz::value_at_critical(split);
    rep.add_text("critical_value", cv.value.str());
    rep.add_check("critical_value", cv.defect.is_zero(), cv.defect.str());

    bool rr_ok = true;
    for (int n = -8; n <= 8; ++n)
        rr_ok &= hz::motivic_rr_defect(split, n).is_zero();
    rep.add_check("riemann_roch_sweep", rr_ok, rr_ok ? "0" : "nonzero");

    auto fe = hz::funceq_defect_motivic(split, o.trunc);
    rep.add_check("functional_equation", fe.all_zero,
                  fe.all_zero ? "0" : fe.defects.front().second.str());
    return rep.emit();
}

int cmd_motivic_funceq(const Options& o) {
    Report rep("motivic funceq");
    rep.params() = {{"split", o.split}, {"trunc", o.trunc}};
    hz::SplittingType split(parse_split(o.split));
    auto fe = hz::funceq_defect_motivic(split, o.trunc);
    rep.add_check("functional_equation", fe.all_zero,
                  fe.all_zero ? "0" : fe.defects.front().second.str());
    return rep.emit();
}

int cmd_motivic_lemma48(const Options& o) {
    Report rep("motivic lemma48");
    rep.params() = {{"a", o.a}, {"b", o.b}, {"trunc", o.trunc}};
    auto lr = hz::lemma_poly_check(o.a, o.b, o.trunc);
    rep.add_text("g0", lr.g0.str());
    rep.add_text("g1", lr.g1.str());
    rep.add_text("value_at_critical", lr.value.str());
    rep.add_check("polynomial", lr.vanishes, lr.vanishes ? "0" : "nonzero");
    rep.add_check("critical_value", lr.defect.is_zero(), lr.defect.str());
    rep.add_check("two_sided_vanishing",
                  hz::lemma_two_sided_check(o.a, o.b, o.trunc), "see flag");
    return rep.emit();
}

int cmd_motivic_specialize(const Options& o) {
    Report rep("motivic specialize");
    rep.params() = {{"split", o.split}, {"q", o.q}, {"trunc", o.trunc}};
    hz::SplittingType split(parse_split(o.split));
    auto s = hz::sect_series(split, o.trunc);
    json arr = json::array();
    for (int d = s.lo(); d <= s.hi(); ++d) {
        Rat v = s.coeff(d).specialize(o.q);
        arr.push_back({{"d", d}, {"num", v.num()}, {"den", v.den()}});
    }
    rep.add_raw(json{{"name", "specialized_counts"}, {"value", arr}});
    return rep.emit();
}

int cmd_motivic_residue(const Options& o) {
    Report rep("motivic residue");
    rep.params() = {{"split", o.split}, {"q", o.q}};
    hz::SplittingType split(parse_split(o.split));
    Rat formula = hz::residue_specialized(split, o.q);
    Rat witness = hz::residue_specialized_witness(split, o.q);
    rep.add_rational("residue_formula", formula);
    rep.add_rational("residue_from_rational_function", witness);
    rep.add_check("routes_agree", formula == witness,
                  (formula - witness).str());
    return rep.emit();
}

int cmd_oracle(const Options& o) {
    Report rep("oracle sections");
    rep.params() = {{"q", o.q}, {"split", o.split}, {"d", o.d}};
    hz::SplittingType split(parse_split(o.split));
    rep.add_integer("count", hz::count_sections(o.q, split, o.d));
    return rep.emit();
}

int cmd_tauberian(const Options& o) {
    Report rep("report tauberian");
    rep.params() = {{"a", o.tauber_a}, {"order", o.order},
                    {"g", o.tauber_g}, {"bound", o.bound}};
    double b = hz::parse_rational(o.bound).to_double();
    rep.add_value("predicted",
                  hz::tauberian_predict(o.tauber_a, o.order, o.tauber_g, b));
    return rep.emit();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"height zeta functions of projective spaces and Hirzebruch "
                 "surfaces over Q, with motivic analogues over P^1"};
    app.set_config("--config", "", "read `key = value` defaults");
    app.require_subcommand(1);
    Options o;
    std::function<int()> run;

    // points
    auto* points = app.add_subcommand("points", "rational point censuses");
    points->require_subcommand(1);
    auto* p_count = points->add_subcommand("count", "count points of height <= B");
    auto* p_list = points->add_subcommand("list", "enumerate points");
    for (auto* c : {p_count, p_list}) {
        c->add_option("--gram", o.gram, "Gram spec: I<k> or rows `2,1;1,1`");
        c->add_option("--bound", o.bound, "height bound B (rational)")->required();
    }
    p_list->add_option("--csv", o.csv_path, "write the census to a CSV file");
    p_count->callback([&] { o.list_mode = false; run = [&] { return cmd_points(o); }; });
    p_list->callback([&] { o.list_mode = true; run = [&] { return cmd_points(o); }; });

    // theta
    auto* theta = app.add_subcommand("theta", "theta section counts");
    theta->require_subcommand(1);
    auto* t_h0 = theta->add_subcommand("h0", "h^0 and phi of a bundle");
    t_h0->add_option("--gram", o.gram);
    t_h0->add_option("--twist", o.twist, "tensor by a line bundle of this degree");
    t_h0->add_option("--tol", o.tol);
    t_h0->callback([&] { run = [&] { return cmd_theta_h0(o); }; });
    auto* t_rr = theta->add_subcommand("rr-check", "Riemann-Roch defect");
    t_rr->add_option("--gram", o.gram);
    t_rr->add_option("--twist", o.twist);
    t_rr->callback([&] { run = [&] { return cmd_theta_rr(o); }; });

    // zeta
    auto* zeta = app.add_subcommand("zeta", "height zeta continuation");
    zeta->require_subcommand(1);
    auto* z_eval = zeta->add_subcommand("eval", "continued Z(P(V), s)");
    z_eval->add_option("--gram", o.gram);
    z_eval->add_option("--s", o.s, "complex point, e.g. 2.5 or 3+1i")->required();
    z_eval->add_option("--tol", o.tol);
    z_eval->callback([&] { run = [&] { return cmd_zeta_eval(o); }; });
    auto* z_res = zeta->add_subcommand("residue", "residue at s = r");
    z_res->add_option("--gram", o.gram);
    z_res->callback([&] { run = [&] { return cmd_zeta_residue(o); }; });
    auto* z_fun = zeta->add_subcommand("funceq", "functional equation defect");
    z_fun->add_option("--gram", o.gram);
    z_fun->add_option("--s", o.s)->required();
    z_fun->callback([&] { run = [&] { return cmd_zeta_funceq(o); }; });
    auto* z_wan = zeta->add_subcommand("wan", "k-th zeta integrals and the binomial formula");
    z_wan->add_option("--n", o.wan_n)->required();
    z_wan->add_option("--s", o.s)->required();
    z_wan->callback([&] { run = [&] { return cmd_zeta_wan(o); }; });
    auto* z_par = zeta->add_subcommand("partial", "tail-bounded partial Dirichlet sum");
    z_par->add_option("--gram", o.gram);
    z_par->add_option("--s", o.s)->required();
    z_par->add_option("--bound", o.bound)->required();
    z_par->callback([&] { run = [&] { return cmd_zeta_partial(o); }; });

    // hirzebruch
    auto* hirz = app.add_subcommand("hirzebruch", "surfaces F_e with O(a,b)");
    hirz->require_subcommand(1);
    auto add_eab = [&](CLI::App* c) {
        c->add_option("--e", o.e)->required();
        c->add_option("--a", o.a)->required();
        c->add_option("--b", o.b)->required();
    };
    auto* h_count = hirz->add_subcommand("count", "surface census");
    add_eab(h_count);
    h_count->add_option("--bound", o.bound)->required();
    h_count->add_option("--base-gram", o.base_gram);
    h_count->add_option("--csv", o.csv_path);
    h_count->callback([&] { run = [&] { return cmd_hirz_count(o); }; });
    auto* h_pred = hirz->add_subcommand("predict", "pole report");
    add_eab(h_pred);
    h_pred->add_option("--base-gram", o.base_gram);
    h_pred->callback([&] { run = [&] { return cmd_hirz_predict(o); }; });
    auto* h_cmp = hirz->add_subcommand("compare", "census vs Tauberian prediction");
    add_eab(h_cmp);
    h_cmp->add_option("--bound", o.bound)->required();
    h_cmp->add_option("--base-gram", o.base_gram);
    h_cmp->callback([&] { run = [&] { return cmd_hirz_compare(o); }; });
    auto* h_alpha = hirz->add_subcommand("alpha", "effective-cone invariant");
    add_eab(h_alpha);
    h_alpha->callback([&] { run = [&] { return cmd_hirz_alpha(o); }; });

    // motivic
    auto* mot = app.add_subcommand("motivic", "genus-0 symbolic engine");
    mot->require_subcommand(1);
    auto* m_series = mot->add_subcommand("series", "section classes [Sect_d]");
    m_series->add_option("--split", o.split)->required();
    m_series->add_option("--trunc", o.trunc);
    m_series->callback([&] { run = [&] { return cmd_motivic_series(o); }; });
    auto* m_check = mot->add_subcommand("check", "rationality, critical value, R-R, FE");
    m_check->add_option("--split", o.split)->required();
    m_check->add_option("--trunc", o.trunc);
    m_check->callback([&] { run = [&] { return cmd_motivic_check(o); }; });
    auto* m_fun = mot->add_subcommand("funceq", "motivic functional equation");
    m_fun->add_option("--split", o.split)->required();
    m_fun->add_option("--trunc", o.trunc);
    m_fun->callback([&] { run = [&] { return cmd_motivic_funceq(o); }; });
    auto* m_lem = mot->add_subcommand("lemma48", "projective-class series polynomial");
    m_lem->add_option("--a", o.a)->required();
    m_lem->add_option("--b", o.b)->required();
    m_lem->add_option("--trunc", o.trunc);
    m_lem->callback([&] { run = [&] { return cmd_motivic_lemma48(o); }; });
    auto* m_spec = mot->add_subcommand("specialize", "point counts via L -> q");
    m_spec->add_option("--split", o.split)->required();
    m_spec->add_option("--q", o.q)->required();
    m_spec->add_option("--trunc", o.trunc);
    m_spec->callback([&] { run = [&] { return cmd_motivic_specialize(o); }; });
    auto* m_res = mot->add_subcommand("residue", "specialized residue, two routes");
    m_res->add_option("--split", o.split)->required();
    m_res->add_option("--q", o.q)->required();
    m_res->callback([&] { run = [&] { return cmd_motivic_residue(o); }; });

    // oracle
    auto* orc = app.add_subcommand("oracle", "finite-field section counts");
    orc->require_subcommand(1);
    auto* o_sect = orc->add_subcommand("sections", "count sections of degree d");
    o_sect->add_option("--q", o.q)->required();
    o_sect->add_option("--split", o.split)->required();
    o_sect->add_option("--d", o.d)->required();
    o_sect->callback([&] { run = [&] { return cmd_oracle(o); }; });

    // report
    auto* rpt = app.add_subcommand("report", "derived reports");
    rpt->require_subcommand(1);
    auto* r_tau = rpt->add_subcommand("tauberian", "counting prediction from a pole");
    r_tau->add_option("--a", o.tauber_a)->required();
    r_tau->add_option("--order", o.order)->required();
    r_tau->add_option("--g", o.tauber_g)->required();
    r_tau->add_option("--bound", o.bound)->required();
    r_tau->callback([&] { run = [&] { return cmd_tauberian(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run ? run() : 2;
    } catch (const hz::error& e) {
        nlohmann::ordered_json err{{"error", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
