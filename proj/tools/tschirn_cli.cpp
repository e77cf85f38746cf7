#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tschirn/decide.hpp"
#include "tschirn/families.hpp"
#include "tschirn/resolvent.hpp"
#include "tschirn/selftest.hpp"

using namespace tschirn;
using Json = nlohmann::ordered_json;
using T = CubicTriple<Rat>;

namespace {

constexpr int kOk = 0, kMath = 1, kUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json rat(const Rat& x) { return x.str(); }

Json triple(const T& t) { return Json::array({rat(t.a1), rat(t.a2), rat(t.a3)}); }

Json coeffs(const TschirnCoeffs<Rat>& c) { return Json::array({rat(c.c0), rat(c.c1), rat(c.c2)}); }

Json poly(const Poly<Rat>& f) {
    Json c = Json::array();
    for (int i = 0; i <= f.degree(); ++i) c.push_back(rat(f.coeff(i)));
    return Json{{"text", format_poly(f)}, {"coeffs", c}};
}

Json factorization(const Poly<Rat>& f) {
    const auto fac = factor_over_q(f);
    Json fs = Json::array();
    for (const auto& x : fac.factors) {
        Json e = poly(x.poly);
        e["multiplicity"] = x.multiplicity;
        fs.push_back(e);
    }
    std::vector<std::pair<int, int>> pat;
    for (const auto& x : fac.factors) pat.push_back({x.poly.degree(), x.multiplicity});
    std::sort(pat.begin(), pat.end());
    return Json{{"unit", rat(fac.unit)}, {"factors", fs}, {"pattern", pattern_string(pat)}};
}

std::vector<Rat> parse_rats(const std::string& text, std::size_t want = 0) {
    std::vector<Rat> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(Rat::parse(item));
    if (want && v.size() != want)
        throw parse_error("expected " + std::to_string(want) + " comma-separated rationals, got '" + text + "'");
    return v;
}

unsigned env_unsigned(const char* name, unsigned fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return static_cast<unsigned>(std::stoul(v));
    } catch (const std::exception&) {
        throw usage_error(std::string(name) + " must be a non-negative integer");
    }
}

/// A cubic given either as --x a1,a2,a3 or --monic-x c2,c1,c0.
struct CubicArg {
    std::string name, triple, monic;

    void add(CLI::App* sub, bool plain_monic_alias = false) {
        sub->add_option("--" + name, triple, "cubic X^3 - a1 X^2 + a2 X - a3 as a1,a2,a3");
        std::string m = "--monic-" + name;
        if (plain_monic_alias) m += ",--monic";
        sub->add_option(m, monic, "cubic X^3 + c2 X^2 + c1 X + c0 as c2,c1,c0");
    }

    T get() const {
        if (triple.empty() == monic.empty())
            throw usage_error("give exactly one of --" + name + " or --monic-" + name);
        return triple.empty() ? parse_monic(monic) : parse_triple(triple);
    }
};

struct Doc {
    std::string command;
    Json inputs = Json::object();
    Json result;
    std::optional<Json> witness;
    Json diagnostics = Json::array();

    Json json() const {
        Json d{{"schema", 1}, {"command", command}, {"inputs", inputs}, {"result", result}};
        if (witness) d["witness"] = *witness;
        d["diagnostics"] = diagnostics;
        return d;
    }
};

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_flat(const Json& v) {
    for (const auto& x : v)
        if (x.is_structured()) return false;
    return true;
}

void render_text(std::ostream& os, const std::string& key, const Json& v) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) render_text(os, key.empty() ? it.key() : key + "." + it.key(), it.value());
    } else if (v.is_array() && is_flat(v)) {
        os << key << ": (";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << scalar_text(v[i]);
        os << ")\n";
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) render_text(os, key + "[" + std::to_string(i) + "]", v[i]);
    } else {
        os << key << ": " << scalar_text(v) << "\n";
    }
}

void emit(const Doc& d, bool json) {
    if (json) {
        std::cout << d.json().dump(2) << "\n";
        return;
    }
    render_text(std::cout, "", d.result);
    if (d.witness) render_text(std::cout, "witness", *d.witness);
    for (const auto& w : d.diagnostics) std::cout << "warning: " << w.get<std::string>() << "\n";
}

Json same_splitting_json(const SameSplitting& s) {
    return Json{{"same", s.same},
                {"degenerate", s.degenerate},
                {"normalised_a", s.normalised_a},
                {"normalised_b", s.normalised_b},
                {"reducible_fallback", s.reducible_fallback}};
}

Json report_json(const SubfieldReport& r) {
    std::vector<std::pair<int, int>> obs = r.observed_factors;
    return Json{{"a", triple(r.a)},
                {"b", triple(r.b)},
                {"swapped", r.swapped},
                {"galois_a", to_string(r.ga)},
                {"galois_b", to_string(r.gb)},
                {"relation", to_string(r.relation)},
                {"degenerate", r.degenerate},
                {"predicted_pattern", r.degenerate ? Json(nullptr) : Json(pattern_string(r.predicted_pattern))},
                {"observed_pattern", pattern_string(obs)},
                {"consistent", r.consistent()}};
}

Json normal_form_json(const NormalForm& nf) {
    return Json{{"kind", to_string(nf.kind)}, {"target", triple(nf.target)}, {"parameter", rat(nf.parameter)},
                {"witness", coeffs(nf.witness)}};
}

SexticPair parse_pair(const std::string& s) {
    for (auto p : {SexticPair::S3S3, SexticPair::S3C3, SexticPair::S3C2, SexticPair::S3Id, SexticPair::C3C2})
        if (s == to_string(p)) return p;
    throw usage_error("unknown --pair '" + s + "' (S3xS3, S3xC3, S3xC2, S3x1, C3xC2)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Splitting fields of cubics: resolvents, Tschirnhausen witnesses and subfield classification.\n"
                 "Cubics are X^3 - a1 X^2 + a2 X - a3, given as --a a1,a2,a3 (note the alternating signs),\n"
                 "or as --monic c2,c1,c0 for X^3 + c2 X^2 + c1 X + c0. Rationals are written p/q."};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a JSON document")->configurable(false);
    app.fallthrough();

    Doc doc;
    std::function<void()> action;

    CubicArg ca{"a", "", ""}, cb{"b", "", ""}, cs{"s", "", ""}, ct{"t", "", ""};

    auto* inv = app.add_subcommand("invariants", "A, B, C, D, E of f(a)");
    ca.add(inv, true);
    inv->callback([&] {
        action = [&] {
            const T a = ca.get();
            const auto v = cubic_invariants(a);
            doc.inputs = {{"a", triple(a)}};
            doc.result = {{"A", rat(v.A)}, {"B", rat(v.B)}, {"C", rat(v.C)}, {"D", rat(v.D)}, {"E", rat(v.E)}};
            if (v.D.is_zero()) doc.diagnostics.push_back("D = 0: inseparable");
            else doc.result["galois"] = to_string(galois_type(a));
        };
    });

    std::string kind = "F2", params, pair_name;
    bool do_factor = false;
    auto* res = app.add_subcommand("resolvent", "resolvent polynomials");
    res->add_option("--kind", kind, "F0 F1 F2 G2 H F2plus F2minus hplus hminus sextic")->capture_default_str();
    cs.add(res);
    ct.add(res);
    res->add_option("--params", params, "two rationals s,t (G2, H, F2plus/minus, hplus/minus, sextic)");
    res->add_option("--pair", pair_name, "sextic family: S3xS3 S3xC3 S3xC2 S3x1 C3xC2");
    res->add_flag("--factor", do_factor, "factor over Q");
    res->callback([&] {
        action = [&] {
            Poly<Rat> f;
            doc.inputs = {{"kind", kind}};
            if (kind == "F0" || kind == "F1" || kind == "F2") {
                const T s = cs.get(), t = ct.get();
                doc.inputs["s"] = triple(s);
                doc.inputs["t"] = triple(t);
                f = kind == "F0" ? resolvent_F0(s, t) : kind == "F1" ? resolvent_F1(s, t) : resolvent_F2(s, t);
            } else {
                if (params.empty()) throw usage_error("--kind " + kind + " needs --params s,t");
                const auto p = parse_rats(params, 2);
                doc.inputs["params"] = Json::array({rat(p[0]), rat(p[1])});
                if (kind == "G2") f = resolvent_G2(p[0], p[1]);
                else if (kind == "H") f = resolvent_H(p[0], p[1]);
                else if (kind == "F2plus") f = cyclic_F2_pm(p[0], p[1]).first;
                else if (kind == "F2minus") f = cyclic_F2_pm(p[0], p[1]).second;
                else if (kind == "hplus") f = cyclic_h_pm(p[0], p[1]).first;
                else if (kind == "hminus") f = cyclic_h_pm(p[0], p[1]).second;
                else if (kind == "sextic") {
                    const auto pr = parse_pair(pair_name);
                    doc.inputs["pair"] = to_string(pr);
                    f = sextic_generic(pr, p[0], p[1]);
                } else throw usage_error("unknown --kind '" + kind + "'");
            }
            doc.result = {{"polynomial", poly(f)}};
            if (do_factor) doc.result["factorization"] = factorization(f);
        };
    });

    std::string coeff_text;
    auto* fac = app.add_subcommand("factor", "factor a rational polynomial over Q");
    fac->add_option("--coeffs", coeff_text, "coefficients, constant term first")->required();
    fac->callback([&] {
        action = [&] {
            Poly<Rat> f(parse_rats(coeff_text), Rat(0));
            if (f.is_zero()) throw precondition_error("f = 0", "the zero polynomial has no factorisation");
            doc.inputs = {{"coeffs", poly(f)["coeffs"]}};
            doc.result = {{"polynomial", poly(f)}, {"factorization", factorization(f)}};
        };
    });

    auto* iso = app.add_subcommand("decide-iso", "decide Spl f(a) = Spl f(b)");
    ca.add(iso);
    cb.add(iso);
    iso->callback([&] {
        action = [&] {
            const T a = ca.get(), b = cb.get();
            doc.inputs = {{"a", triple(a)}, {"b", triple(b)}};
            const auto s = decide_same_splitting(a, b);
            doc.result = same_splitting_json(s);
            if (s.witness) doc.witness = coeffs(*s.witness);
            if (s.reducible_fallback) doc.diagnostics.push_back("f(a) reducible: decided by factor pattern and quadratic field");
        };
    });

    auto* cls = app.add_subcommand("classify", "subfield relation and F2 factorisation pattern");
    ca.add(cls);
    cb.add(cls);
    cls->callback([&] {
        action = [&] {
            const T a = ca.get(), b = cb.get();
            doc.inputs = {{"a", triple(a)}, {"b", triple(b)}};
            const auto r = classify_subfield(a, b);
            doc.result = report_json(r);
            if (r.witness) doc.witness = coeffs(*r.witness);
            if (r.swapped) doc.diagnostics.push_back("arguments swapped so that #G_a >= #G_b");
            if (r.degenerate) doc.diagnostics.push_back("degenerate locus: F2 has a repeated factor");
        };
    });

    std::string c2_text;
    auto* tr = app.add_subcommand("transform", "Tschirnhausen coefficients mapping f(a) to f(b)");
    ca.add(tr);
    cb.add(tr);
    tr->add_option("--c2", c2_text, "recover c0, c1 from a given c2");
    tr->callback([&] {
        action = [&] {
            const T a = ca.get(), b = cb.get();
            doc.inputs = {{"a", triple(a)}, {"b", triple(b)}};
            if (!c2_text.empty()) {
                const Rat c2 = Rat::parse(c2_text);
                doc.inputs["c2"] = rat(c2);
                const auto c = recover_coeffs(a, b, c2);
                doc.result = {{"verified", verify_transformation(a, b, c)}};
                doc.witness = coeffs(c);
            } else {
                Json all = Json::array();
                const auto ws = all_witnesses(a, b);
                for (const auto& w : ws) all.push_back(coeffs(w));
                doc.result = {{"count", ws.size()}, {"witnesses", all}};
                if (!ws.empty()) doc.witness = coeffs(ws.front());
            }
        };
    });

    std::string target = "one-param";
    auto* red = app.add_subcommand("reduce", "move f(a) to a normal form");
    red->add_option("--to", target, "depressed, one-param or shanks")->capture_default_str();
    ca.add(red, true);
    red->callback([&] {
        action = [&] {
            const T a = ca.get();
            doc.inputs = {{"a", triple(a)}, {"to", target}};
            if (target == "depressed") {
                const auto nf = reduce_depressed(a);
                doc.result = normal_form_json(nf);
                doc.witness = coeffs(nf.witness);
            } else if (target == "one-param") {
                const auto nf = reduce_one_param(a);
                doc.result = normal_form_json(nf);
                doc.witness = coeffs(nf.witness);
                if (nf.kind == NormalKind::OneParamAlternate)
                    doc.diagnostics.push_back("A = 0: reduced to X^3 - 3X - (B + 1/B) instead");
            } else if (target == "shanks") {
                const auto v = reduce_shanks(a);
                Json forms = Json::array();
                for (const auto& nf : v) forms.push_back(normal_form_json(nf));
                doc.result = {{"forms", forms}};
                doc.witness = coeffs(v.front().witness);
            } else {
                throw usage_error("unknown --to '" + target + "'");
            }
        };
    });

    std::string fam_kind, fam_param_a, fam_param_m;
    long height = 10;
    auto* fam = app.add_subcommand("family", "family members by parameter height");
    fam->add_option("--kind", fam_kind, "s3 (X^3+aX+a) or c3 (Shanks)")->required();
    fam->add_option("--a", fam_param_a, "parameter a for s3");
    fam->add_option("--m", fam_param_m, "parameter m for c3");
    fam->add_option("--height", height, "maximal height of u or z")->capture_default_str();
    fam->callback([&] {
        action = [&] {
            std::vector<FamilyMember> members;
            if (fam_kind == "s3") {
                if (fam_param_a.empty()) throw usage_error("--kind s3 needs --a");
                const Rat a = Rat::parse(fam_param_a);
                doc.inputs = {{"kind", "s3"}, {"a", rat(a)}, {"height", height}};
                members = enumerate_family_s3(a, height);
            } else if (fam_kind == "c3") {
                if (fam_param_m.empty()) throw usage_error("--kind c3 needs --m");
                const Rat m = Rat::parse(fam_param_m);
                doc.inputs = {{"kind", "c3"}, {"m", rat(m)}, {"height", height}};
                members = enumerate_family_c3(m, height);
            } else {
                throw usage_error("unknown --kind '" + fam_kind + "'");
            }
            Json out = Json::array();
            for (const auto& mem : members) {
                Json b = Json::array();
                for (const Rat& x : mem.b) b.push_back(rat(x));
                out.push_back({{"param", rat(mem.param)}, {"b", b}});
            }
            doc.result = {{"count", members.size()}, {"members", out}};
        };
    });

    long m_min = -1, m_max = 12, n_max = 2500;
    unsigned jobs = 0;
    auto* scan = app.add_subcommand("scan", "integer pairs of Shanks cubics with equal splitting fields");
    scan->add_option("--m-min", m_min)->capture_default_str();
    scan->add_option("--m-max", m_max)->capture_default_str();
    scan->add_option("--n-max", n_max)->capture_default_str();
    scan->add_option("--jobs", jobs, "worker threads (default TSCHIRN_JOBS or 1)");
    scan->callback([&] {
        action = [&] {
            const unsigned j = jobs ? jobs : std::max(1u, env_unsigned("TSCHIRN_JOBS", 1));
            doc.inputs = {{"m_min", m_min}, {"m_max", m_max}, {"n_max", n_max}};
            const auto r = scan_equal_splitting(m_min, m_max, n_max, j);
            Json hits = Json::array();
            for (const auto& h : r.hits) hits.push_back({{"m", h.m}, {"n", h.n}, {"sign", h.plus ? "+" : "-"}});
            doc.result = {{"pairs", hits}, {"classes", r.classes}};
        };
    });

    std::string level = "fast";
    bool timings = false;
    int selftest_status = 0;
    auto* st = app.add_subcommand("selftest", "run the acceptance suites");
    st->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
    st->add_option("--jobs", jobs, "worker threads for the scan (default TSCHIRN_JOBS or hardware)");
    st->add_flag("--timings", timings, "include wall-clock seconds");
    st->callback([&] {
        action = [&] {
            SelftestOptions o;
            o.full = level == "full";
            o.seed = env_unsigned("TSCHIRN_SEED", static_cast<unsigned>(o.seed));
            o.jobs = jobs ? jobs : env_unsigned("TSCHIRN_JOBS", std::max(1u, std::thread::hardware_concurrency()));
            doc.inputs = {{"level", level}, {"seed", o.seed}};
            Json out = Json::array();
            int failed = 0;
            for (const auto& r : run_acceptance(o)) {
                Json e{{"id", r.id}, {"name", r.name}, {"pass", r.pass()}, {"detail", r.detail},
                       {"limit_seconds", r.limit_seconds}};
                if (timings) e["seconds"] = r.seconds;
                out.push_back(e);
                failed += r.pass() ? 0 : 1;
            }
            doc.result = {{"failed", failed}, {"criteria", out}};
            selftest_status = failed ? kMath : kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }
    doc.command = app.get_subcommands().front()->get_name();

    try {
        action();
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (json) {
            doc.result = nullptr;
            doc.diagnostics.push_back(e.what());
            emit(doc, true);
        }
        return kMath;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kMath;
    }

    if (doc.command == "selftest" && !json) {
        for (const auto& c : doc.result["criteria"]) {
            std::cout << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " criterion " << c["id"].get<int>() << ": "
                      << c["name"].get<std::string>();
            if (timings) std::cout << " [" << c["seconds"].get<double>() << " s]";
            std::cout << " " << c["detail"].get<std::string>() << "\n";
        }
        std::cout << doc.result["failed"].get<int>() << " failed\n";
    } else {
        emit(doc, json);
    }
    return doc.command == "selftest" ? selftest_status : kOk;
}
