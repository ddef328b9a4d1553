// Command-line front end for the mod-p principal series of GL2(O/m^2).
//
// r is read as an integer and reduced mod q-1 into [1, q-1]; 0 and every
// multiple of q-1 become q-1, since character exponents live in N~ \ {0}.

#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "psgl2/serialize.hpp"

namespace {

using namespace psgl2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<int> p, f, n;
    std::string variant = "equalchar";
    std::optional<long long> r, alpha, beta;
    std::string label, format = "json", suite = "all";
    std::uint64_t seed = kDefaultSeed;
};

int require_p(const Options& o) {
    if (!o.p) throw UsageError("--p is required");
    return *o.p;
}

int field_degree(const Options& o) { return o.f.value_or(1); }

NClass canonical_r(int p, int f, long long r) {
    const long long q1 = int_pow(p, f) - 1;
    long long m = ((r % q1) + q1) % q1;
    return NClass::from_integer(p, f, m == 0 ? q1 : m);
}

NClass class_in_range(int p, int f, long long v, const char* name) {
    if (v < 0 || v >= int_pow(p, f)) throw UsageError(std::string("--") + name + " must lie in [0, q-1]");
    return NClass::from_integer(p, f, v);
}

Variant variant_of(const Options& o) {
    try {
        return parse_variant(o.variant);
    } catch (const std::exception&) {
        throw UsageError("--variant must be equalchar or witt");
    }
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (o.format == a) return;
    throw UsageError("--format " + o.format + " is not supported by this command");
}

int cmd_carry(const Options& o) {
    require_format(o, {"json", "text"});
    const int p = require_p(o), f = field_degree(o);
    if (!o.alpha || !o.beta) throw UsageError("carry needs --alpha and --beta");
    const CarrySet I = carry_set(class_in_range(p, f, *o.alpha, "alpha"), class_in_range(p, f, *o.beta, "beta"));
    if (o.format == "json")
        std::cout << Json{{"carry_set", to_json(I)}}.dump() << "\n";
    else
        std::cout << I.to_string() << "\n";
    return 0;
}

int cmd_jh(const Options& o) {
    require_format(o, {"json", "text"});
    const int p = require_p(o), f = field_degree(o), n = o.n.value_or(2);
    if (n < 1) throw UsageError("--n must be positive");
    const NClass r = canonical_r(p, f, o.r.value_or(1));
    const auto ws = jh_multiset(n, {NClass::zero(p, f), r});
    if (o.format == "json") {
        Json j{{"p", p}, {"f", f}, {"n", n}, {"r", r.to_integer()}};
        j.update(constituents_json(ws));
        std::cout << j.dump() << "\n";
        return 0;
    }
    long long total = 0;
    std::printf("%-14s %s\n", "weight", "dim");
    for (const auto& w : ws) {
        std::printf("%-14s %lld\n", w.to_string().c_str(), w.dimension());
        total += w.dimension();
    }
    std::printf("%zu constituents, total dim %lld\n", ws.size(), total);
    return 0;
}

int cmd_poset(const Options& o) {
    const int p = require_p(o), f = field_degree(o);
    const NClass r = canonical_r(p, f, o.r.value_or(1));
    if (variant_of(o) == Variant::EqualChar) {
        const GammaGraph G = gamma_graph(r);
        if (o.format == "dot")
            std::cout << to_dot(G);
        else if (o.format == "json")
            std::cout << to_json(G).dump() << "\n";
        else
            for (std::size_t v = 0; v < G.vertices.size(); ++v)
                std::cout << vertex_label(G.vertices[v], r) << "  up " << G.level_up[v] << " down " << G.level_down[v]
                          << "\n";
        return 0;
    }
    for (int i = 0; i < f; ++i)
        if (r.digit(i) < 1 || r.digit(i) > p - 2)
            throw UsageError("the unramified poset needs every digit of r in [1, p-2]");
    const UnramPoset P = unram_poset(r);
    std::string out;
    try {
        if (o.format == "dot")
            out = to_dot(P);
        else if (o.format == "json")
            out = to_json(P).dump() + "\n";
        else
            for (const auto& t : P.nodes) out += t.to_string() + " : " + unram_sigma(t, r).to_string() + "\n";
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("r is not generic enough for the unramified poset: ") + e.what());
    }
    std::cout << out;
    return 0;
}

ThetaElem parse_label(const std::string& s, int p, int f, int n) {
    static const std::regex two(R"(\(?\s*(inf|\d+)\s*,\s*(\d+)\s*\)?)"), one(R"(\(?\s*(inf|\d+)\s*\)?)");
    std::smatch m;
    std::string j0, j1 = "0";
    if (std::regex_match(s, m, two)) {
        j0 = m[1];
        j1 = m[2];
    } else if (std::regex_match(s, m, one)) {
        j0 = m[1];
    } else {
        throw UsageError("--label must look like (j0,j1), (inf,j1), j0 or inf");
    }
    if (n == 1 && j1 != "0") throw UsageError("labels for n = 1 have j1 = 0");
    const NClass c1 = class_in_range(p, f, std::stoll(j1), "label");
    if (j0 == "inf") return ThetaElem::at_infinity(c1);
    return ThetaElem::finite(class_in_range(p, f, std::stoll(j0), "label"), c1);
}

int cmd_spin(const Options& o) {
    require_format(o, {"json", "text"});
    const int p = require_p(o), f = field_degree(o), n = o.n.value_or(2);
    if (n != 1 && n != 2) throw UsageError("spin supports --n 1 or 2");
    if (o.label.empty()) throw UsageError("spin needs --label");
    const NClass r = canonical_r(p, f, o.r.value_or(1));
    verify_detail::Context ctx({p, f, variant_of(o)});
    const verify_detail::RepBundle B = ctx.rep(n, r);
    const RepSpace& V = B.V();
    const ThetaElem x = parse_label(o.label, p, f, n);
    const Subspace S = spin(B.action, V.f_vector(x));

    Json labels = Json::array();
    std::vector<Vector> inside;
    for (const auto& y : V.f_labels())
        if (S.contains(V.f_vector(y))) {
            labels.push_back(y.to_string());
            inside.push_back(V.f_vector(y));
        }
    const bool spanned = Subspace::span(V.field_ptr(), V.dim(), inside).dim() == S.dim();
    const Module M = restrict_module(B.action, S);
    const auto cands = verify_detail::candidates(B, n);

    Json j{{"p", p}, {"f", f}, {"variant", to_string(variant_of(o))}, {"n", n}, {"r", r.to_integer()},
           {"label", x.to_string()}, {"ambient_dim", V.dim()}, {"dim", S.dim()},
           {"f_labels_inside", labels}, {"spanned_by_f_labels", spanned}};
    if (n == 2 && variant_of(o) == Variant::EqualChar) {
        const RamType t = upsilon(x, r);
        j["type"] = t.to_string();
        j["type_weight"] = type_weight(t, r).to_string();
    }
    j["socle_layers"] = layers_json(verify_detail::socle_layers(M, cands));
    if (o.format == "json") {
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "spin of f" << x.to_string() << " in V_{" << n << "," << r.to_string() << "}: dim " << S.dim() << " of "
              << V.dim() << "\n";
    std::cout << (spanned ? "spanned by " : "contains (not spanned by) ") << labels.size() << " f-vectors\n";
    if (j.contains("type")) std::cout << "type " << j["type"].get<std::string>() << "\n";
    for (const auto& layer : j["socle_layers"]) {
        std::cout << "socle layer " << layer["level"].get<int>() << ":";
        for (const auto& c : layer["constituents"]) std::cout << " " << c["weight"].get<std::string>();
        std::cout << "\n";
    }
    return 0;
}

std::vector<std::string> split_suite(const std::string& s) {
    if (s == "all") return check_ids();
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t end = s.find(',', start);
        std::string id = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (!id.empty()) out.push_back(id);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    const auto known = check_ids();
    for (const auto& id : out)
        if (std::find(known.begin(), known.end(), id) == known.end()) throw UsageError("unknown check " + id);
    if (out.empty()) throw UsageError("--suite is empty");
    return out;
}

int cmd_verify(const Options& o) {
    require_format(o, {"json", "text"});
    CheckParams P;
    P.p = o.p;
    P.f = o.f;
    P.seed = o.seed;
    if (o.variant != "equalchar" || o.p) P.variant = variant_of(o);
    if (o.f && !o.p) throw UsageError("--f needs --p");
    if (o.r) {
        if (!o.p) throw UsageError("--r needs --p");
        P.f = field_degree(o);
        P.r = canonical_r(*o.p, *P.f, *o.r).to_integer();
    }
    std::ostream& table = o.format == "json" ? std::cerr : std::cout;
    bool all_pass = true;
    std::vector<CheckReport> reports;
    for (const auto& id : split_suite(o.suite)) {
        CheckReport R;
        try {
            R = run_check(id, P);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        all_pass = all_pass && R.status == Status::Pass;
        if (o.format == "json") std::cout << to_json(R).dump() << std::endl;
        reports.push_back(std::move(R));
    }
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-9s %8s  %s\n", "id", "status", "time(s)", "title");
    table << line;
    for (const auto& R : reports) {
        std::snprintf(line, sizeof line, "%-4s %-9s %8.2f  %s\n", R.check_id.c_str(), to_string(R.status).c_str(),
                      R.wall_time, R.title.c_str());
        table << line;
        if (o.format == "text" && R.status != Status::Pass)
            for (const auto& w : R.witnesses) table << "       " << w << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mod-p principal series of GL2(O/m^2).\n"
                 "r is reduced mod q-1 into [1, q-1]; r = 0 means q-1."};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--p", o.p, "residue characteristic (prime)");
    app.add_option("--f", o.f, "residue degree, q = p^f (default 1)");
    app.add_option("--variant", o.variant, "equalchar (e >= 2) or witt (e = 1)")->check(CLI::IsMember({"equalchar", "witt"}));
    app.add_option("--r", o.r, "character exponent; reduced mod q-1, 0 means q-1 (default 1)");
    app.add_option("--n", o.n, "level n of O/m^n (default 2)");
    app.add_option("--alpha", o.alpha, "first summand for carry, in [0, q-1]");
    app.add_option("--beta", o.beta, "second summand for carry, in [0, q-1]");
    app.add_option("--label", o.label, "f-basis label: (j0,j1), (inf,j1), j0 or inf");
    app.add_option("--format", o.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--seed", o.seed, "seed for randomized checks");
    app.add_option("--suite", o.suite, "comma-separated check ids (A0..A12) or all");

    auto* carry = app.add_subcommand("carry", "carry set I(alpha, beta)");
    auto* jh = app.add_subcommand("jh", "Jordan-Hoelder constituents of V_{n,r}");
    auto* poset = app.add_subcommand("poset", "Gamma_r (equalchar) or the unramified index poset (witt)");
    auto* spin_cmd = app.add_subcommand("spin", "submodule generated by one f-basis vector");
    auto* verify = app.add_subcommand("verify", "run acceptance checks; exit 0 iff all pass");
    bool text_default = false;
    verify->preparse_callback([&](std::size_t) { text_default = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    // verify prints a table unless JSON is requested explicitly.
    if (text_default && app.count("--format") == 0) o.format = "text";

    try {
        if (carry->parsed()) return cmd_carry(o);
        if (jh->parsed()) return cmd_jh(o);
        if (poset->parsed()) return cmd_poset(o);
        if (spin_cmd->parsed()) return cmd_spin(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
