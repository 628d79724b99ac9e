#include "gt/braid.hpp"
#include "gt/io.hpp"
#include "gt/surface.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gt;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kContext = 3 };

struct Options {
    int genus = 0;
    int boundaries = 1;
    int max_degree = 4;
    int check_degree = -1;
    std::string framing = "adapted";
    std::string format = "text";
    std::string config;
    // verb specific
    std::vector<std::string> args;
    std::string side = "left";
    std::string kind = "framed";
    std::string op = "split";
    int index = 1;
    bool serial = false;
};

struct ContextError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool json_out(const Options& o) { return o.format == "json"; }

SurfaceContext surface(const Options& o, int N) {
    if (o.genus < 0 || o.boundaries < 0) throw ContextError("genus and boundary count must be non-negative");
    if (N < 1) throw ContextError("truncation degree must be positive");
    return SurfaceContext::make(o.genus, o.boundaries, N);
}

Framing framing(const Options& o) {
    try {
        return Framing::parse(o.framing, o.boundaries);
    } catch (const std::invalid_argument& e) {
        throw ContextError(e.what());
    }
}

void need_args(const Options& o, std::size_t n, const std::string& verb) {
    if (o.args.size() != n)
        throw CLI::ValidationError(verb, "expects " + std::to_string(n) + " expression argument(s), got " +
                                             std::to_string(o.args.size()));
}

void emit(const Options& o, const std::string& text, const json& j) {
    if (json_out(o)) std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
}

int report_checks(const Options& o, const std::vector<CheckEntry>& checks, bool pass) {
    json arr = json::array();
    std::string text;
    for (const auto& c : checks) {
        arr.push_back({{"check", c.check},
                       {"status", c.pass ? "pass" : "fail"},
                       {"degree", c.degree},
                       {"witness", c.witness.empty() ? json(nullptr) : json(c.witness)}});
        text += c.check + ": " + (c.pass ? "pass" : "fail") + " (degree " + std::to_string(c.degree) + ")";
        if (!c.witness.empty()) text += " witness: " + c.witness;
        text += "\n";
    }
    text += pass ? "PASS" : "FAIL";
    emit(o, text, arr);
    return pass ? kOk : kFailed;
}

int run_bracket(const Options& o) {
    need_args(o, 2, "bracket");
    SurfaceContext ctx = surface(o, o.max_degree);
    CyclicElement a = parse_cyclic(o.args[0], ctx.alphabet, ctx.max_degree);
    CyclicElement b = parse_cyclic(o.args[1], ctx.alphabet, ctx.max_degree);
    CyclicElement r = bracket_cyclic(make_rho_G(ctx), a, b);
    emit(o, format_cyclic(r), to_json(r));
    return kOk;
}

int run_cobracket(const Options& o) {
    need_args(o, 1, "cobracket");
    SurfaceContext ctx = surface(o, o.max_degree);
    CyclicElement a = parse_cyclic(o.args[0], ctx.alphabet, ctx.max_degree);
    CyclicSquare r = cobracket_cyclic(make_q_framing(ctx, framing(o)), a);
    emit(o, format_cyclic_square(r), to_json(r));
    return kOk;
}

int run_doublebracket(const Options& o) {
    need_args(o, 2, "doublebracket");
    SurfaceContext ctx = surface(o, o.max_degree);
    TensorElement a = parse_element(o.args[0], ctx.alphabet, ctx.max_degree);
    TensorElement b = parse_element(o.args[1], ctx.alphabet, ctx.max_degree);
    TensorSquare r = double_bracket(make_rho_G(ctx), a, b);
    emit(o, format_square(r), to_json(r));
    return kOk;
}

// classical Fox derivative with respect to one generator
int run_fox_eval(const Options& o) {
    need_args(o, 2, "fox-eval");
    SurfaceContext ctx = surface(o, o.max_degree);
    int g = ctx.alphabet->find(o.args[0]);
    if (g < 0) throw UnknownGenerator(0, o.args[0]);
    Side side = o.side == "right" ? Side::Right : Side::Left;
    FoxDerivative d = FoxDerivative::zero(side, ctx.alphabet, ctx.max_degree);
    d.set(static_cast<Letter>(g), ctx.one());
    TensorElement r = d.eval(parse_element(o.args[1], ctx.alphabet, ctx.max_degree));
    emit(o, format_element(r), to_json(r));
    return kOk;
}

int run_qder_eval(const Options& o) {
    need_args(o, 1, "qder-eval");
    SurfaceContext ctx = surface(o, o.max_degree);
    TensorElement r = make_q_framing(ctx, framing(o)).eval(parse_element(o.args[0], ctx.alphabet, ctx.max_degree));
    emit(o, format_element(r), to_json(r));
    return kOk;
}

int run_verify_bialgebra(const Options& o) {
    const int D = o.check_degree > 0 ? o.check_degree : o.max_degree;
    SurfaceContext ctx = surface(o, D);
    BialgebraReport rep = verify_bialgebra(ctx, framing(o), D, !o.serial);
    return report_checks(o, rep.checks, rep.pass());
}

int run_verify_phi(const Options& o) {
    const int D = o.check_degree > 0 ? o.check_degree : o.max_degree;
    if (o.genus < 0 || o.boundaries < 0) throw ContextError("genus and boundary count must be non-negative");
    PhiReport rep = verify_phi(o.genus, o.boundaries, D);
    std::vector<CheckEntry> checks;
    bool relations_ok = rep.witness.rfind("relation", 0) != 0;
    checks.push_back({"relations", relations_ok, D, relations_ok ? "" : rep.witness});
    for (int d = 1; d <= D; ++d) {
        bool ok = rep.ranks[d] == rep.source_dims[d] && rep.ranks[d] == rep.target_dims[d];
        std::string w = ok ? "" : "source " + std::to_string(rep.source_dims[d]) + ", rank " +
                                      std::to_string(rep.ranks[d]) + ", target " + std::to_string(rep.target_dims[d]);
        checks.push_back({"bijection", ok, d, w});
    }
    return report_checks(o, checks, rep.pass);
}

DKKind parse_kind(const std::string& k) {
    if (k == "unframed") return DKKind::Unframed;
    if (k == "framed") return DKKind::Framed;
    if (k == "genus") return DKKind::Genus;
    throw CLI::ValidationError("--kind", "must be unframed, framed or genus");
}

int run_dk_dims(const Options& o) {
    const int D = o.check_degree > 0 ? o.check_degree : o.max_degree;
    if (o.boundaries < 0 || o.genus < 0) throw ContextError("negative strand count or genus");
    DKAlgebra A = dk_algebra(parse_kind(o.kind), o.genus, o.boundaries, D);
    std::vector<long long> dims = A.pres->dims(D);
    std::string csv = "degree,dim";
    json rows = json::array();
    for (int d = 1; d <= D; ++d) {
        csv += "\n" + std::to_string(d) + "," + std::to_string(dims[d]);
        rows.push_back({{"degree", d}, {"dim", dims[d]}});
    }
    emit(o, csv, json{{"algebra", A.pres->name()}, {"dims", rows}});
    return kOk;
}

int run_dk_compose(const Options& o) {
    const int D = o.check_degree > 0 ? o.check_degree : o.max_degree;
    const DKKind kind = parse_kind(o.kind);
    const int n = o.boundaries;
    if (n < 0 || o.genus < 0) throw ContextError("negative strand count or genus");
    const bool split = o.op == "split";
    if (!split && o.op != "delete") throw CLI::ValidationError("--op", "must be split or delete");
    DKAlgebra A = dk_algebra(kind, o.genus, n, D);
    DKAlgebra B = dk_algebra(kind, o.genus, split ? n + 1 : n - 1, D);
    LieHomomorphism h = split ? string_split(A, o.index, B) : string_delete(A, o.index, B);
    CheckResult ok = check_homomorphism(h, D);
    std::string text;
    json images = json::object();
    for (Letter l = 0; l < A.pres->alphabet()->size(); ++l) {
        const std::string& nm = A.pres->alphabet()->name(l);
        text += nm + " -> " + format_element(h.images()[l]) + "\n";
        images[nm] = format_element(h.images()[l]);
    }
    text += std::string("homomorphism: ") + (ok ? "pass" : "fail: " + ok.witness);
    emit(o, text, json{{"map", h.name()}, {"images", images}, {"homomorphism", ok.ok}});
    return ok ? kOk : kFailed;
}

int run_defect(const Options& o) {
    need_args(o, 1, "defect");
    const int D = o.check_degree > 0 ? o.check_degree : o.max_degree;
    SurfaceContext ctx = surface(o, D + 2);
    TensorElement x = parse_element(o.args[0], ctx.alphabet, ctx.max_degree);
    ConjugationResult r = conjugation_defect(x, make_rho_G(ctx), D);
    std::string text;
    json table = json::array();
    for (Letter a = 0; a < ctx.alphabet->size(); ++a)
        for (Letter b = 0; b < ctx.alphabet->size(); ++b) {
            TensorElement v = r.rho_h.value(a, b).truncated(D);
            if (v.is_zero()) continue;
            text += "rho_h(" + ctx.alphabet->name(a) + ", " + ctx.alphabet->name(b) + ") = " + format_element(v) + "\n";
            table.push_back({{"left", ctx.alphabet->name(a)}, {"right", ctx.alphabet->name(b)}, {"value", to_json(v)}});
        }
    text += std::string("commutes: ") + (r.commutes ? "true" : "false (" + r.witness + ")");
    emit(o, text, json{{"rho_h", table}, {"commutes", r.commutes}, {"witness", r.witness}});
    return r.commutes ? kOk : kFailed;
}

void load_config(Options& o, const CLI::App& sub) {
    if (o.config.empty()) return;
    std::ifstream in(o.config);
    if (!in) throw ContextError("cannot open config file " + o.config);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw CLI::ValidationError("--config", e.what());
    }
    auto take = [&](const char* key, const char* flag, auto& field) {
        if (j.contains(key) && sub.count(flag) == 0) j.at(key).get_to(field);
    };
    take("genus", "--genus", o.genus);
    take("boundaries", "--boundaries", o.boundaries);
    take("max_degree", "--max-degree", o.max_degree);
    take("check_degree", "--check-degree", o.check_degree);
    take("framing", "--framing", o.framing);
    take("format", "--format", o.format);
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("-g,--genus", o.genus, "surface genus");
    sub->add_option("-n,--boundaries", o.boundaries, "boundary components (strands for dk-*)");
    sub->add_option("-N,--max-degree", o.max_degree, "truncation degree");
    sub->add_option("-D,--check-degree", o.check_degree, "verification degree");
    sub->add_option("--framing", o.framing, "adapted | rot:r1,r2,...");
    sub->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--config", o.config, "JSON file with the same keys; flags override");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fox calculus, Goldman-Turaev operations and Drinfeld-Kohno presentations"};
    app.require_subcommand(1);
    Options o;
    std::map<CLI::App*, std::function<int(const Options&)>> handlers;

    auto verb = [&](const std::string& name, const std::string& help, std::function<int(const Options&)> fn,
                    bool positional) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub, o);
        if (positional) sub->add_option("expr", o.args, "element expressions");
        handlers[sub] = std::move(fn);
        return sub;
    };
    verb("bracket", "[|a|, |b|] for rho_G", run_bracket, true);
    verb("cobracket", "delta(|a|) for the framing", run_cobracket, true);
    verb("doublebracket", "{{a, b}} for rho_G", run_doublebracket, true);
    verb("fox-eval", "Fox derivative d/dGEN of an element", run_fox_eval, true)
        ->add_option("--side", o.side, "left | right")
        ->check(CLI::IsMember({"left", "right"}));
    verb("qder-eval", "q^f(a) for the framing", run_qder_eval, true);
    verb("dk-dims", "degreewise dimensions of a Drinfeld-Kohno algebra", run_dk_dims, false)
        ->add_option("--kind", o.kind, "unframed | framed | genus");
    CLI::App* comp = verb("dk-compose", "string splitting / deletion maps", run_dk_compose, false);
    comp->add_option("--kind", o.kind, "unframed | framed | genus");
    comp->add_option("--op", o.op, "split | delete");
    comp->add_option("-k,--index", o.index, "strand index");
    verb("verify-phi", "check the isomorphism onto the extension algebra", run_verify_phi, false);
    verb("defect", "conjugation defect for a group-like element", run_defect, true);

    CLI::App* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    CLI::App* vb = verify->add_subcommand("bialgebra", "Lie bialgebra axioms on cyclic words");
    add_common(vb, o);
    vb->add_flag("--serial", o.serial, "use the serial reference kernels");
    handlers[vb] = run_verify_bialgebra;
    CLI::App* vp = verify->add_subcommand("phi", "same as verify-phi");
    add_common(vp, o);
    handlers[vp] = run_verify_phi;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    for (auto& [sub, fn] : handlers) {
        if (!sub->parsed()) continue;
        try {
            load_config(o, *sub);
            return fn(o);
        } catch (const CLI::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kUsage;
        } catch (const ParseError& e) {
            std::cerr << e.what() << "\n";
            return kUsage;
        } catch (const UnknownGenerator& e) {
            std::cerr << e.what() << "\n";
            return kUsage;
        } catch (const NonAugmentedInput& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kUsage;
        } catch (const ContextError& e) {
            std::cerr << "context error: " << e.what() << "\n";
            return kContext;
        } catch (const ContextMismatch& e) {
            std::cerr << "context error: " << e.what() << "\n";
            return kContext;
        } catch (const NotGroupLike& e) {
            std::cerr << "context error: " << e.what() << "\n";
            return kContext;
        } catch (const IndexOutOfRange& e) {
            std::cerr << "context error: " << e.what() << "\n";
            return kContext;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kFailed;
        }
    }
    return kUsage;
}
