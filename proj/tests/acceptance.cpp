// One line per acceptance criterion; exit status is nonzero when any line fails.
#include "gt/braid.hpp"
#include "gt/surface.hpp"
#include "gt/sweep.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gt;
using gt::testing::random_fox;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// ---------------------------------------------------------------- 1
Outcome kappa_reproduction() {
    for (auto [g, n] : {std::pair{0, 2}, {1, 1}, {2, 1}}) {
        SurfaceContext ctx = SurfaceContext::make(g, n, 4);
        LetterPairTable computed = kappa_table(ctx), expected = kappa_reference(ctx);
        if (computed != expected) return fail("table differs at (g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ")");
    }
    return {true, "3 surfaces"};
}

// ---------------------------------------------------------------- 2
Outcome exactness_vanishing() {
    const int N = 5;
    AlphabetPtr al = gt::testing::letters(3);
    std::mt19937 rng(20240611);
    std::vector<Word> W = cyclic_words_up_to_degree(*al, N);
    for (int trial = 0; trial < 50; ++trial) {
        FoxDerivative dl = random_fox(rng, Side::Left, al, N), dr = random_fox(rng, Side::Right, al, N);
        FoxPairing tau = make_exact_pairing(dl, dr);
        LetterBrackets kappa(tau);
        for (const CyclicElement& e : bracket_sweep(kappa, W, W, N, true))
            if (!e.is_zero()) return fail("nonzero bracket from tau, trial " + std::to_string(trial) + ": " + format_cyclic(e));
        Cobracket delta(make_exact_qder(dl, dr));
        std::vector<CyclicSquare> cob = cobracket_sweep(delta, W, true);
        for (std::size_t i = 0; i < W.size(); ++i)
            if (!cob[i].is_zero())
                return fail("nonzero cobracket from mu on |" + format_word(*al, W[i]) + "|, trial " + std::to_string(trial));
    }
    return {true, "50 tables, " + std::to_string(W.size()) + " cyclic words"};
}

// ---------------------------------------------------------------- 3
Outcome well_definedness() {
    const int N = 5;
    std::mt19937 rng(7);
    struct Case {
        FoxPairing rho;
        QuasiDerivation q;
        std::string name;
    };
    std::vector<Case> cases;
    {
        SurfaceContext ctx = SurfaceContext::make(1, 1, N);
        cases.push_back({make_rho_G(ctx), make_q_framing(ctx, Framing::parse("rot:2", 1)), "surface (1,1)"});
    }
    {
        AlphabetPtr al = gt::testing::letters(2);
        FoxPairing sigma = gt::testing::random_pairing(rng, al, N);
        cases.push_back({gt::testing::random_pairing(rng, al, N), gt::testing::random_qder(rng, sigma), "random, 2 letters"});
    }
    std::size_t pairs = 0;
    for (const Case& c : cases) {
        const AlphabetPtr& al = c.rho.alphabet();
        std::vector<Word> words = words_up_to_degree(*al, N);
        std::vector<Word> partners = cyclic_words_up_to_degree(*al, 3);
        Cobracket delta(c.q);
        LetterBrackets kappa(c.rho);
        for (const Word& a : words)
            for (const Word& b : words) {
                if (a.empty() || b.empty() || al->degree(a) + al->degree(b) > N || !(a < b)) continue;
                ++pairs;
                TensorElement comm = TensorElement::word(al, N, concat(a, b)) - TensorElement::word(al, N, concat(b, a));
                for (const Word& w : partners) {
                    TensorElement lw = TensorElement::word(al, N, w);
                    if (!bracket_of_lifts(c.rho, comm, lw).is_zero() || !bracket_of_lifts(c.rho, lw, comm).is_zero())
                        return fail(c.name + ": bracket sees |ab - ba| for a = " + format_word(*al, a) + ", b = " +
                                    format_word(*al, b));
                }
                if (!delta.on_lift(comm).is_zero())
                    return fail(c.name + ": cobracket sees |ab - ba| for a = " + format_word(*al, a) + ", b = " +
                                format_word(*al, b));
            }
    }
    return {true, std::to_string(pairs) + " commutators"};
}

// ---------------------------------------------------------------- 4
Outcome mu_oracle() {
    const int N = 5;
    std::size_t count = 0;
    for (const std::string& f : {std::string("adapted"), std::string("rot:1,-2")}) {
        SurfaceContext ctx = SurfaceContext::make(1, 2, N);
        Framing fr = Framing::parse(f, 2);
        QuasiDerivation q = make_q_framing(ctx, fr);
        for (const Word& w : words_up_to_degree(*ctx.alphabet, N)) {
            if (w.empty()) continue;
            ++count;
            TensorSquare lhs = project_left_cyclic(dq_map(q, TensorElement::word(ctx.alphabet, N, w)));
            if (lhs != mu_r_oracle(ctx, fr, w)) return fail(f + ": mismatch on " + format_word(*ctx.alphabet, w));
        }
    }
    return {true, std::to_string(count) + " words, genus 1 with 2 boundaries"};
}

// ---------------------------------------------------------------- 5
Outcome bialgebra_suite() {
    std::string detail;
    for (auto [g, n, f] : {std::tuple{0, 2, "adapted"}, {1, 1, "adapted"}, {1, 1, "rot:2"}}) {
        SurfaceContext ctx = SurfaceContext::make(g, n, 4);
        BialgebraReport rep = verify_bialgebra(ctx, Framing::parse(f, n), 4);
        for (const auto& c : rep.checks)
            if (!c.pass) return fail(std::string(f) + ": " + c.check + " " + c.witness);
    }
    return {true, "3 surfaces, 5 checks each"};
}

// ---------------------------------------------------------------- 6
Outcome dk_identities() {
    const int D = 4;
    for (DKKind kind : {DKKind::Framed, DKKind::Genus}) {
        for (int n = 1; n <= 3; ++n) {
            DKAlgebra A = dk_algebra(kind, 1, n, D), B = dk_algebra(kind, 1, n + 1, D);
            LieHomomorphism d = string_split(A, n, B);
            for (int k : {n, n + 1}) {
                LieHomomorphism comp = string_delete(B, k, A).after(d);
                for (Letter l = 0; l < A.pres->alphabet()->size(); ++l)
                    if (comp.images()[l] != TensorElement::letter(A.pres->alphabet(), D, l))
                        return fail("s_" + std::to_string(k) + " d_" + std::to_string(n) + " moves " +
                                    A.pres->alphabet()->name(l));
            }
        }
    }
    DKAlgebra T1 = dk_algebra(DKKind::Framed, 0, 1, D), T2 = dk_algebra(DKKind::Framed, 0, 2, D);
    const TensorElement T = T1.pres->gen("t1_1");
    TensorElement H = string_split(T1, 1, T2).apply_tensor(T) - string_split(T1, 0, T2).apply_tensor(T) -
                      string_split(T1, 2, T2).apply_tensor(T);
    if (H != T2.pres->gen("t1_2")) return fail("d_1T - d_0T - d_2T = " + format_element(H));
    DKAlgebra T0 = dk_algebra(DKKind::Framed, 0, 0, D);
    if (!string_delete(T1, 1, T0).apply_tensor(T).is_zero()) return fail("t_11 o_1 u is nonzero");
    return {true, "splitting sections, H identity, unit insertion"};
}

// ---------------------------------------------------------------- 7
Outcome kernel_presentations() {
    const int D = 6;
    for (auto [g, n] : {std::pair{0, 3}, {1, 2}}) {
        DKAlgebra A = dk_algebra(DKKind::Genus, g, n, D), B = dk_algebra(DKKind::Genus, g, n - 1, D),
                  C = dk_algebra(DKKind::Genus, g, n - 2, D);
        LieHomomorphism s = string_delete(A, n, B);
        KernelDims ker_k = kernel_dims(s, D);
        KernelDims ker_h = kernel_dims(string_delete(B, n - 1, C).after(s), D);
        std::vector<long long> k = realize(kernel_k_spec(g, n), D)->dims(D);
        std::vector<long long> h = realize(kernel_h_spec(g, n), D)->dims(D);
        for (int d = 1; d <= D; ++d) {
            std::string at = " at (g,n,d) = (" + std::to_string(g) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
            if (ker_k.nullity[d] != ker_k.difference[d] || ker_h.nullity[d] != ker_h.difference[d])
                return fail("split exactness fails" + at);
            if (ker_k.nullity[d] != k[d]) return fail("dim ker s_n != dim k" + at);
            if (ker_h.nullity[d] != h[d]) return fail("dim ker s_{n-1}s_n != dim h" + at);
        }
    }
    return {true, "(0,3) and (1,2) through degree 6"};
}

// ---------------------------------------------------------------- 8
Outcome phi_isomorphism() {
    for (auto [g, n] : {std::pair{0, 2}, {1, 0}}) {
        PhiReport rep = verify_phi(g, n, 4);
        if (!rep.pass) return fail(rep.witness);
        if (verify_phi(g, n, 4, true).pass) return fail("corrupted image table was accepted");
    }
    return {true, "genus 0 (n=2) and genus 1 (n=0), degree 4; corrupted table rejected"};
}

// ---------------------------------------------------------------- 9
Outcome two_sided_rigidity() {
    for (int k : {2, 3}) {
        AlphabetPtr al = gt::testing::letters(k);
        auto basis = solve_two_sided_derivatives(al, 4);
        if (basis.size() != 1) return fail(std::to_string(k) + " letters: dimension " + std::to_string(basis.size()));
        const auto& t = basis[0];
        Rational scale = t[0].coeff({0});
        if (sgn(scale) == 0) return fail("solution does not involve D");
        for (Letter g = 0; g < al->size(); ++g)
            if (t[g] != scale * TensorElement::letter(al, 4, g)) return fail("solution is not a multiple of D");
    }
    return {true, "2 and 3 letters at N = 4"};
}

// ---------------------------------------------------------------- 10
Outcome cocycle_closedness() {
    const int D = 4;
    for (auto [g, n, f] : {std::tuple{0, 2, "adapted"}, {1, 1, "adapted"}, {1, 1, "rot:2"}}) {
        SurfaceContext ctx = SurfaceContext::make(g, n, D);
        FoxPairing rho = make_rho_G(ctx);
        RelativeCocycle z = e_functor(make_q_framing(ctx, Framing::parse(f, n)), rho, D);
        CheckResult r = check_relative_closed(z, D);
        if (!r) return fail(std::string(f) + ": " + r.witness);
        CheckResult j = check_extension_jacobi(make_rho_G(ctx.with_max_degree(6)), 6);
        if (!j) return fail("extension Jacobi: " + j.witness);
    }
    return {true, "grid of criterion 5 at degree 4, extension Jacobi at degree 6"};
}

// ---------------------------------------------------------------- 11
Outcome conjugation() {
    const int D = 4;
    SurfaceContext ctx = SurfaceContext::make(1, 1, D + 2);
    TensorElement x = exp_truncated(ctx.el(ctx.x(1)));
    ConjugationResult r = conjugation_defect(x, make_rho_G(ctx), D);
    if (!r.commutes) return fail("square does not commute at " + r.witness);
    if (!r.rho_h.is_exact()) return fail("rho_h not flagged exact");
    std::vector<Word> W = cyclic_words_up_to_degree(*ctx.alphabet, D);
    LetterBrackets kappa(r.rho_h);
    for (const CyclicElement& e : bracket_sweep(kappa, W, W, ctx.max_degree, true))
        if (!truncate_cyclic(e, D).is_zero()) return fail("bracket of rho_h: " + format_cyclic(truncate_cyclic(e, D)));
    return {true, "x = exp(x1), genus 1"};
}

// ---------------------------------------------------------------- 12
Outcome bernoulli() {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 6);
    BernoulliResult b = bernoulli_phi(ctx, 7);
    std::vector<Rational> B = bernoulli_numbers(8);
    mpz_class fact = 1;
    for (int k = 0; k <= 6; ++k) {
        fact *= (k + 1);
        if (b.coefficients[k] != B[k + 1] / Rational(fact)) return fail("coefficient of w^" + std::to_string(k));
    }
    std::vector<Word> W = cyclic_words_up_to_degree(*ctx.alphabet, 4);
    LetterBrackets kappa(b.pairing);
    for (const CyclicElement& e : bracket_sweep(kappa, W, W, ctx.max_degree, true))
        if (!e.is_zero()) return fail("inner pairing bracket " + format_cyclic(e));
    return {true, "through w^6"};
}

// ---------------------------------------------------------------- 13
std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(GT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli() {
    const std::vector<std::pair<std::string, std::string>> goldens = {
        {"bracket -g 1 -n 1 -N 4 \"x1\" \"y1\"", "bracket.txt"},
        {"verify bialgebra -g 0 -n 2 -N 5 --framing adapted", "verify_bialgebra.txt"},
        {"verify phi -g 0 -n 2 -D 4", "verify_phi.txt"},
    };
    for (const auto& [args, file] : goldens) {
        auto [code, out] = run_cli(args);
        if (code != 0) return fail("gt " + args + " exited with " + std::to_string(code));
        if (out != read_file(std::string(GT_GOLDEN_DIR) + "/" + file)) return fail("gt " + args + " differs from " + file);
    }
    if (run_cli("bracket -g 1 -n 1 \"q1*\" x1").first != 2) return fail("syntax error must exit 2");

    SurfaceContext ctx = SurfaceContext::make(1, 2, 6);
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        TensorElement e = gt::testing::random_element(rng, ctx.alphabet, 6, 6, 1 + i % 7, true);
        if (parse_element(format_element(e), ctx.alphabet, 6) != e) return fail("text round trip: " + format_element(e));
        if (element_from_json(to_json(e), ctx.alphabet) != e) return fail("json round trip: " + format_element(e));
    }
    return {true, "3 goldens, 200 round trips"};
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
        double budget;  // seconds, 0 = unbounded
    };
    const std::vector<Criterion> criteria = {
        {"kappa table reproduction", kappa_reproduction, 1},
        {"exact pairings give zero bracket and cobracket", exactness_vanishing, 60},
        {"bracket and cobracket kill commutators", well_definedness, 0},
        {"mu oracle equivalence", mu_oracle, 0},
        {"Lie bialgebra axioms", bialgebra_suite, 3 * 300},
        {"Drinfeld-Kohno identities", dk_identities, 0},
        {"kernel presentations", kernel_presentations, 0},
        {"phi isomorphism", phi_isomorphism, 600},
        {"two-sided derivative rigidity", two_sided_rigidity, 0},
        {"relative cocycle closedness", cocycle_closedness, 0},
        {"conjugation defect", conjugation, 0},
        {"Bernoulli element", bernoulli, 0},
        {"CLI goldens and round trip", cli, 0},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.pass && criteria[i].budget > 0 && secs > criteria[i].budget)
            o = fail("over the time budget of " + std::to_string(static_cast<int>(criteria[i].budget)) + "s");
        failures += o.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
