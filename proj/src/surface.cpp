#include "gt/surface.hpp"

#include "gt/io.hpp"
#include "gt/sweep.hpp"

#include <set>
#include <sstream>

namespace gt {

Framing Framing::parse(const std::string& text, int boundaries) {
    if (text == "adapted") return adapted(boundaries);
    if (text.rfind("rot:", 0) != 0) throw std::invalid_argument("framing must be 'adapted' or 'rot:r1,r2,...'");
    std::string body = text.substr(4);
    std::string cleaned;
    for (char c : body)
        if (c != '(' && c != ')' && c != ' ') cleaned += c;
    Framing f;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad rotation number '" + item + "'");
        f.rot.push_back(v);
    }
    if (static_cast<int>(f.rot.size()) != boundaries)
        throw std::invalid_argument("framing needs " + std::to_string(boundaries) + " rotation numbers");
    return f;
}

std::string Framing::describe() const {
    bool adapted_all = true;
    for (int r : rot) adapted_all = adapted_all && r == -1;
    if (adapted_all) return "adapted";
    std::string s = "rot:";
    for (std::size_t i = 0; i < rot.size(); ++i) s += (i ? "," : "") + std::to_string(rot[i]);
    return s;
}

AlphabetPtr surface_alphabet(int genus, int boundaries) {
    if (genus < 0 || boundaries < 0) throw std::invalid_argument("genus and boundary count must be non-negative");
    std::vector<std::string> names;
    std::vector<int> degs;
    for (int i = 1; i <= genus; ++i) names.push_back("x" + std::to_string(i)), degs.push_back(1);
    for (int i = 1; i <= genus; ++i) names.push_back("y" + std::to_string(i)), degs.push_back(1);
    for (int j = 1; j <= boundaries; ++j) names.push_back("z" + std::to_string(j)), degs.push_back(2);
    return make_alphabet(std::move(names), std::move(degs));
}

SurfaceContext SurfaceContext::make(int genus, int boundaries, int max_degree) {
    SurfaceContext c;
    c.genus = genus;
    c.boundaries = boundaries;
    c.max_degree = max_degree;
    c.alphabet = surface_alphabet(genus, boundaries);
    return c;
}

TensorElement SurfaceContext::omega() const {
    TensorElement w(alphabet, max_degree);
    for (int i = 1; i <= genus; ++i) w += lie_bracket(el(x(i)), el(y(i)));
    for (int j = 1; j <= boundaries; ++j) w += el(z(j));
    return w;
}

FoxPairing make_rho_G(const SurfaceContext& ctx) {
    FoxPairing rho = FoxPairing::zero(ctx.alphabet, ctx.max_degree);
    for (int i = 1; i <= ctx.genus; ++i) {
        rho.set(ctx.x(i), ctx.y(i), ctx.one());
        rho.set(ctx.y(i), ctx.x(i), -ctx.one());
    }
    for (int j = 1; j <= ctx.boundaries; ++j) rho.set(ctx.z(j), ctx.z(j), -ctx.el(ctx.z(j)));
    return rho;
}

namespace {
FoxPairing negated(const FoxPairing& rho) {
    FoxPairing out(rho.alphabet(), rho.max_degree());
    for (Letter a = 0; a < rho.alphabet()->size(); ++a)
        for (Letter b = 0; b < rho.alphabet()->size(); ++b) out.set(a, b, -rho.value(a, b));
    return out;
}
}  // namespace

QuasiDerivation make_q_framing(const SurfaceContext& ctx, const Framing& fr) {
    if (static_cast<int>(fr.rot.size()) != ctx.boundaries)
        throw std::invalid_argument("framing has the wrong number of rotation numbers");
    QuasiDerivation q(ctx.alphabet, ctx.max_degree, negated(make_rho_G(ctx)));
    for (Letter g = 0; g < ctx.alphabet->size(); ++g) q.set(g, TensorElement(ctx.alphabet, ctx.max_degree));
    for (int j = 1; j <= ctx.boundaries; ++j) q.set(ctx.z(j), fr.r_value(j - 1) * ctx.one());
    return q;
}

LetterPairTable kappa_table(const SurfaceContext& ctx) {
    FoxPairing rho = make_rho_G(ctx);
    LetterPairTable out;
    const std::size_t n = ctx.alphabet->size();
    for (Letter a = 0; a < n; ++a)
        for (Letter b = 0; b < n; ++b) {
            TensorSquare v = double_bracket(rho, ctx.el(a), ctx.el(b));
            if (!v.is_zero()) out.emplace(std::make_pair(a, b), std::move(v));
        }
    return out;
}

LetterPairTable kappa_reference(const SurfaceContext& ctx) {
    LetterPairTable out;
    const AlphabetPtr& al = ctx.alphabet;
    const int N = ctx.max_degree;
    for (int i = 1; i <= ctx.genus; ++i) {
        TensorSquare p(al, N), m(al, N);
        p.add({}, {}, 1);
        m.add({}, {}, -1);
        out.emplace(std::make_pair(ctx.x(i), ctx.y(i)), p);
        out.emplace(std::make_pair(ctx.y(i), ctx.x(i)), m);
    }
    for (int j = 1; j <= ctx.boundaries; ++j) {
        TensorSquare t(al, N);
        t.add({ctx.z(j)}, {}, 1);
        t.add({}, {ctx.z(j)}, -1);
        out.emplace(std::make_pair(ctx.z(j), ctx.z(j)), t);
    }
    return out;
}

TensorSquare project_left_cyclic(const TensorSquare& a) {
    TensorSquare out(a.alphabet(), a.max_degree());
    for (const auto& [k, c] : a.terms()) out.add(canonical_rotation(k.first), k.second, c);
    return out;
}

TensorSquare mu_r_oracle(const SurfaceContext& ctx, const Framing& fr, const Word& a) {
    const AlphabetPtr& al = ctx.alphabet;
    const int N = ctx.max_degree;
    auto r_of = [&](Letter l) -> Rational {
        const std::string& name = al->name(l);
        if (name[0] == 'z') return fr.r_value(std::stoi(name.substr(1)) - 1);
        return 0;
    };
    LetterPairTable kappa = kappa_reference(ctx);
    TensorSquare out(al, N);
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) {
        Rational r = r_of(a[i]);
        if (sgn(r) != 0) out.add({}, concat(slice(a, 0, i), slice(a, i + 1, m)), r);
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < k; ++j) {
            auto it = kappa.find({a[j], a[k]});
            if (it == kappa.end()) continue;
            Word between = slice(a, j + 1, k), before = slice(a, 0, j), after = slice(a, k + 1, m);
            for (const auto& [key, c] : it->second.terms())
                out.add(canonical_rotation(concat(key.first, between)), concat(concat(before, key.second), after), c);
        }
    return out;
}

// ---------------------------------------------------------------- bialgebra verification

namespace {

using Triple = std::array<Word, 3>;

void add_to(std::map<Triple, Rational>& m, const Triple& t, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, ins] = m.try_emplace(t, c);
    if (!ins) {
        it->second += c;
        if (sgn(it->second) == 0) m.erase(it);
    }
}

}  // namespace

BialgebraReport verify_bialgebra(const FoxPairing& rho, const QuasiDerivation& q, int degree, bool parallel) {
    const AlphabetPtr& al = rho.alphabet();
    const int N = rho.max_degree();
    const Alphabet& A = *al;
    BialgebraReport report;
    auto entry = [&](const std::string& name, const std::string& witness) {
        report.checks.push_back({name, witness.empty(), degree, witness});
    };

    const std::vector<Word> W = cyclic_words_up_to_degree(A, degree);
    std::map<Word, std::size_t> windex;
    for (std::size_t i = 0; i < W.size(); ++i) windex.emplace(W[i], i);
    const std::size_t n = W.size();

    LetterBrackets kappa(rho);
    std::vector<CyclicElement> B = bracket_sweep(kappa, W, W, N, parallel);
    auto br = [&](std::size_t i, std::size_t j) -> const CyclicElement& { return B[i * n + j]; };

    // antisymmetry
    {
        std::string witness;
        for (std::size_t i = 0; i < n && witness.empty(); ++i)
            for (std::size_t j = i; j < n; ++j)
                if (!(br(i, j) + br(j, i)).is_zero()) {
                    witness = "[" + format_word(A, W[i]) + ", " + format_word(A, W[j]) + "] + reverse != 0";
                    break;
                }
        entry("antisymmetry", witness);
    }

    // second-level brackets for Jacobi
    std::vector<Word> U;
    {
        std::set<Word> seen;
        for (const auto& e : B)
            for (const auto& [w, c] : e.terms()) seen.insert(w);
        U.assign(seen.begin(), seen.end());
    }
    std::map<Word, std::size_t> uindex;
    for (std::size_t i = 0; i < U.size(); ++i) uindex.emplace(U[i], i);
    std::vector<CyclicElement> T = bracket_sweep(kappa, U, W, N, parallel);
    auto bracket_with = [&](const CyclicElement& x, std::size_t k) {
        CyclicElement r(al, N);
        for (const auto& [w, c] : x.terms()) {
            CyclicElement t = T[uindex.at(w) * n + k];
            t *= c;
            r += t;
        }
        return r;
    };
    {
        std::vector<std::string> fails(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long li = 0; li < static_cast<long>(n); ++li) {
            std::size_t i = static_cast<std::size_t>(li);
            for (std::size_t j = i + 1; j < n && fails[i].empty(); ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    CyclicElement s = bracket_with(br(i, j), k) + bracket_with(br(j, k), i) + bracket_with(br(k, i), j);
                    if (!s.is_zero()) {
                        fails[i] = "Jacobi on (" + format_word(A, W[i]) + ", " + format_word(A, W[j]) + ", " +
                                   format_word(A, W[k]) + ") = " + format_cyclic(s);
                        break;
                    }
                }
        }
        std::string witness;
        for (const auto& f : fails)
            if (!f.empty()) {
                witness = f;
                break;
            }
        entry("jacobi", witness);
    }

    // cobrackets on W and on everything the brackets produce
    Cobracket delta(q);
    std::vector<Word> CW = W;
    for (const Word& u : U)
        if (!windex.count(u)) CW.push_back(u);
    std::vector<CyclicSquare> Dv = cobracket_sweep(delta, CW, parallel);
    std::map<Word, const CyclicSquare*> dmap;
    for (std::size_t i = 0; i < CW.size(); ++i) dmap.emplace(CW[i], &Dv[i]);
    std::map<Word, CyclicSquare> extra;
    auto cob = [&](const Word& w) -> const CyclicSquare& {
        if (auto it = dmap.find(w); it != dmap.end()) return *it->second;
        auto it = extra.find(w);
        if (it == extra.end()) it = extra.emplace(w, w.empty() ? CyclicSquare(al, N) : delta.on_word(w)).first;
        return it->second;
    };

    {
        std::string witness;
        for (std::size_t i = 0; i < n; ++i) {
            const CyclicSquare& d = cob(W[i]);
            if (!(d + d.swapped()).is_zero()) {
                witness = "delta(|" + format_word(A, W[i]) + "|) is not antisymmetric: " + format_cyclic_square(d);
                break;
            }
        }
        entry("co-antisymmetry", witness);
    }

    {
        std::string witness;
        for (std::size_t i = 0; i < n && witness.empty(); ++i) {
            std::map<Triple, Rational> t;
            for (const auto& [k, c] : cob(W[i]).terms())
                for (const auto& [k2, c2] : cob(k.first).terms()) add_to(t, {k2.first, k2.second, k.second}, c * c2);
            std::map<Triple, Rational> s;
            for (const auto& [k, c] : t) {
                add_to(s, k, c);
                add_to(s, {k[1], k[2], k[0]}, c);
                add_to(s, {k[2], k[0], k[1]}, c);
            }
            if (!s.empty()) witness = "co-Jacobi fails on |" + format_word(A, W[i]) + "|";
        }
        entry("co-jacobi", witness);
    }

    // delta[a,b] = a.delta(b) - b.delta(a)
    auto bracket_words = [&](std::size_t i, const Word& u) -> CyclicElement {
        if (u.empty()) return CyclicElement(al, N);
        if (auto it = windex.find(u); it != windex.end()) return br(i, it->second);
        CyclicElement r(al, N);
        kappa.cyclic_on_words(W[i], u, 1, r);
        return r;
    };
    auto act = [&](std::size_t i, const CyclicSquare& d) {
        CyclicSquare r(al, N);
        for (const auto& [k, c] : d.terms()) {
            for (const auto& [w, cw] : bracket_words(i, k.first).terms()) r.add_canonical(w, k.second, c * cw);
            for (const auto& [w, cw] : bracket_words(i, k.second).terms()) r.add_canonical(k.first, w, c * cw);
        }
        return r;
    };
    {
        // warm the lazy cache serially so the parallel loop only reads
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [k, c] : cob(W[i]).terms()) {
                (void)cob(k.first);
                (void)cob(k.second);
            }
        std::vector<std::string> fails(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long li = 0; li < static_cast<long>(n); ++li) {
            std::size_t i = static_cast<std::size_t>(li);
            for (std::size_t j = i + 1; j < n; ++j) {
                CyclicSquare lhs(al, N);
                for (const auto& [w, c] : br(i, j).terms()) {
                    CyclicSquare d = *dmap.at(w);
                    d *= c;
                    lhs += d;
                }
                CyclicSquare rhs = act(i, *dmap.at(W[j])) - act(j, *dmap.at(W[i]));
                if (lhs != rhs) {
                    fails[i] = "compatibility fails on (" + format_word(A, W[i]) + ", " + format_word(A, W[j]) + ")";
                    break;
                }
            }
        }
        std::string witness;
        for (const auto& f : fails)
            if (!f.empty()) {
                witness = f;
                break;
            }
        entry("compatibility", witness);
    }
    return report;
}

BialgebraReport verify_bialgebra(const SurfaceContext& ctx, const Framing& fr, int degree, bool parallel) {
    SurfaceContext big = ctx.with_max_degree(std::max(ctx.max_degree, 3 * degree));
    return verify_bialgebra(make_rho_G(big), make_q_framing(big, fr), degree, parallel);
}

// ---------------------------------------------------------------- Bernoulli

std::vector<Rational> bernoulli_numbers(int n) {
    std::vector<Rational> B(static_cast<std::size_t>(n + 1), 0);
    B[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational s = 0;
        mpz_class binom = 1;  // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
            s += Rational(binom) * B[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        B[m] = -s / Rational(binom);
    }
    return B;
}

BernoulliResult bernoulli_phi(const SurfaceContext& ctx, int terms) {
    // f(t) = (e^t - 1)/t = sum t^k/(k+1)!, g = 1/f = sum B_k t^k / k!
    const int K = terms + 1;
    std::vector<Rational> f(static_cast<std::size_t>(K + 1)), g(static_cast<std::size_t>(K + 1), 0);
    mpz_class fact = 1;
    for (int k = 0; k <= K; ++k) {
        fact *= (k + 1);
        f[k] = Rational(1) / Rational(fact);
    }
    g[0] = 1;
    for (int k = 1; k <= K; ++k) {
        Rational s = 0;
        for (int i = 1; i <= k; ++i) s += f[i] * g[k - i];
        g[k] = -s;
    }
    BernoulliResult res;
    for (int m = 0; m < terms; ++m) res.coefficients.push_back(g[m + 1]);
    TensorElement w = ctx.omega();
    TensorElement pw = ctx.one();
    res.phi = TensorElement(ctx.alphabet, ctx.max_degree);
    for (int m = 0; m < terms; ++m) {
        res.phi += res.coefficients[m] * pw;
        pw = product(pw, w);
    }
    res.pairing = make_inner_pairing(res.phi);
    return res;
}

// ---------------------------------------------------------------- conjugation

CyclicElement truncate_cyclic(const CyclicElement& a, int degree) {
    CyclicElement r(a.alphabet(), a.max_degree());
    for (const auto& [w, c] : a.terms())
        if (a.alphabet()->degree(w) <= degree) r.add_canonical(w, c);
    return r;
}

namespace {

void require_group_like(const TensorElement& x) {
    if (counit(x) != 1 || !is_group_like(x)) throw NotGroupLike("conjugating element must be group-like");
}

TensorElement conj(const TensorElement& xi, const TensorElement& x, const TensorElement& a) {
    return product(product(xi, a), x);
}

}  // namespace

ConjugationResult conjugation_defect(const TensorElement& x, const FoxPairing& rho, int degree) {
    require_group_like(x);
    const AlphabetPtr& al = x.alphabet();
    const int N = x.max_degree();
    const TensorElement xi = inverse_unipotent(x);
    const TensorElement e = rho.eval(x, xi);

    FoxDerivative left(Side::Left, al, N), right(Side::Right, al, N);
    for (Letter g = 0; g < al->size(); ++g) {
        TensorElement gl = TensorElement::letter(al, N, g);
        left.set(g, rho.eval(gl, xi));
        right.set(g, rho.eval(x, gl));
    }
    FoxPairing tau = make_exact_pairing(left, right);
    FoxPairing inner = make_inner_pairing(e);
    ConjugationResult res;
    res.rho_h = FoxPairing(al, N);
    for (Letter a = 0; a < al->size(); ++a)
        for (Letter b = 0; b < al->size(); ++b) res.rho_h.set(a, b, tau.value(a, b) + inner.value(a, b));
    res.rho_h.mark_exact();

    std::vector<Word> words;
    for (const Word& w : words_up_to_degree(*al, degree))
        if (!w.empty()) words.push_back(w);
    std::vector<TensorElement> hw;
    for (const Word& w : words) hw.push_back(conj(xi, x, TensorElement::word(al, N, w)));
    res.commutes = true;
    for (std::size_t i = 0; i < words.size() && res.commutes; ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (al->degree(words[i]) + al->degree(words[j]) > degree + 2) continue;
            TensorElement a = TensorElement::word(al, N, words[i]), b = TensorElement::word(al, N, words[j]);
            TensorElement lhs = rho.eval(hw[i], hw[j]);
            TensorElement rhs = conj(xi, x, rho.eval(a, b) + res.rho_h.eval(a, b));
            if (lhs.truncated(degree) != rhs.truncated(degree)) {
                res.commutes = false;
                res.witness = "(" + format_word(*al, words[i]) + ", " + format_word(*al, words[j]) + ")";
                break;
            }
        }
    return res;
}

ConjugationMorphism conjugation_morphism(const TensorElement& x, const QuasiDerivation& q, const FoxPairing& rho) {
    require_group_like(x);
    const AlphabetPtr& al = x.alphabet();
    const int N = x.max_degree();
    const TensorElement xi = inverse_unipotent(x);
    std::vector<TensorElement> ims;
    for (Letter g = 0; g < al->size(); ++g) ims.push_back(conj(xi, x, TensorElement::letter(al, N, g)));
    AlgebraMap h(ims);
    const TensorElement Q = product(q.eval(x), xi);  // q(x) x^-1
    const TensorElement P = product(x, q.eval(xi));  // x q(x^-1)
    ConjugationMorphism m{h, FoxDerivative(Side::Left, al, N), FoxDerivative(Side::Right, al, N)};
    for (Letter g = 0; g < al->size(); ++g) {
        TensorElement gl = TensorElement::letter(al, N, g);
        m.left.set(g, h.apply(product(gl, Q) - rho.eval(gl, xi)));
        m.right.set(g, h.apply(product(P, gl) - rho.eval(x, gl)));
    }
    m.left.set_twist(h);
    m.right.set_twist(h);
    return m;
}

}  // namespace gt
