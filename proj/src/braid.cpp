#include "gt/braid.hpp"

#include "gt/io.hpp"
#include "gt/surface.hpp"

namespace gt {

std::string t_name(int i, int j) {
    if (i > j) std::swap(i, j);
    return "t" + std::to_string(i) + "_" + std::to_string(j);
}
std::string x_name(int a, int i) { return "x" + std::to_string(a) + "_" + std::to_string(i); }
std::string y_name(int a, int i) { return "y" + std::to_string(a) + "_" + std::to_string(i); }

Rational ft_diagonal_coefficient(int genus) { return Rational(-2 * (genus - 1)); }

PresentationPtr realize(const PresentationSpec& spec, int max_degree, const std::set<std::string>& killed) {
    std::vector<std::string> names;
    std::vector<int> degs;
    for (const auto& g : spec.generators) names.push_back(g.name), degs.push_back(g.degree);
    AlphabetPtr al = make_alphabet(std::move(names), std::move(degs));
    auto P = std::make_shared<GradedPresentation>(spec.name, al, max_degree);
    for (const SymbolicRelation& r : spec.relations) {
        TensorElement e(al, max_degree);
        bool applicable = true;
        for (const RelTerm& t : r.terms) {
            bool present = al->find(t.a) >= 0 && (t.b.empty() || al->find(t.b) >= 0);
            if (!present) {
                bool dead = killed.count(t.a) || (!t.b.empty() && killed.count(t.b));
                if (dead) continue;
                applicable = false;
                break;
            }
            TensorElement ga = P->gen(t.a);
            e += t.coeff * (t.b.empty() ? ga : lie_bracket(ga, P->gen(t.b)));
        }
        if (!applicable || e.is_zero()) continue;
        P->add_relation(e, r.label);
    }
    for (const std::string& c : spec.central)
        if (al->find(c) >= 0) P->add_central(c);
    return P;
}

namespace {

SymbolicRelation bracket_rel(std::vector<RelTerm> terms, std::string label) { return {std::move(terms), std::move(label)}; }

std::string strands_label(const std::string& tag, std::initializer_list<int> idx) {
    std::string s = tag + "(";
    bool first = true;
    for (int i : idx) {
        s += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return s + ")";
}

void add_framed_relations(PresentationSpec& s, int n, bool framed) {
    std::vector<std::pair<int, int>> ts;
    for (int i = 1; i <= n; ++i)
        for (int j = framed ? i : i + 1; j <= n; ++j) ts.emplace_back(i, j);
    // FL: disjoint index sets commute
    for (std::size_t u = 0; u < ts.size(); ++u)
        for (std::size_t v = u + 1; v < ts.size(); ++v) {
            auto [i, j] = ts[u];
            auto [k, l] = ts[v];
            if (i == k || i == l || j == k || j == l) continue;
            s.relations.push_back(bracket_rel({{1, t_name(i, j), t_name(k, l)}}, strands_label("FL", {i, j, k, l})));
        }
    // F4T: [t_ij, t_ik + t_jk] = 0 for k outside {i, j}
    for (auto [i, j] : ts)
        for (int k = 1; k <= n; ++k) {
            if (k == i || k == j) continue;
            s.relations.push_back(bracket_rel({{1, t_name(i, j), t_name(i, k)}, {1, t_name(i, j), t_name(j, k)}},
                                              strands_label("F4T", {i, j, k})));
        }
}

void add_genus_relations(PresentationSpec& s, int g, int n) {
    const Rational diag = ft_diagonal_coefficient(g);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int a = 1; a <= g; ++a)
                for (int b = 1; b <= g; ++b) {
                    std::vector<RelTerm> terms{{1, x_name(a, i), y_name(b, j)}};
                    if (a == b) terms.push_back({-1, t_name(i, j), ""});
                    s.relations.push_back(bracket_rel(std::move(terms), strands_label("S", {a, b, i, j})));
                    if (i < j) {
                        s.relations.push_back(bracket_rel({{1, x_name(a, i), x_name(b, j)}}, strands_label("N", {a, b, i, j})));
                        s.relations.push_back(bracket_rel({{1, y_name(a, i), y_name(b, j)}}, strands_label("N", {a, b, i, j})));
                    }
                }
        }
    for (int i = 1; i <= n; ++i) {
        std::vector<RelTerm> terms;
        for (int a = 1; a <= g; ++a) terms.push_back({1, x_name(a, i), y_name(a, i)});
        for (int j = 1; j <= n; ++j)
            if (j != i) terms.push_back({1, t_name(i, j), ""});
        if (sgn(diag) != 0) terms.push_back({diag, t_name(i, i), ""});
        if (!terms.empty()) s.relations.push_back(bracket_rel(std::move(terms), strands_label("FT", {i})));
    }
    for (int a = 1; a <= g; ++a)
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                for (int k = 1; k <= n; ++k) {
                    if (k == i || k == j) continue;
                    s.relations.push_back(bracket_rel({{1, x_name(a, k), t_name(i, j)}}, strands_label("FLx", {a, k, i, j})));
                    s.relations.push_back(bracket_rel({{1, y_name(a, k), t_name(i, j)}}, strands_label("FLy", {a, k, i, j})));
                }
                s.relations.push_back(bracket_rel({{1, x_name(a, i), t_name(i, j)}, {1, x_name(a, j), t_name(i, j)}},
                                                  strands_label("F4Tx", {a, i, j})));
                s.relations.push_back(bracket_rel({{1, y_name(a, i), t_name(i, j)}, {1, y_name(a, j), t_name(i, j)}},
                                                  strands_label("F4Ty", {a, i, j})));
            }
}

PresentationSpec dk_spec(DKKind kind, int g, int n) {
    PresentationSpec s;
    const bool framed = kind != DKKind::Unframed;
    if (kind == DKKind::Unframed) s.name = "t_" + std::to_string(n);
    else if (kind == DKKind::Framed) s.name = "t^f_" + std::to_string(n);
    else s.name = "t^f_{" + std::to_string(g) + "," + std::to_string(n) + "}";
    if (kind == DKKind::Genus)
        for (int i = 1; i <= n; ++i)
            for (int a = 1; a <= g; ++a) {
                s.generators.push_back({x_name(a, i), 1});
                s.generators.push_back({y_name(a, i), 1});
            }
    for (int i = 1; i <= n; ++i)
        for (int j = framed ? i : i + 1; j <= n; ++j) s.generators.push_back({t_name(i, j), 2});
    add_framed_relations(s, n, framed);
    if (kind == DKKind::Genus) add_genus_relations(s, g, n);
    return s;
}

void require_kind(const DKAlgebra& src, const DKAlgebra& target, int strands) {
    if (src.kind != target.kind || src.genus != target.genus)
        throw ContextMismatch("composition between different kinds of braid algebras");
    if (target.strands != strands)
        throw IndexOutOfRange("target has " + std::to_string(target.strands) + " strands, expected " +
                              std::to_string(strands));
}

// images of src generators under a strand relabelling with strand k replaced by block J
LieHomomorphism strand_map(const DKAlgebra& src, const DKAlgebra& target, const std::function<int(int)>& sigma, int k,
                           const std::vector<int>& J, const std::string& name) {
    const GradedPresentation& T = *target.pres;
    const AlphabetPtr& al = src.pres->alphabet();
    TensorElement zero(T.alphabet(), T.max_degree());
    std::vector<TensorElement> ims;
    for (Letter l = 0; l < al->size(); ++l) {
        const std::string& nm = al->name(l);
        TensorElement im = zero;
        if (nm[0] == 't') {
            auto us = nm.find('_');
            int i = std::stoi(nm.substr(1, us - 1)), j = std::stoi(nm.substr(us + 1));
            if (i != k && j != k) {
                im = T.gen(t_name(sigma(i), sigma(j)));
            } else if (i != j) {
                int other = sigma(i == k ? j : i);
                for (int p : J) im += T.gen(t_name(p, other));
            } else {
                for (std::size_t u = 0; u < J.size(); ++u)
                    for (std::size_t v = u; v < J.size(); ++v) im += T.gen(t_name(J[u], J[v]));
            }
        } else {
            auto us = nm.find('_');
            int a = std::stoi(nm.substr(1, us - 1)), i = std::stoi(nm.substr(us + 1));
            auto nm_of = [&](int strand) { return nm[0] == 'x' ? x_name(a, strand) : y_name(a, strand); };
            if (i != k) im = T.gen(nm_of(sigma(i)));
            else
                for (int p : J) im += T.gen(nm_of(p));
        }
        ims.push_back(std::move(im));
    }
    return LieHomomorphism(src.pres, target.pres, std::move(ims), name);
}

}  // namespace

DKAlgebra dk_algebra(DKKind kind, int genus, int strands, int max_degree) {
    if (strands < 0 || genus < 0) throw IndexOutOfRange("negative strand count or genus");
    DKAlgebra A;
    A.kind = kind;
    A.genus = kind == DKKind::Genus ? genus : 0;
    A.strands = strands;
    A.spec = dk_spec(kind, A.genus, strands);
    A.pres = realize(A.spec, max_degree);
    return A;
}

LieHomomorphism dk_compose(const DKAlgebra& src, int k, int m, const DKAlgebra& target) {
    const int n = src.strands;
    if (k < 1 || k > n) throw IndexOutOfRange("composition index " + std::to_string(k) + " outside 1.." + std::to_string(n));
    if (m < 0) throw IndexOutOfRange("negative block size");
    require_kind(src, target, n + m - 1);
    std::vector<int> J;
    for (int p = 0; p < m; ++p) J.push_back(k + p);
    auto sigma = [&](int i) { return i < k ? i : i + m - 1; };
    return strand_map(src, target, sigma, k, J, "o_" + std::to_string(k));
}

LieHomomorphism dk_insert(const DKAlgebra& inserted, int k, const DKAlgebra& target) {
    if (inserted.kind == DKKind::Genus) throw ContextMismatch("only t_m or t_m^f can be inserted");
    if (k < 1 || k + inserted.strands - 1 > target.strands) throw IndexOutOfRange("insertion block out of range");
    auto sigma = [&](int p) { return k + p - 1; };
    return strand_map(inserted, target, sigma, 0, {}, "insert_" + std::to_string(k));
}

LieHomomorphism string_split(const DKAlgebra& src, int k, const DKAlgebra& target) {
    const int n = src.strands;
    if (k < 0 || k > n + 1) throw IndexOutOfRange("split index " + std::to_string(k) + " outside 0.." + std::to_string(n + 1));
    if (k >= 1 && k <= n) {
        LieHomomorphism h = dk_compose(src, k, 2, target);
        return LieHomomorphism(h.source(), h.target(), h.images(), "d_" + std::to_string(k));
    }
    require_kind(src, target, n + 1);
    const int shift = k == 0 ? 1 : 0;
    return strand_map(src, target, [&](int i) { return i + shift; }, 0, {}, "d_" + std::to_string(k));
}

LieHomomorphism string_delete(const DKAlgebra& src, int k, const DKAlgebra& target) {
    LieHomomorphism h = dk_compose(src, k, 0, target);
    return LieHomomorphism(h.source(), h.target(), h.images(), "s_" + std::to_string(k));
}

PresentationSpec kernel_k_spec(int g, int n) {
    PresentationSpec s;
    s.name = "k_{" + std::to_string(g) + "," + std::to_string(n) + "}";
    for (int a = 1; a <= g; ++a) {
        s.generators.push_back({x_name(a, n), 1});
        s.generators.push_back({y_name(a, n), 1});
    }
    for (int i = 1; i <= n; ++i) s.generators.push_back({t_name(i, n), 2});
    std::vector<RelTerm> ft;
    for (int a = 1; a <= g; ++a) ft.push_back({1, x_name(a, n), y_name(a, n)});
    for (int j = 1; j < n; ++j) ft.push_back({1, t_name(j, n), ""});
    const Rational diag = ft_diagonal_coefficient(g);
    if (sgn(diag) != 0) ft.push_back({diag, t_name(n, n), ""});
    s.relations.push_back({ft, "FT(" + std::to_string(n) + ")"});
    s.central.push_back(t_name(n, n));
    return s;
}

PresentationSpec kernel_h_spec(int g, int n, DKKind kind) {
    if (n < 2) throw IndexOutOfRange("h_{g,n} needs n >= 2");
    PresentationSpec full = dk_spec(kind, g, n);
    PresentationSpec s;
    s.name = "h_{" + std::to_string(g) + "," + std::to_string(n) + "}";
    if (kind == DKKind::Genus)
        for (int i : {n - 1, n})
            for (int a = 1; a <= g; ++a) {
                s.generators.push_back({x_name(a, i), 1});
                s.generators.push_back({y_name(a, i), 1});
            }
    for (int i = 1; i <= n; ++i) s.generators.push_back({t_name(i, n - 1), 2});
    for (int i = 1; i <= n - 2; ++i) s.generators.push_back({t_name(i, n), 2});
    s.generators.push_back({t_name(n, n), 2});
    s.relations = full.relations;
    return s;
}

std::vector<long long> extension_dimensions(const Alphabet& alpha, int dmax) {
    std::vector<long long> lie = free_lie_dimensions(alpha, dmax);
    std::vector<long long> out(static_cast<std::size_t>(dmax + 1), 0);
    for (int d = 1; d <= dmax; ++d)
        out[d] = 2 * lie[d] + (d >= 2 ? static_cast<long long>(words_of_degree(alpha, d - 2).size()) : 0);
    return out;
}

PhiSetup phi_setup(int genus, int n, int N) {
    PhiSetup S;
    SurfaceContext ctx = SurfaceContext::make(genus, n, N);
    S.target_alphabet = ctx.alphabet;
    TensorElement zero(ctx.alphabet, N);
    auto left = [&](TensorElement a) { return ExtensionElement{std::move(a), zero, zero}; };
    auto right = [&](TensorElement a) { return ExtensionElement{zero, std::move(a), zero}; };
    std::map<std::string, ExtensionElement> table;

    PresentationSpec h;
    int P, R;
    std::set<std::string> killed;
    if (genus >= 1) {
        P = n + 2, R = n + 3;
        h = kernel_h_spec(genus, n + 3, DKKind::Genus);
        TensorElement sympl(ctx.alphabet, N), zs(ctx.alphabet, N);
        for (int a = 1; a <= genus; ++a) {
            table[x_name(a, P)] = left(ctx.el(ctx.x(a)));
            table[y_name(a, P)] = left(ctx.el(ctx.y(a)));
            table[x_name(a, R)] = right(ctx.el(ctx.x(a)));
            table[y_name(a, R)] = right(ctx.el(ctx.y(a)));
            sympl += lie_bracket(ctx.el(ctx.x(a)), ctx.el(ctx.y(a)));
        }
        for (int j = 2; j <= n + 1; ++j) {
            table[t_name(j, P)] = left(ctx.el(ctx.z(j - 1)));
            table[t_name(j, R)] = right(ctx.el(ctx.z(j - 1)));
            zs += ctx.el(ctx.z(j - 1));
        }
        table[t_name(1, P)] = ExtensionElement{-sympl - zs, zero, -ctx.one()};
        table[t_name(1, R)] = ExtensionElement{zero, -sympl - zs, -ctx.one()};
    } else {
        P = n + 1, R = n + 2;
        h = kernel_h_spec(0, n + 2, DKKind::Framed);
        for (int j = 1; j <= n; ++j) {
            table[t_name(j, P)] = left(ctx.el(ctx.z(j)));
            table[t_name(j, R)] = right(ctx.el(ctx.z(j)));
        }
    }
    table[t_name(P, R)] = ExtensionElement{zero, zero, ctx.one()};
    killed = {t_name(P, P), t_name(R, R)};
    std::erase_if(h.generators, [&](const GeneratorSpec& g) { return killed.count(g.name) != 0; });
    h.name = genus >= 1 ? "g_{" + std::to_string(genus) + "," + std::to_string(n) + "}"
                        : "e_{" + std::to_string(n) + "}";
    PresentationPtr base = realize(h, N, killed);
    S.central_name = t_name(P, R);
    S.source = quotient_by_derived_ideal(*base, S.central_name, N, h.name);
    for (Letter l = 0; l < S.source->alphabet()->size(); ++l) S.images.push_back(table.at(S.source->alphabet()->name(l)));
    return S;
}

namespace {

void add_scaled(ExtensionElement& acc, const ExtensionElement& v, const Rational& c) {
    acc.left += c * v.left;
    acc.right += c * v.right;
    acc.tail += c * v.tail;
}

RatRow flatten(const ExtensionElement& e, std::map<std::pair<int, Word>, int>& columns) {
    std::map<int, Rational> m;
    int slot = 0;
    for (const TensorElement* part : {&e.left, &e.right, &e.tail}) {
        for (const auto& [w, c] : part->terms()) {
            auto key = std::make_pair(slot, w);
            auto it = columns.try_emplace(key, static_cast<int>(columns.size())).first;
            m[it->second] += c;
        }
        ++slot;
    }
    RatRow row;
    for (auto& [k, v] : m)
        if (sgn(v) != 0) row.emplace_back(k, v);
    return row;
}

std::string describe(const ExtensionElement& e) {
    return "(" + format_element(e.left) + " (+) " + format_element(e.right) + ", " + format_element(e.tail) + ")";
}

}  // namespace

PhiReport verify_phi(int genus, int n, int D, bool corrupt) {
    PhiReport rep;
    PhiSetup S = phi_setup(genus, n, D);
    if (corrupt) {
        // the first t-generator attached to the left strand
        const std::string victim = t_name(1, genus >= 1 ? n + 2 : n + 1);
        Letter l = S.source->alphabet()->index(victim);
        ExtensionElement& e = S.images[l];
        e = ExtensionElement{2 * e.left, 2 * e.right, 2 * e.tail};
    }
    SurfaceContext ctx = SurfaceContext::make(genus, n, D);
    FoxPairing rho = make_rho_G(ctx);
    auto c = [&](const PairElement& v, const PairElement& w) { return c_rho(rho, v, w); };
    std::map<Word, ExtensionElement> memo;
    auto phi = [&](const Word& w) {
        return evaluate_lyndon<ExtensionElement>(
            w, [&](Letter l) { return S.images[l]; },
            [&](const ExtensionElement& a, const ExtensionElement& b) { return extension_bracket(c, a, b); }, memo);
    };
    auto phi_coords = [&](const LieCoords& coords) {
        TensorElement zero(ctx.alphabet, D);
        ExtensionElement acc{zero, zero, zero};
        for (const auto& [w, k] : coords) add_scaled(acc, phi(w), k);
        return acc;
    };

    bool ok = true;
    for (const Relation& r : S.source->relations()) {
        if (r.degree > D) continue;
        ExtensionElement im = phi_coords(r.coords);
        if (!im.is_zero()) {
            ok = false;
            rep.witness = "relation " + r.label + " maps to " + describe(im);
            break;
        }
    }
    std::vector<long long> target = extension_dimensions(*ctx.alphabet, D);
    rep.source_dims.assign(D + 1, 0);
    rep.target_dims = target;
    rep.ranks.assign(D + 1, 0);
    for (int d = 1; d <= D; ++d) {
        const DegreeComponent& comp = S.source->component(d);
        std::map<std::pair<int, Word>, int> columns;
        std::vector<RatRow> rows;
        for (int q : comp.quotient_basis) rows.push_back(flatten(phi(comp.lyndon[q]), columns));
        rep.source_dims[d] = static_cast<long long>(comp.quotient_dim());
        rep.ranks[d] = static_cast<long long>(rank_of(rows, static_cast<int>(columns.size())));
        if (ok && (rep.ranks[d] != rep.source_dims[d] || rep.ranks[d] != target[d])) {
            ok = false;
            rep.witness = "degree " + std::to_string(d) + ": source dim " + std::to_string(rep.source_dims[d]) +
                          ", rank " + std::to_string(rep.ranks[d]) + ", target dim " + std::to_string(target[d]);
        }
    }
    rep.pass = ok;
    return rep;
}

}  // namespace gt
