#include "gt/cocycles.hpp"

#include "gt/io.hpp"
#include "gt/lie.hpp"

namespace gt {

PairElement pair_bracket(const PairElement& u, const PairElement& v) {
    return {lie_bracket(u.left, v.left), lie_bracket(u.right, v.right)};
}

TensorElement pair_action(const PairElement& u, const TensorElement& a) {
    return product(u.left, a) - product(a, u.right);
}

TensorElement c_rho(const FoxPairing& rho, const PairElement& v, const PairElement& w) {
    return rho.eval(v.left, w.right) - rho.eval(w.left, v.right);
}

RelativeCocycle e_functor(const QuasiDerivation& q, const FoxPairing& rho, int probe_degree) {
    const AlphabetPtr& alpha = q.alphabet();
    const int N = q.max_degree();
    auto words = words_up_to_degree(*alpha, probe_degree);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (alpha->degree(u) + alpha->degree(v) > probe_degree) continue;
            TensorElement a = TensorElement::word(alpha, N, u), b = TensorElement::word(alpha, N, v);
            TensorElement lhs = q.eval(product(a, b));
            TensorElement rhs = product(q.eval(a), b) + product(a, q.eval(b)) + rho.eval(a, b);
            if (lhs != rhs)
                throw IncompatiblePair("q is not a quasi-derivation for -rho at (" + format_word(*alpha, u) + ", " +
                                       format_word(*alpha, v) + ")");
        }
    RelativeCocycle z;
    z.alphabet = alpha;
    z.max_degree = N;
    z.omega = [q](const TensorElement& x) { return q.eval(x); };
    z.c = [rho](const PairElement& v, const PairElement& w) { return c_rho(rho, v, w); };
    return z;
}

namespace {

struct Basis {
    std::vector<TensorElement> elements;
    std::vector<int> degrees;
    std::vector<std::string> names;
};

Basis lie_basis(const AlphabetPtr& alpha, int N, int degree) {
    Basis b;
    LyndonExpander ex(alpha, N);
    for (int d = 1; d <= degree; ++d)
        for (const Word& w : lyndon_words(*alpha, d)) {
            b.elements.push_back(ex.expand(w));
            b.degrees.push_back(d);
            b.names.push_back("P(" + format_word(*alpha, w) + ")");
        }
    return b;
}

}  // namespace

CheckResult check_relative_closed(const RelativeCocycle& z, int degree) {
    const AlphabetPtr& alpha = z.alphabet;
    const int N = z.max_degree;
    Basis lb = lie_basis(alpha, N, degree);
    TensorElement zero(alpha, N);

    // basis of L (+) L
    std::vector<PairElement> pb;
    std::vector<int> pdeg;
    std::vector<std::string> pname;
    for (std::size_t i = 0; i < lb.elements.size(); ++i) {
        pb.push_back({lb.elements[i], zero});
        pdeg.push_back(lb.degrees[i]);
        pname.push_back(lb.names[i] + "+0");
        pb.push_back({zero, lb.elements[i]});
        pdeg.push_back(lb.degrees[i]);
        pname.push_back("0+" + lb.names[i]);
    }

    const auto& c = z.c;
    for (std::size_t i = 0; i < pb.size(); ++i)
        for (std::size_t j = i + 1; j < pb.size(); ++j)
            for (std::size_t k = j + 1; k < pb.size(); ++k) {
                if (pdeg[i] + pdeg[j] + pdeg[k] > degree) continue;
                const PairElement &u = pb[i], &v = pb[j], &w = pb[k];
                TensorElement dc = pair_action(u, c(v, w)) - pair_action(v, c(u, w)) + pair_action(w, c(u, v));
                dc -= c(pair_bracket(u, v), w);
                dc += c(pair_bracket(u, w), v);
                dc -= c(pair_bracket(v, w), u);
                if (!dc.is_zero())
                    return {false, "dc != 0 on (" + pname[i] + ", " + pname[j] + ", " + pname[k] + ")"};
            }

    for (std::size_t i = 0; i < lb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < lb.elements.size(); ++j) {
            if (lb.degrees[i] + lb.degrees[j] > degree) continue;
            const TensorElement &x = lb.elements[i], &y = lb.elements[j];
            PairElement dx{x, x}, dy{y, y};
            TensorElement dw = pair_action(dx, z.omega(y)) - pair_action(dy, z.omega(x)) - z.omega(lie_bracket(x, y));
            if (!(dw + c(dx, dy)).is_zero())
                return {false, "d(omega) + Delta^*c != 0 on (" + lb.names[i] + ", " + lb.names[j] + ")"};
        }
    return {};
}

ExtensionElement extension_bracket(const std::function<TensorElement(const PairElement&, const PairElement&)>& c,
                                   const ExtensionElement& u, const ExtensionElement& v) {
    PairElement pu{u.left, u.right}, pv{v.left, v.right};
    PairElement br = pair_bracket(pu, pv);
    TensorElement tail = pair_action(pu, v.tail) - pair_action(pv, u.tail) + c(pu, pv);
    return {br.left, br.right, tail};
}

CheckResult check_extension_jacobi(
    const std::function<TensorElement(const PairElement&, const PairElement&)>& c, const AlphabetPtr& alpha,
    int max_degree, int degree) {
    const int N = max_degree;
    TensorElement zero(alpha, N);
    Basis lb = lie_basis(alpha, N, degree);
    std::vector<ExtensionElement> basis;
    std::vector<std::string> names;
    // the tail (0, w) sits in degree deg w + 2; brackets are homogeneous for this grading, so
    // triples of total degree <= degree never leave the truncation
    std::vector<int> degs;
    for (std::size_t i = 0; i < lb.elements.size(); ++i) {
        const int d = lb.elements[i].top_degree();
        basis.push_back({lb.elements[i], zero, zero});
        names.push_back("(" + lb.names[i] + "+0, 0)");
        basis.push_back({zero, lb.elements[i], zero});
        names.push_back("(0+" + lb.names[i] + ", 0)");
        degs.push_back(d);
        degs.push_back(d);
    }
    for (const Word& w : words_up_to_degree(*alpha, degree - 2)) {
        basis.push_back({zero, zero, TensorElement::word(alpha, N, w)});
        names.push_back("(0, " + format_word(*alpha, w) + ")");
        degs.push_back(alpha->degree(w) + 2);
    }
    if (degree > N) throw ContextMismatch("Jacobi degree exceeds the truncation");
    auto br = [&](const ExtensionElement& a, const ExtensionElement& b) { return extension_bracket(c, a, b); };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (degs[i] + degs[j] > degree) continue;
            ExtensionElement ij = br(basis[i], basis[j]);
            for (std::size_t k = j + 1; k < basis.size(); ++k) {
                if (degs[i] + degs[j] + degs[k] > degree) continue;
                ExtensionElement s = br(ij, basis[k]);
                ExtensionElement t1 = br(br(basis[j], basis[k]), basis[i]);
                ExtensionElement t2 = br(br(basis[k], basis[i]), basis[j]);
                if (!(s.left + t1.left + t2.left).is_zero() || !(s.right + t1.right + t2.right).is_zero() ||
                    !(s.tail + t1.tail + t2.tail).is_zero())
                    return {false, "Jacobi fails on " + names[i] + ", " + names[j] + ", " + names[k]};
            }
        }
    return {};
}

CheckResult check_extension_jacobi(const FoxPairing& rho, int degree) {
    auto c = [rho](const PairElement& v, const PairElement& w) { return c_rho(rho, v, w); };
    return check_extension_jacobi(c, rho.alphabet(), rho.max_degree(), degree);
}

CheckResult check_fox_morphism(const AlgebraMap& f, const FoxDerivative& dL, const FoxDerivative& dR,
                               const QuasiDerivation& q, const FoxPairing& rho, const QuasiDerivation& q2,
                               const FoxPairing& rho2, int degree) {
    if (dL.side() != Side::Left || dR.side() != Side::Right) throw WrongSide("expected a (left, right) pair");
    const AlphabetPtr& alpha = q.alphabet();
    const int N = q.max_degree();
    auto words = words_up_to_degree(*alpha, degree);
    std::vector<TensorElement> fw;
    for (const Word& w : words) fw.push_back(f.apply_word(w));

    for (std::size_t i = 0; i < words.size(); ++i) {
        TensorElement a = TensorElement::word(alpha, N, words[i]);
        TensorElement mu = dL.eval(a) + dR.eval(a);
        TensorElement rhs = q2.eval(fw[i]) - f.apply(q.eval(a));
        if (mu.truncated(degree) != rhs.truncated(degree))
            return {false, "mu component fails on " + format_word(*alpha, words[i])};
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].empty()) continue;
        TensorElement a = TensorElement::word(alpha, N, words[i]);
        TensorElement fda = fw[i];
        fda.add({}, -counit(fda));
        TensorElement la = dL.eval(a);
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (words[j].empty()) continue;
            if (alpha->degree(words[i]) + alpha->degree(words[j]) > degree + 2) continue;
            TensorElement b = TensorElement::word(alpha, N, words[j]);
            TensorElement fdb = fw[j];
            fdb.add({}, -counit(fdb));
            TensorElement tau = product(la, fdb) + product(fda, dR.eval(b));
            TensorElement rhs = f.apply(rho.eval(a, b)) - rho2.eval(fw[i], fw[j]);
            if (tau.truncated(degree) != rhs.truncated(degree))
                return {false, "tau component fails on (" + format_word(*alpha, words[i]) + ", " +
                                   format_word(*alpha, words[j]) + ")"};
        }
    }
    return {};
}

}  // namespace gt
