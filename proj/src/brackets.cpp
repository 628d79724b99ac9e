#include "gt/brackets.hpp"

namespace gt {

namespace {

// S on a single word: sign (-1)^len and reversal
inline Rational antipode_sign(const Word& w) { return (w.size() % 2) ? Rational(-1) : Rational(1); }

Word cat3(const Word& a, const Word& b, const Word& c) {
    Word r;
    r.reserve(a.size() + b.size() + c.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    r.insert(r.end(), c.begin(), c.end());
    return r;
}

}  // namespace

TensorSquare double_bracket(const FoxPairing& rho, const TensorElement& a, const TensorElement& b) {
    a.require_compatible(b);
    TensorSquare out(a.alphabet(), a.max_degree());
    const TensorSquare da = coproduct(a);
    const TensorSquare db = coproduct(b);
    for (const auto& [ka, ca] : da.terms()) {
        if (ka.second.empty()) continue;
        for (const auto& [kb, cb] : db.terms()) {
            if (kb.second.empty()) continue;
            TensorElement r = rho.eval_words(ka.second, kb.second);
            if (r.is_zero()) continue;
            for (const auto& [kr, cr] : coproduct(r).terms()) {
                Word left = cat3(kb.first, reversed(kr.first), ka.first);
                out.add(left, kr.second, ca * cb * cr * antipode_sign(kr.first));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- LetterBrackets

LetterBrackets::LetterBrackets(const FoxPairing& rho) : alpha_(rho.alphabet()) {
    const std::size_t n = alpha_->size();
    table_.resize(n * n);
    for (Letter a = 0; a < n; ++a)
        for (Letter b = 0; b < n; ++b) {
            TensorElement r = rho.value(a, b);
            for (const auto& [k, c] : coproduct(r).terms())
                table_[a * n + b].push_back(Term{reversed(k.first), k.second, c * antipode_sign(k.first)});
        }
}

TensorSquare LetterBrackets::value(Letter a, Letter b, int max_degree) const {
    TensorSquare out(alpha_, max_degree);
    for (const Term& t : terms(a, b)) out.add(t.left, t.right, t.coeff);
    return out;
}

TensorSquare LetterBrackets::on_words(const Word& a, const Word& b, int max_degree) const {
    TensorSquare out(alpha_, max_degree);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Word a_pre = slice(a, 0, i), a_post = slice(a, i + 1, a.size());
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto& ts = terms(a[i], b[j]);
            if (ts.empty()) continue;
            Word b_pre = slice(b, 0, j), b_post = slice(b, j + 1, b.size());
            for (const Term& t : ts) out.add(cat3(b_pre, t.left, a_post), cat3(a_pre, t.right, b_post), t.coeff);
        }
    }
    return out;
}

void LetterBrackets::cyclic_on_words(const Word& a, const Word& b, const Rational& scale, CyclicElement& out) const {
    const int N = out.max_degree();
    const Alphabet& al = *alpha_;
    const int base = al.degree(a) + al.degree(b);
    Word w;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto& ts = terms(a[i], b[j]);
            if (ts.empty()) continue;
            const int rest = base - al.degree(a[i]) - al.degree(b[j]);
            for (const Term& t : ts) {
                if (rest + al.degree(t.left) + al.degree(t.right) > N) continue;
                // b_{<j} k' a_{>i} a_{<i} k'' b_{>j}, read cyclically
                w.clear();
                w.insert(w.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j));
                w.insert(w.end(), t.left.begin(), t.left.end());
                w.insert(w.end(), a.begin() + static_cast<std::ptrdiff_t>(i + 1), a.end());
                w.insert(w.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
                w.insert(w.end(), t.right.begin(), t.right.end());
                w.insert(w.end(), b.begin() + static_cast<std::ptrdiff_t>(j + 1), b.end());
                out.add(w, scale * t.coeff);
            }
        }
    }
}

TensorSquare double_bracket_fast(const FoxPairing& rho, const TensorElement& a, const TensorElement& b) {
    a.require_compatible(b);
    LetterBrackets kappa(rho);
    TensorSquare out(a.alphabet(), a.max_degree());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            TensorSquare t = kappa.on_words(u, v, a.max_degree());
            t *= cu * cv;
            out += t;
        }
    return out;
}

CyclicElement bracket_cyclic(const LetterBrackets& kappa, const CyclicElement& a, const CyclicElement& b) {
    if (!same_alphabet(a.alphabet(), b.alphabet()) || a.max_degree() != b.max_degree())
        throw ContextMismatch("cyclic bracket context mismatch");
    CyclicElement out(a.alphabet(), a.max_degree());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) kappa.cyclic_on_words(u, v, cu * cv, out);
    return out;
}

CyclicElement bracket_cyclic(const FoxPairing& rho, const CyclicElement& a, const CyclicElement& b) {
    return bracket_cyclic(LetterBrackets(rho), a, b);
}

CyclicElement bracket_of_lifts(const FoxPairing& rho, const TensorElement& a, const TensorElement& b) {
    return cyclic_project(double_bracket(rho, a, b).multiply_legs());
}

// ---------------------------------------------------------------- cobracket

TensorSquare dq_map(const QuasiDerivation& q, const TensorElement& a) {
    TensorSquare out(a.alphabet(), a.max_degree());
    std::map<Word, TensorSquare> memo;
    for (const auto& [k, c] : coproduct(a).terms()) {
        if (k.second.empty()) continue;
        auto it = memo.find(k.second);
        if (it == memo.end()) it = memo.emplace(k.second, coproduct(q.eval_word(k.second))).first;
        for (const auto& [kq, cq] : it->second.terms()) {
            // a' S(q(a'')')
            out.add(concat(k.first, reversed(kq.first)), kq.second, c * cq * antipode_sign(kq.first));
        }
    }
    return out;
}

Cobracket::Cobracket(QuasiDerivation q) : q_(std::move(q)), qt_(transpose_qder(q_)) {}

CyclicSquare Cobracket::on_lift(const TensorElement& a) const {
    TensorSquare d = dq_map(q_, a);
    d += dq_map(qt_, a).swapped();
    return cyclic_square_project(d);
}

CyclicSquare Cobracket::on_word(const Word& w) const {
    return on_lift(TensorElement::word(q_.alphabet(), q_.max_degree(), w));
}

CyclicSquare Cobracket::operator()(const CyclicElement& a) const { return on_lift(a.lift()); }

CyclicSquare cobracket_cyclic(const QuasiDerivation& q, const CyclicElement& a) { return Cobracket(q)(a); }

CyclicSquare cobracket_of_lift(const QuasiDerivation& q, const TensorElement& a) { return Cobracket(q).on_lift(a); }

}  // namespace gt
