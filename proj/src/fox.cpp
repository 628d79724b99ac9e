#include "gt/fox.hpp"

#include "gt/linalg.hpp"

namespace gt {

namespace {

void require_context(const AlphabetPtr& alpha, int N, const TensorElement& a) {
    if (!same_alphabet(alpha, a.alphabet())) throw ContextMismatch("alphabet mismatch");
    if (N != a.max_degree()) throw ContextMismatch("truncation mismatch");
}

std::string letter_name(const AlphabetPtr& alpha, Letter g) { return alpha->name(g); }

}  // namespace

// ---------------------------------------------------------------- AlgebraMap

AlgebraMap::AlgebraMap(std::vector<TensorElement> images) : images_(std::move(images)) {
    if (images_.empty()) return;
    alpha_ = images_.front().alphabet();
    N_ = images_.front().max_degree();
    for (const auto& im : images_) require_context(alpha_, N_, im);
}

AlgebraMap AlgebraMap::identity(const AlphabetPtr& alpha, int max_degree) {
    std::vector<TensorElement> ims;
    for (Letter g = 0; g < alpha->size(); ++g) ims.push_back(TensorElement::letter(alpha, max_degree, g));
    return AlgebraMap(std::move(ims));
}

TensorElement AlgebraMap::apply_word(const Word& w) const {
    TensorElement r = TensorElement::unit(alpha_, N_);
    for (Letter l : w) r = product(r, images_.at(l));
    return r;
}

TensorElement AlgebraMap::apply(const TensorElement& a) const {
    TensorElement r(alpha_, N_);
    for (const auto& [w, c] : a.terms()) r += c * apply_word(w);
    return r;
}

// ---------------------------------------------------------------- FoxDerivative

FoxDerivative::FoxDerivative(Side side, AlphabetPtr alphabet, int max_degree)
    : side_(side), alpha_(std::move(alphabet)), N_(max_degree) {
    table_.assign(alpha_->size(), TensorElement(alpha_, N_));
    defined_.assign(alpha_->size(), false);
}

FoxDerivative FoxDerivative::zero(Side side, AlphabetPtr alphabet, int max_degree) {
    FoxDerivative d(side, alphabet, max_degree);
    for (Letter g = 0; g < alphabet->size(); ++g) d.set(g, TensorElement(alphabet, max_degree));
    return d;
}

FoxDerivative FoxDerivative::distinguished(Side side, AlphabetPtr alphabet, int max_degree) {
    FoxDerivative d(side, alphabet, max_degree);
    for (Letter g = 0; g < alphabet->size(); ++g) d.set(g, TensorElement::letter(alphabet, max_degree, g));
    return d;
}

void FoxDerivative::set(Letter g, TensorElement value) {
    require_context(alpha_, N_, value);
    table_.at(g) = std::move(value);
    defined_.at(g) = true;
}

const TensorElement& FoxDerivative::value(Letter g) const {
    if (!defined_.at(g)) throw IncompleteTable("Fox derivative has no value for generator " + letter_name(alpha_, g));
    return table_[g];
}

TensorElement FoxDerivative::eval_word(const Word& w) const {
    TensorElement r(alpha_, N_);
    if (w.empty()) return r;
    const auto apply_f = [&](const Word& u) {
        return twist_ ? twist_->apply_word(u) : TensorElement::word(alpha_, N_, u);
    };
    if (side_ == Side::Left) {
        r = product(apply_f(slice(w, 0, w.size() - 1)), value(w.back()));
    } else {
        r = product(value(w.front()), apply_f(slice(w, 1, w.size())));
    }
    return r;
}

TensorElement FoxDerivative::eval(const TensorElement& a) const {
    require_context(alpha_, N_, a);
    TensorElement r(alpha_, N_);
    for (const auto& [w, c] : a.terms()) r += c * eval_word(w);
    return r;
}

// ---------------------------------------------------------------- FoxPairing

FoxPairing::FoxPairing(AlphabetPtr alphabet, int max_degree) : alpha_(std::move(alphabet)), N_(max_degree) {
    table_.assign(alpha_->size() * alpha_->size(), TensorElement(alpha_, N_));
    defined_.assign(alpha_->size() * alpha_->size(), false);
}

FoxPairing FoxPairing::zero(AlphabetPtr alphabet, int max_degree) {
    FoxPairing p(alphabet, max_degree);
    std::fill(p.defined_.begin(), p.defined_.end(), true);
    return p;
}

void FoxPairing::set(Letter a, Letter b, TensorElement value) {
    require_context(alpha_, N_, value);
    table_.at(a * rank() + b) = std::move(value);
    defined_.at(a * rank() + b) = true;
}

const TensorElement& FoxPairing::value(Letter a, Letter b) const {
    if (!defined(a, b))
        throw IncompleteTable("Fox pairing has no value for (" + letter_name(alpha_, a) + ", " + letter_name(alpha_, b) + ")");
    return table_[a * rank() + b];
}

TensorElement FoxPairing::eval_words(const Word& a, const Word& b) const {
    TensorElement r(alpha_, N_);
    if (a.empty() || b.empty()) return r;
    const TensorElement& t = value(a.back(), b.front());
    if (t.is_zero()) return r;
    Word left = slice(a, 0, a.size() - 1);
    Word right = slice(b, 1, b.size());
    for (const auto& [w, c] : t.terms()) {
        Word full;
        full.reserve(left.size() + w.size() + right.size());
        full.insert(full.end(), left.begin(), left.end());
        full.insert(full.end(), w.begin(), w.end());
        full.insert(full.end(), right.begin(), right.end());
        r.add(full, c);
    }
    return r;
}

TensorElement FoxPairing::eval(const TensorElement& a, const TensorElement& b) const {
    require_context(alpha_, N_, a);
    require_context(alpha_, N_, b);
    TensorElement r(alpha_, N_);
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            TensorElement t = eval_words(u, v);
            if (!t.is_zero()) r += (cu * cv) * t;
        }
    return r;
}

// ---------------------------------------------------------------- QuasiDerivation

QuasiDerivation::QuasiDerivation(AlphabetPtr alphabet, int max_degree, FoxPairing sigma)
    : alpha_(std::move(alphabet)), N_(max_degree), sigma_(std::move(sigma)) {
    if (!same_alphabet(alpha_, sigma_.alphabet()) || sigma_.max_degree() != N_)
        throw ContextMismatch("quasi-derivation and its pairing live in different contexts");
    table_.assign(alpha_->size(), TensorElement(alpha_, N_));
    defined_.assign(alpha_->size(), false);
}

QuasiDerivation QuasiDerivation::zero(AlphabetPtr alphabet, int max_degree) {
    QuasiDerivation q(alphabet, max_degree, FoxPairing::zero(alphabet, max_degree));
    for (Letter g = 0; g < alphabet->size(); ++g) q.set(g, TensorElement(alphabet, max_degree));
    return q;
}

void QuasiDerivation::set(Letter g, TensorElement value) {
    require_context(alpha_, N_, value);
    table_.at(g) = std::move(value);
    defined_.at(g) = true;
}

const TensorElement& QuasiDerivation::value(Letter g) const {
    if (!defined_.at(g)) throw IncompleteTable("quasi-derivation has no value for generator " + letter_name(alpha_, g));
    return table_[g];
}

TensorElement QuasiDerivation::eval_word(const Word& w) const {
    TensorElement r(alpha_, N_);
    const std::size_t m = w.size();
    for (std::size_t k = 0; k < m; ++k) {
        const TensorElement& t = value(w[k]);
        if (t.is_zero()) continue;
        Word pre = slice(w, 0, k), post = slice(w, k + 1, m);
        for (const auto& [u, c] : t.terms()) r.add(concat(concat(pre, u), post), c);
    }
    for (std::size_t k = 0; k + 1 < m; ++k) {
        const TensorElement& s = sigma_.value(w[k], w[k + 1]);
        if (s.is_zero()) continue;
        Word pre = slice(w, 0, k), post = slice(w, k + 2, m);
        for (const auto& [u, c] : s.terms()) r.add(concat(concat(pre, u), post), -c);
    }
    return r;
}

TensorElement QuasiDerivation::eval(const TensorElement& a) const {
    require_context(alpha_, N_, a);
    TensorElement r(alpha_, N_);
    for (const auto& [w, c] : a.terms()) r += c * eval_word(w);
    return r;
}

// ---------------------------------------------------------------- recursive references

namespace {

TensorElement word_el(const AlphabetPtr& alpha, int N, const Word& w) { return TensorElement::word(alpha, N, w); }

TensorElement fox_word_recursive(const FoxDerivative& d, const Word& w) {
    const AlphabetPtr& alpha = d.alphabet();
    const int N = d.max_degree();
    if (w.empty()) return TensorElement(alpha, N);
    if (w.size() == 1) return d.value(w[0]);
    std::size_t mid = w.size() / 2;
    Word u = slice(w, 0, mid), v = slice(w, mid, w.size());
    auto f = [&](const Word& x) { return d.twist() ? d.twist()->apply_word(x) : word_el(alpha, N, x); };
    // u, v nonempty so eps(u) = eps(v) = 0
    if (d.side() == Side::Left) return product(f(u), fox_word_recursive(d, v));
    return product(fox_word_recursive(d, u), f(v));
}

// pairing with a single letter in the first slot, right-Fox recursion in the second
TensorElement pairing_letter_recursive(const FoxPairing& rho, Letter a, const Word& b) {
    const AlphabetPtr& alpha = rho.alphabet();
    const int N = rho.max_degree();
    if (b.empty()) return TensorElement(alpha, N);
    if (b.size() == 1) return rho.value(a, b[0]);
    std::size_t mid = b.size() / 2;
    Word u = slice(b, 0, mid), v = slice(b, mid, b.size());
    return product(pairing_letter_recursive(rho, a, u), word_el(alpha, N, v));
}

TensorElement pairing_words_recursive(const FoxPairing& rho, const Word& a, const Word& b) {
    const AlphabetPtr& alpha = rho.alphabet();
    const int N = rho.max_degree();
    if (a.empty() || b.empty()) return TensorElement(alpha, N);
    if (a.size() == 1) return pairing_letter_recursive(rho, a[0], b);
    std::size_t mid = a.size() / 2;
    Word u = slice(a, 0, mid), v = slice(a, mid, a.size());
    return product(word_el(alpha, N, u), pairing_words_recursive(rho, v, b));
}

TensorElement qder_word_recursive(const QuasiDerivation& q, const Word& w) {
    const AlphabetPtr& alpha = q.alphabet();
    const int N = q.max_degree();
    if (w.empty()) return TensorElement(alpha, N);
    if (w.size() == 1) return q.value(w[0]);
    std::size_t mid = w.size() / 2;
    Word u = slice(w, 0, mid), v = slice(w, mid, w.size());
    TensorElement r = product(qder_word_recursive(q, u), word_el(alpha, N, v));
    r += product(word_el(alpha, N, u), qder_word_recursive(q, v));
    r -= pairing_words_recursive(q.pairing(), u, v);
    return r;
}

}  // namespace

TensorElement fox_eval_recursive(const FoxDerivative& d, const TensorElement& a) {
    TensorElement r(d.alphabet(), d.max_degree());
    for (const auto& [w, c] : a.terms()) r += c * fox_word_recursive(d, w);
    return r;
}

TensorElement pairing_eval_recursive(const FoxPairing& rho, const TensorElement& a, const TensorElement& b) {
    TensorElement r(rho.alphabet(), rho.max_degree());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) r += (cu * cv) * pairing_words_recursive(rho, u, v);
    return r;
}

TensorElement qder_eval_recursive(const QuasiDerivation& q, const TensorElement& a) {
    TensorElement r(q.alphabet(), q.max_degree());
    for (const auto& [w, c] : a.terms()) r += c * qder_word_recursive(q, w);
    return r;
}

// ---------------------------------------------------------------- transposes

FoxDerivative transpose_fox(const FoxDerivative& d) {
    if (d.twist()) throw std::invalid_argument("transpose of a twisted Fox derivative is not supported");
    FoxDerivative t(opposite(d.side()), d.alphabet(), d.max_degree());
    for (Letter g = 0; g < d.alphabet()->size(); ++g) t.set(g, -antipode(d.value(g)));
    return t;
}

FoxPairing transpose_pairing(const FoxPairing& rho) {
    FoxPairing t(rho.alphabet(), rho.max_degree());
    const std::size_t n = rho.alphabet()->size();
    for (Letter a = 0; a < n; ++a)
        for (Letter b = 0; b < n; ++b) t.set(a, b, antipode(rho.value(b, a)));
    t.mark_exact(rho.is_exact());
    return t;
}

QuasiDerivation transpose_qder(const QuasiDerivation& q) {
    QuasiDerivation t(q.alphabet(), q.max_degree(), transpose_pairing(q.pairing()));
    for (Letter g = 0; g < q.alphabet()->size(); ++g) t.set(g, -antipode(q.value(g)));
    t.mark_exact(q.is_exact());
    return t;
}

// ---------------------------------------------------------------- exactness constructors

namespace {
void check_sides(const FoxDerivative& left, const FoxDerivative& right) {
    if (left.side() != Side::Left) throw WrongSide("first argument must be a left Fox derivative");
    if (right.side() != Side::Right) throw WrongSide("second argument must be a right Fox derivative");
    if (left.twist() || right.twist()) throw std::invalid_argument("exactness constructors take untwisted derivatives");
    if (!same_alphabet(left.alphabet(), right.alphabet()) || left.max_degree() != right.max_degree())
        throw ContextMismatch("derivatives live in different contexts");
}
}  // namespace

FoxPairing make_exact_pairing(const FoxDerivative& left, const FoxDerivative& right) {
    check_sides(left, right);
    const AlphabetPtr& alpha = left.alphabet();
    const int N = left.max_degree();
    FoxPairing p(alpha, N);
    for (Letter a = 0; a < alpha->size(); ++a) {
        TensorElement ga = TensorElement::letter(alpha, N, a);
        for (Letter b = 0; b < alpha->size(); ++b) {
            TensorElement gb = TensorElement::letter(alpha, N, b);
            p.set(a, b, product(left.value(a), gb) + product(ga, right.value(b)));
        }
    }
    p.mark_exact();
    return p;
}

QuasiDerivation make_exact_qder(const FoxDerivative& left, const FoxDerivative& right) {
    FoxPairing tau = make_exact_pairing(left, right);
    QuasiDerivation q(left.alphabet(), left.max_degree(), std::move(tau));
    for (Letter g = 0; g < left.alphabet()->size(); ++g) q.set(g, left.value(g) + right.value(g));
    q.mark_exact();
    return q;
}

FoxPairing make_inner_pairing(const TensorElement& e) {
    const AlphabetPtr& alpha = e.alphabet();
    const int N = e.max_degree();
    FoxPairing p(alpha, N);
    for (Letter a = 0; a < alpha->size(); ++a)
        for (Letter b = 0; b < alpha->size(); ++b)
            p.set(a, b, product(product(TensorElement::letter(alpha, N, a), e), TensorElement::letter(alpha, N, b)));
    p.mark_exact();
    return p;
}

// ---------------------------------------------------------------- two-sided derivatives

std::vector<std::vector<TensorElement>> solve_two_sided_derivatives(const AlphabetPtr& alpha, int N) {
    const std::size_t n = alpha->size();
    std::vector<Word> values = words_up_to_degree(*alpha, N - 1);
    const int per_gen = static_cast<int>(values.size());
    const int columns = static_cast<int>(n) * per_gen;
    auto column = [&](Letter g, int k) { return static_cast<int>(g) * per_gen + k; };

    Echelon eq(columns);
    for (const Word& w : words_up_to_degree(*alpha, N)) {
        if (w.size() < 2) continue;
        // left(w) - right(w), products untruncated
        std::map<Word, std::map<int, mpq_class>> rows;
        Word pre = slice(w, 0, w.size() - 1), post = slice(w, 1, w.size());
        for (int k = 0; k < per_gen; ++k) {
            rows[concat(pre, values[k])][column(w.back(), k)] += 1;
            rows[concat(values[k], post)][column(w.front(), k)] -= 1;
        }
        for (auto& [out, row] : rows) {
            RatRow r;
            for (auto& [c, v] : row)
                if (sgn(v) != 0) r.emplace_back(c, v);
            if (!r.empty()) eq.insert(r);
        }
    }

    std::vector<std::vector<TensorElement>> basis;
    for (const auto& vec : eq.nullspace()) {
        std::vector<TensorElement> table(n, TensorElement(alpha, N));
        for (Letter g = 0; g < n; ++g)
            for (int k = 0; k < per_gen; ++k) table[g].add(values[k], vec[column(g, k)]);
        basis.push_back(std::move(table));
    }
    return basis;
}

}  // namespace gt
