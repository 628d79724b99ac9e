#include "gt/tensor.hpp"

#include <algorithm>
#include <array>

namespace gt {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size()) throw std::invalid_argument("alphabet: names/degrees length mismatch");
    if (names_.size() > 0xFFFF) throw std::invalid_argument("alphabet too large");
    min_degree_ = names_.empty() ? 1 : *std::min_element(degrees_.begin(), degrees_.end());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (degrees_[i] < 1) throw std::invalid_argument("alphabet: degree must be >= 1 for " + names_[i]);
        if (!lookup_.emplace(names_[i], static_cast<Letter>(i)).second)
            throw std::invalid_argument("alphabet: duplicate symbol " + names_[i]);
    }
}

int Alphabet::find(const std::string& symbol) const {
    auto it = lookup_.find(symbol);
    return it == lookup_.end() ? -1 : it->second;
}

Letter Alphabet::index(const std::string& symbol) const {
    int i = find(symbol);
    if (i < 0) throw std::invalid_argument("unknown generator '" + symbol + "'");
    return static_cast<Letter>(i);
}

int Alphabet::degree(const Word& w) const {
    int d = 0;
    for (Letter l : w) d += degrees_[l];
    return d;
}

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees) {
    return std::make_shared<const Alphabet>(std::move(names), std::move(degrees));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Word concat(const Word& a, const Word& b) {
    Word r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

// ---------------------------------------------------------------- TensorElement

TensorElement TensorElement::unit(AlphabetPtr alphabet, int max_degree, const Rational& c) {
    TensorElement e(std::move(alphabet), max_degree);
    e.add({}, c);
    return e;
}

TensorElement TensorElement::letter(AlphabetPtr alphabet, int max_degree, Letter l, const Rational& c) {
    TensorElement e(std::move(alphabet), max_degree);
    e.add({l}, c);
    return e;
}

TensorElement TensorElement::generator(AlphabetPtr alphabet, int max_degree, const std::string& symbol) {
    Letter l = alphabet->index(symbol);
    return letter(std::move(alphabet), max_degree, l);
}

TensorElement TensorElement::word(AlphabetPtr alphabet, int max_degree, const Word& w, const Rational& c) {
    TensorElement e(std::move(alphabet), max_degree);
    e.add(w, c);
    return e;
}

Rational TensorElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add(const Word& w, const Rational& c) {
    if (sgn(c) == 0) return;
    if (alpha_->degree(w) > N_) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void TensorElement::require_compatible(const TensorElement& o) const {
    if (!same_alphabet(alpha_, o.alpha_)) throw ContextMismatch("alphabet mismatch");
    if (N_ != o.N_) throw ContextMismatch("truncation mismatch");
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    require_compatible(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    require_compatible(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

TensorElement TensorElement::operator-() const {
    TensorElement r = *this;
    for (auto& [w, v] : r.terms_) v = -v;
    return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
    require_compatible(o);
    return terms_ == o.terms_;
}

TensorElement TensorElement::homogeneous_part(int d) const {
    TensorElement r(alpha_, N_);
    for (const auto& [w, c] : terms_)
        if (alpha_->degree(w) == d) r.terms_.emplace(w, c);
    return r;
}

TensorElement TensorElement::truncated(int d) const {
    TensorElement r(alpha_, N_);
    for (const auto& [w, c] : terms_)
        if (alpha_->degree(w) <= d) r.terms_.emplace(w, c);
    return r;
}

TensorElement TensorElement::with_max_degree(int N) const {
    TensorElement r(alpha_, N);
    for (const auto& [w, c] : terms_) r.add(w, c);
    return r;
}

int TensorElement::top_degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, alpha_->degree(w));
    return d;
}

// ---------------------------------------------------------------- TensorSquare

void TensorSquare::add(const Word& a, const Word& b, const Rational& c) {
    if (sgn(c) == 0) return;
    if (alpha_->degree(a) + alpha_->degree(b) > N_) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational TensorSquare::coeff(const Word& a, const Word& b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

TensorSquare& TensorSquare::operator+=(const TensorSquare& o) {
    if (!same_alphabet(alpha_, o.alpha_) || N_ != o.N_) throw ContextMismatch("tensor square context mismatch");
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

TensorSquare& TensorSquare::operator-=(const TensorSquare& o) {
    if (!same_alphabet(alpha_, o.alpha_) || N_ != o.N_) throw ContextMismatch("tensor square context mismatch");
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

TensorSquare& TensorSquare::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool TensorSquare::operator==(const TensorSquare& o) const {
    if (!same_alphabet(alpha_, o.alpha_) || N_ != o.N_) throw ContextMismatch("tensor square context mismatch");
    return terms_ == o.terms_;
}

TensorSquare TensorSquare::simple(const TensorElement& a, const TensorElement& b) {
    a.require_compatible(b);
    TensorSquare r(a.alphabet(), a.max_degree());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) r.add(u, v, cu * cv);
    return r;
}

TensorSquare TensorSquare::swapped() const {
    TensorSquare r(alpha_, N_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
    return r;
}

TensorSquare TensorSquare::multiply(const TensorSquare& o) const {
    TensorSquare r(alpha_, N_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) r.add(concat(k1.first, k2.first), concat(k1.second, k2.second), c1 * c2);
    return r;
}

TensorElement TensorSquare::left_contract_counit() const {
    TensorElement r(alpha_, N_);
    for (const auto& [k, c] : terms_)
        if (k.first.empty()) r.add(k.second, c);
    return r;
}

TensorElement TensorSquare::right_contract_counit() const {
    TensorElement r(alpha_, N_);
    for (const auto& [k, c] : terms_)
        if (k.second.empty()) r.add(k.first, c);
    return r;
}

TensorElement TensorSquare::multiply_legs() const {
    TensorElement r(alpha_, N_);
    for (const auto& [k, c] : terms_) r.add(concat(k.first, k.second), c);
    return r;
}

// ---------------------------------------------------------------- Hopf structure

TensorElement product(const TensorElement& a, const TensorElement& b) {
    a.require_compatible(b);
    const Alphabet& al = *a.alphabet();
    const int N = a.max_degree();
    TensorElement r(a.alphabet(), N);
    for (const auto& [u, cu] : a.terms()) {
        int du = al.degree(u);
        for (const auto& [v, cv] : b.terms()) {
            if (du + al.degree(v) > N) continue;
            r.add(concat(u, v), cu * cv);
        }
    }
    return r;
}

TensorSquare coproduct(const TensorElement& a) {
    TensorSquare r(a.alphabet(), a.max_degree());
    for (const auto& [w, c] : a.terms()) {
        const std::size_t k = w.size();
        if (k > 24) throw std::length_error("coproduct: word too long");
        Word left, right;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            left.clear();
            right.clear();
            for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1u ? right : left).push_back(w[i]);
            r.add(left, right, c);
        }
    }
    return r;
}

TensorElement antipode(const TensorElement& a) {
    TensorElement r(a.alphabet(), a.max_degree());
    for (const auto& [w, c] : a.terms()) r.add(reversed(w), (w.size() % 2) ? Rational(-c) : c);
    return r;
}

Rational counit(const TensorElement& a) { return a.coeff({}); }

TensorElement augmentation_part(const TensorElement& a) {
    TensorElement r = a;
    r.add({}, -counit(a));
    return r;
}

TensorElement lie_bracket(const TensorElement& a, const TensorElement& b) { return product(a, b) - product(b, a); }

TensorElement power(const TensorElement& a, int k) {
    TensorElement r = TensorElement::unit(a.alphabet(), a.max_degree());
    for (int i = 0; i < k; ++i) r = product(r, a);
    return r;
}

TensorElement exp_truncated(const TensorElement& a) {
    if (sgn(counit(a)) != 0) throw NonAugmentedInput("exp: argument must have zero counit");
    TensorElement result = TensorElement::unit(a.alphabet(), a.max_degree());
    TensorElement term = result;
    // a has no constant term, so a^k vanishes once k*min_degree exceeds N
    const int steps = a.max_degree() / a.alphabet()->min_degree();
    for (int k = 1; k <= steps; ++k) {
        term = product(term, a);
        term *= Rational(1, k);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

TensorElement inverse_unipotent(const TensorElement& x) {
    if (counit(x) != 1) throw NonAugmentedInput("inverse: counit must be 1");
    TensorElement u = TensorElement::unit(x.alphabet(), x.max_degree()) - x;  // 1 - x, augmentation-free
    TensorElement result = TensorElement::unit(x.alphabet(), x.max_degree());
    TensorElement term = result;
    const int steps = x.max_degree() / x.alphabet()->min_degree();
    for (int k = 1; k <= steps; ++k) {
        term = product(term, u);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

bool is_primitive(const TensorElement& a) {
    TensorSquare expected(a.alphabet(), a.max_degree());
    for (const auto& [w, c] : a.terms()) {
        expected.add(w, {}, c);
        expected.add({}, w, c);
    }
    return coproduct(a) == expected;
}

bool is_group_like(const TensorElement& a) {
    if (counit(a) != 1) return false;
    return coproduct(a) == TensorSquare::simple(a, a);
}

namespace {
using Triple = std::array<Word, 3>;
void add_triple(std::map<Triple, Rational>& m, Triple t, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, ins] = m.try_emplace(std::move(t), c);
    if (!ins) {
        it->second += c;
        if (sgn(it->second) == 0) m.erase(it);
    }
}
}  // namespace

std::map<std::array<Word, 3>, Rational> coassoc_left(const TensorElement& a) {
    std::map<Triple, Rational> out;
    for (const auto& [k, c] : coproduct(a).terms()) {
        TensorElement first = TensorElement::word(a.alphabet(), a.max_degree(), k.first);
        for (const auto& [k2, c2] : coproduct(first).terms()) add_triple(out, {k2.first, k2.second, k.second}, c * c2);
    }
    return out;
}

std::map<std::array<Word, 3>, Rational> coassoc_right(const TensorElement& a) {
    std::map<Triple, Rational> out;
    for (const auto& [k, c] : coproduct(a).terms()) {
        TensorElement second = TensorElement::word(a.alphabet(), a.max_degree(), k.second);
        for (const auto& [k2, c2] : coproduct(second).terms()) add_triple(out, {k.first, k2.first, k2.second}, c * c2);
    }
    return out;
}

namespace {
void extend_words(const Alphabet& alpha, int remaining, Word& cur, std::vector<Word>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (Letter l = 0; l < alpha.size(); ++l) {
        int d = alpha.degree(l);
        if (d > remaining) continue;
        cur.push_back(l);
        extend_words(alpha, remaining - d, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Word> words_of_degree(const Alphabet& alpha, int d) {
    std::vector<Word> out;
    if (d < 0) return out;
    Word cur;
    extend_words(alpha, d, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> words_up_to_degree(const Alphabet& alpha, int d) {
    std::vector<Word> out;
    for (int k = 0; k <= d; ++k) {
        auto part = words_of_degree(alpha, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace gt
