#include "gt/cyclic.hpp"

#include <algorithm>

namespace gt {

Word canonical_rotation(const Word& w) {
    const std::size_t n = w.size();
    if (n < 2) return w;
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t k = 0; k < n; ++k) {
            Letter a = w[(s + k) % n], b = w[(best + k) % n];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    Word r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = w[(best + k) % n];
    return r;
}

namespace {
template <class Map, class Key>
void accumulate(Map& m, Key&& k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, ins] = m.try_emplace(std::forward<Key>(k), c);
    if (!ins) {
        it->second += c;
        if (sgn(it->second) == 0) m.erase(it);
    }
}
}  // namespace

void CyclicElement::add(const Word& w, const Rational& c) { add_canonical(canonical_rotation(w), c); }

void CyclicElement::add_canonical(const Word& w, const Rational& c) {
    if (alpha_->degree(w) > N_) return;
    accumulate(terms_, w, c);
}

Rational CyclicElement::coeff(const Word& w) const {
    auto it = terms_.find(canonical_rotation(w));
    return it == terms_.end() ? Rational(0) : it->second;
}

CyclicElement& CyclicElement::operator+=(const CyclicElement& o) {
    if (!same_alphabet(alpha_, o.alpha_) || N_ != o.N_) throw ContextMismatch("cyclic element context mismatch");
    for (const auto& [w, c] : o.terms_) add_canonical(w, c);
    return *this;
}

CyclicElement& CyclicElement::operator-=(const CyclicElement& o) {
    if (!same_alphabet(alpha_, o.alpha_) || N_ != o.N_) throw ContextMismatch("cyclic element context mismatch");
    for (const auto& [w, c] : o.terms_) add_canonical(w, -c);
    return *this;
}

CyclicElement& CyclicElement::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

CyclicElement CyclicElement::operator-() const {
    CyclicElement r = *this;
    r *= -1;
    return r;
}

bool CyclicElement::operator==(const CyclicElement& o) const {
    if (!same_alphabet(alpha_, o.alpha_) || N_ != o.N_) throw ContextMismatch("cyclic element context mismatch");
    return terms_ == o.terms_;
}

TensorElement CyclicElement::lift() const {
    TensorElement r(alpha_, N_);
    for (const auto& [w, c] : terms_) r.add(w, c);
    return r;
}

void CyclicSquare::add(const Word& a, const Word& b, const Rational& c) {
    add_canonical(canonical_rotation(a), canonical_rotation(b), c);
}

void CyclicSquare::add_canonical(const Word& a, const Word& b, const Rational& c) {
    if (alpha_->degree(a) + alpha_->degree(b) > N_) return;
    accumulate(terms_, Key{a, b}, c);
}

Rational CyclicSquare::coeff(const Word& a, const Word& b) const {
    auto it = terms_.find(Key{canonical_rotation(a), canonical_rotation(b)});
    return it == terms_.end() ? Rational(0) : it->second;
}

CyclicSquare& CyclicSquare::operator+=(const CyclicSquare& o) {
    if (!same_alphabet(alpha_, o.alpha_) || N_ != o.N_) throw ContextMismatch("cyclic square context mismatch");
    for (const auto& [k, c] : o.terms_) add_canonical(k.first, k.second, c);
    return *this;
}

CyclicSquare& CyclicSquare::operator-=(const CyclicSquare& o) {
    if (!same_alphabet(alpha_, o.alpha_) || N_ != o.N_) throw ContextMismatch("cyclic square context mismatch");
    for (const auto& [k, c] : o.terms_) add_canonical(k.first, k.second, -c);
    return *this;
}

CyclicSquare& CyclicSquare::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool CyclicSquare::operator==(const CyclicSquare& o) const {
    if (!same_alphabet(alpha_, o.alpha_) || N_ != o.N_) throw ContextMismatch("cyclic square context mismatch");
    return terms_ == o.terms_;
}

CyclicSquare CyclicSquare::swapped() const {
    CyclicSquare r(alpha_, N_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
    return r;
}

CyclicElement cyclic_project(const TensorElement& a) {
    CyclicElement r(a.alphabet(), a.max_degree());
    for (const auto& [w, c] : a.terms()) r.add(w, c);
    return r;
}

CyclicSquare cyclic_square_project(const TensorSquare& a) {
    CyclicSquare r(a.alphabet(), a.max_degree());
    for (const auto& [k, c] : a.terms()) r.add(k.first, k.second, c);
    return r;
}

std::vector<Word> cyclic_words_of_degree(const Alphabet& alpha, int d) {
    std::vector<Word> out;
    for (const Word& w : words_of_degree(alpha, d))
        if (canonical_rotation(w) == w) out.push_back(w);
    return out;
}

std::vector<Word> cyclic_words_up_to_degree(const Alphabet& alpha, int d) {
    std::vector<Word> out;
    for (int k = 1; k <= d; ++k) {
        auto part = cyclic_words_of_degree(alpha, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace gt
