#include "gt/lie.hpp"

#include <algorithm>

namespace gt {

bool is_lyndon(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) return false;
    // strictly smaller than every proper suffix
    for (std::size_t s = 1; s < n; ++s) {
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(s), w.end()))
            return false;
    }
    return true;
}

std::vector<Word> lyndon_words(const Alphabet& alpha, int d) {
    std::vector<Word> out;
    for (Word& w : words_of_degree(alpha, d))
        if (is_lyndon(w)) out.push_back(std::move(w));
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("standard factorization needs length >= 2");
    for (std::size_t s = 1; s < w.size(); ++s) {
        Word v = slice(w, s, w.size());
        if (is_lyndon(v)) return {slice(w, 0, s), std::move(v)};
    }
    throw std::logic_error("unreachable: every single letter is Lyndon");
}

TensorElement LyndonExpander::expand(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    }
    TensorElement value(alpha_, N_);
    if (w.size() == 1) {
        value.add(w, 1);
    } else {
        auto [u, v] = standard_factorization(w);
        value = lie_bracket(expand(u), expand(v));
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(w, value);
    return value;
}

std::map<Word, Rational> LyndonExpander::coordinates(const TensorElement& lie) const {
    std::map<Word, Rational> coords;
    TensorElement rest = lie;
    while (!rest.is_zero()) {
        const auto& [w, c] = *rest.terms().begin();
        if (!is_lyndon(w)) throw NotALieElement("element is not in the free Lie algebra (leading word not Lyndon)");
        Word lead = w;
        Rational coeff = c;
        coords.emplace(lead, coeff);
        TensorElement p = expand(lead);
        p *= coeff;
        rest -= p;
    }
    return coords;
}

TensorElement LyndonExpander::from_coordinates(const std::map<Word, Rational>& coords) const {
    TensorElement r(alpha_, N_);
    for (const auto& [w, c] : coords) r += c * expand(w);
    return r;
}

TensorElement lyndon_bracketing(const AlphabetPtr& alpha, int max_degree, const Word& w) {
    LyndonExpander ex(alpha, max_degree);
    return ex.expand(w);
}

std::vector<long long> free_lie_dimensions(const Alphabet& alpha, int dmax) {
    // p(t) = sum_i t^{deg_i}; c_n = [t^n] log 1/(1 - p) = sum_j [t^n] p^j / j
    std::vector<Rational> p(dmax + 1, 0);
    for (int d : alpha.degrees())
        if (d <= dmax) p[d] += 1;
    std::vector<Rational> logc(dmax + 1, 0);
    std::vector<Rational> pj(dmax + 1, 0);
    pj[0] = 1;
    for (int j = 1; j <= dmax; ++j) {
        std::vector<Rational> next(dmax + 1, 0);
        for (int a = 0; a <= dmax; ++a) {
            if (sgn(pj[a]) == 0) continue;
            for (int b = 1; a + b <= dmax; ++b) next[a + b] += pj[a] * p[b];
        }
        pj = std::move(next);
        for (int n = 0; n <= dmax; ++n) logc[n] += pj[n] / j;
    }
    // n c_n = sum_{d | n} d dim_d
    std::vector<long long> dims(dmax + 1, 0);
    for (int n = 1; n <= dmax; ++n) {
        Rational s = logc[n] * n;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) s -= Rational(d) * Rational(static_cast<long>(dims[d]));
        s /= n;
        if (s.get_den() != 1) throw std::logic_error("non-integral free Lie dimension");
        dims[n] = static_cast<long long>(s.get_num().get_si());
    }
    return dims;
}

}  // namespace gt
