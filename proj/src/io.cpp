#include "gt/io.hpp"

#include <algorithm>
#include <cctype>

namespace gt {

using nlohmann::json;

std::string format_rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string format_word(const Alphabet& alpha, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += alpha.name(w[i]);
    }
    return s;
}

bool degree_word_less(const Alphabet& alpha, const Word& a, const Word& b) {
    int da = alpha.degree(a), db = alpha.degree(b);
    if (da != db) return da < db;
    return a < b;
}

namespace {

template <class Terms, class KeyLess>
std::vector<typename Terms::const_iterator> sorted_terms(const Terms& terms, KeyLess less) {
    std::vector<typename Terms::const_iterator> its;
    for (auto it = terms.begin(); it != terms.end(); ++it) its.push_back(it);
    std::sort(its.begin(), its.end(), [&](auto x, auto y) { return less(x->first, y->first); });
    return its;
}

// joins signed terms; body(abs_coeff) renders one term without its sign
template <class Its, class Body>
std::string join_terms(const Its& its, Body body) {
    if (its.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it : its) {
        const Rational& c = it->second;
        bool neg = sgn(c) < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        s += body(it->first, neg ? Rational(-c) : c);
        first = false;
    }
    return s;
}

std::string with_coeff(const Rational& c, const std::string& thing) {
    return c == 1 ? thing : format_rational(c) + "*" + thing;
}

}  // namespace

std::string format_element(const TensorElement& a) {
    const Alphabet& al = *a.alphabet();
    auto its = sorted_terms(a.terms(), [&](const Word& x, const Word& y) { return degree_word_less(al, x, y); });
    return join_terms(its, [&](const Word& w, const Rational& c) {
        return w.empty() ? format_rational(c) : with_coeff(c, format_word(al, w));
    });
}

std::string format_cyclic(const CyclicElement& a) {
    const Alphabet& al = *a.alphabet();
    auto its = sorted_terms(a.terms(), [&](const Word& x, const Word& y) { return degree_word_less(al, x, y); });
    return join_terms(its, [&](const Word& w, const Rational& c) { return with_coeff(c, "|" + format_word(al, w) + "|"); });
}

namespace {
template <class Key>
bool pair_less(const Alphabet& al, const Key& x, const Key& y) {
    int dx = al.degree(x.first) + al.degree(x.second), dy = al.degree(y.first) + al.degree(y.second);
    if (dx != dy) return dx < dy;
    return x < y;
}
}  // namespace

std::string format_square(const TensorSquare& a) {
    const Alphabet& al = *a.alphabet();
    auto its = sorted_terms(a.terms(), [&](const auto& x, const auto& y) { return pair_less(al, x, y); });
    return join_terms(its, [&](const TensorSquare::Key& k, const Rational& c) {
        return with_coeff(c, "(" + format_word(al, k.first) + " (x) " + format_word(al, k.second) + ")");
    });
}

std::string format_cyclic_square(const CyclicSquare& a) {
    const Alphabet& al = *a.alphabet();
    auto its = sorted_terms(a.terms(), [&](const auto& x, const auto& y) { return pair_less(al, x, y); });
    return join_terms(its, [&](const CyclicSquare::Key& k, const Rational& c) {
        return with_coeff(c, "(|" + format_word(al, k.first) + "| (x) |" + format_word(al, k.second) + "|)");
    });
}

// ---------------------------------------------------------------- JSON

json word_to_json(const Alphabet& alpha, const Word& w) {
    json arr = json::array();
    for (Letter l : w) arr.push_back(alpha.name(l));
    return arr;
}

Word word_from_json(const json& j, const Alphabet& alpha) {
    Word w;
    for (const auto& s : j) w.push_back(alpha.index(s.get<std::string>()));
    return w;
}

json to_json(const TensorElement& a) {
    const Alphabet& al = *a.alphabet();
    json terms = json::array();
    for (auto it : sorted_terms(a.terms(), [&](const Word& x, const Word& y) { return degree_word_less(al, x, y); }))
        terms.push_back({{"word", word_to_json(al, it->first)}, {"coeff", format_rational(it->second)}});
    return {{"max_degree", a.max_degree()}, {"terms", terms}};
}

json to_json(const CyclicElement& a) {
    const Alphabet& al = *a.alphabet();
    json terms = json::array();
    for (auto it : sorted_terms(a.terms(), [&](const Word& x, const Word& y) { return degree_word_less(al, x, y); }))
        terms.push_back({{"word", word_to_json(al, it->first)}, {"coeff", format_rational(it->second)}});
    return {{"max_degree", a.max_degree()}, {"cyclic", true}, {"terms", terms}};
}

json to_json(const TensorSquare& a) {
    const Alphabet& al = *a.alphabet();
    json terms = json::array();
    for (auto it : sorted_terms(a.terms(), [&](const auto& x, const auto& y) { return pair_less(al, x, y); }))
        terms.push_back({{"left", word_to_json(al, it->first.first)},
                         {"right", word_to_json(al, it->first.second)},
                         {"coeff", format_rational(it->second)}});
    return terms;
}

json to_json(const CyclicSquare& a) {
    const Alphabet& al = *a.alphabet();
    json terms = json::array();
    for (auto it : sorted_terms(a.terms(), [&](const auto& x, const auto& y) { return pair_less(al, x, y); }))
        terms.push_back({{"left", word_to_json(al, it->first.first)},
                         {"right", word_to_json(al, it->first.second)},
                         {"coeff", format_rational(it->second)}});
    return terms;
}

TensorElement element_from_json(const json& j, const AlphabetPtr& alpha) {
    TensorElement r(alpha, j.at("max_degree").get<int>());
    for (const auto& t : j.at("terms")) r.add(word_from_json(t.at("word"), *alpha), Rational(t.at("coeff").get<std::string>()));
    return r;
}

CyclicElement cyclic_from_json(const json& j, const AlphabetPtr& alpha) {
    CyclicElement r(alpha, j.at("max_degree").get<int>());
    for (const auto& t : j.at("terms")) r.add(word_from_json(t.at("word"), *alpha), Rational(t.at("coeff").get<std::string>()));
    return r;
}

// ---------------------------------------------------------------- parser

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Dot, LParen, RParen, Comma, Bar, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(ch) || ch == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
            continue;
        }
        if (std::isdigit(ch)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && s[i] == '/') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw ParseError(i, "expected denominator");
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
            out.push_back({Tok::Number, s.substr(start, i - start), start});
            continue;
        }
        Tok k;
        switch (ch) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '.': k = Tok::Dot; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            case '|': k = Tok::Bar; break;
            default: throw ParseError(i, std::string("unexpected character '") + s[i] + "'");
        }
        out.push_back({k, std::string(1, s[i]), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

struct Node {
    enum Kind { Sum, Product, Gen, Number, Exp, Br, Cyc } kind;
    std::size_t offset = 0;
    std::string text;
    std::vector<std::pair<int, std::unique_ptr<Node>>> children;  // sign used by Sum
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
public:
    Parser(const std::string& src, bool cyclic) : toks_(tokenize(src)), cyclic_(cyclic) {}

    NodePtr parse() {
        NodePtr n = element();
        if (peek().kind != Tok::End) throw ParseError(peek().offset, "unexpected '" + peek().text + "'");
        return n;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    NodePtr make(Node::Kind k, std::size_t off) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->offset = off;
        return n;
    }

    NodePtr element() {
        auto sum = make(Node::Sum, peek().offset);
        int sign = 1;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) sign = next().kind == Tok::Minus ? -1 : 1;
        sum->children.emplace_back(sign, term());
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = next().kind == Tok::Minus ? -1 : 1;
            sum->children.emplace_back(sign, term());
        }
        return sum;
    }

    NodePtr term() {
        auto prod = make(Node::Product, peek().offset);
        prod->children.emplace_back(1, factor());
        while (peek().kind == Tok::Star || peek().kind == Tok::Dot) {
            next();
            prod->children.emplace_back(1, factor());
        }
        return prod;
    }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) throw ParseError(peek().offset, std::string("expected ") + what);
        next();
    }

    NodePtr factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                auto n = make(Node::Number, t.offset);
                n->text = next().text;
                return n;
            }
            case Tok::Ident: {
                Token id = next();
                if (peek().kind == Tok::LParen && (id.text == "exp" || id.text == "br")) {
                    next();
                    auto n = make(id.text == "exp" ? Node::Exp : Node::Br, id.offset);
                    n->children.emplace_back(1, element());
                    if (n->kind == Node::Br) {
                        expect(Tok::Comma, "','");
                        n->children.emplace_back(1, element());
                    }
                    expect(Tok::RParen, "')'");
                    return n;
                }
                auto n = make(Node::Gen, id.offset);
                n->text = id.text;
                return n;
            }
            case Tok::LParen: {
                next();
                NodePtr inner = element();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Bar: {
                if (!cyclic_) throw ParseError(t.offset, "cyclic bars are not allowed here");
                auto n = make(Node::Cyc, next().offset);
                n->children.emplace_back(1, element());
                expect(Tok::Bar, "closing '|'");
                return n;
            }
            case Tok::End: throw ParseError(t.offset, "unexpected end of input");
            default: throw ParseError(t.offset, "unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool cyclic_;
};

bool contains_cyclic(const Node& n) {
    if (n.kind == Node::Cyc) return true;
    for (const auto& [s, c] : n.children)
        if (contains_cyclic(*c)) return true;
    return false;
}

bool is_scalar(const Node& n) {
    if (n.kind == Node::Number) return true;
    if (n.kind == Node::Sum || n.kind == Node::Product) {
        for (const auto& [s, c] : n.children)
            if (!is_scalar(*c)) return false;
        return true;
    }
    return false;
}

TensorElement evaluate(const Node& n, const AlphabetPtr& alpha, int N) {
    switch (n.kind) {
        case Node::Number: return TensorElement::unit(alpha, N, Rational(n.text));
        case Node::Gen: {
            int idx = alpha->find(n.text);
            if (idx < 0) throw UnknownGenerator(n.offset, n.text);
            return TensorElement::letter(alpha, N, static_cast<Letter>(idx));
        }
        case Node::Sum: {
            TensorElement r(alpha, N);
            for (const auto& [s, c] : n.children) {
                TensorElement t = evaluate(*c, alpha, N);
                if (s < 0)
                    r -= t;
                else
                    r += t;
            }
            return r;
        }
        case Node::Product: {
            std::size_t non_scalar_cyclic = 0, non_scalar = 0;
            for (const auto& [s, c] : n.children) {
                if (is_scalar(*c)) continue;
                ++non_scalar;
                if (contains_cyclic(*c)) ++non_scalar_cyclic;
            }
            if (non_scalar_cyclic > 0 && non_scalar > 1)
                throw ParseError(n.offset, "cyclic words can only be scaled, not multiplied");
            TensorElement r = TensorElement::unit(alpha, N);
            for (const auto& [s, c] : n.children) r = product(r, evaluate(*c, alpha, N));
            return r;
        }
        case Node::Exp: return exp_truncated(evaluate(*n.children[0].second, alpha, N));
        case Node::Br:
            return lie_bracket(evaluate(*n.children[0].second, alpha, N), evaluate(*n.children[1].second, alpha, N));
        case Node::Cyc: return evaluate(*n.children[0].second, alpha, N);
    }
    throw std::logic_error("unreachable node kind");
}

}  // namespace

TensorElement parse_element(const std::string& src, const AlphabetPtr& alpha, int max_degree) {
    Parser p(src, false);
    NodePtr root = p.parse();
    return evaluate(*root, alpha, max_degree);
}

CyclicElement parse_cyclic(const std::string& src, const AlphabetPtr& alpha, int max_degree) {
    Parser p(src, true);
    NodePtr root = p.parse();
    return cyclic_project(evaluate(*root, alpha, max_degree));
}

}  // namespace gt
