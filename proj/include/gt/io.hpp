#pragma once

#include "gt/cyclic.hpp"

#include <json.hpp>

namespace gt {

struct ParseError : std::runtime_error {
    ParseError(std::size_t off, const std::string& msg)
        : std::runtime_error("syntax error at offset " + std::to_string(off) + ": " + msg), offset(off) {}
    std::size_t offset;
};

struct UnknownGenerator : std::runtime_error {
    UnknownGenerator(std::size_t off, const std::string& name)
        : std::runtime_error("unknown generator '" + name + "' at offset " + std::to_string(off)), offset(off) {}
    std::size_t offset;
};

std::string format_rational(const Rational& q);
std::string format_word(const Alphabet& alpha, const Word& w);  // "x1.y1", "1" for the empty word
std::string format_element(const TensorElement& a);                // "3/2*x1.y1 - z1", "0"
std::string format_cyclic(const CyclicElement& a);                 // "|x1.y1| - 2*|1|"
std::string format_square(const TensorSquare& a);                  // "(x1 (x) y1) - 1/2*(1 (x) z1)"
std::string format_cyclic_square(const CyclicSquare& a);           // "(|x1| (x) |1|)"

// output order: weighted degree, then word
bool degree_word_less(const Alphabet& alpha, const Word& a, const Word& b);

nlohmann::json to_json(const TensorElement& a);
nlohmann::json to_json(const CyclicElement& a);
nlohmann::json to_json(const TensorSquare& a);
nlohmann::json to_json(const CyclicSquare& a);
nlohmann::json word_to_json(const Alphabet& alpha, const Word& w);

TensorElement element_from_json(const nlohmann::json& j, const AlphabetPtr& alpha);
CyclicElement cyclic_from_json(const nlohmann::json& j, const AlphabetPtr& alpha);
Word word_from_json(const nlohmann::json& j, const Alphabet& alpha);

// element := term (('+'|'-') term)*
// term    := [rational '*'] factor (('*'|'.') factor)*
// factor  := generator | rational | '(' element ')' | 'exp(' element ')' | 'br(' element ',' element ')'
//          | '|' element '|'   (cyclic parsing only)
TensorElement parse_element(const std::string& src, const AlphabetPtr& alpha, int max_degree);
CyclicElement parse_cyclic(const std::string& src, const AlphabetPtr& alpha, int max_degree);

}  // namespace gt
