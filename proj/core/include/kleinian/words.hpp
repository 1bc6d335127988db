#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "kleinian/moebius.hpp"

namespace kleinian {

// Abstract syntax for words over named generators.
//
// Grammar:  expr := term {"*" term}
//           term := atom ["^" integer]
//           atom := name | "(" expr ")" | "Conj(" expr "," expr ")" | "Bar(" expr ")"
//
// Conventions fixed once for the whole project:
//   Conj(g, x) = g * x * g^-1      (exponent notation x^g elsewhere means this)
//   Bar(x)     = entrywise complex conjugation
struct WordExpr;
using WordPtr = std::shared_ptr<const WordExpr>;

struct WordExpr {
    enum class Kind { Name, Literal, Product, Power, Conj, Bar };

    Kind kind;
    std::string name;             // Kind::Name
    std::shared_ptr<Matrix> lit;  // Kind::Literal
    std::vector<WordPtr> factors; // Kind::Product
    WordPtr base;                 // Power / Bar / Conj (inner)
    WordPtr outer;                // Conj
    long exponent = 1;            // Power
};

WordPtr word_name(std::string name);
WordPtr word_literal(Matrix m);
WordPtr word_product(std::vector<WordPtr> factors);
WordPtr word_power(WordPtr base, long exponent);
WordPtr word_conj(WordPtr outer, WordPtr inner);
WordPtr word_bar(WordPtr inner);

// Recursive-descent parser for the grammar above. Names are case-sensitive
// identifiers [A-Za-z][A-Za-z0-9_]*. Throws ParseError with the position.
WordPtr parse_word(std::string_view text);

// A generator table. Entries flagged `projective` are GL2(K) representatives
// (determinant 5, -5 or 3) standing in for conjugators whose honest entries
// live outside K; conjugation only sees their projective class.
class Namespace {
public:
    explicit Namespace(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void define(const std::string& name, Matrix m, bool projective = false);
    bool has(const std::string& name) const { return entries_.count(name) != 0; }
    const Matrix& lookup(const std::string& name) const;  // throws UnknownName
    bool is_projective(const std::string& name) const;
    std::vector<std::string> names() const;  // sorted

private:
    struct Entry {
        Matrix matrix;
        bool projective;
    };
    std::string name_;
    std::map<std::string, Entry> entries_;
};

// Exact evaluation. Throws UnknownName / DomainError as appropriate.
Matrix evaluate(const WordExpr& expr, const Namespace& ns);
Matrix evaluate_word(std::string_view word, const Namespace& ns);  // parse + evaluate

}  // namespace kleinian
