#include "kleinian/words.hpp"

#include <cctype>

#include "kleinian/errors.hpp"

namespace kleinian {

namespace {

WordPtr make(WordExpr e) { return std::make_shared<const WordExpr>(std::move(e)); }

}  // namespace

WordPtr word_name(std::string name) {
    WordExpr e;
    e.kind = WordExpr::Kind::Name;
    e.name = std::move(name);
    return make(std::move(e));
}

WordPtr word_literal(Matrix m) {
    WordExpr e;
    e.kind = WordExpr::Kind::Literal;
    e.lit = std::make_shared<Matrix>(std::move(m));
    return make(std::move(e));
}

WordPtr word_product(std::vector<WordPtr> factors) {
    if (factors.size() == 1) return factors.front();
    WordExpr e;
    e.kind = WordExpr::Kind::Product;
    e.factors = std::move(factors);
    return make(std::move(e));
}

WordPtr word_power(WordPtr base, long exponent) {
    WordExpr e;
    e.kind = WordExpr::Kind::Power;
    e.base = std::move(base);
    e.exponent = exponent;
    return make(std::move(e));
}

WordPtr word_conj(WordPtr outer, WordPtr inner) {
    WordExpr e;
    e.kind = WordExpr::Kind::Conj;
    e.outer = std::move(outer);
    e.base = std::move(inner);
    return make(std::move(e));
}

WordPtr word_bar(WordPtr inner) {
    WordExpr e;
    e.kind = WordExpr::Kind::Bar;
    e.base = std::move(inner);
    return make(std::move(e));
}

namespace {

struct WordParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char ch) {
        skip_ws();
        return pos < text.size() && text[pos] == ch;
    }

    void expect(char ch) {
        skip_ws();
        if (pos >= text.size() || text[pos] != ch)
            throw ParseError(std::string("expected '") + ch + "'", pos);
        ++pos;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected a name", pos);
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected an integer exponent", pos);
        if (digits > 9) throw ParseError("exponent too large", start);
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    WordPtr expr() {
        std::vector<WordPtr> factors{term()};
        while (peek('*')) {
            ++pos;
            factors.push_back(term());
        }
        return word_product(std::move(factors));
    }

    WordPtr term() {
        WordPtr base = atom();
        if (peek('^')) {
            ++pos;
            return word_power(std::move(base), integer());
        }
        return base;
    }

    WordPtr atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        if (text[pos] == '(') {
            ++pos;
            WordPtr inner = expr();
            expect(')');
            return inner;
        }
        std::string name = identifier();
        if (name == "Conj") {
            expect('(');
            WordPtr outer = expr();
            expect(',');
            WordPtr inner = expr();
            expect(')');
            return word_conj(std::move(outer), std::move(inner));
        }
        if (name == "Bar") {
            expect('(');
            WordPtr inner = expr();
            expect(')');
            return word_bar(std::move(inner));
        }
        return word_name(std::move(name));
    }
};

}  // namespace

WordPtr parse_word(std::string_view text) {
    WordParser p{text};
    WordPtr w = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input after word", p.pos);
    return w;
}

void Namespace::define(const std::string& name, Matrix m, bool projective) {
    entries_.insert_or_assign(name, Entry{std::move(m), projective});
}

const Matrix& Namespace::lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw UnknownName(name);
    return it->second.matrix;
}

bool Namespace::is_projective(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw UnknownName(name);
    return it->second.projective;
}

std::vector<std::string> Namespace::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

Matrix evaluate(const WordExpr& expr, const Namespace& ns) {
    switch (expr.kind) {
        case WordExpr::Kind::Name:
            return ns.lookup(expr.name);
        case WordExpr::Kind::Literal:
            return *expr.lit;
        case WordExpr::Kind::Product: {
            Matrix acc = Matrix::identity();
            for (const auto& f : expr.factors) acc = acc * evaluate(*f, ns);
            return acc;
        }
        case WordExpr::Kind::Power:
            return evaluate(*expr.base, ns).pow(expr.exponent);
        case WordExpr::Kind::Conj: {
            Matrix g = evaluate(*expr.outer, ns);
            return evaluate(*expr.base, ns).conjugated_by(g);
        }
        case WordExpr::Kind::Bar:
            return evaluate(*expr.base, ns).complex_conjugate();
    }
    throw Error("corrupt word expression");
}

Matrix evaluate_word(std::string_view word, const Namespace& ns) {
    return evaluate(*parse_word(word), ns);
}

}  // namespace kleinian
