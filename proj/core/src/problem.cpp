/*
   Copyright 2026 The minreal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "minreal/problem.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "minreal/jnf.hpp"
#include "minreal/mcmillan.hpp"
#include "minreal/realize.hpp"
#include "minreal/verify.hpp"

namespace minreal {

namespace {

// ------------------------------------------------------------- scanning ---

struct Token {
    enum class Type { word, integer, symbol, newline, end };
    Type type;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::vector<Token> scan(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    const auto push = [&](Token::Type type, std::string t, std::size_t c) {
        out.push_back({type, std::move(t), line, c});
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            push(Token::Type::newline, "\n", col);
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            push(Token::Type::integer, std::string(text.substr(i, j - i)), col);
            col += j - i;
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            push(Token::Type::word, std::string(text.substr(i, j - i)), col);
            col += j - i;
            i = j;
            continue;
        }
        if (std::string_view("[]=+-*/^()").find(c) != std::string_view::npos) {
            push(Token::Type::symbol, std::string(1, c), col);
            ++i;
            ++col;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({Token::Type::end, "", line, col});
    return out;
}

// -------------------------------------------------------------- parsing ---

class Parser {
  public:
    explicit Parser(std::string_view text) : tokens_(scan(text)) {}

    // The coefficient field becomes known after the header.
    ProblemFile run() {
        ProblemFile out = [&] {
            const Field field = parse_header();
            field_.emplace(field);
            const std::size_t rows = parse_count("rows");
            const std::size_t cols = parse_count("cols");
            return ProblemFile{field, rows, cols, RatMatrix(field, rows, cols), std::nullopt};
        }();
        parse_body(out);
        return out;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    const Token& expect(Token::Type type, const std::string& what) {
        const Token& t = advance();
        if (t.type != type) throw ParseError("expected " + what, t.line, t.col);
        return t;
    }

    void expect_symbol(char c) {
        const Token& t = advance();
        if (t.type != Token::Type::symbol || t.text[0] != c)
            throw ParseError(std::string("expected '") + c + "'", t.line, t.col);
    }

    bool eat_symbol(char c) {
        if (peek().type == Token::Type::symbol && peek().text[0] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_word(const std::string& w) {
        const Token& t = advance();
        if (t.type != Token::Type::word || t.text != w)
            throw ParseError("expected '" + w + "'", t.line, t.col);
    }

    void end_of_line() {
        const Token& t = advance();
        if (t.type == Token::Type::end) return;
        if (t.type != Token::Type::newline) throw ParseError("expected end of line", t.line, t.col);
    }

    void skip_newlines() {
        while (peek().type == Token::Type::newline) ++pos_;
    }

    std::size_t parse_integer_index(const std::string& what) {
        const Token& t = expect(Token::Type::integer, what);
        if (t.text.size() > 9) throw ParseError(what + " is out of range", t.line, t.col);
        return static_cast<std::size_t>(std::stoull(t.text));
    }

    Field parse_header() {
        skip_newlines();
        expect_word("field");
        const Token& kind = expect(Token::Type::word, "'gf' or 'q'");
        if (kind.text == "q") {
            end_of_line();
            return Field::rationals();
        }
        if (kind.text != "gf") throw ParseError("expected 'gf' or 'q'", kind.line, kind.col);
        const Token& modulus = expect(Token::Type::integer, "a prime modulus");
        if (modulus.text.size() > 10) throw ParseError("modulus is out of range", modulus.line, modulus.col);
        end_of_line();
        try {
            return Field::gf(std::stoull(modulus.text));
        } catch (const UsageError& e) {
            throw ParseError(e.what(), modulus.line, modulus.col);
        }
    }

    std::size_t parse_count(const std::string& keyword) {
        skip_newlines();
        expect_word(keyword);
        const std::size_t n = parse_integer_index(keyword);
        end_of_line();
        return n;
    }

    template <class Assign>
    void parse_entry(char name, std::size_t rows, std::size_t cols,
                     std::set<std::tuple<char, std::size_t, std::size_t>>& seen, Assign assign) {
        const Token& open = peek();
        expect_symbol('[');
        const std::size_t i = parse_integer_index("row index");
        expect_symbol(']');
        expect_symbol('[');
        const std::size_t j = parse_integer_index("column index");
        expect_symbol(']');
        expect_symbol('=');
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw ParseError(std::string(1, name) + " index out of range", open.line, open.col);
        if (!seen.insert({name, i, j}).second)
            throw ParseError(std::string("duplicate entry ") + name + "[" + std::to_string(i) + "][" +
                                 std::to_string(j) + "]",
                             open.line, open.col);
        RatFun value = parse_ratexpr();
        end_of_line();
        assign(i - 1, j - 1, std::move(value));
    }

    RatFun parse_ratexpr() {
        const Token& start = peek();
        Poly num = parse_polyexpr();
        if (eat_symbol('/')) {
            Poly den = parse_polyexpr();
            if (den.is_zero()) throw ParseError("zero denominator", start.line, start.col);
            return RatFun(std::move(num), std::move(den));
        }
        return RatFun::of_poly(std::move(num));
    }

    Poly parse_polyexpr() {
        Poly acc = parse_term();
        while (true) {
            if (eat_symbol('+'))
                acc += parse_term();
            else if (eat_symbol('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (eat_symbol('*')) acc = acc * parse_factor();
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (eat_symbol('^')) {
            const Token& e = expect(Token::Type::integer, "an exponent");
            if (e.text.size() > 4) throw ParseError("exponent is out of range", e.line, e.col);
            return base.pow(static_cast<unsigned>(std::stoul(e.text)));
        }
        return base;
    }

    Poly parse_base() {
        const Token& t = advance();
        if (t.type == Token::Type::integer)
            return Poly::constant(FieldElement::from_integer(*field_, mpz_class(t.text)));
        if (t.type == Token::Type::word && t.text == "s") return Poly::variable(*field_);
        if (t.type == Token::Type::symbol && t.text[0] == '(') {
            Poly inner = parse_polyexpr();
            expect_symbol(')');
            return inner;
        }
        throw ParseError("expected an integer, 's', or '('", t.line, t.col);
    }

    void parse_body(ProblemFile& out) {
        std::set<std::tuple<char, std::size_t, std::size_t>> seen;
        while (true) {
            skip_newlines();
            if (peek().type == Token::Type::end) break;
            const Token word = expect(Token::Type::word, "an entry name or 'states'");
            if (word.text == "T") {
                if (out.payload) throw ParseError("T entry after the states section", word.line, word.col);
                parse_entry('T', out.T.rows(), out.T.cols(), seen,
                            [&](std::size_t i, std::size_t j, RatFun value) { out.T.at(i, j) = std::move(value); });
            } else if (word.text == "states") {
                if (out.payload) throw ParseError("duplicate states section", word.line, word.col);
                const std::size_t states = parse_integer_index("state count");
                end_of_line();
                out.payload = VerifyPayload{states, Matrix(out.field, states, states),
                                            Matrix(out.field, states, out.cols), Matrix(out.field, out.rows, states)};
            } else if (word.text == "F" || word.text == "G" || word.text == "H") {
                if (!out.payload)
                    throw ParseError("'" + word.text + "' entries require a states section first", word.line,
                                     word.col);
                Matrix& target = word.text == "F" ? out.payload->F
                                : word.text == "G" ? out.payload->G
                                                   : out.payload->H;
                const Token at = word;
                parse_entry(word.text[0], target.rows(), target.cols(), seen,
                            [&](std::size_t i, std::size_t j, RatFun value) {
                                if (!value.is_polynomial() || !value.num().is_constant())
                                    throw ParseError("state-space entries must be scalars", at.line, at.col);
                                target.at(i, j) = value.num().coeff(0);
                            });
            } else {
                throw ParseError("unexpected word '" + word.text + "'", word.line, word.col);
            }
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::optional<Field> field_;
};

}  // namespace

ProblemFile parse_problem(std::string_view text) { return Parser(text).run(); }

std::string format_problem(const RatMatrix& T) {
    std::ostringstream out;
    out << "field " << T.field().name() << "\n";
    out << "rows " << T.rows() << "\n";
    out << "cols " << T.cols() << "\n";
    for (std::size_t i = 0; i < T.rows(); ++i)
        for (std::size_t j = 0; j < T.cols(); ++j) {
            if (T.at(i, j).is_zero()) continue;
            out << "T[" << i + 1 << "][" << j + 1 << "] = " << T.at(i, j).str() << "\n";
        }
    return out.str();
}

// -------------------------------------------------------------- reports ---

namespace {

using nlohmann::json;

std::string block_list(const std::vector<std::pair<Poly, unsigned>>& blocks) {
    std::string out;
    for (const auto& [p, k] : blocks) {
        if (!out.empty()) out += ", ";
        out += "(" + p.str() + ")^" + std::to_string(k);
    }
    return out.empty() ? "none" : out;
}

json blocks_json(const std::vector<std::pair<Poly, unsigned>>& blocks) {
    json out = json::array();
    for (const auto& [p, k] : blocks) out.push_back(json::array({p.str(), k}));
    return out;
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.field().is_prime_field())
                row.push_back(m.at(i, j).residue());
            else
                row.push_back(m.at(i, j).str());
        }
        out.push_back(std::move(row));
    }
    return out;
}

json polymatrix_json(const PolyMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        out.push_back(std::move(row));
    }
    return out;
}

void print_matrix(std::ostringstream& out, const std::string& name, const Matrix& m) {
    out << name << ": (" << m.rows() << "x" << m.cols() << ")\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << " ";
        for (std::size_t j = 0; j < m.cols(); ++j) out << " " << m.at(i, j).str();
        out << "\n";
    }
}

void print_polymatrix(std::ostringstream& out, const std::string& name, const PolyMatrix& m) {
    out << name << ": (" << m.rows() << "x" << m.cols() << ")\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << " ";
        for (std::size_t j = 0; j < m.cols(); ++j) out << " " << m.at(i, j).str();
        out << "\n";
    }
}

RunResult run_realize(const ProblemFile& problem, const RunOptions& options) {
    if (!problem.T.is_strictly_proper())
        throw UsageError("realize requires a strictly proper matrix; apply the strictly proper projection first");
    const Realization r = realize_full(problem.T, options.seed);
    if (!(transfer_of(r) == problem.T))
        throw InternalError("realization does not reproduce the transfer matrix");
    if (!minimality(r).minimal) throw InternalError("realization is not minimal");

    if (options.json) {
        json doc;
        doc["field"] = problem.field.name();
        doc["dimension"] = r.dim();
        doc["blocks"] = blocks_json(r.blocks);
        doc["F"] = matrix_json(r.F);
        doc["G"] = matrix_json(r.G);
        doc["H"] = matrix_json(r.H);
        return {0, doc.dump(2) + "\n"};
    }
    std::ostringstream out;
    out << "field: " << problem.field.name() << "\n";
    out << "dimension: " << r.dim() << "\n";
    out << "blocks: " << block_list(r.blocks) << "\n";
    print_matrix(out, "F", r.F);
    print_matrix(out, "G", r.G);
    print_matrix(out, "H", r.H);
    out << "transfer check: PASS\n";
    out << "minimality: PASS\n";
    return {0, out.str()};
}

Matrix scalar_matrix_of(const ProblemFile& problem) {
    if (problem.rows != problem.cols) throw UsageError("this command requires a square matrix");
    Matrix a(problem.field, problem.rows, problem.cols);
    for (std::size_t i = 0; i < problem.rows; ++i)
        for (std::size_t j = 0; j < problem.cols; ++j) {
            const RatFun& e = problem.T.at(i, j);
            if (!e.is_polynomial() || !e.num().is_constant())
                throw UsageError("this command requires scalar entries");
            a.at(i, j) = e.num().coeff(0);
        }
    return a;
}

RunResult run_jnf(const ProblemFile& problem, const RunOptions& options) {
    const Matrix a = scalar_matrix_of(problem);
    const JacobsonForm jf = jacobson_normal_form(a, options.seed);
    if (options.json) {
        json doc;
        doc["field"] = problem.field.name();
        doc["dimension"] = a.rows();
        doc["elementary_divisors"] = blocks_json(jf.divisors);
        doc["J"] = matrix_json(jf.J);
        doc["S"] = matrix_json(jf.S);
        return {0, doc.dump(2) + "\n"};
    }
    std::ostringstream out;
    out << "field: " << problem.field.name() << "\n";
    out << "dimension: " << a.rows() << "\n";
    out << "elementary divisors: " << block_list(jf.divisors) << "\n";
    print_matrix(out, "J", jf.J);
    print_matrix(out, "S", jf.S);
    out << "similarity check: PASS\n";
    return {0, out.str()};
}

RunResult run_smf(const ProblemFile& problem, const RunOptions& options) {
    if (!problem.T.is_strictly_proper())
        throw UsageError("smf requires a strictly proper matrix; apply the strictly proper projection first");
    const auto components = partial_fractions(problem.T, options.seed);
    if (options.json) {
        json doc;
        doc["field"] = problem.field.name();
        doc["components"] = json::array();
        for (const auto& component : components) {
            const SmithMcMillan sm = smith_mcmillan(component);
            json c;
            c["prime"] = sm.prime.str();
            c["rank"] = sm.rank;
            c["numerators"] = json::array();
            for (const Poly& a : sm.numerators) c["numerators"].push_back(a.str());
            c["exponents"] = sm.exponents;
            c["U"] = polymatrix_json(sm.U);
            c["V"] = polymatrix_json(sm.V);
            doc["components"].push_back(std::move(c));
        }
        return {0, doc.dump(2) + "\n"};
    }
    std::ostringstream out;
    out << "field: " << problem.field.name() << "\n";
    out << "components: " << components.size() << "\n";
    for (const auto& component : components) {
        const SmithMcMillan sm = smith_mcmillan(component);
        out << "prime: " << sm.prime.str() << "\n";
        out << "rank: " << sm.rank << "\n";
        out << "Sigma:";
        const RatMatrix sigma = sm.sigma();
        const std::size_t diag = std::min(sigma.rows(), sigma.cols());
        for (std::size_t i = 0; i < diag; ++i) out << " " << sigma.at(i, i).str();
        out << "\n";
        print_polymatrix(out, "U", sm.U);
        print_polymatrix(out, "V", sm.V);
    }
    return {0, out.str()};
}

RunResult run_verify(const ProblemFile& problem, const RunOptions& options) {
    (void)options;
    if (!problem.payload) throw UsageError("verify requires a states section with F, G, H entries");
    const VerifyPayload& p = *problem.payload;
    const Realization r{problem.field, p.F, p.G, p.H, {}};
    const bool transfer_ok = transfer_of(r) == problem.T;
    const MinimalityReport mm = minimality(r);
    const bool pass = transfer_ok && mm.minimal;
    if (options.json) {
        json doc;
        doc["field"] = problem.field.name();
        doc["dimension"] = r.dim();
        doc["transfer_check"] = transfer_ok ? "PASS" : "FAIL";
        doc["minimality"] = mm.minimal ? "PASS" : "FAIL";
        doc["controllability_rank"] = mm.controllability_rank;
        doc["observability_rank"] = mm.observability_rank;
        return {pass ? 0 : 2, doc.dump(2) + "\n"};
    }
    std::ostringstream out;
    out << "field: " << problem.field.name() << "\n";
    out << "dimension: " << r.dim() << "\n";
    out << "transfer check: " << (transfer_ok ? "PASS" : "FAIL") << "\n";
    out << "minimality: " << (mm.minimal ? "PASS" : "FAIL") << " (controllability rank "
        << mm.controllability_rank << ", observability rank " << mm.observability_rank << ")\n";
    return {pass ? 0 : 2, out.str()};
}

}  // namespace

RunResult run_command(Command command, const ProblemFile& problem, const RunOptions& options) {
    switch (command) {
        case Command::realize:
            return run_realize(problem, options);
        case Command::jnf:
            return run_jnf(problem, options);
        case Command::smf:
            return run_smf(problem, options);
        case Command::verify:
            return run_verify(problem, options);
    }
    throw UsageError("unknown command");
}

}  // namespace minreal
