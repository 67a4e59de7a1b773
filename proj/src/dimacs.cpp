#include "domsat/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace domsat {

namespace {

struct Token {
    std::string_view text;
    int line;
    int column;
    bool eof;
};

// Whitespace-delimited tokenizer that tracks line/column for diagnostics and
// can discard the rest of a comment line.
class Scanner {
  public:
    explicit Scanner(std::string_view text) : text_(text) {}

    Token next() {
        skip_whitespace();
        if (pos_ >= text_.size())
            return {{}, line_, column_, true};
        const int line = line_;
        const int column = column_;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_]))
            advance();
        return {text_.substr(start, pos_ - start), line, column, false};
    }

    void skip_line() {
        while (pos_ < text_.size() && text_[pos_] != '\n')
            advance();
    }

  private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_whitespace() {
        while (pos_ < text_.size() && is_space(text_[pos_]))
            advance();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

bool parse_int(std::string_view token, long& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

DimacsParseResult fail(int line, int column, ParseErrorKind kind, std::string message) {
    DimacsParseResult result;
    result.error = ParseError{line, column, kind, std::move(message)};
    return result;
}

} // namespace

DimacsParseResult parse_dimacs(std::string_view text) {
    Scanner scanner(text);

    CnfFormula formula;
    bool have_header = false;
    long declared_clauses = 0;
    long clauses_read = 0; // counts clause records, including dropped tautologies

    std::vector<Lit> current;
    bool in_clause = false;

    for (;;) {
        Token tok = scanner.next();
        if (tok.eof) {
            if (in_clause)
                return fail(tok.line, tok.column, ParseErrorKind::Truncated,
                            "input ended inside a clause (missing terminating 0)");
            break;
        }

        if (tok.text.front() == 'c' && !in_clause) {
            scanner.skip_line();
            continue;
        }

        if (tok.text == "p") {
            if (have_header)
                return fail(tok.line, tok.column, ParseErrorKind::BadHeader,
                            "duplicate problem line");
            if (in_clause)
                return fail(tok.line, tok.column, ParseErrorKind::BadHeader,
                            "problem line inside a clause");
            Token fmt = scanner.next();
            if (fmt.eof || fmt.text != "cnf")
                return fail(fmt.line, fmt.column, ParseErrorKind::BadHeader,
                            "expected 'cnf' after 'p'");
            Token vars_tok = scanner.next();
            long vars = 0;
            if (vars_tok.eof || !parse_int(vars_tok.text, vars) || vars < 0)
                return fail(vars_tok.line, vars_tok.column, ParseErrorKind::BadHeader,
                            "expected nonnegative variable count");
            Token clauses_tok = scanner.next();
            if (clauses_tok.eof || !parse_int(clauses_tok.text, declared_clauses) ||
                declared_clauses < 0)
                return fail(clauses_tok.line, clauses_tok.column, ParseErrorKind::BadHeader,
                            "expected nonnegative clause count");
            formula.num_vars = static_cast<int>(vars);
            have_header = true;
            continue;
        }

        long value = 0;
        if (!parse_int(tok.text, value))
            return fail(tok.line, tok.column, ParseErrorKind::BadToken,
                        "expected integer literal, got '" + std::string(tok.text) + "'");
        if (!have_header)
            return fail(tok.line, tok.column, ParseErrorKind::BadHeader,
                        "clause data before 'p cnf' header");

        if (value == 0) {
            ++clauses_read;
            if (auto normalized = CnfFormula::normalize_clause(std::move(current)))
                formula.clauses.push_back(std::move(*normalized));
            current.clear();
            in_clause = false;
            continue;
        }

        const long var = value > 0 ? value : -value;
        if (var > formula.num_vars)
            return fail(tok.line, tok.column, ParseErrorKind::VarOutOfRange,
                        "variable " + std::to_string(var) + " exceeds declared count " +
                                std::to_string(formula.num_vars));
        current.push_back(Lit::from_dimacs(static_cast<int>(value)));
        in_clause = true;
    }

    if (!have_header)
        return fail(1, 1, ParseErrorKind::BadHeader, "missing 'p cnf' header");

    DimacsParseResult result;
    result.clause_count_mismatch = clauses_read != declared_clauses;
    result.formula = std::move(formula);
    return result;
}

DimacsParseResult parse_dimacs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return fail(0, 0, ParseErrorKind::BadHeader, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    return parse_dimacs(text);
}

std::string write_dimacs(const CnfFormula& formula) {
    std::ostringstream out;
    write_dimacs(out, formula);
    return out.str();
}

void write_dimacs(std::ostream& out, const CnfFormula& formula) {
    out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
    for (const auto& clause : formula.clauses) {
        for (Lit l : clause)
            out << l.to_dimacs() << ' ';
        out << "0\n";
    }
}

} // namespace domsat
