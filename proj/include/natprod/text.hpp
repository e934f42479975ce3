#pragma once

/**
 * @file text.hpp
 * @brief Text literals for matrices, super matrices and polynomials.
 *
 * Matrix:      [a b c ; d e f]
 * SuperMatrix: [a b | c ; -- ; d e | f]   ("|" column cut, "--" row cut)
 * MatPoly:     [..] + [..] * x + [..] * x^3 - [..] * x^5
 *
 * Whitespace (including newlines) separates tokens and '#' starts a comment
 * that runs to the end of the line.
 */

#include <natprod/matpoly.hpp>

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace natprod {

namespace detail {

struct Token {
    enum Kind { Open, Close, Semi, Bar, Dash2, Word, Plus, Minus, Star, Caret, End } kind;
    std::string text;
    std::size_t line = 1;
    std::size_t col = 1;
};

class Lexer {
public:
    /// In polynomial mode '+', '-', '*' and '^' outside brackets are operators.
    Lexer(std::string_view src, bool poly_mode) : src_(src), poly_(poly_mode) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] static void error(const Token& t, const std::string& msg) {
        throw Error(ErrorKind::ParseError, msg, t.line, t.col);
    }

    Token expect(Token::Kind k, const char* what) {
        if (tok_.kind != k) error(tok_, std::string("expected ") + what + (tok_.kind == Token::End ? " before end of input" : ", found '" + tok_.text + "'"));
        return take();
    }

private:
    static bool is_delim(char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '[' || c == ']' || c == ';' || c == '|' || c == '#';
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance() {
        for (;;) {
            while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
            if (pos_ < src_.size() && src_[pos_] == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
                continue;
            }
            break;
        }
        tok_ = Token{Token::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        const char c = src_[pos_];
        auto single = [&](Token::Kind k) {
            tok_.kind = k;
            tok_.text = std::string(1, c);
            bump();
            if (k == Token::Open) ++depth_;
            if (k == Token::Close && depth_ > 0) --depth_;
        };
        switch (c) {
        case '[': return single(Token::Open);
        case ']': return single(Token::Close);
        case ';': return single(Token::Semi);
        case '|': return single(Token::Bar);
        default: break;
        }
        if (poly_ && depth_ == 0) {
            switch (c) {
            case '+': return single(Token::Plus);
            case '-': return single(Token::Minus);
            case '*': return single(Token::Star);
            case '^': return single(Token::Caret);
            default: break;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
                tok_.kind = Token::Word;
                tok_.text = std::string(src_.substr(start, pos_ - start));
                return;
            }
            if (c == 'x') return single(Token::Word);
        }
        const std::size_t start = pos_;
        while (pos_ < src_.size() && !is_delim(src_[pos_])) bump();
        if (pos_ == start) bump();
        tok_.text = std::string(src_.substr(start, pos_ - start));
        tok_.kind = tok_.text == "--" ? Token::Dash2 : Token::Word;
    }

    std::string_view src_;
    bool poly_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    int depth_ = 0;
    Token tok_{Token::End, "", 1, 1};
};

inline SuperMatrix parse_super_from(Lexer& lx, DomainTag d) {
    const Token open = lx.expect(Token::Open, "'['");
    std::vector<std::vector<Scalar>> rows;
    std::set<std::size_t> row_cuts;
    std::optional<std::set<std::size_t>> col_cuts;
    std::vector<Token> row_starts;

    for (;;) {
        // one row, or a "--" pseudo-row
        const Token first = lx.peek();
        if (first.kind == Token::Dash2) {
            lx.take();
            if (rows.empty()) Lexer::error(first, "row cut before the first row");
            if (!row_cuts.insert(rows.size()).second) Lexer::error(first, "repeated row cut");
        } else {
            std::vector<Scalar> row;
            std::set<std::size_t> cuts;
            bool last_was_bar = false;
            while (lx.peek().kind == Token::Word || lx.peek().kind == Token::Bar) {
                const Token t = lx.take();
                if (t.kind == Token::Bar) {
                    if (row.empty() || last_was_bar) Lexer::error(t, "'|' must sit between two entries");
                    cuts.insert(row.size());
                    last_was_bar = true;
                    continue;
                }
                last_was_bar = false;
                try {
                    row.push_back(parse_scalar(t.text, d));
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::ParseError) Lexer::error(t, "bad entry '" + t.text + "'");
                    throw Error(e.kind(), std::string(e.what()), t.line, t.col);
                }
            }
            if (last_was_bar) Lexer::error(lx.peek(), "'|' must sit between two entries");
            if (row.empty()) {
                // tolerate a trailing ';' before ']'
                if (!(lx.peek().kind == Token::Close && !rows.empty())) Lexer::error(lx.peek(), "empty row");
            } else {
                if (!rows.empty() && row.size() != rows.front().size())
                    Lexer::error(first, "row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                                            " entries, expected " + std::to_string(rows.front().size()));
                if (!col_cuts)
                    col_cuts = cuts;
                else if (*col_cuts != cuts)
                    throw Error(ErrorKind::RaggedCuts, "column cuts of row " + std::to_string(rows.size() + 1) +
                                                           " differ from row 1", first.line, first.col);
                rows.push_back(std::move(row));
                row_starts.push_back(first);
            }
        }
        if (lx.peek().kind == Token::Semi) {
            lx.take();
            continue;
        }
        lx.expect(Token::Close, "';' or ']'");
        break;
    }
    if (rows.empty()) Lexer::error(open, "empty matrix");
    if (!row_cuts.empty() && *row_cuts.rbegin() >= rows.size()) Lexer::error(open, "row cut after the last row");
    const Shape s{rows.size(), rows.front().size()};
    std::vector<Scalar> e;
    e.reserve(s.size());
    for (auto& r : rows)
        for (auto& x : r) e.push_back(std::move(x));
    return SuperMatrix(Matrix(s, d, std::move(e)), PartitionType(s, row_cuts, *col_cuts));
}

inline void expect_end(Lexer& lx) {
    if (lx.peek().kind != Token::End) Lexer::error(lx.peek(), "unexpected '" + lx.peek().text + "' after literal");
}

} // namespace detail

inline SuperMatrix parse_super(std::string_view text, DomainTag d = DomainTag::rationals()) {
    detail::Lexer lx(text, false);
    SuperMatrix s = detail::parse_super_from(lx, d);
    detail::expect_end(lx);
    return s;
}

/// Plain matrix literal; cut markers are rejected.
inline Matrix parse_matrix(std::string_view text, DomainTag d = DomainTag::rationals()) {
    SuperMatrix s = parse_super(text, d);
    if (!s.ptype().trivial()) throw Error(ErrorKind::ParseError, "partition markers in a plain matrix literal", 1, 1);
    return s.base();
}

inline std::string render_super(const SuperMatrix& s) {
    const Matrix& m = s.base();
    const auto& rc = s.ptype().row_cuts();
    const auto& cc = s.ptype().col_cuts();
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0) out += rc.count(r) ? ";--;" : ";";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out += cc.count(c) ? " | " : " ";
            out += m.at(r, c).to_string();
        }
    }
    return out + "]";
}

inline std::string render_matrix(const Matrix& m) { return render_super(SuperMatrix(m)); }

inline std::string render_mask(const SupportMask& mask) {
    std::string out = "[";
    for (std::size_t r = 0; r < mask.shape().rows; ++r) {
        if (r > 0) out += ";";
        for (std::size_t c = 0; c < mask.shape().cols; ++c) {
            if (c > 0) out += " ";
            out += mask.test(r, c) ? "1" : "0";
        }
    }
    return out + "]";
}

/// COEFF * x^K terms joined by '+' or '-'. A bare coefficient is degree 0 and
/// "* x" is degree 1. All coefficients must share one partition.
inline MatPoly parse_poly(std::string_view text, DomainTag d = DomainTag::rationals()) {
    using detail::Token;
    detail::Lexer lx(text, true);
    std::optional<MatPoly> p;
    bool negate = false;
    if (lx.peek().kind == Token::Minus) {
        lx.take();
        negate = true;
    } else if (lx.peek().kind == Token::Plus) {
        lx.take();
    }
    for (;;) {
        const Token at = lx.peek();
        SuperMatrix c = detail::parse_super_from(lx, d);
        std::size_t deg = 0;
        if (lx.peek().kind == Token::Star) {
            lx.take();
            const Token x = lx.expect(Token::Word, "'x'");
            if (x.text != "x") detail::Lexer::error(x, "expected 'x', found '" + x.text + "'");
            deg = 1;
            if (lx.peek().kind == Token::Caret) {
                lx.take();
                const Token k = lx.expect(Token::Word, "an exponent");
                if (k.text.empty() || k.text.size() > 9 || k.text.find_first_not_of("0123456789") != std::string::npos)
                    detail::Lexer::error(k, "bad exponent '" + k.text + "'");
                deg = std::stoul(k.text);
            }
        }
        std::optional<PartitionType> pt;
        if (!c.ptype().trivial()) pt = c.ptype();
        if (!p) {
            p = MatPoly(c.shape(), d, pt);
        } else {
            if (c.shape() != p->shape())
                throw Error(ErrorKind::ShapeMismatch, "coefficient " + c.shape().to_string() + " in a " + p->shape().to_string() + " polynomial", at.line, at.col);
            if (c.ptype() != p->effective_ptype())
                throw Error(ErrorKind::TypeMismatch, "coefficients carry different partitions", at.line, at.col);
        }
        p->add_term(deg, negate ? mat_neg(c.base()) : c.base());
        if (lx.peek().kind == Token::Plus || lx.peek().kind == Token::Minus) {
            negate = lx.take().kind == Token::Minus;
            continue;
        }
        break;
    }
    detail::expect_end(lx);
    return *p;
}

/// Ascending degree; the zero polynomial renders as its zero constant.
inline std::string render_poly(const MatPoly& p) {
    const PartitionType pt = p.effective_ptype();
    if (p.is_zero()) return render_super(SuperMatrix(Matrix::zero(p.shape(), p.domain()), pt));
    std::string out;
    for (const auto& [k, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += render_super(SuperMatrix(c, pt));
        if (k == 1) out += " * x";
        if (k > 1) out += " * x^" + std::to_string(k);
    }
    return out;
}

} // namespace natprod
