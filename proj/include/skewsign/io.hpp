#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "skewsign/errors.hpp"
#include "skewsign/field.hpp"
#include "skewsign/matrix.hpp"
#include "skewsign/recognizer.hpp"

// Text formats.
//
// Matrix files:
//     # comment lines start with '#'; trailing comments are allowed too
//     field gf 5        # or: field q
//     size 4
//     0 -1 -1 0
//     ...
// Entries are integers (reduced into GF(p)) or fractions a/b (rationals
// only). Reading back a written matrix reproduces it exactly.
//
// Certificate files: two whitespace-separated lines of n entries each, row
// scalars then column scalars, same entry syntax as matrices.

namespace skewsign {

using AnyMatrix = std::variant<Matrix<Fp>, Matrix<Rational>>;

inline FieldSpec field_of(const AnyMatrix& m) {
    return std::visit([](const auto& mat) { return FieldSpec(mat.field()); }, m);
}

inline std::size_t rows_of(const AnyMatrix& m) {
    return std::visit([](const auto& mat) { return mat.rows(); }, m);
}

namespace detail {

struct Token {
    std::string text;
    std::size_t line; // 1-based
    std::size_t col;  // 1-based
};

inline std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> tokens;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t end = line.find('#');
        if (end == std::string::npos) end = line.size();
        std::size_t i = 0;
        while (i < end) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.push_back(Token{line.substr(start, i - start), line_no, start + 1});
        }
    }
    return tokens;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    bool done() const { return next_ >= tokens_.size(); }

    const Token& peek() const {
        if (done()) throw ParseError("unexpected end of input", last_line(), last_col());
        return tokens_[next_];
    }

    Token take(const char* what) {
        if (done()) {
            throw ParseError(std::string("expected ") + what + " before end of input",
                             last_line(), last_col());
        }
        return tokens_[next_++];
    }

    std::size_t last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }
    std::size_t last_col() const {
        return tokens_.empty() ? 1 : tokens_.back().col + tokens_.back().text.size();
    }

private:
    std::vector<Token> tokens_;
    std::size_t next_ = 0;
};

inline bool is_integer_literal(const std::string& s) {
    std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

inline Rational::BigInt parse_big_integer(const Token& tok, const std::string& text) {
    if (!is_integer_literal(text)) {
        throw ParseError("expected an integer, got '" + text + "'", tok.line, tok.col);
    }
    return Rational::BigInt(text);
}

template <ScalarType F>
F parse_entry(const Token& tok, const FieldSpec& f);

template <>
inline Fp parse_entry<Fp>(const Token& tok, const FieldSpec& f) {
    if (tok.text.find('/') != std::string::npos) {
        throw ParseError("fractions are only valid over the rationals", tok.line, tok.col);
    }
    Rational::BigInt v = parse_big_integer(tok, tok.text);
    Rational::BigInt p(f.prime());
    Rational::BigInt r = v % p;
    if (r < 0) r += p;
    return Fp(r.convert_to<long long>(), f);
}

template <>
inline Rational parse_entry<Rational>(const Token& tok, const FieldSpec&) {
    std::size_t slash = tok.text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_big_integer(tok, tok.text), Rational::BigInt(1));
    }
    Rational::BigInt num = parse_big_integer(tok, tok.text.substr(0, slash));
    Rational::BigInt den = parse_big_integer(tok, tok.text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator", tok.line, tok.col);
    return Rational(num, den);
}

inline FieldSpec parse_field_tokens(TokenStream& ts) {
    Token kind = ts.take("a field designator ('gf <p>' or 'q')");
    if (kind.text == "q") return FieldSpec::rationals();
    if (kind.text == "gf") {
        Token p = ts.take("a prime modulus after 'gf'");
        if (!is_integer_literal(p.text) || p.text[0] == '-') {
            throw ParseError("expected a prime modulus, got '" + p.text + "'", p.line, p.col);
        }
        try {
            return FieldSpec::gf(static_cast<std::uint32_t>(std::stoull(p.text)));
        } catch (const InvalidFieldError& e) {
            throw ParseError(e.what(), p.line, p.col);
        } catch (const std::out_of_range&) {
            throw ParseError("modulus out of range", p.line, p.col);
        }
    }
    throw ParseError("unknown field designator '" + kind.text + "'", kind.line, kind.col);
}

inline std::size_t parse_size(TokenStream& ts) {
    Token n = ts.take("'size <n>'");
    if (n.text != "size") throw ParseError("expected 'size', got '" + n.text + "'", n.line, n.col);
    Token v = ts.take("a matrix dimension");
    if (!is_integer_literal(v.text) || v.text[0] == '-') {
        throw ParseError("expected a nonnegative dimension, got '" + v.text + "'", v.line, v.col);
    }
    try {
        return std::stoull(v.text);
    } catch (const std::out_of_range&) {
        throw ParseError("dimension out of range", v.line, v.col);
    }
}

template <ScalarType F>
Matrix<F> parse_matrix_body(TokenStream& ts, const FieldSpec& f, std::size_t n) {
    Matrix<F> m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Token tok = ts.take("a matrix entry");
            m(i, j) = parse_entry<F>(tok, f);
        }
    }
    return m;
}

} // namespace detail

/// Parses the field designator used in files and CLI flags: "gf <p>" or "q".
inline FieldSpec parse_field_designator(const std::string& text) {
    std::istringstream in(text);
    detail::TokenStream ts(detail::tokenize(in));
    FieldSpec f = detail::parse_field_tokens(ts);
    if (!ts.done()) {
        const auto& t = ts.peek();
        throw ParseError("unexpected trailing content '" + t.text + "'", t.line, t.col);
    }
    return f;
}

inline AnyMatrix read_matrix(std::istream& in) {
    detail::TokenStream ts(detail::tokenize(in));
    detail::Token header = ts.take("'field <designator>'");
    if (header.text != "field") {
        throw ParseError("expected 'field', got '" + header.text + "'", header.line, header.col);
    }
    FieldSpec f = detail::parse_field_tokens(ts);
    std::size_t n = detail::parse_size(ts);
    AnyMatrix m = f.is_prime_field()
                      ? AnyMatrix(detail::parse_matrix_body<Fp>(ts, f, n))
                      : AnyMatrix(detail::parse_matrix_body<Rational>(ts, f, n));
    if (!ts.done()) {
        const auto& t = ts.peek();
        throw ParseError("unexpected trailing content '" + t.text + "'", t.line, t.col);
    }
    return m;
}

inline AnyMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_matrix(in);
}

template <ScalarType F>
void write_matrix(std::ostream& out, const Matrix<F>& m) {
    if (!m.is_square()) throw DimensionMismatchError("matrix files hold square matrices");
    out << "field " << m.field().to_string() << "\n";
    out << "size " << m.rows() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << m(i, j).to_string();
        }
        out << "\n";
    }
}

template <ScalarType F>
std::string matrix_to_text(const Matrix<F>& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

inline std::string matrix_to_text(const AnyMatrix& m) {
    return std::visit([](const auto& mat) { return matrix_to_text(mat); }, m);
}

/// Certificate file: row scalars then column scalars, n entries each.
template <ScalarType F>
ScalingCertificate<F> read_certificate(std::istream& in, const FieldSpec& f, std::size_t n) {
    detail::TokenStream ts(detail::tokenize(in));
    ScalingCertificate<F> cert;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        detail::Token tok = ts.take("a certificate entry");
        F value = detail::parse_entry<F>(tok, f);
        (i < n ? cert.row_scalars : cert.col_scalars).push_back(value);
    }
    if (!ts.done()) {
        const auto& t = ts.peek();
        throw ParseError("unexpected trailing content '" + t.text + "'", t.line, t.col);
    }
    return cert;
}

template <ScalarType F>
ScalingCertificate<F> read_certificate_file(const std::string& path, const FieldSpec& f,
                                            std::size_t n) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_certificate<F>(in, f, n);
}

inline void write_certificate(std::ostream& out, const SignCertificate& cert) {
    for (std::size_t i = 0; i < cert.row_signs.size(); ++i) {
        out << (i ? " " : "") << cert.row_signs[i];
    }
    out << "\n";
    for (std::size_t j = 0; j < cert.col_signs.size(); ++j) {
        out << (j ? " " : "") << cert.col_signs[j];
    }
    out << "\n";
}

template <ScalarType F>
void write_certificate(std::ostream& out, const ScalingCertificate<F>& cert) {
    for (std::size_t i = 0; i < cert.row_scalars.size(); ++i) {
        out << (i ? " " : "") << cert.row_scalars[i].to_string();
    }
    out << "\n";
    for (std::size_t j = 0; j < cert.col_scalars.size(); ++j) {
        out << (j ? " " : "") << cert.col_scalars[j].to_string();
    }
    out << "\n";
}

} // namespace skewsign
