#include "skewcyclic/textio.hpp"

#include <cctype>
#include <sstream>

namespace skewcyclic {

std::string format_field_element(const FieldSpec& F, FieldElement e) {
    if (e.enc == 0) return "0";
    if (e.enc == 1) return "1";
    uint32_t k = F.log(e);
    if (k == 1) return "a";
    return "a^" + std::to_string(k);
}

static std::string format_poly_var(const FieldSpec& F, const Poly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        FieldElement c = p.coeff(i);
        if (c.enc == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << format_field_element(F, c);
        } else {
            if (c.enc != 1) os << format_field_element(F, c) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string format_poly_x(const FieldSpec& F, const Poly& p) { return format_poly_var(F, p, "x"); }
std::string format_poly_z(const FieldSpec& F, const Poly& p) { return format_poly_var(F, p, "z"); }

std::string format_ring_element(const RingContext& R, const RingElement& a) {
    return format_poly_x(R.field(), R.to_poly(a));
}

std::string format_skew_poly(const SkewPoly& f) {
    if (f.is_zero()) return "0";
    const RingContext& R = f.ctx->ring();
    std::ostringstream os;
    bool first = true;
    for (int nu = 0; nu <= f.deg_z(); ++nu) {
        const RingElement& c = f.zc[size_t(nu)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (nu == 0) {
            os << format_ring_element(R, c);
            continue;
        }
        os << "z";
        if (nu > 1) os << "^" << nu;
        if (c == R.one()) continue;
        os << "*(" << format_ring_element(R, c) << ")";
    }
    return os.str();
}

std::string format_matrix(const PolyMatrix& m) {
    std::ostringstream os;
    for (size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << format_poly_z(m.field(), m.at(i, j));
        }
        os << "]";
        if (i + 1 < m.rows()) os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos));
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        char c = peek();
        if (c) ++pos;
        return c;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    uint64_t integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected an integer");
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + uint64_t(s[pos] - '0');
            if (v > 1000000000) fail("integer too large");
            ++pos;
        }
        return v;
    }
};

struct Parser {
    Lexer lex;
    SkewContextPtr ctx;

    SkewPoly pow(const SkewPoly& base, uint64_t e) {
        SkewPoly r = skew_constant(ctx, ctx->ring().one());
        SkewPoly b = base;
        while (e) {
            if (e & 1) r = skew_mul(r, b);
            b = skew_mul(b, b);
            e >>= 1;
        }
        return r;
    }

    SkewPoly atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.take();
            SkewPoly e = expr();
            if (!lex.accept(')')) lex.fail("expected ')'");
            return e;
        }
        if (c == 'a') {
            lex.take();
            return skew_constant(ctx, ctx->ring().from_poly(
                                          Poly::constant(ctx->ring().field().generator())));
        }
        if (c == 'x') {
            lex.take();
            return skew_constant(ctx, ctx->ring().x());
        }
        if (c == 'z') {
            lex.take();
            return skew_from_coeffs(ctx, {ctx->ring().zero(), ctx->ring().one()});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            uint64_t v = lex.integer();
            if (v >= ctx->ring().field().q()) lex.fail("field encoding out of range");
            return skew_constant(ctx,
                                 ctx->ring().from_poly(Poly::constant(FieldElement{uint32_t(v)})));
        }
        lex.fail("expected a term");
    }

    SkewPoly factor() {
        SkewPoly b = atom();
        if (lex.accept('^')) {
            uint64_t e = lex.integer();
            if (e > 10000) lex.fail("exponent too large");
            return pow(b, e);
        }
        return b;
    }

    SkewPoly term() {
        SkewPoly r = factor();
        while (lex.accept('*')) r = skew_mul(r, factor());
        return r;
    }

    SkewPoly expr() {
        bool neg = lex.accept('-');
        SkewPoly r = term();
        if (neg) r = skew_sub(skew_zero(ctx), r);
        while (true) {
            if (lex.accept('+')) {
                r = skew_add(r, term());
            } else if (lex.accept('-')) {
                r = skew_sub(r, term());
            } else {
                break;
            }
        }
        return r;
    }
};

} // namespace

SkewPoly parse_skew_poly(const std::string& text, SkewContextPtr ctx) {
    Parser p{Lexer{text}, std::move(ctx)};
    SkewPoly r = p.expr();
    if (p.lex.peek() != '\0') p.lex.fail("trailing input");
    return r;
}

RingElement parse_ring_element(const std::string& text, SkewContextPtr ctx) {
    SkewPoly f = parse_skew_poly(text, ctx);
    if (f.deg_z() > 0) throw ParseError("expected a z-free element");
    return f.zfree();
}

} // namespace skewcyclic
