#include "charp/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace charp {

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw engine_error("parse error at column " + std::to_string(i + 1) + ": " + msg);
    }
    std::uint64_t number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected a number");
        errno = 0;
        std::uint64_t v = std::strtoull(s.substr(start, i - start).c_str(), nullptr, 10);
        if (errno != 0) fail("number out of range");
        return v;
    }
    std::string ident() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            ++i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
        }
        if (start == i) fail("expected an identifier");
        return s.substr(start, i - start);
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Lexer lx{text};
    const int n = ring->nvars();
    Polynomial result(ring);
    if (lx.eof()) lx.fail("empty polynomial");
    bool first = true;
    while (!lx.eof()) {
        std::int64_t sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++lx.i;
        } else if (!first) {
            lx.fail("expected '+' or '-' between terms");
        }
        first = false;
        // one term: product of factors
        std::uint32_t coeff = ring->field.reduce(sign);
        Monomial mono = Monomial::one();
        bool have_factor = false;
        while (true) {
            char f = lx.peek();
            if (f == '*') {
                ++lx.i;
                f = lx.peek();
            } else if (have_factor && !(std::isalnum(static_cast<unsigned char>(f)) || f == '_')) {
                break;
            }
            if (std::isdigit(static_cast<unsigned char>(f))) {
                std::uint64_t v = lx.number();
                coeff = ring->field.mul(coeff, ring->field.reduce(static_cast<std::int64_t>(v % ring->field.p())));
            } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
                std::string name = lx.ident();
                int vi = ring->var_index(name);
                if (vi < 0) lx.fail("unknown variable '" + name + "'");
                std::uint64_t e = 1;
                if (lx.peek() == '^') {
                    ++lx.i;
                    e = lx.number();
                }
                std::uint64_t total = std::uint64_t(mono.e[vi]) + e;
                if (total > 0xFFFFFFFFull) lx.fail("exponent out of range");
                mono.e[vi] = static_cast<std::uint32_t>(total);
            } else if (!have_factor) {
                lx.fail("expected a coefficient or variable");
            } else {
                break;
            }
            have_factor = true;
        }
        (void)n;
        result = result + Polynomial::term(ring, mono, coeff);
    }
    return result;
}

} // namespace charp
