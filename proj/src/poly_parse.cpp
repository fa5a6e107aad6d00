#include "k2ff/poly.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace k2ff {

namespace {

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
    std::ostringstream os;
    os << "polynomial syntax error at position " << pos << ": " << what;
    throw std::invalid_argument(os.str());
}

std::uint32_t reduce_mod(long long v, std::uint32_t q) {
    long long r = v % static_cast<long long>(q);
    if (r < 0) r += q;
    return static_cast<std::uint32_t>(r);
}

Poly parse_comma_form(std::string_view text, FieldSpec spec) {
    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos);
        std::size_t b = 0, e = item.size();
        while (b < e && std::isspace(static_cast<unsigned char>(item[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(item[e - 1]))) --e;
        long long v = 0;
        auto [p, ec] = std::from_chars(item.data() + b, item.data() + e, v);
        if (ec != std::errc() || p != item.data() + e || b == e)
            syntax_error(pos, "expected integer coefficient");
        coeffs.push_back(reduce_mod(v, spec.q()));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Poly(spec, std::move(coeffs));
}

// Expression grammar: terms `k`, `T`, `T^e`, `k*T^e`, joined by + / -.
struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;
    FieldSpec spec;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    long long integer() {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
            skip_ws();
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            syntax_error(pos, "expected integer");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1LL << 40)) syntax_error(pos, "integer too large");
            ++pos;
        }
        return neg ? -v : v;
    }

    // Returns (coefficient, exponent) for one term; sign applied by caller.
    std::pair<std::uint32_t, int> term() {
        skip_ws();
        std::uint32_t k = 1;
        bool saw_coeff = false;
        if (peek() != 'T') {
            k = reduce_mod(integer(), spec.q());
            saw_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos;
                skip_ws();
                if (peek() != 'T') syntax_error(pos, "expected 'T' after '*'");
            } else {
                return {k, 0}; // bare constant
            }
        }
        (void)saw_coeff;
        ++pos; // consume 'T'
        int e = 1;
        if (peek() == '^') {
            ++pos;
            long long v = integer();
            if (v < 0) syntax_error(pos, "negative exponent");
            if (v > 10000) syntax_error(pos, "exponent too large");
            e = static_cast<int>(v);
        }
        return {k, e};
    }

    Poly parse() {
        if (at_end()) syntax_error(0, "empty input");
        std::vector<std::uint32_t> coeffs;
        auto add_term = [&](std::uint32_t k, int e, bool negate) {
            if (coeffs.size() < static_cast<std::size_t>(e) + 1)
                coeffs.resize(static_cast<std::size_t>(e) + 1, 0);
            std::uint32_t v = negate ? (spec.q() - k) % spec.q() : k;
            coeffs[static_cast<std::size_t>(e)] = (coeffs[static_cast<std::size_t>(e)] + v) % spec.q();
        };
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            auto [k, e] = term();
            add_term(k, e, negate);
            if (at_end()) break;
            char c = peek();
            if (c == '+') negate = false;
            else if (c == '-') negate = true;
            else syntax_error(pos, std::string("unexpected character '") + c + "'");
            ++pos;
        }
        return Poly(spec, std::move(coeffs));
    }
};

} // namespace

Poly Poly::parse(std::string_view text, FieldSpec spec) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b == e) throw std::invalid_argument("polynomial syntax error at position 0: empty input");
    std::string_view t = text.substr(b, e - b);
    if (t.find(',') != std::string_view::npos) return parse_comma_form(t, spec);
    ExprParser p{t, 0, spec};
    return p.parse();
}

std::string Poly::format() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        std::uint32_t c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << '*';
        os << 'T';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

} // namespace k2ff
