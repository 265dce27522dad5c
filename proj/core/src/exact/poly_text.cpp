#include "mero/exact/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "mero/errors.hpp"

namespace mero::exact {

namespace {

std::string print_term(const GaussianRational& c, const Monomial& mono) {
    std::ostringstream os;
    os << to_string(c);
    for (std::size_t i = 0; i < mono.size(); ++i) os << "*z" << i << "^" << mono[i];
    return os.str();
}

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string integer() {
        std::size_t start = pos_;
        accept('-');
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return s_.substr(start, pos_ - start);
    }
    unsigned small_uint() {
        std::string v = integer();
        if (v[0] == '-') fail("expected a non-negative integer");
        return unsigned(std::stoul(v));
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("polynomial text: " + msg + " at position " + std::to_string(pos_) +
                    " in \"" + s_ + "\"");
    }

    BigRational rational() {
        std::string num = integer();
        expect('/');
        std::string den = integer();
        return BigRational(BigInt(num), BigInt(den));
    }

    /// `((a/b)+(c/d)i)`
    GaussianRational coefficient() {
        skip_ws();
        expect('(');
        expect('(');
        BigRational re = rational();
        expect(')');
        expect('+');
        expect('(');
        BigRational im = rational();
        expect(')');
        expect('i');
        expect(')');
        return GaussianRational(std::move(re), std::move(im));
    }

    /// `z<k>^<e>` factors; variables must appear as z0, z1, ... in order.
    Monomial monomial() {
        Monomial mono;
        while (true) {
            skip_ws();
            if (!accept('*')) break;
            skip_ws();
            expect('z');
            unsigned idx = small_uint();
            if (idx != mono.size()) fail("variables must appear in order z0, z1, ...");
            expect('^');
            mono.push_back(small_uint());
        }
        return mono;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string print_poly(const HomoPoly& p) {
    if (p.is_zero()) {
        Monomial m(p.nvars(), 0);
        if (p.nvars() > 0) m[0] = p.degree();
        return print_term(GaussianRational(0), m);
    }
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        if (!first) out += " + ";
        out += print_term(coeff, mono);
        first = false;
    }
    return out;
}

HomoPoly parse_poly(const std::string& text) {
    Cursor cur(text);
    HomoPoly::TermMap terms;
    std::size_t nvars = 0;
    unsigned degree = 0;
    bool first = true;
    while (true) {
        GaussianRational c = cur.coefficient();
        Monomial mono = cur.monomial();
        unsigned d = 0;
        for (unsigned e : mono) d += e;
        if (first) {
            nvars = mono.size();
            degree = d;
            first = false;
        } else if (mono.size() != nvars) {
            cur.fail("all terms must list the same variables");
        } else if (d != degree) {
            cur.fail("terms of different total degree");
        }
        if (!c.is_zero()) {
            auto [it, fresh] = terms.emplace(std::move(mono), c);
            if (!fresh) cur.fail("duplicate monomial");
        }
        if (cur.done()) break;
        cur.expect('+');
    }
    return HomoPoly(unsigned(nvars), degree, std::move(terms));
}

}  // namespace mero::exact
