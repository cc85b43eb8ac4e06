#include "ccmk/forms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ccmk::forms {

namespace {

class Parser {
public:
    explicit Parser(std::string text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    using Term = std::pair<BivariatePolynomial::Exponents, mpq_class>;

    std::vector<Term> parse() {
        std::vector<Term> out;
        if (s_.empty()) fail("empty form");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            mpq_class coeff = 1;
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = number();
                have_coeff = true;
                if (peek() == '*') ++pos_;
            }
            int dx = 0, dy = 0;
            bool have_factor = false;
            while (peek() == 'x' || peek() == 'y') {
                char v = get();
                int e = 1;
                if (peek() == '^') {
                    ++pos_;
                    bool braced = peek() == '{';
                    if (braced) ++pos_;
                    e = static_cast<int>(digits());
                    if (braced && get() != '}') fail("expected '}'");
                }
                (v == 'x' ? dx : dy) += e;
                have_factor = true;
                if (peek() == '*') {
                    ++pos_;
                    if (peek() != 'x' && peek() != 'y') fail("expected variable after '*'");
                }
            }
            if (!have_coeff && !have_factor) fail("expected a term");
            out.emplace_back(BivariatePolynomial::Exponents{dx, dy}, sign * coeff);
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    unsigned long digits() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        if (pos_ - start > 9) fail("number too long");
        return std::stoul(s_.substr(start, pos_ - start));
    }

    mpq_class number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        mpz_class num(s_.substr(start, pos_ - start));
        mpz_class den = 1;
        if (peek() == '/') {
            ++pos_;
            std::size_t ds = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (ds == pos_) fail("expected denominator");
            den = mpz_class(s_.substr(ds, pos_ - ds));
            if (den == 0) fail("zero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << what << " at position " << pos_ << " in '" << s_ << "'";
        throw ParseError(os.str());
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

void BivariatePolynomial::add_term(Exponents e, const mpq_class& c) {
    mpq_class& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
}

BivariatePolynomial BivariatePolynomial::parse(const std::string& text) {
    BivariatePolynomial p;
    for (const auto& [e, c] : Parser(text).parse()) p.add_term(e, c);
    return p;
}

BivariatePolynomial BivariatePolynomial::linear(const mpq_class& a, const mpq_class& b) {
    BivariatePolynomial p;
    p.add_term({1, 0}, a);
    p.add_term({0, 1}, b);
    return p;
}

mpq_class BivariatePolynomial::coefficient(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::pair<mpq_class, mpq_class> BivariatePolynomial::linear_part() const {
    return {coefficient(1, 0), coefficient(0, 1)};
}

bool BivariatePolynomial::is_homogeneous_linear() const {
    for (const auto& [e, c] : terms_)
        if (e.first + e.second != 1) return false;
    return true;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Lowest total degree first, x before y.
    std::vector<std::pair<Exponents, mpq_class>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first.first > b.first.first;
    });
    for (const auto& [e, c] : ordered) {
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1 && (e.first + e.second) > 0;
        if (!unit) os << mag.get_str();
        auto var = [&](char v, int d) {
            if (d == 0) return;
            os << v;
            if (d > 1) os << '^' << d;
        };
        var('x', e.first);
        var('y', e.second);
    }
    return os.str();
}

std::vector<BivariatePolynomial> parse_form_list(const std::string& text) {
    std::vector<BivariatePolynomial> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(BivariatePolynomial::parse(item));
    if (out.empty()) throw ParseError("no forms given");
    return out;
}

}  // namespace ccmk::forms
