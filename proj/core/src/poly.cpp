#include "cala/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cala {

Rational parse_rational(std::string_view text) {
    Poly p = Poly::parse(text);
    if (!p.is_constant()) throw ParseError("expected a rational, got a polynomial: " + std::string(text));
    return p.to_rational();
}

bool Poly::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    // same grading: lexicographic, earlier (alphabetically smaller) name dominant
    for (size_t k = 0; k < a.size() && k < b.size(); ++k)
        if (a[k] != b[k]) return a[k] < b[k];
    return a.size() < b.size();
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

Poly Poly::variable(const std::string& name) {
    Poly p;
    p.names_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

Rational Poly::to_rational() const {
    if (!is_constant()) throw MathError("polynomial is not constant: " + str());
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Poly::TermMap Poly::remap(const TermMap& terms, const std::vector<std::string>& from,
                          const std::vector<std::string>& to) {
    std::vector<size_t> pos(from.size());
    for (size_t k = 0; k < from.size(); ++k) {
        auto it = std::lower_bound(to.begin(), to.end(), from[k]);
        pos[k] = static_cast<size_t>(it - to.begin());
    }
    TermMap out;
    for (const auto& [e, c] : terms) {
        Exponents ne(to.size(), 0);
        for (size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
        out.emplace(std::move(ne), c);
    }
    return out;
}

void Poly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    if (names_.empty()) return;
    std::vector<char> used(names_.size(), 0);
    for (const auto& [e, c] : terms_)
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) used[k] = 1;
    if (std::all_of(used.begin(), used.end(), [](char u) { return u; })) return;
    std::vector<std::string> kept;
    for (size_t k = 0; k < names_.size(); ++k)
        if (used[k]) kept.push_back(names_[k]);
    TermMap out;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(kept.size());
        for (size_t k = 0; k < e.size(); ++k)
            if (used[k]) ne.push_back(e[k]);
        out.emplace(std::move(ne), c);
    }
    names_ = std::move(kept);
    terms_ = std::move(out);
}

static std::vector<std::string> merge_names(const std::vector<std::string>& a,
                                            const std::vector<std::string>& b) {
    std::vector<std::string> m;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return m;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (names_ == o.names_) {
        for (const auto& [e, c] : o.terms_) {
            auto [it, fresh] = terms_.emplace(e, c);
            if (!fresh) it->second += c;
        }
        normalize();
        return *this;
    }
    auto m = merge_names(names_, o.names_);
    TermMap self = remap(terms_, names_, m);
    for (const auto& [e, c] : remap(o.terms_, o.names_, m)) {
        auto [it, fresh] = self.emplace(e, c);
        if (!fresh) it->second += c;
    }
    names_ = std::move(m);
    terms_ = std::move(self);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }
Poly Poly::operator+(const Poly& o) const { Poly p = *this; p += o; return p; }
Poly Poly::operator-(const Poly& o) const { Poly p = *this; p += -o; return p; }

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    if (is_zero() || o.is_zero()) return out;
    auto m = merge_names(names_, o.names_);
    TermMap a = remap(terms_, names_, m);
    TermMap b = remap(o.terms_, o.names_, m);
    out.names_ = std::move(m);
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            auto [it, fresh] = out.terms_.emplace(std::move(e), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    out.normalize();
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly out{Rational(1)};
    for (unsigned k = 0; k < e; ++k) out = out * *this;
    return out;
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.names_ != b.names_) return a.names_ < b.names_ ? -1 : 1;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    GrlexLess less;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return less(ia->first, ib->first) ? -1 : 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        Poly term{c};
        for (size_t k = 0; k < names_.size(); ++k) {
            if (e[k] == 0) continue;
            auto it = bindings.find(names_[k]);
            Poly base = (it != bindings.end()) ? it->second : variable(names_[k]);
            term = term * base.pow(static_cast<unsigned>(e[k]));
        }
        out += term;
    }
    return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (divisor.is_constant()) {
        Rational inv = Rational(1) / divisor.to_rational();
        Poly out = *this;
        for (auto& [e, c] : out.terms_) c *= inv;
        return out;
    }
    auto m = merge_names(names_, divisor.names_);
    Poly rem;
    rem.names_ = m;
    rem.terms_ = remap(terms_, names_, m);
    Poly div;
    div.names_ = m;
    div.terms_ = remap(divisor.terms_, divisor.names_, m);
    const auto& dlead = *div.terms_.rbegin();  // leading term (grlex-largest)
    Poly quot;
    quot.names_ = m;
    while (!rem.terms_.empty()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents qe(m.size());
        for (size_t k = 0; k < m.size(); ++k) {
            qe[k] = rlead.first[k] - dlead.first[k];
            if (qe[k] < 0) return std::nullopt;
        }
        Rational qc = rlead.second / dlead.second;
        Poly mono;
        mono.names_ = m;
        mono.terms_.emplace(qe, qc);
        quot.terms_.emplace(std::move(qe), qc);
        rem -= mono * div;
        if (!rem.terms_.empty() && rem.names_ != m) {
            // subtraction may have shrunk the support; re-align
            rem.terms_ = remap(rem.terms_, rem.names_, m);
            rem.names_ = m;
        }
    }
    quot.normalize();
    return quot;
}

std::vector<Rational> Poly::rational_roots() const {
    if (is_constant()) return {};
    if (names_.size() != 1) throw MathError("rational_roots: polynomial is multivariate: " + str());
    // dense coefficient list c[k] of x^k, scaled to integers
    int deg = total_degree();
    std::vector<Rational> coeff(static_cast<size_t>(deg) + 1, Rational(0));
    for (const auto& [e, c] : terms_) coeff[static_cast<size_t>(e[0])] = c;
    BigInt den(1);
    for (const auto& c : coeff) den = lcm(den, denominator(c));
    std::vector<BigInt> ic(coeff.size());
    for (size_t k = 0; k < coeff.size(); ++k) ic[k] = numerator(coeff[k] * Rational(den));
    std::vector<Rational> roots;
    auto is_root = [&](const Rational& r) {
        Rational acc(0);
        for (size_t k = coeff.size(); k-- > 0;) acc = acc * r + Rational(ic[k]);
        return acc == 0;
    };
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    if (low >= ic.size()) return roots;
    BigInt a0 = abs(ic[low]), ad = abs(ic.back());
    auto divisors = [](const BigInt& v) {
        std::vector<BigInt> out;
        for (BigInt d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
        return out;
    };
    for (const BigInt& p : divisors(a0))
        for (const BigInt& q : divisors(ad))
            for (int sign : {1, -1}) {
                Rational cand = Rational(sign * p) / Rational(q);
                if (std::find(roots.begin(), roots.end(), cand) == roots.end() && is_root(cand))
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending grlex so the leading term prints first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (size_t k = 0; k < names_.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names_[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            os << to_string(ac);
        else if (ac == 1)
            os << mono;
        else
            os << to_string(ac) << "*" << mono;
    }
    return os.str();
}

// ---- parsing ------------------------------------------------------------

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, "position " + std::to_string(pos) + " in \"" + std::string(s) + "\"");
    }

    BigInt integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return BigInt(std::string(s.substr(start, pos - start)));
    }

    Poly atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = integer();
            if (eat('/')) {
                BigInt den = integer();
                if (den == 0) fail("zero denominator");
                return Poly(Rational(num) / Rational(den));
            }
            return Poly(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return Poly::variable(std::string(s.substr(start, pos - start)));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            BigInt e = integer();
            if (e < 0 || e > 64) fail("exponent out of range");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly term() {
        Poly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Poly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip();
            if (pos >= s.size()) break;
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }
};

}  // namespace

Poly Poly::parse(std::string_view text) {
    Parser p{text};
    Poly out = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

Poly parse_scalar(std::string_view text) { return Poly::parse(text); }

}  // namespace cala
