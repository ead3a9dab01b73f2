#include "toroidal/torlie.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace toroidal {

TorBasis TorBasis::c(int k, int l) {
    if (k == 0 && l == 0) throw std::invalid_argument("c(0,0) is not a basis element");
    return {Kind::C, 0, k, l};
}

TorElt form_ds(int a, int b) {
    TorElt r;
    if (a == -1) {
        r.add(b == 0 ? TorBasis::cs() : TorBasis::c(0, b), 1);
    } else if (b != 0) {
        // d(s^{a+1} t^b) = (a+1) s^a t^b ds + b s^{a+1} t^{b-1} dt
        r.add(TorBasis::c(a + 1, b), frac(-b, a + 1));
    }
    return r;
}

TorElt form_dt(int a, int b) {
    TorElt r;
    if (a != 0) r.add(TorBasis::c(a, b + 1), 1);
    else if (b == -1) r.add(TorBasis::ct(), 1);
    return r;
}

TorLie::TorLie(RootSystemPtr rs) : rs_(std::move(rs)) {
    if (!rs_) throw std::invalid_argument("null root system");
}

TorElt TorLie::gten(const GElt& x, int k, int l) const {
    TorElt r;
    for (const auto& [g, c] : x) r.add(TorBasis::gten(g, k, l), c);
    return r;
}

TorElt TorLie::bracket(const TorBasis& a, const TorBasis& b) const {
    using K = TorBasis::Kind;
    TorElt r;
    if (a.is_central() || b.is_central()) {
        if (a.kind == K::Ds && b.kind == K::C) r.add(b, b.k);
        if (a.kind == K::Dt && b.kind == K::C) r.add(b, b.l);
        if (b.kind == K::Ds && a.kind == K::C) r.add(a, -a.k);
        if (b.kind == K::Dt && a.kind == K::C) r.add(a, -a.l);
        return r;
    }
    if (a.kind == K::Ds || a.kind == K::Dt) {
        if (b.kind == K::G) r.add(b, a.kind == K::Ds ? b.k : b.l);
        return r;
    }
    if (b.kind == K::Ds || b.kind == K::Dt) {
        if (a.kind == K::G) r.add(a, b.kind == K::Ds ? -a.k : -a.l);
        return r;
    }
    // [x (x) f, y (x) g] = [x,y] (x) fg + (x,y) (df) g
    const int k = a.k, l = a.l, m = b.k, n = b.l;
    for (const auto& [sym, c] : rs_->bracket(a.g, b.g)) r.add(TorBasis::gten(sym, k + m, l + n), c);
    const int pair = rs_->pairing(a.g, b.g);
    if (pair != 0) {
        if (k != 0) r.add(form_ds(k + m - 1, l + n), Rational(pair * k));
        if (l != 0) r.add(form_dt(k + m, l + n - 1), Rational(pair * l));
    }
    return r;
}

TorElt TorLie::bracket(const TorElt& a, const TorElt& b) const {
    TorElt r;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) r.add(bracket(x, y), cx * cy);
    return r;
}

TorElt TorLie::generator(int i, int k, GenKind kind) const {
    if (i < 0 || i > rs_->rank())
        throw std::invalid_argument("generator index " + std::to_string(i) + " out of range 0.." +
                                    std::to_string(rs_->rank()));
    if (i > 0) {
        switch (kind) {
        case GenKind::E: return gten(rs_->e(i - 1), k, 0);
        case GenKind::F: return gten(rs_->f(i - 1), k, 0);
        case GenKind::H: return gten(rs_->h(i - 1), k, 0);
        }
    }
    switch (kind) {
    case GenKind::E: return gten(rs_->f_theta(), k, 1);
    case GenKind::F: return gten(rs_->e_theta(), k, -1);
    case GenKind::H: {
        TorElt r = gten(rs_->h_of(rs_->theta()), k, 0);
        r *= -1;
        r.add(form_dt(k, -1), 1);
        return r;
    }
    }
    return {};
}

std::pair<LatticeVec, int> TorLie::affine_root(const TorBasis& b) const {
    if (b.kind == TorBasis::Kind::G) return {rs_->weight(b.g), b.l};
    return {rs_->zero(), b.t_degree()};
}

int TorLie::affine_sign(const TorBasis& b) const {
    auto [beta, l] = affine_root(b);
    if (l > 0) return 1;
    if (l < 0) return -1;
    bool zero = true;
    for (int x : beta) zero = zero && x == 0;
    if (zero) return 0;
    return rs_->is_positive(beta) ? 1 : -1;
}

TriangularParts TorLie::triangular_split(const TorElt& x) const {
    TriangularParts p;
    for (const auto& [b, c] : x) {
        switch (affine_sign(b)) {
        case 1: p.n.add(b, c); break;
        case -1: p.nbar.add(b, c); break;
        default: p.h.add(b, c); break;
        }
    }
    return p;
}

bool TorLie::member(Subalgebra tag, const TorBasis& b) const {
    using K = TorBasis::Kind;
    switch (tag) {
    case Subalgebra::Full: return true;
    case Subalgebra::Prime: return b.kind != K::Ds;
    case Subalgebra::Plus:
        switch (b.kind) {
        case K::G: return b.k >= 0;
        case K::C: return b.k >= 1;
        case K::Ct:
        case K::Dt: return true;
        default: return false;
        }
    case Subalgebra::NHat: return (b.kind == K::G || b.kind == K::C) && affine_sign(b) > 0;
    case Subalgebra::NBarHat: return (b.kind == K::G || b.kind == K::C) && affine_sign(b) < 0;
    case Subalgebra::HHat: return affine_sign(b) == 0;
    case Subalgebra::HHatPrime: return affine_sign(b) == 0 && b.kind != K::Ds;
    case Subalgebra::AffS:
        return (b.kind == K::G && b.l == 0) || b.kind == K::Cs || b.kind == K::Ds;
    case Subalgebra::AffT:
        return (b.kind == K::G && b.k == 0) || b.kind == K::Ct || b.kind == K::Dt;
    }
    return false;
}

bool TorLie::member(Subalgebra tag, const TorElt& x) const {
    for (const auto& [b, c] : x)
        if (!member(tag, b)) return false;
    return true;
}

namespace {
Rational rpow(const Rational& a, int k) {
    Rational r = 1;
    Rational base = k >= 0 ? a : Rational(1) / a;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) r *= base;
    return r;
}
} // namespace

TorElt TorLie::ev_map(const Rational& a, const TorElt& x) const {
    using K = TorBasis::Kind;
    if (a == 0) throw std::invalid_argument("evaluation point must be nonzero");
    TorElt r;
    for (const auto& [b, c] : x) {
        switch (b.kind) {
        case K::G: r.add(TorBasis::gten(b.g, 0, b.l), c * rpow(a, b.k)); break;
        case K::C:
            if (b.l == 0) r.add(TorBasis::ct(), c * rpow(a, b.k));
            break;
        case K::Cs: break;
        case K::Ct: r.add(TorBasis::ct(), c); break;
        case K::Dt: r.add(TorBasis::dt(), c); break;
        case K::Ds: throw std::invalid_argument("ev_map: element has a d_s component (not in tor')");
        }
    }
    return r;
}

void TorLie::check(const TorElt& x) const {
    for (const auto& [b, c] : x) {
        if (b.kind == TorBasis::Kind::G && (b.g < 0 || b.g >= rs_->dim_g()))
            throw std::invalid_argument("element contains a g-symbol outside " + rs_->name());
    }
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

class Parser {
public:
    Parser(const TorLie& alg, const std::string& text) : alg_(alg), s_(text) {}

    TorElt parse() {
        TorElt out;
        skip();
        if (eof()) throw error("empty expression");
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            out.add(term(), sign);
            first = false;
            skip();
        }
        return out;
    }

private:
    std::invalid_argument error(const std::string& what) const {
        return std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what +
                                     " in '" + s_ + "'");
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    void skip() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip();
        if (peek() != c) throw error(std::string("expected '") + c + "'");
        ++pos_;
        skip();
    }

    long integer() {
        skip();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            throw error("expected integer");
        long v = std::stol(s_.substr(start, pos_ - start));
        skip();
        return v;
    }

    Rational rational() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        std::string den = "1";
        if (peek() == '/') {
            ++pos_;
            std::size_t d0 = pos_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            den = s_.substr(d0, pos_ - d0);
            if (den.empty()) throw error("expected denominator");
        }
        Integer n(num), d(den);
        if (d == 0) throw error("zero denominator");
        Rational q(n, d);
        q.canonicalize();
        return q;
    }

    int power() {
        skip();
        if (peek() != '^') return 1;
        ++pos_;
        skip();
        bool paren = peek() == '(';
        if (paren) ++pos_;
        long v = integer();
        if (paren) expect(')');
        return static_cast<int>(v);
    }

    std::string word() {
        std::size_t start = pos_;
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    TorElt term() {
        const RootSystem& rs = alg_.rs();
        Rational coef = 1;
        int sk = 0, tl = 0;
        bool have_sym = false, have_power = false;
        TorElt sym;
        GElt gpart;
        bool is_g = false;
        while (true) {
            skip();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= rational();
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t at = pos_;
                std::string w = word();
                if (w == "s") {
                    sk += power();
                    have_power = true;
                } else if (w == "t") {
                    tl += power();
                    have_power = true;
                } else {
                    if (have_sym) {
                        pos_ = at;
                        throw error("more than one algebra symbol in a term");
                    }
                    have_sym = true;
                    if (w == "cs") sym = TorElt(TorBasis::cs());
                    else if (w == "ct") sym = TorElt(TorBasis::ct());
                    else if (w == "ds") sym = TorElt(TorBasis::ds());
                    else if (w == "dt") sym = TorElt(TorBasis::dt());
                    else if (w == "Eth") { gpart = rs.e_theta(); is_g = true; }
                    else if (w == "Fth") { gpart = rs.f_theta(); is_g = true; }
                    else if (w == "Hth") { gpart = rs.h_of(rs.theta()); is_g = true; }
                    else if (w == "C") {
                        expect('(');
                        int k = static_cast<int>(integer());
                        expect(',');
                        int l = static_cast<int>(integer());
                        expect(')');
                        if (k == 0 && l == 0) throw error("C(0,0) is not a basis element");
                        sym = TorElt(TorBasis::c(k, l));
                    } else if (w == "E" || w == "F" || w == "H") {
                        expect('(');
                        int i = static_cast<int>(integer());
                        expect(')');
                        if (i < 1 || i > rs.rank())
                            throw error("index " + std::to_string(i) + " outside 1.." + std::to_string(rs.rank()));
                        gpart = w == "E" ? rs.e(i - 1) : w == "F" ? rs.f(i - 1) : rs.h(i - 1);
                        is_g = true;
                    } else if (w == "X") {
                        expect('(');
                        LatticeVec a;
                        a.push_back(static_cast<int>(integer()));
                        while (peek() == ',') {
                            ++pos_;
                            a.push_back(static_cast<int>(integer()));
                        }
                        expect(')');
                        if (static_cast<int>(a.size()) != rs.rank() || !rs.is_root(a))
                            throw error("X(...) is not a root of " + rs.name());
                        gpart = GElt(rs.root_sym(a));
                        is_g = true;
                    } else {
                        pos_ = at;
                        throw error("unknown symbol '" + w + "'");
                    }
                }
            } else {
                throw error("expected a factor");
            }
            skip();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!have_sym) {
            if (have_power) throw error("powers of s, t need a g-symbol");
            throw error("bare scalars are not elements of the algebra");
        }
        if (is_g) {
            TorElt r = alg_.gten(gpart, sk, tl);
            r *= coef;
            return r;
        }
        if (have_power) throw error("powers of s, t only apply to g-symbols");
        sym *= coef;
        return sym;
    }

    const TorLie& alg_;
    std::string s_;
    std::size_t pos_ = 0;
};

std::string monomial(int k, int l) {
    std::string r;
    if (k == 1) r += "*s";
    else if (k != 0) r += "*s^" + std::to_string(k);
    if (l == 1) r += "*t";
    else if (l != 0) r += "*t^" + std::to_string(l);
    return r;
}

} // namespace

TorElt TorLie::parse(const std::string& text) const { return Parser(*this, text).parse(); }

std::string TorLie::format(const TorElt& x) const {
    using K = TorBasis::Kind;
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c0] : x) {
        Rational c = c0;
        std::string sym;
        switch (b.kind) {
        case K::G: {
            if (rs_->is_cartan(b.g)) {
                sym = "H(" + std::to_string(b.g + 1) + ")";
            } else {
                LatticeVec a = rs_->weight(b.g);
                int simple = -1, sign = 0, nonzero = 0;
                for (int i = 0; i < rs_->rank(); ++i) {
                    if (a[i] != 0) {
                        ++nonzero;
                        simple = i;
                        sign = a[i];
                    }
                }
                if (nonzero == 1 && sign == 1) {
                    sym = "E(" + std::to_string(simple + 1) + ")";
                } else if (nonzero == 1 && sign == -1) {
                    sym = "F(" + std::to_string(simple + 1) + ")";
                    c = -c;
                } else {
                    sym = "X(";
                    for (int i = 0; i < rs_->rank(); ++i) sym += (i ? "," : "") + std::to_string(a[i]);
                    sym += ")";
                }
            }
            sym += monomial(b.k, b.l);
            break;
        }
        case K::C: sym = "C(" + std::to_string(b.k) + "," + std::to_string(b.l) + ")"; break;
        case K::Cs: sym = "cs"; break;
        case K::Ct: sym = "ct"; break;
        case K::Ds: sym = "ds"; break;
        case K::Dt: sym = "dt"; break;
        }
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        if (mag != 1) os << mag.get_str() << "*";
        os << sym;
        first = false;
    }
    return os.str();
}

} // namespace toroidal
