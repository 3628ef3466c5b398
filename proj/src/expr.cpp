#include "qsw/expr.hpp"

#include "qsw/catalog.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace qsw {

namespace {

struct Token {
    enum class Kind { Int, Ident, Symbol, End } kind = Kind::End;
    std::string text;
    char symbol = 0;
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(current_.pos),
                         current_.pos);
    }

    void expect_symbol(char c) {
        if (current_.kind != Token::Kind::Symbol || current_.symbol != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool eat_symbol(char c) {
        if (current_.kind == Token::Kind::Symbol && current_.symbol == c) {
            advance();
            return true;
        }
        return false;
    }

  private:
    void advance() {
        while (i_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[i_])))
            ++i_;
        current_ = Token{};
        current_.pos = i_;
        if (i_ >= text_.size()) return;
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[i_])))
                ++i_;
            current_.kind = Token::Kind::Int;
            current_.text = text_.substr(start, i_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[i_])))
                ++i_;
            current_.kind = Token::Kind::Ident;
            current_.text = text_.substr(start, i_ - start);
            return;
        }
        static const std::string symbols = "+-*/^(),;";
        if (symbols.find(c) == std::string::npos)
            throw ParseError(std::string("unexpected character '") + c + "'",
                             i_);
        current_.kind = Token::Kind::Symbol;
        current_.symbol = c;
        ++i_;
    }

    const std::string& text_;
    std::size_t i_ = 0;
    Token current_;
};

const std::set<std::string>& known_names() {
    static const std::set<std::string> names = {
        "G",   "H",   "A",   "B",   "C",   "K",   "K1",  "K2",  "K3",
        "K4",  "K5",  "K6",  "K7",  "K1b", "K2b", "K3b", "K4b", "K5b",
        "K6b", "K7b", "AG",  "ETA"};
    return names;
}

bool is_mono_head(const std::string& ident) {
    return ident == "q" || ident == "wq" || ident == "wbq";
}

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr run() {
        ExprPtr e = parse_sum();
        if (lex_.peek().kind != Token::Kind::End)
            lex_.fail("trailing input after expression");
        return e;
    }

  private:
    long parse_long() {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Int) lex_.fail("expected an integer");
        long v = 0;
        try {
            v = std::stol(t.text);
        } catch (const std::exception&) {
            lex_.fail("integer literal out of range");
        }
        lex_.take();
        return v;
    }

    long parse_signed_long() {
        bool neg = lex_.eat_symbol('-');
        long v = parse_long();
        return neg ? -v : v;
    }

    Mono parse_mono() {
        Mono m;
        m.zeta = RootOfUnity::one();
        bool neg = lex_.eat_symbol('-');
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Ident || !is_mono_head(t.text))
            lex_.fail("expected a monomial (q, wq or wbq)");
        std::string head = lex_.take().text;
        if (head == "wq") m.zeta = RootOfUnity::omega();
        if (head == "wbq") m.zeta = RootOfUnity::omega_bar();
        if (neg) m.zeta = m.zeta * RootOfUnity::minus_one();
        m.exp = 1;
        if (lex_.eat_symbol('^')) {
            m.exp = parse_long();
            if (m.exp < 0) lex_.fail("monomial exponents must be >= 0");
        }
        return m;
    }

    ExprPtr parse_sum() {
        ExprPtr left;
        if (lex_.eat_symbol('-')) {
            auto neg = std::make_shared<Expr>();
            neg->kind = Expr::Kind::Neg;
            neg->lhs = parse_term();
            left = neg;
        } else {
            left = parse_term();
        }
        for (;;) {
            if (lex_.eat_symbol('+')) {
                auto node = std::make_shared<Expr>();
                node->kind = Expr::Kind::Add;
                node->lhs = left;
                node->rhs = parse_term();
                left = node;
            } else if (lex_.eat_symbol('-')) {
                auto node = std::make_shared<Expr>();
                node->kind = Expr::Kind::Sub;
                node->lhs = left;
                node->rhs = parse_term();
                left = node;
            } else {
                return left;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_pow();
        for (;;) {
            if (lex_.eat_symbol('*')) {
                auto node = std::make_shared<Expr>();
                node->kind = Expr::Kind::Mul;
                node->lhs = left;
                node->rhs = parse_pow();
                left = node;
            } else if (lex_.eat_symbol('/')) {
                auto node = std::make_shared<Expr>();
                node->kind = Expr::Kind::Div;
                node->lhs = left;
                node->rhs = parse_pow();
                left = node;
            } else {
                return left;
            }
        }
    }

    ExprPtr parse_pow() {
        ExprPtr base = parse_atom();
        if (!lex_.eat_symbol('^')) return base;
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Pow;
        node->lhs = base;
        node->pow_exp = parse_signed_long();
        return node;
    }

    ExprPtr parse_atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Number;
            node->number = parse_bigint(lex_.take().text);
            return node;
        }
        if (t.kind == Token::Kind::Symbol && t.symbol == '(') {
            lex_.take();
            ExprPtr inner = parse_sum();
            lex_.expect_symbol(')');
            return inner;
        }
        if (t.kind == Token::Kind::Symbol && t.symbol == '-') {
            // a mono atom with its own sign, e.g. inside "1 - -q" never
            // appears; the leading minus is handled by parse_sum
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Monomial;
            node->mono = parse_mono();
            return node;
        }
        if (t.kind != Token::Kind::Ident) lex_.fail("expected an atom");

        if (is_mono_head(t.text)) {
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Monomial;
            node->mono = parse_mono();
            return node;
        }
        if (t.text == "poch") return parse_poch();
        if (t.text == "sum") {
            lex_.take();
            lex_.expect_symbol('(');
            ExprPtr inner = parse_name();
            lex_.expect_symbol(')');
            auto node = std::make_shared<Expr>(*inner);
            node->sum_sided = true;
            // a substitution may follow the closing parenthesis
            maybe_substitution(node);
            return node;
        }
        return parse_name();
    }

    ExprPtr parse_poch() {
        lex_.take(); // "poch"
        lex_.expect_symbol('(');
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Poch;
        node->poch_args.push_back(parse_mono());
        while (lex_.eat_symbol(',')) node->poch_args.push_back(parse_mono());
        lex_.expect_symbol(';');
        Mono base = parse_mono();
        if (!base.zeta.is_one())
            lex_.fail("Pochhammer base must be a plain power of q");
        if (base.exp < 1) lex_.fail("Pochhammer base exponent must be >= 1");
        node->poch_base = base.exp;
        node->poch_count = -1;
        if (lex_.eat_symbol(',')) {
            const Token& c = lex_.peek();
            if (c.kind == Token::Kind::Ident && c.text == "inf") {
                lex_.take();
            } else {
                node->poch_count = parse_long();
                if (node->poch_count < 0)
                    lex_.fail("Pochhammer count must be >= 0");
            }
        }
        lex_.expect_symbol(')');
        return node;
    }

    void maybe_substitution(const std::shared_ptr<Expr>& node) {
        if (lex_.peek().kind != Token::Kind::Symbol ||
            lex_.peek().symbol != '(')
            return;
        lex_.take();
        node->has_subst = true;
        node->subst = parse_mono();
        lex_.expect_symbol(')');
    }

    ExprPtr parse_name() {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Ident || !known_names().count(t.text))
            lex_.fail("unknown name '" + t.text + "'");
        std::string name = lex_.take().text;
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Name;
        if (name == "AG") {
            lex_.expect_symbol('(');
            long m = parse_long();
            lex_.expect_symbol(',');
            long i = parse_long();
            lex_.expect_symbol(')');
            std::ostringstream id;
            id << "AG(" << m << "," << i << ")";
            node->name = id.str();
        } else if (name == "ETA") {
            lex_.expect_symbol('(');
            long b = parse_long();
            lex_.expect_symbol(')');
            std::ostringstream id;
            id << "ETA(" << b << ")";
            node->name = id.str();
        } else {
            node->name = name;
        }
        maybe_substitution(node);
        return node;
    }

    Lexer lex_;
};

std::string mono_str(const Mono& m) {
    std::string z = m.zeta.str(); // 1, -1, w, -w, wb, -wb
    std::string out;
    if (z == "-1")
        out = "-";
    else if (z != "1")
        out = z;
    out += "q";
    if (m.exp != 1) out += "^" + std::to_string(m.exp);
    return out;
}

int precedence(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Neg: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Pow: return 3;
    default: return 4;
    }
}

void print_node(const Expr& e, int min_prec, std::string& out) {
    bool wrap = precedence(e) < min_prec;
    if (wrap) out += "(";
    switch (e.kind) {
    case Expr::Kind::Number: out += to_string(e.number); break;
    case Expr::Kind::Monomial: out += mono_str(e.mono); break;
    case Expr::Kind::Poch: {
        out += "poch(";
        for (std::size_t i = 0; i < e.poch_args.size(); ++i) {
            if (i) out += ",";
            out += mono_str(e.poch_args[i]);
        }
        out += ";q";
        if (e.poch_base != 1) out += "^" + std::to_string(e.poch_base);
        if (e.poch_count >= 0) out += "," + std::to_string(e.poch_count);
        out += ")";
        break;
    }
    case Expr::Kind::Name:
        if (e.sum_sided) out += "sum(";
        out += e.name;
        if (e.sum_sided) out += ")";
        if (e.has_subst) out += "(" + mono_str(e.subst) + ")";
        break;
    case Expr::Kind::Add:
        print_node(*e.lhs, 1, out);
        out += "+";
        print_node(*e.rhs, 2, out);
        break;
    case Expr::Kind::Sub:
        print_node(*e.lhs, 1, out);
        out += "-";
        print_node(*e.rhs, 2, out);
        break;
    case Expr::Kind::Neg:
        out += "-";
        print_node(*e.lhs, 2, out);
        break;
    case Expr::Kind::Mul:
        print_node(*e.lhs, 2, out);
        out += "*";
        print_node(*e.rhs, 3, out);
        break;
    case Expr::Kind::Div:
        print_node(*e.lhs, 2, out);
        out += "/";
        print_node(*e.rhs, 3, out);
        break;
    case Expr::Kind::Pow:
        print_node(*e.lhs, 4, out);
        out += "^" + std::to_string(e.pow_exp);
        break;
    }
    if (wrap) out += ")";
}

} // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const ExprPtr& e) {
    if (!e) throw DomainError("empty expression");
    std::string out;
    print_node(*e, 0, out);
    return out;
}

namespace {

Series eval_name(const Expr& e, long N) {
    long stride = e.has_subst ? e.subst.exp : 1;
    if (e.has_subst && stride == 0) {
        // q -> zeta: the series collapses to its value at a constant;
        // only the trivial zeta = 1, giving the constant term, is sane
        throw DomainError("substitution exponent must be >= 1");
    }
    long sub_order = e.has_subst ? (N + stride) / stride - 1 : N;
    if (sub_order < 0) sub_order = 0;
    Series base = e.sum_sided ? sum_side(e.name, sub_order)
                              : product_side(e.name, sub_order);
    if (!e.has_subst) return base;
    Series image = series_substitute(base, e.subst.zeta, stride);
    return image.order() > N ? image.truncate(N) : image;
}

} // namespace

Series eval_expr(const ExprPtr& e, long N) {
    if (!e) throw DomainError("empty expression");
    if (N < 0) throw OrderError("expansion order must be >= 0");
    switch (e->kind) {
    case Expr::Kind::Number: {
        Series s(Ring::Integer, N);
        s.set(0, e->number);
        return s;
    }
    case Expr::Kind::Monomial: {
        Ring ring = e->mono.zeta.is_real() ? Ring::Integer : Ring::Eisenstein;
        Series s(ring, N);
        if (e->mono.exp <= N) {
            if (ring == Ring::Integer)
                s.set(e->mono.exp,
                      BigInt(e->mono.zeta.real_sign() < 0 ? -1 : 1));
            else
                s.set(e->mono.exp, e->mono.zeta.value());
        }
        return s;
    }
    case Expr::Kind::Poch: {
        std::vector<FactorSpec> specs;
        for (const auto& m : e->poch_args) {
            FactorSpec f;
            f.zeta = m.zeta;
            f.s = m.exp;
            f.b = e->poch_base;
            f.e = 1;
            f.count = e->poch_count;
            specs.push_back(f);
        }
        return build_factors(specs, N);
    }
    case Expr::Kind::Name: return eval_name(*e, N);
    case Expr::Kind::Add: return series_add(eval_expr(e->lhs, N), eval_expr(e->rhs, N));
    case Expr::Kind::Sub: return series_sub(eval_expr(e->lhs, N), eval_expr(e->rhs, N));
    case Expr::Kind::Mul: return series_mul(eval_expr(e->lhs, N), eval_expr(e->rhs, N));
    case Expr::Kind::Div: return series_div(eval_expr(e->lhs, N), eval_expr(e->rhs, N));
    case Expr::Kind::Pow: return series_pow(eval_expr(e->lhs, N), e->pow_exp);
    case Expr::Kind::Neg: return series_neg(eval_expr(e->lhs, N));
    }
    throw DomainError("unreachable expression kind");
}

} // namespace qsw
