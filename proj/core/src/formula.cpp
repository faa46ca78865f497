#include <trigonal/formula.hpp>

#include <cctype>
#include <charconv>
#include <set>

#include <trigonal/errors.hpp>

namespace trigonal
{

namespace
{

class cursor
{
public:
    cursor(std::string_view text, std::size_t line = 1, std::size_t column = 1)
        : m_text(text), m_line(line), m_column(column)
    {
    }

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw parse_error(msg, m_line, m_column);
    }

    void skip_space()
    {
        while (m_pos < m_text.size()) {
            const char c = m_text[m_pos];
            if (c == '#') {
                while (m_pos < m_text.size() && m_text[m_pos] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool at_end()
    {
        skip_space();
        return m_pos >= m_text.size();
    }

    char peek()
    {
        skip_space();
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    void advance()
    {
        if (m_text[m_pos] == '\n') {
            ++m_line;
            m_column = 1;
        } else {
            ++m_column;
        }
        ++m_pos;
    }

    std::string_view take_while(bool (*pred)(char))
    {
        const auto start = m_pos;
        while (m_pos < m_text.size() && pred(m_text[m_pos])) {
            advance();
        }
        return m_text.substr(start, m_pos - start);
    }

    std::size_t line() const
    {
        return m_line;
    }
    std::size_t column() const
    {
        return m_column;
    }
    std::size_t pos() const
    {
        return m_pos;
    }

private:
    std::string_view m_text;
    std::size_t m_pos = 0;
    std::size_t m_line;
    std::size_t m_column;
};

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

bool is_symbol_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class parser
{
public:
    parser(cursor &cur, const registry_ptr &reg) : m_cur(cur), m_reg(reg) {}

    sparse_poly relation()
    {
        auto lhs = expr();
        if (m_cur.accept('=')) {
            lhs -= expr();
        }
        return lhs;
    }

    sparse_poly expr()
    {
        sparse_poly total(m_reg);
        bool negative = false;
        if (m_cur.accept('-')) {
            negative = true;
        } else {
            m_cur.accept('+');
        }
        for (;;) {
            auto t = term();
            if (negative) {
                total -= t;
            } else {
                total += t;
            }
            if (m_cur.accept('+')) {
                negative = false;
            } else if (m_cur.accept('-')) {
                negative = true;
            } else {
                return total;
            }
        }
    }

private:
    sparse_poly term()
    {
        auto value = factor();
        while (m_cur.accept('*')) {
            value = value * factor();
        }
        return value;
    }

    unsigned exponent()
    {
        m_cur.skip_space();
        const auto digits = m_cur.take_while(is_digit);
        unsigned e = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            m_cur.fail("expected an integer exponent");
        }
        return e;
    }

    sparse_poly factor()
    {
        sparse_poly base(m_reg);
        const char c = m_cur.peek();
        if (c == '(') {
            m_cur.expect('(');
            base = expr();
            m_cur.expect(')');
        } else if (is_digit(c)) {
            auto num = m_cur.take_while(is_digit);
            std::string text(num);
            if (m_cur.peek() == '/') {
                m_cur.expect('/');
                m_cur.skip_space();
                auto den = m_cur.take_while(is_digit);
                if (den.empty()) {
                    m_cur.fail("malformed rational");
                }
                text += '/';
                text += den;
            }
            try {
                base = sparse_poly::constant(m_reg, parse_rational(text));
            } catch (const usage_error &e) {
                m_cur.fail(e.what());
            }
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            base = symbol();
        } else if (c == '\0') {
            m_cur.fail("unexpected end of formula");
        } else {
            m_cur.fail(std::string("unexpected character '") + c + "'");
        }
        if (m_cur.accept('^')) {
            base = base.pow(exponent());
        }
        return base;
    }

    sparse_poly symbol()
    {
        const auto line = m_cur.line();
        const auto column = m_cur.column();
        std::string tok(m_cur.take_while(is_symbol_char));
        if (m_cur.peek() == '[' && (tok == "p" || tok == "Q")) {
            m_cur.expect('[');
            tok += '[';
            for (bool first = true;; first = false) {
                if (!first && !m_cur.accept(',')) {
                    break;
                }
                if (!first) {
                    tok += ',';
                }
                m_cur.skip_space();
                auto digits = m_cur.take_while(is_digit);
                if (digits.empty()) {
                    m_cur.fail("expected an index");
                }
                tok += digits;
            }
            m_cur.expect(']');
            tok += ']';
            if (m_cur.peek() == '{') {
                m_cur.expect('{');
                m_cur.skip_space();
                auto pt = m_cur.take_while(is_symbol_char);
                m_cur.expect('}');
                tok += '{';
                tok += pt;
                tok += '}';
            }
        }
        auto v = parse_variable(tok);
        if (!v || !m_reg->admits(*v)) {
            throw parse_error("unknown variable '" + tok + "'", line, column);
        }
        return sparse_poly::var(m_reg, *v);
    }

    cursor &m_cur;
    registry_ptr m_reg;
};

} // namespace

sparse_poly parse_formula(std::string_view text, const registry_ptr &reg)
{
    cursor cur(text);
    parser p(cur, reg);
    auto value = p.relation();
    if (!cur.at_end()) {
        cur.fail("trailing input");
    }
    return value;
}

std::vector<formula_block> parse_blocks(std::string_view text, const registry_ptr &reg)
{
    cursor cur(text);
    std::vector<formula_block> out;
    std::set<std::string> seen;
    while (!cur.at_end()) {
        const auto line = cur.line();
        cur.expect('[');
        cur.skip_space();
        std::string name(cur.take_while([](char c) { return c != ']' && c != '\n'; }));
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) {
            name.pop_back();
        }
        if (name.empty()) {
            cur.fail("empty block name");
        }
        cur.expect(']');
        if (!seen.insert(name).second) {
            throw parse_error("duplicate block '" + name + "'", line, 1);
        }
        parser p(cur, reg);
        auto value = p.relation();
        cur.expect(';');
        out.push_back({std::move(name), std::move(value), line});
    }
    return out;
}

std::string serialize_blocks(const std::vector<formula_block> &blocks)
{
    std::string out;
    for (const auto &b : blocks) {
        out += '[' + b.name + "] " + to_string(b.value) + " ;\n";
    }
    return out;
}

} // namespace trigonal
