#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "pomdplite/plite.hpp"

namespace pomdplite {
namespace {

struct Token {
    enum class Kind { Ident, Number, Colon, Eol, Eof };
    Kind kind;
    std::string text;
    double number = 0.0;
    int line = 0, col = 0;
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            if (c == '\n') {
                Token t{Token::Kind::Eol, "\n", 0.0, line_, col_};
                advance();
                return t;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
                continue;
            }
            break;
        }
        if (pos_ >= text_.size()) return Token{Token::Kind::Eof, "", 0.0, line_, col_};

        const int line = line_, col = col_;
        const char c = text_[pos_];
        if (c == ':') {
            advance();
            return Token{Token::Kind::Colon, ":", 0.0, line, col};
        }
        const bool numeric =
            std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
            ((c == '+' || c == '-') && pos_ + 1 < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '.'));
        if (numeric) {
            std::string tok;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '.' || text_[pos_] == '+' ||
                                           text_[pos_] == '-' || text_[pos_] == 'e' ||
                                           text_[pos_] == 'E')) {
                tok += text_[pos_];
                advance();
            }
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end != tok.c_str() + tok.size())
                throw ParseError(line, col, "malformed number '" + tok + "'");
            return Token{Token::Kind::Number, tok, v, line, col};
        }
        if (ident_char(c)) {
            std::string tok;
            while (pos_ < text_.size() && ident_char(text_[pos_])) {
                tok += text_[pos_];
                advance();
            }
            return Token{Token::Kind::Ident, tok, 0.0, line, col};
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

struct TableRow {
    int theta, x, a;
    int target;  // state / observation index (kNullObs for null) / unused for R
    double value;
    int line, col;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

    std::shared_ptr<TabularModel> parse() {
        parse_header();
        while (tok_.kind != Token::Kind::Eof) {
            if (tok_.kind == Token::Kind::Eol) {
                consume();
                continue;
            }
            parse_line();
        }
        return finish();
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& msg) {
        throw ParseError(at.line, at.col, msg);
    }

    void consume() { tok_ = lexer_.next(); }

    Token expect(Token::Kind kind, const std::string& what) {
        if (tok_.kind != kind) fail(tok_, "expected " + what + ", got '" + tok_.text + "'");
        Token t = tok_;
        consume();
        return t;
    }

    void expect_eol() {
        if (tok_.kind == Token::Kind::Eof) return;
        if (tok_.kind != Token::Kind::Eol) fail(tok_, "expected end of line");
        consume();
    }

    double expect_number(const std::string& what) {
        return expect(Token::Kind::Number, what).number;
    }

    void parse_header() {
        while (tok_.kind == Token::Kind::Eol) consume();
        Token magic = expect(Token::Kind::Ident, "header 'plite <version>'");
        if (magic.text != "plite") fail(magic, "file must start with the header 'plite 1'");
        Token version = expect(Token::Kind::Number, "format version");
        if (version.number != 1.0)
            fail(version, "unsupported plite version '" + version.text + "' (expected 1)");
        expect_eol();
    }

    std::vector<Token> ident_list() {
        std::vector<Token> out;
        while (tok_.kind == Token::Kind::Ident) {
            out.push_back(tok_);
            consume();
        }
        return out;
    }

    void declare(std::vector<std::string>& names, std::unordered_map<std::string, int>& index,
                 const Token& t, const std::string& what) {
        if (t.text == "null") fail(t, "'null' is reserved for the null observation");
        if (!index.emplace(t.text, static_cast<int>(names.size())).second)
            fail(t, "duplicate " + what + " '" + t.text + "'");
        names.push_back(t.text);
    }

    void section_once(bool& seen, const Token& at, const std::string& what) {
        if (seen) fail(at, "duplicate section '" + what + "'");
        seen = true;
    }

    int resolve(const std::unordered_map<std::string, int>& index, const Token& t,
                const std::string& what) {
        auto it = index.find(t.text);
        if (it == index.end()) fail(t, "undeclared " + what + " '" + t.text + "'");
        return it->second;
    }

    void parse_line() {
        Token head = expect(Token::Kind::Ident, "section or table keyword");
        expect(Token::Kind::Colon, "':'");
        const std::string& key = head.text;
        if (key == "discount") {
            section_once(seen_discount_, head, key);
            Token num = expect(Token::Kind::Number, "discount value");
            if (!(num.number > 0.0 && num.number <= 1.0))
                fail(num, "discount must be in (0, 1]");
            gamma_ = num.number;
        } else if (key == "states") {
            section_once(seen_states_, head, key);
            for (const Token& t : ident_list()) declare(states_, state_index_, t, "state");
            if (states_.empty()) fail(head, "state set must be nonempty");
        } else if (key == "params") {
            section_once(seen_params_, head, key);
            for (const Token& t : ident_list()) declare(params_, param_index_, t, "param");
            if (params_.empty()) fail(head, "hidden parameter set must be nonempty");
        } else if (key == "actions") {
            section_once(seen_actions_, head, key);
            for (const Token& t : ident_list()) declare(actions_, action_index_, t, "action");
            if (actions_.empty()) fail(head, "action set must be nonempty");
        } else if (key == "observations") {
            section_once(seen_observations_, head, key);
            for (const Token& t : ident_list()) declare(obs_, obs_index_, t, "observation");
        } else if (key == "initial") {
            section_once(seen_initial_, head, key);
            Token t = expect(Token::Kind::Ident, "initial state name");
            initial_tok_ = t;
        } else if (key == "terminal") {
            section_once(seen_terminal_, head, key);
            terminal_toks_ = ident_list();
        } else if (key == "prior") {
            section_once(seen_prior_, head, key);
            while (tok_.kind == Token::Kind::Ident) {
                Token id = tok_;
                consume();
                const double p = expect_number("prior weight");
                prior_toks_.emplace_back(id, p);
            }
            if (prior_toks_.empty()) fail(head, "prior must list at least one weight");
        } else if (key == "T" || key == "Z" || key == "R") {
            TableRow row{};
            Token tt = expect(Token::Kind::Ident, "param name");
            Token tx = expect(Token::Kind::Ident, "state name");
            Token ta = expect(Token::Kind::Ident, "action name");
            row.line = tt.line;
            row.col = tt.col;
            row.theta = resolve(param_index_, tt, "param");
            row.x = resolve(state_index_, tx, "state");
            row.a = resolve(action_index_, ta, "action");
            if (key == "T") {
                Token tn = expect(Token::Kind::Ident, "successor state name");
                row.target = resolve(state_index_, tn, "state");
                Token tv = expect(Token::Kind::Number, "probability");
                if (tv.number < 0.0 || tv.number > 1.0) fail(tv, "probability must be in [0, 1]");
                row.value = tv.number;
                t_rows_.push_back(row);
            } else if (key == "Z") {
                Token to = expect(Token::Kind::Ident, "observation name");
                row.target = to.text == "null" ? kNullObs : resolve(obs_index_, to, "observation");
                Token tv = expect(Token::Kind::Number, "probability");
                if (tv.number < 0.0 || tv.number > 1.0) fail(tv, "probability must be in [0, 1]");
                row.value = tv.number;
                z_rows_.push_back(row);
            } else {
                Token tv = expect(Token::Kind::Number, "reward");
                row.value = tv.number;
                r_rows_.push_back(row);
            }
        } else {
            fail(head, "unknown section '" + key + "'");
        }
        expect_eol();
    }

    std::shared_ptr<TabularModel> finish() {
        const Token eof{Token::Kind::Eof, "", 0.0, 1, 1};
        if (!seen_params_) throw ParseError(1, 1, "missing section: params (hidden parameter set must be nonempty)");
        if (!seen_states_) throw ParseError(1, 1, "missing section: states");
        if (!seen_actions_) throw ParseError(1, 1, "missing section: actions");
        if (!seen_discount_) throw ParseError(1, 1, "missing section: discount");
        if (!seen_initial_) throw ParseError(1, 1, "missing section: initial");
        if (!seen_prior_) throw ParseError(1, 1, "missing section: prior");

        TabularModel::Data d;
        d.model_name = "plite";
        d.gamma = gamma_;
        d.states = states_;
        d.params = params_;
        d.actions = actions_;
        d.observations = obs_;
        d.initial_state = resolve(state_index_, initial_tok_, "state");
        d.terminal.assign(states_.size(), false);
        for (const Token& t : terminal_toks_) d.terminal[resolve(state_index_, t, "state")] = true;

        d.prior.assign(params_.size(), 0.0);
        std::vector<bool> prior_seen(params_.size(), false);
        double prior_sum = 0.0;
        for (const auto& [tok, p] : prior_toks_) {
            const int i = resolve(param_index_, tok, "param");
            if (prior_seen[i]) fail(tok, "duplicate prior entry for '" + tok.text + "'");
            if (p < 0.0) fail(tok, "prior weight must be nonnegative");
            prior_seen[i] = true;
            d.prior[i] = p;
            prior_sum += p;
        }
        if (std::abs(prior_sum - 1.0) > 1e-9)
            fail(prior_toks_.front().first,
                 "prior sums to " + std::to_string(prior_sum) + ", expected 1");

        const std::size_t S = states_.size(), A = actions_.size(), N = params_.size();
        d.transition.resize(N * S * A);
        d.observation.resize(N * S * A);
        d.rewards.resize(N * S * A, 0.0);
        auto cell = [&](const TableRow& row) {
            return (static_cast<std::size_t>(row.theta) * S + row.x) * A + row.a;
        };

        for (const TableRow& row : t_rows_) {
            auto& rows = d.transition[cell(row)];
            for (const auto& r : rows)
                if (r.next == row.target)
                    throw ParseError(row.line, row.col,
                                     "duplicate T row for (" + params_[row.theta] + ", " +
                                         states_[row.x] + ", " + actions_[row.a] + ", " +
                                         states_[row.target] + ")");
            rows.push_back({row.target, row.value});
        }
        for (const TableRow& row : z_rows_) {
            auto& rows = d.observation[cell(row)];
            for (const auto& r : rows)
                if (r.next == row.target)
                    throw ParseError(row.line, row.col,
                                     "duplicate Z row for (" + params_[row.theta] + ", " +
                                         states_[row.x] + ", " + actions_[row.a] + ")");
            rows.push_back({row.target, row.value});
        }
        std::vector<bool> r_seen(N * S * A, false);
        for (const TableRow& row : r_rows_) {
            if (r_seen[cell(row)])
                throw ParseError(row.line, row.col,
                                 "duplicate R row for (" + params_[row.theta] + ", " +
                                     states_[row.x] + ", " + actions_[row.a] + ")");
            r_seen[cell(row)] = true;
            d.rewards[cell(row)] = row.value;
        }

        // Normalization with source positions (the model constructor would
        // reject these too, but without line/column info).
        for (std::size_t t = 0; t < N; ++t)
            for (std::size_t x = 0; x < S; ++x) {
                if (d.terminal[x]) continue;
                for (std::size_t a = 0; a < A; ++a) {
                    const auto& rows = d.transition[(t * S + x) * A + a];
                    double sum = 0.0;
                    for (const auto& r : rows) sum += r.p;
                    if (rows.empty() || std::abs(sum - 1.0) > 1e-9) {
                        const auto [line, col] = first_row_pos(t_rows_, t, x, a);
                        throw ParseError(line, col,
                                         "transition rows for (" + params_[t] + ", " + states_[x] +
                                             ", " + actions_[a] + ") sum to " +
                                             std::to_string(sum) + ", expected 1");
                    }
                }
            }
        for (std::size_t t = 0; t < N; ++t)
            for (std::size_t x2 = 0; x2 < S; ++x2)
                for (std::size_t a = 0; a < A; ++a) {
                    const auto& rows = d.observation[(t * S + x2) * A + a];
                    if (rows.empty()) continue;
                    double sum = 0.0;
                    for (const auto& r : rows) sum += r.p;
                    if (std::abs(sum - 1.0) > 1e-9) {
                        const auto [line, col] = first_row_pos(z_rows_, t, x2, a);
                        throw ParseError(line, col,
                                         "observation rows for (" + params_[t] + ", " +
                                             states_[x2] + ", " + actions_[a] + ") sum to " +
                                             std::to_string(sum) + ", expected 1");
                    }
                }

        return std::make_shared<TabularModel>(std::move(d));
    }

    std::pair<int, int> first_row_pos(const std::vector<TableRow>& rows, std::size_t t,
                                      std::size_t x, std::size_t a) const {
        for (const auto& row : rows)
            if (row.theta == static_cast<int>(t) && row.x == static_cast<int>(x) &&
                row.a == static_cast<int>(a))
                return {row.line, row.col};
        return {1, 1};
    }

    Lexer lexer_;
    Token tok_;

    double gamma_ = 0.95;
    std::vector<std::string> states_, params_, actions_, obs_;
    std::unordered_map<std::string, int> state_index_, param_index_, action_index_, obs_index_;
    Token initial_tok_;
    std::vector<Token> terminal_toks_;
    std::vector<std::pair<Token, double>> prior_toks_;
    std::vector<TableRow> t_rows_, z_rows_, r_rows_;
    bool seen_discount_ = false, seen_states_ = false, seen_params_ = false,
         seen_actions_ = false, seen_observations_ = false, seen_initial_ = false,
         seen_terminal_ = false, seen_prior_ = false;
};

}  // namespace

std::shared_ptr<TabularModel> parse_model(std::string_view text) {
    return Parser(text).parse();
}

std::shared_ptr<TabularModel> parse_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

}  // namespace pomdplite
