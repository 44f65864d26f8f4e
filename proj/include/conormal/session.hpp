#pragma once

// Session files: a ring declaration, named ideals, matrices and candidate
// closures, settings, and an ordered list of commands.
//
//   ring u v t w over QQ order grevlex;
//   ideal p = u*t - v^2, uw - t*v, v*w - t^2;
//   matrix A = [w, 0, -t; 0, u, -v];
//   closure Gbar over assoc_graded(p) adjoin Y relations Y^2 - Y*x2 + x1*x3, ... expect-conductor mG;
//   set seed 0;
//   set max-degree 4;
//   run normality-criterion p;
//   run gb p as P;
//
// '#' starts a comment that runs to the end of the line.
// The "over" and "order" clauses of the ring default to QQ and grevlex.

#include "conormal/parse.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace conormal {

struct SourceLoc {
    int line = 1;
    int column = 1;
    bool operator==(const SourceLoc&) const = default;
};

class SessionError : public Error {
public:
    SessionError(const std::string& msg, SourceLoc where)
        : Error("line " + std::to_string(where.line) + ", column " + std::to_string(where.column) + ": " + msg),
          loc(where) {}
    SourceLoc loc;
};

struct RingDecl {
    std::vector<std::string> vars;
    std::string field = "QQ";
    std::string order = "grevlex";
    bool operator==(const RingDecl&) const = default;
};

struct IdealDecl {
    std::string name;
    std::vector<std::string> gens;
    bool operator==(const IdealDecl&) const = default;
};

struct MatrixDecl {
    std::string name;
    std::vector<std::vector<std::string>> rows;
    bool operator==(const MatrixDecl&) const = default;
};

struct ClosureDecl {
    std::string name;
    std::string over;  // ideal whose associated graded ring is extended
    std::vector<std::string> new_vars;
    std::vector<std::string> relations;
    std::optional<std::string> expect_conductor;  // "mG" or an ideal name
    bool operator==(const ClosureDecl&) const = default;
};

struct CommandDecl {
    std::string op;
    std::vector<std::string> args;
    std::optional<std::string> as_name;
    bool operator==(const CommandDecl&) const = default;
};

struct SessionFile {
    std::optional<RingDecl> ring;
    std::vector<IdealDecl> ideals;
    std::vector<MatrixDecl> matrices;
    std::vector<ClosureDecl> closures;
    std::optional<unsigned> seed;
    std::optional<int> max_degree;
    std::vector<CommandDecl> commands;
    std::vector<SourceLoc> command_locs;

    bool operator==(const SessionFile& o) const {
        return ring == o.ring && ideals == o.ideals && matrices == o.matrices && closures == o.closures &&
               seed == o.seed && max_degree == o.max_degree && commands == o.commands;
    }

    const IdealDecl* find_ideal(const std::string& n) const {
        for (const auto& d : ideals)
            if (d.name == n) return &d;
        return nullptr;
    }
    const MatrixDecl* find_matrix(const std::string& n) const {
        for (const auto& d : matrices)
            if (d.name == n) return &d;
        return nullptr;
    }
    const ClosureDecl* find_closure(const std::string& n) const {
        for (const auto& d : closures)
            if (d.name == n) return &d;
        return nullptr;
    }
};

/// Argument kinds of a command: I ideal, M matrix, X ideal or matrix, C closure,
/// N integer, W literal word. A trailing '?' marks an optional argument.
struct CommandSpec {
    const char* op;
    std::vector<std::string> args;
    bool yields_ideal;
};

inline const std::vector<CommandSpec>& command_table() {
    static const std::vector<CommandSpec> table = {
        {"gb", {"I"}, true},
        {"dim", {"I"}, false},
        {"fitting", {"X", "N?"}, false},
        {"resolve", {"X"}, false},
        {"conormal", {"I"}, false},
        {"bidual", {"I"}, false},
        {"det", {"I", "M?"}, true},
        {"rees", {"I"}, true},
        {"assoc-graded", {"I"}, true},
        {"component", {"N", "I", "W?"}, false},
        {"linear-type", {"I"}, false},
        {"spread", {"I"}, false},
        {"domain-criterion", {"I"}, false},
        {"normality-criterion", {"I"}, false},
        {"normal-locus", {"I"}, false},
        {"closedness-pipeline", {"I"}, false},
        {"nu2-check", {"I"}, false},
        {"sliding-depth", {"I"}, false},
        {"verify-closure", {"C"}, true},
    };
    return table;
}

inline const CommandSpec* find_command(const std::string& op) {
    for (const auto& c : command_table())
        if (op == c.op) return &c;
    return nullptr;
}

namespace detail {

struct Statement {
    std::string text;
    SourceLoc loc;
    std::vector<SourceLoc> positions;  // location of each character of text
};

/// Splits source text into ';'-terminated statements, dropping comments.
/// Semicolons nested in brackets do not terminate a statement.
inline std::vector<Statement> split_statements(const std::string& src) {
    std::vector<Statement> out;
    Statement cur;
    int depth = 0;
    SourceLoc at;
    bool in_comment = false;
    for (char ch : src) {
        SourceLoc here = at;
        if (ch == '\n') {
            ++at.line;
            at.column = 1;
        } else {
            ++at.column;
        }
        if (in_comment) {
            if (ch == '\n') in_comment = false;
            else continue;
        }
        if (ch == '#') {
            in_comment = true;
            continue;
        }
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (ch == ';' && depth <= 0) {
            out.push_back(std::move(cur));
            cur = Statement{};
            depth = 0;
            continue;
        }
        if (cur.positions.empty() && std::isspace(static_cast<unsigned char>(ch))) continue;
        if (cur.positions.empty()) cur.loc = here;
        cur.text.push_back(ch);
        cur.positions.push_back(here);
    }
    std::size_t n = cur.text.find_last_not_of(" \t\r\n");
    if (n != std::string::npos) throw SessionError("statement is missing its terminating ';'", cur.loc);
    for (auto& s : out) {
        std::size_t end = s.text.find_last_not_of(" \t\r\n");
        s.text.resize(end == std::string::npos ? 0 : end + 1);
        s.positions.resize(s.text.size());
    }
    std::erase_if(out, [](const Statement& s) { return s.text.empty(); });
    return out;
}

/// Cursor over one statement with location tracking.
class StatementReader {
public:
    explicit StatementReader(const Statement& s) : s_(s) {}

    SourceLoc loc() const { return pos_ < s_.positions.size() ? s_.positions[pos_] : end_loc(); }
    SourceLoc loc_at(std::size_t p) const { return p < s_.positions.size() ? s_.positions[p] : end_loc(); }
    bool at_end() {
        skip();
        return pos_ >= s_.text.size();
    }
    void skip() {
        while (pos_ < s_.text.size() && std::isspace(static_cast<unsigned char>(s_.text[pos_]))) ++pos_;
    }
    std::string word() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.text.size() && !std::isspace(static_cast<unsigned char>(s_.text[pos_])) && s_.text[pos_] != '=' &&
               s_.text[pos_] != ',')
            ++pos_;
        return s_.text.substr(b, pos_ - b);
    }
    std::string expect_word(const std::string& what) {
        SourceLoc where = (skip(), loc());
        std::string w = word();
        if (w.empty()) throw SessionError("expected " + what, where);
        return w;
    }
    void expect(char c) {
        skip();
        if (pos_ >= s_.text.size() || s_.text[pos_] != c)
            throw SessionError(std::string("expected '") + c + "'", loc());
        ++pos_;
    }
    bool peek_is(char c) {
        skip();
        return pos_ < s_.text.size() && s_.text[pos_] == c;
    }
    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }
    const std::string& text() const { return s_.text; }

private:
    SourceLoc end_loc() const {
        if (s_.positions.empty()) return s_.loc;
        SourceLoc l = s_.positions.back();
        ++l.column;
        return l;
    }
    const Statement& s_;
    std::size_t pos_ = 0;
};

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct Piece {
    std::string text;
    std::size_t offset;  // offset of the first character inside the statement
};

/// Splits text[b, e) at top-level occurrences of sep.
inline std::vector<Piece> split_top(const std::string& text, std::size_t b, std::size_t e, char sep) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = b;
    auto push = [&](std::size_t stop) {
        std::string raw = text.substr(start, stop - start);
        std::size_t lead = raw.find_first_not_of(" \t\r\n");
        out.push_back({trim(raw), lead == std::string::npos ? start : start + lead});
    };
    for (std::size_t i = b; i < e; ++i) {
        char c = text[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == sep && depth == 0) {
            push(i);
            start = i + 1;
        }
    }
    push(e);
    return out;
}

inline bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

inline bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline Field parse_field(const std::string& f, SourceLoc where) {
    if (f == "QQ") return Field::rationals();
    std::string digits;
    if (f.rfind("GF(", 0) == 0 && f.back() == ')') digits = f.substr(3, f.size() - 4);
    else if (f.rfind("ZZ/", 0) == 0) digits = f.substr(3);
    if (!is_integer(digits)) throw SessionError("unknown field '" + f + "' (use QQ or GF(p))", where);
    try {
        return Field::prime(std::stoull(digits));
    } catch (const Error& e) {
        throw SessionError(e.what(), where);
    } catch (const std::out_of_range&) {
        throw SessionError("field modulus out of range", where);
    }
}

inline MonomialOrder parse_order(const std::string& o, SourceLoc where) {
    if (o == "grevlex") return MonomialOrder::grevlex();
    if (o == "lex") return MonomialOrder::lex();
    throw SessionError("unknown monomial order '" + o + "' (use grevlex or lex)", where);
}

/// Parser holding the declarations seen so far.
class SessionParser {
public:
    SessionFile parse(const std::string& src) {
        for (const auto& st : split_statements(src)) statement(st);
        return std::move(s_);
    }

private:
    void statement(const Statement& st) {
        StatementReader r(st);
        SourceLoc kw_loc = (r.skip(), r.loc());
        std::string kw = r.word();
        if (kw == "ring") ring(r, kw_loc);
        else if (kw == "ideal") ideal(r);
        else if (kw == "matrix") matrix(r);
        else if (kw == "closure") closure(r);
        else if (kw == "set") setting(r);
        else if (kw == "run") command(r, kw_loc);
        else throw SessionError("unknown statement '" + kw + "'", kw_loc);
    }

    void need_ring(SourceLoc where) const {
        if (!ringptr_) throw SessionError("declaration before the ring statement", where);
    }

    void define(const std::string& name, SourceLoc where) {
        if (!is_identifier(name)) throw SessionError("invalid name '" + name + "'", where);
        if (ringptr_ && ringptr_->index_of(name) >= 0)
            throw SessionError("name '" + name + "' clashes with a ring variable", where);
        if (!names_.insert(name).second) throw SessionError("duplicate name '" + name + "'", where);
    }

    void check_poly(const StatementReader& r, const Piece& piece) const {
        if (piece.text.empty()) throw SessionError("empty polynomial", r.loc_at(piece.offset));
        try {
            poly_parse(ringptr_, piece.text);
        } catch (const ParseError& e) {
            throw SessionError(e.what(), r.loc_at(piece.offset + e.offset));
        } catch (const Error& e) {
            throw SessionError(e.what(), r.loc_at(piece.offset));
        }
    }

    void ring(StatementReader& r, SourceLoc kw_loc) {
        if (ringptr_) throw SessionError("ring declared twice", kw_loc);
        RingDecl d;
        std::string kw;
        SourceLoc kw_at;
        while (true) {
            SourceLoc w_loc = (r.skip(), r.loc());
            if (r.peek_is(',')) {
                r.expect(',');
                continue;
            }
            std::string w = r.word();
            if (w.empty() || w == "over" || w == "order") {
                kw = w;
                kw_at = w_loc;
                break;
            }
            if (!is_identifier(w)) throw SessionError("invalid variable name '" + w + "'", w_loc);
            d.vars.push_back(w);
        }
        if (d.vars.empty()) throw SessionError("ring needs at least one variable", kw_loc);
        Field field = Field::rationals();
        if (kw == "over") {
            SourceLoc f_loc = (r.skip(), r.loc());
            d.field = r.expect_word("a field");
            field = parse_field(d.field, f_loc);
            kw_at = (r.skip(), r.loc());
            kw = r.word();
        }
        MonomialOrder order = MonomialOrder::grevlex();
        if (kw == "order") {
            SourceLoc o_loc = (r.skip(), r.loc());
            d.order = r.expect_word("a monomial order");
            order = parse_order(d.order, o_loc);
        } else if (!kw.empty()) {
            throw SessionError("expected 'order'", kw_at);
        }
        if (!r.at_end()) throw SessionError("unexpected text after the ring declaration", r.loc());
        try {
            ringptr_ = ring_create(d.vars, field, order);
        } catch (const Error& e) {
            throw SessionError(e.what(), kw_loc);
        }
        for (const auto& n : names_)
            if (ringptr_->index_of(n) >= 0) throw SessionError("name '" + n + "' clashes with a ring variable", kw_loc);
        s_.ring = d;
    }

    void ideal(StatementReader& r) {
        SourceLoc n_loc = (r.skip(), r.loc());
        need_ring(n_loc);
        IdealDecl d;
        d.name = r.expect_word("an ideal name");
        define(d.name, n_loc);
        r.expect('=');
        r.skip();
        for (const auto& piece : split_top(r.text(), r.pos(), r.text().size(), ',')) {
            check_poly(r, piece);
            d.gens.push_back(piece.text);
        }
        s_.ideals.push_back(std::move(d));
        kinds_[s_.ideals.back().name] = 'I';
    }

    void matrix(StatementReader& r) {
        SourceLoc n_loc = (r.skip(), r.loc());
        need_ring(n_loc);
        MatrixDecl d;
        d.name = r.expect_word("a matrix name");
        define(d.name, n_loc);
        r.expect('=');
        r.expect('[');
        std::size_t b = r.pos();
        std::size_t e = r.text().rfind(']');
        if (e == std::string::npos || e < b) throw SessionError("expected ']'", r.loc());
        if (!trim(r.text().substr(e + 1)).empty()) throw SessionError("unexpected text after ']'", r.loc_at(e + 1));
        for (const auto& row : split_top(r.text(), b, e, ';')) {
            std::vector<std::string> entries;
            for (const auto& piece : split_top(r.text(), row.offset, row.offset + row.text.size(), ',')) {
                check_poly(r, piece);
                entries.push_back(piece.text);
            }
            if (!d.rows.empty() && entries.size() != d.rows.front().size())
                throw SessionError("matrix rows have different lengths", r.loc_at(row.offset));
            d.rows.push_back(std::move(entries));
        }
        s_.matrices.push_back(std::move(d));
        kinds_[s_.matrices.back().name] = 'M';
    }

    void closure(StatementReader& r) {
        SourceLoc n_loc = (r.skip(), r.loc());
        need_ring(n_loc);
        ClosureDecl d;
        d.name = r.expect_word("a closure name");
        define(d.name, n_loc);
        SourceLoc w_loc = (r.skip(), r.loc());
        if (r.word() != "over") throw SessionError("expected 'over'", w_loc);
        w_loc = (r.skip(), r.loc());
        std::string base = r.expect_word("assoc_graded(<ideal>)");
        if (base.rfind("assoc_graded(", 0) != 0 || base.back() != ')')
            throw SessionError("closure base must be assoc_graded(<ideal>)", w_loc);
        d.over = base.substr(13, base.size() - 14);
        if (kind(d.over) != 'I') throw SessionError("undefined ideal '" + d.over + "'", w_loc);
        w_loc = (r.skip(), r.loc());
        if (r.word() != "adjoin") throw SessionError("expected 'adjoin'", w_loc);
        while (true) {
            w_loc = (r.skip(), r.loc());
            if (r.peek_is(',')) {
                r.expect(',');
                continue;
            }
            std::string w = r.word();
            if (w == "relations") break;
            if (w.empty()) throw SessionError("expected 'relations'", w_loc);
            if (!is_identifier(w)) throw SessionError("invalid variable name '" + w + "'", w_loc);
            d.new_vars.push_back(w);
        }
        if (d.new_vars.empty()) throw SessionError("closure adjoins no variables", w_loc);
        r.skip();
        std::size_t b = r.pos();
        std::size_t e = r.text().size();
        std::size_t k = find_keyword(r.text(), "expect-conductor", b);
        if (k != std::string::npos) {
            e = k;
            r.set_pos(k + std::string("expect-conductor").size());
            SourceLoc c_loc = (r.skip(), r.loc());
            std::string target = r.expect_word("a conductor name");
            if (target != "mG" && kind(target) != 'I') throw SessionError("undefined ideal '" + target + "'", c_loc);
            if (!r.at_end()) throw SessionError("unexpected text after the conductor name", r.loc());
            d.expect_conductor = target;
        }
        // relations mention the presentation variables, checked when the closure is built
        for (const auto& piece : split_top(r.text(), b, e, ',')) {
            if (piece.text.empty()) throw SessionError("empty relation", r.loc_at(piece.offset));
            d.relations.push_back(piece.text);
        }
        s_.closures.push_back(std::move(d));
        kinds_[s_.closures.back().name] = 'C';
    }

    static std::size_t find_keyword(const std::string& text, const std::string& kw, std::size_t from) {
        std::size_t k = text.find(kw, from);
        while (k != std::string::npos) {
            bool left = k == 0 || std::isspace(static_cast<unsigned char>(text[k - 1]));
            std::size_t end = k + kw.size();
            bool right = end == text.size() || std::isspace(static_cast<unsigned char>(text[end]));
            if (left && right) return k;
            k = text.find(kw, k + 1);
        }
        return std::string::npos;
    }

    void setting(StatementReader& r) {
        SourceLoc k_loc = (r.skip(), r.loc());
        std::string key = r.expect_word("a setting name");
        SourceLoc v_loc = (r.skip(), r.loc());
        std::string value = r.expect_word("a value");
        if (!r.at_end()) throw SessionError("unexpected text after the setting", r.loc());
        if (!is_integer(value) || value.size() > 9) throw SessionError("setting value must be a non-negative integer", v_loc);
        if (key == "seed") s_.seed = static_cast<unsigned>(std::stoul(value));
        else if (key == "max-degree") s_.max_degree = std::stoi(value);
        else throw SessionError("unknown setting '" + key + "' (use seed or max-degree)", k_loc);
    }

    void command(StatementReader& r, SourceLoc kw_loc) {
        CommandDecl c;
        SourceLoc op_loc = (r.skip(), r.loc());
        c.op = r.expect_word("a command");
        const CommandSpec* spec = find_command(c.op);
        if (!spec) throw SessionError("unknown command '" + c.op + "'", op_loc);
        std::vector<std::pair<std::string, SourceLoc>> words;
        while (!r.at_end()) {
            SourceLoc w_loc = r.loc();
            if (r.peek_is(',')) {
                r.expect(',');
                continue;
            }
            words.push_back({r.word(), w_loc});
        }
        if (words.size() >= 2 && words[words.size() - 2].first == "as") {
            c.as_name = words.back().first;
            SourceLoc as_loc = words.back().second;
            words.resize(words.size() - 2);
            bind_args(*spec, c, words, op_loc);
            define(*c.as_name, as_loc);
            kinds_[*c.as_name] = spec->yields_ideal ? 'I' : 'R';
        } else {
            bind_args(*spec, c, words, op_loc);
        }
        s_.commands.push_back(std::move(c));
        s_.command_locs.push_back(kw_loc);
    }

    /// Matches words against the argument kinds; an omitted ideal argument
    /// defaults to the only ideal declared so far.
    void bind_args(const CommandSpec& spec, CommandDecl& c, const std::vector<std::pair<std::string, SourceLoc>>& words,
                   SourceLoc op_loc) {
        std::size_t w = 0;
        for (const auto& raw : spec.args) {
            bool optional = raw.size() > 1 && raw[1] == '?';
            char k = raw[0];
            if (w < words.size() && accepts(k, words[w].first)) {
                c.args.push_back(words[w].first);
                ++w;
                continue;
            }
            if (k == 'I' || k == 'X') {
                std::vector<std::string> ideals;
                for (const auto& [n, kd] : kinds_)
                    if (kd == 'I') ideals.push_back(n);
                if (ideals.size() == 1) {
                    c.args.push_back(ideals.front());
                    continue;
                }
            }
            if (optional) continue;
            if (w < words.size()) throw SessionError(describe(k, words[w].first), words[w].second);
            throw SessionError("command '" + c.op + "' is missing an argument (" + kind_name(k) + ")", op_loc);
        }
        if (w < words.size()) throw SessionError("unexpected argument '" + words[w].first + "'", words[w].second);
    }

    char kind(const std::string& n) const {
        auto it = kinds_.find(n);
        return it == kinds_.end() ? 0 : it->second;
    }

    bool accepts(char k, const std::string& w) const {
        switch (k) {
        case 'I': return kind(w) == 'I';
        case 'M': return kind(w) == 'M';
        case 'X': return kind(w) == 'I' || kind(w) == 'M';
        case 'C': return kind(w) == 'C';
        case 'N': return is_integer(w) && w.size() <= 9;
        case 'W': return w == "bidual";
        }
        return false;
    }

    std::string describe(char k, const std::string& w) const {
        if ((k == 'I' || k == 'M' || k == 'X' || k == 'C') && kind(w) == 0 && is_identifier(w))
            return "undefined reference '" + w + "'";
        return "expected " + kind_name(k) + ", got '" + w + "'";
    }

    static std::string kind_name(char k) {
        switch (k) {
        case 'I': return "an ideal";
        case 'M': return "a matrix";
        case 'X': return "an ideal or matrix";
        case 'C': return "a closure";
        case 'N': return "an integer";
        case 'W': return "the word 'bidual'";
        }
        return "?";
    }

    SessionFile s_;
    RingPtr ringptr_;
    std::set<std::string> names_;
    std::map<std::string, char> kinds_;
};

}  // namespace detail

inline SessionFile parse_session_text(const std::string& text) { return detail::SessionParser().parse(text); }

inline SessionFile parse_session(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SessionError("cannot read session file '" + path + "'", {});
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_session_text(ss.str());
}

/// Canonical text of a session; parse_session_text(format_session(s)) == s.
inline std::string format_session(const SessionFile& s) {
    std::ostringstream o;
    auto join = [](const std::vector<std::string>& v, const char* sep) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
        return out;
    };
    if (s.ring) o << "ring " << join(s.ring->vars, " ") << " over " << s.ring->field << " order " << s.ring->order << ";\n";
    for (const auto& d : s.ideals) o << "ideal " << d.name << " = " << join(d.gens, ", ") << ";\n";
    for (const auto& d : s.matrices) {
        std::vector<std::string> rows;
        for (const auto& r : d.rows) rows.push_back(join(r, ", "));
        o << "matrix " << d.name << " = [" << join(rows, "; ") << "];\n";
    }
    for (const auto& d : s.closures) {
        o << "closure " << d.name << " over assoc_graded(" << d.over << ") adjoin " << join(d.new_vars, " ")
          << " relations " << join(d.relations, ", ");
        if (d.expect_conductor) o << " expect-conductor " << *d.expect_conductor;
        o << ";\n";
    }
    if (s.seed) o << "set seed " << *s.seed << ";\n";
    if (s.max_degree) o << "set max-degree " << *s.max_degree << ";\n";
    for (const auto& c : s.commands) {
        o << "run " << c.op;
        for (const auto& a : c.args) o << " " << a;
        if (c.as_name) o << " as " << *c.as_name;
        o << ";\n";
    }
    return o.str();
}

}  // namespace conormal
