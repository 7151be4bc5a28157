#include "fring/fp_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace fring {

namespace {

unsigned inverse_mod(unsigned a, unsigned p) {
    for (unsigned x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw UsageError("no inverse modulo " + std::to_string(p));
}

void add_term(WordPoly& out, const Word& w, unsigned c, unsigned p) {
    c %= p;
    if (c == 0) return;
    auto it = out.terms.find(w);
    if (it == out.terms.end()) {
        out.terms.emplace(w, static_cast<std::uint8_t>(c));
        return;
    }
    const unsigned s = (it->second + c) % p;
    if (s == 0) out.terms.erase(it);
    else it->second = static_cast<std::uint8_t>(s);
}

Word concat(const Word& a, const Word& b) {
    Word out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// ---- lexer ----

enum class Tok { Ident, Number, Symbol, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance();
            continue;
        }
        if (c == '\n') {
            out.push_back({Tok::Newline, "\n", line, col});
            advance();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        const std::size_t l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                s += text[i];
                advance();
            }
            out.push_back({Tok::Ident, s, l, cl});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                s += text[i];
                advance();
            }
            out.push_back({Tok::Number, s, l, cl});
            continue;
        }
        if (std::string_view("*+-=^,;").find(c) != std::string_view::npos) {
            out.push_back({Tok::Symbol, std::string(1, c), l, cl});
            advance();
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Presentation presentation() {
        Presentation p;
        bool have_field = false, have_generators = false;
        for (;;) {
            skip_separators(false);
            const Token& t = peek();
            if (t.kind == Tok::End) break;
            if (t.kind != Tok::Ident) fail("expected 'field', 'generators' or 'relations'", t);
            if (t.text == "field") {
                if (have_field) fail("duplicate 'field' statement", t);
                next();
                p.characteristic = field(next());
                have_field = true;
                end_statement();
            } else if (t.text == "generators") {
                if (have_generators) fail("duplicate 'generators' statement", t);
                next();
                while (peek().kind == Tok::Ident) {
                    const Token& g = next();
                    if (g.text == "field" || g.text == "generators" || g.text == "relations")
                        fail("reserved word '" + g.text + "' used as a generator", g);
                    if (std::find(p.generators.begin(), p.generators.end(), g.text) != p.generators.end())
                        fail("duplicate generator '" + g.text + "'", g);
                    if (p.generators.size() == 255) fail("too many generators", g);
                    p.generators.push_back(g.text);
                }
                have_generators = true;
                end_statement();
            } else if (t.text == "relations") {
                if (!have_field) fail("'relations' before 'field'", t);
                if (!have_generators) fail("'relations' before 'generators'", t);
                next();
                p_ = &p;
                relations(p);
                break;
            } else {
                fail("expected 'field', 'generators' or 'relations'", t);
            }
        }
        if (!have_field) fail("missing 'field' statement", peek());
        if (!have_generators) fail("missing 'generators' statement", peek());
        return p;
    }

    WordPoly expression(const Presentation& p) {
        p_ = &p;
        while (peek().kind == Tok::Newline) next();
        WordPoly out = poly();
        while (peek().kind == Tok::Newline) next();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
        return out;
    }

private:
    [[noreturn]] static void fail(const std::string& msg, const Token& t) {
        throw ParseError(msg, t.line, t.column);
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool is_symbol(char c) const { return peek().kind == Tok::Symbol && peek().text[0] == c; }

    void skip_separators(bool commas) {
        while (peek().kind == Tok::Newline || is_symbol(';') || (commas && is_symbol(','))) next();
    }

    void end_statement() {
        const Token& t = peek();
        if (t.kind == Tok::Newline || t.kind == Tok::End || is_symbol(';')) return;
        fail("unexpected '" + t.text + "'", t);
    }

    static unsigned field(const Token& t) {
        if (t.kind != Tok::Ident || t.text.size() < 2 || t.text[0] != 'F' ||
            !std::all_of(t.text.begin() + 1, t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail("expected a field F<p>", t);
        const std::string digits = t.text.substr(1);
        const unsigned p = digits.size() > 3 ? 1000u : static_cast<unsigned>(std::stoul(digits));
        if (!is_prime(p)) fail("characteristic " + digits + " is not prime", t);
        if (p > 7) fail("characteristic " + digits + " exceeds the supported maximum 7", t);
        return p;
    }

    void relations(Presentation& p) {
        for (;;) {
            skip_separators(true);
            if (peek().kind == Tok::End) return;
            std::vector<WordPoly> chain{poly()};
            while (is_symbol('=')) {
                next();
                chain.push_back(poly());
            }
            if (chain.size() < 2) fail("expected '=' in relation", peek());
            for (std::size_t k = 0; k + 1 < chain.size(); ++k) p.relations.push_back({chain[k], chain[k + 1]});
            const Token& t = peek();
            if (!(t.kind == Tok::Newline || t.kind == Tok::End || is_symbol(',') || is_symbol(';')))
                fail("unexpected '" + t.text + "'", t);
        }
    }

    WordPoly poly() {
        const unsigned p = p_->characteristic;
        WordPoly out;
        bool negate = false;
        if (is_symbol('-')) {
            next();
            negate = true;
        } else if (is_symbol('+')) {
            next();
        }
        for (;;) {
            auto [w, c] = term();
            if (negate) c = (p - c) % p;
            add_term(out, w, c, p);
            if (is_symbol('+')) negate = false;
            else if (is_symbol('-')) negate = true;
            else return out;
            next();
        }
    }

    std::pair<Word, unsigned> term() {
        const unsigned p = p_->characteristic;
        Word w;
        unsigned c = 1;
        for (;;) {
            const Token& t = next();
            if (t.kind == Tok::Number) {
                unsigned v = 0;
                for (char ch : t.text) v = (v * 10 + static_cast<unsigned>(ch - '0')) % p;
                c = c * v % p;
            } else if (t.kind == Tok::Ident) {
                const auto& gens = p_->generators;
                auto it = std::find(gens.begin(), gens.end(), t.text);
                if (it == gens.end()) fail("unknown generator '" + t.text + "'", t);
                const auto g = static_cast<std::uint8_t>(it - gens.begin());
                std::size_t power = 1;
                if (is_symbol('^')) {
                    next();
                    const Token& e = next();
                    if (e.kind != Tok::Number || e.text.size() > 3) fail("expected a small exponent", e);
                    power = std::stoul(e.text);
                }
                w.insert(w.end(), power, g);
            } else {
                fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
            }
            if (!is_symbol('*')) return {w, c};
            next();
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Presentation* p_ = nullptr;
};

}  // namespace

bool WordOrder::operator()(const Word& a, const Word& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::size_t WordPoly::max_length() const noexcept {
    return terms.empty() ? 0 : terms.rbegin()->first.size();
}

WordPoly WordPoly::scalar(std::uint8_t c, unsigned p) {
    WordPoly out;
    add_term(out, {}, c, p);
    return out;
}

WordPoly WordPoly::word(Word w) {
    WordPoly out;
    out.terms.emplace(std::move(w), 1);
    return out;
}

WordPoly wp_add(const WordPoly& a, const WordPoly& b, unsigned p) {
    WordPoly out = a;
    for (const auto& [w, c] : b.terms) add_term(out, w, c, p);
    return out;
}

WordPoly wp_scale(const WordPoly& a, unsigned c, unsigned p) {
    WordPoly out;
    for (const auto& [w, x] : a.terms) add_term(out, w, x * (c % p), p);
    return out;
}

WordPoly wp_sub(const WordPoly& a, const WordPoly& b, unsigned p) {
    return wp_add(a, wp_scale(b, p - 1, p), p);
}

WordPoly wp_mul(const WordPoly& a, const WordPoly& b, unsigned p) {
    WordPoly out;
    for (const auto& [u, x] : a.terms)
        for (const auto& [v, y] : b.terms) add_term(out, concat(u, v), x * y, p);
    return out;
}

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

WordPoly parse_word_poly(const Presentation& p, std::string_view text) {
    return Parser(text).expression(p);
}

std::string format_word(const std::vector<std::string>& generators, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += '*';
        out += generators.at(w[k]);
    }
    return out;
}

std::string format_word_poly(const std::vector<std::string>& generators, const WordPoly& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const auto& [w, c] = *it;
        if (c == 1) out += format_word(generators, w);
        else if (w.empty()) out += std::to_string(c);
        else out += std::to_string(c) + "*" + format_word(generators, w);
    }
    return out;
}

std::string serialize(const Presentation& p) {
    std::string out = "field F" + std::to_string(p.characteristic) + "\ngenerators";
    for (const auto& g : p.generators) out += " " + g;
    out += "\nrelations\n";
    for (const auto& r : p.relations)
        out += format_word_poly(p.generators, r.lhs) + " = " + format_word_poly(p.generators, r.rhs) + "\n";
    return out;
}

std::string builtin_presentation_text(std::string_view name) {
    if (name == "ex22")
        return "field F2\n"
               "generators x y z\n"
               "relations\n"
               "x^2 = y*x = x, z^2 = 0, y^2 = x*y = y, z*x = x*z = y*z = z*y = z\n";
    if (name == "ex23")
        return "field F2\n"
               "generators a0 b0 a1 b1\n"
               "relations\n"
               "a0*b0 = 0, a0*b1 + a1*b0 = 0, a1*b1 = 0\n"
               "b0*b0 = 0, b0*b1 = 0, b1*b0 = 0, b1*b1 = 0\n";
    throw UsageError("unknown built-in presentation '" + std::string(name) + "'");
}

std::vector<std::string> builtin_presentation_names() { return {"ex22", "ex23"}; }

// ---- rewriting ----

RewriteSystem::RewriteSystem(Presentation presentation, std::vector<Rule> rules, CompletionStatus status,
                             std::size_t critical_pairs)
    : presentation_(std::move(presentation)), rules_(std::move(rules)), status_(status),
      critical_pairs_(critical_pairs) {}

std::size_t RewriteSystem::longest_lead() const noexcept {
    std::size_t out = 0;
    for (const auto& r : rules_) out = std::max(out, r.lead.size());
    return out;
}

namespace {

// Position of the first rule occurrence in w as (rule, offset).
std::optional<std::pair<std::size_t, std::size_t>> find_redex(const std::vector<Rule>& rules, const Word& w) {
    for (std::size_t k = 0; k < rules.size(); ++k) {
        const Word& lead = rules[k].lead;
        if (lead.size() > w.size()) continue;
        auto it = std::search(w.begin(), w.end(), lead.begin(), lead.end());
        if (it != w.end() || lead.empty()) return std::pair{k, static_cast<std::size_t>(it - w.begin())};
    }
    return std::nullopt;
}

WordPoly reduce(const std::vector<Rule>& rules, const WordPoly& e, unsigned p) {
    WordPoly work = e, out;
    while (!work.is_zero()) {
        auto it = std::prev(work.terms.end());
        const Word w = it->first;
        const unsigned c = it->second;
        work.terms.erase(it);
        auto redex = find_redex(rules, w);
        if (!redex) {
            add_term(out, w, c, p);
            continue;
        }
        const auto& [k, off] = *redex;
        const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(off));
        const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(off + rules[k].lead.size()), w.end());
        for (const auto& [v, x] : rules[k].rhs.terms) add_term(work, concat(concat(prefix, v), suffix), c * x, p);
    }
    return out;
}

}  // namespace

bool RewriteSystem::is_reducible(const Word& w) const { return find_redex(rules_, w).has_value(); }

AlgebraElement RewriteSystem::normal_form(const WordPoly& e) const {
    return reduce(rules_, e, characteristic());
}

AlgebraElement RewriteSystem::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    return normal_form(wp_mul(a, b, characteristic()));
}

std::string RewriteSystem::format() const {
    std::string out = complete() ? "COMPLETE" : "CAPPED";
    out += " (" + std::to_string(rules_.size()) + " rules, " + std::to_string(critical_pairs_) +
           " critical pairs)\n";
    for (const auto& r : rules_)
        out += "  " + format_word(generators(), r.lead) + " -> " + format_word_poly(generators(), r.rhs) + "\n";
    return out;
}

RewriteSystem complete_rewrite(const Presentation& pres, std::size_t cap) {
    const unsigned p = pres.characteristic;
    struct Live {
        std::size_t id;
        Rule rule;
    };
    std::vector<Live> live;
    std::size_t next_id = 0;
    std::deque<WordPoly> pending;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t resolved = 0;
    CompletionStatus status = CompletionStatus::Complete;

    auto rules_view = [&] {
        std::vector<Rule> out;
        out.reserve(live.size());
        for (const auto& l : live) out.push_back(l.rule);
        return out;
    };
    auto as_poly = [&](const Rule& r) { return wp_sub(WordPoly::word(r.lead), r.rhs, p); };

    for (const auto& rel : pres.relations) pending.push_back(wp_sub(rel.lhs, rel.rhs, p));

    auto insert = [&](const WordPoly& e) {
        WordPoly h = reduce(rules_view(), e, p);
        if (h.is_zero()) return;
        const Word lead = h.lead();
        if (lead.empty()) throw InconsistentPresentation("relations imply 1 = 0");
        h = wp_scale(h, inverse_mod(h.terms.rbegin()->second, p), p);
        WordPoly rhs = wp_sub(WordPoly::word(lead), h, p);
        std::vector<Live> kept;
        for (auto& l : live) {
            const Word& w = l.rule.lead;
            if (w.size() >= lead.size() && std::search(w.begin(), w.end(), lead.begin(), lead.end()) != w.end())
                pending.push_back(as_poly(l.rule));
            else
                kept.push_back(std::move(l));
        }
        live = std::move(kept);
        const std::size_t id = next_id++;
        live.push_back({id, {lead, rhs}});
        std::vector<Rule> view = rules_view();
        for (auto& l : live) l.rule.rhs = reduce(view, l.rule.rhs, p);
        for (const auto& l : live) {
            pairs.emplace_back(id, l.id);
            if (l.id != id) pairs.emplace_back(l.id, id);
        }
    };

    auto find_live = [&](std::size_t id) -> const Rule* {
        for (const auto& l : live)
            if (l.id == id) return &l.rule;
        return nullptr;
    };

    while (!pending.empty() || !pairs.empty()) {
        if (!pending.empty()) {
            WordPoly e = std::move(pending.front());
            pending.pop_front();
            insert(e);
            continue;
        }
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        const Rule* r1 = find_live(i);
        const Rule* r2 = find_live(j);
        if (!r1 || !r2) continue;
        if (resolved == cap) {
            status = CompletionStatus::Capped;
            break;
        }
        ++resolved;
        const Word a = r1->lead, b = r2->lead;
        const WordPoly ra = r1->rhs, rb = r2->rhs;
        // lead1 = u v, lead2 = v w with u, v, w nonempty.
        for (std::size_t len = 1; len < a.size() && len < b.size(); ++len) {
            if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(len), a.end(), b.begin())) continue;
            const Word u(a.begin(), a.end() - static_cast<std::ptrdiff_t>(len));
            const Word w(b.begin() + static_cast<std::ptrdiff_t>(len), b.end());
            pending.push_back(
                wp_sub(wp_mul(ra, WordPoly::word(w), p), wp_mul(WordPoly::word(u), rb, p), p));
        }
    }

    std::vector<Rule> rules = rules_view();
    std::sort(rules.begin(), rules.end(),
              [](const Rule& x, const Rule& y) { return WordOrder{}(x.lead, y.lead); });
    for (auto& r : rules) r.rhs = reduce(rules, r.rhs, p);
    return RewriteSystem(pres, std::move(rules), status, resolved);
}

std::vector<Word> irreducible_words(const RewriteSystem& rs, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::vector<Word> level{Word{}};
    const auto n = rs.generators().size();
    for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
        std::vector<Word> nxt;
        for (const auto& w : level)
            for (std::size_t g = 0; g < n; ++g) {
                Word x = w;
                x.push_back(static_cast<std::uint8_t>(g));
                if (!rs.is_reducible(x)) nxt.push_back(std::move(x));
            }
        std::sort(nxt.begin(), nxt.end());
        out.insert(out.end(), nxt.begin(), nxt.end());
        level = std::move(nxt);
    }
    return out;
}

namespace {

class FpAlgebraModel final : public RingModel {
public:
    FpAlgebraModel(const RewriteSystem& rs, std::vector<Word> basis)
        : p_(rs.characteristic()), dim_(basis.size()), gens_(rs.generators()), basis_(std::move(basis)) {
        size_ = 1;
        for (std::size_t k = 0; k < dim_; ++k) size_ *= p_;
        std::map<Word, std::size_t, WordOrder> pos;
        for (std::size_t k = 0; k < dim_; ++k) pos.emplace(basis_[k], k);
        structure_.assign(dim_ * dim_ * dim_, 0);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                const auto prod = rs.normal_form(WordPoly::word(concat(basis_[i], basis_[j])));
                for (const auto& [w, c] : prod.terms) structure_[(i * dim_ + j) * dim_ + pos.at(w)] = c;
            }
    }

    Index size() const override { return size_; }
    Index one() const override { return 1; }

    Index add(Index a, Index b) const override {
        Index out = 0, scale = 1;
        for (std::size_t k = 0; k < dim_; ++k, scale *= p_) {
            out += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
        }
        return out;
    }

    Index neg(Index a) const override {
        Index out = 0, scale = 1;
        for (std::size_t k = 0; k < dim_; ++k, scale *= p_) {
            out += ((p_ - a % p_) % p_) * scale;
            a /= p_;
        }
        return out;
    }

    Index mul(Index a, Index b) const override {
        const auto x = digits(a), y = digits(b);
        std::vector<unsigned> acc(dim_, 0);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!y[j]) continue;
                const unsigned c = x[i] * y[j];
                const std::uint8_t* row = &structure_[(i * dim_ + j) * dim_];
                for (std::size_t k = 0; k < dim_; ++k) acc[k] += c * row[k];
            }
        }
        Index out = 0;
        for (std::size_t k = dim_; k-- > 0;) out = out * p_ + acc[k] % p_;
        return out;
    }

    std::string format(Index a) const override {
        WordPoly e;
        const auto x = digits(a);
        for (std::size_t k = 0; k < dim_; ++k)
            if (x[k]) e.terms.emplace(basis_[k], static_cast<std::uint8_t>(x[k]));
        return format_word_poly(gens_, e);
    }

private:
    std::vector<unsigned> digits(Index a) const {
        std::vector<unsigned> out(dim_);
        for (auto& d : out) {
            d = a % p_;
            a /= p_;
        }
        return out;
    }

    unsigned p_;
    std::size_t dim_;
    std::vector<std::string> gens_;
    std::vector<Word> basis_;
    Index size_ = 1;
    std::vector<std::uint8_t> structure_;
};

}  // namespace

FiniteRing realize_finite(const RewriteSystem& rs, const RealizeOptions& opts) {
    if (!rs.complete())
        throw UsageError("realize_finite requires a complete rewrite system; this one is CAPPED");
    const std::size_t probe = std::max<std::size_t>(1, 2 * rs.longest_lead());
    auto words = irreducible_words(rs, probe + 1);
    if (!words.empty() && words.back().size() > probe)
        throw NotFiniteDimensional("irreducible words of length " + std::to_string(probe + 1) +
                                   " exist; use a truncated view instead");
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < words.size(); ++k) {
        size *= rs.characteristic();
        if (size > opts.size_cap)
            throw CapacityError("algebra of dimension " + std::to_string(words.size()) + " over F" +
                                std::to_string(rs.characteristic()) + " exceeds the size cap " +
                                std::to_string(opts.size_cap));
    }
    BasisInfo info{rs.characteristic(), {}};
    for (const auto& w : words) info.names.push_back(format_word(rs.generators(), w));
    return FiniteRing(std::make_shared<FpAlgebraModel>(rs, words), opts.label, std::move(info));
}

TruncatedAlgebra::TruncatedAlgebra(RewriteSystem rs, std::size_t window, std::size_t max_dimension)
    : rs_(std::move(rs)), window_(window) {
    basis_ = irreducible_words(rs_, window_);
    if (basis_.size() > max_dimension)
        throw CapacityError("truncated window of dimension " + std::to_string(basis_.size()) +
                            " exceeds the limit " + std::to_string(max_dimension));
    for (std::size_t k = 0; k < basis_.size(); ++k) position_.emplace(basis_[k], k);
}

std::optional<std::size_t> TruncatedAlgebra::position(const Word& w) const {
    auto it = position_.find(w);
    if (it == position_.end()) return std::nullopt;
    return it->second;
}

bool TruncatedAlgebra::in_window(const AlgebraElement& e) const { return e.max_length() <= window_; }

std::vector<std::uint8_t> TruncatedAlgebra::coordinates(const AlgebraElement& e) const {
    std::vector<std::uint8_t> out(basis_.size(), 0);
    for (const auto& [w, c] : e.terms) {
        auto k = position(w);
        if (!k) throw UsageError("element leaves the truncation window");
        out[*k] = c;
    }
    return out;
}

AlgebraElement TruncatedAlgebra::element(const std::vector<std::uint8_t>& coords) const {
    if (coords.size() != basis_.size()) throw UsageError("coordinate vector has the wrong length");
    AlgebraElement out;
    for (std::size_t k = 0; k < coords.size(); ++k) add_term(out, basis_[k], coords[k], characteristic());
    return out;
}

TruncatedAlgebra::Product TruncatedAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    Product out;
    out.value = rs_.multiply(a, b);
    out.out_of_window = !in_window(out.value);
    return out;
}

TruncatedAlgebra truncated_view(const RewriteSystem& rs, std::size_t max_word_len, std::size_t max_dimension) {
    return TruncatedAlgebra(rs, max_word_len, max_dimension);
}

}  // namespace fring
