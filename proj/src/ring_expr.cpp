#include "fring/ring_expr.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "fring/fp_algebra.hpp"

namespace fring {

namespace {

struct Range {
    unsigned lo = 0;
    unsigned hi = 0;
};

struct Node {
    enum class Kind { Base, Matrix, Prod, QuotPoly, Fp } kind = Kind::Base;
    std::string name;  // base ring name, family letter, or fp argument
    bool fp_path = false;
    Range n;
    std::vector<Node> kids;
    std::size_t column = 1;
};

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    Node parse() {
        skip();
        Node n = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, i_ + 1); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t col) const { throw ParseError(msg, 1, col); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    void expect(char c) {
        skip();
        if (i_ >= s_.size() || s_[i_] != c)
            fail(std::string("expected '") + c + "'" + (i_ < s_.size() ? std::string(" before '") + s_[i_] + "'" : ""));
        ++i_;
    }

    std::string ident() {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (start == i_) fail("expected a ring expression");
        return std::string(s_.substr(start, i_ - start));
    }

    unsigned number() {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected an integer");
        if (i_ - start > 6) fail_at("integer too large", start + 1);
        return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start))));
    }

    Range range() {
        skip();
        const std::size_t col = i_ + 1;
        Range r;
        r.lo = r.hi = number();
        if (s_.substr(i_, 2) == "..") {
            i_ += 2;
            r.hi = number();
            if (r.hi < r.lo) fail_at("empty range", col);
        }
        return r;
    }

    Node expr() {
        skip();
        Node n;
        n.column = i_ + 1;
        const std::string id = ident();
        if (id.size() == 1 && std::string_view("MTSDV").find(id[0]) != std::string_view::npos) {
            n.kind = Node::Kind::Matrix;
            n.name = id;
            expect('(');
            n.n = range();
            expect(',');
            n.kids.push_back(expr());
            expect(')');
            return n;
        }
        if (id == "prod") {
            n.kind = Node::Kind::Prod;
            expect('(');
            n.kids.push_back(expr());
            skip();
            while (i_ < s_.size() && s_[i_] == ',') {
                ++i_;
                n.kids.push_back(expr());
                skip();
            }
            expect(')');
            return n;
        }
        if (id == "quotpoly") {
            n.kind = Node::Kind::QuotPoly;
            expect('(');
            n.kids.push_back(expr());
            expect(',');
            n.n = range();
            expect(')');
            return n;
        }
        if (id == "fp") {
            n.kind = Node::Kind::Fp;
            expect('(');
            skip();
            if (i_ < s_.size() && s_[i_] == '"') {
                const std::size_t end = s_.find('"', i_ + 1);
                if (end == std::string_view::npos) fail("unterminated string");
                n.name = std::string(s_.substr(i_ + 1, end - i_ - 1));
                n.fp_path = true;
                i_ = end + 1;
            } else {
                n.name = ident();
            }
            expect(')');
            return n;
        }
        if ((id[0] == 'F' || id[0] == 'Z') && id.size() > 1 &&
            std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            n.kind = Node::Kind::Base;
            n.name = id;
            if (id.size() > 6) fail_at("modulus too large", n.column);
            const unsigned m = static_cast<unsigned>(std::stoul(id.substr(1)));
            if (id[0] == 'F' && !is_prime(m)) fail_at("F" + id.substr(1) + " is not a prime field", n.column);
            if (id[0] == 'Z' && m < 2) fail_at("Z" + id.substr(1) + " needs a modulus >= 2", n.column);
            return n;
        }
        fail_at("unknown ring '" + id + "'", n.column);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

std::string range_text(const Range& r) {
    return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

std::string render(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Base:
            return n.name;
        case Node::Kind::Matrix:
            return n.name + "(" + range_text(n.n) + ", " + render(n.kids[0]) + ")";
        case Node::Kind::Prod: {
            std::string s = "prod(";
            for (std::size_t k = 0; k < n.kids.size(); ++k) s += (k ? ", " : "") + render(n.kids[k]);
            return s + ")";
        }
        case Node::Kind::QuotPoly:
            return "quotpoly(" + render(n.kids[0]) + ", " + range_text(n.n) + ")";
        case Node::Kind::Fp:
            return n.fp_path ? "fp(\"" + n.name + "\")" : "fp(" + n.name + ")";
    }
    return {};
}

void collect_ranges(Node& n, std::vector<Range*>& out) {
    if (n.kind == Node::Kind::Matrix || n.kind == Node::Kind::QuotPoly) out.push_back(&n.n);
    for (auto& k : n.kids) collect_ranges(k, out);
}

MatrixFamily family_of(char c) {
    switch (c) {
        case 'M': return MatrixFamily::Full;
        case 'T': return MatrixFamily::UpperTriangular;
        case 'S': return MatrixFamily::Diagonal;
        case 'D': return MatrixFamily::ConstantDiagonal;
        default: return MatrixFamily::ConstantDiagonals;
    }
}

Presentation read_presentation(const std::string& text, const std::string& source) {
    try {
        return parse_presentation(text);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), e.line(), e.column(), source);
    }
}

std::string presentation_text(const Node& n, const RingExprOptions& opts) {
    if (!n.fp_path) return builtin_presentation_text(n.name);
    const std::filesystem::path path =
        std::filesystem::path(n.name).is_absolute() ? std::filesystem::path(n.name) : opts.base_dir / n.name;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read presentation file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FiniteRing load_presentation(const std::string& text, const std::string& source, const std::string& label,
                             const RingExprOptions& opts) {
    const Presentation p = read_presentation(text, source);
    RealizeOptions ro;
    ro.size_cap = opts.construction.size_cap;
    ro.label = label;
    return realize_finite(complete_rewrite(p), ro);
}

FiniteRing build(const Node& n, const RingExprOptions& opts) {
    auto single = [&](const Range& r) {
        if (r.lo != r.hi) throw ParseError("ranges are only allowed in search families", 1, n.column);
        if (r.lo == 0) throw ParseError("size parameter must be >= 1", 1, n.column);
        return r.lo;
    };
    switch (n.kind) {
        case Node::Kind::Base:
            return integers_mod(static_cast<unsigned>(std::stoul(n.name.substr(1))));
        case Node::Kind::Matrix:
            return matrix_ring({family_of(n.name[0]), single(n.n), build(n.kids[0], opts)}, opts.construction);
        case Node::Kind::Prod: {
            std::vector<FiniteRing> rings;
            for (const auto& k : n.kids) rings.push_back(build(k, opts));
            return product(rings, opts.construction);
        }
        case Node::Kind::QuotPoly:
            return quotient_poly(build(n.kids[0], opts), single(n.n), opts.construction);
        case Node::Kind::Fp:
            return load_presentation(presentation_text(n, opts), n.name, render(n), opts);
    }
    throw UsageError("unreachable ring expression");
}

std::string normalize_input(std::string_view text) {
    std::string s(text);
    const bool path_like = s.size() > 5 && s.ends_with(".ring") && s.find('(') == std::string::npos;
    return path_like ? "fp(\"" + s + "\")" : s;
}

}  // namespace

FiniteRing build_ring(std::string_view text, const RingExprOptions& opts) {
    const std::string s = normalize_input(text);
    return build(ExprParser(s).parse(), opts);
}

std::optional<Presentation> ring_expr_presentation(std::string_view text, const RingExprOptions& opts) {
    const std::string s = normalize_input(text);
    const Node n = ExprParser(s).parse();
    if (n.kind != Node::Kind::Fp) return std::nullopt;
    return read_presentation(presentation_text(n, opts), n.name);
}

std::string canonical_ring_expr(std::string_view text) {
    const std::string s = normalize_input(text);
    return render(ExprParser(s).parse());
}

std::vector<std::string> expand_ring_family(std::string_view text) {
    const std::string s = normalize_input(text);
    Node root = ExprParser(s).parse();
    std::vector<Range*> ranges;
    collect_ranges(root, ranges);
    std::vector<Range> original;
    for (auto* r : ranges) original.push_back(*r);
    std::vector<std::string> out;
    std::vector<unsigned> cur;
    for (const auto& r : original) cur.push_back(r.lo);
    for (;;) {
        for (std::size_t k = 0; k < ranges.size(); ++k) ranges[k]->lo = ranges[k]->hi = cur[k];
        out.push_back(render(root));
        std::size_t k = ranges.size();
        while (k > 0) {
            --k;
            if (cur[k] < original[k].hi) {
                ++cur[k];
                break;
            }
            cur[k] = original[k].lo;
            if (k == 0) return out;
        }
        if (ranges.empty()) return out;
    }
}

}  // namespace fring
