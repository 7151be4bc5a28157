#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fring/constructions.hpp"
#include "fring/ring.hpp"

namespace fring {

/// Word in the free monoid: generator positions in declaration order.
using Word = std::vector<std::uint8_t>;

/// Length-lexicographic order: shorter words first, then lexicographic by
/// generator position.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const noexcept;
};

/// F_p-linear combination of words; zero coefficients are never stored.
struct WordPoly {
    std::map<Word, std::uint8_t, WordOrder> terms;

    bool is_zero() const noexcept { return terms.empty(); }
    /// Largest word. Requires a nonzero polynomial.
    const Word& lead() const { return terms.rbegin()->first; }
    std::size_t max_length() const noexcept;

    static WordPoly scalar(std::uint8_t c, unsigned p);
    static WordPoly word(Word w);

    bool operator==(const WordPoly&) const = default;
};

/// Normal form of an element; every word is irreducible.
using AlgebraElement = WordPoly;

WordPoly wp_add(const WordPoly& a, const WordPoly& b, unsigned p);
WordPoly wp_sub(const WordPoly& a, const WordPoly& b, unsigned p);
WordPoly wp_scale(const WordPoly& a, unsigned c, unsigned p);
/// Free-algebra product (no reduction).
WordPoly wp_mul(const WordPoly& a, const WordPoly& b, unsigned p);

struct Relation {
    WordPoly lhs;
    WordPoly rhs;

    bool operator==(const Relation&) const = default;
};

struct Presentation {
    unsigned characteristic = 2;
    std::vector<std::string> generators;
    std::vector<Relation> relations;

    bool operator==(const Presentation&) const = default;
};

/// `.ring` text: a `field F<p>` statement (p a prime <= 7), a `generators`
/// statement, then an optional `relations` block running to the end of the
/// input. Statements end at a newline or `;`. Relations are separated by
/// `,`, `;` or newlines; a chain `a = b = c` yields the relations a = b and
/// b = c. Terms are products of generators, integers and `g^k` powers,
/// combined with `+` and `-`. `#` starts a comment.
Presentation parse_presentation(std::string_view text);
/// Canonical text; parse_presentation(serialize(p)) == p.
std::string serialize(const Presentation& p);

/// Parses a single expression over the presentation's generators.
WordPoly parse_word_poly(const Presentation& p, std::string_view text);
std::string format_word_poly(const std::vector<std::string>& generators, const WordPoly& w);
std::string format_word(const std::vector<std::string>& generators, const Word& w);

/// Built-in presentations by name ("ex22", "ex23").
std::string builtin_presentation_text(std::string_view name);
std::vector<std::string> builtin_presentation_names();

struct Rule {
    Word lead;
    WordPoly rhs;

    bool operator==(const Rule&) const = default;
};

enum class CompletionStatus { Complete, Capped };

/// Oriented rules lead -> rhs with rhs strictly below lead. Immutable after
/// completion; normal_form may be called concurrently.
class RewriteSystem {
public:
    RewriteSystem(Presentation presentation, std::vector<Rule> rules, CompletionStatus status,
                  std::size_t critical_pairs);

    const Presentation& presentation() const noexcept { return presentation_; }
    unsigned characteristic() const noexcept { return presentation_.characteristic; }
    const std::vector<std::string>& generators() const noexcept { return presentation_.generators; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }
    CompletionStatus status() const noexcept { return status_; }
    bool complete() const noexcept { return status_ == CompletionStatus::Complete; }
    std::size_t critical_pairs_resolved() const noexcept { return critical_pairs_; }
    std::size_t longest_lead() const noexcept;

    bool is_reducible(const Word& w) const;
    /// Unique when the system is complete.
    AlgebraElement normal_form(const WordPoly& e) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

    std::string format() const;

private:
    Presentation presentation_;
    std::vector<Rule> rules_;
    CompletionStatus status_;
    std::size_t critical_pairs_;
};

/// Noncommutative completion over F_p under length-lex order. Stops with
/// status Capped after `cap` critical pairs. Throws InconsistentPresentation
/// when a nonzero scalar reduces to zero.
RewriteSystem complete_rewrite(const Presentation& p, std::size_t cap = 1000);

/// Irreducible words of length <= max_len in length-lex order.
std::vector<Word> irreducible_words(const RewriteSystem& rs, std::size_t max_len);

struct RealizeOptions {
    std::uint64_t size_cap = kDefaultSizeCap;
    std::string label = "fp";
};

/// FiniteRing on the irreducible-word basis. Coordinate k belongs to the
/// k-th basis word in length-lex order, so index 1 is the identity. Throws
/// NotFiniteDimensional when irreducible words still exist at length
/// max(1, 2 * longest lead) + 1, and UsageError for a capped system.
FiniteRing realize_finite(const RewriteSystem& rs, const RealizeOptions& opts = {});

/// The span of irreducible words of length <= L inside an infinite algebra.
class TruncatedAlgebra {
public:
    TruncatedAlgebra(RewriteSystem rs, std::size_t window, std::size_t max_dimension);

    const RewriteSystem& system() const noexcept { return rs_; }
    unsigned characteristic() const noexcept { return rs_.characteristic(); }
    std::size_t window() const noexcept { return window_; }
    const std::vector<Word>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    std::optional<std::size_t> position(const Word& w) const;

    bool in_window(const AlgebraElement& e) const;
    /// Window coordinates; throws UsageError when e leaves the window.
    std::vector<std::uint8_t> coordinates(const AlgebraElement& e) const;
    AlgebraElement element(const std::vector<std::uint8_t>& coords) const;

    struct Product {
        AlgebraElement value;
        bool out_of_window = false;
    };
    Product multiply(const AlgebraElement& a, const AlgebraElement& b) const;

private:
    RewriteSystem rs_;
    std::size_t window_;
    std::vector<Word> basis_;
    std::map<Word, std::size_t, WordOrder> position_;
};

TruncatedAlgebra truncated_view(const RewriteSystem& rs, std::size_t max_word_len,
                                std::size_t max_dimension = 4096);

}  // namespace fring
