#include "fring/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <random>

namespace fring {

namespace detail {

struct RingData {
    std::shared_ptr<const RingModel> model;
    std::string label;
    std::optional<BasisInfo> basis;
    std::uint64_t id = 0;
    Index size = 0;
    Index one = 0;
    bool tabulated = false;
    std::vector<std::uint16_t> add_table;
    std::vector<std::uint16_t> neg_table;
    std::vector<std::uint16_t> mul_table;

    std::once_flag center_once;
    std::vector<Index> center;
    std::vector<std::uint8_t> central_flags;

    std::once_flag fingerprint_once;
    std::uint64_t fingerprint = 0;
};

}  // namespace detail

namespace {

std::atomic<std::uint64_t> next_ring_id{1};

class Fnv1a {
public:
    void feed(std::uint64_t value, int bytes) {
        for (int i = 0; i < bytes; ++i) {
            hash_ ^= (value >> (8 * i)) & 0xffu;
            hash_ *= 0x100000001b3ull;
        }
    }
    std::uint64_t value() const { return hash_; }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

class ModularModel final : public RingModel {
public:
    explicit ModularModel(unsigned n) : n_(n) {}
    Index size() const override { return n_; }
    Index one() const override { return n_ == 1 ? 0 : 1; }
    Index add(Index a, Index b) const override { return (a + b) % n_; }
    Index neg(Index a) const override { return (n_ - a) % n_; }
    Index mul(Index a, Index b) const override {
        return static_cast<Index>((std::uint64_t{a} * b) % n_);
    }
    std::string format(Index a) const override { return std::to_string(a); }

private:
    unsigned n_;
};

}  // namespace

bool is_prime(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteRing::FiniteRing(std::shared_ptr<const RingModel> model, std::string label,
                       std::optional<BasisInfo> basis)
    : d_(std::make_shared<detail::RingData>()) {
    d_->model = std::move(model);
    d_->label = std::move(label);
    d_->basis = std::move(basis);
    d_->id = next_ring_id.fetch_add(1);
    d_->size = d_->model->size();
    d_->one = d_->model->one();
    if (d_->size == 0) throw UsageError("ring must have at least one element");
    if (d_->size <= kTabulationLimit) {
        const std::size_t n = d_->size;
        d_->add_table.resize(n * n);
        d_->mul_table.resize(n * n);
        d_->neg_table.resize(n);
        for (Index a = 0; a < n; ++a) {
            d_->neg_table[a] = static_cast<std::uint16_t>(d_->model->neg(a));
            for (Index b = 0; b < n; ++b) {
                d_->add_table[a * n + b] = static_cast<std::uint16_t>(d_->model->add(a, b));
                d_->mul_table[a * n + b] = static_cast<std::uint16_t>(d_->model->mul(a, b));
            }
        }
        d_->tabulated = true;
    }
}

Index FiniteRing::size() const noexcept { return d_->size; }
Index FiniteRing::one() const noexcept { return d_->one; }

Index FiniteRing::add(Index a, Index b) const {
    if (d_->tabulated) return d_->add_table[std::size_t{a} * d_->size + b];
    return d_->model->add(a, b);
}

Index FiniteRing::neg(Index a) const {
    if (d_->tabulated) return d_->neg_table[a];
    return d_->model->neg(a);
}

Index FiniteRing::mul(Index a, Index b) const {
    if (d_->tabulated) return d_->mul_table[std::size_t{a} * d_->size + b];
    return d_->model->mul(a, b);
}

Element FiniteRing::element(Index a) const {
    if (a >= d_->size)
        throw UsageError("index " + std::to_string(a) + " out of range for " + d_->label);
    return Element{d_->id, a};
}

Index FiniteRing::index_of(Element a) const {
    if (a.ring_id != d_->id)
        throw UsageError("element does not belong to ring " + d_->label);
    return a.index;
}

Element FiniteRing::add(Element a, Element b) const {
    return Element{d_->id, add(index_of(a), index_of(b))};
}

Element FiniteRing::mul(Element a, Element b) const {
    return Element{d_->id, mul(index_of(a), index_of(b))};
}

const std::string& FiniteRing::label() const noexcept { return d_->label; }
const std::optional<BasisInfo>& FiniteRing::basis() const noexcept { return d_->basis; }
std::uint64_t FiniteRing::id() const noexcept { return d_->id; }
bool FiniteRing::tabulated() const noexcept { return d_->tabulated; }
std::string FiniteRing::format(Index a) const { return d_->model->format(a); }
const RingModel& FiniteRing::model() const noexcept { return *d_->model; }

std::uint64_t FiniteRing::fingerprint() const {
    std::call_once(d_->fingerprint_once, [this] {
        Fnv1a h;
        h.feed(d_->size, 8);
        h.feed(zero(), 4);
        h.feed(d_->one, 4);
        const Index span = std::min(d_->size, kTabulationLimit);
        for (Index a = 0; a < span; ++a)
            for (Index b = 0; b < span; ++b) h.feed(add(a, b), 4);
        for (Index a = 0; a < span; ++a)
            for (Index b = 0; b < span; ++b) h.feed(mul(a, b), 4);
        d_->fingerprint = h.value();
    });
    return d_->fingerprint;
}

std::string FiniteRing::fingerprint_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint()));
    return buf;
}

const std::vector<Index>& FiniteRing::center() const {
    std::call_once(d_->center_once, [this] {
        const Index n = d_->size;
        d_->central_flags.assign(n, 0);
        for (Index c = 0; c < n; ++c) {
            bool central = true;
            for (Index a = 0; a < n && central; ++a) central = mul(a, c) == mul(c, a);
            if (central) {
                d_->central_flags[c] = 1;
                d_->center.push_back(c);
            }
        }
    });
    return d_->center;
}

const std::vector<std::uint8_t>& FiniteRing::central_flags() const {
    center();
    return d_->central_flags;
}

bool FiniteRing::is_central(Index a) const { return central_flags().at(a) != 0; }

std::vector<Index> FiniteRing::idempotents() const {
    std::vector<Index> out;
    for (Index e = 0; e < d_->size; ++e)
        if (mul(e, e) == e) out.push_back(e);
    return out;
}

std::vector<Index> FiniteRing::central_idempotents() const {
    std::vector<Index> out;
    for (Index e : idempotents())
        if (is_central(e)) out.push_back(e);
    return out;
}

bool FiniteRing::is_regular(Index a) const {
    for (Index b = 1; b < d_->size; ++b)
        if (mul(a, b) == 0 || mul(b, a) == 0) return false;
    return d_->size > 1;
}

std::optional<Index> FiniteRing::inverse(Index a) const {
    for (Index b = 0; b < d_->size; ++b)
        if (mul(a, b) == d_->one && mul(b, a) == d_->one) return b;
    return std::nullopt;
}

bool FiniteRing::is_unit(Index a) const { return inverse(a).has_value(); }

bool FiniteRing::is_commutative() const { return center().size() == d_->size; }

AxiomReport FiniteRing::verify_axioms(std::uint64_t seed) const {
    AxiomReport report;
    const Index n = d_->size;
    auto fail = [&](std::string what) {
        report.ok = false;
        report.violation = std::move(what);
        return report;
    };
    auto triple = [](const char* law, Index a, Index b, Index c) {
        return std::string(law) + " fails at (" + std::to_string(a) + ", " + std::to_string(b) +
               ", " + std::to_string(c) + ")";
    };

    if (n <= kTabulationLimit) {
        for (Index a = 0; a < n; ++a) {
            if (add(a, 0) != a || add(0, a) != a) return fail("zero is not additively neutral");
            if (add(a, neg(a)) != 0) return fail("missing negation for " + std::to_string(a));
            if (mul(a, d_->one) != a || mul(d_->one, a) != a)
                return fail("one is not a two-sided identity at " + std::to_string(a));
            for (Index b = 0; b < n; ++b)
                if (add(a, b) != add(b, a)) return fail("addition not commutative");
        }
    }

    auto check = [&](Index a, Index b, Index c) -> std::string {
        if (add(add(a, b), c) != add(a, add(b, c))) return triple("additive associativity", a, b, c);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return triple("associativity", a, b, c);
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            return triple("left distributivity", a, b, c);
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
            return triple("right distributivity", a, b, c);
        return {};
    };

    if (n <= 64) {
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                for (Index c = 0; c < n; ++c) {
                    ++report.triples_checked;
                    if (auto v = check(a, b, c); !v.empty()) return fail(std::move(v));
                }
        return report;
    }

    report.exhaustive_triples = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    constexpr std::uint64_t kSamples = 200000;
    for (std::uint64_t s = 0; s < kSamples; ++s) {
        const Index a = pick(rng), b = pick(rng), c = pick(rng);
        ++report.triples_checked;
        if (auto v = check(a, b, c); !v.empty()) return fail(std::move(v));
    }
    return report;
}

FiniteRing integers_mod(unsigned n) {
    if (n == 0) throw UsageError("Z0 is not finite");
    std::optional<BasisInfo> basis;
    if (is_prime(n)) basis = BasisInfo{n, {"1"}};
    const std::string label = is_prime(n) ? "F" + std::to_string(n) : "Z" + std::to_string(n);
    return FiniteRing(std::make_shared<ModularModel>(n), label, basis);
}

FiniteRing prime_field(unsigned p) {
    if (!is_prime(p)) throw UsageError("F" + std::to_string(p) + ": characteristic is not prime");
    return integers_mod(p);
}

}  // namespace fring
