#include "fring/properties.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

#include "fring/linalg.hpp"

namespace fring {

namespace {

enum class Side { Right, Left };

struct PropertyInfo {
    Property property;
    std::string_view name;
};

constexpr std::array<PropertyInfo, 10> kProperties{{
    {Property::RightMcCoy, "right-mccoy"},
    {Property::LeftMcCoy, "left-mccoy"},
    {Property::RightCentralMcCoy, "right-central-mccoy"},
    {Property::LeftCentralMcCoy, "left-central-mccoy"},
    {Property::Armendariz, "armendariz"},
    {Property::CentralArmendariz, "central-armendariz"},
    {Property::Reversible, "reversible"},
    {Property::Semicommutative, "semicommutative"},
    {Property::Abelian, "abelian"},
    {Property::Reduced, "reduced"},
}};

Side side_of(Property p) {
    return (p == Property::LeftMcCoy || p == Property::LeftCentralMcCoy) ? Side::Left : Side::Right;
}

bool central_variant(Property p) {
    return p == Property::RightCentralMcCoy || p == Property::LeftCentralMcCoy ||
           p == Property::CentralArmendariz;
}

std::uint64_t checked_count(std::uint64_t n, int len, std::uint64_t limit, const char* what) {
    std::uint64_t out = 1;
    for (int k = 0; k < len; ++k) {
        if (out > limit / n)
            throw CapacityError(std::string(what) + " exceeds the configured search limit of " +
                                std::to_string(limit));
        out *= n;
    }
    return out;
}

std::vector<Index> strip(std::vector<Index> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

std::vector<Index> decode_poly(std::uint64_t k, Index n, int len) {
    std::vector<Index> c(static_cast<std::size_t>(len));
    for (auto& x : c) {
        x = static_cast<Index>(k % n);
        k /= n;
    }
    return c;
}

// Enumerates partners of a primary polynomial: g with f g = 0 for right
// checks (primary f), f with f g = 0 for left checks (primary g).
template <class R>
class PairEngine {
public:
    PairEngine(const R& r, int d, Side side, const SearchOptions& opts)
        : r_(r), d_(d), len_(d + 1), side_(side), n_(r.size()) {
        count_ = checked_count(n_, len_, opts.max_primaries, "polynomial search space");
        const auto& basis = r.basis();
        pruned_ = opts.use_pruning && basis.has_value();
        if (!pruned_) {
            if (count_ > 0 && count_ > opts.max_exhaustive_pairs / count_)
                throw CapacityError("exhaustive pair search of " + std::to_string(count_) + "^2 exceeds " +
                                    std::to_string(opts.max_exhaustive_pairs));
            return;
        }
        p_ = basis->characteristic;
        k_ = basis->dimension();
        digits_.resize(std::size_t{n_} * k_);
        for (Index a = 0; a < n_; ++a) {
            Index x = a;
            for (std::size_t t = 0; t < k_; ++t) {
                digits_[a * k_ + t] = static_cast<std::uint8_t>(x % p_);
                x /= p_;
            }
        }
        basis_elem_.resize(k_);
        Index e = 1;
        for (std::size_t b = 0; b < k_; ++b, e *= p_) basis_elem_[b] = e;
        prod_.resize(std::size_t{n_} * k_);
        for (Index a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < k_; ++b)
                prod_[a * k_ + b] = side_ == Side::Right ? r.mul(a, basis_elem_[b]) : r.mul(basis_elem_[b], a);
    }

    std::uint64_t count() const noexcept { return count_; }
    bool pruned() const noexcept { return pruned_; }
    unsigned p() const noexcept { return p_; }
    std::vector<Index> coeffs(std::uint64_t k) const { return decode_poly(k, n_, len_); }

    std::vector<Index> coeffs_of_vec(const linalg::Vec& v) const {
        std::vector<Index> c(static_cast<std::size_t>(len_), 0);
        for (int j = 0; j < len_; ++j) {
            Index x = 0;
            for (std::size_t t = k_; t-- > 0;) x = x * p_ + v[j * k_ + t];
            c[j] = x;
        }
        return c;
    }

    std::optional<linalg::Subspace> partner_space(const std::vector<Index>& primary) const {
        const std::size_t rows = static_cast<std::size_t>(2 * d_ + 1) * k_;
        const std::size_t cols = static_cast<std::size_t>(len_) * k_;
        linalg::Matrix m(rows, cols);
        for (int j = 0; j < len_; ++j)
            for (std::size_t b = 0; b < k_; ++b) {
                const std::size_t col = j * k_ + b;
                for (int i = 0; i < len_; ++i) {
                    const Index a = primary[i];
                    if (a == 0) continue;
                    const Index elem = prod_[a * k_ + b];
                    const std::size_t block = static_cast<std::size_t>(i + j) * k_;
                    for (std::size_t t = 0; t < k_; ++t) m.at(block + t, col) = digits_[elem * k_ + t];
                }
            }
        auto basis = linalg::nullspace_basis(m, p_);
        if (basis.empty()) return std::nullopt;
        return linalg::Subspace(std::move(basis), cols, p_);
    }

    bool product_zero(const std::vector<Index>& primary, const std::vector<Index>& partner) const {
        const auto& f = side_ == Side::Right ? primary : partner;
        const auto& g = side_ == Side::Right ? partner : primary;
        for (int s = 0; s <= 2 * d_; ++s) {
            Index acc = 0;
            for (int i = std::max(0, s - d_); i <= std::min(s, d_); ++i)
                acc = r_.add(acc, r_.mul(f[i], g[s - i]));
            if (acc != 0) return false;
        }
        return true;
    }

    /// fn(partner_index, partner_coeffs) -> bool (continue).
    template <class Fn>
    void for_each_partner(const std::vector<Index>& primary, Fn&& fn) const {
        if (pruned_) {
            auto space = partner_space(primary);
            if (!space) return;
            space->for_each_nonzero_ascending([&](const linalg::Vec& v) {
                return fn(linalg::encode(v, p_), coeffs_of_vec(v));
            });
            return;
        }
        for (std::uint64_t k = 1; k < count_; ++k) {
            auto c = coeffs(k);
            if (product_zero(primary, c) && !fn(k, c)) return;
        }
    }

    std::optional<std::uint64_t> least_partner(const std::vector<Index>& primary) const {
        if (pruned_) {
            auto space = partner_space(primary);
            if (!space) return std::nullopt;
            return linalg::encode(space->min_nonzero(), p_);
        }
        std::optional<std::uint64_t> out;
        for_each_partner(primary, [&](std::uint64_t k, const std::vector<Index>&) {
            out = k;
            return false;
        });
        return out;
    }

private:
    const R& r_;
    int d_;
    int len_;
    Side side_;
    Index n_;
    std::uint64_t count_ = 0;
    bool pruned_ = false;
    unsigned p_ = 0;
    std::size_t k_ = 0;
    std::vector<std::uint8_t> digits_;
    std::vector<Index> basis_elem_;
    std::vector<Index> prod_;
};

template <class R>
Index side_mul(const R& r, Side side, Index coeff, Index cand) {
    return side == Side::Right ? r.mul(coeff, cand) : r.mul(cand, coeff);
}

template <class R>
bool witness_ok(const R& r, const std::vector<std::uint8_t>& central, Side side, bool central_check,
                const std::vector<Index>& coeffs, Index cand) {
    for (Index c : coeffs) {
        if (c == 0) continue;
        const Index v = side_mul(r, side, c, cand);
        if (central_check ? central[v] == 0 : v != 0) return false;
    }
    return true;
}

template <class R>
std::optional<Index> least_witness(const R& r, const std::vector<std::uint8_t>& central, Side side,
                                   bool central_check, const std::vector<Index>& coeffs,
                                   std::uint64_t* tests) {
    for (Index cand = 1; cand < r.size(); ++cand) {
        if (tests) ++*tests;
        if (witness_ok(r, central, side, central_check, coeffs, cand)) return cand;
    }
    return std::nullopt;
}

template <class R>
std::vector<WitnessFailure> transcript_for(const R& r, Property p, const std::vector<Index>& coeffs) {
    const Side side = side_of(p);
    const bool central_check = central_variant(p);
    const auto& central = r.central_flags();
    std::vector<WitnessFailure> out;
    for (Index cand = 1; cand < r.size(); ++cand) {
        for (std::uint32_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            const Index v = side_mul(r, side, coeffs[i], cand);
            if (!central_check) {
                if (v != 0) {
                    out.push_back({cand, i, v, std::nullopt, v, 0});
                    break;
                }
                continue;
            }
            if (central[v]) continue;
            for (Index t = 0; t < r.size(); ++t) {
                const Index lhs = r.mul(v, t), rhs = r.mul(t, v);
                if (lhs != rhs) {
                    out.push_back({cand, i, v, t, lhs, rhs});
                    break;
                }
            }
            break;
        }
    }
    return out;
}

template <class R>
std::optional<Index> universal_witness_impl(const R& r, Side side) {
    const auto& central = r.central_flags();
    for (Index c = 1; c < r.size(); ++c) {
        bool ok = true;
        for (Index a = 0; a < r.size() && ok; ++a) ok = central[side_mul(r, side, a, c)] != 0;
        if (ok) return c;
    }
    return std::nullopt;
}

struct Chunk {
    SearchStats stats;
    std::vector<WitnessRecord> witnesses;
    bool refuted = false;
    std::uint64_t primary = 0;
    std::uint64_t partner = 0;
    std::pair<std::uint32_t, std::uint32_t> product_indices{0, 0};
    Index product_value = 0;
};

// Indices 1..total-1 are split into fixed-size chunks independent of the
// worker count. A chunk stops at its first refutation; chunks beyond the
// least refuting chunk may be skipped. Merging in chunk order up to that
// chunk gives the same result for every schedule.
template <class Fn>
Chunk run_chunks(std::uint64_t total, unsigned workers, Fn&& fn) {
    constexpr std::uint64_t kChunkSize = 512;
    const std::uint64_t items = total > 0 ? total - 1 : 0;
    const std::uint64_t nchunks = (items + kChunkSize - 1) / kChunkSize;
    std::vector<Chunk> chunks(nchunks);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

    auto work = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks || c > best.load()) return;
            Chunk& out = chunks[c];
            const std::uint64_t begin = 1 + c * kChunkSize;
            const std::uint64_t end = std::min(total, begin + kChunkSize);
            for (std::uint64_t k = begin; k < end; ++k) {
                if (fn(k, out)) {
                    out.refuted = true;
                    std::uint64_t cur = best.load();
                    while (c < cur && !best.compare_exchange_weak(cur, c)) {
                    }
                    break;
                }
            }
        }
    };

    workers = std::max(1u, workers);
    if (workers == 1 || nchunks <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    Chunk merged;
    for (auto& c : chunks) {
        merged.stats.primaries += c.stats.primaries;
        merged.stats.pairs += c.stats.pairs;
        merged.stats.witness_tests += c.stats.witness_tests;
        merged.witnesses.insert(merged.witnesses.end(), c.witnesses.begin(), c.witnesses.end());
        if (c.refuted) {
            merged.refuted = true;
            merged.primary = c.primary;
            merged.partner = c.partner;
            merged.product_indices = c.product_indices;
            merged.product_value = c.product_value;
            break;
        }
    }
    return merged;
}

template <class R>
std::vector<std::string> forms(const R& r, const std::vector<Index>& c) {
    std::vector<std::string> out;
    for (auto x : c) out.push_back(r.format(x));
    return out;
}

template <class R>
Verdict mccoy_type(const R& r, Property p, int d, const SearchOptions& opts) {
    if (d < 1) throw UsageError(std::string(property_name(p)) + " requires max degree >= 1");
    const Side side = side_of(p);
    const bool central_check = central_variant(p);
    const auto& central = r.central_flags();
    PairEngine<R> engine(r, d, side, opts);

    Chunk result = run_chunks(engine.count(), opts.workers, [&](std::uint64_t k, Chunk& out) {
        const auto primary = engine.coeffs(k);
        ++out.stats.primaries;
        const auto partner = engine.least_partner(primary);
        if (!partner) return false;
        ++out.stats.pairs;
        const auto w = least_witness(r, central, side, central_check, primary, &out.stats.witness_tests);
        if (w) {
            out.witnesses.push_back({k, *partner, *w});
            return false;
        }
        out.primary = k;
        out.partner = *partner;
        return true;
    });

    Verdict v;
    v.property = p;
    v.max_degree = d;
    v.pruned = engine.pruned();
    v.stats = result.stats;
    v.witnesses = std::move(result.witnesses);
    if (central_check && r.size() <= kTabulationLimit) v.universal_witness = universal_witness_impl(r, side);
    if (!result.refuted) {
        v.polarity = Polarity::NotRefuted;
        v.note = "no refuting pair among polynomials of degree <= " + std::to_string(d);
        return v;
    }
    v.polarity = Polarity::Refuted;
    Certificate cert;
    const auto primary = engine.coeffs(result.primary);
    const auto partner = engine.coeffs(result.partner);
    cert.f = strip(side == Side::Right ? primary : partner);
    cert.g = strip(side == Side::Right ? partner : primary);
    cert.f_forms = forms(r, cert.f);
    cert.g_forms = forms(r, cert.g);
    cert.transcript = transcript_for(r, p, strip(primary));
    v.certificate = std::move(cert);
    v.note = "every nonzero candidate witness fails for the certificate pair";
    return v;
}

template <class R>
std::optional<std::pair<std::uint32_t, std::uint32_t>> armendariz_violation(
    const R& r, const std::vector<std::uint8_t>& central, bool central_check,
    const std::vector<Index>& f, const std::vector<Index>& g) {
    for (std::uint32_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::uint32_t j = 0; j < g.size(); ++j) {
            if (g[j] == 0) continue;
            const Index v = r.mul(f[i], g[j]);
            if (central_check ? central[v] == 0 : v != 0) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

template <class R>
Verdict armendariz_type(const R& r, Property p, int d, const SearchOptions& opts) {
    if (d < 1) throw UsageError(std::string(property_name(p)) + " requires max degree >= 1");
    const bool central_check = p == Property::CentralArmendariz;
    const auto& central = r.central_flags();
    PairEngine<R> engine(r, d, Side::Right, opts);

    Chunk result = run_chunks(engine.count(), opts.workers, [&](std::uint64_t k, Chunk& out) {
        const auto f = engine.coeffs(k);
        ++out.stats.primaries;
        if (engine.pruned()) {
            auto space = engine.partner_space(f);
            if (!space) return false;
            std::uint64_t members = 1;
            for (std::size_t t = 0; t < space->dimension(); ++t) members *= engine.p();
            // Both conditions are additive in g, so checking a basis decides
            // the whole partner space.
            bool basis_ok = true;
            for (const auto& row : space->rows())
                if (armendariz_violation(r, central, central_check, f, engine.coeffs_of_vec(row))) {
                    basis_ok = false;
                    break;
                }
            if (basis_ok) {
                out.stats.pairs += members - 1;
                return false;
            }
        }
        bool hit = false;
        engine.for_each_partner(f, [&](std::uint64_t gk, const std::vector<Index>& g) {
            ++out.stats.pairs;
            if (auto bad = armendariz_violation(r, central, central_check, f, g)) {
                out.primary = k;
                out.partner = gk;
                out.product_indices = *bad;
                out.product_value = r.mul(f[bad->first], g[bad->second]);
                hit = true;
                return false;
            }
            return true;
        });
        return hit;
    });

    Verdict v;
    v.property = p;
    v.max_degree = d;
    v.pruned = engine.pruned();
    v.stats = result.stats;
    if (!result.refuted) {
        v.polarity = Polarity::NotRefuted;
        v.note = "every zero-divisor pair of degree <= " + std::to_string(d) + " satisfies the condition";
        return v;
    }
    v.polarity = Polarity::Refuted;
    Certificate cert;
    cert.f = strip(engine.coeffs(result.primary));
    cert.g = strip(engine.coeffs(result.partner));
    cert.f_forms = forms(r, cert.f);
    cert.g_forms = forms(r, cert.g);
    cert.product_indices = result.product_indices;
    cert.product_value = result.product_value;
    v.certificate = std::move(cert);
    v.note = "coefficient product violates the condition";
    return v;
}

template <class R>
Verdict element_level(const R& r, Property p) {
    Verdict v;
    v.property = p;
    v.exact = true;
    const Index n = r.size();
    const auto& central = r.central_flags();
    auto refute = [&](std::vector<Index> tuple, std::string note) {
        v.polarity = Polarity::Refuted;
        Certificate c;
        c.tuple = std::move(tuple);
        v.certificate = std::move(c);
        v.note = std::move(note);
        return v;
    };
    switch (p) {
        case Property::Reversible:
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b)
                    if (r.mul(a, b) == 0 && r.mul(b, a) != 0) return refute({a, b}, "ab = 0 but ba != 0");
            break;
        case Property::Semicommutative:
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b) {
                    if (r.mul(a, b) != 0) continue;
                    for (Index x = 0; x < n; ++x)
                        if (r.mul(r.mul(a, x), b) != 0) return refute({a, b, x}, "ab = 0 but a x b != 0");
                }
            break;
        case Property::Abelian:
            for (Index e = 0; e < n; ++e) {
                if (r.mul(e, e) != e || central[e]) continue;
                for (Index t = 0; t < n; ++t)
                    if (r.mul(e, t) != r.mul(t, e)) return refute({e, t}, "idempotent e is not central");
            }
            break;
        case Property::Reduced:
            for (Index a = 1; a < n; ++a)
                if (r.mul(a, a) == 0) return refute({a}, "nonzero a with a^2 = 0");
            break;
        default:
            throw UsageError("not an element-level property");
    }
    v.polarity = Polarity::NotRefuted;
    v.note = "holds exactly (exhaustive over ring elements)";
    return v;
}

template <class R>
Verdict dispatch(const R& r, Property p, int d, const SearchOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    if (is_mccoy_type(p)) v = mccoy_type(r, p, d, opts);
    else if (is_element_level(p)) v = element_level(r, p);
    else v = armendariz_type(r, p, d, opts);
    v.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
}

}  // namespace

std::string_view property_name(Property p) noexcept {
    for (const auto& info : kProperties)
        if (info.property == p) return info.name;
    return "?";
}

std::optional<Property> parse_property(std::string_view name) noexcept {
    for (const auto& info : kProperties)
        if (info.name == name) return info.property;
    return std::nullopt;
}

const std::vector<Property>& all_properties() {
    static const std::vector<Property> all = [] {
        std::vector<Property> out;
        for (const auto& info : kProperties) out.push_back(info.property);
        return out;
    }();
    return all;
}

bool is_mccoy_type(Property p) noexcept {
    return p == Property::RightMcCoy || p == Property::LeftMcCoy || p == Property::RightCentralMcCoy ||
           p == Property::LeftCentralMcCoy;
}

bool is_element_level(Property p) noexcept {
    return p == Property::Reversible || p == Property::Semicommutative || p == Property::Abelian ||
           p == Property::Reduced;
}

void zero_divisor_pairs(const FiniteRing& r, int max_degree,
                        const std::function<bool(std::uint64_t, std::uint64_t)>& sink,
                        const SearchOptions& opts) {
    if (max_degree < 0) throw UsageError("zero_divisor_pairs: max degree must be >= 0");
    PairEngine<FiniteRing> engine(r, max_degree, Side::Right, opts);
    for (std::uint64_t k = 1; k < engine.count(); ++k) {
        bool stop = false;
        engine.for_each_partner(engine.coeffs(k), [&](std::uint64_t g, const std::vector<Index>&) {
            if (!sink(k, g)) stop = true;
            return !stop;
        });
        if (stop) return;
    }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> zero_divisor_pairs(const FiniteRing& r, int max_degree,
                                                                        const SearchOptions& opts) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    zero_divisor_pairs(
        r, max_degree,
        [&](std::uint64_t f, std::uint64_t g) {
            out.emplace_back(f, g);
            return true;
        },
        opts);
    return out;
}

Verdict check_property(const FiniteRing& r, Property p, int d, const SearchOptions& opts) {
    return dispatch(r, p, d, opts);
}

Verdict check_property(const NonunitalRing& r, Property p, int d, const SearchOptions& opts) {
    return dispatch(r, p, d, opts);
}

Verdict check_right_mccoy(const FiniteRing& r, int d, const SearchOptions& o) {
    return check_property(r, Property::RightMcCoy, d, o);
}
Verdict check_left_mccoy(const FiniteRing& r, int d, const SearchOptions& o) {
    return check_property(r, Property::LeftMcCoy, d, o);
}
Verdict check_right_central_mccoy(const FiniteRing& r, int d, const SearchOptions& o) {
    return check_property(r, Property::RightCentralMcCoy, d, o);
}
Verdict check_left_central_mccoy(const FiniteRing& r, int d, const SearchOptions& o) {
    return check_property(r, Property::LeftCentralMcCoy, d, o);
}
Verdict check_armendariz(const FiniteRing& r, int d, const SearchOptions& o) {
    return check_property(r, Property::Armendariz, d, o);
}
Verdict check_central_armendariz(const FiniteRing& r, int d, const SearchOptions& o) {
    return check_property(r, Property::CentralArmendariz, d, o);
}
Verdict check_reversible(const FiniteRing& r) { return check_property(r, Property::Reversible, 0); }
Verdict check_semicommutative(const FiniteRing& r) { return check_property(r, Property::Semicommutative, 0); }
Verdict check_abelian(const FiniteRing& r) { return check_property(r, Property::Abelian, 0); }
Verdict check_reduced(const FiniteRing& r) { return check_property(r, Property::Reduced, 0); }

std::optional<Index> universal_witness(const FiniteRing& r) {
    return universal_witness_impl(r, Side::Right);
}

std::optional<Index> find_witness(const FiniteRing& r, Property p, const std::vector<Index>& coeffs) {
    if (!is_mccoy_type(p)) throw UsageError("find_witness: not a McCoy-type property");
    return least_witness(r, r.central_flags(), side_of(p), central_variant(p), coeffs, nullptr);
}

std::vector<WitnessFailure> failure_transcript(const FiniteRing& r, Property p,
                                               const std::vector<Index>& coeffs) {
    if (!is_mccoy_type(p)) throw UsageError("failure_transcript: not a McCoy-type property");
    return transcript_for(r, p, coeffs);
}

bool recheck_certificate(const FiniteRing& r, const Verdict& v) {
    if (!v.refuted()) return !v.certificate.has_value();
    if (!v.certificate) return false;
    const Certificate& c = v.certificate.value();
    auto in_range = [&](const std::vector<Index>& xs) {
        return std::all_of(xs.begin(), xs.end(), [&](Index x) { return x < r.size(); });
    };

    if (is_element_level(v.property)) {
        const auto& t = c.tuple;
        if (!in_range(t)) return false;
        switch (v.property) {
            case Property::Reversible:
                return t.size() == 2 && r.mul(t[0], t[1]) == 0 && r.mul(t[1], t[0]) != 0;
            case Property::Semicommutative:
                return t.size() == 3 && r.mul(t[0], t[1]) == 0 && r.mul(r.mul(t[0], t[2]), t[1]) != 0;
            case Property::Abelian:
                return t.size() == 2 && r.mul(t[0], t[0]) == t[0] && r.mul(t[0], t[1]) != r.mul(t[1], t[0]);
            case Property::Reduced:
                return t.size() == 1 && t[0] != 0 && r.mul(t[0], t[0]) == 0;
            default:
                return false;
        }
    }

    if (c.f.empty() || c.g.empty() || c.f.back() == 0 || c.g.back() == 0) return false;
    if (!in_range(c.f) || !in_range(c.g)) return false;
    if (!poly_mul(Polynomial(r, c.f), Polynomial(r, c.g)).is_zero()) return false;

    if (v.property == Property::Armendariz || v.property == Property::CentralArmendariz) {
        if (!c.product_indices) return false;
        const auto [i, j] = *c.product_indices;
        if (i >= c.f.size() || j >= c.g.size()) return false;
        const Index prod = r.mul(c.f[i], c.g[j]);
        if (prod != c.product_value) return false;
        if (v.property == Property::Armendariz) return prod != 0;
        for (Index t = 0; t < r.size(); ++t)
            if (r.mul(prod, t) != r.mul(t, prod)) return true;
        return false;
    }

    // McCoy type: one failure line per nonzero candidate, in order.
    const bool right = v.property == Property::RightMcCoy || v.property == Property::RightCentralMcCoy;
    const bool central = v.property == Property::RightCentralMcCoy || v.property == Property::LeftCentralMcCoy;
    const auto& coeffs = right ? c.f : c.g;
    if (c.transcript.size() != r.size() - 1) return false;
    for (Index k = 0; k + 1 < r.size(); ++k) {
        const auto& line = c.transcript[k];
        if (line.candidate != k + 1 || line.coefficient >= coeffs.size()) return false;
        const Index a = coeffs[line.coefficient];
        const Index value = right ? r.mul(a, line.candidate) : r.mul(line.candidate, a);
        if (value != line.value) return false;
        if (!central) {
            if (value == 0 || line.probe) return false;
            continue;
        }
        if (!line.probe || *line.probe >= r.size()) return false;
        if (r.mul(value, *line.probe) != line.lhs || r.mul(*line.probe, value) != line.rhs) return false;
        if (line.lhs == line.rhs) return false;
    }
    return true;
}

PolyPoly polypoly_mul(const PolyPoly& f, const PolyPoly& g) {
    if (f.empty() || g.empty()) return {};
    const FiniteRing& r = f.front().ring();
    PolyPoly out(f.size() + g.size() - 1, Polynomial(r));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = poly_add(out[i + j], poly_mul(f[i], g[j]));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

Polynomial flatten_poly_poly(const PolyPoly& f, unsigned k) {
    if (f.empty()) throw UsageError("flatten_poly_poly: empty polynomial needs a ring");
    const FiniteRing& r = f.front().ring();
    for (const auto& fi : f)
        if (fi.degree() >= static_cast<int>(k))
            throw UsageError("flatten_poly_poly: packing exponent " + std::to_string(k) +
                             " does not exceed coefficient degree " + std::to_string(fi.degree()));
    std::vector<Index> out(k * f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t e = 0; e < f[i].coeffs().size(); ++e) out[k * i + e] = f[i].coeffs()[e];
    return Polynomial(r, std::move(out));
}

unsigned packing_exponent(const PolyPoly& f, const PolyPoly& g) {
    unsigned total = 0;
    for (const auto& x : f) total += static_cast<unsigned>(std::max(x.degree(), 0));
    for (const auto& x : g) total += static_cast<unsigned>(std::max(x.degree(), 0));
    return total + 1;
}

std::optional<Polynomial> poly_ring_witness(const FiniteRing& r, const PolyPoly& f, int witness_degree) {
    if (witness_degree < 0) throw UsageError("poly_ring_witness: degree must be >= 0");
    const std::uint64_t count = checked_count(r.size(), witness_degree + 1, std::uint64_t{1} << 24,
                                              "polynomial witness space");
    for (std::uint64_t k = 1; k < count; ++k) {
        Polynomial c(r, decode_poly(k, r.size(), witness_degree + 1));
        bool ok = true;
        for (const auto& fi : f) {
            const Polynomial prod = poly_mul(fi, c);
            for (Index x : prod.coeffs())
                if (!r.is_central(x)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return c;
    }
    return std::nullopt;
}

}  // namespace fring
