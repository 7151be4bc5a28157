#include "fring/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace fring {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap,
                            const std::string& what) {
    std::uint64_t out = 1;
    for (std::size_t k = 0; k < exponent; ++k) {
        if (out > cap / std::max<std::uint64_t>(base, 1))
            throw CapacityError(what + " exceeds the size cap of " + std::to_string(cap) +
                                " elements");
        out *= base;
    }
    if (out > cap)
        throw CapacityError(what + " exceeds the size cap of " + std::to_string(cap) + " elements");
    return out;
}

const char* family_letter(MatrixFamily f) {
    switch (f) {
        case MatrixFamily::Full: return "M";
        case MatrixFamily::UpperTriangular: return "T";
        case MatrixFamily::Diagonal: return "S";
        case MatrixFamily::ConstantDiagonal: return "D";
        case MatrixFamily::ConstantDiagonals: return "V";
    }
    return "?";
}

// slot_of[i*n+j] is the free slot feeding entry (i,j), or -1 for a forced zero.
std::vector<int> slot_layout(MatrixFamily family, unsigned n) {
    std::vector<int> slot(std::size_t{n} * n, -1);
    int next = 0;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            int& s = slot[i * n + j];
            switch (family) {
                case MatrixFamily::Full: s = next++; break;
                case MatrixFamily::UpperTriangular:
                    if (j >= i) s = next++;
                    break;
                case MatrixFamily::Diagonal:
                    if (i == j) s = next++;
                    break;
                case MatrixFamily::ConstantDiagonal:
                    if (i == j) s = (i == 0) ? next++ : slot[0];
                    else if (j > i) s = next++;
                    break;
                case MatrixFamily::ConstantDiagonals:
                    if (j >= i) s = (i == 0) ? next++ : slot[j - i];
                    break;
            }
        }
    }
    return slot;
}

std::string matrix_slot_name(MatrixFamily family, unsigned n, const std::vector<int>& layout,
                             int slot) {
    if (family == MatrixFamily::ConstantDiagonals) return slot == 0 ? "I" : "N^" + std::to_string(slot);
    if (family == MatrixFamily::ConstantDiagonal && slot == 0) return "I";
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (layout[i * n + j] == slot) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
    return "?";
}

class MatrixModel final : public RingModel {
public:
    MatrixModel(MatrixFamily family, unsigned n, FiniteRing base, Index size)
        : family_(family), n_(n), base_(std::move(base)), size_(size),
          layout_(slot_layout(family, n)),
          slots_(static_cast<unsigned>(free_entries(family, n))) {
        first_cell_.assign(slots_, 0);
        for (std::size_t cell = layout_.size(); cell-- > 0;)
            if (layout_[cell] >= 0) first_cell_[layout_[cell]] = cell;
        std::vector<Index> id(std::size_t{n} * n, 0);
        for (unsigned i = 0; i < n; ++i) id[i * n + i] = base_.one();
        one_ = encode(id);
    }

    Index size() const override { return size_; }
    Index one() const override { return one_; }

    Index add(Index a, Index b) const override {
        const Index q = base_.size();
        Index out = 0, scale = 1;
        for (unsigned s = 0; s < slots_; ++s) {
            out += base_.add(a % q, b % q) * scale;
            a /= q;
            b /= q;
            scale *= q;
        }
        return out;
    }

    Index neg(Index a) const override {
        const Index q = base_.size();
        Index out = 0, scale = 1;
        for (unsigned s = 0; s < slots_; ++s) {
            out += base_.neg(a % q) * scale;
            a /= q;
            scale *= q;
        }
        return out;
    }

    Index mul(Index a, Index b) const override {
        const auto x = decode(a), y = decode(b);
        std::vector<Index> z(x.size(), 0);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) {
                Index acc = 0;
                for (unsigned k = 0; k < n_; ++k)
                    acc = base_.add(acc, base_.mul(x[i * n_ + k], y[k * n_ + j]));
                z[i * n_ + j] = acc;
            }
        return encode(z);
    }

    std::string format(Index a) const override {
        const auto e = decode(a);
        std::string out = "[";
        for (unsigned i = 0; i < n_; ++i) {
            out += i ? ", [" : "[";
            for (unsigned j = 0; j < n_; ++j) {
                if (j) out += ", ";
                out += base_.format(e[i * n_ + j]);
            }
            out += "]";
        }
        return out + "]";
    }

    std::vector<Index> decode(Index a) const {
        const Index q = base_.size();
        std::vector<Index> slot_values(slots_);
        for (unsigned s = 0; s < slots_; ++s) {
            slot_values[s] = a % q;
            a /= q;
        }
        std::vector<Index> e(layout_.size(), 0);
        for (std::size_t c = 0; c < layout_.size(); ++c)
            if (layout_[c] >= 0) e[c] = slot_values[layout_[c]];
        return e;
    }

    Index encode(const std::vector<Index>& e) const {
        const Index q = base_.size();
        Index out = 0;
        for (unsigned s = slots_; s-- > 0;) out = out * q + e[first_cell_[s]];
        return out;
    }

    bool in_family(const std::vector<Index>& e) const {
        for (std::size_t c = 0; c < layout_.size(); ++c) {
            const int s = layout_[c];
            if (s < 0 ? e[c] != 0 : e[c] != e[first_cell_[s]]) return false;
        }
        return true;
    }

private:
    MatrixFamily family_;
    unsigned n_;
    FiniteRing base_;
    Index size_;
    std::vector<int> layout_;
    unsigned slots_;
    std::vector<std::size_t> first_cell_;
    Index one_ = 0;
};

class ProductModel final : public RingModel {
public:
    ProductModel(std::vector<FiniteRing> parts, Index size) : parts_(std::move(parts)), size_(size) {
        std::vector<Index> ones;
        for (const auto& r : parts_) ones.push_back(r.one());
        one_ = encode(ones);
    }

    Index size() const override { return size_; }
    Index one() const override { return one_; }
    Index add(Index a, Index b) const override {
        return zip(a, b, [](const FiniteRing& r, Index x, Index y) { return r.add(x, y); });
    }
    Index mul(Index a, Index b) const override {
        return zip(a, b, [](const FiniteRing& r, Index x, Index y) { return r.mul(x, y); });
    }
    Index neg(Index a) const override {
        return zip(a, 0, [](const FiniteRing& r, Index x, Index) { return r.neg(x); });
    }
    std::string format(Index a) const override {
        std::string out = "(";
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) out += ", ";
            out += parts_[k].format(a % parts_[k].size());
            a /= parts_[k].size();
        }
        return out + ")";
    }

    Index encode(const std::vector<Index>& comps) const {
        Index out = 0;
        for (std::size_t k = parts_.size(); k-- > 0;) out = out * parts_[k].size() + comps[k];
        return out;
    }

private:
    template <class Op>
    Index zip(Index a, Index b, Op op) const {
        Index out = 0, scale = 1;
        for (const auto& r : parts_) {
            const Index q = r.size();
            out += op(r, a % q, b % q) * scale;
            a /= q;
            b /= q;
            scale *= q;
        }
        return out;
    }

    std::vector<FiniteRing> parts_;
    Index size_;
    Index one_ = 0;
};

class TruncatedPolyModel final : public RingModel {
public:
    TruncatedPolyModel(FiniteRing base, unsigned n, Index size)
        : base_(std::move(base)), n_(n), size_(size) {}

    Index size() const override { return size_; }
    Index one() const override { return base_.one(); }
    Index add(Index a, Index b) const override {
        const auto x = decode(a), y = decode(b);
        std::vector<Index> z(n_);
        for (unsigned k = 0; k < n_; ++k) z[k] = base_.add(x[k], y[k]);
        return encode(z);
    }
    Index neg(Index a) const override {
        auto x = decode(a);
        for (auto& c : x) c = base_.neg(c);
        return encode(x);
    }
    Index mul(Index a, Index b) const override {
        const auto x = decode(a), y = decode(b);
        std::vector<Index> z(n_, 0);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; i + j < n_; ++j) z[i + j] = base_.add(z[i + j], base_.mul(x[i], y[j]));
        return encode(z);
    }
    std::string format(Index a) const override {
        const auto x = decode(a);
        std::string out;
        for (unsigned k = 0; k < n_; ++k) {
            if (x[k] == 0) continue;
            if (!out.empty()) out += " + ";
            const std::string c = base_.format(x[k]);
            if (k == 0) out += c;
            else out += "(" + c + ")" + (k == 1 ? "x" : "x^" + std::to_string(k));
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<Index> decode(Index a) const {
        std::vector<Index> x(n_);
        for (auto& c : x) {
            c = a % base_.size();
            a /= base_.size();
        }
        return x;
    }
    Index encode(const std::vector<Index>& x) const {
        Index out = 0;
        for (unsigned k = n_; k-- > 0;) out = out * base_.size() + x[k];
        return out;
    }

    FiniteRing base_;
    unsigned n_;
    Index size_;
};

// A subset of a parent ring closed under the operations, re-indexed in
// parent order. Used for corners eR.
class SubsetModel final : public RingModel {
public:
    SubsetModel(FiniteRing parent, std::vector<Index> members, Index one)
        : parent_(std::move(parent)), members_(std::move(members)),
          to_local_(parent_.size(), kAbsent) {
        for (Index k = 0; k < members_.size(); ++k) to_local_[members_[k]] = k;
        one_ = to_local_[one];
    }
    Index size() const override { return static_cast<Index>(members_.size()); }
    Index one() const override { return one_; }
    Index add(Index a, Index b) const override { return local(parent_.add(members_[a], members_[b])); }
    Index neg(Index a) const override { return local(parent_.neg(members_[a])); }
    Index mul(Index a, Index b) const override { return local(parent_.mul(members_[a], members_[b])); }
    std::string format(Index a) const override { return parent_.format(members_[a]); }

private:
    static constexpr Index kAbsent = ~Index{0};
    Index local(Index p) const {
        const Index k = to_local_[p];
        if (k == kAbsent) throw UsageError("subset is not closed under the ring operations");
        return k;
    }
    FiniteRing parent_;
    std::vector<Index> members_;
    std::vector<Index> to_local_;
    Index one_ = 0;
};

class CosetModel final : public RingModel {
public:
    CosetModel(FiniteRing parent, std::vector<Index> projection, std::vector<Index> reps)
        : parent_(std::move(parent)), projection_(std::move(projection)), reps_(std::move(reps)) {}
    Index size() const override { return static_cast<Index>(reps_.size()); }
    Index one() const override { return projection_[parent_.one()]; }
    Index add(Index a, Index b) const override { return projection_[parent_.add(reps_[a], reps_[b])]; }
    Index neg(Index a) const override { return projection_[parent_.neg(reps_[a])]; }
    Index mul(Index a, Index b) const override { return projection_[parent_.mul(reps_[a], reps_[b])]; }
    std::string format(Index a) const override { return parent_.format(reps_[a]) + " + I"; }

private:
    FiniteRing parent_;
    std::vector<Index> projection_;
    std::vector<Index> reps_;
};

std::optional<BasisInfo> repeat_basis(const std::optional<BasisInfo>& base,
                                      const std::vector<std::string>& slot_names) {
    if (!base) return std::nullopt;
    BasisInfo out{base->characteristic, {}};
    const bool scalar = base->dimension() == 1 && base->names[0] == "1";
    for (const auto& slot : slot_names)
        for (const auto& b : base->names) out.names.push_back(scalar ? slot : slot + "*" + b);
    return out;
}

}  // namespace

std::size_t free_entries(MatrixFamily family, unsigned n) {
    switch (family) {
        case MatrixFamily::Full: return std::size_t{n} * n;
        case MatrixFamily::UpperTriangular: return std::size_t{n} * (n + 1) / 2;
        case MatrixFamily::Diagonal: return n;
        case MatrixFamily::ConstantDiagonal: return 1 + std::size_t{n} * (n - 1) / 2;
        case MatrixFamily::ConstantDiagonals: return n;
    }
    return 0;
}

FiniteRing matrix_ring(const MatrixShape& shape, const ConstructionOptions& opts) {
    if (shape.n == 0) throw UsageError("matrix dimension must be at least 1");
    const std::string label = std::string(family_letter(shape.family)) + "(" +
                              std::to_string(shape.n) + ", " + shape.base.label() + ")";
    const std::size_t slots = free_entries(shape.family, shape.n);
    const auto size = checked_power(shape.base.size(), slots, opts.size_cap, label);
    const auto layout = slot_layout(shape.family, shape.n);
    std::vector<std::string> names;
    for (std::size_t s = 0; s < slots; ++s)
        names.push_back(matrix_slot_name(shape.family, shape.n, layout, static_cast<int>(s)));
    return FiniteRing(std::make_shared<MatrixModel>(shape.family, shape.n, shape.base,
                                                    static_cast<Index>(size)),
                      label, repeat_basis(shape.base.basis(), names));
}

Index matrix_index(const MatrixShape& shape, std::span<const Index> entries) {
    const Index q = shape.base.size();
    MatrixModel model(shape.family, shape.n, shape.base, 0);
    std::vector<Index> e(entries.begin(), entries.end());
    if (e.size() != std::size_t{shape.n} * shape.n)
        throw UsageError("matrix_index: expected n*n entries");
    for (auto v : e)
        if (v >= q) throw UsageError("matrix_index: entry out of range");
    if (!model.in_family(e)) throw UsageError("matrix_index: matrix is not in the family");
    return model.encode(e);
}

std::vector<Index> matrix_entries(const MatrixShape& shape, Index a) {
    MatrixModel model(shape.family, shape.n, shape.base, 0);
    return model.decode(a);
}

Index unit_matrix(const MatrixShape& shape, unsigned i, unsigned j, Index r) {
    if (i < 1 || j < 1 || i > shape.n || j > shape.n) throw UsageError("unit_matrix: bad position");
    std::vector<Index> e(std::size_t{shape.n} * shape.n, 0);
    e[(i - 1) * shape.n + (j - 1)] = r;
    return matrix_index(shape, e);
}

FiniteRing product(std::span<const FiniteRing> rings, const ConstructionOptions& opts) {
    if (rings.empty()) throw UsageError("product of an empty sequence");
    std::string label = "prod(";
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < rings.size(); ++k) {
        label += (k ? ", " : "") + rings[k].label();
    }
    label += ")";
    for (const auto& r : rings) {
        if (size > opts.size_cap / r.size())
            throw CapacityError(label + " exceeds the size cap of " + std::to_string(opts.size_cap) +
                                " elements");
        size *= r.size();
    }

    std::optional<BasisInfo> basis;
    const bool all_algebras = std::all_of(rings.begin(), rings.end(), [&](const FiniteRing& r) {
        return r.basis() && r.basis()->characteristic == rings[0].basis()->characteristic;
    });
    if (all_algebras) {
        basis = BasisInfo{rings[0].basis()->characteristic, {}};
        for (std::size_t k = 0; k < rings.size(); ++k)
            for (const auto& name : rings[k].basis()->names)
                basis->names.push_back("c" + std::to_string(k) + ":" + name);
    }
    return FiniteRing(std::make_shared<ProductModel>(std::vector<FiniteRing>(rings.begin(), rings.end()),
                                                     static_cast<Index>(size)),
                      label, basis);
}

FiniteRing quotient_poly(const FiniteRing& base, unsigned n, const ConstructionOptions& opts) {
    if (n == 0) throw UsageError("quotpoly: n must be at least 1");
    const std::string label = "quotpoly(" + base.label() + ", " + std::to_string(n) + ")";
    const auto size = checked_power(base.size(), n, opts.size_cap, label);
    std::vector<std::string> names;
    for (unsigned k = 0; k < n; ++k) names.push_back(k == 0 ? "1" : "x^" + std::to_string(k));
    std::optional<BasisInfo> basis;
    if (base.basis()) basis = repeat_basis(base.basis(), names);
    return FiniteRing(std::make_shared<TruncatedPolyModel>(base, n, static_cast<Index>(size)), label,
                      basis);
}

Corner corner(const FiniteRing& r, Index e) {
    if (e >= r.size()) throw UsageError("corner: element out of range");
    if (r.mul(e, e) != e) throw UsageError("corner: " + r.format(e) + " is not idempotent");
    if (!r.is_central(e)) throw UsageError("corner: " + r.format(e) + " is not central");
    std::vector<Index> members;
    std::vector<std::uint8_t> seen(r.size(), 0);
    for (Index a = 0; a < r.size(); ++a) seen[r.mul(e, a)] = 1;
    for (Index a = 0; a < r.size(); ++a)
        if (seen[a]) members.push_back(a);
    auto model = std::make_shared<SubsetModel>(r, members, e);
    FiniteRing ring(model, "corner(" + r.label() + ", " + r.format(e) + ")");
    return Corner{std::move(ring), std::move(members)};
}

IdealData make_ideal(const FiniteRing& parent, std::vector<Index> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.front() != 0) throw UsageError("ideal must contain zero");
    std::vector<std::uint8_t> in(parent.size(), 0);
    for (auto m : members) {
        if (m >= parent.size()) throw UsageError("ideal member out of range");
        in[m] = 1;
    }
    for (auto a : members) {
        for (auto b : members)
            if (!in[parent.add(a, b)])
                throw UsageError("subset is not an ideal: not closed under addition at " +
                                 parent.format(a) + " + " + parent.format(b));
        for (Index r = 0; r < parent.size(); ++r)
            if (!in[parent.mul(r, a)] || !in[parent.mul(a, r)])
                throw UsageError("subset is not an ideal: " + parent.format(a) +
                                 " does not absorb " + parent.format(r));
    }
    return IdealData{parent, std::move(members)};
}

Quotient quotient_by_ideal(const FiniteRing& r, const IdealData& ideal) {
    if (!(ideal.parent == r)) throw UsageError("ideal belongs to a different ring");
    const IdealData checked = make_ideal(r, ideal.members);
    constexpr Index kUnset = ~Index{0};
    std::vector<Index> projection(r.size(), kUnset);
    std::vector<Index> reps;
    for (Index a = 0; a < r.size(); ++a) {
        if (projection[a] != kUnset) continue;
        const Index id = static_cast<Index>(reps.size());
        reps.push_back(a);
        for (auto m : checked.members) projection[r.add(a, m)] = id;
    }
    auto model = std::make_shared<CosetModel>(r, projection, reps);
    FiniteRing ring(model, r.label() + "/I");
    return Quotient{std::move(ring), std::move(projection), std::move(reps)};
}

NonunitalRing::NonunitalRing(IdealData ideal)
    : ideal_(std::move(ideal)), to_local_(ideal_.parent.size(), ~Index{0}) {
    for (Index k = 0; k < ideal_.members.size(); ++k) to_local_[ideal_.members[k]] = k;
    const Index n = size();
    central_.assign(n, 1);
    for (Index c = 0; c < n; ++c)
        for (Index a = 0; a < n && central_[c]; ++a)
            if (mul(a, c) != mul(c, a)) central_[c] = 0;
}

Index NonunitalRing::local(Index p) const { return to_local_[p]; }
Index NonunitalRing::add(Index a, Index b) const {
    return local(ideal_.parent.add(ideal_.members[a], ideal_.members[b]));
}
Index NonunitalRing::neg(Index a) const { return local(ideal_.parent.neg(ideal_.members[a])); }
Index NonunitalRing::mul(Index a, Index b) const {
    return local(ideal_.parent.mul(ideal_.members[a], ideal_.members[b]));
}
std::string NonunitalRing::format(Index a) const { return ideal_.parent.format(ideal_.members[a]); }
std::string NonunitalRing::label() const { return "ideal(" + ideal_.parent.label() + ")"; }

NonunitalRing ideal_as_nonunital(const IdealData& ideal) {
    return NonunitalRing(make_ideal(ideal.parent, ideal.members));
}

bool is_embedding(const FiniteRing& a, const FiniteRing& b, std::span<const Index> map) {
    if (map.size() != a.size()) return false;
    std::vector<std::uint8_t> hit(b.size(), 0);
    for (auto v : map) {
        if (v >= b.size() || hit[v]) return false;
        hit[v] = 1;
    }
    if (map[a.one()] != b.one()) return false;
    for (Index x = 0; x < a.size(); ++x)
        for (Index y = 0; y < a.size(); ++y) {
            if (map[a.add(x, y)] != b.add(map[x], map[y])) return false;
            if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
        }
    return true;
}

bool iso_check(const FiniteRing& a, const FiniteRing& b, std::span<const Index> map) {
    return a.size() == b.size() && is_embedding(a, b, map);
}

std::optional<std::vector<Index>> find_isomorphism(const FiniteRing& a, const FiniteRing& b,
                                                   Index max_size) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.size() > max_size)
        throw CapacityError("isomorphism search limited to " + std::to_string(max_size) + " elements");
    const Index n = a.size();
    constexpr Index kUnset = ~Index{0};
    std::vector<Index> map(n, kUnset);
    std::vector<std::uint8_t> used(n, 0);
    auto assign = [&](Index x, Index y) {
        map[x] = y;
        used[y] = 1;
    };
    if (n == 1) return std::vector<Index>{0};
    assign(0, 0);
    if (a.one() != 0) {
        if (b.one() == 0) return std::nullopt;
        assign(a.one(), b.one());
    }

    // Consistency of every fully-mapped add/mul pair.
    auto consistent = [&](Index x) {
        for (Index y = 0; y < n; ++y) {
            if (map[y] == kUnset) continue;
            for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
                const Index s = a.add(u, v), p = a.mul(u, v);
                const Index bs = b.add(map[u], map[v]), bp = b.mul(map[u], map[v]);
                if (map[s] != kUnset ? map[s] != bs : used[bs] != 0) return false;
                if (map[p] != kUnset ? map[p] != bp : used[bp] != 0) return false;
            }
        }
        return true;
    };

    std::function<bool(Index)> extend = [&](Index x) -> bool {
        while (x < n && map[x] != kUnset) ++x;
        if (x == n) return iso_check(a, b, map);
        for (Index y = 0; y < n; ++y) {
            if (used[y]) continue;
            assign(x, y);
            if (consistent(x) && extend(x + 1)) return true;
            map[x] = kUnset;
            used[y] = 0;
        }
        return false;
    };
    if (extend(0)) return map;
    return std::nullopt;
}

std::vector<Index> central_regular_elements(const FiniteRing& r) {
    std::vector<Index> out;
    for (Index c : r.center())
        if (r.is_regular(c)) out.push_back(c);
    return out;
}

Localization localize(const LocalizationSpec& spec) {
    const FiniteRing& r = spec.parent;
    std::vector<Index> s = spec.denominators;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<std::uint8_t> in(r.size(), 0);
    for (auto x : s) {
        if (x >= r.size()) throw UsageError("localize: denominator out of range");
        in[x] = 1;
    }
    if (!in[r.one()]) throw UsageError("localize: S must contain 1");
    for (auto x : s) {
        if (!r.is_central(x)) throw UsageError("localize: " + r.format(x) + " is not central");
        if (!r.is_regular(x)) throw UsageError("localize: " + r.format(x) + " is a zero divisor");
    }
    for (auto x : s)
        for (auto y : s)
            if (!in[r.mul(x, y)])
                throw UsageError("localize: S is not multiplicatively closed at " + r.format(x) +
                                 " * " + r.format(y));
    Localization out{r, {}, {}};
    out.canonical_map.resize(r.size());
    std::iota(out.canonical_map.begin(), out.canonical_map.end(), Index{0});
    for (auto x : s) {
        const auto inv = r.inverse(x);
        // Regular elements of a finite ring are units.
        if (!inv) throw UsageError("localize: regular element " + r.format(x) + " has no inverse");
        out.inverses.emplace_back(x, *inv);
    }
    return out;
}

}  // namespace fring
