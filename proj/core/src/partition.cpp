#include "qgrass/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace qgrass {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::C: return "C";
        case Family::D: return "D";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw ValidationError("unknown family '" + std::string(s) + "' (expected A, C or D)");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ValidationError("partition parts must be positive (zeros are trailing only)");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw ValidationError("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    if (text.empty() || text == "-") return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ValidationError("cannot parse partition part '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
    if (i < 1) throw ValidationError("partition part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::fits_box(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

bool Partition::is_strict() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] <= parts_[i]) return false;
    return true;
}

bool Partition::in_dn(int n) const {
    return is_strict() && (parts_.empty() || parts_[0] <= n);
}

StrictPartition::StrictPartition(Partition p) : p_(std::move(p)) {
    if (!p_.is_strict())
        throw ValidationError("partition " + p_.str() + " is not strict");
}

StripInfo strip_components(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner))
        throw ValidationError("strip_components: " + inner.str() + " is not contained in " + outer.str());

    // Boxes of outer/inner in row i (1-based): columns inner_i+1 .. outer_i.
    // Horizontal strip <=> at most one box per column <=> outer_{i+1} <= inner_i.
    StripInfo info{true, 0, 0};
    const int rows = outer.length();
    for (int i = 1; i < rows; ++i)
        if (outer.part(i + 1) > inner.part(i)) info.horizontal_strip = false;

    // Components of the skew diagram; boxes are connected when they share an
    // edge or a vertex.  Row i's interval [inner_i+1, outer_i] touches row
    // i+1's interval iff the column ranges overlap when widened by one.
    struct Interval { int row, lo, hi; };
    std::vector<Interval> ivs;
    for (int i = 1; i <= rows; ++i)
        if (outer.part(i) > inner.part(i)) ivs.push_back({i, inner.part(i) + 1, outer.part(i)});

    std::vector<int> comp(ivs.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto root = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (size_t a = 0; a < ivs.size(); ++a)
        for (size_t b = a + 1; b < ivs.size(); ++b) {
            if (ivs[b].row - ivs[a].row > 1) continue;
            const bool touch = ivs[a].lo <= ivs[b].hi + 1 && ivs[b].lo <= ivs[a].hi + 1;
            if ((ivs[b].row == ivs[a].row + 1 || ivs[b].row == ivs[a].row) && touch)
                comp[root(a)] = root(b);
        }
    std::vector<int> roots;
    for (size_t a = 0; a < ivs.size(); ++a) roots.push_back(root(a));
    std::vector<bool> meets_first(ivs.size(), false);
    for (size_t a = 0; a < ivs.size(); ++a)
        if (ivs[a].lo == 1) meets_first[root(a)] = true;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    info.components = static_cast<int>(roots.size());
    for (int r : roots)
        if (!meets_first[r]) ++info.components_off_first_column;
    return info;
}

Partition multiset_difference(const Partition& lam, const Partition& mu) {
    std::vector<int> rest = lam.parts();
    for (int m : mu.parts()) {
        auto it = std::find(rest.begin(), rest.end(), m);
        if (it == rest.end())
            throw ValidationError("multiset_difference: part " + std::to_string(m) + " of " + mu.str() +
                                  " does not occur often enough in " + lam.str());
        rest.erase(it);
    }
    return Partition(std::move(rest));
}

Partition poincare_dual_box(const Partition& lam, int k, int n) {
    const int r = n - k;
    if (k < 0 || r < 0 || !lam.fits_box(k, r))
        throw ValidationError("poincare_dual: " + lam.str() + " does not fit the " + std::to_string(k) + " x " +
                              std::to_string(r) + " box");
    std::vector<int> dual;
    for (int i = 1; i <= k; ++i) dual.push_back(r - lam.part(k + 1 - i));
    return Partition(std::move(dual));
}

Partition poincare_dual_strict(const Partition& lam, int n) {
    if (!lam.in_dn(n))
        throw ValidationError("poincare_dual: " + lam.str() + " is not in D_" + std::to_string(n));
    std::vector<bool> used(n + 1, false);
    for (int p : lam.parts()) used[p] = true;
    std::vector<int> dual;
    for (int v = n; v >= 1; --v)
        if (!used[v]) dual.push_back(v);
    return Partition(std::move(dual));
}

Partition poincare_dual(Family family, const Partition& lam, int k, int n) {
    return family == Family::A ? poincare_dual_box(lam, k, n) : poincare_dual_strict(lam, n);
}

namespace {

void gen_box(int row, int rows, int cols, std::vector<int>& acc, std::vector<Partition>& out) {
    out.push_back(Partition(acc));
    if (row > rows) return;
    const int cap = row == 1 ? cols : acc[row - 2];
    for (int v = 1; v <= cap; ++v) {
        acc.push_back(v);
        gen_box(row + 1, rows, cols, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> acc;
    if (rows >= 0 && cols >= 0) gen_box(1, rows, cols, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_in_box_of_weight(int rows, int cols, long long weight) {
    std::vector<Partition> out;
    for (auto& p : partitions_in_box(rows, cols))
        if (p.weight() == weight) out.push_back(p);
    return out;
}

std::vector<StrictPartition> strict_partitions(int n) {
    // Strict partitions with parts <= n are the subsets of {1,...,n}.
    std::vector<StrictPartition> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> parts;
        for (int v = n; v >= 1; --v)
            if (mask & (1u << (v - 1))) parts.push_back(v);
        out.push_back(StrictPartition(Partition(std::move(parts))));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StrictPartition> strict_partitions_of_weight(int n, long long weight) {
    std::vector<StrictPartition> out;
    for (auto& p : strict_partitions(n))
        if (p.weight() == weight) out.push_back(p);
    return out;
}

namespace {

void gen_weight(long long left, int max_part, int max_parts, std::vector<int>& acc, std::vector<Partition>& out) {
    if (left == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (max_parts == 0) return;
    for (int v = std::min<long long>(max_part, left); v >= 1; --v) {
        acc.push_back(v);
        gen_weight(left - v, v, max_parts - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of_weight(long long weight, int max_part, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> acc;
    if (weight >= 0) gen_weight(weight, max_part, max_parts, acc, out);
    return out;
}

} // namespace qgrass
