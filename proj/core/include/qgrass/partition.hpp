#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qgrass/errors.hpp"

namespace qgrass {

enum class Family { A, C, D };

std::string family_name(Family f);
Family parse_family(std::string_view s);

// Integer partition with weakly decreasing positive parts.  Zero parts are
// stripped on construction, so (2,0) and (2) are the same value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Text form "4,4,3,1"; the empty partition is "-".
    static Partition parse(std::string_view text);
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    bool empty() const { return parts_.empty(); }

    // 1-based part access; parts beyond the length are 0.
    int part(int i) const;

    bool contains(const Partition& inner) const;
    bool fits_box(int rows, int cols) const;
    bool is_strict() const;
    // Member of D_n: strict with largest part <= n.
    bool in_dn(int n) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Strict partition (lambda_1 > lambda_2 > ... > 0).  The bound n of D_n is
// contextual and checked where a family operation needs it.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(Partition p);
    explicit StrictPartition(std::initializer_list<int> parts) : StrictPartition(Partition(parts)) {}

    static StrictPartition parse(std::string_view text) { return StrictPartition(Partition::parse(text)); }

    const Partition& partition() const { return p_; }
    operator const Partition&() const { return p_; }
    const std::vector<int>& parts() const { return p_.parts(); }
    int length() const { return p_.length(); }
    long long weight() const { return p_.weight(); }
    int part(int i) const { return p_.part(i); }
    std::string str() const { return p_.str(); }

    auto operator<=>(const StrictPartition&) const = default;

private:
    Partition p_;
};

struct StripInfo {
    bool horizontal_strip;              // at most one box per column
    int components;                     // connected components (edge or vertex)
    int components_off_first_column;    // components not meeting column 1
};

// Analyze the skew shape outer/inner.  Throws if inner is not contained in
// outer.  The empty skew shape reports (true, 0, 0); N' = components - 1 is
// never consumed on an empty shape by the Pieri rules.
StripInfo strip_components(const Partition& inner, const Partition& outer);

// Partition whose parts are the parts of lam minus the parts of mu, with
// multiset semantics (each part of mu cancels one equal part of lam).
Partition multiset_difference(const Partition& lam, const Partition& mu);

// Poincare dual index.  Family A: complement in the k x (n-k) box, reversed.
// Families C/D: set complement of the parts within {1,...,n}.
Partition poincare_dual(Family family, const Partition& lam, int k, int n);
Partition poincare_dual_box(const Partition& lam, int k, int n);
Partition poincare_dual_strict(const Partition& lam, int n);

// All partitions contained in a rows x cols box, optionally of fixed weight.
std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> partitions_in_box_of_weight(int rows, int cols, long long weight);

// All strict partitions in D_n, optionally of fixed weight.
std::vector<StrictPartition> strict_partitions(int n);
std::vector<StrictPartition> strict_partitions_of_weight(int n, long long weight);

// All partitions of the given weight with at most max_parts parts, each at
// most max_part (unrestricted shape helpers for the oracles).
std::vector<Partition> partitions_of_weight(long long weight, int max_part, int max_parts);

} // namespace qgrass
