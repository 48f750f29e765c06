#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qgrass/partition.hpp"

namespace qgrass {

// Permutation of {1,...,n} in one-line (window) notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);
    static Permutation longest(int n);
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& window() const { return w_; }
    std::string str() const;

    long long length() const;  // inversion count
    Permutation inverse() const;
    // (this o other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const;
    // Same permutation viewed in S_m, m >= size().
    Permutation extended(int m) const;

    // Descents contained in {a,b}: w(i) < w(i+1) for all i not in {a,b}.
    bool descents_within(int a, int b) const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

// w_lambda (d = 0) or w_{lambda,d}: the Grassmannian permutation of
// lambda in the k x (n-k) box, with the window positions k-d+1,...,k+d
// sorted increasingly when d > 0.
Permutation grassmannian_permutation(const Partition& lam, int k, int n, int d);

// 012-string J(w) of a permutation with descents only in {a,b}: position
// w(p) holds '0' for p <= a, '1' for a < p <= b, '2' for p > b.
std::string label_string(const Permutation& w, int a, int b);

// Inverse of label_string: the unique permutation with the given string.
Permutation permutation_of_string(const std::string& s, int a, int b);

// J^d(lambda) built directly from the lattice path along the border of
// lambda in the k x (n-k) rectangle.
std::string jd_string(const Partition& lam, int k, int n, int d);

// Element of the type C Weyl group: a signed permutation.  Entry -v stands
// for the barred value v.
class SignedElement {
public:
    SignedElement() = default;
    explicit SignedElement(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    std::string str() const;  // barred values are printed with a trailing '-'

    // Length in the hyperoctahedral group: inversions of the signed window
    // plus the sum of the barred absolute values.
    long long length_c() const;

    auto operator<=>(const SignedElement&) const = default;

private:
    std::vector<int> entries_;
};

struct TypeCElement {
    SignedElement element;
    long long codim;  // |lambda| - d(d+1)/2
};

// w_{lambda,d} for lambda in D_n: bars on all parts of lambda followed by
// the unbarred complement in increasing order; for d > 0 the first d
// entries lose their bars and are sorted increasingly.  Defined only for
// d <= length(lambda).
TypeCElement type_c_element(const StrictPartition& lam, int n, int d);

} // namespace qgrass
