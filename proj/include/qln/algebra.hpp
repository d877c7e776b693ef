// Quadratic linear Nakayama algebras and their interval-module calculus.
//
// An algebra is the bound quiver algebra of 1 -> 2 -> ... -> n with a set of
// vanishing length-two paths, recorded by the vertices where they end mid-way
// (relv).  Every indecomposable module is a uniserial interval M[a,b] with
// composition factors S(a),...,S(b); all Hom spaces are 0- or 1-dimensional,
// so the whole calculus is exact integer combinatorics.

#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qln {

// ---------------------------------------------------------------------------
// Errors.  Each carries a stable name so the CLI can surface it verbatim.

class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct NonPositiveSize : DomainError {
    explicit NonPositiveSize(const std::string& w) : DomainError("NonPositiveSize", w) {}
};
struct RelationOutOfRange : DomainError {
    explicit RelationOutOfRange(const std::string& w) : DomainError("RelationOutOfRange", w) {}
};
struct VertexOutOfRange : DomainError {
    explicit VertexOutOfRange(const std::string& w) : DomainError("VertexOutOfRange", w) {}
};
struct SizeLimitExceeded : DomainError {
    explicit SizeLimitExceeded(const std::string& w) : DomainError("SizeLimitExceeded", w) {}
};
struct NotQuasiHereditary : DomainError {
    explicit NotQuasiHereditary(const std::string& w) : DomainError("NotQuasiHereditary", w) {}
};
struct ExtractionFailed : DomainError {
    explicit ExtractionFailed(const std::string& w) : DomainError("ExtractionFailed", w) {}
};
struct NotAPartialOrder : DomainError {
    explicit NotAPartialOrder(const std::string& w) : DomainError("NotAPartialOrder", w) {}
};
struct NotATree : DomainError {
    explicit NotATree(const std::string& w) : DomainError("NotATree", w) {}
};
struct NotTilting : DomainError {
    explicit NotTilting(const std::string& w) : DomainError("NotTilting", w) {}
};
struct ApexOutOfRange : DomainError {
    explicit ApexOutOfRange(const std::string& w) : DomainError("ApexOutOfRange", w) {}
};
struct InadmissibleSequence : DomainError {
    explicit InadmissibleSequence(const std::string& w) : DomainError("InadmissibleSequence", w) {}
};
struct ClassificationFailed : DomainError {
    explicit ClassificationFailed(const std::string& w) : DomainError("ClassificationFailed", w) {}
};
struct ParseError : DomainError {
    explicit ParseError(const std::string& w) : DomainError("ParseError", w) {}
};
// Raised when an internal cross-check that theory guarantees fails.
struct InternalCheckFailed : DomainError {
    explicit InternalCheckFailed(const std::string& w) : DomainError("InternalCheckFailed", w) {}
};

// ---------------------------------------------------------------------------

// The interval module M[top, socle]; top <= socle, both 1-based vertices.
struct Interval {
    int top = 0;
    int socle = 0;

    friend auto operator<=>(const Interval&, const Interval&) = default;

    int length() const { return socle - top + 1; }
    bool contains(int v) const { return top <= v && v <= socle; }
};

// A basic module: intervals sorted by (top, socle), no duplicates.
using Module = std::vector<Interval>;

class Algebra {
public:
    Algebra() = default;

    int vertices() const { return n_; }
    const std::vector<int>& relations() const { return relv_; }
    bool is_relation(int l) const { return l >= 1 && l <= n_ && rel_mask_[static_cast<size_t>(l)]; }

    // M[a,b] exists iff no relation lies strictly between a and b.
    bool valid(Interval m) const;

    // Socle of P(i): the first relation after i, or n.
    int projective_socle(int i) const;
    // Top of I(i): just after the last relation before i, or 1.
    int injective_top(int i) const;

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    friend Algebra make_algebra(int n, std::vector<int> relv);
    int n_ = 0;
    std::vector<int> relv_;       // sorted ascending, each in [2, n-1]
    std::vector<char> rel_mask_;  // size n_+1
};

Algebra make_algebra(int n, std::vector<int> relv);

enum class StructuralKind { projective, injective, simple };

Interval structural_module(const Algebra& a, StructuralKind kind, int i);
Interval projective(const Algebra& a, int i);
Interval injective(const Algebra& a, int i);
Interval simple(int i);

// All valid intervals, sorted by (top, socle).
Module indecomposables(const Algebra& a);

// dim Hom(M[a,b], M[c,d]) = 1 iff c <= a <= d <= b, else 0.  The nonzero map
// is the canonical quotient-then-include with image M[a,d].
int hom_dim(Interval m, Interval n);

// For nonzero canonical maps M1 -> M2 -> M3, the composite is nonzero iff
// M1.top <= M3.socle.
bool composite_nonzero(Interval m1, Interval m2, Interval m3);

// Idempotent truncation of an interval to a vertex window.
std::optional<Interval> restrict_to_range(Interval m, int s, int t);

// Sorts and removes duplicate summands.
Module canonicalize(Module m);
bool module_contains(const Module& m, Interval x);
// m with one copy of x removed (x must be present).
Module module_erase(Module m, Interval x);
Module module_insert(Module m, Interval x);

std::string to_string(Interval m);

}  // namespace qln
