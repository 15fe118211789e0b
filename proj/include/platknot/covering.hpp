#pragma once

#include <string>
#include <vector>

#include "platknot/braid.hpp"

namespace platknot {

/// The five kinds of cyclic branched covering, strongest first. Each class
/// implies all weaker ones for valid coefficient data.
enum class CoveringClass {
    StrictlyCyclic,        // all coefficients equal
    AlmostStrictlyCyclic,  // all coefficients equal up to sign mod p
    MeridianCyclic,        // every coefficient coprime to p
    SinglyCyclic,          // some coefficient coprime to p
    MonodromyCyclic,       // any cyclic covering
};

std::string to_string(CoveringClass cls);

/// Monodromy data of a p-fold cyclic branched covering: the degree p and
/// one coefficient per link component, held canonically in {1,...,p-1}.
/// The coefficients must generate Z_p, otherwise the covering space would
/// be disconnected; construction enforces this.
class CoveringSpec {
public:
    /// Reduces coefficients mod p and validates. Throws DomainError when
    /// p < 2, when a coefficient is divisible by p, or when the reduced
    /// coefficients together with p have a common factor.
    CoveringSpec(int degree, std::vector<int> coefficients);

    int degree() const { return degree_; }
    const std::vector<int>& coefficients() const { return coefficients_; }
    int component_count() const { return static_cast<int>(coefficients_.size()); }

    /// Coefficient of component j, 1-based.
    int coefficient(int j) const;

    bool operator==(const CoveringSpec&) const = default;

private:
    int degree_;
    std::vector<int> coefficients_;
};

/// The strongest class the spec satisfies.
CoveringClass classify(const CoveringSpec& spec);

/// Whether the spec satisfies one particular class's defining condition.
bool satisfies(const CoveringSpec& spec, CoveringClass cls);

/// All satisfied classes, strongest first.
std::vector<CoveringClass> classes_satisfied(const CoveringSpec& spec);

/// Multiply every coefficient by the same unit of Z_p; yields equivalent
/// monodromy data. Throws unless gcd(u, p) = 1.
CoveringSpec unit_multiply(const CoveringSpec& spec, int unit);

struct ReorientResult {
    CoveringSpec spec;
    std::vector<int> flipped_components;  // 1-based, ascending
};

/// Replace c_j by p - c_j on the fewest components (never component 1) so
/// that all coefficients agree. Requires a strictly- or almost-strictly-
/// cyclic spec; flipping a component corresponds to reorienting it.
ReorientResult reorient_to_strict(const CoveringSpec& spec);

/// The cycle (1 2 ... p) raised to the power c, on {1,...,p}.
Permutation cycle_power(int p, int c);

/// Monodromy image of a meridian of component j.
Permutation monodromy_permutation(const CoveringSpec& spec, int j);

/// Number of connected components of the preimage of a branch circle with
/// coefficient c: the orbit count of cycle_power(p, c). Counted explicitly
/// and cross-checked against gcd(p, c).
int preimage_component_count(int p, int c);
int preimage_component_count(const CoveringSpec& spec, int j);

/// Genus of the symmetric splitting carried by an n-bridge presentation:
/// (n-1)(p-1). Requires a strictly-cyclic spec, or an almost-strictly-
/// cyclic one (which reorients to strict without changing the value).
int heegaard_genus_bound(int bridge_count, const CoveringSpec& spec);

/// Inverse direction: the bridge count b with g = (b-1)(p-1), defined when
/// p-1 divides g.
int bridge_from_genus(int genus, int p);

/// Whether an exponent is congruent to +1 or -1 mod p, the only values a
/// period-p symmetry can conjugate by.
bool symmetry_exponent_ok(int p0, int p);

}  // namespace platknot
