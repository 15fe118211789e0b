#include "platknot/covering.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace platknot {

std::string to_string(CoveringClass cls) {
    switch (cls) {
        case CoveringClass::StrictlyCyclic:
            return "strictly-cyclic";
        case CoveringClass::AlmostStrictlyCyclic:
            return "almost-strictly-cyclic";
        case CoveringClass::MeridianCyclic:
            return "meridian-cyclic";
        case CoveringClass::SinglyCyclic:
            return "singly-cyclic";
        case CoveringClass::MonodromyCyclic:
            return "monodromy-cyclic";
    }
    throw InternalError("unknown covering class");
}

namespace {

int mod_reduce(int value, int p) {
    const int r = value % p;
    return r < 0 ? r + p : r;
}

}  // namespace

CoveringSpec::CoveringSpec(int degree, std::vector<int> coefficients)
    : degree_(degree), coefficients_(std::move(coefficients)) {
    if (degree_ < 2) {
        throw DomainError("covering degree must be at least 2, got " + std::to_string(degree_));
    }
    if (coefficients_.empty()) {
        throw DomainError("covering needs at least one coefficient");
    }
    int g = degree_;
    for (int& c : coefficients_) {
        c = mod_reduce(c, degree_);
        if (c == 0) {
            throw DomainError("coefficient divisible by the degree " + std::to_string(degree_));
        }
        g = std::gcd(g, c);
    }
    if (g != 1) {
        throw DomainError("coefficients do not generate Z_" + std::to_string(degree_) +
                          " (common factor " + std::to_string(g) +
                          "); the covering space would be disconnected");
    }
}

int CoveringSpec::coefficient(int j) const {
    if (j < 1 || j > component_count()) {
        throw DomainError("component index " + std::to_string(j) + " out of range");
    }
    return coefficients_[static_cast<size_t>(j - 1)];
}

bool satisfies(const CoveringSpec& spec, CoveringClass cls) {
    const int p = spec.degree();
    const auto& cs = spec.coefficients();
    switch (cls) {
        case CoveringClass::StrictlyCyclic:
            return std::all_of(cs.begin(), cs.end(), [&](int c) { return c == cs.front(); });
        case CoveringClass::AlmostStrictlyCyclic:
            return std::all_of(cs.begin(), cs.end(), [&](int c) {
                return c == cs.front() || c == p - cs.front();
            });
        case CoveringClass::MeridianCyclic:
            return std::all_of(cs.begin(), cs.end(), [&](int c) { return std::gcd(p, c) == 1; });
        case CoveringClass::SinglyCyclic:
            return std::any_of(cs.begin(), cs.end(), [&](int c) { return std::gcd(p, c) == 1; });
        case CoveringClass::MonodromyCyclic:
            return true;
    }
    throw InternalError("unknown covering class");
}

CoveringClass classify(const CoveringSpec& spec) {
    for (CoveringClass cls : {CoveringClass::StrictlyCyclic, CoveringClass::AlmostStrictlyCyclic,
                              CoveringClass::MeridianCyclic, CoveringClass::SinglyCyclic}) {
        if (satisfies(spec, cls)) {
            return cls;
        }
    }
    return CoveringClass::MonodromyCyclic;
}

std::vector<CoveringClass> classes_satisfied(const CoveringSpec& spec) {
    std::vector<CoveringClass> out;
    for (CoveringClass cls : {CoveringClass::StrictlyCyclic, CoveringClass::AlmostStrictlyCyclic,
                              CoveringClass::MeridianCyclic, CoveringClass::SinglyCyclic,
                              CoveringClass::MonodromyCyclic}) {
        if (satisfies(spec, cls)) {
            out.push_back(cls);
        }
    }
    return out;
}

CoveringSpec unit_multiply(const CoveringSpec& spec, int unit) {
    const int p = spec.degree();
    const int u = ((unit % p) + p) % p;
    if (std::gcd(u, p) != 1) {
        throw DomainError("multiplier " + std::to_string(unit) + " is not a unit mod " +
                          std::to_string(p));
    }
    std::vector<int> cs = spec.coefficients();
    for (int& c : cs) {
        c = static_cast<int>((static_cast<long long>(c) * u) % p);
    }
    return CoveringSpec(p, std::move(cs));
}

ReorientResult reorient_to_strict(const CoveringSpec& spec) {
    const CoveringClass cls = classify(spec);
    if (cls != CoveringClass::StrictlyCyclic && cls != CoveringClass::AlmostStrictlyCyclic) {
        throw DomainError("reorientation to a strictly-cyclic covering requires an "
                          "almost-strictly-cyclic one; this covering is " +
                          to_string(cls));
    }
    const int p = spec.degree();
    std::vector<int> cs = spec.coefficients();
    std::vector<int> flipped;
    for (int j = 2; j <= spec.component_count(); ++j) {
        int& c = cs[static_cast<size_t>(j - 1)];
        if (c != cs.front()) {
            c = p - c;
            flipped.push_back(j);
        }
    }
    return ReorientResult{CoveringSpec(p, std::move(cs)), std::move(flipped)};
}

Permutation cycle_power(int p, int c) {
    if (p < 1) {
        throw DomainError("cycle length must be positive");
    }
    const int shift = ((c % p) + p) % p;
    std::vector<int> images(static_cast<size_t>(p));
    for (int k = 1; k <= p; ++k) {
        images[static_cast<size_t>(k - 1)] = (k - 1 + shift) % p + 1;
    }
    return Permutation(std::move(images));
}

Permutation monodromy_permutation(const CoveringSpec& spec, int j) {
    return cycle_power(spec.degree(), spec.coefficient(j));
}

int preimage_component_count(int p, int c) {
    const int orbits = cycle_power(p, c).cycle_count();
    const int expected = std::gcd(p, ((c % p) + p) % p);  // gcd(p, 0) = p
    if (orbits != expected) {
        throw InternalError("orbit count disagrees with gcd");
    }
    return orbits;
}

int preimage_component_count(const CoveringSpec& spec, int j) {
    return preimage_component_count(spec.degree(), spec.coefficient(j));
}

int heegaard_genus_bound(int bridge_count, const CoveringSpec& spec) {
    if (bridge_count < 1) {
        throw DomainError("bridge count must be at least 1");
    }
    const CoveringClass cls = classify(spec);
    if (cls != CoveringClass::StrictlyCyclic && cls != CoveringClass::AlmostStrictlyCyclic) {
        throw DomainError("genus bound requires a strictly-cyclic covering (possibly after "
                          "reorientation); this covering is " +
                          to_string(cls));
    }
    return (bridge_count - 1) * (spec.degree() - 1);
}

int bridge_from_genus(int genus, int p) {
    if (genus < 0) {
        throw DomainError("genus must be nonnegative");
    }
    if (p < 2) {
        throw DomainError("covering degree must be at least 2");
    }
    if (genus % (p - 1) != 0) {
        throw DomainError(std::to_string(p - 1) + " does not divide genus " +
                          std::to_string(genus));
    }
    return genus / (p - 1) + 1;
}

bool symmetry_exponent_ok(int p0, int p) {
    if (p < 2) {
        throw DomainError("period must be at least 2");
    }
    const int r = ((p0 % p) + p) % p;
    return r == 1 % p || r == (p - 1) % p;
}

}  // namespace platknot
