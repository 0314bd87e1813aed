#pragma once

#include <string>
#include <variant>

#include "polyprime/monomial.hpp"

namespace polyprime {

/// The zero polynomial, kept distinct from every Binomial.
struct Zero {
    friend constexpr bool operator==(Zero, Zero) { return true; }
};

/// Pure-difference binomial plus - minus with plus != minus.
class Binomial {
public:
    Binomial(Monomial plus, Monomial minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
        if (plus_.size() != minus_.size()) throw VariableSetMismatch(plus_.size(), minus_.size());
        if (plus_ == minus_) throw Error("binomial with equal terms is zero");
    }

    const Monomial& plus() const { return plus_; }
    const Monomial& minus() const { return minus_; }
    std::size_t size() const { return plus_.size(); }
    unsigned degree() const { return std::max(plus_.degree(), minus_.degree()); }
    bool is_homogeneous() const { return plus_.degree() == minus_.degree(); }

    Binomial negated() const { return Binomial(minus_, plus_); }

    /// Leading term first under `order`.
    Binomial oriented(const MonomialOrder& order) const {
        return order.greater(plus_, minus_) ? *this : negated();
    }
    const Monomial& leading(const MonomialOrder& order) const {
        return order.greater(plus_, minus_) ? plus_ : minus_;
    }

    /// Sign fixed independent of any order: the positive term is the one
    /// with the larger exponent vector read from variable 0 upwards.
    Binomial canonical() const { return minus_ < plus_ ? *this : negated(); }

    /// Equal up to sign.
    bool same_up_to_sign(const Binomial& o) const {
        return (plus_ == o.plus_ && minus_ == o.minus_) || (plus_ == o.minus_ && minus_ == o.plus_);
    }

    friend bool operator==(const Binomial&, const Binomial&) = default;
    friend bool operator<(const Binomial& a, const Binomial& b) {
        if (!(a.plus_ == b.plus_)) return a.plus_ < b.plus_;
        return a.minus_ < b.minus_;
    }

private:
    Monomial plus_;
    Monomial minus_;
};

using BinomialOrZero = std::variant<Zero, Binomial>;

inline bool is_zero(const BinomialOrZero& r) { return std::holds_alternative<Zero>(r); }

/// Difference u - w, or Zero when the terms coincide.
inline BinomialOrZero difference(Monomial u, Monomial w) {
    if (u == w) return Zero{};
    return Binomial(std::move(u), std::move(w));
}

/// Canonical text form `x(i,j)*x(k,l) - x(i,l)*x(k,j)`.
inline std::string to_string(const Binomial& b, const VariableSet& vars) {
    return to_string(b.plus(), vars) + " - " + to_string(b.minus(), vars);
}

inline std::string to_string(const BinomialOrZero& r, const VariableSet& vars) {
    if (is_zero(r)) return "0";
    return to_string(std::get<Binomial>(r), vars);
}

} // namespace polyprime
