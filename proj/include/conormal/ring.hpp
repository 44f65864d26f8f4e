#pragma once

#include "conormal/monomial.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace conormal {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Polynomial ring k[x_1..x_n] with a monomial order and positive grading weights.
class PolyRing {
public:
    static RingPtr create(std::vector<std::string> names, Field field, MonomialOrder order,
                          std::vector<int> weights = {}) {
        return std::make_shared<const PolyRing>(Token{}, std::move(names), field, std::move(order), std::move(weights));
    }

    struct Token {};
    PolyRing(Token, std::vector<std::string> names, Field field, MonomialOrder order, std::vector<int> weights)
        : names_(std::move(names)), field_(field), order_(std::move(order)), weights_(std::move(weights)) {
        if (names_.size() > static_cast<std::size_t>(kMaxVars))
            throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
        std::set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) throw Error("empty variable name");
            if (!seen.insert(n).second) throw Error("duplicate variable name: " + n);
        }
        if (weights_.empty()) weights_.assign(names_.size(), 1);
        if (weights_.size() != names_.size()) throw Error("grading weight vector has wrong length");
        for (int w : weights_)
            if (w <= 0) throw Error("grading weights must be positive");
        if (field_.modulus != 0) Field::prime(field_.modulus);
        order_.bind(nvars(), weights_);
    }

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    Field field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<int>& weights() const { return weights_; }

    int index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
    }

    Monomial monomial(std::span<const int> exps) const {
        if (static_cast<int>(exps.size()) != nvars()) throw Error("exponent vector length does not match ring arity");
        return Monomial(exps, weights_);
    }
    Monomial one() const { return Monomial(); }
    Monomial var(int i) const { return Monomial::variable(i, weights_[i]); }

    int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

    bool same_as(const PolyRing& o) const {
        return this == &o || (names_ == o.names_ && field_ == o.field_ && order_ == o.order_ && weights_ == o.weights_);
    }

    std::string describe() const {
        std::string s = field_.name() + "[";
        for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + names_[i];
        return s + "] " + order_.name();
    }

private:
    std::vector<std::string> names_;
    Field field_;
    MonomialOrder order_;
    std::vector<int> weights_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && a->same_as(*b)); }

/// ring_create: variables, field and order; weights default to 1.
inline RingPtr ring_create(std::vector<std::string> vars, Field field, MonomialOrder order,
                           std::vector<int> weights = {}) {
    return PolyRing::create(std::move(vars), field, std::move(order), std::move(weights));
}

}  // namespace conormal
