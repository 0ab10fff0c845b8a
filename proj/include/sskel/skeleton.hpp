#pragma once

// The parameter space Delta = Delta_m x [0,1]^{l-m} of monomial
// semivaluations: tuples (r_0..r_l) in [0,1]^{l+1} with r_0...r_m = |pi|.
// Points are stored without r_0 (it is pi / (r_1...r_m)), matching the
// exponent convention.

#include <sskel/model.hpp>

#include <string>
#include <vector>

namespace sskel {

struct SkeletonPoint {
    std::vector<Value> r;  // r_1..r_l

    const Value& coord(unsigned i) const { return r.at(i - 1); }  // 1-based, like t_i
};

class Skeleton {
public:
    explicit Skeleton(ModelAlgebra model) : model_(std::move(model)) { model_.validate(); }

    const ModelAlgebra& model() const { return model_; }

    // Validates membership in Delta; returns the derived r_0 on success.
    Value check_point(const SkeletonPoint& p) const {
        if (p.r.size() != model_.l)
            throw std::invalid_argument("skeleton point: expected " + std::to_string(model_.l) + " coordinates");
        Value head_product = Value::one();
        for (unsigned i = 0; i < model_.l; ++i) {
            const Value& ri = p.r[i];
            if (cmp(ri, Value::one()) == Order::greater)
                throw std::invalid_argument("skeleton point: coordinate r_" + std::to_string(i + 1) + " exceeds 1");
            if (i < model_.m) {
                if (ri.is_zero())
                    throw std::invalid_argument("skeleton point: simplex coordinate r_" + std::to_string(i + 1) +
                                                " must be positive (r_0...r_m = |pi| != 0)");
                head_product = head_product * ri;
            }
        }
        if (cmp(head_product, model_.pi) == Order::less)
            throw std::invalid_argument("skeleton point: r_1...r_m < |pi| puts r_0 outside the unit ball");
        return model_.pi / head_product;
    }

    // The m+1 vertices rho_j = (v_j, 1..1): vertex 0 has all stored
    // coordinates 1 (so r_0 = pi); vertex j >= 1 has r_j = pi.
    std::vector<SkeletonPoint> vertices() const {
        std::vector<SkeletonPoint> out;
        for (unsigned j = 0; j <= model_.m; ++j) {
            SkeletonPoint p;
            p.r.assign(model_.l, Value::one());
            if (j >= 1) p.r[j - 1] = model_.pi;
            out.push_back(std::move(p));
        }
        return out;
    }

    // Deterministic interior sample points with coordinates of the form
    // pi^{j/depth} (simplex block constrained to exponent sum <= 1) and
    // tail coordinates from a fixed ladder including 0 and 1. Refutation
    // grids only; no completeness claim.
    std::vector<SkeletonPoint> sample_points(unsigned depth = 4, std::size_t max_points = 4096) const {
        std::vector<std::vector<Rational>> head_choices;  // exponent tuples for r_1..r_m
        std::vector<Rational> head_levels;
        for (unsigned j = 0; j <= depth; ++j) head_levels.emplace_back(Rational(j, depth));

        std::vector<Rational> current;
        build_heads(head_levels, current, head_choices);

        std::vector<Value> tail_levels{Value::one()};
        if (!model_.pi.is_one()) {
            tail_levels.push_back(pow(model_.pi, Rational(1, 2)));
            tail_levels.push_back(model_.pi);
        } else {
            tail_levels.push_back(Value::from_fraction(1, 2));
        }
        tail_levels.push_back(Value::zero());

        std::vector<SkeletonPoint> out;
        std::vector<std::size_t> tail_idx(model_.l - model_.m, 0);
        for (const auto& head : head_choices) {
            // Sweep the tail ladder odometer-style.
            std::fill(tail_idx.begin(), tail_idx.end(), 0);
            while (true) {
                SkeletonPoint p;
                p.r.reserve(model_.l);
                for (unsigned i = 0; i < model_.m; ++i) p.r.push_back(pow(model_.pi, head[i]));
                for (std::size_t i = 0; i < tail_idx.size(); ++i) p.r.push_back(tail_levels[tail_idx[i]]);
                out.push_back(std::move(p));
                if (out.size() >= max_points) return out;
                std::size_t k = 0;
                for (; k < tail_idx.size(); ++k) {
                    if (++tail_idx[k] < tail_levels.size()) break;
                    tail_idx[k] = 0;
                }
                if (k == tail_idx.size()) break;
            }
        }
        return out;
    }

private:
    void build_heads(const std::vector<Rational>& levels, std::vector<Rational>& current,
                     std::vector<std::vector<Rational>>& out) const {
        if (current.size() == model_.m) {
            Rational sum = 0;
            for (const auto& e : current) sum += e;
            if (sum <= 1) out.push_back(current);
            return;
        }
        for (const auto& e : levels) {
            current.push_back(e);
            build_heads(levels, current, out);
            current.pop_back();
        }
    }

    ModelAlgebra model_;
};

}  // namespace sskel
