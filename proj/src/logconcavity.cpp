#include "tnn/logconcavity.hpp"

#include <stdexcept>

namespace tnn {

Sequence logconcave_step(const Sequence& s) {
    Sequence b(s.size());
    auto at = [&](long k) -> Rational {
        if (k < 0 || k >= static_cast<long>(s.size())) return Rational(0);
        return s[k];
    };
    for (long k = 0; k < static_cast<long>(s.size()); ++k)
        b[k] = at(k) * at(k) - at(k - 1) * at(k + 1);
    return b;
}

LogConcavityReport is_infinitely_logconcave_upto(const Sequence& s, int iterations) {
    if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
    LogConcavityReport report;
    report.iterates.push_back(s);
    Sequence current = s;
    for (int it = 0; it <= iterations; ++it) {
        for (size_t k = 0; k < current.size(); ++k) {
            if (current[k] < 0) {
                report.holds = false;
                report.failing_iteration = it;
                report.failing_index = static_cast<int>(k);
                return report;
            }
        }
        if (it == iterations) break;
        current = logconcave_step(current);
        report.iterates.push_back(current);
    }
    return report;
}

Sequence coeffs_from_roots(const std::vector<Rational>& roots) {
    for (const auto& r : roots)
        if (r <= 0) throw std::invalid_argument("roots must be positive rationals");
    Sequence coeffs{Rational(1)}; // the empty product
    for (const auto& r : roots) {
        Sequence next(coeffs.size() + 1, Rational(0));
        for (size_t k = 0; k < coeffs.size(); ++k) {
            next[k] += coeffs[k] * r;  // multiply by r
            next[k + 1] += coeffs[k];  // multiply by x
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

PolyMatrix toeplitz_matrix(const Sequence& s, int n) {
    if (n < 1) throw DimensionError("toeplitz size must be positive");
    PolyMatrix W(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int k = j - i;
            if (k >= 0 && k < static_cast<int>(s.size()))
                W.at(i, j) = Polynomial::constant(s[k]);
        }
    return W;
}

PlanarNetwork sequence_network(const std::vector<Polynomial>& column_weights, int n) {
    if (n < 1) throw DimensionError("network order must be positive");
    const int m = static_cast<int>(column_weights.size());

    PlanarNetwork::Builder builder;
    builder.order = n;
    auto grid_id = [](int c, int level) {
        return "v" + std::to_string(c) + "_" + std::to_string(level);
    };

    // Sources at x = 0, grid column c at x = 3c with a per-level jitter so
    // interior x's are all distinct, sinks at x = 3m + 3.
    for (int level = 1; level <= n; ++level) {
        builder.vertices.push_back({"s" + std::to_string(level), Rational(0), Rational(n - level)});
        builder.sources.emplace_back(level, "s" + std::to_string(level));
    }
    for (int c = 1; c <= m; ++c)
        for (int level = 1; level <= n; ++level)
            builder.vertices.push_back(
                {grid_id(c, level), Rational(3 * c) + Rational(level - 1, n + 1),
                 Rational(n - level)});
    for (int level = 1; level <= n; ++level) {
        builder.vertices.push_back(
            {"t" + std::to_string(level), Rational(3 * m + 3), Rational(n - level)});
        builder.sinks.emplace_back(level, "t" + std::to_string(level));
    }

    const Polynomial one(1);
    auto left_id = [&](int c, int level) {
        return c == 1 ? "s" + std::to_string(level) : grid_id(c - 1, level);
    };
    for (int c = 1; c <= m; ++c) {
        for (int level = 1; level <= n; ++level)
            builder.edges.push_back({left_id(c, level), grid_id(c, level), one});
        for (int level = 1; level < n; ++level)
            builder.edges.push_back({left_id(c, level), grid_id(c, level + 1), column_weights[c - 1]});
    }
    for (int level = 1; level <= n; ++level)
        builder.edges.push_back({m == 0 ? "s" + std::to_string(level) : grid_id(m, level),
                                 "t" + std::to_string(level), one});

    PlanarNetwork net;
    if (auto err = builder.build(net)) throw std::logic_error("sequence network: " + *err);
    return net;
}

PlanarNetwork sequence_network(const std::vector<Rational>& roots, int n) {
    std::vector<Polynomial> weights;
    for (const auto& r : roots) {
        if (r <= 0) throw std::invalid_argument("roots must be positive rationals");
        weights.push_back(Polynomial::constant(r));
    }
    return sequence_network(weights, n);
}

PlanarNetwork sequence_network_symbolic(int columns, int n) {
    if (columns < 0) throw std::invalid_argument("column count must be >= 0");
    std::vector<Polynomial> weights;
    for (int c = 1; c <= columns; ++c) weights.push_back(Polynomial::symbol("x" + std::to_string(c)));
    return sequence_network(weights, n);
}

ConjectureReport conjecture_check(const PlanarNetwork& net,
                                  const std::vector<std::pair<OffsetSet, OffsetSet>>& steps,
                                  int max_minor_order) {
    ConjectureReport report;
    PolyMatrix T = net.weight_matrix();
    for (size_t s = 0; s < steps.size(); ++s) {
        try {
            T = minor_matrix(T, steps[s].first, steps[s].second);
        } catch (const DimensionError& e) {
            report.ok = false;
            report.failing_step = static_cast<int>(s);
            report.error = e.what();
            return report;
        }
    }
    report.sweep = all_minors_subtraction_free(T, max_minor_order);
    report.ok = report.sweep.ok;
    return report;
}

} // namespace tnn
