#ifndef TANGLEDEC_WEIGHTS_HPP
#define TANGLEDEC_WEIGHTS_HPP

#include <vector>

#include "tangledec/ratlp.hpp"
#include "tangledec/sepsys.hpp"

namespace tangledec {

/// Non-negative integer weight per vertex, indexed like the ground system's
/// vertex bits. Evaluated on vertex sets by summation.
struct WeightFunction {
    std::vector<Int> values;

    Int eval(VertexSet s) const {
        Int sum = 0;
        for (VertexSet bits = s; bits != 0; bits &= bits - 1) {
            sum += values[static_cast<std::size_t>(std::countr_zero(bits))];
        }
        return sum;
    }

    bool operator==(const WeightFunction&) const = default;
};

// Checks the weight function is total on V and non-negative.
inline void validate_weights(const GroundSystem& g, const WeightFunction& w) {
    if (w.values.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw MalformedInput("weight function must assign a value to every vertex");
    }
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (w.values[i] < 0) {
            throw MalformedInput("negative weight for vertex \"" +
                                 g.vertex_name(static_cast<int>(i)) + "\"");
        }
    }
}

} // namespace tangledec

#endif // TANGLEDEC_WEIGHTS_HPP
