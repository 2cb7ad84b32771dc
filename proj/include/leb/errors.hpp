#pragma once

#include <stdexcept>
#include <string>

namespace leb {

// All library failures carry a stable machine-readable code so the CLI can
// report them without string matching.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline Error division_by_zero() { return Error("DivisionByZero", "division by zero in Q(sqrt(d))"); }
inline Error mismatched_d(long d1, long d2) {
    return Error("MismatchedD", "operands live in different quadratic fields: d=" +
                                    std::to_string(d1) + " vs d=" + std::to_string(d2));
}
inline Error factorization_limit(const std::string& what) {
    return Error("FactorizationLimitExceeded", "cannot extract square-free part: " + what);
}
inline Error point_outside_d(const std::string& what) {
    return Error("PointOutsideD", "point violates the domain D invariants: " + what);
}
inline Error degenerate_triangle() { return Error("DegenerateTriangle", "side lengths do not form a nondegenerate triangle"); }
inline Error safety_cap_exceeded(std::size_t cap) {
    return Error("SafetyCapExceeded", "orbit enumeration exceeded the safety cap of " + std::to_string(cap));
}
inline Error inconsistent_terminal_set(const std::string& what) {
    return Error("InconsistentTerminalSet", what);
}
inline Error not_in_terminal_region() { return Error("NotInTerminalRegion", "point is not in the terminal region A"); }
inline Error outside_v_tilde() { return Error("OutsideVTilde", "h is only defined on the region V-tilde"); }
inline Error points_not_eps_close() { return Error("PointsNotEpsClose", "hyperbolic distance of the pair is not below eps"); }
inline Error unresolved_non_generic(const std::string& what) {
    return Error("UnresolvedNonGenericPattern", what);
}
inline Error unmatched_shape_key(const std::string& what) {
    return Error("UnmatchedShapeKey", "simulated triangle has no matching orbit class: " + what);
}
inline Error iteration_limit() { return Error("IterationLimit", "power iteration failed to converge within the cap"); }
inline Error convergence_failure() { return Error("ConvergenceFailure", "dense eigenvalue solver did not converge"); }
inline Error input_error(const std::string& what) { return Error("InputError", what); }

}  // namespace leb
