#ifndef PV_PARSER_HPP
#define PV_PARSER_HPP

#include <stdexcept>
#include <string>

#include "pv/mpoly.hpp"
#include "pv/operator_spec.hpp"
#include "pv/scalar.hpp"

namespace pv {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

// Grammar: integers, x (and q in q_dilation mode), + - * / ^, parentheses,
// unary minus; whitespace insignificant. ^ takes an integer exponent.
Scalar parse_ratfunc(const OperatorSpec& spec, const std::string& text);

inline std::string format_ratfunc(const Scalar& f) { return format_scalar(f); }

// Polynomials in the jet variables Y0_11, Y1_12, ... (Yj_ab: order j,
// row a, column b, 1-based) with rational-function coefficients. Division
// and negative powers are only allowed for coefficient subexpressions.
MPoly parse_jetpoly(const OperatorSpec& spec, const VarSpace& vs, const std::string& text);

}  // namespace pv

#endif
