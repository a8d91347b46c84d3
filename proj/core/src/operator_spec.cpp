#include "pv/operator_spec.hpp"

#include <stdexcept>

namespace pv {

OperatorSpec OperatorSpec::from_name(const std::string& name) {
    if (name == "shift") return shift();
    if (name == "q_dilation") return q_dilation();
    throw std::invalid_argument("unknown operator spec: " + name);
}

Scalar OperatorSpec::sigma(const Scalar& f) const {
    if (kind_ == Kind::shift) return f.compose_linear(QRat(1), QRat(1));
    return f.compose_linear(qrat_q(), QRat(0));
}

Scalar OperatorSpec::sigma_inv(const Scalar& f) const {
    if (kind_ == Kind::shift) return f.compose_linear(QRat(1), QRat(-1));
    return f.compose_linear(QRat(1) / qrat_q(), QRat(0));
}

Scalar OperatorSpec::delta(const Scalar& f) const {
    if (kind_ == Kind::shift) return f.derivative();
    return scalar_x() * f.derivative();
}

}  // namespace pv
