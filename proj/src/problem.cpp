#include "srbm/problem.hpp"

#include <sstream>

namespace srbm {

ProblemData::ProblemData(Vector theta, SquareMatrix gamma, SquareMatrix r)
    : theta_(std::move(theta)), gamma_(std::move(gamma)), r_(std::move(r)) {
    validate();
}

ProblemData::ProblemData(Vector theta, SquareMatrix r)
    : theta_(theta),
      gamma_(SquareMatrix::identity(theta.dim(), theta.mode())),
      r_(std::move(r)) {
    validate();
}

void ProblemData::validate() const {
    const int d = theta_.dim();
    if (d < 2) throw InputError("problem dimension must be 2 or 3");
    if (gamma_.dim() != d || r_.dim() != d) {
        throw InputError("theta, gamma and R must share one dimension");
    }
    if (gamma_.mode() != theta_.mode() || r_.mode() != theta_.mode()) {
        throw InputError("theta, gamma and R must share one arithmetic mode");
    }
    if (!is_symmetric_positive_definite(gamma_)) {
        throw InputError("gamma must be symmetric positive definite");
    }
    const auto cs = is_completely_s(r_);
    if (!cs.completely_s) {
        std::ostringstream os;
        os << "reflection matrix is not completely-S (principal set {";
        for (size_t k = 0; k < cs.failing_set->size(); ++k) {
            os << (k ? "," : "") << (*cs.failing_set)[k] + 1;
        }
        os << "} fails)";
        throw InputError(os.str());
    }
}

bool is_symmetric_positive_definite(const SquareMatrix& g) {
    const int d = g.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (!(g.at(i, j) - g.at(j, i)).is_zero()) return false;
        }
    }
    // Sylvester: leading principal minors strictly positive.
    std::vector<int> idx;
    for (int k = 0; k < d; ++k) {
        idx.push_back(k);
        if (determinant(principal_submatrix(g, idx)).sign() != Sign::positive) {
            return false;
        }
    }
    return true;
}

}  // namespace srbm
