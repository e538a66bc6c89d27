#pragma once

#include <Eigen/Dense>

#include "absc/matrix.hpp"

namespace absc {

inline Eigen::MatrixXcd qimat_to_complex(const QIMat& m) {
    Eigen::MatrixXcd r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r(i, j) = std::complex<double>(rat_to_double(m.at(i, j).re),
                                           rat_to_double(m.at(i, j).im));
    return r;
}

}  // namespace absc
