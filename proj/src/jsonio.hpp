#pragma once

#include <map>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "dessin.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "sympoly.hpp"

namespace dmm {

using json = nlohmann::ordered_json;

json rat_json(const Rat& r);
json cplx_json(const Cplx& z);
json partition_json(const Partition& la);
json poly_json(const SymPolynomial& f);
json model_json(const DessinModel& m);
json matrix_json(const Eigen::MatrixXcd& M);

Eigen::MatrixXcd parse_matrix_json(const json& j);
// {"A": [[[re,im],...],...], "B": ...} with row-major square matrices
std::map<std::string, Eigen::MatrixXcd> parse_sources_json(const json& j);

}  // namespace dmm
