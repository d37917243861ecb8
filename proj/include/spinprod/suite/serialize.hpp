#pragma once

#include "spinprod/clifford/gamma.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace spinprod::suite {

using json = nlohmann::ordered_json;
using exact::GaussianRational;
using exact::Matrix;

/// Malformed external input (CLI arguments, scaling files).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// [re_num, re_den, im_num, im_den]; integers outside int64 are written as decimal strings.
json encode_scalar(const GaussianRational& z);
GaussianRational decode_scalar(const json& j);

/// Flat row-major list of encoded scalars.
json encode_matrix(const Matrix& m);
Matrix decode_matrix(const json& j, std::size_t rows, std::size_t cols);

/// {"dim": D, "size": 2^n, "gammas": [...]}.
json gamma_to_json(const clifford::GammaRep& rep);
std::string gamma_to_text(const clifford::GammaRep& rep);

/// One real, invertible D_i × D_i matrix per factor.
std::vector<Matrix> parse_scaling(const json& j, const std::vector<int>& dims);

}  // namespace spinprod::suite
